import pytest

from nestkit.instances import get, slugs, verify_all


def test_every_instance_matches_its_frozen_verdicts():
    for slug, checks in verify_all().items():
        failed = [c for c in checks if not c.passed]
        assert not failed, f"{slug}: {failed}"


def test_registry_surface():
    assert "quad-dual-nests" in slugs()
    assert "rays-integer-steps" in slugs()
    instance = get("pair-dual-nests")
    assert "discrete" in instance.render()
    with pytest.raises(KeyError):
        get("missing-instance")


def test_rosters_are_frozen_literals():
    quad = get("quad-dual-nests")
    assert quad.expected["lower_topology"].count("{") == 8  # seven opens + outer brace
    assert quad.expected["upper_topology"].count("{") == 8
    assert quad.expected["joint_topology"] == "{{}, {x1,x2}, {x3,x4}, {x1,x2,x3,x4}}"


def test_renders_mention_key_facts():
    assert "√2" in get("rays-rational-carrier").render()
    assert "witness" not in get("rays-shift-group").render()
    assert "reverses" in get("rays-scale-group").render()
