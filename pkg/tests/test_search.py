import pytest

from portraitdyn import (Model, Portrait, PortraitError, RationalMap,
                         rational_cycles, search_periodic_model, verify_model)
from portraitdyn.projective import ProjectivePoint


def test_rational_cycles_of_squaring_map():
    f = RationalMap([1, 0, 0], [0, 0, 1])
    fixed = rational_cycles(f, 1)
    assert sorted(str(c[0]) for c in fixed) == ["0", "1", "inf"]
    assert rational_cycles(f, 2) == []   # the 2-cycle is irrational


def test_rational_cycles_two_cycle():
    f = RationalMap.polynomial([1, 0, -1])
    cycles = rational_cycles(f, 2)
    assert len(cycles) == 1
    assert set(map(str, cycles[0])) == {"0", "-1"}


def test_search_finds_three_fixed_points_and_two_cycle():
    portrait = Portrait("abcde",
                        {"a": "a", "b": "b", "c": "c", "d": "e", "e": "d"})
    model = search_periodic_model(portrait, 2, 5)
    assert isinstance(model, Model)
    assert max(abs(c) for c in model.map.f0 + model.map.f1) <= 5
    assert isinstance(verify_model(model.map, portrait, model.assignment), Model)


def test_search_gives_up_within_bound():
    # four fixed points are impossible in degree 2, so nothing is found
    portrait = Portrait("abcd", {v: v for v in "abcd"})
    assert search_periodic_model(portrait, 2, 1) is None


def test_search_requires_purely_periodic_portrait():
    with pytest.raises(PortraitError):
        search_periodic_model(Portrait(["a", "b"], {"a": "b"}), 2, 1)
