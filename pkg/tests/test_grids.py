from __future__ import annotations

from fractions import Fraction

import pytest

from bernoulli_euler import DomainError, Grid, parse_grid
from bernoulli_euler.grids import DENSE, STANDARD


def test_standard_grid_points():
    assert [str(p) for p in STANDARD] == ["1/100", "1/10", "1/2", "1", "2", "5", "10", "20"]


def test_dense_grid_is_log_spaced():
    assert len(DENSE) == 64
    assert DENSE.points[0] == Fraction(1, 1000) and DENSE.points[-1] == 100


def test_parse_presets_ranges_and_lists():
    assert parse_grid("standard") is STANDARD
    assert parse_grid("1:5:2").points == (1, 3, 5)
    assert parse_grid("0.5:1.5:0.5").points == (Fraction(1, 2), 1, Fraction(3, 2))
    assert parse_grid("0.1, 2, 7/2").points == (Fraction(1, 10), 2, Fraction(7, 2))
    assert parse_grid("1:10:3").integers() == [1, 4, 7, 10]


@pytest.mark.parametrize("bad", ["", "a,b", "1:2", "5:1:1", "1:2:0", "0,1", "2,1", "1:1000000:1", "1/0"])
def test_parse_rejects_bad_specs(bad):
    with pytest.raises(DomainError):
        parse_grid(bad)


def test_grid_validation():
    with pytest.raises(DomainError):
        Grid(())
    with pytest.raises(DomainError):
        Grid((1, 1))
