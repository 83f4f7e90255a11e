from __future__ import annotations

import pytest

from bernoulli_euler import DomainError, PrecisionError
from bernoulli_euler import expansions as ex
from bernoulli_euler.grids import parse_grid
from bernoulli_euler.verify import CONJECTURAL_NOTE, Config, reconstruction, run_suite


def test_recurrence_suite_clean():
    s = run_suite("recurrences", Config(n_max=80))
    assert s.ok and s.total > 300
    assert set(s.counts) >= {"bernoulli scheme gosper", "euler number two routes"}


def test_inequality_suite_on_small_grid():
    s = run_suite("inequalities", Config(grid=parse_grid("0.3,4"), order_max=3))
    assert s.ok, s.failures
    d = s.to_dict()
    assert d["passed"] == d["total"] == s.total


def test_conjecture_suite_carries_note():
    s = run_suite("conjecture", Config(grid=parse_grid("1"), order_max=2))
    assert CONJECTURAL_NOTE in s.notes


def test_failures_are_recorded_with_inputs(monkeypatch):
    def refuse(*args, **kwargs):
        raise PrecisionError("unreachable")

    monkeypatch.setattr(ex, "eta_remainder", refuse)
    s = run_suite("remainders", Config(grid=parse_grid("1"), order_max=1))
    assert not s.ok
    f = s.failures[0]
    assert set(f) == {"check", "inputs", "lhs", "relation", "rhs"}
    assert f["relation"] == "raised"


def test_reconstruction_helper():
    residual, allowance, res = reconstruction("binet", 2, 3, 1e-20)
    assert residual <= allowance and res.tail_bound <= 1e-20


def test_config_validation():
    with pytest.raises(DomainError):
        Config(precision_bits=10)
    with pytest.raises(DomainError):
        Config(tol=0)
    with pytest.raises(DomainError):
        run_suite("nope")
