import json
from fractions import Fraction

import pytest

from orthosym.dynamics import Trajectory, simulate, simulate_many, size_law, stationarity_report, stationarity_run
from orthosym.errors import ParameterError
from orthosym.partitions import EMPTY, Partition
from orthosym.scalars import ParamPoint

P = ParamPoint.split(2, 3, xi=Fraction(1, 2))


def test_zero_horizon():
    tr = simulate((2, 1), 0, P, seed=1)
    assert tr.states == ((0.0, Partition((2, 1))),)
    assert not tr.cap_hit


def test_deterministic_per_seed_and_index():
    a = simulate(EMPTY, 20, P, seed=7)
    b = simulate(EMPTY, 20, P, seed=7)
    c = simulate(EMPTY, 20, P, seed=8)
    assert a == b and a != c
    many = list(simulate_many(EMPTY, 20, P, seed=7, count=3))
    assert many[0] == a
    assert simulate(EMPTY, 20, P, seed=7, index=2) == many[2]


def test_moves_are_single_boxes_at_increasing_times():
    tr = simulate(EMPTY, 30, P, seed=3)
    times = [t for t, _ in tr.states]
    assert times == sorted(times) and len(set(times)) == len(times)
    assert all(t <= 30 for t in times)
    for (_, a), (_, b) in zip(tr.states, tr.states[1:]):
        assert abs(a.size - b.size) == 1
        small, big = (a, b) if a.size < b.size else (b, a)
        assert all(x <= y for x, y in zip(small, big)) and len(small) <= len(big)


def test_size_cap():
    tr = simulate(EMPTY, 1000, P, seed=0, size_cap=2)
    assert tr.cap_hit
    assert all(lam.size <= 2 for _, lam in tr.states)
    with pytest.raises(ParameterError):
        simulate((3,), 1, P, seed=0, size_cap=2)


def test_invalid_parameters():
    with pytest.raises(ParameterError):
        simulate(EMPTY, 1, ParamPoint.split(2, 3, xi=Fraction(3, 2)), seed=0)
    with pytest.raises(ParameterError):
        simulate(EMPTY, -1, P, seed=0)


def test_empty_report_is_an_error():
    rep = stationarity_report([], P, L=4)
    assert not rep.ok and rep.tv is None


def test_tv_of_point_mass_at_empty():
    # all time at the empty diagram: TV = 1 - M(empty) = 1 - (1 - xi)^{zz'}
    tr = Trajectory(((0.0, EMPTY),), 0, False, 1.0)
    rep = stationarity_report([tr], P, L=6)
    assert rep.ok
    assert rep.tv == pytest.approx(1 - 0.5 ** 6, abs=1e-12)
    assert rep.size_tv == pytest.approx(1 - size_law(P).pmf(0), abs=1e-12)


def test_size_law_is_normalized_negative_binomial():
    law = size_law(P)
    # E|lam| = v xi / (1 - xi) = 6
    assert law.mean() == pytest.approx(6)
    assert size_law(ParamPoint.charlier(3)).mean() == pytest.approx(3)


def test_short_run_is_close_to_target():
    rep = stationarity_run(P, count=300, horizon=30, burn_in=10, seed=11, L=8)
    assert rep.ok and rep.cap_hits == 0
    assert rep.tv < 0.08 and rep.size_tv < 0.08


def test_charlier_run():
    rep = stationarity_run(ParamPoint.charlier(2), count=300, horizon=30, burn_in=10, seed=5, L=8)
    assert rep.ok and rep.tv < 0.08


def test_jsonl():
    tr = simulate(EMPTY, 5, P, seed=2)
    lines = tr.to_jsonl().splitlines()
    assert len(lines) == len(tr.states)
    first = json.loads(lines[0])
    assert first == {"t": 0.0, "lambda": []}
