"""Jump Markov process on the Young graph and stationarity diagnostics.

Rates come from ``measures.rates`` (exact), are checked against Kerov's
identity, and converted to floats once per visited state.  Each trajectory
draws from its own Philox stream keyed by ``(seed, index)``, so a run is
reproducible independently of how trajectories are scheduled.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable

import numpy as np
from scipy import stats

from .errors import ParameterError
from .measures import detailed_balance_defects, rates, zmeasure_table
from .partitions import EMPTY, Partition, add_box, remove_box
from .scalars import ParamPoint

DEFAULT_SIZE_CAP = 200
_BLOCK = 1024


@dataclass(frozen=True)
class Trajectory:
    states: tuple[tuple[float, Partition], ...]
    seed: int
    cap_hit: bool
    horizon: float

    def to_jsonl(self) -> str:
        return "".join(json.dumps({"t": t, "lambda": list(lam)}) + "\n" for t, lam in self.states)


class _Chain:
    """Memoized float jump tables ``lam -> (total rate, cumulative rates, targets)``."""

    def __init__(self, p: ParamPoint):
        if p.s is not None:
            if p.xi is None or not 0 < p.xi < 1:
                raise ParameterError("xi must lie in (0, 1)")
        elif p.theta is None or p.theta <= 0:
            raise ParameterError("need (z, z', xi) or theta > 0")
        self.p = p
        self.table: dict[Partition, tuple[float, list[float], list[Partition]]] = {}

    def __getitem__(self, lam: Partition):
        entry = self.table.get(lam)
        if entry is None:
            rt = rates(lam, self.p)
            if rt.balance() != 0:
                raise ArithmeticError(f"rates at {list(lam)} violate sum A + sum B = C")
            targets = [add_box(lam, b) for b in rt.up] + [remove_box(lam, b) for b in rt.down]
            weights = [float(a) for a in rt.up.values()] + [float(b) for b in rt.down.values()]
            entry = (float(rt.total), list(accumulate(weights)), targets)
            self.table[lam] = entry
        return entry


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def _run(start: Partition, t_end: float, chain: _Chain, rng, size_cap: int, visit) -> bool:
    """Advance from ``start`` at time 0 to ``t_end``; ``visit(lam, t0, t1)`` is
    called for every holding interval.  Returns True if the size cap was hit."""
    lam, t = start, 0.0
    exps = us = ()
    k = _BLOCK
    while True:
        if k == _BLOCK:
            exps, us, k = rng.standard_exponential(_BLOCK).tolist(), rng.random(_BLOCK).tolist(), 0
        total, cum, targets = chain[lam]
        t_next = t + exps[k] / total
        if t_next > t_end:
            visit(lam, t, t_end)
            return False
        visit(lam, t, t_next)
        nxt = targets[min(bisect_right(cum, us[k] * cum[-1]), len(targets) - 1)]
        k += 1
        t = t_next
        if nxt.size > size_cap:
            return True
        lam = nxt


def simulate(
    start,
    horizon: float,
    p: ParamPoint,
    seed: int,
    size_cap: int = DEFAULT_SIZE_CAP,
    index: int = 0,
    _chain: _Chain | None = None,
) -> Trajectory:
    start = Partition(start)
    if size_cap < start.size:
        raise ParameterError("size_cap is below |start|")
    if horizon < 0:
        raise ParameterError("horizon must be nonnegative")
    chain = _chain or _Chain(p)
    states: list[tuple[float, Partition]] = []

    def visit(lam, t0, t1):
        if not states or states[-1][1] is not lam:
            states.append((t0, lam))

    if horizon == 0:
        return Trajectory(((0.0, start),), seed, False, 0.0)
    hit = _run(start, float(horizon), chain, _rng(seed, index), size_cap, visit)
    return Trajectory(tuple(states), seed, hit, float(horizon))


def simulate_many(start, horizon: float, p: ParamPoint, seed: int, count: int, size_cap: int = DEFAULT_SIZE_CAP):
    chain = _Chain(p)
    for i in range(count):
        yield simulate(start, horizon, p, seed, size_cap, index=i, _chain=chain)


# ------------------------------------------------------------ diagnostics


@dataclass
class _Occupation:
    L: int
    burn_in: float
    mass: dict = field(default_factory=dict)
    size_mass: dict = field(default_factory=dict)
    total: float = 0.0

    def __call__(self, lam: Partition, t0: float, t1: float):
        if t1 <= self.burn_in:
            return
        dt = t1 - max(t0, self.burn_in)
        self.total += dt
        n = lam.size
        self.size_mass[n] = self.size_mass.get(n, 0.0) + dt
        key = lam if n <= self.L else None
        self.mass[key] = self.mass.get(key, 0.0) + dt


@dataclass(frozen=True)
class StationarityReport:
    tv: float | None
    size_tv: float | None
    trajectories: int
    occupied_time: float
    L: int
    cap_hits: int
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_json(self) -> dict:
        return {
            "tv": self.tv,
            "size_tv": self.size_tv,
            "trajectories": self.trajectories,
            "occupied_time": self.occupied_time,
            "L": self.L,
            "cap_hits": self.cap_hits,
            "error": self.error,
        }


def size_law(p: ParamPoint):
    """Law of ``|lam|``: negative binomial ``(zz', xi)`` or Poisson ``theta``."""
    if p.s is None:
        return stats.poisson(float(p.theta))
    return stats.nbinom(float(p.v), 1 - float(p.xi))


def _report(occ: _Occupation, p: ParamPoint, count: int, cap_hits: int) -> StationarityReport:
    if count == 0 or occ.total <= 0:
        return StationarityReport(None, None, count, occ.total, occ.L, cap_hits, "no occupation time after burn-in")
    target = zmeasure_table(p, occ.L).probabilities()
    tail = max(0.0, 1.0 - math.fsum(target.values()))
    tv = abs(occ.mass.get(None, 0.0) / occ.total - tail)
    tv += math.fsum(abs(occ.mass.get(lam, 0.0) / occ.total - q) for lam, q in target.items())
    law = size_law(p)
    top = max(max(occ.size_mass), occ.L)
    pmf = law.pmf(np.arange(top + 1))
    size_tv = math.fsum(abs(occ.size_mass.get(n, 0.0) / occ.total - pmf[n]) for n in range(top + 1))
    size_tv += law.sf(top)
    return StationarityReport(float(tv) / 2, float(size_tv) / 2, count, float(occ.total), occ.L, cap_hits)


def stationarity_report(trajectories: Iterable[Trajectory], p: ParamPoint, L: int, burn_in: float = 0.0) -> StationarityReport:
    """TV distance between the time-weighted occupation of ``Y_{<=L}`` (plus
    one tail bin) after ``burn_in`` and the normalized target measure, and
    the same for the size law."""
    occ = _Occupation(L, burn_in)
    count = hits = 0
    for traj in trajectories:
        count += 1
        hits += traj.cap_hit
        states = traj.states
        for (t0, lam), (t1, _) in zip(states, states[1:]):
            occ(lam, t0, t1)
        if states and not traj.cap_hit:
            occ(states[-1][1], states[-1][0], traj.horizon)
    return _report(occ, p, count, hits)


def stationarity_run(
    p: ParamPoint,
    count: int,
    horizon: float,
    burn_in: float,
    seed: int,
    L: int = 12,
    start=EMPTY,
    size_cap: int = DEFAULT_SIZE_CAP,
    precheck_cap: int = 6,
) -> StationarityReport:
    """Stream ``count`` trajectories of length ``burn_in + horizon`` into the
    occupation tally without storing them."""
    defects = detailed_balance_defects(p, precheck_cap)
    if defects:
        raise ArithmeticError(f"detailed balance fails: {defects[0]}")
    chain = _Chain(p)
    occ = _Occupation(L, float(burn_in))
    hits = 0
    for i in range(count):
        hits += _run(Partition(start), float(burn_in + horizon), chain, _rng(seed, i), size_cap, occ)
    return _report(occ, p, count, hits)
