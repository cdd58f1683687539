"""Laguerre, Meixner and Charlier symmetric functions and their operators.

All three families are finite sums over subdiagrams ``mu`` of ``nu``:

    F_nu = sum_mu (-t)^{|nu|-|mu|} dim(nu/mu)/(|nu|-|mu|)! * w(nu/mu) * B_mu

with ``B = S`` for Laguerre (t = 1, w = (z)_{nu/mu}(z')_{nu/mu}), ``B = FS``
for Meixner (t = xi/(1-xi), same w) and Charlier (t = theta, w = 1).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterable, Mapping

from ._linalg import lagrange_at
from .errors import DomainError, DegenerateNormalization, ParameterError
from .fs import fs_convert, fs_value
from .partitions import (
    Partition,
    addable,
    add_box,
    contains,
    corners,
    dim,
    enumerate_partitions,
    partitions_up_to,
    remove_box,
    skew_dim,
    sort_key,
    transpose,
)
from .scalars import ParamPoint, format_rational, rational
from .sym import DEFAULT_DEGREE_CAP, SymElement, convert

FAMILIES = ("laguerre", "meixner", "charlier")
_ALIASES = {"la": "laguerre", "me": "meixner", "ch": "charlier"}


def family_name(name: str) -> str:
    key = name.lower()
    key = _ALIASES.get(key, key)
    if key not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    return key


def native_basis(family: str) -> str:
    return "schur" if family_name(family) == "laguerre" else "fs"


@cache
def subdiagrams(nu: Partition) -> tuple[Partition, ...]:
    nu = Partition(nu)
    return tuple(mu for mu in partitions_up_to(nu.size) if contains(mu, nu))


@dataclass(frozen=True)
class OrthoFunction:
    family: str
    nu: Partition
    params: ParamPoint
    in_native: SymElement
    in_schur: SymElement = field(repr=False)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "nu": list(self.nu),
            "params": self.params.to_json(),
            "native": self.in_native.to_json(),
            "schur": self.in_schur.to_json(),
        }


def _step_and_weight(family: str, p: ParamPoint):
    if family == "laguerre":
        return Fraction(1), True
    if family == "meixner":
        return p.xi_ratio(), True
    if p.theta is None:
        raise ParameterError("theta is required")
    return p.theta, False


def ortho_function(family: str, nu, p: ParamPoint, degree_cap: int = DEFAULT_DEGREE_CAP) -> OrthoFunction:
    family = family_name(family)
    nu = Partition(nu)
    cap = max(degree_cap, nu.size)
    t, weighted = _step_and_weight(family, p)
    if weighted:
        p.require_z()
    terms = {}
    for mu in subdiagrams(nu):
        k = nu.size - mu.size
        c = (-t) ** k * Fraction(skew_dim(nu, mu), factorial(k))
        if weighted:
            c *= p.pochhammer(nu, mu)
        terms[mu] = c
    native = SymElement(native_basis(family), terms, cap)
    schur = native if family == "laguerre" else fs_convert(native)
    return OrthoFunction(family, nu, p, native, schur)


def laguerre(nu, p: ParamPoint, degree_cap: int = DEFAULT_DEGREE_CAP) -> OrthoFunction:
    return ortho_function("laguerre", nu, p, degree_cap)


def meixner(nu, p: ParamPoint, degree_cap: int = DEFAULT_DEGREE_CAP) -> OrthoFunction:
    return ortho_function("meixner", nu, p, degree_cap)


def charlier(nu, theta, degree_cap: int = DEFAULT_DEGREE_CAP) -> OrthoFunction:
    p = theta if isinstance(theta, ParamPoint) else ParamPoint.charlier(theta)
    return ortho_function("charlier", nu, p, degree_cap)


# ----------------------------------------------------------------- operators


@dataclass(frozen=True)
class GradedOperator:
    """Sparse matrix of an operator on Sym truncated at ``degree_cap``.

    ``entries[(row, col)]`` is the coefficient of ``B_row`` in ``D B_col``.
    """

    family: str
    basis: str
    degree_cap: int
    entries: Mapping[tuple[Partition, Partition], Fraction]

    def column(self, col) -> dict[Partition, Fraction]:
        col = Partition(col)
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def apply(self, f: SymElement) -> SymElement:
        if f.degree > self.degree_cap:
            raise DomainError("argument exceeds the operator's degree cap")
        f = convert(f, self.basis)
        out: dict = defaultdict(Fraction)
        cols = _columns(self)
        for nu, c in f.items():
            for mu, a in cols.get(nu, ()):
                out[mu] += c * a
        return SymElement(self.basis, out, f.degree_cap)

    def labels(self) -> list[Partition]:
        return partitions_up_to(self.degree_cap)

    def to_json(self) -> dict:
        rows = sorted(self.entries.items(), key=lambda kv: (sort_key(kv[0][1]), sort_key(kv[0][0])))
        return {
            "family": self.family,
            "basis": self.basis,
            "degree_cap": self.degree_cap,
            "entries": [{"row": list(r), "col": list(c), "value": format_rational(v)} for (r, c), v in rows],
        }


def _columns(op: GradedOperator) -> dict:
    cols: dict = defaultdict(list)
    for (r, c), v in op.entries.items():
        cols[c].append((r, v))
    return cols


def corner_weight(family: str, p: ParamPoint, content: int) -> Fraction:
    """Coefficient in front of ``B_{nu - box}`` for a corner of the given content."""
    family = family_name(family)
    if family == "laguerre":
        return p.pair(content)
    if family == "meixner":
        return p.xi_ratio() * p.pair(content)
    if p.theta is None:
        raise ParameterError("theta is required")
    return p.theta


def operator_matrix(family: str, p: ParamPoint, d: int = DEFAULT_DEGREE_CAP) -> GradedOperator:
    family = family_name(family)
    entries = {}
    for nu in partitions_up_to(d):
        if nu.size:
            entries[(nu, nu)] = Fraction(-nu.size)
        for box in corners(nu):
            w = corner_weight(family, p, box.content)
            if w:
                entries[(remove_box(nu, box), nu)] = w
    return GradedOperator(family, native_basis(family), d, entries)


def apply_operator(family: str, p: ParamPoint, f: SymElement) -> SymElement:
    return operator_matrix(family, p, max(f.degree, 0)).apply(f)


def conjugate_matrix(op: GradedOperator) -> dict:
    """Entries of ``sigma o D o sigma`` (transpose both labels)."""
    return {(transpose(r), transpose(c)): v for (r, c), v in op.entries.items()}


# -------------------------------------------------- formal differential forms


def _drop(counts: Counter, *idx: int) -> tuple[int, Partition] | None:
    c = Counter(counts)
    mult = 1
    for k in idx:
        if c[k] <= 0:
            return None
        mult *= c[k]
        c[k] -= 1
    return mult, Partition(sorted(c.elements(), reverse=True))


def _times(label: Partition, *gens: int) -> Partition:
    return Partition(sorted(list(label) + [g for g in gens if g > 0], reverse=True))


def _second_order_eh(counts: Counter, out: dict, c: Fraction):
    """The (shared) second-order part of the e- and h-forms."""
    present = sorted(k for k in counts if counts[k] > 0)
    for n in present:
        hit = _drop(counts, n, n)
        if hit:
            mult, rest = hit
            for k in range(n):
                out[_times(rest, 2 * n - 1 - k, k)] += c * mult * (2 * n - 1 - 2 * k)
    for i, n in enumerate(present):
        for m in present[i + 1 :]:
            mult, rest = _drop(counts, m, n)
            for k in range(n):
                out[_times(rest, m + n - 1 - k, k)] += 2 * c * mult * (m + n - 1 - 2 * k)


def _diffop_eh(f: SymElement, p: ParamPoint, which: str) -> SymElement:
    out: dict = defaultdict(Fraction)
    for label, c in f.items():
        counts = Counter(label)
        _second_order_eh(counts, out, c)
        for n in [k for k in counts if counts[k] > 0]:
            mult, rest = _drop(counts, n)
            out[_times(rest, n)] += -n * c * mult
            shift = 1 - n if which == "e" else n - 1
            out[_times(rest, n - 1)] += c * mult * p.pair(shift)
    return SymElement(which, out, f.degree_cap)


def _diffop_p(f: SymElement, p: ParamPoint) -> SymElement:
    out: dict = defaultdict(Fraction)
    for label, c in f.items():
        counts = Counter(label)
        present = [k for k in counts if counts[k] > 0]
        for k in present:
            mult, rest = _drop(counts, k)
            out[_times(rest, k)] += -k * c * mult
            if k >= 2:
                out[_times(rest, k - 1)] += p.s * k * c * mult
            else:
                out[rest] += p.v * c * mult
            for i in range(1, k - 1):
                j = k - 1 - i
                out[_times(rest, i, j)] += (i + j + 1) * c * mult
        for i in present:
            for j in present:
                hit = _drop(counts, i, j)
                if hit:
                    mult, rest = hit
                    out[_times(rest, i + j - 1)] += i * j * c * mult
    return SymElement("p", out, f.degree_cap)


def apply_diffop_laguerre(f: SymElement, p: ParamPoint, form: str) -> SymElement:
    """Apply the Laguerre operator written as a second-order differential
    operator in the generators ``e_n`` (form "E"), ``h_n`` ("H") or ``p_n`` ("P").
    """
    form = form.lower()
    if form not in ("e", "h", "p"):
        raise ValueError("form must be E, H or P")
    if f.basis != form:
        raise ValueError(f"element is in basis {f.basis!r}, expected {form!r}")
    p.require_z()
    if form == "p":
        return _diffop_p(f, p)
    return _diffop_eh(f, p, form)


# ------------------------------------------------------------- eps-scaling


def eps_scale(f: SymElement, eps) -> SymElement:
    """``eps^{-G} f``: the degree-m component is multiplied by ``eps^{-m}``."""
    eps = rational(eps)
    if eps == 0:
        raise ParameterError("eps must be nonzero")
    if f.basis not in ("schur", "e", "h", "p"):
        raise ValueError("eps_scale needs a homogeneous basis")
    return SymElement(f.basis, {k: v * eps ** (-k.size) for k, v in f.items()}, f.degree_cap)


def meixner_scaled(nu, p: ParamPoint, eps) -> SymElement:
    """``eps^{|nu|} eps^{-G} M_nu`` with ``xi = 1 - eps``, in the Schur basis."""
    eps = rational(eps)
    nu = Partition(nu)
    m = meixner(nu, p.with_xi(1 - eps)).in_schur
    return eps ** nu.size * eps_scale(m, eps)


def scaled_deviation(nu, p: ParamPoint, eps) -> SymElement:
    """``meixner_scaled - laguerre`` in the Schur basis."""
    return meixner_scaled(nu, p, eps) - laguerre(nu, p).in_schur


def eps_limit_certificate(nu, p: ParamPoint, eps_list: Iterable = ("1/10", "1/100", "1/1000")) -> dict:
    """Certify that every Schur coefficient of ``meixner_scaled - laguerre`` is
    ``eps`` times a polynomial in ``eps``.

    Each coefficient is a polynomial in eps of degree at most ``|nu|``.  It is
    sampled at the requested points plus enough extra nodes, and the
    interpolant is evaluated at eps = 0; a zero there is the divisibility claim.
    """
    nu = Partition(nu)
    nodes = [rational(e) for e in eps_list]
    k = 2
    while len(nodes) < nu.size + 2:
        extra = Fraction(1, k + 1)
        if extra not in nodes:
            nodes.append(extra)
        k += 1
    samples = [scaled_deviation(nu, p, e) for e in nodes]
    labels = sorted({lab for s in samples for lab in s.terms}, key=sort_key)
    at_zero = {lab: lagrange_at(nodes, [s.coeff(lab) for s in samples], 0) for lab in labels}
    quotients = {
        format_rational(e): {format_rational_label(lab): format_rational(s.coeff(lab) / e) for lab in labels}
        for e, s in zip(nodes, samples)
    }
    return {
        "nu": list(nu),
        "nodes": [format_rational(e) for e in nodes],
        "value_at_zero": {format_rational_label(lab): format_rational(v) for lab, v in at_zero.items()},
        "divisible": all(v == 0 for v in at_zero.values()),
        "quotients": quotients,
    }


def format_rational_label(label) -> str:
    return ",".join(str(r) for r in label)


# ----------------------------------------------------------- autoduality


def mprime_normalizer(nu, p: ParamPoint) -> Fraction:
    """``(-xi/(1-xi))^{|nu|} dim(nu)/|nu|! (z)_nu (z')_nu``.

    The sign ``(-1)^{|nu|}`` is what makes the renormalized functions
    symmetric in (index, argument); without it the two sides differ by
    ``(-1)^{|nu| + |lam|}``.
    """
    nu = Partition(nu)
    w = p.pochhammer(nu)
    if w == 0:
        raise DegenerateNormalization(f"(z)_nu (z')_nu vanishes for nu={list(nu)}")
    return (-p.xi_ratio()) ** nu.size * Fraction(dim(nu), factorial(nu.size)) * w


def mprime_value(nu, lam, p: ParamPoint) -> Fraction:
    """``M'_nu(lam)`` computed by evaluating the Meixner function on the diagram."""
    nu, lam = Partition(nu), Partition(lam)
    m = meixner(nu, p)
    value = sum((c * fs_value(mu, lam) for mu, c in m.in_native.items()), Fraction(0))
    return value / mprime_normalizer(nu, p)


def autoduality_formula(nu, lam, p: ParamPoint) -> Fraction:
    """Closed double-sum expression for ``M'_nu(lam)``; visibly symmetric."""
    nu, lam = Partition(nu), Partition(lam)
    inv = 1 / p.xi_ratio()
    total = Fraction(0)
    meet = Partition(min(a, b) for a, b in zip(nu, lam))
    for mu in subdiagrams(meet):
        w = p.pochhammer(mu)
        if w == 0:
            raise DegenerateNormalization(f"(z)_mu (z')_mu vanishes for mu={list(mu)}")
        k = mu.size
        term = (-inv) ** k * Fraction(
            factorial(nu.size) * factorial(lam.size),
            factorial(nu.size - k) * factorial(lam.size - k),
        )
        term *= Fraction(skew_dim(nu, mu) * skew_dim(lam, mu), dim(nu) * dim(lam)) / w
        total += term
    return total


def autoduality_check(nu, lam, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """Return ``(M'_nu(lam), M'_lam(nu))``, both computed by evaluation."""
    return mprime_value(nu, lam, p), mprime_value(lam, nu, p)


# -------------------------------------------------------- uniqueness solve


def eigen_solve(family: str, nu, p: ParamPoint) -> SymElement:
    """Solve ``(D + |nu|) x = 0`` with top term ``B_nu`` in the truncated matrix.

    Works level by level downwards: the coefficient of ``B_mu`` in
    ``(D + n) x`` is ``(n - |mu|) x_mu + sum_{kappa = mu + box} D[mu, kappa] x_kappa``.
    """
    family = family_name(family)
    nu = Partition(nu)
    n = nu.size
    x: dict[Partition, Fraction] = {nu: Fraction(1)}
    for m in range(n - 1, -1, -1):
        for mu in enumerate_partitions(m):
            acc = Fraction(0)
            for box in addable(mu):
                kappa = add_box(mu, box)
                if kappa in x:
                    acc += corner_weight(family, p, box.content) * x[kappa]
            if acc:
                x[mu] = acc / (m - n)
    return SymElement(native_basis(family), x, max(DEFAULT_DEGREE_CAP, n))


# ------------------------------------------------ Charlier degeneration


def charlier_degeneration(nu, theta, ns: Iterable[int] = (10, 100, 1000)) -> list[Fraction]:
    """Max FS-coefficient deviation between Meixner at ``z = z' = n``,
    ``xi = theta / n^2`` and Charlier with parameter theta, for each n.

    Along this sequence ``z z' xi = theta`` exactly.
    """
    theta = rational(theta)
    target = charlier(nu, theta).in_native
    out = []
    for n in ns:
        p = ParamPoint.split(n, n, xi=theta / (n * n))
        diff = meixner(nu, p).in_native - target
        out.append(max((abs(v) for v in diff.terms.values()), default=Fraction(0)))
    return out
