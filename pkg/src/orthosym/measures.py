"""Moment functionals, z-measures and the Meixner jump rates.

The exact core never evaluates the transcendental normalizer
``(1 - xi)^{zz'}``: z-measures are handled through relative weights
``rel(lam) = P(lam) / P(empty)`` and per-level identities.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .bases import family_name, native_basis, ortho_function, subdiagrams
from .errors import DegenerateNormalization, ParameterError
from .fs import fs_value, schur_to_fs
from .partitions import (
    Box,
    EMPTY,
    Partition,
    add_box,
    addable,
    corners,
    dim,
    enumerate_partitions,
    partitions_up_to,
    remove_box,
    skew_dim,
    sort_key,
)
from .scalars import ParamPoint, format_rational, rational
from .sym import SymElement, convert, schur_product, schur_to_p


def rising(x, n: int) -> Fraction:
    """Pochhammer symbol ``(x)_n``."""
    x = Fraction(x)
    return math.prod((x + i for i in range(n)), start=Fraction(1))


# ------------------------------------------------------------- functionals


def _phi_basis_value(family: str, nu: Partition, p: ParamPoint) -> Fraction:
    base = Fraction(dim(nu), factorial(nu.size))
    if family == "laguerre":
        return p.pochhammer(nu) * base
    if family == "meixner":
        return p.xi_ratio() ** nu.size * p.pochhammer(nu) * base
    if p.theta is None:
        raise ParameterError("theta is required")
    return p.theta ** nu.size * base


def phi(family: str, f: SymElement, p: ParamPoint) -> Fraction:
    """Moment functional: Schur-basis values for Laguerre, FS-basis values otherwise."""
    family = family_name(family)
    f = convert(f, native_basis(family))
    return sum((c * _phi_basis_value(family, nu, p) for nu, c in f.items()), Fraction(0))


def norm_closed_form(family: str, nu, p: ParamPoint) -> Fraction:
    family = family_name(family)
    nu = Partition(nu)
    if family == "laguerre":
        return p.pochhammer(nu)
    if family == "meixner":
        return p.xi ** nu.size * (1 - p.xi) ** (-2 * nu.size) * p.pochhammer(nu)
    return p.theta ** nu.size


def orthogonality_check(family: str, mu, nu, p: ParamPoint) -> Fraction:
    """``phi(F_mu F_nu)``; equals ``delta * norm_closed_form``."""
    mu, nu = Partition(mu), Partition(nu)
    cap = max(8, mu.size + nu.size)
    a = ortho_function(family, mu, p, cap).in_schur
    b = ortho_function(family, nu, p, cap).in_schur
    return phi(family, a * b, p)


@cache
def _native_pair(a: Partition, b: Partition, basis: str) -> tuple[tuple[Partition, Fraction], ...]:
    """``B_a B_b`` expanded in the same basis ``B`` (Schur or FS); parameter free."""
    cap = max(8, a.size + b.size)
    if basis == "schur":
        return tuple(schur_product(a, b))
    fa = convert(SymElement.basis_element("fs", a, cap), "schur")
    fb = convert(SymElement.basis_element("fs", b, cap), "schur")
    return tuple(schur_to_fs(fa * fb).items())


def gram_matrix(family: str, p: ParamPoint, n: int) -> dict[tuple[Partition, Partition], Fraction]:
    """``phi(F_mu F_nu)`` for all ``|mu|, |nu| <= n`` as ``C Phi C^T``.

    ``C`` holds the native-basis coefficients of the F's and
    ``Phi[a, b] = phi(B_a B_b)``.
    """
    family = family_name(family)
    basis = native_basis(family)
    labels = partitions_up_to(n)
    coeffs = {nu: ortho_function(family, nu, p).in_native.terms for nu in labels}
    values: dict[Partition, Fraction] = {}

    def phi_of(kappa):
        if kappa not in values:
            values[kappa] = _phi_basis_value(family, kappa, p)
        return values[kappa]

    big_phi = {}
    for a in labels:
        for b in labels:
            if sort_key(b) < sort_key(a):
                big_phi[(a, b)] = big_phi[(b, a)]
                continue
            big_phi[(a, b)] = sum((c * phi_of(k) for k, c in _native_pair(a, b, basis)), Fraction(0))
    out = {}
    for i, mu in enumerate(labels):
        for nu in labels[i:]:
            total = Fraction(0)
            for a, ca in coeffs[mu].items():
                for b, cb in coeffs[nu].items():
                    total += ca * cb * big_phi[(a, b)]
            out[(mu, nu)] = out[(nu, mu)] = total
    return out


def gram_defects(family: str, p: ParamPoint, n: int) -> list[tuple[Partition, Partition, Fraction]]:
    """Entries where the Gram matrix differs from the diagonal closed form."""
    bad = []
    for (mu, nu), val in gram_matrix(family, p, n).items():
        want = norm_closed_form(family, nu, p) if mu == nu else 0
        if val != want:
            bad.append((mu, nu, val - want))
    return bad


def lower_set_nodes(dims: int, degree: int, axes: Sequence[Sequence[Fraction]]):
    """Tensor nodes ``(axes[0][i0], ..., )`` with ``i0 + i1 + ... <= degree``.

    Such a node set is unisolvent for polynomials of total degree at most
    ``degree``, so vanishing there proves vanishing identically.
    """
    for idx in product(range(degree + 1), repeat=dims):
        if sum(idx) <= degree:
            yield tuple(axes[k][i] for k, i in enumerate(idx))


def default_axes(degree: int) -> dict[str, list[Fraction]]:
    s_axis = [Fraction(2 * k + 1, 3) * (-1) ** k for k in range(degree + 1)]
    v_axis = [Fraction(k + 1, 2) * (-1) ** (k // 2) for k in range(degree + 1)]
    r_axis = [Fraction(k + 1, k + 3) for k in range(degree + 1)]
    return {"s": s_axis, "v": v_axis, "r": r_axis}


def certify_orthogonality(family: str, n: int, degree: int | None = None, theta_values: Iterable = ()) -> dict:
    """Certify ``phi(F_mu F_nu) = delta * norm`` as a polynomial identity.

    Laguerre entries are polynomials in ``(s, v) = (z + z', z z')``; Meixner
    entries are polynomials in ``(s, v, r)`` with ``r = xi / (1 - xi)``.  The
    total degree is at most ``2(|mu| + |nu|) <= 4n``.  Charlier is checked at
    the given theta values (its entries are polynomials in theta of degree
    ``<= |mu| + |nu|``; callers pass enough points).
    """
    family = family_name(family)
    degree = 4 * n if degree is None else degree
    axes = default_axes(degree)
    points: list[ParamPoint] = []
    if family == "laguerre":
        for s, v in lower_set_nodes(2, degree, [axes["s"], axes["v"]]):
            points.append(ParamPoint.symmetric(s, v))
    elif family == "meixner":
        for s, v, r in lower_set_nodes(3, degree, [axes["s"], axes["v"], axes["r"]]):
            points.append(ParamPoint.symmetric(s, v, xi=r / (1 + r)))
    else:
        points = [ParamPoint.charlier(t) for t in theta_values]
    failures = []
    for pt in points:
        for mu, nu, diff in gram_defects(family, pt, n):
            failures.append({"params": pt.to_json(), "mu": list(mu), "nu": list(nu), "diff": format_rational(diff)})
    return {"family": family, "n": n, "degree_bound": degree, "points": len(points), "failures": failures}


# -------------------------------------------------------------- z-measures


@dataclass(frozen=True)
class ZMeasureTable:
    params: ParamPoint
    cap: int
    rel_weights: Mapping[Partition, Fraction]

    def level_sum(self, n: int) -> Fraction:
        return sum((self.rel_weights[lam] for lam in enumerate_partitions(n)), Fraction(0))

    def normalizer(self) -> float:
        """Floating-point ``P(empty)``: ``(1-xi)^{zz'}`` or ``e^{-theta}``."""
        p = self.params
        if p.s is None:
            return math.exp(-float(p.theta))
        return (1 - float(p.xi)) ** float(p.v)

    def probabilities(self) -> dict[Partition, float]:
        c = self.normalizer()
        return {lam: c * float(w) for lam, w in self.rel_weights.items()}

    def to_json(self, as_float: bool = False) -> dict:
        weights = [
            {"lambda": list(lam), "rel": float(w) if as_float else format_rational(w)}
            for lam, w in self.rel_weights.items()
        ]
        return {"params": self.params.to_json(), "cap": self.cap, "rel_weights": weights}


def rel_weight(lam, p: ParamPoint) -> Fraction:
    """``P(lam)/P(empty)`` for the z-measure, or for poissonized Plancherel when
    only theta is set."""
    lam = Partition(lam)
    sq = Fraction(dim(lam), factorial(lam.size)) ** 2
    if p.s is None:
        if p.theta is None:
            raise ParameterError("need (z, z', xi) or theta")
        return p.theta ** lam.size * sq
    if p.xi is None:
        raise ParameterError("xi is required")
    return p.pochhammer(lam) * p.xi ** lam.size * sq


def zmeasure_table(p: ParamPoint, L: int) -> ZMeasureTable:
    return ZMeasureTable(p, L, {lam: rel_weight(lam, p) for lam in partitions_up_to(L)})


def level_sum_closed_form(p: ParamPoint, n: int) -> Fraction:
    if p.s is None:
        return p.theta ** n / factorial(n)
    return rising(p.v, n) * p.xi ** n / factorial(n)


def zmeasure_n(nu, p: ParamPoint) -> Fraction:
    """Non-mixed z-measure ``P^{(n)}(nu)`` with ``n = |nu|``."""
    nu = Partition(nu)
    norm = rising(p.v, nu.size)
    if norm == 0:
        raise DegenerateNormalization(f"(zz')_{nu.size} vanishes")
    return p.pochhammer(nu) * dim(nu) ** 2 / (norm * factorial(nu.size))


def specialization_value(z, eta, lam) -> Fraction:
    """``psi_{z,eta}(S_lam) = (z)_lam eta^{|lam|} dim(lam)/|lam|!``."""
    from .partitions import content_pochhammer

    lam = Partition(lam)
    z, eta = rational(z), rational(eta)
    return content_pochhammer(z, lam) * eta ** lam.size * Fraction(dim(lam), factorial(lam.size))


def specialize(f: SymElement, power_sum: Callable[[int], Fraction]) -> Fraction:
    """Apply the algebra morphism determined by the values of ``p_k``."""
    fp = convert(f, "p")
    return sum(
        (c * math.prod((power_sum(k) for k in rho), start=Fraction(1)) for rho, c in fp.items()),
        Fraction(0),
    )


def specialization_via_power_sums(z, eta, lam) -> Fraction:
    """Same value computed through ``S_lam = sum chi/z_rho p_rho`` with ``p_k -> z eta^k``."""
    z, eta = rational(z), rational(eta)
    lam = Partition(lam)
    return specialize(schur_to_p(lam), lambda k: z * eta**k)


def specialization_pair_sum(z, zp, n: int) -> tuple[Fraction, Fraction]:
    """``(sum_{Y_n} psi_{z,1}(S) psi_{z',1}(S), (zz')_n / n!)``."""
    z, zp = rational(z), rational(zp)
    lhs = sum(
        (specialization_value(z, 1, lam) * specialization_value(zp, 1, lam) for lam in enumerate_partitions(n)),
        Fraction(0),
    )
    return lhs, rising(z * zp, n) / factorial(n)


def schur_pair_bound(psi: Callable[[int], Fraction], psip: Callable[[int], Fraction], n: int, C, eta) -> tuple[Fraction, Fraction]:
    """``(sum_{Y_n} |psi(S) psi'(S)|, eta^{2n} (C^2)_n / n!)``; the first never exceeds the second
    when ``|psi(p_k)|, |psi'(p_k)| <= C eta^k``."""
    C, eta = rational(C), rational(eta)
    lhs = Fraction(0)
    for lam in enumerate_partitions(n):
        s = schur_to_p(lam)
        lhs += abs(specialize(s, psi) * specialize(s, psip))
    return lhs, eta ** (2 * n) * rising(C * C, n) / factorial(n)


def coherency_check(nu, l: int, p: ParamPoint) -> tuple[Fraction, Fraction]:
    nu = Partition(nu)
    if l < nu.size:
        raise ValueError("l must be at least |nu|")
    lhs = zmeasure_n(nu, p)
    rhs = Fraction(0)
    for lam in enumerate_partitions(l):
        sd = skew_dim(lam, nu)
        if sd:
            rhs += Fraction(dim(nu) * sd, dim(lam)) * zmeasure_n(lam, p)
    return lhs, rhs


def eq33_level(nu, l: int, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """Per-level identity behind the z-measure expectation of ``FS_nu``:

    ``sum_{lam in Y_l} FS_nu(lam) rel(lam)`` versus
    ``n! rel(nu)/dim(nu) * (zz'+n)_{l-n} xi^{l-n} / (l-n)!``.
    """
    nu = Partition(nu)
    n = nu.size
    if l < n:
        return Fraction(0), Fraction(0)
    lhs = sum((fs_value(nu, lam) * rel_weight(lam, p) for lam in enumerate_partitions(l)), Fraction(0))
    rhs = factorial(n) * rel_weight(nu, p) / dim(nu) * rising(p.v + n, l - n) * p.xi ** (l - n) / factorial(l - n)
    return lhs, rhs


def thm3_partial_sum(nu, L: int, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """Both sides of the z-measure expectation of ``FS_nu`` truncated at size ``L``,
    divided by ``(1 - xi)^{zz'}``."""
    nu = Partition(nu)
    n = nu.size
    lhs = sum(
        (fs_value(nu, lam) * rel_weight(lam, p) for lam in partitions_up_to(L)),
        Fraction(0),
    )
    head = factorial(n) * rel_weight(nu, p) / dim(nu)
    rhs = head * sum(
        (rising(p.v + n, m) * p.xi**m / factorial(m) for m in range(max(L - n + 1, 0))),
        Fraction(0),
    )
    return lhs, rhs


def psi_p_value(nu, p: ParamPoint) -> Fraction:
    nu = Partition(nu)
    norm = rising(p.v, nu.size)
    if norm == 0:
        raise DegenerateNormalization(f"(zz')_{nu.size} vanishes")
    return p.pochhammer(nu) * Fraction(dim(nu), factorial(nu.size)) / norm


def lifting_relation(nu, p: ParamPoint) -> tuple[Fraction, Fraction, Fraction]:
    """``(psi_P(S_nu), (zz')_{|nu|} psi_P(S_nu), phi^LA(S_nu))``."""
    nu = Partition(nu)
    first = psi_p_value(nu, p)
    return first, rising(p.v, nu.size) * first, _phi_basis_value("laguerre", nu, p)


def psi_p_harmonicity(nu, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """``psi_P`` kills ``(p_1 - 1) S_nu``: returns ``(psi_P(S_nu), sum_{kappa = nu + box} psi_P(S_kappa))``."""
    nu = Partition(nu)
    return psi_p_value(nu, p), sum((psi_p_value(add_box(nu, b), p) for b in addable(nu)), Fraction(0))


def thm5_moment_limit(nu, eps_list: Iterable, p: ParamPoint) -> list[Fraction]:
    """``eps^{|nu|} phi^ME(FS_nu)`` at ``xi = 1 - eps`` for each eps."""
    nu = Partition(nu)
    out = []
    for eps in eps_list:
        eps = rational(eps)
        if not 0 < eps < 1:
            raise ParameterError("eps must lie in (0, 1)")
        out.append(eps ** nu.size * _phi_basis_value("meixner", nu, p.with_xi(1 - eps)))
    return out


# ------------------------------------------------------------------- rates


@dataclass(frozen=True)
class RateTable:
    lam: Partition
    up: Mapping[Box, Fraction]
    down: Mapping[Box, Fraction]
    total: Fraction

    def balance(self) -> Fraction:
        """``sum A + sum B - C``; zero by Kerov's identity."""
        return sum(self.up.values(), Fraction(0)) + sum(self.down.values(), Fraction(0)) - self.total


def _down_rates(lam: Partition, scale: Fraction) -> dict[Box, Fraction]:
    n = lam.size
    return {b: scale * Fraction(n * dim(remove_box(lam, b)), dim(lam)) for b in corners(lam)}


def meixner_rates(lam, p: ParamPoint) -> RateTable:
    lam = Partition(lam)
    if p.xi is None or not 0 < p.xi < 1:
        raise ParameterError("xi must lie in (0, 1)")
    r = p.xi_ratio()
    n = lam.size
    up = {
        b: r * p.pair(b.content) * Fraction(dim(add_box(lam, b)), (n + 1) * dim(lam)) for b in addable(lam)
    }
    down = _down_rates(lam, 1 / (1 - p.xi))
    total = ((1 + p.xi) * n + p.xi * p.v) / (1 - p.xi)
    return RateTable(lam, up, down, total)


def charlier_rates(lam, theta) -> RateTable:
    lam = Partition(lam)
    theta = rational(theta)
    n = lam.size
    up = {b: theta * Fraction(dim(add_box(lam, b)), (n + 1) * dim(lam)) for b in addable(lam)}
    down = _down_rates(lam, Fraction(1))
    return RateTable(lam, up, down, theta + n)


def rates(lam, p: ParamPoint) -> RateTable:
    return meixner_rates(lam, p) if p.s is not None else charlier_rates(lam, p.theta)


def detailed_balance_defects(p: ParamPoint, cap: int) -> list[dict]:
    """Edges ``lam -> lam + box`` with ``|lam| < cap`` where
    ``rel(lam) A(lam, box) != rel(lam + box) B(lam + box, box)``."""
    bad = []
    for lam in partitions_up_to(cap - 1):
        table = rates(lam, p)
        for b, a in table.up.items():
            kappa = add_box(lam, b)
            lhs = rel_weight(lam, p) * a
            rhs = rel_weight(kappa, p) * rates(kappa, p).down[b]
            if lhs != rhs:
                bad.append({"lambda": list(lam), "box": [b.row, b.col], "diff": format_rational(lhs - rhs)})
    return bad


def functional_kills_range(family: str, f: SymElement, p: ParamPoint) -> Fraction:
    """``phi(D f)``; zero for every f."""
    from .bases import apply_operator

    return phi(family, apply_operator(family, p, f), p)
