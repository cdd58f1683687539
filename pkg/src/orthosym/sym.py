"""Symmetric functions as finite exact expansions over a named basis.

Supported bases:

``schur``  Schur functions ``S_nu``
``fs``     Frobenius-Schur functions ``FS_nu`` (see :mod:`orthosym.fs`)
``e``      monomials ``e_lambda = e_{lambda_1} e_{lambda_2} ...``
``h``      monomials in complete homogeneous functions
``p``      monomials in Newton power sums

Basis changes go through the Schur basis.  Products of Schur functions use
Littlewood-Richardson coefficients obtained by iterated Pieri rules applied
to the Jacobi-Trudi expansion of one factor.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .errors import DegreeOverflow, DomainError
from .partitions import EMPTY, Partition, enumerate_partitions, frobenius, sort_key, transpose
from .scalars import format_rational, rational

BASES = ("schur", "fs", "e", "h", "p")
MONOMIAL_BASES = ("e", "h", "p")
DEFAULT_DEGREE_CAP = 8


class SymElement:
    """Immutable finite linear combination of basis elements.

    ``terms`` maps partitions to nonzero Fractions.  For the monomial bases
    a label ``(3, 1, 1)`` stands for ``e_3 e_1 e_1`` (resp. ``h``, ``p``).
    """

    __slots__ = ("basis", "_terms", "degree_cap")

    def __init__(self, basis: str, terms: Mapping | Iterable = (), degree_cap: int = DEFAULT_DEGREE_CAP):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, Fraction] = defaultdict(Fraction)
        for label, coeff in items:
            clean[Partition(label)] += Fraction(coeff)
        clean = {k: v for k, v in clean.items() if v != 0}
        for label in clean:
            if label.size > degree_cap:
                raise DegreeOverflow(f"label {list(label)} exceeds degree cap {degree_cap}")
        self.basis = basis
        self._terms = {k: clean[k] for k in sorted(clean, key=sort_key)}
        self.degree_cap = degree_cap

    @classmethod
    def basis_element(cls, basis: str, label=(), degree_cap: int = DEFAULT_DEGREE_CAP) -> "SymElement":
        return cls(basis, {Partition(label): 1}, degree_cap)

    @classmethod
    def one(cls, basis: str = "schur", degree_cap: int = DEFAULT_DEGREE_CAP) -> "SymElement":
        return cls(basis, {EMPTY: 1}, degree_cap)

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, label) -> Fraction:
        return self._terms.get(Partition(label), Fraction(0))

    @property
    def degree(self) -> int:
        return max((k.size for k in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def homogeneous_component(self, m: int) -> "SymElement":
        return SymElement(self.basis, {k: v for k, v in self._terms.items() if k.size == m}, self.degree_cap)

    def items(self):
        return self._terms.items()

    def _check(self, other: "SymElement"):
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        if not isinstance(other, SymElement):
            # constants: S_empty = FS_empty = e_empty = 1
            return self + SymElement(self.basis, {EMPTY: rational(other)}, self.degree_cap)
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return SymElement(self.basis, out, max(self.degree_cap, other.degree_cap))

    __radd__ = __add__

    def __neg__(self):
        return SymElement(self.basis, {k: -v for k, v in self._terms.items()}, self.degree_cap)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if isinstance(scalar, SymElement):
            return multiply(self, scalar)
        c = rational(scalar)
        return SymElement(self.basis, {k: c * v for k, v in self._terms.items()}, self.degree_cap)

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __truediv__(self, scalar):
        return self * (1 / rational(scalar))

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, tuple(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"SymElement({self.basis}: 0)"
        parts = [f"{format_rational(c)}*{self.basis}{list(k)}" for k, c in self._terms.items()]
        return f"SymElement({' + '.join(parts)})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"label": list(k), "coeff": format_rational(c)} for k, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: dict, degree_cap: int = DEFAULT_DEGREE_CAP) -> "SymElement":
        return cls(data["basis"], [(t["label"], rational(t["coeff"])) for t in data["terms"]], degree_cap)


def S(*rows, degree_cap: int = DEFAULT_DEGREE_CAP) -> SymElement:
    """Shorthand for the Schur function with the given rows."""
    return SymElement.basis_element("schur", rows, degree_cap)


# ---------------------------------------------------------------- characters


def z_rho(rho) -> int:
    """Centralizer size ``prod k^{m_k} m_k!``."""
    counts = Counter(rho)
    return prod(k**m * factorial(m) for k, m in counts.items())


def _beta_to_partition(beta: tuple[int, ...]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return Partition(x - (n - 1 - i) for i, x in enumerate(b))


@cache
def character(nu: Partition, rho: Partition) -> int:
    """Irreducible character value chi^nu at cycle type rho (Murnaghan-Nakayama)."""
    nu, rho = Partition(nu), Partition(rho)
    if nu.size != rho.size:
        raise DomainError("character needs |nu| = |rho|")
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    n = len(nu)
    beta = set(nu[i] + n - 1 - i for i in range(n))
    total = 0
    for x in beta:
        y = x - k
        if y < 0 or y in beta:
            continue
        height = sum(1 for t in beta if y < t < x)
        new_beta = tuple((beta - {x}) | {y})
        total += (-1) ** height * character(_beta_to_partition(new_beta), rest)
    return total


@cache
def schur_to_p(nu) -> SymElement:
    """``S_nu = sum_rho chi^nu_rho / z_rho p_rho``."""
    nu = Partition(nu)
    cap = max(DEFAULT_DEGREE_CAP, nu.size)
    return SymElement(
        "p", {rho: Fraction(character(nu, rho), z_rho(rho)) for rho in enumerate_partitions(nu.size)}, cap
    )


@cache
def p_to_schur(rho) -> SymElement:
    """``p_rho = sum_nu chi^nu_rho S_nu``."""
    rho = Partition(rho)
    cap = max(DEFAULT_DEGREE_CAP, rho.size)
    return SymElement("schur", {nu: character(nu, rho) for nu in enumerate_partitions(rho.size)}, cap)


# ---------------------------------------------------------- Jacobi-Trudi


@cache
def _jacobi_trudi(nu: Partition, which: str) -> tuple[tuple[Partition, int], ...]:
    idx = nu if which == "h" else transpose(nu)
    n = len(idx)
    memo: dict = {}

    def expand(row: int, cols: tuple[int, ...]) -> dict:
        if row == n:
            return {(): 1}
        key = (row, cols)
        if key in memo:
            return memo[key]
        out: dict = defaultdict(int)
        for pos, j in enumerate(cols):
            k = idx[row] - row + j
            if k < 0:
                continue
            sub = expand(row + 1, cols[:pos] + cols[pos + 1 :])
            sign = -1 if pos % 2 else 1
            for lab, c in sub.items():
                new = tuple(sorted(lab + ((k,) if k > 0 else ()), reverse=True))
                out[new] += sign * c
        memo[key] = {k: v for k, v in out.items() if v}
        return memo[key]

    result = expand(0, tuple(range(n)))
    return tuple(sorted(((Partition(k), v) for k, v in result.items()), key=lambda kv: sort_key(kv[0])))


def schur_to_eh(nu, which: str) -> SymElement:
    """Jacobi-Trudi: ``S_nu = det[h_{nu_i - i + j}] = det[e_{nu'_i - i + j}]``."""
    if which not in ("e", "h"):
        raise ValueError("which must be 'e' or 'h'")
    nu = Partition(nu)
    return SymElement(which, dict(_jacobi_trudi(nu, which)), max(DEFAULT_DEGREE_CAP, nu.size))


# ------------------------------------------------------------ Pieri and LR


@cache
def pieri_h(mu: Partition, k: int) -> tuple[Partition, ...]:
    """Diagrams obtained from ``mu`` by adding a horizontal strip of ``k`` boxes."""
    mu = Partition(mu)
    rows = list(mu) + [0]
    out = []

    def place(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(Partition(acc))
            return
        upper = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(upper, -1, -1):
            place(i + 1, left - add, acc + [rows[i] + add])

    place(0, k, [])
    return tuple(out)


@cache
def pieri_e(mu: Partition, k: int) -> tuple[Partition, ...]:
    """Diagrams obtained from ``mu`` by adding a vertical strip of ``k`` boxes."""
    return tuple(transpose(x) for x in pieri_h(transpose(Partition(mu)), k))


def _apply_pieri(start: Mapping[Partition, int], label, rule) -> dict[Partition, int]:
    cur = dict(start)
    for k in label:
        nxt: dict = defaultdict(int)
        for mu, c in cur.items():
            for nu in rule(mu, k):
                nxt[nu] += c
        cur = nxt
    return cur


@cache
def schur_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Littlewood-Richardson expansion of ``S_mu S_nu`` as (label, coefficient) pairs."""
    mu, nu = Partition(mu), Partition(nu)
    if sort_key(mu) > sort_key(nu):
        return schur_product(nu, mu)
    out: dict = defaultdict(int)
    for lab, c in _jacobi_trudi(nu, "h"):
        for kappa, d in _apply_pieri({mu: 1}, lab, pieri_h).items():
            out[kappa] += c * d
    return tuple((k, v) for k, v in sorted(out.items(), key=lambda kv: sort_key(kv[0])) if v)


def lr_coefficient(lam, mu, nu) -> int:
    """``c^lam_{mu nu}``, the coefficient of ``S_lam`` in ``S_mu S_nu``."""
    return dict(schur_product(Partition(mu), Partition(nu))).get(Partition(lam), 0)


@cache
def _monomial_in_schur(basis: str, label: Partition) -> SymElement:
    label = Partition(label)
    cap = max(DEFAULT_DEGREE_CAP, label.size)
    if basis == "p":
        return p_to_schur(label)
    rule = pieri_h if basis == "h" else pieri_e
    return SymElement("schur", _apply_pieri({EMPTY: 1}, label, rule), cap)


# ---------------------------------------------------------- basis changes


def to_schur(f: SymElement) -> SymElement:
    if f.basis == "schur":
        return f
    if f.basis == "fs":
        from .fs import fs_convert

        return fs_convert(f)
    out: dict = defaultdict(Fraction)
    for label, c in f.items():
        for nu, d in _monomial_in_schur(f.basis, label).items():
            out[nu] += c * d
    return SymElement("schur", out, f.degree_cap)


def from_schur(f: SymElement, basis: str) -> SymElement:
    if f.basis != "schur":
        raise ValueError("expected a Schur-basis element")
    if basis == "schur":
        return f
    if basis == "fs":
        from .fs import schur_to_fs

        return schur_to_fs(f)
    out: dict = defaultdict(Fraction)
    for nu, c in f.items():
        src = schur_to_p(nu) if basis == "p" else schur_to_eh(nu, basis)
        for lab, d in src.items():
            out[lab] += c * d
    return SymElement(basis, out, f.degree_cap)


def convert(f: SymElement, basis: str) -> SymElement:
    if f.basis == basis:
        return f
    return from_schur(to_schur(f), basis)


def multiply(f: SymElement, g: SymElement, degree_cap: int | None = None) -> SymElement:
    """Product in Sym.

    Two elements in the same monomial basis multiply by label concatenation;
    anything else is multiplied in the Schur basis via LR coefficients.
    """
    cap = degree_cap if degree_cap is not None else max(f.degree_cap, g.degree_cap)
    if not f.is_zero() and not g.is_zero() and f.degree + g.degree > cap:
        raise DegreeOverflow(f"product degree {f.degree + g.degree} exceeds cap {cap}")
    out: dict = defaultdict(Fraction)
    if f.basis == g.basis and f.basis in MONOMIAL_BASES:
        for a, c in f.items():
            for b, d in g.items():
                out[Partition(sorted(a + b, reverse=True))] += c * d
        return SymElement(f.basis, out, cap)
    f, g = to_schur(f), to_schur(g)
    for a, c in f.items():
        for b, d in g.items():
            for kappa, m in schur_product(a, b):
                out[kappa] += c * d * m
    return SymElement("schur", out, cap)


def lr_via_p(mu, nu) -> SymElement:
    """Independent route to ``S_mu S_nu``: multiply power-sum expansions."""
    mu, nu = Partition(mu), Partition(nu)
    cap = max(DEFAULT_DEGREE_CAP, mu.size + nu.size)
    prod_p = multiply(schur_to_p(mu), schur_to_p(nu), cap)
    return to_schur(prod_p)


def sigma(f: SymElement) -> SymElement:
    """The involution ``S_nu -> S_nu'``; swaps ``e`` and ``h``, sends ``p_k -> (-1)^{k-1} p_k``."""
    if f.basis in ("schur", "fs"):
        return SymElement(f.basis, {transpose(k): v for k, v in f.items()}, f.degree_cap)
    if f.basis == "p":
        return SymElement("p", {k: (-1) ** (k.size - len(k)) * v for k, v in f.items()}, f.degree_cap)
    return SymElement("h" if f.basis == "e" else "e", f.terms, f.degree_cap)


# ------------------------------------------------------- Newton identities


@cache
def generator_in_p(basis: str, k: int) -> SymElement:
    """``h_k`` or ``e_k`` in the power-sum basis via Newton's identities.

    ``k h_k = sum_i p_i h_{k-i}`` and ``k e_k = sum_i (-1)^{i-1} p_i e_{k-i}``.
    """
    cap = max(DEFAULT_DEGREE_CAP, k)
    if k == 0:
        return SymElement.one("p", cap)
    acc = SymElement("p", {}, cap)
    for i in range(1, k + 1):
        sign = 1 if basis == "h" or i % 2 == 1 else -1
        acc = acc + sign * multiply(SymElement.basis_element("p", (i,), cap), generator_in_p(basis, k - i), cap)
    return acc / k


def monomial_to_p_newton(f: SymElement) -> SymElement:
    """Convert an e- or h-monomial element to power sums without passing through Schur."""
    if f.basis not in ("e", "h"):
        raise ValueError("expected e or h basis")
    acc = SymElement("p", {}, f.degree_cap)
    for label, c in f.items():
        term = SymElement.one("p", f.degree_cap)
        for k in label:
            term = multiply(term, generator_in_p(f.basis, k), f.degree_cap)
        acc = acc + c * term
    return acc


# -------------------------------------------------------------- evaluation


def _evaluate_p(f_p: SymElement, pval: Callable[[int], Fraction]) -> Fraction:
    cache_vals: dict[int, Fraction] = {}

    def val(k):
        if k not in cache_vals:
            cache_vals[k] = pval(k)
        return cache_vals[k]

    return sum((c * prod((val(k) for k in rho), start=Fraction(1)) for rho, c in f_p.items()), Fraction(0))


def diagram_power_sum(lam, k: int) -> Fraction:
    """``p_k(lam) = sum_i a_i^k - (-b_i)^k`` in modified Frobenius coordinates."""
    fr = frobenius(Partition(lam))
    return sum((a**k - (-b) ** k for a, b in zip(fr.a, fr.b)), Fraction(0))


@cache
def schur_value(nu: Partition, lam: Partition) -> Fraction:
    """``S_nu(lam)`` under the identification of Sym with functions on diagrams."""
    return _evaluate_p(schur_to_p(Partition(nu)), lambda k: diagram_power_sum(lam, k))


def evaluate_at_diagram(f: SymElement, lam) -> Fraction:
    """Value of ``f`` at the diagram ``lam`` (power sums become supersymmetric sums)."""
    lam = Partition(lam)
    if f.basis == "p":
        return _evaluate_p(f, lambda k: diagram_power_sum(lam, k))
    f = to_schur(f)
    return sum((c * schur_value(nu, lam) for nu, c in f.items()), Fraction(0))


@dataclass(frozen=True)
class ThomaPoint:
    """A point ``(alpha, beta, r)`` of the Thoma cone with finitely many nonzero coordinates."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(rational(a) for a in self.alpha if rational(a) != 0))
        object.__setattr__(self, "beta", tuple(rational(b) for b in self.beta if rational(b) != 0))
        object.__setattr__(self, "r", rational(self.r))
        for seq in (self.alpha, self.beta):
            if any(x < 0 for x in seq) or any(x < y for x, y in zip(seq, seq[1:])):
                raise DomainError("Thoma coordinates must be nonnegative and weakly decreasing")
        if sum(self.alpha) + sum(self.beta) > self.r:
            raise DomainError("sum(alpha) + sum(beta) must not exceed r")

    @property
    def gamma(self) -> Fraction:
        return self.r - sum(self.alpha) - sum(self.beta)

    def power_sum(self, k: int) -> Fraction:
        if k == 1:
            return self.r
        return sum((a**k for a in self.alpha), Fraction(0)) + (-1) ** (k - 1) * sum(
            (b**k for b in self.beta), Fraction(0)
        )

    def moment(self, k: int) -> Fraction:
        """k-th moment of the atomic measure ``sum a d_a + sum b d_{-b} + gamma d_0``."""
        atoms = sum((a * a**k for a in self.alpha), Fraction(0)) + sum((b * (-b) ** k for b in self.beta), Fraction(0))
        return atoms + (self.gamma if k == 0 else 0)


def evaluate_at_thoma(f: SymElement, w: ThomaPoint) -> Fraction:
    """Value of ``f`` at a Thoma-cone point: ``p_1 -> r``, ``p_k`` -> super power sums."""
    return _evaluate_p(convert(f, "p"), w.power_sum)


def thoma_moment_check(w: ThomaPoint, k: int) -> tuple[Fraction, Fraction]:
    """Return ``(p_{k+1}(w), k-th moment of m_w)``; the two coincide.

    ``k = 0`` compares the total mass of ``m_w`` with ``p_1(w) = r``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return w.power_sum(k + 1), w.moment(k)
