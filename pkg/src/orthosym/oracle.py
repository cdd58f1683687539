"""Independent ground truth from classical and N-variate orthogonal polynomials.

Nothing here goes through the Sym machinery except the two specialization
maps ``pi_N`` (``p_k -> sum x_i^k``) and ``pi'_N``
(``p_k -> sum (x_i - N + 1/2)^k - (-i + 1/2)^k``), which are the bridges the
checks are about.  N-variate polynomials are ratios of determinants divided
by the Vandermonde with exact synthetic division.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import comb, factorial, prod
from typing import Callable, Iterable, Mapping

from ._linalg import lagrange_at
from .errors import DomainError, ParameterError
from .partitions import Partition, contains, dim, partitions_with_length, skew_dim
from .scalars import ParamPoint, format_rational, rational
from .sym import SymElement, convert

UNI_FAMILIES = ("monomial", "falling", "laguerre", "meixner", "charlier")


def rising(x, n: int) -> Fraction:
    return prod((Fraction(x) + i for i in range(n)), start=Fraction(1))


def falling_int(n: int, m: int) -> int:
    return prod(range(n - m + 1, n + 1)) if m <= n else 0


@cache
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# ------------------------------------------------------------- univariate


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = rational(other)
            return UniPoly(c * x for x in self.coeffs)
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, a, b) -> "UniPoly":
        """``f(a x + b)``."""
        out = UniPoly()
        lin = UniPoly([b, a])
        power = UniPoly([1])
        for c in self.coeffs:
            out = out + c * power
            power = power * lin
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def to_falling(self) -> list[Fraction]:
        """Coefficients in the basis ``x^{(down) m}`` (x^n = sum S(n,k) x^{down k})."""
        out = [Fraction(0)] * len(self.coeffs)
        for n, c in enumerate(self.coeffs):
            for k in range(n + 1):
                out[k] += c * stirling2(n, k)
        return out

    @classmethod
    def from_falling(cls, coeffs: Iterable) -> "UniPoly":
        acc = UniPoly()
        for m, c in enumerate(coeffs):
            if c:
                acc = acc + Fraction(c) * falling(m)
        return acc

    def __repr__(self):
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"


@cache
def falling(m: int) -> UniPoly:
    out = UniPoly([1])
    for i in range(m):
        out = out * UniPoly([-i, 1])
    return out


def _require(value, name):
    if value is None:
        raise ParameterError(f"{name} is required")
    return value


def uni_b(p: ParamPoint) -> Fraction:
    """Univariate parameter ``b``: read from split parameters ``(N, N + b - 1)``."""
    return p.b


def uni(family: str, n: int, p: ParamPoint | None = None) -> UniPoly:
    """Monic classical polynomial of degree n."""
    if family == "monomial":
        return UniPoly([0] * n + [1])
    if family == "falling":
        return falling(n)
    if family == "laguerre":
        b = uni_b(p)
        return rising(b, n) * UniPoly(
            (-1) ** (n - m) * Fraction(falling_int(n, m), rising(b, m) * factorial(m)) for m in range(n + 1)
        )
    if family == "meixner":
        b, xi = uni_b(p), _require(p.xi, "xi")
        q = xi / (xi - 1)
        return UniPoly.from_falling(
            rising(b, n) * q ** (n - m) * Fraction(falling_int(n, m), rising(b, m) * factorial(m)) for m in range(n + 1)
        )
    if family == "charlier":
        theta = _require(p.theta, "theta")
        return UniPoly.from_falling((-theta) ** (n - m) * Fraction(falling_int(n, m), factorial(m)) for m in range(n + 1))
    raise ValueError(f"unknown family {family!r}")


def uni_operator_apply(family: str, f: UniPoly, p: ParamPoint) -> UniPoly:
    """Operator action through its basis formulas: monomials for Laguerre,
    falling factorials for Meixner and Charlier."""
    if family == "laguerre":
        b = uni_b(p)
        out = [Fraction(0)] * max(len(f.coeffs), 1)
        for n, c in enumerate(f.coeffs):
            out[n] += -n * c
            if n:
                out[n - 1] += c * n * (n + b - 1)
        return UniPoly(out)
    g = f.to_falling()
    out = [Fraction(0)] * max(len(g), 1)
    if family == "meixner":
        b = uni_b(p)
        r = p.xi_ratio()
        for n, c in enumerate(g):
            out[n] += -n * c
            if n:
                out[n - 1] += c * r * n * (n + b - 1)
    elif family == "charlier":
        theta = _require(p.theta, "theta")
        for n, c in enumerate(g):
            out[n] += -n * c
            if n:
                out[n - 1] += c * theta * n
    else:
        raise ValueError(f"unknown family {family!r}")
    return UniPoly.from_falling(out)


def uni_operator_direct(family: str, f: UniPoly, p: ParamPoint) -> UniPoly:
    """The same operators written as differential / difference operators."""
    x = UniPoly.x()
    if family == "laguerre":
        b = uni_b(p)
        return x * f.derivative().derivative() + (UniPoly([b]) - x) * f.derivative()
    up, down = f.compose_affine(1, 1), f.compose_affine(1, -1)
    if family == "meixner":
        b, xi = uni_b(p), _require(p.xi, "xi")
        k = 1 / (1 - xi)
        bx = UniPoly([b, 1])
        return k * (xi * bx * up + x * down - (xi * bx + x) * f)
    if family == "charlier":
        theta = _require(p.theta, "theta")
        return theta * up + x * down - (UniPoly([theta]) + x) * f
    raise ValueError(f"unknown family {family!r}")


def moment(family: str, k: int, p: ParamPoint) -> Fraction:
    """``E[x^k]`` under gamma(b), negative binomial(b, xi) or Poisson(theta)."""
    if family == "laguerre":
        return rising(uni_b(p), k)
    if family == "meixner":
        b, r = uni_b(p), p.xi_ratio()
        return sum((stirling2(k, j) * rising(b, j) * r**j for j in range(k + 1)), Fraction(0))
    if family == "charlier":
        theta = _require(p.theta, "theta")
        return sum((stirling2(k, j) * theta**j for j in range(k + 1)), Fraction(0))
    raise ValueError(f"unknown family {family!r}")


def expectation(family: str, f: UniPoly, p: ParamPoint) -> Fraction:
    """Integrate f against the weight.  Discrete weights use factorial moments."""
    if family == "laguerre":
        b = uni_b(p)
        return sum((c * rising(b, k) for k, c in enumerate(f.coeffs)), Fraction(0))
    g = f.to_falling()
    if family == "meixner":
        b, r = uni_b(p), p.xi_ratio()
        return sum((c * rising(b, k) * r**k for k, c in enumerate(g)), Fraction(0))
    theta = _require(p.theta, "theta")
    return sum((c * theta**k for k, c in enumerate(g)), Fraction(0))


def uni_norm_closed(family: str, n: int, p: ParamPoint) -> Fraction:
    if family == "laguerre":
        return rising(uni_b(p), n) * factorial(n)
    if family == "meixner":
        xi = _require(p.xi, "xi")
        return xi**n * (1 - xi) ** (-2 * n) * rising(uni_b(p), n) * factorial(n)
    if family == "charlier":
        return _require(p.theta, "theta") ** n * factorial(n)
    raise ValueError(f"unknown family {family!r}")


def uni_norm(family: str, n: int, p: ParamPoint) -> tuple[Fraction, Fraction]:
    """``(closed form, moment integration)`` for the squared norm of the n-th polynomial."""
    f = uni(family, n, p)
    return uni_norm_closed(family, n, p), expectation(family, f * f, p)


def uni_scaled_meixner(n: int, b, eps) -> UniPoly:
    """``eps^n M_n(x / eps)`` with ``xi = 1 - eps``."""
    eps = rational(eps)
    p = ParamPoint.degenerate(1, b, xi=1 - eps)
    return eps**n * uni("meixner", n, p).compose_affine(1 / eps, 0)


def uni_scaling_limit_check(n: int, b, eps_list: Iterable = ("1/10", "1/100", "1/1000")) -> dict:
    """Deviations of ``eps^n M_n(x/eps)`` from ``L_n(x)`` and a certificate that
    each coefficient is ``eps`` times a polynomial in ``eps``.

    Each deviation coefficient is a polynomial in eps of degree at most
    ``2n``; its interpolant through enough nodes is evaluated at 0.
    """
    b = rational(b)
    nodes = [rational(e) for e in eps_list]
    k = 2
    while len(nodes) < 2 * n + 2:
        extra = Fraction(1, k + 1)
        if extra not in nodes:
            nodes.append(extra)
        k += 1
    target = uni("laguerre", n, ParamPoint.degenerate(1, b))
    devs = []
    for e in nodes:
        d = uni_scaled_meixner(n, b, e) - target
        devs.append(list(d.coeffs) + [Fraction(0)] * (n + 1 - len(d.coeffs)))
    at_zero = [lagrange_at(nodes, [d[i] for d in devs], 0) for i in range(n + 1)]
    requested = len(list(eps_list))
    return {
        "n": n,
        "b": format_rational(b),
        "eps": [format_rational(e) for e in nodes[:requested]],
        "deviations": [[format_rational(c) for c in d] for d in devs[:requested]],
        "max_abs_deviation": [format_rational(max((abs(c) for c in d), default=Fraction(0))) for d in devs[:requested]],
        "value_at_zero": [format_rational(v) for v in at_zero],
        "divisible": all(v == 0 for v in at_zero),
    }


# --------------------------------------------------------------- N-variate


Exponent = tuple[int, ...]


class NVarPoly:
    """Sparse polynomial in ``x_1..x_N`` with Fraction coefficients."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.N = N
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, N: int, c) -> "NVarPoly":
        return cls(N, {(0,) * N: rational(c)})

    @classmethod
    def var(cls, N: int, i: int) -> "NVarPoly":
        e = [0] * N
        e[i] = 1
        return cls(N, {tuple(e): Fraction(1)})

    @classmethod
    def from_uni(cls, N: int, i: int, f: UniPoly) -> "NVarPoly":
        out = {}
        for k, c in enumerate(f.coeffs):
            e = [0] * N
            e[i] = k
            out[tuple(e)] = c
        return cls(N, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, NVarPoly):
            other = NVarPoly.constant(self.N, other)
        out = defaultdict(Fraction, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return NVarPoly(self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return NVarPoly(self.N, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NVarPoly):
            c = rational(other)
            return NVarPoly(self.N, {k: c * v for k, v in self.terms.items()})
        out: dict = defaultdict(Fraction)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return NVarPoly(self.N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = NVarPoly.constant(self.N, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NVarPoly.constant(self.N, other)
        return isinstance(other, NVarPoly) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, tuple(sorted(self.terms.items()))))

    def __call__(self, x: Iterable) -> Fraction:
        x = [Fraction(v) for v in x]
        return sum((c * prod((xi**e for xi, e in zip(x, k)), start=Fraction(1)) for k, c in self.terms.items()), Fraction(0))

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def permute(self, perm: tuple[int, ...]) -> "NVarPoly":
        """Relabel variables: ``x_i -> x_{perm[i]}``."""
        out = {}
        for k, v in self.terms.items():
            e = [0] * self.N
            for i, a in enumerate(k):
                e[perm[i]] = a
            out[tuple(e)] = v
        return NVarPoly(self.N, out)

    def is_symmetric(self) -> bool:
        return all(self.permute(p) == self for p in permutations(range(self.N)))

    def divide_linear(self, i: int, j: int) -> "NVarPoly":
        """Exact quotient by ``x_i - x_j``; raises if the remainder is nonzero.

        Uses ``x_i^a = (x_i - x_j) sum_t x_i^{a-1-t} x_j^t + x_j^a``.
        """
        quotient: dict = defaultdict(Fraction)
        remainder: dict = defaultdict(Fraction)
        for k, c in self.terms.items():
            a = k[i]
            base = list(k)
            base[i] = 0
            for t in range(a):
                e = list(base)
                e[i] = a - 1 - t
                e[j] += t
                quotient[tuple(e)] += c
            e = list(base)
            e[j] += a
            remainder[tuple(e)] += c
        if any(v != 0 for v in remainder.values()):
            raise ArithmeticError(f"not divisible by x_{i + 1} - x_{j + 1}")
        return NVarPoly(self.N, quotient)

    def apply_in_var(self, i: int, op: Callable[[UniPoly], UniPoly]) -> "NVarPoly":
        """Apply a linear operator on univariate polynomials to variable ``x_i``."""
        groups: dict = defaultdict(lambda: defaultdict(Fraction))
        for k, c in self.terms.items():
            rest = k[:i] + (0,) + k[i + 1 :]
            groups[rest][k[i]] += c
        out = NVarPoly(self.N)
        for rest, coeffs in groups.items():
            f = UniPoly([coeffs.get(d, 0) for d in range(max(coeffs) + 1)])
            g = op(f)
            for d, c in enumerate(g.coeffs):
                if c:
                    e = list(rest)
                    e[i] = d
                    out.terms[tuple(e)] = out.terms.get(tuple(e), Fraction(0)) + c
        return NVarPoly(self.N, out.terms)

    def __repr__(self):
        return f"NVarPoly(N={self.N}, {len(self.terms)} terms)"


def vandermonde(N: int) -> NVarPoly:
    out = NVarPoly.constant(N, 1)
    for i in range(N):
        for j in range(i + 1, N):
            out = out * (NVarPoly.var(N, i) - NVarPoly.var(N, j))
    return out


def divide_by_vandermonde(P: NVarPoly) -> NVarPoly:
    for i in range(P.N):
        for j in range(i + 1, P.N):
            P = P.divide_linear(i, j)
    return P


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def poly_det(matrix: list[list[NVarPoly]]) -> NVarPoly:
    N = len(matrix)
    total = NVarPoly(matrix[0][0].N) if N else NVarPoly(0, {(): 1})
    for perm in permutations(range(N)):
        term = NVarPoly.constant(matrix[0][0].N, _perm_sign(perm))
        for r, c in enumerate(perm):
            term = term * matrix[r][c]
        total = total + term
    return total


def _uni_for(family: str) -> str:
    return {"schur": "monomial", "factorial": "falling"}.get(family, family)


def nvariate(family: str, nu, N: int, p: ParamPoint | None = None) -> NVarPoly:
    """``det[phi_{nu_i + N - i}(x_j)] / V_N`` for the given univariate family.

    ``family`` is one of schur, factorial, laguerre, meixner, charlier.
    """
    nu = Partition(nu)
    if len(nu) > N:
        raise DomainError(f"l(nu) = {len(nu)} exceeds N = {N}")
    if N > 4:
        raise DomainError("N is capped at 4")
    rows = list(nu) + [0] * (N - len(nu))
    uf = _uni_for(family)
    polys = {}
    matrix = []
    for i in range(N):
        n_i = rows[i] + N - 1 - i
        if n_i not in polys:
            polys[n_i] = uni(uf, n_i, p)
        matrix.append([NVarPoly.from_uni(N, j, polys[n_i]) for j in range(N)])
    return divide_by_vandermonde(poly_det(matrix))


def lemma_product(nu, mu, N: int, b) -> Fraction:
    """``prod_i n_i! (b)_{n_i} / (m_i! (b)_{m_i})`` with ``n_i = nu_i + N - i``."""
    b = rational(b)
    nu_rows = list(nu) + [0] * (N - len(nu))
    mu_rows = list(mu) + [0] * (N - len(mu))
    out = Fraction(1)
    for i in range(N):
        n, m = nu_rows[i] + N - 1 - i, mu_rows[i] + N - 1 - i
        out *= Fraction(factorial(n), factorial(m)) * rising(b, n) / rising(b, m)
    return out


def expansion_check(family: str, nu, N: int, p: ParamPoint) -> tuple[bool, dict]:
    """Compare the determinant construction with the explicit expansion over
    Schur (Laguerre) or factorial Schur (Meixner) polynomials."""
    nu = Partition(nu)
    b = uni_b(p)
    lhs = nvariate(family, nu, N, p)
    basis = "schur" if family == "laguerre" else "factorial"
    t = Fraction(1) if family == "laguerre" else p.xi_ratio()
    rhs = NVarPoly(N)
    for mu in partitions_with_length(nu.size, N):
        if not contains(mu, nu):
            continue
        k = nu.size - mu.size
        c = (-t) ** k * Fraction(skew_dim(nu, mu), factorial(k)) * lemma_product(nu, mu, N, b)
        rhs = rhs + c * nvariate(basis, mu, N)
    diff = lhs - rhs
    return diff.is_zero(), {"nonzero_terms": len(diff.terms)}


# ------------------------------------------------------ specialization maps


def _specialize_p(f: SymElement, N: int, power: Callable[[int], NVarPoly]) -> NVarPoly:
    fp = convert(f, "p")
    cache_: dict[int, NVarPoly] = {}
    out = NVarPoly(N)
    for rho, c in fp.items():
        term = NVarPoly.constant(N, c)
        for k in rho:
            if k not in cache_:
                cache_[k] = power(k)
            term = term * cache_[k]
        out = out + term
    return out


def pi_N(f: SymElement, N: int) -> NVarPoly:
    """``p_k -> x_1^k + ... + x_N^k``."""
    return _specialize_p(f, N, lambda k: sum((NVarPoly.var(N, i) ** k for i in range(N)), NVarPoly(N)))


def pi_prime_N(f: SymElement, N: int) -> NVarPoly:
    """``p_k -> sum_i (x_i - N + 1/2)^k - (-i + 1/2)^k``."""
    half = Fraction(1, 2)

    def power(k):
        acc = NVarPoly(N)
        for i in range(N):
            acc = acc + (NVarPoly.var(N, i) + (half - N)) ** k - (half - (i + 1)) ** k
        return acc

    return _specialize_p(f, N, power)


def diagram_coordinates(lam, N: int) -> tuple[int, ...]:
    lam = Partition(lam)
    rows = list(lam) + [0] * (N - len(lam))
    return tuple(rows[i] + N - 1 - i for i in range(N))


def specialization_check(nu, N: int, p: ParamPoint, pointwise_size: int = 4) -> dict:
    """Check both analytic-continuation characterizations at ``(z, z') = (N, N + b - 1)``.

    Laguerre: ``pi_N(L_nu)`` equals the N-variate Laguerre polynomial (or 0).
    Meixner: ``pi'_N(M_nu)`` equals the N-variate Meixner polynomial (or 0), and
    values on diagrams in Y(N) agree pointwise.
    """
    from .bases import laguerre, meixner
    from .sym import evaluate_at_diagram

    nu = Partition(nu)
    b = uni_b(p)
    q = ParamPoint.degenerate(N, b, xi=p.xi)
    fits = len(nu) <= N
    lag = pi_N(laguerre(nu, q).in_schur, N)
    lag_ok = lag == (nvariate("laguerre", nu, N, q) if fits else NVarPoly(N))
    out = {"nu": list(nu), "N": N, "fits": fits, "laguerre": lag_ok}
    if q.xi is not None:
        m = meixner(nu, q).in_schur
        poly = pi_prime_N(m, N)
        target = nvariate("meixner", nu, N, q) if fits else NVarPoly(N)
        pointwise = all(
            evaluate_at_diagram(m, lam) == target(diagram_coordinates(lam, N))
            for lam in partitions_with_length(pointwise_size, N)
        )
        out["meixner"] = poly == target
        out["meixner_pointwise"] = pointwise
    out["ok"] = all(v for k, v in out.items() if k in ("laguerre", "meixner", "meixner_pointwise"))
    return out


# ------------------------------------------------------------ inner products


def _monomial_expectation(family: str, p: ParamPoint) -> Callable[[int], Fraction]:
    memo: dict[int, Fraction] = {}

    def f(k):
        if k not in memo:
            memo[k] = moment(family, k, p)
        return memo[k]

    return f


def nvariate_inner_product(family: str, f: NVarPoly, g: NVarPoly, N: int, p: ParamPoint) -> Fraction:
    """``(F, G)_N = 1/N! prod 1/(phi_{N-i}, phi_{N-i}) int F G V^2 prod w(dx_i)``.

    The integral is expanded into monomials and integrated coordinatewise
    with the exact moments of the weight.
    """
    integrand = f * g * vandermonde(N) ** 2
    mom = _monomial_expectation(family, p)
    total = sum(
        (c * prod((mom(a) for a in k), start=Fraction(1)) for k, c in integrand.terms.items()),
        Fraction(0),
    )
    denom = factorial(N) * prod((uni_norm_closed(family, N - i, p) for i in range(1, N + 1)), start=Fraction(1))
    return total / denom


def nvariate_norm_closed(family: str, nu, N: int, p: ParamPoint) -> Fraction:
    nu = Partition(nu)
    b = uni_b(p)
    rows = list(nu) + [0] * (N - len(nu))
    base = prod((rising(N - i + 1, rows[i - 1]) * rising(N + b - i, rows[i - 1]) for i in range(1, N + 1)), start=Fraction(1))
    if family == "laguerre":
        return base
    if family == "meixner":
        xi = _require(p.xi, "xi")
        return xi**nu.size / (1 - xi) ** (2 * nu.size) * base
    raise ValueError(f"unknown family {family!r}")


# ------------------------------------------------------- N-variate operators


def nvariate_operator_apply(family: str, F: NVarPoly, p: ParamPoint) -> NVarPoly:
    """``D_N F = V^{-1} (sum_i D^{(i)}) (V F) + N(N-1)/2 F``."""
    N = F.N
    V = vandermonde(N)
    G = V * F
    acc = NVarPoly(N)
    for i in range(N):
        acc = acc + G.apply_in_var(i, lambda f: uni_operator_direct(family, f, p))
    return divide_by_vandermonde(acc) + Fraction(N * (N - 1), 2) * F


def schur_action_check(family: str, nu, N: int, p: ParamPoint) -> bool:
    """``D_N`` on (factorial) Schur polynomials versus the row-lowering formula
    ``-|nu| S_nu + t sum_i n_i (n_i + b - 1) S_{nu - e_i}``."""
    nu = Partition(nu)
    b = uni_b(p)
    basis = "schur" if family == "laguerre" else "factorial"
    t = Fraction(1) if family == "laguerre" else p.xi_ratio()
    lhs = nvariate_operator_apply(family, nvariate(basis, nu, N), p)
    rows = list(nu) + [0] * (N - len(nu))
    rhs = -nu.size * nvariate(basis, nu, N)
    for i in range(N):
        lowered = rows[:i] + [rows[i] - 1] + rows[i + 1 :]
        if lowered[i] < 0 or (i + 1 < N and lowered[i] < lowered[i + 1]):
            continue
        n_i = rows[i] + N - 1 - i
        rhs = rhs + t * n_i * (n_i + b - 1) * nvariate(basis, Partition(lowered), N)
    return lhs == rhs


def sym_operator_check(family: str, nu, N: int, p: ParamPoint) -> bool:
    """``D_N`` on the image of ``B_nu`` equals the image of the Sym operator at
    ``(z, z') = (N, N + b - 1)`` (``pi_N`` for Laguerre, ``pi'_N`` for Meixner)."""
    from .bases import apply_operator
    from .fs import FS
    from .sym import S

    nu = Partition(nu)
    b = uni_b(p)
    q = ParamPoint.degenerate(N, b, xi=p.xi)
    if family == "laguerre":
        elem, spec = S(*nu), pi_N
    else:
        elem, spec = FS(*nu), pi_prime_N
    image = apply_operator(family, q, elem)
    lhs = nvariate_operator_apply(family, spec(elem, N), q)
    return lhs == spec(convert(image, "schur"), N)


def ordered_points(N: int, max_coord: int) -> list[tuple[int, ...]]:
    """Points of ``Z^N_{+,ord}`` with coordinates at most ``max_coord``."""
    out = []

    def rec(prefix, upper):
        if len(prefix) == N:
            out.append(tuple(prefix))
            return
        for v in range(upper, -1, -1):
            rec(prefix + [v], v - 1)

    rec([], max_coord)
    return out


def _vdm_value(x) -> Fraction:
    return Fraction(prod((x[i] - x[j] for i in range(len(x)) for j in range(i + 1, len(x))), start=1))


def difference_coefficients(x, p: ParamPoint) -> tuple[list[Fraction], list[Fraction], Fraction]:
    """``(A_i(x), B_i(x), C(x))`` of the N-variate Meixner difference operator."""
    b, xi = uni_b(p), _require(p.xi, "xi")
    N = len(x)
    v = _vdm_value(x)
    A, B = [], []
    for i in range(N):
        up = list(x)
        up[i] += 1
        down = list(x)
        down[i] -= 1
        A.append(xi * (b + x[i]) / (1 - xi) * _vdm_value(up) / v)
        B.append(Fraction(x[i]) / (1 - xi) * _vdm_value(down) / v)
    C = (xi * b * N + (1 + xi) * sum(x)) / (1 - xi) - Fraction(N * (N - 1), 2)
    return A, B, C


def difference_eigen_check(nu, N: int, p: ParamPoint, max_coord: int = 7) -> bool:
    """Pointwise ``D^ME_N M_nu = -|nu| M_nu`` on ordered integer points."""
    nu = Partition(nu)
    f = nvariate("meixner", nu, N, p)
    for x in ordered_points(N, max_coord):
        A, B, C = difference_coefficients(x, p)
        acc = -C * f(x)
        for i in range(N):
            up = list(x)
            up[i] += 1
            down = list(x)
            down[i] -= 1
            if A[i]:
                acc += A[i] * f(up)
            if B[i]:
                acc += B[i] * f(down)
        if acc != -nu.size * f(x):
            return False
    return True


def frobenius_dimension_check(lam, N: int) -> tuple[Fraction, Fraction]:
    """``(dim(lam)/|lam|!, V_N(x) / prod x_i!)`` at ``x_i = lam_i + N - i``."""
    lam = Partition(lam)
    x = diagram_coordinates(lam, N)
    return Fraction(dim(lam), factorial(lam.size)), _vdm_value(x) / prod((factorial(a) for a in x), start=1)


def restricted_rates_check(lam, N: int, p: ParamPoint) -> bool:
    """At ``z = N`` the Young-graph rates out of ``Y(N)`` vanish and the rest
    match the N-variate difference coefficients row by row."""
    from .measures import meixner_rates

    lam = Partition(lam)
    q = ParamPoint.degenerate(N, uni_b(p), xi=p.xi)
    table = meixner_rates(lam, q)
    x = diagram_coordinates(lam, N)
    A, B, C = difference_coefficients(x, q)
    if C != table.total:
        return False
    for box, a in table.up.items():
        if box.row > N:
            if a != 0:
                return False
        elif a != A[box.row - 1]:
            return False
    for box, bval in table.down.items():
        if bval != B[box.row - 1]:
            return False
    for i in range(N):
        rows = list(lam) + [0] * (N - len(lam))
        can_add = i == 0 or rows[i - 1] > rows[i]
        if not can_add and A[i] != 0:
            return False
        can_remove = rows[i] > (rows[i + 1] if i + 1 < N else 0)
        if not can_remove and B[i] != 0:
            return False
    return True
