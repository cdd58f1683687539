"""Exact rationals and the parameter point (z, z', xi, theta).

Every formula in the package depends on ``(z, z')`` only through the box
factors ``(z + c)(z' + c) = c**2 + c*s + v`` with ``s = z + z'`` and
``v = z z'``.  A :class:`ParamPoint` therefore stores ``(s, v)`` and keeps
``z, z'`` only when they are themselves rational ("split" mode).  This
covers conjugate pairs ``z' = conj(z)`` with rational ``s, v``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import ParameterError
from .partitions import Partition, paired_pochhammer


def rational(x) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and Fractions to a Fraction.

    Floats are rejected so that no binary rounding leaks into exact code.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass a string like '5/2'")
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    return Fraction(x)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ParamPoint:
    """Exact parameter values.

    ``s`` and ``v`` are always set when z-data is present; ``z`` and ``zp``
    are set only in split mode.  ``xi`` and ``theta`` are optional.
    """

    s: Optional[Fraction] = None
    v: Optional[Fraction] = None
    z: Optional[Fraction] = None
    zp: Optional[Fraction] = None
    xi: Optional[Fraction] = None
    theta: Optional[Fraction] = None

    def __post_init__(self):
        if self.v is not None and self.v == 0:
            raise ParameterError("z z' must be nonzero")
        if self.theta is not None and self.theta <= 0:
            raise ParameterError("theta must be positive")

    @classmethod
    def split(cls, z, zp, xi=None, theta=None) -> "ParamPoint":
        z, zp = rational(z), rational(zp)
        return cls(
            s=z + zp,
            v=z * zp,
            z=z,
            zp=zp,
            xi=None if xi is None else rational(xi),
            theta=None if theta is None else rational(theta),
        )

    @classmethod
    def symmetric(cls, s, v, xi=None, theta=None) -> "ParamPoint":
        s, v = rational(s), rational(v)
        z = zp = None
        root = rational_sqrt(s * s - 4 * v)
        if root is not None:
            z, zp = (s + root) / 2, (s - root) / 2
        return cls(
            s=s,
            v=v,
            z=z,
            zp=zp,
            xi=None if xi is None else rational(xi),
            theta=None if theta is None else rational(theta),
        )

    @classmethod
    def degenerate(cls, N: int, b, xi=None) -> "ParamPoint":
        """The point ``(z, z') = (N, N + b - 1)`` tied to N-variate ensembles."""
        b = rational(b)
        return cls.split(N, N + b - 1, xi=xi)

    @classmethod
    def charlier(cls, theta) -> "ParamPoint":
        return cls(theta=rational(theta))

    @property
    def mode(self) -> str:
        if self.s is None:
            return "none"
        return "split" if self.z is not None else "symmetric"

    @property
    def discriminant(self) -> Fraction:
        return self.s * self.s - 4 * self.v

    @property
    def b(self) -> Fraction:
        """Univariate parameter ``b = z' - z + 1`` for points of the form (N, N+b-1)."""
        if self.z is None:
            raise ParameterError("b requires split parameters")
        return self.zp - self.z + 1

    def has_z(self) -> bool:
        return self.s is not None

    def require_z(self):
        if self.s is None:
            raise ParameterError("this operation needs (z, z') parameters")

    def pair(self, c: int) -> Fraction:
        """``(z + c)(z' + c)``."""
        self.require_z()
        return self.v + c * self.s + c * c

    def pochhammer(self, nu, mu=()) -> Fraction:
        """``(z)_{nu/mu} (z')_{nu/mu}``."""
        self.require_z()
        return paired_pochhammer(self.s, self.v, Partition(nu), Partition(mu))

    def xi_ratio(self) -> Fraction:
        """``xi / (1 - xi)``."""
        if self.xi is None:
            raise ParameterError("xi is required")
        if self.xi == 1:
            raise ParameterError("xi = 1 is not allowed")
        return self.xi / (1 - self.xi)

    def with_xi(self, xi) -> "ParamPoint":
        return replace(self, xi=rational(xi))

    def negated(self) -> "ParamPoint":
        """The point ``(-z, -z')``."""
        return replace(
            self,
            s=-self.s,
            z=None if self.z is None else -self.z,
            zp=None if self.zp is None else -self.zp,
        )

    def swapped(self) -> "ParamPoint":
        return replace(self, z=self.zp, zp=self.z)

    def to_json(self) -> dict:
        out = {}
        for name in ("z", "zp", "s", "v", "xi", "theta"):
            value = getattr(self, name)
            if value is not None:
                out[name] = format_rational(value)
        return out


@dataclass(frozen=True)
class SeriesClass:
    tag: str
    witness: Optional[tuple[int, Fraction]] = None


def _degenerate_witness(z: Fraction, zp: Fraction):
    for sign in (1, -1):
        for a, c in ((z, zp), (zp, z)):
            a, c = sign * a, sign * c
            if a.denominator == 1 and a >= 1:
                N = int(a)
                b = c - N + 1
                if b > 0:
                    return N, b
    return None


def classify(p: ParamPoint) -> SeriesClass:
    """Admissibility class of ``(z, z')``: principal, complementary, degenerate or inadmissible."""
    p.require_z()
    disc = p.discriminant
    if disc < 0:
        return SeriesClass("principal")
    if p.z is None:
        # real but irrational roots: never integers, possibly inside one unit interval
        centre = p.s / 2
        k = centre.numerator // centre.denominator
        f = lambda t: t * t - p.s * t + p.v  # noqa: E731
        if k < centre < k + 1 and f(k) > 0 and f(k + 1) > 0:
            return SeriesClass("complementary")
        return SeriesClass("inadmissible")
    z, zp = p.z, p.zp
    if z == zp and z.denominator != 1:
        # z' = conj(z) for real non-integer z
        return SeriesClass("principal")
    k = z.numerator // z.denominator
    if z.denominator != 1 and zp.denominator != 1 and k < zp < k + 1:
        return SeriesClass("complementary")
    witness = _degenerate_witness(z, zp)
    if witness is not None:
        return SeriesClass("degenerate", witness)
    return SeriesClass("inadmissible")


def admissible_product(p: ParamPoint, nu) -> Fraction:
    """``(z)_nu (z')_nu``; nonnegative for admissible points."""
    return p.pochhammer(nu)
