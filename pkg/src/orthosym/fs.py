"""Frobenius-Schur functions.

``FS_nu`` is the inhomogeneous symmetric function whose value at a diagram
``lam`` is

    FS_nu(lam) = |lam|! / (|lam| - |nu|)! * dim(lam/nu) / dim(lam)   if nu in lam
               = 0                                                   otherwise.

Its Schur expansion is recovered by interpolation: ``FS_nu = S_nu + lower``
and it vanishes on every diagram of size below ``|nu|``.  Subtracting
multiples of already-known ``FS_mu`` node by node (nodes in canonical order)
only requires the diagonal values ``FS_lam(lam) = |lam|! / dim(lam)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import Partition, dim, partitions_up_to, skew_dim, sort_key
from .sym import DEFAULT_DEGREE_CAP, SymElement, evaluate_at_diagram


def fs_value(nu, lam) -> Fraction:
    nu, lam = Partition(nu), Partition(lam)
    sd = skew_dim(lam, nu)
    if sd == 0:
        return Fraction(0)
    return Fraction(factorial(lam.size), factorial(lam.size - nu.size)) * Fraction(sd, dim(lam))


@dataclass(frozen=True)
class FSExpansion:
    nu: Partition
    in_schur: SymElement
    solved_rank: int


@cache
def fs_in_schur(nu) -> FSExpansion:
    nu = Partition(nu)
    cap = max(DEFAULT_DEGREE_CAP, nu.size)
    f = SymElement.basis_element("schur", nu, cap)
    nodes = partitions_up_to(nu.size - 1)
    for lam in nodes:
        residual = evaluate_at_diagram(f, lam)
        if residual:
            diag = fs_value(lam, lam)
            f = f - (residual / diag) * fs_in_schur(lam).in_schur
    return FSExpansion(nu, SymElement("schur", f.terms, cap), len(nodes))


def fs_convert(f: SymElement) -> SymElement:
    """FS-basis element -> Schur-basis element."""
    if f.basis != "fs":
        raise ValueError("expected an FS-basis element")
    out: dict = defaultdict(Fraction)
    for nu, c in f.items():
        for mu, d in fs_in_schur(nu).in_schur.items():
            out[mu] += c * d
    return SymElement("schur", out, f.degree_cap)


def schur_to_fs(f: SymElement) -> SymElement:
    """Schur-basis element -> FS-basis element (peel off top labels)."""
    if f.basis != "schur":
        raise ValueError("expected a Schur-basis element")
    rest = dict(f.terms)
    out: dict = {}
    while rest:
        top = max(rest, key=sort_key)
        c = rest[top]
        out[top] = c
        for mu, d in fs_in_schur(top).in_schur.items():
            rest[mu] = rest.get(mu, 0) - c * d
            if rest[mu] == 0:
                del rest[mu]
    return SymElement("fs", out, f.degree_cap)


def FS(*rows, degree_cap: int = DEFAULT_DEGREE_CAP) -> SymElement:
    """Shorthand for the basis element ``FS_rows``."""
    return SymElement.basis_element("fs", rows, degree_cap)
