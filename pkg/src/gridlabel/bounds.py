"""Bounds on the grid labeling number, with exact rational ratios.

The lower bound comes from packing the radius-p ball: its vertices are
pairwise within the reuse distance, so they carry distinct labels, and
chaining the sorted labels forces a minimum spread. The closed form is

    (2/3) p (p+1) (2p+1) + 2   for even k = 2p,
    (2/3) p (p+1) (2p+3) + 2   for odd  k = 2p+1.

The odd expression is fractional when p = 1 (mod 3); the labeling number
is an integer, so its ceiling is reported as the usable bound and the
exact rational is kept for transparency.

The upper bound is the modulus c of the constructive scheme. Ratios are
exact rationals built on the ceiled lower bound; decimal renderings are
display-only. All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scheme import UnsupportedK, lambda_ub

EVEN_K = "even-k"
ODD_K = "odd-k"


@dataclass(frozen=True)
class LowerBound:
    exact: Fraction
    ceiled: int


@dataclass(frozen=True)
class BoundsRecord:
    k: int
    lower_exact: Fraction
    lower: int
    upper: Optional[int]
    ratio: Optional[Fraction]


def lambda_lb(k: int) -> LowerBound:
    """Closed-form lower bound for k >= 1 (k = 2 included)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2 == 0:
        p = k // 2
        exact = Fraction(2, 3) * p * (p + 1) * (2 * p + 1) + 2
    else:
        p = (k - 1) // 2
        exact = Fraction(2, 3) * p * (p + 1) * (2 * p + 3) + 2
    return LowerBound(exact=exact, ceiled=math.ceil(exact))


def triangular_convolution(p: int) -> int:
    """Sum of m*(p+1-m) for m = 1..p, by direct summation.

    Equals p(p+1)(p+2)/6; the loop exists so the closed form can be
    cross-checked instead of assumed.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    return sum(m * (p + 1 - m) for m in range(1, p + 1))


def lb_summation(p: int, parity: str) -> Fraction:
    """Lower bound recomputed from the explicit packing sums.

    The chain over the sorted labels of the radius-p ball gives a spread
    of at least 4*(sum_{m=1..p} m(p+1-m) + sum_{m=1..p-1} m(p-m)) plus a
    minimal boundary contribution of 1; adding 1 converts spread to a
    label count. For odd k the closed form adds (2/3)(2p^2+2p) on top,
    its exact parity difference, which is what this recomputation
    applies. Must agree with lambda_lb for every p >= 1.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if parity not in (EVEN_K, ODD_K):
        raise ValueError(f"parity must be {EVEN_K!r} or {ODD_K!r}")
    outer = sum(m * (p + 1 - m) for m in range(1, p + 1))
    inner = sum(m * (p - m) for m in range(1, p))
    total = Fraction(4 * (outer + inner) + 1 + 1)
    if parity == ODD_K:
        total += Fraction(2, 3) * (2 * p * p + 2 * p)
    return total


def ratio(k: int) -> Fraction:
    """Exact upper/lower ratio, using the ceiled lower bound.

    Tends to 9/8 as k grows but exceeds it at small k (4/3 at k = 3);
    only the limit behaviour should be relied on.
    """
    return Fraction(lambda_ub(k), lambda_lb(k).ceiled)


def bounds_table(k_min: int, k_max: int) -> list[BoundsRecord]:
    """One record per k in [k_min, k_max], increasing k.

    upper and ratio are None for k = 2, where no scheme exists.
    """
    if not 1 <= k_min <= k_max:
        raise ValueError("need 1 <= k_min <= k_max")
    records = []
    for k in range(k_min, k_max + 1):
        lb = lambda_lb(k)
        try:
            ub = lambda_ub(k)
        except UnsupportedK:
            records.append(BoundsRecord(k, lb.exact, lb.ceiled, None, None))
            continue
        records.append(
            BoundsRecord(k, lb.exact, lb.ceiled, ub, Fraction(ub, lb.ceiled))
        )
    return records
