"""Linear modular labeling schemes for the square grid.

For a separation parameter k, every vertex receives the label
``L(x, y) = (a*x + b*y) mod c``. The coefficient triple (a, b, c) depends
on the parity of k and of p, where k = 2p + 1 (odd k) or k = 2p (even k):

    odd k,  odd p  (p >= 1):  a = 2p+3, b = 3p^2+7p+5, c = (p+1)(3p^2+5p+4)/2
    odd k,  even p (p >= 0):  a = 2p+3, b = 3p^2+6p+3, c = (3p^3+8p^2+8p+4)/2
    even k, odd p  (p >= 3):  a = 2p+1, b = 3p^2+4p+2, c = (3p^3+5p^2+5p+1)/2
    even k, even p (p >= 2):  a = 2p+1, b = 3p^2+3p+1, c = (p+1)(3p^2+2p+2)/2

c is the number of labels used. The mathematical (always non-negative)
remainder keeps every label inside [0, c), negative coordinates included.

k = 2 is the single unsupported value: the even-k/odd-p case starts at
p = 3, so no case covers p = 1.

Scalar evaluation uses Python integers, hence stays exact at any
magnitude. The vectorized helpers downcast to int64 only when the
intermediate products provably fit, and fall back to exact object arrays
otherwise. Schemes are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ODD_K_ODD_P = "odd-k-odd-p"
ODD_K_EVEN_P = "odd-k-even-p"
EVEN_K_ODD_P = "even-k-odd-p"
EVEN_K_EVEN_P = "even-k-even-p"

PARITY_CASES = (ODD_K_ODD_P, ODD_K_EVEN_P, EVEN_K_ODD_P, EVEN_K_EVEN_P)


class UnsupportedK(ValueError):
    """No coefficient case covers this k (only k = 2 is excluded)."""

    def __init__(self, k: int, reason: str = ""):
        self.k = k
        msg = f"k={k} is not covered by any coefficient case"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


@dataclass(frozen=True)
class LabelingScheme:
    """One instantiation of the labeling rule L(x, y) = (a*x + b*y) mod c.

    Instances built by scheme_params satisfy 0 < a < b < c for k >= 3;
    hand-built triples (e.g. deliberately broken ones for testing the
    verifiers) may carry anything.
    """

    k: int
    p: int
    parity_case: str
    a: int
    b: int
    c: int


def _halved(n: int) -> int:
    q, r = divmod(n, 2)
    if r:
        raise ArithmeticError(f"modulus numerator {n} is not even")
    return q


def scheme_params(k: int) -> LabelingScheme:
    """Coefficient triple for the case matching k's parity and p's parity.

    Raises UnsupportedK for k = 2 and ValueError for k < 1. The divisions
    by two in the modulus expressions are exact for every covered k.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2 == 1:
        p = (k - 1) // 2
        if p % 2 == 1:
            return LabelingScheme(
                k, p, ODD_K_ODD_P,
                2 * p + 3,
                3 * p * p + 7 * p + 5,
                _halved((p + 1) * (3 * p * p + 5 * p + 4)),
            )
        return LabelingScheme(
            k, p, ODD_K_EVEN_P,
            2 * p + 3,
            3 * p * p + 6 * p + 3,
            _halved(3 * p**3 + 8 * p * p + 8 * p + 4),
        )
    p = k // 2
    if p % 2 == 1:
        if p < 3:
            raise UnsupportedK(k, "even k needs odd p >= 3, and k=2 gives p=1")
        return LabelingScheme(
            k, p, EVEN_K_ODD_P,
            2 * p + 1,
            3 * p * p + 4 * p + 2,
            _halved(3 * p**3 + 5 * p * p + 5 * p + 1),
        )
    return LabelingScheme(
        k, p, EVEN_K_EVEN_P,
        2 * p + 1,
        3 * p * p + 3 * p + 1,
        _halved((p + 1) * (3 * p * p + 2 * p + 2)),
    )


def label(scheme: LabelingScheme, v) -> int:
    """Label of vertex v = (x, y); always in [0, c)."""
    x, y = v
    return (scheme.a * x + scheme.b * y) % scheme.c


def lambda_ub(k: int) -> int:
    """Number of labels the scheme for k uses, i.e. its modulus c."""
    return scheme_params(k).c


_INT64_MAX = 2**63 - 1


def _int64_safe(scheme: LabelingScheme) -> bool:
    # Two mod-reduced products plus their sum must fit.
    return 2 * (scheme.c - 1) * (scheme.c - 1) <= _INT64_MAX


def label_many(scheme: LabelingScheme, xs, ys) -> np.ndarray:
    """Vectorized label evaluation over integer coordinate arrays.

    xs and ys broadcast together. Coordinates are reduced mod c first, so
    the fast int64 path is exact whenever c itself is small enough; any
    other input falls back to Python-integer (object dtype) arithmetic.
    """
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    if xs.dtype.kind == "f" or ys.dtype.kind == "f":
        raise TypeError("coordinates must be integers")
    a, b, c = scheme.a, scheme.b, scheme.c
    if _int64_safe(scheme) and xs.dtype.kind in "iu" and ys.dtype.kind in "iu":
        xr = np.mod(xs, c).astype(np.int64)
        yr = np.mod(ys, c).astype(np.int64)
        return ((a % c) * xr + (b % c) * yr) % c
    xb, yb = np.broadcast_arrays(xs.astype(object), ys.astype(object))
    out = np.empty(xb.shape, dtype=object)
    flat = out.reshape(-1)
    for i, (x, y) in enumerate(zip(xb.reshape(-1), yb.reshape(-1))):
        flat[i] = (a * int(x) + b * int(y)) % c
    return out


def label_window(scheme: LabelingScheme, x0: int, y0: int,
                 width: int, height: int) -> np.ndarray:
    """Labels of the rectangle [x0, x0+width) x [y0, y0+height).

    Returned array is indexed [row, col] where row i holds y = y0 + i and
    col j holds x = x0 + j.
    """
    if width < 1 or height < 1:
        raise ValueError("window must have positive dimensions")
    c = scheme.c
    if _int64_safe(scheme):
        xs = np.arange(x0 % c, x0 % c + width, dtype=np.int64)
        ys = np.arange(y0 % c, y0 % c + height, dtype=np.int64)
    else:
        xs = np.array([x0 + i for i in range(width)], dtype=object)
        ys = np.array([y0 + j for j in range(height)], dtype=object)
    return label_many(scheme, xs[np.newaxis, :], ys[:, np.newaxis])
