"""Small numeric helpers shared by the algorithms.

Thresholds such as ``ceil(a * (1 + eps))`` are evaluated with exact
fractions so that e.g. ``3 * (1 + 1/3)`` gives 4 rather than 5.
"""

from __future__ import annotations

import math
from fractions import Fraction


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(x).limit_denominator(10**9)


def ceil_frac(x) -> int:
    return math.ceil(frac(x))


def floor_frac(x) -> int:
    return math.floor(frac(x))


def log2n(n: int) -> int:
    """ceil(log2 n), never below 1."""
    return max(1, math.ceil(math.log2(max(n, 2))))


def check_eps(eps, upper=1, allow_zero=False) -> Fraction:
    e = frac(eps)
    if e < 0 or (e == 0 and not allow_zero) or e > upper:
        raise ValueError(f"eps must lie in {'[' if allow_zero else '('}0, {upper}], got {eps}")
    return e


class PreconditionError(ValueError):
    """An algorithm's stated parameter regime is not met."""
