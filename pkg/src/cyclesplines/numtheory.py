"""Exact integer primitives used by the basis constructions.

All functions work on arbitrary-precision Python ints and return the least
non-negative residue whenever a canonical representative is required.  The
representative returned by :func:`solve_congruence_pair` is pinned: basis
entries are built from it, so changing it would silently change outputs.
"""

from __future__ import annotations

import math

from .errors import NoSolutionError, NotInvertibleError


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, s, t) with g = gcd(a, b) >= 0 and a*s + b*t = g."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a <= 0 or b <= 0:
        raise ValueError(f"lcm requires positive arguments, got ({a}, {b})")
    return math.lcm(a, b)


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` as the least non-negative residue.

    ``mod_inverse(a, 1)`` is 0 for every ``a``: all integers are congruent
    modulo 1 and 0 is the canonical residue.  Raises
    :class:`NotInvertibleError` when gcd(a, m) != 1.
    """
    if m <= 0:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 0
    g, s, _ = egcd(a, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m}: gcd is {g}")
    return s % m


def solve_congruence_pair(y: int, a: int, b: int) -> int:
    """Solve x = y (mod a), x = 0 (mod b), returning the canonical solution.

    With g = gcd(a, b) the system is solvable iff g divides y.  The
    representative is pinned:

    * if a // g == 1 the answer is ``b`` itself (even when y == 0);
    * otherwise it is ``y * (b // g) * inv`` where ``inv`` is the least
      non-negative inverse of b // g modulo a // g.

    Raises :class:`NoSolutionError` when g does not divide y.
    """
    if a <= 0 or b <= 0:
        raise ValueError(f"moduli must be positive, got ({a}, {b})")
    g = math.gcd(a, b)
    if y % g != 0:
        raise NoSolutionError(
            f"x = {y} (mod {a}), x = 0 (mod {b}) has no solution: "
            f"gcd({a}, {b}) = {g} does not divide {y}"
        )
    if a // g == 1:
        return b
    return y * (b // g) * mod_inverse(b // g, a // g)
