"""Pochhammer symbols and q-numbers (``q`` is ``s**2`` unless given)."""
from __future__ import annotations

from fractions import Fraction

from ._scalar import S


def pochhammer(v, n: int):
    """Rising factorial ``v (v+1) ... (v+n-1)``; ``(v)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = Fraction(1)
    for i in range(n):
        out = out * (v + i)
    return out


def q_pochhammer(a, n: int, q=None):
    """``prod_{i<n} (1 - a q^i)``."""
    if n < 0:
        raise ValueError("q-Pochhammer order must be nonnegative")
    if q is None:
        q = S * S
    out, qi = Fraction(1), Fraction(1)
    for _ in range(n):
        out = out * (1 - a * qi)
        qi = qi * q
    return out


def q_number(n: int, base=None):
    """``[n]_b = 1 + b + ... + b^{n-1}`` with the convention ``[0]_b = 1``."""
    if n < 0:
        raise ValueError("q-numbers are defined for n >= 0")
    if base is None:
        base = S * S
    if n == 0:
        return Fraction(1)
    out, p = Fraction(0), Fraction(1)
    for _ in range(n):
        out = out + p
        p = p * base
    return out


def q_factorial(n: int, base=None):
    """``n!_b = [1]_b [2]_b ... [n]_b``."""
    if n < 0:
        raise ValueError("q-factorial is defined for n >= 0")
    out = Fraction(1)
    for k in range(1, n + 1):
        out = out * q_number(k, base)
    return out


def inverse_sqrt_base():
    """The base ``q^{-1/2} = 1/s`` as an ExactScalar."""
    return 1 / S
