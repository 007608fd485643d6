"""Exponent vectors for monomials in ``x, y_1, ..., y_k``.

A monomial ``x^s0 y_1^s1 ... y_k^sk`` is the tuple ``(s0, s1, ..., sk)``.
The only term order used is lex with ``x > y_1 > ... > y_k``, which on
tuples of equal length is exactly Python's built-in tuple comparison; it
eliminates ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple

ExponentVector = Tuple[int, ...]


class LengthMismatch(ValueError):
    pass


class SubUnderflow(ValueError):
    pass


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order, variable 0 (``x``) most significant."""

    kind: str = "lex"

    def key(self, u: ExponentVector):
        return u


LEX = MonomialOrder()


def _check(u, v):
    if len(u) != len(v):
        raise LengthMismatch(f"exponent vectors of lengths {len(u)} and {len(v)}")


def compare(u: ExponentVector, v: ExponentVector, order: MonomialOrder = LEX) -> Cmp:
    _check(u, v)
    ku, kv = order.key(u), order.key(v)
    if ku == kv:
        return Cmp.EQUAL
    return Cmp.GREATER if ku > kv else Cmp.LESS


def divides(u: ExponentVector, v: ExponentVector) -> bool:
    """True iff the monomial ``u`` divides ``v`` (componentwise ``u <= v``)."""
    _check(u, v)
    return all(a <= b for a, b in zip(u, v))


def lcm(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    return tuple(a if a > b else b for a, b in zip(u, v))


def mul(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    """Quotient ``u / v``; ``v`` must divide ``u``."""
    _check(u, v)
    out = tuple(a - b for a, b in zip(u, v))
    if any(c < 0 for c in out):
        raise SubUnderflow(f"{v} does not divide {u}")
    return out


def is_coprime(u: ExponentVector, v: ExponentVector) -> bool:
    return not any(a and b for a, b in zip(u, v))


def unit(n_vars: int, i: int, power: int = 1) -> ExponentVector:
    e = [0] * n_vars
    e[i] = power
    return tuple(e)


def weight(u: ExponentVector, generators) -> int:
    """``s0 + sum(s_i * a_i)``: the exponent of x after substituting y_i = x^a_i."""
    return u[0] + sum(s * a for s, a in zip(u[1:], generators))


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_monomial(u: ExponentVector, unicode: bool = False) -> str:
    """Render e.g. ``(1, 3, 1)`` as ``x*y1^3*y2`` (or ``x y₁³ y₂`` style with unicode)."""
    names = ["x"] + [f"y{i}" for i in range(1, len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 0:
            continue
        if unicode:
            parts.append(name + (str(e).translate(_SUPERSCRIPT) if e > 1 else ""))
        else:
            parts.append(name + (f"^{e}" if e > 1 else ""))
    if not parts:
        return "1"
    return (" " if unicode else "*").join(parts)
