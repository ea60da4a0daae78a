"""Exact arithmetic in the field generated by square roots of rationals.

A :class:`Surd` is a finite sum ``c_1*sqrt(k_1) + ... + c_r*sqrt(k_r)`` with
rational ``c_i`` and distinct squarefree positive integers ``k_i``.  Square
roots of distinct squarefree integers are linearly independent over Q, so
this representation is canonical and equality testing is exact.

Signature-symmetric realizations of rational transfer functions generally
need such entries (``2/s`` has no rational one), which is why the type exists.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from sympy import factorint


@lru_cache(maxsize=4096)
def _factor(n: int) -> dict:
    return factorint(n)


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``n == s*s*f`` and ``f`` squarefree."""
    s, f = 1, 1
    for p, e in _factor(n).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def _smallest_prime(n: int) -> int:
    return min(_factor(n)) if n > 1 else n


class Surd:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean

    @classmethod
    def sqrt(cls, q) -> "Surd":
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative number")
        if q == 0:
            return cls()
        s, f = _squarefree_split(q.numerator * q.denominator)
        return cls({f: Fraction(s, q.denominator)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_rational(self) -> bool:
        return all(k == 1 for k in self._terms)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd({1: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Surd(out)

    __radd__ = __add__

    def __neg__(self):
        return Surd({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                g = math.gcd(k1, k2)
                k = (k1 // g) * (k2 // g)
                out[k] = out.get(k, 0) + c1 * c2 * g
        return Surd(out)

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if not self._terms:
            raise ZeroDivisionError("Surd division by zero")
        if self.is_rational():
            return Surd({1: 1 / self._terms[1]})
        # split x = a + b*sqrt(p) and multiply through by the conjugate
        p = _smallest_prime(next(k for k in self._terms if k != 1))
        a = Surd({k: c for k, c in self._terms.items() if k % p})
        b = Surd({k // p: c for k, c in self._terms.items() if k % p == 0})
        conj = a - b * Surd({p: 1})
        norm = a * a - b * b * p
        return conj * norm.inverse()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __float__(self):
        return float(sum(float(c) * math.sqrt(k) for k, c in self._terms.items()))

    def __repr__(self):
        return f"Surd({format_surd(self)!r})"

    def __str__(self):
        return format_surd(self)


def format_surd(x: Surd) -> str:
    if not x._terms:
        return "0"
    parts = []
    for k in sorted(x._terms):
        c = x._terms[k]
        if k == 1:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"sqrt({k})")
        else:
            parts.append(f"{c}*sqrt({k})")
    return " + ".join(parts)


def parse_surd(text: str) -> Surd:
    """Inverse of :func:`format_surd`, e.g. ``"1/2 + -3*sqrt(6)"``."""
    out = {}
    for part in text.replace(" ", "").split("+"):
        if not part:
            continue
        if "sqrt(" in part:
            coef, _, rest = part.partition("sqrt(")
            k = int(rest.rstrip(")"))
            coef = coef.rstrip("*")
            c = Fraction(coef) if coef not in ("", "-") else Fraction(-1 if coef == "-" else 1)
        else:
            k, c = 1, Fraction(part)
        out[k] = out.get(k, 0) + c
    return Surd(out)


def simplify(x):
    """Collapse rational surds to :class:`Fraction`; leave others alone."""
    if isinstance(x, Surd) and x.is_rational():
        return x.rational()
    return x
