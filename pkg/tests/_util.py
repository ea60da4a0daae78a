from fractions import Fraction

from recip.polymat import Poly, PolyMatrix
from recip.ratmfd import LeftMFD

s = Poly((0, 1))
one = Poly.const(1)


def P(*coeffs) -> Poly:
    return Poly(coeffs)


def scalar(x) -> PolyMatrix:
    return PolyMatrix([[x]])


def mfd(q, p) -> LeftMFD:
    """Scalar ``p/q``."""
    return LeftMFD(scalar(q), scalar(p))


def F(x) -> Fraction:
    return Fraction(x)


def fm(rows) -> list:
    return [[Fraction(x) for x in r] for r in rows]
