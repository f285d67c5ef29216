"""
Exact arithmetic helpers

All invariant formulas have denominators dividing 8; they are evaluated with
fractions.Fraction and never rounded. Square roots only ever appear through
integer predicates: x <= p + sqrt(q)  <=>  x <= p  or  (x - p)^2 <= q.

"""

import math
import logging
from fractions import Fraction

from hyperfib.errors import NonIntegralInvariantError
from .models import ExactScalar, Rational, SqrtForm

logger = logging.getLogger('hyperfib.arithmetic')


def exact(value: Rational) -> ExactScalar:
    """ lift an int or fraction to an exact scalar """
    return Fraction(value)


def as_integer(value: Rational, name: str = 'value') -> int:
    """ return value as int or raise NonIntegralInvariantError """
    value = Fraction(value)
    if value.denominator != 1:
        logger.debug("Non-integral %s: %s", name, value)
        raise NonIntegralInvariantError(message=f"{name} = {value} is not an integer")
    return value.numerator


def sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def largest_even_at_most(value: Rational) -> int:
    n = math.floor(value)
    return n if n % 2 == 0 else n - 1


def sqrt_le(x: Rational, p: Rational, q: int) -> bool:
    """ exact test x <= p + sqrt(q) """
    if q < 0:
        raise ValueError('radicand must be non-negative')
    diff = Fraction(x) - Fraction(p)
    return diff <= 0 or diff * diff <= q


def sqrt_bound_floor(p: Rational, q: int) -> int:
    """ floor(p + sqrt(q)) without leaving the integers """
    n = math.floor(p) + math.isqrt(q)
    # floor(p) + isqrt(q) is at most one below the true floor
    while sqrt_le(n + 1, p, q):
        n += 1
    while not sqrt_le(n, p, q):
        n -= 1
    return n


def _sign_sqrt_difference(a: int, b: int, c: Fraction) -> int:
    """ sign of sqrt(a) - sqrt(b) - c """
    if a == b:
        return -sign(c)
    if a < b:
        return -_sign_sqrt_difference(b, a, -c)
    # sqrt(a) - sqrt(b) > 0 from here on
    if c <= 0:
        return 1
    # compare a with (c + sqrt(b))^2, i.e. the sign of m - 2c sqrt(b)
    m = a - b - c * c
    if m < 0:
        return -1
    if m == 0:
        return -1 if b > 0 else 0
    return sign(m * m - 4 * c * c * b)


def compare_forms(x: SqrtForm, y: SqrtForm) -> int:
    """ exact three-way comparison of p1 + sqrt(q1) and p2 + sqrt(q2) """
    return _sign_sqrt_difference(x.q or 0, y.q or 0, y.p - x.p)


def form_floor(form: SqrtForm) -> int:
    if form.is_rational:
        return math.floor(form.p)
    return sqrt_bound_floor(form.p, form.q)


def form_le(x: Rational, form: SqrtForm) -> bool:
    """ exact test x <= form """
    if form.is_rational:
        return Fraction(x) <= form.p
    return sqrt_le(x, form.p, form.q)
