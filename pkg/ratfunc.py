"""
Canonical rational functions in x1..xn (and the parameters of the shared ring).

A RatFunc is num/den with gcd(num, den) = 1, den monic under grlex and zero stored
as 0/1, so equal functions have equal representations. K_i = k(x_{i+1}, ..., x_n)
is the field of functions depending only on coordinates with index > i.
"""
import logging
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

import multipoly
from core_arith import to_rational
from jonquieres_consts import UndefinedMapException, ZeroDenominatorException
from multipoly import RING

logger = logging.getLogger("JONQ")

FIELD = RING.to_field()
FIELD_DOMAIN = FIELD.to_domain()


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        """
        Use canonicalize (or the constructors below) to build values; the
        constructor itself trusts its input.
        """
        self.num = num
        self.den = RING.one if den is None else den

    @classmethod
    def from_polynomial(cls, p):
        return cls(p, RING.one)

    @classmethod
    def from_value(cls, value):
        return cls(multipoly.constant(value), RING.one)

    @classmethod
    def x(cls, i):
        return cls(multipoly.x(i), RING.one)

    @classmethod
    def param(cls, name):
        return cls(multipoly.variable(name), RING.one)

    @classmethod
    def zero(cls):
        return cls(RING.zero, RING.one)

    @classmethod
    def one(cls):
        return cls(RING.one, RING.one)

    def is_zero(self):
        return not self.num

    def is_constant(self):
        return self.num.is_ground and self.den.is_ground

    def value(self):
        """Fraction value of a constant function"""
        if not self.is_constant():
            raise ValueError("not a constant function")
        return multipoly.ground_value(self.num)

    def x_indices(self):
        return sorted(set(multipoly.x_indices(self.num)) | set(multipoly.x_indices(self.den)))

    def variables(self):
        names = set(multipoly.variables(self.num)) | set(multipoly.variables(self.den))
        return [name for name in multipoly.NAMES if name in names]

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return canonicalize(self.num + other.num, self.den)
        return canonicalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return canonicalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self):
        if self.is_zero():
            raise ZeroDenominatorException("zero denominator")
        return canonicalize(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __rtruediv__(self, other):
        return _coerce(other) * self.invert()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.invert() ** -exponent
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        from expr_io import render

        return render(self)

    def __repr__(self):
        return f"RatFunc({self})"


def _coerce(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.from_value(value)
    return NotImplemented


def canonicalize(num, den) -> RatFunc:
    """
    Unique representative of num/den.
    """
    if not den:
        raise ZeroDenominatorException("zero denominator")
    if not num:
        return RatFunc(RING.zero, RING.one)
    if den.is_ground:
        return RatFunc(num.quo_ground(den.LC), RING.one)
    p, q = num.cancel(den)
    lc = q.LC
    return RatFunc(p.quo_ground(lc), q.quo_ground(lc))


def depends_only_on(f: RatFunc, i: int) -> bool:
    """
    Membership in K_i: every x-variable of f has index > i. Parameters are ignored.
    """
    return all(j > i for j in f.x_indices())


def _substitute_polynomial(p, images, cache):
    """
    p with variables replaced by RatFunc images, over one common denominator.

    :return: (numerator, denominator) polynomials, not reduced
    """
    present = [k for k in range(len(multipoly.NAMES)) if p.degree(k) > 0]
    moving = [k for k in present if k in images]
    if not moving:
        return p, RING.one
    top = {k: p.degree(k) for k in moving}

    def power(k, part, e):
        key = (k, part, e)
        if key not in cache:
            cache[key] = getattr(images[k], part) ** e
        return cache[key]

    common = RING.one
    for k in moving:
        if not images[k].den.is_one:
            common *= power(k, "den", top[k])

    numerator = RING.zero
    for monom, coeff in p.iterterms():
        term = RING.ground_new(coeff)
        rest = list(monom)
        for k in moving:
            e = monom[k]
            rest[k] = 0
            if e:
                term *= power(k, "num", e)
            if not images[k].den.is_one and top[k] > e:
                term *= power(k, "den", top[k] - e)
        numerator += term * RING.from_dict({tuple(rest): QQ.one})
    return numerator, common


def substitute(f: RatFunc, sigma) -> RatFunc:
    """
    Simultaneous substitution followed by one canonicalization.

    :param sigma: mapping variable name -> RatFunc; variables without an image stay
    :raises UndefinedMapException: the substituted denominator vanishes identically
    """
    images = {multipoly.var_index(name): _coerce(image) for name, image in sigma.items()}
    cache = {}
    num_n, num_d = _substitute_polynomial(f.num, images, cache)
    den_n, den_d = _substitute_polynomial(f.den, images, cache)
    if not den_n:
        raise UndefinedMapException("map undefined on this function")
    return canonicalize(num_n * den_d, num_d * den_n)


def evaluate(f: RatFunc, point, params=None):
    """
    Exact value of f at a point.

    :param point: rational values for x1..xn
    :param params: optional mapping parameter name -> rational value
    :return: Fraction, or None when the denominator vanishes at the point
    """
    values = {multipoly.x_name(i): to_rational(c) for i, c in enumerate(point, start=1)}
    values.update({name: to_rational(c) for name, c in (params or {}).items()})
    den = multipoly.evaluate(f.den, values)
    if den == 0:
        return None
    return multipoly.evaluate(f.num, values) / den


def derivative(f: RatFunc, name: str) -> RatFunc:
    dn = multipoly.derivative(f.num, name)
    dd = multipoly.derivative(f.den, name)
    if not dd:
        return canonicalize(dn, f.den)
    return canonicalize(dn * f.den - f.num * dd, f.den ** 2)


def to_field(f: RatFunc):
    """RatFunc -> element of sympy's fraction field over the shared ring"""
    return FIELD(f.num) / FIELD(f.den)


def matrix_rank(rows) -> int:
    """
    Rank over the rational function field of a matrix of RatFunc entries.
    """
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return 0
    matrix = DomainMatrix(
        [[to_field(_coerce(entry)) for entry in row] for row in rows],
        (len(rows), len(rows[0])),
        FIELD_DOMAIN,
    )
    return matrix.rank()
