"""
Sparse multivariate polynomials over the rationals.

All polynomials live in one shared sympy ``PolyRing`` over QQ with graded
lexicographic order. The ring carries the coordinates x1..xN (N = MAX_VARIABLES)
followed by the parameter variables u, v, t, a1, a2. Parameters never count for
flag membership.
"""
import logging

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from config import MAX_VARIABLES
from core_arith import to_ground, to_rational
from jonquieres_consts import ArithmeticException

logger = logging.getLogger("JONQ")

X_NAMES = tuple(f"x{i}" for i in range(1, MAX_VARIABLES + 1))
PARAMETER_NAMES = ("u", "v", "t", "a1", "a2")
# names the parser accepts besides the x-variables
PUBLIC_PARAMETERS = ("u", "a1", "a2")

RING, *_GENERATORS = ring(",".join(X_NAMES + PARAMETER_NAMES), QQ, grlex)
NAMES = X_NAMES + PARAMETER_NAMES
_INDEX = {name: k for k, name in enumerate(NAMES)}

Polynomial = type(RING.zero)


class Monomial:
    def __init__(self, exponents):
        """
        Power product of ring variables.

        :param exponents: full exponent tuple of the ring, or a mapping name -> exponent
        """
        if isinstance(exponents, dict):
            full = [0] * len(NAMES)
            for name, e in exponents.items():
                if e < 0:
                    raise ArithmeticException("negative exponent in a monomial")
                full[var_index(name)] = e
            exponents = full
        self.exponents = tuple(exponents)

    def items(self):
        """(name, exponent) pairs with nonzero exponent, in variable order"""
        return [(NAMES[k], e) for k, e in enumerate(self.exponents) if e]

    def to_polynomial(self):
        return RING.from_dict({self.exponents: QQ.one})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return "*".join(f"{n}^{e}" if e > 1 else n for n, e in self.items()) or "1"


def var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ArithmeticException(f"unknown variable {name}")


def x_name(i: int) -> str:
    if not 1 <= i <= MAX_VARIABLES:
        raise ArithmeticException(
            f"x{i} is outside the configured ring (MAX_VARIABLES = {MAX_VARIABLES})"
        )
    return X_NAMES[i - 1]


def variable(name: str) -> Polynomial:
    return RING.gens[var_index(name)]


def x(i: int) -> Polynomial:
    return variable(x_name(i))


def constant(value) -> Polynomial:
    return RING.ground_new(to_ground(value))


def ground_value(p: Polynomial):
    """Fraction value of a constant polynomial"""
    if not p.is_ground:
        raise ArithmeticException("polynomial is not a constant")
    return to_rational(p.LC if p else QQ.zero)


def variables(p: Polynomial):
    """Names of the variables occurring in p, in ring order"""
    used = set()
    for monom in p.itermonoms():
        used.update(k for k, e in enumerate(monom) if e)
    return [NAMES[k] for k in sorted(used)]


def x_indices(p: Polynomial):
    """1-based indices of the x-variables occurring in p"""
    return [int(name[1:]) for name in variables(p) if name in X_NAMES]


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Greatest common divisor, made monic under the grlex order.
    """
    if not p and not q:
        raise ArithmeticException("gcd undefined")
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    return p.gcd(q).monic()


def lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p or not q:
        raise ArithmeticException("lcm of the zero polynomial")
    return p.lcm(q).monic()


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    if not q:
        raise ArithmeticException("division by the zero polynomial")
    try:
        return p.exquo(q)
    except ExactQuotientFailed:
        raise ArithmeticException("division is not exact")


def derivative(p: Polynomial, name: str) -> Polynomial:
    return p.diff(var_index(name))


def degree_in(p: Polynomial, name: str) -> int:
    """
    Highest exponent of a variable in p, 0 when it does not occur.
    """
    if not p:
        raise ArithmeticException("degree of the zero polynomial")
    return p.degree(var_index(name))


def lowest_degree_in(p: Polynomial, name: str) -> int:
    if not p:
        raise ArithmeticException("degree of the zero polynomial")
    k = var_index(name)
    return min(monom[k] for monom in p.itermonoms())


def squarefree_part(p: Polynomial, name: str):
    """
    Squarefree part of p seen as a univariate polynomial in one variable over the
    fraction field of the others.

    The power name^k dividing p is stripped first, so the distinct roots of the
    result are the distinct nonzero roots of p.

    :return: (part, k) with part monic and part = p' / gcd(p', dp'/dname), p' = p / name^k
    """
    if not p:
        raise ArithmeticException("squarefree part of the zero polynomial")
    k = lowest_degree_in(p, name)
    if k:
        stripped = Monomial({name: k}).to_polynomial()
        p = p.exquo(stripped)
    part = p.exquo(gcd(p, derivative(p, name)))
    return part.monic(), k


def rename(p: Polynomial, mapping) -> Polynomial:
    """
    Rename variables in p.

    :param mapping: dict old name -> new name; targets must not collide with
                    variables of p left in place
    """
    moves = {var_index(a): var_index(b) for a, b in mapping.items()}
    terms = {}
    for monom, coeff in p.iterterms():
        target = [0] * len(NAMES)
        for k, e in enumerate(monom):
            if e:
                target[moves.get(k, k)] += e
        terms[tuple(target)] = terms.get(tuple(target), QQ.zero) + coeff
    return RING.from_dict({m: c for m, c in terms.items() if c})


def evaluate(p: Polynomial, values):
    """
    Exact value of p.

    :param values: mapping name -> rational value covering every variable of p
    :return: Fraction
    """
    missing = [name for name in variables(p) if name not in values]
    if missing:
        raise ArithmeticException(f"no value for {', '.join(missing)}")
    ground = {var_index(name): to_ground(value) for name, value in values.items()}
    total = QQ.zero
    for monom, coeff in p.iterterms():
        term = coeff
        for k, e in enumerate(monom):
            if e:
                term *= ground[k] ** e
        total += term
    return to_rational(total)


def monomials_up_to(names, degree):
    """
    Monomials in the given variables of total degree <= degree, ordered by degree
    then by exponent tuple.
    """
    result = [Monomial({})]
    frontier = [Monomial({})]
    for _ in range(degree):
        following = set()
        for monom in frontier:
            for name in names:
                bumped = list(monom.exponents)
                bumped[var_index(name)] += 1
                following.add(Monomial(bumped))
        frontier = sorted(following, key=lambda m: m.exponents, reverse=True)
        result.extend(frontier)
    return result
