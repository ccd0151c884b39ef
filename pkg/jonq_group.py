import logging
from enum import Enum, unique
from itertools import combinations

from config import VERIFY_COMPOSITION
from jonquieres_consts import (
    ClosureResult,
    ConsistencyException,
    OrderResult,
    ValidationException,
)
from ratfunc import RatFunc, depends_only_on, substitute

logger = logging.getLogger("Group")


@unique
class Variant(Enum):
    J = "J"
    JHAT = "Jhat"


class JonqElement:
    def __init__(self, n, variant, pairs):
        """
        Triangular birational map g with g·x_i = mu_i·x_i + f_i.

        :param n: variable count
        :param variant: Variant.J (scalar multipliers) or Variant.JHAT (multipliers in K_i)
        :param pairs: list of (mu_i, f_i) RatFunc pairs for i = 1..n
        """
        self.n = n
        self.variant = Variant(variant)
        self.pairs = [(mu, f) for mu, f in pairs]

    def mu(self, i):
        return self.pairs[i - 1][0]

    def f(self, i):
        return self.pairs[i - 1][1]

    def chi(self, i):
        """Character value mu_i; only meaningful in J"""
        if self.variant != Variant.J:
            raise ValidationException("chi is defined for variant J only", index=i)
        return self.mu(i).value()

    def phi(self, i):
        return self.f(i)

    def multiplier(self, i):
        return self.mu(i)

    def image(self, i):
        """g·x_i as a rational function"""
        mu, f = self.pairs[i - 1]
        return mu * RatFunc.x(i) + f

    def images(self):
        return {f"x{i}": self.image(i) for i in range(1, self.n + 1)}

    def is_identity(self):
        return all(mu == 1 and f.is_zero() for mu, f in self.pairs)

    def key(self):
        """Canonical text of all 2n components, used for hashing"""
        return (self.variant.value,) + tuple(
            text for mu, f in self.pairs for text in (str(mu), str(f))
        )

    def __eq__(self, other):
        if not isinstance(other, JonqElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.variant == other.variant
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        maps = ", ".join(f"x{i} -> {self.image(i)}" for i in range(1, self.n + 1))
        return f"JonqElement({self.variant.value}: {maps})"

    def validate(self):
        return validate(self)


def validate(e: JonqElement) -> JonqElement:
    """
    Check triangularity and multipliers; returns e or raises at the first bad index.
    """
    if len(e.pairs) != e.n:
        raise ValidationException(f"expected {e.n} components, got {len(e.pairs)}")
    for i, (mu, f) in enumerate(e.pairs, start=1):
        if any(j > e.n for j in f.x_indices() + mu.x_indices()):
            raise ValidationException(f"component {i} uses variables beyond x{e.n}", index=i)
        if not depends_only_on(f, i):
            raise ValidationException(f"f_{i} not in K_{i} at index {i}", index=i)
        if mu.is_zero():
            raise ValidationException(f"mu_{i} zero", index=i)
        if e.variant == Variant.J and not mu.is_constant():
            raise ValidationException(f"mu_{i} not constant (J)", index=i)
        if e.variant == Variant.JHAT and not depends_only_on(mu, i):
            raise ValidationException(f"mu_{i} not in K_{i} (Jhat)", index=i)
    return e


def identity(n, variant=Variant.J) -> JonqElement:
    return JonqElement(n, variant, [(RatFunc.one(), RatFunc.zero()) for _ in range(n)])


def apply(g: JonqElement, f: RatFunc) -> RatFunc:
    """
    g·f: simultaneous substitution x_i -> mu_i·x_i + f_i.
    """
    return substitute(f, g.images())


def _check_compatible(g1, g2):
    if g1.n != g2.n:
        raise ValidationException(f"dimension mismatch: {g1.n} and {g2.n}")
    if g1.variant != g2.variant:
        raise ValidationException(
            f"variant mismatch: {g1.variant.value} and {g2.variant.value}"
        )


def compose(g1: JonqElement, g2: JonqElement) -> JonqElement:
    """
    The element r with apply(r, f) == apply(g1, apply(g2, f)).

    r·x_i = (g1·mu_i(g2))·(mu_i(g1)·x_i + f_i(g1)) + g1·f_i(g2). In J the multipliers
    are scalars, so mu_i(r) = mu_i(g1)·mu_i(g2) and f_i follows the cocycle law.
    """
    _check_compatible(g1, g2)
    images = g1.images()
    pairs = []
    for i in range(1, g1.n + 1):
        mu1, f1 = g1.pairs[i - 1]
        mu2, f2 = g2.pairs[i - 1]
        if g1.variant == Variant.J:
            moved_mu = mu2
        else:
            moved_mu = substitute(mu2, images)
        pairs.append((moved_mu * mu1, moved_mu * f1 + substitute(f2, images)))
    result = JonqElement(g1.n, g1.variant, pairs)
    if g1.variant == Variant.J and VERIFY_COMPOSITION:
        for i in range(1, g1.n + 1):
            direct = apply(g1, g2.image(i))
            if direct != result.image(i):
                raise ConsistencyException(
                    f"composition law disagrees with substitution at index {i}",
                    index=i,
                )
    return result


def invert(g: JonqElement) -> JonqElement:
    """
    Back-substitution from i = n down to 1:
    h·x_i = (x_i - f_i(h·x_{>i})) / mu_i(h·x_{>i}).
    """
    inverse_images = {}
    pairs = [None] * g.n
    for i in range(g.n, 0, -1):
        mu, f = g.pairs[i - 1]
        moved_mu = substitute(mu, inverse_images)
        moved_f = substitute(f, inverse_images)
        new_mu = moved_mu.invert()
        new_f = -moved_f * new_mu
        pairs[i - 1] = (new_mu, new_f)
        inverse_images[f"x{i}"] = new_mu * RatFunc.x(i) + new_f
    return JonqElement(g.n, g.variant, pairs)


def power(g: JonqElement, m: int) -> JonqElement:
    if m < 0:
        return power(invert(g), -m)
    result = identity(g.n, g.variant)
    base = g
    while m:
        if m & 1:
            result = compose(result, base)
        m >>= 1
        if m:
            base = compose(base, base)
    return result


def order(g: JonqElement, cap: int = 64) -> OrderResult:
    """
    Order of g.

    In J a finite order forces every scalar mu_i into {1, -1}; then g^m0 (m0 = 1 or 2)
    is either the identity or a nontrivial element with all multipliers 1, which has
    infinite order. In Jhat the powers are iterated up to cap.
    """
    if g.variant == Variant.J:
        multipliers = [g.chi(i) for i in range(1, g.n + 1)]
        if all(mu == 1 for mu in multipliers):
            m0 = 1
        elif all(mu in (1, -1) for mu in multipliers):
            m0 = 2
        else:
            logger.debug(f"multipliers {multipliers} have infinite order")
            return OrderResult.infinite()
        if power(g, m0).is_identity():
            return OrderResult.finite(m0)
        return OrderResult.infinite()

    h = g
    for m in range(1, cap + 1):
        if h.is_identity():
            return OrderResult.finite(m)
        h = compose(h, g)
    return OrderResult.unknown(cap)


def is_abelian(elements) -> bool:
    for a, b in combinations(list(elements), 2):
        if compose(a, b).key() != compose(b, a).key():
            return False
    return True


def subgroup_closure(gens, cap: int = 64) -> ClosureResult:
    """
    Breadth-first closure under composition and inversion.

    :return: ClosureResult; elements is None when more than cap elements were found
    """
    gens = list(gens)
    if not gens:
        raise ValidationException("closure needs at least one generator")
    for g in gens[1:]:
        _check_compatible(gens[0], g)
    steps = gens + [invert(g) for g in gens]
    start = identity(gens[0].n, gens[0].variant)
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        following = []
        for element in frontier:
            for step in steps:
                product = compose(element, step)
                key = product.key()
                if key in seen:
                    continue
                seen[key] = product
                following.append(product)
                if len(seen) > cap:
                    logger.debug(f"closure passed the cap of {cap} elements")
                    return ClosureResult(None, cap)
        frontier = following
        logger.debug(f"closure holds {len(seen)} elements")
    elements = [seen[key] for key in sorted(seen)]
    abelian = is_abelian(elements)
    if not abelian and start.variant == Variant.J:
        raise ConsistencyException("finite closure in J is not abelian")
    return ClosureResult(elements, cap, abelian)
