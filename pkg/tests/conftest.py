import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import multipoly  # noqa: E402
from jonq_group import JonqElement, Variant, compose, invert  # noqa: E402
from ratfunc import RatFunc  # noqa: E402

SAMPLES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "samples")


def sample(name):
    return os.path.join(SAMPLES_DIR, name)


def random_polynomial(rng, indices, degree, terms=3, coeffs=3):
    """Polynomial in the given x indices, total degree <= degree"""
    names = [f"x{i}" for i in indices]
    monomials = multipoly.monomials_up_to(names, degree)
    p = multipoly.RING.zero
    for _ in range(terms):
        m = rng.choice(monomials)
        p += multipoly.constant(rng.randint(-coeffs, coeffs)) * m.to_polynomial()
    return p


def random_ratfunc(rng, indices, degree=2):
    num = RatFunc.from_polynomial(random_polynomial(rng, indices, degree))
    den = RatFunc.zero()
    while den.is_zero():
        den = RatFunc.from_polynomial(random_polynomial(rng, indices, degree - 1, terms=2))
    return num / den


def random_element(rng, n=3, degree=2, variant=Variant.J):
    """Valid element: scalar multipliers in {±1, ±2, 1/2}, f_i polynomial in x_{i+1..n}"""
    pairs = []
    for i in range(1, n + 1):
        mu = RatFunc.from_value(rng.choice([1, -1, 2, -2, Fraction(1, 2)]))
        tail = list(range(i + 1, n + 1))
        if tail:
            f = RatFunc.from_polynomial(random_polynomial(rng, tail, degree))
        else:
            f = RatFunc.from_value(rng.randint(-2, 2))
        pairs.append((mu, f))
    return JonqElement(n, variant, pairs).validate()


def element(n, images, variant=Variant.J):
    """Element from (mu, f) pairs written as ints or RatFunc"""
    pairs = []
    for mu, f in images:
        mu = mu if isinstance(mu, RatFunc) else RatFunc.from_value(mu)
        f = f if isinstance(f, RatFunc) else RatFunc.from_value(f)
        pairs.append((mu, f))
    return JonqElement(n, variant, pairs).validate()


def conjugated_sign_flips(rng, degree=2):
    """One or two sign flips of (x1, x2) conjugated by a common random element"""
    h = random_element(rng, n=2, degree=degree)
    h_inverse = invert(h)
    signs = rng.sample([(-1, 1), (1, -1), (-1, -1)], rng.randint(1, 2))
    return [compose(compose(h, element(2, [(a, 0), (b, 0)])), h_inverse) for a, b in signs]


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def x():
    return RatFunc.x
