import re

import pytest

from expr_io import read_map
from jonq_group import (
    JonqElement,
    Variant,
    apply,
    compose,
    identity,
    invert,
    order,
    power,
    subgroup_closure,
)
from jonquieres_consts import OrderKind, OrderResult, ValidationException
from ratfunc import RatFunc, depends_only_on

from conftest import conjugated_sign_flips, element, random_element, sample

x = RatFunc.x


def test_validate_examples():
    element(2, [(2, x(2) ** 2), (1, 0)])
    element(2, [(x(2), 0), (1, 0)], Variant.JHAT)
    with pytest.raises(ValidationException) as info:
        element(2, [(1, x(1)), (1, 0)])
    assert info.value.index == 1


@pytest.mark.parametrize(
    "pairs, variant, message",
    [
        ([(0, 0), (1, 0)], Variant.J, "mu_1 zero"),
        ([(x(2), 0), (1, 0)], Variant.J, "mu_1 not constant (J)"),
        ([(1, 0), (x(1), 0)], Variant.JHAT, "mu_2 not in K_2 (Jhat)"),
        ([(1, x(3)), (1, 0)], Variant.J, "component 1 uses variables beyond x2"),
    ],
)
def test_validate_errors(pairs, variant, message):
    with pytest.raises(ValidationException, match=re.escape(message)):
        element(2, pairs, variant)


def test_apply_examples():
    g = element(2, [(1, x(2)), (1, 0)])
    assert apply(g, x(1) / x(2)) == (x(1) + x(2)) / x(2)
    f = (x(1) ** 2 + 1) / x(2)
    assert apply(identity(2), f) == f
    assert apply(element(2, [(-1, 0), (-1, 0)]), x(1) * x(2)) == x(1) * x(2)


def test_compose_affine_line():
    g1 = element(1, [(3, 5)])
    g2 = element(1, [(7, -2)])
    r = compose(g1, g2)
    assert r.mu(1) == 21
    assert r.f(1) == 7 * 5 - 2


def test_compose_cocycle_example():
    g1 = element(2, [(1, x(2)), (1, 0)])
    g2 = element(2, [(2, 0), (1, 1)])
    r = compose(g1, g2)
    assert r == element(2, [(2, 2 * x(2)), (1, 1)])
    assert r.chi(1) == 2
    assert r.phi(1) == 2 * x(2)
    assert compose(r, identity(2)) == r


def test_group_law_on_random_pairs(rng):
    for _ in range(200):
        g1 = random_element(rng)
        g2 = random_element(rng)
        r = compose(g1, g2)
        for i in range(1, 4):
            assert r.chi(i) == g1.chi(i) * g2.chi(i)
            assert r.phi(i) == g1.phi(i) * g2.chi(i) + apply(g1, g2.phi(i))
            assert apply(r, x(i)) == apply(g1, apply(g2, x(i)))
        assert compose(g1, invert(g1)).is_identity()
        assert compose(invert(g1), g1).is_identity()


def test_homomorphism_on_functions(rng):
    f = (x(1) * x(2) + x(3)) / (x(2) ** 2 + 1)
    for _ in range(20):
        g1 = random_element(rng)
        g2 = random_element(rng)
        assert apply(compose(g1, g2), f) == apply(g1, apply(g2, f))


def test_flag_stability(rng):
    for _ in range(100):
        g = random_element(rng, n=4)
        for j in range(2, 5):
            image = apply(g, x(j))
            for i in range(1, j):
                assert depends_only_on(image, i)


def test_invert_examples():
    g = element(2, [(2, x(2) ** 2), (1, 0)])
    assert invert(g) == element(2, [(RatFunc.from_value(1) / 2, -x(2) ** 2 / 2), (1, 0)])
    assert invert(identity(3)).is_identity()


def test_compose_mismatch():
    with pytest.raises(ValidationException):
        compose(identity(2), identity(3))
    with pytest.raises(ValidationException):
        compose(identity(2), identity(2, Variant.JHAT))


def test_order_examples():
    assert order(read_map(sample("translation.json"))) == OrderResult.infinite()
    assert order(element(1, [(-1, 0)])) == OrderResult.finite(2)
    assert order(read_map(sample("negation.json"))) == OrderResult.finite(2)
    assert order(element(2, [(-1, x(2)), (-1, 0)])) == OrderResult.infinite()
    assert order(identity(2)) == OrderResult.finite(1)
    assert order(element(1, [(2, 0)])).kind == OrderKind.INFINITE


def test_unipotent_elements_have_infinite_order(rng):
    for _ in range(20):
        g = random_element(rng)
        pairs = [(RatFunc.one(), f) for _, f in g.pairs]
        u = JonqElement(3, Variant.J, pairs)
        if not u.is_identity():
            assert order(u) == OrderResult.infinite()


def test_order_in_jhat():
    twisted = read_map(sample("twisted.json"))
    assert order(twisted, cap=8) == OrderResult.unknown(8)
    flip = element(2, [(-1, 0), (1, 0)], Variant.JHAT)
    assert order(flip) == OrderResult.finite(2)
    assert compose(twisted, twisted).mu(1) == x(2) ** 2
    assert twisted.multiplier(1) == x(2)
    with pytest.raises(ValidationException):
        twisted.chi(1)


def test_power(rng):
    g = random_element(rng)
    assert power(g, 3) == compose(g, compose(g, g))
    assert power(g, -1) == invert(g)
    assert power(g, 0).is_identity()


def test_closure_examples():
    flip = read_map(sample("flip_x1.json"))
    assert subgroup_closure([flip]).size == 2
    klein = subgroup_closure([flip, read_map(sample("flip_x2.json"))])
    assert klein.size == 4
    assert klein.abelian
    overflow = subgroup_closure([read_map(sample("translation.json"))], cap=100)
    assert overflow.overflow
    assert overflow.to_dict()["overflow"]


def test_finite_closures_are_abelian(rng):
    found = 0
    attempts = 0
    while found < 20 and attempts < 200:
        attempts += 1
        gens = conjugated_sign_flips(rng)
        if rng.random() < 0.3:
            gens.append(element(2, [(-1, 0), (1, rng.randint(-1, 1))]))
        closure = subgroup_closure(gens, cap=64)
        if closure.overflow:
            continue
        assert closure.abelian
        found += 1
    assert found == 20
