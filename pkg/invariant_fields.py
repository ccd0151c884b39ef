"""
Invariant fields of triangular groups and of diagonal tori.

miyata_step looks for a polynomial z in x_i with coefficients in K_i that every
generator fixes. The coefficients are unknown polynomials of bounded degree over a
fixed denominator, so invariance is a linear system over the rationals.
"""
import logging
from fractions import Fraction

from more_itertools import first_true
from sympy import Matrix

import multipoly
from core_arith import kernel_basis, to_rational
from jonq_group import apply
from jonquieres_consts import (
    AnsatzBounds,
    ChainLevel,
    ChainResult,
    LevelStatus,
    ValidationException,
)
from ratfunc import RatFunc, canonicalize, derivative, matrix_rank

logger = logging.getLogger("Invariants")


def _common_n(gens):
    gens = list(gens)
    if not gens:
        raise ValidationException("at least one generator is required")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValidationException("generators must share the same n")
    return gens, n


def _ansatz_denominator(gens, i):
    """lcm of the denominators of mu_j, f_j (j >= i) over every generator"""
    den = multipoly.RING.one
    for g in gens:
        for j in range(i, g.n + 1):
            for part in g.pairs[j - 1]:
                den = multipoly.lcm(den, part.den)
    return den


def _equations(images):
    """
    Rows of the linear system sum_j a_j·images[j] = 0 for one generator.

    The images are brought over a common denominator and every monomial of the
    resulting numerators gives one row.
    """
    common = multipoly.RING.one
    for image in images:
        common = multipoly.lcm(common, image.den)
    numerators = [image.num * multipoly.exact_div(common, image.den) for image in images]
    rows = {}
    for j, numerator in enumerate(numerators):
        for monom, coeff in numerator.iterterms():
            rows.setdefault(monom, [0] * len(images))[j] = to_rational(coeff)
    return [rows[monom] for monom in sorted(rows)]


def _nullspace(rows, width):
    if not rows:
        return [[Fraction(int(j == k)) for j in range(width)] for k in range(width)]
    basis = Matrix(rows).nullspace()
    return [[Fraction(int(entry.p), int(entry.q)) for entry in vector] for vector in basis]


def miyata_step(gens, i, bounds=None):
    """
    Lowest-degree invariant polynomial in x_i over K_i, within the ansatz bounds.

    :param gens: list of valid JonqElement sharing n
    :param i: flag index, 1 <= i <= n
    :param bounds: AnsatzBounds
    :return: the normalized invariant RatFunc, or None when the bounded search fails
    """
    gens, n = _common_n(gens)
    bounds = bounds or AnsatzBounds()
    if not 1 <= i <= n:
        raise ValidationException(f"flag index {i} outside 1..{n}", index=i)
    tail = [f"x{j}" for j in range(i + 1, n + 1)]
    t = RatFunc.x(i)
    base = _ansatz_denominator(gens, i)
    image_cache = {}

    for d in range(1, bounds.max_degree_in_t + 1):
        denominator = canonicalize(base ** d, multipoly.RING.one)
        for c in range(bounds.max_coeff_degree + 1):
            monomials = multipoly.monomials_up_to(tail, c)
            unknowns = [(k, m) for k in range(d, -1, -1) for m in monomials]
            basis = [
                RatFunc.from_polynomial(m.to_polynomial()) * t ** k / denominator
                for k, m in unknowns
            ]
            rows = []
            for g_index, g in enumerate(gens):
                moved = []
                for (k, m), b in zip(unknowns, basis):
                    key = (g_index, d, k, m)
                    if key not in image_cache:
                        image_cache[key] = apply(g, b) - b
                    moved.append(image_cache[key])
                rows.extend(_equations(moved))
            solutions = _nullspace(rows, len(unknowns))
            top = len(monomials)
            solution = first_true(solutions, pred=lambda v: any(v[:top]))
            logger.debug(
                f"level {i}: degree {d}, coefficient degree {c}, "
                f"{len(unknowns)} unknowns, {len(solutions)} solutions"
            )
            if solution is None:
                continue
            z = RatFunc.zero()
            leading = RatFunc.zero()
            for a, (k, m), b in zip(solution, unknowns, basis):
                if a:
                    z = z + b * a
                    if k == d:
                        leading = leading + b * a
            z = z / to_rational(leading.num.LC)
            logger.debug(f"level {i}: invariant {z}")
            return z
    logger.debug(f"level {i}: no invariant within {bounds.to_dict()}")
    return None


def _fixes_tail(g, i):
    return all(
        g.mu(j) == 1 and g.f(j).is_zero() for j in range(i + 1, g.n + 1)
    )


def _is_trivial_level(gens, i):
    """
    Every generator fixes x_{i+1..n} and some generator translates x_i by a nonzero
    f, so every invariant polynomial of K_i[x_i] is constant in x_i.
    """
    if not all(_fixes_tail(g, i) for g in gens):
        return False
    return any(g.mu(i) == 1 and not g.f(i).is_zero() for g in gens)


def invariant_chain(gens, bounds=None, certify_trivial=False) -> ChainResult:
    """
    Run miyata_step down the flag, from i = n to 1.
    """
    gens, n = _common_n(gens)
    bounds = bounds or AnsatzBounds()
    levels = []
    generators = []
    for i in range(n, 0, -1):
        z = miyata_step(gens, i, bounds)
        if z is not None:
            for g in gens:
                if apply(g, z) != z:
                    raise ValidationException(f"level {i} produced a non-invariant", index=i)
            levels.append(ChainLevel(i, LevelStatus.CERTIFIED, generator=z))
            generators.append(z)
        elif certify_trivial and _is_trivial_level(gens, i):
            levels.append(ChainLevel(i, LevelStatus.TRIVIAL))
        else:
            levels.append(ChainLevel(i, LevelStatus.UNRESOLVED, bounds=bounds))
    complete = all(level.status != LevelStatus.UNRESOLVED for level in levels)
    pure = complete and check_independence(generators)
    return ChainResult(levels, generators, pure)


def reynolds_average(elements, f: RatFunc) -> RatFunc:
    """
    Average of g·f over the elements of a finite group.
    """
    elements = list(elements)
    total = RatFunc.zero()
    for g in elements:
        total = total + apply(g, f)
    return total / len(elements)


def monomial(exponents) -> RatFunc:
    """Laurent monomial x^v; negative exponents go to the denominator"""
    num = multipoly.RING.one
    den = multipoly.RING.one
    for i, e in enumerate(exponents, start=1):
        if e > 0:
            num *= multipoly.x(i) ** e
        elif e < 0:
            den *= multipoly.x(i) ** -e
    return canonicalize(num, den)


def torus_monomial_invariants(weights):
    """
    Monomials x^v with v in the integer kernel of the weight matrix.

    :param weights: IntMatrix, m x n
    :return: list of RatFunc, n - rank(W) of them
    """
    return [monomial(v) for v in kernel_basis(weights)]


def check_independence(fs) -> bool:
    """
    Algebraic independence through the rank of the Jacobian over k(x).
    """
    fs = list(fs)
    if not fs:
        return True
    n = max((max(f.x_indices(), default=0) for f in fs), default=0)
    if n < len(fs):
        return False
    jacobian = [[derivative(f, f"x{k}") for k in range(1, n + 1)] for f in fs]
    return matrix_rank(jacobian) == len(fs)
