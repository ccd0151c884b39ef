"""
Affine cross-sections for unipotent triangular actions.

An AdditiveFlow is a one-parameter action x_i -> x_i + F_i(u). slice_chain repeatedly
takes the first moving flow, reads its slope s at the deepest moving coordinate x_d,
cuts x_d = c and pulls the remaining coordinates back along the flow at
u0 = (c - x_d)/s. The pulled back coordinates are invariants of the pivot flow and
carry an induced action of the other flows on one coordinate less.
"""
import logging
import math
from fractions import Fraction
from itertools import combinations

from more_itertools import first_true
from sympy import Matrix, Rational

import multipoly
from core_arith import to_rational
from jonquieres_consts import (
    CandidatesExhaustedException,
    ConsistencyException,
    DegenerateConstantException,
    SliceLevel,
    SliceResult,
    SlopeData,
    UndefinedMapException,
    ValidationException,
)
from ratfunc import (
    RatFunc,
    canonicalize,
    depends_only_on,
    derivative,
    evaluate,
    matrix_rank,
    substitute,
)

logger = logging.getLogger("Slice")

DEFAULT_CANDIDATES = (0, 1, -1, 2, -2, 3)


class AdditiveFlow:
    def __init__(self, n, increments):
        """
        :param n: variable count
        :param increments: F_1..F_n as RatFunc in x1..xn and the parameter u
        """
        self.n = n
        self.increments = list(increments)

    def increment(self, i):
        return self.increments[i - 1]

    def is_trivial(self):
        return all(f.is_zero() for f in self.increments)

    def images(self):
        """Images at the flow parameter u itself"""
        return {
            f"x{i}": RatFunc.x(i) + f for i, f in enumerate(self.increments, start=1)
        }

    def act(self, f: RatFunc) -> RatFunc:
        return substitute(f, self.images())

    def __repr__(self):
        moves = ", ".join(
            f"x{i} += {f}" for i, f in enumerate(self.increments, start=1) if not f.is_zero()
        )
        return f"AdditiveFlow(n={self.n}: {moves or 'trivial'})"


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    return RatFunc.from_value(to_rational(value))


def validate_flow(flow: AdditiveFlow) -> AdditiveFlow:
    """
    Triangularity, F(0) = 0 and the one-parameter group law, all checked symbolically
    with a second parameter v.
    """
    if len(flow.increments) != flow.n:
        raise ValidationException(f"expected {flow.n} increments, got {len(flow.increments)}")
    u, v = RatFunc.param("u"), RatFunc.param("v")
    for i, f in enumerate(flow.increments, start=1):
        if any(j > flow.n for j in f.x_indices()):
            raise ValidationException(f"F_{i} uses variables beyond x{flow.n}", index=i)
        if any(name not in ("u",) and not name.startswith("x") for name in f.variables()):
            raise ValidationException(f"F_{i} uses a parameter other than u", index=i)
        if not depends_only_on(f, i):
            raise ValidationException(f"F_{i} not in K_{i}", index=i)
        try:
            at_zero = substitute(f, {"u": RatFunc.zero()})
        except UndefinedMapException:
            at_zero = None
        if at_zero is None or not at_zero.is_zero():
            raise ValidationException(f"F(0) != 0 at index {i}", index=i)

    at_v = {
        f"x{j}": RatFunc.x(j) + substitute(g, {"u": v})
        for j, g in enumerate(flow.increments, start=1)
    }
    for i, f in enumerate(flow.increments, start=1):
        if f.is_zero():
            continue
        try:
            combined = substitute(f, at_v) + substitute(f, {"u": v})
        except UndefinedMapException:
            raise ValidationException(f"group law fails at index {i}", index=i)
        if combined != substitute(f, {"u": u + v}):
            raise ValidationException(f"group law fails at index {i}", index=i)
    return flow


def extract_slope(flow: AdditiveFlow) -> SlopeData:
    """
    d = largest moving index, s = F_d(1); F_d must equal u·s.
    """
    d = first_true(
        range(flow.n, 0, -1), default=None, pred=lambda i: not flow.increment(i).is_zero()
    )
    if d is None:
        raise ValidationException("identity flow has no slope")
    f = flow.increment(d)
    s = substitute(f, {"u": RatFunc.one()})
    if s.is_zero() or f != RatFunc.param("u") * s:
        raise ValidationException("not additive", index=d)
    return SlopeData(d, s)


def _rename_down(f: RatFunc, d, n):
    """Drop coordinate d: x_j -> x_{j-1} for j > d"""
    if d == n:
        return f
    mapping = {f"x{j}": f"x{j - 1}" for j in range(d + 1, n + 1)}
    return canonicalize(multipoly.rename(f.num, mapping), multipoly.rename(f.den, mapping))


def slice_step(flows, pivot, c):
    """
    Cut the pivot flow's deepest moving coordinate at x_d = c.

    :param flows: list of valid AdditiveFlow on a common n
    :param pivot: index into flows of a nontrivial flow
    :param c: rational constant
    :return: (SlopeData, pullbacks for every i != d, induced flows on n - 1 variables)
    :raises DegenerateConstantException: some pullback is undefined on x_d = c
    """
    flow = flows[pivot]
    if flow.is_trivial():
        raise ValidationException("pivot flow trivial")
    slope = extract_slope(flow)
    d, s, n = slope.d, slope.s, flow.n
    c = _as_ratfunc(c)
    u0 = (c - RatFunc.x(d)) / s
    on_slice = {f"x{d}": c}

    pullbacks = []
    try:
        for i in range(1, n + 1):
            if i == d:
                continue
            moved = RatFunc.x(i) + substitute(flow.increment(i), {"u": u0})
            if substitute(moved, on_slice) != RatFunc.x(i):
                raise DegenerateConstantException(f"degenerate constant c = {c}", index=d)
            pullbacks.append((i, moved))
    except UndefinedMapException:
        raise DegenerateConstantException(f"degenerate constant c = {c}", index=d)

    for i, moved in pullbacks:
        if flow.act(moved) != moved:
            raise ConsistencyException(f"pullback of x{i} is not invariant", index=i)

    induced = []
    for k, other in enumerate(flows):
        if k == pivot:
            continue
        increments = []
        for i, moved in pullbacks:
            try:
                restricted = substitute(other.act(moved), on_slice)
            except UndefinedMapException:
                raise DegenerateConstantException(f"degenerate constant c = {c}", index=d)
            increments.append(_rename_down(restricted - RatFunc.x(i), d, n))
        induced.append(validate_flow(AdditiveFlow(n - 1, increments)))

    return slope, [moved for _, moved in pullbacks], induced


def slice_chain(flows, candidates=DEFAULT_CANDIDATES) -> SliceResult:
    """
    Iterate slice_step until every induced flow is trivial.

    The invariants are the composed pullbacks written in the original variables.
    """
    flows = [validate_flow(flow) for flow in flows]
    if not flows:
        raise ValidationException("at least one flow is required")
    n = flows[0].n
    if any(flow.n != n for flow in flows):
        raise ValidationException("flows must share the same n")
    candidates = [to_rational(c) for c in candidates]

    coordinates = list(range(1, n + 1))
    embedding = [RatFunc.x(i) for i in coordinates]
    cuts = []
    levels = []
    while True:
        pivot = first_true(
            range(len(flows)), default=None, pred=lambda k: not flows[k].is_trivial()
        )
        if pivot is None:
            break
        d = extract_slope(flows[pivot]).d
        for c in candidates:
            try:
                slope, pullbacks, induced = slice_step(flows, pivot, c)
                break
            except DegenerateConstantException as e:
                logger.debug(f"x{coordinates[d - 1]} = {c} rejected: {e}")
        else:
            raise CandidatesExhaustedException(
                f"candidates exhausted at level {coordinates[d - 1]}",
                index=coordinates[d - 1],
            )
        levels.append(SliceLevel(list(coordinates), flows[pivot], slope, c))
        cuts.append((coordinates[d - 1], c))
        logger.debug(f"cut x{coordinates[d - 1]} = {c}, slope {slope.s}")

        current = {f"x{j}": embedding[j - 1] for j in range(1, len(coordinates) + 1)}
        embedding = [substitute(moved, current) for moved in pullbacks]
        coordinates = [j for k, j in enumerate(coordinates, start=1) if k != d]
        flows = induced

    cuts.sort()
    return SliceResult(
        n,
        [index for index, _ in cuts],
        [c for _, c in cuts],
        embedding,
        coordinates,
        levels,
    )


def orbit_dimension(flows) -> int:
    """
    Rank over k(x) of the velocity vectors dF/du at u = 0.
    """
    velocities = [
        [
            substitute(derivative(f, "u"), {"u": RatFunc.zero()})
            for f in flow.increments
        ]
        for flow in flows
    ]
    velocities = [row for row in velocities if any(not f.is_zero() for f in row)]
    return matrix_rank(velocities) if velocities else 0


def verify_cross_section(flows, result: SliceResult) -> bool:
    """
    (a) every invariant is fixed by every flow, (b) the invariants restricted to the
    subspace are the free coordinates, (c) the number of cut coordinates is the
    generic orbit dimension and the invariant count is n minus that number.
    """
    flows = list(flows)
    n = result.n
    m = len(result.indices)
    if len(result.invariants) != n - m or len(result.free_indices) != n - m:
        logger.debug("invariant count does not match the number of free coordinates")
        return False
    if m != orbit_dimension(flows):
        logger.debug("cut count differs from the orbit dimension")
        return False
    subspace = {f"x{i}": RatFunc.from_value(c) for i, c in result.subspace}
    try:
        for f in result.invariants:
            if any(flow.act(f) != f for flow in flows):
                logger.debug(f"{f} is not invariant")
                return False
        for f, i in zip(result.invariants, result.free_indices):
            if substitute(f, subspace) != RatFunc.x(i):
                logger.debug(f"{f} does not restrict to x{i}")
                return False
    except UndefinedMapException:
        return False
    return True


def flow_to_slice(result: SliceResult, point):
    """
    Move a rational point onto the subspace along the recorded pivot flows.

    :return: the point on the subspace as a list of n Fractions, or None when some
             slope or increment is undefined along the way
    """
    current = [to_rational(c) for c in point]
    for level in result.levels:
        d, s = level.slope.d, level.slope.s
        slope_value = evaluate(s, current)
        if not slope_value:
            return None
        u0 = (to_rational(level.constant) - current[d - 1]) / slope_value
        moved = []
        for i, f in enumerate(level.pivot.increments, start=1):
            if i == d:
                continue
            step = evaluate(f, current, {"u": u0})
            if step is None:
                return None
            moved.append(current[i - 1] + step)
        current = moved
    landed = [Fraction(0)] * result.n
    for i, c in result.subspace:
        landed[i - 1] = to_rational(c)
    for i, value in zip(result.free_indices, current):
        landed[i - 1] = value
    return landed


class NilpotentAlgebra:
    def __init__(self, dim, structure):
        """
        Lie algebra with basis e_1..e_dim.

        :param structure: dict (i, j, k) -> c with i < j, meaning [e_i, e_j] has
                          coefficient c on e_k
        """
        self.dim = dim
        self.structure = {key: to_rational(c) for key, c in structure.items()}

    def bracket(self, i, j):
        """[e_i, e_j] as a dict k -> coefficient"""
        if i == j:
            return {}
        sign = 1 if i < j else -1
        a, b = min(i, j), max(i, j)
        return {
            k: sign * c for (p, q, k), c in self.structure.items() if (p, q) == (a, b)
        }

    def _bracket_vectors(self, x, y):
        result = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket(i, j).items():
                    result[k] = result.get(k, 0) + a * b * c
        return {k: c for k, c in result.items() if c}

    def validate(self):
        for (i, j, k), c in self.structure.items():
            if not all(1 <= a <= self.dim for a in (i, j, k)):
                raise ValidationException(f"bracket index outside 1..{self.dim}", index=k)
            if c and not k > j > i:
                raise ValidationException(
                    "structure constants not strictly triangular", index=k
                )
        for a, b, c in combinations(range(1, self.dim + 1), 3):
            total = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for k, coeff in self._bracket_vectors({x: 1}, self.bracket(y, z)).items():
                    total[k] = total.get(k, 0) + coeff
            if any(total.values()):
                raise ValidationException("Jacobi identity violated")
        return self

    def coadjoint_matrix(self, j):
        """B with (B·x)_k = sum_l c_{jk}^l x_l"""
        rows = [[Rational(0)] * self.dim for _ in range(self.dim)]
        for k in range(1, self.dim + 1):
            for l, c in self.bracket(j, k).items():
                rows[k - 1][l - 1] = Rational(c.numerator, c.denominator)
        return Matrix(rows)


def coadjoint_flows(algebra: NilpotentAlgebra):
    """
    One flow per basis element: x -> exp(u·B_j)·x with B_j = coadjoint_matrix(j),
    a finite sum since B_j is nilpotent.
    """
    algebra.validate()
    n = algebra.dim
    u = RatFunc.param("u")
    xs = [RatFunc.x(i) for i in range(1, n + 1)]
    flows = []
    for j in range(1, n + 1):
        b = algebra.coadjoint_matrix(j)
        increments = [RatFunc.zero() for _ in range(n)]
        power = b
        for p in range(1, n + 1):
            if power.is_zero_matrix:
                break
            scale = u ** p / math.factorial(p)
            for k in range(n):
                for l in range(n):
                    entry = power[k, l]
                    if entry != 0:
                        coefficient = Fraction(int(entry.p), int(entry.q))
                        increments[k] = increments[k] + scale * coefficient * xs[l]
            power = power * b
        flows.append(validate_flow(AdditiveFlow(n, increments)))
    logger.debug(f"built {len(flows)} coadjoint flows in dimension {n}")
    return flows
