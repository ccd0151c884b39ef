from fractions import Fraction

import pytest

from expr_io import load_algebra, read_algebra, read_flows
from invariant_fields import check_independence
from jonquieres_consts import (
    CandidatesExhaustedException,
    DegenerateConstantException,
    SliceResult,
    ValidationException,
)
from ratfunc import RatFunc, evaluate
from unipotent_slice import (
    AdditiveFlow,
    coadjoint_flows,
    extract_slope,
    flow_to_slice,
    orbit_dimension,
    slice_chain,
    slice_step,
    validate_flow,
    verify_cross_section,
)

from conftest import sample

x = RatFunc.x
u = RatFunc.param("u")


def flow(*increments):
    increments = [f if isinstance(f, RatFunc) else RatFunc.from_value(f) for f in increments]
    return AdditiveFlow(len(increments), increments)


def heisenberg_flows():
    return coadjoint_flows(read_algebra(sample("heisenberg.json")))


def filiform_flows():
    return coadjoint_flows(read_algebra(sample("filiform4.json")))


def test_validate_flow_examples():
    validate_flow(flow(u * x(2), 0))
    with pytest.raises(ValidationException, match="F_1 not in K_1"):
        validate_flow(flow(u * x(1), 0))
    with pytest.raises(ValidationException, match="group law fails at index 1"):
        validate_flow(flow(u ** 2 * x(2), 0))
    with pytest.raises(ValidationException, match="F\\(0\\) != 0"):
        validate_flow(flow(u + 1, 0))
    with pytest.raises(ValidationException, match="F\\(0\\) != 0 at index 1"):
        validate_flow(flow(x(2) / u, 0))


def test_validate_flow_accepts_nonlinear_increments():
    # x2 -> x2 + u*x3, x1 -> x1 + u*x2 + u^2/2*x3
    validate_flow(flow(u * x(2) + u ** 2 / 2 * x(3), u * x(3), 0))


def test_extract_slope_examples():
    slope = extract_slope(flow(u * (x(2) + 1), 0))
    assert (slope.d, slope.s) == (1, x(2) + 1)
    slope = extract_slope(flow(-u * x(3), 0, 0))
    assert (slope.d, slope.s) == (1, -x(3))
    slope = extract_slope(flow(u * x(3), u * x(3), 0))
    assert (slope.d, slope.s) == (2, x(3))
    with pytest.raises(ValidationException, match="identity flow has no slope"):
        extract_slope(flow(0, 0))


def test_slice_step_translation():
    slope, pullbacks, induced = slice_step([flow(u, 0)], 0, 0)
    assert slope.d == 1
    assert pullbacks == [x(2)]
    assert induced == []


def test_slice_step_heisenberg_pivot():
    e1, e2, _ = heisenberg_flows()
    slope, pullbacks, induced = slice_step([e2, e1], 0, 0)
    assert (slope.d, slope.s) == (1, -x(3))
    assert pullbacks == [x(2), x(3)]
    (moved,) = induced
    assert moved.increments == [u * x(2), RatFunc.zero()]


def test_slice_step_nonconstant_slope():
    slope, pullbacks, _ = slice_step([flow(u * x(2), 0)], 0, 1)
    assert slope.s == x(2)
    assert pullbacks == [x(2)]


def test_slice_chain_translation():
    result = slice_chain([flow(u, 0, 0)])
    assert result.indices == [1]
    assert result.invariants == [x(2), x(3)]
    assert result.free_indices == [2, 3]


def test_slice_chain_trivial_flows():
    result = slice_chain([flow(0, 0, 0)])
    assert result.indices == []
    assert result.invariants == [x(1), x(2), x(3)]
    assert verify_cross_section([flow(0, 0, 0)], result)


def test_heisenberg_slice():
    flows = heisenberg_flows()
    result = slice_chain(flows)
    assert result.indices == [1, 2]
    assert result.constants == [0, 0]
    assert result.invariants == [x(3)]
    assert result.to_dict()["subspace"] == ["x1 = 0", "x2 = 0"]
    assert verify_cross_section(flows, result)


def test_heisenberg_orbit_oracle(rng):
    flows = heisenberg_flows()
    result = slice_chain(flows)
    checked = 0
    while checked < 100:
        point = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3)]
        landed = flow_to_slice(result, point)
        if landed is None:
            continue
        assert landed[0] == 0 and landed[1] == 0
        for f in result.invariants:
            assert evaluate(f, landed) == evaluate(f, point)
        checked += 1


def test_heisenberg_flows_from_file():
    flows = read_flows(sample("heisenberg_flows.json"))
    result = slice_chain(flows)
    assert result.indices == [1, 2]
    assert verify_cross_section(flows, result)


def test_verify_cross_section_rejects_wrong_subspaces():
    flows = heisenberg_flows()
    result = slice_chain(flows)
    short = SliceResult(3, [1], [0], [x(2), x(3)], [2, 3], result.levels[:1])
    assert not verify_cross_section(flows, short)
    corrupted = SliceResult(3, [1, 2], [0, 0], [x(3) + x(1)], [3], result.levels)
    assert not verify_cross_section(flows, corrupted)


def test_filiform_slice():
    flows = filiform_flows()
    result = slice_chain(flows)
    assert len(result.indices) == 2
    assert len(result.invariants) == 2
    assert check_independence(result.invariants)
    assert verify_cross_section(flows, result)
    classical = x(3) ** 2 - 2 * x(2) * x(4)
    for f in flows:
        assert f.act(classical) == classical


def test_filiform_orbit_oracle(rng):
    flows = filiform_flows()
    result = slice_chain(flows)
    checked = 0
    while checked < 30:
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)]
        landed = flow_to_slice(result, point)
        if landed is None:
            continue
        for f in result.invariants:
            before = evaluate(f, point)
            if before is not None:
                assert evaluate(f, landed) == before
        checked += 1


def test_coadjoint_flows_examples():
    e1, e2, e3 = heisenberg_flows()
    assert e1.increments == [RatFunc.zero(), u * x(3), RatFunc.zero()]
    assert e2.increments == [-u * x(3), RatFunc.zero(), RatFunc.zero()]
    assert e3.is_trivial()

    f1, f2, f3, f4 = filiform_flows()
    assert f1.increments == [RatFunc.zero(), u * x(3) + u ** 2 / 2 * x(4), u * x(4), RatFunc.zero()]
    assert f2.increments == [-u * x(3), RatFunc.zero(), RatFunc.zero(), RatFunc.zero()]
    assert f3.increments == [-u * x(4), RatFunc.zero(), RatFunc.zero(), RatFunc.zero()]
    assert f4.is_trivial()

    abelian = coadjoint_flows(load_algebra({"dim": 3, "brackets": []}))
    assert all(f.is_trivial() for f in abelian)


def test_jacobi_identity_is_checked():
    with pytest.raises(ValidationException, match="Jacobi identity violated"):
        load_algebra([[2, 3, 4, 1], [1, 4, 5, 1]])


def test_orbit_dimension():
    assert orbit_dimension(heisenberg_flows()) == 2
    assert orbit_dimension(filiform_flows()) == 2
    assert orbit_dimension([flow(0, 0)]) == 0


def conjugated_translation():
    # x2 -> x2 + u with x1 -> x1 + 1/(x2 + u) - 1/x2; the cut x2 = 0 hits the pole
    return flow(1 / (x(2) + u) - 1 / x(2), u)


def test_slice_step_degenerate_constant():
    pivot = conjugated_translation()
    with pytest.raises(DegenerateConstantException):
        slice_step([pivot], 0, 0)
    slope, pullbacks, _ = slice_step([pivot], 0, 1)
    assert slope.d == 2
    assert pullbacks == [x(1) + 1 - 1 / x(2)]
    with pytest.raises(ValidationException, match="pivot flow trivial"):
        slice_step([flow(0, 0), pivot], 0, 0)


def test_slice_chain_retries_constants():
    flows = [conjugated_translation()]
    result = slice_chain(flows)
    assert result.indices == [2]
    assert result.constants == [1]
    assert verify_cross_section(flows, result)


def test_candidates_exhausted():
    with pytest.raises(CandidatesExhaustedException, match="candidates exhausted at level 2"):
        slice_chain([conjugated_translation()], candidates=[0])
