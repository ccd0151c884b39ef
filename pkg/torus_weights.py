"""
Diagonal torus actions given by integer weights, and the affine-line test for the
plane action t·(x1, x2) = (t^d1·x1, t^d2·x2).
"""
import logging
from math import gcd
from multiprocessing import Pool

import multipoly
from config import PARALLEL_JOBS
from core_arith import IntMatrix, invariant_factors, rank, to_rational
from expr_io import render
from jonquieres_consts import (
    FaithfulnessReport,
    LineCertificate,
    RootCase,
    ValidationException,
)
from ratfunc import RatFunc

logger = logging.getLogger("Torus")

# coefficient classes of a line mu1·x1 + mu2·x2 + nu = 0, with unit coefficients
LINE_CASES = (
    ("mu1=0!=mu2, nu!=0", 0, 1, 1),
    ("mu1=0!=mu2, nu=0", 0, 1, 0),
    ("mu2=0!=mu1, nu!=0", 1, 0, 1),
    ("mu2=0!=mu1, nu=0", 1, 0, 0),
    ("mu1*mu2!=0, nu=0", 1, 1, 0),
    ("mu1*mu2!=0, nu!=0", 1, 1, 1),
)


class WeightAction:
    def __init__(self, weights):
        """
        t = (t_1..t_m) acts on x_i by the character prod_k t_k^{W[k][i]}.

        :param weights: IntMatrix (m x n) or a list of rows
        """
        self.weights = weights if isinstance(weights, IntMatrix) else IntMatrix(weights)

    @property
    def m(self):
        return self.weights.rows

    @property
    def n(self):
        return self.weights.cols


def faithfulness_report(action: WeightAction) -> FaithfulnessReport:
    """
    faithful iff W has rank m and every invariant factor is 1; trdeg = n - rank(W).
    """
    r = rank(action.weights)
    factors = invariant_factors(action.weights)
    faithful = r == action.m and all(f == 1 for f in factors)
    return FaithfulnessReport(faithful, action.n - r, r, factors)


def generic_root_count(d1, d2, mu1, mu2, nu) -> int:
    """
    Number of distinct nonzero roots t of mu1·a1·t^d1 + mu2·a2·t^d2 + nu for generic
    (a1, a2), computed over the field Q(a1, a2).
    """
    mu1, mu2, nu = (to_rational(c) for c in (mu1, mu2, nu))
    if not (mu1 or mu2 or nu):
        raise ValidationException("all three coefficients are zero")
    shift = -min(0, d1, d2)
    t = multipoly.variable("t")
    a1 = multipoly.variable("a1")
    a2 = multipoly.variable("a2")
    p = (
        multipoly.constant(mu1) * a1 * t ** (d1 + shift)
        + multipoly.constant(mu2) * a2 * t ** (d2 + shift)
        + multipoly.constant(nu) * t ** shift
    )
    if not p:
        return 0
    part, _ = multipoly.squarefree_part(p, "t")
    return multipoly.degree_in(part, "t")


def line_conditions(d1, d2):
    return {
        "shift_at_least_2": d1 - d2 >= 2,
        "exponents_at_least_2": abs(d1) >= 2 and abs(d2) >= 2,
        "coprime": gcd(d1, d2) == 1,
    }


def describe_line(mu1, mu2, nu) -> str:
    mu1, mu2, nu = (to_rational(c) for c in (mu1, mu2, nu))
    if mu1 == 0:
        return f"x2 = {render(RatFunc.from_value(-nu / mu2))}"
    if mu2 == 0:
        return f"x1 = {render(RatFunc.from_value(-nu / mu1))}"
    line = RatFunc.x(1) * mu1 + RatFunc.x(2) * mu2 + nu
    return f"{render(line)} = 0"


def no_affine_line_certificate(d1, d2) -> LineCertificate:
    """
    Count generic intersections of every class of affine lines with the orbits of
    t·(x1, x2) = (t^d1·x1, t^d2·x2). No class meeting generic orbits exactly once
    means no affine line is a rational cross-section.
    """
    cases = [
        RootCase(label, mu1, mu2, nu, generic_root_count(d1, d2, mu1, mu2, nu))
        for label, mu1, mu2, nu in LINE_CASES
    ]
    candidate = None
    hit = next((case for case in cases if case.generic_count == 1), None)
    if hit is not None:
        candidate = describe_line(hit.mu1, hit.mu2, hit.nu)
    logger.debug(f"({d1}, {d2}): counts {[case.generic_count for case in cases]}")
    return LineCertificate(d1, d2, cases, line_conditions(d1, d2), candidate)


def sweep_pairs(max_d):
    return [
        (d1, d2)
        for d1 in range(2, max_d + 1)
        for d2 in range(2, d1)
        if d1 - d2 >= 2 and gcd(d1, d2) == 1
    ]


def line_certificate_sweep(max_d, jobs=PARALLEL_JOBS):
    """
    Certificates for every 2 <= d2 < d1 <= max_d with d1 - d2 >= 2 and gcd 1, ordered
    by (d1, d2).
    """
    pairs = sweep_pairs(max_d)
    if jobs > 1 and len(pairs) > 1:
        logger.debug(f"sweeping {len(pairs)} pairs on {jobs} processes")
        with Pool(jobs) as pool:
            return pool.starmap(no_affine_line_certificate, pairs)
    return [no_affine_line_certificate(d1, d2) for d1, d2 in pairs]
