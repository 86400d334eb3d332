"""Verification checks: every identity the library claims, tested on
concrete instances with exact arithmetic. A report never passes within a
tolerance; pass means exact equality of integers or polynomials.

The oracle hierarchy, strongest first: qcount_brute, count_brute,
qcount_axis, count_axis, closed forms. Each check states which engine it
leans on.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .engines import count_axis, count_brute, crossing_subsets, qcount_axis
from .exactnum import QRatio
from .formulas import (ClusterSpec, IncompatibleClusters, ShuffleInstance,
                       _gen_shuffle_rhs_collapsed_pp, asym_rhs,
                       gen_shuffle_rhs, q_shift_exponent_alt, q_shuffle_rhs,
                       schur_ones, shuffle_rhs)
from .lattice import (SpecError, ValidatedSpec, build_region,
                      clusters_to_spec, make_spec)


class NoDistinctAlphaBeta(SpecError):
    """The condensation recurrence needs two distinct free axis positions."""


class TermBudgetExceeded(RuntimeError):
    pass


@dataclass
class CheckReport:
    name: str
    instance: dict
    lhs: str
    rhs: str
    passed: bool
    elapsed: float

    def json_line(self) -> str:
        # elapsed is deliberately excluded: report bytes must not depend on
        # timing or parallelism.
        return json.dumps(
            {"name": self.name, "instance": self.instance, "lhs": self.lhs,
             "rhs": self.rhs, "pass": self.passed},
            sort_keys=True, separators=(",", ":"))


def _report(name: str, instance: dict, lhs: str, rhs: str, passed: bool,
            t0: float) -> CheckReport:
    return CheckReport(name, instance, lhs, rhs, bool(passed),
                       time.perf_counter() - t0)


def check_thm1(inst: ShuffleInstance, rhs_scale: Fraction = Fraction(1)) -> CheckReport:
    """Size-preserving shuffle: count ratio equals the delta-product ratio.

    Verified as the exact integer identity count_a * rhs.den == count_b *
    rhs.num. rhs_scale is a negative-control hook that multiplies the
    predicted ratio before comparing.
    """
    t0 = time.perf_counter()
    if inst.B:
        raise SpecError("the size-preserving identity is stated without barriers")
    ratio = shuffle_rhs(inst) * rhs_scale
    a = count_axis(inst.spec_a())
    b = count_axis(inst.spec_b())
    passed = a * ratio.denominator == b * ratio.numerator
    return _report("thm1", inst.to_json_dict(), f"{a}/{b}", str(ratio),
                   passed, t0)


def check_pair_product(inst: ShuffleInstance) -> CheckReport:
    """count(x,y;U,D) * count(x+y,0;U2,D2) == count(x,y;U2,D2) * count(x+y,0;U,D).

    The flat companions share the base length, so positions transfer as is.
    """
    t0 = time.perf_counter()
    if not inst.thm1_shaped():
        raise SpecError("size-preserving shuffle required here")
    if inst.B:
        raise SpecError("the pair-product identity is stated without barriers")
    a = count_axis(inst.spec_a())
    b = count_axis(inst.spec_b())
    flat = inst.x + inst.y
    fa = count_axis(make_spec(flat, 0, inst.U, inst.D, ()))
    fb = count_axis(make_spec(flat, 0, inst.U2, inst.D2, ()))
    passed = a * fb == b * fa
    return _report("pair_product", inst.to_json_dict(),
                   f"{a}*{fb}", f"{b}*{fa}", passed, t0)


def check_thm2(inst: ShuffleInstance, collapsed_pp: bool = False) -> CheckReport:
    """General shuffle with flips and barriers: count ratio equals
    gen_shuffle_rhs. collapsed_pp switches in the known-bad box factor as a
    negative control."""
    t0 = time.perf_counter()
    ratio = (_gen_shuffle_rhs_collapsed_pp(inst) if collapsed_pp
             else gen_shuffle_rhs(inst))
    a = count_axis(inst.spec_a())
    b = count_axis(inst.spec_b())
    passed = a * ratio.denominator == b * ratio.numerator
    name = "thm2_collapsed_pp_control" if collapsed_pp else "thm2"
    return _report(name, inst.to_json_dict(), f"{a}/{b}", str(ratio),
                   passed, t0)


def check_barrier_independence(inst: ShuffleInstance,
                               barrier_sets: Sequence[Sequence[int]]) -> CheckReport:
    """The shuffle ratio does not see the barrier set: all pairwise
    cross-products of counts over the given barrier sets must agree."""
    t0 = time.perf_counter()
    counts = []
    for B in barrier_sets:
        a = count_axis(make_spec(inst.x, inst.y, inst.U, inst.D, tuple(B)))
        b = count_axis(make_spec(inst.x, inst.y, inst.U2, inst.D2, tuple(B)))
        counts.append((a, b))
    passed = True
    for i in range(len(counts)):
        for j in range(i + 1, len(counts)):
            ai, bi = counts[i]
            aj, bj = counts[j]
            if ai * bj != aj * bi:
                passed = False
    instance = dict(inst.to_json_dict(),
                    barrier_sets=[list(B) for B in barrier_sets])
    lhs = ";".join(f"{a}/{b}" for a, b in counts)
    return _report("barrier_independence", instance, lhs,
                   "all cross-products equal", passed, t0)


def check_thm3(inst: ShuffleInstance, use_alt_shift: bool = False,
               integer_gap_control: bool = False) -> CheckReport:
    """Weighted shuffle: the ratio of tiling generating functions equals
    q_shuffle_rhs, compared by cross-multiplication of Laurent polynomials.

    use_alt_shift swaps in the rejected q-power variant; integer_gap_control
    swaps in the known-bad integer gap factor. Both are negative controls.
    """
    t0 = time.perf_counter()
    shift = q_shift_exponent_alt(inst) if use_alt_shift else None
    rhs = q_shuffle_rhs(inst, shift=shift,
                        integer_gap_control=integer_gap_control)
    a = qcount_axis(inst.spec_a())
    b = qcount_axis(inst.spec_b())
    passed = QRatio(a, b) == rhs
    name = "thm3"
    if use_alt_shift:
        name = "thm3_alt_shift_control"
    if integer_gap_control:
        name = "thm3_integer_gap_control"
    return _report(name, inst.to_json_dict(), f"({a}) / ({b})", str(rhs),
                   passed, t0)


def check_kuo(spec: ValidatedSpec) -> CheckReport:
    """Condensation recurrence among six regions, as exact polynomials.

    With alpha/beta the first and last axis positions not occupied by a
    dent or a barrier, and all regions sharing D and B:

      Mq(x,y; U) * Mq(x-1,y-1; U+ab) ==
          Mq(x-1,y; U+b) * Mq(x,y-1; U+a)
        + Mq(x-1,y; U+a) * Mq(x,y-1; U+b)

    Every term is computed by qcount_axis; the base length is the same for
    all six regions, so positions keep their meaning.
    """
    t0 = time.perf_counter()
    if spec.x < 1 or spec.y < 1:
        raise SpecError("recurrence needs x >= 1 and y >= 1")
    complement = [k for k in range(1, spec.L + 1)
                  if k not in set(spec.U) | set(spec.D) | set(spec.B)]
    if len(complement) < 2:
        raise NoDistinctAlphaBeta("need two distinct removable positions")
    alpha, beta = complement[0], complement[-1]

    def mq(x, y, extra):
        U = tuple(sorted(spec.U + extra))
        return qcount_axis(make_spec(x, y, U, spec.D, spec.B))

    lhs = mq(spec.x, spec.y, ()) * mq(spec.x - 1, spec.y - 1, (alpha, beta))
    rhs = (mq(spec.x - 1, spec.y, (beta,)) * mq(spec.x, spec.y - 1, (alpha,))
           + mq(spec.x - 1, spec.y, (alpha,)) * mq(spec.x, spec.y - 1, (beta,)))
    instance = dict(spec.to_json_dict(), alpha=alpha, beta=beta)
    return _report("kuo", instance, str(lhs), str(rhs), lhs == rhs, t0)


def check_schur_sum(spec: ValidatedSpec, limit: int | None = None) -> CheckReport:
    """The axis-cut sum against the brute-force oracle.

    This is the correctness proof of count_axis, so the left side must be
    count_brute. Barrier-free specs only.
    """
    t0 = time.perf_counter()
    if spec.B:
        raise SpecError("the crossing-sum identity is stated without barriers")
    lhs = count_brute(build_region(spec), limit=limit)
    rhs = 0
    for S in crossing_subsets(spec.free, spec.y):
        rhs += (schur_ones(tuple(sorted(spec.U + S)))
                * schur_ones(tuple(sorted(spec.D + S))))
    return _report("schur_sum", spec.to_json_dict(), str(lhs), str(rhs),
                   lhs == rhs, t0)


@dataclass(frozen=True)
class AsymRow:
    N: int
    ratio: Fraction
    deviation: Fraction  # ratio/limit - 1


@dataclass(frozen=True)
class AsymTable:
    limit: Fraction
    rows: tuple[AsymRow, ...]


def _scaled(c: ClusterSpec, N: int) -> ClusterSpec:
    return ClusterSpec(c.clusters, tuple(g * N for g in c.gaps))


def asym_table(c: ClusterSpec, c2: ClusterSpec, x: int, y: int, n_max: int,
               term_budget: int = 200_000) -> AsymTable:
    """Exact finite-scale ratios against the cluster-product limit.

    Row N counts the regions with hexagon parameters (N*x, N*y) and gaps
    scaled by N, for N = 1..n_max. The crossing sum has C(N*(x+y), N*y)
    terms per count; term_budget caps that.
    """
    limit = asym_rhs(c, c2)
    ups = sum(tok == "up" for cl in c.clusters for tok in cl)
    ups2 = sum(tok == "up" for cl in c2.clusters for tok in cl)
    if ups != ups2:
        # orientation flips change the hexagon data with the scale, so the
        # finite ratios have no common limit to compare against
        raise IncompatibleClusters("total up counts differ between the sides")
    rows = []
    for N in range(1, n_max + 1):
        terms = comb(N * (x + y), N * y)
        if terms > term_budget:
            raise TermBudgetExceeded(
                f"N={N} needs {terms} crossing subsets (budget {term_budget})")
        spec_a = clusters_to_spec(_scaled(c, N), N * x, N * y)
        spec_b = clusters_to_spec(_scaled(c2, N), N * x, N * y)
        ratio = Fraction(count_axis(spec_a), count_axis(spec_b))
        rows.append(AsymRow(N, ratio, ratio / limit - 1))
    return AsymTable(limit, tuple(rows))
