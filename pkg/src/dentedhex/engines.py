"""Two independent exact counting engines.

count_brute / qcount_brute enumerate perfect matchings of the region's
dual graph (vertices = unit triangles, edges = shared sides honoring the
forbidden crossing positions) by a deterministic depth-first search that
always branches on the lowest-indexed uncovered triangle. They are the
oracle: slow, simple, and obviously faithful to the region.

count_axis / qcount_axis cut every tiling along the axis. Exactly y of the
free base positions are straddled by vertical lozenges, so the count is a
sum over y-subsets S of products of two dented-semihexagon counts, with
dents U+S on top and D+S below. The weighted version evaluates the lower
half through the reflected dent set with q replaced by 1/q, which is how
a 180-degree rotation acts on the weights.

Weight convention (pinned by the calibration test qcount on a one-row
semihexagon with dent s giving q^(s-1)): only right-tilting lozenges
{up(a,b), down(a,b)} carry weight, q^(b+1) in rows b >= 0 and q^b in rows
b <= -1; all other lozenges have weight 1.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .exactnum import QPoly
from .formulas import clp_q_dents, schur_ones
from .lattice import (KIND_L, KIND_R, KIND_V, Lozenge, Tiling,
                      TriangularRegion, Triangle, ValidatedSpec,
                      reflect_positions)

BRUTE_LIMIT = 120


class RegionTooLarge(RuntimeError):
    """The region exceeds the configured brute-force triangle budget."""


def _right_tilt_exponent(b: int) -> int:
    return b + 1 if b >= 0 else b


def _dual_graph(region: TriangularRegion):
    """Sorted triangle list plus, per triangle, its partner (index, weight)."""
    tris = sorted(region.triangles)
    index = {t: i for i, t in enumerate(tris)}
    partners: list[list[tuple[int, int]]] = [[] for _ in tris]
    for t in tris:
        if not t.up:
            continue
        i = index[t]
        mates = (
            (Triangle(t.a, t.b, False), _right_tilt_exponent(t.b)),  # R
            (Triangle(t.a - 1, t.b, False), 0),                      # L
            (Triangle(t.a, t.b - 1, False), 0),                      # V
        )
        for mate, w in mates:
            j = index.get(mate)
            if j is None:
                continue
            if (mate.b == t.b - 1 and t.b == 0
                    and (t.a + 1) in region.forbidden_vertical):
                continue
            partners[i].append((j, w))
            partners[j].append((i, w))
    for ps in partners:
        ps.sort()
    return tris, partners


def _check_size(region: TriangularRegion, limit: int | None):
    m = len(region.triangles)
    cap = BRUTE_LIMIT if limit is None else limit
    if m > cap:
        raise RegionTooLarge(f"{m} triangles exceeds the limit {cap}")
    return m


def count_brute(region: TriangularRegion, limit: int | None = None) -> int:
    """Number of perfect matchings of the dual graph; empty region -> 1."""
    m = _check_size(region, limit)
    if m == 0:
        return 1
    if m % 2:
        return 0
    _, partners = _dual_graph(region)
    padj = [tuple(j for j, _ in ps) for ps in partners]
    full = (1 << m) - 1

    def rec(covered: int) -> int:
        if covered == full:
            return 1
        rest = full & ~covered
        i = (rest & -rest).bit_length() - 1
        total = 0
        for j in padj[i]:
            if not covered >> j & 1:
                total += rec(covered | (1 << i) | (1 << j))
        return total

    return rec(0)


def qcount_brute(region: TriangularRegion, limit: int | None = None) -> QPoly:
    """Sum of q-weights over all tilings, as a Laurent polynomial."""
    m = _check_size(region, limit)
    if m == 0:
        return QPoly.one()
    if m % 2:
        return QPoly.zero()
    _, partners = _dual_graph(region)
    full = (1 << m) - 1
    acc: dict[int, int] = {}

    def rec(covered: int, expo: int):
        if covered == full:
            acc[expo] = acc.get(expo, 0) + 1
            return
        rest = full & ~covered
        i = (rest & -rest).bit_length() - 1
        for j, w in partners[i]:
            if not covered >> j & 1:
                rec(covered | (1 << i) | (1 << j), expo + w)

    rec(0, 0)
    return QPoly(acc)


def _classify(up: Triangle, down: Triangle) -> Lozenge:
    if down.a == up.a and down.b == up.b:
        return Lozenge(KIND_R, up.a, up.b)
    if down.a == up.a - 1 and down.b == up.b:
        return Lozenge(KIND_L, up.a, up.b)
    if down.a == up.a and down.b == up.b - 1:
        return Lozenge(KIND_V, up.a, up.b)
    raise ValueError("triangles do not form a lozenge")


def enumerate_tilings(region: TriangularRegion, limit: int | None = None,
                      max_triangles: int | None = None) -> list[Tiling]:
    """All tilings in deterministic DFS order, truncated at limit."""
    m = _check_size(region, max_triangles)
    if m == 0:
        return [Tiling()]
    if m % 2:
        return []
    tris, partners = _dual_graph(region)
    full = (1 << m) - 1
    out: list[Tiling] = []

    def rec(covered: int, chosen: list[Lozenge]) -> bool:
        if limit is not None and len(out) >= limit:
            return False
        if covered == full:
            out.append(Tiling(chosen))
            return limit is None or len(out) < limit
        rest = full & ~covered
        i = (rest & -rest).bit_length() - 1
        for j, _ in partners[i]:
            if not covered >> j & 1:
                a, b = tris[i], tris[j]
                if not a.up:
                    a, b = b, a
                chosen.append(_classify(a, b))
                alive = rec(covered | (1 << i) | (1 << j), chosen)
                chosen.pop()
                if not alive:
                    return False
        return True

    rec(0, [])
    return out


def tiling_qweight(tiling: Tiling) -> QPoly:
    """Weight monomial of one tiling: q to the summed right-tilt exponents."""
    e = 0
    for loz in tiling:
        if loz.kind == KIND_R:
            e += _right_tilt_exponent(loz.b)
    return QPoly.monomial(e)


def crossing_subsets(free: Sequence[int], y: int) -> Iterator[tuple[int, ...]]:
    """y-subsets of the free positions in colexicographic order."""
    items = tuple(free)

    def colex(n: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for last in range(k - 1, n):
            for rest in colex(last, k - 1):
                yield rest + (last,)

    for idxs in colex(len(items), y):
        yield tuple(items[i] for i in idxs)


def count_axis(spec: ValidatedSpec) -> int:
    """Closed-form count: sum over crossing subsets of semihexagon products."""
    if spec.y > len(spec.free):
        return 0
    total = 0
    for S in crossing_subsets(spec.free, spec.y):
        upper = tuple(sorted(spec.U + S))
        lower = tuple(sorted(spec.D + S))
        total += schur_ones(upper) * schur_ones(lower)
    return total


def qcount_axis(spec: ValidatedSpec) -> QPoly:
    """Closed-form tiling generating function, exactly equal to qcount_brute.

    Upper halves are weighted as dented semihexagons; lower halves are the
    reflected dent sets evaluated at 1/q.
    """
    if spec.y > len(spec.free):
        return QPoly.zero()
    total = QPoly.zero()
    for S in crossing_subsets(spec.free, spec.y):
        upper = tuple(sorted(spec.U + S))
        lower = reflect_positions(sorted(spec.D + S), spec.L)
        term = clp_q_dents(upper) * clp_q_dents(lower).invert_variable()
        total = total + term
    return total
