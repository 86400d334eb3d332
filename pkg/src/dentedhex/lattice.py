"""Triangular-lattice model of dented hexagons with axis barriers.

Coordinates use the oblique basis e1=(1,0), e2=(1/2, sqrt(3)/2). The up
triangle up(a,b) has corners (a,b), (a+1,b), (a,b+1); the down triangle
down(a,b) has corners (a+1,b), (a,b+1), (a+1,b+1). The counting axis is
the horizontal lattice line between rows b=0 and b=-1, and base position
k (1-based) is the unit segment from (k-1,0) to (k,0) on that axis.

A region spec (x, y, U, D, B) is a symmetric hexagon of base length
L = x + y + n, where n = |U union D|, with the up triangles up(s-1,0)
removed for s in U, the down triangles down(t-1,-1) removed for t in D,
and vertical lozenges forbidden across the axis at the positions in B.
Rows 0..y+u-1 hold up(a,b) for 0 <= a <= L-1-b and down(a,b) for
0 <= a <= L-2-b; rows -(y+d)..-1 hold down(a,b) for -b-1 <= a <= L-1 and
up(a,b) for -b <= a <= L-1. This realization reproduces the hexagon side
lengths x+n-u, y+u, y+d, x+n-d, y+d, y+u and makes dents and barriers
pure position lookups.

n is always derived from U and D, never supplied. Degenerate regions
(empty triangle sets) are valid and have exactly one, empty, tiling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class SpecError(ValueError):
    """Base class for invalid region descriptions."""


class NotSorted(SpecError):
    pass


class DuplicateEntry(SpecError):
    pass


class PositionOutOfRange(SpecError):
    pass


class BarrierOverlap(SpecError):
    pass


class TooManyBarriers(SpecError):
    pass


class GeometryMismatch(SpecError):
    pass


UP = "up"
DOWN = "down"

# Lozenge kinds: R pairs up(a,b) with down(a,b), L pairs up(a,b) with
# down(a-1,b), V pairs up(a,b) with down(a,b-1).
KIND_R = "R"
KIND_L = "L"
KIND_V = "V"


class Triangle(NamedTuple):
    a: int
    b: int
    up: bool


class Lozenge(NamedTuple):
    kind: str
    a: int
    b: int


def lozenge_triangles(loz: Lozenge) -> tuple[Triangle, Triangle]:
    """The two unit triangles covered by a lozenge, anchored at its up triangle."""
    up = Triangle(loz.a, loz.b, True)
    if loz.kind == KIND_R:
        return up, Triangle(loz.a, loz.b, False)
    if loz.kind == KIND_L:
        return up, Triangle(loz.a - 1, loz.b, False)
    if loz.kind == KIND_V:
        return up, Triangle(loz.a, loz.b - 1, False)
    raise ValueError(f"unknown lozenge kind {loz.kind!r}")


Tiling = frozenset  # of Lozenge


@dataclass(frozen=True)
class RegionSpec:
    """Raw input: hexagon parameters and axis obstacle positions."""

    x: int
    y: int
    U: tuple[int, ...] = ()
    D: tuple[int, ...] = ()
    B: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidatedSpec:
    """A RegionSpec plus the derived quantities every engine needs.

    free lists the axis positions that may host a crossing vertical
    lozenge: [1..L] minus dents and barriers.
    """

    x: int
    y: int
    U: tuple[int, ...]
    D: tuple[int, ...]
    B: tuple[int, ...]
    n: int
    u: int
    d: int
    L: int
    u_cap_d: tuple[int, ...]
    free: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "U": list(self.U),
            "D": list(self.D),
            "B": list(self.B),
        }


def _checked_positions(name: str, values: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if v < 1:
            raise PositionOutOfRange(f"{name} position {v} is not >= 1")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise DuplicateEntry(f"{name} contains {a} twice")
        if a > b:
            raise NotSorted(f"{name} is not strictly increasing at {a},{b}")
    return out


def validate_spec(raw: RegionSpec) -> ValidatedSpec:
    """Check a raw spec and compute n, u, d, L and the free positions."""
    x, y = int(raw.x), int(raw.y)
    if x < 0 or y < 0:
        raise SpecError("x and y must be nonnegative")
    U = _checked_positions("U", raw.U)
    D = _checked_positions("D", raw.D)
    B = _checked_positions("B", raw.B)
    dents = set(U) | set(D)
    if set(B) & dents:
        raise BarrierOverlap(f"barriers {sorted(set(B) & dents)} collide with dents")
    if len(B) > x:
        raise TooManyBarriers(f"{len(B)} barriers but x={x}")
    n = len(dents)
    L = x + y + n
    blocked = dents | set(B)
    for v in blocked:
        if v > L:
            raise PositionOutOfRange(f"position {v} exceeds the base length {L}")
    free = tuple(k for k in range(1, L + 1) if k not in blocked)
    return ValidatedSpec(
        x=x,
        y=y,
        U=U,
        D=D,
        B=B,
        n=n,
        u=len(U),
        d=len(D),
        L=L,
        u_cap_d=tuple(sorted(set(U) & set(D))),
        free=free,
    )


def make_spec(x: int, y: int, U: Sequence[int] = (), D: Sequence[int] = (),
              B: Sequence[int] = ()) -> ValidatedSpec:
    """Shorthand for validate_spec(RegionSpec(...))."""
    return validate_spec(RegionSpec(x, y, tuple(U), tuple(D), tuple(B)))


# --- JSON wire format ------------------------------------------------------

_JSON_KEYS = {"x", "y", "U", "D", "B"}


def spec_from_json_dict(obj: dict) -> ValidatedSpec:
    """Parse {"x":int,"y":int,"U":[...],"D":[...],"B":[...]} (lists sorted)."""
    if not isinstance(obj, dict):
        raise SpecError("spec JSON must be an object")
    unknown = set(obj) - _JSON_KEYS
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")
    if "x" not in obj or "y" not in obj:
        raise SpecError("spec JSON needs x and y")
    for key in ("x", "y"):
        if not isinstance(obj[key], int) or isinstance(obj[key], bool):
            raise SpecError(f"{key} must be an integer")
    for key in ("U", "D", "B"):
        vals = obj.get(key, [])
        if not isinstance(vals, list) or any(
                not isinstance(v, int) or isinstance(v, bool) for v in vals):
            raise SpecError(f"{key} must be a list of integers")
    return make_spec(obj["x"], obj["y"], obj.get("U", ()), obj.get("D", ()),
                     obj.get("B", ()))


@dataclass(frozen=True)
class TriangularRegion:
    """An explicit set of unit triangles plus forbidden crossing positions."""

    triangles: frozenset
    forbidden_vertical: frozenset
    L: int

    def up_count(self) -> int:
        return sum(1 for t in self.triangles if t.up)

    def down_count(self) -> int:
        return sum(1 for t in self.triangles if not t.up)


def build_region(spec: ValidatedSpec) -> TriangularRegion:
    """Materialize the triangle set of a validated spec."""
    L = spec.L
    tris: set[Triangle] = set()
    for b in range(spec.y + spec.u):
        for a in range(L - b):
            tris.add(Triangle(a, b, True))
        for a in range(L - 1 - b):
            tris.add(Triangle(a, b, False))
    for b in range(-(spec.y + spec.d), 0):
        for a in range(-b - 1, L):
            tris.add(Triangle(a, b, False))
        for a in range(-b, L):
            tris.add(Triangle(a, b, True))
    for s in spec.U:
        tris.remove(Triangle(s - 1, 0, True))
    for t in spec.D:
        tris.remove(Triangle(t - 1, -1, False))
    region = TriangularRegion(frozenset(tris), frozenset(spec.B), L)
    assert region.up_count() == region.down_count(), "region must be balanced"
    return region


@dataclass(frozen=True)
class SemihexSpec:
    """Dented semihexagon: a dents on a base of length a+b, rows 0..a-1."""

    a: int
    b: int
    dents: tuple[int, ...]

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise SpecError("semihexagon sides must be nonnegative")
        dents = _checked_positions("dents", self.dents)
        object.__setattr__(self, "dents", dents)
        if len(dents) != self.a:
            raise SpecError(f"expected {self.a} dents, got {len(dents)}")
        if dents and dents[-1] > self.a + self.b:
            raise PositionOutOfRange(
                f"dent {dents[-1]} exceeds base length {self.a + self.b}")


def build_semihex_region(s: SemihexSpec) -> TriangularRegion:
    """The dented semihexagon as an explicit triangle set (rows 0..a-1)."""
    L = s.a + s.b
    tris: set[Triangle] = set()
    for b in range(s.a):
        for a in range(L - b):
            tris.add(Triangle(a, b, True))
        for a in range(L - 1 - b):
            tris.add(Triangle(a, b, False))
    for pos in s.dents:
        tris.remove(Triangle(pos - 1, 0, True))
    return TriangularRegion(frozenset(tris), frozenset(), L)


def reflect_positions(S: Sequence[int], L: int) -> tuple[int, ...]:
    """Mirror positions through the base midpoint: s -> L+1-s, sorted."""
    out = []
    for s in S:
        if not 1 <= s <= L:
            raise PositionOutOfRange(f"position {s} outside [1..{L}]")
        out.append(L + 1 - s)
    return tuple(sorted(out))


def flip_spec(spec: ValidatedSpec) -> ValidatedSpec:
    """Swap up and down dents (mirror through the axis). An involution."""
    return make_spec(spec.x, spec.y, spec.D, spec.U, spec.B)


def mirror_spec(spec: ValidatedSpec) -> ValidatedSpec:
    """Left-right mirror: reflect U, D and B through the base midpoint."""
    return make_spec(
        spec.x,
        spec.y,
        reflect_positions(spec.U, spec.L),
        reflect_positions(spec.D, spec.L),
        reflect_positions(spec.B, spec.L),
    )


@dataclass(frozen=True)
class ClusterSpec:
    """Dents grouped into contiguous clusters separated by positive gaps.

    clusters[0] sits flush against the west vertex and clusters[-1] flush
    against the east vertex; only those two may be empty. Tokens are UP
    or DOWN, one per occupied position.
    """

    clusters: tuple[tuple[str, ...], ...]
    gaps: tuple[int, ...]

    def __post_init__(self):
        clusters = tuple(tuple(c) for c in self.clusters)
        gaps = tuple(int(g) for g in self.gaps)
        object.__setattr__(self, "clusters", clusters)
        object.__setattr__(self, "gaps", gaps)
        if len(gaps) != len(clusters) - 1:
            raise SpecError("need exactly one gap between consecutive clusters")
        if any(g <= 0 for g in gaps):
            raise SpecError("gaps must be positive")
        for i, c in enumerate(clusters):
            if 0 < i < len(clusters) - 1 and not c:
                raise SpecError("only the first and last cluster may be empty")
            for tok in c:
                if tok not in (UP, DOWN):
                    raise SpecError(f"unknown cluster token {tok!r}")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clusters)


def clusters_to_spec(c: ClusterSpec, x: int, y: int) -> ValidatedSpec:
    """Lay clusters along the base, west to east, and build the spec.

    The total gap length must equal x+y so that the clusters tile the rest
    of the base exactly (east attachment is then automatic).
    """
    if sum(c.gaps) != x + y:
        raise GeometryMismatch(
            f"gaps sum to {sum(c.gaps)}, expected x+y={x + y}")
    U: list[int] = []
    D: list[int] = []
    pos = 1
    for i, cluster in enumerate(c.clusters):
        for tok in cluster:
            (U if tok == UP else D).append(pos)
            pos += 1
        if i < len(c.gaps):
            pos += c.gaps[i]
    return make_spec(x, y, tuple(U), tuple(D), ())


def spec_to_clusters(spec: ValidatedSpec) -> ClusterSpec:
    """Recover the cluster form of a barrier-free spec with disjoint dents."""
    if spec.B:
        raise GeometryMismatch("cluster form has no barriers")
    if spec.u_cap_d:
        raise GeometryMismatch("cluster form needs disjoint up and down dents")
    tokens = {}
    for s in spec.U:
        tokens[s] = UP
    for t in spec.D:
        tokens[t] = DOWN
    runs: list[tuple[int, tuple[str, ...]]] = []  # (start, tokens)
    k = 1
    while k <= spec.L:
        if k in tokens:
            start = k
            run = []
            while k <= spec.L and k in tokens:
                run.append(tokens[k])
                k += 1
            runs.append((start, tuple(run)))
        else:
            k += 1
    clusters: list[tuple[str, ...]] = []
    starts: list[int] = []
    if not runs or runs[0][0] != 1:
        clusters.append(())
        starts.append(1)
    for start, run in runs:
        clusters.append(run)
        starts.append(start)
    last_end = starts[-1] + len(clusters[-1])
    if last_end != spec.L + 1:
        clusters.append(())
        starts.append(spec.L + 1)
    gaps = []
    for i in range(len(clusters) - 1):
        gaps.append(starts[i + 1] - (starts[i] + len(clusters[i])))
    return ClusterSpec(tuple(clusters), tuple(gaps))
