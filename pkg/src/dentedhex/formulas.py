"""Closed-form products: box counts, dented-semihexagon counts, their
q-analogs, and the right-hand sides of the shuffling identities.

Integer products accumulate as exact rationals and assert a denominator of
one at the end, which doubles as an integrality check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactnum import QPoly, QRatio, one_minus_q_quotient
from .lattice import (ClusterSpec, SemihexSpec, SpecError, ValidatedSpec,
                      UP, DOWN, make_spec)


class IncompatibleClusters(SpecError):
    pass


def pp(a: int, b: int, c: int) -> int:
    """Boxed plane-partition count: prod (i+j+k-1)/(i+j+k-2) over the box."""
    acc = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                acc *= Fraction(i + j + k - 1, i + j + k - 2)
    assert acc.denominator == 1
    return acc.numerator


def pp_q(a: int, b: int, c: int) -> QPoly:
    """q-analog of pp: prod (1-q^(i+j+k-1))/(1-q^(i+j+k-2)), a polynomial.

    The k-product telescopes, leaving one factor pair per (i,j).
    """
    num = [i + j + c - 1 for i in range(1, a + 1) for j in range(1, b + 1)]
    den = [i + j - 1 for i in range(1, a + 1) for j in range(1, b + 1)]
    return one_minus_q_quotient(num, den)


def _schur_frac(S: Sequence[int]) -> Fraction:
    acc = Fraction(1)
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            acc *= Fraction(S[j] - S[i], j - i)
    return acc


def schur_ones(S: Sequence[int]) -> int:
    """prod (s_j-s_i)/(j-i): the dented-semihexagon count for dents S.

    Equals the principal specialization at all-ones of the Schur polynomial
    of the staircase-corrected shape lambda_of(S).
    """
    acc = _schur_frac(S)
    assert acc.denominator == 1
    return acc.numerator


def clp(s: SemihexSpec) -> int:
    """Tiling count of the dented semihexagon (independent of s.b)."""
    return schur_ones(s.dents)


def clp_q_dents(S: Sequence[int]) -> QPoly:
    """Generating polynomial of the dented semihexagon with dents S.

    q^(sum(s_i - i)) * prod (q^(s_j)-q^(s_i))/(q^j-q^i), computed through
    the gap form so only products of (1-q^m) factors are ever divided.
    All exponents come out nonnegative; the value at q=1 is schur_ones(S).
    """
    a = len(S)
    shift = 0
    for i in range(1, a + 1):
        shift += (a - i + 1) * (S[i - 1] - i)
    num = [S[j] - S[i] for i in range(a) for j in range(i + 1, a)]
    den = [j - i for i in range(a) for j in range(i + 1, a)]
    out = one_minus_q_quotient(num, den).shifted(shift)
    assert not out or out.min_exp() >= 0
    return out


def clp_q(s: SemihexSpec) -> QPoly:
    return clp_q_dents(s.dents)


def delta(S: Sequence[int]) -> int:
    """prod over i<j of (s_j - s_i)."""
    out = 1
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            out *= S[j] - S[i]
    return out


def delta_q(S: Sequence[int]) -> QPoly:
    """prod over i<j of (q^(s_j) - q^(s_i))."""
    out = QPoly.one()
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            out = out * QPoly({S[j]: 1, S[i]: -1})
    return out


def lambda_of(S: Sequence[int]) -> tuple[int, ...]:
    """Partition (s_u-u+1, ..., s_2-1, s_1) attached to a strict set S."""
    u = len(S)
    lam = tuple(S[u - i] - (u - i) for i in range(1, u + 1))
    assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
    return lam


@dataclass(frozen=True)
class ShuffleInstance:
    """Two dent assignments of the same occupied positions, plus barriers.

    U2/D2 redistribute the symmetric difference of U and D; the union and
    the intersection must be preserved. Sizes may differ (orientation
    flips) unless a theorem-1 shape (|U|=|U2|, |D|=|D2|) is required.
    """

    x: int
    y: int
    U: tuple[int, ...]
    D: tuple[int, ...]
    U2: tuple[int, ...]
    D2: tuple[int, ...]
    B: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "U", tuple(self.U))
        object.__setattr__(self, "D", tuple(self.D))
        object.__setattr__(self, "U2", tuple(self.U2))
        object.__setattr__(self, "D2", tuple(self.D2))
        object.__setattr__(self, "B", tuple(self.B))
        a = self.spec_a()
        b = self.spec_b()
        if set(self.U) | set(self.D) != set(self.U2) | set(self.D2):
            raise SpecError("shuffle must preserve the union of dents")
        if set(self.U) & set(self.D) != set(self.U2) & set(self.D2):
            raise SpecError("shuffle must preserve the intersection of dents")
        assert a.L == b.L

    def spec_a(self) -> ValidatedSpec:
        return make_spec(self.x, self.y, self.U, self.D, self.B)

    def spec_b(self) -> ValidatedSpec:
        return make_spec(self.x, self.y, self.U2, self.D2, self.B)

    @property
    def n(self) -> int:
        return len(set(self.U) | set(self.D))

    @property
    def L(self) -> int:
        return self.x + self.y + self.n

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return len(self.U), len(self.D), len(self.U2), len(self.D2)

    def thm1_shaped(self) -> bool:
        return len(self.U) == len(self.U2) and len(self.D) == len(self.D2)

    def to_json_dict(self) -> dict:
        return {
            "x": self.x, "y": self.y,
            "U": list(self.U), "D": list(self.D),
            "U2": list(self.U2), "D2": list(self.D2),
            "B": list(self.B),
        }


def shuffle_rhs(inst: ShuffleInstance) -> Fraction:
    """Predicted count ratio for a size-preserving shuffle:
    delta(U)*delta(D) / (delta(U2)*delta(D2))."""
    if not inst.thm1_shaped():
        raise SpecError("size-preserving shuffle required here")
    return Fraction(delta(inst.U) * delta(inst.D),
                    delta(inst.U2) * delta(inst.D2))


def gen_shuffle_rhs(inst: ShuffleInstance) -> Fraction:
    """Predicted count ratio when flips are allowed and barriers present.

    The barrier set drops out: the ratio only sees the dent data and y.
    """
    u, d, u2, d2 = inst.sizes
    num = _schur_frac(inst.U) * _schur_frac(inst.D) * pp(u, d, inst.y)
    den = _schur_frac(inst.U2) * _schur_frac(inst.D2) * pp(u2, d2, inst.y)
    return num / den


def _gen_shuffle_rhs_collapsed_pp(inst: ShuffleInstance) -> Fraction:
    """Negative control: collapse the two size arguments of the primed box
    factor into their product. Rejected by the engines; kept so the harness
    can demonstrate that the collapse is wrong."""
    u, d, u2, d2 = inst.sizes
    num = _schur_frac(inst.U) * _schur_frac(inst.D) * pp(u, d, inst.y)
    den = _schur_frac(inst.U2) * _schur_frac(inst.D2) * pp(u2 * d2, inst.y, 1)
    return num / den


def q_shift_exponent(inst: ShuffleInstance) -> int:
    """Exponent of the global q-power in the weighted shuffle ratio.

    The closed form is the published-style expression plus a normalization
    in the dent-set sizes; it is pinned mechanically by exact engine
    comparisons in the verification suite (see also q_shift_exponent_alt).
    """
    return q_shift_exponent_alt(inst) + _size_normalization(inst)


def q_shift_exponent_alt(inst: ShuffleInstance) -> int:
    """Variant without the size normalization; kept as a negative control.

    The verification suite reports this variant side by side with
    q_shift_exponent; the engines reject it whenever the normalization
    term is nonzero.
    """
    x, y, n = inst.x, inst.y, inst.n
    u, d, u2, d2 = inst.sizes
    return ((d - x - n) * comb(y + d + 1, 2)
            - (d2 - x - n) * comb(y + d2 + 1, 2)
            + u * d * y - u2 * d2 * y)


def _size_normalization(inst: ShuffleInstance) -> int:
    u, d, u2, d2 = inst.sizes
    return comb(u2 + 1, 2) + comb(d2 + 1, 2) - comb(u + 1, 2) - comb(d + 1, 2)


def _range_set(k: int) -> tuple[int, ...]:
    return tuple(range(1, k + 1))


def q_shuffle_rhs(inst: ShuffleInstance, shift: int | None = None,
                  integer_gap_control: bool = False) -> QRatio:
    """Predicted ratio of tiling generating functions, as a QRatio.

    numerator   q^shift * dq(U) dq(D) dq([u2]) dq([d2]) pp_q(u,d,y)
    denominator           dq(U2) dq(D2) dq([u]) dq([d]) pp_q(u2,d2,y)

    where dq is delta_q and [k] = {1..k}. shift defaults to
    q_shift_exponent(inst). integer_gap_control replaces the [d] factor by
    the plain integer delta([d]) (a deliberately wrong reading used as a
    negative control in the harness).
    """
    u, d, u2, d2 = inst.sizes
    if shift is None:
        shift = q_shift_exponent(inst)
    num = (delta_q(inst.U) * delta_q(inst.D)
           * delta_q(_range_set(u2)) * delta_q(_range_set(d2))
           * pp_q(u, d, inst.y)).shifted(shift)
    den_d_factor = (QPoly.monomial(0, delta(_range_set(d)))
                    if integer_gap_control else delta_q(_range_set(d)))
    den = (delta_q(inst.U2) * delta_q(inst.D2)
           * delta_q(_range_set(u)) * den_d_factor
           * pp_q(u2, d2, inst.y))
    return QRatio(num, den)


@dataclass(frozen=True)
class ClusterStats:
    """Counts of the two dented semihexagons a cluster defines."""

    s_plus: int
    s_minus: int


def cluster_s_values(cluster: Sequence[str]) -> ClusterStats:
    """Semihexagon counts for one cluster, positions local to the cluster."""
    ups = tuple(i + 1 for i, tok in enumerate(cluster) if tok == UP)
    downs = tuple(i + 1 for i, tok in enumerate(cluster) if tok == DOWN)
    if len(ups) + len(downs) != len(cluster):
        raise SpecError("cluster tokens must be up or down")
    f = len(cluster)
    s_plus = clp(SemihexSpec(len(ups), f - len(ups), ups))
    s_minus = clp(SemihexSpec(len(downs), f - len(downs), downs))
    return ClusterStats(s_plus, s_minus)


def asym_rhs(c: ClusterSpec, c2: ClusterSpec) -> Fraction:
    """Limit ratio for cluster shuffles as the hexagon and gaps scale:
    the product over clusters of (s+ s-) / (s+' s-')."""
    if len(c.clusters) != len(c2.clusters):
        raise IncompatibleClusters("different numbers of clusters")
    if c.lengths != c2.lengths:
        raise IncompatibleClusters(
            f"cluster lengths differ: {c.lengths} vs {c2.lengths}")
    if c.gaps != c2.gaps:
        raise IncompatibleClusters(f"gaps differ: {c.gaps} vs {c2.gaps}")
    out = Fraction(1)
    for a, b in zip(c.clusters, c2.clusters):
        sa = cluster_s_values(a)
        sb = cluster_s_values(b)
        out *= Fraction(sa.s_plus * sa.s_minus, sb.s_plus * sb.s_minus)
    return out
