import random
from fractions import Fraction

import pytest

from dentedhex.engines import count_brute, qcount_axis
from dentedhex.exactnum import QPoly, QRatio
from dentedhex.formulas import (ClusterStats, IncompatibleClusters,
                                ShuffleInstance, asym_rhs, clp, clp_q_dents,
                                cluster_s_values, delta, delta_q,
                                gen_shuffle_rhs, lambda_of, pp, pp_q,
                                q_shift_exponent, q_shuffle_rhs, schur_ones,
                                shuffle_rhs)
from dentedhex.harness import random_shuffle_instance
from dentedhex.lattice import (ClusterSpec, SemihexSpec, SpecError,
                               build_semihex_region)

q = QPoly.q()


def test_pp_values():
    assert pp(1, 1, 1) == 2
    assert pp(3, 0, 5) == 1
    assert pp(2, 2, 2) == 20
    # symmetric in its arguments
    assert pp(2, 3, 4) == pp(4, 2, 3) == pp(3, 4, 2)


def test_pp_q():
    assert pp_q(1, 1, 1) == 1 + q
    assert pp_q(4, 3, 0) == QPoly.one()
    rng = random.Random(31)
    for _ in range(20):
        a, b, c = (rng.randint(0, 3) for _ in range(3))
        assert pp_q(a, b, c).eval_one() == pp(a, b, c)


def test_clp_values():
    assert clp(SemihexSpec(3, 2, (1, 2, 3))) == 1
    assert clp(SemihexSpec(1, 4, (3,))) == 1
    assert clp(SemihexSpec(0, 5, ())) == 1
    assert clp(SemihexSpec(2, 2, (1, 4))) == 3


def test_clp_against_brute_force():
    # small sweep; the full sweep is an acceptance criterion
    for a, base in ((2, 4), (3, 5)):
        from itertools import combinations
        for dents in combinations(range(1, base + 1), a):
            s = SemihexSpec(a, base - a, dents)
            assert clp(s) == count_brute(build_semihex_region(s))


def test_clp_q():
    # one-row semihexagons calibrate the weight convention
    for b in range(0, 4):
        for dent in range(1, b + 2):
            assert clp_q_dents((dent,)) == QPoly.monomial(dent - 1)
    assert clp_q_dents((1, 2, 3)) == QPoly.one()
    rng = random.Random(32)
    for _ in range(40):
        base = rng.randint(1, 8)
        a = rng.randint(0, min(4, base))
        dents = tuple(sorted(rng.sample(range(1, base + 1), a)))
        p = clp_q_dents(dents)
        assert p.eval_one() == schur_ones(dents)
        assert not p or p.min_exp() >= 0


def test_delta():
    assert delta((1, 3)) == 2
    assert delta_q((1, 3)) == q ** 3 - q
    assert delta((5,)) == 1
    assert delta_q(()) == QPoly.one()


def test_lambda_of():
    assert lambda_of(tuple(range(1, 5))) == (1, 1, 1, 1)
    assert lambda_of((2, 4, 5)) == (3, 3, 2)
    assert lambda_of((7,)) == (7,)


def test_schur_ones():
    assert schur_ones((1, 2, 3, 4)) == 1
    assert schur_ones((1, 3)) == 2
    rng = random.Random(33)
    for _ in range(50):
        base = rng.randint(1, 9)
        a = rng.randint(0, min(5, base))
        dents = tuple(sorted(rng.sample(range(1, base + 1), a)))
        assert schur_ones(dents) == clp(SemihexSpec(a, base - a, dents))


def test_shuffle_rhs():
    ident = ShuffleInstance(1, 1, (1, 3), (2,), (1, 3), (2,))
    assert shuffle_rhs(ident) == 1
    inst = ShuffleInstance(1, 1, (1, 3), (2,), (2, 3), (1,))
    assert shuffle_rhs(inst) == 2
    inv = ShuffleInstance(1, 1, (2, 3), (1,), (1, 3), (2,))
    assert shuffle_rhs(inst) * shuffle_rhs(inv) == 1
    flipped = ShuffleInstance(1, 1, (2,), (1, 3), (1,), (2, 3))
    assert shuffle_rhs(flipped) == shuffle_rhs(inst)


def test_shuffle_rhs_needs_matching_sizes():
    inst = ShuffleInstance(2, 1, (1, 2), (), (1,), (2,))
    with pytest.raises(SpecError):
        shuffle_rhs(inst)


def test_gen_shuffle_rhs():
    ident = ShuffleInstance(1, 1, (1, 3), (2,), (1, 3), (2,))
    assert gen_shuffle_rhs(ident) == 1
    inst = ShuffleInstance(2, 1, (1, 2), (), (1,), (2,))
    assert gen_shuffle_rhs(inst) == Fraction(1, 2)


def test_gen_reduces_to_shuffle_on_matching_sizes():
    rng = random.Random(34)
    for _ in range(60):
        inst = random_shuffle_instance(rng, max_L=9, allow_flips=False)
        assert gen_shuffle_rhs(inst) == shuffle_rhs(inst)


def test_q_shuffle_rhs_identity():
    ident = ShuffleInstance(1, 1, (1, 3), (2,), (1, 3), (2,))
    assert q_shift_exponent(ident) == 0
    assert q_shuffle_rhs(ident) == QRatio.from_int(1)


def test_q_shuffle_rhs_at_one_matches_gen():
    rng = random.Random(35)
    for _ in range(40):
        inst = random_shuffle_instance(rng, max_L=9, allow_flips=True, max_b=1)
        assert q_shuffle_rhs(inst).limit_at_one() == gen_shuffle_rhs(inst)


def test_q_shuffle_rhs_condensation_compatibility():
    # g(x-1,y; U+b) * g(x,y-1; U+a) == g(x,y; U) * g(x-1,y-1; U+ab)
    # where adding a position extends U and U2 alike
    rng = random.Random(36)
    done = 0
    while done < 25:
        inst = random_shuffle_instance(rng, max_L=9, allow_flips=True)
        if inst.x < 1 or inst.y < 1:
            continue
        blocked = set(inst.U) | set(inst.D) | set(inst.B)
        free = [k for k in range(1, inst.L + 1) if k not in blocked]
        if len(free) < 2:
            continue
        a, b = free[0], free[-1]

        def grown(extra, dx, dy):
            return ShuffleInstance(
                inst.x - dx, inst.y - dy,
                tuple(sorted(inst.U + extra)), inst.D,
                tuple(sorted(inst.U2 + extra)), inst.D2, inst.B)

        try:
            g = q_shuffle_rhs(grown((), 0, 0))
            g_b = q_shuffle_rhs(grown((b,), 1, 0))
            g_a = q_shuffle_rhs(grown((a,), 0, 1))
            g_ab = q_shuffle_rhs(grown((a, b), 1, 1))
        except SpecError:
            continue
        assert g_b * g_a == g * g_ab
        done += 1


def test_q_shuffle_rhs_against_engines_small():
    inst = ShuffleInstance(2, 1, (1, 2), (), (1,), (2,))
    lhs = QRatio(qcount_axis(inst.spec_a()), qcount_axis(inst.spec_b()))
    assert lhs == q_shuffle_rhs(inst)


def test_cluster_s_values():
    assert cluster_s_values(()) == ClusterStats(1, 1)
    assert cluster_s_values(("up", "down")) == ClusterStats(1, 1)
    assert cluster_s_values(("up", "up", "down")) == ClusterStats(1, 1)
    assert cluster_s_values(("up", "down", "up")) == ClusterStats(2, 1)


def test_asym_rhs():
    c = ClusterSpec((("up", "down", "up"),), ())
    c2 = ClusterSpec((("up", "up", "down"),), ())
    assert asym_rhs(c, c2) == 2
    assert asym_rhs(c, c) == 1
    with pytest.raises(IncompatibleClusters):
        asym_rhs(c, ClusterSpec((("up", "down"),), ()))


def test_asym_rhs_is_product_of_local_shuffles():
    rng = random.Random(37)
    for _ in range(40):
        k = rng.randint(1, 3)
        clusters, clusters2 = [], []
        for _ in range(k):
            f = rng.randint(1, 4)
            toks = tuple(rng.choice(("up", "down")) for _ in range(f))
            ups = sum(t == "up" for t in toks)
            shuffled = ["up"] * ups + ["down"] * (f - ups)
            rng.shuffle(shuffled)
            clusters.append(toks)
            clusters2.append(tuple(shuffled))
        gaps = tuple(rng.randint(1, 3) for _ in range(k - 1))
        c = ClusterSpec(tuple(clusters), gaps)
        c2 = ClusterSpec(tuple(clusters2), gaps)
        expected = Fraction(1)
        for toks, toks2 in zip(clusters, clusters2):
            U = tuple(i + 1 for i, t in enumerate(toks) if t == "up")
            D = tuple(i + 1 for i, t in enumerate(toks) if t == "down")
            U2 = tuple(i + 1 for i, t in enumerate(toks2) if t == "up")
            D2 = tuple(i + 1 for i, t in enumerate(toks2) if t == "down")
            expected *= Fraction(delta(U) * delta(D), delta(U2) * delta(D2))
        assert asym_rhs(c, c2) == expected


def test_shuffle_instance_validation():
    with pytest.raises(SpecError):
        ShuffleInstance(1, 1, (1,), (2,), (3,), (1,))  # union changes
    with pytest.raises(SpecError):
        ShuffleInstance(1, 1, (1, 2), (2,), (1,), (2,))  # intersection changes
