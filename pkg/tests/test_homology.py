import math
import random

import pytest

from oracles import coker_order_bruteforce, det_cofactor, invariant_factors_of_pair

from nmsflow import seifert
from nmsflow.homology import (
    AbelianGroup,
    cokernel,
    h1,
    h1_seifert_presentation,
    smith_normal_form,
)
from nmsflow.manifolds import (
    ConnectedSum,
    Lens,
    RP3,
    S2xS1,
    Sphere,
    seifert_over_s2,
    sum_normalize,
)


def test_abelian_group_str():
    assert str(AbelianGroup(0)) == "0"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianGroup(0, (10,))) == "Z/10"
    assert str(AbelianGroup(0, (2, 2))) == "Z/2 + Z/2"
    assert str(AbelianGroup(1, (2,))) == "Z + Z/2"


def test_abelian_group_order():
    assert AbelianGroup(0).order() == 1
    assert AbelianGroup(0, (4, 12)).order() == 48
    assert AbelianGroup(1, (2,)).order() == 0


def test_abelian_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(-1)
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))
    AbelianGroup(0, (2, 6, 12))


def test_smith_normal_form_frozen():
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    assert smith_normal_form([[2, 0], [0, 2]]) == (2, 2)
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_normal_form([[1, 2], [3, 4]]) == (1, 2)
    assert smith_normal_form([[6, 4], [4, 6]]) == (2, 10)
    assert smith_normal_form([[5]]) == (5,)
    assert smith_normal_form([[2, 4, 6]]) == (2,)
    assert smith_normal_form([[2], [4], [6]]) == (2,)


def test_smith_normal_form_rejects_ragged_rows():
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])


def test_smith_normal_form_random_vs_cofactors():
    rng = random.Random(4451)
    for _ in range(500):
        n = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(n)]
        diag = smith_normal_form(m)
        assert len(diag) == min(n, cols)
        assert all(d >= 0 for d in diag)
        for i in range(1, len(diag)):
            if diag[i - 1] == 0:
                assert diag[i] == 0
            else:
                assert diag[i] % diag[i - 1] == 0
        if n == cols:
            det = det_cofactor(m)
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(det)
            if n <= 3 and 0 < abs(det) <= 30:
                assert coker_order_bruteforce(m) == abs(det)


def test_cokernel():
    assert cokernel([[2, 0], [0, 3]]) == AbelianGroup(0, (6,))
    assert cokernel([[0, 0]]) == AbelianGroup(2)
    assert cokernel([], ncols=3) == AbelianGroup(3)
    assert cokernel([[1, 0], [0, 1]]) == AbelianGroup(0)
    with pytest.raises(ValueError):
        cokernel([])


def test_h1_seifert_presentation_frozen():
    assert h1_seifert_presentation([]) == AbelianGroup(1)
    assert h1_seifert_presentation([(1, 0)]) == AbelianGroup(1)
    assert h1_seifert_presentation([(3, 2)]) == AbelianGroup(0, (2,))
    assert h1_seifert_presentation([(2, 1), (2, 1), (3, 2)]) == AbelianGroup(0, (20,))
    assert h1_seifert_presentation([(2, 1)] * 4) == AbelianGroup(0, (2, 2, 8))
    assert (h1_seifert_presentation([(2, 1), (2, 1), (2, -1), (2, -1)])
            == AbelianGroup(1, (2, 2)))


def test_h1_seifert_presentation_order_matches_closed_form():
    # |H1| = |sum_i beta_i prod_{j != i} alpha_j| for three-fiber data
    rng = random.Random(73)
    for _ in range(300):
        fibers = []
        for _ in range(3):
            alpha = rng.randint(1, 7)
            while True:
                beta = rng.randint(-7, 7)
                if alpha == 1 or math.gcd(alpha, beta) == 1:
                    break
            fibers.append((alpha, beta))
        total = 0
        for i in range(3):
            prod = 1
            for j in range(3):
                if j != i:
                    prod *= fibers[j][0]
            total += fibers[i][1] * prod
        assert h1_seifert_presentation(fibers).order() == abs(total)


def test_h1_presentation_commutes_with_normalize_on_two_fiber_grid():
    for a1 in range(1, 10):
        for b1 in range(-6, 7):
            if a1 > 1 and math.gcd(a1, b1) != 1:
                continue
            for a2 in range(1, 10):
                for b2 in range(-3, 4):
                    if a2 > 1 and math.gcd(a2, b2) != 1:
                        continue
                    s = ((a1, b1), (a2, b2))
                    n = seifert.normalize(s)
                    assert (h1_seifert_presentation(s).order()
                            == h1_seifert_presentation(n).order())


def test_h1_atoms_and_lens():
    assert h1(Sphere()) == AbelianGroup(0)
    assert h1(S2xS1()) == AbelianGroup(1)
    assert h1(RP3()) == AbelianGroup(0, (2,))
    assert h1(Lens(7, 2)) == AbelianGroup(0, (7,))
    assert h1(Lens(12, 5)) == AbelianGroup(0, (12,))


def test_h1_connected_sums():
    assert h1(sum_normalize([Lens(5, 2), RP3()])) == AbelianGroup(0, (10,))
    assert h1(sum_normalize([S2xS1(), RP3()])) == AbelianGroup(1, (2,))
    assert h1(ConnectedSum((RP3(), RP3()))) == AbelianGroup(0, (2, 2))
    assert (h1(sum_normalize([Lens(4, 1), RP3(), RP3()]))
            == AbelianGroup(0, (2, 2, 4)))
    assert h1(sum_normalize([Lens(12, 5), RP3()])) == AbelianGroup(0, (2, 12))


def test_h1_connected_sum_matches_pair_oracle():
    for p1 in range(3, 10):
        for p2 in range(2, 10):
            a = Lens(p1, 1)
            b = RP3() if p2 == 2 else Lens(p2, 1)
            got = h1(sum_normalize([a, b]))
            assert got.torsion == invariant_factors_of_pair(p1, p2)
            assert got.free_rank == 0


def test_h1_seifert_values():
    m = seifert_over_s2([(2, 1), (2, 1), (3, 2)])
    assert h1(m) == AbelianGroup(0, (20,))
    # |1*3*5 + 1*2*5 + 3*2*3| = 43
    assert h1(seifert_over_s2([(2, 1), (3, 1), (5, 3)])).order() == 43
