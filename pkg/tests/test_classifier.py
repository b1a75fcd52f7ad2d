import math

import pytest

from nmsflow import classifier
from nmsflow.classifier import (
    FlowInvariant,
    InvalidFlowInvariant,
    InvariantKind,
    case_predicates,
    classify,
    classify_quadruple,
    enumerate_invariants,
    intermediate_seifert,
    kind_of,
    valid_invariants,
    validate_invariant,
)
from nmsflow.manifolds import (
    Lens,
    LensParams,
    RP3,
    S2xS1,
    SeifertOverS2,
    Sphere,
    homeomorphic,
)


def test_kind_of():
    assert kind_of(0, 2, 5, 2) is InvariantKind.INESSENTIAL
    assert kind_of(0, 1, 5, 2) is InvariantKind.ESSENTIAL
    assert kind_of(3, 5, -1, 0) is InvariantKind.ESSENTIAL
    assert kind_of(0, 3, 5, 2) is None
    assert kind_of(2, 4, 5, 2) is None
    assert kind_of(0, 2, 4, 2) is None


def test_validate_invariant_rules():
    inv = validate_invariant(0, 2, 5, 2)
    assert inv.kind is InvariantKind.INESSENTIAL
    assert inv.quadruple() == (0, 2, 5, 2)
    assert validate_invariant(1, 0, 1, 1).kind is InvariantKind.ESSENTIAL

    with pytest.raises(InvalidFlowInvariant) as err:
        validate_invariant(2, 4, 1, 0)
    assert err.value.rule == "non-coprime-pair"

    with pytest.raises(InvalidFlowInvariant) as err:
        validate_invariant(0, 3, 1, 0)
    assert err.value.rule == "malformed-inessential-marker"

    with pytest.raises(InvalidFlowInvariant) as err:
        validate_invariant(0, 2, 2, 4)
    assert err.value.rule == "non-coprime-pair"

    with pytest.raises(InvalidFlowInvariant) as err:
        validate_invariant(0, -2, 1, 0)
    assert err.value.rule == "malformed-inessential-marker"


def test_case_predicates_partition_exhaustively():
    for l1 in range(-12, 13):
        for l2 in range(-12, 13):
            hits = case_predicates(l1, l2)
            assert sum(hits) == 1, (l1, l2)


def test_classify_worked_examples():
    expected = [
        ((0, 1, 5, 2), 1, "L(5,2) # RP3"),
        ((1, 0, 5, 2), 4, "S3"),
        ((2, 1, 3, 2), 7, "SFS(S2; (2,1),(2,1),(3,2))"),
        ((0, 2, 5, 2), 1, "L(5,2) # RP3"),
        ((1, 0, 1, 1), 6, "S3"),
    ]
    for quad, case, rendered in expected:
        res = classify_quadruple(*quad)
        assert res.case == case
        assert str(res.manifold) == rendered


def test_classify_case_structure():
    res = classify_quadruple(0, 1, 5, 2)
    assert res.lens_before_rp3_sum == LensParams(5, 2)
    assert res.intermediate_seifert is None

    res = classify_quadruple(5, 2, 0, 1)
    assert res.case == 2
    assert res.lens_before_rp3_sum == LensParams(5, 2)

    res = classify_quadruple(0, 2, 0, -1)
    assert res.case == 3
    assert str(res.manifold) == "S2xS1 # RP3"
    assert res.lens_before_rp3_sum == LensParams(0, -1)

    res = classify_quadruple(1, 0, 2, 1)
    assert res.case == 4 and res.manifold == S2xS1()

    res = classify_quadruple(10, 3, -1, 2)
    assert res.case == 5 and res.manifold == Lens(4, 1)

    res = classify_quadruple(-1, 0, 1, 0)
    assert res.case == 6 and res.manifold == Sphere()
    assert res.lens_before_rp3_sum is None

    res = classify_quadruple(2, -1, 3, -2)
    assert res.case == 7
    assert res.manifold == SeifertOverS2(((2, 1), (2, 1), (3, 1)))


def test_intermediate_seifert_frozen():
    assert (classify_quadruple(1, 0, 5, 2).intermediate_seifert
            == ((2, 1), (1, 0), (5, 3)))
    assert (classify_quadruple(2, 1, 3, 2).intermediate_seifert
            == ((2, 1), (2, 1), (3, 2)))
    assert (classify_quadruple(3, 1, 5, 2).intermediate_seifert
            == ((2, 1), (3, 1), (5, 3)))
    inv = validate_invariant(7, 3, -4, 1)
    assert intermediate_seifert(inv) == ((2, 1), (7, 5), (4, 1))


def test_intermediate_seifert_undefined_off_axis():
    inv = validate_invariant(0, 1, 5, 2)
    with pytest.raises(InvalidFlowInvariant) as err:
        intermediate_seifert(inv)
    assert err.value.rule == "undefined-intermediate"


def test_intermediate_beta_representatives():
    # beta_i is m_i^-1 in (0, |l_i|), and 0 at multiplicity 1
    for l, m in [(5, 2), (5, -2), (-5, 2), (7, 3), (9, -4), (2, 1)]:
        inv = validate_invariant(l, m, 3, 1)
        fibers = intermediate_seifert(inv)
        alpha, beta = fibers[1]
        assert alpha == abs(l)
        assert 0 < beta < alpha
        assert (beta * m - 1) % alpha == 0
    inv = validate_invariant(1, 4, 3, 1)
    assert intermediate_seifert(inv)[1] == (1, 0)


def test_classify_requires_validated_invariant():
    with pytest.raises(InvalidFlowInvariant):
        classify_quadruple(4, 2, 1, 1)


def test_valid_invariants_bound_two():
    invs = list(valid_invariants(2))
    assert len(invs) == 272
    assert invs[0].quadruple() == (-2, -1, -2, -1)
    markers = [i for i in invs if i.kind is InvariantKind.INESSENTIAL]
    assert all(i.quadruple()[:2] == (0, 2) for i in markers)
    assert len(markers) == 16
    for inv in invs:
        assert math.gcd(inv.l2, inv.m2) == 1
        assert math.gcd(inv.l1, inv.m1) == 1 or (inv.l1, inv.m1) == (0, 2)


def test_enumerate_invariants_bound_two_frozen():
    groups = enumerate_invariants(2)
    table = [(str(rep), len(members)) for rep, members in groups]
    assert table == [
        ("S3", 100),
        ("S2xS1", 40),
        ("L(4,1)", 40),
        ("SFS(S2; (2,1),(2,1),(2,1))", 16),
        ("RP3", 50),
        ("S2xS1 # RP3", 6),
        ("RP3 # RP3", 20),
    ]
    assert sum(n for _, n in table) == 272
    for rep, members in groups:
        for res in members:
            assert homeomorphic(res.manifold, rep)


def test_classify_consistent_with_predicates_small_grid():
    for inv in valid_invariants(3):
        res = classify(inv)
        hits = case_predicates(inv.l1, inv.l2)
        assert hits.index(True) + 1 == res.case
        revalidated = validate_invariant(*inv.quadruple())
        assert revalidated == inv


def test_flow_invariant_is_frozen():
    inv = validate_invariant(2, 1, 3, 2)
    assert inv == FlowInvariant(2, 1, 3, 2, InvariantKind.ESSENTIAL)
    with pytest.raises(AttributeError):
        inv.l1 = 5


def test_classifier_module_exports():
    assert classifier.classify_quadruple is classify_quadruple
