import pytest

from bhsets.errors import DivisibilityViolation, NoValidSubfieldCondition, WrongGroup
from bhsets.groups import ModReduction
from bhsets.reduction import bc_g, cardinality_preserved, gt_g, reduce_mod, reduce_set, ruzsa_g
from bhsets.sets import BhSet, image_set, translate
from bhsets.verifier import verify


def test_reduce_mod_chain_bookkeeping():
    A = BhSet.cyclic(342, [1, 108, 123, 128, 149, 239, 267], 3)
    B = reduce_mod(A, 2)
    assert B.values() == [1, 68, 96, 108, 123, 128, 149]
    assert B.claimed_g == 2
    C = reduce_mod(B, 3)
    assert C.group.N == 57 and C.claimed_g == 6
    assert [s["claimed_g_factor"] for s in C.chain] == [2, 3]


def test_cardinality_preserved_witness():
    A = BhSet.cyclic(10, [0, 5], 2)
    v = cardinality_preserved(A, ModReduction(10, 2))
    assert not v.preserved and v.witness == (5, 0)
    assert cardinality_preserved(A, ModReduction(10, 5)).preserved


def test_wrong_source_group():
    A = BhSet.cyclic(10, [0, 1], 2)
    with pytest.raises(WrongGroup):
        reduce_set(A, ModReduction(12, 2))


def test_ruzsa_g():
    A = ruzsa_g(11, 2, 5)
    assert A.group.N == 22 and len(A) == 10
    assert verify(A).exact_g == 5
    with pytest.raises(DivisibilityViolation):
        ruzsa_g(11, 2, 3)


def test_gt_g():
    A = gt_g(5, 3, g=4)
    assert A.group.N == 30 and len(A) == 5
    assert verify(A).exact_g <= 4
    with pytest.raises(DivisibilityViolation):
        gt_g(5, 3, g=5)


def test_bc_g():
    A = bc_g(3, 2, theta=(0, 1), g=2, modulus=(2, 1, 1))
    assert A.values() == [1, 2, 3]
    for q in (9, 13):
        B = bc_g(q, 2, g=4)
        assert len(B) == q and B.group.N == (q * q - 1) // 4
        assert verify(B).exact_g <= 4
    with pytest.raises(NoValidSubfieldCondition):
        bc_g(7, 2, g=4)


def test_translation_covariance():
    A = BhSet.cyclic(57, [1, 7, 24, 36, 38, 49, 54], 3)
    phi = ModReduction(57, 3)
    for t in (0, 5, 40):
        left = image_set(translate(A, t), phi).values()
        right = translate(image_set(A, phi), t % 19).values()
        assert left == right
        assert verify(translate(A, t)).exact_g == verify(A).exact_g


def test_bc_g_matches_mod_reduction_of_log_set():
    from bhsets.constructions import bose_chowla

    for q, h, g in ((9, 2, 4), (13, 2, 4), (7, 3, 6), (5, 3, 4), (7, 4, 24)):
        A = bose_chowla(q, h)
        theta = A.provenance["theta"]
        modulus = A.provenance["modulus"]
        assert bc_g(q, h, theta, g, modulus).values() == reduce_mod(A, g).values()
