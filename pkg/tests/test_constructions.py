import pytest

from bhsets.algebra import FieldDescriptor, discrete_log, find_primitive, prime_field
from bhsets.constructions import (
    bose_chowla,
    bose_chowla_scan,
    derksen_set,
    gt_base,
    gt_modular,
    ruzsa_base,
    ruzsa_modular,
    singer_generalized,
)
from bhsets.errors import BhError, DegreeOne, NonPrimitiveBase, RootInS
from bhsets.sets import BhSet
from bhsets.verifier import verify

from conftest import brute_counts

RUZSA_11 = [7, 39, 58, 63, 65, 86, 92, 100, 101, 104]


def test_bose_chowla_small():
    A = bose_chowla(3, 2, theta=(0, 1), modulus=(2, 1, 1))
    assert A.values() == [1, 6, 7]
    assert bose_chowla_scan(3, 2, theta=(0, 1), modulus=(2, 1, 1)) == [1, 6, 7]


def test_bose_chowla_oracle_by_powering():
    # log of theta + a for a in F_q, found by raw powering
    F = FieldDescriptor(5, 3)
    t = find_primitive(F)
    powers = {}
    y = F.one
    for k in range(F.order - 1):
        powers[y] = k
        y = y * t
    want = sorted(powers[t + a] for a in range(5))
    assert bose_chowla(5, 3, modulus=F.modulus).values() == want


def test_bose_chowla_prime_power_q():
    A = bose_chowla(4, 2)
    assert len(A) == 4 and A.group.N == 15
    assert verify(A).exact_g == 1


def test_non_primitive_theta():
    with pytest.raises(NonPrimitiveBase):
        bose_chowla(3, 2, theta=(1, 0), modulus=(2, 1, 1))


def test_ruzsa():
    assert ruzsa_modular(11, 2).values() == RUZSA_11
    assert ruzsa_modular(5, 2).values() == [3, 14, 16, 17]
    base = ruzsa_base(11, 2)
    assert len(base) == 10
    # each base element is (i, 2^i mod 11)
    assert all(pow(2, i, 11) == b for i, b in base.values())


def test_gt():
    base = gt_base(3, 3, theta=(0, 1), modulus=(2, 1, 1))
    assert [tuple(v) for v in base.values()] == [(0, 1), (1, 7), (2, 6)]
    A = gt_modular(3, 3, theta=(0, 1), modulus=(2, 1, 1))
    assert A.values() == [7, 9, 14]
    assert A.group.N == 24
    assert verify(A).exact_g == 1


def test_singer_small():
    assert singer_generalized(2, 3).values() == [0, 1, 3]
    assert singer_generalized(3, 3).values() == [0, 1, 3, 9]
    A = singer_generalized(4, 3)
    assert len(A) == 5 and A.group.N == 21
    assert verify(A).exact_g == 1


def test_singer_perfect_difference_set():
    A = singer_generalized(5, 3)
    N = A.group.N
    diffs = sorted((x - y) % N for x in A.elements for y in A.elements if x != y)
    assert diffs == list(range(1, N))


def test_singer_beta_in_base_field():
    with pytest.raises(DegreeOne):
        singer_generalized(3, 3, beta=(2,))


def test_derksen():
    F = prime_field(7)
    A = derksen_set(F, (1, 0, 1), [1, 2, 3])
    assert len(A) == 3
    with pytest.raises(RootInS):
        derksen_set(F, (6, 0, 1), [1])  # x^2 - 1 has root 1


def test_set_json_round_trip():
    A = gt_modular(5, 3)
    B = BhSet.loads(A.dumps())
    assert B.values() == A.values() and B.group == A.group and B.provenance == A.provenance
    assert verify(B).to_json() == verify(A).to_json()


def test_counts_match_brute():
    A = bose_chowla(7, 3)
    assert max(brute_counts(A.elements, 342, 3).values()) == 1
