import pytest
from hypothesis import given, strategies as st

from bhsets.algebra import FieldDescriptor, find_primitive
from bhsets.errors import BhError, NotCoprime, WrongGroup
from bhsets.groups import (
    Composition,
    CosetDlog,
    CosetProjection,
    CosetQuotient,
    CrtCombine,
    CrtSplit,
    CyclicGroup,
    DlogIso,
    ModReduction,
    ProductGroup,
    UnitGroup,
    crt_combine,
    crt_split,
    group_from_json,
    hom_from_json,
    kernel_elements,
)


def test_mod_reduction_examples():
    assert ModReduction(342, 2)(239) == 68
    assert ModReduction(3120, 8)(1384) == 214
    assert kernel_elements(ModReduction(342, 2)) == [0, 171]
    with pytest.raises(BhError):
        ModReduction(10, 3)


def test_wrong_group():
    with pytest.raises(WrongGroup):
        ModReduction(10, 2)((1, 2))


def test_crt_examples():
    assert crt_combine((1, 2), 10, 11) == 101
    assert crt_combine((7, 7), 10, 11) == 7
    with pytest.raises(NotCoprime):
        CrtCombine(4, 6)


@given(st.integers(0, 109))
def test_crt_round_trip_against_scan(t):
    a, b = crt_split(t, 10, 11)
    assert (a, b) == (t % 10, t % 11)
    assert [s for s in range(110) if s % 10 == a and s % 11 == b] == [t]
    assert CrtCombine(10, 11)(CrtSplit(10, 11)(t)) == t


def test_product_group_ops():
    G = ProductGroup((CyclicGroup(3), CyclicGroup(4)))
    assert G.order == 12
    assert G.add((2, 3), (2, 3)) == (1, 2)
    assert G.sum([(1, 1)] * 4) == (1, 0)
    assert len(list(G.elements())) == 12


def test_unit_group_dlog_iso():
    F = FieldDescriptor(3, 2, (2, 1, 1))
    U = UnitGroup(F)
    assert U.order == 8
    phi = DlogIso(F, F.gen)
    assert phi.target == CyclicGroup(8)
    assert sorted(phi(x) for x in U.elements()) == list(range(8))
    assert phi.kernel_size == 1


def test_coset_quotient_and_projection():
    F = FieldDescriptor(7, 2)
    t = find_primitive(F)
    gen = t ** (48 // 4)  # subgroup of order 4
    Q = CosetQuotient(F, gen, t)
    assert Q.subgroup_order == 4 and Q.order == 12
    proj = CosetProjection(F, gen, t)
    assert proj.kernel_size == 4
    assert len(proj.kernel()) == 4
    iso = CosetDlog(Q)
    both = Composition((proj, iso))
    assert both.kernel_size == 4
    images = {both(t**k) for k in range(48)}
    assert images == set(range(12))
    # homomorphism: log of a product is the sum mod 12
    for i in range(0, 48, 5):
        for j in range(0, 48, 7):
            assert both(t**i * t**j) == (both(t**i) + both(t**j)) % 12


def test_json_round_trips():
    F = FieldDescriptor(5, 2)
    t = find_primitive(F)
    for G in (CyclicGroup(7), ProductGroup((CyclicGroup(2), CyclicGroup(5))), UnitGroup(F),
              CosetQuotient(F, t**6, t)):
        assert group_from_json(G.to_json()) == G
    for phi in (ModReduction(20, 4), CrtCombine(4, 5), CrtSplit(4, 5), DlogIso(F, t)):
        back = hom_from_json(phi.to_json())
        assert back == phi and back.kernel_size == phi.kernel_size
