from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ as SZZ
from sympy.matrices.normalforms import smith_normal_form

from cubix.groups import FiniteAbelianGroup, GroupHom
from cubix.group_ring import (
    GroupRingElement,
    NotAUnit,
    RingMismatch,
    augmentation,
    coordinate_embed,
    invert_unit,
    is_unit,
    multiply,
    pushforward,
)
from cubix.linalg import smith_invariants, solve_mod
from cubix.rings import QQ, ZZ, Zmod

from conftest import Z2, Z3, Z2Z2, elem, units_by_search


def test_group_basics():
    G = FiniteAbelianGroup((2, 4))
    assert G.order == 8 and G.exponent == 4 and G.rank == 2
    assert G.add((1, 3), (1, 2)) == (0, 1)
    assert len(list(G.elements())) == 8
    assert G.exponent and G.order % G.exponent == 0
    with pytest.raises(ValueError):
        FiniteAbelianGroup((0,))


def test_hom_legality_and_reduction():
    Z4 = FiniteAbelianGroup((4,))
    with pytest.raises(ValueError):
        GroupHom(Z2, Z4, ((1,),))
    phi = GroupHom(Z2, Z4, ((2,),))
    assert phi((1,)) == (2,)
    assert GroupHom(Z4, Z2, ((3,),)).matrix == ((1,),)


def test_multiply_examples():
    R = Zmod(5)
    g = elem(R, Z2, 1, {(1,): 1})
    one = GroupRingElement.one(R, Z2)
    assert g * g == one
    x = elem(R, Z2, 1, {(0,): 2, (1,): 1})
    y = elem(R, Z2, 1, {(0,): 4, (1,): 3})
    assert multiply(x, y) == one
    assert one * x == x


def test_multiply_mismatch():
    x = GroupRingElement.one(ZZ, Z2)
    with pytest.raises(RingMismatch):
        x * GroupRingElement.one(Zmod(3), Z2)
    with pytest.raises(RingMismatch):
        x * GroupRingElement.one(ZZ, Z3)


def test_invert_examples():
    R = Zmod(5)
    x = elem(R, Z2, 1, {(0,): 2, (1,): 1})
    assert invert_unit(x) == elem(R, Z2, 1, {(0,): 4, (1,): 3})
    g = elem(ZZ, Z3, 1, {(1,): 1})
    assert invert_unit(g) == elem(ZZ, Z3, 1, {(2,): 1})
    with pytest.raises(NotAUnit):
        invert_unit(elem(Zmod(2), Z2, 1, {(0,): 1, (1,): 1}))
    with pytest.raises(NotAUnit):
        invert_unit(GroupRingElement.zero(ZZ, Z2))


def test_nontrivial_integral_unit():
    # -1 + g + g^4 in Z[Z/5] is a unit of infinite order
    Z5 = FiniteAbelianGroup((5,))
    u = elem(ZZ, Z5, 1, {(0,): -1, (1,): 1, (4,): 1})
    assert invert_unit(u) == elem(ZZ, Z5, 1, {(0,): -1, (2,): 1, (3,): 1})
    assert not is_unit(elem(ZZ, Z5, 1, {(0,): 2}))
    half = invert_unit(elem(QQ, Z5, 1, {(0,): 2}))
    assert half[(0,)] == Fraction(1, 2)


def test_pushforward_examples():
    R = ZZ
    diag = GroupHom(Z2, Z2Z2, ((1, 1),))
    assert pushforward(diag, elem(R, Z2, 1, {(1,): 1})) == elem(R, Z2Z2, 1, {(1, 1): 1})
    mult = GroupHom(Z2Z2, Z2, ((1,), (1,)))
    assert pushforward(mult, elem(R, Z2Z2, 1, {(1, 1): 1})) == GroupRingElement.one(R, Z2)
    x = elem(R, Z2Z2, 1, {(1, 0): 3, (0, 1): -2})
    assert pushforward(GroupHom.identity(Z2Z2), x) == x


def test_coordinate_embed_examples():
    x = elem(ZZ, Z3, 2, {((1,), (2,)): 1})
    assert coordinate_embed(x, [0, 1], 3) == elem(ZZ, Z3, 3, {((1,), (2,), (0,)): 1})
    assert coordinate_embed(x, [(0, 1), 2], 3) == elem(ZZ, Z3, 3, {((1,), (1,), (2,)): 1})
    assert coordinate_embed(x, [1, 0], 2) == elem(ZZ, Z3, 2, {((2,), (1,)): 1})
    with pytest.raises(ValueError):
        coordinate_embed(x, [0, 0], 2)
    with pytest.raises(ValueError):
        coordinate_embed(x, [0], 2)


def test_augmentation_examples():
    G = FiniteAbelianGroup((5,))
    assert augmentation(elem(ZZ, G, 1, {(1,): 1})) == 1
    assert augmentation(GroupRingElement.zero(ZZ, G)) == 0
    assert augmentation(elem(ZZ, G, 1, {(0,): 1, (1,): 2, (2,): -3})) == 0


@pytest.mark.parametrize("m,orders", [(2, (2,)), (3, (2,)), (4, (2,)), (6, (2,)), (2, (4,)),
                                      (3, (3,)), (2, (2, 2)), (3, (2, 2)), (5, (2,))])
def test_units_match_brute_force(m, orders):
    R, G = Zmod(m), FiniteAbelianGroup(orders)
    elems, units = units_by_search(R, G)
    assert {x for x in elems if is_unit(x)} == units


# ---------------------------------------------------------------- properties

GROUPS = [(2,), (3,), (4,), (2, 2), (2, 3)]


@st.composite
def element(draw, ring=None, orders=None, arity=1):
    orders = orders or draw(st.sampled_from(GROUPS))
    ring = ring or draw(st.sampled_from([ZZ, Zmod(3), Zmod(4), Zmod(5)]))
    G = FiniteAbelianGroup(orders)
    pts = list(G.power(arity).elements())
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=len(pts), max_size=len(pts)))
    return GroupRingElement(ring, G, arity, dict(zip(pts, coeffs)))


@st.composite
def element_pair(draw):
    x = draw(element())
    y = draw(element(ring=x.ring, orders=x.base.cyclic_orders))
    return x, y


@given(element_pair())
def test_augmentation_multiplicative(pair):
    x, y = pair
    assert augmentation(x * y) == x.ring(augmentation(x) * augmentation(y))


@given(element_pair(), st.lists(st.integers(0, 6), min_size=4, max_size=4))
def test_pushforward_is_ring_hom(pair, ks):
    x, y = pair
    G = x.base
    H = FiniteAbelianGroup((6,))
    try:
        phi = GroupHom(G, H, tuple((k,) for k in ks[:G.rank]))
    except ValueError:
        return
    assert pushforward(phi, x * y) == pushforward(phi, x) * pushforward(phi, y)
    assert pushforward(phi, x + y) == pushforward(phi, x) + pushforward(phi, y)


@given(element(orders=(2, 2), arity=1), st.lists(st.integers(0, 3), min_size=8, max_size=8))
def test_pushforward_functorial(x, ks):
    G = x.base
    psi = GroupHom(G, G, ((ks[0], ks[1]), (ks[2], ks[3])))
    phi = GroupHom(G, G, ((ks[4], ks[5]), (ks[6], ks[7])))
    assert pushforward(psi.then(phi), x) == pushforward(phi, pushforward(psi, x))


@given(element())
def test_inverse_roundtrip(x):
    try:
        y = invert_unit(x)
    except NotAUnit:
        return
    one = GroupRingElement.one(x.ring, x.base)
    assert x * y == one
    assert invert_unit(y) == x


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_smith_against_sympy(rows):
    ours = smith_invariants(rows, 4)
    snf = smith_normal_form(Matrix(rows), domain=SZZ)
    theirs = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    assert ours == theirs
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]))


def test_solve_mod_crt():
    A = [[2, 1], [1, 1]]
    x = solve_mod(A, [1, 0], 12)
    assert [(2 * x[0] + x[1]) % 12, (x[0] + x[1]) % 12] == [1, 0]
