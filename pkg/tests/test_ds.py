import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgroth.ds import (
    DropExceedsRank,
    DsIndex,
    check_composition,
    ds_a,
    ds_h,
    ds_model,
    smult_restriction_oracle,
)
from qgroth.exterior import SpoiledElement
from qgroth.groth_h import GrMinusElement
from qgroth.groth_q import ABasisElement, invariant_expand, psi_g, symmetrize
from qgroth.weights import Weight
from strategies import a_elements, gr_minus

W = Weight.parse


def A(s, c=1):
    return ABasisElement.basis(W(s), c)


def test_index():
    d = DsIndex(2, 5)
    assert d.target == 3
    with pytest.raises(DropExceedsRank, match="drop exceeds rank"):
        DsIndex(3, 2)
    with pytest.raises(ValueError):
        DsIndex(-1, 2)


def test_a_examples():
    assert ds_a(1, A("2,0,-1")) == A("2,-1")
    assert not ds_a(1, A("2,1,-1"))
    assert ds_a(2, A("1,0,0")) == A("1")
    assert ds_a(0, A("2,1,-1")) == A("2,1,-1")
    assert ds_a(3, A("0,0,0")) == ABasisElement.one(0)


def test_h_examples():
    assert ds_h(1, GrMinusElement.basis(W("2,-1,0"))) == GrMinusElement.basis(W("2,-1"))
    assert not ds_h(1, GrMinusElement.basis(W("2,0,1")))
    assert not ds_h(1, GrMinusElement())


@given(st.integers(0, 3), a_elements(3), a_elements(3))
def test_a_ring_hom(r, x, y):
    assert ds_a(r, x * y) == ds_a(r, x) * ds_a(r, y)


@given(st.integers(0, 2), gr_minus(3), gr_minus(3))
def test_h_ring_hom(r, x, y):
    assert ds_h(r, x * y) == ds_h(r, x) * ds_h(r, y)


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(st.integers(0, n), st.integers(0, n), a_elements(n))))
def test_composition(args):
    i, j, x = args
    if i + j > x.n:
        with pytest.raises(DropExceedsRank):
            check_composition(i, j, x)
    else:
        assert check_composition(i, j, x)


@given(st.integers(0, 3), a_elements(3))
def test_model_square(r, x):
    # psi_g intertwines ds on the a-basis with truncation of the model
    assert ds_model(r, psi_g(x)) == psi_g(ds_a(r, x))


@given(st.integers(0, 3), a_elements(3))
def test_orbit_sums(r, x):
    h = GrMinusElement()
    for w, c in x.items():
        h = h + symmetrize(w).scale(c)
    assert invariant_expand(ds_h(r, h)).terms == ds_a(r, x).terms


def test_model_rejects_xi():
    with pytest.raises(ValueError):
        ds_model(1, SpoiledElement.one("xi", 2))


@pytest.mark.parametrize(
    "lam,nu,want",
    [
        ("2,0,1", "2,0", 0),
        ("2,1,0", "2,1", 1),
        ("1,0,0", "1,0", 1),
        ("1,0,0", "1", 1),
        ("2,-1,0", "2,-1", 1),
        ("2,-1,0", "1,-1", 0),
    ],
)
def test_restriction_oracle(lam, nu, want):
    assert smult_restriction_oracle(W(lam), W(nu)) == want


def test_restriction_oracle_agrees_with_ds_h():
    for a in range(-1, 3):
        for b in range(-1, 3):
            lam = Weight([a, b, 0])
            image = ds_h(1, GrMinusElement.basis(lam))
            for nu in {Weight([a, b]), Weight([b, a])}:
                got = smult_restriction_oracle(lam, nu)
                want = image[nu]
                assert got % 2 == want % 2 if nu.parity else got == want
