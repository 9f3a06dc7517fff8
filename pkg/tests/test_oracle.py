from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgroth.groth_h import basis_product, dual_sign, sc
from qgroth.oracle import (
    CliffordModule,
    OracleScaleError,
    QuadNum,
    SuperMatrix,
    T_matrix,
    direct_sum,
    head_socle_report,
    injective_hull,
    parity_shift,
    realize_C,
    realize_C_fermionic,
    restrict,
    smult_supertrace,
    socle,
    socle_signed,
    tensor_modules,
    verify_T_head_socle,
    verify_tensor_thm,
)
from qgroth.oracle.modules import t_value
from qgroth.weights import Weight
from strategies import weights

W = Weight.parse

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
quads = st.builds(
    lambda a, b, c, d: QuadNum({1: a, 2: b, -1: c, 3: d}),
    rationals,
    rationals,
    rationals,
    rationals,
)


class TestQuadNum:
    def test_sqrt(self):
        assert QuadNum.sqrt(-1) == QuadNum.i()
        assert QuadNum.sqrt(8) * QuadNum.sqrt(8) == QuadNum(8)
        assert QuadNum.sqrt(-6) * QuadNum.sqrt(-6) == QuadNum(-6)
        assert QuadNum.sqrt(Fraction(1, 2)) * QuadNum.sqrt(2) == QuadNum(1)
        assert not QuadNum.sqrt(0)

    @given(quads, quads, quads)
    def test_field_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == QuadNum(1)

    @given(quads, quads)
    def test_automorphisms(self, a, b):
        for p in (-1, 2, 3):
            assert (a * b).sigma(p) == a.sigma(p) * b.sigma(p)
        assert abs(complex(a.conj()) - complex(a).conjugate()) < 1e-9

    def test_exact_conversions(self):
        assert QuadNum(Fraction(6, 3)).to_int() == 2
        assert QuadNum(Fraction(1, 2)).to_fraction() == Fraction(1, 2)
        with pytest.raises(ValueError):
            QuadNum.sqrt(2).to_fraction()
        with pytest.raises(ZeroDivisionError):
            QuadNum().inverse()


class TestSuperMatrix:
    def test_pauli(self):
        X = SuperMatrix.from_rows([[0, 1], [1, 0]])
        Z = SuperMatrix.diagonal([1, -1])
        assert X @ X == SuperMatrix.identity(2)
        assert X @ Z == -(Z @ X)
        assert Z.kron(X).dim == 4
        assert Z.with_parity((0, 1)).supertrace() == QuadNum(2)
        assert X.with_parity((0, 1)).parity_of() == 1


class TestModules:
    @pytest.mark.parametrize("lam", ["0", "1", "1,1", "2,-1,0", "1,2,3", "3/2,-1/2", "0,0,0,0", "1,-1,2,0"])
    def test_realizations(self, lam):
        lam = W(lam)
        for m in (realize_C(lam), realize_C_fermionic(lam)):
            assert m.check_relations()
            assert m.dim == 1 << lam.n_lambda
            assert m.sdim == ((m.dim // 2, m.dim // 2) if lam.rank else (1, 0))
            if not lam.parity:
                assert T_matrix(m, lam) == m.delta.scale(t_value(lam))
                assert smult_supertrace(m, lam) == 1

    def test_parity_shift(self):
        m = realize_C(W("2,1"))
        assert smult_supertrace(parity_shift(m), W("2,1")) == -1
        assert smult_supertrace(direct_sum(m, m), W("2,1")) == 2
        assert smult_supertrace(direct_sum(m, parity_shift(m)), W("2,1")) == 0
        # on I1, Pi C(lam) is isomorphic to C(lam)
        m1 = realize_C(W("1,0"))
        assert smult_supertrace(parity_shift(m1), W("1,0")) == 1

    def test_wrong_weight(self):
        with pytest.raises(ValueError):
            smult_supertrace(realize_C(W("1,1")), W("1,2"))

    @given(weights(3, -2, 2), weights(3, -2, 2))
    def test_tensor_matches_basis_product(self, lam, mu):
        m = tensor_modules(realize_C(lam), realize_C(mu))
        assert m.check_relations()
        nu = lam + mu
        M, K = basis_product(lam, mu)
        assert m.dim == (M + K) * (1 << nu.n_lambda)
        if not nu.parity and not (set(lam.support) & set(mu.support)):
            assert smult_supertrace(m, nu) == sc(lam, mu)

    def test_restrict(self):
        m = restrict(realize_C(W("2,1,0")), 1)
        assert m.weight == W("2,1") and smult_supertrace(m, W("2,1")) == 1
        m = restrict(realize_C(W("2,0,1")), 1)
        assert smult_supertrace(m, W("2,0")) == 0
        with pytest.raises(ValueError):
            restrict(realize_C(W("1")), 2)


def _supertranspose(g: SuperMatrix, par) -> SuperMatrix:
    cols: dict = {}
    for c, v in g.cols.items():
        for r, x in v.items():
            e = (par[c] + par[r]) * par[c]
            cols.setdefault(r, {})[c] = -x if e % 2 else x
    return SuperMatrix(g.dim, cols, par)


def dual_module(m: CliffordModule) -> CliffordModule:
    gens = [(-_supertranspose(g, m.par)).with_parity(m.par) for g in m.gens]
    return CliffordModule(Weight([-a for a in m.weight]), gens, m.delta)


def test_dual_module_sign():
    # C(lam)^* is Pi^e C(-lam) with (-1)^e = dual_sign(lam)
    for e in product(range(-2, 3), repeat=4):
        lam = Weight(list(e))
        if lam.parity:
            continue
        d = dual_module(realize_C(lam))
        assert d.check_relations()
        assert smult_supertrace(d, d.weight) == dual_sign(lam)


class TestTensorTheorem:
    @pytest.mark.parametrize(
        "lam,mu",
        [("1,0", "0,1"), ("1,1", "-1,-1"), ("2,1,0", "0,0,-1"), ("1,0,0", "0,1,0"), ("1,-1", "-1,1"), ("2,0,1", "0,-2,0")],
    )
    def test_examples(self, lam, mu):
        rep = verify_tensor_thm(W(lam), W(mu))
        assert rep["checks"]["relations"] and rep["checks"]["dimension"]
        assert rep["checks"]["projective"] and rep["checks"]["copies"]
        assert rep["checks"]["pi_invariance_vs_kkk"]

    def test_kkk_case(self):
        rep = verify_tensor_thm(W("1,1"), W("-1,-1"))
        d = rep["details"]
        assert d["kkk_exception"] and not d["pi_invariant"]

    def test_printed_exponent_disagreement(self):
        # documented: the printed exponent misses C(1,0) (x) C(0,1)
        d = verify_tensor_thm(W("1,0"), W("0,1"))["details"]
        assert not d["printed_exponent_agrees"]


class TestHeadSocle:
    @pytest.mark.parametrize("lam", ["1,0", "2,0,0", "1,0,-1", "0,0", "1,1,0"])
    def test_report(self, lam):
        rep = head_socle_report(W(lam))
        assert all(rep["checks"].values()), rep

    def test_requires_corank(self):
        with pytest.raises(ValueError):
            verify_T_head_socle(W("2,1"))

    def test_socle_of_hull(self):
        lam = W("1,0,0")
        m = injective_hull(lam)
        assert m.check_relations()
        assert len(socle(m)) == 1 << lam.n_lambda
        assert socle_signed(m) == 1


def test_scale_guard(monkeypatch):
    monkeypatch.setenv("QGROTH_MAX_ORACLE_DIM", "4")
    realize_C_fermionic(W("1,2,3,4"))
    with pytest.raises(OracleScaleError):
        realize_C_fermionic(W("1,2,3,4,5,6"))
    with pytest.raises(OracleScaleError):
        tensor_modules(realize_C(W("1,2,3")), realize_C(W("1,1,1")))
