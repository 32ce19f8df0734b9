import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffordlab.polysys import (
    Ideal,
    build_linear_system,
    build_semiclifford_system,
    build_third_level_system,
    derive_ef,
    eval_batch,
    eval_poly,
    exact_divide,
    groebner,
    ideal_from_json,
    ideal_intersect,
    ideal_member,
    ideal_mod_p,
    ideal_to_json,
    leading_term,
    minors,
    normal_form,
    third_level_vartable,
    verify_decomposition_certificate,
)
from cliffordlab.polysys.groebner import member_over_z_half
from cliffordlab.polysys.multipoly import (
    DomainMismatchError,
    MultiPoly,
    VarTable,
    grevlex_key,
    lex_key,
)
from cliffordlab.polysys.systems import PolyMatrix, bareiss_eliminate

XY = VarTable(("x", "y"))
X = MultiPoly.variable(XY, "x")
Y = MultiPoly.variable(XY, "y")
ONE = MultiPoly.const(XY, 1)


def rand_poly(draw_terms):
    terms = {}
    for ex, ey, c in draw_terms:
        if c:
            terms[(ex, ey)] = terms.get((ex, ey), Fraction(0)) + Fraction(c)
    return MultiPoly(XY, "Q", {e: c for e, c in terms.items() if c})


poly_st = st.builds(
    rand_poly,
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3),
                       st.integers(-5, 5)), max_size=5),
)


@given(poly_st, poly_st, poly_st)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == MultiPoly.zero(XY)


@given(poly_st, st.integers(0, 4), st.integers(0, 4))
def test_eval_mod_matches_exact(f, x, y):
    exact = f.eval_exact((x, y))
    assert exact.denominator == 1 or exact.denominator % 7 != 0
    num = exact.numerator % 7
    den_inv = pow(exact.denominator % 7, -1, 7)
    assert f.eval_mod((x, y), 7) == num * den_inv % 7


def test_monomial_orders():
    # x^2 vs x*y vs y^2 at equal degree; grevlex prefers earlier variables
    assert grevlex_key((2, 0)) > grevlex_key((1, 1)) > grevlex_key((0, 2))
    assert lex_key((1, 0)) > lex_key((0, 5))
    f = X * X + X * Y * Y
    e, c = leading_term(f, "grevlex")
    assert e == (1, 2)
    e, c = leading_term(f, "lex")
    assert e == (2, 0)


@given(poly_st, poly_st)
@settings(max_examples=50)
def test_exact_divide_inverts_multiplication(f, g):
    if f.is_zero() or g.is_zero():
        return
    assert exact_divide(f * g, g) == f


def test_exact_divide_raises_on_inexact():
    with pytest.raises(ArithmeticError):
        exact_divide(X + ONE, Y)


def test_domain_mismatch_raises():
    other = MultiPoly.variable(VarTable(("z",)), "z")
    with pytest.raises(DomainMismatchError):
        X + other
    with pytest.raises(DomainMismatchError):
        X + MultiPoly.variable(XY, "x", domain=3)


def test_integer_content_removed():
    f = (X * X).scaled(Fraction(4, 6)) + Y.scaled(Fraction(2, 3))
    g = f.integer_content_removed()
    assert g == X * X + Y


# -- Groebner ---------------------------------------------------------------

def test_groebner_known_basis():
    # <x^2 + y^2, x*y> contains y^3: y*(x^2+y^2) - x*(x*y) = y^3
    I = Ideal([X * X + Y * Y, X * Y], XY)
    gb = groebner(I)
    assert ideal_member(Y * Y * Y, I)
    assert not ideal_member(X + Y, I)
    # every original generator reduces to zero against the basis
    for g in I.generators:
        assert normal_form(g, gb.generators).is_zero()


def test_groebner_canonical_and_monic():
    I1 = Ideal([X * X + Y * Y, X * Y], XY)
    I2 = Ideal([(X * Y).scaled(3), (X * X + Y * Y).scaled(-2)], XY)
    assert groebner(I1).generators == groebner(I2).generators
    for g in groebner(I1).generators:
        assert leading_term(g)[1] == 1


def test_ideal_membership_mod_p():
    I = ideal_mod_p(Ideal([X * X + Y * Y, X * Y], XY), 3)
    y3 = MultiPoly(XY, 3, {(0, 3): 1})
    assert ideal_member(y3, I)


def test_ideal_intersect_principal():
    # (x) meet (y) = (x*y)
    inter = ideal_intersect(Ideal([X], XY), Ideal([Y], XY))
    assert ideal_member(X * Y, inter)
    assert not ideal_member(X, inter)
    assert not ideal_member(Y, inter)


def test_member_over_z_half():
    # x = (1/2) * (2x): cofactor denominator is a power of two
    I = Ideal([X.scaled(2)], XY)
    member, in_z_half = member_over_z_half(X, I)
    assert member and in_z_half
    member, _ = member_over_z_half(Y, I)
    assert not member


def test_certificate_toy_and_broken():
    T = VarTable(("x",))
    x = MultiPoly.variable(T, "x")
    one = MultiPoly.const(T, 1)
    good = verify_decomposition_certificate(
        Ideal([x * x + x], T), [Ideal([x], T), Ideal([x + one], T)],
        primes=(3, 5, 7),
    )
    assert good.passed and good.domains_checked == ["Q", "Z3", "Z5", "Z7"]
    broken = verify_decomposition_certificate(
        Ideal([x], T), [Ideal([x * x], T)], primes=(3,)
    )
    assert not broken.passed
    assert broken.failures[0].direction == "I-in-components"


def test_certificate_input_validation():
    T = VarTable(("x",))
    x = MultiPoly.variable(T, "x")
    with pytest.raises(ValueError):
        verify_decomposition_certificate(Ideal([x], T), [])
    with pytest.raises(ValueError):
        verify_decomposition_certificate(Ideal([x], T), [Ideal([x], T)],
                                         primes=(4,))


# -- JSON -------------------------------------------------------------------

def test_ideal_json_round_trip(tmp_path):
    I = Ideal([X * X + Y.scaled(Fraction(-1, 2)), X * Y + ONE], XY)
    doc = ideal_to_json(I)
    text = json.dumps(doc)
    I2 = ideal_from_json(json.loads(text))
    assert I2.generators == I.generators
    assert I2.vars == I.vars


# -- the concrete systems ---------------------------------------------------

def test_third_level_system_shape():
    full = build_third_level_system()
    assert len(full) == 18
    assert len(full[0].vars) == 28
    reduced = build_third_level_system(phi1_zero=True)
    assert len(reduced) == 18
    assert len(reduced[0].vars) == 25


def test_third_level_vartable_order():
    names = third_level_vartable().names
    assert names[0] == "Phi11" and names[11] == "Phi43"
    assert names[12] == "q11" and names[19] == "q42"
    assert names[20] == "p11" and names[27] == "p42"


def test_semiclifford_system_is_three_minors():
    ms = build_semiclifford_system()
    assert len(ms) == 3
    for m in ms:
        assert m.total_degree() == 2


def test_identity_point_solves_system():
    # the identity gate's conjugate tuple: all Phi zero, standard p/q basis
    point = {name: 0 for name in third_level_vartable().names}
    point.update({"p11": 1, "q21": 1, "p32": 1, "q42": 1})
    for f in build_third_level_system():
        assert eval_poly(f, point, 3) == 0


def test_all_linear_system_minors_vanish():
    A, b = build_linear_system()
    ms = minors(A, 6)
    assert len(ms) == 28
    assert all(m.is_zero() for m in ms)


def test_bareiss_ef_properties():
    E, F = derive_ef()
    assert not E.is_zero() and not F.is_zero()
    # integer, content-free, positive leading coefficient
    for f in (E, F):
        assert all(c.denominator == 1 for c in f.terms.values())
        assert leading_term(f)[1] > 0
    # E and F use only Phi/q variables, never p
    pnames = {n for n in E.vars.names if n.startswith("p")}
    for f in (E, F):
        for e in f.terms:
            for name, k in zip(f.vars.names, e):
                assert not (k and name in pnames)


def test_bareiss_consistency_implies_ef_zero():
    # random numeric instances: if the system is consistent and F != 0
    # then E must vanish (d = 7)
    from cliffordlab.enumeration import linear_system_arrays
    from cliffordlab.kernels import batch_consistency

    E, F = derive_ef()
    rng = np.random.default_rng(42)
    n = 2000
    phis = rng.integers(7, size=(n, 4, 3))
    qs = rng.integers(7, size=(n, 4, 2))
    A, b = linear_system_arrays(phis, qs, 7)
    cons = batch_consistency(A, b, 7)
    pts = np.zeros((n, 28), dtype=np.int64)
    pts[:, 0:12] = phis.reshape(n, 12)
    pts[:, 12:20] = qs.reshape(n, 8)
    ev = eval_batch(E, pts, 7)
    fv = eval_batch(F, pts, 7)
    assert not np.any(cons & (fv != 0) & (ev != 0))
    # and some consistent F != 0 cases actually occur, so the check has teeth
    assert np.any(cons & (fv != 0))


def test_bareiss_rejects_full_rank_blocks():
    from cliffordlab.polysys.systems import AllPivotsZeroError

    table = VarTable(("x",))
    x = MultiPoly.variable(table, "x")
    one = MultiPoly.const(table, 1)
    zero = MultiPoly.zero(table)
    # identity A-block leaves no residual row
    aug = PolyMatrix([[one, zero, x], [zero, one, x]])
    with pytest.raises(AllPivotsZeroError):
        bareiss_eliminate(aug)


def test_eval_batch_matches_eval_poly():
    E, _ = derive_ef()
    rng = np.random.default_rng(0)
    pts = rng.integers(5, size=(50, 28))
    batched = eval_batch(E, pts, 5)
    for i in range(50):
        point = dict(zip(E.vars.names, (int(v) for v in pts[i])))
        assert eval_poly(E, point, 5) == batched[i]
