import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfhc.algebras import class_sums
from hopfhc.checks import coadjoint_suite, cosimplicial_suite, kappa_suite, p_suite
from hopfhc.cocyclic import (
    CMSpace,
    TSpace,
    cm_include,
    cm_project,
    cobar_cyclic_inv,
    cobar_cyclic_inv_closed,
    cobar_face,
    kappa,
    kappa_closed,
    kappa_conjugated,
    kappa_insertion,
    phi,
)
from hopfhc.coefficients import coalgebra_self, trivial, trivial_coaction
from hopfhc.errors import NotStable

ONE, G, X, GX = (0, 0), (1, 0), (0, 1), (1, 1)


@pytest.fixture(scope="module")
def T_mp(sw, sw_mp):
    return TSpace(sw, sw_mp)


def all_pass(entries):
    return all(e["pass"] for e in entries), [e for e in entries if not e["pass"]]


def test_faces_examples(kc2, T_mp):
    g = kc2.basis()[1]
    T = TSpace(kc2, trivial(kc2))
    assert T.face(0, {(g, 0): 1}) == {(g, g, 0): 1}
    assert T_mp.face(1, {(ONE, X, 0): 1}) == {(ONE, X, ONE, 0): 1, (ONE, G, X, 0): 1}
    assert T_mp.face(2, {(ONE, X, 0): 1}) == {(ONE, X, G, 0): 1}


def test_cyclic_examples(sw, T_mp):
    assert T_mp.cyclic(-1, {(X, ONE, 0): 1}) == {(ONE, GX, 0): 1}
    assert T_mp.cyclic(1, {(ONE, X, 0): 1}) == {(GX, ONE, 0): 1}
    Y = trivial_coaction(sw)
    T = TSpace(sw, Y)
    assert T.cyclic(-1, {(X, G, GX, 2): 1}) == {(G, GX, X, 2): 1}


def test_cobar_faces(sw, T_mp):
    assert cobar_face(T_mp, 0, {(ONE, 0): 1}) == {(ONE, ONE, 0): 1}
    assert cobar_face(T_mp, 0, {(G, 0): 1}) == {(G, ONE, 0): 1}


def test_phi_examples(kc2, sw, T_mp):
    Ts = TSpace(sw, trivial(sw))
    assert phi(Ts, 1, {(X, 0): 1}) == {(X, 0): 1}
    assert phi(Ts, 1, {(G, X, 0): 1}) == {(G, GX, 0): -1}
    g = kc2.basis()[1]
    Tk = TSpace(kc2, trivial(kc2))
    assert phi(Tk, 1, {(g, g, 0): 1}) == {(g, kc2.unit, 0): 1}


@pytest.mark.parametrize("n", [0, 1, 2])
def test_cobar_cyclic_closed_form(T_mp, n):
    for k in T_mp.basis(n):
        assert cobar_cyclic_inv(T_mp, {k: 1}) == cobar_cyclic_inv_closed(T_mp, {k: 1})


def test_projection_examples(kc2, sw, sw_mp, sw_self):
    g = kc2.basis()[1]
    Tk = TSpace(kc2, trivial(kc2))
    assert cm_project(Tk, {(g, 0): 1}) == {(0,): 1}
    assert cm_project(Tk, {(g, g, 0): 1}) == {(kc2.unit, 0): 1}
    assert cm_include(TSpace(sw, sw_mp), {(0,): 1}) == {(G, 0): 1}
    x = sw_self.labels.index("x")
    one = sw_self.labels.index("1")
    gi = sw_self.labels.index("g")
    assert cm_include(TSpace(sw, sw_self), {(x,): 1}) == {(X, one): 1, (G, x): 1}
    C = CMSpace(Tk)
    assert C.cyclic_inv({(g, 0): 1}) == {(g, 0): 1}
    del gi


def test_cm_faces_examples(sw, T_mp):
    C = CMSpace(T_mp)
    assert C.face("dtilde", 0, {(X, 0): 1}) == {(ONE, X, 0): 1}
    assert C.face("d", 1, {(0,): 1}) == {(ONE, 0): 1}
    assert C.face("d", 0, {(0,): 1}) == {(G, 0): 1}


def test_unstable_coefficients_refused(kc2):
    from hopfhc.coefficients import modular_pair
    from hopfhc.quotients import build_coinvariant_route

    g = kc2.basis()[1]
    Y = modular_pair(kc2, {g: -1}, g)  # S(g) acts by -1 on 1
    C = CMSpace(TSpace(kc2, Y))
    with pytest.raises(NotStable):
        C.cyclic_inv({(g, 0): 1})
    with pytest.raises(NotStable):
        build_coinvariant_route(kc2, Y, 1)


def test_kappa_examples(kc2, sw, T_mp):
    Tk = TSpace(kc2, trivial(kc2))
    g = kc2.basis()[1]
    assert kappa(Tk, g, {(g, 0): 1}) == {}
    v = {(ONE, 0): 1}
    assert kappa(T_mp, X, v) == {(GX, 0): 2}
    assert cm_project(T_mp, kappa(T_mp, X, v)) == {}
    assert kappa_conjugated(T_mp, X, 0, {(X, G, 0): 1}) == kappa(T_mp, X, {(X, G, 0): 1})
    Ts = TSpace(kc2, coalgebra_self(kc2))
    for k in Ts.basis(1):
        for j in range(2):
            assert not kappa_insertion(Ts, g, j, {k: 1})


def test_kappa_closed_form_needs_involutive_antipode(ks3, T_mp):
    T = TSpace(ks3, coalgebra_self(ks3))
    for k in T.basis(1)[:40]:
        for x in ks3.generators():
            assert kappa(T, x, {k: 1}) == kappa_closed(T, x, {k: 1})
    # over sweedler4 the expanded form drops a non-trivial S^2 factor
    diffs = [k for k in T_mp.basis(1) if kappa(T_mp, X, {k: 1}) != kappa_closed(T_mp, X, {k: 1})]
    assert diffs


def test_kappa_insertion_class_sum(ks3):
    T = TSpace(ks3, coalgebra_self(ks3))
    c = class_sums(ks3)[1]
    k = T.basis(1)[7]
    lhs = kappa_conjugated(T, c, 1, {k: 1})
    rhs = kappa_insertion(T, c, 1, {k: 1})
    assert {a: b for a, b in lhs.items() if b} == {a: b for a, b in rhs.items() if b}


def test_cosimplicial_suites(sw, sw_mp, sw_self, sw_triv, ks3):
    for Y in (sw_triv, sw_mp, sw_self):
        ok, bad = all_pass(cosimplicial_suite(TSpace(sw, Y), 2))
        assert ok, bad
    ok, bad = all_pass(cosimplicial_suite(TSpace(ks3, trivial(ks3)), 1))
    assert ok, bad


def test_coadjoint_suite(T_mp):
    ok, bad = all_pass(coadjoint_suite(T_mp, 2))
    assert ok, bad


def test_p_and_kappa_suites_saYD(T_mp):
    ok, bad = all_pass(p_suite(T_mp, 2) + kappa_suite(T_mp, 1))
    assert ok, bad


def test_p_suite_flags_non_aYD(sw, sw_triv):
    entries = {e["name"]: e for e in p_suite(TSpace(sw, sw_triv), 1)}
    assert entries["p: p i = id"]["pass"] and entries["p: p i = id"]["fatal"]
    assert not entries["p: t p = p tau"]["pass"] and not entries["p: t p = p tau"]["fatal"]


@given(st.dictionaries(st.integers(0, 63), st.integers(-3, 3).filter(bool), max_size=4))
def test_phi_roundtrip_random_chain(coeffs):
    from hopfhc.algebras import Sweedler4
    from hopfhc.coefficients import modular_pair

    H = Sweedler4()
    T = TSpace(H, modular_pair(H, {}, G))
    keys = T.basis(2)
    v = {keys[i]: c for i, c in coeffs.items()}
    assert phi(T, -1, phi(T, 1, v)) == v


@given(st.integers(0, 63), st.integers(0, 2))
def test_tau_inverse_order_on_cm(i, n):
    from hopfhc.algebras import Sweedler4
    from hopfhc.coefficients import modular_pair

    H = Sweedler4()
    C = CMSpace(TSpace(H, modular_pair(H, {}, G)))
    keys = C.basis(n)
    w = {keys[i % len(keys)]: 1}
    u = w
    for _ in range(n + 1):
        u = C.cyclic_inv(u)
    assert u == w
