import pytest

from hopfhc.algebras import UqSl2, idempotent_monoid_algebra, make_preset
from hopfhc.cocyclic import TSpace
from hopfhc.coefficients import coalgebra_self, trivial
from hopfhc.errors import HypothesisFailed, NotAYD, NotCoideal
from hopfhc.linalg import SparseMatrix
from hopfhc.quotients import (
    build_cm_complex,
    coinvariant_dims,
    coinvariants,
    commutator_subspace,
    equivariant_check,
    graded_commutator_subspace,
    quotient_module_coalgebra,
    regular_action_matrices,
)

X = (0, 1)


def test_commutator_subspace_vanishes_for_cocommutative(kc2, ks3):
    for Y in (trivial(kc2), coalgebra_self(kc2)):
        T = TSpace(kc2, Y)
        assert [len(commutator_subspace(T, n)) for n in range(4)] == [0, 0, 0, 0]
    T = TSpace(ks3, trivial(ks3))
    assert [len(commutator_subspace(T, n)) for n in range(3)] == [0, 0, 0]


def test_commutator_subspace_sweedler_regression(sw, sw_triv, sw_mp, sw_self):
    # fixed-point closure oracle values
    assert [len(commutator_subspace(TSpace(sw, sw_triv), n)) for n in range(3)] == [0, 6, 35]
    assert [len(commutator_subspace(TSpace(sw, sw_mp), n)) for n in range(3)] == [2, 10, 44]
    assert [len(commutator_subspace(TSpace(sw, sw_self), n)) for n in range(2)] == [6, 40]


def test_commutator_subspace_is_stable(sw, sw_self):
    G = graded_commutator_subspace(TSpace(sw, sw_self), 2, check_independence=True)
    assert G.flags and all(G.flags.values())


def test_coinvariants_examples(kc2):
    dim, reps, _ = coinvariants(3, {"b": SparseMatrix.identity(3)}, {"b": 1})
    assert dim == 3 and reps == [0, 1, 2]
    acts = regular_action_matrices(kc2)
    dim, _, P = coinvariants(2, acts, {b: kc2.eps_word(b) for b in kc2.basis()})
    assert dim == 1
    assert P.apply({0: 1}) == P.apply({1: 1})


def test_equivariant_lemma(kc2, ks3, sw):
    A = regular_action_matrices(kc2)
    assert equivariant_check(kc2, A, A) == (2, 2)
    B = regular_action_matrices(ks3)
    a, b = equivariant_check(ks3, B, B)
    assert a == b == 6
    C = regular_action_matrices(sw)
    a, b = equivariant_check(sw, C, C)
    assert a == b


def test_quotient_sweedler_by_x(sw, sw_triv):
    Xq, ledger = quotient_module_coalgebra(sw, [{X: 1}], sw_triv, 2)
    assert [sw.word_str(w) for w in Xq.reps] == ["1", "g"]
    e = {x["name"]: x for x in ledger}
    assert e["coideal"]["pass"]
    # the explicit projection does not kill x (x) 1 (x) 1 ...
    assert not e["quotient_hypothesis"]["pass"]
    assert e["quotient_hypothesis"]["witness"]["chain"] == "1*x (x) 1 (x) 1"
    # ... but the J-slab dies in B(T/I), and dimensions agree
    assert e["J-slab vanishes in B(T/I)"]["pass"]
    assert e["CM(B,Y) = B(T(B/J,Y)) dims"]["pass"]
    assert e["CM(B,Y) = B(T(B/J,Y)) dims"]["dims"] == [1, 2, 4]
    with pytest.raises(HypothesisFailed) as exc:
        quotient_module_coalgebra(sw, [{X: 1}], sw_triv, 1, strict=True)
    assert exc.value.witness["degree"] == 1


def test_quotient_zero_ideal(kc2, sw, sw_triv):
    Xq, ledger = quotient_module_coalgebra(kc2, [], trivial(kc2), 2)
    assert len(Xq.reps) == 2
    assert all(e["pass"] for e in ledger)
    # with I != 0 the surjection B(T(B)) -> CM is not injective
    _, ledger = quotient_module_coalgebra(sw, [], sw_triv, 1)
    e = {x["name"]: x for x in ledger}
    assert not e["CM(B,Y) = B(T(B/J,Y)) dims"]["pass"]


def test_quotient_uq_laurent_line():
    U = UqSl2(cap=2)
    Xq, _ = quotient_module_coalgebra(U, [{U.E: 1}, {U.F: 1}])
    assert all(w[0] == 0 and w[2] == 0 for w in Xq.reps)


def test_not_coideal(sw):
    with pytest.raises(NotCoideal):
        quotient_module_coalgebra(sw, [{(1, 0): 1}])


def test_cm_dims(kc2):
    k = make_preset("k")
    assert build_cm_complex(k, trivial(k), 3).dims == [1, 1, 1, 1]
    assert build_cm_complex(kc2, trivial(kc2), 3).dims == [1, 2, 4, 8]


def test_routes(sw, sw_mp, sw_self):
    d = build_cm_complex(sw, sw_mp, 2, "both")
    assert d.dims == [1, 4, 16] and d.ledger[-1]["pass"]
    d = build_cm_complex(sw, sw_self, 2)
    assert all(e["pass"] for e in d.ledger)
    with pytest.raises(NotAYD):
        build_cm_complex(sw, sw_self, 2, "p_image")


def test_bialgebra_route():
    M = idempotent_monoid_algebra()
    d = build_cm_complex(M, trivial(M), 2)
    assert d.dims == [1, 1, 1] and all(e["pass"] for e in d.ledger)


def test_coinvariant_dims_quotient(sw, sw_triv):
    Xq, _ = quotient_module_coalgebra(sw, [{X: 1}])
    assert coinvariant_dims(TSpace(sw, sw_triv, Xq), 2) == [1, 2, 4]
