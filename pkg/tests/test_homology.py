import pytest

from hopfhc.algebras import make_preset
from hopfhc.coefficients import coalgebra_self, trivial
from hopfhc.errors import NotAComplex, NotCocyclic
from hopfhc.homology import coboundary, cyclic_cohomology_bicomplex, hochschild_cohomology
from hopfhc.linalg import SparseMatrix
from hopfhc.quotients import build_cm_complex, point_complex, zero_complex


def test_point():
    c = point_complex(4)
    assert hochschild_cohomology(c, 3).ranks == [1, 0, 0, 0]
    rep = cyclic_cohomology_bicomplex(c, 3)
    assert rep.ranks == [1, 0, 1, 0]
    assert rep.rank_list()[2] == {"n": 2, "rank": 1}


def test_zero():
    c = zero_complex(4)
    assert hochschild_cohomology(c, 3).ranks == [0, 0, 0, 0]
    assert cyclic_cohomology_bicomplex(c, 3).ranks == [0, 0, 0, 0]


def test_trivial_hopf_algebra_is_the_point():
    k = make_preset("k")
    c = build_cm_complex(k, trivial(k), 4)
    assert cyclic_cohomology_bicomplex(c, 3).ranks == [1, 0, 1, 0]


def test_group_algebras(kc2, ks3):
    # cosemisimple: Hochschild part concentrated in degree 0
    c = build_cm_complex(kc2, trivial(kc2), 4)
    assert hochschild_cohomology(c, 3).ranks == [1, 0, 0, 0]
    rep = cyclic_cohomology_bicomplex(c, 3)
    assert rep.ranks == [1, 0, 1, 0] and rep.ranks[0] >= 1
    c = build_cm_complex(ks3, trivial(ks3), 3)
    assert cyclic_cohomology_bicomplex(c, 2).ranks == [1, 0, 1]


def test_sweedler_regressions(sw, sw_mp, sw_self):
    c = build_cm_complex(sw, sw_mp, 3)
    assert hochschild_cohomology(c, 2).ranks == [0, 1, 0]
    assert cyclic_cohomology_bicomplex(c, 2).ranks == [0, 1, 0]
    c = build_cm_complex(sw, sw_self, 3)
    assert hochschild_cohomology(c, 2).ranks == [2, 1, 0]
    assert cyclic_cohomology_bicomplex(c, 2).ranks == [2, 1, 2]


def test_ledger_records_relations(kc2):
    c = build_cm_complex(kc2, trivial(kc2), 3)
    rep = cyclic_cohomology_bicomplex(c, 2)
    names = {e["name"] for e in rep.ledger}
    assert {"t^(n+1)=id", "bicomplex squares", "D^2=0 (total)"} <= names
    assert all(e["pass"] for e in rep.ledger)


def test_needs_one_extra_degree():
    with pytest.raises(ValueError):
        hochschild_cohomology(point_complex(3), 3)


def test_broken_data_detected():
    c = point_complex(3)
    c.cyclic_inv[1] = SparseMatrix.from_dense([[2]])
    with pytest.raises(NotCocyclic):
        cyclic_cohomology_bicomplex(c, 2)
    c = point_complex(3)
    c.faces[(0, 0)] = SparseMatrix.from_dense([[2]])
    with pytest.raises(NotAComplex):
        hochschild_cohomology(c, 2)


def test_coboundary_shape(kc2):
    c = build_cm_complex(kc2, coalgebra_self(kc2), 2)
    b = coboundary(c, 1)
    assert b.shape == (c.dims[2], c.dims[1])
    assert (coboundary(c, 1) @ coboundary(c, 0)).is_zero()
