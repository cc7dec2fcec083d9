"""Exact computations for Hopf-cyclic (co)homology with coefficients:
para-cocyclic modules T(X, Y), the Connes-Moscovici style complex CM(H, Y),
commutator quotients, and cyclic/Hochschild ranks over Q or Q(q)."""

from .algebras import (
    PRESET_NAMES,
    Bialgebra,
    MonoidAlgebra,
    Sweedler4,
    UqSl2,
    check_hopf_axioms,
    make_preset,
)
from .checks import run_checks
from .coefficients import COEFFICIENT_NAMES, CoefficientModule, is_aYD, is_m_stable, make_coefficient
from .cocyclic import CMSpace, TSpace, cm_include, cm_project, kappa
from .config import RunConfig, parse_config
from .errors import (
    DegreeOverflow,
    HopfHCError,
    HypothesisFailed,
    NotAComplex,
    NotAYD,
    NotCocyclic,
    NotCoideal,
    NotHopf,
    NotStable,
    ParseError,
    ValidationError,
)
from .homology import HomologyReport, cyclic_cohomology_bicomplex, hochschild_cohomology
from .quotients import (
    CocyclicData,
    build_cm_complex,
    commutator_subspace,
    coinvariants,
    quotient_module_coalgebra,
)
from .scalars import RatFun
from .vanishing import uq_vanishing_check

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
