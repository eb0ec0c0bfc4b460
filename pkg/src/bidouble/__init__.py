"""Exact checks for double constructions of associative and dendriform algebras.

Algebras are stored as rational structure constants. Every identity is checked
by computing its residual tensor exactly and reporting a certificate.
"""

from .actions import ActionFamily, check_bimodule, dual_family, family, regular, semidirect
from .algebra import (Algebra, associated_associative, check_axioms, commutator_lie,
                      dendriform_to_prelie, make, trivial_dendriform, zero_algebra)
from .bialgebra import (BialgebraStructure, bialgebra, bialgebra_functor, bridge_check,
                        check_bialgebra, ddb_from_connes, double_construction)
from .certificate import CONVENTION, Certificate
from .errors import (AxiomError, BidoubleError, KindError, NotSubalgebraError, ParseError,
                     SingularMatrixError)
from .exactlin import Tensor
from .forms import BilinearForm, check_form, dendriform_from_connes, natural_form
from .matched import MatchedPairData, bicross_product, check_matched_pair, decompose_check
from .yangbaxter import (OOperatorData, build_double, canonical_solution, coboundary_bialgebra,
                         induced_dual_products, induced_gram, is_o_operator, iso_witness,
                         lift_o_operator, residual)

__version__ = "0.1.0"

__all__ = [
    "ActionFamily", "Algebra", "AxiomError", "BialgebraStructure", "BidoubleError",
    "BilinearForm", "CONVENTION", "Certificate", "KindError", "MatchedPairData",
    "NotSubalgebraError", "OOperatorData", "ParseError", "SingularMatrixError", "Tensor",
    "associated_associative", "bialgebra", "bialgebra_functor", "bicross_product",
    "bridge_check", "build_double", "canonical_solution", "check_axioms", "check_bialgebra",
    "check_bimodule", "check_form", "check_matched_pair", "coboundary_bialgebra",
    "commutator_lie", "ddb_from_connes", "decompose_check", "dendriform_from_connes",
    "dendriform_to_prelie", "double_construction", "dual_family", "family",
    "induced_dual_products", "induced_gram", "is_o_operator", "iso_witness",
    "lift_o_operator", "make", "natural_form", "regular", "residual", "semidirect",
    "trivial_dendriform", "zero_algebra",
]
