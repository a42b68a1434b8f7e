"""Exact arithmetic in affine Hecke algebras: Iwahori-Matsumoto and Bernstein
presentations, conversions between them, and the Satake transform."""

from .coeffring import LaurentScalar, ScalarFraction, specialize, specialize_q
from .extweyl import ExtAffElt, affine_simple, ext_length, from_word, reduced_word, translation
from .heckebern import BernAlgebra, BernElement, InconclusiveAfterTrials, SolveFailed, Verdict
from .heckeim import BudgetExceeded, IMAlgebra, ImElement, NotDominant
from .rootdata import IncompatibleLattice, InvalidCartan, RootDatum, WeylElt, build_root_datum, root_datum_from_config
from .satake import (
    GroupAlgElement,
    center_exhaustion,
    center_map_Z,
    e_K_and_poincare,
    orbit_monomial_sum,
    sat_transform,
    satake_spherical,
    w_invariance_check,
)

__all__ = [
    "LaurentScalar", "ScalarFraction", "specialize", "specialize_q",
    "ExtAffElt", "affine_simple", "ext_length", "from_word", "reduced_word", "translation",
    "BernAlgebra", "BernElement", "InconclusiveAfterTrials", "SolveFailed", "Verdict",
    "BudgetExceeded", "IMAlgebra", "ImElement", "NotDominant",
    "IncompatibleLattice", "InvalidCartan", "RootDatum", "WeylElt", "build_root_datum", "root_datum_from_config",
    "GroupAlgElement", "center_exhaustion", "center_map_Z", "e_K_and_poincare", "orbit_monomial_sum",
    "sat_transform", "satake_spherical", "w_invariance_check",
]
