"""Exact q-series characters of the neutral free fermion and the c = -21/4
Ramond superconformal algebra.

The package computes the odd-trace characters of these modules by two
independent routes (brute-force graded traces over monomial bases, and
closed-form q-expansions) and verifies that they agree: the fermion trace
reproduces the Dedekind eta function, and the c = -21/4 trace reproduces
eta^3/4, which together machine-check Jacobi's identity
eta^3 = q^(1/8) sum_n (4n+1) q^(n(2n+1)).
"""

from .qseries import FracPowerSeries, QExponent, eta, euler_product, jacobi_rhs
from .superalgebras import (
    BasisElement,
    BracketResult,
    SpectrumEntry,
    bracket,
    g0_square_value,
    minimal_model_spectrum,
)
from .pbw import (
    GradedTraceReport,
    PBWMonomial,
    enumerate_fermion_monomials,
    enumerate_ns_monomials,
    fermion_odd_trace,
    signed_monomial_count,
    verma_leading_trace,
)
from .characters import (
    SignAssignment,
    VerificationReport,
    bgg_odd_trace,
    resolve_signs,
    verify_bgg_equals_eta_cubed,
    verify_fermion_eta,
    verify_jacobi,
)
from .queer import EndElement, QueerElement, odd_trace, queer_mul, supertrace
from .modcheck import ModularResidual, TauPoint, check_S, check_T, eval_series

__version__ = "0.1.0"

__all__ = [
    "FracPowerSeries", "QExponent", "eta", "euler_product", "jacobi_rhs",
    "BasisElement", "BracketResult", "SpectrumEntry", "bracket",
    "g0_square_value", "minimal_model_spectrum",
    "GradedTraceReport", "PBWMonomial", "enumerate_fermion_monomials",
    "enumerate_ns_monomials", "fermion_odd_trace", "signed_monomial_count",
    "verma_leading_trace",
    "SignAssignment", "VerificationReport", "bgg_odd_trace", "resolve_signs",
    "verify_bgg_equals_eta_cubed", "verify_fermion_eta", "verify_jacobi",
    "EndElement", "QueerElement", "odd_trace", "queer_mul", "supertrace",
    "ModularResidual", "TauPoint", "check_S", "check_T", "eval_series",
    "__version__",
]
