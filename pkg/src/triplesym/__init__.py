"""Triple quadratic and cubic residue symbols, with a finite cochain lab."""

from .conic import RedeiBeta, compute_beta, verify_beta
from .cubic import (
    AdmissibleTriple3,
    ThetaElement,
    admissible3,
    cubic_triple_symbol,
    oracle_split3,
    theta_search,
    verify_theta,
)
from .eisenstein import EisensteinInteger, PrimaryPrime, cubic_residue_symbol, primary_associate
from .modarith import OddPrime, legendre, sqrt_mod
from .redei import AdmissibleTriple2, SymbolValue, admissible2, oracle_symbol2, redei_symbol

__version__ = "0.1.0"

__all__ = [
    "AdmissibleTriple2",
    "AdmissibleTriple3",
    "EisensteinInteger",
    "OddPrime",
    "PrimaryPrime",
    "RedeiBeta",
    "SymbolValue",
    "ThetaElement",
    "admissible2",
    "admissible3",
    "compute_beta",
    "cubic_residue_symbol",
    "cubic_triple_symbol",
    "legendre",
    "oracle_split3",
    "oracle_symbol2",
    "primary_associate",
    "redei_symbol",
    "sqrt_mod",
    "theta_search",
    "verify_beta",
    "verify_theta",
]
