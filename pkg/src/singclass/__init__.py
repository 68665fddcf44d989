"""Exact classification of quasihomogeneous singularities and their polynomial curves."""

from .exactmath import ExactScalar, SeriesSpec, SparsePoly, parse_poly, poly_gcd, series_coeffs
from .hilbert import WeightedCI, classify_ci, veronese_analysis
from .brieskorn import classify_cone_surface, classify_fermat_hypersurface, classify_triple
from .curves import check_solution, schwartz_catalog, verify_identity
from .quotients import CyclicQuotientData, descend_lnd, hj_expansion, invariant_generators
from .lnd import Derivation, build_suspension, exp_flow, is_locally_nilpotent, orbit_avoids

__version__ = "0.1.0"
