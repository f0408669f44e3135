"""Exact intersection theory on moduli spaces of stable curves.

Pure psi integrals by the Virasoro/DVV recursion, kappa classes by the
added-points expansion, Hodge integrals by a Chern-character recursion, and
Omega (Chiodo) classes by the stable-graph sum or their r = 1 closed forms;
on top of these, the orbifold Euler characteristics of M_{g,n} by three
routes, Masur-Veech volume polynomials by two, and a machine-checkable suite
for the shift/pullback/string/dilaton/vanishing identities of the
Omega-class calculus.  All arithmetic is exact rational.
"""

from .apps import (
    EulerCharResult,
    MVResult,
    chi,
    chi_harer_zagier,
    chi_recursion_check,
    chi_via_hodge,
    chi_via_omega,
    dyz_identity_check,
    mv,
    mv_normalization,
    mv_segre_check,
    mv_via_hodge,
    mv_via_omega,
)
from .exact import (
    Rat,
    SymmetricEvalContext,
    bernoulli_number,
    bernoulli_poly,
    complete_homogeneous,
    elementary_symmetric,
    power_sum,
    stirling_generalized_first,
    stirling_generalized_second,
)
from .graphs import (
    StableGraph,
    Weighting,
    WeightingConstraintError,
    automorphism_order,
    enumerate_stable_graphs,
    enumerate_weightings,
)
from .hodge import hodge_integral, hodge_monomial, hodge_pair
from .intersect import forgetful_pullback_check, integrate_mixed, integrate_monomial
from .omega import (
    OmegaConstraintError,
    OmegaSpec,
    degree_bound_check,
    hodge_expand,
    omega_closed_form_r1,
    omega_integral,
    omega_pairings,
)
from .polys import (
    EdgeSeries,
    TautMonomial,
    TautPolynomial,
    edge_local_factor,
    exp_kappa_series,
    psi_geometric,
    substitute_edge,
    tp_add,
    tp_mul,
    tp_scale,
)
from .psi import psi_integral

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
