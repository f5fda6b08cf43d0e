"""Exact computations on twinned order polytopes of finite poset pairs.

Pipeline: posets and their ideal lattices -> the twinned point
configuration and its polytope -> the toric ideal, its quadratic binomial
family, and Groebner bases under constrained reverse-lex orders -> lattice
point counts, delta-vectors, and the reflexive/Fano/normality checks.
"""

from .posets import (
    Poset,
    PosetError,
    antichain,
    chain,
    common_linear_extension,
    enumerate_ideals,
    is_linear_extension,
    linear_extensions,
    parse_poset,
    poset_from_relations,
    random_poset,
    relabel_by_extension,
    union_cycle,
)
from .geometry import (
    GeometryError,
    HalfSpace,
    InteriorCertificate,
    PointConfiguration,
    Polytope,
    build_omega,
    contains,
    hull_halfspaces,
    origin_in_interior,
    polytope_from_configuration,
    rho,
)
from .toric import (
    Binomial,
    Monomial,
    ToricError,
    Variable,
    VariableSet,
    binomial_text,
    binomial_to_json_dict,
    build_variables,
    family_G,
    in_kernel,
    monomial_text,
    pi_eval,
    quadratic_kernel_binomials,
)
from .groebner import (
    GroebnerBasis,
    GroebnerError,
    MonomialOrder,
    Theorem2Report,
    buchberger,
    default_order,
    default_ranking,
    ideal_equality,
    is_groebner,
    make_order,
    max_degree,
    random_ranking,
    reduce_binomial,
    s_binomial,
    toric_ideal_generators,
    verify_theorem2,
)
from .ehrhart import (
    DeltaVector,
    EhrhartCounts,
    EhrhartError,
    check_fano,
    check_normal,
    check_reflexive,
    count_dilate,
    delta_vector,
    ehrhart_counts,
    ehrhart_from_delta,
    is_symmetric_unimodal,
)
from .catalog import (
    GOLDEN_DELTA,
    chain_antichain_pair,
    counterexample_cubic,
    counterexample_pair,
    random_common_extension_pair,
    random_pair,
)

__all__ = [name for name in dir() if not name.startswith("_")]
