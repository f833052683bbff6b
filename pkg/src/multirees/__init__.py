"""Multi-Rees algebras of chemical reaction networks, with an exact Groebner engine."""

from .analysis import (
    AnalysisReport,
    Check,
    cayley_nullity,
    codim_moduli,
    consistency_suite,
    deficiency,
    edge_invariance_suite,
    stoichiometric_dim,
)
from .crn_algebra import (
    FiberResult,
    NotWeaklyReversible,
    ReesPresentation,
    WeightWitness,
    binomial_generators,
    cayley_matrix,
    cayley_toric_ideal,
    find_positive_weights,
    homogeneity_check,
    kernel_soundness_check,
    moduli_ideal,
    partition_equivalence_check,
    rees_generators,
    rees_presentation,
    special_fiber_ideal,
    toric_ideal_of_matrix,
    toric_ideal_TG,
)
from .groebner import (
    Ideal,
    UnitIdealError,
    buchberger,
    dimension,
    eliminate,
    ideal_equal,
    ideal_member,
    reduce,
    saturate,
)
from .matrix import IntegerMatrix
from .network import (
    Edge,
    Network,
    NetworkSyntaxError,
    add_edge,
    connected_components,
    format_network,
    is_weakly_reversible,
    parse_network,
    strongly_connected_components,
    y_matrix,
)
from .poly_core import (
    Monomial,
    MonomialOrder,
    Multigrading,
    Polynomial,
    VariableContext,
    block_order,
    compare,
    grevlex,
    is_homogeneous,
    lex,
    parse_polynomial,
    substitute,
    weighted_grevlex,
    weighted_mdeg,
)

__version__ = "0.1.0"
