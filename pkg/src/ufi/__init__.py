"""Uniform face ideals of coloured simplicial complexes.

Exact (integer/rational) computation of the monomial ideal attached to a
simplicial complex with an ordered proper vertex colouring, together with
its minimal free resolution data, Hilbert series, irreducible decomposition,
and Boij-Soederberg decompositions.  Everything has two routes — a closed
form and an independent oracle — and the CLI ``ufi verify`` diffs them.
"""

from .colouring import (
    Colouring,
    NestedResult,
    chromatic_number,
    graph_chromatic_number,
    graph_nested_chromatic_number,
    is_nested,
    is_proper,
    nested_chromatic_number,
    nesting_order,
    properness_witness,
    singleton_colouring,
)
from .cubical import (
    CellularFreeComplex,
    CubicalComplex,
    cellular_free_complex,
    collapse_sequence,
    cubical_complex,
    cubical_for,
    verify_resolution,
)
from .errors import (
    DEFAULT_GUARDS,
    Guards,
    InputError,
    PreconditionError,
    SizeGuardError,
    UfiError,
)
from .invariants import (
    BettiTable,
    BSDecomposition,
    HilbertSummary,
    PureDiagram,
    betti_closed_form,
    betti_from_oracle,
    bsd_generic,
    bsd_ideal,
    bsd_quotient,
    hilbert_numerator_closed_form,
    hilbert_summary,
    pure_diagram,
    render_betti,
)
from .monomial import (
    BorelPoset,
    MonomialIdeal,
    associated_primes_generic,
    irreducible_decomposition_generic,
    irreducible_ideal,
    is_matroidal,
    is_polymatroidal,
    is_principal_q_borel,
    is_q_borel,
    is_stable,
    is_strongly_stable,
    is_weakly_polymatroidal,
    q_borel_generators,
)
from .oracles import (
    MultigradedBettiTable,
    betti_oracle,
    first_syzygy_degrees,
    hilbert_numerator,
    hilbert_numerator_inclusion_exclusion,
    lcm_lattice,
)
from .poset import (
    IndexVectorPoset,
    NonfacePoset,
    boolean_interval_count,
    covering_relations,
    first_betti_lower_bound,
    first_syzygies_covering,
    hasse_dot,
    index_vector_poset,
    is_meet_distributive,
    is_meet_semilattice,
    is_order_ideal,
    meet,
    minimal_nonface_poset,
)
from .primes import (
    PersistenceReport,
    UfiDecomposition,
    is_unmixed,
    persistence_report,
    ufi_associated_primes,
    ufi_irreducible_decomposition,
)
from .simplicial import (
    SimpleGraph,
    SimplicialComplex,
    clique_complex,
    independence_complex,
    stanley_reisner_exponents,
)
from .uniform import (
    face_for_index_vector,
    face_monomial_tags,
    index_vector,
    power_as_ufi,
    product_as_ufi,
    q_k_poset,
    ufi_variables,
    uniform_face_ideal,
    uniform_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "BorelPoset",
    "BSDecomposition",
    "BettiTable",
    "CellularFreeComplex",
    "Colouring",
    "CubicalComplex",
    "DEFAULT_GUARDS",
    "Guards",
    "HilbertSummary",
    "IndexVectorPoset",
    "InputError",
    "MonomialIdeal",
    "MultigradedBettiTable",
    "NestedResult",
    "NonfacePoset",
    "PersistenceReport",
    "PreconditionError",
    "PureDiagram",
    "SimpleGraph",
    "SimplicialComplex",
    "SizeGuardError",
    "UfiDecomposition",
    "UfiError",
    "associated_primes_generic",
    "betti_closed_form",
    "betti_from_oracle",
    "betti_oracle",
    "boolean_interval_count",
    "bsd_generic",
    "bsd_ideal",
    "bsd_quotient",
    "cellular_free_complex",
    "chromatic_number",
    "clique_complex",
    "collapse_sequence",
    "covering_relations",
    "cubical_complex",
    "cubical_for",
    "face_for_index_vector",
    "face_monomial_tags",
    "first_betti_lower_bound",
    "first_syzygies_covering",
    "first_syzygy_degrees",
    "graph_chromatic_number",
    "graph_nested_chromatic_number",
    "hasse_dot",
    "hilbert_numerator",
    "hilbert_numerator_closed_form",
    "hilbert_numerator_inclusion_exclusion",
    "hilbert_summary",
    "independence_complex",
    "index_vector",
    "index_vector_poset",
    "irreducible_decomposition_generic",
    "irreducible_ideal",
    "is_matroidal",
    "is_meet_distributive",
    "is_meet_semilattice",
    "is_nested",
    "is_order_ideal",
    "is_polymatroidal",
    "is_principal_q_borel",
    "is_proper",
    "is_q_borel",
    "is_stable",
    "is_strongly_stable",
    "is_unmixed",
    "is_weakly_polymatroidal",
    "lcm_lattice",
    "meet",
    "minimal_nonface_poset",
    "nested_chromatic_number",
    "nesting_order",
    "persistence_report",
    "power_as_ufi",
    "product_as_ufi",
    "properness_witness",
    "pure_diagram",
    "q_borel_generators",
    "q_k_poset",
    "render_betti",
    "singleton_colouring",
    "stanley_reisner_exponents",
    "ufi_associated_primes",
    "ufi_irreducible_decomposition",
    "ufi_variables",
    "uniform_face_ideal",
    "uniform_monomial",
]
