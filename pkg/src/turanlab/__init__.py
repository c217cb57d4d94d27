"""turanlab: exact workbench for clique-free extremal graph theory."""

from .canon import are_isomorphic, canonical_form, certificate
from .constructions import (
    extremal_family,
    extremal_graph,
    groetzsch_graph,
    k4free_5chromatic,
    sat_non_blowup,
    sat_twin_free,
    three_sat_many_twin_classes,
    three_sat_twin_free,
    threshold_size,
    trianglefree_5chromatic,
    turan_graph,
    turan_number,
)
from .deficiency import (
    deficiency,
    deficiency_lower_bound,
    deficiency_search,
    extremal_size_estimate,
    optimal_blowup,
)
from .enumeration import EnumerationLimitError, enumerate_graphs, levels_up_to
from .graph import (
    Graph,
    GraphFormatError,
    Partition,
    blow_up,
    complete_graph,
    complete_multipartite,
    cone,
    cycle_graph,
    empty_graph,
    from_graph6,
    path_graph,
    to_graph6,
    twin_classes,
)
from .invariants import (
    CliquePresentError,
    Coloring,
    PeelResult,
    SearchBudgetExceeded,
    aes_peel,
    chromatic_number,
    clique_number,
    is_clique_free,
    is_r_colorable,
)
from .saturation import SaturationReport, is_saturated, saturate
from .symmetrization import (
    SymmetrizationTrace,
    is_increasing,
    replay,
    switch_edge,
    zykov,
    zykov_reduce,
)
from .tripartite import (
    CertificateError,
    TripartiteCertificate,
    extract_tripartite,
    validate_certificate,
)

__version__ = "0.1.0"
