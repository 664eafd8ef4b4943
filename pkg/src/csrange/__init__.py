"""Safe carrier-sensing range analysis for CSMA networks under cumulative interference.

The package answers one question two ways: how far apart must carrier sensing
keep concurrent transmitters so that every admissible set of links decodes
both its DATA and ACK frames? Closed forms live in `analytics` (a cumulative
model range of (K + 2) * d_max versus the single-interferer pairwise range),
exact worst-case packings in `packing`, topology-level verdicts in
`carrier_sensing`, and seeded Monte Carlo validation plus the
pairwise-model counterexample in `harness`.
"""

from .analytics import (
    RangeReport,
    RatioCurvePoint,
    interference_upper_bound,
    log_spaced,
    packing_constant_k,
    range_ratio,
    range_report,
    ratio_curve,
    ratio_curve_csv,
    ratio_limit,
    safe_csrange_pairwise,
    safe_csrange_physical,
    zeta_tail_partial_sum,
)
from .carrier_sensing import (
    EXHAUSTIVE_ENUMERATION_LIMIT,
    CSConfig,
    EnumerationResult,
    SafetyVerdict,
    SafetyWitness,
    blocks,
    enumerate_maximal_admissible_sets,
    is_admissible,
    is_safe_csrange,
)
from .errors import (
    CSRangeError,
    EmptyLinkSetError,
    InvalidExponentError,
    InvalidThresholdError,
    NotAViolationError,
    SamePolarityError,
    TooManyLinksError,
    ZeroDistanceError,
)
from .geometry import (
    DISTANCE_TOL,
    CrossDistances,
    DirectedLink,
    LinkSet,
    NodePosition,
    cross_distances,
    distance,
    linkset_from_json_dict,
    linkset_to_json_dict,
    load_topology,
    path_gain,
    save_topology,
)
from .harness import (
    Counterexample,
    SweepResult,
    SweepRow,
    TopologyConfig,
    bisect_empirical_safe_range,
    build_pairwise_counterexample,
    counterexample_report,
    greedy_admission,
    minimal_violating_rings,
    random_topology,
    theorem1_sweep,
)
from .interference import (
    UNBOUNDED_SIR,
    ConcurrentSet,
    Phase,
    RadioParams,
    UnboundedSir,
    active_sender,
    sinr_at,
    transfer_succeeds,
    worst_case_frame_sirs,
    worst_case_transfer_succeeds,
)
from .packing import (
    HexPacking,
    RingCensus,
    bound_slack,
    build_hex_packing,
    cumulative_interference,
    lattice_tail_bound,
    layer_census,
    layered_bound_interference,
    packing_to_json_dict,
    ring_interference,
)

__version__ = "0.1.0"
