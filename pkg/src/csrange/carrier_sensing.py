"""Carrier-sense blocking, admissible concurrent sets, and the safe-range verdict.

Two links may transmit concurrently only if their transmitters cannot hear
each other, i.e. their separation is at least the carrier-sensing range
(blocking is strict: exactly-equal separation still permits concurrency). A
range is safe for a topology when every admissible concurrent set clears the
SINR requirement on both frames of every member under any DATA/ACK phase mix.

Interference only grows when a set gains members, so it is enough to check
the maximal admissible sets; those are enumerated exhaustively (they are the
maximal cliques of the compatibility graph), which is why topology size is
capped here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import TooManyLinksError
from .geometry import LinkSet, NodePosition, distance
from .interference import Phase, RadioParams, worst_case_frame_sirs

# Largest topology the exhaustive enumeration accepts by default. Maximal-set
# counts grow roughly like 3^(n/3); 20 links keeps worst cases in the low
# thousands.
EXHAUSTIVE_ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class CSConfig:
    """Carrier-sensing configuration: the sensing range in meters."""

    cs_range: float

    def __post_init__(self) -> None:
        if not self.cs_range > 0:
            raise ValueError(f"cs_range must be positive, got {self.cs_range}")


def blocks(ti: NodePosition, tj: NodePosition, cfg: CSConfig) -> bool:
    """Whether two transmitters are within carrier-sensing range of each other.

    Strict comparison: transmitters exactly cs_range apart do not block.
    """
    return distance(ti, tj) < cfg.cs_range


def is_admissible(member_links: Sequence[int], ls: LinkSet, cfg: CSConfig) -> bool:
    """Whether the given links could all be on the air at once under carrier sensing."""
    members = list(member_links)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if blocks(ls[members[a]].tx, ls[members[b]].tx, cfg):
                return False
    return True


class EnumerationResult(NamedTuple):
    sets: list[tuple[int, ...]]
    truncated: bool


def enumerate_maximal_admissible_sets(
    ls: LinkSet,
    cfg: CSConfig,
    cap: int | None = None,
    max_links: int = EXHAUSTIVE_ENUMERATION_LIMIT,
) -> EnumerationResult:
    """All maximal admissible sets of a topology, as sorted index tuples.

    Output is deterministic and order-stable: sets are explored in a fixed
    pivoting order and returned sorted lexicographically. If `cap` is given,
    enumeration stops once that many sets were collected and the result is
    flagged truncated. Topologies larger than `max_links` are refused
    (TooManyLinksError); sample large topologies with the greedy-admission
    harness instead.
    """
    n = len(ls)
    if n > max_links:
        raise TooManyLinksError(
            f"{n} links exceed the exhaustive-enumeration bound of {max_links}; "
            "use greedy-admission sampling for large topologies"
        )
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be positive when given, got {cap}")

    compatible = [set() for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if not blocks(ls[a].tx, ls[b].tx, cfg):
                compatible[a].add(b)
                compatible[b].add(a)

    found: list[tuple[int, ...]] = []

    def expand(clique: set[int], candidates: set[int], excluded: set[int]) -> bool:
        # Bron-Kerbosch with pivoting on the compatibility graph; cliques
        # there are exactly the maximal admissible sets.
        if not candidates and not excluded:
            found.append(tuple(sorted(clique)))
            return cap is None or len(found) < cap
        pivot = max(candidates | excluded, key=lambda v: (len(candidates & compatible[v]), -v))
        for v in sorted(candidates - compatible[pivot]):
            if not expand(clique | {v}, candidates & compatible[v], excluded & compatible[v]):
                return False
            candidates = candidates - {v}
            excluded = excluded | {v}
        return True

    completed = expand(set(), set(range(n)), set())
    found.sort()
    return EnumerationResult(sets=found, truncated=not completed)


@dataclass(frozen=True)
class SafetyWitness:
    """A concrete violation: which set, which member, which frame, what SIR."""

    concurrent_set: tuple[int, ...]
    link_index: int
    frame: Phase
    sir: float


@dataclass(frozen=True)
class SafetyVerdict:
    safe: bool
    witness: SafetyWitness | None = None


def is_safe_csrange(
    ls: LinkSet,
    cfg: CSConfig,
    params: RadioParams,
    max_links: int = EXHAUSTIVE_ENUMERATION_LIMIT,
) -> SafetyVerdict:
    """Whether `cfg.cs_range` is safe for this topology under worst-case phases.

    Only maximal admissible sets are examined: a violation inside any
    admissible set persists in every superset (extra interferers only lower
    SIR), so some maximal set exhibits it too. The verdict is deterministic;
    the witness returned for an unsafe range is the first failure in the
    enumeration order.
    """
    gamma0 = params.sinr_threshold
    result = enumerate_maximal_admissible_sets(ls, cfg, cap=None, max_links=max_links)
    for members in result.sets:
        for i in members:
            data, ack = worst_case_frame_sirs(i, members, ls, params)
            if not data >= gamma0:
                return SafetyVerdict(
                    safe=False,
                    witness=SafetyWitness(members, i, Phase.DATA, float(data)),
                )
            if not ack >= gamma0:
                return SafetyVerdict(
                    safe=False,
                    witness=SafetyWitness(members, i, Phase.ACK, float(ack)),
                )
    return SafetyVerdict(safe=True)
