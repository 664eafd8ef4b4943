"""Monte Carlo validation harness: random topologies, greedy admission,
range sweeps, the pairwise-model counterexample, and empirical bisection.

Everything stochastic is driven by explicit seeds. Each trial derives its own
stream from (master seed, trial index), so runs are reproducible, independent
of evaluation order, and safe to fan out across worker processes; CSV output
for the same configuration is byte-identical from run to run.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .analytics import format_plain, safe_csrange_pairwise
from .carrier_sensing import CSConfig, blocks, is_admissible, is_safe_csrange
from .errors import NotAViolationError, SamePolarityError
from .geometry import (
    DirectedLink,
    LinkSet,
    NodePosition,
    distance,
    linkset_to_json_dict,
    path_gain,
)
from .interference import RadioParams, worst_case_frame_sirs, worst_case_transfer_succeeds
from .packing import build_hex_packing


@dataclass(frozen=True)
class TopologyConfig:
    """Shape of a random topology draw.

    Transmitters land uniformly in an area_side x area_side square; each
    receiver lands uniformly in the disk of radius max_link_len around its
    transmitter (zero-length draws rejected), so link lengths are mixed with
    d_max typically close to, but below, max_link_len.
    """

    area_side: float
    num_links: int
    max_link_len: float
    rng_seed: int

    def __post_init__(self) -> None:
        if not self.area_side > 0:
            raise ValueError(f"area_side must be positive, got {self.area_side}")
        if self.num_links < 1:
            raise ValueError(f"num_links must be at least 1, got {self.num_links}")
        if not self.max_link_len > 0:
            raise ValueError(f"max_link_len must be positive, got {self.max_link_len}")


def random_topology(cfg: TopologyConfig, rng: np.random.Generator | None = None) -> LinkSet:
    """Seed-deterministic random topology; same cfg, same links."""
    if rng is None:
        rng = np.random.default_rng(cfg.rng_seed)
    links = []
    for _ in range(cfg.num_links):
        tx = NodePosition(cfg.area_side * rng.random(), cfg.area_side * rng.random())
        while True:
            radius = cfg.max_link_len * math.sqrt(rng.random())
            if radius > 0.0:
                break
        theta = 2.0 * math.pi * rng.random()
        rx = NodePosition(tx.x + radius * math.cos(theta), tx.y + radius * math.sin(theta))
        links.append(DirectedLink(tx, rx))
    return LinkSet(tuple(links))


def greedy_admission(ls: LinkSet, cfg: CSConfig, order: Sequence[int]) -> list[int]:
    """Scan links in `order`, admitting each one its transmitter cannot hear.

    Mirrors what carrier sensing does to an arrival order: a link joins iff
    its transmitter is at least cs_range away from every already-admitted
    transmitter. The result is admissible and maximal with respect to the
    scan (every rejected link was blocked by some admitted one).
    """
    order = list(order)
    if sorted(order) != list(range(len(ls))):
        raise ValueError("order must be a permutation of all link indices")
    admitted: list[int] = []
    for i in order:
        if all(not blocks(ls[i].tx, ls[j].tx, cfg) for j in admitted):
            admitted.append(i)
    return admitted


@dataclass(frozen=True)
class SweepRow:
    """Collision statistics for one sensing-range multiplier."""

    cs_range_over_dmax: float
    trials: int
    admitted_sets: int
    violating_sets: int
    violation_rate: float
    violating_links: int


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]

    def to_csv(self) -> str:
        lines = ["cs_range_over_dmax,trials,admitted_sets,violating_sets,violation_rate,violating_links"]
        for r in self.rows:
            lines.append(
                ",".join(
                    (
                        format_plain(r.cs_range_over_dmax),
                        str(r.trials),
                        str(r.admitted_sets),
                        str(r.violating_sets),
                        format_plain(r.violation_rate),
                        str(r.violating_links),
                    )
                )
            )
        return "\n".join(lines) + "\n"


def _sweep_trial(
    cfg: TopologyConfig,
    params: RadioParams,
    multiplier: float,
    trial_index: int,
    permutations_per_trial: int,
) -> tuple[int, int, int]:
    """(admitted_sets, violating_sets, violating_links) for one trial."""
    rng = np.random.default_rng([cfg.rng_seed, trial_index])
    ls = random_topology(cfg, rng=rng)
    cs = CSConfig(multiplier * ls.max_link_length())
    admitted_sets = violating_sets = violating_links = 0
    for _ in range(permutations_per_trial):
        order = [int(v) for v in rng.permutation(len(ls))]
        members = greedy_admission(ls, cs, order)
        admitted_sets += 1
        bad = sum(
            1 for i in members if not worst_case_transfer_succeeds(i, members, ls, params)
        )
        if bad:
            violating_sets += 1
            violating_links += bad
    return admitted_sets, violating_sets, violating_links


def theorem1_sweep(
    cfg: TopologyConfig,
    params: RadioParams,
    range_multipliers: Sequence[float],
    trials: int,
    permutations_per_trial: int = 1,
    workers: int = 1,
) -> SweepResult:
    """Violation statistics versus sensing range, on matched random topologies.

    For each multiplier m the sensing range is m times the actual longest
    link of each generated topology, every permutation's greedy admission
    counts as one admitted set, and a set violates when any member fails the
    worst-case both-frame SINR check. The same per-trial streams are replayed
    for every multiplier, so rows are directly comparable, and results do not
    depend on `workers`.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if permutations_per_trial < 1:
        raise ValueError(f"permutations_per_trial must be at least 1, got {permutations_per_trial}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if not range_multipliers:
        raise ValueError("at least one range multiplier is required")
    for m in range_multipliers:
        if not m > 0:
            raise ValueError(f"range multipliers must be positive, got {m}")

    rows = []
    for m in range_multipliers:
        if workers == 1:
            counts = [
                _sweep_trial(cfg, params, m, t, permutations_per_trial) for t in range(trials)
            ]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                counts = list(
                    pool.map(
                        _sweep_trial,
                        [cfg] * trials,
                        [params] * trials,
                        [m] * trials,
                        range(trials),
                        [permutations_per_trial] * trials,
                        chunksize=max(1, trials // (workers * 4)),
                    )
                )
        admitted = sum(c[0] for c in counts)
        violating = sum(c[1] for c in counts)
        links = sum(c[2] for c in counts)
        rows.append(
            SweepRow(
                cs_range_over_dmax=m,
                trials=trials,
                admitted_sets=admitted,
                violating_sets=violating,
                violation_rate=violating / admitted,
                violating_links=links,
            )
        )
    return SweepResult(rows=tuple(rows))


@dataclass(frozen=True)
class Counterexample:
    """An admissible topology that the pairwise-sized range fails to protect."""

    links: LinkSet
    cs: CSConfig
    victim_index: int
    rings: int


# Relative stretch applied to the counterexample lattice pitch. Keeps every
# separation strictly above cs_range despite float rounding of hexagonal
# coordinates, and large enough that the layout also stays admissible when
# re-checked at the range rounded to four decimals (a relative perturbation
# of order 1e-5), while moving interferers out too little to matter.
_PITCH_MARGIN = 1e-4


def build_pairwise_counterexample(
    params: RadioParams,
    rings: int = 1,
    d_max: float = 1.0,
    interferer_len_frac: float = 0.999,
) -> Counterexample:
    """Admissible-at-pairwise-range topology whose victim still fails.

    The victim runs from the lattice origin to (d_max, 0). Interferer
    transmitters occupy rings of the triangular lattice whose pitch is the
    pairwise-model range (2 + gamma0^(1/alpha)) * d_max, and every interferer
    link points straight at the victim's receiver with length
    interferer_len_frac * d_max. Pointing inward parks each interfering
    sender as close to the victim receiver as the triangle inequality allows,
    so one interferer alone still clears gamma0 -- exactly the situation the
    pairwise model signs off on -- while the ring sums do not.

    Raises NotAViolationError (with the SIRs actually achieved) if the victim
    passes the worst-case check anyway, e.g. with very short interferer links.
    """
    if rings < 1:
        raise ValueError(f"rings must be at least 1, got {rings}")
    if not 0.0 < interferer_len_frac <= 1.0:
        raise ValueError(
            f"interferer_len_frac must be in (0, 1], got {interferer_len_frac}"
        )
    if not d_max > 0:
        raise ValueError(f"d_max must be positive, got {d_max}")

    cs_range = safe_csrange_pairwise(params.sinr_threshold, params.path_loss_exp, d_max)
    pitch = cs_range * (1.0 + _PITCH_MARGIN)
    lattice = build_hex_packing(pitch, rings)
    victim = DirectedLink(NodePosition(0.0, 0.0), NodePosition(d_max, 0.0))
    length = interferer_len_frac * d_max
    links = [victim]
    for tx in lattice.interferers:
        gap = distance(tx, victim.rx)
        ux = (victim.rx.x - tx.x) / gap
        uy = (victim.rx.y - tx.y) / gap
        links.append(DirectedLink(tx, NodePosition(tx.x + length * ux, tx.y + length * uy)))
    ls = LinkSet(tuple(links))
    cs = CSConfig(cs_range)

    everyone = list(range(len(ls)))
    if not is_admissible(everyone, ls, cs):
        raise AssertionError("counterexample construction produced a blocked pair")
    data, ack = worst_case_frame_sirs(0, everyone, ls, params)
    gamma0 = params.sinr_threshold
    if data >= gamma0 and ack >= gamma0:
        raise NotAViolationError(
            "constructed topology does not violate: victim worst-case "
            f"DATA SIR {float(data):.6g} and ACK SIR {float(ack):.6g} both clear "
            f"threshold {gamma0:.6g}; try more rings or longer interferer links",
            data_sir=float(data),
            ack_sir=float(ack),
        )
    return Counterexample(links=ls, cs=cs, victim_index=0, rings=rings)


def minimal_violating_rings(
    params: RadioParams,
    max_rings: int = 8,
    d_max: float = 1.0,
    interferer_len_frac: float = 0.999,
) -> int:
    """Smallest ring count at which the counterexample construction violates."""
    last: NotAViolationError | None = None
    for rings in range(1, max_rings + 1):
        try:
            build_pairwise_counterexample(params, rings, d_max, interferer_len_frac)
            return rings
        except NotAViolationError as exc:
            last = exc
    raise NotAViolationError(
        f"no violation within {max_rings} rings: {last}",
        data_sir=None if last is None else last.data_sir,
        ack_sir=None if last is None else last.ack_sir,
    )


def counterexample_report(ce: Counterexample, params: RadioParams) -> dict:
    """JSON-ready breakdown of why the victim fails at the returned range.

    Includes the topology, both worst-case frame SIRs of the victim, and each
    interferer's worst-case contribution (sender endpoint used, distance,
    received power, share of the frame's total interference).
    """
    ls = ce.links
    victim = ls[ce.victim_index]
    others = [i for i in range(len(ls)) if i != ce.victim_index]
    alpha = params.path_loss_exp

    def frame_breakdown(endpoint: NodePosition) -> tuple[float, list[dict]]:
        entries = []
        total = 0.0
        for j in others:
            lj = ls[j]
            candidates = (("tx", lj.tx), ("rx", lj.rx))
            name, pos = min(candidates, key=lambda c: distance(c[1], endpoint))
            power = params.tx_power * path_gain(pos, endpoint, alpha)
            total += power
            entries.append(
                {
                    "link_index": j,
                    "sender_endpoint": name,
                    "sender": [pos.x, pos.y],
                    "distance": distance(pos, endpoint),
                    "power_watts": power,
                }
            )
        for e in entries:
            e["share"] = e["power_watts"] / total if total > 0 else 0.0
        return total, entries

    data, ack = worst_case_frame_sirs(ce.victim_index, list(range(len(ls))), ls, params)
    data_total, data_entries = frame_breakdown(victim.rx)
    ack_total, ack_entries = frame_breakdown(victim.tx)
    return {
        "topology": linkset_to_json_dict(ls),
        "cs_range": ce.cs.cs_range,
        "victim_index": ce.victim_index,
        "rings": ce.rings,
        "sinr_threshold": params.sinr_threshold,
        "data_sir": float(data),
        "ack_sir": float(ack),
        "data_interference_watts": data_total,
        "ack_interference_watts": ack_total,
        "data_contributions": data_entries,
        "ack_contributions": ack_entries,
    }


def bisect_empirical_safe_range(
    ls: LinkSet,
    params: RadioParams,
    lo: float,
    hi: float,
    tol: float | None = None,
) -> float:
    """Empirical safe-range threshold of a topology, bracketed to within tol.

    Requires the safety verdict to differ at lo and hi (SamePolarityError
    otherwise; safety is monotone in the range, so for the usual
    unsafe-at-lo, safe-at-hi bracket the value returned is the smallest safe
    range found, the endpoint on the far side of the crossover from lo).
    Default tol is 1e-3 times the longest link.
    """
    if not 0 < lo < hi:
        raise ValueError(f"need 0 < lo < hi, got lo={lo}, hi={hi}")
    if tol is None:
        tol = 1e-3 * ls.max_link_length()
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    at_lo = is_safe_csrange(ls, CSConfig(lo), params).safe
    at_hi = is_safe_csrange(ls, CSConfig(hi), params).safe
    if at_lo == at_hi:
        raise SamePolarityError(
            f"verdict is {'safe' if at_lo else 'unsafe'} at both {lo} and {hi}; "
            "no threshold is bracketed"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if is_safe_csrange(ls, CSConfig(mid), params).safe == at_lo:
            lo = mid
        else:
            hi = mid
    return hi
