"""Cumulative-interference SINR checks for DATA and ACK frames.

A transfer on a directed link only counts as successful if both frames get
through: the DATA frame at the link's receiver and the ACK coming back at its
transmitter. Every other concurrently active sender adds d^-alpha interference
power at the victim endpoint, so the check is a ratio against the summed
interference plus noise, not against the strongest single interferer.

Which endpoint of an interfering link radiates depends on the frame it is in
when the victim's frame is on the air (its transmitter during DATA, its
receiver during ACK). `transfer_succeeds` evaluates one pinned phase
assignment; `worst_case_transfer_succeeds` demands success under every
assignment, which is what a safety claim needs when phase timing is unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidExponentError, InvalidThresholdError
from .geometry import DirectedLink, LinkSet, NodePosition, path_gain


class Phase(Enum):
    """Which frame a link is currently sending: DATA goes tx -> rx, ACK rx -> tx."""

    DATA = "data"
    ACK = "ack"


@dataclass(frozen=True)
class RadioParams:
    """Homogeneous radio configuration, all in linear units.

    tx_power        transmit power P of every sender, watts
    sinr_threshold  minimum SINR gamma0 for successful decoding
    path_loss_exp   path-loss exponent alpha, must exceed 2
    noise_power     noise floor N at every receiver, watts (0 = interference-limited)
    """

    tx_power: float
    sinr_threshold: float
    path_loss_exp: float
    noise_power: float = 0.0

    def __post_init__(self) -> None:
        if not self.tx_power > 0:
            raise ValueError(f"tx_power must be positive, got {self.tx_power}")
        if not self.sinr_threshold > 0:
            raise InvalidThresholdError(
                f"sinr_threshold must be positive, got {self.sinr_threshold}"
            )
        if not self.path_loss_exp > 2:
            raise InvalidExponentError(
                "path_loss_exp must exceed 2 (the interference tail sum "
                f"1/(alpha-2) diverges otherwise), got {self.path_loss_exp}"
            )
        if self.noise_power < 0:
            raise ValueError(f"noise_power must be non-negative, got {self.noise_power}")


@dataclass(frozen=True)
class ConcurrentSet:
    """Links on the air at the same time, each pinned to the frame it is sending."""

    members: tuple[tuple[int, Phase], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple((int(i), p) for i, p in self.members))
        if not self.members:
            raise ValueError("a concurrent set needs at least one member")
        indices = [i for i, _ in self.members]
        if len(set(indices)) != len(indices):
            raise ValueError(f"concurrent set indices must be distinct, got {indices}")

    @classmethod
    def uniform(cls, indices: Iterable[int], phase: Phase = Phase.DATA) -> "ConcurrentSet":
        return cls(tuple((i, phase) for i in indices))

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.members)


class UnboundedSir:
    """Stands in for the SIR of an interference-free, noise-free reception.

    Compares greater than every finite ratio, and deliberately supports no
    arithmetic so it cannot silently turn into inf/inf = NaN downstream.
    """

    __slots__ = ()

    def __ge__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, UnboundedSir)

    def __le__(self, other: object) -> bool:
        return isinstance(other, UnboundedSir)

    def __lt__(self, other: object) -> bool:
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UnboundedSir)

    def __hash__(self) -> int:
        return hash(UnboundedSir)

    def __repr__(self) -> str:
        return "UNBOUNDED_SIR"


UNBOUNDED_SIR = UnboundedSir()


def active_sender(link: DirectedLink, phase: Phase) -> NodePosition:
    """The endpoint of `link` that radiates during `phase`."""
    return link.tx if phase is Phase.DATA else link.rx


def sinr_at(
    victim_receiver: NodePosition,
    victim_sender: NodePosition,
    interferers: Sequence[NodePosition],
    params: RadioParams,
) -> float | UnboundedSir:
    """SINR of the victim frame at its receiving endpoint.

        P * d(sender, receiver)^-alpha
        -------------------------------------------------
        N + sum_j P * d(interferer_j, receiver)^-alpha

    Returns UNBOUNDED_SIR when there are no interferers and the noise floor
    is zero (the ratio has no finite value in the interference-limited model).
    """
    alpha = params.path_loss_exp
    signal = params.tx_power * path_gain(victim_sender, victim_receiver, alpha)
    total = params.noise_power
    for pos in interferers:
        total += params.tx_power * path_gain(pos, victim_receiver, alpha)
    if total == 0.0:
        return UNBOUNDED_SIR
    return signal / total


def transfer_succeeds(
    victim_index: int, cset: ConcurrentSet, ls: LinkSet, params: RadioParams
) -> bool:
    """Both-frame success for one pinned phase assignment.

    Interference at the victim's receiver (DATA) and transmitter (ACK) comes
    from the active sender of every other member, per that member's phase.
    """
    indices = cset.indices()
    if victim_index not in indices:
        raise ValueError(f"victim index {victim_index} is not a member of the concurrent set")
    link = ls[victim_index]
    interferers = [
        active_sender(ls[i], phase) for i, phase in cset.members if i != victim_index
    ]
    gamma0 = params.sinr_threshold
    data_sinr = sinr_at(link.rx, link.tx, interferers, params)
    if not data_sinr >= gamma0:
        return False
    ack_sinr = sinr_at(link.tx, link.rx, interferers, params)
    return ack_sinr >= gamma0


def _worst_case_sir(
    endpoint: NodePosition,
    own_sender: NodePosition,
    interferer_indices: Sequence[int],
    ls: LinkSet,
    params: RadioParams,
) -> float | UnboundedSir:
    """One frame's SIR with every interferer at its higher-gain endpoint.

    The interference sum is separable per interferer, so maximizing each term
    over that link's two endpoints equals maximizing over all 2^k phase
    assignments at once.
    """
    alpha = params.path_loss_exp
    signal = params.tx_power * path_gain(own_sender, endpoint, alpha)
    total = params.noise_power
    for j in interferer_indices:
        lj = ls[j]
        gain = max(path_gain(lj.tx, endpoint, alpha), path_gain(lj.rx, endpoint, alpha))
        total += params.tx_power * gain
    if total == 0.0:
        return UNBOUNDED_SIR
    return signal / total


def worst_case_frame_sirs(
    victim_index: int,
    member_links: Sequence[int],
    ls: LinkSet,
    params: RadioParams,
) -> tuple[float | UnboundedSir, float | UnboundedSir]:
    """(DATA, ACK) SIR of the victim under the adversarial phase assignment.

    Success of the conjunction distributes over frames: the worst assignment
    for the DATA frame maximizes interference at the receiver, independently
    of the worst assignment for the ACK frame at the transmitter.
    """
    if victim_index not in member_links:
        raise ValueError(f"victim index {victim_index} is not among the member links")
    others = [i for i in member_links if i != victim_index]
    link = ls[victim_index]
    data = _worst_case_sir(link.rx, link.tx, others, ls, params)
    ack = _worst_case_sir(link.tx, link.rx, others, ls, params)
    return data, ack


def worst_case_transfer_succeeds(
    victim_index: int,
    member_links: Sequence[int],
    ls: LinkSet,
    params: RadioParams,
) -> bool:
    """True iff the victim's transfer succeeds under *every* phase assignment."""
    data, ack = worst_case_frame_sirs(victim_index, member_links, ls, params)
    gamma0 = params.sinr_threshold
    return data >= gamma0 and ack >= gamma0
