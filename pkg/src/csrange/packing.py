"""Worst-case interferer packing on a triangular lattice around a victim.

The densest arrangement of interfering senders that still keeps any two of
them (and the victim) a given pitch apart is the triangular lattice: ring n
holds exactly 6n points, the innermost ring sits at the pitch itself, and no
ring-n point comes closer to the center than (sqrt(3)/2) * n * pitch. Summing
d^-alpha over the lattice therefore upper-bounds the cumulative interference
any admissible population of senders can produce, and comparing that exact
sum against the closed-form cap in `analytics` shows how much slack the cap
carries.

Lattice points are generated from integer coordinates (i, j) mapped through
the basis (1, 0) and (1/2, sqrt(3)/2): position = center + pitch * (i + j/2,
j * sqrt(3)/2), with hex ring index max(|i|, |j|, |i+j|). Center distances are
then pitch * sqrt(i**2 + i*j + j**2) exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .analytics import packing_constant_k
from .errors import InvalidExponentError
from .geometry import NodePosition, path_gain
from .interference import RadioParams

_ORIGIN = NodePosition(0.0, 0.0)


@dataclass(frozen=True)
class HexPacking:
    """Interferer positions on a triangular lattice, grouped by hex ring.

    `rings[k]` is the ring index of `interferers[k]`; ring n contributes 6n
    points and all pairwise separations are at least `spacing`.
    """

    spacing: float
    layers: int
    center: NodePosition
    interferers: tuple[NodePosition, ...]
    rings: tuple[int, ...]


def build_hex_packing(
    spacing: float, layers: int, center: NodePosition = _ORIGIN
) -> HexPacking:
    """Lattice points of rings 1..layers around `center` (center itself excluded)."""
    if not spacing > 0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    if layers < 1:
        raise ValueError(f"layers must be at least 1, got {layers}")
    half_rt3 = math.sqrt(3.0) / 2.0
    cells = []
    for i in range(-layers, layers + 1):
        for j in range(-layers, layers + 1):
            ring = max(abs(i), abs(j), abs(i + j))
            if 1 <= ring <= layers:
                cells.append((ring, i, j))
    cells.sort()
    points = tuple(
        NodePosition(center.x + spacing * (i + 0.5 * j), center.y + spacing * (half_rt3 * j))
        for _, i, j in cells
    )
    rings = tuple(ring for ring, _, _ in cells)
    return HexPacking(
        spacing=spacing, layers=layers, center=center, interferers=points, rings=rings
    )


class RingCensus(NamedTuple):
    ring: int
    count: int
    min_center_distance: float


def layer_census(packing: HexPacking) -> list[RingCensus]:
    """Point count and minimum center distance per ring, rings 1..layers.

    Counts come out as exactly 6n and the minimum distance never falls below
    (sqrt(3)/2) * n * spacing (the flat-edge midpoints of even rings attain it).
    """
    counts = {n: 0 for n in range(1, packing.layers + 1)}
    min_dist = {n: math.inf for n in range(1, packing.layers + 1)}
    for pos, ring in zip(packing.interferers, packing.rings):
        counts[ring] += 1
        d = math.hypot(pos.x - packing.center.x, pos.y - packing.center.y)
        if d < min_dist[ring]:
            min_dist[ring] = d
    return [
        RingCensus(ring=n, count=counts[n], min_center_distance=min_dist[n])
        for n in range(1, packing.layers + 1)
    ]


def cumulative_interference(
    victim: NodePosition, interferers: Sequence[NodePosition], params: RadioParams
) -> float:
    """Exact summed interference power sum_j P * d(pos_j, victim)^-alpha, watts."""
    alpha = params.path_loss_exp
    return params.tx_power * sum(path_gain(pos, victim, alpha) for pos in interferers)


def ring_interference(packing: HexPacking, params: RadioParams) -> list[float]:
    """Exact interference at the packing center contributed by each ring, 1..layers."""
    alpha = params.path_loss_exp
    totals = [0.0] * packing.layers
    for pos, ring in zip(packing.interferers, packing.rings):
        totals[ring - 1] += params.tx_power * path_gain(pos, packing.center, alpha)
    return totals


def layered_bound_interference(
    spacing: float, layers: int, alpha: float, tx_power: float = 1.0
) -> float:
    """Ring-by-ring bound: 6 senders at the pitch, then 6n at (sqrt(3)/2) * n * pitch.

    Dominates the exact lattice sum for the same number of layers and is in
    turn dominated by the closed-form `interference_upper_bound`, which also
    swallows the infinite tail.
    """
    if not spacing > 0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    if layers < 1:
        raise ValueError(f"layers must be at least 1, got {layers}")
    if alpha <= 2:
        raise InvalidExponentError(f"alpha must exceed 2, got {alpha}")
    total = 6.0 * tx_power * spacing**-alpha
    edge = math.sqrt(3.0) / 2.0 * spacing
    for n in range(2, layers + 1):
        total += 6.0 * n * tx_power * (edge * n) ** -alpha
    return total


def lattice_tail_bound(
    spacing: float, alpha: float, beyond_layer: int, tx_power: float = 1.0
) -> float:
    """Analytic cap on everything outside the first `beyond_layer` rings.

    6 * P * (2 / (sqrt(3) * spacing))**alpha * sum_{n > m} n^(1-alpha), with the
    remainder bounded by the integral m^(2-alpha) / (alpha - 2). Reported next
    to truncated sums instead of pretending the lattice sum was infinite.
    """
    if not spacing > 0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    if alpha <= 2:
        raise InvalidExponentError(f"alpha must exceed 2, got {alpha}")
    if beyond_layer < 1:
        raise ValueError(f"beyond_layer must be at least 1, got {beyond_layer}")
    remainder = beyond_layer ** (2.0 - alpha) / (alpha - 2.0)
    return 6.0 * tx_power * (2.0 / (math.sqrt(3.0) * spacing)) ** alpha * remainder


def bound_slack(gamma0: float, alpha: float, layers: int) -> float:
    """Exact lattice interference as a fraction of the closed-form budget.

    Builds the packing at pitch K = packing_constant_k(gamma0, alpha) in units
    of d_max = 1 and P = 1, sums it exactly, and divides by the budget
    1/gamma0. Values stay below 1: the per-ring distance bound and the tail
    integral are both conservative.
    """
    k = packing_constant_k(gamma0, alpha)
    packing = build_hex_packing(k, layers)
    params = RadioParams(tx_power=1.0, sinr_threshold=gamma0, path_loss_exp=alpha)
    exact = cumulative_interference(packing.center, packing.interferers, params)
    return exact * gamma0


def packing_to_json_dict(packing: HexPacking) -> dict:
    """JSON layout dump: positions plus ring index, ready for plotting."""
    return {
        "spacing": packing.spacing,
        "layers": packing.layers,
        "center": [packing.center.x, packing.center.y],
        "points": [
            {"x": pos.x, "y": pos.y, "ring": ring}
            for pos, ring in zip(packing.interferers, packing.rings)
        ],
    }
