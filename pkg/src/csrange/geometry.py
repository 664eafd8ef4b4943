"""Plane geometry for directed radio links.

Positions are points in the 2-D plane, in meters. A directed link couples a
transmitter position to a receiver position and its length is their Euclidean
distance. Path gain between two positions follows the geometric d^-alpha
model, which is what makes cumulative interference sums tractable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import EmptyLinkSetError, InvalidExponentError, ZeroDistanceError

# Absolute tolerance, in meters, for distance comparisons where equality matters.
DISTANCE_TOL = 1e-9


@dataclass(frozen=True)
class NodePosition:
    """A point in the plane, meters."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x!r}, {self.y!r})")


def distance(a: NodePosition, b: NodePosition) -> float:
    """Euclidean distance between two positions."""
    return math.hypot(a.x - b.x, a.y - b.y)


def path_gain(a: NodePosition, b: NodePosition, alpha: float) -> float:
    """Geometric path gain d(a, b)^-alpha.

    Singular at zero separation, and only meaningful for alpha > 2: below
    that the gain decays so slowly that plane-wide interference sums diverge.
    """
    if alpha <= 2:
        raise InvalidExponentError(
            f"path-loss exponent must exceed 2 (interference sums diverge otherwise), got {alpha}"
        )
    d = distance(a, b)
    if d == 0.0:
        raise ZeroDistanceError("positions coincide; d^-alpha gain is singular at zero distance")
    return d**-alpha


@dataclass(frozen=True)
class DirectedLink:
    """One transmitter-receiver pair. Zero-length links are rejected."""

    tx: NodePosition
    rx: NodePosition

    def __post_init__(self) -> None:
        if distance(self.tx, self.rx) == 0.0:
            raise ZeroDistanceError("link endpoints coincide; signal gain would be singular")

    @property
    def length(self) -> float:
        return distance(self.tx, self.rx)


@dataclass(frozen=True)
class LinkSet:
    """An ordered, non-empty collection of directed links.

    Order is meaningful: links are referred to by index everywhere else in
    the package (concurrent sets, admission orders, witnesses).
    """

    links: tuple[DirectedLink, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "links", tuple(self.links))
        if not self.links:
            raise EmptyLinkSetError("a link set needs at least one link")

    def __len__(self) -> int:
        return len(self.links)

    def __getitem__(self, index: int) -> DirectedLink:
        return self.links[index]

    def __iter__(self) -> Iterator[DirectedLink]:
        return iter(self.links)

    def max_link_length(self) -> float:
        """Length of the longest link; the unit every sensing range scales with."""
        return max(link.length for link in self.links)


class CrossDistances(NamedTuple):
    """The four endpoint separations between two links i and j."""

    tx_tx: float  # d(tx_i, tx_j)
    tx_rx: float  # d(tx_i, rx_j)
    rx_tx: float  # d(rx_i, tx_j)
    rx_rx: float  # d(rx_i, rx_j)


def cross_distances(li: DirectedLink, lj: DirectedLink) -> CrossDistances:
    """All four transmitter/receiver separations between two links.

    If both links are no longer than d_max and their transmitters are at
    least (k + 2) * d_max apart, the triangle inequality puts every one of
    these four distances at or above k * d_max; that is the geometric step
    every safe-range argument in this package rests on.
    """
    return CrossDistances(
        tx_tx=distance(li.tx, lj.tx),
        tx_rx=distance(li.tx, lj.rx),
        rx_tx=distance(li.rx, lj.tx),
        rx_rx=distance(li.rx, lj.rx),
    )


def linkset_to_json_dict(ls: LinkSet) -> dict:
    """Topology wire format: {"links": [{"tx": [x, y], "rx": [x, y]}, ...]}."""
    return {
        "links": [
            {"tx": [link.tx.x, link.tx.y], "rx": [link.rx.x, link.rx.y]} for link in ls
        ]
    }


def linkset_from_json_dict(doc: dict) -> LinkSet:
    """Parse the topology wire format; raises ValueError on malformed input."""
    if not isinstance(doc, dict) or "links" not in doc:
        raise ValueError('topology JSON must be an object with a "links" array')
    raw = doc["links"]
    if not isinstance(raw, list):
        raise ValueError('"links" must be an array')
    links = []
    for entry in raw:
        try:
            tx = entry["tx"]
            rx = entry["rx"]
            link = DirectedLink(
                tx=NodePosition(float(tx[0]), float(tx[1])),
                rx=NodePosition(float(rx[0]), float(rx[1])),
            )
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed link entry {entry!r}") from exc
        links.append(link)
    return LinkSet(tuple(links))


def load_topology(path: str) -> LinkSet:
    with open(path, encoding="utf-8") as fh:
        return linkset_from_json_dict(json.load(fh))


def save_topology(ls: LinkSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(linkset_to_json_dict(ls), fh, indent=2)
        fh.write("\n")
