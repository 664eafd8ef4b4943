"""Closed-form sensing-range sizing under the cumulative and pairwise models.

Everything here is a function of the SINR threshold gamma0 and the path-loss
exponent alpha, scaled by the longest link length d_max.

The cumulative (physical) model sizes the range as (K + 2) * d_max with

    K = (6 * gamma0 * (1 + (2/sqrt(3))**alpha / (alpha - 2)))**(1/alpha)

K is the normalized sender separation at which the worst hexagonal packing of
interferers (6n of them in ring n, none closer than (sqrt(3)/2) * n * K * d_max)
contributes at most signal/gamma0 of cumulative interference; the extra
2 * d_max converts a transmitter-separation guarantee into a sender-to-victim
one via the triangle inequality. The pairwise model, which only ever accounts
for the single strongest interferer, gets away with (2 + gamma0**(1/alpha)) * d_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidExponentError, InvalidThresholdError

# Terms per numpy chunk when accumulating long partial sums.
_CHUNK = 1 << 20


def _check_threshold(gamma0: float) -> None:
    if not gamma0 > 0:
        raise InvalidThresholdError(f"gamma0 must be positive, got {gamma0}")


def _check_exponent(alpha: float) -> None:
    if not alpha > 2:
        raise InvalidExponentError(
            f"alpha must exceed 2 (the tail sum 1/(alpha-2) diverges otherwise), got {alpha}"
        )


def _check_dmax(d_max: float) -> None:
    if not d_max > 0:
        raise ValueError(f"d_max must be positive, got {d_max}")


def packing_constant_k(gamma0: float, alpha: float) -> float:
    """Normalized minimum sender separation that tames cumulative interference.

    With every interfering sender at least K * d_max away from the victim
    endpoint and from each other, the hexagonal worst-case packing sums to at
    most P * d_max^-alpha / gamma0, i.e. the weakest intended signal still
    clears gamma0.
    """
    _check_threshold(gamma0)
    _check_exponent(alpha)
    tail = (2.0 / math.sqrt(3.0)) ** alpha / (alpha - 2.0)
    return (6.0 * gamma0 * (1.0 + tail)) ** (1.0 / alpha)


def safe_csrange_physical(gamma0: float, alpha: float, d_max: float = 1.0) -> float:
    """Sensing range (K + 2) * d_max that is safe under cumulative interference."""
    _check_dmax(d_max)
    return (packing_constant_k(gamma0, alpha) + 2.0) * d_max


def safe_csrange_pairwise(gamma0: float, alpha: float, d_max: float = 1.0) -> float:
    """Sensing range (2 + gamma0^(1/alpha)) * d_max sized against a single interferer."""
    _check_threshold(gamma0)
    _check_exponent(alpha)
    _check_dmax(d_max)
    return (2.0 + gamma0 ** (1.0 / alpha)) * d_max


def range_ratio(gamma0: float, alpha: float) -> float:
    """How much farther the cumulative model must sense: physical / pairwise."""
    return safe_csrange_physical(gamma0, alpha) / safe_csrange_pairwise(gamma0, alpha)


def ratio_limit(alpha: float) -> float:
    """Limit of range_ratio as gamma0 grows without bound.

    The additive 2 * d_max terms wash out and the ratio tends to
    (6 * (1 + (2/sqrt(3))**alpha / (alpha - 2)))**(1/alpha).
    """
    _check_exponent(alpha)
    tail = (2.0 / math.sqrt(3.0)) ** alpha / (alpha - 2.0)
    return (6.0 * (1.0 + tail)) ** (1.0 / alpha)


def interference_upper_bound(
    k: float, alpha: float, tx_power: float = 1.0, d_max: float = 1.0
) -> float:
    """Closed-form cap on cumulative interference from hexagonally packed senders.

        6 * k^-alpha * (1 + (2/sqrt(3))**alpha / (alpha - 2)) * P * d_max^-alpha

    Ring n of the packing holds 6n senders no closer than
    (sqrt(3)/2) * n * k * d_max; summing rings and bounding the tail
    sum_{n>=2} n^(1-alpha) by 1/(alpha - 2) gives the expression above. At
    k = packing_constant_k(gamma0, alpha) it collapses to P * d_max^-alpha / gamma0.
    """
    if not k > 0:
        raise ValueError(f"k must be positive, got {k}")
    _check_exponent(alpha)
    if not tx_power > 0:
        raise ValueError(f"tx_power must be positive, got {tx_power}")
    _check_dmax(d_max)
    tail = (2.0 / math.sqrt(3.0)) ** alpha / (alpha - 2.0)
    return 6.0 * k**-alpha * (1.0 + tail) * tx_power * d_max**-alpha


def zeta_tail_partial_sum(alpha: float, m: int) -> float:
    """Partial sum sum_{n=2}^{m} n^(1-alpha).

    Monotone in m and bounded by 1/(alpha - 2) for every m; this is the tail
    that makes the ring-by-ring interference series converge. Terms are
    accumulated smallest-first for accuracy.
    """
    _check_exponent(alpha)
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    total = 0.0
    hi = m
    while hi >= 2:
        lo = max(2, hi - _CHUNK + 1)
        block = np.arange(hi, lo - 1, -1, dtype=np.float64) ** (1.0 - alpha)
        total += float(block.sum())
        hi = lo - 1
    return total


def log_spaced(lo: float, hi: float, count: int) -> list[float]:
    """Logarithmically spaced grid, endpoints included."""
    if not lo > 0 or not hi >= lo:
        raise ValueError(f"need 0 < lo <= hi, got lo={lo}, hi={hi}")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    if count == 1:
        return [lo]
    return [float(v) for v in np.geomspace(lo, hi, count)]


@dataclass(frozen=True)
class RangeReport:
    """Both safe ranges for one (gamma0, alpha), normalized by d_max."""

    gamma0: float
    alpha: float
    k_constant: float
    pairwise_range_over_dmax: float
    physical_range_over_dmax: float
    ratio: float


def range_report(gamma0: float, alpha: float) -> RangeReport:
    k = packing_constant_k(gamma0, alpha)
    pairwise = safe_csrange_pairwise(gamma0, alpha)
    physical = k + 2.0
    return RangeReport(
        gamma0=gamma0,
        alpha=alpha,
        k_constant=k,
        pairwise_range_over_dmax=pairwise,
        physical_range_over_dmax=physical,
        ratio=physical / pairwise,
    )


@dataclass(frozen=True)
class RatioCurvePoint:
    alpha: float
    gamma0: float
    ratio: float
    limit: float


def ratio_curve(
    alpha_list: Sequence[float], gamma0_grid: Sequence[float]
) -> list[RatioCurvePoint]:
    """range_ratio sampled on a grid, one curve per alpha, with its limit attached."""
    points = []
    for alpha in alpha_list:
        limit = ratio_limit(alpha)
        for gamma0 in gamma0_grid:
            points.append(
                RatioCurvePoint(
                    alpha=alpha, gamma0=gamma0, ratio=range_ratio(gamma0, alpha), limit=limit
                )
            )
    return points


def format_plain(x: float, sig: int = 10) -> str:
    """Plain positional decimal (never scientific), `sig` significant digits."""
    if math.isnan(x) or math.isinf(x):
        return str(x)
    s = f"{x:.{sig}g}"
    if "e" in s or "E" in s:
        s = format(Decimal(s), "f")
    return s


def ratio_curve_csv(points: Iterable[RatioCurvePoint]) -> str:
    """CSV rendering of a ratio curve; header `alpha,gamma0,ratio,limit`."""
    lines = ["alpha,gamma0,ratio,limit"]
    for p in points:
        lines.append(
            ",".join(
                (
                    format_plain(p.alpha),
                    format_plain(p.gamma0),
                    format_plain(p.ratio),
                    format_plain(p.limit),
                )
            )
        )
    return "\n".join(lines) + "\n"
