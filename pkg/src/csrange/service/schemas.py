"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..geometry import DirectedLink, LinkSet, NodePosition
from ..interference import RadioParams


class RadioModel(BaseModel):
    tx_power: float = Field(1.0, gt=0)
    sinr_threshold: float = Field(..., gt=0)
    path_loss_exp: float = Field(..., gt=2)
    noise_power: float = Field(0.0, ge=0)

    def to_params(self) -> RadioParams:
        return RadioParams(
            tx_power=self.tx_power,
            sinr_threshold=self.sinr_threshold,
            path_loss_exp=self.path_loss_exp,
            noise_power=self.noise_power,
        )


class LinkModel(BaseModel):
    tx: tuple[float, float]
    rx: tuple[float, float]


class TopologyModel(BaseModel):
    links: list[LinkModel] = Field(..., min_length=1)

    def to_linkset(self) -> LinkSet:
        return LinkSet(
            tuple(
                DirectedLink(NodePosition(*link.tx), NodePosition(*link.rx))
                for link in self.links
            )
        )


class RangesRequest(BaseModel):
    gamma0: float = Field(..., gt=0)
    alpha: float = Field(..., gt=2)
    d_max: float = Field(1.0, gt=0)


class RangesResponse(BaseModel):
    gamma0: float
    alpha: float
    d_max: float
    k_constant: float
    pairwise_range: float
    physical_range: float
    ratio: float
    ratio_limit: float


class RatioCurveRequest(BaseModel):
    alphas: list[float] = Field(..., min_length=1)
    gamma0_min: float = Field(..., gt=0)
    gamma0_max: float = Field(..., gt=0)
    points: int = Field(..., ge=1, le=100_000)


class RatioCurvePointModel(BaseModel):
    alpha: float
    gamma0: float
    ratio: float
    limit: float


class RatioCurveResponse(BaseModel):
    points: list[RatioCurvePointModel]


class PackRequest(BaseModel):
    spacing: float = Field(..., gt=0)
    layers: int = Field(..., ge=1, le=200)


class PackPointModel(BaseModel):
    x: float
    y: float
    ring: int


class RingCensusModel(BaseModel):
    ring: int
    count: int
    min_center_distance: float


class PackResponse(BaseModel):
    spacing: float
    layers: int
    center: tuple[float, float]
    points: list[PackPointModel]
    census: list[RingCensusModel]


class CheckSafeRequest(BaseModel):
    topology: TopologyModel
    cs_range: float = Field(..., gt=0)
    radio: RadioModel


class WitnessModel(BaseModel):
    concurrent_set: list[int]
    link_index: int
    frame: str
    sir: float


class CheckSafeResponse(BaseModel):
    safe: bool
    witness: WitnessModel | None = None


class SweepRequest(BaseModel):
    seed: int
    area_side: float = Field(200.0, gt=0)
    num_links: int = Field(20, ge=1, le=200)
    max_link_len: float = Field(10.0, gt=0)
    multipliers: list[float] = Field(..., min_length=1)
    trials: int = Field(100, ge=1, le=20_000)
    permutations_per_trial: int = Field(1, ge=1, le=100)
    radio: RadioModel


class SweepRowModel(BaseModel):
    cs_range_over_dmax: float
    trials: int
    admitted_sets: int
    violating_sets: int
    violation_rate: float
    violating_links: int


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]


class CounterexampleRequest(BaseModel):
    radio: RadioModel
    rings: int | None = Field(None, ge=1, le=16)
    d_max: float = Field(1.0, gt=0)
    interferer_len_frac: float = Field(0.999, gt=0, le=1)


class ContributionModel(BaseModel):
    link_index: int
    sender_endpoint: str
    sender: tuple[float, float]
    distance: float
    power_watts: float
    share: float


class CounterexampleResponse(BaseModel):
    topology: TopologyModel
    cs_range: float
    victim_index: int
    rings: int
    sinr_threshold: float
    data_sir: float
    ack_sir: float
    data_interference_watts: float
    ack_interference_watts: float
    data_contributions: list[ContributionModel]
    ack_contributions: list[ContributionModel]


class BisectRequest(BaseModel):
    topology: TopologyModel
    radio: RadioModel
    lo: float = Field(..., gt=0)
    hi: float = Field(..., gt=0)
    tol: float | None = Field(None, gt=0)


class BisectResponse(BaseModel):
    empirical_safe_range: float
    over_dmax: float
