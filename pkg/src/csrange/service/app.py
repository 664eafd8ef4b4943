"""HTTP facade over the core package.

Run with: uvicorn csrange.service.app:app

Every endpoint is a stateless wrapper around one library entry point; domain
validation errors surface as 422 responses with the library's message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import analytics, harness, packing
from ..carrier_sensing import CSConfig, is_safe_csrange
from ..errors import CSRangeError
from ..harness import TopologyConfig
from . import schemas

app = FastAPI(
    title="csrange",
    version="0.1.0",
    description="Safe carrier-sensing range analysis under cumulative interference.",
)


@app.exception_handler(CSRangeError)
async def domain_error_handler(request: Request, exc: CSRangeError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}


@app.post("/ranges", response_model=schemas.RangesResponse)
async def ranges(req: schemas.RangesRequest) -> schemas.RangesResponse:
    report = analytics.range_report(req.gamma0, req.alpha)
    return schemas.RangesResponse(
        gamma0=req.gamma0,
        alpha=req.alpha,
        d_max=req.d_max,
        k_constant=report.k_constant,
        pairwise_range=report.pairwise_range_over_dmax * req.d_max,
        physical_range=report.physical_range_over_dmax * req.d_max,
        ratio=report.ratio,
        ratio_limit=analytics.ratio_limit(req.alpha),
    )


@app.post("/ratio-curve", response_model=schemas.RatioCurveResponse)
async def ratio_curve(req: schemas.RatioCurveRequest) -> schemas.RatioCurveResponse:
    grid = analytics.log_spaced(req.gamma0_min, req.gamma0_max, req.points)
    points = analytics.ratio_curve(req.alphas, grid)
    return schemas.RatioCurveResponse(
        points=[
            schemas.RatioCurvePointModel(
                alpha=p.alpha, gamma0=p.gamma0, ratio=p.ratio, limit=p.limit
            )
            for p in points
        ]
    )


@app.post("/pack", response_model=schemas.PackResponse)
async def pack(req: schemas.PackRequest) -> schemas.PackResponse:
    hex_packing = packing.build_hex_packing(req.spacing, req.layers)
    census = packing.layer_census(hex_packing)
    return schemas.PackResponse(
        spacing=hex_packing.spacing,
        layers=hex_packing.layers,
        center=(hex_packing.center.x, hex_packing.center.y),
        points=[
            schemas.PackPointModel(x=pos.x, y=pos.y, ring=ring)
            for pos, ring in zip(hex_packing.interferers, hex_packing.rings)
        ],
        census=[
            schemas.RingCensusModel(
                ring=c.ring, count=c.count, min_center_distance=c.min_center_distance
            )
            for c in census
        ],
    )


@app.post("/check-safe", response_model=schemas.CheckSafeResponse)
async def check_safe(req: schemas.CheckSafeRequest) -> schemas.CheckSafeResponse:
    verdict = is_safe_csrange(
        req.topology.to_linkset(), CSConfig(req.cs_range), req.radio.to_params()
    )
    witness = None
    if verdict.witness is not None:
        witness = schemas.WitnessModel(
            concurrent_set=list(verdict.witness.concurrent_set),
            link_index=verdict.witness.link_index,
            frame=verdict.witness.frame.value,
            sir=verdict.witness.sir,
        )
    return schemas.CheckSafeResponse(safe=verdict.safe, witness=witness)


@app.post("/sweep", response_model=schemas.SweepResponse)
async def sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
    cfg = TopologyConfig(
        area_side=req.area_side,
        num_links=req.num_links,
        max_link_len=req.max_link_len,
        rng_seed=req.seed,
    )
    result = harness.theorem1_sweep(
        cfg,
        req.radio.to_params(),
        req.multipliers,
        trials=req.trials,
        permutations_per_trial=req.permutations_per_trial,
    )
    return schemas.SweepResponse(
        rows=[
            schemas.SweepRowModel(
                cs_range_over_dmax=r.cs_range_over_dmax,
                trials=r.trials,
                admitted_sets=r.admitted_sets,
                violating_sets=r.violating_sets,
                violation_rate=r.violation_rate,
                violating_links=r.violating_links,
            )
            for r in result.rows
        ]
    )


@app.post("/counterexample", response_model=schemas.CounterexampleResponse)
async def counterexample(req: schemas.CounterexampleRequest) -> schemas.CounterexampleResponse:
    params = req.radio.to_params()
    rings = req.rings
    if rings is None:
        rings = harness.minimal_violating_rings(
            params, d_max=req.d_max, interferer_len_frac=req.interferer_len_frac
        )
    ce = harness.build_pairwise_counterexample(
        params, rings=rings, d_max=req.d_max, interferer_len_frac=req.interferer_len_frac
    )
    report = harness.counterexample_report(ce, params)
    return schemas.CounterexampleResponse(**report)


@app.post("/bisect", response_model=schemas.BisectResponse)
async def bisect(req: schemas.BisectRequest) -> schemas.BisectResponse:
    ls = req.topology.to_linkset()
    threshold = harness.bisect_empirical_safe_range(
        ls, req.radio.to_params(), req.lo, req.hi, tol=req.tol
    )
    return schemas.BisectResponse(
        empirical_safe_range=threshold, over_dmax=threshold / ls.max_link_length()
    )
