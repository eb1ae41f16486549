"""FastAPI service wrapping the core operators.

All endpoints are pure functions of their payloads; domain errors map to
HTTP 422 with ``{"error": <code>, "message": ...}``.
"""

from __future__ import annotations

import dataclasses

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import corpus as corpus_mod
from ..decomposition import decompose, reconstruct
from ..errors import FracdecompError
from ..operators import apply_grunwald, apply_spectral
from ..sobolev import decay_exponent, sobolev_norm, sobolev_seminorm
from ..verify import VerifyConfig, run as run_verify
from .schemas import (
    ApplyRequest,
    CorpusEntry,
    CorpusListResponse,
    CorpusSampleRequest,
    DecayRequest,
    DecayResponse,
    DecomposeRequest,
    DecomposeResponse,
    NormsRequest,
    NormsResponse,
    NormsRow,
    ReconstructRequest,
    SignalModel,
    SignalResponse,
    VerifyRequest,
    to_side,
)


def create_app() -> FastAPI:
    app = FastAPI(title="fracdecomp", version="0.1.0")

    @app.exception_handler(FracdecompError)
    async def _domain_error(request: Request, exc: FracdecompError) -> JSONResponse:
        return JSONResponse(
            status_code=422, content={"error": exc.code, "message": str(exc)}
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/apply", response_model=SignalResponse)
    def apply(req: ApplyRequest) -> SignalResponse:
        signal = req.signal.to_signal()
        op = apply_spectral if req.method == "spectral" else apply_grunwald
        out = op(signal, req.order, to_side(req.side))
        return SignalResponse(signal=SignalModel.from_signal(out))

    @app.post("/decompose", response_model=DecomposeResponse)
    def decompose_endpoint(req: DecomposeRequest) -> DecomposeResponse:
        result = decompose(req.signal.to_signal(), req.variant.to_variant())
        return DecomposeResponse(
            u=SignalModel.from_signal(result.u),
            residual_l2=result.residual_l2,
            dc_defect=result.dc_defect,
            symbol_min_modulus=result.symbol_min_modulus,
        )

    @app.post("/reconstruct", response_model=SignalResponse)
    def reconstruct_endpoint(req: ReconstructRequest) -> SignalResponse:
        out = reconstruct(req.u.to_signal(), req.variant.to_variant())
        return SignalResponse(signal=SignalModel.from_signal(out))

    @app.post("/norms", response_model=NormsResponse)
    def norms(req: NormsRequest) -> NormsResponse:
        signal = req.signal.to_signal()
        rows = [
            NormsRow(
                mu=mu,
                seminorm=sobolev_seminorm(signal, mu),
                norm=sobolev_norm(signal, mu),
            )
            for mu in req.orders
        ]
        return NormsResponse(rows=rows)

    @app.post("/decay", response_model=DecayResponse)
    def decay(req: DecayRequest) -> DecayResponse:
        signal = req.signal.to_signal()
        nyquist = signal.grid.nyquist
        xi_lo = req.xi_lo if req.xi_lo is not None else 0.1 * nyquist
        xi_hi = req.xi_hi if req.xi_hi is not None else 0.5 * nyquist
        fit = decay_exponent(signal, xi_lo, xi_hi)
        return DecayResponse(
            exponent=fit.exponent,
            xi_lo=fit.xi_lo,
            xi_hi=fit.xi_hi,
            rms_fit_error=fit.rms_fit_error,
            superpolynomial=fit.is_superpolynomial,
        )

    @app.get("/corpus", response_model=CorpusListResponse)
    def corpus_list() -> CorpusListResponse:
        entries = [
            CorpusEntry(name=name, params=corpus_mod.descriptor_params(d))
            for name, d in sorted(corpus_mod.DESCRIPTORS.items())
        ]
        return CorpusListResponse(entries=entries)

    @app.post("/corpus/sample", response_model=SignalResponse)
    def corpus_sample(req: CorpusSampleRequest) -> SignalResponse:
        base = corpus_mod.DESCRIPTORS.get(req.name)
        if base is None:
            raise FracdecompError(
                f"unknown corpus descriptor {req.name!r}; see GET /corpus"
            )
        try:
            descriptor = dataclasses.replace(base, **req.params)
        except TypeError as exc:
            raise FracdecompError(f"bad descriptor parameters: {exc}") from exc
        from ..grids import UniformGrid

        grid = UniformGrid.from_window(req.x_min, req.x_max, req.n)
        return SignalResponse(
            signal=SignalModel.from_signal(corpus_mod.sample(descriptor, grid))
        )

    @app.post("/verify")
    def verify(req: VerifyRequest) -> dict:
        cfg = VerifyConfig(
            x_min=req.x_min,
            x_max=req.x_max,
            n=req.n,
            seed=req.seed,
            s_values=tuple(req.s_values) if req.s_values else None,
            tolerances=dict(req.tolerances),
            inject_suite=req.inject_suite,
        )
        return run_verify(cfg, req.suites).to_dict()

    return app


app = create_app()
