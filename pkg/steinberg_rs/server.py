from __future__ import annotations

"""FastAPI server exposing the library over HTTP.

Endpoints:
- GET  /health
- GET  /schema
- POST /rs, /phi, /triple, /xi-k, /xi-s     body {"word": [...]}
- POST /untriple                            body {"T1", "T2", "nu"}
- POST /triangle                            body {"T1", "T2", "ells", "ms", "n"}
- POST /canon-matrix, /canon-grass          body {"matrix": [[...]]}
- GET  /orbits?n=N, /fibers?n=N

Responses use the same JSON encodings as `--format json` on the command line.
"""

import logging
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .config import SteinbergConfig, load_config
from .errors import DomainError, SteinbergError
from .fields import as_field_matrix
from .insertion import rs_pair
from .models import (
    FiberEntry,
    FibersResponse,
    HealthResponse,
    MatrixRequest,
    OrbitRepModel,
    OrbitsResponse,
    PartialPermutationModel,
    RSPairModel,
    SkewTableauModel,
    TriangleRequest,
    TripleModel,
    WordRequest,
    shape_pair_json,
    signed_json,
)
from .orbits import canonicalize_grassmann_point, enumerate_orbit_reps, orbit_class_count
from .partial_perm import canonicalize_matrix, decompose, partial_permutation_count
from .partitions import partitions_of
from .steinberg import fiber_count_formula, phi, phi_fibers, triangle, triple, triple_inverse, xi_k_generic, xi_s_generic
from .tableau import Tableau

logger = logging.getLogger(__name__)

_REQUEST_MODELS = (WordRequest, TripleModel, TriangleRequest, MatrixRequest)
_RESPONSE_MODELS = (RSPairModel, PartialPermutationModel, SkewTableauModel, OrbitsResponse, FibersResponse)


def create_app(config: Optional[SteinbergConfig] = None) -> FastAPI:
    """Create the FastAPI app; `config` defaults to `load_config()`."""

    config = config or load_config()

    app = FastAPI(
        title="Steinberg RS",
        version="0.1.0",
        description="Robinson-Schensted and Steinberg maps on partial permutations.",
    )

    @app.exception_handler(DomainError)
    async def domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(SteinbergError)
    async def internal_error(request: Request, exc: SteinbergError) -> JSONResponse:
        logger.exception("request to %s failed", request.url.path)
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="healthy")

    @app.get("/schema")
    async def schema() -> Dict[str, Any]:
        return {
            "requests": {m.__name__: m.model_json_schema() for m in _REQUEST_MODELS},
            "responses": {m.__name__: m.model_json_schema() for m in _RESPONSE_MODELS},
        }

    @app.post("/rs", response_model=RSPairModel)
    async def rs(request: WordRequest) -> RSPairModel:
        p, q = rs_pair(decompose(request.to_domain()).sigma)
        return RSPairModel(P=p.as_lists(), Q=q.as_lists())

    @app.post("/phi")
    async def phi_endpoint(request: WordRequest) -> List[List[int]]:
        return shape_pair_json(phi(request.to_domain()))

    @app.post("/triple", response_model=TripleModel)
    async def triple_endpoint(request: WordRequest) -> TripleModel:
        return TripleModel.from_domain(triple(request.to_domain()))

    @app.post("/untriple", response_model=PartialPermutationModel)
    async def untriple(request: TripleModel) -> PartialPermutationModel:
        return PartialPermutationModel.from_domain(triple_inverse(request.to_domain()))

    @app.post("/xi-k")
    async def xi_k(request: WordRequest) -> List[List[int]]:
        return shape_pair_json(xi_k_generic(request.to_domain()))

    @app.post("/xi-s")
    async def xi_s(request: WordRequest) -> List[str]:
        return signed_json(xi_s_generic(request.to_domain()))

    @app.post("/triangle", response_model=SkewTableauModel)
    async def triangle_endpoint(request: TriangleRequest) -> SkewTableauModel:
        skew = triangle(Tableau(request.T1), Tableau(request.T2), request.ells, request.ms, request.n)
        return SkewTableauModel.from_domain(skew)

    @app.post("/canon-matrix", response_model=PartialPermutationModel)
    async def canon_matrix(request: MatrixRequest) -> PartialPermutationModel:
        tau = canonicalize_matrix(as_field_matrix(request.matrix, config.prime), config.prime)
        return PartialPermutationModel.from_domain(tau)

    @app.post("/canon-grass", response_model=OrbitRepModel)
    async def canon_grass(request: MatrixRequest) -> OrbitRepModel:
        omega = canonicalize_grassmann_point(as_field_matrix(request.matrix, config.prime), config.prime)
        return OrbitRepModel.from_domain(omega)

    @app.get("/orbits", response_model=OrbitsResponse)
    async def orbits(n: int = Query(ge=0)) -> OrbitsResponse:
        reps = enumerate_orbit_reps(n, max_n=config.max_orbit_n)
        return OrbitsResponse(
            n=n,
            count=len(reps),
            closed_count=orbit_class_count(n),
            classes=[OrbitRepModel.from_domain(r) for r in reps],
        )

    @app.get("/fibers", response_model=FibersResponse)
    async def fibers(n: int = Query(ge=0)) -> FibersResponse:
        counts = phi_fibers(n, max_n=config.max_partial_perm_n)
        entries = [
            FiberEntry(
                shapes=shape_pair_json((lam, mu)),
                count=counts.get((lam, mu), 0),
                formula=fiber_count_formula(lam, mu, max_size=config.max_tableau_size),
            )
            for lam in partitions_of(n)
            for mu in partitions_of(n)
        ]
        return FibersResponse(n=n, total=partial_permutation_count(n), fibers=entries)

    return app


app = create_app()
