"""FastAPI service exposing the phi3 computations over HTTP.

Error contract (mirrored by the CLI's exit codes): graph parse errors
return 400, validation violations 422 and a cross-check disagreement 500,
each with a machine-readable ``code`` in the detail object.
"""

from __future__ import annotations

from math import comb

from fastapi import FastAPI, HTTPException

from ..census import census, phi3_census
from ..families import FamilySpec, generate, phi3_closed_form
from ..graphs import GainGraph, GraphParseError, parse_graph, serialize_graph, validate
from ..lift import (
    build_arrangement,
    dim_i2_3,
    dim_i2_3_census_formula,
    dim_span_f3,
    f3_generators,
    three_circuits,
    w2_census_formula,
    w2_geometric,
)
from .schemas import (
    CensusCounts,
    CensusResponse,
    DiagResponse,
    GenerateRequest,
    GenerateResponse,
    GraphSource,
    PhiRequest,
    PhiResponse,
    VerifyResponse,
    ViolationInfo,
)

app = FastAPI(
    title="falklift",
    description="Exact Falk invariant phi3 of complete-lift arrangements "
    "of additive rational gain graphs.",
    version="0.1.0",
)


def _load_graph(source: GraphSource) -> GainGraph:
    if source.graph_text is not None:
        try:
            return parse_graph(source.graph_text)
        except GraphParseError as exc:
            raise HTTPException(
                status_code=400,
                detail={"code": "parse_error", "line": exc.line, "message": str(exc)},
            ) from exc
    return generate(FamilySpec(source.family, source.ell))


def _load_valid_graph(source: GraphSource) -> GainGraph:
    g = _load_graph(source)
    violations = validate(g)
    if violations:
        raise HTTPException(
            status_code=422,
            detail={
                "code": "validation_error",
                "message": "gain graph violates the standing hypotheses",
                "violations": [
                    ViolationInfo(
                        kind=v.kind, edge_ids=list(v.edge_ids), message=v.message
                    ).model_dump()
                    for v in violations
                ],
            },
        )
    return g


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/phi3", response_model=PhiResponse, response_model_exclude_none=True)
def phi3(req: PhiRequest) -> PhiResponse:
    g = _load_valid_graph(req)
    out = PhiResponse(n_edges=g.edge_count, m_hyperplanes=g.edge_count + 1)
    need_rank = req.method in ("falk", "kernel", "all")
    if req.method in ("census", "all"):
        out.phi3_census = phi3_census(census(g))
    if need_rank:
        a = build_arrangement(g)
        circuits = three_circuits(g)
        dim_ideal = dim_i2_3(a, circuits)
        m = a.hyperplane_count
        if req.method in ("falk", "all"):
            out.phi3_falk = (
                2 * comb(m + 1, 3) - m * w2_geometric(a) + comb(m, 3) - dim_ideal
            )
        if req.method in ("kernel", "all"):
            out.phi3_kernel = m * len(circuits) - dim_ideal
    if req.method == "all":
        out.agreement = out.phi3_census == out.phi3_falk == out.phi3_kernel
        if not out.agreement:
            raise HTTPException(
                status_code=500,
                detail={
                    "code": "disagreement",
                    "message": "phi3 paths disagree: "
                    f"census={out.phi3_census} falk={out.phi3_falk} "
                    f"kernel={out.phi3_kernel}",
                    "values": out.model_dump(),
                },
            )
    return out


@app.post("/census", response_model=CensusResponse)
def census_endpoint(req: GraphSource) -> CensusResponse:
    g = _load_valid_graph(req)
    cen = census(g)
    a = build_arrangement(g)
    return CensusResponse(
        n_edges=g.edge_count,
        m_hyperplanes=a.hyperplane_count,
        counts=CensusCounts(**dict(zip(("k3", "k4", "d2", "g_circ", "s3"), cen.as_tuple()))),
        w2=w2_geometric(a),
        circuits=three_circuits(g),
    )


@app.post("/diag", response_model=DiagResponse)
def diag(req: GraphSource) -> DiagResponse:
    g = _load_valid_graph(req)
    a = build_arrangement(g)
    circuits = three_circuits(g)
    gens = f3_generators(a, circuits)
    return DiagResponse(
        n_edges=g.edge_count,
        m_hyperplanes=a.hyperplane_count,
        f3_count=len(gens),
        dim_span_f3=dim_span_f3(a, circuits),
        dim_i2_3=dim_i2_3(a, circuits),
    )


@app.post("/gen", response_model=GenerateResponse)
def gen(req: GenerateRequest) -> GenerateResponse:
    spec = FamilySpec(req.family, req.ell)
    return GenerateResponse(
        family=req.family,
        ell=req.ell,
        phi3_closed_form=phi3_closed_form(spec),
        graph_text=serialize_graph(generate(spec)),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: GraphSource) -> VerifyResponse:
    g = _load_valid_graph(req)
    cen = census(g)
    a = build_arrangement(g)
    circuits = three_circuits(g)
    dim_ideal = dim_i2_3(a, circuits)
    w2 = w2_geometric(a)
    m = a.hyperplane_count
    p_census = phi3_census(cen)
    p_falk = 2 * comb(m + 1, 3) - m * w2 + comb(m, 3) - dim_ideal
    p_kernel = m * len(circuits) - dim_ideal
    w2_pred = w2_census_formula(g.edge_count, cen)
    dim_pred = dim_i2_3_census_formula(g.edge_count, cen)
    identities = w2 == w2_pred and dim_ideal == dim_pred
    agreement = p_census == p_falk == p_kernel
    return VerifyResponse(
        n_edges=g.edge_count,
        m_hyperplanes=m,
        phi3_census=p_census,
        phi3_falk=p_falk,
        phi3_kernel=p_kernel,
        agreement=agreement,
        w2_geometric=w2,
        w2_formula=w2_pred,
        dim_i2_3=dim_ideal,
        dim_i2_3_formula=dim_pred,
        identities_hold=identities,
    )
