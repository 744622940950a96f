"""HTTP front end: one POST endpoint per pipeline stage.

Every endpoint takes an expression plus the ambient variable count, runs the
corresponding library operation, and returns both a structured payload and
ready-to-print text lines.  Domain errors come back as HTTP 400 with a stable
machine-readable category; malformed requests get FastAPI's usual 422.
"""

from __future__ import annotations

import os
from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import display
from .errors import LeviformError, NonIsolatedSingularityError, PrincipalPartError
from .levi import complexify, is_levi_flat, singular_locus_is_origin
from .normalform import arnold_template, jet, homogeneous_template, quasihomogeneous_template
from .parse import parse_holomorphic, parse_real_analytic
from .serialize import (
    bipoly_to_json,
    poly_to_json,
    template_to_json,
    weights_to_json,
)
from .localbasis import (
    DEFAULT_DEGREE_CAP,
    INFINITE,
    local_algebra_basis,
    milnor_number,
)
from .weights import find_weights, newton_support, semiqh_split

app = FastAPI(
    title="leviform",
    description="Exact certification of Levi-flatness and normal-form templates",
    version="0.1.0",
)


@app.exception_handler(LeviformError)
async def _domain_error(request: Request, exc: LeviformError):
    return JSONResponse(
        status_code=400,
        content={"category": exc.category, "message": str(exc)},
    )


def _resolve_cap(requested: Optional[int]) -> int:
    if requested is not None:
        return requested
    env = os.environ.get("LEVIFORM_DEGREE_CAP")
    try:
        return int(env) if env else DEFAULT_DEGREE_CAP
    except ValueError:
        return DEFAULT_DEGREE_CAP


class ExprRequest(BaseModel):
    nvars: int = Field(ge=1)
    expr: str
    degree_cap: Optional[int] = Field(default=None, ge=1)


class JetRequest(ExprRequest):
    k: int = Field(ge=0)


class NormalFormRequest(ExprRequest):
    shape: Literal["auto", "homogeneous", "quasihomogeneous"] = "auto"


class MilnorResponse(BaseModel):
    mu: int | Literal["INFINITE"]
    pretty: list[str]


class BasisResponse(BaseModel):
    monomials: list[list[int]]
    mu: int
    pretty: list[str]


class WeightsResponse(BaseModel):
    weights: dict
    pretty: list[str]


class SplitResponse(BaseModel):
    q: dict
    tail: dict
    weights: dict
    pretty: list[str]


class PolyResponse(BaseModel):
    poly: dict
    pretty: list[str]


class BiPolyResponse(BaseModel):
    bipoly: dict
    pretty: list[str]


class LeviResponse(BaseModel):
    verdict: Literal["FLAT", "NOT_FLAT"]
    witness: Optional[dict] = None
    pretty: list[str]


class SingResponse(BaseModel):
    origin_only: bool
    pretty: list[str]


class TemplateResponse(BaseModel):
    template: dict
    pretty: list[str]


class HealthResponse(BaseModel):
    status: str


@app.get("/api/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/api/milnor", response_model=MilnorResponse)
def milnor(req: ExprRequest) -> MilnorResponse:
    f = parse_holomorphic(req.expr, req.nvars)
    mu = milnor_number(f, _resolve_cap(req.degree_cap))
    if mu is INFINITE:
        return MilnorResponse(mu="INFINITE", pretty=["INFINITE"])
    return MilnorResponse(mu=mu, pretty=[str(mu)])


@app.post("/api/basis", response_model=BasisResponse)
def basis(req: ExprRequest) -> BasisResponse:
    f = parse_holomorphic(req.expr, req.nvars)
    b = local_algebra_basis(f, _resolve_cap(req.degree_cap))
    return BasisResponse(
        monomials=[list(m) for m in b.monomials],
        mu=b.mu,
        pretty=[display.format_exponent_list(b.monomials, req.nvars), f"mu = {b.mu}"],
    )


@app.post("/api/weights", response_model=WeightsResponse)
def weights(req: ExprRequest) -> WeightsResponse:
    f = parse_holomorphic(req.expr, req.nvars)
    w = find_weights(newton_support(f))
    return WeightsResponse(
        weights=weights_to_json(w),
        pretty=[display.format_weight_system(w)],
    )


@app.post("/api/split", response_model=SplitResponse)
def split(req: ExprRequest) -> SplitResponse:
    f = parse_holomorphic(req.expr, req.nvars)
    dec = semiqh_split(f, _resolve_cap(req.degree_cap))
    return SplitResponse(
        q=poly_to_json(dec.principal),
        tail=poly_to_json(dec.tail),
        weights=weights_to_json(dec.weights),
        pretty=[
            f"Q = {display.format_poly(dec.principal)}",
            f"F' = {display.format_poly(dec.tail)}",
            display.format_weight_system(dec.weights),
        ],
    )


@app.post("/api/jet", response_model=PolyResponse)
def jet_endpoint(req: JetRequest) -> PolyResponse:
    f = parse_holomorphic(req.expr, req.nvars)
    g = jet(f, req.k)
    return PolyResponse(poly=poly_to_json(g), pretty=[display.format_poly(g)])


@app.post("/api/complexify", response_model=BiPolyResponse)
def complexify_endpoint(req: ExprRequest) -> BiPolyResponse:
    f = parse_real_analytic(req.expr, req.nvars)
    fc = complexify(f)
    return BiPolyResponse(bipoly=bipoly_to_json(fc), pretty=[display.format_bipoly(fc)])


@app.post("/api/levicheck", response_model=LeviResponse)
def levicheck(req: ExprRequest) -> LeviResponse:
    f = parse_real_analytic(req.expr, req.nvars)
    cert = is_levi_flat(f)
    pretty = [cert.verdict]
    witness = None
    if cert.witness is not None:
        witness = bipoly_to_json(cert.witness)
        pretty.append(f"witness: {display.format_bipoly(cert.witness)}")
    return LeviResponse(verdict=cert.verdict, witness=witness, pretty=pretty)


@app.post("/api/singcheck", response_model=SingResponse)
def singcheck(req: ExprRequest) -> SingResponse:
    f = parse_real_analytic(req.expr, req.nvars)
    ok = singular_locus_is_origin(f, _resolve_cap(req.degree_cap))
    return SingResponse(origin_only=ok, pretty=["true" if ok else "false"])


def _template_pretty(t) -> list[str]:
    lines = [display.format_template(t), f"mu = {t.mu}", f"bound = {t.degree_bound}"]
    if t.weights is not None:
        lines.append(display.format_weight_system(t.weights))
    if t.heuristic:
        lines.append("heuristic: outside the proven dimension range")
    if t.refined is not None:
        lines.append(f"refined: {display.format_template(t.refined)}")
    return lines


@app.post("/api/arnold", response_model=TemplateResponse)
def arnold(req: ExprRequest) -> TemplateResponse:
    q = parse_holomorphic(req.expr, req.nvars)
    t = arnold_template(q, _resolve_cap(req.degree_cap))
    return TemplateResponse(
        template=template_to_json(t), pretty=[display.format_template(t)]
    )


@app.post("/api/normalform", response_model=TemplateResponse)
def normalform(req: NormalFormRequest) -> TemplateResponse:
    f = parse_real_analytic(req.expr, req.nvars)
    cap = _resolve_cap(req.degree_cap)
    if req.shape == "homogeneous":
        t = homogeneous_template(f, cap)
    elif req.shape == "quasihomogeneous":
        t = quasihomogeneous_template(f, cap)
    else:
        try:
            t = homogeneous_template(f, cap)
        except (PrincipalPartError, NonIsolatedSingularityError):
            # the homogeneous slice may be degenerate while the full
            # weighted principal part is perfectly isolated
            t = quasihomogeneous_template(f, cap)
    return TemplateResponse(template=template_to_json(t), pretty=_template_pretty(t))
