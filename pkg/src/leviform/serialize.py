"""JSON-shaped dict encoding of every value the service and CLI exchange.

Rationals travel as decimal-free strings "p/q" (or "p"); any decimal or float
on the way in is rejected.  Term lists are sorted in display order, so equal
values always serialize to identical JSON.
"""

from __future__ import annotations

from fractions import Fraction

from .gauss import GaussRational, format_rational, parse_rational
from .levi import HermitianPoly
from .normalform import NormalFormTemplate
from .poly import BiPoly, Poly, term_sort_key
from .weights import WeightSystem

__all__ = [
    "poly_to_json",
    "poly_from_json",
    "bipoly_to_json",
    "bipoly_from_json",
    "hermitian_to_json",
    "hermitian_from_json",
    "weights_to_json",
    "weights_from_json",
    "template_to_json",
]


def _coeff_fields(c: GaussRational) -> dict:
    re, im = c.to_strings()
    return {"re": re, "im": im}


def _coeff_from(entry: dict) -> GaussRational:
    return GaussRational.from_strings(entry["re"], entry["im"])


def poly_to_json(p: Poly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [
            {"exps": list(e), **_coeff_fields(c)} for e, c in p.sorted_terms()
        ],
    }


def poly_from_json(data: dict) -> Poly:
    nvars = int(data["nvars"])
    terms = {
        tuple(int(x) for x in entry["exps"]): _coeff_from(entry)
        for entry in data["terms"]
    }
    return Poly(nvars, terms)


def bipoly_to_json(b: BiPoly) -> dict:
    encoded = poly_to_json(b.poly)
    encoded["zvars"] = b.zvars
    return encoded


def bipoly_from_json(data: dict) -> BiPoly:
    return BiPoly(int(data["zvars"]), poly_from_json(data))


def hermitian_to_json(h: HermitianPoly) -> dict:
    return {
        "nvars": h.nvars,
        "terms": [
            {"mu": list(mu), "nu": list(nu), **_coeff_fields(c)}
            for (mu, nu), c in h.sorted_items()
        ],
    }


def hermitian_from_json(data: dict) -> HermitianPoly:
    nvars = int(data["nvars"])
    table = {
        (tuple(int(x) for x in entry["mu"]), tuple(int(x) for x in entry["nu"])): _coeff_from(entry)
        for entry in data["terms"]
    }
    return HermitianPoly(nvars, table)


def weights_to_json(w: WeightSystem) -> dict:
    return {
        "alpha": [format_rational(a) for a in w.alpha],
        "d": "1",
        "ambiguous": w.ambiguous,
    }


def weights_from_json(data: dict) -> WeightSystem:
    alpha = tuple(parse_rational(a) for a in data["alpha"])
    if parse_rational(data.get("d", "1")) != Fraction(1):
        raise ValueError("weight systems are normalized to degree 1")
    return WeightSystem(alpha, bool(data.get("ambiguous", False)))


def template_to_json(t: NormalFormTemplate) -> dict:
    out = {
        "base": poly_to_json(t.base),
        "extras": [
            {"monomial": list(m), "name": name}
            for m, name in sorted(t.extras, key=lambda mn: term_sort_key(mn[0]))
        ],
        "mu": t.mu,
        "bound": t.degree_bound,
        "heuristic": t.heuristic,
    }
    if t.weights is not None:
        out["weights"] = weights_to_json(t.weights)
    if t.refined is not None:
        out["refined"] = template_to_json(t.refined)
    return out
