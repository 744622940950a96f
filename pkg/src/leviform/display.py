"""Plain-text rendering of polynomials, forms, weights, and templates.

The polynomial and defining-function renderers are exact inverses of the
expression parser: parse(format(p)) == p.  Terms are printed in increasing
total degree (principal part first, as usual for germs) and in
graded-reverse-lex order inside each degree.
"""

from __future__ import annotations

from fractions import Fraction

from .gauss import GaussRational, format_rational
from .poly import BiPoly, Poly, term_sort_key

__all__ = [
    "variable_names",
    "format_poly",
    "format_bipoly",
    "format_monomial",
    "format_form",
]


def variable_names(nvars: int) -> list[str]:
    """z1..zn, except the traditional x, y in two variables."""
    if nvars == 2:
        return ["x", "y"]
    return [f"z{i + 1}" for i in range(nvars)]


def _format_power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def format_monomial(exps: tuple[int, ...], names: list[str]) -> str:
    parts = [_format_power(names[i], k) for i, k in enumerate(exps) if k]
    return "*".join(parts) if parts else "1"


def _rational_chunk(q: Fraction) -> str:
    return format_rational(q)


def _term_chunk(coeff: GaussRational, monomial: str) -> tuple[str, bool]:
    """Render one term; returns (text without leading sign, is_negative).

    Mixed complex coefficients are parenthesized and treated as positive.
    """
    re, im = coeff.re, coeff.im
    if im == 0:
        negative = re < 0
        mag = abs(re)
        if monomial == "1":
            return _rational_chunk(mag), negative
        if mag == 1:
            return monomial, negative
        return f"{_rational_chunk(mag)}*{monomial}", negative
    if re == 0:
        negative = im < 0
        mag = abs(im)
        head = "i" if mag == 1 else f"{_rational_chunk(mag)}*i"
        if monomial == "1":
            return head, negative
        return f"{head}*{monomial}", negative
    im_sign = "+" if im > 0 else "-"
    im_mag = abs(im)
    im_part = "i" if im_mag == 1 else f"{_rational_chunk(im_mag)}*i"
    inner = f"({_rational_chunk(re)}{im_sign}{im_part})"
    if monomial == "1":
        return inner, False
    return f"{inner}*{monomial}", False


def _join_terms(chunks: list[tuple[str, bool]]) -> str:
    if not chunks:
        return "0"
    out = []
    for i, (text, negative) in enumerate(chunks):
        if i == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def format_poly(p: Poly, names: list[str] | None = None) -> str:
    names = names or variable_names(p.nvars)
    chunks = [
        _term_chunk(c, format_monomial(e, names))
        for e, c in p.sorted_terms()
    ]
    return _join_terms(chunks)


def format_bipoly(b: BiPoly, names: list[str] | None = None) -> str:
    n = b.zvars
    if names is None:
        names = [f"z{i + 1}" for i in range(n)] + [f"w{i + 1}" for i in range(n)]
    return format_poly(b.poly, names)


def format_hermitian_term(mu: tuple[int, ...], nu: tuple[int, ...], names: list[str]) -> str:
    parts = [_format_power(names[i], k) for i, k in enumerate(mu) if k]
    parts += [_format_power(f"conj({names[i]})", k) for i, k in enumerate(nu) if k]
    return "*".join(parts) if parts else "1"


def format_hermitian(h) -> str:
    """Defining function as an expression in z_k and conj(z_k); parses back."""
    names = variable_names(h.nvars)
    chunks = [
        _term_chunk(c, format_hermitian_term(mu, nu, names))
        for (mu, nu), c in h.sorted_items()
    ]
    return _join_terms(chunks)


def format_form(form) -> str:
    n = form.zvars
    covectors = [f"dz{i + 1}" for i in range(n)] + [f"dw{i + 1}" for i in range(n)]
    if form.is_zero():
        return "0"
    pieces = []
    for idx, coeff in form.sorted_terms():
        basis = "^".join(covectors[k] for k in idx) if idx else "1"
        pieces.append(f"[{format_bipoly(coeff)}] {basis}" if idx else f"[{format_bipoly(coeff)}]")
    return " + ".join(pieces)


def format_exponent_list(monomials, nvars: int) -> str:
    names = variable_names(nvars)
    return ", ".join(format_monomial(m, names) for m in monomials)


def sort_monomials(monomials) -> list[tuple[int, ...]]:
    return sorted(monomials, key=term_sort_key)


def format_weight_system(w) -> str:
    body = ", ".join(str(a) for a in w.alpha)
    text = f"alpha = ({body}), d = 1"
    return f"{text} [ambiguous]" if w.ambiguous else text


def format_template(t) -> str:
    """One-line template: base plus named symbolic extras."""
    names = variable_names(t.base.nvars)
    text = format_poly(t.base, names)
    for m, name in sorted(t.extras, key=lambda mn: term_sort_key(mn[0])):
        text += f" + {name}*{format_monomial(m, names)}"
    return text
