"""Exact division, gcd, and square-free parts for Poly over the Gaussian rationals.

Only what the flatness certificate needs: single-divisor exact division,
a primitive-PRS multivariate gcd, and the square-free part f / gcd(f, df).
No factorization beyond that.
"""

from __future__ import annotations

from .gauss import GaussRational, ONE
from .poly import Poly, exps_divides, exps_sub, grevlex_leading_key

__all__ = ["divide_exact", "divides", "poly_gcd", "squarefree_part", "monic"]


def _leading(p: Poly) -> tuple[tuple[int, ...], GaussRational]:
    """Leading term for the global grevlex order (largest degree first)."""
    e = min(p.support(), key=grevlex_leading_key)
    return e, p.coefficient(e)


def monic(p: Poly) -> Poly:
    """Normalize so the grevlex leading coefficient is 1."""
    if p.is_zero():
        return p
    _, lc = _leading(p)
    return p.scale(lc.inverse())


def divide_exact(p: Poly, d: Poly) -> Poly | None:
    """Return q with p = q * d, or None when d does not divide p.

    Standard single-divisor reduction under a global order: if p = q*d then
    every intermediate leading term of the remainder is divisible by the
    leading term of d, so the first failure proves non-divisibility.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Poly.zero(p.nvars)
    if p.nvars != d.nvars:
        return None
    led, lcd = _leading(d)
    quotient: dict[tuple[int, ...], GaussRational] = {}
    rem = p
    while not rem.is_zero():
        le, lc = _leading(rem)
        if not exps_divides(led, le):
            return None
        shift = exps_sub(le, led)
        coeff = lc / lcd
        quotient[shift] = coeff
        rem = rem - d.term_multiple(shift, coeff)
    return Poly(p.nvars, quotient)


def divides(d: Poly, p: Poly) -> bool:
    return divide_exact(p, d) is not None


# ---------------------------------------------------------------------------
# multivariate gcd (primitive pseudo-remainder sequence)
# ---------------------------------------------------------------------------

def _main_variable(p: Poly, q: Poly) -> int | None:
    """Highest variable index appearing with positive degree in p or q."""
    top = -1
    for poly in (p, q):
        for e in poly.support():
            for i in range(len(e) - 1, top, -1):
                if e[i] > 0:
                    top = max(top, i)
                    break
    return top if top >= 0 else None


def _as_univariate(p: Poly, var: int) -> dict[int, Poly]:
    """View p as a polynomial in x_var with Poly coefficients (var-free)."""
    coeffs: dict[int, dict] = {}
    for e, c in p.items():
        k = e[var]
        stripped = tuple(0 if i == var else x for i, x in enumerate(e))
        coeffs.setdefault(k, {})[stripped] = c
    return {k: Poly(p.nvars, terms) for k, terms in coeffs.items()}


def _from_univariate(coeffs: dict[int, Poly], var: int, nvars: int) -> Poly:
    acc = Poly.zero(nvars)
    for k, c in coeffs.items():
        mono = tuple(k if i == var else 0 for i in range(nvars))
        acc = acc + c.term_multiple(mono, ONE)
    return acc


def _uni_degree(coeffs: dict[int, Poly]) -> int:
    return max((k for k, c in coeffs.items() if not c.is_zero()), default=-1)


def _content(p: Poly, var: int) -> Poly:
    """gcd of the x_var-coefficients of p (a polynomial without x_var)."""
    coeffs = [c for c in _as_univariate(p, var).values() if not c.is_zero()]
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.total_degree() == 0:
            break
        content = poly_gcd(content, c)
    return monic(content)


def _pseudo_remainder(a: Poly, b: Poly, var: int) -> Poly:
    """prem(a, b) in x_var: repeated lc(b)-scaled cancellation of the top term."""
    ub = _as_univariate(b, var)
    db = _uni_degree(ub)
    lead_b = ub[db]
    rem = a
    while True:
        ur = _as_univariate(rem, var)
        dr = _uni_degree(ur)
        if dr < db:
            return rem
        lead_r = ur[dr]
        # lc(b) * rem - lc(rem) * x^(dr-db) * b
        shift = tuple(dr - db if i == var else 0 for i in range(a.nvars))
        rem = rem * lead_b - b.term_multiple(shift, ONE) * lead_r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """gcd over the field Q(i), normalized monic; gcd(0, 0) = 0."""
    if p.is_zero():
        return monic(q)
    if q.is_zero():
        return monic(p)
    if p.total_degree() == 0 or q.total_degree() == 0:
        return Poly.constant(p.nvars, 1)
    var = _main_variable(p, q)
    da = max(e[var] for e in p.support())
    db = max(e[var] for e in q.support())
    if da == 0 or db == 0:
        if da == 0 and db == 0:
            # main variable of the pair guarantees this cannot happen
            raise AssertionError("main variable absent from both polynomials")
        # one side is free of the main variable: gcd divides its content
        free, other = (p, q) if da == 0 else (q, p)
        return poly_gcd(free, _content(other, var))
    cont_p = _content(p, var)
    cont_q = _content(q, var)
    a = divide_exact(p, cont_p)
    b = divide_exact(q, cont_q)
    assert a is not None and b is not None
    if _uni_degree(_as_univariate(a, var)) < _uni_degree(_as_univariate(b, var)):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_remainder(a, b, var)
        a, b = b, r if r.is_zero() else divide_exact(r, _content(r, var))
    result = divide_exact(a, _content(a, var))
    assert result is not None
    return monic(poly_gcd(cont_p, cont_q) * result)


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, all partial derivatives), monic-normalized.

    Over characteristic zero this removes exactly the repeated factors.
    """
    if p.is_zero():
        raise ZeroDivisionError("square-free part of the zero polynomial")
    g = p
    for i in range(p.nvars):
        if g.total_degree() == 0:
            break
        g = poly_gcd(g, p.partial(i))
    q = divide_exact(p, g)
    assert q is not None
    return monic(q)
