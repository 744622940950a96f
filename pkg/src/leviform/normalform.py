"""Normal-form templates for singular flat hypersurfaces.

Two template shapes are produced.  For a homogeneous principal part P of
degree k with Milnor number mu, the coarse shape is P plus one symbolic slot
for every monomial of total degree in (k, mu+1]; finite determinacy says the
true normal form is a polynomial of degree at most mu+1 whose k-jet is P.
When the principal part is quasihomogeneous the refined shape keeps only the
local-algebra basis monomials lying strictly above the weighted diagonal.

The symbolic coefficients c1, c2, ... are never given numeric values: the
underlying theorems are existence statements and determine no algorithm for
the coefficients, so emitting the shape is the whole computable content.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import (
    NonIsolatedSingularityError,
    NotLeviFlatError,
    NotSemiquasihomogeneousError,
    PrincipalPartError,
    UnsupportedDimensionError,
)
from .levi import HermitianPoly, LeviCertificate, is_levi_flat
from .poly import Poly, term_sort_key
from .localbasis import (
    DEFAULT_DEGREE_CAP,
    INFINITE,
    local_algebra_basis,
    milnor_number,
)
from .weights import (
    WeightSystem,
    find_weights,
    newton_support,
    semiqh_split,
    weighted_degree,
)

__all__ = [
    "NormalFormTemplate",
    "jet",
    "determinacy_bound",
    "homogeneous_template",
    "arnold_template",
    "quasihomogeneous_template",
    "monomials_of_degree",
]


def jet(f: Poly, k: int) -> Poly:
    """Truncation to total degree <= k."""
    if k < 0:
        raise ValueError("jet order must be nonnegative")
    return f.truncate(k)


def determinacy_bound(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """mu + 1: the germ is right equivalent to its jet of this order."""
    mu = milnor_number(f, degree_cap)
    if mu is INFINITE:
        raise NonIsolatedSingularityError("finite determinacy needs an isolated singularity")
    return mu + 1


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in display order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, key=term_sort_key)


@dataclass(frozen=True)
class NormalFormTemplate:
    """base + sum of symbolically weighted extra monomials.

    ``extras`` pairs each extra exponent tuple with its symbolic name.
    ``heuristic`` marks results emitted outside the proven dimension range.
    ``refined`` carries the weighted-diagonal shape when the base is
    quasihomogeneous and the coarse degree-bound shape is the primary result.
    """

    base: Poly
    extras: tuple[tuple[tuple[int, ...], str], ...]
    mu: int
    degree_bound: int
    weights: WeightSystem | None = None
    heuristic: bool = False
    refined: "NormalFormTemplate | None" = None
    certificate: LeviCertificate | None = None


def _named(monomials) -> tuple[tuple[tuple[int, ...], str], ...]:
    ordered = sorted(monomials, key=term_sort_key)
    return tuple((m, f"c{i + 1}") for i, m in enumerate(ordered))


def arnold_template(q: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> NormalFormTemplate:
    """Template for a quasihomogeneous germ: q plus the above-diagonal basis.

    The extra monomials are exactly the local-algebra basis elements of
    weighted degree strictly greater than 1; every semiquasihomogeneous germ
    with principal part q is right equivalent to q plus a combination of
    them.
    """
    ws = find_weights(newton_support(q))
    basis = local_algebra_basis(q, degree_cap)
    extras = [m for m in basis.monomials if weighted_degree(m, ws) > 1]
    return NormalFormTemplate(
        base=q,
        extras=_named(extras),
        mu=basis.mu,
        degree_bound=basis.mu + 1,
        weights=ws,
    )


def _principal_part(f: HermitianPoly) -> tuple[Poly, int]:
    """Lowest-degree holomorphic part P with F = Re(P) + strictly higher terms.

    Raises when the lowest-order content of F is not of the form Re(P) for a
    homogeneous P of degree >= 2.
    """
    block = f.holomorphic_block()
    if block.is_zero():
        raise PrincipalPartError("the defining function has no holomorphic part")
    k = block.min_degree()
    principal = block.degree_slice(k).scale(2)
    if k < 2:
        raise PrincipalPartError(
            f"the principal part has degree {k}; the normal form needs degree >= 2"
        )
    tail = f + HermitianPoly.from_real_part(-principal)
    if tail and tail.min_degree() <= k:
        raise PrincipalPartError(
            "the defining function is not a homogeneous real part plus higher-order terms"
        )
    return principal, k


def homogeneous_template(f: HermitianPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> NormalFormTemplate:
    """Degree-(mu+1) template for F = Re(P) + h.o.t with homogeneous P.

    The base is the principal part P; the extra slots are every monomial of
    total degree in (k, mu+1].  The Milnor number of the flattened germ
    equals the Milnor number of P, so the bound is computed from P alone.
    The refined weighted-diagonal shape is attached as well, since a
    homogeneous P is in particular quasihomogeneous.
    """
    principal, k = _principal_part(f)
    mu = milnor_number(principal, degree_cap)
    if mu is INFINITE:
        raise NonIsolatedSingularityError("the principal part has a non-isolated singularity")
    certificate = is_levi_flat(f)
    if not certificate.flat:
        raise NotLeviFlatError("the hypersurface is not Levi-flat; no normal form applies")
    bound = mu + 1
    extras = [
        m for d in range(k + 1, bound + 1) for m in monomials_of_degree(f.nvars, d)
    ]
    return NormalFormTemplate(
        base=principal,
        extras=_named(extras),
        mu=mu,
        degree_bound=bound,
        heuristic=False,
        refined=arnold_template(principal, degree_cap),
        certificate=certificate,
    )


def quasihomogeneous_template(f: HermitianPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> NormalFormTemplate:
    """Weighted-diagonal template for F = Re(Q) + h.o.t with quasihomogeneous Q.

    Proven for n >= 3; for n = 2 the template is still emitted but flagged
    heuristic, because only the homogeneous case is covered there.  The
    defining function must put every non-principal table entry strictly above
    the weighted diagonal.
    """
    n = f.nvars
    if n < 2:
        raise UnsupportedDimensionError("normal forms need at least two variables")
    block = f.holomorphic_block()
    if block.is_zero():
        raise PrincipalPartError(
            "the defining function has no holomorphic part",
            category="PRINCIPAL_PART_NOT_QUASIHOMOGENEOUS",
        )
    try:
        split = semiqh_split(block.scale(2), degree_cap)
    except NotSemiquasihomogeneousError as exc:
        if exc.reason == "NON_ISOLATED":
            raise NonIsolatedSingularityError(
                "the principal part has a non-isolated singularity"
            ) from exc
        raise PrincipalPartError(
            str(exc), category="PRINCIPAL_PART_NOT_QUASIHOMOGENEOUS"
        ) from exc
    q, ws = split.principal, split.weights
    # every table entry off the principal part must sit strictly above the diagonal
    for (mu_e, nu_e), _ in f.items():
        wd = weighted_degree(mu_e, ws) + weighted_degree(nu_e, ws)
        if wd < 1:
            raise PrincipalPartError(
                "the defining function has terms below the weighted diagonal",
                category="PRINCIPAL_PART_NOT_QUASIHOMOGENEOUS",
            )
        if wd == 1:
            zero = (0,) * n
            pure = (nu_e == zero and mu_e in q.support()) or (
                mu_e == zero and nu_e in q.support()
            )
            if not pure:
                raise PrincipalPartError(
                    "mixed terms sit on the weighted diagonal; the principal part is not Re(Q)",
                    category="PRINCIPAL_PART_NOT_QUASIHOMOGENEOUS",
                )
    certificate = is_levi_flat(f)
    if not certificate.flat:
        raise NotLeviFlatError("the hypersurface is not Levi-flat; no normal form applies")
    template = arnold_template(q, degree_cap)
    return NormalFormTemplate(
        base=template.base,
        extras=template.extras,
        mu=template.mu,
        degree_bound=template.degree_bound,
        weights=template.weights,
        heuristic=(n == 2),
        certificate=certificate,
    )
