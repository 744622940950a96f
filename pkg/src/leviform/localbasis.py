"""Standard bases in the local ring, Milnor numbers, and local-algebra bases.

The monomial order is the anti-graded reverse-lexicographic local order:
lower total degree is larger, ties broken reverse-lexicographically, so the
constant monomial 1 is the largest of all.  Division uses the tangent-cone
normal form: reducers are chosen with minimal ecart and intermediate partial
results are appended to the reducer list when their ecart drops below the
chosen reducer's, which is exactly what makes head reduction terminate for
local orders.

Full tail reduction on top of that cannot be guaranteed to terminate for
arbitrary generator lists (the canonical remainder may be an honest power
series), so tail emission is guarded by the configurable total-degree cap and
aborts with a RESOURCE_LIMIT error instead of looping.  For the quotients this
package actually computes (finite-dimensional local algebras) the staircase is
finite and the emission loop provably stops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    DegreeCapExceededError,
    NonIsolatedSingularityError,
    NotInMaximalIdealError,
    ZeroInputError,
)
from .gauss import GaussRational
from .poly import (
    Poly,
    exps_divides,
    exps_lcm,
    exps_sub,
    term_sort_key,
    total_degree,
)

__all__ = [
    "INFINITE",
    "DEFAULT_DEGREE_CAP",
    "LocalOrder",
    "StandardBasis",
    "LocalAlgebraBasis",
    "mora_normal_form",
    "standard_basis",
    "milnor_number",
    "local_algebra_basis",
    "is_isolated_singularity",
]

DEFAULT_DEGREE_CAP = 64


class _Infinite:
    """Singleton returned by milnor_number for non-isolated singularities."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __bool__(self):
        return True


INFINITE = _Infinite()


class LocalOrder:
    """Anti-graded reverse-lexicographic order on exponent tuples.

    Exposed as a type so tests can poke at it; the package never needs a
    second order because the Milnor number does not depend on the choice.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars

    @staticmethod
    def key(exps: tuple[int, ...]):
        """Ascending key: the minimum over a support is the leading exponent."""
        return term_sort_key(exps)

    def greater(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return self.key(a) < self.key(b)

    def leading_exponent(self, p: Poly) -> tuple[int, ...]:
        if p.is_zero():
            raise ZeroInputError("the zero polynomial has no leading exponent")
        return min(p.support(), key=self.key)

    def leading_coefficient(self, p: Poly) -> GaussRational:
        return p.coefficient(self.leading_exponent(p))

    def ecart(self, p: Poly) -> int:
        """Total degree of p minus total degree of its leading exponent."""
        return p.total_degree() - total_degree(self.leading_exponent(p))


def _rational_content(p: Poly) -> Fraction:
    """Positive rational c with p/c integral of coefficient gcd 1."""
    num_gcd = 0
    den_lcm = 1
    for c in p.terms.values():
        for part in (c.re, c.im):
            if part:
                num_gcd = gcd(num_gcd, abs(part.numerator))
                den_lcm = lcm(den_lcm, part.denominator)
    return Fraction(num_gcd, den_lcm)


def _weak_normal_form(p: Poly, reducers: list[Poly], order: LocalOrder,
                      degree_cap: int = DEFAULT_DEGREE_CAP,
                      up_to_scale: bool = False) -> Poly:
    """Head reduction with the ecart rule; terminates for every input.

    The returned h has a leading exponent divisible by no reducer's leading
    exponent, and u*p = (combination of reducers) + h for some local unit u.
    The leading monomial strictly decreases in the local order, so its total
    degree can only go up; crossing the cap aborts with the resource error
    (adversarial inputs can otherwise walk through astronomically many
    reduction steps before terminating).

    The working remainder is kept primitive: without content removal the
    coefficients of cascading reductions grow exponentially and freeze the
    computation long before the degree cap can fire.  Reducers are
    scale-invariant, so only the result needs its scale restored; callers
    that renormalize anyway (basis completion) pass up_to_scale=True to skip
    the restoring multiplication.
    """
    h = p
    pool = list(reducers)
    led = [(order.leading_exponent(g), order.leading_coefficient(g), order.ecart(g))
           for g in pool]
    scale = Fraction(1)
    while not h.is_zero():
        le_h = order.leading_exponent(h)
        if total_degree(le_h) > degree_cap:
            raise DegreeCapExceededError(
                f"reduction degree {total_degree(le_h)} exceeded the cap {degree_cap}"
            )
        best = None
        best_ecart = None
        for i, (le_g, _, ecart_g) in enumerate(led):
            if exps_divides(le_g, le_h) and (best is None or ecart_g < best_ecart):
                best = i
                best_ecart = ecart_g
        if best is None:
            break
        ecart_h = h.total_degree() - total_degree(le_h)
        if best_ecart > ecart_h:
            pool.append(h)
            led.append((le_h, h.coefficient(le_h), ecart_h))
        g = pool[best]
        le_g, lc_g, _ = led[best]
        factor = h.coefficient(le_h) / lc_g
        h = h - g.term_multiple(exps_sub(le_h, le_g), factor)
        if h:
            content = _rational_content(h)
            if content != 1:
                h = h.scale(GaussRational(1 / content))
                scale *= content
    if h.is_zero() or up_to_scale or scale == 1:
        return h
    return h.scale(GaussRational(scale))


def mora_normal_form(
    p: Poly,
    generators: list[Poly],
    order: LocalOrder | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Poly:
    """Remainder of p on division by the generators in the local ring.

    No term of the result is divisible by any generator's leading exponent.
    The congruence p = remainder holds modulo the ideal up to a local unit
    factor, which is the invariant the membership test and all dimension
    counts rely on: the remainder is 0 exactly when p lies in the ideal
    generated by a standard basis.
    """
    order = order or LocalOrder(p.nvars)
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return p
    leading = [order.leading_exponent(g) for g in gens]
    emitted: dict[tuple[int, ...], GaussRational] = {}
    h = p
    while not h.is_zero():
        h = _weak_normal_form(h, gens, order, degree_cap)
        if h.is_zero():
            break
        le = order.leading_exponent(h)
        if total_degree(le) > degree_cap:
            raise DegreeCapExceededError(
                f"normal-form remainder degree exceeded the cap {degree_cap}"
            )
        assert not any(exps_divides(g, le) for g in leading)
        emitted[le] = h.coefficient(le)
        h = h - Poly.monomial(h.nvars, le, h.coefficient(le))
    return Poly(p.nvars, emitted)


@dataclass(frozen=True)
class StandardBasis:
    """Interreduced standard basis: no leading exponent divides another."""

    generators: tuple[Poly, ...]
    order: LocalOrder
    leading_exponents: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "leading_exponents",
            tuple(self.order.leading_exponent(g) for g in self.generators),
        )


def _interreduce(gens: list[Poly], order: LocalOrder) -> list[Poly]:
    """Keep only generators whose leading exponent is minimal for divisibility."""
    decorated = sorted(
        ((order.leading_exponent(g), g) for g in gens), key=lambda t: order.key(t[0])
    )
    kept: list[tuple[tuple[int, ...], Poly]] = []
    for le, g in decorated:
        if not any(exps_divides(le_k, le) for le_k, _ in kept):
            kept.append((le, g))
    return [g.scale(g.coefficient(le).inverse()) for le, g in kept]


def _s_polynomial(f: Poly, g: Poly, order: LocalOrder) -> Poly:
    le_f = order.leading_exponent(f)
    le_g = order.leading_exponent(g)
    lcm = exps_lcm(le_f, le_g)
    a = f.term_multiple(exps_sub(lcm, le_f), f.coefficient(le_f).inverse())
    b = g.term_multiple(exps_sub(lcm, le_g), g.coefficient(le_g).inverse())
    return a - b


def standard_basis(
    generators: list[Poly],
    order: LocalOrder | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> StandardBasis:
    """Buchberger-style completion with the tangent-cone normal form.

    Every s-polynomial of the returned basis reduces to zero, and the basis
    is interreduced with unit leading coefficients.  Pairs whose lcm degree
    exceeds the cap raise RESOURCE_LIMIT rather than looping silently.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ZeroInputError("standard basis of the zero ideal is not defined")
    nvars = gens[0].nvars
    order = order or LocalOrder(nvars)
    # normalize only; dropping same-leading-exponent generators here would
    # lose ideal content (their s-polynomials carry it)
    basis = [g.scale(order.leading_coefficient(g).inverse()) for g in gens]
    leading = [order.leading_exponent(g) for g in basis]

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                total_degree(exps_lcm(leading[ij[0]], leading[ij[1]])),
                order.key(exps_lcm(leading[ij[0]], leading[ij[1]])),
                ij,
            ),
        )
        pairs.remove((i, j))
        le_i, le_j = leading[i], leading[j]
        if all(min(a, b) == 0 for a, b in zip(le_i, le_j)):
            # coprime leading exponents: the s-polynomial always reduces to 0
            continue
        lcm = exps_lcm(le_i, le_j)
        if total_degree(lcm) > degree_cap:
            raise DegreeCapExceededError(
                f"s-pair lcm degree {total_degree(lcm)} exceeded the cap {degree_cap}"
            )
        h = _weak_normal_form(_s_polynomial(basis[i], basis[j], order), basis, order,
                              degree_cap, up_to_scale=True)
        if h.is_zero():
            continue
        le_h = order.leading_exponent(h)
        h = h.scale(h.coefficient(le_h).inverse())
        basis.append(h)
        leading.append(le_h)
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    final = _interreduce(basis, order)
    return StandardBasis(tuple(final), order)


@dataclass(frozen=True)
class LocalAlgebraBasis:
    """Monomials outside the leading ideal of the Jacobian standard basis."""

    monomials: tuple[tuple[int, ...], ...]
    mu: int


def _staircase(leading: tuple[tuple[int, ...], ...], nvars: int) -> list[tuple[int, ...]] | None:
    """Monomials not divisible by any leading exponent; None when infinite.

    Finiteness criterion: every variable must have some pure power inside the
    leading ideal, otherwise that variable's powers are all standard.
    """
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leading if all(x == 0 for k, x in enumerate(e) if k != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    standard: list[tuple[int, ...]] = []
    stack = [(0,) * nvars]
    seen = {(0,) * nvars}
    while stack:
        m = stack.pop()
        if any(exps_divides(e, m) for e in leading):
            continue
        standard.append(m)
        for i in range(nvars):
            if m[i] < bounds[i]:
                child = tuple(x + 1 if k == i else x for k, x in enumerate(m))
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
    return sorted(standard, key=term_sort_key)


def _jacobian_standard_basis(f: Poly, degree_cap: int) -> StandardBasis | None:
    """Standard basis of the Jacobian ideal; None when all partials vanish."""
    partials = [f.partial(i) for i in range(f.nvars)]
    gens = [g for g in partials if not g.is_zero()]
    if not gens:
        return None
    return standard_basis(gens, LocalOrder(f.nvars), degree_cap)


def _require_maximal_ideal(f: Poly):
    if f.constant_term():
        raise NotInMaximalIdealError("the germ must vanish at the origin")


def milnor_number(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP):
    """dim of the local ring modulo the Jacobian ideal, or INFINITE.

    Counts the standard monomials of the Jacobian ideal; the count is finite
    exactly when the singularity is isolated.
    """
    _require_maximal_ideal(f)
    sb = _jacobian_standard_basis(f, degree_cap)
    if sb is None:
        return INFINITE
    stairs = _staircase(sb.leading_exponents, f.nvars)
    if stairs is None:
        return INFINITE
    return len(stairs)


def local_algebra_basis(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> LocalAlgebraBasis:
    """Monomial vector-space basis of the local algebra of f."""
    _require_maximal_ideal(f)
    sb = _jacobian_standard_basis(f, degree_cap)
    stairs = None if sb is None else _staircase(sb.leading_exponents, f.nvars)
    if stairs is None:
        raise NonIsolatedSingularityError(
            "the singularity is not isolated: the local algebra is infinite-dimensional"
        )
    return LocalAlgebraBasis(tuple(stairs), len(stairs))


def is_isolated_singularity(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """True when the Milnor number is finite (smooth points count as isolated)."""
    return milnor_number(f, degree_cap) is not INFINITE
