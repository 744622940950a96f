import random
from fractions import Fraction

import pytest

from oracles import milnor_by_linear_algebra, quotient_dimension

from leviform.errors import (
    DegreeCapExceededError,
    NonIsolatedSingularityError,
    NotInMaximalIdealError,
    ZeroInputError,
)
from leviform.gauss import GaussRational
from leviform.parse import parse_holomorphic
from leviform.poly import Poly, exps_divides, invert_matrix
from leviform.localbasis import (
    INFINITE,
    LocalOrder,
    is_isolated_singularity,
    local_algebra_basis,
    milnor_number,
    mora_normal_form,
    standard_basis,
)


def P(src, n=2):
    return parse_holomorphic(src, n)


# ---------------------------------------------------------------------------
# the local order itself
# ---------------------------------------------------------------------------

def test_one_is_the_largest_monomial():
    order = LocalOrder(2)
    assert order.greater((0, 0), (1, 0))
    assert order.greater((0, 0), (0, 5))
    assert order.leading_exponent(P("1 + x + y^3")) == (0, 0)


def test_antigraded_revlex_tiebreak():
    order = LocalOrder(2)
    # same degree: grevlex rule, x^2 > x*y > y^2
    assert order.greater((2, 0), (1, 1))
    assert order.greater((1, 1), (0, 2))
    # lower degree always wins
    assert order.greater((0, 2), (3, 0))


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------

def test_normal_form_membership():
    assert mora_normal_form(P("x^2"), [P("x")]).is_zero()


def test_normal_form_standard_monomial():
    # y^2 is a standard monomial of the Jacobian ideal of x^2*y + y^3;
    # cross-checked below by the quotient dimension oracle
    g = [P("2*x*y"), P("x^2 + 3*y^2")]
    assert mora_normal_form(P("y^2"), g) == P("y^2")
    assert quotient_dimension(g, 2) == 4


def test_normal_form_empty_ideal():
    p = P("x^3 + y")
    assert mora_normal_form(p, []) == p


def test_normal_form_needs_local_unit():
    # z1 = (z1 - z1^2) * (1 - z1)^{-1} in the local ring
    assert mora_normal_form(
        parse_holomorphic("z1", 1), [parse_holomorphic("z1 - z1^2", 1)]
    ).is_zero()


def test_normal_form_emission_is_exact():
    # internal primitivization must not leak a scale factor into the result
    z = lambda s: parse_holomorphic(s, 1)
    assert mora_normal_form(z("1 + z1 + z1^3"), [z("z1 + z1^2")]) == Poly.constant(1, 1)
    assert mora_normal_form(P("y^2 + x"), [P("x + x^2")]) == P("y^2")


def test_normal_form_reduces_ideal_elements_to_zero():
    rng = random.Random(8)
    for _ in range(10):
        gens = [random_nonzero(rng) for _ in range(rng.randint(1, 3))]
        sb = standard_basis(gens)
        for g in sb.generators:
            assert mora_normal_form(g, list(sb.generators)).is_zero()
        for g in gens:
            assert mora_normal_form(g, list(sb.generators)).is_zero()
        # random combination sum h_i g_i stays in the ideal
        combo = Poly.zero(2)
        for g in gens:
            combo = combo + random_nonzero(rng) * g
        assert mora_normal_form(combo, list(sb.generators)).is_zero()


def random_nonzero(rng, nvars=2):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        e = tuple(rng.randint(0, 3) for _ in range(nvars))
        terms[e] = GaussRational(rng.randint(-4, 4), rng.randint(-1, 1))
    p = Poly(nvars, terms)
    return p if not p.is_zero() else Poly.variable(nvars, 0)


# ---------------------------------------------------------------------------
# standard bases
# ---------------------------------------------------------------------------

def test_maximal_ideal_is_its_own_basis():
    sb = standard_basis([P("x"), P("y")])
    assert set(sb.leading_exponents) == {(1, 0), (0, 1)}


def test_jacobian_basis_of_cusp_family():
    sb = standard_basis([P("2*x*y"), P("x^2 + 3*y^2")])
    assert set(sb.leading_exponents) == {(1, 1), (2, 0), (0, 3)}
    assert quotient_dimension([P("2*x*y"), P("x^2 + 3*y^2")], 2) == 4


def test_principal_ideal_already_standard():
    sb = standard_basis([P("x^2")])
    assert sb.generators == (P("x^2"),)


def test_all_zero_generators_rejected():
    with pytest.raises(ZeroInputError):
        standard_basis([Poly.zero(2)])


def test_leading_exponents_interreduced():
    rng = random.Random(77)
    for _ in range(15):
        gens = [random_nonzero(rng) for _ in range(rng.randint(1, 3))]
        sb = standard_basis(gens)
        les = sb.leading_exponents
        for i, a in enumerate(les):
            for j, b in enumerate(les):
                if i != j:
                    assert not exps_divides(a, b)
        for g, le in zip(sb.generators, les):
            assert not g.is_zero()
            assert g.coefficient(le) == GaussRational(1)


def test_s_polynomials_reduce_to_zero():
    rng = random.Random(13)
    for _ in range(10):
        gens = [random_nonzero(rng) for _ in range(2)]
        sb = standard_basis(gens)
        order = sb.order
        from leviform.poly import exps_lcm, exps_sub

        basis = list(sb.generators)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                f, g = basis[i], basis[j]
                lcm = exps_lcm(order.leading_exponent(f), order.leading_exponent(g))
                s = f.term_multiple(exps_sub(lcm, order.leading_exponent(f)), GaussRational(1)) \
                    - g.term_multiple(exps_sub(lcm, order.leading_exponent(g)), GaussRational(1))
                assert mora_normal_form(s, basis).is_zero()


def test_same_leading_exponent_generators_not_lost():
    # <x, x + y^2> = <x, y^2>, so mu of the quotient is 2, not infinite
    sb = standard_basis([P("x"), P("x + y^2")])
    assert set(sb.leading_exponents) == {(1, 0), (0, 2)}


# ---------------------------------------------------------------------------
# Milnor numbers
# ---------------------------------------------------------------------------

def test_milnor_paper_values():
    assert milnor_number(P("x^2*y + y^3")) == 4
    for k in (3, 4, 5, 6):
        assert milnor_number(P(f"x^2*y + y^{k}")) == k + 1
    assert milnor_number(parse_holomorphic("z1^2 + z2^2 + z3^2", 3)) == 1
    assert milnor_number(P("x^2")) is INFINITE


def test_milnor_smooth_and_zero():
    assert milnor_number(P("x + y^5")) == 0
    assert milnor_number(Poly.zero(2)) is INFINITE


def test_milnor_requires_vanishing_at_origin():
    with pytest.raises(NotInMaximalIdealError):
        milnor_number(P("1 + x"))


def test_milnor_against_linear_algebra_oracle():
    for src, n in [("x^2*y + y^3", 2), ("x^5 + y^5", 2), ("x^3 + y^4", 2),
                   ("x^2*y + y^5", 2), ("z1^3 + z2^3 + z3^3", 3)]:
        f = parse_holomorphic(src, n)
        assert milnor_number(f) == milnor_by_linear_algebra(f)


def test_fermat_oracle():
    for n in (2, 3):
        for k in (2, 3, 4):
            src = " + ".join(f"z{i + 1}^{k}" for i in range(n))
            f = parse_holomorphic(src, n)
            assert milnor_number(f) == (k - 1) ** n
            assert milnor_by_linear_algebra(f) == (k - 1) ** n


def test_milnor_invariant_under_linear_substitution():
    rng = random.Random(4)
    values = [GaussRational(a, b) for a in (-1, 0, 1, 2) for b in (-1, 0, 1)]
    for src, n, mu in [("x^2*y + y^3", 2, 4), ("x^5 + y^5", 2, 16),
                       ("z1^2 + z2^2 + z3^2", 3, 1)]:
        f = parse_holomorphic(src, n)
        done = 0
        while done < 20:
            m = [[rng.choice(values) for _ in range(n)] for _ in range(n)]
            try:
                invert_matrix(m)
            except Exception:
                continue
            assert milnor_number(f.substitute_linear(m)) == mu
            done += 1


# ---------------------------------------------------------------------------
# local algebra bases
# ---------------------------------------------------------------------------

def test_basis_of_cusp_family():
    for k in (3, 4, 5, 6):
        b = local_algebra_basis(P(f"x^2*y + y^{k}"))
        expected = [(0, 0), (1, 0)] + [(0, j) for j in range(1, k)]
        assert sorted(b.monomials) == sorted(expected)
        assert b.mu == k + 1


def test_basis_morse():
    assert local_algebra_basis(P("x^2 + y^2")).monomials == ((0, 0),)


def test_basis_fermat_quintic():
    b = local_algebra_basis(P("x^5 + y^5"))
    assert set(b.monomials) == {(i, j) for i in range(4) for j in range(4)}
    assert b.mu == 16


def test_basis_non_isolated_rejected():
    with pytest.raises(NonIsolatedSingularityError):
        local_algebra_basis(P("x^2*y^2"))


def test_staircase_closed_under_divisibility():
    rng = random.Random(21)
    polys = [P("x^2*y + y^3"), P("x^5 + y^5"), P("x^3 + y^4"),
             parse_holomorphic("z1^3 + z2^3 + z3^2", 3)]
    for _ in range(6):
        polys.append(random_isolated(rng))
    for f in polys:
        b = local_algebra_basis(f)
        members = set(b.monomials)
        for m in members:
            for i in range(len(m)):
                if m[i] > 0:
                    divisor = tuple(x - 1 if k == i else x for k, x in enumerate(m))
                    assert divisor in members


def random_isolated(rng):
    # x^a + y^b plus noise of higher degree keeps the singularity isolated
    a, b = rng.randint(2, 4), rng.randint(2, 4)
    f = P(f"x^{a} + y^{b}")
    noise = Poly(2, {(rng.randint(a, 5), rng.randint(b, 5)): GaussRational(rng.randint(1, 3))})
    return f + noise


def test_is_isolated_singularity():
    assert is_isolated_singularity(P("x^2*y + y^3"))
    assert not is_isolated_singularity(P("x^2*y^2"))
    assert is_isolated_singularity(parse_holomorphic("z1^2 + z2^2 + z3^2", 3))


def test_degree_cap_is_a_resource_error():
    with pytest.raises(DegreeCapExceededError):
        standard_basis([P("x^40 + x*y"), P("y^40 + x^39")], degree_cap=8)


def test_degree_cap_bounds_runaway_reductions():
    # dense random-looking junk whose reduction cascade would otherwise grow
    # monstrous coefficients; the cap must turn it into a fast clean error
    from fractions import Fraction

    f = Poly(3, {
        (0, 4, 1): GaussRational(Fraction(3), Fraction(2)),
        (1, 2, 3): GaussRational(0, -2),
        (3, 2, 3): GaussRational(Fraction(1, 3), Fraction(-2)),
        (4, 4, 3): GaussRational(Fraction(-1, 2), Fraction(1)),
    })
    with pytest.raises(DegreeCapExceededError):
        milnor_number(f, degree_cap=20)


def test_milnor_fuzz_against_linear_algebra_oracle():
    rng = random.Random(5150)
    checked = 0
    tried = 0
    while checked < 25 and tried < 400:
        tried += 1
        n = rng.choice((2, 2, 3))
        max_e = 4 if n == 2 else 2
        terms = {}
        for _ in range(rng.randint(2, 5)):
            e = tuple(rng.randint(0, max_e) for _ in range(n))
            if sum(e) == 0:
                continue
            terms[e] = GaussRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                     Fraction(rng.randint(-2, 2), 1))
        f = Poly(n, terms)
        if f.is_zero():
            continue
        try:
            mu = milnor_number(f, degree_cap=24)
        except DegreeCapExceededError:
            continue
        if mu is INFINITE or mu > 16:
            continue
        assert mu == milnor_by_linear_algebra(f)
        checked += 1
    assert checked == 25
