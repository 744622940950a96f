from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from oracles import quotient_dimension

from leviform.errors import (
    NonIsolatedSingularityError,
    NotLeviFlatError,
    NotQuasihomogeneousError,
    PrincipalPartError,
)
from leviform.normalform import (
    arnold_template,
    determinacy_bound,
    jet,
    monomials_of_degree,
    homogeneous_template,
    quasihomogeneous_template,
)
from leviform.parse import parse_holomorphic, parse_real_analytic
from leviform.weights import weighted_degree

P = parse_holomorphic
R = parse_real_analytic


# ---------------------------------------------------------------------------
# jets and the determinacy bound
# ---------------------------------------------------------------------------

def test_jet_truncation():
    f = P("x^2*y + y^3 + x^4", 2)
    assert jet(f, 3) == P("x^2*y + y^3", 2)
    assert jet(f, f.total_degree()) == f
    assert jet(P("x^5 + y^5 + x^3*y^3", 2), 5) == P("x^5 + y^5", 2)


def test_determinacy_bounds():
    assert determinacy_bound(P("x^2*y + y^3", 2)) == 5
    assert determinacy_bound(P("z1^2 + z2^2", 2)) == 2
    assert determinacy_bound(P("x^5 + y^5", 2)) == 17
    with pytest.raises(NonIsolatedSingularityError):
        determinacy_bound(P("x^2*y^2", 2))


# ---------------------------------------------------------------------------
# the weighted-diagonal template
# ---------------------------------------------------------------------------

def test_arnold_cusp_family_has_no_extras():
    for k in (3, 4, 5, 6):
        t = arnold_template(P(f"x^2*y + y^{k}", 2))
        assert t.extras == ()
        assert t.mu == k + 1


def test_arnold_quintic_pair():
    t = arnold_template(P("x^5 + y^5", 2))
    assert [m for m, _ in t.extras] == [(3, 3)]
    assert [name for _, name in t.extras] == ["c1"]
    assert t.mu == 16
    assert quotient_dimension([P("5*x^4", 2), P("5*y^4", 2)], 2) == 16


def test_arnold_fermat_cubic_three_vars():
    t = arnold_template(P("z1^3 + z2^3 + z3^3", 3))
    assert t.extras == ()  # z1*z2*z3 sits exactly on the diagonal
    assert t.mu == 8


def test_arnold_rejects_bad_input():
    with pytest.raises(NotQuasihomogeneousError):
        arnold_template(P("x^2 + x^3", 2))
    with pytest.raises(NonIsolatedSingularityError):
        arnold_template(P("x^2*y^2", 2))


def test_arnold_extras_come_from_the_basis_and_lie_above_the_diagonal():
    from leviform.localbasis import local_algebra_basis

    for src in ("x^5 + y^5", "x^4 + y^4", "x^3 + y^5", "x^6 + y^4"):
        q = P(src, 2)
        t = arnold_template(q)
        basis = set(local_algebra_basis(q).monomials)
        for m, _ in t.extras:
            assert m in basis
            assert weighted_degree(m, t.weights) > 1
        for m in basis - {m for m, _ in t.extras}:
            assert weighted_degree(m, t.weights) <= 1


def test_homogeneous_extras_degree_window():
    # homogeneous q of degree k in 2 vars: mu = (k-1)^2 and every extra has
    # total degree in (k, 2(k-1)]
    for k in (3, 4, 5):
        q = P(f"x^{k} + y^{k}", 2)
        t = arnold_template(q)
        assert t.mu == (k - 1) ** 2
        for m, _ in t.extras:
            assert k < sum(m) <= 2 * (k - 1)


# ---------------------------------------------------------------------------
# the homogeneous-bound template
# ---------------------------------------------------------------------------

def test_homogeneous_quadric_rigidity():
    for n in (2, 3):
        src = "Re(" + " + ".join(f"z{i + 1}^2" for i in range(n)) + ")"
        t = homogeneous_template(R(src, n))
        assert t.mu == 1
        assert t.degree_bound == 2
        assert t.extras == ()


def test_homogeneous_template_cusp():
    t = homogeneous_template(R("Re(x^2*y + y^3)", 2))
    assert t.base == P("x^2*y + y^3", 2)
    assert t.mu == 4 and t.degree_bound == 5
    expected = [m for d in (4, 5) for m in monomials_of_degree(2, d)]
    assert sorted(m for m, _ in t.extras) == sorted(expected)
    assert t.refined is not None and t.refined.extras == ()
    assert t.certificate is not None and t.certificate.flat


def test_homogeneous_template_extras_count_combinatorial():
    t = homogeneous_template(R("Re(x^2*y + y^3)", 2))
    k, bound = 3, t.degree_bound
    count = sum(len(list(combinations_with_replacement(range(2), d)))
                for d in range(k + 1, bound + 1))
    assert len(t.extras) == count


def test_homogeneous_template_jet_recovers_principal_part():
    t = homogeneous_template(R("Re(x^2*y + y^3) + Re(x^6)", 2))
    assert jet(t.base, 3) == P("x^2*y + y^3", 2)
    assert t.mu == 4


def test_homogeneous_template_rejections():
    with pytest.raises(NonIsolatedSingularityError):
        homogeneous_template(R("Re(x^2*y^2)", 2))
    with pytest.raises(NonIsolatedSingularityError):
        # the principal part is Re(x^2) alone, and x^2 has a singular line
        homogeneous_template(R("Re(x^2 + y^3)", 2))
    with pytest.raises(PrincipalPartError):
        homogeneous_template(R("Re(x)", 2))  # degree 1
    with pytest.raises(PrincipalPartError):
        homogeneous_template(R("x*conj(x) + Re(y^3)", 2))  # mixed term below the jet
    with pytest.raises(NotLeviFlatError):
        # flat principal part, non-flat perturbation of higher degree
        homogeneous_template(R("Re(x^2 + y^2) + x*conj(x)*y*conj(y)", 2))


def test_quasihomogeneous_template_fermat_cubic():
    t = quasihomogeneous_template(R("Re(z1^3 + z2^3 + z3^3)", 3))
    assert t.extras == ()
    assert t.mu == 8
    assert not t.heuristic
    partials = [parse_holomorphic(f"3*z{i + 1}^2", 3) for i in range(3)]
    assert quotient_dimension(partials, 3) == 8


def test_quasihomogeneous_template_two_variables_is_heuristic():
    t = quasihomogeneous_template(R("Re(x^2*y + y^4)", 2))
    assert t.heuristic
    assert t.weights.alpha == (Fraction(3, 8), Fraction(1, 4))
    assert t.extras == ()
    assert t.mu == 5
    assert quotient_dimension([P("2*x*y", 2), P("x^2 + 4*y^3", 2)], 2) == 5


def test_quasihomogeneous_template_rejections():
    with pytest.raises(NonIsolatedSingularityError):
        quasihomogeneous_template(R("Re(x^2*y^2) + Re(x^5)", 2))
    with pytest.raises(PrincipalPartError):
        quasihomogeneous_template(R("z1*conj(z2) + z2*conj(z1)", 2))  # no holomorphic part


def test_quasihomogeneous_template_quasihomogeneous_with_tail():
    t = quasihomogeneous_template(R("Re(x^2*y + y^4) + Re(y^6)", 2))
    assert t.base == P("x^2*y + y^4", 2)
    assert t.extras == ()


def test_quasihomogeneous_template_flatness_gate():
    with pytest.raises(NotLeviFlatError):
        quasihomogeneous_template(R("Re(x^2*y + y^4) + x^2*conj(x)^2*y*conj(y)", 2))


def test_quasihomogeneous_template_accepts_homogeneous_input():
    t = quasihomogeneous_template(R("Re(x^2*y + y^3)", 2))
    assert t.extras == ()
    assert t.heuristic  # n = 2 stays flagged regardless of homogeneity
