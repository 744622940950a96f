import random
from fractions import Fraction

import pytest

from leviform.errors import SingularMatrixError, VariableMismatchError
from leviform.gauss import GaussRational, I
from leviform.parse import parse_holomorphic
from leviform.poly import BiPoly, Poly, invert_matrix


def P(src, n=2):
    return Poly(n, {}) if src == "0" else parse_holomorphic(src, n)


def random_poly(rng, nvars=2, max_terms=5, max_degree=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_degree) for _ in range(nvars))
        terms[e] = GaussRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
                                 Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return Poly(nvars, terms)


def test_canonical_form_examples():
    assert P("x + y") + P("x - y") == P("2*x")
    assert P("x + y") * P("x - y") == P("x^2 - y^2")
    assert P("x^2*y + y^3") * Poly.constant(2, 1) == P("x^2*y + y^3")


def test_no_zero_terms_stored():
    p = P("x + y") - P("x + y")
    assert p.is_zero()
    assert len(p) == 0
    q = Poly(2, {(1, 0): GaussRational(0)})
    assert q.is_zero()


def test_equality_is_representation_equality():
    assert P("(x+y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("x") != P("y")
    with pytest.raises(VariableMismatchError):
        P("x", 2) + parse_holomorphic("z1", 3)


def test_ring_axioms_randomized():
    rng = random.Random(2024)
    for _ in range(40):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + Poly.zero(2) == a
        assert a * Poly.constant(2, 1) == a


def test_partial_derivative_examples():
    f = P("x^2*y + y^3")
    assert f.partial(0) == P("2*x*y")
    assert f.partial(1) == P("x^2 + 3*y^2")
    assert P("y^5").partial(0).is_zero()


def test_partials_commute():
    rng = random.Random(5)
    for _ in range(30):
        p = random_poly(rng, nvars=3)
        for i in range(3):
            for j in range(3):
                assert p.partial(i).partial(j) == p.partial(j).partial(i)


def test_substitute_linear_examples():
    assert P("x^2 + y^2").substitute_linear([[1, 0], [0, 1]]) == P("x^2 + y^2")
    assert P("x*y").substitute_linear([[0, 1], [1, 0]]) == P("x*y")
    # x -> x + y
    assert P("x^2").substitute_linear([[1, 1], [0, 1]]) == P("x^2 + 2*x*y + y^2")


def test_substitute_linear_rejects_singular():
    with pytest.raises(SingularMatrixError):
        P("x").substitute_linear([[1, 1], [1, 1]])


def test_substitute_roundtrip_randomized():
    rng = random.Random(11)
    values = [GaussRational(a, b) for a in (-2, -1, 0, 1, 2) for b in (-1, 0, 1)]
    done = 0
    while done < 15:
        m = [[rng.choice(values) for _ in range(2)] for _ in range(2)]
        try:
            minv = invert_matrix(m)
        except SingularMatrixError:
            continue
        p = random_poly(rng)
        assert p.substitute_linear(m).substitute_linear(minv) == p
        done += 1


def test_conjugate_coefficients():
    assert Poly(1, {(1,): I}).conjugate_coefficients() == Poly(1, {(1,): -I})
    assert P("x^2 + y^2").conjugate_coefficients() == P("x^2 + y^2")
    p = Poly(2, {(1, 1): GaussRational(2, 3)})
    assert p.conjugate_coefficients() == Poly(2, {(1, 1): GaussRational(2, -3)})


def test_power_and_evaluate():
    p = P("x + y")
    assert p ** 3 == P("(x+y)^3")
    assert p ** 0 == Poly.constant(2, 1)
    v = P("x^2*y").evaluate([GaussRational(2), GaussRational(Fraction(1, 2))])
    assert v == GaussRational(2)


def test_bipoly_split_and_partials():
    b = BiPoly.from_table(2, {((1, 0), (1, 0)): GaussRational(1)})  # z1*w1
    assert b.z_partial(0) == BiPoly.from_table(2, {((0, 0), (1, 0)): GaussRational(1)})
    assert b.w_partial(0) == BiPoly.from_table(2, {((1, 0), (0, 0)): GaussRational(1)})
    assert b.z_partial(1).is_zero()


def test_bipoly_hermitian_conjugate_involution():
    rng = random.Random(3)
    for _ in range(20):
        b = BiPoly(2, random_poly(rng, nvars=4))
        assert b.hermitian_conjugate().hermitian_conjugate() == b
