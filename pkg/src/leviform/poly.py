"""Canonical sparse multivariate polynomials over the Gaussian rationals.

A polynomial is a map from exponent tuples to nonzero GaussRational
coefficients; the empty map is zero.  Because zero coefficients are never
stored, two polynomials are equal exactly when their term maps are equal.
All values are immutable after construction, so they can be shared freely.

Exponent tuples are plain ``tuple[int, ...]`` of length ``nvars``; the small
helper functions at the top of the module implement the monoid structure and
the divisibility order on them.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import SingularMatrixError, VariableMismatchError
from .gauss import GaussRational, ONE, ZERO

__all__ = [
    "Poly",
    "BiPoly",
    "exps_add",
    "exps_sub",
    "exps_divides",
    "exps_lcm",
    "total_degree",
    "term_sort_key",
    "invert_matrix",
    "matrix_is_invertible",
]


# ---------------------------------------------------------------------------
# exponent tuples
# ---------------------------------------------------------------------------

def total_degree(exps: tuple[int, ...]) -> int:
    return sum(exps)


def exps_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def exps_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def exps_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Componentwise a <= b, i.e. the monomial x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def exps_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def term_sort_key(exps: tuple[int, ...]):
    """Sort key: ascending total degree, graded-reverse-lex inside a degree.

    Within one degree the key orders monomials by decreasing grevlex rank
    (x^2*y before y^3), which is the display convention everywhere.  It is
    also, read front to back, exactly the descending order of the local
    anti-graded monomial order, so the standard-basis code reuses it.
    """
    return (sum(exps), tuple(reversed(exps)))


def grevlex_leading_key(exps: tuple[int, ...]):
    """Key whose minimum over a support picks the global grevlex leading term."""
    return (-sum(exps), tuple(reversed(exps)))


def _validate_exps(exps, nvars: int) -> tuple[int, ...]:
    t = tuple(int(e) for e in exps)
    if len(t) != nvars:
        raise VariableMismatchError(
            f"exponent tuple of length {len(t)} in a {nvars}-variable ring"
        )
    if any(e < 0 for e in t):
        raise ValueError(f"negative exponent in {t}")
    return t


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------

class Poly:
    """Sparse polynomial in ``nvars`` variables over GaussRational."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], GaussRational] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        object.__setattr__(self, "nvars", int(nvars))
        clean: dict[tuple[int, ...], GaussRational] = {}
        if terms:
            for exps, coeff in terms.items():
                if not isinstance(coeff, GaussRational):
                    coeff = GaussRational(coeff)
                if coeff:
                    clean[_validate_exps(exps, nvars)] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        c = value if isinstance(value, GaussRational) else GaussRational(value)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise VariableMismatchError(f"variable index {index} out of range for nvars={nvars}")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: ONE})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff=1) -> "Poly":
        c = coeff if isinstance(coeff, GaussRational) else GaussRational(coeff)
        return cls(nvars, {tuple(exps): c})

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], GaussRational]:
        """Term map (copy); zero coefficients never appear."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussRational]]:
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def support(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self._terms)

    def coefficient(self, exps: tuple[int, ...]) -> GaussRational:
        return self._terms.get(tuple(exps), ZERO)

    def constant_term(self) -> GaussRational:
        return self._terms.get((0,) * self.nvars, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        """Smallest total degree of a term (the order of the germ); -1 if zero."""
        return min((sum(e) for e in self._terms), default=-1)

    def degree_slice(self, d: int) -> "Poly":
        return Poly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def truncate(self, max_degree: int) -> "Poly":
        """Drop every term of total degree above ``max_degree``."""
        return Poly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) <= max_degree})

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        from .display import format_poly

        return format_poly(self) if self._terms else "0"

    # -- arithmetic ------------------------------------------------------------

    def _check_same_ring(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise VariableMismatchError(
                f"cannot combine polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, ZERO) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return Poly(self.nvars, acc)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        acc: dict[tuple[int, ...], GaussRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = exps_add(e1, e2)
                s = acc.get(e, ZERO) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return Poly(self.nvars, acc)

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = c if isinstance(c, GaussRational) else GaussRational(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {e: coeff * c for e, coeff in self._terms.items()})

    def term_multiple(self, exps: tuple[int, ...], coeff: GaussRational) -> "Poly":
        """self * coeff * x^exps in one pass (hot path for division loops)."""
        if not coeff:
            return Poly.zero(self.nvars)
        return Poly(
            self.nvars,
            {exps_add(e, exps): c * coeff for e, c in self._terms.items()},
        )

    # -- calculus and substitutions ---------------------------------------------

    def partial(self, index: int) -> "Poly":
        """Formal partial derivative with respect to variable ``index`` (0-based)."""
        if not 0 <= index < self.nvars:
            raise VariableMismatchError(f"variable index {index} out of range for nvars={self.nvars}")
        acc: dict[tuple[int, ...], GaussRational] = {}
        for e, c in self._terms.items():
            k = e[index]
            if k == 0:
                continue
            lowered = tuple(x - 1 if i == index else x for i, x in enumerate(e))
            acc[lowered] = c * k
        return Poly(self.nvars, acc)

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "Poly":
        """Compose with the linear change z_i -> sum_j A[i][j] z_j.

        The matrix must be invertible so the change of variables is a genuine
        coordinate change.
        """
        a = _coerce_matrix(matrix, self.nvars)
        if not matrix_is_invertible(a):
            raise SingularMatrixError("linear substitution matrix is singular")
        images = [
            Poly(self.nvars, {
                tuple(1 if j == col else 0 for col in range(self.nvars)): a[i][j]
                for j in range(self.nvars) if a[i][j]
            })
            for i in range(self.nvars)
        ]
        power_cache: list[dict[int, Poly]] = [
            {0: Poly.constant(self.nvars, 1)} for _ in range(self.nvars)
        ]

        def image_power(i: int, k: int) -> "Poly":
            cache = power_cache[i]
            if k not in cache:
                top = max(cache)
                acc = cache[top]
                for m in range(top + 1, k + 1):
                    acc = acc * images[i]
                    cache[m] = acc
            return cache[k]

        result = Poly.zero(self.nvars)
        for e, c in self._terms.items():
            term = Poly.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * image_power(i, k)
            result = result + term
        return result

    def conjugate_coefficients(self) -> "Poly":
        """Replace every coefficient by its complex conjugate (exponents fixed)."""
        return Poly(self.nvars, {e: c.conjugate() for e, c in self._terms.items()})

    def evaluate(self, point: Sequence[GaussRational]) -> GaussRational:
        if len(point) != self.nvars:
            raise VariableMismatchError("evaluation point has wrong length")
        pt = [p if isinstance(p, GaussRational) else GaussRational(p) for p in point]
        total = ZERO
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                for _ in range(k):
                    v = v * x
            total = total + v
        return total


# ---------------------------------------------------------------------------
# exact linear algebra over GaussRational (small matrices)
# ---------------------------------------------------------------------------

def _coerce_matrix(matrix, n: int) -> list[list[GaussRational]]:
    rows = [list(r) for r in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise VariableMismatchError(f"expected a {n}x{n} matrix")
    return [
        [x if isinstance(x, GaussRational) else GaussRational(x) for x in row]
        for row in rows
    ]


def matrix_is_invertible(matrix: Sequence[Sequence[GaussRational]]) -> bool:
    rows = [list(r) for r in matrix]
    n = len(rows)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(col + 1, n):
            f = rows[r][col]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return True


def invert_matrix(matrix: Sequence[Sequence]) -> list[list[GaussRational]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(matrix)
    a = _coerce_matrix(matrix, n)
    aug = [a[i] + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is not invertible")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# BiPoly: polynomials on C^{2n} with a designated (z | w) split
# ---------------------------------------------------------------------------

class BiPoly:
    """A Poly in 2n variables whose first n are z and last n are w.

    The split is metadata only; all arithmetic happens on the underlying
    2n-variable polynomial.  The w block plays the role of the conjugated
    variables after complexification.
    """

    __slots__ = ("zvars", "poly")

    def __init__(self, zvars: int, poly: Poly):
        if poly.nvars != 2 * zvars:
            raise VariableMismatchError(
                f"BiPoly with zvars={zvars} needs a {2 * zvars}-variable polynomial"
            )
        object.__setattr__(self, "zvars", zvars)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls, zvars: int) -> "BiPoly":
        return cls(zvars, Poly.zero(2 * zvars))

    @classmethod
    def constant(cls, zvars: int, value) -> "BiPoly":
        return cls(zvars, Poly.constant(2 * zvars, value))

    @classmethod
    def from_table(cls, zvars: int, table: Mapping[tuple[tuple[int, ...], tuple[int, ...]], GaussRational]) -> "BiPoly":
        terms = {tuple(mu) + tuple(nu): c for (mu, nu), c in table.items()}
        return cls(zvars, Poly(2 * zvars, terms))

    def table(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], GaussRational]:
        n = self.zvars
        return {(e[:n], e[n:]): c for e, c in self.poly.items()}

    def _check(self, other: "BiPoly"):
        if self.zvars != other.zvars:
            raise VariableMismatchError("BiPoly split mismatch")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.zvars, self.poly + other.poly)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.zvars, self.poly - other.poly)

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.zvars, -self.poly)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.zvars, self.poly * other.poly)

    def scale(self, c) -> "BiPoly":
        return BiPoly(self.zvars, self.poly.scale(c))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.zvars == other.zvars and self.poly == other.poly

    def __hash__(self):
        return hash((self.zvars, self.poly))

    def __repr__(self):
        from .display import format_bipoly

        return format_bipoly(self) if self.poly else "0"

    def z_partial(self, j: int) -> "BiPoly":
        if not 0 <= j < self.zvars:
            raise VariableMismatchError(f"z index {j} out of range")
        return BiPoly(self.zvars, self.poly.partial(j))

    def w_partial(self, j: int) -> "BiPoly":
        if not 0 <= j < self.zvars:
            raise VariableMismatchError(f"w index {j} out of range")
        return BiPoly(self.zvars, self.poly.partial(self.zvars + j))

    def hermitian_conjugate(self) -> "BiPoly":
        """Conjugate coefficients and swap the z and w blocks.

        This is the involution fixing exactly the complexifications of
        real-valued functions.
        """
        n = self.zvars
        terms = {
            e[n:] + e[:n]: c.conjugate() for e, c in self.poly.items()
        }
        return BiPoly(n, Poly(2 * n, terms))

    def evaluate(self, zs: Sequence[GaussRational], ws: Sequence[GaussRational]) -> GaussRational:
        return self.poly.evaluate(list(zs) + list(ws))
