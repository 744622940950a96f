"""Graded exterior forms on C^{2n} with BiPoly coefficients.

The covector basis is dz_1 .. dz_n, dw_1 .. dw_n, indexed 0 .. 2n-1.  A form
stores, per strictly increasing multi-index, one BiPoly coefficient; wedge
antisymmetry is realized by sorting multi-indices and tracking the permutation
sign.  Form degree is capped at 4: the flatness certificate never needs more
than a 1-form wedged with a 2-form wedged with a 1-form.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import DegreeOverflowError, VariableMismatchError
from .gauss import GaussRational
from .poly import BiPoly

__all__ = ["ExteriorForm", "MAX_FORM_DEGREE"]

MAX_FORM_DEGREE = 4


def _merge_indices(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Merge two strictly increasing index tuples; None on a repeated covector.

    Returns the sorted union and the sign of the merge permutation.
    """
    if set(a) & set(b):
        return None
    merged = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a) - i entries of a
            if (len(a) - i) % 2:
                sign = -sign
            merged.append(b[j])
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return tuple(merged), sign


class ExteriorForm:
    """Homogeneous exterior form of fixed degree with BiPoly coefficients."""

    __slots__ = ("zvars", "degree", "_terms")

    def __init__(self, zvars: int, degree: int,
                 terms: Mapping[tuple[int, ...], BiPoly] | None = None):
        if not 0 <= degree <= MAX_FORM_DEGREE:
            raise DegreeOverflowError(
                f"form degree {degree} outside the supported range 0..{MAX_FORM_DEGREE}"
            )
        object.__setattr__(self, "zvars", zvars)
        object.__setattr__(self, "degree", degree)
        clean: dict[tuple[int, ...], BiPoly] = {}
        if terms:
            for idx, coeff in terms.items():
                idx = tuple(idx)
                if len(idx) != degree:
                    raise ValueError(f"multi-index {idx} has length != degree {degree}")
                if any(not 0 <= k < 2 * zvars for k in idx):
                    raise VariableMismatchError(f"covector index out of range in {idx}")
                if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
                    raise ValueError(f"multi-index {idx} is not strictly increasing")
                if coeff.zvars != zvars:
                    raise VariableMismatchError("coefficient BiPoly split mismatch")
                if coeff:
                    clean[idx] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExteriorForm is immutable")

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, zvars: int, degree: int = 0) -> "ExteriorForm":
        return cls(zvars, degree)

    @classmethod
    def scalar(cls, value: BiPoly) -> "ExteriorForm":
        return cls(value.zvars, 0, {(): value})

    @classmethod
    def one_form(cls, coefficients: Sequence[BiPoly]) -> "ExteriorForm":
        """Build sum coefficients[k] * (k-th basis covector); needs 2n entries."""
        if not coefficients:
            raise ValueError("one_form needs coefficients")
        zvars = coefficients[0].zvars
        if len(coefficients) != 2 * zvars:
            raise VariableMismatchError("one_form expects one coefficient per covector")
        return cls(zvars, 1, {(k,): c for k, c in enumerate(coefficients) if c})

    @classmethod
    def basis_covector(cls, zvars: int, index: int) -> "ExteriorForm":
        return cls(zvars, 1, {(index,): BiPoly.constant(zvars, 1)})

    # -- inspection ---------------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], BiPoly]:
        return dict(self._terms)

    def coefficient(self, idx: tuple[int, ...]) -> BiPoly:
        return self._terms.get(tuple(idx), BiPoly.zero(self.zvars))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], BiPoly]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self.zvars == other.zvars and self.degree == other.degree
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.zvars, self.degree, frozenset(self._terms.items())))

    def __repr__(self):
        from .display import format_form

        return format_form(self)

    # -- graded algebra -------------------------------------------------------------

    def _check(self, other: "ExteriorForm", same_degree: bool):
        if self.zvars != other.zvars:
            raise VariableMismatchError("forms live on different spaces")
        if same_degree and self.degree != other.degree:
            raise DegreeOverflowError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        self._check(other, same_degree=True)
        acc = dict(self._terms)
        for idx, c in other._terms.items():
            s = acc.get(idx)
            s = c if s is None else s + c
            if s:
                acc[idx] = s
            else:
                acc.pop(idx, None)
        return ExteriorForm(self.zvars, self.degree, acc)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "ExteriorForm":
        return ExteriorForm(self.zvars, self.degree,
                            {idx: -c for idx, c in self._terms.items()})

    def scale(self, factor) -> "ExteriorForm":
        """Multiply every coefficient by a GaussRational or BiPoly factor."""
        if isinstance(factor, BiPoly):
            return ExteriorForm(self.zvars, self.degree,
                                {idx: c * factor for idx, c in self._terms.items()})
        if not isinstance(factor, GaussRational):
            factor = GaussRational(factor)
        return ExteriorForm(self.zvars, self.degree,
                            {idx: c.scale(factor) for idx, c in self._terms.items()})

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        """Exterior product with Koszul signs; result degree is the sum."""
        self._check(other, same_degree=False)
        degree = self.degree + other.degree
        if degree > MAX_FORM_DEGREE:
            raise DegreeOverflowError(
                f"wedge of degrees {self.degree} and {other.degree} exceeds the cap {MAX_FORM_DEGREE}"
            )
        acc: dict[tuple[int, ...], BiPoly] = {}
        for ia, ca in self._terms.items():
            for ib, cb in other._terms.items():
                merged = _merge_indices(ia, ib)
                if merged is None:
                    continue
                idx, sign = merged
                term = ca * cb
                if sign < 0:
                    term = -term
                s = acc.get(idx)
                s = term if s is None else s + term
                if s:
                    acc[idx] = s
                else:
                    acc.pop(idx, None)
        return ExteriorForm(self.zvars, degree, acc)

    def __mul__(self, other: "ExteriorForm") -> "ExteriorForm":
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return self.wedge(other)
