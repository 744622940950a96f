"""Recursive-descent parser for polynomial and defining-function expressions.

Grammar, loosest binding first:

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary | unary)*     # juxtaposition multiplies
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INTEGER)?
    atom    := INTEGER | NAME | '(' sum ')'
             | 'Re' '(' sum ')' | 'Im' '(' sum ')' | 'conj' '(' NAME ')'

Variables are z1..zn, with x, y accepted as aliases of z1, z2 when n = 2;
'i' is the imaginary unit.  '/' is division by a nonzero constant only.
Exponents must be literal nonnegative integers.  Decimal literals are
rejected outright: every coefficient stays an exact Gaussian rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .gauss import GaussRational
from .poly import BiPoly, Poly

__all__ = ["parse_holomorphic", "parse_real_analytic", "parse_mixed"]


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

_OPERATORS = set("+-*/^(),")


@dataclass
class _Token:
    kind: str  # NUM, NAME, OP, EOF
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            if i < len(src) and src[i] == ".":
                raise ParseError("floating-point literals are not supported; use p/q", line, col)
            text = src[start:i]
            tokens.append(_Token("NUM", text, line, col))
            col += len(text)
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(src) and (src[i].isalnum() or src[i] == "_"):
                i += 1
            text = src[start:i]
            tokens.append(_Token("NAME", text, line, col))
            col += len(text)
            continue
        if ch in _OPERATORS:
            tokens.append(_Token("OP", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass
class Var:
    index: int


@dataclass
class ConjVar:
    index: int


@dataclass
class Lit:
    value: Fraction


@dataclass
class Imag:
    pass


@dataclass
class Add:
    left: object
    right: object


@dataclass
class Sub:
    left: object
    right: object


@dataclass
class Mul:
    left: object
    right: object


@dataclass
class Div:
    left: object
    right: object


@dataclass
class Neg:
    operand: object


@dataclass
class Pow:
    base: object
    exponent: int


@dataclass
class RealPart:
    operand: object


@dataclass
class ImagPart:
    operand: object


class _Parser:
    """One parse = one instance; ``holomorphic`` bans conj / Re / Im."""

    def __init__(self, tokens: list[_Token], nvars: int, holomorphic: bool):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars
        self.holomorphic = holomorphic
        self.in_re_im = False

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        t = self.tok
        self.pos += 1
        return t

    def expect_op(self, op: str):
        t = self.tok
        if t.kind != "OP" or t.text != op:
            raise ParseError(f"expected {op!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.advance()

    def fail(self, message: str):
        t = self.tok
        raise ParseError(message, t.line, t.col)

    def parse(self):
        node = self.sum()
        if self.tok.kind != "EOF":
            self.fail(f"unexpected trailing input {self.tok.text!r}")
        return node

    def sum(self):
        node = self.product()
        while self.tok.kind == "OP" and self.tok.text in "+-":
            op = self.advance().text
            right = self.product()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("NUM", "NAME") or (t.kind == "OP" and t.text == "(")

    def product(self):
        node = self.unary()
        while True:
            t = self.tok
            if t.kind == "OP" and t.text in "*/":
                op = self.advance().text
                right = self.unary()
                node = Mul(node, right) if op == "*" else Div(node, right)
            elif self._starts_factor():
                node = Mul(node, self.unary())
            else:
                return node

    def unary(self):
        if self.tok.kind == "OP" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        if self.tok.kind == "OP" and self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "OP" and self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "NUM":
                raise ParseError("exponent must be a nonnegative integer literal", t.line, t.col)
            self.advance()
            return Pow(base, int(t.text))
        return base

    def atom(self):
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return Lit(Fraction(int(t.text)))
        if t.kind == "OP" and t.text == "(":
            self.advance()
            node = self.sum()
            self.expect_op(")")
            return node
        if t.kind == "NAME":
            return self.name_atom()
        self.fail(f"unexpected {t.text or 'end of input'!r}")

    def name_atom(self):
        t = self.advance()
        name = t.text
        if name == "i":
            return Imag()
        if name in ("Re", "Im"):
            if self.holomorphic:
                raise ParseError(f"{name}(...) is not allowed in a holomorphic polynomial", t.line, t.col)
            if self.in_re_im:
                raise ParseError(f"{name}(...) may not be nested inside Re/Im", t.line, t.col)
            self.expect_op("(")
            self.in_re_im = True
            node = self.sum()
            self.in_re_im = False
            self.expect_op(")")
            return RealPart(node) if name == "Re" else ImagPart(node)
        if name == "conj":
            if self.holomorphic:
                raise ParseError("conj(...) is not allowed in a holomorphic polynomial", t.line, t.col)
            self.expect_op("(")
            v = self.tok
            if v.kind != "NAME":
                raise ParseError("conj(...) takes a single variable", v.line, v.col)
            index = self.variable_index(v)
            self.advance()
            self.expect_op(")")
            return ConjVar(index)
        return Var(self.variable_index(t))

    def variable_index(self, t: _Token) -> int:
        name = t.text
        if self.nvars == 2 and name in ("x", "y"):
            return 0 if name == "x" else 1
        if name.startswith("z") and name[1:].isdigit():
            k = int(name[1:])
            if 1 <= k <= self.nvars:
                return k - 1
            raise ParseError(f"variable {name} out of range for {self.nvars} variables", t.line, t.col)
        raise ParseError(f"unknown name {name!r}", t.line, t.col)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

_HALF = GaussRational(Fraction(1, 2))
_NEG_HALF_I = GaussRational(0, Fraction(-1, 2))  # 1 / (2i)


def _evaluate(node, n: int) -> BiPoly:
    if isinstance(node, Var):
        return BiPoly(n, Poly.variable(2 * n, node.index))
    if isinstance(node, ConjVar):
        return BiPoly(n, Poly.variable(2 * n, n + node.index))
    if isinstance(node, Lit):
        return BiPoly.constant(n, GaussRational(node.value))
    if isinstance(node, Imag):
        return BiPoly.constant(n, GaussRational(0, 1))
    if isinstance(node, Add):
        return _evaluate(node.left, n) + _evaluate(node.right, n)
    if isinstance(node, Sub):
        return _evaluate(node.left, n) - _evaluate(node.right, n)
    if isinstance(node, Mul):
        return _evaluate(node.left, n) * _evaluate(node.right, n)
    if isinstance(node, Div):
        left = _evaluate(node.left, n)
        right = _evaluate(node.right, n)
        if right.poly.total_degree() > 0:
            raise ParseError("division is only allowed by a nonzero constant")
        c = right.poly.constant_term()
        if not c:
            raise ParseError("division by zero")
        return left.scale(c.inverse())
    if isinstance(node, Neg):
        return -_evaluate(node.operand, n)
    if isinstance(node, Pow):
        return BiPoly(n, _evaluate(node.base, n).poly ** node.exponent)
    if isinstance(node, RealPart):
        v = _evaluate(node.operand, n)
        return (v + v.hermitian_conjugate()).scale(_HALF)
    if isinstance(node, ImagPart):
        v = _evaluate(node.operand, n)
        return (v - v.hermitian_conjugate()).scale(_NEG_HALF_I)
    raise TypeError(f"unknown AST node {node!r}")


def parse_mixed(src: str, nvars: int) -> BiPoly:
    """Parse an expression in z_k and conj(z_k) into its (z, w) polynomial."""
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    ast = _Parser(_tokenize(src), nvars, holomorphic=False).parse()
    return _evaluate(ast, nvars)


def parse_holomorphic(src: str, nvars: int) -> Poly:
    """Parse a holomorphic polynomial (no conj, no Re/Im) into a Poly."""
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    ast = _Parser(_tokenize(src), nvars, holomorphic=True).parse()
    mixed = _evaluate(ast, nvars)
    terms = {e[:nvars]: c for e, c in mixed.poly.items()}
    return Poly(nvars, terms)


def parse_real_analytic(src: str, nvars: int):
    """Parse a real-valued defining function into a HermitianPoly.

    Rejects expressions that are not real-valued and expressions with a
    nonzero constant term (the germ must vanish at the origin).
    """
    from .levi import HermitianPoly

    mixed = parse_mixed(src, nvars)
    return HermitianPoly.from_bipoly(mixed)
