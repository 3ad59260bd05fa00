"""Arithmetic expression syntax over a carrier of named generators.

Grammar (whitespace insignificant)::

    expr   := term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := ["-"] atom
    atom   := IDENT | INT | "(" expr ")"
    IDENT  := [a-zA-Z_][a-zA-Z0-9_]*
    INT    := [0-9]+

Subtraction desugars to addition of a negation at parse time; the
literals 0 and 1 parse to the dedicated Zero/One nodes.
"""

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class OneLit:
    pass


@dataclass(frozen=True)
class ZeroLit:
    pass


Expr = Var | IntLit | Add | Mul | Neg | OneLit | ZeroLit


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-*()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            tokens.append(("INT", int(src[start:pos]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < len(src) and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            tokens.append(("IDENT", src[start:pos], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("EOF", None, len(src)))
    return tokens


def parse_expr(src, carrier):
    """Parse to an AST, resolving every identifier against the carrier."""
    tokens = tokenize(src)
    idx = 0

    def peek():
        return tokens[idx]

    def take(kind):
        nonlocal idx
        tok = tokens[idx]
        if tok[0] != kind:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], expected=(kind,))
        idx += 1
        return tok

    def atom():
        nonlocal idx
        kind, value, pos = peek()
        if kind == "IDENT":
            idx += 1
            carrier.gen(value)
            return Var(value)
        if kind == "INT":
            idx += 1
            if value == 0:
                return ZeroLit()
            if value == 1:
                return OneLit()
            return IntLit(value)
        if kind == "(":
            idx += 1
            inner = expr()
            take(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", pos,
                         expected=("IDENT", "INT", "("))

    def factor():
        nonlocal idx
        if peek()[0] == "-":
            idx += 1
            return Neg(atom())
        return atom()

    def term():
        node = factor()
        while peek()[0] == "*":
            take("*")
            node = Mul(node, factor())
        return node

    def expr():
        node = term()
        while peek()[0] in ("+", "-"):
            op = take(peek()[0])
            rhs = term()
            node = Add(node, rhs if op[0] == "+" else Neg(rhs))
        return node

    result = expr()
    take("EOF")
    return result
