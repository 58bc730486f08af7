"""
JINF Set Expressions

This module implements the text language for periodic sets used on the
command line:

    expr := name
          | '{' int (',' int)* '}'
          | 'mod(' int ',' int ')'
          | 'per(' bits ';' bits ')'
          | ('complement' | 'union' | 'inter' | 'diff' | 'symdiff') '(' expr (',' expr)? ')'
    name := 'evens' | 'odds'

Whitespace is insignificant. `complement` takes one argument, the other
operators two. Parse errors carry the 1-based line and column of the
offending token.

render_set produces the canonical text of a set: `evens`, `odds`, a literal
for finite sets and `per(prefix;period)` otherwise. Parsing and evaluating a
canonical rendering gives back the same set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from jinf.core import setalg
from jinf.core.setalg import PeriodicSet, SetOpKind
from jinf.utils.exceptions import EvalError, JINFException, ParseError

GRAMMAR = """\
expr := evens | odds
      | {n1,n2,...}                  finite set of positive integers
      | mod(m,r)                     {n : n = r (mod m)}
      | per(prefix;period)           bit strings over 0/1, period nonempty
      | complement(expr)
      | union(expr,expr) | inter(expr,expr) | diff(expr,expr) | symdiff(expr,expr)
examples: evens   inter(evens,mod(3,0))   union({1},diff(evens,{2}))"""


# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Literal:
    elements: Tuple[int, ...]


@dataclass(frozen=True)
class Mod:
    modulus: int
    residue: int


@dataclass(frozen=True)
class Per:
    prefix: str
    period: str


@dataclass(frozen=True)
class Complement:
    operand: "SetExpr"


@dataclass(frozen=True)
class BinaryOp:
    """Union, Inter, Diff or SymDiff, by kind."""
    kind: SetOpKind
    left: "SetExpr"
    right: "SetExpr"


SetExpr = Union[Name, Literal, Mod, Per, Complement, BinaryOp]

NAMES = {"evens": setalg.EVENS, "odds": setalg.ODDS}
BINARY = {
    "union": SetOpKind.UNION,
    "inter": SetOpKind.INTER,
    "diff": SetOpKind.DIFF,
    "symdiff": SetOpKind.SYMDIFF,
}


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>-?\d+)|(?P<punct>[{}(),;]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    start = text.rfind("\n", 0, offset) + 1
    return line, offset - start + 1


def tokenize(text: str) -> List[Token]:
    """
    Split text into tokens; an end token closes the list.

    Raises:
        ParseError: On a character outside the language
    """
    tokens: List[Token] = []
    offset = 0
    while True:
        while offset < len(text) and text[offset].isspace():
            offset += 1
        if offset >= len(text):
            line, col = _position(text, offset)
            tokens.append(Token("end", "", line, col))
            return tokens
        match = _TOKEN.match(text, offset)
        if match is None:
            line, col = _position(text, offset)
            raise ParseError(line, col, "a name, integer or punctuation", text[offset])
        kind = match.lastgroup
        start = match.start(kind)
        line, col = _position(text, start)
        tokens.append(Token(kind, match.group(kind), line, col))
        offset = match.end()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected: str) -> ParseError:
        token = self.current
        return ParseError(token.line, token.col, expected, token.text or "end of input")

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            raise self.fail(repr(text))
        return self.advance()

    def integer(self, what: str = "integer") -> int:
        if self.current.kind != "int":
            raise self.fail(what)
        return int(self.advance().text)

    def bits(self, stop: str, allow_empty: bool) -> str:
        # bit strings tokenize as integers (or not at all when empty)
        if self.current.text == stop and allow_empty:
            return ""
        token = self.current
        if token.kind != "int" or token.text.startswith("-") or set(token.text) - {"0", "1"}:
            raise self.fail("bit string over 0/1")
        return self.advance().text

    def parse(self) -> SetExpr:
        expr = self.expr()
        if self.current.kind != "end":
            raise self.fail("end of input")
        return expr

    def expr(self) -> SetExpr:
        token = self.current
        if token.text == "{":
            return self.literal()
        if token.kind != "word":
            raise self.fail("set expression")
        word = token.text
        if word in NAMES:
            self.advance()
            return Name(word)
        if word == "mod":
            self.advance()
            self.expect("(")
            modulus = self.integer("modulus")
            self.expect(",")
            residue = self.integer("residue")
            self.expect(")")
            return Mod(modulus, residue)
        if word == "per":
            self.advance()
            self.expect("(")
            prefix = self.bits(";", allow_empty=True)
            self.expect(";")
            period = self.bits(")", allow_empty=False)
            self.expect(")")
            return Per(prefix, period)
        if word == "complement":
            self.advance()
            self.expect("(")
            operand = self.expr()
            self.expect(")")
            return Complement(operand)
        if word in BINARY:
            self.advance()
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return BinaryOp(BINARY[word], left, right)
        raise self.fail("set expression")

    def literal(self) -> Literal:
        self.expect("{")
        elements = [self.integer("positive integer")]
        while self.current.text == ",":
            self.advance()
            elements.append(self.integer("positive integer"))
        self.expect("}")
        return Literal(tuple(elements))


def parse_set_expr(text: str) -> SetExpr:
    """
    Parse a set expression.

    Raises:
        ParseError: With line, column and what was expected
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation and rendering
# ---------------------------------------------------------------------------

def _evaluate(expr: SetExpr, limit: Optional[int]) -> PeriodicSet:
    if isinstance(expr, Name):
        return NAMES[expr.name]
    if isinstance(expr, Literal):
        return setalg.from_elements(expr.elements)
    if isinstance(expr, Mod):
        return setalg.residue_class(expr.modulus, expr.residue)
    if isinstance(expr, Per):
        return setalg.from_raw(len(expr.prefix), expr.prefix, len(expr.period), expr.period)
    if isinstance(expr, Complement):
        return setalg.set_op(SetOpKind.COMPLEMENT, _evaluate(expr.operand, limit), limit=limit)
    return setalg.set_op(
        expr.kind, _evaluate(expr.left, limit), _evaluate(expr.right, limit), limit=limit
    )


def eval_set_expr(expr: SetExpr, limit: Optional[int] = None) -> PeriodicSet:
    """
    Evaluate to a canonical PeriodicSet.

    Raises:
        EvalError: Wrapping PeriodLimitExceeded, DomainError (non-positive
            literal) or MalformedRepresentation (bad modulus)
    """
    try:
        return _evaluate(expr, limit)
    except JINFException as exc:
        raise EvalError(exc) from exc


def parse_set(text: str, limit: Optional[int] = None) -> PeriodicSet:
    """Parse and evaluate in one step."""
    return eval_set_expr(parse_set_expr(text), limit)


def render(expr: SetExpr) -> str:
    """Text of a syntax tree (no whitespace)."""
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Literal):
        return "{" + ",".join(str(n) for n in expr.elements) + "}"
    if isinstance(expr, Mod):
        return f"mod({expr.modulus},{expr.residue})"
    if isinstance(expr, Per):
        return f"per({expr.prefix};{expr.period})"
    if isinstance(expr, Complement):
        return f"complement({render(expr.operand)})"
    keyword = next(word for word, kind in BINARY.items() if kind is expr.kind)
    return f"{keyword}({render(expr.left)},{render(expr.right)})"


def _bits(bits) -> str:
    return "".join("1" if b else "0" for b in bits)


def canonical_expr(s: PeriodicSet) -> SetExpr:
    """Canonical syntax tree of a set."""
    for name, named in NAMES.items():
        if s == named:
            return Name(name)
    result = setalg.finiteness(s)
    if isinstance(result, setalg.Finite) and result.elements:
        return Literal(result.elements)
    return Per(_bits(s.prefix), _bits(s.period))


def render_set(s: PeriodicSet) -> str:
    """Canonical text of a set."""
    return render(canonical_expr(s))
