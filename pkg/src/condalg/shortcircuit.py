"""Short-circuit propositional connectives and effectful atom oracles.

``!``, ``&&`` and ``||`` desugar into conditionals: ``p && q`` runs ``p``
first and runs ``q`` only when ``p`` held, so with effectful atoms the
connectives are order- and repetition-sensitive.  The register oracle
supplies such atoms: ``(n=e)`` assigns and answers true, ``(e==e')``
compares.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import OracleError, TermSyntaxError
from .terms import Atom, AtomTerm, Cond, FALSE, TRUE, Term, format_atom

# ---------------------------------------------------------------------------
# Expression language
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SclTrue:
    def __repr__(self) -> str:
        return "true"


@dataclass(frozen=True, slots=True)
class SclFalse:
    def __repr__(self) -> str:
        return "false"


@dataclass(frozen=True, slots=True)
class SclAtom:
    atom: Atom

    def __repr__(self) -> str:
        return format_atom(self.atom)


@dataclass(frozen=True, slots=True)
class SclNot:
    operand: "SclExpr"

    def __repr__(self) -> str:
        return render_sc(self)


@dataclass(frozen=True, slots=True)
class SclAnd:
    left: "SclExpr"
    right: "SclExpr"

    def __repr__(self) -> str:
        return render_sc(self)


@dataclass(frozen=True, slots=True)
class SclOr:
    left: "SclExpr"
    right: "SclExpr"

    def __repr__(self) -> str:
        return render_sc(self)


SclExpr = Union[SclTrue, SclFalse, SclAtom, SclNot, SclAnd, SclOr]

SC_TRUE = SclTrue()
SC_FALSE = SclFalse()


# Tokenizer shared by the connective grammar: `!` binds tightest, `&&`
# over `||`, both left-associative; atoms as in the term grammar.

_SC_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<and>&&) | (?P<or>\|\|) | (?P<not>!) |
        (?P<lparen>\() | (?P<rparen>\)) |
        (?P<quoted>"[^"]*") | (?P<ident>[a-z][a-z0-9_]*)
    )""",
    re.VERBOSE,
)

_KEYWORDS = {"true": SC_TRUE, "false": SC_FALSE}


def _sc_tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _SC_TOKEN_RE.match(text, pos)
        if m is None:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _ScParser:
    def __init__(self, tokens: list[tuple[str, str, int]], length: int):
        self.tokens = tokens
        self.i = 0
        self.length = length

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input", self.length)
        self.i += 1
        return tok

    def parse_or(self) -> SclExpr:
        expr = self.parse_and()
        while (tok := self.peek()) is not None and tok[0] == "or":
            self.take()
            expr = SclOr(expr, self.parse_and())
        return expr

    def parse_and(self) -> SclExpr:
        expr = self.parse_unary()
        while (tok := self.peek()) is not None and tok[0] == "and":
            self.take()
            expr = SclAnd(expr, self.parse_unary())
        return expr

    def parse_unary(self) -> SclExpr:
        tok = self.take()
        kind, text, pos = tok
        if kind == "not":
            return SclNot(self.parse_unary())
        if kind == "lparen":
            inner = self.parse_or()
            closing = self.take()
            if closing[0] != "rparen":
                raise TermSyntaxError("expected ')'", closing[2])
            return inner
        if kind == "quoted":
            name = text[1:-1]
            if not name:
                raise TermSyntaxError("empty quoted atom", pos)
            return SclAtom(Atom(name))
        if kind == "ident":
            if text in _KEYWORDS:
                return _KEYWORDS[text]
            return SclAtom(Atom(text))
        raise TermSyntaxError(f"unexpected token {text!r}", pos)


def parse_sc(text: str) -> SclExpr:
    """Parse a short-circuit expression (``!``, ``&&``, ``||``,
    ``true``/``false``, atoms, parentheses)."""
    tokens = _sc_tokenize(text)
    if not tokens:
        raise TermSyntaxError("empty input", 0)
    parser = _ScParser(tokens, len(text))
    expr = parser.parse_or()
    trailing = parser.peek()
    if trailing is not None:
        raise TermSyntaxError(f"trailing input {trailing[1]!r}", trailing[2])
    return expr


def render_sc(e: SclExpr) -> str:
    """Render an expression with minimal parentheses."""
    if isinstance(e, SclTrue):
        return "true"
    if isinstance(e, SclFalse):
        return "false"
    if isinstance(e, SclAtom):
        return format_atom(e.atom)
    if isinstance(e, SclNot):
        inner = render_sc(e.operand)
        if isinstance(e.operand, (SclAnd, SclOr)):
            inner = f"({inner})"
        return f"!{inner}"
    if isinstance(e, SclAnd):
        left = render_sc(e.left)
        if isinstance(e.left, SclOr):
            left = f"({left})"
        right = render_sc(e.right)
        if isinstance(e.right, (SclAnd, SclOr)):
            right = f"({right})"
        return f"{left} && {right}"
    left = render_sc(e.left)
    right = render_sc(e.right)
    if isinstance(e.right, SclOr):
        right = f"({right})"
    return f"{left} || {right}"


def desugar(e: SclExpr) -> Term:
    """Rewrite the connectives into conditionals.

    ``p && q`` becomes ``q <| p |> F`` and ``!p`` becomes ``F <| p |> T``;
    ``p || q`` becomes ``T <| p |> q``, the dual of ``&&``.
    """
    if isinstance(e, SclTrue):
        return TRUE
    if isinstance(e, SclFalse):
        return FALSE
    if isinstance(e, SclAtom):
        return AtomTerm(e.atom)
    if isinstance(e, SclNot):
        return Cond(FALSE, desugar(e.operand), TRUE)
    if isinstance(e, SclAnd):
        return Cond(desugar(e.right), desugar(e.left), FALSE)
    return Cond(TRUE, desugar(e.left), desugar(e.right))


# ---------------------------------------------------------------------------
# Register oracle
# ---------------------------------------------------------------------------

_REGISTER_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def _expr_tokens(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        c = text[pos]
        if c.isspace():
            pos += 1
        elif c in "+-()":
            tokens.append((c, c))
            pos += 1
        elif c.isdigit():
            m = re.match(r"[0-9]+", text[pos:])
            assert m is not None
            tokens.append(("int", m.group(0)))
            pos += len(m.group(0))
        else:
            m = re.match(r"[a-z][a-z0-9_]*", text[pos:])
            if m is None:
                raise OracleError(f"bad character {c!r} in register expression")
            tokens.append(("name", m.group(0)))
            pos += len(m.group(0))
    return tokens


class _ExprEval:
    """Evaluator for register expressions: integers, register names,
    binary + and -, parentheses."""

    def __init__(self, tokens: list[tuple[str, str]], state: Mapping[str, int]):
        self.tokens = tokens
        self.state = state
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise OracleError("register expression ends unexpectedly")
        self.i += 1
        return tok

    def sum_expr(self) -> int:
        value = self.primary()
        while (tok := self.peek()) is not None and tok[0] in "+-":
            self.take()
            rhs = self.primary()
            value = value + rhs if tok[0] == "+" else value - rhs
        return value

    def primary(self) -> int:
        kind, text = self.take()
        if kind == "int":
            return int(text)
        if kind == "name":
            if text not in self.state:
                raise OracleError(f"unknown register {text!r}")
            return self.state[text]
        if kind == "(":
            value = self.sum_expr()
            if self.take()[0] != ")":
                raise OracleError("expected ')' in register expression")
            return value
        raise OracleError(f"unexpected {text!r} in register expression")


def _eval_register_expr(text: str, state: Mapping[str, int]) -> int:
    evaluator = _ExprEval(_expr_tokens(text), state)
    value = evaluator.sum_expr()
    if evaluator.peek() is not None:
        raise OracleError(f"trailing input in register expression: {text!r}")
    return value


class RegisterOracle:
    """Stateful oracle over integer registers.

    Recognizes two atom shapes: ``(r=expr)`` assigns the expression's
    value to register ``r`` and answers true; ``(expr==expr)`` answers
    whether the two sides are equal.  Anything else is refused.  Single
    owner: do not share one oracle across concurrent evaluations.
    """

    def __init__(self, initial: Mapping[str, int]):
        for name in initial:
            if not _REGISTER_RE.match(name):
                raise OracleError(f"bad register name {name!r}")
        self.state: dict[str, int] = dict(initial)

    def __call__(self, atom: Atom) -> bool:
        text = atom.name
        if not (text.startswith("(") and text.endswith(")")) or len(text) < 3:
            raise OracleError(f"atom {text!r} is not a register query")
        inner = text[1:-1]
        if "==" in inner:
            left, _, right = inner.partition("==")
            return _eval_register_expr(left, self.state) == _eval_register_expr(
                right, self.state
            )
        if "=" in inner:
            target, _, expr = inner.partition("=")
            target = target.strip()
            if not _REGISTER_RE.match(target):
                raise OracleError(f"bad assignment target in atom {text!r}")
            if target not in self.state:
                raise OracleError(f"unknown register {target!r}")
            self.state[target] = _eval_register_expr(expr, self.state)
            return True
        raise OracleError(f"atom {text!r} is neither an assignment nor a comparison")


def make_register_oracle(initial: Mapping[str, int]) -> RegisterOracle:
    """Build a fresh register oracle; all registers an evaluation touches
    must already be present in ``initial``."""
    return RegisterOracle(initial)


def parse_register_state(text: str) -> dict[str, int]:
    """Parse comma-separated ``name=int`` assignments, e.g. ``n=0,m=3``."""
    state: dict[str, int] = {}
    if not text.strip():
        return state
    for chunk in text.split(","):
        name, sep, value = chunk.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or not _REGISTER_RE.match(name):
            raise OracleError(f"bad register assignment {chunk!r}")
        try:
            state[name] = int(value)
        except ValueError:
            raise OracleError(f"bad integer in register assignment {chunk!r}") from None
    return state
