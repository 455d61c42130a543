"""Conditional statements: the term language, its syntax, and basic-form predicates.

A term is built from the constants T and F, atoms, and the ternary
conditional ``P <| Q |> R`` ("if Q then P else R"; Q is the central
condition).  Terms are immutable and compared structurally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import DuplicateAtomError, TermSyntaxError

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


# ---------------------------------------------------------------------------
# Atoms and atom sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Atom:
    """An atomic proposition, identified by its name.

    Names that match ``[a-z][a-z0-9_]*`` render bare; any other name
    renders double-quoted, so names may not contain the quote character.
    """

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("atom name must be nonempty")
        if '"' in self.name:
            raise ValueError("atom name may not contain a double quote")

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"

    def __str__(self) -> str:
        return format_atom(self)


def format_atom(a: Atom) -> str:
    """Render an atom bare when it is a plain identifier, quoted otherwise."""
    if _IDENT_RE.match(a.name):
        return a.name
    return f'"{a.name}"'


AtomSet = frozenset  # unordered finite set of Atom


@dataclass(frozen=True, slots=True)
class Sigma:
    """A duplicate-free, ordered sequence of atoms (an evaluation order).

    The empty sequence is allowed.
    """

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        if len(set(self.atoms)) != len(self.atoms):
            raise DuplicateAtomError(
                f"evaluation order contains a repeated atom: {self}"
            )

    @classmethod
    def of(cls, *names: str) -> Sigma:
        return cls(tuple(Atom(n) for n in names))

    def alphabet(self) -> AtomSet:
        return frozenset(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __str__(self) -> str:
        return " ".join(format_atom(a) for a in self.atoms) if self.atoms else "ε"

    def __repr__(self) -> str:
        return f"Sigma({self.atoms!r})"


SIGMA_EMPTY = Sigma(())


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TrueConst:
    def __repr__(self) -> str:
        return "T"


@dataclass(frozen=True, slots=True)
class FalseConst:
    def __repr__(self) -> str:
        return "F"


@dataclass(frozen=True, slots=True)
class AtomTerm:
    atom: Atom

    def __repr__(self) -> str:
        return format_atom(self.atom)


@dataclass(frozen=True, slots=True)
class Cond:
    """The conditional ``true_branch <| condition |> false_branch``."""

    true_branch: "Term"
    condition: "Term"
    false_branch: "Term"

    def __repr__(self) -> str:
        return render_term(self)


Term = Union[TrueConst, FalseConst, AtomTerm, Cond]

TRUE = TrueConst()
FALSE = FalseConst()


def atom(name: str) -> AtomTerm:
    """Shorthand for building an atom term from its name."""
    return AtomTerm(Atom(name))


# ---------------------------------------------------------------------------
# Concrete syntax
#
#   term    := 'T' | 'F' | atom | cond
#   cond    := operand '<|' operand '|>' operand
#   operand := 'T' | 'F' | atom | '(' cond ')'
#   atom    := [a-z][a-z0-9_]* | '"' any-non-quote-chars '"'
# ---------------------------------------------------------------------------

_TOK_TRUE = "TRUE"
_TOK_FALSE = "FALSE"
_TOK_ATOM = "ATOM"
_TOK_LPAREN = "("
_TOK_RPAREN = ")"
_TOK_LTRI = "<|"
_TOK_RTRI = "|>"


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "T":
            tokens.append(_Token(_TOK_TRUE, "T", i))
            i += 1
        elif c == "F":
            tokens.append(_Token(_TOK_FALSE, "F", i))
            i += 1
        elif c == "(":
            tokens.append(_Token(_TOK_LPAREN, "(", i))
            i += 1
        elif c == ")":
            tokens.append(_Token(_TOK_RPAREN, ")", i))
            i += 1
        elif text.startswith("<|", i):
            tokens.append(_Token(_TOK_LTRI, "<|", i))
            i += 2
        elif text.startswith("|>", i):
            tokens.append(_Token(_TOK_RTRI, "|>", i))
            i += 2
        elif c == '"':
            end = text.find('"', i + 1)
            if end < 0:
                raise TermSyntaxError("unterminated quoted atom", i)
            name = text[i + 1 : end]
            if not name:
                raise TermSyntaxError("empty quoted atom", i)
            tokens.append(_Token(_TOK_ATOM, name, i))
            i = end + 1
        else:
            m = re.match(r"[a-z][a-z0-9_]*", text[i:])
            if m is None:
                raise TermSyntaxError(f"unexpected character {c!r}", i)
            tokens.append(_Token(_TOK_ATOM, m.group(0), i))
            i += len(m.group(0))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], length: int):
        self.tokens = tokens
        self.i = 0
        self.length = length

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input", self.length)
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise TermSyntaxError(f"expected {kind!r}, found {tok.text!r}", tok.pos)
        return tok

    def operand(self) -> Term:
        tok = self.take()
        if tok.kind == _TOK_TRUE:
            return TRUE
        if tok.kind == _TOK_FALSE:
            return FALSE
        if tok.kind == _TOK_ATOM:
            return AtomTerm(Atom(tok.text))
        if tok.kind == _TOK_LPAREN:
            inner = self.cond()
            self.expect(_TOK_RPAREN)
            return inner
        raise TermSyntaxError(f"unexpected token {tok.text!r}", tok.pos)

    def cond(self) -> Cond:
        left = self.operand()
        tri = self.take()
        if tri.kind != _TOK_LTRI:
            raise TermSyntaxError(f"expected '<|', found {tri.text!r}", tri.pos)
        mid = self.operand()
        self.expect(_TOK_RTRI)
        right = self.operand()
        return Cond(left, mid, right)

    def term(self) -> Term:
        first = self.operand()
        nxt = self.peek()
        if nxt is not None and nxt.kind == _TOK_LTRI:
            self.take()
            mid = self.operand()
            self.expect(_TOK_RTRI)
            right = self.operand()
            first = Cond(first, mid, right)
        trailing = self.peek()
        if trailing is not None:
            raise TermSyntaxError(
                f"trailing input {trailing.text!r}", trailing.pos
            )
        return first


def parse_term(text: str) -> Term:
    """Parse the canonical text form of a term.

    Raises TermSyntaxError (with a character position) on malformed or
    empty input.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise TermSyntaxError("empty input", 0)
    return _Parser(tokens, len(text)).term()


def render_term(t: Term) -> str:
    """Render a term canonically: nested conditionals fully parenthesized,
    one space around ``<|`` and ``|>``."""
    if isinstance(t, TrueConst):
        return "T"
    if isinstance(t, FalseConst):
        return "F"
    if isinstance(t, AtomTerm):
        return format_atom(t.atom)
    parts = []
    for sub in (t.true_branch, t.condition, t.false_branch):
        s = render_term(sub)
        parts.append(f"({s})" if isinstance(sub, Cond) else s)
    return f"{parts[0]} <| {parts[1]} |> {parts[2]}"


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------


def dual(t: Term) -> Term:
    """Swap T and F and the two outer branches, recursively.

    An involution: ``dual(dual(t)) == t``.
    """
    if isinstance(t, TrueConst):
        return FALSE
    if isinstance(t, FalseConst):
        return TRUE
    if isinstance(t, AtomTerm):
        return t
    return Cond(dual(t.false_branch), dual(t.condition), dual(t.true_branch))


def alphabet(t: Term) -> AtomSet:
    """The set of atoms occurring anywhere in a term."""
    found: set[Atom] = set()
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, AtomTerm):
            found.add(x.atom)
        elif isinstance(x, Cond):
            stack.extend((x.true_branch, x.condition, x.false_branch))
    return frozenset(found)


def depth(t: Term) -> int:
    """Nesting depth: constants and atoms are 0, a conditional is one more
    than its deepest child (condition position included)."""
    if isinstance(t, Cond):
        return 1 + max(
            depth(t.true_branch), depth(t.condition), depth(t.false_branch)
        )
    return 0


def term_size(t: Term) -> int:
    """Number of nodes in a term, counted as a tree.

    Shared sub-objects (terms built by the normalizers reuse subterms) are
    counted once per occurrence, so this is the size of the rendered tree,
    not the object count.
    """
    sizes: dict[int, int] = {}

    def walk(x: Term) -> int:
        key = id(x)
        hit = sizes.get(key)
        if hit is not None:
            return hit
        if isinstance(x, Cond):
            n = 1 + walk(x.true_branch) + walk(x.condition) + walk(x.false_branch)
        else:
            n = 1
        sizes[key] = n
        return n

    return walk(t)


# ---------------------------------------------------------------------------
# Basic-form predicates
# ---------------------------------------------------------------------------


def is_basic_form(t: Term) -> bool:
    """True iff every central condition in the term is an atom."""
    if isinstance(t, (TrueConst, FalseConst)):
        return True
    if isinstance(t, AtomTerm):
        return False
    return (
        isinstance(t.condition, AtomTerm)
        and is_basic_form(t.true_branch)
        and is_basic_form(t.false_branch)
    )


def _central_atom(t: Term) -> Atom | None:
    if isinstance(t, Cond) and isinstance(t.condition, AtomTerm):
        return t.condition.atom
    return None


def is_rp_basic_form(t: Term) -> bool:
    """Basic form where a child repeating its parent's atom must have the
    shape ``Q <| a |> Q`` with identical outer arguments."""
    if isinstance(t, (TrueConst, FalseConst)):
        return True
    if not isinstance(t, Cond) or not isinstance(t.condition, AtomTerm):
        return False
    a = t.condition.atom
    for child in (t.true_branch, t.false_branch):
        if not is_rp_basic_form(child):
            return False
        if isinstance(child, Cond) and _central_atom(child) == a:
            if child.true_branch != child.false_branch:
                return False
    return True


def is_cr_basic_form(t: Term) -> bool:
    """Basic form in which no child repeats its parent's central atom."""
    if isinstance(t, (TrueConst, FalseConst)):
        return True
    if not isinstance(t, Cond) or not isinstance(t.condition, AtomTerm):
        return False
    a = t.condition.atom
    for child in (t.true_branch, t.false_branch):
        if not is_cr_basic_form(child):
            return False
        if isinstance(child, Cond) and _central_atom(child) == a:
            return False
    return True


def is_mem_basic_form(t: Term) -> bool:
    """Basic form in which no atom reoccurs anywhere below its own node."""
    if isinstance(t, (TrueConst, FalseConst)):
        return True
    if not isinstance(t, Cond) or not isinstance(t.condition, AtomTerm):
        return False
    a = t.condition.atom
    for child in (t.true_branch, t.false_branch):
        if not is_mem_basic_form(child):
            return False
        if a in alphabet(child):
            return False
    return True


def is_st_basic_form(t: Term, sigma: Sigma) -> bool:
    """True iff the term is a full binary tree layered in reverse order of
    ``sigma``: the last atom of sigma at the root, constants at the leaves."""
    return _is_st_over(t, sigma.atoms)


def _is_st_over(t: Term, atoms: tuple[Atom, ...]) -> bool:
    if not atoms:
        return isinstance(t, (TrueConst, FalseConst))
    if not isinstance(t, Cond) or _central_atom(t) != atoms[-1]:
        return False
    rest = atoms[:-1]
    return _is_st_over(t.true_branch, rest) and _is_st_over(t.false_branch, rest)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_basic_forms(
    alphabet_atoms: Sequence[Atom], max_depth: int
) -> list[Term]:
    """All basic forms over the given atoms with depth <= max_depth.

    Deterministic order: ascending depth, then lexicographic on the
    canonical rendering.  The alphabet must be duplicate-free.
    """
    atoms = tuple(alphabet_atoms)
    if len(set(atoms)) != len(atoms):
        raise DuplicateAtomError("enumeration alphabet contains a repeated atom")
    # A form of depth <= d is T, F, or a conditional whose children have
    # depth <= d-1; distinct (child, atom, child) triples are distinct terms,
    # so each layer is duplicate-free by construction.
    layer: list[Term] = [TRUE, FALSE]
    for _ in range(max_depth):
        grown: list[Term] = [TRUE, FALSE]
        for a in atoms:
            cond_term = AtomTerm(a)
            for p in layer:
                for q in layer:
                    grown.append(Cond(p, cond_term, q))
        layer = grown
    return sorted(layer, key=lambda term: (depth(term), render_term(term)))


def iter_atoms_sorted(atom_set: Iterable[Atom]) -> list[Atom]:
    """Atoms in deterministic (name) order."""
    return sorted(atom_set, key=lambda a: a.name)
