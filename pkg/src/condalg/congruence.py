"""Deciding the five valuation congruences, plus the classical-logic bridge.

``equivalent`` compares transformed evaluation trees (the semantic route);
``normal_form`` exposes the syntactic route.  The two must agree — the
test suite exercises that agreement exhaustively rather than assuming it.

The module also carries the equational systems (CP and its extensions) as
instantiable schemes, a truth-table generator for the propositional
translation of the conditional, and the built-in witnesses separating the
congruence lattice's adjacent levels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .errors import CondAlgError, InstanceBudgetError
from .evaltrees import EvalTree, se
from .normalform import bf, cbf, check_alphabet, e_sigma, mbf, rpbf, sbf
from .terms import (
    Atom,
    AtomTerm,
    Cond,
    FALSE,
    FalseConst,
    Sigma,
    TRUE,
    Term,
    TrueConst,
    alphabet,
    format_atom,
    iter_atoms_sorted,
)
from .treetransform import cse, mse, rpse, sse

MAX_SIGMA_FOR_TABLES = 16


# ---------------------------------------------------------------------------
# Congruence kinds
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CongruenceKind:
    """One of the five congruences; the static one carries its atom order."""

    tag: str
    sigma: Sigma | None = None

    def __post_init__(self) -> None:
        if self.tag not in ("free", "rp", "cr", "mem", "static"):
            raise ValueError(f"unknown congruence tag: {self.tag!r}")
        if (self.tag == "static") != (self.sigma is not None):
            raise ValueError("exactly the static congruence carries a sigma")

    def __str__(self) -> str:
        if self.sigma is not None:
            return f"static({''.join(format_atom(a) for a in self.sigma)})"
        return self.tag


FREE = CongruenceKind("free")
RP = CongruenceKind("rp")
CR = CongruenceKind("cr")
MEM = CongruenceKind("mem")


def static(sigma: Sigma) -> CongruenceKind:
    return CongruenceKind("static", sigma)


def transformed_tree(t: Term, kind: CongruenceKind) -> EvalTree:
    """The evaluation tree whose equality decides ``kind``."""
    if kind.tag == "free":
        return se(t)
    if kind.tag == "rp":
        return rpse(t)
    if kind.tag == "cr":
        return cse(t)
    if kind.tag == "mem":
        return mse(t)
    assert kind.sigma is not None
    return sse(kind.sigma, t)


def normal_form(t: Term, kind: CongruenceKind) -> Term:
    """The syntactic normal form deciding ``kind``."""
    if kind.tag == "free":
        return bf(t)
    if kind.tag == "rp":
        return rpbf(t)
    if kind.tag == "cr":
        return cbf(t)
    if kind.tag == "mem":
        return mbf(t)
    assert kind.sigma is not None
    return sbf(kind.sigma, t)


def equivalent(p: Term, q: Term, kind: CongruenceKind) -> bool:
    """Decide the congruence by comparing transformed evaluation trees."""
    return transformed_tree(p, kind) == transformed_tree(q, kind)


# ---------------------------------------------------------------------------
# Propositional translation and truth tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PTrue:
    pass


@dataclass(frozen=True, slots=True)
class PFalse:
    pass


@dataclass(frozen=True, slots=True)
class PAtom:
    atom: Atom


@dataclass(frozen=True, slots=True)
class PNot:
    operand: "PropFormula"


@dataclass(frozen=True, slots=True)
class PAnd:
    left: "PropFormula"
    right: "PropFormula"


@dataclass(frozen=True, slots=True)
class POr:
    left: "PropFormula"
    right: "PropFormula"


PropFormula = Union[PTrue, PFalse, PAtom, PNot, PAnd, POr]

P_TRUE = PTrue()
P_FALSE = PFalse()


def to_propositional(t: Term) -> PropFormula:
    """Translate a conditional into two-valued logic, with no
    simplification: ``p <| q |> r`` becomes ``(p ∧ q) ∨ (¬q ∧ r)``."""
    if isinstance(t, TrueConst):
        return P_TRUE
    if isinstance(t, FalseConst):
        return P_FALSE
    if isinstance(t, AtomTerm):
        return PAtom(t.atom)
    p = to_propositional(t.true_branch)
    q = to_propositional(t.condition)
    r = to_propositional(t.false_branch)
    return POr(PAnd(p, q), PAnd(PNot(q), r))


def eval_formula(f: PropFormula, assignment: Mapping[Atom, bool]) -> bool:
    """Classical evaluation under a total assignment of the atoms."""
    if isinstance(f, PTrue):
        return True
    if isinstance(f, PFalse):
        return False
    if isinstance(f, PAtom):
        return assignment[f.atom]
    if isinstance(f, PNot):
        return not eval_formula(f.operand, assignment)
    if isinstance(f, PAnd):
        return eval_formula(f.left, assignment) and eval_formula(f.right, assignment)
    return eval_formula(f.left, assignment) or eval_formula(f.right, assignment)


@dataclass(frozen=True, slots=True)
class TruthTable:
    """Rows of (assignment aligned with sigma, classical value); the first
    row is all-true and the leftmost atom varies slowest."""

    sigma: Sigma
    rows: tuple[tuple[tuple[bool, ...], bool], ...]


def truth_table(t: Term, sigma: Sigma) -> TruthTable:
    """Tabulate the propositional translation of ``t`` over ``sigma``."""
    check_alphabet(t, sigma, "truth_table")
    if len(sigma) > MAX_SIGMA_FOR_TABLES:
        raise ValueError(
            f"truth tables are limited to {MAX_SIGMA_FOR_TABLES} atoms, got {len(sigma)}"
        )
    formula = to_propositional(t)
    rows = []
    for values in itertools.product((True, False), repeat=len(sigma)):
        assignment = dict(zip(sigma.atoms, values))
        rows.append((values, eval_formula(formula, assignment)))
    return TruthTable(sigma, tuple(rows))


def render_truth_table(table: TruthTable, fmt: str = "text", *, title: str = "value") -> str:
    """Render a table as aligned text (``T``/``F`` cells) or as JSON."""
    if fmt == "text":
        names = [format_atom(a) for a in table.sigma]
        widths = [len(n) for n in names]
        lines = [" ".join(names) + " | " + title]
        for values, result in table.rows:
            cells = " ".join(
                ("T" if v else "F").ljust(w) for v, w in zip(values, widths)
            )
            lines.append(f"{cells} | {'T' if result else 'F'}")
        return "\n".join(lines)
    if fmt == "json":
        import json

        payload = {
            "sigma": [a.name for a in table.sigma],
            "rows": [
                {"assignment": list(values), "value": result}
                for values, result in table.rows
            ],
        }
        return json.dumps(payload, separators=(",", ":"))
    raise ValueError(f"unknown table format: {fmt!r}")


def static_matches_tautology(p: Term, q: Term, sigma: Sigma) -> bool:
    """Whether the static-congruence verdict for ``p`` and ``q`` agrees
    with their truth tables over ``sigma`` being identical.

    This should always return True; it exists to expose a counterexample
    if the two routes ever diverge.
    """
    by_trees = equivalent(p, q, static(sigma))
    by_tables = truth_table(p, sigma).rows == truth_table(q, sigma).rows
    return by_trees == by_tables


# ---------------------------------------------------------------------------
# Equational systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomScheme:
    """An equation scheme over term variables, optionally parameterized by
    an atom (the scheme is instantiated at every atom of the pool) or by
    the evaluation order of the congruence being checked."""

    name: str
    variables: tuple[str, ...]
    build: Callable[..., tuple[Term, Term]]
    needs_atom: bool = False
    needs_sigma: bool = False

    def arity(self) -> int:
        return len(self.variables)


def _cp1(x, y):
    return Cond(x, TRUE, y), x


def _cp2(x, y):
    return Cond(x, FALSE, y), y


def _cp3(x):
    return Cond(TRUE, x, FALSE), x


def _cp4(x, y, z, u, v):
    lhs = Cond(x, Cond(y, z, u), v)
    rhs = Cond(Cond(x, y, v), z, Cond(x, u, v))
    return lhs, rhs


def _cprp1(a, x, y, z):
    return Cond(Cond(x, a, y), a, z), Cond(Cond(x, a, x), a, z)


def _cprp2(a, x, y, z):
    return Cond(x, a, Cond(y, a, z)), Cond(x, a, Cond(z, a, z))


def _cpcr1(a, x, y, z):
    return Cond(Cond(x, a, y), a, z), Cond(x, a, z)


def _cpcr2(a, x, y, z):
    return Cond(x, a, Cond(y, a, z)), Cond(x, a, z)


def _cpmem(x, y, z, u, v, w):
    lhs = Cond(x, y, Cond(z, u, Cond(v, y, w)))
    rhs = Cond(x, y, Cond(z, u, w))
    return lhs, rhs


def _cpm1(x, y, z, u, v, w):
    lhs = Cond(Cond(z, u, Cond(w, y, v)), y, x)
    rhs = Cond(Cond(z, u, w), y, x)
    return lhs, rhs


def _cpm2(x, y, z, u, v, w):
    lhs = Cond(x, y, Cond(Cond(v, y, w), u, z))
    rhs = Cond(x, y, Cond(w, u, z))
    return lhs, rhs


def _cpm3(x, y, z, u, v, w):
    lhs = Cond(Cond(Cond(w, y, v), u, z), y, x)
    rhs = Cond(Cond(w, u, z), y, x)
    return lhs, rhs


def _contr1(x, y, v, w):
    return Cond(x, y, Cond(v, y, w)), Cond(x, y, w)


def _contr2(x, y, v, w):
    return Cond(Cond(w, y, v), y, x), Cond(w, y, x)


def _cpstat(x, y, z, u, v):
    lhs = Cond(Cond(x, y, z), u, v)
    rhs = Cond(Cond(x, u, v), y, Cond(z, u, v))
    return lhs, rhs


def _cps(x):
    return Cond(FALSE, x, FALSE), FALSE


def _swap(x, y):
    return Cond(x, y, FALSE), Cond(y, x, FALSE)


def _both_branches(x, y):
    return x, Cond(x, y, x)


def _static_prefix(sigma, x):
    return x, Cond(TRUE, e_sigma(sigma), x)


AXIOMS: dict[str, AxiomScheme] = {
    scheme.name: scheme
    for scheme in [
        AxiomScheme("CP1", ("x", "y"), _cp1),
        AxiomScheme("CP2", ("x", "y"), _cp2),
        AxiomScheme("CP3", ("x",), _cp3),
        AxiomScheme("CP4", ("x", "y", "z", "u", "v"), _cp4),
        AxiomScheme("CPrp1", ("x", "y", "z"), _cprp1, needs_atom=True),
        AxiomScheme("CPrp2", ("x", "y", "z"), _cprp2, needs_atom=True),
        AxiomScheme("CPcr1", ("x", "y", "z"), _cpcr1, needs_atom=True),
        AxiomScheme("CPcr2", ("x", "y", "z"), _cpcr2, needs_atom=True),
        AxiomScheme("CPmem", ("x", "y", "z", "u", "v", "w"), _cpmem),
        AxiomScheme("CPm1", ("x", "y", "z", "u", "v", "w"), _cpm1),
        AxiomScheme("CPm2", ("x", "y", "z", "u", "v", "w"), _cpm2),
        AxiomScheme("CPm3", ("x", "y", "z", "u", "v", "w"), _cpm3),
        AxiomScheme("contr1", ("x", "y", "v", "w"), _contr1),
        AxiomScheme("contr2", ("x", "y", "v", "w"), _contr2),
        AxiomScheme("CPstat", ("x", "y", "z", "u", "v"), _cpstat),
        AxiomScheme("CPs", ("x",), _cps),
        AxiomScheme("swap", ("x", "y"), _swap),
        AxiomScheme("both-branches", ("x", "y"), _both_branches),
        AxiomScheme("static-prefix", ("x",), _static_prefix, needs_sigma=True),
    ]
}

# Each system lists only the laws it adds; the checker is pointed at any
# congruence, so inherited laws are covered by checking the weaker system
# under the stronger congruence.
SYSTEMS: dict[str, tuple[str, ...]] = {
    "CP": ("CP1", "CP2", "CP3", "CP4"),
    "CPrp": ("CPrp1", "CPrp2"),
    "CPcr": ("CPcr1", "CPcr2"),
    "CPmem": ("CPmem", "CPm1", "CPm2", "CPm3", "contr1", "contr2"),
    "CPs": ("CPs", "swap", "both-branches", "static-prefix"),
    "CPst": ("CPstat", "contr2"),
}

# Lattice height of each system / congruence; a system's laws are sound
# under every congruence at its own height or above.
SYSTEM_LEVEL = {"CP": 0, "CPrp": 1, "CPcr": 2, "CPmem": 3, "CPs": 4, "CPst": 4}
KIND_LEVEL = {"free": 0, "rp": 1, "cr": 2, "mem": 3, "static": 4}

DEFAULT_INSTANCE_BUDGET = 200_000


@dataclass(frozen=True)
class AxiomInstanceReport:
    """One instantiated equation and its verdict under a congruence."""

    axiom_name: str
    substitution: tuple[tuple[str, Term], ...]
    holds: bool

    def substitution_map(self) -> dict[str, Term]:
        return dict(self.substitution)


def check_axioms(
    system: str,
    pool: Sequence[Term],
    kind: CongruenceKind,
    *,
    instance_budget: int = DEFAULT_INSTANCE_BUDGET,
) -> list[AxiomInstanceReport]:
    """Instantiate every law of ``system`` with every substitution from
    ``pool`` (full cross-product; atom schemes additionally range over the
    pool's alphabet) and record whether each instance holds under ``kind``.

    Raises InstanceBudgetError naming the first law whose cross-product
    would exceed ``instance_budget``.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown axiom system: {system!r}")
    if not pool:
        raise ValueError("substitution pool must be nonempty")
    pool_atoms = iter_atoms_sorted(
        {a for term in pool for a in alphabet(term)}
    )
    sigma = kind.sigma if kind.sigma is not None else Sigma(tuple(pool_atoms))

    reports: list[AxiomInstanceReport] = []
    for name in SYSTEMS[system]:
        scheme = AXIOMS[name]
        count = len(pool) ** scheme.arity()
        if scheme.needs_atom:
            count *= max(len(pool_atoms), 1)
        if count > instance_budget:
            raise InstanceBudgetError(
                f"axiom {name}: {count} instances exceed the budget of {instance_budget}"
            )
        atom_choices: list[tuple] = [()]
        if scheme.needs_atom:
            atom_choices = [(AtomTerm(a),) for a in pool_atoms]
        sigma_prefix: tuple = (sigma,) if scheme.needs_sigma else ()
        for atom_args in atom_choices:
            for values in itertools.product(pool, repeat=scheme.arity()):
                lhs, rhs = scheme.build(*sigma_prefix, *atom_args, *values)
                holds = equivalent(lhs, rhs, kind)
                substitution = tuple(zip(scheme.variables, values))
                if atom_args:
                    substitution = (("a", atom_args[0]),) + substitution
                reports.append(AxiomInstanceReport(name, substitution, holds))
    return reports


# ---------------------------------------------------------------------------
# Separation witnesses
# ---------------------------------------------------------------------------

Witness = tuple[Term, Term, CongruenceKind, CongruenceKind]


def separation_witnesses() -> list[Witness]:
    """Pairs showing each lattice inclusion is proper: each pair is
    inequivalent under the first (finer) kind and equivalent under the
    second (coarser) kind.  Re-verified on every call."""
    a = AtomTerm(Atom("a"))
    b = AtomTerm(Atom("b"))
    sigma_a = Sigma((Atom("a"),))
    witnesses: list[Witness] = [
        (Cond(TRUE, a, a), Cond(TRUE, a, Cond(FALSE, a, FALSE)), FREE, RP),
        (Cond(Cond(TRUE, a, FALSE), a, FALSE), Cond(TRUE, a, FALSE), RP, CR),
        (
            Cond(TRUE, a, Cond(FALSE, b, Cond(TRUE, a, FALSE))),
            Cond(TRUE, a, Cond(FALSE, b, FALSE)),
            CR,
            MEM,
        ),
        (Cond(FALSE, a, FALSE), FALSE, MEM, static(sigma_a)),
    ]
    for p, q, finer, coarser in witnesses:
        if equivalent(p, q, finer) or not equivalent(p, q, coarser):
            raise CondAlgError(
                f"separation witness failed verification: {p!r} vs {q!r}"
            )
    return witnesses
