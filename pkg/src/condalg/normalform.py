"""Syntactic normal forms for each valuation congruence.

``bf`` rewrites any term into a basic form; ``rpbf``, ``cbf`` and ``mbf``
post-process that basic form for the repetition-proof, contractive and
memorizing congruences; ``sbf`` layers a term over a fixed evaluation
order for the static congruence.

Substitution duplicates branches, so outputs can grow exponentially.  All
normalizers are guarded by a node budget (default one million nodes) and
raise NodeBudgetError instead of exhausting memory.
"""

from __future__ import annotations

from enum import Enum

from .errors import AlphabetCoverageError, NodeBudgetError, NotBasicFormError
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
    is_basic_form,
    render_term,
)

DEFAULT_NODE_BUDGET = 1_000_000


class Side(Enum):
    """Selects one of a dual pair of auxiliary transformations."""

    TRUE = "true"
    FALSE = "false"


class _Budget:
    __slots__ = ("remaining", "limit")

    def __init__(self, limit: int):
        self.limit = limit
        self.remaining = limit

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise NodeBudgetError(
                f"normal form exceeds the node budget of {self.limit}"
            )


def _require_basic(p: Term, func: str) -> None:
    if not is_basic_form(p):
        raise NotBasicFormError(
            f"{func} is defined on basic forms only, got: {render_term(p)}"
        )


# ---------------------------------------------------------------------------
# Basic forms: leaf substitution and bf
# ---------------------------------------------------------------------------


def _subst(p: Term, for_true: Term, for_false: Term) -> Term:
    if isinstance(p, TrueConst):
        return for_true
    if isinstance(p, FalseConst):
        return for_false
    return Cond(
        _subst(p.true_branch, for_true, for_false),
        p.condition,
        _subst(p.false_branch, for_true, for_false),
    )


def subst_tf(p: Term, for_true: Term, for_false: Term) -> Term:
    """Replace the T leaves of a basic form with ``for_true`` and its F
    leaves with ``for_false``.  All three arguments must be basic forms;
    the result is then a basic form."""
    _require_basic(p, "subst_tf")
    _require_basic(for_true, "subst_tf")
    _require_basic(for_false, "subst_tf")
    return _subst(p, for_true, for_false)


def _bf(t: Term, budget: int) -> tuple[Term, int, int, int]:
    # Returns (basic form, node count, T-leaf count, F-leaf count); the
    # counts are computed arithmetically so oversized results are rejected
    # before they are built.
    if isinstance(t, TrueConst):
        return TRUE, 1, 1, 0
    if isinstance(t, FalseConst):
        return FALSE, 1, 0, 1
    if isinstance(t, AtomTerm):
        return Cond(TRUE, t, FALSE), 3, 1, 1
    bp, sp, tp, fp = _bf(t.true_branch, budget)
    bq, sq, tq, fq = _bf(t.condition, budget)
    br, sr, tr, fr = _bf(t.false_branch, budget)
    size = (sq - tq - fq) + tq * sp + fq * sr
    if size > budget:
        raise NodeBudgetError(
            f"basic form would have {size} nodes, exceeding the budget of {budget}"
        )
    return _subst(bq, bp, br), size, tq * tp + fq * tr, tq * fp + fq * fr


def bf(t: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """The basic form of a term: constants stay, an atom becomes
    ``T <| a |> F``, and a conditional substitutes its branches' basic
    forms into its condition's."""
    return _bf(t, node_budget)[0]


# ---------------------------------------------------------------------------
# Repetition-proof normalizer
# ---------------------------------------------------------------------------


def _rp_true(a: Atom, p: Term, budget: _Budget) -> Term:
    # Along the true side, a repeated atom's branches collapse to two
    # copies of the transformed true branch.
    if not isinstance(p, Cond):
        return p
    if p.condition.atom == a:
        sub = _rp_true(a, p.true_branch, budget)
        budget.spend()
        return Cond(sub, p.condition, sub)
    return p


def _rp_false(a: Atom, p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    if p.condition.atom == a:
        sub = _rp_false(a, p.false_branch, budget)
        budget.spend()
        return Cond(sub, p.condition, sub)
    return p


def rp_aux(side: Side, a: Atom, p: Term) -> Term:
    """The one-sided helper of the repetition-proof normalizer.  Rewrites a
    basic form whose central atom repeats ``a`` into the duplicated shape;
    anything else is returned unchanged."""
    _require_basic(p, "rp_aux")
    budget = _Budget(DEFAULT_NODE_BUDGET)
    if side is Side.TRUE:
        return _rp_true(a, p, budget)
    return _rp_false(a, p, budget)


def _rpf(p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    a = p.condition.atom
    left = _rpf(_rp_true(a, p.true_branch, budget), budget)
    right = _rpf(_rp_false(a, p.false_branch, budget), budget)
    if left is p.true_branch and right is p.false_branch:
        return p
    budget.spend()
    return Cond(left, p.condition, right)


def rpf(p: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Rewrite a basic form into a repetition-proof basic form."""
    _require_basic(p, "rpf")
    return _rpf(p, _Budget(node_budget))


def rpbf(t: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Repetition-proof normal form of an arbitrary term."""
    return _rpf(_bf(t, node_budget)[0], _Budget(node_budget))


# ---------------------------------------------------------------------------
# Contractive normalizer
# ---------------------------------------------------------------------------


def _cr_true(a: Atom, p: Term) -> Term:
    while isinstance(p, Cond) and p.condition.atom == a:
        p = p.true_branch
    return p


def _cr_false(a: Atom, p: Term) -> Term:
    while isinstance(p, Cond) and p.condition.atom == a:
        p = p.false_branch
    return p


def cr_aux(side: Side, a: Atom, p: Term) -> Term:
    """The one-sided helper of the contractive normalizer: strips repeated
    central occurrences of ``a`` off a basic form."""
    _require_basic(p, "cr_aux")
    return _cr_true(a, p) if side is Side.TRUE else _cr_false(a, p)


def _cf(p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    a = p.condition.atom
    left = _cf(_cr_true(a, p.true_branch), budget)
    right = _cf(_cr_false(a, p.false_branch), budget)
    if left is p.true_branch and right is p.false_branch:
        return p
    budget.spend()
    return Cond(left, p.condition, right)


def cf(p: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Rewrite a basic form into a contractive basic form."""
    _require_basic(p, "cf")
    return _cf(p, _Budget(node_budget))


def cbf(t: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Contractive normal form of an arbitrary term."""
    return _cf(_bf(t, node_budget)[0], _Budget(node_budget))


# ---------------------------------------------------------------------------
# Memorizing normalizer
# ---------------------------------------------------------------------------


def _mem_true(a: Atom, p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    if p.condition.atom == a:
        return _mem_true(a, p.true_branch, budget)
    left = _mem_true(a, p.true_branch, budget)
    right = _mem_true(a, p.false_branch, budget)
    if left is p.true_branch and right is p.false_branch:
        return p
    budget.spend()
    return Cond(left, p.condition, right)


def _mem_false(a: Atom, p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    if p.condition.atom == a:
        return _mem_false(a, p.false_branch, budget)
    left = _mem_false(a, p.true_branch, budget)
    right = _mem_false(a, p.false_branch, budget)
    if left is p.true_branch and right is p.false_branch:
        return p
    budget.spend()
    return Cond(left, p.condition, right)


def mem_aux(side: Side, a: Atom, p: Term) -> Term:
    """The one-sided helper of the memorizing normalizer: resolves every
    occurrence of ``a`` in a basic form to the chosen side."""
    _require_basic(p, "mem_aux")
    budget = _Budget(DEFAULT_NODE_BUDGET)
    if side is Side.TRUE:
        return _mem_true(a, p, budget)
    return _mem_false(a, p, budget)


def _mf(p: Term, budget: _Budget) -> Term:
    if not isinstance(p, Cond):
        return p
    a = p.condition.atom
    left = _mf(_mem_true(a, p.true_branch, budget), budget)
    right = _mf(_mem_false(a, p.false_branch, budget), budget)
    if left is p.true_branch and right is p.false_branch:
        return p
    budget.spend()
    return Cond(left, p.condition, right)


def mf(p: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Rewrite a basic form into a memorizing basic form."""
    _require_basic(p, "mf")
    return _mf(p, _Budget(node_budget))


def mbf(t: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Memorizing normal form of an arbitrary term."""
    return _mf(_bf(t, node_budget)[0], _Budget(node_budget))


# ---------------------------------------------------------------------------
# Static normalizer
# ---------------------------------------------------------------------------


def e_sigma(sigma: Sigma) -> Term:
    """The all-F term layered in reverse order of ``sigma``; the empty
    order gives F.  T does not occur in it."""
    term: Term = FALSE
    for a in sigma.atoms:
        term = Cond(term, AtomTerm(a), term)
    return term


def check_alphabet(t: Term, sigma: Sigma, func: str) -> None:
    """Raise AlphabetCoverageError if ``t`` uses atoms outside ``sigma``."""
    missing = alphabet(t) - sigma.alphabet()
    if missing:
        names = ", ".join(sorted(a.name for a in missing))
        raise AlphabetCoverageError(
            f"{func}: atoms not covered by the evaluation order: {names}"
        )


def sbf(sigma: Sigma, t: Term, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Term:
    """Static normal form of a term over the evaluation order ``sigma``:
    a full binary tree layered in reverse-``sigma`` order.

    Every atom of the term must occur in ``sigma``.
    """
    check_alphabet(t, sigma, "sbf")
    return mbf(Cond(TRUE, e_sigma(sigma), t), node_budget=node_budget)
