"""Transformations on evaluation trees, one per valuation congruence.

Each transform rewrites a plain evaluation tree so that two terms are
congruent exactly when their transformed trees are equal:

* ``rp``  — a repeated atom answers the same way twice in a row;
* ``cr``  — immediately repeated atoms collapse to a single query;
* ``mem`` — the first answer for each atom is remembered for the walk;
* ``sse`` — memorizing over a fixed atom order, which yields the full
  binary tree a truth table describes.
"""

from __future__ import annotations

from .evaltrees import EvalTree, Leaf, Node, se
from .normalform import Side, check_alphabet, e_sigma
from .terms import Atom, Cond, Sigma, TRUE, Term


# ---------------------------------------------------------------------------
# Repetition-proof
# ---------------------------------------------------------------------------


def _rp_true(a: Atom, x: EvalTree) -> EvalTree:
    if isinstance(x, Leaf):
        return x
    if x.atom == a:
        sub = _rp_true(a, x.left)
        return Node(a, sub, sub)
    return x


def _rp_false(a: Atom, x: EvalTree) -> EvalTree:
    if isinstance(x, Leaf):
        return x
    if x.atom == a:
        sub = _rp_false(a, x.right)
        return Node(a, sub, sub)
    return x


def rp_tree_aux(side: Side, a: Atom, x: EvalTree) -> EvalTree:
    """One-sided helper of ``rp``: duplicates the surviving branch when the
    root repeats ``a``; leaves and other roots pass through."""
    return _rp_true(a, x) if side is Side.TRUE else _rp_false(a, x)


def rp(x: EvalTree) -> EvalTree:
    """Repetition-proof transform of an evaluation tree."""
    if isinstance(x, Leaf):
        return x
    left = rp(_rp_true(x.atom, x.left))
    right = rp(_rp_false(x.atom, x.right))
    if left is x.left and right is x.right:
        return x
    return Node(x.atom, left, right)


def rpse(t: Term) -> EvalTree:
    """Repetition-proof evaluation tree of a term."""
    return rp(se(t))


# ---------------------------------------------------------------------------
# Contractive
# ---------------------------------------------------------------------------


def _cr_true(a: Atom, x: EvalTree) -> EvalTree:
    while isinstance(x, Node) and x.atom == a:
        x = x.left
    return x


def _cr_false(a: Atom, x: EvalTree) -> EvalTree:
    while isinstance(x, Node) and x.atom == a:
        x = x.right
    return x


def cr_tree_aux(side: Side, a: Atom, x: EvalTree) -> EvalTree:
    """One-sided helper of ``cr``: strips repeated root queries of ``a``."""
    return _cr_true(a, x) if side is Side.TRUE else _cr_false(a, x)


def cr(x: EvalTree) -> EvalTree:
    """Contractive transform of an evaluation tree."""
    if isinstance(x, Leaf):
        return x
    left = cr(_cr_true(x.atom, x.left))
    right = cr(_cr_false(x.atom, x.right))
    if left is x.left and right is x.right:
        return x
    return Node(x.atom, left, right)


def cse(t: Term) -> EvalTree:
    """Contractive evaluation tree of a term."""
    return cr(se(t))


# ---------------------------------------------------------------------------
# Memorizing
# ---------------------------------------------------------------------------


def _mem_true(a: Atom, x: EvalTree) -> EvalTree:
    if isinstance(x, Leaf):
        return x
    if x.atom == a:
        return _mem_true(a, x.left)
    left = _mem_true(a, x.left)
    right = _mem_true(a, x.right)
    if left is x.left and right is x.right:
        return x
    return Node(x.atom, left, right)


def _mem_false(a: Atom, x: EvalTree) -> EvalTree:
    if isinstance(x, Leaf):
        return x
    if x.atom == a:
        return _mem_false(a, x.right)
    left = _mem_false(a, x.left)
    right = _mem_false(a, x.right)
    if left is x.left and right is x.right:
        return x
    return Node(x.atom, left, right)


def mem_tree_aux(side: Side, a: Atom, x: EvalTree) -> EvalTree:
    """One-sided helper of ``mem``: resolves every later query of ``a`` to
    the remembered answer."""
    return _mem_true(a, x) if side is Side.TRUE else _mem_false(a, x)


def mem(x: EvalTree) -> EvalTree:
    """Memorizing transform of an evaluation tree."""
    if isinstance(x, Leaf):
        return x
    left = mem(_mem_true(x.atom, x.left))
    right = mem(_mem_false(x.atom, x.right))
    if left is x.left and right is x.right:
        return x
    return Node(x.atom, left, right)


def mse(t: Term) -> EvalTree:
    """Memorizing evaluation tree of a term."""
    return mem(se(t))


# ---------------------------------------------------------------------------
# Static
# ---------------------------------------------------------------------------


def sse(sigma: Sigma, t: Term) -> EvalTree:
    """Static evaluation tree of a term over the order ``sigma``: a full
    binary tree with the last atom of ``sigma`` at the root.

    The output genuinely depends on the order of ``sigma``, not just its
    atoms; every atom of the term must occur in ``sigma``.
    """
    check_alphabet(t, sigma, "sse")
    return mse(Cond(TRUE, e_sigma(sigma), t))
