"""Shared pools and oracles for the test suite.

Pools are cached at module level; everything here is deterministic
(fixed seeds, fixed orders) so failures reproduce exactly.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import condalg as c

ATOM_A = c.Atom("a")
ATOM_B = c.Atom("b")
AB = (ATOM_A, ATOM_B)
TA = c.AtomTerm(ATOM_A)
TB = c.AtomTerm(ATOM_B)

SIGMA_A = c.Sigma((ATOM_A,))
SIGMA_B = c.Sigma((ATOM_B,))
SIGMA_AB = c.Sigma(AB)
SIGMA_BA = c.Sigma((ATOM_B, ATOM_A))


@lru_cache(maxsize=None)
def basic_forms_ab(max_depth: int) -> tuple[c.Term, ...]:
    return tuple(c.enumerate_basic_forms(AB, max_depth))


@lru_cache(maxsize=None)
def terms_with_conds(count: int) -> tuple[c.Term, ...]:
    """All terms over {T, F, a, b} with exactly ``count`` conditionals."""
    if count == 0:
        return (c.TRUE, c.FALSE, TA, TB)
    out: list[c.Term] = []
    for i in range(count):
        for j in range(count - i):
            k = count - 1 - i - j
            for p in terms_with_conds(i):
                for q in terms_with_conds(j):
                    for r in terms_with_conds(k):
                        out.append(c.Cond(p, q, r))
    return tuple(out)


@lru_cache(maxsize=None)
def all_terms_upto(conds: int) -> tuple[c.Term, ...]:
    """All terms over {T, F, a, b} with at most ``conds`` conditionals."""
    out: list[c.Term] = []
    for k in range(conds + 1):
        out.extend(terms_with_conds(k))
    return tuple(out)


def _random_term(rng: random.Random, conds: int) -> c.Term:
    if conds == 0:
        return rng.choice((c.TRUE, c.FALSE, TA, TB))
    i = rng.randint(0, conds - 1)
    j = rng.randint(0, conds - 1 - i)
    k = conds - 1 - i - j
    return c.Cond(
        _random_term(rng, i), _random_term(rng, j), _random_term(rng, k)
    )


@lru_cache(maxsize=None)
def random_terms(n: int = 200, max_conds: int = 6, seed: int = 20250808) -> tuple[c.Term, ...]:
    """Seeded random terms over {a, b} with <= max_conds conditionals."""
    rng = random.Random(seed)
    return tuple(_random_term(rng, rng.randint(1, max_conds)) for _ in range(n))


@lru_cache(maxsize=None)
def tree_pool(max_depth: int) -> tuple[c.EvalTree, ...]:
    """All evaluation trees over {a, b} with depth <= max_depth."""
    layer: tuple[c.EvalTree, ...] = (c.LEAF_T, c.LEAF_F)
    for _ in range(max_depth):
        grown: list[c.EvalTree] = [c.LEAF_T, c.LEAF_F]
        for a in AB:
            for left in layer:
                for right in layer:
                    grown.append(c.Node(a, left, right))
        layer = tuple(grown)
    return layer


@lru_cache(maxsize=None)
def deep_tree_pool() -> tuple[c.EvalTree, ...]:
    """All depth-<=2 trees plus a deterministic batch of depth-3 trees."""
    base = tree_pool(2)
    depth2 = [t for t in base if isinstance(t, c.Node)][:6]
    extras = [
        c.Node(a, left, right)
        for a in AB
        for left, right in itertools.product(depth2[:3], depth2[3:6])
    ]
    return base + tuple(extras)


class ScriptedOracle:
    """Replays a fixed list of answers, checking the queried atoms."""

    def __init__(self, path: tuple[tuple[c.Atom, bool], ...]):
        self.expected = list(path)
        self.i = 0

    def __call__(self, atom: c.Atom) -> bool:
        assert self.i < len(self.expected), "more queries than scripted"
        expected_atom, value = self.expected[self.i]
        assert atom == expected_atom, f"queried {atom}, script says {expected_atom}"
        self.i += 1
        return value

    def exhausted(self) -> bool:
        return self.i == len(self.expected)


class RepeatStableOracle:
    """Answers from a pseudo-random stream, except that an immediately
    repeated query of the same atom repeats the previous answer."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.last: tuple[c.Atom, bool] | None = None

    def __call__(self, atom: c.Atom) -> bool:
        if self.last is not None and self.last[0] == atom:
            return self.last[1]
        value = self.rng.random() < 0.5
        self.last = (atom, value)
        return value


def se_key(t: c.Term) -> str:
    return c.render_tree(c.se(t))


ALL_KINDS = (
    c.FREE,
    c.RP,
    c.CR,
    c.MEM,
    c.static(SIGMA_AB),
    c.static(SIGMA_BA),
)
