"""Congruence decisions, lattice structure, truth tables, axiom checks."""

from __future__ import annotations

import itertools

import pytest

import condalg as c
from helpers import (
    ALL_KINDS,
    ATOM_A,
    SIGMA_AB,
    SIGMA_BA,
    TA,
    TB,
    all_terms_upto,
    basic_forms_ab,
    random_terms,
)

T, F = c.TRUE, c.FALSE
STATIC_AB = c.static(SIGMA_AB)


def p(text: str) -> c.Term:
    return c.parse_term(text)


# ---------------------------------------------------------------------------
# kinds
# ---------------------------------------------------------------------------


def test_kind_validation():
    with pytest.raises(ValueError):
        c.CongruenceKind("static")
    with pytest.raises(ValueError):
        c.CongruenceKind("free", SIGMA_AB)
    with pytest.raises(ValueError):
        c.CongruenceKind("almost-free")
    assert str(STATIC_AB) == "static(ab)"
    assert str(c.MEM) == "mem"


# ---------------------------------------------------------------------------
# equivalent / normal_form
# ---------------------------------------------------------------------------


def test_equivalent_examples():
    left, right = p("T <| a |> a"), p("T <| a |> (F <| a |> F)")
    assert c.equivalent(left, right, c.RP)
    assert not c.equivalent(left, right, c.FREE)

    assert c.equivalent(p("F <| a |> F"), F, c.static(c.Sigma.of("a")))
    assert not c.equivalent(p("F <| a |> F"), F, c.MEM)

    assert c.equivalent(p("a <| b |> F"), p("b <| a |> F"), STATIC_AB)


def test_normal_form_examples():
    assert c.normal_form(p("T <| a |> a"), c.RP) == p("T <| a |> (F <| a |> F)")
    assert c.normal_form(T, c.FREE) == T
    # the static normal forms of F <| a |> F and F coincide (as the layered
    # all-F form over sigma, which for sigma = a is F <| a |> F itself)
    sigma_a = c.static(c.Sigma.of("a"))
    nf_cond = c.normal_form(p("F <| a |> F"), sigma_a)
    nf_false = c.normal_form(F, sigma_a)
    assert nf_cond == nf_false == p("F <| a |> F")


def test_transformed_tree_dispatch():
    t = p("a <| (F <| a |> T) |> F")
    assert c.transformed_tree(t, c.FREE) == c.se(t)
    assert c.transformed_tree(t, c.RP) == c.rpse(t)
    assert c.transformed_tree(t, c.CR) == c.cse(t)
    assert c.transformed_tree(t, c.MEM) == c.mse(t)
    assert c.transformed_tree(t, c.static(c.Sigma.of("a"))) == c.sse(
        c.Sigma.of("a"), t
    )


def _keys(pool, kind):
    return [c.render_tree(c.transformed_tree(t, kind)) for t in pool]


def test_dual_realization_small_pool():
    pool = all_terms_upto(2)
    for kind in ALL_KINDS:
        tree_keys = _keys(pool, kind)
        nf_keys = [c.render_term(c.normal_form(t, kind)) for t in pool]
        for i, j in itertools.combinations(range(len(pool)), 2):
            assert (tree_keys[i] == tree_keys[j]) == (nf_keys[i] == nf_keys[j])


def test_lattice_inclusion_on_pool():
    pool = all_terms_upto(2) + random_terms()
    ladder = [_keys(pool, kind) for kind in ALL_KINDS[:5]]
    for i, j in itertools.combinations(range(len(pool)), 2):
        for level in range(4):
            if ladder[level][i] == ladder[level][j]:
                assert ladder[level + 1][i] == ladder[level + 1][j]


def test_duality_preserves_free_equivalence():
    pool = all_terms_upto(2) + random_terms()
    plain = _keys(pool, c.FREE)
    dualized = [c.render_tree(c.se(c.dual(t))) for t in pool]
    for i, j in itertools.combinations(range(len(pool)), 2):
        assert (plain[i] == plain[j]) == (dualized[i] == dualized[j])


def test_congruence_respects_contexts():
    contexts = [
        lambda h: c.Cond(h, TB, F),
        lambda h: c.Cond(T, h, TB),
        lambda h: c.Cond(TA, TB, h),
        lambda h: c.Cond(c.Cond(h, TA, F), TB, T),
    ]
    pool = all_terms_upto(1) + random_terms()[:40]
    for kind in ALL_KINDS:
        keys = _keys(pool, kind)
        buckets: dict[str, list[c.Term]] = {}
        for key, t in zip(keys, pool):
            buckets.setdefault(key, []).append(t)
        checked = 0
        for group in buckets.values():
            for left, right in itertools.combinations(group[:4], 2):
                for hole in contexts:
                    assert c.equivalent(hole(left), hole(right), kind)
                checked += 1
        assert checked > 0


def test_class_counts_over_the_enumeration():
    # Independently derived class counts for the 202 basic forms of depth
    # <= 2 over {a, b}.  Each normalizer maps onto (and fixes) its own
    # family, so the class count equals the number of family members at
    # this depth:
    #   free:   trees are injective on basic forms        -> 202
    #   rp:     2 + 2 * (2 + 4 + 2)^2  (child: constant, other-atom
    #           conditional, or duplicated same-atom form) -> 130
    #   cr:     2 + 2 * (2 + 4)^2 (child constant or other-atom) -> 74
    #   mem:    same depth-2 census as cr                  -> 74
    #   static: one class per two-variable boolean function -> 16
    forms = basic_forms_ab(2)
    expected = {"free": 202, "rp": 130, "cr": 74, "mem": 74, "static": 16}
    for kind in (c.FREE, c.RP, c.CR, c.MEM, STATIC_AB):
        tree_classes = {c.render_tree(c.transformed_tree(t, kind)) for t in forms}
        nf_classes = {c.render_term(c.normal_form(t, kind)) for t in forms}
        assert len(tree_classes) == len(nf_classes) == expected[kind.tag]
    # every class member the normalizer produces belongs to the family
    predicates = {
        "rp": c.is_rp_basic_form,
        "cr": c.is_cr_basic_form,
        "mem": c.is_mem_basic_form,
    }
    for tag, predicate in predicates.items():
        kind = {"rp": c.RP, "cr": c.CR, "mem": c.MEM}[tag]
        assert all(predicate(c.normal_form(t, kind)) for t in forms)


def test_normal_form_idempotent_on_random_terms():
    for t in random_terms()[:60]:
        for kind in ALL_KINDS:
            nf = c.normal_form(t, kind)
            assert c.normal_form(nf, kind) == nf
            assert c.equivalent(t, nf, kind)


def test_static_both_branches_and_prefix_laws():
    small = basic_forms_ab(1)
    for t in basic_forms_ab(2):
        for q in small:
            assert c.equivalent(t, c.Cond(t, q, t), STATIC_AB)
        for sigma in (SIGMA_AB, SIGMA_BA):
            prefixed = c.Cond(T, c.e_sigma(sigma), t)
            assert c.equivalent(t, prefixed, c.static(sigma))


# ---------------------------------------------------------------------------
# propositional translation and truth tables
# ---------------------------------------------------------------------------


def test_to_propositional_examples():
    assert c.to_propositional(TA) == c.PAtom(ATOM_A)
    assert c.to_propositional(T) == c.PTrue()
    assert c.to_propositional(p("T <| a |> F")) == c.POr(
        c.PAnd(c.PTrue(), c.PAtom(ATOM_A)),
        c.PAnd(c.PNot(c.PAtom(ATOM_A)), c.PFalse()),
    )


def test_truth_table_example():
    table = c.truth_table(p("(a <| b |> F) <| a |> T"), SIGMA_AB)
    assert table.rows == (
        ((True, True), True),
        ((True, False), False),
        ((False, True), True),
        ((False, False), True),
    )


def test_truth_table_reversed_sigma():
    table = c.truth_table(p("(a <| b |> F) <| a |> T"), SIGMA_BA)
    assert table.rows == (
        ((True, True), True),
        ((True, False), True),
        ((False, True), False),
        ((False, False), True),
    )


def test_truth_table_constants():
    assert all(value for _, value in c.truth_table(T, SIGMA_AB).rows)
    table = c.truth_table(p("F <| a |> F"), c.Sigma.of("a"))
    assert table.rows == (((True,), False), ((False,), False))


def test_truth_table_errors():
    with pytest.raises(c.AlphabetCoverageError):
        c.truth_table(p("T <| z |> F"), SIGMA_AB)
    wide = c.Sigma(tuple(c.Atom(f"a{i}") for i in range(17)))
    with pytest.raises(ValueError):
        c.truth_table(T, wide)


def test_render_truth_table_text():
    table = c.truth_table(p("(a <| b |> F) <| a |> T"), SIGMA_AB)
    rendered = c.render_truth_table(table, title="(a <| b |> F) <| a |> T")
    assert rendered.splitlines() == [
        "a b | (a <| b |> F) <| a |> T",
        "T T | T",
        "T F | F",
        "F T | T",
        "F F | T",
    ]


def test_truth_table_empty_sigma():
    table = c.truth_table(T, c.SIGMA_EMPTY)
    assert table.rows == (((), True),)


def test_render_truth_table_aligns_wide_atom_names():
    sigma = c.Sigma.of("speed", "up")
    term = c.Cond(c.AtomTerm(c.Atom("speed")), c.AtomTerm(c.Atom("up")), F)
    rendered = c.render_truth_table(c.truth_table(term, sigma))
    lines = rendered.splitlines()
    assert lines[0] == "speed up | value"
    assert lines[1] == "T     T  | T"
    assert lines[-1] == "F     F  | F"


def test_render_truth_table_json():
    table = c.truth_table(p("F <| a |> F"), c.Sigma.of("a"))
    assert (
        c.render_truth_table(table, "json")
        == '{"sigma":["a"],"rows":[{"assignment":[true],"value":false},'
        '{"assignment":[false],"value":false}]}'
    )


def test_static_matches_tautology_examples():
    assert c.static_matches_tautology(p("F <| a |> F"), F, c.Sigma.of("a"))
    assert c.static_matches_tautology(TA, TB, SIGMA_AB)
    for left, right in itertools.combinations(basic_forms_ab(1), 2):
        assert c.static_matches_tautology(left, right, SIGMA_AB)


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

POOL = (T, F, TA, TB, p("T <| a |> F"), p("F <| b |> T"))


def test_check_axioms_cp_under_free_all_hold():
    reports = c.check_axioms("CP", POOL, c.FREE)
    assert reports and all(r.holds for r in reports)
    assert {r.axiom_name for r in reports} == {"CP1", "CP2", "CP3", "CP4"}


def test_check_axioms_cprp_under_free_fails():
    reports = c.check_axioms("CPrp", POOL, c.FREE)
    failing = [r for r in reports if not r.holds]
    assert failing
    witness = {"a": TA, "x": T, "y": F, "z": F}
    assert any(
        r.axiom_name == "CPrp1" and r.substitution_map() == witness
        for r in failing
    )


def test_check_axioms_cpst_under_static_all_hold():
    reports = c.check_axioms("CPst", POOL, STATIC_AB)
    assert reports and all(r.holds for r in reports)


def test_check_axioms_validation_and_budget():
    with pytest.raises(ValueError):
        c.check_axioms("CP", (), c.FREE)
    with pytest.raises(ValueError):
        c.check_axioms("XYZ", POOL, c.FREE)
    with pytest.raises(c.InstanceBudgetError) as err:
        c.check_axioms("CP", POOL, c.FREE, instance_budget=10)
    assert "CP1" in str(err.value)


def test_check_axioms_instance_counts():
    reports = c.check_axioms("CP", POOL, c.FREE)
    by_name: dict[str, int] = {}
    for r in reports:
        by_name[r.axiom_name] = by_name.get(r.axiom_name, 0) + 1
    assert by_name == {
        "CP1": 36,
        "CP2": 36,
        "CP3": 6,
        "CP4": 6**5,
    }


# ---------------------------------------------------------------------------
# separation witnesses
# ---------------------------------------------------------------------------


def test_separation_witnesses_cover_the_lattice():
    witnesses = c.separation_witnesses()
    assert len(witnesses) == 4
    steps = [(finer.tag, coarser.tag) for _, _, finer, coarser in witnesses]
    assert steps == [("free", "rp"), ("rp", "cr"), ("cr", "mem"), ("mem", "static")]
    for left, right, finer, coarser in witnesses:
        assert not c.equivalent(left, right, finer)
        assert c.equivalent(left, right, coarser)
        # the syntactic route agrees with both verdicts
        assert c.normal_form(left, finer) != c.normal_form(right, finer)
        assert c.normal_form(left, coarser) == c.normal_form(right, coarser)


def test_classic_witness_pairs_are_built_in():
    witnesses = c.separation_witnesses()
    assert witnesses[0][0] == p("T <| a |> a")
    assert witnesses[0][1] == p("T <| a |> (F <| a |> F)")
    assert witnesses[3][0] == p("F <| a |> F")
    assert witnesses[3][1] == F
