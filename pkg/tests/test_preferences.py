import itertools

import pytest

from aspic import (
    ArgOrdering,
    Preorder,
    arg_leq,
    arg_strictly_preferred,
    build_arguments,
    check_reasonable_inducing,
    check_reasonable_sample,
    parse_theory,
    set_compare,
)
from aspic.classical import premise_minimal_equivalence_check, parse_formula
from aspic.classical.instantiation import build_classical_csaf, no_strengthening_witness
from aspic.errors import UnknownElement
from aspic.preferences import check_strict_partial_order

from fixtures import EXAMPLE1, EXAMPLE1_TEXT, example1_saf, labelled


@pytest.fixture(scope="module")
def theory():
    return parse_theory(EXAMPLE1)


class TestPreorder:
    def test_closure(self):
        p = Preorder("abc", [("a", "b"), ("b", "c")])
        assert p.leq("a", "c") and p.lt("a", "c")
        assert p.leq("b", "b")
        assert not p.leq("c", "a")

    def test_equivalence_and_incomparability(self):
        p = Preorder("abcd", [("a", "b"), ("b", "a")])
        assert p.equiv("a", "b") and not p.lt("a", "b")
        assert not p.leq("c", "d") and not p.leq("d", "c")

    def test_ranks(self):
        p = Preorder("xyz", ranks={"x": 0, "y": 1})
        assert p.lt("x", "y")
        assert not p.leq("z", "x") and not p.leq("x", "z")


class TestSetCompare:
    def test_worked_example(self, theory):
        pre = theory.rule_preorder
        d1, d2, d3 = (theory.rule_named(n) for n in ("d1", "d2", "d3"))
        assert set_compare({d1, d2}, {d3}, "eli", pre)
        assert not set_compare({d1, d2}, {d3}, "dem", pre)

    def test_empty_clauses(self, theory):
        pre = theory.rule_preorder
        d3 = theory.rule_named("d3")
        assert not set_compare(set(), {d3}, "eli", pre)
        assert not set_compare(set(), set(), "dem", pre)
        assert set_compare({d3}, set(), "eli", pre)

    def test_unknown_element(self, theory):
        with pytest.raises(UnknownElement):
            set_compare({"nope"}, {"also"}, "eli", theory.rule_preorder)


# B vs A and C vs B2 under the four orderings
OUTCOMES = {
    ("B", "A", "last", "eli"): True,
    ("B", "A", "weakest", "eli"): False,
    ("B", "A", "last", "dem"): False,
    ("B", "A", "weakest", "dem"): False,
    ("C", "B2", "last", "eli"): True,
    ("C", "B2", "weakest", "eli"): True,
    ("C", "B2", "last", "dem"): True,
    ("C", "B2", "weakest", "dem"): True,
}


@pytest.mark.parametrize("key", sorted(OUTCOMES))
def test_eight_outcomes(key):
    b, a, link, setcomp = key
    saf = example1_saf(link, setcomp)
    L = labelled(saf, EXAMPLE1_TEXT)
    assert arg_strictly_preferred(L[b], L[a], saf.ordering) is OUTCOMES[key]


def test_leq_completion():
    saf = example1_saf("last", "eli")
    L = labelled(saf, EXAMPLE1_TEXT)
    assert arg_leq(L["B"], L["B"], saf.ordering)
    assert arg_leq(L["B"], L["A"], saf.ordering)
    assert not arg_leq(L["A"], L["B"], saf.ordering)


@pytest.mark.parametrize("link", ["last", "weakest"])
@pytest.mark.parametrize("setcomp", ["eli", "dem"])
def test_strict_firm_dominates(link, setcomp):
    th = parse_theory("axiom: k.\npremise: a.\ndefeasible d1: a => b.\n")
    args = {a.text(): a for a in build_arguments(th)}
    o = ArgOrdering.from_theory(th, link, setcomp)
    firm = args["k"]
    for name in ("a", "[a => b]"):
        assert o.strictly_preferred(args[name], firm)
        assert not o.strictly_preferred(firm, args[name])


class TestReasonable:
    @pytest.mark.parametrize("setcomp", ["eli", "dem"])
    def test_rule_preorder_inducing(self, theory, setcomp):
        rep = check_reasonable_inducing(setcomp, theory.rule_preorder, samples=1000)
        assert rep.passed, rep.failures

    @pytest.mark.parametrize("setcomp", ["eli", "dem"])
    def test_premise_preorder_inducing(self, theory, setcomp):
        rep = check_reasonable_inducing(setcomp, theory.premise_preorder, samples=1000)
        assert rep.passed and rep.checked > 0

    @pytest.mark.parametrize("setcomp", ["eli", "dem"])
    def test_sampled_on_larger_preorder(self, setcomp):
        pre = Preorder(range(8), ranks={i: i % 4 for i in range(8)})
        assert check_reasonable_inducing(setcomp, pre, samples=1000, seed=3).passed

    def test_three_cycle_comparison_fails(self):
        order = {"x": "y", "y": "z", "z": "x"}

        def cyclic(g, g2, pre):
            return len(g) == 1 and len(g2) == 1 and order[next(iter(g))] == next(iter(g2))

        rep = check_reasonable_inducing(cyclic, Preorder("xyz"))
        assert not rep.passed
        assert any(clause == "transitive" for clause, _ in rep.failures)

    @pytest.mark.parametrize("link", ["last", "weakest"])
    @pytest.mark.parametrize("setcomp", ["eli", "dem"])
    def test_orderings_reasonable_on_transposed_example(self, link, setcomp):
        saf = example1_saf(link, setcomp, transpose=True)
        rep = check_reasonable_sample(saf.ordering, saf.args, samples=300)
        assert rep.passed, rep.failures
        assert check_strict_partial_order(saf.ordering, saf.args).passed

    def test_continuation_triple_cannot_all_hold(self):
        saf = example1_saf("last", "eli", transpose=True)
        L = labelled(saf, {**EXAMPLE1_TEXT, "A1+": "[[~s => t], [a => p] -> -q]", "A2+": "[[a => p], [r => q] -> -t]"})
        prec = saf.ordering.strictly_preferred
        assert not (prec(L["B"], L["A"]) and prec(L["A1+"], L["B2'"]) and prec(L["A2+"], L["B1'"]))


class TestNoStrengthening:
    def test_democratic_counterexample(self):
        p, q, r = map(parse_formula, "pqr")
        pre = Preorder([p, q, r], [(p, r)])
        saf = build_classical_csaf([p, q, r], pre, claims=["p & q"], link="weakest", setcomp="dem", minimal=False)
        assert no_strengthening_witness(saf) is not None
        res = premise_minimal_equivalence_check([p, q, r], pre, claims=["p & q"], link="weakest", setcomp="dem")
        assert res["ok"] is None and "reason" in res

    def test_elitist_has_no_witness(self):
        p, q, r = map(parse_formula, "pqr")
        pre = Preorder([p, q, r], [(p, r)])
        saf = build_classical_csaf([p, q, r], pre, claims=["p & q"], link="weakest", setcomp="eli", minimal=False)
        assert no_strengthening_witness(saf) is None

    def test_eli_subset_property_exhaustive(self):
        elems = "abcd"
        pre = Preorder(elems, [("a", "b"), ("b", "c"), ("d", "c")])
        subsets = [frozenset(c) for k in range(5) for c in itertools.combinations(elems, k)]
        for big in subsets:
            for other in subsets:
                if not set_compare(big, other, "eli", pre):
                    for small in subsets:
                        if small and small <= big:
                            assert not set_compare(small, other, "eli", pre)
