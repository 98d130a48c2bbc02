import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aspic import (
    AbstractAF,
    BudgetExceeded,
    compare_att_def,
    enumerate_extensions,
    grounded_extension,
    is_acceptable,
    justified_conclusions,
    kernels,
)
from aspic.bruteforce import extensions as brute
from aspic.generators import random_af
from aspic.semantics import SEMANTICS, is_admissible, is_complete, is_conflict_free

from fixtures import EXAMPLE1_TEXT, example1_saf, labelled

KERNELS = ["python"] + (["compiled"] if kernels.compiled is not None else [])


def af(nodes, defeats=(), attacks=None):
    return AbstractAF(tuple(nodes), frozenset(defeats), None if attacks is None else frozenset(attacks))


def sets(ext_set):
    return {frozenset(e) for e in ext_set}


class TestBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            af("xy", {("x", "y")}, set())
        with pytest.raises(ValueError):
            af("x", {("x", "z")})

    def test_acceptability(self):
        cyc = af("xy", {("x", "y"), ("y", "x")})
        assert is_acceptable("x", {"x"}, cyc)
        assert not is_acceptable("x", set(), cyc)
        assert is_acceptable("x", set(), af("x"))

    def test_acceptability_is_monotone(self):
        g = af("abcd", {("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")})
        for x in g.nodes:
            if is_acceptable(x, {"a"}, g):
                assert is_acceptable(x, {"a", "c"}, g)

    def test_edgeless_grounded(self):
        assert sets(grounded_extension(af("xy"))) == {frozenset("xy")}

    def test_chain_grounded(self):
        assert sets(grounded_extension(af("xyz", {("x", "y"), ("y", "z")}))) == {frozenset("xz")}

    @pytest.mark.parametrize("kernel", KERNELS)
    def test_odd_cycle(self, kernel):
        g = af("xyz", {("x", "y"), ("y", "z"), ("z", "x")})
        assert sets(enumerate_extensions(g, "stable", kernel=kernel)) == set()
        assert sets(enumerate_extensions(g, "grounded", kernel=kernel)) == {frozenset()}
        assert sets(enumerate_extensions(g, "preferred", kernel=kernel)) == {frozenset()}

    @pytest.mark.parametrize("kernel", KERNELS)
    def test_even_cycle(self, kernel):
        g = af("xy", {("x", "y"), ("y", "x")})
        assert sets(enumerate_extensions(g, "preferred", kernel=kernel)) == {frozenset("x"), frozenset("y")}
        assert sets(enumerate_extensions(g, "admissible", kernel=kernel)) == {frozenset(), frozenset("x"), frozenset("y")}

    def test_attack_only_edge_blocks_att_conflict_freeness(self):
        g = af("xy", set(), {("x", "y")})
        assert sets(enumerate_extensions(g, "grounded", "def")) == {frozenset("xy")}
        assert sets(enumerate_extensions(g, "grounded", "att")) == set()
        assert not is_conflict_free({"x", "y"}, g, "att")

    def test_self_attack(self):
        g = af("xy", {("x", "x")})
        assert sets(enumerate_extensions(g, "preferred")) == {frozenset("y")}

    @pytest.mark.parametrize("kernel", KERNELS)
    @pytest.mark.parametrize("sem", SEMANTICS)
    def test_empty_framework(self, kernel, sem):
        assert sets(enumerate_extensions(af(""), sem, kernel=kernel)) == {frozenset()}

    def test_node_bound(self):
        with pytest.raises(BudgetExceeded):
            enumerate_extensions(af("abc"), max_nodes=2)

    def test_unknown_names(self):
        with pytest.raises(ValueError):
            enumerate_extensions(af("x"), "semi-stable")
        with pytest.raises(ValueError):
            enumerate_extensions(af("x"), "complete", "both")

    def test_output_order_is_stable(self):
        g = af("abcd", {("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")})
        ext = enumerate_extensions(g, "preferred")
        assert [sorted(e) for e in ext] == sorted(sorted(e) for e in ext)
        assert ext.to_dict()["extensions"] == [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]


class TestWorkedExample:
    def test_fundamental_lemma_fails_without_reasonable_closure(self):
        saf = example1_saf("last", "eli")
        L = labelled(saf, EXAMPLE1_TEXT)
        g = saf.to_abstract()
        A, B = L["A"].id, L["B"].id
        assert is_admissible({B}, g, "att")
        assert is_acceptable(A, {B}, g)
        assert not is_admissible({A, B}, g, "att")
        assert is_admissible({A, B}, g, "def")
        same, witness = compare_att_def(g, "admissible")
        assert not same and witness["def_only"]

    @pytest.mark.parametrize("sem", SEMANTICS)
    def test_transposed_example_att_def_agree(self, sem):
        saf = example1_saf("last", "eli", transpose=True)
        same, witness = compare_att_def(saf.to_abstract(), sem)
        assert same, witness

    def test_transposed_example_excludes_b(self):
        saf = example1_saf("last", "eli", transpose=True)
        L = labelled(saf, EXAMPLE1_TEXT)
        g = saf.to_abstract()
        for sem in ("complete", "preferred", "stable", "grounded"):
            for e in enumerate_extensions(g, sem):
                assert L["B"].id not in e

    def test_transposed_example_extensions(self):
        saf = example1_saf("last", "eli", transpose=True)
        by_id = saf.by_id()
        g = saf.to_abstract()
        (grounded,) = enumerate_extensions(g, "grounded")
        assert {by_id[i].text() for i in grounded} == {"a", "[a => p]", "r", "~s"}
        pref = enumerate_extensions(g, "preferred")
        assert len(pref) == 2 and pref.as_sets() == enumerate_extensions(g, "stable").as_sets()
        texts = [{by_id[i].text() for i in e} for e in pref]
        assert any({"[[a => p], [r => q] -> -t]", "[r => q]"} <= t for t in texts)
        assert any({"[[~s => t], [a => p] -> -q]", "[~s => t]"} <= t for t in texts)


class TestJustified:
    def test_sceptical_via_different_arguments(self):
        class Arg:
            def __init__(self, i, conc):
                self.id, self.conc = i, conc

        args = [Arg("a", "phi"), Arg("b", "phi"), Arg("c", "x"), Arg("d", "y")]
        g = af("abcd", {("a", "b"), ("b", "a"), ("c", "d"), ("d", "c"), ("a", "d"), ("b", "c")})
        ext = enumerate_extensions(g, "preferred")
        assert sets(ext) == {frozenset("ac"), frozenset("bd")}
        just = justified_conclusions(ext, args)
        assert just == {"phi": "sceptical", "x": "credulous", "y": "credulous"}

    def test_no_extensions_justifies_nothing(self):
        g = af("xyz", {("x", "y"), ("y", "z"), ("z", "x")})
        assert justified_conclusions(enumerate_extensions(g, "stable"), []) == {}


def _check_against_brute(g):
    for sem in SEMANTICS:
        for cf in ("att", "def"):
            truth = brute(g.nodes, g.defeats, g.attacks, sem, cf)
            for k in KERNELS:
                assert sets(enumerate_extensions(g, sem, cf, kernel=k)) == truth, (sem, cf, k)


def test_random_frameworks_match_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        _check_against_brute(random_af(rng, max_nodes=10))


@st.composite
def frameworks(draw):
    n = draw(st.integers(0, 8))
    nodes = [f"n{i}" for i in range(n)]
    pairs = [(a, b) for a in nodes for b in nodes]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=min(20, len(pairs)))) if pairs else set()
    defeats = draw(st.sets(st.sampled_from(sorted(attacks)), max_size=len(attacks))) if attacks else set()
    return af(nodes, defeats, attacks)


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_hypothesis_brute_force(g):
    _check_against_brute(g)


@settings(max_examples=100, deadline=None)
@given(frameworks())
def test_semantics_inclusions(g):
    for cf in ("att", "def"):
        complete = enumerate_extensions(g, "complete", cf).as_sets()
        preferred = enumerate_extensions(g, "preferred", cf).as_sets()
        stable = enumerate_extensions(g, "stable", cf).as_sets()
        grounded = enumerate_extensions(g, "grounded", cf).as_sets()
        assert stable <= preferred <= complete
        for gr in grounded:
            assert gr in complete and all(gr <= c for c in complete)
        for c in complete:
            assert is_complete(c, g, cf)
