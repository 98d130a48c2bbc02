import random

import pytest

from aspic import AtomBudget, ClaimsEmpty, TheoryError, enumerate_extensions
from aspic.classical import (
    StratifiedTheory,
    TruthTable,
    build_classical_csaf,
    classical_arguments,
    consistent,
    entails,
    negate,
    parse_formula,
    premise_minimal_equivalence_check,
    preferred_subtheories,
    render,
    verify_ps_correspondence,
)
from aspic.classical.logic import FormulaSyntaxError
from aspic.dsl import parse_stratified
from aspic.generators import random_stratified

from fixtures import DATA

f = parse_formula


def fs(*texts):
    return frozenset(map(f, texts))


class TestLogic:
    @pytest.mark.parametrize("premises, goal, expected", [
        (["p", "p > q"], "q", True),
        (["p | q", "-p"], "q", True),
        (["p | q"], "p", False),
        (["p", "-p"], "z", True),
        ([], "p | -p", True),
        (["x", "x > y"], "-(x > -y)", True),
    ])
    def test_entails(self, premises, goal, expected):
        assert entails(map(f, premises), f(goal)) is expected

    def test_consistent(self):
        assert consistent([f("p"), f("q")])
        assert not consistent([f("p & -p")])
        assert consistent([])

    def test_precedence_and_render(self):
        assert f("a | b & c") == f("a | (b & c)")
        assert f("a > b > c") == f("a > (b > c)")
        assert f("~a") == f("-a") == negate(f("a"))
        assert negate(f("-a")) == f("a")
        assert render(f("-(a & b) > c")) == "-(a & b) > c"
        assert f(render(f("a | b & -c > d"))) == f("a | b & -c > d")

    @pytest.mark.parametrize("text, column", [("p &", 4), ("(p", 3), ("p q", 3), ("p $ q", 3)])
    def test_syntax_errors(self, text, column):
        with pytest.raises(FormulaSyntaxError) as err:
            f(text)
        assert err.value.column == column

    def test_atom_budget(self):
        with pytest.raises(AtomBudget):
            TruthTable([f"a{i}" for i in range(21)])

    def test_table_outside_atom(self):
        with pytest.raises(ValueError):
            TruthTable(["p"]).value(f("q"))


class TestSubtheories:
    def test_consistent_base_is_its_own_subtheory(self):
        assert preferred_subtheories(StratifiedTheory((("p",), ("q",)))) == {fs("p", "q")}

    def test_direct_contradiction_in_one_stratum(self):
        assert preferred_subtheories(StratifiedTheory((("p", "-p"),))) == {fs("p"), fs("-p")}

    def test_higher_stratum_wins(self):
        assert preferred_subtheories(StratifiedTheory((("p",), ("-p",)))) == {fs("p")}

    def test_worked_example(self):
        th = parse_stratified((DATA / "example11.strat").read_text())
        assert preferred_subtheories(th) == {fs("x", "-y"), fs("x", "x > y")}

    def test_overlap_rejected(self):
        with pytest.raises(TheoryError):
            StratifiedTheory((("p",), ("p",)))

    def test_correspondence_worked_example(self):
        th = parse_stratified((DATA / "example11.strat").read_text())
        ok, witness = verify_ps_correspondence(th)
        assert ok, witness
        assert witness["stable_count"] == witness["ps_count"] == 2

    def test_correspondence_random(self):
        rng = random.Random(99)
        for _ in range(15):
            th = random_stratified(rng)
            ok, witness = verify_ps_correspondence(th)
            assert ok, witness


class TestInstantiation:
    SIGMA = ["x", "-y", "x > y"]
    STRATA = [["x"], ["-y", "x > y"]]

    def test_premise_arguments_always_present(self):
        args = classical_arguments(list(map(f, self.SIGMA)), [])
        assert {(a.support, a.claim) for a in args} >= {(fs(s), f(s)) for s in self.SIGMA}

    def test_minimal_supports(self):
        args = classical_arguments(list(map(f, self.SIGMA)), [f("y")])
        ys = [a for a in args if a.claim == f("y")]
        assert [a.support for a in ys] == [fs("x", "x > y")]
        wide = classical_arguments(list(map(f, self.SIGMA)), [f("y")], minimal=False)
        assert all(a.support <= fs(*self.SIGMA) for a in wide)
        assert all(consistent(a.support) for a in wide)

    def test_justified_conclusions(self):
        saf = build_classical_csaf(self.SIGMA, self.STRATA, queries=["y"])
        by_id = saf.by_id()
        stable = enumerate_extensions(saf.to_abstract(), "stable", "att")
        assert stable.as_sets() == enumerate_extensions(saf.to_abstract(), "preferred", "att").as_sets()
        concl = [{str(by_id[i].conc) for i in e} for e in stable]
        assert len(concl) == 2
        assert all("x" in c for c in concl)
        assert any("-y" in c for c in concl) and any("y" in c for c in concl)
        assert not all("y" in c for c in concl)

    @pytest.mark.parametrize("sem", ["complete", "preferred", "stable", "grounded"])
    def test_attack_variants_agree(self, sem):
        def ext(variant):
            saf = build_classical_csaf(self.SIGMA, self.STRATA, attack=variant)
            by_id = saf.by_id()
            exts = enumerate_extensions(saf.to_abstract(), sem, "att")
            return {frozenset((by_id[i].support, by_id[i].claim) for i in e) for e in exts}

        assert ext("direct-defeat") == ext("direct-undercut") == ext("undermine")

    def test_unknown_attack_variant(self):
        with pytest.raises(ValueError):
            build_classical_csaf(self.SIGMA, attack="rebut")

    def test_claims_empty(self):
        with pytest.raises(ClaimsEmpty):
            build_classical_csaf([], claims=[])

    def test_metadata(self):
        saf = build_classical_csaf(self.SIGMA, self.STRATA)
        assert saf.mode == "c-saf"
        assert "x" in saf.metadata["claims"] and saf.metadata["premise_minimal"] is True

    def test_premise_minimal_equivalence(self):
        res = premise_minimal_equivalence_check(self.SIGMA, self.STRATA)
        assert res["ok"] is True and res["differences"] == {}

    def test_premise_minimal_singleton(self):
        assert premise_minimal_equivalence_check(["p"])["ok"] is True

    def test_preferred_negation_defeats_conjunction(self):
        saf = build_classical_csaf(["p", "q", "-p"], [["q"], ["-p"], ["p"]], claims=["p & q"], link="weakest", setcomp="dem")
        key = {(a.support, a.claim): a.id for a in saf.args}
        b = key[fs("-p"), f("-p")]
        a3 = key[fs("p", "q"), f("p & q")]
        assert (b, a3) in saf.defeat_pairs()
        for e in enumerate_extensions(saf.to_abstract(), "complete", "att"):
            assert not {b, a3} <= e
