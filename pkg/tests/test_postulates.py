import pytest

from aspic import build_arguments, build_saf, parse_theory
from aspic.arguments import find
from aspic.generators import TheorySpec
from aspic.language import F
from aspic.postulates import (
    check_direct_consistency,
    check_extension,
    check_indirect_consistency,
    check_postulates,
    check_strict_closure,
    check_subarg_closure,
    minimize,
    postulate_failures,
    run_postulate_campaign,
)

from fixtures import CHAINS, CHAINS_TEXT, EXAMPLE1, EXAMPLE1_TEXT, STRADIVARIUS, example1_saf, labelled

# the worked example as an editable description, strict rule left untransposed
EXAMPLE1_DESC = TheorySpec(
    premises=("a", "~s", "r", "-r"),
    strict=((("t", "q"), "-p"),),
    defeasible=(("d1", ("~s",), "t"), ("d2", ("r",), "q"), ("d3", ("a",), "p")),
    rule_ranks={"d1": 0, "d2": 0, "d3": 1},
    premise_ranks={"-r": 0, "r": 1},
    transpose=False,
)


class TestCheckers:
    def test_subargument_gap_is_reported(self):
        args = build_arguments(parse_theory(CHAINS))
        L = {k: find(args, v) for k, v in CHAINS_TEXT.items()}
        ok, witnesses = check_subarg_closure([L["A1"], L["B1"], L["A2"], L["B3"]])
        assert not ok
        assert witnesses == [(L["B3"], L["B2"])]

    def test_subargument_closed(self):
        args = build_arguments(parse_theory(CHAINS))
        L = {k: find(args, v) for k, v in CHAINS_TEXT.items()}
        assert check_subarg_closure([L["B1"], L["B2"], L["B3"]]) == (True, [])

    def test_strict_closure_violation(self):
        th = parse_theory(EXAMPLE1)
        args = build_arguments(th)
        L = {k: find(args, v) for k, v in EXAMPLE1_TEXT.items()}
        ok, violations, gaps = check_strict_closure([L["B1'"], L["B2'"]], th.strict_rules, args)
        assert not ok and violations == [F("-p")] and gaps == []
        assert check_strict_closure([L["B1'"], L["B2'"], L["B"]], th.strict_rules, args)[0]

    def test_depth_gap_is_not_a_violation(self):
        th = parse_theory(EXAMPLE1)
        args = build_arguments(th)
        L = {k: find(args, v) for k, v in EXAMPLE1_TEXT.items()}
        without_b = [a for a in args if a is not L["B"]]
        ok, violations, gaps = check_strict_closure([L["B1'"], L["B2'"]], th.strict_rules, without_b, truncated=True)
        assert ok and violations == [] and gaps == [F("-p")]

    def test_consistency(self):
        th = parse_theory(EXAMPLE1)
        args = build_arguments(th)
        L = {k: find(args, v) for k, v in EXAMPLE1_TEXT.items()}
        ok, bad = check_direct_consistency([L["A"], L["B"]], th.contrariness)
        assert not ok and bad
        assert check_direct_consistency([L["A"], L["B1'"], L["B2'"]], th.contrariness)[0]
        assert not check_indirect_consistency([L["A"], L["B1'"], L["B2'"]], th.strict_rules, th.contrariness)[0]

    def test_stradivarius_pair_is_directly_inconsistent(self):
        th = parse_theory(STRADIVARIUS)
        args = build_arguments(th)
        A, B = find(args, "s"), find(args, "-s")
        rep = check_extension([A, B], th, args)
        assert not rep.direct_consistency and not rep.passed
        assert "direct_consistency" in rep.witnesses
        d = rep.to_dict()
        assert d["direct_consistency"] is False and d["witnesses"]["direct_consistency"]


class TestOnFrameworks:
    @pytest.mark.parametrize("link", ["last", "weakest"])
    @pytest.mark.parametrize("setcomp", ["eli", "dem"])
    @pytest.mark.parametrize("cf", ["att", "def"])
    def test_transposed_example_satisfies_all(self, link, setcomp, cf):
        th = parse_theory(EXAMPLE1).transposed()
        saf = build_saf(th, link=link, setcomp=setcomp)
        for sem in ("complete", "preferred", "grounded", "stable"):
            reports = check_postulates(saf, th, sem, cf)
            assert all(r.passed for r in reports)

    def test_untransposed_example_violates_in_def_mode(self):
        th = parse_theory(EXAMPLE1)
        saf = example1_saf("last", "eli")
        L = labelled(saf, EXAMPLE1_TEXT)
        bad = [r for r in check_postulates(saf, th, "complete", "def") if not r.passed]
        assert bad
        assert any({L["A"].id, L["B"].id} <= set(r.extension) for r in bad)

    def test_postulate_failures_listing(self):
        fails = postulate_failures(parse_theory(EXAMPLE1))
        assert fails and {f["config"] for f in fails} >= {"last/eli/def"}
        assert postulate_failures(parse_theory(EXAMPLE1).transposed()) == []


class TestCampaign:
    def test_description_rebuilds_example(self):
        th = EXAMPLE1_DESC.build()
        assert len(build_arguments(th)) == 8

    def test_minimize_keeps_failure_and_shrinks(self):
        def fails(spec):
            return bool(postulate_failures(spec.build()))

        assert fails(EXAMPLE1_DESC)
        small = minimize(EXAMPLE1_DESC, fails)
        assert fails(small)
        assert len(small.parts()) < len(EXAMPLE1_DESC.parts())
        for part in small.parts():
            assert not fails(small.without(part))

    def test_transposed_description_passes(self):
        from dataclasses import replace

        assert postulate_failures(replace(EXAMPLE1_DESC, transpose=True).build()) == []

    def test_small_campaign(self):
        post, equiv = run_postulate_campaign(count=15, seed=5)
        assert post.passed and equiv.passed
        d = post.to_dict()
        assert d["count"] == 15 and d["passed"] and d["max_arguments_seen"] > 0
