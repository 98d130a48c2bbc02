import pytest

from aspic import AttackKind, attack_kind_stats, build_arguments, compute_attacks, parse_theory
from aspic.arguments import find

from fixtures import EXAMPLE1, EXAMPLE1_TEXT

# D concludes s, a contrary of ~s; E undercuts the rule named d3
EXTRAS = "premise: ~d.\ndefeasible d4: ~d => s.\nstrict: r -> -d3.\n"


def _named(args, attacks, labels):
    L = {k: find(args, v) for k, v in labels.items()}
    name = {a.id: k for k, a in L.items()}
    return {(name[a.attacker.id], name[a.target.id], name[a.on.id], a.kind) for a in attacks
            if a.attacker.id in name and a.target.id in name}


@pytest.fixture(scope="module")
def ex1():
    th = parse_theory(EXAMPLE1)
    args = build_arguments(th)
    return th, args, compute_attacks(args, th)


def test_example_attacks(ex1):
    _, args, attacks = ex1
    U, R = AttackKind.UNDERMINE, AttackKind.REBUT
    assert _named(args, attacks, EXAMPLE1_TEXT) == {
        ("B", "A", "A", R),
        ("C", "B", "B2", U),
        ("C", "B2'", "B2", U),
        ("C", "B2", "B2", U),
        ("B2", "C", "C", U),
    }


def test_contrary_undermine_and_undercut():
    th = parse_theory(EXAMPLE1 + EXTRAS)
    args = build_arguments(th)
    labels = {**EXAMPLE1_TEXT, "D": "[~d => s]", "E": "[r -> -d3]"}
    got = _named(args, compute_attacks(args, th), labels)
    CU = AttackKind.CONTRARY_UNDERMINE
    assert {("D", "B", "B1", CU), ("D", "B1'", "B1", CU), ("D", "B1", "B1", CU)} <= got
    assert ("E", "A", "A", AttackKind.UNDERCUT) in got
    assert not CU.preference_dependent and not AttackKind.UNDERCUT.preference_dependent


def test_stats_record_and_location(ex1):
    _, _, attacks = ex1
    assert attack_kind_stats(attacks) == {
        "undercut": 0, "rebut": 1, "contrary-rebut": 0, "undermine": 4, "contrary-undermine": 0,
    }
    loc = attack_kind_stats(attacks, granularity="location")
    assert loc["rebut"] == 1 and loc["undermine"] == 2


def test_stats_empty():
    assert set(attack_kind_stats([]).values()) == {0}
    with pytest.raises(ValueError):
        attack_kind_stats([], granularity="pairs")


def test_transposed_rebut_locations():
    th = parse_theory(EXAMPLE1).transposed()
    args = build_arguments(th)
    attacks = compute_attacks(args, th)
    assert attack_kind_stats(attacks, granularity="location")["rebut"] == 3


@pytest.mark.parametrize("theory", [EXAMPLE1, EXAMPLE1 + EXTRAS])
def test_attack_invariants(theory):
    th = parse_theory(theory)
    th = th.transposed()
    args = build_arguments(th)
    attacks = compute_attacks(args, th)
    for at in attacks:
        assert at.on in at.target.sub
        assert at.on.has_defeasible_top or at.on.is_ordinary_premise
        if at.kind in (AttackKind.REBUT, AttackKind.CONTRARY_REBUT):
            assert at.on.has_defeasible_top
        if at.kind in (AttackKind.UNDERMINE, AttackKind.CONTRARY_UNDERMINE):
            assert at.on.is_ordinary_premise
    located = {(at.attacker, at.on, at.kind) for at in attacks}
    for attacker, on, kind in located:
        for b in args:
            if on in b.sub:
                assert any(at.attacker is attacker and at.target is b and at.on is on and at.kind is kind for at in attacks)


def test_only_the_conclusion_attacks():
    # [a => p] has a sub-argument concluding a; a -p premise would be attacked by p only
    th = parse_theory("premise: a.\npremise: -a.\ndefeasible d1: a => p.\n")
    args = build_arguments(th)
    attacks = compute_attacks(args, th)
    sup = find(args, "[a => p]")
    assert not any(at.attacker is sup for at in attacks)


def test_self_attack_is_kept():
    th = parse_theory("premise: a.\ndefeasible d1: a => b.\nstrict: b -> -d1.\n")
    args = build_arguments(th)
    attacks = compute_attacks(args, th)
    self_attacks = [at for at in attacks if at.attacker is at.target]
    assert self_attacks and self_attacks[0].kind is AttackKind.UNDERCUT
