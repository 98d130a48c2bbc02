"""Attacks between arguments: undercut, rebut and undermine."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .arguments import Argument
from .language import ArgumentationTheory, ContrarinessMap


class AttackKind(str, Enum):
    UNDERCUT = "undercut"
    REBUT = "rebut"
    CONTRARY_REBUT = "contrary-rebut"
    UNDERMINE = "undermine"
    CONTRARY_UNDERMINE = "contrary-undermine"

    @property
    def preference_dependent(self) -> bool:
        return self in (AttackKind.REBUT, AttackKind.UNDERMINE)


@dataclass(frozen=True)
class Attack:
    """``attacker`` attacks ``target`` on its sub-argument ``on``."""

    attacker: Argument
    target: Argument
    on: Argument
    kind: AttackKind

    @property
    def preference_dependent(self) -> bool:
        return self.kind.preference_dependent

    def sort_key(self) -> tuple:
        return (self.attacker.id, self.target.id, self.on.id, self.kind.value)

    def to_dict(self) -> dict:
        return {
            "attacker": self.attacker.id,
            "target": self.target.id,
            "on": self.on.id,
            "kind": self.kind.value,
            "preference_dependent": self.preference_dependent,
        }


def attacks_on(attacker: Argument, sub: Argument, cm: ContrarinessMap) -> list[AttackKind]:
    """Kinds with which ``attacker`` directly attacks ``sub`` (no lifting)."""
    c = attacker.conc
    kinds = []
    if sub.has_defeasible_top:
        if cm.in_conflict(c, sub.top_rule.name):
            kinds.append(AttackKind.UNDERCUT)
        if cm.in_conflict(c, sub.conc):
            kinds.append(AttackKind.CONTRARY_REBUT if cm.is_contrary(c, sub.conc) else AttackKind.REBUT)
    elif sub.is_ordinary_premise and cm.in_conflict(c, sub.conc):
        kinds.append(AttackKind.CONTRARY_UNDERMINE if cm.is_contrary(c, sub.conc) else AttackKind.UNDERMINE)
    return kinds


def compute_attacks(args: Iterable[Argument], theory: ArgumentationTheory | ContrarinessMap) -> frozenset[Attack]:
    """Every attack record among ``args``, lifted from sub-arguments to their supers."""
    cm = theory if isinstance(theory, ContrarinessMap) else theory.contrariness
    args = list(args)
    by_conc: dict = {}
    for a in args:
        by_conc.setdefault(a.conc, []).append(a)
    supers: dict[Argument, list[Argument]] = {}
    for b in args:
        for s in b.sub:
            supers.setdefault(s, []).append(b)

    out = set()
    for sub, owners in supers.items():
        locations = []
        if sub.has_defeasible_top:
            locations += [sub.top_rule.name, sub.conc]
        elif sub.is_ordinary_premise:
            locations.append(sub.conc)
        attackers = {a for loc in locations for phi in cm.conflicts(loc) for a in by_conc.get(phi, ())}
        for a in attackers:
            for kind in attacks_on(a, sub, cm):
                for b in owners:
                    out.add(Attack(a, b, sub, kind))
    return frozenset(out)


def attack_kind_stats(attacks: Iterable[Attack], granularity: str = "record") -> dict[str, int]:
    """Count attacks per kind.

    ``record`` counts every (attacker, target, on, kind) record; ``location``
    counts distinct (attacker, on, kind) triples, ignoring lifting to supers.
    """
    attacks = list(attacks)
    if granularity == "record":
        counts = Counter(a.kind.value for a in attacks)
    elif granularity == "location":
        counts = Counter(k for _, _, k in {(a.attacker, a.on, a.kind.value) for a in attacks})
    else:
        raise ValueError(f"unknown granularity {granularity!r}")
    return {k.value: counts.get(k.value, 0) for k in AttackKind}


def sorted_attacks(attacks: Iterable[Attack]) -> list[Attack]:
    return sorted(attacks, key=Attack.sort_key)
