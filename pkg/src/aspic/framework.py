"""Defeats and structured argumentation frameworks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .arguments import Argument, BuildLimits, build_arguments_report, is_c_consistent
from .attacks import Attack, compute_attacks
from .language import ArgumentationTheory, check_well_defined
from .preferences import ArgOrdering


@dataclass(frozen=True, order=True)
class Defeat:
    attacker: Argument
    target: Argument
    on: Argument

    def sort_key(self) -> tuple:
        return (self.attacker.id, self.target.id, self.on.id)

    def to_dict(self) -> dict:
        return {"attacker": self.attacker.id, "target": self.target.id, "on": self.on.id}


def attack_succeeds(attack: Attack, ordering: ArgOrdering) -> bool:
    if not attack.preference_dependent:
        return True
    return not ordering.strictly_preferred(attack.attacker, attack.on)


def compute_defeats(attacks: Iterable[Attack], ordering: ArgOrdering) -> frozenset[Defeat]:
    """Preference-independent attacks always succeed; the rest need ``attacker`` not below ``on``."""
    return frozenset(
        Defeat(a.attacker, a.target, a.on) for a in attacks if attack_succeeds(a, ordering)
    )


@dataclass(frozen=True)
class StructuredAF:
    args: tuple[Argument, ...]
    attacks: frozenset[Attack]
    defeats: frozenset[Defeat]
    ordering: ArgOrdering
    mode: str = "saf"
    metadata: dict = field(default_factory=dict, compare=False)

    def attack_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset((a.attacker.id, a.target.id) for a in self.attacks)

    def defeat_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset((d.attacker.id, d.target.id) for d in self.defeats)

    def by_id(self) -> dict[str, Argument]:
        return {a.id: a for a in self.args}

    def defeats_pair(self, a: Argument, b: Argument) -> bool:
        return (a.id, b.id) in self.defeat_pairs()

    def strictly_defeats(self, a: Argument, b: Argument) -> bool:
        pairs = self.defeat_pairs()
        return (a.id, b.id) in pairs and (b.id, a.id) not in pairs

    def to_abstract(self):
        from .semantics import AbstractAF

        return AbstractAF(
            tuple(a.id for a in self.args),
            self.defeat_pairs(),
            self.attack_pairs(),
        )


def strictly_defeats(saf: StructuredAF, a: Argument, b: Argument) -> bool:
    return saf.strictly_defeats(a, b)


def assemble(args: Iterable, attacks: Iterable[Attack], ordering: ArgOrdering, mode: str = "saf", metadata: dict | None = None) -> StructuredAF:
    attacks = frozenset(attacks)
    return StructuredAF(
        tuple(sorted(args, key=lambda a: a.sort_key())),
        attacks,
        compute_defeats(attacks, ordering),
        ordering,
        mode,
        dict(metadata or {}),
    )


def build_saf(
    theory: ArgumentationTheory,
    ordering: ArgOrdering | None = None,
    mode: str = "saf",
    limits: BuildLimits | None = None,
    link: str = "last",
    setcomp: str = "eli",
    report_well_defined: bool = True,
) -> StructuredAF:
    """Build arguments, attacks and defeats; c-SAF mode keeps only c-consistent arguments."""
    if mode not in ("saf", "c-saf"):
        raise ValueError(f"unknown mode {mode!r}")
    ordering = ordering or ArgOrdering.from_theory(theory, link, setcomp)
    limits = limits or BuildLimits()
    built = build_arguments_report(theory, limits)
    args = built.arguments
    if mode == "c-saf":
        args = frozenset(a for a in args if is_c_consistent(a, theory))
    attacks = compute_attacks(args, theory)
    metadata = {
        "limits": limits.to_dict(),
        "pruned_by_depth": built.pruned_by_depth,
        "pruned_by_path": built.pruned_by_path,
        "ordering": ordering.describe(),
    }
    if report_well_defined:
        metadata["well_defined"] = check_well_defined(theory, mode).to_dict()
    return assemble(args, attacks, ordering, mode, metadata)
