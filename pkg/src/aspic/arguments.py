"""Argument trees, their accessors and the bounded argument builder."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded
from .language import ArgumentationTheory, Formula, Rule, is_c_inconsistent_set


class Argument:
    """An inference tree whose leaves are knowledge-base formulas.

    Build leaves with :meth:`premise` and inner nodes with :meth:`apply`.
    All accessor sets are computed once at construction.
    """

    __slots__ = (
        "conc", "top_rule", "children", "axiom", "id",
        "prem", "prem_n", "prem_p", "sub", "rules", "def_rules",
        "strict_rules", "last_def_rules", "depth", "tree_concs", "_hash",
    )

    def __init__(self, conc: Formula, top_rule: Rule | None, children: tuple["Argument", ...], axiom: bool):
        self.conc = conc
        self.top_rule = top_rule
        self.children = children
        self.axiom = axiom
        if top_rule is None:
            canon = ("N:" if axiom else "P:") + conc.display
            self.prem = frozenset((conc,))
            self.prem_n = self.prem if axiom else frozenset()
            self.prem_p = frozenset() if axiom else self.prem
            self.rules = frozenset()
            self.def_rules = frozenset()
            self.strict_rules = frozenset()
            self.last_def_rules = frozenset()
            self.depth = 0
            self.tree_concs = frozenset((conc,))
        else:
            r = top_rule
            canon = "R:" + "|".join((r.kind.value, str(r.name or ""), ",".join(r.key[1]), r.key[2])) + "(" + ",".join(sorted(c.id for c in children)) + ")"
            self.prem = frozenset().union(*(c.prem for c in children))
            self.prem_n = frozenset().union(*(c.prem_n for c in children))
            self.prem_p = frozenset().union(*(c.prem_p for c in children))
            self.rules = frozenset((r,)).union(*(c.rules for c in children))
            self.def_rules = frozenset(x for x in self.rules if x.is_defeasible)
            self.strict_rules = frozenset(x for x in self.rules if x.is_strict)
            if r.is_defeasible:
                self.last_def_rules = frozenset((r,))
            else:
                self.last_def_rules = frozenset().union(*(c.last_def_rules for c in children))
            self.depth = 1 + max((c.depth for c in children), default=0)
            self.tree_concs = frozenset((conc,)).union(*(c.tree_concs for c in children))
        self.id = hashlib.sha1(canon.encode()).hexdigest()[:12]
        self._hash = hash(self.id)
        self.sub = frozenset((self,)).union(*(c.sub for c in children))

    @classmethod
    def premise(cls, phi: Formula | str, axiom: bool = False) -> "Argument":
        return cls(Formula(phi) if isinstance(phi, str) else phi, None, (), axiom)

    @classmethod
    def apply(cls, rule: Rule, children: Sequence["Argument"]) -> "Argument":
        children = tuple(children)
        if len(children) != len(rule.antecedents) or any(
            c.conc is not a for c, a in zip(children, rule.antecedents)
        ):
            raise ValueError(f"children do not match the antecedents of {rule}")
        return cls(rule.consequent, rule, children, False)

    # classification -------------------------------------------------------
    @property
    def is_premise(self) -> bool:
        return self.top_rule is None

    @property
    def is_strict(self) -> bool:
        return not self.def_rules

    @property
    def is_defeasible(self) -> bool:
        return bool(self.def_rules)

    @property
    def is_firm(self) -> bool:
        return not self.prem_p

    @property
    def is_plausible(self) -> bool:
        return bool(self.prem_p)

    @property
    def is_fallible(self) -> bool:
        return self.is_plausible or self.is_defeasible

    @property
    def has_defeasible_top(self) -> bool:
        return self.top_rule is not None and self.top_rule.is_defeasible

    @property
    def is_ordinary_premise(self) -> bool:
        return self.top_rule is None and not self.axiom

    # identity -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Argument):
            return NotImplemented
        return self.id == other.id

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Argument") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.depth, self.conc.display, self.id)

    def text(self) -> str:
        if self.top_rule is None:
            return self.conc.display
        inner = ", ".join(c.text() for c in self.children)
        return f"[{inner} {self.top_rule.arrow()} {self.conc}]"

    def __repr__(self) -> str:
        return f"Argument({self.text()})"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "conc": self.conc.display,
            "text": self.text(),
            "prem": sorted(f.display for f in self.prem),
            "prem_p": sorted(f.display for f in self.prem_p),
            "rules": [
                {
                    "kind": r.kind.value,
                    "name": r.name.display if r.name is not None else None,
                    "ante": [a.display for a in r.antecedents],
                    "cons": r.consequent.display,
                }
                for r in sorted(self.rules)
            ],
            "top_rule": str(self.top_rule) if self.top_rule is not None else None,
            "sub_ids": sorted(s.id for s in self.sub),
        }


@dataclass(frozen=True)
class BuildLimits:
    """Bounds that keep construction finite on cyclic rule sets."""

    max_depth: int = 32
    distinct_conclusions_per_path: bool = True
    max_arguments: int = 100_000

    def __post_init__(self):
        if self.max_depth < 0 or self.max_arguments < 1:
            raise ValueError("limits must be positive")

    def to_dict(self) -> dict:
        return {
            "max_depth": self.max_depth,
            "distinct_conclusions_per_path": self.distinct_conclusions_per_path,
            "max_arguments": self.max_arguments,
        }


@dataclass(frozen=True)
class BuildResult:
    arguments: frozenset
    pruned_by_depth: int
    pruned_by_path: int


def build_arguments_report(theory: ArgumentationTheory, limits: BuildLimits | None = None) -> BuildResult:
    """Semi-naive fixpoint over the rules; also counts candidates the limits dropped."""
    limits = limits or BuildLimits()
    by_conc: dict[Formula, list[Argument]] = {}
    seen: set[str] = set()
    pruned_depth = pruned_path = 0

    def add(arg: Argument, bucket: list) -> None:
        if arg.id in seen:
            return
        seen.add(arg.id)
        if len(seen) > limits.max_arguments:
            raise BudgetExceeded(f"more than {limits.max_arguments} arguments")
        bucket.append(arg)

    delta: list[Argument] = []
    for phi in sorted(theory.kb.axioms):
        add(Argument.premise(phi, axiom=True), delta)
    for phi in sorted(theory.kb.ordinary):
        add(Argument.premise(phi, axiom=False), delta)
    for r in theory.rules:
        if not r.antecedents:
            add(Argument.apply(r, ()), delta)

    rules = [r for r in theory.rules if r.antecedents]
    while delta:
        delta_by: dict[Formula, list[Argument]] = {}
        for a in delta:
            delta_by.setdefault(a.conc, []).append(a)
        old_by = {k: list(v) for k, v in by_conc.items()}
        for a in delta:
            by_conc.setdefault(a.conc, []).append(a)
        fresh: list[Argument] = []
        for r in rules:
            ante = r.antecedents
            if not any(x in delta_by for x in ante):
                continue
            for i, x in enumerate(ante):
                if x not in delta_by:
                    continue
                pools = [
                    old_by.get(y, ()) if j < i else (delta_by[y] if j == i else by_conc.get(y, ()))
                    for j, y in enumerate(ante)
                ]
                if any(not p for p in pools):
                    continue
                for combo in itertools.product(*pools):
                    if limits.distinct_conclusions_per_path and any(r.consequent in c.tree_concs for c in combo):
                        pruned_path += 1
                        continue
                    if 1 + max(c.depth for c in combo) > limits.max_depth:
                        pruned_depth += 1
                        continue
                    add(Argument(r.consequent, r, tuple(combo), False), fresh)
        delta = fresh
    args = frozenset(a for v in by_conc.values() for a in v)
    return BuildResult(args, pruned_depth, pruned_path)


def build_arguments(theory: ArgumentationTheory, limits: BuildLimits | None = None) -> frozenset[Argument]:
    return build_arguments_report(theory, limits).arguments


def max_fallible_subargs(arg: Argument) -> frozenset[Argument]:
    """Fallible-top sub-arguments not strictly inside another fallible-top sub-argument."""
    candidates = [s for s in arg.sub if s.has_defeasible_top or s.is_ordinary_premise]
    return frozenset(
        s for s in candidates
        if not any(t is not s and s in t.sub for t in candidates)
    )


def is_strict_continuation(arg: Argument, parts: Iterable[Argument]) -> bool:
    parts = list(parts)
    union = lambda attr: frozenset().union(*(getattr(p, attr) for p in parts))
    return (
        arg.prem_p == union("prem_p")
        and arg.def_rules == union("def_rules")
        and arg.strict_rules >= union("strict_rules")
        and arg.prem_n >= union("prem_n")
    )


def is_c_consistent(arg: Argument, oracle: ArgumentationTheory | Callable[[frozenset], bool]) -> bool:
    """``Prem(arg)`` derives no pair of contradictories.

    ``oracle`` is a rule-based theory (strict closure decides) or a callable
    returning whether a premise set is consistent.
    """
    if isinstance(oracle, ArgumentationTheory):
        return not is_c_inconsistent_set(arg.prem, oracle.strict_rules, oracle.contrariness)
    return bool(oracle(arg.prem))


def premise_minimal_filter(args: Iterable) -> frozenset:
    """Drop every argument beaten by one with the same conclusion and fewer premises."""
    args = list(args)
    by_conc: dict = {}
    for a in args:
        by_conc.setdefault(a.conc, []).append(a)
    return frozenset(
        a for a in args
        if not any(b.prem < a.prem for b in by_conc[a.conc])
    )


def find(args: Iterable[Argument], text: str) -> Argument:
    """Look up an argument by its rendered tree text (handy in fixtures)."""
    for a in args:
        if a.text() == text:
            return a
    raise KeyError(text)
