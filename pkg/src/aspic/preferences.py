"""Preorders, set comparisons and last/weakest-link argument orderings.

Set comparison follows the clause order: an empty left-hand set is never
below anything, a non-empty set is always below the empty set, otherwise
the elitist (``eli``) or democratic (``dem``) test decides.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .errors import UnknownElement


class Preorder:
    """Reflexive-transitive closure of declared ``x <= y`` pairs and integer ranks.

    Ranks relate every pair of ranked elements (lower rank is weaker).
    Elements that are neither ranked nor mentioned in a pair are only
    related to themselves.
    """

    __slots__ = ("_elements", "_up", "_pairs", "_ranks")

    def __init__(
        self,
        elements: Iterable[Hashable] = (),
        pairs: Iterable[tuple[Hashable, Hashable]] = (),
        ranks: Mapping[Hashable, int] | None = None,
    ):
        self._pairs = tuple(pairs)
        self._ranks = dict(ranks or {})
        elems = set(elements)
        for x, y in self._pairs:
            elems.add(x)
            elems.add(y)
        elems.update(self._ranks)
        self._elements = frozenset(elems)

        direct: dict[Hashable, set] = {e: {e} for e in elems}
        for x, y in self._pairs:
            direct[x].add(y)
        ranked = sorted(self._ranks, key=lambda e: self._ranks[e])
        for x in ranked:
            for y in ranked:
                if self._ranks[x] <= self._ranks[y]:
                    direct[x].add(y)

        up: dict[Hashable, frozenset] = {}
        for e in elems:
            seen = {e}
            stack = [e]
            while stack:
                cur = stack.pop()
                for nxt in direct[cur]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            up[e] = frozenset(seen)
        self._up = up

    @property
    def elements(self) -> frozenset:
        return self._elements

    @property
    def declared_pairs(self) -> tuple:
        return self._pairs

    @property
    def ranks(self) -> dict:
        return dict(self._ranks)

    def __contains__(self, x) -> bool:
        return x in self._elements

    def leq(self, x, y) -> bool:
        try:
            return y in self._up[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not registered in the preorder") from None

    def lt(self, x, y) -> bool:
        return self.leq(x, y) and not self.leq(y, x)

    def equiv(self, x, y) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    def with_elements(self, extra: Iterable[Hashable]) -> "Preorder":
        return Preorder(self._elements | set(extra), self._pairs, self._ranks)

    def relation(self) -> frozenset:
        """The closed relation as a set of ``(x, y)`` pairs with ``x <= y``."""
        return frozenset((x, y) for x, ups in self._up.items() for y in ups)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Preorder):
            return NotImplemented
        return self._elements == other._elements and self.relation() == other.relation()

    def __hash__(self) -> int:
        return hash((self._elements, self.relation()))

    def __repr__(self) -> str:
        return f"Preorder({len(self._elements)} elements, {len(self._pairs)} pairs)"


class SetComparison(str, Enum):
    ELI = "eli"
    DEM = "dem"


class LinkPrinciple(str, Enum):
    LAST = "last"
    WEAKEST = "weakest"


SetCompareFn = Callable[[frozenset, frozenset, Preorder], bool]


def set_compare(gamma: Iterable, gamma2: Iterable, setcomp: str | SetComparison, preorder: Preorder) -> bool:
    """``gamma`` is strictly below ``gamma2`` under the elitist or democratic comparison."""
    gamma = frozenset(gamma)
    gamma2 = frozenset(gamma2)
    for x in gamma | gamma2:
        if x not in preorder:
            raise UnknownElement(f"{x!r} is not registered in the preorder")
    if not gamma:
        return False
    if not gamma2:
        return True
    setcomp = SetComparison(setcomp)
    if setcomp is SetComparison.ELI:
        return any(all(preorder.lt(x, y) for y in gamma2) for x in gamma)
    return all(any(preorder.lt(x, y) for y in gamma2) for x in gamma)


def set_compare_leq(gamma: Iterable, gamma2: Iterable, setcomp, preorder: Preorder) -> bool:
    """Non-strict counterpart: strictly below, or the very same set."""
    gamma = frozenset(gamma)
    gamma2 = frozenset(gamma2)
    return gamma == gamma2 or set_compare(gamma, gamma2, setcomp, preorder)


@dataclass(frozen=True)
class ArgOrdering:
    """Argument ordering induced by rule and premise preorders.

    Arguments are duck-typed: anything exposing ``last_def_rules``,
    ``def_rules``, ``prem_p``, ``is_strict`` and ``is_firm`` can be compared.
    """

    principle: LinkPrinciple = LinkPrinciple.LAST
    setcomp: SetComparison = SetComparison.ELI
    rule_preorder: Preorder = field(default_factory=Preorder)
    premise_preorder: Preorder = field(default_factory=Preorder)

    def __post_init__(self):
        object.__setattr__(self, "principle", LinkPrinciple(self.principle))
        object.__setattr__(self, "setcomp", SetComparison(self.setcomp))

    @classmethod
    def from_theory(cls, theory, link="last", setcomp="eli") -> "ArgOrdering":
        return cls(link, setcomp, theory.rule_preorder, theory.premise_preorder)

    def _rules_below(self, g, g2) -> bool:
        return set_compare(g, g2, self.setcomp, self.rule_preorder)

    def _prems_below(self, g, g2) -> bool:
        return set_compare(g, g2, self.setcomp, self.premise_preorder)

    def strictly_preferred(self, b, a) -> bool:
        """``b`` is strictly weaker than ``a``."""
        if self.principle is LinkPrinciple.LAST:
            if self._rules_below(b.last_def_rules, a.last_def_rules):
                return True
            return (
                not b.last_def_rules
                and not a.last_def_rules
                and self._prems_below(b.prem_p, a.prem_p)
            )
        # weakest link: the first applicable clause decides
        if b.is_strict and a.is_strict:
            return self._prems_below(b.prem_p, a.prem_p)
        if b.is_firm and a.is_firm:
            return self._rules_below(b.def_rules, a.def_rules)
        return self._prems_below(b.prem_p, a.prem_p) and self._rules_below(b.def_rules, a.def_rules)

    def leq(self, b, a) -> bool:
        if self.strictly_preferred(b, a):
            return True
        if self.principle is LinkPrinciple.LAST:
            if a.last_def_rules:
                return a.last_def_rules == b.last_def_rules
            return a.prem_p == b.prem_p
        return a.def_rules == b.def_rules and a.prem_p == b.prem_p

    def describe(self) -> str:
        return f"{self.principle.value}-link/{self.setcomp.value}"


def arg_strictly_preferred(b, a, ordering: ArgOrdering) -> bool:
    return ordering.strictly_preferred(b, a)


def arg_leq(b, a, ordering: ArgOrdering) -> bool:
    return ordering.leq(b, a)


# ---------------------------------------------------------------------------
# property checks

@dataclass
class PropertyReport:
    """Outcome of a sampled property check; failures carry witnesses."""

    name: str
    checked: int = 0
    failures: list[tuple[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def fail(self, clause: str, witness) -> None:
        self.failures.append((clause, witness))


def _comparison(setcomp) -> SetCompareFn:
    if callable(setcomp):
        return setcomp
    mode = SetComparison(setcomp)
    return lambda g, g2, pre: set_compare(g, g2, mode, pre)


SELECTORS: dict[str, Callable[[Any], frozenset]] = {
    "last_def_rules": lambda a: a.last_def_rules,
    "def_rules": lambda a: a.def_rules,
    "prem_p": lambda a: a.prem_p,
}


def check_reasonable_inducing(
    setcomp,
    preorder: Preorder,
    samples: int = 1000,
    seed: int = 0,
    args: Sequence | None = None,
    selector: str = "prem_p",
    max_failures: int = 10,
) -> PropertyReport:
    """Sample the strict-partial-order and union-splitting conditions.

    ``setcomp`` is ``"eli"``, ``"dem"`` or a callable ``(g, g2, preorder)``.
    Sets are drawn from ``kr(arg)`` for ``args`` when given, else as random
    subsets of the preorder's elements. With at most four elements every
    subset combination is checked exhaustively.
    """
    cmp = _comparison(setcomp)
    rng = random.Random(seed)
    report = PropertyReport("reasonable-inducing")
    elements = sorted(preorder.elements, key=repr)

    if args is not None:
        pick = SELECTORS[selector]
        pool = [frozenset(pick(a)) for a in args]

        def draw():
            return rng.choice(pool)
    else:
        def draw():
            return frozenset(e for e in elements if rng.random() < 0.5)

    def record(clause, witness):
        if len(report.failures) < max_failures:
            report.fail(clause, witness)

    if args is None and len(elements) <= 4:
        subsets = [
            frozenset(c)
            for k in range(len(elements) + 1)
            for c in itertools.combinations(elements, k)
        ]
        below = {(g, h): cmp(g, h, preorder) for g in subsets for h in subsets}
        for g in subsets:
            report.checked += 1
            if below[g, g]:
                record("irreflexive", (g,))
        for g, h, k in itertools.product(subsets, repeat=3):
            report.checked += 1
            if below[g, h] and below[h, k] and not below[g, k]:
                record("transitive", (g, h, k))
        for g, h, k in itertools.product(subsets, repeat=3):
            report.checked += 1
            if below[h | k, g] and not (below[h, g] or below[k, g]):
                record("union-splitting", ((h, k), g))
        return report

    for _ in range(samples):
        g, h, k = draw(), draw(), draw()
        report.checked += 1
        if cmp(g, g, preorder):
            record("irreflexive", (g,))
        if cmp(g, h, preorder) and cmp(h, k, preorder) and not cmp(g, k, preorder):
            record("transitive", (g, h, k))
        parts = [draw() for _ in range(rng.randint(1, 3))]
        union = frozenset().union(*parts)
        if cmp(union, g, preorder) and not any(cmp(p, g, preorder) for p in parts):
            record("union-splitting", (tuple(parts), g))
    return report


def check_reasonable_sample(
    ordering: ArgOrdering,
    args: Sequence,
    samples: int = 500,
    seed: int = 0,
    max_failures: int = 10,
) -> PropertyReport:
    """Check the reasonable-ordering clauses over (sampled) argument tuples.

    Pairs are checked exhaustively; clause 2 is sampled over sets of up to
    three arguments, using strict continuations found among ``args``.
    """
    from .arguments import is_strict_continuation

    rng = random.Random(seed)
    report = PropertyReport("reasonable-ordering")
    args = list(args)
    prec = ordering.strictly_preferred

    def record(clause, witness):
        if len(report.failures) < max_failures:
            report.fail(clause, witness)

    continuations = {
        a: [x for x in args if is_strict_continuation(x, [a])] for a in args
    }
    for a in args:
        for b in args:
            report.checked += 1
            if a.is_strict and a.is_firm and b.is_fallible and not prec(b, a):
                record("1-i", (b, a))
            if b.is_strict and b.is_firm and prec(b, a):
                record("1-ii", (b, a))
            for a2 in continuations[a]:
                if not prec(a, b) and prec(a2, b):
                    record("1-iii", (a, a2, b))
                if not prec(b, a) and prec(b, a2):
                    record("1-iii", (b, a, a2))

    if not args:
        return report
    for _ in range(samples):
        n = rng.randint(1, min(3, len(args)))
        chosen = rng.sample(args, n)
        report.checked += 1
        dominated = True
        for i, ci in enumerate(chosen):
            rest = chosen[:i] + chosen[i + 1:]
            if not any(prec(x, ci) for x in args if is_strict_continuation(x, rest)):
                dominated = False
                break
        if dominated:
            record("2", tuple(chosen))
    return report


def check_strict_partial_order(
    ordering: ArgOrdering, args: Sequence, samples: int = 2000, seed: int = 0
) -> PropertyReport:
    """Irreflexivity on every argument and transitivity on sampled triples."""
    rng = random.Random(seed)
    report = PropertyReport("strict-partial-order")
    args = list(args)
    prec = ordering.strictly_preferred
    for a in args:
        report.checked += 1
        if prec(a, a):
            report.fail("irreflexive", (a,))
    if not args:
        return report
    for _ in range(samples):
        a, b, c = (rng.choice(args) for _ in range(3))
        report.checked += 1
        if prec(a, b) and prec(b, c) and not prec(a, c):
            report.fail("transitive", (a, b, c))
    return report
