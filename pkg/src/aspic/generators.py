"""Seeded random instances: rule-based theories, abstract frameworks, stratified theories."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .arguments import BuildLimits, build_arguments
from .errors import BudgetExceeded
from .language import (
    ArgumentationTheory,
    Formula,
    Rule,
    RuleKind,
    closure_under_strict,
    is_directly_consistent,
    transpose_rules,
)
from .semantics import AbstractAF


@dataclass(frozen=True)
class TheorySpec:
    """Editable description of a theory; ``build`` closes the strict rules under transposition."""

    axioms: tuple[str, ...] = ()
    premises: tuple[str, ...] = ()
    strict: tuple[tuple[tuple[str, ...], str], ...] = ()
    defeasible: tuple[tuple[str, tuple[str, ...], str], ...] = ()
    rule_ranks: dict = field(default_factory=dict, compare=False)
    premise_ranks: dict = field(default_factory=dict, compare=False)
    transpose: bool = True

    def build(self) -> ArgumentationTheory:
        srules = [Rule([Formula(a) for a in ante], Formula(c)) for ante, c in self.strict]
        if self.transpose:
            srules = list(transpose_rules(srules))
        drules = [
            Rule([Formula(a) for a in ante], Formula(c), RuleKind.DEFEASIBLE, Formula(name))
            for name, ante, c in self.defeasible
        ]
        by_name = {r.name.display: r for r in drules}
        return ArgumentationTheory.build(
            strict_rules=srules,
            defeasible_rules=drules,
            axioms=self.axioms,
            ordinary=self.premises,
            rule_ranks={by_name[n]: k for n, k in self.rule_ranks.items() if n in by_name},
            premise_ranks={Formula(p): k for p, k in self.premise_ranks.items() if p in self.premises},
        )

    def parts(self) -> list[tuple[str, int]]:
        """Removable components, used by the counterexample minimizer."""
        return (
            [("axioms", i) for i in range(len(self.axioms))]
            + [("premises", i) for i in range(len(self.premises))]
            + [("strict", i) for i in range(len(self.strict))]
            + [("defeasible", i) for i in range(len(self.defeasible))]
        )

    def without(self, part: tuple[str, int]) -> "TheorySpec":
        name, i = part
        items = getattr(self, name)
        return replace(self, **{name: items[:i] + items[i + 1:]})


def _strong(rng: random.Random, atoms: list[str]) -> str:
    a = rng.choice(atoms)
    return a if rng.random() < 0.5 else "-" + a


def _any_literal(rng: random.Random, atoms: list[str], weak_rate: float = 0.25) -> str:
    lit = _strong(rng, atoms)
    return "~" + lit if rng.random() < weak_rate else lit


def _flip(lit: str) -> str:
    """The strong-negation counterpart of a strong literal."""
    return lit[1:] if lit.startswith("-") else "-" + lit


def random_theory_spec(rng: random.Random, max_atoms: int = 6) -> TheorySpec:
    """A transposition-closed, axiom-consistent, well-formed literal theory.

    Strict rules and axioms only use strong literals, so every formula that
    transposition needs has a contradictory and no contrary ever targets a
    strict consequent or an axiom. Antecedents lean towards literals that
    are already derivable so that rules actually fire and conflict.
    """
    atoms = [chr(ord("a") + i) for i in range(rng.randint(3, max_atoms))]
    premises = tuple(dict.fromkeys(_any_literal(rng, atoms) for _ in range(rng.randint(2, 6))))
    axioms: tuple[str, ...] = ()
    if rng.random() < 0.4:
        cand = _strong(rng, atoms)
        if cand not in premises:
            axioms = (cand,)
    reachable = list(premises) + list(axioms)

    def antecedent(strong_only: bool) -> str:
        pool = [x for x in reachable if not (strong_only and x.startswith("~"))]
        if pool and rng.random() < 0.8:
            return rng.choice(pool)
        return _strong(rng, atoms) if strong_only else _any_literal(rng, atoms)

    def head(strong_only: bool) -> str:
        strong = [x.lstrip("~") for x in reachable]
        if strong and rng.random() < 0.5:
            lit = _flip(rng.choice(strong))
        else:
            lit = _strong(rng, atoms)
        if not strong_only and rng.random() < 0.2:
            lit = "~" + lit
        return lit

    defeasible = []
    for j in range(1, rng.randint(2, 5) + 1):
        ante = tuple(dict.fromkeys(antecedent(False) for _ in range(rng.randint(0, 2))))
        if j > 1 and rng.random() < 0.15:
            h = f"-d{rng.randint(1, j - 1)}"
        else:
            h = head(False)
        if h in ante or any(sorted(ante) == sorted(a) and h == x for _, a, x in defeasible):
            continue
        defeasible.append((f"d{j}", ante, h))
        reachable.append(h)
    strict = []
    for _ in range(rng.randint(1, 3)):
        ante = tuple(dict.fromkeys(antecedent(True) for _ in range(rng.randint(1, 2))))
        h = head(True)
        if h in ante or _flip(h) in ante:
            continue
        strict.append((ante, h))
        reachable.append(h)
    spec = TheorySpec(
        axioms=axioms,
        premises=premises,
        strict=tuple(strict),
        defeasible=tuple(defeasible),
        rule_ranks={name: rng.randint(0, 2) for name, _, _ in defeasible if rng.random() < 0.7},
        premise_ranks={p: rng.randint(0, 2) for p in premises if rng.random() < 0.7},
    )
    th = spec.build()
    if not is_directly_consistent(closure_under_strict(th.kb.axioms, th.strict_rules), th.contrariness):
        spec = replace(spec, axioms=())
    return spec


def random_theory(seed: int, max_arguments: int = 60, max_atoms: int = 6, attempts: int = 200) -> tuple[TheorySpec, ArgumentationTheory]:
    """Draw until the argument set stays within ``max_arguments``."""
    rng = random.Random(seed)
    limits = BuildLimits(max_arguments=max_arguments)
    for _ in range(attempts):
        spec = random_theory_spec(rng, max_atoms)
        theory = spec.build()
        try:
            build_arguments(theory, limits)
        except BudgetExceeded:
            continue
        return spec, theory
    raise BudgetExceeded(f"no theory within {max_arguments} arguments after {attempts} draws")


def random_af(rng: random.Random, max_nodes: int = 12, density: float | None = None, extra_attacks: float = 0.3) -> AbstractAF:
    """Random framework; some attacks are left without a matching defeat."""
    n = rng.randint(1, max_nodes)
    p = density if density is not None else rng.uniform(0.05, 0.35)
    nodes = tuple(f"n{i}" for i in range(n))
    defeats, attacks = set(), set()
    for x in nodes:
        for y in nodes:
            if rng.random() < p:
                attacks.add((x, y))
                if rng.random() >= extra_attacks:
                    defeats.add((x, y))
    return AbstractAF(nodes, frozenset(defeats), frozenset(attacks))


def random_stratified(rng: random.Random, max_formulas: int = 6, max_atoms: int = 5, max_strata: int = 3):
    from .classical.logic import Atom, Binary, Not, negate
    from .classical.subtheories import StratifiedTheory

    atoms = [Atom(chr(ord("p") + i)) for i in range(rng.randint(1, max_atoms))]

    def formula(depth: int):
        if depth == 0 or rng.random() < 0.4:
            a = rng.choice(atoms)
            return Not(a) if rng.random() < 0.4 else a
        if rng.random() < 0.2:
            return Not(formula(depth - 1))
        return Binary(rng.choice("&|>"), formula(depth - 1), formula(depth - 1))

    pool: list = []
    source: dict = {}  # negated formula -> the formula it negates
    for _ in range(rng.randint(min(3, max_formulas), max_formulas)):
        # negating an earlier formula keeps conflicts, and so several subtheories, common
        if pool and rng.random() < 0.35:
            g = rng.choice(pool)
            f = negate(g)
            source.setdefault(f, g)
        else:
            f = formula(2)
        if f not in pool:
            pool.append(f)
    k = rng.randint(1, min(max_strata, len(pool)))
    where: dict = {}
    for i, f in enumerate(pool):
        if f in source and source[f] in where and rng.random() < 0.6:
            where[f] = where[source[f]]
        else:
            where[f] = i if i < k else rng.randrange(k)
    strata = [[f for f in pool if where[f] == j] for j in range(k)]
    strata = [s for s in strata if s]
    return StratifiedTheory(tuple(tuple(s) for s in strata))
