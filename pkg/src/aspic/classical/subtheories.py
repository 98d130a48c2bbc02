"""Preferred subtheories of a stratified theory, and the stable-extension correspondence.

The oracle here deliberately avoids the bit-parallel tables and the
argumentation code: it evaluates formulas recursively on explicit
valuations so the correspondence check compares two independent paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import AtomBudget, TheoryError
from .logic import MAX_ATOMS, Atom, Binary, Not, PropFormula, parse_formula


@dataclass(frozen=True)
class StratifiedTheory:
    """Strata in decreasing preference: ``strata[0]`` is the most preferred."""

    strata: tuple[tuple[PropFormula, ...], ...]
    queries: tuple[PropFormula, ...] = field(default_factory=tuple)

    def __post_init__(self):
        strata = tuple(
            tuple(parse_formula(f) if isinstance(f, str) else f for f in s) for s in self.strata
        )
        queries = tuple(parse_formula(f) if isinstance(f, str) else f for f in self.queries)
        object.__setattr__(self, "strata", strata)
        object.__setattr__(self, "queries", queries)
        seen = set()
        for s in strata:
            for f in s:
                if f in seen:
                    raise TheoryError(f"{f} occurs in more than one stratum")
                seen.add(f)

    @property
    def formulas(self) -> list[PropFormula]:
        return [f for s in self.strata for f in s]

    def stratum_of(self, f: PropFormula) -> int:
        for i, s in enumerate(self.strata, 1):
            if f in s:
                return i
        raise KeyError(str(f))

    def leq(self, a: PropFormula, b: PropFormula) -> bool:
        """``a`` is at most as preferred as ``b``."""
        return self.stratum_of(a) >= self.stratum_of(b)


def _holds(f: PropFormula, v: dict[str, bool]) -> bool:
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Not):
        return not _holds(f.sub, v)
    if isinstance(f, Binary):
        a = _holds(f.left, v)
        if f.op == "&":
            return a and _holds(f.right, v)
        if f.op == "|":
            return a or _holds(f.right, v)
        return (not a) or _holds(f.right, v)
    raise TypeError(f)


def _satisfiable(S, atoms: Sequence[str]) -> bool:
    for bits in itertools.product((False, True), repeat=len(atoms)):
        v = dict(zip(atoms, bits))
        if all(_holds(f, v) for f in S):
            return True
    return False


def preferred_subtheories(theory: StratifiedTheory) -> set[frozenset[PropFormula]]:
    """Stratum by stratum, extend each partial subtheory by every maximal consistent addition."""
    atoms = sorted({a for f in theory.formulas for a in f.atoms()})
    if len(atoms) > MAX_ATOMS:
        raise AtomBudget(f"{len(atoms)} atoms exceed the bound of {MAX_ATOMS}")
    memo: dict[frozenset, bool] = {}

    def sat(S: frozenset) -> bool:
        if S not in memo:
            memo[S] = _satisfiable(S, atoms)
        return memo[S]

    partial = [frozenset()]
    for stratum in theory.strata:
        stratum = list(stratum)
        grown = []
        for base in partial:
            ok = [
                frozenset(c)
                for k in range(len(stratum) + 1)
                for c in itertools.combinations(stratum, k)
                if sat(base | frozenset(c))
            ]
            for T in ok:
                if not any(T < U for U in ok):
                    grown.append(base | T)
        partial = grown
    return set(partial)


def verify_ps_correspondence(
    theory: StratifiedTheory,
    claims=None,
    link: str = "last",
    setcomp: str = "eli",
) -> tuple[bool, dict]:
    """Stable extensions versus preferred subtheories, in both directions."""
    from .instantiation import build_classical_csaf
    from ..semantics import enumerate_extensions

    sigma = theory.formulas
    saf = build_classical_csaf(
        sigma, [list(s) for s in theory.strata], claims, link, setcomp, queries=theory.queries
    )
    by_id = saf.by_id()
    stable = enumerate_extensions(saf.to_abstract(), "stable", "att")
    ps = preferred_subtheories(theory)

    unions = {}
    for ext in stable:
        u = frozenset().union(*(by_id[i].support for i in ext)) if ext else frozenset()
        unions[ext] = u
    not_ps = [sorted(map(str, u)) for u in unions.values() if u not in ps]

    not_stable = []
    stable_sets = stable.as_sets()
    for p in ps:
        members = frozenset(a.id for a in saf.args if a.support <= p)
        if members not in stable_sets:
            not_stable.append(sorted(map(str, p)))

    witness = {
        "stable_union_not_ps": sorted(not_ps),
        "ps_args_not_stable": sorted(not_stable),
        "stable_count": len(stable),
        "ps_count": len(ps),
    }
    return not not_ps and not not_stable, witness
