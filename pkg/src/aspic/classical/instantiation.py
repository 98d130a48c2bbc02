"""Classical-logic instantiation: arguments are minimal consistent (support, claim) pairs.

Cn is infinite, so arguments are only built for claims in a finite
universe (by default every premise, its negation and any user query).
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..attacks import AttackKind
from ..errors import ClaimsEmpty
from ..framework import StructuredAF, assemble
from ..preferences import ArgOrdering, Preorder
from ..semantics import enumerate_extensions
from .logic import PropFormula, TruthTable, negate, parse_formula

ATTACK_VARIANTS = ("direct-defeat", "direct-undercut", "undermine")


class ClassicalArgument:
    """``(support, claim)``; exposes the same accessors as a rule-based argument."""

    __slots__ = ("support", "claim", "id", "sub", "_hash")

    prem_n = frozenset()
    def_rules = frozenset()
    last_def_rules = frozenset()
    rules = frozenset()
    strict_rules = frozenset()
    is_strict = True
    is_defeasible = False
    has_defeasible_top = False
    axiom = False

    def __init__(self, support: Iterable[PropFormula], claim: PropFormula, premise_args: dict | None = None):
        self.support = frozenset(support)
        self.claim = claim
        canon = "{" + ";".join(sorted(map(str, self.support))) + "}|" + str(claim)
        self.id = hashlib.sha1(canon.encode()).hexdigest()[:12]
        self._hash = hash(self.id)
        subs = {self}
        if premise_args and not self.is_premise:
            subs.update(premise_args[s] for s in self.support)
        self.sub = frozenset(subs)

    @property
    def conc(self) -> PropFormula:
        return self.claim

    @property
    def prem(self) -> frozenset:
        return self.support

    @property
    def prem_p(self) -> frozenset:
        return self.support

    @property
    def is_premise(self) -> bool:
        return self.support == frozenset((self.claim,))

    @property
    def is_ordinary_premise(self) -> bool:
        return self.is_premise

    @property
    def is_firm(self) -> bool:
        return not self.support

    @property
    def is_plausible(self) -> bool:
        return bool(self.support)

    @property
    def is_fallible(self) -> bool:
        return bool(self.support)

    @property
    def depth(self) -> int:
        return 0 if self.is_premise else 1

    def sort_key(self) -> tuple:
        return (len(self.support), str(self.claim), self.id)

    def text(self, unicode: bool = False) -> str:
        from .logic import render

        sup = ", ".join(sorted(render(s, unicode) for s in self.support))
        return f"({{{sup}}}, {render(self.claim, unicode)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassicalArgument) and self.id == other.id

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"ClassicalArgument{self.text()}"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "support": sorted(map(str, self.support)),
            "claim": str(self.claim),
            "text": self.text(),
            "sub_ids": sorted(s.id for s in self.sub),
        }


@dataclass(frozen=True)
class ClassicalAttack:
    attacker: ClassicalArgument
    target: ClassicalArgument
    on: ClassicalArgument
    kind: AttackKind = AttackKind.UNDERMINE

    @property
    def preference_dependent(self) -> bool:
        return True

    def sort_key(self) -> tuple:
        return (self.attacker.id, self.target.id, self.on.id, self.kind.value)

    def to_dict(self) -> dict:
        return {
            "attacker": self.attacker.id,
            "target": self.target.id,
            "on": self.on.id,
            "kind": self.kind.value,
            "preference_dependent": True,
        }


def _as_formulas(items) -> list[PropFormula]:
    return [parse_formula(x) if isinstance(x, str) else x for x in items]


def default_claims(sigma: Iterable[PropFormula], queries: Iterable[PropFormula] = ()) -> list[PropFormula]:
    out = {}
    for s in sigma:
        out[s] = None
        out[negate(s)] = None
    for q in queries:
        out[q] = None
    return list(out)


def premise_preorder(sigma: Sequence[PropFormula], preference=None) -> Preorder:
    """``preference`` is a Preorder, a list of strata (first = most preferred) or a rank dict."""
    if preference is None:
        return Preorder(sigma)
    if isinstance(preference, Preorder):
        return preference.with_elements(sigma)
    if isinstance(preference, dict):
        return Preorder(sigma, ranks={(parse_formula(k) if isinstance(k, str) else k): v for k, v in preference.items()})
    strata = [_as_formulas(s) for s in preference]
    n = len(strata)
    ranks = {f: n - i for i, stratum in enumerate(strata) for f in stratum}
    return Preorder(sigma, ranks=ranks)


def classical_arguments(
    sigma: Sequence[PropFormula],
    claims: Iterable[PropFormula],
    minimal: bool = True,
    table: TruthTable | None = None,
) -> list[ClassicalArgument]:
    """All consistent ``(X, p)`` with ``X`` a subset of ``sigma`` entailing ``p``.

    With ``minimal`` only entailment-minimal supports are kept. Every premise
    argument ``({s}, s)`` is always present so sub-arguments exist.
    """
    sigma = list(dict.fromkeys(sigma))
    claims = list(dict.fromkeys(list(sigma) + list(claims)))
    table = table or TruthTable({a for f in sigma + claims for a in f.atoms()})
    subsets = [
        frozenset(c)
        for k in range(len(sigma) + 1)
        for c in itertools.combinations(sigma, k)
    ]
    consistent = [X for X in subsets if table.consistent(X)]
    premise_args = {s: ClassicalArgument((s,), s) for s in sigma if table.consistent((s,))}
    out: dict[str, ClassicalArgument] = {a.id: a for a in premise_args.values()}
    for p in claims:
        found: list[frozenset] = []
        for X in consistent:
            if minimal and any(Y <= X for Y in found):
                continue
            if table.entails(X, p):
                found.append(X)
                arg = ClassicalArgument(X, p, premise_args)
                out.setdefault(arg.id, arg)
    return sorted(out.values(), key=ClassicalArgument.sort_key)


def _attacks_premise(kind: str, claim: PropFormula, sigma_f: PropFormula, table: TruthTable) -> bool:
    neg = negate(sigma_f)
    if kind == "direct-defeat":
        return table.entails((claim,), neg)
    if kind == "direct-undercut":
        return table.equivalent(claim, neg)
    if kind == "undermine":
        return claim == neg
    raise ValueError(f"unknown attack variant {kind!r}")


def classical_attacks(args: Sequence[ClassicalArgument], variant: str, table: TruthTable) -> frozenset[ClassicalAttack]:
    premise_args = {a.claim: a for a in args if a.is_premise}
    out = set()
    for a in args:
        hits = [s for s in premise_args if _attacks_premise(variant, a.claim, s, table)]
        if not hits:
            continue
        for b in args:
            for s in hits:
                if s in b.support:
                    out.add(ClassicalAttack(a, b, premise_args[s]))
    return frozenset(out)


def build_classical_csaf(
    sigma: Iterable[PropFormula | str],
    preference=None,
    claims: Iterable[PropFormula | str] | None = None,
    link: str = "last",
    setcomp: str = "eli",
    attack: str = "direct-defeat",
    minimal: bool = True,
    queries: Iterable[PropFormula | str] = (),
) -> StructuredAF:
    sigma = _as_formulas(sigma)
    queries = _as_formulas(queries)
    if claims is None:
        claims = default_claims(sigma, queries)
    else:
        claims = _as_formulas(claims)
    if not claims and not sigma:
        raise ClaimsEmpty("no claims to build arguments for")
    pre = premise_preorder(sigma, preference)
    table = TruthTable({a for f in sigma + list(claims) for a in f.atoms()})
    args = classical_arguments(sigma, claims, minimal, table)
    attacks = classical_attacks(args, attack, table)
    ordering = ArgOrdering(link, setcomp, Preorder(), pre)
    metadata = {
        "claims": sorted(str(c) for c in dict.fromkeys(list(sigma) + list(claims))),
        "claims_note": "arguments are restricted to this finite claims universe",
        "attack": attack,
        "premise_minimal": minimal,
        "ordering": ordering.describe(),
    }
    return assemble(args, attacks, ordering, "c-saf", metadata)


def _conclusion_sets(saf: StructuredAF, semantics: str) -> set[frozenset[str]]:
    by_id = saf.by_id()
    exts = enumerate_extensions(saf.to_abstract(), semantics, "att")
    return {frozenset(str(by_id[i].conc) for i in e) for e in exts}


def no_strengthening_witness(saf: StructuredAF):
    """A pair showing that dropping premises can make an argument weaker, or None."""
    prec = saf.ordering.strictly_preferred
    args = saf.args
    for a in args:
        for a_minus in args:
            if not a_minus.prem < a.prem:
                continue
            for b in args:
                if not prec(a, b) and prec(a_minus, b):
                    return (a, a_minus, b)
    return None


def premise_minimal_equivalence_check(
    sigma: Iterable[PropFormula | str],
    preference=None,
    claims=None,
    link: str = "last",
    setcomp: str = "eli",
    semantics: Sequence[str] = ("complete", "preferred", "stable", "grounded"),
) -> dict:
    """Compare extension conclusion sets of the full and the premise-minimal frameworks.

    Returns ``{"ok": bool | None, ...}``; ``ok`` is None when the ordering
    lets a premise subset be strictly weaker, in which case the
    equivalence is not guaranteed and the check is skipped.
    """
    full = build_classical_csaf(sigma, preference, claims, link, setcomp, minimal=False)
    witness = no_strengthening_witness(full)
    if witness is not None:
        a, a_minus, b = witness
        return {
            "ok": None,
            "reason": "ordering is not free of strengthening: "
            f"{a.text()} is not below {b.text()} but {a_minus.text()} is",
        }
    minimal = build_classical_csaf(sigma, preference, claims, link, setcomp, minimal=True)
    diffs = {}
    for sem in semantics:
        left, right = _conclusion_sets(full, sem), _conclusion_sets(minimal, sem)
        if left != right:
            diffs[sem] = {
                "full_only": sorted(sorted(s) for s in left - right),
                "minimal_only": sorted(sorted(s) for s in right - left),
            }
    return {"ok": not diffs, "differences": diffs}
