"""Object language, contrariness, rules, knowledge bases and theories.

Formulas are interned tokens. The bundled literal language accepts
``atom``, ``-atom`` (strong negation), ``~atom`` and ``~-atom`` (weak
negation of a strong literal). Defeasible-rule names are formulas too, so
``-d1`` undercuts the rule named ``d1``.
"""

from __future__ import annotations

import itertools
import random
import re
import threading
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import MissingContradictory, TheoryError
from .preferences import Preorder

_ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


class Formula:
    """Hash-consed formula token; two formulas are equal iff they are the same object."""

    __slots__ = ("id", "display")

    _table: dict[str, "Formula"] = {}
    _lock = threading.Lock()
    _next_id = 0

    def __new__(cls, display: str):
        display = display.strip()
        found = cls._table.get(display)
        if found is not None:
            return found
        with cls._lock:
            found = cls._table.get(display)
            if found is None:
                found = object.__new__(cls)
                found.id = cls._next_id
                found.display = display
                cls._next_id += 1
                cls._table[display] = found
            return found

    def __reduce__(self):
        return (Formula, (self.display,))

    def __str__(self) -> str:
        return self.display

    def __repr__(self) -> str:
        return f"Formula({self.display!r})"

    def __lt__(self, other: "Formula") -> bool:
        return self.display < other.display


def F(text: str) -> Formula:
    return Formula(text)


def parse_literal(text: str) -> tuple[bool, bool, str]:
    """Split a literal into ``(weak, strong_negated, atom)``; raise ValueError if malformed."""
    s = text.strip()
    weak = s.startswith("~")
    if weak:
        s = s[1:]
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    if not _ATOM_RE.match(s):
        raise ValueError(f"not a literal: {text!r}")
    return weak, neg, s


def is_literal(text: str) -> bool:
    try:
        parse_literal(text)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def _literal_conflicts(phi: Formula) -> tuple[Formula, ...]:
    # alpha and -alpha are contradictories; alpha is a contrary of ~alpha
    try:
        weak, neg, atom = parse_literal(phi.display)
    except ValueError:
        return ()
    if weak:
        return (Formula(("-" if neg else "") + atom),)
    return (Formula(atom if neg else "-" + atom),)


class ContrarinessMap:
    """The function mapping each formula to the set of formulas in conflict with it.

    ``declared`` holds ``(f, g)`` pairs meaning *f is in g's conflict set*.
    With ``literal_defaults`` the syntactic conflicts of the literal
    language are included as well.
    """

    def __init__(self, declared: Iterable[tuple[Formula, Formula]] = (), literal_defaults: bool = True):
        self.declared = tuple(dict.fromkeys(declared))
        self.literal_defaults = literal_defaults
        extra: dict[Formula, list[Formula]] = {}
        for f, g in self.declared:
            extra.setdefault(g, []).append(f)
        self._extra = {g: tuple(fs) for g, fs in extra.items()}

    def _ordered(self, phi: Formula) -> tuple[Formula, ...]:
        base = _literal_conflicts(phi) if self.literal_defaults else ()
        return tuple(dict.fromkeys(base + self._extra.get(phi, ())))

    def conflicts(self, phi: Formula) -> frozenset[Formula]:
        return frozenset(self._ordered(phi))

    def in_conflict(self, psi: Formula, phi: Formula) -> bool:
        """``psi`` is a contrary or contradictory of ``phi``."""
        return psi in self._ordered(phi)

    def is_contradictory(self, psi: Formula, phi: Formula) -> bool:
        return self.in_conflict(psi, phi) and self.in_conflict(phi, psi)

    def is_contrary(self, psi: Formula, phi: Formula) -> bool:
        return self.in_conflict(psi, phi) and not self.in_conflict(phi, psi)

    def classify(self, psi: Formula, phi: Formula) -> str | None:
        if not self.in_conflict(psi, phi):
            return None
        return "contradictory" if self.in_conflict(phi, psi) else "contrary"

    def contradictories(self, phi: Formula) -> tuple[Formula, ...]:
        return tuple(psi for psi in self._ordered(phi) if self.in_conflict(phi, psi))

    def contradictory(self, phi: Formula) -> Formula | None:
        """The designated contradictory: the first one declared (syntactic default first)."""
        found = self.contradictories(phi)
        return found[0] if found else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContrarinessMap):
            return NotImplemented
        return self.declared == other.declared and self.literal_defaults == other.literal_defaults

    def __hash__(self) -> int:
        return hash((self.declared, self.literal_defaults))


class RuleKind(str, Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"


class Rule:
    """An inference rule; identity is kind plus consequent plus the antecedent multiset."""

    __slots__ = ("antecedents", "consequent", "kind", "name", "_key")

    def __init__(self, antecedents: Sequence[Formula], consequent: Formula, kind=RuleKind.STRICT, name: Formula | None = None):
        self.antecedents = tuple(antecedents)
        self.consequent = consequent
        self.kind = RuleKind(kind)
        self.name = None
        if self.kind is RuleKind.STRICT and name is not None:
            raise TheoryError(f"strict rule {self} cannot carry a name")
        self.name = name
        self._key = (
            self.kind,
            tuple(sorted(a.display for a in self.antecedents)),
            consequent.display,
        )

    @property
    def is_strict(self) -> bool:
        return self.kind is RuleKind.STRICT

    @property
    def is_defeasible(self) -> bool:
        return self.kind is RuleKind.DEFEASIBLE

    @property
    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rule):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "Rule") -> bool:
        return self._key < other._key

    def arrow(self) -> str:
        return "->" if self.is_strict else "=>"

    def __str__(self) -> str:
        ante = ", ".join(a.display for a in self.antecedents)
        body = f"{ante} {self.arrow()} {self.consequent}" if ante else f"{self.arrow()} {self.consequent}"
        return f"{self.name}: {body}" if self.name is not None else body

    def __repr__(self) -> str:
        return f"Rule({self})"


def strict(antecedents: Iterable[str], consequent: str) -> Rule:
    return Rule([Formula(a) for a in antecedents], Formula(consequent), RuleKind.STRICT)


def defeasible(name: str, antecedents: Iterable[str], consequent: str) -> Rule:
    return Rule([Formula(a) for a in antecedents], Formula(consequent), RuleKind.DEFEASIBLE, Formula(name))


@dataclass(frozen=True)
class KnowledgeBase:
    axioms: frozenset[Formula] = frozenset()
    ordinary: frozenset[Formula] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "axioms", frozenset(self.axioms))
        object.__setattr__(self, "ordinary", frozenset(self.ordinary))
        both = self.axioms & self.ordinary
        if both:
            raise TheoryError(f"axioms and ordinary premises overlap: {sorted(f.display for f in both)}")

    @property
    def all(self) -> frozenset[Formula]:
        return self.axioms | self.ordinary


@dataclass(frozen=True)
class ArgumentationTheory:
    """Argumentation system plus knowledge base and the two preorders.

    Use :meth:`build` to get rule deduplication, name checks and preorder
    registration of every defeasible rule and ordinary premise.
    """

    contrariness: ContrarinessMap
    strict_rules: tuple[Rule, ...]
    defeasible_rules: tuple[Rule, ...]
    kb: KnowledgeBase
    rule_preorder: Preorder = field(default_factory=Preorder)
    premise_preorder: Preorder = field(default_factory=Preorder)

    @classmethod
    def build(
        cls,
        strict_rules: Iterable[Rule] = (),
        defeasible_rules: Iterable[Rule] = (),
        axioms: Iterable[Formula | str] = (),
        ordinary: Iterable[Formula | str] = (),
        contrariness: ContrarinessMap | None = None,
        rule_pairs: Iterable[tuple[Rule, Rule]] = (),
        rule_ranks: dict | None = None,
        premise_pairs: Iterable[tuple[Formula, Formula]] = (),
        premise_ranks: dict | None = None,
    ) -> "ArgumentationTheory":
        srules = tuple(dict.fromkeys(strict_rules))
        drules_in = list(defeasible_rules)
        drules = tuple(dict.fromkeys(drules_in))
        for r in drules_in:
            kept = drules[drules.index(r)]
            if kept.name is not r.name:
                raise TheoryError(f"rule {r} declared under two names ({kept.name}, {r.name})")
        for r in srules:
            if not r.is_strict:
                raise TheoryError(f"{r} is not strict")
        names: dict[Formula, Rule] = {}
        for r in drules:
            if not r.is_defeasible:
                raise TheoryError(f"{r} is not defeasible")
            if r.name is None:
                raise TheoryError(f"defeasible rule {r} has no name")
            if r.name in names:
                raise TheoryError(f"rule name {r.name} used twice")
            names[r.name] = r
        kb = KnowledgeBase(
            frozenset(Formula(x) if isinstance(x, str) else x for x in axioms),
            frozenset(Formula(x) if isinstance(x, str) else x for x in ordinary),
        )
        rule_pre = Preorder(drules, rule_pairs, rule_ranks)
        unknown = rule_pre.elements - set(drules)
        if unknown:
            raise TheoryError(f"rule preference mentions unknown rules: {sorted(map(str, unknown))}")
        prem_pre = Preorder(kb.ordinary, premise_pairs, premise_ranks)
        return cls(contrariness or ContrarinessMap(), srules, drules, kb, rule_pre, prem_pre)

    @property
    def rules(self) -> tuple[Rule, ...]:
        return self.strict_rules + self.defeasible_rules

    def rule_named(self, name: Formula | str) -> Rule:
        name = Formula(name) if isinstance(name, str) else name
        for r in self.defeasible_rules:
            if r.name is name:
                return r
        raise KeyError(str(name))

    def formulas(self) -> frozenset[Formula]:
        out = set(self.kb.all)
        for r in self.rules:
            out.update(r.antecedents)
            out.add(r.consequent)
            if r.name is not None:
                out.add(r.name)
        return frozenset(out)

    def with_strict_rules(self, rules: Iterable[Rule]) -> "ArgumentationTheory":
        return ArgumentationTheory(
            self.contrariness,
            tuple(dict.fromkeys(rules)),
            self.defeasible_rules,
            self.kb,
            self.rule_preorder,
            self.premise_preorder,
        )

    def transposed(self) -> "ArgumentationTheory":
        return self.with_strict_rules(transpose_rules(self.strict_rules, self.contrariness))


# ---------------------------------------------------------------------------
# closure and consistency

def closure_under_strict(S: Iterable[Formula], rules: Iterable[Rule]) -> frozenset[Formula]:
    """Least set containing ``S`` and closed under the strict rules."""
    rules = [r for r in rules if r.is_strict]
    known = set(S)
    missing = {}
    waiting: dict[Formula, list[int]] = {}
    queue = []
    for i, r in enumerate(rules):
        need = set(r.antecedents) - known
        missing[i] = len(need)
        for a in need:
            waiting.setdefault(a, []).append(i)
        if not need:
            queue.append(i)
    while queue:
        r = rules[queue.pop()]
        c = r.consequent
        if c in known:
            continue
        known.add(c)
        for j in waiting.get(c, ()):
            missing[j] -= 1
            if missing[j] == 0:
                queue.append(j)
    return frozenset(known)


def strict_derives(S: Iterable[Formula], phi: Formula, rules: Iterable[Rule]) -> bool:
    """``S |- phi``: some strict argument with premises from ``S`` concludes ``phi``."""
    return phi in closure_under_strict(S, rules)


_DEFAULT_CONTRARINESS = ContrarinessMap()


def conflicting_pairs(S: Iterable[Formula], contrariness: ContrarinessMap | None = None) -> list[tuple[Formula, Formula]]:
    """All ``(psi, phi)`` in ``S`` with ``psi`` in the conflict set of ``phi``."""
    cm = contrariness or _DEFAULT_CONTRARINESS
    S = set(S)
    return sorted(
        ((psi, phi) for phi in S for psi in cm.conflicts(phi) if psi in S),
        key=lambda p: (p[0].display, p[1].display),
    )


def is_directly_consistent(S: Iterable[Formula], contrariness: ContrarinessMap | None = None) -> bool:
    return not conflicting_pairs(S, contrariness)


def is_indirectly_consistent(S: Iterable[Formula], rules: Iterable[Rule], contrariness: ContrarinessMap | None = None) -> bool:
    return is_directly_consistent(closure_under_strict(S, rules), contrariness)


def is_c_inconsistent_set(S: Iterable[Formula], rules: Iterable[Rule], contrariness: ContrarinessMap | None = None) -> bool:
    """``S |- phi`` and ``S |- -phi`` for some phi (contradictories only)."""
    cm = contrariness or _DEFAULT_CONTRARINESS
    cl = closure_under_strict(S, rules)
    return any(psi in cl for phi in cl for psi in cm.contradictories(phi))


# ---------------------------------------------------------------------------
# transposition

def _transpositions(rule: Rule, cm: ContrarinessMap) -> list[Rule]:
    neg_cons = cm.contradictory(rule.consequent)
    if rule.antecedents and neg_cons is None:
        raise MissingContradictory(rule.consequent)
    out = []
    for i, phi in enumerate(rule.antecedents):
        neg_phi = cm.contradictory(phi)
        if neg_phi is None:
            raise MissingContradictory(phi)
        ante = rule.antecedents[:i] + (neg_cons,) + rule.antecedents[i + 1:]
        out.append(Rule(ante, neg_phi, RuleKind.STRICT))
    return out


def transpose_rules(rules: Iterable[Rule], contrariness: ContrarinessMap | None = None) -> tuple[Rule, ...]:
    """Close a set of strict rules under transposition (idempotent)."""
    cm = contrariness or _DEFAULT_CONTRARINESS
    result = dict.fromkeys(r for r in rules if r.is_strict)
    frontier = list(result)
    while frontier:
        fresh = []
        for r in frontier:
            for t in _transpositions(r, cm):
                if t not in result:
                    result[t] = None
                    fresh.append(t)
        frontier = fresh
    return tuple(result)


def transposition_witness(rules: Iterable[Rule], contrariness: ContrarinessMap | None = None) -> list:
    """Transpositions missing from ``rules`` (or the formula lacking a contradictory)."""
    cm = contrariness or _DEFAULT_CONTRARINESS
    have = set(r for r in rules if r.is_strict)
    missing = []
    for r in sorted(have):
        try:
            ts = _transpositions(r, cm)
        except MissingContradictory as exc:
            missing.append(("missing-contradictory", exc.formula))
            continue
        missing.extend(("missing-rule", t) for t in ts if t not in have)
    return missing


# ---------------------------------------------------------------------------
# well-definedness

@dataclass
class WellDefinedReport:
    mode: str
    axiom_consistent: bool
    well_formed: bool
    transposition_closed: bool
    contraposition_sampled: bool
    c_classical_sampled: bool | None = None
    witnesses: dict[str, list] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def well_defined(self) -> bool:
        ok = self.axiom_consistent and self.well_formed and (
            self.transposition_closed or self.contraposition_sampled
        )
        if self.mode == "c-saf":
            ok = ok and bool(self.c_classical_sampled)
        return ok

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "axiom_consistent": self.axiom_consistent,
            "well_formed": self.well_formed,
            "transposition_closed": self.transposition_closed,
            "contraposition_sampled": self.contraposition_sampled,
            "c_classical_sampled": self.c_classical_sampled,
            "well_defined": self.well_defined,
            "witnesses": {k: [_show(w) for w in v] for k, v in sorted(self.witnesses.items())},
            "notes": list(self.notes),
        }


def _show(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(_show(x) for x in w) + ")"
    return str(w)


def _candidate_sets(formulas: list[Formula], max_size: int, samples: int, rng: random.Random):
    total = sum(1 for k in range(1, max_size + 1) for _ in itertools.combinations(range(len(formulas)), k)) if len(formulas) <= 14 else None
    if total is not None and total <= samples:
        for k in range(1, max_size + 1):
            for combo in itertools.combinations(formulas, k):
                yield frozenset(combo)
        return
    for _ in range(samples):
        k = rng.randint(1, max_size)
        yield frozenset(rng.sample(formulas, min(k, len(formulas))))


def check_well_defined(
    theory: ArgumentationTheory,
    mode: str = "saf",
    samples: int = 2000,
    max_set_size: int = 3,
    seed: int = 0,
) -> WellDefinedReport:
    """Syntactic checks plus sampled contraposition / c-classicality.

    Contraposition is only tested for minimal premise sets ``S`` of a strict
    derivation: with redundant members it would demand ex falso, which a
    rule-based language does not have.
    """
    if mode not in ("saf", "c-saf"):
        raise ValueError(f"unknown mode {mode!r}")
    cm = theory.contrariness
    rs = theory.strict_rules
    rng = random.Random(seed)
    witnesses: dict[str, list] = {}
    notes: list[str] = []

    cl_axioms = closure_under_strict(theory.kb.axioms, rs)
    bad = conflicting_pairs(cl_axioms, cm)
    if bad:
        witnesses["axiom_consistent"] = bad

    strict_heads = {r.consequent for r in rs}
    wf = []
    for psi in sorted(theory.kb.axioms | strict_heads):
        for phi in sorted(cm.conflicts(psi)):
            if cm.is_contrary(phi, psi):
                wf.append((phi, psi))
    if wf:
        witnesses["well_formed"] = wf

    tw = transposition_witness(rs, cm)
    if tw:
        witnesses["transposition_closed"] = tw

    formulas = sorted(theory.formulas())
    self_contrary = [phi for phi in formulas if cm.in_conflict(phi, phi)]
    if self_contrary:
        witnesses["self_contrary"] = self_contrary
        notes.append("some formulas are declared contrary to themselves")
    no_contra = [phi for phi in formulas if cm.contradictory(phi) is None]
    if no_contra:
        witnesses["missing_contradictory"] = no_contra
        notes.append("formulas without a contradictory exist (allowed for weak literals)")

    pool = sorted(set(theory.kb.all) | {a for r in rs for a in r.antecedents})
    contra_fail = []
    for S in _candidate_sets(pool, max_set_size, samples, rng) if pool else ():
        cl = closure_under_strict(S, rs)
        for phi in sorted(cl - S):
            if any(phi in closure_under_strict(S - {x}, rs) for x in S):
                continue  # S is not a minimal support for phi
            neg_phi = cm.contradictory(phi)
            for s in sorted(S):
                neg_s = cm.contradictory(s)
                if neg_phi is None or neg_s is None or neg_s not in closure_under_strict((S - {s}) | {neg_phi}, rs):
                    contra_fail.append((tuple(sorted(S)), phi, s))
                    break
        if len(contra_fail) >= 10:
            break
    if contra_fail:
        witnesses["contraposition_sampled"] = contra_fail
    notes.append("contraposition is sampled, not proved")

    c_classical = None
    if mode == "c-saf":
        cpool = sorted(set(pool) | {c for phi in pool for c in cm.contradictories(phi)})
        cc_fail = []
        for S in _candidate_sets(cpool, max_set_size, samples, rng) if cpool else ():
            if not is_c_inconsistent_set(S, rs, cm):
                continue
            if any(is_c_inconsistent_set(S - {x}, rs, cm) for x in S):
                continue
            for phi in sorted(S):
                cl = closure_under_strict(S - {phi}, rs)
                if not any(c in cl for c in cm.contradictories(phi)):
                    cc_fail.append((tuple(sorted(S)), phi))
                    break
            if len(cc_fail) >= 10:
                break
        c_classical = not cc_fail
        if cc_fail:
            witnesses["c_classical_sampled"] = cc_fail
        notes.append("c-classicality is sampled, not proved")

    return WellDefinedReport(
        mode=mode,
        axiom_consistent=not bad,
        well_formed=not wf,
        transposition_closed=not tw,
        contraposition_sampled=not contra_fail,
        c_classical_sampled=c_classical,
        witnesses=witnesses,
        notes=notes,
    )
