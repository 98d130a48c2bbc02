"""Rationality postulates on extensions, plus seeded campaigns with witness minimization."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arguments import BuildLimits, build_arguments_report
from .attacks import compute_attacks
from .framework import StructuredAF, assemble
from .language import ArgumentationTheory, ContrarinessMap, Rule, closure_under_strict, conflicting_pairs
from .preferences import ArgOrdering
from .semantics import SEMANTICS, compare_att_def, enumerate_extensions


def check_subarg_closure(E: Iterable, args=None) -> tuple[bool, list]:
    """Every sub-argument of a member is a member; witnesses are ``(arg, missing sub)``."""
    E = set(E)
    missing = [(a, s) for a in sorted(E) for s in sorted(a.sub) if s not in E]
    return not missing, missing


def check_strict_closure(E: Iterable, rules: Iterable[Rule], all_args: Iterable | None = None, truncated: bool = False) -> tuple[bool, list, list]:
    """Conclusions closed under strict rules.

    Returns ``(ok, violations, gaps)``. A missing conclusion counts as a gap
    instead of a violation when the builder was cut short by its depth
    bound and no built argument concludes it.
    """
    concs = {a.conc for a in E}
    missing = closure_under_strict(concs, rules) - concs
    buildable = {a.conc for a in all_args} if all_args is not None else None
    violations, gaps = [], []
    for phi in sorted(missing):
        if truncated and buildable is not None and phi not in buildable:
            gaps.append(phi)
        else:
            violations.append(phi)
    return not violations, violations, gaps


def check_direct_consistency(E: Iterable, contrariness: ContrarinessMap | None = None) -> tuple[bool, list]:
    bad = conflicting_pairs({a.conc for a in E}, contrariness)
    return not bad, bad


def check_indirect_consistency(E: Iterable, rules: Iterable[Rule], contrariness: ContrarinessMap | None = None) -> tuple[bool, list]:
    bad = conflicting_pairs(closure_under_strict({a.conc for a in E}, rules), contrariness)
    return not bad, bad


@dataclass
class PostulateReport:
    extension: tuple[str, ...]
    subarg_closure: bool
    strict_closure: bool
    direct_consistency: bool
    indirect_consistency: bool
    witnesses: dict = field(default_factory=dict)
    gaps: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.subarg_closure and self.strict_closure and self.direct_consistency and self.indirect_consistency

    def to_dict(self) -> dict:
        return {
            "extension": list(self.extension),
            "subarg_closure": self.subarg_closure,
            "strict_closure": self.strict_closure,
            "direct_consistency": self.direct_consistency,
            "indirect_consistency": self.indirect_consistency,
            "witnesses": {k: [_show(w) for w in v] for k, v in sorted(self.witnesses.items())},
            "closure_gaps": [str(g) for g in self.gaps],
        }


def _show(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(_show(x) for x in w) + ")"
    if hasattr(w, "text"):
        return w.text()
    return str(w)


def check_extension(E: Iterable, theory: ArgumentationTheory, all_args=None, truncated: bool = False) -> PostulateReport:
    E = list(E)
    rules, cm = theory.strict_rules, theory.contrariness
    sub_ok, sub_w = check_subarg_closure(E)
    cl_ok, cl_w, gaps = check_strict_closure(E, rules, all_args, truncated)
    d_ok, d_w = check_direct_consistency(E, cm)
    i_ok, i_w = check_indirect_consistency(E, rules, cm)
    witnesses = {}
    for key, ok, w in (
        ("subarg_closure", sub_ok, sub_w),
        ("strict_closure", cl_ok, cl_w),
        ("direct_consistency", d_ok, d_w),
        ("indirect_consistency", i_ok, i_w),
    ):
        if not ok:
            witnesses[key] = w
    return PostulateReport(tuple(sorted(a.id for a in E)), sub_ok, cl_ok, d_ok, i_ok, witnesses, gaps)


def check_postulates(saf: StructuredAF, theory: ArgumentationTheory, semantics: str = "complete", cf_mode: str = "att") -> list[PostulateReport]:
    by_id = saf.by_id()
    truncated = bool(saf.metadata.get("pruned_by_depth"))
    exts = enumerate_extensions(saf.to_abstract(), semantics, cf_mode)
    return [check_extension([by_id[i] for i in e], theory, saf.args, truncated) for e in exts]


# ---------------------------------------------------------------------------
# campaigns

CONFIGS = tuple(itertools.product(("last", "weakest"), ("eli", "dem"), ("att", "def")))


def _safs(theory: ArgumentationTheory, limits: BuildLimits):
    """One argument/attack computation shared by every ordering."""
    built = build_arguments_report(theory, limits)
    attacks = compute_attacks(built.arguments, theory)
    meta = {"pruned_by_depth": built.pruned_by_depth}
    out = {}
    for link, setcomp in itertools.product(("last", "weakest"), ("eli", "dem")):
        ordering = ArgOrdering.from_theory(theory, link, setcomp)
        out[link, setcomp] = assemble(built.arguments, attacks, ordering, "saf", meta)
    return out


def postulate_failures(theory: ArgumentationTheory, limits: BuildLimits | None = None, configs=CONFIGS) -> list[dict]:
    limits = limits or BuildLimits()
    safs = _safs(theory, limits)
    failures = []
    for link, setcomp, cf in configs:
        for rep in check_postulates(safs[link, setcomp], theory, "complete", cf):
            if not rep.passed:
                failures.append({"config": f"{link}/{setcomp}/{cf}", "report": rep.to_dict()})
    return failures


def equivalence_failures(theory: ArgumentationTheory, limits: BuildLimits | None = None, semantics: Sequence[str] = SEMANTICS) -> list[dict]:
    limits = limits or BuildLimits()
    out = []
    for (link, setcomp), saf in _safs(theory, limits).items():
        af = saf.to_abstract()
        for sem in semantics:
            same, witness = compare_att_def(af, sem)
            if not same:
                out.append({"config": f"{link}/{setcomp}", "semantics": sem, "witness": witness})
    return out


def minimize(spec, still_fails) -> object:
    """Greedy one-at-a-time removal of theory parts while the failure persists."""
    changed = True
    while changed:
        changed = False
        for part in spec.parts():
            smaller = spec.without(part)
            try:
                fails = still_fails(smaller)
            except Exception:
                fails = False
            if fails:
                spec = smaller
                changed = True
                break
    return spec


@dataclass
class CampaignResult:
    count: int
    seed: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    sizes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "passed": self.passed,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "max_arguments_seen": max(self.sizes, default=0),
        }


def campaign_theories(count: int, seed: int, max_arguments: int = 60):
    from .generators import random_theory

    rng = random.Random(seed)
    for _ in range(count):
        yield random_theory(rng.randrange(2**32), max_arguments=max_arguments)


def run_postulate_campaign(count: int = 200, seed: int = 0, max_arguments: int = 60, equivalence: bool = True) -> tuple[CampaignResult, CampaignResult]:
    """Postulates on every complete extension, and att/def agreement, over seeded theories."""
    from .dsl import format_theory

    post = CampaignResult(count, seed)
    equiv = CampaignResult(count, seed)
    start = time.perf_counter()
    for spec, theory in campaign_theories(count, seed, max_arguments):
        built = build_arguments_report(theory)
        post.sizes.append(len(built.arguments))
        fails = postulate_failures(theory)
        if fails:
            small = minimize(spec, lambda s: bool(postulate_failures(s.build())))
            post.failures.append({
                "theory": format_theory(theory),
                "minimized": format_theory(small.build()),
                "failures": fails[:3],
            })
        if equivalence:
            diffs = equivalence_failures(theory)
            if diffs:
                small = minimize(spec, lambda s: bool(equivalence_failures(s.build())))
                equiv.failures.append({
                    "theory": format_theory(theory),
                    "minimized": format_theory(small.build()),
                    "differences": diffs[:3],
                })
    post.seconds = equiv.seconds = time.perf_counter() - start
    return post, equiv
