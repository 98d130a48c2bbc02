"""Dung semantics over defeats, with attack- or defeat-based conflict-freeness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import kernels
from .errors import BudgetExceeded

SEMANTICS = ("admissible", "complete", "grounded", "preferred", "stable")
CF_MODES = ("att", "def")


@dataclass(frozen=True)
class AbstractAF:
    """Nodes plus defeat edges; ``attacks`` defaults to the defeats."""

    nodes: tuple[str, ...]
    defeats: frozenset[tuple[str, str]] = frozenset()
    attacks: frozenset[tuple[str, str]] | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(dict.fromkeys(self.nodes)))
        object.__setattr__(self, "defeats", frozenset(self.defeats))
        attacks = self.defeats if self.attacks is None else frozenset(self.attacks)
        object.__setattr__(self, "attacks", attacks)
        if not self.defeats <= attacks:
            raise ValueError("every defeat must also be an attack")
        known = set(self.nodes)
        for x, y in attacks:
            if x not in known or y not in known:
                raise ValueError(f"edge ({x}, {y}) mentions an unknown node")

    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.nodes)}

    def defeaters(self, x: str) -> set[str]:
        return {a for a, b in self.defeats if b == x}

    def conflict_edges(self, cf_mode: str) -> frozenset:
        if cf_mode not in CF_MODES:
            raise ValueError(f"unknown conflict-freeness mode {cf_mode!r}")
        return self.attacks if cf_mode == "att" else self.defeats

    def bitsets(self, cf_mode: str):
        """``(attackers, targets, conflict)`` bitmask lists for the kernels."""
        idx = self.index()
        n = len(self.nodes)
        attackers = [0] * n
        targets = [0] * n
        conflict = [0] * n
        for a, b in self.defeats:
            attackers[idx[b]] |= 1 << idx[a]
            targets[idx[a]] |= 1 << idx[b]
        for a, b in self.conflict_edges(cf_mode):
            conflict[idx[a]] |= 1 << idx[b]
            conflict[idx[b]] |= 1 << idx[a]
        return attackers, targets, conflict


@dataclass(frozen=True)
class ExtensionSet:
    semantics: str
    cf_mode: str
    extensions: tuple[frozenset[str], ...]
    justified: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        exts = tuple(sorted({frozenset(e) for e in self.extensions}, key=lambda e: sorted(e)))
        object.__setattr__(self, "extensions", exts)

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)

    def __contains__(self, ext) -> bool:
        return frozenset(ext) in self.extensions

    def as_sets(self) -> set[frozenset[str]]:
        return set(self.extensions)

    def with_justified(self, args) -> "ExtensionSet":
        return ExtensionSet(self.semantics, self.cf_mode, self.extensions, justified_conclusions(self, args))

    def to_dict(self) -> dict:
        return {
            "semantics": self.semantics,
            "cf_mode": self.cf_mode,
            "extensions": [sorted(e) for e in self.extensions],
            "justified": dict(sorted(self.justified.items())),
        }


# ---------------------------------------------------------------------------
# set-level predicates (direct, used by tests and the postulate checker)

def is_acceptable(x: str, S: Iterable[str], af: AbstractAF) -> bool:
    """Every defeater of ``x`` is defeated by some member of ``S``."""
    S = set(S)
    for y in af.defeaters(x):
        if not any((z, y) in af.defeats for z in S):
            return False
    return True


def is_conflict_free(S: Iterable[str], af: AbstractAF, cf_mode: str = "att") -> bool:
    S = set(S)
    return not any(a in S and b in S for a, b in af.conflict_edges(cf_mode))


def is_admissible(S: Iterable[str], af: AbstractAF, cf_mode: str = "att") -> bool:
    S = set(S)
    return is_conflict_free(S, af, cf_mode) and all(is_acceptable(x, S, af) for x in S)


def is_complete(S: Iterable[str], af: AbstractAF, cf_mode: str = "att") -> bool:
    S = set(S)
    return is_admissible(S, af, cf_mode) and all(
        x in S for x in af.nodes if is_acceptable(x, S, af)
    )


# ---------------------------------------------------------------------------
# enumeration

def _masks_to_sets(masks: Iterable[int], nodes: tuple[str, ...]) -> list[frozenset[str]]:
    out = []
    for m in masks:
        out.append(frozenset(nodes[i] for i in range(len(nodes)) if (m >> i) & 1))
    return out


def _maximal(masks: list[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    keep: list[int] = []
    for m in masks:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


def extension_masks(af: AbstractAF, semantics: str, cf_mode: str = "att", kernel: str | None = None, forced_in: int = 0, limit: int = 0) -> list[int]:
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    k = kernels.get(kernel)
    n = len(af.nodes)
    attackers, targets, conflict = af.bitsets(cf_mode)
    if semantics == "grounded":
        g = k.grounded(n, attackers, targets)
        ok = not any(conflict[i] & g for i in range(n) if (g >> i) & 1)
        return [g] if ok and (g & forced_in) == forced_in else []
    if semantics == "admissible":
        return k.search(n, attackers, targets, conflict, False, forced_in, limit)
    complete = k.search(n, attackers, targets, conflict, True, forced_in, 0 if semantics != "complete" else limit)
    if semantics == "complete":
        return complete
    preferred = _maximal(complete)
    if semantics == "preferred":
        return preferred
    full = (1 << n) - 1
    stable = []
    for m in preferred:
        hit = 0
        for i in range(n):
            if (m >> i) & 1:
                hit |= targets[i]
        if (m | hit) & full == full:
            stable.append(m)
    return stable


def enumerate_extensions(
    af: AbstractAF,
    semantics: str = "complete",
    cf_mode: str = "att",
    kernel: str | None = None,
    max_nodes: int | None = None,
) -> ExtensionSet:
    """All extensions of one semantics. Output order is lexicographic by sorted ids."""
    if max_nodes is not None and len(af.nodes) > max_nodes:
        raise BudgetExceeded(f"{len(af.nodes)} nodes exceed the bound of {max_nodes}")
    masks = extension_masks(af, semantics, cf_mode, kernel)
    return ExtensionSet(semantics, cf_mode, tuple(_masks_to_sets(masks, af.nodes)))


def grounded_extension(af: AbstractAF, cf_mode: str = "att", kernel: str | None = None) -> ExtensionSet:
    """Least fixpoint of the characteristic function.

    If that fixpoint is not conflict-free under ``cf_mode`` no complete
    extension exists and the result is empty.
    """
    return enumerate_extensions(af, "grounded", cf_mode, kernel)


def compare_att_def(af: AbstractAF, semantics: str, kernel: str | None = None) -> tuple[bool, dict]:
    """Whether the att- and def-mode extension sets coincide; the witness lists the differences.

    Attack conflict-freeness implies defeat conflict-freeness, so for
    admissible sets it suffices to look for a def-admissible set holding
    an attacking pair; that avoids enumerating every admissible set.
    """
    if semantics == "admissible":
        idx = af.index()
        for a, b in sorted(af.attacks - af.defeats):
            mask = (1 << idx[a]) | (1 << idx[b])
            found = extension_masks(af, "admissible", "def", kernel, forced_in=mask, limit=1)
            if found:
                return False, {"att_only": [], "def_only": [sorted(_masks_to_sets(found, af.nodes)[0])]}
        return True, {"att_only": [], "def_only": []}
    att = enumerate_extensions(af, semantics, "att", kernel).as_sets()
    dfn = enumerate_extensions(af, semantics, "def", kernel).as_sets()
    witness = {
        "att_only": sorted(sorted(e) for e in att - dfn),
        "def_only": sorted(sorted(e) for e in dfn - att),
    }
    return att == dfn, witness


def justified_conclusions(ext_set: ExtensionSet, args) -> dict[str, str]:
    """Map each conclusion to ``sceptical`` or ``credulous``.

    Sceptical means every extension holds *some* argument for the
    conclusion. With no extensions at all nothing is justified.
    ``args`` maps ids to arguments (or is an iterable of arguments).
    """
    if not isinstance(args, Mapping):
        args = {a.id: a for a in args}
    per_ext = [{str(args[i].conc) for i in ext if i in args} for ext in ext_set.extensions]
    if not per_ext:
        return {}
    every = set.intersection(*per_ext)
    some = set.union(*per_ext)
    return {phi: ("sceptical" if phi in every else "credulous") for phi in sorted(some)}
