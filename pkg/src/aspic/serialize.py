"""JSON and DOT renderings with stable ordering."""

from __future__ import annotations

import json

from .attacks import attack_kind_stats
from .framework import StructuredAF


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def saf_to_dict(saf: StructuredAF) -> dict:
    return {
        "mode": saf.mode,
        "ordering": saf.ordering.describe(),
        "arguments": [a.to_dict() for a in saf.args],
        "attacks": [a.to_dict() for a in sorted(saf.attacks, key=lambda x: x.sort_key())],
        "defeats": [d.to_dict() for d in sorted(saf.defeats, key=lambda x: x.sort_key())],
        "attack_counts": attack_kind_stats(saf.attacks),
        "metadata": saf.metadata,
    }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label(arg) -> str:
    return arg.text() if hasattr(arg, "text") else str(arg.conc)


def to_dot(saf: StructuredAF, edges: str = "both", name: str = "saf") -> str:
    """One digraph. ``edges`` is ``attacks``, ``defeats`` or ``both``.

    Attacks are solid edges labelled with their kind; defeats are bold.
    """
    if edges not in ("attacks", "defeats", "both"):
        raise ValueError(edges)
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for a in saf.args:
        lines.append(f"  {_quote(a.id)} [label={_quote(_label(a))}];")
    if edges in ("attacks", "both"):
        seen = set()
        for at in sorted(saf.attacks, key=lambda x: x.sort_key()):
            key = (at.attacker.id, at.target.id, at.kind.value)
            if key in seen:
                continue
            seen.add(key)
            lines.append(
                f"  {_quote(at.attacker.id)} -> {_quote(at.target.id)} "
                f"[style=solid, label={_quote(at.kind.value)}];"
            )
    if edges in ("defeats", "both"):
        for x, y in sorted(saf.defeat_pairs()):
            lines.append(f"  {_quote(x)} -> {_quote(y)} [style=bold, penwidth=2];")
    lines.append("}")
    return "\n".join(lines) + "\n"
