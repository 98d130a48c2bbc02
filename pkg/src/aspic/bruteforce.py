"""Exhaustive subset oracle for small frameworks; shares no code with the kernels."""

from __future__ import annotations

from itertools import chain, combinations

MAX_NODES = 16


def _subsets(nodes):
    return (frozenset(c) for c in chain.from_iterable(combinations(nodes, k) for k in range(len(nodes) + 1)))


def extensions(nodes, defeats, attacks, semantics: str, cf_mode: str) -> set[frozenset]:
    nodes = list(nodes)
    if len(nodes) > MAX_NODES:
        raise ValueError("too many nodes for exhaustive enumeration")
    defeats = set(defeats)
    conflicts = set(attacks) if cf_mode == "att" else defeats
    defeaters = {x: {a for a, b in defeats if b == x} for x in nodes}

    def acceptable(x, S):
        return all(any((z, y) in defeats for z in S) for y in defeaters[x])

    def conflict_free(S):
        return not any(a in S and b in S for a, b in conflicts)

    admissible = [S for S in _subsets(nodes) if conflict_free(S) and all(acceptable(x, S) for x in S)]
    if semantics == "admissible":
        return set(admissible)
    complete = [S for S in admissible if all(x in S for x in nodes if acceptable(x, S))]
    if semantics == "complete":
        return set(complete)
    if semantics == "grounded":
        return {S for S in complete if not any(T < S for T in complete)}
    preferred = [S for S in complete if not any(S < T for T in complete)]
    if semantics == "preferred":
        return set(preferred)
    if semantics == "stable":
        return {
            S for S in preferred
            if all(any((x, y) in defeats for x in S) for y in nodes if y not in S)
        }
    raise ValueError(semantics)
