"""Pure-Python labelling search over bitsets (fallback for the compiled kernel).

Node ``i`` is bit ``i``. ``attackers[i]`` holds the defeaters of ``i``,
``targets[i]`` the nodes ``i`` defeats and ``conflict[i]`` every node that
may not share a set with ``i`` (self included when ``i`` conflicts itself).
"""

from __future__ import annotations

import sys

_FAIL = None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _propagate(inset, outset, full, attackers, targets, conflict, complete):
    """Return the fixpoint ``(inset, outset)`` of the forcing rules, or None on a dead end."""
    while True:
        banned = 0
        for i in _bits(inset):
            banned |= conflict[i]
        if banned & inset:
            return _FAIL
        changed = bool(banned & ~outset)
        outset |= banned

        defended = 0  # everything some IN node defeats
        threats = 0  # every defeater of some IN node
        for i in _bits(inset):
            defended |= targets[i]
            threats |= attackers[i]
        force = 0
        for y in _bits(threats & ~defended):
            cands = attackers[y] & ~outset
            if not cands:
                return _FAIL
            if cands & (cands - 1) == 0 and not cands & inset:
                force |= cands

        if complete:
            for x in _bits(full & ~inset):
                if not attackers[x] & ~defended:
                    if (outset >> x) & 1:
                        return _FAIL
                    force |= 1 << x

        if force & outset:
            return _FAIL
        if force & ~inset:
            inset |= force
            changed = True
        if not changed:
            return inset, outset


def _is_solution(inset, n, attackers, targets, conflict, complete) -> bool:
    defended = 0
    for i in _bits(inset):
        if conflict[i] & inset:
            return False
        defended |= targets[i]
    for i in _bits(inset):
        if attackers[i] & ~defended:
            return False
    if complete:
        for x in range(n):
            if not (inset >> x) & 1 and not attackers[x] & ~defended:
                return False
    return True


def search(n, attackers, targets, conflict, complete, forced_in=0, limit=0):
    """All admissible (or complete) sets containing ``forced_in``; at most ``limit`` if positive."""
    full = (1 << n) - 1
    found: list[int] = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def walk(inset, outset):
        state = _propagate(inset, outset, full, attackers, targets, conflict, complete)
        if state is _FAIL:
            return False
        inset, outset = state
        undec = full & ~(inset | outset)
        if not undec:
            if _is_solution(inset, n, attackers, targets, conflict, complete):
                found.append(inset)
                return 0 < limit <= len(found)
            return False
        low = undec & -undec
        return walk(inset | low, outset) or walk(inset, outset | low)

    walk(forced_in, 0)
    return found


def grounded(n, attackers, targets):
    """Least fixpoint of the characteristic function (conflict-freeness not checked)."""
    full = (1 << n) - 1
    current = 0
    while True:
        defended = 0
        for i in _bits(current):
            defended |= targets[i]
        nxt = 0
        for x in _bits(full):
            if not attackers[x] & ~defended:
                nxt |= 1 << x
        if nxt == current:
            return current
        current = nxt
