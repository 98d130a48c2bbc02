# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled labelling search; same contract as the pure-Python module.

Sets are stored as arrays of 64-bit words so frameworks of any size fit.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef struct Graph:
    int n
    int W
    int complete
    uint64_t* att
    uint64_t* tgt
    uint64_t* conf
    uint64_t* scratch


cdef inline bint has(const uint64_t* s, int i) nogil:
    return (s[i >> 6] >> (i & 63)) & 1


cdef void load(uint64_t* dst, object mask, int W):
    cdef int k
    m = int(mask)
    for k in range(W):
        dst[k] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
        m >>= 64


cdef object dump(const uint64_t* src, int W):
    out = 0
    cdef int k
    for k in range(W - 1, -1, -1):
        out = (out << 64) | <object>src[k]
    return out


cdef bint propagate(Graph* g, uint64_t* ins, uint64_t* outs) nogil:
    cdef int W = g.W, n = g.n
    cdef uint64_t* banned = g.scratch
    cdef uint64_t* defended = g.scratch + W
    cdef uint64_t* threats = g.scratch + 2 * W
    cdef uint64_t* force = g.scratch + 3 * W
    cdef int k, j, i, y, x, cnt
    cdef uint64_t w, c, acc
    cdef bint changed
    cdef const uint64_t* row
    while True:
        memset(banned, 0, W * sizeof(uint64_t))
        memset(defended, 0, W * sizeof(uint64_t))
        memset(threats, 0, W * sizeof(uint64_t))
        memset(force, 0, W * sizeof(uint64_t))
        for k in range(W):
            w = ins[k]
            while w:
                i = (k << 6) + __builtin_ctzll(w)
                w &= w - 1
                for j in range(W):
                    banned[j] |= g.conf[i * W + j]
                    defended[j] |= g.tgt[i * W + j]
                    threats[j] |= g.att[i * W + j]
        changed = False
        for k in range(W):
            if banned[k] & ins[k]:
                return False
            if banned[k] & ~outs[k]:
                changed = True
            outs[k] |= banned[k]

        for k in range(W):
            w = threats[k] & ~defended[k]
            while w:
                y = (k << 6) + __builtin_ctzll(w)
                w &= w - 1
                row = g.att + y * W
                cnt = 0
                acc = 0
                for j in range(W):
                    c = row[j] & ~outs[j]
                    if c:
                        cnt += __builtin_popcountll(c)
                        if cnt > 1:
                            break
                if cnt == 0:
                    return False
                if cnt == 1:
                    for j in range(W):
                        c = row[j] & ~outs[j]
                        if c and not (c & ins[j]):
                            force[j] |= c

        if g.complete:
            for x in range(n):
                if has(ins, x):
                    continue
                row = g.att + x * W
                acc = 0
                for j in range(W):
                    acc |= row[j] & ~defended[j]
                if acc == 0:
                    if has(outs, x):
                        return False
                    force[x >> 6] |= (<uint64_t>1) << (x & 63)

        for k in range(W):
            if force[k] & outs[k]:
                return False
            if force[k] & ~ins[k]:
                changed = True
            ins[k] |= force[k]
        if not changed:
            return True


cdef bint is_solution(Graph* g, const uint64_t* ins) nogil:
    cdef int W = g.W, n = g.n
    cdef uint64_t* defended = g.scratch + W
    cdef int k, j, i, x
    cdef uint64_t w, acc
    memset(defended, 0, W * sizeof(uint64_t))
    for i in range(n):
        if has(ins, i):
            for j in range(W):
                if g.conf[i * W + j] & ins[j]:
                    return False
                defended[j] |= g.tgt[i * W + j]
    for x in range(n):
        acc = 0
        for j in range(W):
            acc |= g.att[x * W + j] & ~defended[j]
        if has(ins, x):
            if acc:
                return False
        elif g.complete and acc == 0:
            return False
    return True


cdef int walk(Graph* g, uint64_t* stack, int depth, list found, int limit) except -1:
    cdef int W = g.W, n = g.n
    cdef uint64_t* ins = stack + depth * 2 * W
    cdef uint64_t* outs = ins + W
    cdef uint64_t* nxt = ins + 2 * W
    cdef int k, pick = -1
    cdef uint64_t u
    if not propagate(g, ins, outs):
        return 0
    for k in range(W):
        u = ~(ins[k] | outs[k])
        if n == 0:
            u = 0
        elif k == W - 1 and (n & 63):
            u &= ((<uint64_t>1) << (n & 63)) - 1
        if u:
            pick = (k << 6) + __builtin_ctzll(u)
            break
    if pick < 0:
        if is_solution(g, ins):
            found.append(dump(ins, W))
            return 1 if 0 < limit <= len(found) else 0
        return 0
    memcpy(nxt, ins, 2 * W * sizeof(uint64_t))
    nxt[pick >> 6] |= (<uint64_t>1) << (pick & 63)
    if walk(g, stack, depth + 1, found, limit):
        return 1
    memcpy(nxt, ins, 2 * W * sizeof(uint64_t))
    nxt[W + (pick >> 6)] |= (<uint64_t>1) << (pick & 63)
    return walk(g, stack, depth + 1, found, limit)


def search(int n, attackers, targets, conflict, bint complete, forced_in=0, int limit=0):
    """All admissible (or complete) sets containing ``forced_in``; at most ``limit`` if positive."""
    cdef Graph g
    cdef int W = max(1, (n + 63) // 64)
    cdef int i
    cdef uint64_t* stack
    found = []
    g.n = n
    g.W = W
    g.complete = complete
    g.att = <uint64_t*>calloc(max(n, 1) * W, sizeof(uint64_t))
    g.tgt = <uint64_t*>calloc(max(n, 1) * W, sizeof(uint64_t))
    g.conf = <uint64_t*>calloc(max(n, 1) * W, sizeof(uint64_t))
    g.scratch = <uint64_t*>calloc(4 * W, sizeof(uint64_t))
    stack = <uint64_t*>calloc((n + 2) * 2 * W, sizeof(uint64_t))
    if not (g.att and g.tgt and g.conf and g.scratch and stack):
        raise MemoryError()
    try:
        for i in range(n):
            load(g.att + i * W, attackers[i], W)
            load(g.tgt + i * W, targets[i], W)
            load(g.conf + i * W, conflict[i], W)
        load(stack, forced_in, W)
        walk(&g, stack, 0, found, limit)
    finally:
        free(g.att)
        free(g.tgt)
        free(g.conf)
        free(g.scratch)
        free(stack)
    return found


def grounded(int n, attackers, targets):
    """Least fixpoint of the characteristic function (conflict-freeness not checked)."""
    cdef int W = max(1, (n + 63) // 64)
    cdef uint64_t* att = <uint64_t*>calloc(max(n, 1) * W, sizeof(uint64_t))
    cdef uint64_t* tgt = <uint64_t*>calloc(max(n, 1) * W, sizeof(uint64_t))
    cdef uint64_t* cur = <uint64_t*>calloc(W, sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>calloc(W, sizeof(uint64_t))
    cdef uint64_t* defended = <uint64_t*>calloc(W, sizeof(uint64_t))
    cdef int i, j, x
    cdef uint64_t acc
    cdef bint same
    try:
        for i in range(n):
            load(att + i * W, attackers[i], W)
            load(tgt + i * W, targets[i], W)
        while True:
            memset(defended, 0, W * sizeof(uint64_t))
            memset(nxt, 0, W * sizeof(uint64_t))
            for i in range(n):
                if has(cur, i):
                    for j in range(W):
                        defended[j] |= tgt[i * W + j]
            for x in range(n):
                acc = 0
                for j in range(W):
                    acc |= att[x * W + j] & ~defended[j]
                if acc == 0:
                    nxt[x >> 6] |= (<uint64_t>1) << (x & 63)
            same = True
            for j in range(W):
                if nxt[j] != cur[j]:
                    same = False
            if same:
                return dump(cur, W)
            memcpy(cur, nxt, W * sizeof(uint64_t))
    finally:
        free(att)
        free(tgt)
        free(cur)
        free(nxt)
        free(defended)
