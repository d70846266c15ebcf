# cython: language_level=3
"""Compiled search kernels.

These mirror magus._pure line for line: identical variable order, label
order, pruning rules and node counting, so the two implementations are
interchangeable and produce byte-identical outcomes. Limited to 64 vertices
(labels and vertex sets live in one machine word each).
"""

import time

from libc.string cimport memset

STATUS_NONE = 0
STATUS_FOUND = 1
STATUS_BUDGET = 2

cdef int C_NONE = 0
cdef int C_FOUND = 1
cdef int C_BUDGET = 2

DEF MAXN = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long)


cdef struct SState:
    int n
    unsigned long long adj[MAXN]
    long long deg[MAXN]
    int twin_class[MAXN]
    unsigned long long mates[MAXN]       # classmates of v (excluding v)
    int label[MAXN]
    unsigned long long used
    long long S[MAXN]
    int R[MAXN]
    int assigned
    long long D
    long long k
    long long nodes
    long long max_nodes
    double deadline
    int has_deadline
    int use_twins
    int use_pruning
    int collect_all
    int found
    int found_labels[MAXN]
    long long found_k
    # scratch per expansion
    int avail[MAXN]
    int na
    long long pre[MAXN + 1]
    long long suf[MAXN + 1]
    int pos[MAXN + 1]


cdef void _build_avail(SState *st) noexcept:
    cdef int l, i
    st.na = 0
    for l in range(1, st.n + 1):
        st.pos[l] = -1
    for l in range(1, st.n + 1):
        if not (st.used >> (l - 1)) & 1:
            st.avail[st.na] = l
            st.pos[l] = st.na
            st.na += 1
    st.pre[0] = 0
    st.suf[0] = 0
    for i in range(st.na):
        st.pre[i + 1] = st.pre[i] + st.avail[i]
        st.suf[i + 1] = st.suf[i] + st.avail[st.na - 1 - i]


cdef bint _feasible(SState *st, int v, int lab) noexcept:
    cdef unsigned long long m
    cdef int u, r, p
    cdef long long kk, w, lo, hi
    if st.use_twins and st.twin_class[v] >= 0:
        m = st.mates[v]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            if st.label[u]:
                if (u < v and st.label[u] > lab) or (u > v and st.label[u] < lab):
                    return False
    if st.use_pruning:
        kk = st.k
        m = st.adj[v]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            if st.R[u] == 1:
                w = st.S[u] + lab
                if kk == -1:
                    kk = w
                elif w != kk:
                    return False
        if st.k != -1:
            p = st.pos[lab]
            m = st.adj[v]
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                if st.R[u] >= 2:
                    r = st.R[u] - 1
                    lo = st.S[u] + lab + (st.pre[r + 1] - lab if p < r else st.pre[r])
                    hi = st.S[u] + lab + (st.suf[r + 1] - lab if p >= st.na - r else st.suf[r])
                    if not (lo <= st.k <= hi):
                        return False
    return True


cdef bint _place(SState *st, int v, int lab) noexcept:
    cdef unsigned long long m
    cdef int u, w, i, j, nun
    cdef long long k, lo, hi, max_lo, min_hi, mind, maxd, kn, tmp
    cdef long long degs_un[MAXN]
    cdef long long avail2[MAXN]
    cdef long long pre2[MAXN + 1]
    cdef long long suf2[MAXN + 1]
    cdef int na2
    st.label[v] = lab
    st.used |= 1ULL << (lab - 1)
    st.assigned += 1
    st.D += st.deg[v] * lab
    m = st.adj[v]
    while m:
        u = __builtin_ctzll(m)
        m &= m - 1
        st.S[u] += lab
        st.R[u] -= 1
    if not st.use_pruning:
        return True
    k = st.k
    m = st.adj[v]
    while m:
        u = __builtin_ctzll(m)
        m &= m - 1
        if st.R[u] == 0:
            if k == -1:
                k = st.S[u]
            elif st.S[u] != k:
                return False
    st.k = k
    na2 = 0
    for i in range(1, st.n + 1):
        if not (st.used >> (i - 1)) & 1:
            avail2[na2] = i
            na2 += 1
    pre2[0] = 0
    suf2[0] = 0
    for i in range(na2):
        pre2[i + 1] = pre2[i] + avail2[i]
        suf2[i + 1] = suf2[i] + avail2[na2 - 1 - i]
    if k != -1:
        for w in range(st.n):
            if st.R[w] > 0:
                lo = st.S[w] + pre2[st.R[w]]
                hi = st.S[w] + suf2[st.R[w]]
                if not (lo <= k <= hi):
                    return False
        nun = 0
        for w in range(st.n):
            if not st.label[w]:
                degs_un[nun] = st.deg[w]
                nun += 1
        # insertion sort ascending
        for i in range(1, nun):
            tmp = degs_un[i]
            j = i - 1
            while j >= 0 and degs_un[j] > tmp:
                degs_un[j + 1] = degs_un[j]
                j -= 1
            degs_un[j + 1] = tmp
        mind = 0
        maxd = 0
        for i in range(nun):
            mind += degs_un[i] * avail2[na2 - 1 - i]
            maxd += degs_un[i] * avail2[i]
        kn = k * st.n
        if not (st.D + mind <= kn <= st.D + maxd):
            return False
    else:
        max_lo = -1
        min_hi = -1
        for w in range(st.n):
            if st.R[w] > 0:
                lo = st.S[w] + pre2[st.R[w]]
                hi = st.S[w] + suf2[st.R[w]]
                if max_lo == -1 or lo > max_lo:
                    max_lo = lo
                if min_hi == -1 or hi < min_hi:
                    min_hi = hi
        if max_lo != -1 and max_lo > min_hi:
            return False
    return True


cdef void _unplace(SState *st, int v, int lab) noexcept:
    cdef unsigned long long m
    cdef int u
    st.label[v] = 0
    st.used &= ~(1ULL << (lab - 1))
    st.assigned -= 1
    st.D -= st.deg[v] * lab
    m = st.adj[v]
    while m:
        u = __builtin_ctzll(m)
        m &= m - 1
        st.S[u] -= lab
        st.R[u] += 1


cdef int _leaf(SState *st, set constants):
    cdef long long k, w0, w
    cdef unsigned long long m
    cdef int v, u
    if st.use_pruning:
        k = st.k
    else:
        w0 = 0
        m = st.adj[0]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            w0 += st.label[u]
        for v in range(1, st.n):
            w = 0
            m = st.adj[v]
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                w += st.label[u]
            if w != w0:
                return C_NONE
        k = w0
    if st.collect_all:
        constants.add(k)
        return C_NONE
    for v in range(st.n):
        st.found_labels[v] = st.label[v]
    st.found_k = k
    st.found = 1
    return C_FOUND


cdef int _expand(SState *st, set constants):
    cdef int v, i, l, best_v, rem, best_rem, res
    cdef long long best_d, k_save
    if st.assigned == st.n:
        return _leaf(st, constants)
    _build_avail(st)

    best_v = -1
    best_d = 0
    best_rem = 0
    for v in range(st.n):
        if st.label[v]:
            continue
        rem = 0
        for i in range(st.na):
            if _feasible(st, v, st.avail[i]):
                rem += 1
        if best_v == -1 or st.deg[v] > best_d or (st.deg[v] == best_d and rem < best_rem):
            best_v = v
            best_d = st.deg[v]
            best_rem = rem

    cdef int cand[MAXN]
    cdef int ncand = 0
    for i in range(st.na):
        if _feasible(st, best_v, st.avail[i]):
            cand[ncand] = st.avail[i]
            ncand += 1

    for i in range(ncand):
        l = cand[i]
        st.nodes += 1
        if st.max_nodes and st.nodes > st.max_nodes:
            return C_BUDGET
        if st.has_deadline and (st.nodes & 4095) == 0:
            if time.monotonic() > st.deadline:
                return C_BUDGET
        k_save = st.k
        res = C_NONE
        if _place(st, best_v, l):
            res = _expand(st, constants)
        _unplace(st, best_v, l)
        st.k = k_save
        if res != C_NONE:
            return res
    return C_NONE


def search_core(
    n,
    adj,
    max_nodes=0,
    timeout_secs=0.0,
    use_twins=True,
    use_pruning=True,
    collect_all=False,
):
    """Compiled twin of magus._pure.search_core; same contract."""
    if not 1 <= n <= MAXN:
        raise ValueError(f"compiled kernel handles 1..{MAXN} vertices")
    cdef SState st
    memset(&st, 0, sizeof(st))
    st.n = n
    cdef int v, u
    for v in range(n):
        st.adj[v] = <unsigned long long> adj[v]
        st.deg[v] = <long long> (<object> adj[v]).bit_count()
        st.twin_class[v] = -1
        st.mates[v] = 0
    if use_twins:
        groups = {}
        for v in range(n):
            groups.setdefault(adj[v], []).append(v)
        cls = 0
        for group in groups.values():
            if len(group) > 1:
                for v in group:
                    st.twin_class[v] = cls
                    for u in group:
                        if u != v:
                            st.mates[v] |= 1ULL << u
                cls += 1
    for v in range(n):
        st.R[v] = <int> st.deg[v]
    st.k = -1
    st.max_nodes = max_nodes
    st.has_deadline = 1 if timeout_secs else 0
    st.deadline = (time.monotonic() + timeout_secs) if timeout_secs else 0.0
    st.use_twins = 1 if use_twins else 0
    st.use_pruning = 1 if use_pruning else 0
    st.collect_all = 1 if collect_all else 0
    if st.use_pruning:
        for v in range(n):
            if st.R[v] == 0:
                st.k = 0
                break
    constants = set()
    cdef int status = _expand(&st, constants)
    if status == C_FOUND:
        return STATUS_FOUND, [st.found_labels[v] for v in range(n)], st.found_k, st.nodes, []
    if status == C_BUDGET:
        return STATUS_BUDGET, None, None, st.nodes, sorted(constants)
    return STATUS_NONE, None, None, st.nodes, sorted(constants)


def naive_core(n, adj, collect_all=False):
    """Compiled twin of magus._pure.naive_core; same contract."""
    if not 1 <= n <= MAXN:
        raise ValueError(f"compiled kernel handles 1..{MAXN} vertices")
    cdef int nbr_flat[MAXN * MAXN]
    cdef int nbr_start[MAXN + 1]
    cdef int perm[MAXN]
    cdef int v, u, i, j, pos
    cdef long long w0, w, first_k
    cdef long long count = 0
    cdef bint ok, have_next
    pos = 0
    for v in range(n):
        nbr_start[v] = pos
        for u in range(n):
            if (<unsigned long long> adj[v] >> u) & 1:
                nbr_flat[pos] = u
                pos += 1
    nbr_start[n] = pos
    for v in range(n):
        perm[v] = v + 1

    first = None
    first_k = 0
    constants = set()
    cdef int tmp
    while True:
        count += 1
        w0 = 0
        for i in range(nbr_start[0], nbr_start[1]):
            w0 += perm[nbr_flat[i]]
        ok = True
        for v in range(1, n):
            w = 0
            for i in range(nbr_start[v], nbr_start[v + 1]):
                w += perm[nbr_flat[i]]
            if w != w0:
                ok = False
                break
        if ok:
            if first is None:
                first = [perm[v] for v in range(n)]
                first_k = w0
            if collect_all:
                constants.add(w0)
            else:
                break
        # next_permutation, lexicographic
        i = n - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
        i += 1
        j = n - 1
        while i < j:
            tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
            i += 1
            j -= 1
    if first is None:
        return None, None, sorted(constants), count
    return first, first_k, sorted(constants), count
