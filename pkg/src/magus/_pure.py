"""Pure-Python search kernels; the semantics of record for the compiled core.

Both kernels here have Cython twins in ``magus._kernel`` that must reproduce
the exact same search tree, outcomes and node counts. Any behavioral change
in this file has to be mirrored there.

``search_core`` runs pruned backtracking over labelings:

* variable order: highest degree first, then fewest feasible labels, then
  lowest index;
* labels are tried in increasing order;
* false-twin symmetry breaking forces labels within a twin class to increase
  with vertex index;
* the first completed open neighborhood fixes the magic constant k, every
  later completion must match it;
* pruning uses per-vertex weight intervals (smallest/largest unused labels,
  distinctness-aware), their global intersection while k is unknown, and the
  degree-weighted total sum(deg(v) f(v)) = k n.

``naive_core`` is the deliberately unoptimized reference: it enumerates every
permutation in lexicographic order and checks the weights of each.
"""

from __future__ import annotations

import time
from itertools import permutations

STATUS_NONE = 0
STATUS_FOUND = 1
STATUS_BUDGET = 2

TIME_CHECK_MASK = 4095


def naive_core(n, adj, collect_all=False):
    """Scan all n! labelings; returns (labels, k, constants, perms_checked)."""
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    first = None
    first_k = None
    constants = set()
    count = 0
    for perm in permutations(range(1, n + 1)):
        count += 1
        w0 = 0
        for u in nbrs[0]:
            w0 += perm[u]
        ok = True
        for v in range(1, n):
            w = 0
            for u in nbrs[v]:
                w += perm[u]
            if w != w0:
                ok = False
                break
        if ok:
            if first is None:
                first = list(perm)
                first_k = w0
            if collect_all:
                constants.add(w0)
            else:
                break
    return first, first_k, sorted(constants), count


def search_core(
    n,
    adj,
    max_nodes=0,
    timeout_secs=0.0,
    use_twins=True,
    use_pruning=True,
    collect_all=False,
):
    """Pruned backtracking search.

    Returns (status, labels, k, nodes, constants): status FOUND with the first
    solution, NONE after full exhaustion (constants collected when asked), or
    BUDGET when max_nodes (0 = unlimited) or timeout_secs (0 = none) ran out.
    """
    deg = [adj[v].bit_count() for v in range(n)]
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]

    twin_class = [-1] * n
    members: list[list[int]] = []
    if use_twins:
        by_mask: dict[int, list[int]] = {}
        for v in range(n):
            by_mask.setdefault(adj[v], []).append(v)
        for group in by_mask.values():
            if len(group) > 1:
                for v in group:
                    twin_class[v] = len(members)
                members.append(group)

    label = [0] * n
    used = 0
    S = [0] * n
    R = deg[:]
    state = {"assigned": 0, "D": 0, "k": -1, "nodes": 0}
    constants: set[int] = set()
    found: list = []
    deadline = time.monotonic() + timeout_secs if timeout_secs else None

    if use_pruning and any(R[v] == 0 for v in range(n)):
        state["k"] = 0  # isolated vertices pin every weight to zero

    def feasible(v, lab, avail, pre, suf, pos):
        if use_twins and twin_class[v] >= 0:
            for u in members[twin_class[v]]:
                lu = label[u]
                if u != v and lu:
                    if (u < v and lu > lab) or (u > v and lu < lab):
                        return False
        if use_pruning:
            k = state["k"]
            kk = k
            for u in nbrs[v]:
                if R[u] == 1:
                    w = S[u] + lab
                    if kk == -1:
                        kk = w
                    elif w != kk:
                        return False
            if k != -1:
                na = len(avail)
                p = pos[lab]
                for u in nbrs[v]:
                    ru = R[u]
                    if ru >= 2:
                        r = ru - 1
                        lo = S[u] + lab + (pre[r + 1] - lab if p < r else pre[r])
                        hi = S[u] + lab + (suf[r + 1] - lab if p >= na - r else suf[r])
                        if not lo <= k <= hi:
                            return False
        return True

    def prefix_sums(avail):
        na = len(avail)
        pre = [0] * (na + 1)
        for i in range(na):
            pre[i + 1] = pre[i] + avail[i]
        suf = [0] * (na + 1)
        for i in range(na):
            suf[i + 1] = suf[i] + avail[na - 1 - i]
        return pre, suf

    def place(v, lab):
        label[v] = lab
        nonlocal used
        used |= 1 << (lab - 1)
        state["assigned"] += 1
        state["D"] += deg[v] * lab
        for u in nbrs[v]:
            S[u] += lab
            R[u] -= 1
        if not use_pruning:
            return True
        k = state["k"]
        for u in nbrs[v]:
            if R[u] == 0:
                if k == -1:
                    k = S[u]
                elif S[u] != k:
                    return False
        state["k"] = k
        avail = [l for l in range(1, n + 1) if not used >> (l - 1) & 1]
        pre, suf = prefix_sums(avail)
        if k != -1:
            for w in range(n):
                rw = R[w]
                if rw > 0 and not S[w] + pre[rw] <= k <= S[w] + suf[rw]:
                    return False
            degs_un = sorted(deg[w] for w in range(n) if not label[w])
            mind = sum(d * l for d, l in zip(degs_un, reversed(avail)))
            maxd = sum(d * l for d, l in zip(degs_un, avail))
            if not state["D"] + mind <= k * n <= state["D"] + maxd:
                return False
        else:
            max_lo = None
            min_hi = None
            for w in range(n):
                rw = R[w]
                if rw > 0:
                    lo = S[w] + pre[rw]
                    hi = S[w] + suf[rw]
                    if max_lo is None or lo > max_lo:
                        max_lo = lo
                    if min_hi is None or hi < min_hi:
                        min_hi = hi
            if max_lo is not None and max_lo > min_hi:
                return False
        return True

    def unplace(v, lab):
        nonlocal used
        label[v] = 0
        used &= ~(1 << (lab - 1))
        state["assigned"] -= 1
        state["D"] -= deg[v] * lab
        for u in nbrs[v]:
            S[u] -= lab
            R[u] += 1

    def leaf():
        if use_pruning:
            k = state["k"]
        else:
            w0 = sum(label[u] for u in nbrs[0])
            for v in range(1, n):
                if sum(label[u] for u in nbrs[v]) != w0:
                    return STATUS_NONE
            k = w0
        if collect_all:
            constants.add(k)
            return STATUS_NONE
        found.append((label[:], k))
        return STATUS_FOUND

    def expand():
        if state["assigned"] == n:
            return leaf()
        avail = [l for l in range(1, n + 1) if not used >> (l - 1) & 1]
        pre, suf = prefix_sums(avail)
        pos = [-1] * (n + 1)
        for i, l in enumerate(avail):
            pos[l] = i

        best_v = -1
        best_key = None
        for v in range(n):
            if label[v]:
                continue
            rem = 0
            for l in avail:
                if feasible(v, l, avail, pre, suf, pos):
                    rem += 1
            key = (-deg[v], rem, v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v

        for l in avail:
            if not feasible(best_v, l, avail, pre, suf, pos):
                continue
            state["nodes"] += 1
            if max_nodes and state["nodes"] > max_nodes:
                return STATUS_BUDGET
            if deadline is not None and state["nodes"] & TIME_CHECK_MASK == 0:
                if time.monotonic() > deadline:
                    return STATUS_BUDGET
            k_save = state["k"]
            res = STATUS_NONE
            if place(best_v, l):
                res = expand()
            unplace(best_v, l)
            state["k"] = k_save
            if res != STATUS_NONE:
                return res
        return STATUS_NONE

    status = expand()
    if status == STATUS_FOUND:
        labels, k = found[0]
        return STATUS_FOUND, labels, k, state["nodes"], []
    return status, None, None, state["nodes"], sorted(constants)
