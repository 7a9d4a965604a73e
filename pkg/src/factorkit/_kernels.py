"""Compiled subset-sweep kernels.

Graphs enter as one int64 adjacency bitmask per vertex (numpy array) plus an
``alive`` mask selecting the surviving vertices; vertex labels are never
rearranged, so witnesses come back as bitmasks over the caller's labels.

All fraction comparisons are integer cross-multiplications; no floats.
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit

KERNEL_CAP = 24  # hard bound for 2^n subset sweeps


@njit(nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(nogil=True)
def _tz(x):
    # index of lowest set bit; x != 0
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(nogil=True)
def _ncomponents(adj, alive):
    rem = alive
    count = 0
    while rem:
        count += 1
        comp = rem & -rem
        while True:
            grow = comp
            m = comp
            while m:
                b = m & -m
                m ^= b
                grow |= adj[_tz(b)]
            grow &= rem
            if grow == comp:
                break
            comp = grow
        rem &= ~comp
    return count


@njit(nogil=True)
def _isolated(adj, alive):
    cnt = 0
    m = alive
    while m:
        b = m & -m
        m ^= b
        if adj[_tz(b)] & alive == 0:
            cnt += 1
    return cnt


# -- toughness minimization --------------------------------------------------


@njit(nogil=True)
def toughness_opt(adj, n):
    """min |S|/c(G-S) over S with c >= 2; returns (|S|, c, witness_mask).

    Witness is the smallest bitmask among optima (masks scanned ascending,
    strict improvement only). Caller guarantees the graph is not complete.
    """
    full = (int64(1) << n) - 1
    best_s = int64(-1)
    best_c = int64(1)
    best_mask = int64(-1)
    for S in range(full + 1):
        s = _popcount(S)
        if s > n - 2:
            continue
        if best_mask >= 0 and s * best_c >= best_s * (n - s):
            continue
        c = _ncomponents(adj, full & ~S)
        if c >= 2 and (best_mask < 0 or s * best_c < best_s * c):
            best_s, best_c, best_mask = s, c, S
    return best_s, best_c, best_mask


@njit(nogil=True)
def isolated_toughness_opt(adj, n):
    """min |S|/i(G-S) over S with i >= 2; same contract as toughness_opt."""
    full = (int64(1) << n) - 1
    best_s = int64(-1)
    best_i = int64(1)
    best_mask = int64(-1)
    for S in range(full + 1):
        s = _popcount(S)
        if s > n - 2:
            continue
        if best_mask >= 0 and s * best_i >= best_s * (n - s):
            continue
        i = _isolated(adj, full & ~S)
        if i >= 2 and (best_mask < 0 or s * best_i < best_s * i):
            best_s, best_i, best_mask = s, i, S
    return best_s, best_i, best_mask


@njit(nogil=True)
def toughness_gt(adj, n, alive, num, den):
    """True iff |S|*den > num*c(G-S) for every S with c(G-S) >= 2."""
    sub = int64(0)
    while True:
        s = _popcount(sub)
        if s * den <= num * (_popcount(alive) - s):
            c = _ncomponents(adj, alive & ~sub)
            if c >= 2 and s * den <= num * c:
                return False
        sub = (sub - alive) & alive
        if sub == 0:
            return True


@njit(nogil=True)
def isolated_toughness_gt(adj, n, alive, num, den):
    sub = int64(0)
    while True:
        s = _popcount(sub)
        if s * den <= num * (_popcount(alive) - s):
            i = _isolated(adj, alive & ~sub)
            if i >= 2 and s * den <= num * i:
                return False
        sub = (sub - alive) & alive
        if sub == 0:
            return True


# -- isolated-vertex deficiency ----------------------------------------------


@njit(nogil=True)
def max_iso_deficiency(adj, n):
    """max i(G-X) - |X| with smallest-bitmask witness (ascending scan)."""
    full = (int64(1) << n) - 1
    best = int64(-(1 << 40))
    best_mask = int64(0)
    for X in range(full + 1):
        p = _popcount(X)
        if n - 2 * p <= best:
            continue
        d = _isolated(adj, full & ~X) - p
        if d > best:
            best, best_mask = d, X
    return best, best_mask


@njit(nogil=True)
def iso_def_pos_exists(adj, alive):
    """True iff some X has i(G-X) > |X| (no {K2, cycle}-factor)."""
    npop = _popcount(alive)
    X = int64(0)
    while True:
        p = _popcount(X)
        if 2 * p + 1 <= npop and _isolated(adj, alive & ~X) > p:
            return True
        X = (X - alive) & alive
        if X == 0:
            return False


# -- triangular-cactus deficiency ---------------------------------------------


@njit(nogil=True)
def _is_tc_component(adj, comp, scratch):
    """Is this connected component a triangular cactus?

    Cheap filters (odd order, even degrees, |E| = 3(|V|-1)/2) then a peel
    loop: repeatedly remove a degree-2 vertex whose two neighbors are
    adjacent, together with the edge between those neighbors. Validated
    exhaustively against the block-decomposition definition in the tests.
    """
    v = _popcount(comp)
    if v == 1:
        return True
    if v % 2 == 0:
        return False
    deg2 = 0
    m = comp
    while m:
        b = m & -m
        m ^= b
        u = _tz(b)
        d = _popcount(adj[u] & comp)
        if d == 0 or d & 1:
            return False
        deg2 += d
        scratch[u] = adj[u] & comp
    if deg2 != 3 * (v - 1):
        return False
    edges_left = deg2 // 2
    while edges_left > 0:
        peeled = False
        m = comp
        while m and not peeled:
            b = m & -m
            m ^= b
            u = _tz(b)
            nb = scratch[u]
            if _popcount(nb) == 2:
                lo = nb & -nb
                a = _tz(lo)
                c = _tz(nb ^ lo)
                if (scratch[a] >> c) & 1:
                    scratch[a] &= ~((int64(1) << u) | (int64(1) << c))
                    scratch[c] &= ~((int64(1) << u) | (int64(1) << a))
                    scratch[u] = 0
                    edges_left -= 3
                    peeled = True
        if not peeled:
            return False
    return True


@njit(nogil=True)
def c_tc(adj, alive, scratch):
    """Number of triangular-cactus components of the induced subgraph."""
    rem = alive
    count = 0
    while rem:
        comp = rem & -rem
        while True:
            grow = comp
            m = comp
            while m:
                b = m & -m
                m ^= b
                grow |= adj[_tz(b)]
            grow &= rem
            if grow == comp:
                break
            comp = grow
        rem &= ~comp
        if _is_tc_component(adj, comp, scratch):
            count += 1
    return count


@njit(nogil=True)
def max_tc_deficiency(adj, n):
    full = (int64(1) << n) - 1
    scratch = np.zeros(n, np.int64)
    best = int64(-(1 << 40))
    best_mask = int64(0)
    for X in range(full + 1):
        p = _popcount(X)
        if n - 2 * p <= best:
            continue
        d = c_tc(adj, full & ~X, scratch) - p
        if d > best:
            best, best_mask = d, X
    return best, best_mask


@njit(nogil=True)
def tc_def_pos_exists(adj, alive, scratch):
    """True iff some X has c_tc(G-X) > |X| (no {K2, odd cycle >=5}-factor)."""
    npop = _popcount(alive)
    X = int64(0)
    while True:
        p = _popcount(X)
        if 2 * p + 1 <= npop and c_tc(adj, alive & ~X, scratch) > p:
            return True
        X = (X - alive) & alive
        if X == 0:
            return False


# -- matchings ----------------------------------------------------------------


@njit(nogil=True)
def double_cover_pm(adj, n, alive):
    """Perfect matching in the bipartite double cover (u ~ v' iff uv edge),
    restricted to the alive vertices; BFS augmenting paths."""
    match_l = np.full(n, -1, np.int64)
    match_r = np.full(n, -1, np.int64)
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    m = alive
    while m:
        sb = m & -m
        m ^= sb
        s = _tz(sb)
        qh = 0
        qt = 1
        queue[0] = s
        visited_r = int64(0)
        found = int64(-1)
        while qh < qt and found < 0:
            u = queue[qh]
            qh += 1
            cand = adj[u] & alive & ~visited_r
            while cand:
                b = cand & -cand
                cand ^= b
                v = _tz(b)
                visited_r |= b
                parent[v] = u
                if match_r[v] < 0:
                    found = v
                    break
                queue[qt] = match_r[v]
                qt += 1
        if found < 0:
            return False
        v = found
        while True:
            u = parent[v]
            nxt = match_l[u]
            match_l[u] = v
            match_r[v] = u
            if u == s:
                break
            v = nxt
    return True


@njit(nogil=True)
def _pm_dp(adj, alive, dp):
    """Fill dp[S] = 1 iff the subset S has a perfect matching (S <= alive)."""
    dp[0] = 1
    for S in range(1, alive + 1):
        if S & ~alive:
            continue
        vb = S & -S
        v = _tz(vb)
        cand = adj[v] & S
        ok = 0
        while cand:
            b = cand & -cand
            cand ^= b
            if dp[S ^ vb ^ b]:
                ok = 1
                break
        dp[S] = ok


@njit(nogil=True)
def pm_exists(adj, n, alive):
    """General-graph perfect matching on the alive set via subset DP."""
    if alive == 0:
        return True
    if _popcount(alive) & 1:
        return False
    dp = np.zeros(1 << n, np.uint8)
    _pm_dp(adj, alive, dp)
    return dp[alive] == 1


@njit(nogil=True)
def _pm_extract(adj, alive, dp, mate):
    """Backtrack one perfect matching out of a filled dp table.

    mate[v] = partner (or -1 outside the matching). dp[alive] must be 1.
    """
    for i in range(mate.shape[0]):
        mate[i] = -1
    S = alive
    while S:
        vb = S & -S
        v = _tz(vb)
        cand = adj[v] & S
        while cand:
            b = cand & -cand
            cand ^= b
            if dp[S ^ vb ^ b]:
                u = _tz(b)
                mate[v] = u
                mate[u] = v
                S ^= vb | b
                break


# -- cycle enumeration and spanning-partition search ---------------------------


@njit(nogil=True)
def enum_cycles(adj, n, alive, odd_only, min_len, out_masks, out_roots):
    """Collect vertex masks of simple cycles, each listed once with its
    minimum vertex as root; roots come out in ascending order.

    Returns the count, or -1 if out_masks is too small.
    """
    cnt = 0
    path = np.empty(n + 1, np.int64)
    iters = np.empty(n + 1, np.int64)
    for r in range(n):
        if not (alive >> r) & 1:
            continue
        above = alive & ~((int64(1) << (r + 1)) - 1)
        depth = 0
        path[0] = r
        used = int64(1) << r
        iters[0] = adj[r] & above
        while depth >= 0:
            cand = iters[depth]
            if cand == 0:
                if depth > 0:
                    used ^= int64(1) << path[depth]
                depth -= 1
                continue
            b = cand & -cand
            iters[depth] = cand ^ b
            u = _tz(b)
            length = depth + 2
            if (
                length >= 3
                and length >= min_len
                and (not odd_only or length & 1)
                and (adj[u] >> r) & 1
                and path[1] < u
            ):
                if cnt >= out_masks.shape[0]:
                    return -1
                out_masks[cnt] = used | (int64(1) << u)
                out_roots[cnt] = r
                cnt += 1
            depth += 1
            path[depth] = u
            used |= int64(1) << u
            iters[depth] = adj[u] & above & ~used
    return cnt


@njit(nogil=True)
def partition_exists(adj, n, alive, odd_only, min_len, cyc_masks, cyc_roots):
    """Explicit search for a spanning partition into edges plus cycles
    (length >= min_len, optionally odd only). Cycle list comes from
    enum_cycles on the same alive set.

    Returns 1 (exists), 0 (none), or -1 (cycle buffer too small)."""
    if alive == 0:
        return int64(1)
    ncyc = enum_cycles(adj, n, alive, odd_only, min_len, cyc_masks, cyc_roots)
    if ncyc < 0:
        return int64(-1)
    starts = np.zeros(n + 2, np.int64)
    for i in range(ncyc):
        starts[cyc_roots[i] + 1] += 1
    for r in range(1, n + 2):
        starts[r] += starts[r - 1]
    memo_false = np.zeros(1 << n, np.uint8)
    depth_cap = _popcount(alive) // 2 + 2
    stack_s = np.empty(depth_cap, np.int64)
    stack_edge = np.empty(depth_cap, np.int64)
    stack_cyc = np.empty(depth_cap, np.int64)
    top = 0
    stack_s[0] = alive
    r0 = _tz(alive & -alive)
    stack_edge[0] = adj[r0] & alive
    stack_cyc[0] = starts[r0]
    while top >= 0:
        S = stack_s[top]
        root = _tz(S & -S)
        pushed = False
        em = stack_edge[top]
        while em:
            b = em & -em
            em ^= b
            stack_edge[top] = em
            child = S ^ (S & -S) ^ b
            if child == 0:
                return int64(1)
            if not memo_false[child]:
                top += 1
                stack_s[top] = child
                r2 = _tz(child & -child)
                stack_edge[top] = adj[r2] & child
                stack_cyc[top] = starts[r2]
                pushed = True
                break
        if pushed:
            continue
        ci = stack_cyc[top]
        end = starts[root + 1]
        while ci < end:
            cm = cyc_masks[ci]
            ci += 1
            stack_cyc[top] = ci
            if cm & ~S == 0:
                child = S ^ cm
                if child == 0:
                    return int64(1)
                if not memo_false[child]:
                    top += 1
                    stack_s[top] = child
                    r2 = _tz(child & -child)
                    stack_edge[top] = adj[r2] & child
                    stack_cyc[top] = starts[r2]
                    pushed = True
                    break
        if pushed:
            continue
        memo_false[S] = 1
        top -= 1
    return int64(0)


# -- connectivity and criticality ----------------------------------------------


@njit(nogil=True)
def conn_at_least(adj, alive, c0):
    """True iff the induced subgraph has vertex connectivity >= c0."""
    if c0 <= 0:
        return True
    pop = _popcount(alive)
    if pop - 1 < c0:
        return False
    X = int64(0)
    while True:
        if _popcount(X) < c0 and _ncomponents(adj, alive & ~X) >= 2:
            return False
        X = (X - alive) & alive
        if X == 0:
            return True


@njit(nogil=True)
def k2c_edge_violation_exists(adj, alive):
    """True iff some edge e of the induced subgraph and some X give
    i(G - e - X) > |X|, i.e. some single edge deletion kills the
    {K2, cycle}-factor.

    One sweep over X instead of one sweep per edge: deleting an edge raises
    the isolated count by the number of its endpoints that had degree 1, so
    a violation at X needs i(G-X) > |X| (any edge works), or i(G-X) = |X|
    plus a degree-1 vertex, or i(G-X) = |X| - 1 plus a K2 component.
    """
    has_edge = False
    m = alive
    while m:
        b = m & -m
        m ^= b
        if adj[_tz(b)] & alive & ~b:
            has_edge = True
            break
    if not has_edge:
        return False
    npop = _popcount(alive)
    X = int64(0)
    while True:
        p = _popcount(X)
        if 2 * p - 1 <= npop:
            rest = alive & ~X
            i0 = _isolated(adj, rest)
            if i0 > p:
                return True
            if i0 >= p - 1:
                m = rest
                while m:
                    b = m & -m
                    m ^= b
                    nb = adj[_tz(b)] & rest
                    if nb and nb == (nb & -nb):
                        # degree-1 vertex; its edge is pendant or a K2
                        if i0 == p:
                            return True
                        if adj[_tz(nb)] & rest == b:
                            return True  # K2 component, +2 isolated
        X = (X - alive) & alive
        if X == 0:
            return False


@njit(nogil=True)
def _odd_kind_avoidable(adj, n, alive, scratch):
    """Every single edge deletion keeps a {K2, odd cycle >=5}-factor.

    When the induced subgraph has a perfect matching M, only edges of M can
    matter; other deletions keep M itself. adj is mutated per edge and
    restored.
    """
    even = _popcount(alive) % 2 == 0
    has_pm = False
    mate = np.full(n, -1, np.int64)
    if even:
        dp = np.zeros(1 << n, np.uint8)
        _pm_dp(adj, alive, dp)
        if dp[alive]:
            has_pm = True
            _pm_extract(adj, alive, dp, mate)
    m = alive
    while m:
        ub = m & -m
        m ^= ub
        u = _tz(ub)
        cand = adj[u] & alive & ~((ub << 1) - 1)
        while cand:
            vb = cand & -cand
            cand ^= vb
            v = _tz(vb)
            if has_pm and mate[u] != v:
                continue
            adj[u] ^= vb
            adj[v] ^= ub
            ok = False
            if even:
                ok = pm_exists(adj, n, alive)
            if not ok:
                ok = not tc_def_pos_exists(adj, alive, scratch)
            adj[u] ^= vb
            adj[v] ^= ub
            if not ok:
                return False
    return True


@njit(nogil=True)
def critical_avoidable(adj, n, alive0, crit_n, kind_odd, scratch):
    """True iff for every W (|W| = crit_n) and every edge e of G-W the graph
    G-W-e has the factor (kind_odd: {K2, odd cycle >=5}, else {K2, cycle})."""
    W = int64(0)
    while True:
        if _popcount(W) == crit_n:
            alive = alive0 & ~W
            if kind_odd:
                if not _odd_kind_avoidable(adj, n, alive, scratch):
                    return False
            else:
                if k2c_edge_violation_exists(adj, alive):
                    return False
        W = (W - alive0) & alive0
        if W == 0:
            return True


# -- exhaustive oracle sweeps (acceptance criteria 2 and 3) ---------------------


@njit(nogil=True)
def theorem21_sweep(n, lo, hi, eu, ev, cyc_masks, cyc_roots):
    """First edge mask in [lo, hi) where the three {K2, cycle}-factor routes
    (double-cover matching, isolated deficiency, partition search) disagree,
    else -1."""
    full = (int64(1) << n) - 1
    adj = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        for i in range(n):
            adj[i] = 0
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            i = _tz(b)
            adj[eu[i]] |= int64(1) << ev[i]
            adj[ev[i]] |= int64(1) << eu[i]
        via_matching = double_cover_pm(adj, n, full)
        via_deficiency = not iso_def_pos_exists(adj, full)
        if via_matching != via_deficiency:
            return mask
        via_partition = partition_exists(
            adj, n, full, False, 3, cyc_masks, cyc_roots
        )
        if via_partition < 0 or (via_partition == 1) != via_matching:
            return mask
    return int64(-1)


@njit(nogil=True)
def theorem31_sweep(n, lo, hi, eu, ev, cyc_masks, cyc_roots):
    """First edge mask in [lo, hi) where the triangular-cactus deficiency
    criterion and the explicit odd-cycle partition search disagree, else -1."""
    full = (int64(1) << n) - 1
    adj = np.zeros(n, np.int64)
    scratch = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        for i in range(n):
            adj[i] = 0
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            i = _tz(b)
            adj[eu[i]] |= int64(1) << ev[i]
            adj[ev[i]] |= int64(1) << eu[i]
        via_criterion = not tc_def_pos_exists(adj, full, scratch)
        via_partition = partition_exists(
            adj, n, full, True, 5, cyc_masks, cyc_roots
        )
        if via_partition < 0 or (via_partition == 1) != via_criterion:
            return mask
    return int64(-1)


# -- theorem-verification campaign sweep -----------------------------------------


@njit(nogil=True)
def campaign_sweep(
    n,
    lo,
    hi,
    eu,
    ev,
    conn_req,
    use_toughness,
    thr_num,
    thr_den,
    crit_n,
    kind_odd,
    examples_out,
):
    """Scan edge masks in [lo, hi); hypothesis = connectivity >= conn_req and
    (t or I) > thr_num/thr_den; conclusion = critical-avoidability.

    Returns (total, hypothesis_count, verified_count, first_counterexample
    mask or -1, examples_found); examples_out receives the first hypothesis-
    satisfying masks.
    """
    full = (int64(1) << n) - 1
    adj = np.zeros(n, np.int64)
    scratch = np.zeros(n, np.int64)
    total = int64(0)
    hyp_count = int64(0)
    verified = int64(0)
    cex = int64(-1)
    nex = int64(0)
    for mask in range(lo, hi):
        total += 1
        for i in range(n):
            adj[i] = 0
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            i = _tz(b)
            adj[eu[i]] |= int64(1) << ev[i]
            adj[ev[i]] |= int64(1) << eu[i]
        mindeg_ok = True
        for v in range(n):
            if _popcount(adj[v]) < conn_req:
                mindeg_ok = False
                break
        if not mindeg_ok:
            continue
        if not conn_at_least(adj, full, conn_req):
            continue
        if use_toughness:
            hyp = toughness_gt(adj, n, full, thr_num, thr_den)
        else:
            hyp = isolated_toughness_gt(adj, n, full, thr_num, thr_den)
        if not hyp:
            continue
        hyp_count += 1
        if nex < examples_out.shape[0]:
            examples_out[nex] = mask
            nex += 1
        if critical_avoidable(adj, n, full, crit_n, kind_odd, scratch):
            verified += 1
        elif cex < 0:
            cex = mask
    return total, hyp_count, verified, cex, nex
