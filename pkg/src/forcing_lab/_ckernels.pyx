# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels (hot inner loops).

Twin of ``forcing_lab._kernels_py``; see that module for the contract.
"""

from libc.stdint cimport uint64_t, int64_t

BACKEND_NAME = "compiled"


cdef inline int _lowest_bit(uint64_t x):
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef inline int _popcount(uint64_t x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef class GraphHandle:
    cdef uint64_t adj[64]
    cdef int n

    def __init__(self, rows):
        cdef int i
        self.n = len(rows)
        if self.n > 64:
            raise ValueError("graph handle supports at most 64 vertices")
        for i in range(self.n):
            self.adj[i] = rows[i]


def make_handle(adj):
    """Copy adjacency rows into a C-array-backed handle."""
    return GraphHandle(adj)


cdef void _copy_rows(GraphHandle h, uint64_t *rows, object removed):
    cdef int i, u, v
    for i in range(h.n):
        rows[i] = h.adj[i]
    for pair in removed:
        u = pair[0]
        v = pair[1]
        rows[u] &= ~((<uint64_t>1) << v)
        rows[v] &= ~((<uint64_t>1) << u)


cdef int64_t _count_rec(uint64_t *adj, uint64_t rem, int64_t budget):
    if rem == 0:
        return 1
    cdef int u = _lowest_bit(rem & (~rem + 1))
    cdef uint64_t nbrs = adj[u] & rem
    cdef uint64_t vbit
    cdef int64_t total = 0
    while nbrs:
        vbit = nbrs & (~nbrs + 1)
        nbrs ^= vbit
        total += _count_rec(adj, rem ^ ((<uint64_t>1) << u) ^ vbit, budget - total)
        if total >= budget:
            return total
    return total


def pm_count(GraphHandle h, object active, long long cap, removed=()):
    """Count perfect matchings of the subgraph induced by ``active``, up to ``cap``."""
    cdef uint64_t act = <uint64_t>active
    if _popcount(act) & 1:
        return 0
    cdef uint64_t rows[64]
    _copy_rows(h, rows, removed)
    return _count_rec(rows, act, cap)


def pm_exists(GraphHandle h, object active, removed=()):
    return pm_count(h, active, 1, removed) == 1


cdef bint _enum_rec(uint64_t *adj, uint64_t rem, int64_t limit,
                    list out, list edges):
    if rem == 0:
        out.append(tuple(edges))
        return len(out) == limit
    cdef int u = _lowest_bit(rem & (~rem + 1))
    cdef uint64_t nbrs = adj[u] & rem
    cdef uint64_t vbit
    while nbrs:
        vbit = nbrs & (~nbrs + 1)
        nbrs ^= vbit
        edges.append((u, _lowest_bit(vbit)))
        if _enum_rec(adj, rem ^ ((<uint64_t>1) << u) ^ vbit, limit, out, edges):
            return True
        edges.pop()
    return False


def pm_enumerate(GraphHandle h, object active, long long limit, removed=()):
    """All perfect matchings of the induced subgraph, lexicographic order."""
    cdef uint64_t act = <uint64_t>active
    if _popcount(act) & 1:
        return []
    cdef uint64_t rows[64]
    _copy_rows(h, rows, removed)
    cdef list out = []
    cdef list edges = []
    if limit != 0:
        _enum_rec(rows, act, limit, out, edges)
    return out


cdef bint _cycles_rec(uint64_t *adj, int *mates, int x, int v0,
                      uint64_t used, int *path, int depth,
                      list out, long long ceiling):
    cdef uint64_t cand = adj[x] & ~((<uint64_t>1) << mates[x])
    cdef uint64_t ys, ybit, zbit
    cdef int y, z, i
    cdef tuple cyc
    if cand & ((<uint64_t>1) << v0):
        if path[1] <= path[depth - 1]:
            cyc = tuple([path[i] for i in range(depth)])
        else:
            cyc = tuple([path[0]] + [path[i] for i in range(depth - 1, 0, -1)])
        out.append(cyc)
        if len(out) > ceiling:
            return False
    ys = cand & ~used
    ys &= ~(((<uint64_t>1) << (v0 + 1)) - 1)
    while ys:
        ybit = ys & (~ys + 1)
        ys ^= ybit
        y = _lowest_bit(ybit)
        z = mates[y]
        zbit = (<uint64_t>1) << z
        path[depth] = y
        path[depth + 1] = z
        if not _cycles_rec(adj, mates, z, v0, used | ybit | zbit,
                           path, depth + 2, out, ceiling):
            return False
    return True


def alt_cycles(GraphHandle h, mates, long long ceiling):
    """Enumerate all M-alternating cycles in canonical form; None past ceiling."""
    cdef int cmates[64]
    cdef int path[66]
    cdef int v0, m0, i
    cdef list out = []
    for i in range(h.n):
        cmates[i] = mates[i]
    for v0 in range(h.n):
        m0 = cmates[v0]
        if m0 <= v0:
            continue
        path[0] = v0
        path[1] = m0
        if not _cycles_rec(h.adj, cmates, m0, v0,
                           ((<uint64_t>1) << v0) | ((<uint64_t>1) << m0),
                           path, 2, out, ceiling):
            return None
    return out


cdef struct MisBest:
    int size
    uint64_t mask


cdef void _mis_rec(uint64_t *adj, uint64_t p, int size, uint64_t mask,
                   MisBest *best):
    cdef uint64_t q, vbit, pbit
    cdef int v, d, pivot, pivot_deg
    cdef bint picked
    while True:
        q = p
        picked = False
        while q:
            vbit = q & (~q + 1)
            q ^= vbit
            v = _lowest_bit(vbit)
            if adj[v] & p == 0:
                p ^= vbit
                size += 1
                mask |= vbit
                picked = True
        if not picked:
            break
    if size + _popcount(p) <= best.size:
        return
    if p == 0:
        if size > best.size:
            best.size = size
            best.mask = mask
        return
    q = p
    pivot = -1
    pivot_deg = -1
    while q:
        vbit = q & (~q + 1)
        q ^= vbit
        v = _lowest_bit(vbit)
        d = _popcount(adj[v] & p)
        if d > pivot_deg:
            pivot_deg = d
            pivot = v
    pbit = (<uint64_t>1) << pivot
    _mis_rec(adj, p & ~(adj[pivot] | pbit), size + 1, mask | pbit, best)
    _mis_rec(adj, p ^ pbit, size, mask, best)


def mis(GraphHandle h, object active):
    """Maximum independent set of the induced subgraph: ``(size, mask)``."""
    cdef MisBest best
    best.size = 0
    best.mask = 0
    _mis_rec(h.adj, <uint64_t>active, 0, 0, &best)
    return best.size, int(best.mask)


cdef void _pack_rec(int count, list avail, int *best):
    cdef uint64_t union_mask = 0, vbit, m, x
    cdef list with_v, without
    cdef Py_ssize_t i
    if count > best[0]:
        best[0] = count
    if not avail or count + len(avail) <= best[0]:
        return
    for i in range(len(avail)):
        union_mask |= <uint64_t>avail[i]
    vbit = union_mask & (~union_mask + 1)
    with_v = []
    without = []
    for i in range(len(avail)):
        m = <uint64_t>avail[i]
        if m & vbit:
            with_v.append(avail[i])
        else:
            without.append(avail[i])
    for i in range(len(with_v)):
        m = <uint64_t>with_v[i]
        _pack_rec(count + 1, [x for x in without if not (<uint64_t>x & m)], best)
    _pack_rec(count, without, best)


def pack_masks(masks):
    """Maximum number of pairwise-disjoint masks (exact branch and bound)."""
    cdef int best = 0
    _pack_rec(0, list(masks), &best)
    return best


# ---------------------------------------------------------------------------
# whole-search fast paths: minimum forcing / anti-forcing values
#
# These mirror the Python lazy hitting-set search (iterative deepening in
# lexicographic order, pruned by discovered alternating cycles and their
# greedy disjoint packing) but run entirely in C and return only the value.
# Return codes: >= 0 value, -1 node budget exhausted, -2 caller must use the
# Python path (universe or constraint store too large).

DEF MAXCON = 512
DEF MAXUNI = 64


cdef int _count2(uint64_t *adj, uint64_t rem):
    if rem == 0:
        return 1
    cdef int u = _lowest_bit(rem)
    cdef uint64_t nbrs = adj[u] & rem
    cdef uint64_t vbit
    cdef int total = 0
    while nbrs:
        vbit = nbrs & (~nbrs + 1)
        nbrs ^= vbit
        total += _count2(adj, rem ^ ((<uint64_t>1) << u) ^ vbit)
        if total >= 2:
            return total
    return total


cdef bint _enum2_rec(uint64_t *adj, uint64_t rem, int *work, int *out, int *found):
    cdef int u, v
    cdef uint64_t nbrs, vbit
    cdef int i
    if rem == 0:
        for i in range(64):
            out[found[0] * 64 + i] = work[i]
        found[0] += 1
        return found[0] == 2
    u = _lowest_bit(rem)
    nbrs = adj[u] & rem
    while nbrs:
        vbit = nbrs & (~nbrs + 1)
        nbrs ^= vbit
        v = _lowest_bit(vbit)
        work[u] = v
        work[v] = u
        if _enum2_rec(adj, rem ^ ((<uint64_t>1) << u) ^ vbit, work, out, found):
            return True
        work[u] = -1
        work[v] = -1
    return False


cdef int _enum2(uint64_t *adj, uint64_t rem, int *out):
    """First two perfect matchings (lex order) as mate arrays; returns count."""
    cdef int work[64]
    cdef int found = 0
    cdef int i
    for i in range(64):
        work[i] = -1
    _enum2_rec(adj, rem, work, out, &found)
    return found


cdef int _greedy_lb(uint64_t *cons, int ncon):
    cdef uint64_t used = 0
    cdef int count = 0, i
    for i in range(ncon):
        if not (cons[i] & used):
            used |= cons[i]
            count += 1
    return count


cdef uint64_t _difference_constraint(int *rmates, int *omates, int n,
                                     bint mark_m_side, int *edge_index):
    """Constraint mask from the first cycle of the symmetric difference.

    ``edge_index[u]`` maps a vertex (forcing: lower endpoint of its matching
    edge via either endpoint) or an edge slot (anti-forcing: 64*u+v) to the
    universe position; see the callers for the two encodings.
    """
    cdef int v0 = -1, i, v, nxt
    cdef bint use_r = True
    cdef uint64_t mask = 0
    for i in range(n):
        if rmates[i] >= 0 and rmates[i] != omates[i]:
            v0 = i
            break
    v = v0
    while True:
        if use_r:
            nxt = rmates[v]
            if mark_m_side:
                mask |= (<uint64_t>1) << edge_index[v]
        else:
            nxt = omates[v]
            if not mark_m_side:
                if v < nxt:
                    mask |= (<uint64_t>1) << edge_index[64 * v + nxt]
                else:
                    mask |= (<uint64_t>1) << edge_index[64 * nxt + v]
        v = nxt
        use_r = not use_r
        if v == v0:
            break
    return mask


cdef struct HitSearch:
    int n_universe
    int ncon
    int64_t budget
    uint64_t cons[MAXCON]


cdef int _hit_rec(HitSearch *hs, int start, int slots, uint64_t *unhit,
                  int nunhit, uint64_t chosen, uint64_t *result):
    """Lex enumeration of hitting candidates; 1 = candidate in *result,
    0 = subtree exhausted, -1 = budget out."""
    cdef int i, j, k, nnew, rc
    cdef uint64_t bit
    cdef uint64_t newunhit[MAXCON]
    cdef uint64_t used
    cdef int count
    hs.budget -= 1
    if hs.budget < 0:
        return -1
    if nunhit == 0:
        # free completion: lexicographically first = take the lowest indices
        if slots == 0:
            result[0] = chosen
            return 1
        # delegate remaining positions one at a time to keep lex order
        for i in range(start, hs.n_universe - slots + 1):
            rc = _hit_rec(hs, i + 1, slots - 1, unhit, 0,
                          chosen | ((<uint64_t>1) << i), result)
            if rc != 0:
                return rc
        return 0
    if slots == 0:
        return 0
    for j in range(nunhit):
        if unhit[j] >> start == 0:
            return 0
    used = 0
    count = 0
    for j in range(nunhit):
        if not (unhit[j] & used):
            used |= unhit[j]
            count += 1
    if count > slots:
        return 0
    for i in range(start, hs.n_universe - slots + 1):
        bit = (<uint64_t>1) << i
        nnew = 0
        for j in range(nunhit):
            if not (unhit[j] & bit):
                newunhit[nnew] = unhit[j]
                nnew += 1
        rc = _hit_rec(hs, i + 1, slots - 1, newunhit, nnew, chosen | bit, result)
        if rc != 0:
            return rc
    return 0


cdef int _lazy_search(uint64_t *adj, int n, uint64_t full, int *mates,
                      int n_universe, bint forcing,
                      int *uni_u, int *uni_v, int *edge_index,
                      int64_t node_limit):
    cdef HitSearch hs
    cdef uint64_t result, cand, smask, active
    cdef uint64_t unhit[MAXCON]
    cdef uint64_t rows[64]
    cdef int rmates[64]
    cdef int pair_out[128]
    cdef int omates[64]
    cdef int i, k, rc, cnt, nfound, slot
    cdef bint other_differs
    hs.n_universe = n_universe
    hs.ncon = 0
    hs.budget = node_limit
    k = 0
    while k <= n_universe:
        for i in range(hs.ncon):
            unhit[i] = hs.cons[i]
        rc = _hit_rec(&hs, 0, k, unhit, hs.ncon, 0, &result)
        if rc == -1:
            return -1
        if rc == 0:
            k += 1
            continue
        # candidate found: run the uniqueness check
        cand = result
        if forcing:
            smask = 0
            for i in range(n_universe):
                if cand & ((<uint64_t>1) << i):
                    smask |= ((<uint64_t>1) << uni_u[i]) | ((<uint64_t>1) << uni_v[i])
            active = full & ~smask
            for i in range(n):
                rows[i] = adj[i]
                rmates[i] = mates[i] if (active >> i) & 1 else -1
            cnt = _count2(rows, active)
            if cnt == 1:
                return k
            nfound = _enum2(rows, active, pair_out)
        else:
            for i in range(n):
                rows[i] = adj[i]
                rmates[i] = mates[i]
            for i in range(n_universe):
                if cand & ((<uint64_t>1) << i):
                    rows[uni_u[i]] &= ~((<uint64_t>1) << uni_v[i])
                    rows[uni_v[i]] &= ~((<uint64_t>1) << uni_u[i])
            cnt = _count2(rows, full)
            if cnt == 1:
                return k
            nfound = _enum2(rows, full, pair_out)
        # pick the enumerated matching that differs from the residual one
        slot = 0
        other_differs = False
        for i in range(n):
            if rmates[i] >= 0 and pair_out[i] != rmates[i]:
                other_differs = True
                break
        if not other_differs:
            slot = 1
        for i in range(n):
            omates[i] = pair_out[slot * 64 + i]
        if hs.ncon >= MAXCON:
            return -2
        hs.cons[hs.ncon] = _difference_constraint(rmates, omates, n, forcing, edge_index)
        hs.ncon += 1
        i = _greedy_lb(hs.cons, hs.ncon)
        if i > k:
            k = i
    return -2  # unreachable for well-formed inputs


def forcing_value(GraphHandle h, mates, long long node_limit):
    """Minimum forcing-set size of the matching given by ``mates``."""
    cdef int cmates[64]
    cdef int uni_u[MAXUNI]
    cdef int uni_v[MAXUNI]
    cdef int edge_index[64]
    cdef int i, nm = 0
    for i in range(h.n):
        cmates[i] = mates[i]
    for i in range(h.n):
        if cmates[i] > i:
            if nm >= MAXUNI:
                return -2
            uni_u[nm] = i
            uni_v[nm] = cmates[i]
            edge_index[i] = nm
            edge_index[cmates[i]] = nm
            nm += 1
    cdef uint64_t full = 0
    for i in range(h.n):
        full |= (<uint64_t>1) << i
    return _lazy_search(h.adj, h.n, full, cmates, nm, True,
                        uni_u, uni_v, edge_index, node_limit)


def anti_forcing_value(GraphHandle h, mates, long long node_limit):
    """Minimum anti-forcing-set size of the matching given by ``mates``."""
    cdef int cmates[64]
    cdef int uni_u[MAXUNI]
    cdef int uni_v[MAXUNI]
    cdef int edge_index_c[4096]
    cdef int i, v, ne = 0
    cdef uint64_t row
    for i in range(h.n):
        cmates[i] = mates[i]
    for i in range(4096):
        edge_index_c[i] = 0
    for i in range(h.n):
        row = h.adj[i] >> (i + 1)
        v = i + 1
        while row:
            if row & 1:
                if cmates[i] != v:
                    if ne >= MAXUNI:
                        return -2
                    uni_u[ne] = i
                    uni_v[ne] = v
                    edge_index_c[64 * i + v] = ne
                    ne += 1
            row >>= 1
            v += 1
    cdef uint64_t full = 0
    for i in range(h.n):
        full |= (<uint64_t>1) << i
    return _lazy_search(h.adj, h.n, full, cmates, ne, False,
                        uni_u, uni_v, edge_index_c, node_limit)
