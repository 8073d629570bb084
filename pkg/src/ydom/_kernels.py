"""Hot search kernels with two interchangeable backends.

The compiled backend wraps the scalar loops in numba's @njit; the fallback
drives the same searches through vectorized numpy batches.  Selection:

    YDOM_BACKEND=numba   require numba (import error if missing)
    YDOM_BACKEND=numpy   force the vectorized fallback
    unset / auto         numba when importable, else numpy

Bit layout for grid masks: cell (j, i) of an m-by-n grid is bit i*n + j.
All searches enumerate masks in ascending numeric order, so results and
witnesses are identical across backends and across --jobs settings.
"""

from __future__ import annotations

import os
from math import comb

import numpy as np

_env = os.environ.get("YDOM_BACKEND", "auto").strip().lower()
if _env in ("", "auto"):
    try:
        from numba import njit

        USE_NUMBA = True
    except ImportError:  # pragma: no cover
        USE_NUMBA = False
elif _env == "numba":
    from numba import njit

    USE_NUMBA = True
elif _env in ("numpy", "python"):
    USE_NUMBA = False
else:
    raise RuntimeError("YDOM_BACKEND must be auto, numba or numpy, not %r" % _env)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


# -- combinations in ascending mask order -------------------------------------


def colex_unrank(rank: int, k: int) -> int:
    """The rank-th smallest integer with exactly k bits set (0-based)."""
    mask = 0
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        mask |= 1 << c
        rank -= comb(c, i)
    return mask


def colex_rank(mask: int) -> int:
    """Inverse of colex_unrank for the popcount of mask."""
    rank = 0
    i = 0
    pos = 0
    while mask:
        if mask & 1:
            i += 1
            rank += comb(pos, i)
        mask >>= 1
        pos += 1
    return rank


# -- margin feasibility (0-1 matrix with forced cells, via max flow) ----------


def _margins_feasible_impl(r, c, hpad):
    # Is there a 0-1 matrix with row sums r, column sums c, and a 1 at every
    # cell (i, j) whose count pair lies inside the zero-set (c[j] < hpad[r[i]])?
    # Forced cells are subtracted from the margins; the rest is a unit-capacity
    # bipartite flow restricted to the unforced cells.
    m = r.shape[0]
    n = c.shape[0]
    rres = np.empty(m, np.int64)
    cres = np.empty(n, np.int64)
    for j in range(n):
        cres[j] = c[j]
    total = 0
    for i in range(m):
        t = hpad[r[i]]
        forced = 0
        for j in range(n):
            if c[j] < t:
                forced += 1
                cres[j] -= 1
        rres[i] = r[i] - forced
        if rres[i] < 0:
            return False
        total += rres[i]
    for j in range(n):
        if cres[j] < 0:
            return False
    if total == 0:
        for j in range(n):
            if cres[j] != 0:
                return False
        return True

    nv = m + n + 2
    src = m + n
    snk = m + n + 1
    ne = 2 * (m + n + m * n)
    eto = np.empty(ne, np.int64)
    ecap = np.empty(ne, np.int64)
    enxt = np.empty(ne, np.int64)
    head = np.full(nv, -1, np.int64)
    cnt = 0
    for i in range(m):
        eto[cnt] = i
        ecap[cnt] = rres[i]
        enxt[cnt] = head[src]
        head[src] = cnt
        cnt += 1
        eto[cnt] = src
        ecap[cnt] = 0
        enxt[cnt] = head[i]
        head[i] = cnt
        cnt += 1
    for j in range(n):
        eto[cnt] = snk
        ecap[cnt] = cres[j]
        enxt[cnt] = head[m + j]
        head[m + j] = cnt
        cnt += 1
        eto[cnt] = m + j
        ecap[cnt] = 0
        enxt[cnt] = head[snk]
        head[snk] = cnt
        cnt += 1
    for i in range(m):
        t = hpad[r[i]]
        for j in range(n):
            if c[j] >= t:
                eto[cnt] = m + j
                ecap[cnt] = 1
                enxt[cnt] = head[i]
                head[i] = cnt
                cnt += 1
                eto[cnt] = i
                ecap[cnt] = 0
                enxt[cnt] = head[m + j]
                head[m + j] = cnt
                cnt += 1

    level = np.empty(nv, np.int64)
    queue = np.empty(nv, np.int64)
    eiter = np.empty(nv, np.int64)
    path = np.empty(nv + 1, np.int64)
    flow = 0
    while True:
        for v in range(nv):
            level[v] = -1
        level[src] = 0
        queue[0] = src
        qh = 0
        qt = 1
        while qh < qt:
            u = queue[qh]
            qh += 1
            e = head[u]
            while e != -1:
                v = eto[e]
                if ecap[e] > 0 and level[v] == -1:
                    level[v] = level[u] + 1
                    queue[qt] = v
                    qt += 1
                e = enxt[e]
        if level[snk] == -1:
            break
        for v in range(nv):
            eiter[v] = head[v]
        while True:
            u = src
            depth = 0
            reached = False
            while True:
                if u == snk:
                    reached = True
                    break
                e = eiter[u]
                while e != -1:
                    v = eto[e]
                    if ecap[e] > 0 and level[v] == level[u] + 1:
                        break
                    e = enxt[e]
                eiter[u] = e
                if e != -1:
                    path[depth] = e
                    depth += 1
                    u = eto[e]
                else:
                    if depth == 0:
                        break
                    level[u] = -1
                    depth -= 1
                    last = path[depth]
                    u = eto[last ^ 1]
                    eiter[u] = enxt[last]
            if not reached:
                break
            aug = np.int64(1) << 60
            for d in range(depth):
                if ecap[path[d]] < aug:
                    aug = ecap[path[d]]
            for d in range(depth):
                ecap[path[d]] -= aug
                ecap[path[d] ^ 1] += aug
            flow += aug
    return flow == total


# -- scalar simulation helpers (compiled under numba) --------------------------


def _sim_spans_impl(mask, hpad, m, n, steps_cap, rc, cc):
    mn = m * n
    full = (1 << mn) - 1
    cur = mask
    s = 0
    while cur != full and s < steps_cap:
        for i in range(m):
            rc[i] = 0
        for j in range(n):
            cc[j] = 0
        for i in range(m):
            base = i * n
            for j in range(n):
                if (cur >> (base + j)) & 1:
                    rc[i] += 1
                    cc[j] += 1
        new = cur
        for i in range(m):
            t = hpad[rc[i]]
            base = i * n
            for j in range(n):
                if ((cur >> (base + j)) & 1) == 0 and cc[j] >= t:
                    new |= 1 << (base + j)
        if new == cur:
            break
        cur = new
        s += 1
    return cur == full


def _search_k_impl(hpad, m, n, steps_cap, one_step, k, start_mask, count):
    # Scan `count` masks of popcount k in ascending order from start_mask;
    # return the first one whose growth covers the grid, else -1.
    rc = np.zeros(m, np.int64)
    cc = np.zeros(n, np.int64)
    v = start_mask
    for _ in range(count):
        if one_step:
            for i in range(m):
                rc[i] = 0
            for j in range(n):
                cc[j] = 0
            for i in range(m):
                base = i * n
                for j in range(n):
                    if (v >> (base + j)) & 1:
                        rc[i] += 1
                        cc[j] += 1
            ok = True
            for i in range(m):
                t = hpad[rc[i]]
                if t > 0:
                    base = i * n
                    for j in range(n):
                        if ((v >> (base + j)) & 1) == 0 and cc[j] < t:
                            ok = False
                            break
                if not ok:
                    break
        else:
            ok = _sim_spans_impl(v, hpad, m, n, steps_cap, rc, cc)
        if ok:
            return v
        u = v & (-v)
        w = v + u
        v = w | ((v ^ w) // (u << 2))
    return -1


def _mask_starfree_impl(v, m, n, ps, qs, degx, degy):
    for i in range(m):
        degx[i] = 0
    for j in range(n):
        degy[j] = 0
    for i in range(m):
        base = i * n
        for j in range(n):
            if (v >> (base + j)) & 1:
                degx[i] += 1
                degy[j] += 1
    for t in range(ps.shape[0]):
        p1 = ps[t] + 1
        q1 = qs[t] + 1
        for i in range(m):
            if degx[i] >= p1:
                base = i * n
                for j in range(n):
                    if ((v >> (base + j)) & 1) and degy[j] >= q1:
                        return False
    return True


def _ex_scan_impl(m, n, ps, qs, counts):
    # Largest edge count of a bipartite graph avoiding every listed double
    # star; scans edge counts downward, masks ascending within each count.
    mn = m * n
    degx = np.zeros(m, np.int64)
    degy = np.zeros(n, np.int64)
    for e in range(mn, 0, -1):
        v = (1 << e) - 1
        for _ in range(counts[e]):
            if _mask_starfree_impl(v, m, n, ps, qs, degx, degy):
                return e
            u = v & (-v)
            w = v + u
            v = w | ((v ^ w) // (u << 2))
    return 0


def _bar_scan_impl(hpadl, m, n, steps, rv, rn, cv, cn, best0, budget):
    # Candidate enhancement vectors are pre-sorted by norm; scan pairs with
    # pruning on the running best.  Returns (best, ri, ci, updates); best is
    # -2 when the update budget runs out first.
    best = best0
    bi = -1
    bj = -1
    used = 0
    occ = np.zeros((m, n), np.uint8)
    rc = np.zeros(m, np.int64)
    cc = np.zeros(n, np.int64)
    mn = m * n
    for ii in range(rv.shape[0]):
        if rn[ii] >= best:
            break
        for jj in range(cv.shape[0]):
            val = rn[ii] + cn[jj]
            if val >= best:
                break
            for i in range(m):
                for j in range(n):
                    occ[i, j] = 0
            filled = 0
            for _ in range(steps):
                for i in range(m):
                    rc[i] = 0
                for j in range(n):
                    cc[j] = 0
                for i in range(m):
                    for j in range(n):
                        if occ[i, j]:
                            rc[i] += 1
                            cc[j] += 1
                added = 0
                for i in range(m):
                    t = hpadl[rc[i] + rv[ii, i]]
                    for j in range(n):
                        if occ[i, j] == 0 and cc[j] + cv[jj, j] >= t:
                            occ[i, j] = 1
                            added += 1
                used += mn
                if used > budget:
                    return -2, -1, -1, used
                filled += added
                if filled == mn or added == 0:
                    break
            if filled == mn:
                best = val
                bi = ii
                bj = jj
    return best, bi, bj, used


if USE_NUMBA:
    # Rebind the scalar implementations to their compiled versions; callees
    # are rebound first so callers pick up the compiled symbols.
    _margins_feasible_impl = njit(cache=True, nogil=True)(_margins_feasible_impl)
    _sim_spans_impl = njit(cache=True, nogil=True)(_sim_spans_impl)
    _search_k_impl = njit(cache=True, nogil=True)(_search_k_impl)
    _mask_starfree_impl = njit(cache=True, nogil=True)(_mask_starfree_impl)
    _ex_scan_impl = njit(cache=True, nogil=True)(_ex_scan_impl)
    _bar_scan_impl = njit(cache=True, nogil=True)(_bar_scan_impl)

    @njit(cache=True)
    def _profile_scan_nb(hpad, rparts, cparts):
        for ir in range(rparts.shape[0]):
            for ic in range(cparts.shape[0]):
                if _margins_feasible_impl(rparts[ir], cparts[ic], hpad):
                    return ir * cparts.shape[0] + ic
        return -1


# -- vectorized fallback pieces -------------------------------------------------


def _batch_counts(masks, m, n):
    rowbits = (1 << n) - 1
    rc = np.empty((masks.shape[0], m), np.int64)
    for i in range(m):
        rc[:, i] = np.bitwise_count((masks >> (i * n)) & rowbits)
    cc = np.empty((masks.shape[0], n), np.int64)
    for j in range(n):
        colmask = 0
        for i in range(m):
            colmask |= 1 << (i * n + j)
        cc[:, j] = np.bitwise_count(masks & colmask)
    return rc, cc


def _batch_spans(masks, hpad, m, n, steps_cap, one_step):
    mn = m * n
    full = (1 << mn) - 1
    if one_step:
        rc, cc = _batch_counts(masks, m, n)
        thr = hpad[rc]
        ok = np.ones(masks.shape[0], bool)
        for i in range(m):
            for j in range(n):
                bit = 1 << (i * n + j)
                ok &= ((masks & bit) != 0) | (cc[:, j] >= thr[:, i])
        return ok
    cur = masks.copy()
    for _ in range(steps_cap):
        done = cur == full
        if done.all():
            break
        rc, cc = _batch_counts(cur, m, n)
        thr = hpad[rc]
        new = cur.copy()
        for i in range(m):
            for j in range(n):
                bit = 1 << (i * n + j)
                add = ((cur & bit) == 0) & (cc[:, j] >= thr[:, i])
                new[add] |= bit
        if np.array_equal(new, cur):
            break
        cur = new
    return cur == full


def _search_k_np(hpad, m, n, steps_cap, one_step, k, chunk=1 << 18):
    mn = m * n
    top = 1 << mn
    for lo in range(0, top, chunk):
        arr = np.arange(lo, min(lo + chunk, top), dtype=np.int64)
        sel = arr[np.bitwise_count(arr) == k]
        if sel.size == 0:
            continue
        ok = _batch_spans(sel, hpad, m, n, steps_cap, one_step)
        if ok.any():
            return int(sel[np.argmax(ok)])
    return -1


def _batch_starfree(masks, m, n, ps, qs):
    rc, cc = _batch_counts(masks, m, n)
    free = np.ones(masks.shape[0], bool)
    for p, q in zip(ps, qs):
        hit = np.zeros(masks.shape[0], bool)
        for i in range(m):
            for j in range(n):
                bit = 1 << (i * n + j)
                hit |= ((masks & bit) != 0) & (rc[:, i] >= p + 1) & (cc[:, j] >= q + 1)
        free &= ~hit
    return free


def _ex_scan_np(m, n, ps, qs, chunk=1 << 18):
    mn = m * n
    top = 1 << mn
    for e in range(mn, 0, -1):
        for lo in range(0, top, chunk):
            arr = np.arange(lo, min(lo + chunk, top), dtype=np.int64)
            sel = arr[np.bitwise_count(arr) == e]
            if sel.size == 0:
                continue
            free = _batch_starfree(sel, m, n, ps, qs)
            if free.any():
                return e
    return 0


def _bar_pair_spans_np(hpadl, m, n, steps, r, c):
    occ = np.zeros((m, n), bool)
    updates = 0
    for _ in range(steps):
        thr = hpadl[occ.sum(axis=1) + r]
        reach = (occ.sum(axis=0) + c)[None, :] >= thr[:, None]
        new = occ | (~occ & reach)
        updates += m * n
        if new.all():
            return True, updates
        if (new == occ).all():
            return False, updates
        occ = new
    return bool(occ.all()), updates


def _bar_scan_np(hpadl, m, n, steps, rv, rn, cv, cn, best0, budget):
    best = best0
    bi = -1
    bj = -1
    used = 0
    for ii in range(rv.shape[0]):
        if rn[ii] >= best:
            break
        for jj in range(cv.shape[0]):
            val = rn[ii] + cn[jj]
            if val >= best:
                break
            spans, upd = _bar_pair_spans_np(hpadl, m, n, steps, rv[ii], cv[jj])
            used += upd
            if used > budget:
                return -2, -1, -1, used
            if spans:
                best = val
                bi = ii
                bj = jj
    return best, bi, bj, used


# -- public dispatchers ----------------------------------------------------------


def spans_from_mask(mask: int, hpad: np.ndarray, m: int, n: int, steps_cap: int) -> bool:
    rc = np.zeros(m, np.int64)
    cc = np.zeros(n, np.int64)
    return bool(_sim_spans_impl(mask, hpad, m, n, steps_cap, rc, cc))


def search_cardinality(hpad, m, n, steps_cap, one_step, k, jobs=1):
    """First (smallest) k-bit mask that spans, or -1.  Deterministic in jobs."""
    mn = m * n
    total = comb(mn, k)
    if k == 0:
        return 0 if spans_from_mask(0, hpad, m, n, steps_cap) else -1
    if not USE_NUMBA:
        return _search_k_np(hpad, m, n, steps_cap, one_step, k)
    if jobs <= 1 or total < 1 << 14:
        return int(_search_k_impl(hpad, m, n, steps_cap, one_step, k, (1 << k) - 1, total))
    from concurrent.futures import ThreadPoolExecutor

    bounds = [total * t // jobs for t in range(jobs + 1)]
    tasks = []
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for t in range(jobs):
            lo, hi = bounds[t], bounds[t + 1]
            if lo == hi:
                continue
            start = colex_unrank(lo, k)
            tasks.append(
                pool.submit(_search_k_impl, hpad, m, n, steps_cap, one_step, k, start, hi - lo)
            )
        found = [int(f.result()) for f in tasks]
    hits = [v for v in found if v >= 0]
    return min(hits) if hits else -1


def max_starfree_edges(m, n, pairs):
    """Maximum edges of an m-by-n bipartite graph avoiding all S_{p,q} in pairs."""
    if not pairs:
        return m * n
    ps = np.array([p for p, _ in pairs], np.int64)
    qs = np.array([q for _, q in pairs], np.int64)
    if USE_NUMBA:
        counts = np.array([comb(m * n, e) for e in range(m * n + 1)], np.int64)
        return int(_ex_scan_impl(m, n, ps, qs, counts))
    return int(_ex_scan_np(m, n, ps, qs))


def bar_scan(hpadl, m, n, steps, rv, rn, cv, cn, best0, budget):
    if USE_NUMBA:
        res = _bar_scan_impl(hpadl, m, n, steps, rv, rn, cv, cn, best0, budget)
    else:
        res = _bar_scan_np(hpadl, m, n, steps, rv, rn, cv, cn, best0, budget)
    return int(res[0]), int(res[1]), int(res[2]), int(res[3])


def margins_feasible(r, c, hpad) -> bool:
    return bool(_margins_feasible_impl(r, c, hpad))


def profile_scan(hpad, rparts, cparts) -> int:
    """Index ir*len(cparts)+ic of the first feasible profile pair, or -1."""
    if rparts.shape[0] == 0 or cparts.shape[0] == 0:
        return -1
    if USE_NUMBA:
        return int(_profile_scan_nb(hpad, rparts, cparts))
    for ir in range(rparts.shape[0]):
        for ic in range(cparts.shape[0]):
            if _margins_feasible_impl(rparts[ir], cparts[ic], hpad):
                return ir * cparts.shape[0] + ic
    return -1


def warm_up():
    """Trigger jit compilation of every kernel on tiny inputs."""
    hp = np.array([1, 0, 0], np.int64)
    search_cardinality(hp, 2, 2, 1, True, 1)
    search_cardinality(hp, 2, 2, 3, False, 1)
    max_starfree_edges(2, 2, [(0, 0)])
    rv = np.zeros((1, 2), np.int64)
    cv = np.zeros((1, 2), np.int64)
    z = np.zeros(1, np.int64)
    bar_scan(np.array([0, 0, 0, 0, 0], np.int64), 2, 2, 2, rv, z, cv, z, 10, 10**6)
    margins_feasible(np.array([1, 0], np.int64), np.array([1, 0], np.int64), hp)
    profile_scan(hp, np.array([[1, 0]], np.int64), np.array([[1, 0]], np.int64))
