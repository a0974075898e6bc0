"""Numba-compiled stabilizer-chain kernels.

Loop-level twin of :mod:`colorgroups._kernels_numpy`; the chain layout and
the deterministic construction order are identical, so both backends produce
byte-identical Schreier vectors (asserted by the backend tests).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _build_chain_impl(gens0, n):
    m0 = gens0.shape[0]
    cap = 4 * (m0 + n) + 16
    gens = np.zeros((cap, n), dtype=np.int64)
    ginv = np.zeros((cap, n), dtype=np.int64)
    glev = np.zeros(cap, dtype=np.int64)
    ng = 0

    for r in range(m0):
        lev = -1
        for x in range(n):
            if gens0[r, x] != x:
                lev = x
                break
        if lev < 0:
            continue
        dup = False
        for t in range(ng):
            same = True
            for x in range(n):
                if gens[t, x] != gens0[r, x]:
                    same = False
                    break
            if same:
                dup = True
                break
        if dup:
            continue
        for x in range(n):
            gens[ng, x] = gens0[r, x]
            ginv[ng, gens0[r, x]] = x
        glev[ng] = lev
        ng += 1

    svec = np.full((n, n), -1, dtype=np.int64)
    osize = np.ones(n, dtype=np.int64)
    for i in range(n):
        svec[i, i] = -2
    if ng == 0:
        return gens[:0], ginv[:0], glev[:0], svec, osize

    trans = np.zeros((n, n), dtype=np.int64)
    queue = np.zeros(n, dtype=np.int64)
    w = np.zeros(n, dtype=np.int64)
    sg = np.zeros(n, dtype=np.int64)
    uq_inv = np.zeros(n, dtype=np.int64)

    i = n - 1
    while i >= 0:
        for x in range(n):
            svec[i, x] = -1
        svec[i, i] = -2
        for x in range(n):
            trans[i, x] = x
        queue[0] = i
        qh = 0
        qt = 1
        while qh < qt:
            p = queue[qh]
            qh += 1
            for j in range(ng):
                if glev[j] < i:
                    continue
                q = gens[j, p]
                if svec[i, q] == -1:
                    svec[i, q] = j
                    for x in range(n):
                        trans[q, x] = gens[j, trans[p, x]]
                    queue[qt] = q
                    qt += 1
        osize[i] = qt

        added_level = -1
        for oi in range(qt):
            p = queue[oi]
            for j in range(ng):
                if glev[j] < i:
                    continue
                q = gens[j, p]
                for x in range(n):
                    w[x] = gens[j, trans[p, x]]
                for x in range(n):
                    uq_inv[trans[q, x]] = x
                is_id = True
                for x in range(n):
                    sg[x] = uq_inv[w[x]]
                    if sg[x] != x:
                        is_id = False
                if is_id:
                    continue
                fail = -1
                lev = i + 1
                while lev < n:
                    p2 = sg[lev]
                    if p2 == lev:
                        lev += 1
                        continue
                    if svec[lev, p2] == -1:
                        fail = lev
                        break
                    while p2 != lev:
                        j2 = svec[lev, p2]
                        for x in range(n):
                            sg[x] = ginv[j2, sg[x]]
                        p2 = ginv[j2, p2]
                    lev += 1
                if fail >= 0:
                    if ng >= cap:
                        newcap = cap * 2
                        gens2 = np.zeros((newcap, n), dtype=np.int64)
                        ginv2 = np.zeros((newcap, n), dtype=np.int64)
                        glev2 = np.zeros(newcap, dtype=np.int64)
                        for t in range(ng):
                            for x in range(n):
                                gens2[t, x] = gens[t, x]
                                ginv2[t, x] = ginv[t, x]
                            glev2[t] = glev[t]
                        gens = gens2
                        ginv = ginv2
                        glev = glev2
                        cap = newcap
                    for x in range(n):
                        gens[ng, x] = sg[x]
                        ginv[ng, sg[x]] = x
                    glev[ng] = fail
                    ng += 1
                    added_level = fail
                    break
            if added_level >= 0:
                break

        if added_level >= 0:
            i = added_level
        else:
            i -= 1

    return gens[:ng].copy(), ginv[:ng].copy(), glev[:ng].copy(), svec, osize


@njit(cache=True)
def _sift_impl(ginv, svec, perm):
    n = svec.shape[0]
    h = perm.copy()
    for lev in range(n):
        p = h[lev]
        if p == lev:
            continue
        if svec[lev, p] == -1:
            return h
        while p != lev:
            j = svec[lev, p]
            for x in range(n):
                h[x] = ginv[j, h[x]]
            p = ginv[j, p]
    return h


@njit(cache=True)
def _centralizer_mask_impl(perms, gens):
    m, n = perms.shape
    k = gens.shape[0]
    mask = np.ones(m, dtype=np.bool_)
    for r in range(m):
        ok = True
        for j in range(k):
            for x in range(n):
                if perms[r, gens[j, x]] != gens[j, perms[r, x]]:
                    ok = False
                    break
            if not ok:
                break
        mask[r] = ok
    return mask


def build_chain(gens0, n):
    gens0 = np.ascontiguousarray(gens0, dtype=np.int64)
    if gens0.size == 0:
        gens0 = np.zeros((0, n), dtype=np.int64)
    return _build_chain_impl(gens0, n)


def sift(chain, perm):
    gens, ginv, glev, svec, osize = chain
    return _sift_impl(ginv, svec, np.ascontiguousarray(perm, dtype=np.int64))


def centralizer_mask(perms, gens):
    return _centralizer_mask_impl(
        np.ascontiguousarray(perms, dtype=np.int64),
        np.ascontiguousarray(gens, dtype=np.int64))
