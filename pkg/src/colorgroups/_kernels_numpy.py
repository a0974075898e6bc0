"""Pure-numpy stabilizer-chain kernels.

Fallback twin of :mod:`colorgroups._kernels_numba`; selected with
``COLORGROUPS_BACKEND=numpy`` or automatically when numba is unavailable.
Both backends build the same deterministic chain: the base is the full point
sequence 0..n-1 (levels whose orbit is a single point contribute factor 1),
strong generators are verified deepest level first, and a failed sift adds
the residue at the level of its smallest moved point.
"""

from __future__ import annotations

import numpy as np


def _identity_chain(n):
    svec = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        svec[i, i] = -2
    empty = np.zeros((0, n), dtype=np.int64)
    return (empty, empty.copy(), np.zeros(0, dtype=np.int64), svec,
            np.ones(n, dtype=np.int64))


def build_chain(gens0, n):
    """Build a base-and-strong-generating-set chain for <gens0>.

    Returns (gens, gen_inverses, gen_levels, schreier_vectors, orbit_sizes)
    where gen_levels[j] is the smallest point moved by generator j and
    schreier_vectors[i, p] is the generator index reaching point p at level i
    (-1: not in orbit, -2: the base point itself).
    """
    m0 = gens0.shape[0]
    idn = np.arange(n, dtype=np.int64)

    gens = []
    ginv = []
    glev = []
    seen = set()
    for r in range(m0):
        g = np.asarray(gens0[r], dtype=np.int64)
        moved = np.nonzero(g != idn)[0]
        if moved.size == 0:
            continue
        key = g.tobytes()
        if key in seen:
            continue
        seen.add(key)
        inv = np.empty(n, dtype=np.int64)
        inv[g] = idn
        gens.append(g)
        ginv.append(inv)
        glev.append(int(moved[0]))

    if not gens:
        return _identity_chain(n)

    svec = np.full((n, n), -1, dtype=np.int64)
    osize = np.ones(n, dtype=np.int64)
    trans = np.empty((n, n), dtype=np.int64)

    i = n - 1
    while i >= 0:
        # Schreier vector + explicit transversal for level i.
        svec[i, :] = -1
        svec[i, i] = -2
        trans[i] = idn
        queue = [i]
        qh = 0
        while qh < len(queue):
            p = queue[qh]
            qh += 1
            for j in range(len(gens)):
                if glev[j] < i:
                    continue
                q = int(gens[j][p])
                if svec[i, q] == -1:
                    svec[i, q] = j
                    trans[q] = gens[j][trans[p]]
                    queue.append(q)
        osize[i] = len(queue)

        # Verify every Schreier generator of this level sifts to identity.
        added_level = -1
        for p in queue:
            up = trans[p]
            for j in range(len(gens)):
                if glev[j] < i:
                    continue
                q = int(gens[j][p])
                uq_inv = np.empty(n, dtype=np.int64)
                uq_inv[trans[q]] = idn
                sg = uq_inv[gens[j][up]]
                if np.array_equal(sg, idn):
                    continue
                fail = -1
                lev = i + 1
                while lev < n:
                    p2 = int(sg[lev])
                    if p2 == lev:
                        lev += 1
                        continue
                    if svec[lev, p2] == -1:
                        fail = lev
                        break
                    while p2 != lev:
                        j2 = int(svec[lev, p2])
                        sg = ginv[j2][sg]
                        p2 = int(ginv[j2][p2])
                    lev += 1
                if fail >= 0:
                    inv = np.empty(n, dtype=np.int64)
                    inv[sg] = idn
                    gens.append(sg)
                    ginv.append(inv)
                    glev.append(fail)
                    added_level = fail
                    break
            if added_level >= 0:
                break

        if added_level >= 0:
            i = added_level
        else:
            i -= 1

    return (np.array(gens, dtype=np.int64), np.array(ginv, dtype=np.int64),
            np.array(glev, dtype=np.int64), svec, osize)


def sift(chain, perm):
    """Sift perm through the chain; return the residue permutation.

    The residue is the identity exactly when perm lies in the group.
    """
    gens, ginv, glev, svec, osize = chain
    n = svec.shape[0]
    h = np.asarray(perm, dtype=np.int64).copy()
    for lev in range(n):
        p = int(h[lev])
        if p == lev:
            continue
        if svec[lev, p] == -1:
            return h
        while p != lev:
            j = int(svec[lev, p])
            h = ginv[j][h]
            p = int(ginv[j][p])
    return h


def centralizer_mask(perms, gens):
    """Boolean mask of the rows of perms commuting with every generator."""
    m = perms.shape[0]
    mask = np.ones(m, dtype=bool)
    for g in gens:
        g = np.asarray(g, dtype=np.int64)
        mask &= (perms[:, g] == g[perms]).all(axis=1)
    return mask
