"""Independent reference implementations used as test oracles.

Nothing here shares code paths with the package: determinants come
from the permutation expansion, scans from itertools, canonical forms
and witnesses from plain brute force.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from crtour import Tournament, switch, theta


@lru_cache(maxsize=None)
def _perms_and_signs(n: int):
    perms = list(itertools.permutations(range(n)))
    signs = []
    for p in perms:
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]
        )
        signs.append(-1 if inv % 2 else 1)
    return perms, signs


def det_leibniz(matrix) -> int:
    """Exact determinant by signed permutation expansion."""
    m = [[int(x) for x in row] for row in np.asarray(matrix)]
    n = len(m)
    if n == 0:
        return 1
    perms, signs = _perms_and_signs(n)
    total = 0
    for p, s in zip(perms, signs):
        prod = 1
        for i in range(n):
            prod *= m[i][p[i]]
            if prod == 0:
                break
        total += s * prod
    return total


def det_leibniz_batch(mats: np.ndarray) -> np.ndarray:
    """Vectorised permutation expansion over a (k, n, n) int stack."""
    k, n, _ = mats.shape
    perms, signs = _perms_and_signs(n)
    out = np.zeros(k, dtype=object)
    rows = np.arange(n)
    for p, s in zip(perms, signs):
        out += s * np.prod(mats[:, rows, list(p)].astype(object), axis=1)
    return out


def brute_max_even_minor(t: Tournament):
    """(max determinant, lexicographically smallest witness tuple)."""
    n = t.n
    best = 0
    best_sub: tuple[int, ...] = ()
    for c in range(2, n + 1, 2):
        for sub in itertools.combinations(range(n), c):
            d = det_leibniz(t.skew[np.ix_(sub, sub)])
            if d > best or (d == best and d > 0 and not best_sub):
                best, best_sub = d, sub
            elif d == best and d > 0 and sub < best_sub:
                best_sub = sub
    return best, best_sub


def anchored_switch_sets(n: int):
    for mask in range(1 << max(n - 1, 0)):
        yield frozenset(v + 1 for v in range(n - 1) if (mask >> v) & 1)


def brute_switching_equivalent(t1: Tournament, t2: Tournament):
    for w in anchored_switch_sets(t1.n):
        if switch(t1, w) == t2:
            return w
    return None


def relabel(t: Tournament, phi) -> Tournament:
    n = t.n
    arr = np.zeros((n, n), np.int8)
    for u in range(n):
        for v in range(n):
            arr[phi[u], phi[v]] = t.skew[u, v]
    return Tournament(arr)


def brute_isomorphic(t1: Tournament, t2: Tournament):
    if t1.n != t2.n:
        return None
    for phi in itertools.permutations(range(t1.n)):
        if relabel(t1, phi) == t2:
            return phi
    return None


def brute_switching_isomorphic(t1: Tournament, t2: Tournament):
    if t1.n != t2.n:
        return None
    for w in anchored_switch_sets(t1.n):
        phi = brute_isomorphic(switch(t1, w), t2)
        if phi is not None:
            return w, phi
    return None


def brute_canonical_bits(t: Tournament) -> str:
    return min(relabel(t, phi).bits() for phi in itertools.permutations(range(t.n)))


def brute_aut_count(t: Tournament) -> int:
    return sum(
        1
        for phi in itertools.permutations(range(t.n))
        if relabel(t, phi) == t
    )


def brute_is_transitive(t: Tournament) -> bool:
    """No directed 3-cycle, by scanning every 3-subset."""
    for a, b, c in itertools.combinations(range(t.n), 3):
        for x, y, z in ((a, b, c), (a, c, b)):
            if (
                theta(t, x, y) == 1
                and theta(t, y, z) == 1
                and theta(t, z, x) == 1
            ):
                return False
    return True


def has_diamond(t: Tournament) -> bool:
    return any(
        det_leibniz(t.skew[np.ix_(sub, sub)]) == 9
        for sub in itertools.combinations(range(t.n), 4)
    )


def random_tournament(rng, n: int) -> Tournament:
    m = n * (n - 1) // 2
    return Tournament.from_bits(n, rng.getrandbits(m) if m else 0)
