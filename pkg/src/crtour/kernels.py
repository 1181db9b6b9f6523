"""Hot numeric kernels: exact integer determinants and permutation scans.

Everything here is fraction-free integer arithmetic on int64 arrays.
Two interchangeable implementations exist for each kernel: a numba
``@njit`` fast path and a pure-numpy fallback.  The backend is picked
once at import time from the CRTOUR_BACKEND environment variable
("numba", "numpy", or "auto"; default auto = numba when importable).

Kernel semantics are identical across backends; the test suite and
``benchmarks/bench_kernels.py`` compare them directly.

int64 is safe for every caller in this package: skew matrices have
entries in {-1,0,1} and order <= 16, so all Bareiss intermediates are
bounded by the Hadamard envelope 16**8 < 2**32.  Callers with larger
general-integer matrices must guard and fall back to object arithmetic
(see detkit.det_exact).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

_ENV = os.environ.get("CRTOUR_BACKEND", "auto").strip().lower() or "auto"
if _ENV not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"CRTOUR_BACKEND must be auto, numba or numpy (got {_ENV!r})"
    )

if _ENV in ("auto", "numba"):
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - environment dependent
        if _ENV == "numba":
            raise
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False

BACKEND = "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pure numpy implementations


def _bareiss_det_np(a: np.ndarray) -> int:
    """Exact determinant of an int64 matrix via fraction-free elimination."""
    n = a.shape[0]
    if n == 0:
        return 1
    m = a.copy()
    sign = 1
    prev = np.int64(1)
    for j in range(n - 1):
        if m[j, j] == 0:
            nz = np.nonzero(m[j + 1 :, j])[0]
            if nz.size == 0:
                return 0
            r = j + 1 + int(nz[0])
            m[[j, r]] = m[[r, j]]
            sign = -sign
        piv = m[j, j]
        m[j + 1 :, j + 1 :] = (
            m[j + 1 :, j + 1 :] * piv
            - np.outer(m[j + 1 :, j], m[j, j + 1 :])
        ) // prev
        prev = piv
    return int(sign * m[n - 1, n - 1])


def _batch_bareiss_np(mats: np.ndarray) -> np.ndarray:
    """Determinants of a (k, c, c) int64 stack, all at once.

    Items that hit a fully-zero pivot column are finished (det 0) and
    neutralised in place so the vectorised updates stay exact.
    """
    k, c, _ = mats.shape
    if c == 0:
        return np.ones(k, np.int64)
    m = mats.copy()
    sign = np.ones(k, np.int64)
    prev = np.ones(k, np.int64)
    dead = np.zeros(k, bool)
    for j in range(c - 1):
        piv = m[:, j, j]
        for i in np.nonzero((piv == 0) & ~dead)[0]:
            rows = np.nonzero(m[i, j + 1 :, j])[0]
            if rows.size == 0:
                dead[i] = True
                m[i, j:, j:] = 0
                np.fill_diagonal(m[i, j:, j:], prev[i])
            else:
                r = j + 1 + int(rows[0])
                m[i, [j, r]] = m[i, [r, j]]
                sign[i] = -sign[i]
        piv = m[:, j, j].copy()
        m[:, j + 1 :, j + 1 :] = (
            m[:, j + 1 :, j + 1 :] * piv[:, None, None]
            - m[:, j + 1 :, j, None] * m[:, j, None, j + 1 :]
        ) // prev[:, None, None]
        prev = piv
    out = sign * m[:, c - 1, c - 1]
    out[dead] = 0
    return out


def _mask_of(indices) -> int:
    m = 0
    for v in indices:
        m |= 1 << int(v)
    return m


def _mask_lex_less(a: int, b: int) -> bool:
    # subsets compared as sorted index tuples; a proper initial segment
    # is smaller than anything extending it
    x = a ^ b
    if x == 0:
        return False
    low = x & (-x)
    above = ~((low << 1) - 1)
    if a & low:
        return (b & above) != 0
    return (a & above) == 0


def _max_even_minor_np(s: np.ndarray) -> tuple[int, int]:
    n = s.shape[0]
    best = 0
    best_mask = 0
    for c in range(2, n + 1, 2):
        combos = np.array(
            list(itertools.combinations(range(n), c)), np.int64
        )
        subs = s[combos[:, :, None], combos[:, None, :]]
        dets = _batch_bareiss_np(subs)
        mx = int(dets.max())
        if mx < best or mx == 0:
            continue
        first = int(np.argmax(dets == mx))
        mask = _mask_of(combos[first])
        if mx > best or _mask_lex_less(mask, best_mask):
            best, best_mask = mx, mask
    return best, best_mask


def _first_minor_above_np(s: np.ndarray, bound: int, forced: int) -> int:
    n = s.shape[0]
    for c in range(2, n + 1, 2):
        combos = np.array(
            list(itertools.combinations(range(n), c)), np.int64
        )
        if forced >= 0:
            combos = combos[(combos == forced).any(axis=1)]
            if combos.shape[0] == 0:
                continue
        dets = _batch_bareiss_np(s[combos[:, :, None], combos[:, None, :]])
        hits = np.nonzero(dets > bound)[0]
        if hits.size:
            return _mask_of(combos[int(hits[0])])
    return 0


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n - 1) for j in range(i + 1, n)]


_PERM_CHUNK = 40320


def _perm_codes_np(s: np.ndarray, perms: np.ndarray) -> np.ndarray:
    n = s.shape[0]
    pairs = _pair_list(n)
    m = len(pairs)
    codes = np.zeros(perms.shape[0], np.int64)
    for p, (i, j) in enumerate(pairs):
        bit = (s[perms[:, i], perms[:, j]] > 0).astype(np.int64)
        codes |= bit << np.int64(m - 1 - p)
    return codes


def _perm_min_encoding_np(s: np.ndarray) -> int:
    n = s.shape[0]
    best = None
    it = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(it, _PERM_CHUNK))
        if not chunk:
            break
        codes = _perm_codes_np(s, np.array(chunk, np.int64))
        lo = int(codes.min())
        if best is None or lo < best:
            best = lo
    return best if best is not None else 0


def _perm_aut_count_np(s: np.ndarray) -> int:
    n = s.shape[0]
    ident = _perm_codes_np(s, np.arange(n, dtype=np.int64).reshape(1, n))[0]
    count = 0
    it = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(it, _PERM_CHUNK))
        if not chunk:
            break
        codes = _perm_codes_np(s, np.array(chunk, np.int64))
        count += int((codes == ident).sum())
    return count


# ---------------------------------------------------------------------------
# numba implementations

if _HAVE_NUMBA:

    @njit(cache=True)
    def _bareiss_det_nb(a):  # pragma: no cover - exercised via wrappers
        n = a.shape[0]
        if n == 0:
            return np.int64(1)
        m = a.copy()
        sign = np.int64(1)
        prev = np.int64(1)
        for j in range(n - 1):
            if m[j, j] == 0:
                piv_row = -1
                for r in range(j + 1, n):
                    if m[r, j] != 0:
                        piv_row = r
                        break
                if piv_row == -1:
                    return np.int64(0)
                for c in range(n):
                    t = m[j, c]
                    m[j, c] = m[piv_row, c]
                    m[piv_row, c] = t
                sign = -sign
            piv = m[j, j]
            for r in range(j + 1, n):
                for c in range(j + 1, n):
                    m[r, c] = (m[r, c] * piv - m[r, j] * m[j, c]) // prev
            prev = piv
        return sign * m[n - 1, n - 1]

    @njit(cache=True)
    def _max_even_minor_nb(s):  # pragma: no cover
        n = s.shape[0]
        best = np.int64(0)
        best_mask = np.int64(0)
        idx = np.empty(n, np.int64)
        for mask in range(3, 1 << n):
            mm = mask
            c = 0
            while mm:
                mm &= mm - 1
                c += 1
            if c < 2 or (c & 1) == 1:
                continue
            k = 0
            for v in range(n):
                if (mask >> v) & 1:
                    idx[k] = v
                    k += 1
            sub = np.empty((c, c), np.int64)
            for r in range(c):
                for q in range(c):
                    sub[r, q] = s[idx[r], idx[q]]
            d = _bareiss_det_nb(sub)
            if d > best:
                best = d
                best_mask = mask
            elif d == best and d > 0:
                x = mask ^ best_mask
                if x != 0:
                    low = x & (-x)
                    above = ~((low << 1) - 1)
                    if (mask & low) != 0:
                        if (best_mask & above) != 0:
                            best_mask = mask
                    elif (mask & above) == 0:
                        best_mask = mask
        return best, best_mask

    @njit(cache=True)
    def _first_minor_above_nb(s, bound, forced):  # pragma: no cover
        n = s.shape[0]
        idx = np.empty(n, np.int64)
        for mask in range(3, 1 << n):
            if forced >= 0 and ((mask >> forced) & 1) == 0:
                continue
            mm = mask
            c = 0
            while mm:
                mm &= mm - 1
                c += 1
            if c < 2 or (c & 1) == 1:
                continue
            k = 0
            for v in range(n):
                if (mask >> v) & 1:
                    idx[k] = v
                    k += 1
            sub = np.empty((c, c), np.int64)
            for r in range(c):
                for q in range(c):
                    sub[r, q] = s[idx[r], idx[q]]
            if _bareiss_det_nb(sub) > bound:
                return np.int64(mask)
        return np.int64(0)

    @njit(cache=True)
    def _perm_min_encoding_nb(s):  # pragma: no cover
        n = s.shape[0]
        m = n * (n - 1) // 2
        perm = np.arange(n)
        best = np.int64(1) << m
        while True:
            code = np.int64(0)
            for i in range(n - 1):
                for j in range(i + 1, n):
                    code <<= 1
                    if s[perm[i], perm[j]] > 0:
                        code |= 1
            if code < best:
                best = code
            # lexicographic next permutation
            k = n - 2
            while k >= 0 and perm[k] >= perm[k + 1]:
                k -= 1
            if k < 0:
                break
            l = n - 1
            while perm[l] <= perm[k]:
                l -= 1
            t = perm[k]
            perm[k] = perm[l]
            perm[l] = t
            lo = k + 1
            hi = n - 1
            while lo < hi:
                t = perm[lo]
                perm[lo] = perm[hi]
                perm[hi] = t
                lo += 1
                hi -= 1
        return best

    @njit(cache=True)
    def _perm_aut_count_nb(s):  # pragma: no cover
        n = s.shape[0]
        perm = np.arange(n)
        count = np.int64(0)
        while True:
            same = True
            for i in range(n - 1):
                if not same:
                    break
                for j in range(i + 1, n):
                    a = 1 if s[perm[i], perm[j]] > 0 else 0
                    b = 1 if s[i, j] > 0 else 0
                    if a != b:
                        same = False
                        break
            if same:
                count += 1
            k = n - 2
            while k >= 0 and perm[k] >= perm[k + 1]:
                k -= 1
            if k < 0:
                break
            l = n - 1
            while perm[l] <= perm[k]:
                l -= 1
            t = perm[k]
            perm[k] = perm[l]
            perm[l] = t
            lo = k + 1
            hi = n - 1
            while lo < hi:
                t = perm[lo]
                perm[lo] = perm[hi]
                perm[hi] = t
                lo += 1
                hi -= 1
        return count


# ---------------------------------------------------------------------------
# dispatch


def _as_i64(a) -> np.ndarray:
    arr = np.ascontiguousarray(a, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("kernel input must be a square 2-d array")
    return arr


def bareiss_det(a) -> int:
    """Exact determinant of a square integer matrix (int64 range)."""
    arr = _as_i64(a)
    if BACKEND == "numba":
        return int(_bareiss_det_nb(arr))
    return _bareiss_det_np(arr)


def max_even_minor(s) -> tuple[int, int]:
    """Scan every even-cardinality vertex subset (size >= 2) of a skew
    matrix and return ``(max determinant, witness bitmask)``.

    Ties go to the subset that is smallest as a sorted index tuple.
    Returns ``(0, 0)`` when the matrix has fewer than two rows.
    """
    arr = _as_i64(s)
    n = arr.shape[0]
    if n < 2:
        return 0, 0
    if n > 62:
        raise ValueError("subset masks need n <= 62")
    if BACKEND == "numba":
        best, mask = _max_even_minor_nb(arr)
        return int(best), int(mask)
    return _max_even_minor_np(arr)


def first_minor_above(s, bound: int, forced: int = -1) -> int:
    """First even-cardinality subset whose determinant exceeds ``bound``.

    Returns the subset as a bitmask, or 0 when none exists.  ``forced``
    restricts the scan to subsets containing that vertex.
    """
    arr = _as_i64(s)
    n = arr.shape[0]
    if n < 2:
        return 0
    if n > 62:
        raise ValueError("subset masks need n <= 62")
    if BACKEND == "numba":
        return int(_first_minor_above_nb(arr, np.int64(bound), np.int64(forced)))
    return _first_minor_above_np(arr, int(bound), int(forced))


def perm_min_encoding(s) -> int:
    """Minimum row-major upper-triangle bit encoding over all relabelings."""
    arr = _as_i64(s)
    n = arr.shape[0]
    if n * (n - 1) // 2 > 62:
        raise ValueError("bit packing needs n(n-1)/2 <= 62")
    if n <= 1:
        return 0
    if BACKEND == "numba":
        return int(_perm_min_encoding_nb(arr))
    return _perm_min_encoding_np(arr)


def perm_aut_count(s) -> int:
    """Number of vertex permutations fixing the tournament (automorphisms)."""
    arr = _as_i64(s)
    n = arr.shape[0]
    if n <= 1:
        return 1
    if BACKEND == "numba":
        return int(_perm_aut_count_nb(arr))
    return _perm_aut_count_np(arr)


def implementations() -> dict:
    """Both backend implementations, for cross-testing and benchmarks."""
    numpy_impls = {
        "bareiss_det": _bareiss_det_np,
        "max_even_minor": _max_even_minor_np,
        "first_minor_above": _first_minor_above_np,
        "perm_min_encoding": _perm_min_encoding_np,
        "perm_aut_count": _perm_aut_count_np,
    }
    if not _HAVE_NUMBA:
        return {"numpy": numpy_impls}
    return {
        "numpy": numpy_impls,
        "numba": {
            "bareiss_det": _bareiss_det_nb,
            "max_even_minor": _max_even_minor_nb,
            "first_minor_above": _first_minor_above_nb,
            "perm_min_encoding": _perm_min_encoding_nb,
            "perm_aut_count": _perm_aut_count_nb,
        },
    }
