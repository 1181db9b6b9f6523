"""Exact skew-adjacency determinants, principal-minor scans and the
D_k classes.

det(T) means det of the skew-adjacency matrix S_T = A_T - A_T^t.  It is
0 for odd order and the square of an odd integer for even order, and a
tournament lies in D_k when no subtournament determinant exceeds k^2.
All arithmetic is exact: int64 fraction-free elimination inside the
Hadamard envelope, arbitrary-precision python integers beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import config, kernels
from .core import Tournament
from .errors import (
    InvalidArgumentError,
    ResourceLimitError,
    TheoremViolationError,
)

# conservative margin under 2**63 for float-evaluated Hadamard bounds
_I64_SAFE = 2 ** 60


def skew_adjacency(t: Tournament) -> np.ndarray:
    """S_T as a fresh writable int8 array."""
    return t.skew.copy()


def _hadamard_bound(arr: np.ndarray) -> float:
    norms = np.sqrt((arr.astype(float) ** 2).sum(axis=1))
    return float(np.prod(np.maximum(norms, 1.0)))


def _bareiss_object(rows: list[list[int]]) -> int:
    # python-int Bareiss; exact for any magnitude
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign, prev = 1, 1
    for j in range(n - 1):
        if m[j][j] == 0:
            for r in range(j + 1, n):
                if m[r][j] != 0:
                    m[j], m[r] = m[r], m[j]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[j][j]
        for r in range(j + 1, n):
            for c in range(j + 1, n):
                m[r][c] = (m[r][c] * piv - m[r][j] * m[j][c]) // prev
        prev = piv
    return sign * m[n - 1][n - 1]


def det_exact(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Uses the int64 kernel whenever the Hadamard bound (which also caps
    every fraction-free intermediate) fits; otherwise falls back to
    python integers.  Never wraps around silently.
    """
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidArgumentError("determinant needs a square matrix")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        flo = np.asarray(matrix, dtype=float)
        if not np.all(flo == np.round(flo)):
            raise InvalidArgumentError("determinant needs integer entries")
        arr = flo.astype(np.int64)
    if arr.shape[0] == 0:
        return 1
    if _hadamard_bound(arr) < _I64_SAFE:
        return kernels.bareiss_det(arr)
    return _bareiss_object([[int(x) for x in row] for row in arr])


def tournament_det(t: Tournament) -> int:
    """det of the skew-adjacency matrix; 0 for odd order, an odd square
    for even order."""
    return det_exact(t.skew)


@dataclass(frozen=True)
class DkReport:
    """Outcome of a full even-subset minor scan."""

    max_minor: int
    k: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "max_minor": self.max_minor,
            "k": self.k,
            "witness": [v + 1 for v in self.witness],
        }


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _k_of(max_minor: int) -> int:
    if max_minor <= 1:
        return 1
    k = math.isqrt(max_minor)
    if k * k != max_minor or k % 2 == 0:
        raise TheoremViolationError(
            f"maximal minor {max_minor} is not the square of an odd integer"
        )
    return k


def max_subtournament_det(t: Tournament, cap: Optional[int] = None) -> DkReport:
    """Maximum determinant over all even-cardinality subtournaments
    (odd ones are 0), with the lexicographically smallest witness."""
    limit = config.scan_cap() if cap is None else cap
    if t.n > limit:
        raise ResourceLimitError(
            f"minor scan of order {t.n} exceeds cap {limit}"
        )
    best, mask = kernels.max_even_minor(t.skew)
    return DkReport(best, _k_of(best), _mask_vertices(mask))


def _check_k(k: int) -> int:
    k = int(k)
    if k < 1 or k % 2 == 0:
        raise InvalidArgumentError("k must be a positive odd integer")
    return k


def in_dk(t: Tournament, k: int, cap: Optional[int] = None) -> bool:
    """True when every subtournament determinant is at most k^2."""
    k = _check_k(k)
    limit = config.scan_cap() if cap is None else cap
    if t.n > limit:
        raise ResourceLimitError(
            f"minor scan of order {t.n} exceeds cap {limit}"
        )
    return kernels.first_minor_above(t.skew, k * k) == 0


def in_dk_exactly(t: Tournament, k: int, cap: Optional[int] = None) -> bool:
    """True when t lies in D_k but not D_{k-2} (D_1 itself for k = 1)."""
    k = _check_k(k)
    return max_subtournament_det(t, cap=cap).k == k
