"""The Z-matrix calculus and bordered-determinant tools.

Z(m, r) is an m x (m-1) integer matrix built from an odd m and a +-1
sequence r; its row sums b_i are exactly the offsets appearing in the
deletion determinants of single-vertex extensions of L_{m+1}, squared.
The l-diagonal vectors Gamma_l walk the matrix along wrapped
anti-diagonals; their consecutive differences are constant off two
exempt positions, which pins down b_{i+1} - b_i in closed form.

This module mirrors the 1-based index conventions of those formulas
exactly; arrays are stored 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import induced
from .cr import extend
from .detkit import tournament_det
from .errors import InvalidArgumentError, TheoremViolationError
from .lfamily import gen_ln, sigma_to_signature


def _check_r(r: Sequence[int]) -> tuple[int, ...]:
    rr = tuple(int(x) for x in r)
    if not rr or any(x not in (1, -1) for x in rr):
        raise InvalidArgumentError("r must be a nonempty +-1 sequence")
    if len(rr) % 2 == 0:
        raise InvalidArgumentError("r must have odd length")
    return rr


@dataclass(frozen=True, eq=False)
class ZMatrix:
    m: int
    r: tuple[int, ...]
    entries: np.ndarray  # shape (m, m-1), row i-1 / column j-1

    def entry(self, i: int, j: int) -> int:
        """z_{ij} with 1-based indices."""
        if not (1 <= i <= self.m and 1 <= j <= self.m - 1):
            raise InvalidArgumentError("z-matrix index out of range")
        return int(self.entries[i - 1, j - 1])

    def pretty(self) -> str:
        width = max(len(str(int(x))) for x in self.entries.flat)
        rows = [
            " ".join(f"{int(x):>{width}}" for x in row)
            for row in self.entries
        ]
        return "\n".join(f"[ {row} ]" for row in rows)

    def csv(self) -> str:
        return "\n".join(
            ",".join(str(int(x)) for x in row) for row in self.entries
        ) + "\n"


def z_matrix(m: int, r: Sequence[int]) -> ZMatrix:
    """Z(m, r): z_{ij} = (-1)^{i+j} (m-2j) r_{i+j}, with r negated and
    the subscript wrapped by m once i+j exceeds m."""
    m = int(m)
    if m < 3 or m % 2 == 0:
        raise InvalidArgumentError("m must be an odd integer >= 3")
    rr = _check_r(r)
    if len(rr) != m:
        raise InvalidArgumentError(f"r must have length {m}")
    z = np.zeros((m, m - 1), np.int64)
    for i in range(1, m + 1):
        for j in range(1, m):
            sgn = -1 if (i + j) % 2 else 1
            if i + j <= m:
                z[i - 1, j - 1] = sgn * (m - 2 * j) * rr[i + j - 1]
            else:
                z[i - 1, j - 1] = sgn * (m - 2 * j) * (-rr[i + j - m - 1])
    return ZMatrix(m, rr, z)


@dataclass(frozen=True)
class DiagonalVector:
    ell: int
    entries: tuple[int, ...]
    step: int  # the constant difference off the two exempt positions


def diagonal_vector(z: ZMatrix, ell: int) -> DiagonalVector:
    """Gamma_ell: entry i is z_{i, ell-i} before the zero at i = ell and
    z_{i, m+ell-i} after it (1-based)."""
    ell = int(ell)
    if not 1 <= ell <= z.m:
        raise InvalidArgumentError("ell out of range")
    vals = []
    for i in range(1, z.m + 1):
        if i < ell:
            vals.append(z.entry(i, ell - i))
        elif i == ell:
            vals.append(0)
        else:
            vals.append(z.entry(i, z.m + ell - i))
    step = 2 * (1 if ell % 2 == 0 else -1) * z.r[ell - 1]
    return DiagonalVector(ell, tuple(vals), step)


def row_sums(z: ZMatrix) -> np.ndarray:
    """b with b_i the i-th row sum; cross-checked against summing the
    diagonal vectors entrywise."""
    b = z.entries.sum(axis=1)
    via_gamma = np.zeros(z.m, np.int64)
    for ell in range(1, z.m + 1):
        via_gamma += np.array(diagonal_vector(z, ell).entries, np.int64)
    if not np.array_equal(b, via_gamma):
        raise TheoremViolationError(
            "row sums disagree with the diagonal-vector route"
        )
    return b.astype(np.int64)


def delta_total(r: Sequence[int]) -> int:
    """Delta = sum of the diagonal steps, computed directly and through
    the odd-run formula; the two must agree."""
    rr = _check_r(r)
    m = len(rr)
    direct = 2 * sum(
        (1 if i % 2 == 0 else -1) * rr[i - 1] for i in range(1, m + 1)
    )
    runs = sigma_to_signature(rr)
    odd_positions = [
        d for d, a in enumerate(runs, start=1) if abs(a) % 2 == 1
    ]
    via_runs = 2 * sum(
        (1 if (d + i) % 2 == 0 else -1) * rr[0]
        for i, d in enumerate(odd_positions)
    )
    if direct != via_runs:
        raise TheoremViolationError(
            f"delta mismatch: direct {direct} vs run formula {via_runs}"
        )
    return direct


def b_diff_predicted(i: int, r: Sequence[int]) -> int:
    """Predicted b_{i+1} - b_i: Delta off run boundaries, Delta +- 2m at
    a boundary depending on the sign of (-1)^i r_i."""
    rr = _check_r(r)
    m = len(rr)
    i = int(i)
    if not 1 <= i <= m - 1:
        raise InvalidArgumentError("index must satisfy 1 <= i <= m-1")
    runs = sigma_to_signature(rr)
    boundaries = set(np.cumsum([abs(a) for a in runs[:-1]]).tolist())
    delta = delta_total(rr)
    if i not in boundaries:
        return delta
    sgn = (1 if i % 2 == 0 else -1) * rr[i - 1]
    return delta + 2 * m if sgn == -1 else delta - 2 * m


def transitive_inverse(p: int) -> np.ndarray:
    """Inverse of the order-p transitive skew-adjacency matrix (p even):
    the alternating band with (i, j) entry (-1)^{j-i} above the
    diagonal."""
    p = int(p)
    if p < 2 or p % 2 == 1:
        raise InvalidArgumentError(
            "the transitive skew matrix is invertible only for even order"
        )
    inv = np.zeros((p, p), np.int64)
    for i in range(p):
        for j in range(i + 1, p):
            inv[i, j] = 1 if (j - i) % 2 == 0 else -1
            inv[j, i] = -inv[i, j]
    return inv


def _check_pm1_vector(x: Sequence[int], name: str) -> np.ndarray:
    arr = np.array([int(v) for v in x], np.int64)
    if arr.size == 0 or np.any(np.abs(arr) != 1):
        raise InvalidArgumentError(f"{name} must be a nonempty +-1 vector")
    return arr


def assemble_bordered(a: int, x: Sequence[int], y: Sequence[int]) -> np.ndarray:
    """The (p+2)-order skew matrix with first rows (0, a, x^t) and
    (-a, 0, y^t) over a transitive core."""
    xa = _check_pm1_vector(x, "x")
    ya = _check_pm1_vector(y, "y")
    if xa.size != ya.size:
        raise InvalidArgumentError("x and y must have equal length")
    p = xa.size
    s = np.zeros((p + 2, p + 2), np.int64)
    s[0, 1], s[1, 0] = a, -a
    s[0, 2:], s[2:, 0] = xa, -xa
    s[1, 2:], s[2:, 1] = ya, -ya
    core = np.triu(np.ones((p, p), np.int64), 1)
    s[2:, 2:] = core - core.T
    return s


def bordered_det(a: int, x: Sequence[int], y: Sequence[int]) -> int:
    """det of the bordered matrix, via the closed form
    (a + x^t S^{-1} y)^2 over the explicit transitive inverse."""
    a = int(a)
    if a not in (1, -1):
        raise InvalidArgumentError("a must be +-1")
    xa = _check_pm1_vector(x, "x")
    ya = _check_pm1_vector(y, "y")
    if xa.size != ya.size:
        raise InvalidArgumentError("x and y must have equal length")
    if xa.size % 2 == 1:
        raise InvalidArgumentError("vectors must have even length")
    val = a + int(xa @ transitive_inverse(xa.size) @ ya)
    return val * val


def ln_deletion_det_check(n: int, sigma: Sequence[int]) -> bool:
    """Check the deletion-determinant identity for an extension of L_n.

    With u attached to L_n by sigma, deleting chain vertex v_i from the
    extension must leave determinant (a + b_i)^2, where a = -r_n and b
    is the row-sum vector of Z(n-1, (r_1..r_{n-1})).  True when the
    identity holds for every i.
    """
    n = int(n)
    if n < 4 or n % 2 == 1:
        raise InvalidArgumentError("the identity is stated for even n >= 4")
    sig = tuple(int(v) for v in sigma)
    if len(sig) != n or any(v not in (1, -1) for v in sig):
        raise InvalidArgumentError("sigma must be a +-1 sequence of length n")
    ext = extend(gen_ln(n), sig)
    b = row_sums(z_matrix(n - 1, sig[: n - 1]))
    a = -sig[n - 1]
    for i in range(1, n):
        keep = [v for v in range(n + 1) if v != i - 1]
        if tournament_det(induced(ext, keep)) != (a + int(b[i - 1])) ** 2:
            return False
    return True
