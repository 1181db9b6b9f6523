"""Tournament values, switching, isomorphism and enumeration.

A tournament of order n is stored as its n x n skew-adjacency matrix
(entries in {-1, 0, 1}, antisymmetric, zero diagonal).  Vertices are the
0-based indices 0..n-1; all user-facing output converts to 1-based
labels.  Tournaments are immutable values: every operation returns a
new object and is safe to evaluate concurrently.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import config, kernels
from .errors import InvalidArgumentError, ResourceLimitError


class Tournament:
    """Immutable tournament on vertices 0..n-1."""

    __slots__ = ("_skew",)

    def __init__(self, skew) -> None:
        arr = np.asarray(skew, dtype=np.int8)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvalidArgumentError("skew matrix must be square")
        n = arr.shape[0]
        if n < 1:
            raise InvalidArgumentError("a tournament has at least one vertex")
        if np.any(np.diagonal(arr) != 0):
            raise InvalidArgumentError("diagonal must be zero")
        if np.any(arr + arr.T != 0):
            raise InvalidArgumentError("matrix must be skew-symmetric")
        if n > 1:
            off = arr[~np.eye(n, dtype=bool)]
            if np.any(np.abs(off) != 1):
                raise InvalidArgumentError(
                    "every pair needs exactly one arc (off-diagonal +-1)"
                )
        arr = arr.copy()
        arr.setflags(write=False)
        self._skew = arr

    @property
    def n(self) -> int:
        return self._skew.shape[0]

    @property
    def skew(self) -> np.ndarray:
        """Read-only skew-adjacency matrix view."""
        return self._skew

    @classmethod
    def from_bits(cls, n: int, bits) -> "Tournament":
        """Build from the row-major upper-triangle orientation bits.

        ``bits`` is a 0/1 string of length n(n-1)/2 or the integer it
        encodes (most significant bit = pair (0,1)).  Bit 1 at pair
        (i, j) with i < j means i -> j.
        """
        m = n * (n - 1) // 2
        if isinstance(bits, str):
            if len(bits) != m or set(bits) - {"0", "1"}:
                raise InvalidArgumentError(
                    f"need {m} characters of 0/1 for order {n}"
                )
            val = int(bits, 2) if m else 0
        else:
            val = int(bits)
            if val < 0 or (val >> m) != 0:
                raise InvalidArgumentError("bit value out of range")
        arr = np.zeros((n, n), np.int8)
        pos = m - 1
        for i in range(n - 1):
            for j in range(i + 1, n):
                b = (val >> pos) & 1
                arr[i, j] = 1 if b else -1
                arr[j, i] = -arr[i, j]
                pos -= 1
        return cls(arr)

    def bits(self) -> str:
        n = self.n
        out = []
        for i in range(n - 1):
            for j in range(i + 1, n):
                out.append("1" if self._skew[i, j] > 0 else "0")
        return "".join(out)

    def packed(self) -> int:
        b = self.bits()
        return int(b, 2) if b else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._skew, other._skew)

    def __hash__(self) -> int:
        return hash((self.n, self.packed()))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, bits={self.bits()!r})"


def pair_index(n: int, i: int, j: int) -> int:
    """Position of pair (i, j), i < j, in the row-major upper triangle."""
    if not (0 <= i < j < n):
        raise InvalidArgumentError("need 0 <= i < j < n")
    return i * (n - 1) - i * (i - 1) // 2 + (j - i - 1)


def transitive_tournament(n: int) -> Tournament:
    """Chain 0 -> 1 -> ... -> n-1."""
    if n < 1:
        raise InvalidArgumentError("order must be positive")
    arr = np.zeros((n, n), np.int8)
    iu = np.triu_indices(n, 1)
    arr[iu] = 1
    arr[(iu[1], iu[0])] = -1
    return Tournament(arr)


def _check_vertex(t: Tournament, v: int) -> int:
    v = int(v)
    if not 0 <= v < t.n:
        raise InvalidArgumentError(f"vertex {v} out of range for order {t.n}")
    return v


def theta(t: Tournament, u: int, v: int) -> int:
    """+1 if u -> v, -1 if v -> u."""
    u = _check_vertex(t, u)
    v = _check_vertex(t, v)
    if u == v:
        raise InvalidArgumentError("theta needs two distinct vertices")
    return int(t.skew[u, v])


def switch(t: Tournament, w: Iterable[int]) -> Tournament:
    """Reverse every arc between w and its complement."""
    wset = {_check_vertex(t, v) for v in w}
    eps = np.ones(t.n, np.int8)
    if wset:
        eps[sorted(wset)] = -1
    return Tournament(t.skew * np.outer(eps, eps))


def induced(t: Tournament, u: Iterable[int]) -> Tournament:
    """Subtournament on u; vertex k of the result is sorted(u)[k]."""
    verts = sorted({_check_vertex(t, v) for v in u})
    if not verts:
        raise InvalidArgumentError("induced subtournament needs vertices")
    idx = np.array(verts)
    return Tournament(t.skew[np.ix_(idx, idx)])


def _append_vertex(t: Tournament, theta_row: Sequence[int]) -> Tournament:
    """Extension by one vertex; theta_row[i] is theta(new, v_i)."""
    n = t.n
    arr = np.zeros((n + 1, n + 1), np.int8)
    arr[:n, :n] = t.skew
    for i, r in enumerate(theta_row):
        arr[n, i] = r
        arr[i, n] = -r
    return Tournament(arr)


def is_transitive(t: Tournament) -> Optional[tuple[int, ...]]:
    """Chain ordering (first vertex beats all) when t has no 3-cycle."""
    s = t.skew
    scores = (s > 0).sum(axis=1)
    order = np.argsort(-scores, kind="stable")
    for a in range(t.n):
        for b in range(a + 1, t.n):
            if s[order[a], order[b]] != 1:
                return None
    return tuple(int(v) for v in order)


def apply_permutation(t: Tournament, phi: Sequence[int]) -> Tournament:
    """Relabel so that old vertex u becomes phi[u]."""
    n = t.n
    if sorted(phi) != list(range(n)):
        raise InvalidArgumentError("phi must be a permutation of 0..n-1")
    arr = np.zeros((n, n), np.int8)
    p = list(phi)
    for u in range(n):
        for v in range(n):
            arr[p[u], p[v]] = t.skew[u, v]
    return Tournament(arr)


def is_isomorphic(t1: Tournament, t2: Tournament) -> Optional[tuple[int, ...]]:
    """A permutation phi with theta_{t2}(phi u, phi v) = theta_{t1}(u, v).

    Backtracking over images in ascending order with out-score pruning,
    so identical inputs yield the identity.
    """
    if t1.n != t2.n:
        return None
    n = t1.n
    s1, s2 = t1.skew, t2.skew
    sc1 = [int(x) for x in (s1 > 0).sum(axis=1)]
    sc2 = [int(x) for x in (s2 > 0).sum(axis=1)]
    if sorted(sc1) != sorted(sc2):
        return None

    phi: list[int] = [-1] * n
    used = [False] * n

    def assign(d: int) -> bool:
        if d == n:
            return True
        for w in range(n):
            if used[w] or sc2[w] != sc1[d]:
                continue
            ok = True
            for e in range(d):
                if s2[w, phi[e]] != s1[d, e]:
                    ok = False
                    break
            if ok:
                phi[d] = w
                used[w] = True
                if assign(d + 1):
                    return True
                used[w] = False
        phi[d] = -1
        return False

    if not assign(0):
        return None
    res = tuple(phi)
    assert apply_permutation(t1, res) == t2
    return res


def switching_equivalent(
    t1: Tournament, t2: Tournament
) -> Optional[frozenset[int]]:
    """Switch set w with switch(t1, w) == t2, anchored off vertex 0.

    Since w and its complement act identically, any witness can be
    normalised to exclude vertex 0; that normal form is computed in
    O(n^2) from the first rows and then verified.
    """
    if t1.n != t2.n:
        raise InvalidArgumentError("switching equivalence needs equal orders")
    n = t1.n
    w = frozenset(
        v for v in range(1, n) if t1.skew[0, v] != t2.skew[0, v]
    )
    return w if switch(t1, w) == t2 else None


def _dominant_switch_set(t: Tournament, v: int) -> frozenset[int]:
    # switching by the set of in-neighbours makes v dominate everything
    return frozenset(x for x in range(t.n) if t.skew[x, v] > 0)


def switching_isomorphic(
    t1: Tournament, t2: Tournament
) -> Optional[tuple[frozenset[int], tuple[int, ...]]]:
    """Witness (w, phi) with switch(t1, w) isomorphic to t2 via phi.

    Normalises t1 at vertex 0 (switch so 0 dominates everything), then
    tries each vertex u of t2 as the image of 0 under the same
    normalisation.  Complete: any witness maps the dominant vertex of
    one normal form onto the dominant vertex of the other.
    """
    if t1.n != t2.n:
        return None
    n = t1.n
    if n == 1:
        return frozenset(), (0,)
    w1 = _dominant_switch_set(t1, 0)
    n1 = switch(t1, w1)
    for u in range(n):
        w2 = _dominant_switch_set(t2, u)
        phi = is_isomorphic(n1, switch(t2, w2))
        if phi is None:
            continue
        w = frozenset(w1 ^ {v for v in range(n) if phi[v] in w2})
        assert apply_permutation(switch(t1, w), phi) == t2
        return w, phi
    return None


def is_diamond(t: Tournament) -> bool:
    """4-tournament with a vertex dominating or dominated by a 3-cycle,
    equivalently a 4-tournament of determinant 9."""
    return t.n == 4 and kernels.bareiss_det(t.skew) == 9


def canonical_encoding(t: Tournament) -> int:
    """Lexicographically minimal orientation bit-string over all
    relabelings, packed as an integer (isomorphism invariant)."""
    if t.n > config.PACKING_LIMIT:
        raise ResourceLimitError(
            f"canonical encoding packs into int64 only up to order "
            f"{config.PACKING_LIMIT}"
        )
    return kernels.perm_min_encoding(t.skew)


def automorphism_count(t: Tournament) -> int:
    return kernels.perm_aut_count(t.skew)


def enumerate_tournaments(
    n: int, classes: bool = False, cap: Optional[int] = None
) -> Iterator[Tournament]:
    """All labeled tournaments of order n, or one representative per
    isomorphism class when ``classes`` is set.

    Class representatives carry the minimal bit encoding and stream in
    ascending encoding order.  Generation is by vertex extension:
    every class of order k restricts to a class of order k-1, so
    extending each representative by all 2^(k-1) new-vertex rows and
    deduplicating canonically covers everything.
    """
    if n < 1:
        raise InvalidArgumentError("order must be positive")
    limit = config.enum_cap() if cap is None else cap
    if n > limit:
        raise ResourceLimitError(
            f"enumeration of order {n} exceeds cap {limit} "
            f"(set CRTOUR_MAX_N to raise)"
        )
    if not classes:
        m = n * (n - 1) // 2
        for val in range(1 << m):
            yield Tournament.from_bits(n, val)
        return
    if n > config.PACKING_LIMIT:
        raise ResourceLimitError(
            f"class enumeration packs encodings into int64; order "
            f"{n} > {config.PACKING_LIMIT} unsupported"
        )
    reps = [Tournament(np.zeros((1, 1), np.int8))]
    for k in range(2, n + 1):
        seen: set[int] = set()
        for rep in reps:
            for wins in range(1 << (k - 1)):
                row = [1 if (wins >> i) & 1 else -1 for i in range(k - 1)]
                ext = _append_vertex(rep, row)
                seen.add(canonical_encoding(ext))
        reps = [Tournament.from_bits(k, code) for code in sorted(seen)]
    yield from reps


# ---------------------------------------------------------------------------
# text formats


def format_trn(t: Tournament) -> str:
    """Two-line .trn form: order, then upper-triangle orientation bits."""
    return f"{t.n}\n{t.bits()}\n"


def format_skew(t: Tournament) -> str:
    return "\n".join(
        " ".join(f"{int(x):2d}" for x in row) for row in t.skew
    ) + "\n"


def parse_tournament(text: str) -> Tournament:
    """Parse .trn text or a whitespace-separated skew matrix."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidArgumentError("empty tournament input")
    first = lines[0].split()
    if len(first) == 1 and not first[0].lstrip("-").isdigit():
        raise InvalidArgumentError(f"cannot parse header {lines[0]!r}")
    if len(first) == 1:
        n = int(first[0])
        if n == 0 and len(lines) == 1:
            # the skew-matrix form of the single-vertex tournament
            return Tournament(np.zeros((1, 1), np.int8))
        if n < 1:
            raise InvalidArgumentError("order must be positive")
        m = n * (n - 1) // 2
        if n == 1:
            return Tournament(np.zeros((1, 1), np.int8))
        if len(lines) < 2:
            raise InvalidArgumentError(".trn input is missing the bit line")
        bits = "".join(lines[1:])
        if len(bits) != m:
            raise InvalidArgumentError(
                f"expected {m} orientation bits, got {len(bits)}"
            )
        return Tournament.from_bits(n, bits)
    # skew-matrix form: n rows of n signed integers
    try:
        rows = [[int(x) for x in ln.split()] for ln in lines]
    except ValueError as exc:
        raise InvalidArgumentError(f"cannot parse matrix row: {exc}") from exc
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidArgumentError("skew-matrix input must be square")
    return Tournament(np.array(rows, np.int8))
