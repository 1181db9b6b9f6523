"""Covertex/revertex relations, single-vertex extensions and the CR,
basic and strong-CR tournament predicates.

Two vertices are covertices when they agree on every third vertex and
revertices when they disagree on every third vertex; either way they
are CR-associated.  A dominating relation sigma attaches a new vertex u
to a tournament T, giving the extension T(u, sigma); u is a CR vertex
when it lands CR-associated with some existing vertex.  T (lying in
D_k minus D_{k-2}) is a CR tournament when every non-CR attachment
breaks the D_k bound, and a strong CR tournament when all of its
1-transitive blowups are CR tournaments as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from . import config, kernels
from .core import Tournament, _append_vertex
from .detkit import max_subtournament_det
from .errors import (
    InvalidArgumentError,
    ResourceLimitError,
    TheoremViolationError,
)

COVERTICES = "covertices"
REVERTICES = "revertices"
BOTH = "covertices-and-revertices"

Sigma = tuple[int, ...]


def sigma_from_string(text: str) -> Sigma:
    """'+-+' -> (1, -1, 1)."""
    if not text or set(text) - {"+", "-"}:
        raise InvalidArgumentError("sigma text must be nonempty over +/-")
    return tuple(1 if c == "+" else -1 for c in text)


def sigma_to_string(sigma: Sequence[int]) -> str:
    return "".join("+" if r > 0 else "-" for r in sigma)


def _check_sigma(t: Tournament, sigma: Sequence[int]) -> Sigma:
    sig = tuple(int(r) for r in sigma)
    if len(sig) != t.n:
        raise InvalidArgumentError(
            f"sigma length {len(sig)} does not match order {t.n}"
        )
    if any(r not in (1, -1) for r in sig):
        raise InvalidArgumentError("sigma entries must be +-1")
    return sig


def all_sigmas(n: int) -> Iterator[Sigma]:
    """All 2^n dominating relations, by binary counting on (r_1..r_n)
    with +1 as bit 1 and r_1 the most significant digit."""
    for s in range(1 << n):
        yield tuple(
            1 if (s >> (n - 1 - i)) & 1 else -1 for i in range(n)
        )


def cr_associated(t: Tournament, u1: int, u2: int) -> Optional[str]:
    """Kind of CR association between two vertices, if any.

    For order 2 the pair is both at once and the combined label is
    returned.
    """
    n = t.n
    u1, u2 = int(u1), int(u2)
    if u1 == u2:
        raise InvalidArgumentError("cr_associated needs distinct vertices")
    if not (0 <= u1 < n and 0 <= u2 < n):
        raise InvalidArgumentError("vertex out of range")
    if n == 2:
        return BOTH
    others = [v for v in range(n) if v != u1 and v != u2]
    prods = t.skew[u1, others].astype(np.int64) * t.skew[u2, others]
    if np.all(prods == 1):
        return COVERTICES
    if np.all(prods == -1):
        return REVERTICES
    return None


def extend(t: Tournament, sigma: Sequence[int]) -> Tournament:
    """The (n+1)-tournament T(u, sigma); the new vertex u gets index n
    and theta(u, v_i) = sigma[i]."""
    sig = _check_sigma(t, sigma)
    return _append_vertex(t, sig)


@dataclass(frozen=True)
class CrWitness:
    vertex: int
    kind: str


def cr_vertex_witness(
    t: Tournament, sigma: Sequence[int]
) -> Optional[CrWitness]:
    """Vertex of t that is CR-associated with the attached u in
    T(u, sigma), or None when u is a non-CR vertex.

    Scans in index order, so the lowest-index witness is reported; on a
    basic tournament the witness is unique anyway.
    """
    sig = _check_sigma(t, sigma)
    n = t.n
    if n == 1:
        return CrWitness(0, BOTH)
    s = t.skew
    sig_arr = np.array(sig, np.int64)
    for v in range(n):
        others = [x for x in range(n) if x != v]
        prods = sig_arr[others] * s[v, others]
        if np.all(prods == 1):
            return CrWitness(v, COVERTICES)
        if np.all(prods == -1):
            return CrWitness(v, REVERTICES)
    return None


def count_cr_sigmas(t: Tournament, cap: Optional[int] = None) -> int:
    """Number of dominating relations whose attached vertex is CR."""
    limit = config.scan_cap() if cap is None else cap
    if t.n > limit:
        raise ResourceLimitError(
            f"sigma scan of order {t.n} exceeds cap {limit}"
        )
    return sum(
        1 for sig in all_sigmas(t.n) if cr_vertex_witness(t, sig) is not None
    )


def cr_normalize(
    t: Tournament, sigma: Sequence[int]
) -> Optional[frozenset[int]]:
    """Switch set turning T(u, sigma) into a 1-transitive blowup of t:
    empty for a covertex witness, {u} for a revertex witness, None when
    u is non-CR."""
    wit = cr_vertex_witness(t, sigma)
    if wit is None:
        return None
    if wit.kind == REVERTICES:
        return frozenset({t.n})
    return frozenset()


def is_trivial_cr(t: Tournament) -> bool:
    """Order 1, order 2, or a diamond."""
    from .core import is_diamond

    return t.n <= 2 or is_diamond(t)


@dataclass(frozen=True)
class CrReport:
    """Result of the CR-tournament check.

    ``failures`` lists sigma strings violating the defining condition
    (a non-CR extension that stays inside D_k, or a CR extension that
    leaves D_k \\ D_{k-2}); empty means t is a CR tournament.
    ``witness_map`` records the witness vertex (1-based) and kind for
    every CR sigma.
    """

    ok: bool
    k: int
    trivial: bool
    failures: tuple[str, ...] = ()
    witness_map: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "k": self.k,
            "trivial": self.trivial,
            "failures": list(self.failures),
            "witness_map": dict(self.witness_map),
        }


def is_cr_tournament(t: Tournament, cap: Optional[int] = None) -> CrReport:
    """Decide whether t is a CR tournament, with a full report.

    k is fixed by the minor scan (t lies in D_k \\ D_{k-2}).  Trivial
    CR tournaments short-circuit.  Otherwise every dominating relation
    is scanned: non-CR extensions must leave D_k, and CR extensions
    must stay in D_k \\ D_{k-2} (cross-check).  Because t itself is in
    D_k, any subset of the extension violating the bound contains u, so
    both checks reduce to a scan over subsets through u.
    """
    limit = config.scan_cap() if cap is None else cap
    if t.n + 1 > limit:
        raise ResourceLimitError(
            f"extension scans of order {t.n + 1} exceed cap {limit}"
        )
    k = max_subtournament_det(t, cap=limit).k
    if is_trivial_cr(t):
        return CrReport(True, k, True)
    bound = k * k
    u = t.n
    failures = []
    witness_map = {}
    for sig in all_sigmas(t.n):
        wit = cr_vertex_witness(t, sig)
        ext = extend(t, sig)
        violates = (
            kernels.first_minor_above(ext.skew, bound, forced=u) != 0
        )
        if wit is None:
            if not violates:
                failures.append(sigma_to_string(sig))
        else:
            witness_map[sigma_to_string(sig)] = {
                "vertex": wit.vertex + 1,
                "kind": wit.kind,
            }
            if violates:
                failures.append(sigma_to_string(sig))
    return CrReport(not failures, k, False, tuple(failures), witness_map)


def is_basic(t: Tournament) -> bool:
    """Order >= 4 with no CR-associated pair (false below order 4)."""
    if t.n < 4:
        return False
    for u1 in range(t.n):
        for u2 in range(u1 + 1, t.n):
            if cr_associated(t, u1, u2) is not None:
                return False
    return True


@dataclass(frozen=True)
class StrongCrReport:
    ok: bool
    base: CrReport
    blowups: tuple[tuple[int, CrReport], ...]

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "base": self.base.to_json(),
            "blowups": [
                {"duplicated": v + 1, "report": rep.to_json()}
                for v, rep in self.blowups
            ],
        }


def is_strong_cr(t: Tournament, cap: Optional[int] = None) -> StrongCrReport:
    """CR tournament all of whose 1-transitive blowups are CR.

    Checks one blowup per duplicated vertex (the two internal
    orientations of the doubled pair give isomorphic results).  When
    all blowups pass, t itself must be CR; that implication is checked
    too and reported as the base result.
    """
    from .blowup import one_transitive_blowups

    reports = []
    ok = True
    for v, b in enumerate(one_transitive_blowups(t)):
        rep = is_cr_tournament(b, cap=cap)
        reports.append((v, rep))
        if not rep.ok:
            ok = False
    base = is_cr_tournament(t, cap=cap)
    if ok and not base.ok:
        # all 1-transitive blowups CR forces the base to be CR
        raise TheoremViolationError(
            "blowups are all CR but the base is not"
        )
    return StrongCrReport(ok and base.ok, base, tuple(reports))
