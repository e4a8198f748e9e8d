"""Deciding whether a matrix tuple, together with all scalars, generates A.

Over ``M_k(GF(q))`` two things must hold: the diagonal table Delta (row t
holds the (t, t) entries of the tuple) has pairwise distinct rows, and for
each covering pair ``i <. j`` the vectors of diagonal differences ``v`` and
of (i, j) entries ``w`` are linearly independent over GF(q).  Products are
tested factor by factor, ``Z/p^e`` after reduction modulo p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .counting import formula_count
from .errors import RingMismatch, ShapeMismatch, WrongRingKind
from .fields import rank
from .incidence import IncMatrix
from .poset import Poset
from .rings import BaseRing, LocalZ, MatrixRing, ProductRing, project_component, reduce_mod_radical


@dataclass
class GenReport:
    verdict: bool
    ring: BaseRing
    delta: list[list]  # n x m, ring elements
    failed_row_pair: tuple[int, int] | None = None  # 1-based
    failed_cover: tuple[int, int] | None = None  # 1-based
    per_component: list["GenReport"] | None = None
    cover_ranks: dict = field(default_factory=dict)  # 1-based cover -> rank of [v; w]

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "ring": self.ring.spec,
            "delta": [[self.ring.serialize(x) for x in row] for row in self.delta],
            "failed_row_pair": list(self.failed_row_pair) if self.failed_row_pair else None,
            "failed_cover": list(self.failed_cover) if self.failed_cover else None,
            "cover_ranks": [[i, j, r] for (i, j), r in sorted(self.cover_ranks.items())],
        }
        if self.per_component is not None:
            out["per_component"] = [r.to_json() for r in self.per_component]
        return out


def _delta(S: Sequence[IncMatrix]) -> list[list]:
    diags = [a.diagonal() for a in S]
    n = S[0].poset.n
    return [[d[t] for d in diags] for t in range(n)]


def _common(S: Sequence[IncMatrix]) -> tuple[Poset, BaseRing]:
    if not S:
        raise ValueError("the tuple must contain at least one matrix")
    poset, ring = S[0].poset, S[0].ring
    for a in S:
        if a.poset != poset:
            raise ShapeMismatch("tuple mixes posets")
        if a.ring != ring:
            raise RingMismatch("tuple mixes base rings")
    return poset, ring


def check_criterion_simple(S: Sequence[IncMatrix]) -> GenReport:
    """Generation test over a matrix ring ``M_k(GF(q))`` (k = 1 is a field)."""
    poset, ring = _common(S)
    if not isinstance(ring, MatrixRing):
        raise WrongRingKind(f"expected M_k(GF(q)), got {ring.spec}")
    delta = _delta(S)
    n = poset.n
    report = GenReport(verdict=True, ring=ring, delta=delta)
    if n == 1:
        return report

    seen = {}
    for t, row in enumerate(delta):
        key = tuple(row)
        if key in seen:
            report.verdict = False
            report.failed_row_pair = (seen[key] + 1, t + 1)
            return report
        seen[key] = t

    F = ring.field
    for i, j in poset.covers:
        v, w = [], []
        for a in S:
            v += ring.entries(ring.sub(a[i, i], a[j, j]))
            w += ring.entries(a[i, j])
        r = rank(F, [v, w])
        report.cover_ranks[i + 1, j + 1] = r
        if r < 2 and report.failed_cover is None:
            report.verdict = False
            report.failed_cover = (i + 1, j + 1)
    return report


def check_generates(S: Sequence[IncMatrix]) -> GenReport:
    """Generation test over any ring of the catalog."""
    poset, ring = _common(S)
    if isinstance(ring, MatrixRing):
        return check_criterion_simple(S)
    if isinstance(ring, ProductRing):
        subs = [
            check_criterion_simple([a.map_entries(lambda x, t=t: project_component(ring, x, t), f) for a in S])
            for t, f in enumerate(ring.factors, start=1)
        ]
    elif isinstance(ring, LocalZ):
        residue = ring.residue_ring
        subs = [check_criterion_simple([a.map_entries(lambda x: reduce_mod_radical(ring, x), residue) for a in S])]
    else:
        raise RingMismatch(f"unsupported ring {ring!r}")
    return GenReport(
        verdict=all(r.verdict for r in subs),
        ring=ring,
        delta=_delta(S),
        per_component=subs,
    )


def log_lower_bound(n: int, size: int) -> int:
    """``ceil(log_size(n))``, computed exactly."""
    m, power = 0, 1
    while power < n:
        power *= size
        m += 1
    return m


def mgen(poset: Poset, ring: BaseRing) -> int:
    """Least tuple length for which generating tuples exist."""
    m = max(1, log_lower_bound(poset.n, ring.size))
    while formula_count(poset, ring, m) == 0:
        m += 1
    return m
