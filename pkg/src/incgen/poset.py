"""Finite posets on {1, ..., n}.

Elements are stored 0-based; everything that faces a user (file format,
error witnesses, ``covers`` in reports) uses 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    PosetSyntaxError,
)

__all__ = [
    "Poset",
    "CoverData",
    "validate_relation",
    "parse_poset",
    "format_poset",
    "cover_data",
    "standard_poset",
    "all_posets",
]


class Poset:
    """Immutable partial order on ``range(n)``.

    ``leq[i][j]`` is true iff i precedes-or-equals j.  Use
    :func:`validate_relation` or :func:`parse_poset` to build one; the
    constructor trusts its input.
    """

    __slots__ = ("n", "leq", "__dict__")

    def __init__(self, leq: Sequence[Sequence[bool]]):
        self.n = len(leq)
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.leq == other.leq

    def __hash__(self):
        return hash(self.leq)

    def __repr__(self):
        strict = ", ".join(f"{i + 1}<{j + 1}" for i, j in self.covers)
        return f"Poset(n={self.n}, covers=[{strict}])"

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All pairs (i, j) with i <= j, lexicographic, 0-based."""
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if self.leq[i][j])

    @cached_property
    def pair_index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    @cached_property
    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in self.pairs if i != j)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        leq, n = self.leq, self.n
        return tuple(
            (i, j)
            for i, j in self.strict_pairs
            if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n))
        )

    @property
    def rho(self) -> int:
        return len(self.pairs)

    @property
    def c(self) -> int:
        return len(self.covers)

    @cached_property
    def mult_table(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each pair index of (i, j), the (index(i,k), index(k,j)) terms of a product entry."""
        idx, leq, n = self.pair_index, self.leq, self.n
        # products stay on the pattern only because the order is transitive
        assert all(
            leq[i][j] or not any(leq[i][k] and leq[k][j] for k in range(n))
            for i in range(n)
            for j in range(n)
        ), "order relation is not transitive"
        return tuple(
            tuple((idx[i, k], idx[k, j]) for k in range(self.n) if self.leq[i][k] and self.leq[k][j])
            for i, j in self.pairs
        )

    @cached_property
    def diagonal_index(self) -> tuple[int, ...]:
        return tuple(self.pair_index[i, i] for i in range(self.n))


@dataclass(frozen=True)
class CoverData:
    covers: tuple[tuple[int, int], ...]  # 1-based labels
    rho: int
    c: int

    def to_json(self) -> dict:
        return {"covers": [list(p) for p in self.covers], "rho": self.rho, "c": self.c}


def validate_relation(rel) -> Poset:
    """Check the partial-order axioms on an n x n boolean matrix.

    Raises the first violation found, naming a witness with 1-based labels.
    """
    leq = [[bool(x) for x in row] for row in rel]
    n = len(leq)
    if n < 1 or any(len(row) != n for row in leq):
        raise ValueError("relation must be a non-empty square matrix")
    for i in range(n):
        if not leq[i][i]:
            raise NotReflexive(i + 1)
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise NotAntisymmetric(i + 1, j + 1)
    for i in range(n):
        for j in range(n):
            if not leq[i][j]:
                continue
            for k in range(n):
                if leq[j][k] and not leq[i][k]:
                    raise NotTransitive(i + 1, j + 1, k + 1)
    return Poset(leq)


def _closure(n: int, strict: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in strict:
        leq[i][j] = True
    # Warshall
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def from_pairs(n: int, strict: Iterable[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of 1-based strict pairs, validated."""
    pairs = []
    for i, j in strict:
        for x in (i, j):
            if not 1 <= x <= n:
                raise IndexOutOfRange(x, n)
        pairs.append((i - 1, j - 1))
    return validate_relation(_closure(n, pairs))


def parse_poset(text: str) -> Poset:
    """Parse the line-oriented poset format (``n <int>`` then ``rel <i> <j>`` lines)."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if n is None:
                if parts[0] != "n" or len(parts) != 2:
                    raise PosetSyntaxError(lineno, "expected 'n <int>' first")
                n = int(parts[1])
                if n < 1:
                    raise PosetSyntaxError(lineno, "n must be positive")
            else:
                if parts[0] != "rel" or len(parts) != 3:
                    raise PosetSyntaxError(lineno, "expected 'rel <i> <j>'")
                i, j = int(parts[1]), int(parts[2])
                for x in (i, j):
                    if not 1 <= x <= n:
                        raise IndexOutOfRange(x, n)
                if i == j:
                    raise PosetSyntaxError(lineno, "rel requires i != j")
                pairs.append((i, j))
        except ValueError:
            raise PosetSyntaxError(lineno, "expected integers") from None
    if n is None:
        raise PosetSyntaxError(0, "missing 'n <int>' line")
    return from_pairs(n, pairs)


def format_poset(p: Poset) -> str:
    """Canonical text form: ``n`` line followed by the sorted covering pairs."""
    lines = [f"n {p.n}"]
    lines += [f"rel {i + 1} {j + 1}" for i, j in sorted(p.covers)]
    return "\n".join(lines) + "\n"


def cover_data(p: Poset) -> CoverData:
    covers = tuple((i + 1, j + 1) for i, j in p.covers)
    return CoverData(covers=covers, rho=p.rho, c=p.c)


def standard_poset(kind: str, n: int) -> Poset:
    """``chain`` is the usual order 1 < 2 < ... < n, ``antichain`` is equality."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "chain":
        return Poset([[i <= j for j in range(n)] for i in range(n)])
    if kind == "antichain":
        return Poset([[i == j for j in range(n)] for i in range(n)])
    raise ValueError(f"unknown poset kind {kind!r}")


def all_posets(n: int) -> list[Poset]:
    """Every labeled partial order on n elements, by brute force over relations."""
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for mask in range(1 << len(offdiag)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(offdiag):
            if mask >> b & 1:
                rel[i][j] = True
        try:
            found.append(validate_relation(rel))
        except (NotAntisymmetric, NotTransitive):
            pass
    return found
