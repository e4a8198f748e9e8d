"""Incidence-ring elements and a brute-force subring closure.

An :class:`IncMatrix` stores one base-ring entry per pair ``i <= j`` of its
poset, in the order of ``poset.pairs``; entries off the pattern do not
exist.  Indices in this API are 0-based.

The closure in :func:`subring_closure` deliberately knows nothing about
incidence-ring structure.  It treats ``A`` as a finite abelian group
``Z/n_1 + ... + Z/n_D`` (the base ring's additive coordinates repeated over
the pattern), keeps the subgroup generated so far as an integer lattice in
Hermite form, and adjoins products with the generators until nothing new
appears.  It is the independent oracle for every generation criterion.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import RingMismatch, ShapeMismatch, TooLarge
from .poset import Poset
from .rings import BaseRing

DEFAULT_MAX_SIZE = 2 ** 20


class IncMatrix:
    """Element of the incidence ring ``A_n(poset, ring)``."""

    __slots__ = ("poset", "ring", "entries", "_coords")

    def __init__(self, poset: Poset, ring: BaseRing, entries: Sequence):
        if len(entries) != poset.rho:
            raise ShapeMismatch(f"expected {poset.rho} entries, got {len(entries)}")
        self.poset = poset
        self.ring = ring
        self.entries = tuple(entries)
        self._coords = None

    # constructors

    @classmethod
    def zero(cls, poset: Poset, ring: BaseRing) -> "IncMatrix":
        return cls(poset, ring, [ring.zero] * poset.rho)

    @classmethod
    def scalar(cls, poset: Poset, ring: BaseRing, r) -> "IncMatrix":
        diag = set(poset.diagonal_index)
        return cls(poset, ring, [r if k in diag else ring.zero for k in range(poset.rho)])

    @classmethod
    def identity(cls, poset: Poset, ring: BaseRing) -> "IncMatrix":
        return cls.scalar(poset, ring, ring.one)

    @classmethod
    def unit(cls, poset: Poset, ring: BaseRing, i: int, j: int, r=None) -> "IncMatrix":
        """``r * E_ij``; r defaults to 1."""
        idx = poset.pair_index.get((i, j))
        if idx is None:
            raise ShapeMismatch(f"({i}, {j}) is not in the order relation")
        entries = [ring.zero] * poset.rho
        entries[idx] = ring.one if r is None else r
        return cls(poset, ring, entries)

    @classmethod
    def from_dict(cls, poset: Poset, ring: BaseRing, d: dict) -> "IncMatrix":
        entries = [ring.zero] * poset.rho
        for (i, j), x in d.items():
            idx = poset.pair_index.get((i, j))
            if idx is None:
                if ring.is_zero(x):
                    continue
                raise ShapeMismatch(f"nonzero entry at ({i}, {j}) outside the order relation")
            ring.check(x)
            entries[idx] = x
        return cls(poset, ring, entries)

    @classmethod
    def from_dense(cls, poset: Poset, ring: BaseRing, rows) -> "IncMatrix":
        n = poset.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ShapeMismatch(f"expected an {n}x{n} matrix")
        return cls.from_dict(poset, ring, {(i, j): rows[i][j] for i in range(n) for j in range(n)})

    # access

    def __getitem__(self, ij):
        idx = self.poset.pair_index.get(ij)
        return self.ring.zero if idx is None else self.entries[idx]

    def diagonal(self) -> list:
        return [self.entries[k] for k in self.poset.diagonal_index]

    def to_dense(self) -> list[list]:
        n = self.poset.n
        return [[self[i, j] for j in range(n)] for i in range(n)]

    def __eq__(self, other):
        return (
            isinstance(other, IncMatrix)
            and self.entries == other.entries
            and self.poset == other.poset
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IncMatrix({self.to_dense()!r})"

    # arithmetic

    def _check(self, other):
        if not isinstance(other, IncMatrix):
            return NotImplemented
        if self.poset != other.poset:
            raise ShapeMismatch("incidence matrices over different posets")
        if self.ring != other.ring:
            raise RingMismatch("incidence matrices over different base rings")

    def __add__(self, other):
        self._check(other)
        add = self.ring.add
        return IncMatrix(self.poset, self.ring, [add(x, y) for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        sub = self.ring.sub
        return IncMatrix(self.poset, self.ring, [sub(x, y) for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        neg = self.ring.neg
        return IncMatrix(self.poset, self.ring, [neg(x) for x in self.entries])

    def __mul__(self, other):
        self._check(other)
        R = self.ring
        add, mul, zero = R.add, R.mul, R.zero
        a, b = self.entries, other.entries
        out = []
        for terms in self.poset.mult_table:
            s = zero
            for x, y in terms:
                ax = a[x]
                if ax != zero:
                    s = add(s, mul(ax, b[y]))
            out.append(s)
        return IncMatrix(self.poset, R, out)

    def scale(self, r, left: bool = True) -> "IncMatrix":
        mul = self.ring.mul
        if left:
            return IncMatrix(self.poset, self.ring, [mul(r, x) for x in self.entries])
        return IncMatrix(self.poset, self.ring, [mul(x, r) for x in self.entries])

    def map_entries(self, f, ring: BaseRing) -> "IncMatrix":
        """Apply an entrywise map into another ring (same poset)."""
        return IncMatrix(self.poset, ring, [f(x) for x in self.entries])

    # additive coordinates

    def coords(self) -> list[int]:
        if self._coords is None:
            c = self.ring.coords
            self._coords = [v for x in self.entries for v in c(x)]
        return self._coords

    @classmethod
    def from_coords(cls, poset: Poset, ring: BaseRing, cs) -> "IncMatrix":
        w = len(ring.moduli)
        cs = list(cs)
        return cls(poset, ring, [ring.from_coords(cs[t * w:(t + 1) * w]) for t in range(poset.rho)])


def inc_arith(a: IncMatrix, b: IncMatrix, op: str) -> IncMatrix:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def ring_size(poset: Poset, ring: BaseRing) -> int:
    return ring.size ** poset.rho


def all_elements(poset: Poset, ring: BaseRing) -> Iterable[IncMatrix]:
    elems = list(ring.elements())
    for entries in itertools.product(elems, repeat=poset.rho):
        yield IncMatrix(poset, ring, entries)


def scalar_matrices(ring: BaseRing, poset: Poset) -> list[IncMatrix]:
    """Additive generators of the scalar matrices ``R I_n``."""
    return [IncMatrix.scalar(poset, ring, r) for r in ring.additive_generators()]


# ---------------------------------------------------------------------------
# subgroup lattice


class _Lattice:
    """Subgroup of ``Z/n_1 + ... + Z/n_D`` held as a full-rank lattice in Z^D.

    Coordinate t is embedded in Z/N (N = lcm of the moduli) by scaling with
    N / n_t; the lattice always contains N Z^D, so the subgroup has order
    ``N^D / det``.  Rows are kept upper triangular with positive pivots.
    """

    def __init__(self, moduli: Sequence[int]):
        self.moduli = list(moduli)
        self.N = reduce(math.lcm, self.moduli, 1)
        self.scale = [self.N // m for m in self.moduli]
        D = len(self.moduli)
        self.D = D
        self.rows = [[self.N if c == r else 0 for c in range(D)] for r in range(D)]

    def embed(self, coords):
        return [x * s for x, s in zip(coords, self.scale)]

    def _reduce(self, x):
        rows = self.rows
        for i in range(self.D):
            xi = x[i]
            if xi:
                h = rows[i]
                d = h[i]
                if xi % d:
                    return x, i
                f = xi // d
                x = [a - f * b for a, b in zip(x, h)]
        return x, None

    def contains_embedded(self, x) -> bool:
        return self._reduce(list(x))[1] is None

    def contains(self, coords) -> bool:
        return self.contains_embedded(self.embed(coords))

    def add_embedded(self, x) -> bool:
        """Adjoin x; returns False if it was already in the lattice."""
        x, start = self._reduce(list(x))
        if start is None:
            return False
        N = self.N
        rows = self.rows
        for i in range(start, self.D):
            xi = x[i] % N
            if xi == 0:
                continue
            h = rows[i]
            d = h[i]
            g, a, b = _xgcd(d, xi)
            new = [(a * u + b * v) % N for u, v in zip(h, x)]
            new[i] = g
            cd, cx = d // g, xi // g
            x = [(cx * u - cd * v) % N for u, v in zip(h, x)]
            x[i] = 0
            rows[i] = new
        return True

    def add(self, coords) -> bool:
        return self.add_embedded(self.embed(coords))

    @property
    def order(self) -> int:
        det = 1
        for i, r in enumerate(self.rows):
            det *= r[i]
        return self.N ** self.D // det

    def generators(self) -> list[list[int]]:
        """Group coordinates of the rows that are nonzero modulo N Z^D."""
        out = []
        for r in self.rows:
            if any(v % self.N for v in r):
                out.append([(v // s) % m for v, s, m in zip(r, self.scale, self.moduli)])
        return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass
class SubringSpan:
    """A subring of ``A`` given by additive generators and its exact order."""

    poset: Poset
    ring: BaseRing
    basis: list[IncMatrix]
    size: int
    _lattice: _Lattice

    def __contains__(self, a: IncMatrix) -> bool:
        return self._lattice.contains(a.coords())


def _guard(poset: Poset, ring: BaseRing, max_size: int | None) -> int:
    total = ring_size(poset, ring)
    limit = DEFAULT_MAX_SIZE if max_size is None else max_size
    if total > limit:
        raise TooLarge(f"|A| = {total} exceeds the brute-force guard {limit}")
    return total


def additive_span(poset: Poset, ring: BaseRing, elems: Iterable[IncMatrix], max_size: int | None = None) -> SubringSpan:
    """Subgroup of ``A`` generated by ``elems`` (no multiplication)."""
    _guard(poset, ring, max_size)
    lat = _Lattice(ring.moduli * poset.rho)
    for x in elems:
        lat.add(x.coords())
    basis = [IncMatrix.from_coords(poset, ring, g) for g in lat.generators()]
    return SubringSpan(poset, ring, basis, lat.order, lat)


class _Structure:
    """Structure constants of ``A`` on its additive coordinates.

    ``table[i][j]`` lists ``(k, c)`` with ``b_i b_j = sum c b_k`` for the
    coordinate basis vectors ``b_i``; they are computed once from
    :class:`IncMatrix` arithmetic.
    """

    def __init__(self, poset: Poset, ring: BaseRing):
        self.moduli = list(ring.moduli) * poset.rho
        D = self.D = len(self.moduli)
        basis = [IncMatrix.from_coords(poset, ring, [int(t == i) for t in range(D)]) for i in range(D)]
        self.table = [
            [[(k, c) for k, c in enumerate((bi * bj).coords()) if c] for bj in basis]
            for bi in basis
        ]
        self.identity = IncMatrix.identity(poset, ring).coords()
        self.scalars = [a.coords() for a in scalar_matrices(ring, poset)]

    def mul(self, x, y):
        z = [0] * self.D
        table = self.table
        for i, xi in enumerate(x):
            if xi:
                row = table[i]
                for j, yj in enumerate(y):
                    if yj:
                        f = xi * yj
                        for k, c in row[j]:
                            z[k] += f * c
        return [v % n for v, n in zip(z, self.moduli)]


_STRUCTURES: dict = {}


def _structure(poset: Poset, ring: BaseRing) -> _Structure:
    key = (poset, ring)
    st = _STRUCTURES.get(key)
    if st is None:
        st = _STRUCTURES[key] = _Structure(poset, ring)
    return st


def _closure_lattice(S, poset, ring, max_size) -> tuple[_Lattice, Poset, BaseRing, int]:
    S = list(S)
    if S:
        poset = poset or S[0].poset
        ring = ring or S[0].ring
        for a in S:
            if a.poset != poset:
                raise ShapeMismatch("generators over different posets")
            if a.ring != ring:
                raise RingMismatch("generators over different base rings")
    elif poset is None or ring is None:
        raise ValueError("poset and ring are required for an empty generating set")
    total = _guard(poset, ring, max_size)

    st = _structure(poset, ring)
    gens = [a.coords() for a in S] + st.scalars
    lat = _Lattice(st.moduli)
    lat.add(st.identity)
    # Z-span of all words in gens; words are built by right multiplication
    queue = [st.identity]
    while queue and lat.order < total:
        b = queue.pop()
        for g in gens:
            p = st.mul(b, g)
            if lat.add(p):
                queue.append(p)
    return lat, poset, ring, total


def subring_closure(
    S: Sequence[IncMatrix],
    poset: Poset | None = None,
    ring: BaseRing | None = None,
    max_size: int | None = None,
) -> SubringSpan:
    """Subring generated by ``S``, all scalar matrices and the identity.

    ``poset`` and ``ring`` are needed only when ``S`` is empty.
    """
    lat, poset, ring, _ = _closure_lattice(S, poset, ring, max_size)
    basis = [IncMatrix.from_coords(poset, ring, g) for g in lat.generators()]
    return SubringSpan(poset, ring, basis, lat.order, lat)


def generates_bruteforce(S: Sequence[IncMatrix], poset: Poset | None = None, ring: BaseRing | None = None,
                         max_size: int | None = None) -> bool:
    """True iff ``S`` together with all scalars generates the whole incidence ring."""
    lat, _, _, total = _closure_lattice(S, poset, ring, max_size)
    return lat.order == total


def find_inverse(a: IncMatrix, max_size: int | None = None) -> IncMatrix | None:
    """Two-sided inverse by exhaustive search, or None."""
    _guard(a.poset, a.ring, max_size)
    one = IncMatrix.identity(a.poset, a.ring)
    for b in all_elements(a.poset, a.ring):
        if a * b == one and b * a == one:
            return b
    return None
