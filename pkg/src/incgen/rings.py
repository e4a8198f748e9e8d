"""The supported catalog of finite base rings.

Three kinds are available:

* :class:`MatrixRing` -- ``M_k(GF(q))``; ``k = 1`` is the field itself.
* :class:`ProductRing` -- a finite direct product of matrix rings.
* :class:`LocalZ` -- the local ring ``Z/p^e`` with radical ``pZ/p^e``.

Each ring knows its Wedderburn data (``components`` as ``(n_i, q_i)`` pairs
and ``jsize = |J(R)|``), which is all the counting formulas need.

Element representation is plain Python values so that elements hash and
compare cheaply: field scalars and ``Z/p^e`` residues are ``int``; k x k
matrices (k >= 2) are tuples of row tuples; product elements are tuples of
component elements.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from typing import Any

from .errors import (
    IndexOutOfRange,
    NoRadicalReduction,
    NotAProduct,
    RingMismatch,
    RingSpecError,
)
from .fields import GF, is_prime, prime_power

MAX_MATRIX_SIZE = 3

RingElem = Any


class BaseRing:
    """Common interface; concrete rings override the arithmetic."""

    kind: str

    # Wedderburn data
    components: tuple[tuple[int, int], ...]
    jsize: int

    @property
    def d(self) -> int:
        return len(self.components)

    @cached_property
    def size(self) -> int:
        out = self.jsize
        for n_i, q_i in self.components:
            out *= q_i ** (n_i * n_i)
        return out

    @property
    def residue_ring(self) -> "BaseRing":
        """R / J(R); the ring itself when it is semisimple."""
        return self

    def __eq__(self, other):
        return isinstance(other, BaseRing) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<{type(self).__name__} {self.spec}>"

    # additive structure (used by the brute-force closure)

    @cached_property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self._moduli())

    def check(self, a) -> None:
        if not self.contains(a):
            raise RingMismatch(f"{a!r} is not an element of {self.spec}")

    def sub(self, a, b):
        return self.add(a, self.neg(b))


class MatrixRing(BaseRing):
    """``M_k(F)`` for a Galois field F."""

    kind = "simple"

    def __init__(self, k: int, field: GF):
        if not 1 <= k <= MAX_MATRIX_SIZE:
            raise RingSpecError(f"matrix size must be in 1..{MAX_MATRIX_SIZE}, got {k}")
        self.k = k
        self.field = field
        self.components = ((k, field.q),)
        self.jsize = 1
        self.zero = 0 if k == 1 else tuple((0,) * k for _ in range(k))
        self.one = 1 if k == 1 else tuple(tuple(int(i == j) for j in range(k)) for i in range(k))

    @property
    def spec(self) -> str:
        return f"GF({self.field.q})" if self.k == 1 else f"M({self.k},GF({self.field.q}))"

    def contains(self, a) -> bool:
        q = self.field.q
        if self.k == 1:
            return isinstance(a, int) and 0 <= a < q
        return (
            isinstance(a, tuple)
            and len(a) == self.k
            and all(isinstance(r, tuple) and len(r) == self.k and all(isinstance(x, int) and 0 <= x < q for x in r) for r in a)
        )

    def add(self, a, b):
        F = self.field
        if self.k == 1:
            return F.add(a, b)
        return tuple(tuple(F.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def neg(self, a):
        F = self.field
        if self.k == 1:
            return F.neg(a)
        return tuple(tuple(F.neg(x) for x in r) for r in a)

    def mul(self, a, b):
        F = self.field
        if self.k == 1:
            return F.mul(a, b)
        k = self.k
        return tuple(
            tuple(_dot(F, [a[i][t] for t in range(k)], [b[t][j] for t in range(k)]) for j in range(k))
            for i in range(k)
        )

    def is_zero(self, a) -> bool:
        return a == self.zero

    def entries(self, a) -> list[int]:
        """Row-major list of the k^2 field scalars of an element."""
        if self.k == 1:
            return [a]
        return [x for r in a for x in r]

    def from_entries(self, xs):
        xs = list(xs)
        if self.k == 1:
            return xs[0]
        k = self.k
        return tuple(tuple(xs[i * k:(i + 1) * k]) for i in range(k))

    def elements(self):
        if self.k == 1:
            yield from range(self.field.q)
            return
        for xs in itertools.product(range(self.field.q), repeat=self.k * self.k):
            yield self.from_entries(xs)

    def unit(self, a: int, b: int, scalar: int = 1):
        """The matrix unit E_ab (0-based) scaled by a field scalar."""
        return self.from_entries(scalar if i == a * self.k + b else 0 for i in range(self.k * self.k))

    def additive_generators(self) -> list:
        basis = [self.field.p ** i for i in range(self.field.e)]
        return [self.unit(a, b, s) for a in range(self.k) for b in range(self.k) for s in basis]

    def _moduli(self):
        return [self.field.p] * (self.k * self.k * self.field.e)

    def coords(self, a) -> list[int]:
        F = self.field
        return [d for x in self.entries(a) for d in F.digits(x)]

    def from_coords(self, cs):
        e = self.field.e
        cs = list(cs)
        return self.from_entries(self.field.from_digits(cs[i:i + e]) for i in range(0, len(cs), e))

    def serialize(self, a):
        F = self.field

        def scalar(x):
            return x if F.e == 1 else F.digits(x)

        if self.k == 1:
            return scalar(a)
        return [[scalar(x) for x in r] for r in a]

    def deserialize(self, data):
        F = self.field

        def scalar(x):
            if isinstance(x, list):
                return F.from_digits(x)
            if isinstance(x, int) and not isinstance(x, bool):
                if F.e == 1:
                    return x % F.p
                if 0 <= x < F.q:
                    return x
            raise RingMismatch(f"bad field scalar {x!r} for GF({F.q})")

        if self.k == 1:
            return scalar(data)
        if not (isinstance(data, list) and len(data) == self.k and all(isinstance(r, list) and len(r) == self.k for r in data)):
            raise RingMismatch(f"expected a {self.k}x{self.k} matrix, got {data!r}")
        return tuple(tuple(scalar(x) for x in r) for r in data)


def _dot(F: GF, xs, ys) -> int:
    s = 0
    for x, y in zip(xs, ys):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


class ProductRing(BaseRing):
    """Direct product of matrix rings; elements are tuples of component elements."""

    kind = "product"

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2 or not all(isinstance(f, MatrixRing) for f in factors):
            raise RingSpecError("a product needs at least two matrix-ring factors")
        self.factors = factors
        self.components = tuple(c for f in factors for c in f.components)
        self.jsize = 1
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)

    @property
    def spec(self) -> str:
        return "x".join(f.spec for f in self.factors)

    def contains(self, a) -> bool:
        return isinstance(a, tuple) and len(a) == len(self.factors) and all(f.contains(x) for f, x in zip(self.factors, a))

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def elements(self):
        for xs in itertools.product(*(list(f.elements()) for f in self.factors)):
            yield tuple(xs)

    def embed(self, i: int, x):
        """Place a factor element in slot i (0-based), zeros elsewhere."""
        return tuple(x if t == i else f.zero for t, f in enumerate(self.factors))

    def additive_generators(self) -> list:
        return [self.embed(i, g) for i, f in enumerate(self.factors) for g in f.additive_generators()]

    def _moduli(self):
        return [m for f in self.factors for m in f.moduli]

    def coords(self, a) -> list[int]:
        return [c for f, x in zip(self.factors, a) for c in f.coords(x)]

    def from_coords(self, cs):
        cs = list(cs)
        out, pos = [], 0
        for f in self.factors:
            w = len(f.moduli)
            out.append(f.from_coords(cs[pos:pos + w]))
            pos += w
        return tuple(out)

    def serialize(self, a):
        return [f.serialize(x) for f, x in zip(self.factors, a)]

    def deserialize(self, data):
        if not (isinstance(data, list) and len(data) == len(self.factors)):
            raise RingMismatch(f"expected {len(self.factors)} components, got {data!r}")
        return tuple(f.deserialize(x) for f, x in zip(self.factors, data))


class LocalZ(BaseRing):
    """``Z/p^e``; its radical is ``pZ/p^e`` and its residue field is GF(p)."""

    kind = "localz"

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise RingSpecError(f"{p} is not prime")
        if e < 1:
            raise RingSpecError("exponent must be >= 1")
        self.p, self.e = p, e
        self.modulus = p ** e
        self.components = ((1, p),)
        self.jsize = p ** (e - 1)
        self.zero, self.one = 0, 1

    @property
    def spec(self) -> str:
        return f"Z/{self.modulus}"

    @cached_property
    def residue_ring(self) -> MatrixRing:
        return MatrixRing(1, GF(self.p))

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self):
        return iter(range(self.modulus))

    def additive_generators(self) -> list:
        return [1]

    def radical_generators(self) -> list:
        return [self.p] if self.e > 1 else []

    def _moduli(self):
        return [self.modulus]

    def coords(self, a) -> list[int]:
        return [a]

    def from_coords(self, cs):
        return list(cs)[0] % self.modulus

    def serialize(self, a):
        return a

    def deserialize(self, data):
        if isinstance(data, bool) or not isinstance(data, int):
            raise RingMismatch(f"expected an integer residue, got {data!r}")
        return data % self.modulus


# ---------------------------------------------------------------------------
# ring spec grammar

_SIMPLE = re.compile(r"^(?:GF\((\d+)\)|M\((\d+),GF\((\d+)\)\))$")


def _field(q: int) -> GF:
    pe = prime_power(q)
    if pe is None:
        raise RingSpecError(f"{q} is not a prime power")
    return GF(*pe)


def _parse_simple(token: str) -> MatrixRing:
    m = _SIMPLE.match(token)
    if not m:
        raise RingSpecError(f"cannot parse ring factor {token!r}")
    if m.group(1) is not None:
        return MatrixRing(1, _field(int(m.group(1))))
    return MatrixRing(int(m.group(2)), _field(int(m.group(3))))


def parse_ring(spec: str) -> BaseRing:
    """Parse ``GF(q)``, ``M(k,GF(q))``, products joined by ``x``, or ``Z/n``."""
    s = "".join(spec.split())
    if s.startswith("Z/"):
        try:
            n = int(s[2:])
        except ValueError:
            raise RingSpecError(f"cannot parse {spec!r}") from None
        pe = prime_power(n)
        if pe is None:
            raise RingSpecError(f"Z/{n}: modulus must be a prime power")
        return LocalZ(*pe)
    factors = [_parse_simple(tok) for tok in s.split("x")]
    if len(factors) == 1:
        return factors[0]
    return ProductRing(factors)


# ---------------------------------------------------------------------------
# operations on single elements


def ring_ops(ring: BaseRing, a, b, op: str):
    ring.check(a)
    ring.check(b)
    if op == "add":
        return ring.add(a, b)
    if op == "sub":
        return ring.sub(a, b)
    if op == "mul":
        return ring.mul(a, b)
    raise ValueError(f"unknown op {op!r}")


def project_component(ring: BaseRing, a, i: int):
    """The i-th factor (1-based) of a product element, i.e. ``e_i a``."""
    if not isinstance(ring, ProductRing):
        raise NotAProduct(f"{ring.spec} is not a product ring")
    if not 1 <= i <= len(ring.factors):
        raise IndexOutOfRange(i, len(ring.factors))
    ring.check(a)
    return a[i - 1]


def reduce_mod_radical(ring: BaseRing, a):
    """Image of ``a`` in ``R / J(R)``; identity on semisimple rings."""
    if not ring.contains(a):
        raise NoRadicalReduction(f"{a!r} is not an element of {ring.spec}")
    if isinstance(ring, LocalZ):
        return a % ring.p
    return a
