"""Galois fields GF(p^e) and the small amount of linear algebra we need over them.

A field element is an ``int`` in ``range(q)`` whose base-p digits are the
polynomial coefficients, lowest degree first.  So in GF(4) with modulus
x^2 + x + 1 the element ``2`` is x and ``3`` is x + 1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import RingSpecError

MAX_PRIME = 97
MAX_DEGREE = 4
_TABLE_LIMIT = 64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p^e, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# polynomials over GF(p): lists of coefficients, lowest degree first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    _trim(a)
    while len(a) - 1 >= db:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _trim(a)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _polymod(poly, list(tail) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Least monic irreducible of degree e over GF(p).

    Candidates x^e + c_{e-1}x^{e-1} + ... + c_0 are ordered by the integer
    sum c_i p^i, so the choice is deterministic.
    """
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        tail = [(code // p ** i) % p for i in range(e)]
        poly = tail + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The finite field GF(p^e)."""

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p) or p > MAX_PRIME:
            raise RingSpecError(f"characteristic must be a prime <= {MAX_PRIME}, got {p}")
        if not 1 <= e <= MAX_DEGREE:
            raise RingSpecError(f"extension degree must be in 1..{MAX_DEGREE}, got {e}")
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1 or not is_irreducible(modulus, p):
            raise RingSpecError(f"{modulus} is not a monic irreducible of degree {e} over GF({p})")
        self.p, self.e, self.q = p, e, p ** e
        self.modulus = modulus
        self._mul_table = None
        self._inv_table = None
        if e > 1 and self.q <= _TABLE_LIMIT:
            q = self.q
            self._mul_table = [[self._polymul(a, b) for b in range(q)] for a in range(q)]
            self._inv_table = [0] * q
            for a in range(1, q):
                self._inv_table[a] = next(b for b in range(1, q) if self._mul_table[a][b] == 1)

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.e)]

    def from_digits(self, ds) -> int:
        ds = list(ds)
        if len(ds) > self.e:
            raise RingSpecError(f"too many coefficients for GF({self.q}): {ds}")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(ds))

    def elements(self):
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, w = 0, 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self.from_digits([-d for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _polymul(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_polymod(prod, self.modulus, p) or [0])

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._polymul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result


# Linear algebra on row vectors (lists of field ints).


def row_echelon(F: GF, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    R = [list(r) for r in rows]
    if not R:
        return [], []
    ncols = len(R[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][col]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][col])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][col]:
                f = R[i][col]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(F: GF, rows) -> int:
    return len(row_echelon(F, rows)[1])


def solve(F: GF, A, b) -> list[int] | None:
    """One solution x of A x = b, or None if inconsistent."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = row_echelon(F, aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, col in zip(R, pivots):
        x[col] = row[-1]
    return x


def matmul(F: GF, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                a = A[i][t]
                if a:
                    b = B[t][j]
                    if b:
                        s = F.add(s, F.mul(a, b))
            row.append(s)
        out.append(row)
    return out
