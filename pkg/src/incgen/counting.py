"""Exact number and probability of generating tuples.

For ``R / J(R) = M_{n_1}(GF(q_1)) x ... x M_{n_d}(GF(q_d))`` the number of
generating m-tuples of ``A = A_n(poset, R)`` is

    |J|^(m rho) * prod_i  Q_i^(n) * (Q_i - q_i)^c * Q_i^(rho - n - c),
    Q_i = q_i^(n_i^2 m),

where ``Q^(n)`` is the falling factorial.  All arithmetic is in Python ints
and :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidShape, TooLarge
from .incidence import IncMatrix, all_elements, generates_bruteforce, ring_size
from .poset import Poset
from .rings import BaseRing, LocalZ

DEFAULT_MAX_TUPLES = 2 ** 18


def falling_factorial(Q: int, n: int) -> int:
    """``Q (Q-1) ... (Q-n+1)``; zero once a factor reaches zero."""
    out = 1
    for t in range(n):
        if Q - t <= 0:
            return 0
        out *= Q - t
    return out


def count_gen_simple(n: int, rho: int, c: int, k: int, q: int, m: int) -> int:
    """Generating m-tuples over ``M_k(GF(q))`` for a poset with the given n, rho, c."""
    if min(n, rho, k, q, m) < 1 or c < 0:
        raise InvalidShape("n, rho, k, q, m must be positive and c non-negative")
    if rho < n + c:
        raise InvalidShape(f"rho={rho} < n + c = {n + c}")
    Q = q ** (k * k * m)
    # Python already has 0 ** 0 == 1, which is the convention needed when Q == q and c == 0
    return falling_factorial(Q, n) * (Q - q) ** c * Q ** (rho - n - c)


def formula_count(poset: Poset, ring: BaseRing, m: int) -> int:
    n, rho, c = poset.n, poset.rho, poset.c
    out = ring.jsize ** (m * rho)
    for k, q in ring.components:
        out *= count_gen_simple(n, rho, c, k, q, m)
    return out


@dataclass(frozen=True)
class CountReport:
    m: int
    rho: int
    c: int
    count: int
    total: int
    probability: Fraction
    mgen: int

    def to_json(self, precision: int | None = None) -> dict:
        out = {
            "m": self.m,
            "rho": self.rho,
            "c": self.c,
            "count": str(self.count),
            "total": str(self.total),
            "probability": {"num": str(self.probability.numerator), "den": str(self.probability.denominator)},
            "mgen": self.mgen,
        }
        if precision is not None:
            out["probability_decimal"] = decimal_string(self.probability, precision)
        return out


def decimal_string(x: Fraction, digits: int) -> str:
    """Fixed-point rendering of a non-negative fraction, rounded half up."""
    scaled = (x.numerator * 10 ** digits * 2 + x.denominator) // (2 * x.denominator)
    s = str(scaled).rjust(digits + 1, "0")
    return s if digits == 0 else f"{s[:-digits]}.{s[-digits:]}"


def count_gen(poset: Poset, ring: BaseRing, m: int) -> CountReport:
    from .generation import mgen

    if m < 1:
        raise InvalidShape("m must be >= 1")
    count = formula_count(poset, ring, m)
    total = ring.size ** (m * poset.rho)
    return CountReport(
        m=m,
        rho=poset.rho,
        c=poset.c,
        count=count,
        total=total,
        probability=Fraction(count, total),
        mgen=mgen(poset, ring),
    )


def probability_closed_form(poset: Poset, ring: BaseRing, m: int) -> Fraction:
    """The probability as a product of ``(1 - 1/q^(k^2 m - 1))`` and ``(1 - l/q^(k^2 m))`` factors."""
    if m < 1:
        raise InvalidShape("m must be >= 1")
    P = Fraction(1)
    for k, q in ring.components:
        Q = q ** (k * k * m)
        P *= (1 - Fraction(q, Q)) ** poset.c
        for ell in range(1, poset.n):
            P *= 1 - Fraction(ell, Q)
    return P


# ---------------------------------------------------------------------------
# enumeration oracle


def _count_range(args) -> int:
    leq, ring_spec, m, start, stop = args
    from .rings import parse_ring

    poset = Poset(leq)
    ring = parse_ring(ring_spec)
    return _count_slice(poset, ring, m, start, stop)


def _count_slice(poset: Poset, ring: BaseRing, m: int, start: int, stop: int) -> int:
    elems = list(all_elements(poset, ring))
    size = len(elems)
    hits = 0
    for t in range(start, stop):
        tup = []
        for _ in range(m):
            t, r = divmod(t, size)
            tup.append(elems[r])
        if generates_bruteforce(tup):
            hits += 1
    return hits


def count_by_enumeration(poset: Poset, ring: BaseRing, m: int, max_tuples: int | None = None,
                         workers: int = 1) -> int:
    """Count generating m-tuples by running the closure on every tuple in ``A^m``."""
    limit = DEFAULT_MAX_TUPLES if max_tuples is None else max_tuples
    ntuples = ring_size(poset, ring) ** m
    if ntuples > limit:
        raise TooLarge(f"{ntuples} tuples exceed the enumeration guard {limit}")
    if workers <= 1:
        return _count_slice(poset, ring, m, 0, ntuples)
    bounds = [ntuples * w // workers for w in range(workers + 1)]
    jobs = [(poset.leq, ring.spec, m, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_range, jobs))


# ---------------------------------------------------------------------------
# Jacobson radical of A


@dataclass
class RadicalData:
    size: int
    basis: list[IncMatrix]

    def to_json(self) -> dict:
        return {
            "size": str(self.size),
            "basis": [
                [[b.ring.serialize(x) for x in row] for row in b.to_dense()] for b in self.basis
            ],
        }


def radical_data(poset: Poset, ring: BaseRing) -> RadicalData:
    """``J(A)``: radical entries on the diagonal, anything strictly above it."""
    n, rho = poset.n, poset.rho
    size = ring.jsize ** n * ring.size ** (rho - n)
    jgens = ring.radical_generators() if isinstance(ring, LocalZ) else []
    basis = [IncMatrix.unit(poset, ring, i, i, j) for i in range(n) for j in jgens]
    basis += [
        IncMatrix.unit(poset, ring, i, j, r)
        for (i, j), r in itertools.product(poset.strict_pairs, ring.additive_generators())
    ]
    return RadicalData(size=size, basis=basis)
