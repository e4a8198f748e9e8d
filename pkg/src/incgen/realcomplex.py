"""Incidence algebras over R and C: the polynomial non-generation test and
Monte Carlo sampling on the unit sphere.

A tuple fails to generate exactly when, for some pair i != j, every matrix
has equal (i, i) and (j, j) entries, or, for some covering pair, the 2 x m
matrix with rows ``v = (A_a[i,i] - A_a[j,j])_a`` and ``w = (A_a[i,j])_a`` has
rank <= 1.  Floating point cannot see measure-zero sets, so both conditions
are tested against a tolerance and the distance to failure is reported as a
margin: the largest diagonal gap for the first kind, the smallest singular
value for the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .poset import Poset

FIELDS = ("real", "complex")
DEFAULT_TOL = 1e-9
_CHUNK = 4096


@dataclass
class RealTuple:
    """An m-tuple of incidence matrices over R or C, flattened to unit norm.

    ``coords`` lists, for each matrix in turn, the entries at ``poset.pairs``;
    complex entries are stored as interleaved (re, im) pairs.
    """

    poset: Poset
    field: str
    m: int
    coords: np.ndarray

    @classmethod
    def from_matrices(cls, poset: Poset, field: str, mats, normalize: bool = True) -> "RealTuple":
        dtype = complex if field == "complex" else float
        vals = np.array([[np.asarray(A, dtype=dtype)[i, j] for i, j in poset.pairs] for A in mats])
        flat = _to_real(vals.reshape(-1), field)
        if normalize:
            flat = flat / np.linalg.norm(flat)
        return cls(poset, field, len(mats), flat)

    def values(self) -> np.ndarray:
        """Entries as an (m, rho) real or complex array."""
        return _values(self.coords[None, :], self.field, self.m, self.poset.rho)[0]

    def scaled(self, lam) -> "RealTuple":
        """Multiply every matrix by ``lam`` (not renormalized)."""
        vals = self.values() * lam
        field = "complex" if np.iscomplexobj(vals) else self.field
        return RealTuple(self.poset, field, self.m, _to_real(vals.reshape(-1), field))


def _to_real(flat, field):
    if field == "complex":
        flat = np.asarray(flat, dtype=complex)
        return np.stack([flat.real, flat.imag], axis=-1).reshape(-1)
    return np.asarray(flat, dtype=float)


def _values(X, field, m, rho):
    if field == "complex":
        X = X[..., 0::2] + 1j * X[..., 1::2]
    return X.reshape(X.shape[0], m, rho)


@dataclass
class FieldCheck:
    verdict: bool
    margin: float
    failure: tuple[str, tuple[int, int]] | None = None  # ("Phi"|"Psi", 1-based pair)

    def __bool__(self):
        return self.verdict


def _margins(poset: Poset, V: np.ndarray):
    """Per-test margins for a batch ``V`` of shape (batch, m, rho).

    Returns (labels, M) where M has one column per test.
    """
    idx = poset.pair_index
    n = poset.n
    diag = np.stack([V[:, :, idx[t, t]] for t in range(n)], axis=-1)  # (batch, m, n)
    labels, cols = [], []
    for i in range(n):
        for j in range(i + 1, n):
            labels.append(("Phi", (i + 1, j + 1)))
            cols.append(np.abs(diag[:, :, i] - diag[:, :, j]).max(axis=1))
    for i, j in poset.covers:
        v = diag[:, :, i] - diag[:, :, j]
        w = V[:, :, idx[i, j]]
        M = np.stack([v, w], axis=1)  # (batch, 2, m)
        s = np.linalg.svd(M, compute_uv=False)
        smin = s[:, 1] if s.shape[1] > 1 else np.zeros(len(V))
        labels.append(("Psi", (i + 1, j + 1)))
        cols.append(smin)
    if not cols:
        return labels, np.full((len(V), 0), np.inf)
    return labels, np.stack(cols, axis=1)


def check_criterion_field(t: RealTuple, tol: float = DEFAULT_TOL) -> FieldCheck:
    """Decide generation up to ``tol``; the margin is the smallest test statistic."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    V = _values(t.coords[None, :], t.field, t.m, t.poset.rho)
    labels, M = _margins(t.poset, V)
    if M.shape[1] == 0:
        return FieldCheck(True, float("inf"))
    row = M[0]
    margin = float(row.min())
    bad = np.flatnonzero(row <= tol)
    if bad.size:
        return FieldCheck(False, margin, labels[bad[0]])
    return FieldCheck(True, margin)


def sample_sphere(poset: Poset, field: str, m: int, seed: int) -> RealTuple:
    """Uniform point on the unit sphere of ``A^m`` (normalized Gaussian, PCG64)."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}")
    if m < 1:
        raise ValueError("m must be >= 1")
    dim = m * poset.rho * (2 if field == "complex" else 1)
    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.standard_normal(dim)
    return RealTuple(poset, field, m, x / np.linalg.norm(x))


@dataclass
class McReport:
    field: str
    m: int
    trials: int
    passes: int
    fraction: Fraction
    min_margin: float
    seed: int
    tol: float
    failures: dict

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "m": self.m,
            "trials": self.trials,
            "passes": self.passes,
            "fraction": {"num": str(self.fraction.numerator), "den": str(self.fraction.denominator)},
            "min_margin": self.min_margin,
            "seed": self.seed,
            "tol": self.tol,
            "failures": dict(sorted(self.failures.items())),
            "generator": "numpy.PCG64",
        }


def monte_carlo(poset: Poset, field: str, m: int, trials: int, seed: int, tol: float = DEFAULT_TOL,
                margins_out: list | None = None) -> McReport:
    """Sample ``trials`` tuples uniformly from the sphere and count the generating ones.

    Trials are drawn in fixed-size chunks, each from its own child of
    ``SeedSequence(seed)``, so results depend only on (seed, trials).
    If ``margins_out`` is a list, every trial's margin is appended to it.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}")
    rho = poset.rho
    dim = m * rho * (2 if field == "complex" else 1)
    nchunks = -(-trials // _CHUNK)
    children = np.random.SeedSequence(seed).spawn(nchunks)
    passes = 0
    min_margin = float("inf")
    failures: dict[str, int] = {}
    for c, ss in enumerate(children):
        size = min(_CHUNK, trials - c * _CHUNK)
        rng = np.random.Generator(np.random.PCG64(ss))
        X = rng.standard_normal((size, dim))
        X /= np.linalg.norm(X, axis=1, keepdims=True)
        labels, M = _margins(poset, _values(X, field, m, rho))
        if M.shape[1] == 0:
            passes += size
            if margins_out is not None:
                margins_out.extend([float("inf")] * size)
            continue
        per_trial = M.min(axis=1)
        ok = per_trial > tol
        passes += int(ok.sum())
        min_margin = min(min_margin, float(per_trial.min()))
        if margins_out is not None:
            margins_out.extend(per_trial.tolist())
        for r in np.flatnonzero(~ok):
            kind, (i, j) = labels[int(np.flatnonzero(M[r] <= tol)[0])]
            key = f"{kind}_{i}_{j}"
            failures[key] = failures.get(key, 0) + 1
    return McReport(field, m, trials, passes, Fraction(passes, trials), min_margin, seed, tol, failures)


def generates_exact(poset: Poset, mats) -> bool:
    """Exact test over Q: does the tuple, with the identity, span-generate A?

    ``mats`` are n x n arrays of rationals (anything ``Fraction`` accepts).
    The algebra generated is the Q-span of all words; words are grown by
    right multiplication until the span stops growing.
    """
    n = poset.n
    pairs = poset.pairs
    gens = [[[Fraction(A[i][j]) for j in range(n)] for i in range(n)] for A in mats]
    for A in gens:
        for i in range(n):
            for j in range(n):
                if A[i][j] and not poset.leq[i][j]:
                    raise ValueError(f"entry ({i}, {j}) lies outside the order relation")

    def mul(A, B):
        return [[sum((A[i][k] * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]

    basis: list[tuple[list[Fraction], int]] = []  # echelon rows with pivot column

    def insert(A) -> bool:
        vec = [A[i][j] for i, j in pairs]
        for row, piv in basis:
            if vec[piv]:
                f = vec[piv] / row[piv]
                vec = [x - f * y for x, y in zip(vec, row)]
        piv = next((c for c, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        basis.append((vec, piv))
        return True

    one = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    insert(one)
    queue = [one]
    while queue and len(basis) < len(pairs):
        B = queue.pop()
        for g in gens:
            P = mul(B, g)
            if insert(P):
                queue.append(P)
    return len(basis) == len(pairs)
