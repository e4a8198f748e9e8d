"""Linear maps on ``M_k(F)`` written in the matrix-unit basis.

A map is a ``k^2 x k^2`` matrix ``phi`` (nested lists of field ints) acting
on row-major flattened matrices: ``vec(phi(X)) = phi @ vec(X)``, so column
``a*k + b`` holds the coordinates of ``phi(E_ab)``.
"""

from __future__ import annotations

from .fields import GF, matmul, rank, solve


def _flat(X):
    return [x for row in X for x in row]


def _unflat(xs, k):
    return [list(xs[i * k:(i + 1) * k]) for i in range(k)]


def apply_map(F: GF, phi, X):
    k = len(X)
    v = _flat(X)
    out = [0] * (k * k)
    for r in range(k * k):
        s = 0
        for c, x in enumerate(v):
            if x and phi[r][c]:
                s = F.add(s, F.mul(phi[r][c], x))
        out[r] = s
    return _unflat(out, k)


def unit(k: int, a: int, b: int, scalar: int = 1):
    return [[scalar if (i, j) == (a, b) else 0 for j in range(k)] for i in range(k)]


def sandwich_decompose(F: GF, phi) -> list[tuple[list, list]]:
    """Write phi as ``X -> sum P_i X Q_i``.

    Each nonzero coordinate c of phi, sending E_ab to c E_gd, contributes
    ``(c E_ga, E_bd)`` because ``E_ga X E_bd = X_ab E_gd``.
    """
    kk = len(phi)
    k = round(kk ** 0.5)
    if k * k != kk:
        raise ValueError("phi must be k^2 x k^2")
    pairs = []
    for a in range(k):
        for b in range(k):
            for g in range(k):
                for d in range(k):
                    c = phi[g * k + d][a * k + b]
                    if c:
                        pairs.append((unit(k, g, a, c), unit(k, b, d)))
    return pairs


def sandwich_apply(F: GF, pairs, X):
    k = len(X)
    total = [[0] * k for _ in range(k)]
    for P, Q in pairs:
        term = matmul(F, matmul(F, P, X), Q)
        total = [[F.add(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(total, term)]
    return total


def separating_operators(F: GF, v, w):
    """Maps phi_1..phi_m with ``sum phi_i(v_i) = 0`` and ``sum phi_i(w_i) != 0``.

    ``v`` and ``w`` are length-m lists of k x k matrices.  Returns ``None``
    exactly when some scalar lam has ``w_i = lam v_i`` for every i.

    The operators come from a map Phi on the m-fold direct sum with
    ``Phi(v) = 0`` and ``Phi(w) = u != 0``: take a functional f with
    ``f(v) = 0, f(w) = 1`` and ``Phi(x) = f(x) e_0``.  Then
    ``phi_i = pi_s o Phi o iota_i`` for a block s where u is nonzero.
    """
    m = len(v)
    if m < 1 or len(w) != m:
        raise ValueError("v and w must be non-empty and of equal length")
    k = len(v[0])
    kk = k * k
    fv = [x for X in v for x in _flat(X)]
    fw = [x for X in w for x in _flat(X)]
    D = len(fv)
    if any(fv):
        if rank(F, [fv, fw]) < 2:
            return None
        f = solve(F, [fv, fw], [0, 1])
    else:
        if not any(fw):
            return None
        f = solve(F, [fw], [1])
    # Phi = e_0 f^T, so u = Phi(w) = e_0 is nonzero in block 0
    Phi = [[f[c] if r == 0 else 0 for c in range(D)] for r in range(D)]
    u = [_row_dot(F, Phi[r], fw) for r in range(D)]
    s = next(b for b in range(m) if any(u[b * kk:(b + 1) * kk]))
    return [
        [[Phi[s * kk + r][i * kk + c] for c in range(kk)] for r in range(kk)]
        for i in range(m)
    ]


def _row_dot(F: GF, row, vec):
    s = 0
    for x, y in zip(row, vec):
        if x and y:
            s = F.add(s, F.mul(x, y))
    return s


def sum_of_images(F: GF, ops, xs):
    """``sum_i ops[i](xs[i])`` as a k x k matrix."""
    k = len(xs[0])
    total = [[0] * k for _ in range(k)]
    for phi, X in zip(ops, xs):
        Y = apply_map(F, phi, X)
        total = [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(total, Y)]
    return total
