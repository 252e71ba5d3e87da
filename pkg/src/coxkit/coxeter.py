"""Coxeter and characteristic polynomials of weighted diagrams.

Coxeter polynomial det(qS + q^-1 S^t), graph characteristic polynomial
det((z-2)E + C), cofactor tables, the one-row Schur-complement step, the
join formula, path-sum and walk identities, and the tripartite divide
block-matrix factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (Laurent, Poly, RatFunc, adjugate_poly, det_exact,
                      det_poly, mat_mul, z_substitute)
from .diagram import Diagram
from .errors import (DimensionMismatch, PreconditionABneq2C, UnknownVertex,
                     ZeroDenominator)

# ---------------------------------------------------------------------------
# Coxeter polynomial via the w = q^2 lift
# ---------------------------------------------------------------------------
# Every entry of qS + q^-1 S^t equals q^-1 times the matching entry of
# wS + S^t at w = q^2, so any k x k minor of the Coxeter matrix is q^-k
# times a plain polynomial determinant.  That keeps the whole q-world on
# dense integer polynomials.


def _w_matrix(d: Diagram) -> list[list[Poly]]:
    n = d.n
    rows = []
    for p in range(n):
        row = []
        for t in range(n):
            if p == t:
                row.append(Poly((1, 1)))
            else:
                a = d.weight(d.order[p], d.order[t])
                if p < t:
                    row.append(Poly((0, -a)))
                else:
                    row.append(Poly((-a,)))
        rows.append(row)
    return rows


def _laurent_from_wdet(p: Poly, size: int) -> Laurent:
    return Laurent({2 * k - size: c for k, c in enumerate(p.coeffs) if c})


def coxeter_poly(d: Diagram) -> Laurent:
    """det(qS + q^-1 S^t) in the diagram's vertex order."""
    return _laurent_from_wdet(det_poly(_w_matrix(d)), d.n)


def coxeter_matrix(d: Diagram) -> list[list[Laurent]]:
    """The matrix qS + q^-1 S^t itself, order respected."""
    n = d.n
    out = []
    for p in range(n):
        row = []
        for t in range(n):
            if p == t:
                row.append(Laurent.z())
            else:
                a = d.weight(d.order[p], d.order[t])
                row.append(Laurent.term(-a, 1 if p < t else -1))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# characteristic polynomial and cofactors
# ---------------------------------------------------------------------------

def _z_matrix(d: Diagram) -> list[list[Poly]]:
    """(z-2)E + C = zE - A with A the weighted adjacency matrix."""
    n = d.n
    adj = d.adjacency()
    return [[Poly((0, 1)) if i == j else Poly((-adj[i][j],))
             for j in range(n)] for i in range(n)]


def char_poly(d: Diagram) -> Poly:
    """det((z-2)E + C); independent of the vertex order."""
    return det_poly(_z_matrix(d))


@dataclass(frozen=True)
class CofactorTable:
    """Symmetric table of algebraic complements of (z-2)E + C."""

    entries: tuple[tuple[Poly, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    @property
    def n(self) -> int:
        return len(self.entries)


def cofactors(d: Diagram) -> CofactorTable:
    """All cofactors at once via the Faddeev-LeVerrier adjugate recursion.

    Works over plain integer matrices: with A the weighted adjacency,
    adj(zE - A) = sum_k M_k z^(n-1-k) where M_0 = E and
    M_k = A M_{k-1} + c_k E, c_k = -tr(A M_{k-1}) / k (always exact).
    """
    n = d.n
    if n == 0:
        return CofactorTable(())
    adj = d.adjacency()
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    layers = [mk]
    for k in range(1, n):
        am = [[sum(adj[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        c = -(tr // k)
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)]
              for i in range(n)]
        layers.append(mk)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            coeffs = [layers[n - 1 - deg][i][j] for deg in range(n)]
            row.append(Poly(coeffs))
        rows.append(tuple(row))
    return CofactorTable(tuple(rows))


def cofactor_entry(d: Diagram, i: int, j: int) -> Poly:
    """Single cofactor by a direct signed minor determinant."""
    n = d.n
    m = _z_matrix(d)
    minor = [[m[r][c] for c in range(n) if c != j]
             for r in range(n) if r != i]
    det = det_poly(minor)
    return det if (i + j) % 2 == 0 else -det


# ---------------------------------------------------------------------------
# one-row Schur step
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SchurStep:
    """Decomposition produced by pivoting the Coxeter matrix on one vertex.

    Relative to the pivot-first ordering: total = z*base minus the weighted
    branch terms minus the weighted cross cofactors.
    """

    pivot: int
    total: Laurent
    base: Laurent
    branches: tuple[tuple[int, int, Laurent], ...]
    crosses: tuple[tuple[tuple[int, int], int, Laurent], ...]

    def reassemble(self) -> Laurent:
        acc = Laurent.z() * self.base
        for _, wsq, g in self.branches:
            acc = acc - wsq * g
        for _, coeff, p in self.crosses:
            acc = acc - coeff * p
        return acc

    @property
    def residual(self) -> Laurent:
        return self.reassemble() - self.total


def pivot_first(d: Diagram, pivot: int) -> Diagram:
    if not (0 <= pivot < d.n):
        raise UnknownVertex(f"no vertex {pivot}")
    return d.with_order((pivot,) + tuple(v for v in d.order if v != pivot))


def schur_step(d: Diagram, pivot: int) -> SchurStep:
    """Pivot on one vertex: head z, squared-weight branch terms, and signed
    cross cofactors of the pivot-deleted matrix."""
    dp = pivot_first(d, pivot)
    total = coxeter_poly(dp)
    rest = d.delete([pivot])
    keep = [v for v in range(d.n) if v != pivot]
    new_index = {v: k for k, v in enumerate(keep)}
    base = coxeter_poly(rest)
    nbrs = [v for v in d.neighbors(pivot) if d.weight(pivot, v)]
    branches = []
    for v in nbrs:
        a = d.weight(pivot, v)
        branches.append((v, a * a, coxeter_poly(d.delete([pivot, v]))))
    crosses = []
    if len(nbrs) > 1:
        w1 = _w_matrix(rest)
        m = rest.n
        pos = {v: rest.order.index(new_index[v]) for v in nbrs}
        for i in nbrs:
            for j in nbrs:
                if i == j:
                    continue
                pi, pj = pos[i], pos[j]
                minor = [[w1[r][c] for c in range(m) if c != pj]
                         for r in range(m) if r != pi]
                det = det_poly(minor)
                p = _laurent_from_wdet(det, m - 1)
                if (pi + pj) % 2:
                    p = -p
                if not p.is_zero:
                    crosses.append(((i, j),
                                    d.weight(pivot, i) * d.weight(pivot, j), p))
    return SchurStep(pivot, total, base, tuple(branches), tuple(crosses))


def join_poly(parts) -> Laurent:
    """Coxeter polynomial of a join, assembled without division:
    z * prod T_i - sum_j Tbar_j * prod_{i != j} T_i."""
    parts = list(parts)
    polys = [coxeter_poly(d) for d, _ in parts]
    bars = [coxeter_poly(d.delete([v])) for d, v in parts]
    prod = Laurent.one()
    for p in polys:
        prod = prod * p
    acc = Laurent.z() * prod
    for j in range(len(parts)):
        term = bars[j]
        for i, p in enumerate(polys):
            if i != j:
                term = term * p
        acc = acc - term
    return acc


# ---------------------------------------------------------------------------
# path sums and walk generating coefficients
# ---------------------------------------------------------------------------

def path_sum_H(d: Diagram, i: int, j: int) -> Poly:
    """Cofactor H_ij as a sum over simple paths from i to j of the path
    weight times the characteristic polynomial of the path-deleted graph."""
    if not (0 <= i < d.n and 0 <= j < d.n):
        raise UnknownVertex("path endpoints outside the diagram")
    acc = Poly.zero()
    stack = [(i, [i], 1)]
    while stack:
        v, path, weight = stack.pop()
        if v == j:
            acc = acc + weight * char_poly(d.delete(path))
            continue
        for u in d.neighbors(v):
            if u not in path:
                stack.append((u, path + [u], weight * d.weight(v, u)))
    return acc


def walk_gf(d: Diagram, i: int, j: int, k_max: int) -> list[int]:
    """Weighted walk counts d_ij^k for k = 0..k_max (powers of the
    adjacency matrix)."""
    if not (0 <= i < d.n and 0 <= j < d.n):
        raise UnknownVertex("walk endpoints outside the diagram")
    adj = d.adjacency()
    vec = [1 if t == j else 0 for t in range(d.n)]
    out = [vec[i]]
    for _ in range(k_max):
        vec = [sum(adj[r][t] * vec[t] for t in range(d.n)) for r in range(d.n)]
        out.append(vec[i])
    return out


def walk_expansion_residual(g_char: Poly, h: Poly, walks: Sequence[int]) -> Poly:
    """Residual of H/G = sum d^k z^(-k-1) through the given walk list.

    Returns h * z^(K+1) - (sum_k d_k z^(K-k)) * g; the identity holds at
    order K exactly when the residual has degree < deg g.
    """
    k_hi = len(walks) - 1
    lhs = h.shift(k_hi + 1)
    series = Poly([walks[k_hi - t] for t in range(k_hi + 1)])
    return lhs - series * g_char


def identity7_check(d: Diagram, i: int, j: int) -> Poly:
    """Residual H_ij^2 - (G_del_i * G_del_j - G * G_del_ij); zero when the
    two-by-two minor identity holds."""
    if i == j:
        raise UnknownVertex("identity needs two distinct vertices")
    h = cofactors(d)[i, j]
    g = char_poly(d)
    gi = char_poly(d.delete([i]))
    gj = char_poly(d.delete([j]))
    gij = char_poly(d.delete([i, j]))
    return h * h - (gi * gj - g * gij)


# ---------------------------------------------------------------------------
# tripartite divide block matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivideReport:
    lhs: RatFunc
    rhs: RatFunc
    equal: bool
    schur_exact: bool
    twist_power: int


def _int_rows(mat) -> list[list[int]]:
    return [list(map(int, row)) for row in mat]


def _mat_t(m):
    return [list(col) for col in zip(*m)] if m else []


def _imat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)]
            for row in a]


def _poly_mat_mul(a, b):
    n, p = len(a), len(b[0]) if b else 0
    out = [[Poly.zero()] * p for _ in range(n)]
    for i in range(n):
        for k in range(len(b)):
            x = a[i][k]
            if x.is_zero:
                continue
            for j in range(p):
                y = b[k][j]
                if not y.is_zero:
                    out[i][j] = out[i][j] + x * y
    return out


def _int_to_poly_mat(m):
    return [[Poly.const(x) for x in row] for row in m]


def divide_identity(a_mat, b_mat, c_mat) -> DivideReport:
    """Check the Schur factorization of the tripartite block matrix
    [[zE, -qA, qC], [-A^t/q, zE, -qB], [C^t/q, -B^t/q, zE]] under AB = 2C.

    Reports the generic two-block Schur factorization (always exact) and
    the simplified closed form whose twist power is the middle block size.
    """
    a = _int_rows(a_mat)
    b = _int_rows(b_mat)
    c = _int_rows(c_mat)
    p = len(a)
    r = len(a[0]) if a and a[0] else (len(b) if b else 0)
    s = len(b[0]) if b and b[0] else (len(c[0]) if c and c[0] else 0)
    if any(len(row) != r for row in a) or any(len(row) != s for row in b):
        raise DimensionMismatch("ragged blocks")
    if len(b) != r:
        raise DimensionMismatch("A columns must match B rows")
    if c and (len(c) != p or any(len(row) != s for row in c)):
        raise DimensionMismatch("C must be (rows of A) x (cols of B)")
    ab = _imat_mul(a, b) if p and s else [[0] * s for _ in range(p)]
    two_c = [[2 * x for x in row] for row in c] if c else [[0] * s for _ in range(p)]
    if ab != two_c:
        raise PreconditionABneq2C("A*B != 2*C")

    n = p + r + s
    z = Laurent.z()
    m = [[Laurent.zero()] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = z
    for i in range(p):
        for j in range(r):
            m[i][p + j] = Laurent.term(-a[i][j], 1)
            m[p + j][i] = Laurent.term(-a[i][j], -1)
        for j in range(s):
            m[i][p + r + j] = Laurent.term(c[i][j], 1)
            m[p + r + j][i] = Laurent.term(c[i][j], -1)
    for i in range(r):
        for j in range(s):
            m[p + i][p + r + j] = Laurent.term(-b[i][j], 1)
            m[p + r + j][p + i] = Laurent.term(-b[i][j], -1)
    g = det_exact(m)

    # generic Schur step against the last diagonal block:
    # G * z^(p+r) == z^s * det(z*M11 - M12*M21)
    m11 = [[m[i][j] for j in range(p + r)] for i in range(p + r)]
    m12 = [[m[i][p + r + j] for j in range(s)] for i in range(p + r)]
    m21 = [[m[p + r + i][j] for j in range(p + r)] for i in range(s)]
    inner = [[z * m11[i][j] for j in range(p + r)] for i in range(p + r)]
    if s:
        prod = mat_mul(m12, m21)
        inner = [[inner[i][j] - prod[i][j] for j in range(p + r)]
                 for i in range(p + r)]
    schur_exact = (g * z ** (p + r)) == (z ** s * det_exact(inner))

    # simplified closed form over z-polynomials
    zsq = Poly((0, 0, 1))
    aat = _imat_mul(a, _mat_t(a)) if r else [[0] * p for _ in range(p)]
    btb = _imat_mul(_mat_t(b), b) if r else [[0] * s for _ in range(s)]
    za = [[zsq - Poly.const(aat[i][j]) if i == j else Poly.const(-aat[i][j])
           for j in range(p)] for i in range(p)]
    zb = [[zsq - Poly.const(btb[i][j]) if i == j else Poly.const(-btb[i][j])
           for j in range(s)] for i in range(s)]
    det_a, det_b = det_poly(za), det_poly(zb)
    adj_a, adj_b = adjugate_poly(za), adjugate_poly(zb)
    dd = det_a * det_b
    four_minus = Poly((4, 0, -1))
    if s:
        if p:
            core = _poly_mat_mul(_int_to_poly_mat(_mat_t(c)), adj_a)
            core = _poly_mat_mul(core, _int_to_poly_mat(c))
            core = _poly_mat_mul(core, adj_b)
        else:
            core = [[Poly.zero()] * s for _ in range(s)]
        big = [[dd * (Poly.one() if i == j else Poly.zero())
                - four_minus * core[i][j] for j in range(s)] for i in range(s)]
        big_det = det_poly(big)
    else:
        big_det = Poly.one()

    dd_q = z_substitute(dd)
    big_q = z_substitute(big_det)
    lhs_num = g * z ** (p + s)
    rhs_num = z ** r * big_q
    try:
        lhs = RatFunc(lhs_num, dd_q)
        rhs = RatFunc(rhs_num, dd_q ** s if s else Laurent.one())
        equal = (lhs_num * dd_q ** s) == (rhs_num * dd_q)
    except ZeroDenominator:
        lhs = rhs = RatFunc.from_int(0, laurent=True)
        equal = False
    return DivideReport(lhs, rhs, equal, schur_exact, r)


__all__ = [
    "CofactorTable", "DivideReport", "SchurStep", "char_poly", "cofactors",
    "cofactor_entry", "coxeter_matrix", "coxeter_poly", "divide_identity",
    "identity7_check", "join_poly", "path_sum_H", "pivot_first", "schur_step",
    "walk_expansion_residual", "walk_gf",
]
