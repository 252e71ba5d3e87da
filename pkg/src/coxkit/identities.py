"""Christoffel-Darboux identities for Coxeter and characteristic polynomials.

Bezoutian and Wronskian forms of the one-row pivot decomposition, the chain
(three-term recurrence) bundle for a path tail, the cofactor forms, the
Binet-Cauchy determinant generalization, and the Poincare-series forms over
the Klein-group numerator tables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .algebra import (BiLaurent, Laurent, Poly, RatFunc, bezoutian,
                      wronskian, z_substitute)
from .coxeter import char_poly, cofactors, coxeter_poly, schur_step
from .diagram import Diagram
from .errors import (BadType, ShapeViolation, SizeMismatch, UnknownVertex)
from .kostant import KleinGroupData
from .report import IdentityReport


def _one_minus_inv_xy() -> BiLaurent:
    return BiLaurent({(0, 0): 1, (-1, -1): -1})


def _one_minus_inv_x2() -> Laurent:
    return Laurent({0: 1, -2: -1})


def _poly_to_laurent(p: Poly) -> Laurent:
    return Laurent.from_poly(p)


# ---------------------------------------------------------------------------
# Coxeter-polynomial forms built on the one-row pivot
# ---------------------------------------------------------------------------

def cd_coxeter(d: Diagram, pivot: int) -> IdentityReport:
    """Bezoutian form: Bez(G, G_del) = (1 - 1/(xy)) G_del(x) G_del(y)
    + weighted Bezoutians of the branch and cross terms."""
    step = schur_step(d, pivot)
    lhs = bezoutian(step.total, step.base)
    rhs = _one_minus_inv_xy() * BiLaurent.outer(step.base, step.base)
    for _, wsq, g in step.branches:
        rhs = rhs + wsq * bezoutian(step.base, g)
    for _, coeff, p in step.crosses:
        rhs = rhs + coeff * bezoutian(step.base, p)
    return IdentityReport.compare(f"cd-bez-pivot{pivot}", lhs, rhs)


def cd_wronskian(d: Diagram, pivot: int) -> IdentityReport:
    """Wronskian form: the diagonal limit of the Bezoutian identity."""
    step = schur_step(d, pivot)
    lhs = wronskian(step.total, step.base)
    rhs = _one_minus_inv_x2() * step.base * step.base
    for _, wsq, g in step.branches:
        rhs = rhs + wsq * wronskian(step.base, g)
    for _, coeff, p in step.crosses:
        rhs = rhs + coeff * wronskian(step.base, p)
    return IdentityReport.compare(f"cd-wr-pivot{pivot}", lhs, rhs)


# ---------------------------------------------------------------------------
# chain bundle for an attached path
# ---------------------------------------------------------------------------

def _check_tail(d: Diagram, tail) -> None:
    k = len(tail)
    if len(set(tail)) != k or any(not 0 <= v < d.n for v in tail):
        raise UnknownVertex("tail must list distinct vertices of the diagram")
    for t in range(k - 1):
        if d.weight(tail[t], tail[t + 1]) != 1:
            raise ShapeViolation("tail edges must be consecutive with weight 1")
    allowed = set(tail)
    for t, v in enumerate(tail[:-1]):
        for u in d.neighbors(v):
            if u not in allowed:
                raise ShapeViolation(
                    f"tail vertex {v} has an edge leaving the tail")
        nbrs_in = [u for u in d.neighbors(v) if u in allowed]
        expected = {tail[t + 1]} | ({tail[t - 1]} if t > 0 else set())
        if set(nbrs_in) != expected:
            raise ShapeViolation("tail is not an induced path")


def chain_identities(d: Diagram, tail) -> list[IdentityReport]:
    """Identity bundle for a path tail v_1 .. v_k hanging off the diagram.

    With C_i the polynomial of the diagram minus the first i tail vertices:
    the three-term recurrence, the transfer-matrix form, the telescoped
    ratio, and the Bezoutian and Wronskian sums.
    """
    tail = list(tail)
    k = len(tail)
    if k == 0:
        raise ShapeViolation("empty tail")
    _check_tail(d, tail)
    c = [coxeter_poly(d)]
    for i in range(1, k + 1):
        c.append(coxeter_poly(d.delete(tail[:i])))
    z = Laurent.z()
    reports: list[IdentityReport] = []
    for i in range(1, k):
        reports.append(IdentityReport.compare(
            f"chain-recurrence-{i}", c[i - 1] + c[i + 1], z * c[i]))
    # transfer matrix [[0,1],[-1,z]]^(i-1) * [[C0,C1],[C1,C2]]
    if k >= 2:
        mat = [[c[0], c[1]], [c[1], c[2]]]
        for i in range(1, k):
            want = [[c[i - 1], c[i]], [c[i], c[i + 1]]]
            res = Laurent.zero()
            for r in range(2):
                for t in range(2):
                    res = res + (mat[r][t] - want[r][t]) ** 2
            reports.append(IdentityReport(
                f"chain-transfer-{i}", None, None, res, res.is_zero))
            mat = [[mat[1][0], mat[1][1]],
                   [z * mat[1][0] - mat[0][0], z * mat[1][1] - mat[0][1]]]
    # telescoped ratio: C_{i-1}/C_i = D * sum 1/(C_{j-1} C_j) + C_{k-1}/C_k
    det2 = c[0] * c[2] - c[1] * c[1] if k >= 2 else Laurent.zero()
    for i in range(1, k):
        lhs = RatFunc(c[i - 1], c[i])
        rhs = RatFunc(c[k - 1], c[k])
        for j in range(i + 1, k + 1):
            rhs = rhs + RatFunc(det2, c[j - 1] * c[j])
        diff = lhs - rhs
        reports.append(IdentityReport(
            f"chain-ratio-{i}", lhs, rhs, diff.num, diff.is_zero))
    # Christoffel-Darboux sums along the chain
    for i in range(1, k):
        bez_lhs = bezoutian(c[i - 1], c[i])
        bez_rhs = bezoutian(c[k - 1], c[k])
        for j in range(i, k):
            bez_rhs = bez_rhs + _one_minus_inv_xy() * BiLaurent.outer(c[j], c[j])
        reports.append(IdentityReport.compare(f"chain-bez-{i}", bez_lhs, bez_rhs))
        wr_lhs = wronskian(c[i - 1], c[i])
        wr_rhs = wronskian(c[k - 1], c[k])
        for j in range(i, k):
            wr_rhs = wr_rhs + _one_minus_inv_x2() * c[j] * c[j]
        reports.append(IdentityReport.compare(f"chain-wr-{i}", wr_lhs, wr_rhs))
    return reports


# ---------------------------------------------------------------------------
# characteristic-polynomial forms
# ---------------------------------------------------------------------------

def cd_char(d: Diagram, i: int, j: int) -> tuple[IdentityReport, IdentityReport]:
    """Cofactor forms: Bez(G, H_ij) = sum_k H_ik(x) H_jk(y) and its
    diagonal limit Wr(G, H_ij) = sum_k H_ik(x) H_jk(x)."""
    if not (0 <= i < d.n and 0 <= j < d.n):
        raise UnknownVertex("vertices outside the diagram")
    table = cofactors(d)
    g = _poly_to_laurent(char_poly(d))
    h_ij = _poly_to_laurent(table[i, j])
    h_i = [_poly_to_laurent(table[i, k]) for k in range(d.n)]
    h_j = [_poly_to_laurent(table[j, k]) for k in range(d.n)]
    bez_lhs = bezoutian(g, h_ij)
    bez_rhs = BiLaurent.zero()
    for k in range(d.n):
        bez_rhs = bez_rhs + BiLaurent.outer(h_i[k], h_j[k])
    rep8 = IdentityReport.compare(f"cd-char-bez-{i}-{j}", bez_lhs, bez_rhs)
    wr_lhs = wronskian(g, h_ij)
    wr_rhs = Laurent.zero()
    for k in range(d.n):
        wr_rhs = wr_rhs + h_i[k] * h_j[k]
    rep9 = IdentityReport.compare(f"cd-char-wr-{i}-{j}", wr_lhs, wr_rhs)
    return rep8, rep9


def binet_cauchy(d: Diagram, i: int, j: int, xs, ys) -> IdentityReport:
    """Binet-Cauchy form on integer sample points.

    The matrix of Bezoutian values at (x_l, y_s) factors through the
    cofactor rows; its determinant equals the sum over size-m column
    subsets of the product of the two maximal minors.  The entrywise
    factorization is also checked symbolically through the cofactor form.
    """
    xs, ys = list(xs), list(ys)
    m = len(xs)
    if len(ys) != m:
        raise SizeMismatch("need equally many x and y sample points")
    if m > d.n:
        raise SizeMismatch("more sample points than vertices")
    rep8, _ = cd_char(d, i, j)
    table = cofactors(d)
    g = _poly_to_laurent(char_poly(d))
    h_ij = _poly_to_laurent(table[i, j])
    bez = bezoutian(g, h_ij)
    bmat = [[bez.eval_fraction(Fraction(x), Fraction(y)) for y in ys]
            for x in xs]
    hx = [[Fraction(table[i, k].eval_int(x)) for k in range(d.n)] for x in xs]
    hy = [[Fraction(table[j, k].eval_int(y)) for k in range(d.n)] for y in ys]
    entry_ok = rep8.holds
    for l in range(m):
        for t in range(m):
            val = sum(hx[l][k] * hy[t][k] for k in range(d.n))
            entry_ok = entry_ok and (val == bmat[l][t])
    lhs = _frac_det(bmat)
    rhs = Fraction(0)
    for subset in combinations(range(d.n), m):
        mx = [[hx[l][k] for k in subset] for l in range(m)]
        my = [[hy[t][k] for k in subset] for t in range(m)]
        rhs += _frac_det(mx) * _frac_det(my)
    holds = entry_ok and lhs == rhs
    return IdentityReport(f"binet-cauchy-{i}-{j}-m{m}", lhs, rhs,
                          Laurent.zero() if holds else Laurent.one(), holds)


def _frac_det(mat) -> Fraction:
    n = len(mat)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] * inv
            if f:
                for t in range(k, n):
                    m[r][t] -= f * m[k][t]
    return det


# ---------------------------------------------------------------------------
# Poincare-series forms over the numerator tables
# ---------------------------------------------------------------------------

def _bfs_parents(d: Diagram, root: int) -> list[int]:
    parent = [-2] * d.n
    parent[root] = -1
    queue = [root]
    while queue:
        v = queue.pop(0)
        for u in d.neighbors(v):
            if parent[u] == -2:
                parent[u] = v
                queue.append(u)
    return parent


def _subtree(d: Diagram, parent, i: int) -> list[int]:
    children: dict[int, list[int]] = {v: [] for v in range(d.n)}
    for v, p in enumerate(parent):
        if p >= 0:
            children[p].append(v)
    out, stack = [], [i]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(children[v])
    return sorted(out)


def poincare_cd(data: KleinGroupData, i, j: int | None = None
                ) -> tuple[IdentityReport, IdentityReport]:
    """Christoffel-Darboux forms over the numerator tables.

    Tree families: Bez(Z_parent(i), Z_i) = (1 - 1/(xy)) * sum over the
    branch hanging below i of Z_k(x) Z_k(y), where the virtual vertex -1
    (numerator q^-1 (1-q^a)(1-q^b)) is the parent of the affine vertex.
    Passing i = 0 gives the full-diagram special case.  Cycle families take
    a vertex pair (i, j) and check the two-sided form
    Bez(Z_{i-1}, Z_i) + Bez(Z_j, Z_{j+1}) = (1 - 1/(xy)) sum_{k=i}^{j} ...,
    wrapping Z_{n+1} = Z_0.  Returns the (Bezoutian, Wronskian) pair.
    """
    d = data.diagram()
    zt = data.z_table

    def z_of(v: int) -> Laurent:
        return data.z_minus1 if v == -1 else zt[v]

    if data.family == "affA" and j is not None:
        n = data.n
        if not (1 <= i <= j <= n):
            raise BadType("cycle form needs 1 <= i <= j <= n")
        wrap = list(zt) + [zt[0]]
        # two expansions meeting around the cycle; skew-symmetry puts the
        # second one in reversed argument order
        bez_lhs = bezoutian(wrap[i - 1], wrap[i]) + bezoutian(wrap[j + 1], wrap[j])
        wr_lhs = wronskian(wrap[i - 1], wrap[i]) + wronskian(wrap[j + 1], wrap[j])
        ks = list(range(i, j + 1))
        name = f"poincare-cd-{data.family}{data.n}-{i}-{j}"
    else:
        if j is not None:
            raise BadType("vertex pairs only apply to the cycle family")
        if not (0 <= i < d.n):
            raise UnknownVertex(f"no vertex {i}")
        parent = _bfs_parents(d, 0)
        if data.family == "affA":
            # only the full-diagram case is two-sided-free on a cycle
            if i != 0:
                raise BadType("cycle family needs a vertex pair for i > 0")
            up = [-1]
            ks = list(range(d.n))
        else:
            up = [parent[i] if i != 0 else -1]
            ks = _subtree(d, parent, i)
        bez_lhs = bezoutian(z_of(up[0]), zt[i])
        wr_lhs = wronskian(z_of(up[0]), zt[i])
        name = f"poincare-cd-{data.family}{data.n}-{i}"
    bez_rhs = BiLaurent.zero()
    wr_rhs = Laurent.zero()
    for k in ks:
        bez_rhs = bez_rhs + BiLaurent.outer(zt[k], zt[k])
        wr_rhs = wr_rhs + zt[k] * zt[k]
    bez_rhs = _one_minus_inv_xy() * bez_rhs
    wr_rhs = _one_minus_inv_x2() * wr_rhs
    return (IdentityReport.compare(name + "-bez", bez_lhs, bez_rhs),
            IdentityReport.compare(name + "-wr", wr_lhs, wr_rhs))


def poincare_cd_antipodal_choices(data: KleinGroupData):
    """On even cycles the vertex opposite the affine one has two equally
    short routes back; the expansion must not depend on which neighbor is
    taken as its parent.  Returns one report per choice plus the meeting
    identity at the antipode; all must hold."""
    if data.family != "affA" or data.n % 2 == 0 or data.n < 3:
        raise BadType("two parent choices only occur on even cycles")
    mid = (data.n + 1) // 2
    zt = data.z_table
    same = zt[mid - 1] - zt[mid + 1]
    out = [IdentityReport("antipodal-parents-agree", zt[mid - 1], zt[mid + 1],
                          same, same.is_zero)]
    for parent in (mid - 1, mid + 1):
        rep_b, rep_w = poincare_cd(data, mid, mid)
        lhs = bezoutian(zt[parent], zt[mid]) - bezoutian(zt[mid], zt[2 * mid - parent])
        rhs = _one_minus_inv_xy() * BiLaurent.outer(zt[mid], zt[mid])
        out.append(IdentityReport.compare(
            f"poincare-cd-antipodal-parent{parent}", lhs, rhs))
        out.append(rep_b)
        out.append(rep_w)
    return out
