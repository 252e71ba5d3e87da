"""Weighted Dynkin diagrams.

Finite graphs without loops or multiple edges, symmetric integer edge
weights, and an explicit vertex total order.  Builders cover the euclidean
families A/D/E and their affine extensions; in every affine family vertex 0
is the added affine vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadRank, DomainError, UnknownVertex

FAMILIES = ("A", "D", "E", "affA", "affD", "affE")


class Diagram:
    """Immutable weighted graph with a vertex order.

    Edges are stored once per unordered pair with a nonzero integer weight;
    an absent pair means weight 0.
    """

    __slots__ = ("n", "labels", "order", "_w")

    def __init__(self, n: int, edges=(), labels=None, order=None):
        self.n = n
        w: dict[tuple[int, int], int] = {}
        items = edges.items() if isinstance(edges, dict) else edges
        for (i, j), weight in items:
            if i == j:
                raise DomainError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise UnknownVertex(f"edge ({i},{j}) outside 0..{n - 1}")
            key = (i, j) if i < j else (j, i)
            if key in w and w[key] != weight:
                raise DomainError(f"conflicting weights for edge {key}")
            if weight:
                w[key] = weight
        self._w = w
        self.labels = tuple(labels) if labels else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise DomainError("label count does not match vertex count")
        self.order = tuple(order) if order is not None else tuple(range(n))
        if sorted(self.order) != list(range(n)):
            raise DomainError("order must be a permutation of the vertices")

    # -- basic queries ------------------------------------------------------

    def weight(self, i: int, j: int) -> int:
        if i == j:
            return 0
        key = (i, j) if i < j else (j, i)
        return self._w.get(key, 0)

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted((i, j, w) for (i, j), w in self._w.items()))

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for (a, b), _ in self._w.items():
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return tuple(sorted(out))

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for (i, j), w in self._w.items():
            m[i][j] = w
            m[j][i] = w
        return m

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Diagram) and self.n == other.n
                and self._w == other._w and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self._w.items())), self.order))

    def __repr__(self) -> str:
        return f"Diagram(n={self.n}, edges={self.edges()})"

    # -- derived diagrams ----------------------------------------------------

    def with_order(self, order) -> "Diagram":
        return Diagram(self.n, dict(self._w), self.labels, tuple(order))

    def delete(self, vertices) -> "Diagram":
        """Induced subdiagram on the remaining vertices, order inherited."""
        gone = set(vertices)
        for v in gone:
            if not (0 <= v < self.n):
                raise UnknownVertex(f"no vertex {v}")
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: k for k, v in enumerate(keep)}
        edges = {(index[i], index[j]): w for (i, j), w in self._w.items()
                 if i in index and j in index}
        labels = [self.labels[v] for v in keep]
        order = [index[v] for v in self.order if v in index]
        return Diagram(len(keep), edges, labels, order)

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_tree(self) -> bool:
        return (len(self.components()) == 1
                and len(self._w) == self.n - 1) or self.n == 0


def delete(d: Diagram, vertices) -> Diagram:
    return d.delete(vertices)


# ---------------------------------------------------------------------------
# Seifert matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeifertMatrix:
    """Upper-triangular unit-diagonal matrix with -a_ij above the diagonal,
    rows and columns in the diagram's order."""

    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_diagram(d: Diagram) -> "SeifertMatrix":
        n = d.n
        rows = []
        for p in range(n):
            row = []
            for t in range(n):
                if t == p:
                    row.append(1)
                elif t > p:
                    row.append(-d.weight(d.order[p], d.order[t]))
                else:
                    row.append(0)
            rows.append(tuple(row))
        return SeifertMatrix(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def c_matrix(self) -> list[list[int]]:
        """S + S^t: diagonal 2, off-diagonal -a_ij."""
        n = self.n
        return [[self.entries[i][j] + self.entries[j][i] for j in range(n)]
                for i in range(n)]


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _path_edges(vertices) -> list[tuple[tuple[int, int], int]]:
    return [((vertices[k], vertices[k + 1]), 1)
            for k in range(len(vertices) - 1)]


def build(family: str, n: int) -> Diagram:
    """Build a euclidean or affine ADE diagram with unit edge weights.

    Affine families put the affine vertex at index 0.  The affine A_1 cycle
    degenerates to a single edge of weight 2 (its Cartan matrix).
    """
    if family == "A":
        if n < 0:
            raise BadRank("A_n needs n >= 0")
        return Diagram(n, _path_edges(list(range(n))))
    if family == "D":
        if n < 4:
            raise BadRank("D_n needs n >= 4")
        edges = [((0, 2), 1), ((1, 2), 1)] + _path_edges(list(range(2, n)))
        return Diagram(n, edges)
    if family == "E":
        if n not in (6, 7, 8):
            raise BadRank("E_n needs n in {6, 7, 8}")
        edges = _path_edges(list(range(n - 1))) + [((2, n - 1), 1)]
        return Diagram(n, edges)
    if family == "affA":
        if n < 1:
            raise BadRank("affine A_n needs n >= 1")
        if n == 1:
            return Diagram(2, [((0, 1), 2)])
        edges = _path_edges(list(range(n + 1))) + [((0, n), 1)]
        return Diagram(n + 1, edges)
    if family == "affD":
        if n < 4:
            raise BadRank("affine D_n needs n >= 4")
        # 0 affine leaf, 1 its partner leaf, 2..n-2 the central path,
        # n-1 and n the far fork
        edges = [((0, 2), 1), ((1, 2), 1),
                 ((n - 2, n - 1), 1), ((n - 2, n), 1)]
        edges += _path_edges(list(range(2, n - 1)))
        return Diagram(n + 1, edges)
    if family == "affE":
        if n == 6:
            edges = [((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((3, 4), 1),
                     ((2, 5), 1), ((5, 6), 1)]
            return Diagram(7, edges)
        if n == 7:
            edges = _path_edges(list(range(7))) + [((3, 7), 1)]
            return Diagram(8, edges)
        if n == 8:
            edges = _path_edges(list(range(8))) + [((5, 8), 1)]
            return Diagram(9, edges)
        raise BadRank("affine E_n needs n in {6, 7, 8}")
    raise BadRank(f"unknown family {family!r}")


def parse_name(name: str) -> tuple[str, int]:
    """Parse CLI diagram names like A5, D7, E8, ~A4, ~D6, ~E7."""
    s = name.strip()
    aff = s.startswith("~")
    if aff:
        s = s[1:]
    if not s or s[0].upper() not in "ADE":
        raise DomainError(f"cannot parse diagram name {name!r}")
    fam = s[0].upper()
    try:
        rank = int(s[1:])
    except ValueError:
        raise DomainError(f"cannot parse rank in {name!r}") from None
    return ("aff" + fam if aff else fam), rank


def from_name(name: str) -> Diagram:
    fam, rank = parse_name(name)
    return build(fam, rank)


def join(parts) -> Diagram:
    """Join: add one new vertex tied by weight-1 edges to each marked vertex.

    Parts are (diagram, marked_vertex) pairs.  The new vertex gets index 0
    and comes first in the order, so it can serve directly as the pivot of
    the one-row Schur step.
    """
    parts = list(parts)
    edges: list[tuple[tuple[int, int], int]] = []
    labels: list[str] = ["join"]
    order: list[int] = [0]
    offset = 1
    for k, (d, v) in enumerate(parts):
        if not (0 <= v < d.n):
            raise UnknownVertex(f"marked vertex {v} outside part {k}")
        for (i, j, w) in d.edges():
            edges.append(((i + offset, j + offset), w))
        labels.extend(f"p{k}:{lab}" for lab in d.labels)
        order.extend(p + offset for p in d.order)
        edges.append(((0, v + offset), 1))
        offset += d.n
    return Diagram(offset, edges, labels, order)


def disjoint_union(a: Diagram, b: Diagram) -> Diagram:
    edges = [((i, j), w) for (i, j, w) in a.edges()]
    edges += [((i + a.n, j + a.n), w) for (i, j, w) in b.edges()]
    labels = list(a.labels) + list(b.labels)
    order = list(a.order) + [p + a.n for p in b.order]
    return Diagram(a.n + b.n, edges, labels, order)


# ---------------------------------------------------------------------------
# bipartite two-block ordering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OddCycle:
    """Witness returned when a diagram has a cycle of odd length."""

    cycle: tuple[int, ...]


def bipartite_order(d: Diagram):
    """Two-block vertex order (one part first, then the other) or OddCycle.

    A normal outcome either way: graphs without odd cycles get an order
    under which the characteristic and Coxeter polynomials coincide.
    """
    color = [-1] * d.n
    parent = [-1] * d.n
    for start in range(d.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in d.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    return OddCycle(_odd_cycle_witness(parent, u, v))
    part0 = [v for v in range(d.n) if color[v] == 0]
    part1 = [v for v in range(d.n) if color[v] == 1]
    return part0 + part1


def _odd_cycle_witness(parent, u, v) -> tuple[int, ...]:
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    in_u = {x: k for k, x in enumerate(anc_u)}
    path_v = [v]
    while path_v[-1] not in in_u:
        path_v.append(parent[path_v[-1]])
    meet = path_v[-1]
    up = anc_u[: in_u[meet] + 1]
    # meet .. u, then across the offending edge to v and back up to meet
    return tuple(up[::-1] + path_v[:-1])


# ---------------------------------------------------------------------------
# random trees (seeded, for the property suites and the CLI)
# ---------------------------------------------------------------------------

def random_tree(rng: random.Random, n: int, weights=(1,)) -> Diagram:
    """Random recursive tree: vertex k > 0 hangs off a uniform earlier one."""
    edges = []
    for k in range(1, n):
        edges.append(((rng.randrange(k), k), rng.choice(list(weights))))
    return Diagram(n, edges)


# ---------------------------------------------------------------------------
# text file format
# ---------------------------------------------------------------------------

def from_text(text: str) -> Diagram:
    """Parse the diagram file format.

    Line `n <count>`, then edge lines `i j w` (0-based, integer weight),
    optionally `order i0 i1 ...`.
    """
    n = None
    edges = []
    order = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "n":
            n = int(tok[1])
        elif tok[0] == "order":
            order = [int(t) for t in tok[1:]]
        else:
            if len(tok) != 3:
                raise DomainError(f"bad edge line: {raw!r}")
            i, j, w = int(tok[0]), int(tok[1]), int(tok[2])
            edges.append(((i, j), w))
    if n is None:
        raise DomainError("missing 'n <count>' header")
    return Diagram(n, edges, order=order)


def to_text(d: Diagram) -> str:
    lines = [f"n {d.n}"]
    lines += [f"{i} {j} {w}" for (i, j, w) in d.edges()]
    if d.order != tuple(range(d.n)):
        lines.append("order " + " ".join(str(v) for v in d.order))
    return "\n".join(lines) + "\n"
