"""Simple graphs: constructors, join/union/complement algebra, small-graph
isomorphism, and clique-join recognition.

Adjacency is a symmetric irreflexive boolean matrix.  Labels are carried for
printable output only and never affect equality or isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphSizeError(ValueError):
    """Input exceeds the size bound of an exact search routine."""


class NotCliqueJoinError(ValueError):
    """The graph is not of the form K_c joined to a disjoint union of cliques."""


class SimpleGraph:
    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None,
                 adj: np.ndarray | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        if adj is not None:
            adj = np.array(adj, dtype=bool)
            if adj.shape != (n, n):
                raise ValueError("adjacency matrix shape mismatch")
            if adj.diagonal().any():
                raise ValueError("loops are not allowed")
            if not np.array_equal(adj, adj.T):
                raise ValueError("adjacency must be symmetric")
            self.adj = adj
        else:
            self.adj = np.zeros((n, n), dtype=bool)
            for u, v in edges:
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
                if u == v:
                    raise ValueError(f"loop at vertex {u} not allowed")
                self.adj[u, v] = self.adj[v, u] = True
        self.adj.setflags(write=False)
        if labels is None:
            self.labels = tuple(str(v) for v in range(n))
        else:
            if len(labels) != n:
                raise ValueError("label count must equal vertex count")
            self.labels = tuple(labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    def degrees(self) -> list[int]:
        return [int(d) for d in self.adj.sum(axis=1)]

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def with_labels(self, labels: Sequence[str]) -> "SimpleGraph":
        return SimpleGraph(self.n, labels=labels, adj=self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete(m: int) -> SimpleGraph:
    adj = ~np.eye(m, dtype=bool) if m else np.zeros((0, 0), dtype=bool)
    return SimpleGraph(m, adj=adj)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, edges=[(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph(n, edges=[(i, (i + 1) % n) for i in range(n)])


# Vertex labelling follows the 10x10 realization matrix example: the outer
# 5-cycle is 6..10 and the inner pentagram 1..5 (here 0-based).
PETERSEN_EDGES = [(0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 6), (2, 4), (2, 7),
                  (3, 8), (4, 9), (5, 6), (5, 9), (6, 7), (7, 8), (8, 9)]


def petersen() -> SimpleGraph:
    return SimpleGraph(10, edges=PETERSEN_EDGES)


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    n = g1.n + g2.n
    adj = np.zeros((n, n), dtype=bool)
    adj[:g1.n, :g1.n] = g1.adj
    adj[g1.n:, g1.n:] = g2.adj
    return SimpleGraph(n, labels=g1.labels + g2.labels, adj=adj)


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    n = g1.n + g2.n
    adj = np.zeros((n, n), dtype=bool)
    adj[:g1.n, :g1.n] = g1.adj
    adj[g1.n:, g1.n:] = g2.adj
    adj[:g1.n, g1.n:] = True
    adj[g1.n:, :g1.n] = True
    return SimpleGraph(n, labels=g1.labels + g2.labels, adj=adj)


def complement(g: SimpleGraph) -> SimpleGraph:
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return SimpleGraph(g.n, labels=g.labels, adj=adj)


def random_graph(n: int, p: float, rng: np.random.Generator) -> SimpleGraph:
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return SimpleGraph(n, adj=upper | upper.T)


# ---------------------------------------------------------------------------
# Isomorphism (exact backtracking; intended for n <= 32)

ISOMORPHISM_MAX_N = 32


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> list[int] | None:
    """A vertex bijection g1 -> g2 preserving adjacency, or None.

    Backtracking with degree and neighbour-degree-multiset pruning; beyond
    32 vertices callers should compare canonical clique-join forms instead.
    """
    if g1.n != g2.n:
        return None
    n = g1.n
    if n > ISOMORPHISM_MAX_N:
        raise GraphSizeError(f"isomorphism search limited to {ISOMORPHISM_MAX_N} vertices")
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return None

    def signature(g: SimpleGraph, deg: list[int]) -> list[tuple]:
        return [(deg[v], tuple(sorted(deg[u] for u in g.neighbors(v)))) for v in range(g.n)]

    sig1, sig2 = signature(g1, deg1), signature(g2, deg2)
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[v for v in range(n) if sig2[v] == sig1[u]] for u in range(n)]
    order = sorted(range(n), key=lambda u: len(candidates[u]))
    mapping = [-1] * n
    used = [False] * n
    adj1, adj2 = g1.adj, g2.adj

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in range(n):
                mw = mapping[w]
                if mw >= 0 and adj1[u, w] != adj2[v, mw]:
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(pos + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return mapping if extend(0) else None


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


# ---------------------------------------------------------------------------
# Clique-join forms K_c v (K_{a_1} u ... u K_{a_m})

@dataclass(frozen=True)
class CliqueJoinForm:
    universal_count: int
    clique_sizes: tuple[int, ...]              # sorted ascending
    vertex_assignment: tuple[int, ...]         # -1 for universal, else clique index
    cliques: tuple[tuple[int, ...], ...]       # vertex lists, aligned with sizes

    @property
    def n(self) -> int:
        return len(self.vertex_assignment)

    def universal_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.vertex_assignment) if a == -1)


def decompose_clique_join(g: SimpleGraph) -> CliqueJoinForm:
    """Split off the universal vertices and check the rest is a disjoint
    union of cliques.  Complete graphs decompose as all-universal with no
    cliques, which keeps the form unique."""
    n = g.n
    universal = [v for v in range(n) if g.degree(v) == n - 1]
    uni_set = set(universal)
    rest = [v for v in range(n) if v not in uni_set]
    seen: set[int] = set()
    cliques: list[tuple[int, ...]] = []
    for v in rest:
        if v in seen:
            continue
        component = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in uni_set and y not in component:
                    component.add(y)
                    stack.append(y)
        members = sorted(component)
        for a in members:
            for b in members:
                if a < b and not g.has_edge(a, b):
                    raise NotCliqueJoinError(
                        f"component containing vertex {v} is not a clique")
        seen |= component
        cliques.append(tuple(members))
    cliques.sort(key=lambda c: (len(c), c))
    assignment = [-1] * n
    for idx, members in enumerate(cliques):
        for v in members:
            assignment[v] = idx
    return CliqueJoinForm(len(universal), tuple(len(c) for c in cliques),
                          tuple(assignment), tuple(cliques))


def reassemble_clique_join(form: CliqueJoinForm) -> SimpleGraph:
    """Rebuild the graph on the original vertex set; exact inverse of
    decompose_clique_join on graphs where that succeeds."""
    n = form.n
    adj = np.zeros((n, n), dtype=bool)
    assign = form.vertex_assignment
    for u in range(n):
        for v in range(u + 1, n):
            if assign[u] == -1 or assign[v] == -1 or assign[u] == assign[v]:
                adj[u, v] = adj[v, u] = True
    return SimpleGraph(n, adj=adj)


def build_clique_join(universal_count: int, clique_sizes: Sequence[int]) -> SimpleGraph:
    """K_c joined to disjoint cliques, universals first then cliques in order."""
    g = complete(universal_count)
    tail = empty_graph(0)
    for size in clique_sizes:
        tail = disjoint_union(tail, complete(size))
    return join(g, tail) if universal_count else tail


# ---------------------------------------------------------------------------
# Text formats

def to_edge_list_text(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> SimpleGraph:
    """First line: vertex count; then one "u v" pair per line, 0-based.
    '#' starts a comment."""
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty edge list: expected a leading vertex count")
    if len(rows[0]) != 1:
        raise ValueError(f"first line must be the vertex count, got {rows[0]!r}")
    n = int(rows[0][0])
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"expected 'u v' pair, got {row!r}")
        edges.append((int(row[0]), int(row[1])))
    return SimpleGraph(n, edges=edges)


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v].replace('"', '\\"')
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
