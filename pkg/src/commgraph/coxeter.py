"""Coxeter matrices and the graph realization they induce.

A Coxeter matrix is symmetric, has 1 on the diagonal and entries >= 2 (or
infinity) elsewhere.  Generators s_i and s_j commute exactly when m_ij = 2,
so any simple graph becomes the commuting graph of the generator set by
placing 2 at its edges and any label >= 3 (default: infinity) elsewhere.
The Coxeter graph keeps the edges with m_ij >= 3 instead, which makes it the
complement of the commuting graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import SimpleGraph

INFINITY = math.inf
Label = int | float


def _check_label(value: Label) -> Label:
    if value == INFINITY:
        return INFINITY
    if isinstance(value, (int, float)) and float(value).is_integer():
        return int(value)
    raise ValueError(f"Coxeter label must be a positive integer or infinity, got {value!r}")


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple[tuple[Label, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if i == j:
                    if m != 1:
                        raise ValueError(f"diagonal entry m_{i}{i} must be 1, got {m}")
                else:
                    if m != INFINITY and (not isinstance(m, int) or m < 2):
                        raise ValueError(f"off-diagonal entry m_{i}{j} must be >= 2 or inf, got {m}")
                    if self.entries[j][i] != m:
                        raise ValueError("Coxeter matrix must be symmetric")

    @property
    def n(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> Label:
        return self.entries[i][j]


def _generator_labels(n: int) -> tuple[str, ...]:
    return tuple(f"s{i + 1}" for i in range(n))


def realize(g: SimpleGraph, off_label: Label = INFINITY) -> CoxeterMatrix:
    """Coxeter matrix whose generator commuting graph is exactly g.

    m_ij = 2 at edges of g, off_label (any integer >= 3, or infinity) at
    non-edges, 1 on the diagonal.
    """
    off_label = _check_label(off_label)
    if off_label != INFINITY and off_label < 3:
        raise ValueError(f"off-diagonal non-edge label must be >= 3 or inf, got {off_label}")
    rows = []
    for i in range(g.n):
        rows.append(tuple(1 if i == j else (2 if g.has_edge(i, j) else off_label)
                          for j in range(g.n)))
    return CoxeterMatrix(tuple(rows))


def commuting_graph_of_generators(m: CoxeterMatrix) -> SimpleGraph:
    """Edge i ~ j exactly when m_ij = 2."""
    edges = [(i, j) for i in range(m.n) for j in range(i + 1, m.n) if m.m(i, j) == 2]
    return SimpleGraph(m.n, edges=edges, labels=_generator_labels(m.n))


def coxeter_graph(m: CoxeterMatrix) -> SimpleGraph:
    """Edge i ~ j exactly when m_ij >= 3 (infinity included); labels forgotten."""
    edges = [(i, j) for i in range(m.n) for j in range(i + 1, m.n) if m.m(i, j) >= 3]
    return SimpleGraph(m.n, edges=edges, labels=_generator_labels(m.n))


# ---------------------------------------------------------------------------
# ADE diagrams.  Node numbering is fixed so downstream index-level
# comparisons are exact: paths run 1..n, the D fork sits at node n-2, and the
# E-type branch vertex is node 3 with the short arm at node 4.

def dynkin_graph(kind: str, n: int | None = None) -> SimpleGraph:
    kind = kind.upper()
    if kind == "A":
        if n is None or n < 1:
            raise ValueError("type A needs rank n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
        return SimpleGraph(n, edges=edges)
    if kind == "D":
        if n is None or n < 4:
            raise ValueError("type D needs rank n >= 4")
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
        return SimpleGraph(n, edges=edges)
    if kind in ("E6", "E7", "E8"):
        if n is not None:
            raise ValueError(f"type {kind} takes no rank parameter")
        rank = int(kind[1])
        edges = [(0, 1), (1, 2), (2, 3), (2, 4)]
        edges += [(i, i + 1) for i in range(4, rank - 1)]
        return SimpleGraph(rank, edges=edges)
    raise ValueError(f"unknown ADE type {kind!r}")


def ade_matrix(kind: str, n: int | None = None, off_label: Label = INFINITY) -> CoxeterMatrix:
    """Coxeter matrix whose generator commuting graph is the named ADE diagram."""
    return realize(dynkin_graph(kind, n), off_label)


# ---------------------------------------------------------------------------
# Text formats

def presentation_text(m: CoxeterMatrix) -> str:
    """One relator per line: the generator squares, then (si sj)^m_ij for the
    finite off-diagonal labels in (i, j) order.  Infinite labels are silent."""
    lines = [f"s{i + 1}^2 = 1" for i in range(m.n)]
    for i in range(m.n):
        for j in range(i + 1, m.n):
            label = m.m(i, j)
            if label != INFINITY:
                lines.append(f"(s{i + 1} s{j + 1})^{label} = 1")
    return "\n".join(lines) + "\n"


def to_text(m: CoxeterMatrix) -> str:
    lines = [str(m.n)]
    for row in m.entries:
        lines.append(" ".join("inf" if v == INFINITY else str(v) for v in row))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> CoxeterMatrix:
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 1:
        raise ValueError("first line must be the matrix rank")
    n = int(rows[0][0])
    if len(rows) != n + 1:
        raise ValueError(f"expected {n} matrix rows, got {len(rows) - 1}")
    entries = []
    for row in rows[1:]:
        if len(row) != n:
            raise ValueError(f"expected {n} entries per row, got {len(row)}")
        entries.append(tuple(INFINITY if tok == "inf" else int(tok) for tok in row))
    return CoxeterMatrix(tuple(entries))
