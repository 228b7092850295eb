"""Commuting graphs of the finite SL(2,C) subgroups and their canonical
vertex subsets.

For a group H and nonempty subset S, the commuting graph has S as node set
and joins distinct x, y whenever xy = yx in H.  The full graphs of the
nonabelian families all decompose as K_2 joined to a disjoint union of
cliques; verify_structure checks the decomposition against the expected
clique multiset.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import groups as gr
from .graphs import CliqueJoinForm, SimpleGraph, decompose_clique_join


class StructureMismatchError(AssertionError):
    def __init__(self, family: str, expected: tuple[int, Counter], observed: tuple[int, Counter]):
        self.expected = expected
        self.observed = observed
        super().__init__(
            f"{family}: expected universal count and clique multiset {expected}, got {observed}")


@dataclass(frozen=True)
class NamedSubset:
    name: str
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


def commuting_graph(H: gr.FiniteGroup, subset: Sequence[int]) -> SimpleGraph:
    members = sorted(set(subset))
    if not members:
        raise ValueError("commuting graph needs a nonempty node set")
    for x in members:
        if not 0 <= x < H.order:
            raise ValueError(f"element index {x} out of range")
    comm = gr.commutation_matrix(H)
    edges = [(i, j) for i in range(len(members)) for j in range(i + 1, len(members))
             if comm[members[i], members[j]]]
    labels = [H.describe(x) for x in members]
    return SimpleGraph(len(members), edges=edges, labels=labels)


def full_commuting_graph(H: gr.FiniteGroup) -> SimpleGraph:
    return commuting_graph(H, range(H.order))


def canonical_subsets(H: gr.FiniteGroup) -> list[NamedSubset]:
    """The named node sets studied for each family.

    Cyclic: Z (the whole group) and full.  Binary dihedral: Z, Gamma1 = <a>,
    Gamma2 = the coset <a>b, Gamma3 = Gamma1 minus the center, and full.
    Binary polyhedral: Z plus the maximal mutually-commuting classes, named
    B* / C* / D* by size (2 / 4 / 6-or-8); B-numbering starts at 2 because
    the center is the first size-2 class in the classical lists.
    """
    kind = H.family.kind
    everything = tuple(range(H.order))
    if kind == gr.CYCLIC:
        return [NamedSubset("Z", everything), NamedSubset("full", everything)]
    z = tuple(gr.center(H))
    subsets = [NamedSubset("Z", z)]
    if kind == gr.BINARY_DIHEDRAL:
        n = H.family.parameter
        gamma1 = tuple(range(2 * n))
        gamma2 = tuple(range(2 * n, 4 * n))
        gamma3 = tuple(x for x in gamma1 if x not in set(z))
        subsets += [NamedSubset("Gamma1", gamma1), NamedSubset("Gamma2", gamma2),
                    NamedSubset("Gamma3", gamma3)]
    elif kind in gr.POLYHEDRAL_KINDS:
        counters = {2: 2, 4: 1, 6: 1, 8: 1}  # B-names start at B2
        prefix = {2: "B", 4: "C", 6: "D", 8: "D"}
        for cls in gr.maximal_abelian_classes(H):
            size = len(cls)
            subsets.append(NamedSubset(f"{prefix[size]}{counters[size]}", tuple(cls)))
            counters[size] += 1
    else:
        raise ValueError(f"unsupported family {H.family}")
    subsets.append(NamedSubset("full", everything))
    return subsets


def subsets_by_name(H: gr.FiniteGroup) -> dict[str, NamedSubset]:
    return {s.name: s for s in canonical_subsets(H)}


def expected_structure(family: gr.Family) -> tuple[int, Counter]:
    """Expected (universal count, clique-size multiset) of the full commuting
    graph for the nonabelian families."""
    if family.kind == gr.BINARY_DIHEDRAL:
        n = family.parameter
        return 2, Counter({2: n, 2 * n - 2: 1} if n > 2 else {2: n + 1})
    expected = {
        gr.BINARY_TETRAHEDRAL: Counter({2: 3, 4: 4}),
        gr.BINARY_OCTAHEDRAL: Counter({2: 6, 4: 4, 6: 3}),
        gr.BINARY_ICOSAHEDRAL: Counter({2: 15, 4: 10, 8: 6}),
    }
    if family.kind not in expected:
        raise ValueError(f"no structure statement for family {family}")
    return 2, expected[family.kind]


def verify_structure(H: gr.FiniteGroup) -> CliqueJoinForm:
    """Decompose the full commuting graph and check it matches the expected
    K_2 v (disjoint cliques) shape for this family."""
    want_c, want_sizes = expected_structure(H.family)
    form = decompose_clique_join(full_commuting_graph(H))
    got = (form.universal_count, Counter(form.clique_sizes))
    if got != (want_c, want_sizes):
        raise StructureMismatchError(str(H.family), (want_c, want_sizes), got)
    return form
