"""The finite subgroups of SL(2,C) as concrete multiplication tables.

Five families: cyclic C_n, binary dihedral BD_{4n}, and the binary
tetrahedral / octahedral / icosahedral groups of orders 24 / 48 / 120.
Cyclic and binary dihedral groups use closed-form normal forms; the three
exceptional groups are generated as unit quaternions over Q(sqrt2, sqrt5)
and closed under multiplication, so every relation check is exact.

Element indexing is deterministic:
  * cyclic n:            index a         <-> g^a
  * binary dihedral n:   index a         <-> a^a        (0 <= a < 2n)
                         index 2n + a    <-> a^a * b
  * binary polyhedral:   breadth-first closure order from (r, s, t),
                         starting at the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .fields import FieldElem
from .quaternion import ExtQuaternion, I, MINUS_ONE, ONE

CYCLIC = "cyclic"
BINARY_DIHEDRAL = "binary_dihedral"
BINARY_TETRAHEDRAL = "binary_tetrahedral"
BINARY_OCTAHEDRAL = "binary_octahedral"
BINARY_ICOSAHEDRAL = "binary_icosahedral"

POLYHEDRAL_KINDS = (BINARY_TETRAHEDRAL, BINARY_OCTAHEDRAL, BINARY_ICOSAHEDRAL)
POLYHEDRAL_ORDERS = {BINARY_TETRAHEDRAL: 24, BINARY_OCTAHEDRAL: 48, BINARY_ICOSAHEDRAL: 120}


class GroupConstructionError(ValueError):
    """Raised when a family parameter is invalid or a closure misbehaves."""


@dataclass(frozen=True)
class Family:
    kind: str
    parameter: int | None = None

    def __str__(self) -> str:
        if self.parameter is None:
            return self.kind
        return f"{self.kind}({self.parameter})"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    mul: np.ndarray           # order x order table of element indices
    identity: int
    inv: np.ndarray           # index of each element's inverse
    family: Family
    element_descriptions: tuple[str, ...]
    # Only set for the binary polyhedral families.
    quaternions: tuple[ExtQuaternion, ...] | None = None
    generators: tuple[int, ...] = field(default=())

    def elements(self) -> range:
        return range(self.order)

    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def describe(self, x: int) -> str:
        return self.element_descriptions[x]


def _freeze(mul: np.ndarray) -> np.ndarray:
    mul.setflags(write=False)
    return mul


def _inverses(mul: np.ndarray, identity: int) -> np.ndarray:
    inv = np.argmax(mul == identity, axis=1).astype(mul.dtype)
    inv.setflags(write=False)
    return inv


def build_cyclic(n: int) -> FiniteGroup:
    """Z/n with addition; index a stands for g^a."""
    if n < 1:
        raise GroupConstructionError(f"cyclic order must be >= 1, got {n}")
    idx = np.arange(n, dtype=np.int32)
    mul = _freeze((idx[:, None] + idx[None, :]) % n)
    names = tuple("1" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(n))
    return FiniteGroup(n, mul, 0, _inverses(mul, 0), Family(CYCLIC, n), names)


def build_binary_dihedral(n: int) -> FiniteGroup:
    """Order 4n group <a, b | a^(2n) = b^4 = 1, a^n = b^2, b a = a^-1 b>."""
    if n < 2:
        raise GroupConstructionError(f"binary dihedral parameter must be >= 2, got {n}")
    order = 4 * n
    exps = np.arange(order, dtype=np.int32) % (2 * n)
    flags = np.arange(order, dtype=np.int32) // (2 * n)
    a1, b1 = exps[:, None], flags[:, None]
    a2, b2 = exps[None, :], flags[None, :]
    # (a^a1 b^b1)(a^a2 b^b2) = a^(a1 + (-1)^b1 a2 + n*b1*b2) b^(b1+b2 mod 2)
    res_exp = (a1 + np.where(b1 == 1, -a2, a2) + n * (b1 * b2)) % (2 * n)
    res_flag = (b1 + b2) % 2
    mul = _freeze((res_exp + 2 * n * res_flag).astype(np.int32))

    def name(a: int, b: int) -> str:
        head = "1" if a == 0 else ("a" if a == 1 else f"a^{a}")
        if not b:
            return head
        return "b" if a == 0 else f"{head} b"

    names = tuple(name(a, 0) for a in range(2 * n)) + tuple(name(a, 1) for a in range(2 * n))
    return FiniteGroup(order, mul, 0, _inverses(mul, 0), Family(BINARY_DIHEDRAL, n), names)


def polyhedral_generators(kind: str) -> tuple[ExtQuaternion, ExtQuaternion, ExtQuaternion]:
    """Concrete unit quaternions (r, s, t) with r^2 = s^3 = t^n = rst = -1."""
    half = Fraction(1, 2)
    s = ExtQuaternion.of(half, half, half, half)
    if kind == BINARY_TETRAHEDRAL:
        r = I
        t = ExtQuaternion.of(half, half, -half, half)
    elif kind == BINARY_OCTAHEDRAL:
        inv_sqrt2 = FieldElem.of(0, Fraction(1, 2))      # sqrt2 / 2
        r = ExtQuaternion.of(0, inv_sqrt2, inv_sqrt2, 0)
        t = ExtQuaternion.of(inv_sqrt2, inv_sqrt2, 0, 0)
    elif kind == BINARY_ICOSAHEDRAL:
        phi = FieldElem.golden_ratio()
        t = ExtQuaternion(phi * half, phi.inverse() * half, FieldElem.rational(half),
                          FieldElem.rational(0))
        r = -(s * t).inverse()
    else:
        raise GroupConstructionError(f"unknown binary polyhedral kind: {kind!r}")
    return r, s, t


def _check_polyhedral_relations(kind: str, r: ExtQuaternion, s: ExtQuaternion,
                                t: ExtQuaternion) -> None:
    n = {BINARY_TETRAHEDRAL: 3, BINARY_OCTAHEDRAL: 4, BINARY_ICOSAHEDRAL: 5}[kind]
    checks = {"r^2": r * r, "s^3": s ** 3, f"t^{n}": t ** n, "rst": r * s * t}
    for label, value in checks.items():
        if value != MINUS_ONE:
            raise GroupConstructionError(f"{kind}: relation {label} = -1 fails, got {value}")
    for name, q in (("r", r), ("s", s), ("t", t)):
        if not q.is_unit():
            raise GroupConstructionError(f"{kind}: generator {name} is not a unit quaternion")


def build_binary_polyhedral(kind: str) -> FiniteGroup:
    """Close the generator quaternions under multiplication.

    The full Cayley table is filled column by column: each element y arises
    as parent(y) * g for a generator g discovered during the closure, so
    x*y = (x*parent(y)) * g needs only the right-multiplication permutations
    of the generators, not order^2 quaternion products.
    """
    r, s, t = polyhedral_generators(kind)
    _check_polyhedral_relations(kind, r, s, t)
    expected = POLYHEDRAL_ORDERS[kind]

    gens = (r, s, t)
    elems: list[ExtQuaternion] = [ONE]
    index: dict[ExtQuaternion, int] = {ONE: 0}
    parent: list[tuple[int, int]] = [(-1, -1)]  # (parent index, generator slot)
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for e in frontier:
            q = elems[e]
            for slot, g in enumerate(gens):
                prod = q * g
                if prod not in index:
                    if len(elems) > expected:
                        raise GroupConstructionError(
                            f"{kind}: closure exceeded expected order {expected}")
                    index[prod] = len(elems)
                    elems.append(prod)
                    parent.append((e, slot))
                    nxt.append(index[prod])
        frontier = nxt
    order = len(elems)
    if order != expected:
        raise GroupConstructionError(
            f"{kind}: closure stabilized at {order}, expected {expected}")

    right_by_gen = np.empty((3, order), dtype=np.int32)
    for slot, g in enumerate(gens):
        for e, q in enumerate(elems):
            right_by_gen[slot, e] = index[q * g]

    mul = np.empty((order, order), dtype=np.int32)
    mul[:, 0] = np.arange(order, dtype=np.int32)
    for y in range(1, order):
        p, slot = parent[y]
        mul[:, y] = right_by_gen[slot][mul[:, p]]
    mul = _freeze(mul)

    names = tuple(str(q) for q in elems)
    gen_indices = tuple(index[g] for g in gens)
    return FiniteGroup(order, mul, 0, _inverses(mul, 0), Family(kind), names,
                       quaternions=tuple(elems), generators=gen_indices)


@lru_cache(maxsize=None)
def group_for(kind: str, parameter: int | None = None) -> FiniteGroup:
    """Cached constructor used throughout the package and the CLI."""
    if kind == CYCLIC:
        return build_cyclic(int(parameter))
    if kind == BINARY_DIHEDRAL:
        return build_binary_dihedral(int(parameter))
    if kind in POLYHEDRAL_KINDS:
        if parameter is not None:
            raise GroupConstructionError(f"{kind} takes no parameter")
        return build_binary_polyhedral(kind)
    raise GroupConstructionError(f"unknown family kind: {kind!r}")


def commutation_matrix(H: FiniteGroup) -> np.ndarray:
    """Boolean matrix with entry (x, y) true iff xy = yx."""
    return np.asarray(H.mul == H.mul.T)


def commutes(H: FiniteGroup, x: int, y: int) -> bool:
    return bool(H.mul[x, y] == H.mul[y, x])


def center(H: FiniteGroup) -> list[int]:
    comm = commutation_matrix(H)
    return [int(v) for v in np.flatnonzero(comm.all(axis=1))]


def centralizer(H: FiniteGroup, x: int) -> list[int]:
    comm = commutation_matrix(H)
    return [int(v) for v in np.flatnonzero(comm[x])]


def conjugacy_classes(H: FiniteGroup) -> list[list[int]]:
    """Partition of the elements into conjugacy classes, sorted by their
    smallest member (so the identity class comes first)."""
    all_g = np.arange(H.order)
    seen = np.zeros(H.order, dtype=bool)
    classes: list[list[int]] = []
    for x in range(H.order):
        if seen[x]:
            continue
        orbit = np.unique(H.mul[H.mul[all_g, x], H.inv[all_g]])
        seen[orbit] = True
        classes.append([int(v) for v in orbit])
    classes.sort(key=lambda cls: cls[0])
    return classes


def maximal_abelian_classes(H: FiniteGroup) -> list[list[int]]:
    """Partition of H minus its center into the sets centralizer(x) \\ Z(H).

    For the nonabelian SL(2,C) families these are exactly the maximal
    mutually-commuting subsets; the function verifies the partition and the
    commutativity of each part, failing loudly otherwise.
    """
    comm = commutation_matrix(H)
    z = set(center(H))
    if len(z) == H.order:
        raise GroupConstructionError("maximal_abelian_classes requires a nonabelian group")
    remaining = [x for x in range(H.order) if x not in z]
    assigned: dict[int, int] = {}
    classes: list[list[int]] = []
    for x in remaining:
        if x in assigned:
            continue
        members = [int(v) for v in np.flatnonzero(comm[x]) if int(v) not in z]
        for m in members:
            if m in assigned:
                raise GroupConstructionError(
                    "centralizer-minus-center sets do not partition the non-central elements")
            assigned[m] = len(classes)
        sub = comm[np.ix_(members, members)]
        if not sub.all():
            raise GroupConstructionError(
                f"centralizer of element {x} minus the center is not commutative")
        classes.append(members)
    if len(assigned) != len(remaining):
        raise GroupConstructionError("classes missed some non-central element")
    classes.sort(key=lambda cls: (len(cls), cls[0]))
    return classes


def element_order(H: FiniteGroup, x: int) -> int:
    power, k = x, 1
    while power != H.identity:
        power = int(H.mul[power, x])
        k += 1
    return k


def check_group_axioms(H: FiniteGroup, rng: np.random.Generator | None = None) -> None:
    """Latin square, identity, inverse, and associativity checks.

    Associativity is checked exhaustively up to order 48 and on 10^4 random
    triples beyond that.
    """
    n = H.order
    mul = H.mul
    expected = np.arange(n)
    if not (np.array_equal(np.sort(mul, axis=0), expected[:, None] * np.ones(n, dtype=int))
            and np.array_equal(np.sort(mul, axis=1), np.ones(n, dtype=int)[:, None] * expected)):
        raise GroupConstructionError("multiplication table is not a Latin square")
    if not (np.array_equal(mul[H.identity], expected) and np.array_equal(mul[:, H.identity], expected)):
        raise GroupConstructionError("identity law fails")
    if not (np.array_equal(mul[expected, H.inv], np.full(n, H.identity))
            and np.array_equal(mul[H.inv, expected], np.full(n, H.identity))):
        raise GroupConstructionError("inverse law fails")
    if n <= 48:
        left = mul[mul, :]            # left[a, b, c] = (ab)c
        right = mul[:, mul]           # right[a, b, c] = a(bc)
        ok = np.array_equal(left, right)
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, 10_000))
        ok = np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])
    if not ok:
        raise GroupConstructionError("associativity fails")
