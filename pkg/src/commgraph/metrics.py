"""Distance invariants: radius/diameter, detour (longest-path) analogues,
and metric dimension.

Each invariant has two routes that are kept strictly apart and audited
against each other in the tests:

* exact oracles -- breadth-first search, branch-and-bound longest path, and
  ascending subset search for resolving sets -- valid on any small graph;
* structural solvers on clique-join forms K_c v (disjoint cliques), where a
  path is a chain of clique segments separated by universal vertices, so the
  optimum follows from counting how many cliques a plan may touch.

Every reported detour value is certified by an explicit path that is
re-validated edge by edge, and every reported dimension by an explicit
resolving set whose representation vectors are checked to be distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graphs import CliqueJoinForm, SimpleGraph

DETOUR_ORACLE_MAX_N = 24
DIMENSION_ORACLE_MAX_N = 20


class DisconnectedGraphError(ValueError):
    """Metric invariants here are only defined for connected graphs."""


class SizeBoundError(ValueError):
    """Exact oracle invoked above its size bound."""


class UnresolvedPairError(AssertionError):
    """The canonical resolving set of a clique-join form failed verification."""


# ---------------------------------------------------------------------------
# Shortest-path side

def shortest_distances(g: SimpleGraph) -> np.ndarray:
    """All-pairs shortest distances by BFS; raises on disconnected input."""
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int64)
    for source in range(n):
        dist[source, source] = 0
        frontier = [source]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if dist[source, v] < 0:
                        dist[source, v] = d
                        nxt.append(v)
            frontier = nxt
    if (dist < 0).any():
        raise DisconnectedGraphError("graph is disconnected")
    return dist


def eccentricities(g: SimpleGraph) -> list[int]:
    return [int(e) for e in shortest_distances(g).max(axis=1)]


def radius(g: SimpleGraph) -> int:
    return min(eccentricities(g))


def diameter(g: SimpleGraph) -> int:
    return max(eccentricities(g))


# ---------------------------------------------------------------------------
# Detour oracle: branch-and-bound longest path

def _bitmasks(g: SimpleGraph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v):
            m |= 1 << u
        masks.append(m)
    return masks


def _reachable(masks: list[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start through `allowed` vertices."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            grow |= masks[v] & allowed & ~seen
        seen |= grow
        frontier = grow
    return seen


def detour_path_oracle(g: SimpleGraph, a: int, b: int,
                       max_n: int = DETOUR_ORACLE_MAX_N) -> tuple[int, list[int]]:
    """Exact longest simple a-b path (edge count, vertex list).

    Exhaustive DFS pruned by: the target must stay reachable; visiting
    higher-degree neighbours first; bound used + reachable <= best; and
    collapsing interchangeable candidates (vertices whose neighbourhoods
    agree outside the pair, within the unvisited set) to one representative.
    """
    if g.n > max_n:
        raise SizeBoundError(f"longest-path oracle limited to {max_n} vertices")
    if a == b:
        raise ValueError("detour distance needs two distinct endpoints")
    masks = _bitmasks(g)
    degrees = g.degrees()
    full = (1 << g.n) - 1
    best_len = -1
    best_path: list[int] = []
    path = [a]

    def dfs(current: int, visited: int) -> None:
        nonlocal best_len, best_path
        allowed = full & ~visited
        reach = _reachable(masks, current, allowed)
        if not (reach >> b) & 1:
            return
        used = len(path)
        if used + bin(reach & allowed).count("1") - 1 <= best_len:
            return
        cand_mask = masks[current] & allowed
        candidates = []
        m = cand_mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            candidates.append(v)
        # Collapse twin candidates (never the target endpoint).
        reps = []
        for v in candidates:
            if v == b:
                continue
            dup = False
            for u in reps:
                outside = allowed & ~(1 << u) & ~(1 << v)
                if (masks[u] ^ masks[v]) & outside == 0:
                    dup = True
                    break
            if not dup:
                reps.append(v)
        if (cand_mask >> b) & 1:
            length = used  # edges = vertices - 1 + the step to b
            if length > best_len:
                best_len = length
                best_path = path + [b]
        reps.sort(key=lambda v: (-degrees[v], v))
        for v in reps:
            path.append(v)
            dfs(v, visited | (1 << v))
            path.pop()

    dfs(a, 1 << a)
    if best_len < 0:
        raise DisconnectedGraphError(f"no path between {a} and {b}")
    _validate_path(g, best_path, a, b, best_len)
    return best_len, best_path


def detour_distance_oracle(g: SimpleGraph, a: int, b: int,
                           max_n: int = DETOUR_ORACLE_MAX_N) -> int:
    return detour_path_oracle(g, a, b, max_n)[0]


def _validate_path(g: SimpleGraph, path: list[int], a: int, b: int, length: int) -> None:
    if len(path) != len(set(path)) or path[0] != a or path[-1] != b:
        raise AssertionError(f"invalid witness path {path}")
    if len(path) - 1 != length:
        raise AssertionError(f"witness path length {len(path) - 1} != claimed {length}")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise AssertionError(f"witness path uses non-edge ({u}, {v})")


# ---------------------------------------------------------------------------
# Detour on clique-join forms

def _form_has_edge(form: CliqueJoinForm, u: int, v: int) -> bool:
    au, av = form.vertex_assignment[u], form.vertex_assignment[v]
    return u != v and (au == -1 or av == -1 or au == av)


def _validate_form_path(form: CliqueJoinForm, path: list[int], a: int, b: int,
                        length: int) -> None:
    if len(path) != len(set(path)) or path[0] != a or path[-1] != b:
        raise AssertionError(f"invalid witness path {path}")
    if len(path) - 1 != length:
        raise AssertionError(f"witness path length {len(path) - 1} != claimed {length}")
    for u, v in zip(path, path[1:]):
        if not _form_has_edge(form, u, v):
            raise AssertionError(f"witness path uses non-edge ({u}, {v})")


def _pick_cliques(form: CliqueJoinForm, forced: list[int], cap: int) -> list[int]:
    """Forced cliques plus the largest others, at most cap cliques in all."""
    if cap < len(forced):
        raise DisconnectedGraphError("endpoints lie in separate cliques with no universal vertex")
    others = [q for q in range(len(form.clique_sizes)) if q not in forced]
    others.sort(key=lambda q: (-form.clique_sizes[q], q))
    return forced + others[:cap - len(forced)]


def detour_structural_with_path(form: CliqueJoinForm, a: int,
                                b: int) -> tuple[int, list[int]]:
    """Longest a-b path in K_c v (disjoint cliques) by plan counting.

    A simple path is a sequence of clique segments separated by universal
    vertices, so with both endpoints placed it may touch at most c-1 / c /
    c+1 cliques (two universal ends / one / none), every touched clique can
    be exhausted, and all c universal vertices can be absorbed into the
    separating runs.  The returned optimum is certified by an explicitly
    constructed path.
    """
    if a == b:
        raise ValueError("detour distance needs two distinct endpoints")
    assign = form.vertex_assignment
    c = form.universal_count
    ta, tb = assign[a], assign[b]
    sizes = form.clique_sizes
    universals = [u for u in form.universal_vertices() if u not in (a, b)]

    def clique_members(q: int, first: int | None = None, last: int | None = None) -> list[int]:
        members = [v for v in form.cliques[q] if v != first and v != last]
        head = [first] if first is not None else []
        tail = [last] if last is not None else []
        return head + members + tail

    def assemble(chosen: list[int]) -> list[int]:
        """Lay out the chosen cliques (traversal order, endpoint cliques
        already first/last) with single-universal separators; leftover
        universals run next to a universal endpoint, or inside the first
        separator when both endpoints sit in cliques."""
        if ta == tb and ta != -1 and not chosen:
            return clique_members(ta, first=a, last=b)
        if ta == -1 and tb == -1:
            segments = [clique_members(q) for q in chosen]
        elif ta == -1:
            segments = [clique_members(q) for q in chosen[:-1]] \
                + [clique_members(chosen[-1], last=b)]
        elif tb == -1:
            segments = [clique_members(chosen[0], first=a)] \
                + [clique_members(q) for q in chosen[1:]]
        elif ta == tb:
            head = [a] + [v for v in form.cliques[ta] if v not in (a, b)]
            segments = [head] + [clique_members(q) for q in chosen[1:]] + [[b]]
        else:
            segments = [clique_members(chosen[0], first=a)] \
                + [clique_members(q) for q in chosen[1:-1]] \
                + [clique_members(chosen[-1], last=b)]

        k = len(segments)
        if k == 0:
            return [a] + universals + [b]
        spare = len(universals) - (k - 1)
        if spare < 0:
            raise AssertionError("plan needs more universal separators than available")
        # gap[i] universals are inserted before segment i; gap[k] after the last.
        gap = [0] + [1] * (k - 1) + [0]
        if ta == -1:
            gap[0] = spare
        elif tb == -1:
            gap[k] = spare
        else:
            gap[1] += spare
        pool = list(universals)
        path = [a] if ta == -1 else []
        for i, seg in enumerate(segments):
            path += [pool.pop() for _ in range(gap[i])]
            path += seg
        path += [pool.pop() for _ in range(gap[k])]
        if tb == -1:
            path.append(b)
        return path

    plans: list[tuple[int, list[int]]] = []
    if ta == -1 and tb == -1:
        if c < 2:
            raise ValueError("two universal endpoints need at least two universal vertices")
        chosen = _pick_cliques(form, [], c - 1)
        total = c + sum(sizes[q] for q in chosen)
        plans.append((total, chosen))
    elif ta == -1 or tb == -1:
        q = tb if ta == -1 else ta
        chosen = _pick_cliques(form, [q], c)
        if ta == -1:
            chosen = [x for x in chosen if x != q] + [q]
        total = c + sum(sizes[x] for x in chosen)
        plans.append((total, chosen))
    elif ta == tb:
        plans.append((sizes[ta], []))
        if c >= 1:
            chosen = _pick_cliques(form, [ta], c)
            total = c + sum(sizes[x] for x in chosen)
            plans.append((total, chosen))
    else:
        chosen = _pick_cliques(form, [ta, tb], c + 1)
        chosen = [ta] + [x for x in chosen if x not in (ta, tb)] + [tb]
        total = c + sum(sizes[x] for x in chosen)
        plans.append((total, chosen))

    best_total, best_chosen = max(plans, key=lambda p: p[0])
    path = assemble(best_chosen)
    value = len(path) - 1
    if value != best_total - 1:
        raise AssertionError(f"constructed path length {value} != planned {best_total - 1}")
    _validate_form_path(form, path, a, b, value)
    return value, path


def detour_structural(form: CliqueJoinForm, a: int, b: int) -> int:
    return detour_structural_with_path(form, a, b)[0]


def _type_representatives(form: CliqueJoinForm, exclude: int | None = None) -> list[int]:
    """One vertex per structural type: a universal vertex plus one member of
    each clique; with `exclude` given, same-type alternatives are used."""
    reps: list[int] = []
    unis = form.universal_vertices()
    for u in unis:
        if u != exclude:
            reps.append(u)
            break
    for members in form.cliques:
        for v in members:
            if v != exclude:
                reps.append(v)
                break
    return reps


def detour_eccentricity_structural(form: CliqueJoinForm, v: int) -> int:
    targets = _type_representatives(form, exclude=v)
    return max((detour_structural(form, v, b) for b in targets), default=0)


def representative_pairs(form: CliqueJoinForm) -> list[tuple[int, int]]:
    """One vertex pair per orbit of the clique-join automorphism group
    (universals, vertices within a clique, and equal-size cliques are all
    interchangeable).  Detour distance is constant on these orbits, so
    auditing the representatives audits every pair."""
    pairs: list[tuple[int, int]] = []
    unis = form.universal_vertices()
    if len(unis) >= 2:
        pairs.append((unis[0], unis[1]))
    by_size: dict[int, list[int]] = {}
    for qi in range(len(form.cliques)):
        by_size.setdefault(form.clique_sizes[qi], []).append(qi)
    for size in sorted(by_size):
        members = form.cliques[by_size[size][0]]
        if unis:
            pairs.append((unis[0], members[0]))
        if size >= 2:
            pairs.append((members[0], members[1]))
    sizes_sorted = sorted(by_size)
    for i, s1 in enumerate(sizes_sorted):
        for s2 in sizes_sorted[i:]:
            if s1 == s2:
                same = by_size[s1]
                if len(same) >= 2:
                    pairs.append((form.cliques[same[0]][0], form.cliques[same[1]][0]))
            else:
                pairs.append((form.cliques[by_size[s1][0]][0], form.cliques[by_size[s2][0]][0]))
    return pairs


def detour_profile_structural(form: CliqueJoinForm) -> dict[int, int]:
    """Detour eccentricity for every vertex, computed once per clique (the
    solver's output only depends on the endpoint types)."""
    cache: dict[int, int] = {}
    out: dict[int, int] = {}
    for v in range(form.n):
        t = form.vertex_assignment[v]
        if t not in cache:
            cache[t] = detour_eccentricity_structural(form, v)
        out[v] = cache[t]
    return out


# ---------------------------------------------------------------------------
# Metric dimension

def twin_classes(g: SimpleGraph) -> list[list[int]]:
    """Vertex classes with identical neighbourhoods (up to each other); any
    resolving set must contain all but one vertex of each class."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    open_keys: dict[bytes, int] = {}
    closed_keys: dict[bytes, int] = {}
    for v in range(g.n):
        row = g.adj[v].copy()
        open_key = row.tobytes()
        row[v] = True
        closed_key = row.tobytes()
        if open_key in open_keys:
            union(v, open_keys[open_key])
        else:
            open_keys[open_key] = v
        if closed_key in closed_keys:
            union(v, closed_keys[closed_key])
        else:
            closed_keys[closed_key] = v
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda cls: cls[0])


def _resolves(dist: np.ndarray, subset: tuple[int, ...]) -> bool:
    vectors = dist[:, subset]
    return len({tuple(row) for row in vectors.tolist()}) == dist.shape[0]


def metric_dimension_oracle(g: SimpleGraph,
                            max_n: int = DIMENSION_ORACLE_MAX_N) -> tuple[int, tuple[int, ...]]:
    """Exact metric dimension with a witness basis: ascending subset search,
    restricted by the twin-class lower bound."""
    if g.n > max_n:
        raise SizeBoundError(f"metric dimension oracle limited to {max_n} vertices")
    if g.n == 1:
        return 0, ()
    dist = shortest_distances(g)
    twins = twin_classes(g)
    lower = max(sum(len(t) - 1 for t in twins), 1)
    mandatory_miss = {t[0]: frozenset(t) for t in twins if len(t) > 1}
    for size in range(lower, g.n):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            if any(len(members - chosen) > 1 for members in mandatory_miss.values()):
                continue
            if _resolves(dist, subset):
                return size, subset
    return g.n - 1, tuple(range(g.n - 1))


def _form_distance(form: CliqueJoinForm, u: int, v: int) -> int:
    if u == v:
        return 0
    if _form_has_edge(form, u, v):
        return 1
    return 2


def canonical_resolving_set(form: CliqueJoinForm) -> list[int]:
    """All but one universal vertex, all but one member of every clique of
    size >= 2, and all but one of the singleton cliques (mutually
    non-adjacent twins)."""
    chosen = list(form.universal_vertices()[1:])
    singletons = []
    for members in form.cliques:
        if len(members) == 1:
            singletons.append(members[0])
        else:
            chosen += list(members[1:])
    chosen += singletons[1:]
    return sorted(chosen)


def metric_dimension_structural(form: CliqueJoinForm) -> int:
    """(c-1) + sum of (clique size - 1), singleton cliques pooled as one twin
    class.  The value is only returned after the canonical resolving set is
    verified; a failure is a falsification signal, not a fallback."""
    if form.universal_count == 0 and len(form.clique_sizes) > 1:
        raise DisconnectedGraphError("clique union without universal vertices is disconnected")
    chosen = canonical_resolving_set(form)
    vectors: dict[tuple[int, ...], int] = {}
    for v in range(form.n):
        vec = tuple(_form_distance(form, v, u) for u in chosen)
        if vec in vectors:
            raise UnresolvedPairError(
                f"vertices {vectors[vec]} and {v} share the representation {vec}")
        vectors[vec] = v
    return len(chosen)


# ---------------------------------------------------------------------------
# Full report

@dataclass(frozen=True)
class MetricReport:
    radius: int
    diameter: int
    detour_radius_std: int
    detour_center_pair: int | None
    detour_diameter: int
    metric_dimension: int
    eccentricities: tuple[int, ...]
    detour_eccentricities: tuple[int, ...]
    basis: tuple[int, ...]
    witness_paths: dict[str, tuple[int, ...]]

    def to_json_dict(self) -> dict:
        return {
            "radius": self.radius,
            "diameter": self.diameter,
            "detour_radius_std": self.detour_radius_std,
            "detour_center_pair": self.detour_center_pair,
            "detour_diameter": self.detour_diameter,
            "metric_dimension": self.metric_dimension,
            "basis": list(self.basis),
            "witness_paths": {k: list(v) for k, v in self.witness_paths.items()},
            "eccentricities": list(self.eccentricities),
            "detour_eccentricities": list(self.detour_eccentricities),
        }


def full_report(g: SimpleGraph, audit_oracle_max: int = 12) -> MetricReport:
    """Assemble every invariant for a connected graph.

    Clique-join graphs use the structural solvers (with oracle audits when
    the graph is small enough); other graphs fall back to the exact oracles
    outright, subject to their size bounds.
    """
    from .graphs import decompose_clique_join, NotCliqueJoinError

    dist = shortest_distances(g)
    ecc = tuple(int(e) for e in dist.max(axis=1))
    witness: dict[str, tuple[int, ...]] = {}

    if g.n == 1:
        return MetricReport(0, 0, 0, None, 0, 0, (0,), (0,), (), {})

    form = None
    try:
        form = decompose_clique_join(g)
        if form.universal_count == 0:
            form = None
    except NotCliqueJoinError:
        form = None

    if form is not None:
        det_ecc_map = detour_profile_structural(form)
        det_ecc = tuple(det_ecc_map[v] for v in range(g.n))
        det_diam = max(det_ecc)
        det_rad = min(det_ecc)
        center_pair = None
        unis = form.universal_vertices()
        if form.universal_count == 2:
            center_pair, pair_path = detour_structural_with_path(form, unis[0], unis[1])
            _validate_path(g, pair_path, unis[0], unis[1], center_pair)
            witness["detour_center_pair"] = tuple(pair_path)
        diam_v = max(range(g.n), key=lambda v: det_ecc[v])
        rad_v = min(range(g.n), key=lambda v: det_ecc[v])
        for name, v in (("detour_diameter", diam_v), ("detour_radius_std", rad_v)):
            best = None
            for b in _type_representatives(form, exclude=v):
                value, path = detour_structural_with_path(form, v, b)
                if best is None or value > best[0]:
                    best = (value, path)
            _validate_path(g, best[1], v, best[1][-1], best[0])
            witness[name] = tuple(best[1])
        try:
            dim = metric_dimension_structural(form)
            basis = tuple(canonical_resolving_set(form))
        except UnresolvedPairError:
            if g.n > DIMENSION_ORACLE_MAX_N:
                raise
            dim, basis = metric_dimension_oracle(g)
        if g.n <= audit_oracle_max:
            if detour_distance_oracle(g, diam_v, witness["detour_diameter"][-1]) != det_diam:
                raise AssertionError("structural detour diameter disagrees with the oracle")
            if g.n <= DIMENSION_ORACLE_MAX_N and metric_dimension_oracle(g)[0] != dim:
                raise AssertionError("structural metric dimension disagrees with the oracle")
    else:
        det_ecc_list = []
        for v in range(g.n):
            best_val, best_path = -1, []
            for b in range(g.n):
                if b == v:
                    continue
                value, path = detour_path_oracle(g, v, b)
                if value > best_val:
                    best_val, best_path = value, path
            det_ecc_list.append((best_val, best_path))
        det_ecc = tuple(val for val, _ in det_ecc_list)
        det_diam = max(det_ecc)
        det_rad = min(det_ecc)
        witness["detour_diameter"] = tuple(det_ecc_list[max(range(g.n), key=lambda v: det_ecc[v])][1])
        witness["detour_radius_std"] = tuple(det_ecc_list[min(range(g.n), key=lambda v: det_ecc[v])][1])
        center_pair = None
        dim, basis = metric_dimension_oracle(g)

    if not _resolves(dist, tuple(basis)) and g.n > 1:
        raise UnresolvedPairError("reported basis fails to resolve the graph")
    return MetricReport(int(dist.max(axis=1).min()), int(dist.max()), det_rad, center_pair,
                        det_diam, dim, ecc, det_ecc, tuple(basis), witness)
