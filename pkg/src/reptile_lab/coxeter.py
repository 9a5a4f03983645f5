"""Edge-labeled complete graphs on 4 or 5 vertices and their combinatorics.

A diagram is a complete graph whose edges carry exact angle forms.  The
module provides label-preserving automorphism groups, orbit counting (with a
Burnside cross-check), richness tests, constraint-driven enumeration of
diagrams up to isomorphism, enumeration of abstract edge partitions, and
classification of single-label subgraphs against a small-graph catalog.

Sizes stay tiny (n <= 5, so at most 120 vertex permutations and 10 edges);
brute force over all permutations is exact and fast, and is used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from .angles import (AngleForm, RelationSet, EMPTY_RELATIONS, format_angle,
                     parse_angle)

Edge = tuple  # (i, j) with i < j
TriangleType = tuple  # three AngleForms sorted by sort_key


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def all_edges(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def triangle_type_of(labels: Iterable[AngleForm]) -> TriangleType:
    return tuple(sorted(labels, key=lambda f: f.sort_key()))


class CoxeterDiagram:
    """Complete graph on named vertices with canonical angle-form edge labels."""

    def __init__(self, vertices: Sequence[str], labels: dict,
                 relations: RelationSet = EMPTY_RELATIONS):
        self.vertices = tuple(vertices)
        self.relations = relations
        n = len(self.vertices)
        index = {v: i for i, v in enumerate(self.vertices)}
        canon = {}
        for key, form in labels.items():
            a, b = tuple(key)
            i, j = (index[a], index[b]) if a in index else (a, b)
            canon[_edge(i, j)] = relations.normalize(form)
        if set(canon) != set(all_edges(n)):
            raise ValueError("labels must cover every edge exactly once")
        self.labels = canon

    @property
    def n(self) -> int:
        return len(self.vertices)

    def label(self, a, b) -> AngleForm:
        if isinstance(a, str):
            a = self.vertices.index(a)
            b = self.vertices.index(b)
        return self.labels[_edge(a, b)]

    def edges(self) -> list:
        return all_edges(self.n)

    def triangles(self) -> list:
        return list(combinations(range(self.n), 3))

    def triangle_type(self, tri) -> TriangleType:
        i, j, k = tri
        return triangle_type_of(
            (self.labels[_edge(i, j)], self.labels[_edge(i, k)], self.labels[_edge(j, k)]))

    def triangles_of_type(self, ttype: TriangleType) -> list:
        return [t for t in self.triangles() if self.triangle_type(t) == ttype]

    def label_set(self) -> set:
        return set(self.labels.values())

    # -- symmetry ----------------------------------------------------------

    def automorphisms(self) -> list:
        """All vertex permutations preserving every edge label."""
        out = []
        es = self.edges()
        for p in permutations(range(self.n)):
            if all(self.labels[_edge(p[i], p[j])] == self.labels[(i, j)]
                   for i, j in es):
                out.append(p)
        return out

    def canonical_key(self):
        """Minimum label matrix over all vertex orders; equal iff isomorphic."""
        ids = {}
        for f in sorted(self.label_set(), key=lambda f: f.sort_key()):
            ids[f] = len(ids)
        es = self.edges()
        best = None
        for p in permutations(range(self.n)):
            key = tuple(ids[self.labels[_edge(p[i], p[j])]] for i, j in es)
            if best is None or key < best:
                best = key
        # the key alone identifies the labeled graph only up to renaming of
        # labels; append the label forms in id order to pin them
        forms = tuple(f.coeffs for f, _ in sorted(ids.items(), key=lambda kv: kv[1]))
        return (best, forms)

    # -- fixture IO ----------------------------------------------------------

    @staticmethod
    def from_fixture(data: dict) -> "CoxeterDiagram":
        relations = RelationSet.of(*((sym, parse_angle(lit))
                                     for sym, lit in data.get("relations", [])))
        labels = {}
        for key, lit in data["edges"].items():
            a, b = key.split(",")
            labels[(a.strip(), b.strip())] = parse_angle(lit)
        return CoxeterDiagram(data["vertices"], labels, relations)

    def to_fixture(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "relations": [[sym, format_angle(f)] for sym, f in self.relations.rules],
            "edges": {f"{self.vertices[i]},{self.vertices[j]}": format_angle(f)
                      for (i, j), f in sorted(self.labels.items())},
        }


# ---------------------------------------------------------------------------
# Group actions, orbits, Burnside
# ---------------------------------------------------------------------------


def _compose(p, q):
    return tuple(p[x] for x in q)


def is_group(perms: Sequence[tuple]) -> bool:
    s = set(perms)
    if not s:
        return False
    n = len(next(iter(s)))
    if tuple(range(n)) not in s:
        return False
    for p in s:
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        if tuple(inv) not in s:
            return False
        for q in s:
            if _compose(p, q) not in s:
                return False
    return True


class NotAGroupError(ValueError):
    pass


def act_on_vertex_set(perm, xs: frozenset) -> frozenset:
    return frozenset(perm[x] for x in xs)


def orbit_partition(group: Sequence[tuple], elements: Sequence, act: Callable) -> list:
    """Orbits of the action, as a list of frozensets covering the elements."""
    remaining = set(elements)
    out = []
    while remaining:
        x = remaining.pop()
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in group:
                z = act(g, y)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        remaining -= orbit
        out.append(frozenset(orbit))
    return sorted(out, key=lambda o: sorted(map(repr, o)))


def burnside_count(group: Sequence[tuple], elements: Sequence, act: Callable) -> int:
    """Orbit count via (1/|G|) * sum of fixed points; validates the group."""
    if not is_group(group):
        raise NotAGroupError("input permutations do not form a group")
    total = sum(sum(1 for x in elements if act(g, x) == x) for g in group)
    count = Fraction(total, len(group))
    assert count.denominator == 1
    return int(count)


def pair_orbit_bound(m: int) -> int:
    """Upper bound for pair orbits of a nontrivial faithful action on m points."""
    if m < 2:
        raise ValueError("need m >= 2")
    return comb(m, 2) - m + 2


def orbits(diagram: CoxeterDiagram, family: str = "triangles",
           ttype: Optional[TriangleType] = None) -> list:
    """Orbit partition of vertices / edges / triangles-of-type under Aut."""
    group = diagram.automorphisms()
    if family == "vertices":
        elements = list(range(diagram.n))
        act = lambda g, x: g[x]
    elif family == "edges":
        elements = [frozenset(e) for e in diagram.edges()]
        act = act_on_vertex_set
    elif family == "triangles":
        tris = diagram.triangles()
        if ttype is not None:
            tris = [t for t in tris if diagram.triangle_type(t) == ttype]
        elements = [frozenset(t) for t in tris]
        act = act_on_vertex_set
    else:
        raise ValueError(f"unknown family {family!r}")
    parts = orbit_partition(group, elements, act)
    # Burnside cross-check on every call; cheap at this size.
    assert burnside_count(group, elements, act) == len(parts)
    return parts


def is_rich(diagram: CoxeterDiagram, ttype: TriangleType) -> bool:
    """At least four orbits of triangles of the given type."""
    return len(orbits(diagram, "triangles", ttype)) >= 4


def edge_orbit_count_transitive(diagram: CoxeterDiagram, label: AngleForm) -> bool:
    """True iff Aut acts transitively on the edges carrying `label`."""
    label = diagram.relations.normalize(label)
    group = diagram.automorphisms()
    es = [frozenset(e) for e in diagram.edges() if diagram.labels[e] == label]
    return len(orbit_partition(group, es, act_on_vertex_set)) == 1


def subgroups_upto_two_generators(n: int = 5) -> list:
    """All subgroups of the symmetric group on n points generated by <= 2 elements.

    Uses a precomputed Cayley table over element indices; a subgroup closure
    is a breadth-first walk from the identity multiplying by the generators
    (finiteness makes inverses come for free).
    """
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = [[index[_compose(perms[a], perms[b])] for b in range(size)]
             for a in range(size)]
    ident = index[tuple(range(n))]

    def closure(gens):
        els = {ident}
        frontier = [ident]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = table[x][g]
                if y not in els:
                    els.add(y)
                    frontier.append(y)
        return frozenset(els)

    seen = {}
    cyclic = {}
    for g in range(size):
        grp = closure([g])
        cyclic[g] = grp
        seen[grp] = None
    for a in range(size):
        grp_a = cyclic[a]
        for b in range(a + 1, size):
            if b in grp_a:
                continue  # <a, b> == <a>
            seen[closure([a, b])] = None
    return sorted((frozenset(perms[i] for i in grp) for grp in seen),
                  key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# Single-label subgraph classification
# ---------------------------------------------------------------------------


def _graph_cert(edges: Sequence[Edge]) -> tuple:
    """Canonical certificate of a graph on its non-isolated vertices."""
    support = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(support)}
    es = [frozenset((idx[a], idx[b])) for a, b in edges]
    k = len(support)
    best = None
    for p in permutations(range(k)):
        key = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in (tuple(e) for e in es)))
        if best is None or key < best:
            best = key
    return (k, best)


def _catalog() -> dict:
    def path(k):
        return [(i, i + 1) for i in range(k - 1)]

    def cycle(k):
        return path(k) + [(0, k - 1)]

    def star(k):
        return [(0, i) for i in range(1, k + 1)]

    def complete(k):
        return [(i, j) for i in range(k) for j in range(i + 1, k)]

    named = {
        "empty": [],
        "P2": path(2),
        "P3": path(3),
        "P4": path(4),
        "P5": path(5),
        "P2+P2": [(0, 1), (2, 3)],
        "P2+P3": [(0, 1), (2, 3), (3, 4)],
        "K1,3": star(3),
        "K1,4": star(4),
        "fork": [(0, 1), (0, 2), (0, 3), (1, 4)],
        "triangle": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "K2,3": [(i, j) for i in range(2) for j in range(2, 5)],
        "K4": complete(4),
        "K5": complete(5),
        "P2+triangle": [(0, 1)] + [(2, 3), (3, 4), (2, 4)],
        "paw": cycle(3) + [(0, 3)],
    }
    return {_graph_cert(es): name for name, es in named.items()}


_CATALOG = _catalog()


def classify_graph(edges: Sequence[Edge]) -> str:
    cert = _graph_cert(list(edges))
    return _CATALOG.get(cert, f"graph{cert}")


def label_subgraph(diagram: CoxeterDiagram, label: AngleForm) -> str:
    """Isomorphism class name of the subgraph formed by edges carrying `label`."""
    label = diagram.relations.normalize(label)
    return classify_graph([e for e in diagram.edges() if diagram.labels[e] == label])


# ---------------------------------------------------------------------------
# Constraint-driven enumeration of diagrams up to isomorphism
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramConstraints:
    """Constraint language for diagram enumeration.

    list_rules: ordered (label, allowed-types); a triangle containing the
        rule's label (first match wins) must have its type in the allowed
        set.  A rule label of None matches every triangle.
    forbidden: types never allowed, applied to triangles no rule matched.
    validity: optional predicate on types, applied to triangles no rule
        matched (types inside rule lists are taken as already vetted).
    rich_type: if set, only diagrams with >= 4 orbits of this triangle type
        are returned.
    """

    list_rules: tuple = ()
    forbidden: frozenset = frozenset()
    validity: Optional[Callable] = None
    rich_type: Optional[TriangleType] = None


def _allowed_table(alphabet: Sequence[AngleForm], cons: DiagramConstraints) -> dict:
    table = {}
    for combo in combinations_with_replacement(range(len(alphabet)), 3):
        ttype = triangle_type_of([alphabet[i] for i in combo])
        ok = None
        for lab, allowed in cons.list_rules:
            if lab is None or lab in ttype:
                ok = ttype in allowed
                break
        if ok is None:
            ok = ttype not in cons.forbidden
            if ok and cons.validity is not None:
                ok = bool(cons.validity(ttype))
        table[tuple(sorted(combo))] = ok
    return table


def enumerate_diagrams(n: int, alphabet: Sequence[AngleForm],
                       constraints: DiagramConstraints,
                       relations: RelationSet = EMPTY_RELATIONS,
                       vertices: Optional[Sequence[str]] = None) -> list:
    """All edge labelings of K_n satisfying the constraints, up to isomorphism.

    Enumeration is a two-phase backtracking: first the edges carrying the
    rule labels (the scarce, heavily constrained ones), then the rest; a
    completed triangle is checked against the precomputed allowed-type
    table, and a partial labeling is abandoned as soon as fewer than four
    triangles can still reach the rich type.  Results are deduplicated by
    canonical form (minimum label matrix over all vertex orders).
    """
    alphabet = [relations.normalize(f) for f in alphabet]
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet labels must be distinct under the relations")
    cons = constraints
    table = _allowed_table(alphabet, cons)
    label_ids = {f: i for i, f in enumerate(alphabet)}
    rule_labels = [label_ids[lab] for lab, _ in cons.list_rules
                   if lab is not None and lab in label_ids]
    es = all_edges(n)
    m = len(es)
    tri_edges = []  # triangle -> its three edge indices
    edge_pos = {e: i for i, e in enumerate(es)}
    for tri in combinations(range(n), 3):
        i, j, k = tri
        tri_edges.append((edge_pos[_edge(i, j)], edge_pos[_edge(i, k)],
                          edge_pos[_edge(j, k)]))
    rich = None
    if cons.rich_type is not None:
        rich = tuple(sorted(label_ids[f] for f in cons.rich_type))

    assign = [-1] * m  # label index per edge, -1 = unassigned
    solutions = []

    def rich_possible() -> bool:
        if rich is None:
            return True
        count = 0
        for te in tri_edges:
            have = sorted(assign[e] for e in te if assign[e] >= 0)
            # can the triangle still become the rich type?
            pool = list(rich)
            ok = True
            for h in have:
                if h in pool:
                    pool.remove(h)
                else:
                    ok = False
                    break
            if ok:
                count += 1
                if count >= 4:
                    return True
        return False

    def closed_triangles_ok(edge_idx: int) -> bool:
        for te in tri_edges:
            if edge_idx in te and all(assign[e] >= 0 for e in te):
                key = tuple(sorted(assign[e] for e in te))
                if not table[key]:
                    return False
        return True

    if vertices is not None:
        names = list(vertices)
    elif n <= 5:
        names = [chr(ord("u") + i) for i in range(n)]
    else:
        names = [f"v{i}" for i in range(n)]

    def finish():
        labels = {es[i]: alphabet[assign[i]] for i in range(m)}
        diagram = CoxeterDiagram(names, labels, relations)
        if cons.rich_type is not None and not is_rich(diagram, cons.rich_type):
            return
        solutions.append(diagram)

    # phase 1: place rule labels (or everything at once when there are none)
    phase1 = rule_labels
    others = [i for i in range(len(alphabet)) if i not in phase1]

    def fill_rest(idx: int):
        if idx == m:
            finish()
            return
        if assign[idx] >= 0:
            fill_rest(idx + 1)
            return
        for lab in others:
            assign[idx] = lab
            if closed_triangles_ok(idx) and rich_possible():
                fill_rest(idx + 1)
        assign[idx] = -1

    def skeleton(idx: int):
        if idx == m:
            if rich_possible():
                fill_rest(0)
            return
        for lab in phase1 + [-2]:  # -2 = deferred to phase 2
            if lab == -2:
                assign[idx] = -1
                if rich_possible():
                    skeleton(idx + 1)
                continue
            assign[idx] = lab
            if closed_triangles_ok_partial(idx) and rich_possible():
                skeleton(idx + 1)
        assign[idx] = -1

    def closed_triangles_ok_partial(edge_idx: int) -> bool:
        # during phase 1 a triangle is only fully decided if all three edges
        # carry phase-1 labels; with wildcards, check that some allowed type
        # matches the decided part
        for te in tri_edges:
            if edge_idx not in te:
                continue
            have = sorted(assign[e] for e in te if assign[e] >= 0)
            free = sum(1 for e in te if assign[e] < 0)
            if free == 0:
                if not table[tuple(have)]:
                    return False
                continue
            # wildcard check: some allowed type extends `have` using labels
            # outside phase1 for the free slots
            ok = False
            for key, allowed in table.items():
                if not allowed:
                    continue
                pool = list(key)
                good = True
                for h in have:
                    if h in pool:
                        pool.remove(h)
                    else:
                        good = False
                        break
                if good and all(p not in phase1 for p in pool):
                    ok = True
                    break
            if not ok:
                return False
        return True

    if phase1:
        skeleton(0)
    else:
        fill_rest(0)

    unique = {}
    for d in solutions:
        unique.setdefault(d.canonical_key(), d)
    return [unique[k] for k in sorted(unique)]


# ---------------------------------------------------------------------------
# Abstract edge partitions (colorings with unlabeled classes)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionConstraints:
    two_types_each_at_least: Optional[int] = None
    one_type_at_least: Optional[int] = None
    trivial_automorphisms: Optional[bool] = None
    class_count: Optional[tuple] = None  # (min, max)


def _restricted_growth_strings(m: int):
    rgs = [0] * m
    maxes = [0] * m
    while True:
        yield tuple(rgs)
        i = m - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, m):
            rgs[j] = 0
            maxes[j] = maxes[i]


def _coloring_canonical(coloring: tuple, n: int) -> tuple:
    es = all_edges(n)
    pos = {e: i for i, e in enumerate(es)}
    best = None
    for p in permutations(range(n)):
        seq = [coloring[pos[_edge(p[a], p[b])]] for a, b in es]
        relabel, nxt = {}, 0
        out = []
        for c in seq:
            if c not in relabel:
                relabel[c] = nxt
                nxt += 1
            out.append(relabel[c])
        key = tuple(out)
        if best is None or key < best:
            best = key
    return best


def coloring_triangle_types(coloring: tuple, n: int) -> list:
    es = all_edges(n)
    pos = {e: i for i, e in enumerate(es)}
    out = []
    for tri in combinations(range(n), 3):
        i, j, k = tri
        out.append(tuple(sorted((coloring[pos[_edge(i, j)]],
                                 coloring[pos[_edge(i, k)]],
                                 coloring[pos[_edge(j, k)]]))))
    return out


def coloring_automorphisms(coloring: tuple, n: int) -> list:
    es = all_edges(n)
    pos = {e: i for i, e in enumerate(es)}
    out = []
    for p in permutations(range(n)):
        if all(coloring[pos[_edge(p[a], p[b])]] == coloring[pos[(a, b)]]
               for a, b in es):
            out.append(p)
    return out


def enumerate_edge_partitions(n: int, constraints: PartitionConstraints) -> list:
    """Set partitions of the K_n edges satisfying the constraints, up to iso.

    Exhaustive over all Bell(C(n,2)) partitions; n <= 5 keeps this around
    10^5 cases, each filtered by cheap triangle-type counting before the
    automorphism test.
    """
    m = len(all_edges(n))
    cons = constraints
    seen = {}
    for coloring in _restricted_growth_strings(m):
        k = max(coloring) + 1
        if cons.class_count is not None:
            lo, hi = cons.class_count
            if not (lo <= k <= hi):
                continue
        types = coloring_triangle_types(coloring, n)
        counts = {}
        for t in types:
            counts[t] = counts.get(t, 0) + 1
        if cons.one_type_at_least is not None:
            if not any(c >= cons.one_type_at_least for c in counts.values()):
                continue
        if cons.two_types_each_at_least is not None:
            big = [t for t, c in counts.items() if c >= cons.two_types_each_at_least]
            if len(big) < 2:
                continue
        if cons.trivial_automorphisms is not None:
            trivial = len(coloring_automorphisms(coloring, n)) == 1
            if trivial != cons.trivial_automorphisms:
                continue
        seen.setdefault(_coloring_canonical(coloring, n), coloring)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# Two-label skeleton enumeration (smallest two angle labels of a diagram)
# ---------------------------------------------------------------------------


def _induced_mixed_paths(ea: frozenset, eb: frozenset, n: int) -> list:
    """Induced 2-edge paths with one edge from each set; returns (triangle, closing edge)."""
    union = ea | eb
    out = []
    for tri in combinations(range(n), 3):
        i, j, k = tri
        tri_es = [_edge(i, j), _edge(i, k), _edge(j, k)]
        in_a = [e for e in tri_es if e in ea]
        in_b = [e for e in tri_es if e in eb]
        outside = [e for e in tri_es if e not in union]
        if len(in_a) == 1 and len(in_b) == 1 and len(outside) == 1:
            out.append((tri, outside[0]))
    return out


def enumerate_two_label_skeletons(n: int = 5,
                                  alpha_shapes: tuple = ("P2+P2", "P2+P3"),
                                  min_beta: int = 2,
                                  min_paths: int = 4) -> list:
    """Disjoint (E_alpha, E_beta) pairs compatible with a rich diagram, up to iso.

    Constraints: the alpha-edges form one of the given shapes; the combined
    two-label graph is triangle-free; at least `min_paths` induced mixed
    paths exist (each is the only way to complete a mixed-type triangle);
    and, when exactly four such paths exist, no permutation preserving both
    edge sets and fixing all remaining free edge slots may permute the four
    path triangles nontrivially (such a symmetry would survive any completion
    and collapse the mixed-triangle orbits below four).
    """
    es = all_edges(n)
    results = {}
    for asg in _ternary_assignments(len(es)):
        ea = frozenset(e for e, t in zip(es, asg) if t == 1)
        eb = frozenset(e for e, t in zip(es, asg) if t == 2)
        if len(eb) < min_beta or not ea:
            continue
        if classify_graph(sorted(ea)) not in alpha_shapes:
            continue
        union = ea | eb
        if any(all(_edge(a, b) in union for a, b in combinations(tri, 2))
               for tri in combinations(range(n), 3)):
            continue  # triangle in the two-label graph
        paths = _induced_mixed_paths(ea, eb, n)
        if len(paths) < min_paths:
            continue
        if len(paths) == 4 and _forced_symmetry_collapses(ea, eb, paths, n):
            continue
        key = _pair_canonical(ea, eb, n)
        results.setdefault(key, (ea, eb))
    return [results[k] for k in sorted(results)]


def _ternary_assignments(m: int):
    asg = [0] * m
    while True:
        yield tuple(asg)
        i = m - 1
        while i >= 0 and asg[i] == 2:
            asg[i] = 0
            i -= 1
        if i < 0:
            return
        asg[i] += 1


def _pair_canonical(ea: frozenset, eb: frozenset, n: int) -> tuple:
    es = all_edges(n)
    best = None
    for p in permutations(range(n)):
        pa = tuple(sorted(_edge(p[a], p[b]) for a, b in ea))
        pb = tuple(sorted(_edge(p[a], p[b]) for a, b in eb))
        key = (pa, pb)
        if best is None or key < best:
            best = key
    return best


def _forced_symmetry_collapses(ea, eb, paths, n) -> bool:
    closings = {closing for _, closing in paths}
    free = [e for e in all_edges(n) if e not in ea and e not in eb and e not in closings]
    tris = [frozenset(t) for t, _ in paths]
    for p in permutations(range(n)):
        if p == tuple(range(n)):
            continue
        if {_edge(p[a], p[b]) for a, b in ea} != ea:
            continue
        if {_edge(p[a], p[b]) for a, b in eb} != eb:
            continue
        if any(_edge(p[e[0]], p[e[1]]) != e for e in free):
            continue
        mapped = [frozenset(p[v] for v in t) for t in tris]
        if mapped != tris and set(mapped) == set(tris):
            return True
    return False
