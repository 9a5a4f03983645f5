"""Right-angled Hill-type simplices and their lattice rep-tilings.

The three base simplices (vertex displays, exact rationals):

* H0_d: 0, (1/2,0,...), (1/2,1/2,0,...), ..., (1/2,...,1/2)
* H1_d: 0, e1, (1/2,1/2,0,...), ..., (1/2,...,1/2)
* H2_d: 0, e1, e1+e2, (1/2,1/2,1/2,0,...), ..., (1/2,...,1/2)

The cube lattice cut by the hyperplanes x_i = n, x_i + x_j = n, x_i - x_j = n
tiles space with copies of H1_d; each tile is encoded by the center of its
unit cube plus a signed permutation prefix, with vertices at half-integer
steps from the center.  Restricting to a scaled copy of H1_d or H2_d by
exact facet-inequality filtering yields the rep-tilings; compatible tile
pairs (union congruent to H2_d) sit in four-cycle components of the
compatibility graph and give the pairing that re-tiles scaled H2 copies.

All geometry is exact: tiles internally use doubled integer coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Optional, Sequence

from .gram import EuclideanSimplex


def hill_simplex(d: int, i: int) -> EuclideanSimplex:
    """The base simplex H^i_d for i in {0, 1, 2}, exact rational vertices."""
    if d < 2:
        raise ValueError("need d >= 2")
    half = Fraction(1, 2)

    def halves(k):
        return tuple(half if t < k else Fraction(0) for t in range(d))

    if i == 0:
        verts = [halves(k) for k in range(d + 1)]
    elif i == 1:
        e1 = tuple(Fraction(1) if t == 0 else Fraction(0) for t in range(d))
        verts = [halves(0), e1] + [halves(k) for k in range(2, d + 1)]
    elif i == 2:
        e1 = tuple(Fraction(1) if t == 0 else Fraction(0) for t in range(d))
        e12 = tuple(Fraction(1) if t <= 1 else Fraction(0) for t in range(d))
        verts = [halves(0), e1, e12] + [halves(k) for k in range(3, d + 1)]
    else:
        raise ValueError("i must be 0, 1 or 2")
    return EuclideanSimplex(tuple(verts))


# ---------------------------------------------------------------------------
# Lattice tiles (doubled integer coordinates internally)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeTile:
    """One tile of the H1 lattice tiling: cube center + signed permutation.

    center2: doubled center coordinates (odd integers).
    signed_perm: ((eps_1, i_1), ..., (eps_{d-1}, i_{d-1})), eps in {-1, 1},
    the i_j distinct 0-based axes; the remaining axis i_d is implied.
    """

    center2: tuple
    signed_perm: tuple

    @property
    def d(self) -> int:
        return len(self.center2)

    def last_axis(self) -> int:
        used = {i for _, i in self.signed_perm}
        return next(i for i in range(self.d) if i not in used)

    def vertices2(self) -> tuple:
        """Vertices in doubled coordinates (integers)."""
        d = self.d
        out = [tuple(self.center2)]
        acc = list(self.center2)
        for k, (eps, axis) in enumerate(self.signed_perm):
            acc[axis] += eps
            if k < d - 2:
                out.append(tuple(acc))
        last = self.last_axis()
        for eps in (1, -1):
            v = list(acc)
            v[last] += eps
            out.append(tuple(v))
        return tuple(out)

    def vertices(self) -> tuple:
        return tuple(tuple(Fraction(c, 2) for c in v) for v in self.vertices2())

    def simplex(self) -> EuclideanSimplex:
        return EuclideanSimplex(self.vertices())

    def compatible_with(self, other: "LatticeTile") -> bool:
        """Union congruent to H2: same cube, same prefix, different last index."""
        return (self.center2 == other.center2
                and self.signed_perm[:-1] == other.signed_perm[:-1]
                and self.signed_perm[-1][1] != other.signed_perm[-1][1])


def _signed_perms(d: int):
    for axes in permutations(range(d), d - 1):
        for signs in product((1, -1), repeat=d - 1):
            yield tuple(zip(signs, axes))


@dataclass(frozen=True)
class Polytope:
    """Intersection of half-spaces a.x <= b, doubled integer coefficients."""

    ineqs: tuple  # of (coeff tuple, rhs) in doubled coordinates

    def contains2(self, point2: Sequence[int]) -> bool:
        return all(sum(c * x for c, x in zip(coeffs, point2)) <= rhs
                   for coeffs, rhs in self.ineqs)


def scaled_hill_polytope(d: int, i: int, m: int) -> Polytope:
    """Facet system of m * H^i_d, in doubled coordinates (y = 2x)."""
    def e(axis, val=1):
        return tuple(val if t == axis else 0 for t in range(d))

    def minus(a, b):
        return tuple(x - y for x, y in zip(a, b))

    ineqs = []
    if i == 0:
        ineqs.append((e(0), m))  # x1 <= m/2  ->  y1 <= m
        for j in range(d - 1):
            ineqs.append((minus(e(j + 1), e(j)), 0))
    elif i == 1:
        ineqs.append((tuple(1 if t in (0, 1) else 0 for t in range(d)), 2 * m))
        ineqs.append((minus(e(1), e(0)), 0))
        for j in range(1, d - 1):
            ineqs.append((minus(e(j + 1), e(j)), 0))
    elif i == 2:
        if d >= 3:
            ineqs.append((tuple(1 if t in (0, 2) else 0 for t in range(d)), 2 * m))
        else:
            ineqs.append((e(0), 2 * m))
        for j in range(d - 1):
            ineqs.append((minus(e(j + 1), e(j)), 0))
    else:
        raise ValueError("i must be 0, 1 or 2")
    ineqs.append((e(d - 1, -1), 0))  # x_d >= 0
    return Polytope(tuple(ineqs))


def lattice_tiles_in(poly: Polytope, d: int, m: int) -> list:
    """All H1 lattice tiles with every vertex inside the polytope.

    Cube centers are scanned over the [0, m]^d box; tiles never leave their
    cube, so this covers every scaled Hill target.
    """
    out = []
    perms = list(_signed_perms(d))
    for n in product(range(m), repeat=d):
        center2 = tuple(2 * c + 1 for c in n)
        if not poly.contains2(center2):
            continue
        for sp in perms:
            tile = LatticeTile(center2, sp)
            if all(poly.contains2(v) for v in tile.vertices2()):
                out.append(tile)
    return out


def generate_h1_tiling(d: int, m: int) -> list:
    """The m^d tiles of the scaled simplex m * H1_d."""
    if m < 1:
        raise ValueError("need m >= 1")
    return lattice_tiles_in(scaled_hill_polytope(d, 1, m), d, m)


def generate_h2_h1_tiles(d: int, m: int) -> list:
    """The 2*m^d H1-tiles of the scaled simplex m * H2_d."""
    return lattice_tiles_in(scaled_hill_polytope(d, 2, m), d, m)


# ---------------------------------------------------------------------------
# Exact volumes and congruence
# ---------------------------------------------------------------------------


def simplex_volume(simplex: EuclideanSimplex) -> Fraction:
    return simplex.volume()


def tile_volume(d: int) -> Fraction:
    """Volume of one H1 lattice tile: two H0 copies."""
    return Fraction(2, 2 ** d * math.factorial(d))


def _sq_dist(u, v) -> Fraction:
    return sum((Fraction(a) - Fraction(b)) ** 2 for a, b in zip(u, v))


def congruent(s1: EuclideanSimplex, s2: EuclideanSimplex,
              tol: Optional[float] = None) -> bool:
    """Congruence by vertex correspondence matching all pairwise distances.

    Exact for rational vertices (tol ignored); with tol, squared distances
    are compared numerically.  Mirror images are congruent by construction
    (distances see no orientation).
    """
    if s1.dim != s2.dim:
        return False
    v1, v2 = s1.vertices, s2.vertices
    n = len(v1)

    def dist_table(vs):
        return [[_sq_dist(vs[i], vs[j]) for j in range(n)] for i in range(n)]

    d1, d2 = dist_table(v1), dist_table(v2)

    def close(a, b):
        if tol is None:
            return a == b
        return abs(float(a) - float(b)) <= tol

    def rows_match(i, j):
        return sorted(map(float, d1[i])) == sorted(map(float, d2[j])) if tol is None \
            else all(abs(x - y) <= tol for x, y in
                     zip(sorted(map(float, d1[i])), sorted(map(float, d2[j]))))

    assign = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            if all(close(d1[i][k], d2[j][assign[k]]) for k in range(i)):
                used[j] = True
                assign[i] = j
                if rec(i + 1):
                    return True
                used[j] = False
                assign[i] = -1
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# Compatibility graph and H2 pairing
# ---------------------------------------------------------------------------


@dataclass
class CompatibilityGraph:
    tiles: list
    edges: list  # index pairs
    components: list  # lists of tile indices (grouped by cube + prefix)

    def component_sizes(self) -> list:
        return sorted(len(c) for c in self.components)


def compatibility_graph(tiles: Sequence[LatticeTile]) -> CompatibilityGraph:
    groups = {}
    for idx, t in enumerate(tiles):
        key = (t.center2, t.signed_perm[:-1])
        groups.setdefault(key, []).append(idx)
    edges = []
    comps = []
    for key in sorted(groups):
        comp = groups[key]
        comps.append(comp)
        for a, b in combinations(comp, 2):
            if tiles[a].compatible_with(tiles[b]):
                edges.append((a, b))
    return CompatibilityGraph(list(tiles), edges, comps)


class PairingError(RuntimeError):
    pass


@dataclass
class TilingReport:
    tile_count: int
    total_volume: Fraction
    all_congruent: bool
    component_sizes: list
    pairing_ok: Optional[bool] = None


def pair_h2_tiling(d: int, m: int) -> list:
    """Match the 2*m^d H1-tiles of m*H2_d into m^d pairs forming H2 copies.

    Every compatibility component contributes an even number of tiles; pairs
    are taken inside components, and each union is verified congruent to
    H2_d exactly.
    """
    tiles = generate_h2_h1_tiles(d, m)
    graph = compatibility_graph(tiles)
    h2 = hill_simplex(d, 2)
    pairs = []
    for comp in graph.components:
        if len(comp) % 2 != 0:
            raise PairingError(f"component with odd tile count {len(comp)}")
        remaining = list(comp)
        while remaining:
            a = remaining.pop(0)
            partner = next((b for b in remaining
                            if tiles[a].compatible_with(tiles[b])), None)
            if partner is None:
                raise PairingError("no compatible partner inside a component")
            remaining.remove(partner)
            union = pair_union_simplex(tiles[a], tiles[partner])
            if not congruent(union, h2):
                raise PairingError("pair union is not congruent to the base H2")
            pairs.append((tiles[a], tiles[partner], union))
    return pairs


def pair_union_simplex(t1: LatticeTile, t2: LatticeTile) -> EuclideanSimplex:
    """Union of two compatible tiles as a simplex.

    The tiles share a facet; one shared vertex is the midpoint of the two
    private vertices and gets absorbed into an edge of the union.
    """
    v1, v2 = set(t1.vertices2()), set(t2.vertices2())
    shared = v1 & v2
    extras = sorted((v1 | v2) - shared)
    if len(extras) != 2 or len(shared) != len(v1) - 1:
        raise PairingError("tiles do not share a facet")
    e1, e2 = extras
    mid2 = tuple(a + b for a, b in zip(e1, e2))
    absorbed = next((s for s in shared if tuple(2 * c for c in s) == mid2), None)
    if absorbed is None:
        raise PairingError("no shared vertex lies between the private vertices")
    verts2 = [v for v in sorted(shared) if v != absorbed] + extras
    return EuclideanSimplex(tuple(tuple(Fraction(c, 2) for c in v) for v in verts2))


def tiling_report(tiles: Sequence[LatticeTile], base: EuclideanSimplex) -> TilingReport:
    vol = sum((t.simplex().volume() for t in tiles), Fraction(0))
    all_cong = all(congruent(t.simplex(), base) for t in tiles)
    graph = compatibility_graph(tiles)
    return TilingReport(len(tiles), vol, all_cong, graph.component_sizes())


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def tiling_to_json(tiles: Sequence[LatticeTile]) -> dict:
    return {
        "format": "hill-tiling/1",
        "tiles": [
            {"center": [str(Fraction(c, 2)) for c in t.center2],
             "signed_perm": [[eps, axis] for eps, axis in t.signed_perm],
             "vertices": [[str(Fraction(c, 2)) for c in v] for v in t.vertices2()]}
            for t in tiles
        ],
    }


def tiling_from_json(data: dict) -> list:
    out = []
    for entry in data["tiles"]:
        center2 = tuple(int(Fraction(s) * 2) for s in entry["center"])
        sp = tuple((int(e), int(a)) for e, a in entry["signed_perm"])
        out.append(LatticeTile(center2, sp))
    return out


def tiling_to_off(tiles: Sequence[LatticeTile]) -> str:
    """OFF export of the tile boundaries (3D only)."""
    if tiles and tiles[0].d != 3:
        raise ValueError("OFF export supports d = 3 only")
    verts = []
    index = {}
    faces = []
    for t in tiles:
        ids = []
        for v in t.vertices():
            key = tuple(v)
            if key not in index:
                index[key] = len(verts)
                verts.append(v)
            ids.append(index[key])
        for face in combinations(ids, 3):
            faces.append(face)
    lines = ["OFF", f"{len(verts)} {len(faces)} 0"]
    for v in verts:
        lines.append(" ".join(f"{float(c):.6f}" for c in v))
    for f in faces:
        lines.append("3 " + " ".join(map(str, f)))
    return "\n".join(lines) + "\n"
