"""Tiling spherical triangles with congruent copies of a base tile.

Four pieces:

* candidate enumeration -- all angle triples (tau, phi, psi) that could be
  tiled by n copies of the base tile, from the exact area bookkeeping
  n * excess(T0) + pi - tau = phi + psi with phi, psi nonnegative integer
  combinations of the tile angles, filtered by the spherical triangle
  inequality and annotated with an edge-combination status;
* edge combinations -- can a length be written as a nonnegative integer
  combination of the tile's edges, within tolerance;
* an exhaustive corner-filling backtracking search for actual tilings by
  congruent copies (mirror images allowed), with verification and SVG/JSON
  export;
* the algebraic-degree obstruction for rep-counts k: the minimal polynomial
  degree of k^(1/d) lower-bounds the number of distinct edge lengths.

The search fills the open corner with the smallest interior angle first and
places tiles flush against the boundary.  Degenerate pinch configurations
(a tile corner landing in the middle of a far boundary arc) are rejected
rather than split, which is sound for `found` answers (independently
verified) and conservative for `exhausted` ones.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from . import sphgeo
from .spherical import (InvalidTriangleError, edge_lengths, is_valid)

TWO_PI = 2 * math.pi


# ---------------------------------------------------------------------------
# Tile specification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TileSpec:
    """Base tile T0 by its angles; exact pi-fractions preferred.

    coeff_bound and tol drive the edge-combination tests (the defaults match
    the bounded search used throughout: coefficients below 20, tolerance
    1e-5).
    """

    angles_pi: Optional[tuple] = None  # 3 Fractions of pi, ascending
    angles_rad: Optional[tuple] = None  # 3 floats, ascending
    coeff_bound: int = 20
    tol: float = 1e-5

    @staticmethod
    def from_pi_fractions(*qs, coeff_bound: int = 20, tol: float = 1e-5) -> "TileSpec":
        qs = tuple(sorted(Fraction(q) for q in qs))
        spec = TileSpec(angles_pi=qs, coeff_bound=coeff_bound, tol=tol)
        if not is_valid(qs):
            raise InvalidTriangleError(is_valid(qs).reason)
        return spec

    @staticmethod
    def from_radians(*vs, coeff_bound: int = 20, tol: float = 1e-5) -> "TileSpec":
        vs = tuple(sorted(float(v) for v in vs))
        if not is_valid(vs):
            raise InvalidTriangleError(is_valid(vs).reason)
        return TileSpec(angles_rad=vs, coeff_bound=coeff_bound, tol=tol)

    @property
    def angles(self) -> tuple:
        if self.angles_rad is not None:
            return self.angles_rad
        return tuple(float(q) * math.pi for q in self.angles_pi)

    @property
    def edges(self) -> tuple:
        return edge_lengths(self.angles)

    @property
    def excess(self) -> float:
        return math.fsum(self.angles) - math.pi

    @property
    def excess_pi(self) -> Optional[Fraction]:
        if self.angles_pi is None:
            return None
        return sum(self.angles_pi) - 1


# ---------------------------------------------------------------------------
# Edge combinations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeMatch:
    coeffs: tuple
    value: float


@dataclass(frozen=True)
class EdgeNearest:
    below: Optional[tuple]  # (coeffs, value) or None
    above: Optional[tuple]


EdgeStatus = Union[EdgeMatch, EdgeNearest]


def edge_combination(x: float, edges: Sequence[float], bound: int = 20,
                     tol: float = 1e-5) -> EdgeStatus:
    """Match x against nonnegative integer combinations of the edges.

    Returns an EdgeMatch when some i*a + j*b + k*c lies within tol of x
    (ties resolved toward the smallest coefficient vector), otherwise the
    closest combinations from below and above.
    """
    if x <= 0:
        raise ValueError("length must be positive")
    a, b, c = edges
    best_below = None  # (gap, coeffs, value)
    best_above = None
    for i in range(bound):
        va = i * a
        for j in range(bound):
            vb = va + j * b
            for k in range(bound):
                v = vb + k * c
                gap = x - v
                if gap >= 0:
                    if best_below is None or gap < best_below[0] - 1e-15:
                        best_below = (gap, (i, j, k), v)
                else:
                    if best_above is None or -gap < best_above[0] - 1e-15:
                        best_above = (-gap, (i, j, k), v)
                if v > x:
                    break  # larger k only moves further above
            if vb > x:
                break
        if va > x:
            break
    for cand in (best_below, best_above):
        if cand is not None and cand[0] <= tol:
            return EdgeMatch(cand[1], cand[2])
    return EdgeNearest(
        below=None if best_below is None else (best_below[1], best_below[2]),
        above=None if best_above is None else (best_above[1], best_above[2]))


# ---------------------------------------------------------------------------
# Candidate enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    """A (tau, phi, psi) triple passing the exact area and validity filters."""

    tau: Fraction  # fractions of pi
    phi: Fraction
    psi: Fraction
    n: int
    phi_combo: tuple
    psi_combo: tuple
    edge_status: EdgeStatus

    @property
    def expressible(self) -> bool:
        return isinstance(self.edge_status, EdgeMatch)

    def angles_pi(self) -> tuple:
        return tuple(sorted((self.tau, self.phi, self.psi)))


def enumerate_candidates(tile: TileSpec, tau: Fraction,
                         phi_min: Fraction = Fraction(0),
                         bound: Optional[int] = None,
                         tol: Optional[float] = None) -> list:
    """All candidate (tau, phi, psi) with phi_min < phi <= psi, deduplicated.

    Works in exact pi-fraction arithmetic: for each tile count n in
    [2, 2*tau/excess), solve m1*a1 + m2*a2 + m3*a3 = n*excess + pi - tau
    over nonnegative integers, split the combination into (phi, psi) in all
    ways, keep triples that satisfy the spherical triangle inequality, and
    annotate each with the edge-combination status of the edge opposite tau.
    """
    if tile.angles_pi is None:
        raise ValueError("candidate enumeration needs an exact tile")
    tau = Fraction(tau)
    phi_min = Fraction(phi_min)
    bound = tile.coeff_bound if bound is None else bound
    tol = tile.tol if tol is None else tol
    qa, qb, qc = tile.angles_pi
    excess = tile.excess_pi
    edges = tile.edges
    one = Fraction(1)
    seen = {}
    n = 2
    while n * excess < 2 * tau:
        target = n * excess + one - tau
        m3_max = int(target / qc)
        for m3 in range(m3_max + 1):
            r3 = target - m3 * qc
            m2_max = int(r3 / qb)
            for m2 in range(m2_max + 1):
                r2 = r3 - m2 * qb
                m1 = r2 / qa
                if m1.denominator != 1 or m1 < 0:
                    continue
                m1 = int(m1)
                for i in range(m1 + 1):
                    for j in range(m2 + 1):
                        for k in range(m3 + 1):
                            phi = i * qa + j * qb + k * qc
                            psi = target - phi
                            if not (phi_min < phi <= psi < one):
                                continue
                            if (phi, psi) in seen:
                                continue
                            qs = sorted((tau, phi, psi))
                            if qs[1] + qs[2] >= one + qs[0]:
                                continue
                            x = _edge_opposite(float(tau) * math.pi,
                                               float(phi) * math.pi,
                                               float(psi) * math.pi)
                            status = edge_combination(x, edges, bound, tol)
                            seen[(phi, psi)] = Candidate(
                                tau, phi, psi, n,
                                (i, j, k),
                                (m1 - i, m2 - j, m3 - k),
                                status)
        n += 1
    return sorted(seen.values(), key=lambda cand: (cand.n, cand.phi, cand.psi))


def _edge_opposite(tau: float, phi: float, psi: float) -> float:
    num = math.cos(tau) + math.cos(phi) * math.cos(psi)
    den = math.sin(phi) * math.sin(psi)
    return math.acos(max(-1.0, min(1.0, num / den)))


# ---------------------------------------------------------------------------
# Tiling search
# ---------------------------------------------------------------------------


@dataclass
class TilePlacement:
    points: list  # [V, P, Q] unit vectors
    corners: tuple  # tile corner indices at (V, P, Q)


@dataclass
class SphTiling:
    """A placed tiling.  The target is a convex CCW boundary polygon; a
    triangle in the usual case, or a lune encoded with its two edge
    midpoints as straight vertices (angles alpha, pi, alpha, pi)."""

    target_points: list  # boundary unit vectors, CCW
    target_angles: tuple  # interior angles at those points, radians
    tiles: list  # of TilePlacement

    def to_json(self) -> dict:
        verts = []
        index = {}

        def vid(p):
            key = tuple(round(float(c), 9) for c in p)
            if key not in index:
                index[key] = len(verts)
                verts.append([float(c) for c in p])
            return index[key]

        target = [vid(p) for p in self.target_points]
        tiles = [{"vertices": [vid(p) for p in t.points],
                  "corners": list(t.corners)} for t in self.tiles]
        return {"format": "sph-tiling/1", "vertices": verts,
                "target": target, "target_angles": list(self.target_angles),
                "tiles": tiles}

    @staticmethod
    def from_json(data: dict) -> "SphTiling":
        verts = [sphgeo.unit(np.array(v, dtype=float)) for v in data["vertices"]]
        tiles = [TilePlacement([verts[i] for i in t["vertices"]],
                               tuple(t["corners"])) for t in data["tiles"]]
        return SphTiling([verts[i] for i in data["target"]],
                         tuple(data["target_angles"]), tiles)

    def render_svg(self, path: str, size: int = 480) -> None:
        render_tiling_svg(self, path, size)


@dataclass
class SearchResult:
    status: str  # "found" | "exhausted" | "aborted"
    tiling: Optional[SphTiling]
    nodes: int
    reason: str = ""


class _Region:
    __slots__ = ("points", "angles")

    def __init__(self, points, angles):
        self.points = points
        self.angles = angles

    def signature(self):
        k = len(self.points)
        rows = [tuple(round(float(c), 7) for c in self.points[i]) +
                (round(self.angles[i], 7),) for i in range(k)]
        best = min(tuple(rows[(i + j) % k] for j in range(k)) for i in range(k))
        return best

    def area(self) -> float:
        return sphgeo.spherical_polygon_area(self.points, self.angles)


def _orientations(tile: TileSpec) -> list:
    ang = tile.angles
    side = tile.edges
    seen = set()
    out = []
    for c in range(3):
        for f in range(3):
            if f == c:
                continue
            e = 3 - c - f
            key = (round(ang[c], 12), round(side[f], 12), round(ang[e], 12),
                   round(side[e], 12), round(ang[f], 12))
            if key in seen:
                continue
            seen.add(key)
            out.append({"theta": ang[c], "L": side[f], "thetaP": ang[e],
                        "M": side[e], "thetaQ": ang[f], "side3": side[c],
                        "corners": (c, e, f)})
    return out


def _place(region: _Region, vi: int, orient: dict, eps: float):
    """Try one tile placement at region vertex vi, flush along the outgoing arc.

    Returns (new_region_or_None_if_closed, tile_points) or None if the
    placement does not fit.
    """
    pts, angs = region.points, region.angles
    k = len(pts)
    V, aV = pts[vi], angs[vi]
    ip, iN = (vi - 1) % k, (vi + 1) % k
    Pp, aPp = pts[ip], angs[ip]
    N, aN = pts[iN], angs[iN]
    th, L, thP = orient["theta"], orient["L"], orient["thetaP"]
    M, thQ = orient["M"], orient["thetaQ"]
    if th > aV + eps:
        return None
    corner_exact = abs(th - aV) <= eps
    t_out = sphgeo.tangent_toward(V, N)
    E1 = sphgeo.arc_length(V, N)

    if L <= E1 - eps:
        P = sphgeo.point_at(V, t_out, L)
        n_seg = [(P, math.pi - thP), (N, aN)]
    elif abs(L - E1) <= eps:
        P = N
        if aN - thP < -eps:
            return None
        n_seg = [(N, aN - thP)]
    else:
        if aN <= math.pi + eps:
            return None  # flush side may pass a vertex only where it is reflex
        P = sphgeo.point_at(V, t_out, L)
        n_seg = [(P, TWO_PI - thP), (N, aN - math.pi)]

    if corner_exact:
        t_in = sphgeo.tangent_toward(V, Pp)
        E2 = sphgeo.arc_length(V, Pp)
        if M <= E2 - eps:
            Q = sphgeo.point_at(V, t_in, M)
            q_seg = [(Pp, aPp), (Q, math.pi - thQ)]
        elif abs(M - E2) <= eps:
            Q = Pp
            if aPp - thQ < -eps:
                return None
            q_seg = [(Pp, aPp - thQ)]
        else:
            if aPp <= math.pi + eps:
                return None
            Q = sphgeo.point_at(V, t_in, M)
            q_seg = [(Pp, aPp - math.pi), (Q, TWO_PI - thQ)]
    else:
        t2 = sphgeo.rotate_tangent(V, t_out, th)
        Q = sphgeo.point_at(V, t2, M)
        q_seg = [(Pp, aPp), (V, aV - th), (Q, TWO_PI - thQ)]

    tile_points = [V, P, Q]
    new_nodes = q_seg + n_seg
    cycle = []
    i = iN
    while True:
        i = (i + 1) % k
        if i == ip:
            break
        cycle.append((pts[i], angs[i]))
    cycle = new_nodes + cycle

    state = _cleanup_cycle(cycle, eps)
    if state is None:
        return None
    if state == "closed":
        return ("closed", tile_points)
    new_region = state
    if any(sphgeo.arc_length(new_region.points[i],
                             new_region.points[(i + 1) % len(new_region.points)])
           >= math.pi - 1e-6 for i in range(len(new_region.points))):
        return None  # minor-arc convention breaks past pi
    if not _placement_geometry_ok(region, new_region, tile_points, eps):
        return None
    return (new_region, tile_points)


def _cleanup_cycle(cycle, eps):
    """Normalize a provisional boundary cycle.

    Removes straight vertices (their arcs merge), collapses zero-width
    spikes (a consumed vertex whose two neighbours coincide: the spike's
    two arcs are the same geodesic, and the neighbour entries fuse with
    angle sum minus 2*pi), detects closure by vanishing area, and rejects
    genuine slits or overlaps.  Returns "closed", a _Region, or None.
    """
    nodes = list(cycle)
    snap = max(eps, 1e-9) * 10
    while True:
        k = len(nodes)
        if any(a < -eps for _, a in nodes):
            return None
        if all(a <= eps for _, a in nodes):
            return "closed"
        if k < 3:
            return None
        for i in range(k):
            _, a = nodes[i]
            if abs(a - math.pi) <= eps:
                del nodes[i]
                break
            if a <= eps:
                jp, jn = (i - 1) % k, (i + 1) % k
                pp, ap = nodes[jp]
                pn, an = nodes[jn]
                if sphgeo.arc_length(pp, pn) > snap:
                    return None  # real slit: not representable here
                merged = ap + an - TWO_PI
                if merged < -eps:
                    return None
                rest = [nodes[(jn + t) % k] for t in range(1, k - 2)]
                nodes = [(pp, max(merged, 0.0))] + rest
                break
        else:
            break
    out_pts = [p for p, _ in nodes]
    out_angs = [a for _, a in nodes]
    return _Region(out_pts, out_angs)


def _placement_geometry_ok(old: _Region, new: _Region, tile_points, eps: float) -> bool:
    """Reject placements whose new boundary self-intersects.

    The tile sides start inside the corner wedge; if no arc of the new
    boundary crosses another (beyond shared endpoints), the tile stayed
    inside the region.
    """
    snap = max(eps, 1e-9) * 10
    pts = new.points
    k = len(pts)
    arcs = [(pts[i], pts[(i + 1) % k]) for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            a1, b1 = arcs[i]
            a2, b2 = arcs[j]
            if sphgeo.arcs_conflict(a1, b1, a2, b2, snap):
                return False
    return True


def _area_tile_count(target_angles, tile: TileSpec, eps: float):
    t_area = math.fsum(target_angles) - math.pi
    ratio = t_area / tile.excess
    n = round(ratio)
    if abs(ratio - n) > 1e-6:
        return None
    return n


def search_tiling(target, tile: TileSpec, n_max: Optional[int] = None,
                  eps: float = 1e-9, node_budget: int = 10 ** 6) -> SearchResult:
    """Exhaustive backtracking search for a tiling of the target triangle.

    target: three angles (Fractions of pi or radians).  The tile count is
    fixed by the exact area ratio; if it is not a positive integer, or
    exceeds n_max, no tiling exists with the allowed count and the search
    reports `exhausted` immediately.  Otherwise corners are filled smallest
    angle first and every tile orientation (rotations and mirror images)
    is tried flush against the boundary.  Deterministic; `aborted` when the
    node budget runs out.
    """
    target_angles = tuple(float(q) * math.pi if isinstance(q, Fraction) else float(q)
                          for q in target)
    rep = is_valid(target_angles)
    if not rep:
        raise InvalidTriangleError(rep.reason)
    n = _area_tile_count(target_angles, tile, eps)
    if n is None or n == 0:
        return SearchResult("exhausted", None, 0,
                            "target area is not a positive multiple of the tile area")
    if n_max is not None and n > n_max:
        return SearchResult("exhausted", None, 0,
                            f"needs exactly {n} tiles, above the bound {n_max}")
    t_edges = edge_lengths(target_angles)
    t_points = sphgeo.triangle_vertices(target_angles, t_edges)
    region0 = _Region(list(t_points), list(target_angles))
    orients = _orientations(tile)
    failed = set()
    nodes = 0
    solution = []

    def pick_vertex(region):
        best, bi = None, -1
        for i, a in enumerate(region.angles):
            key = (a,) + tuple(round(float(c), 9) for c in region.points[i])
            if best is None or key < best:
                best, bi = key, i
        return bi

    def dfs(region, placed):
        nonlocal nodes
        if nodes > node_budget:
            return "aborted"
        sig = (len(placed), region.signature())
        if sig in failed:
            return None
        vi = pick_vertex(region)
        for orient in orients:
            nodes += 1
            if nodes > node_budget:
                return "aborted"
            res = _place(region, vi, orient, eps)
            if res is None:
                continue
            state, tile_points = res
            placement = TilePlacement(tile_points, orient["corners"])
            if state == "closed":
                if len(placed) + 1 == n:
                    solution.extend(placed + [placement])
                    return "found"
                continue
            if len(placed) + 1 >= n:
                continue  # area left but no tiles left to place
            sub = dfs(state, placed + [placement])
            if sub in ("found", "aborted"):
                return sub
        failed.add(sig)
        return None

    if n == 1:
        # trivial: the target must be congruent to the tile itself
        if all(abs(x - y) <= 1e-9 for x, y in zip(sorted(target_angles), tile.angles)):
            placement = TilePlacement(list(t_points), (0, 1, 2))
            tiling = SphTiling(list(t_points), target_angles, [placement])
            return SearchResult("found", tiling, 0)
        return SearchResult("exhausted", None, 0, "single tile is not congruent")

    out = dfs(region0, [])
    if out == "found":
        tiling = SphTiling(list(t_points), target_angles, solution)
        return SearchResult("found", tiling, nodes)
    if out == "aborted":
        return SearchResult("aborted", None, nodes,
                            f"node budget {node_budget} exceeded")
    return SearchResult("exhausted", None, nodes)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    ok: bool
    violation: str = ""

    def __bool__(self):
        return self.ok


def _triple_angle_edge_pairs(points):
    out = []
    for i in range(3):
        p, q, r = points[i], points[(i + 1) % 3], points[(i + 2) % 3]
        ang = math.acos(max(-1.0, min(1.0, float(
            np.dot(sphgeo.tangent_toward(p, q), sphgeo.tangent_toward(p, r))))))
        opp = sphgeo.arc_length(q, r)
        out.append((ang, opp))
    return sorted(out)


def verify_tiling(tiling: SphTiling, tile: TileSpec, eps: float = 1e-7) -> VerifyReport:
    """Independent re-check: congruence of each tile to the base tile,
    containment in the target, pairwise interior disjointness, and exact
    area conservation."""
    ref = sorted(zip(tile.angles, tile.edges))
    for idx, t in enumerate(tiling.tiles):
        pairs = _triple_angle_edge_pairs(t.points)
        for (a1, e1), (a2, e2) in zip(pairs, ref):
            if abs(a1 - a2) > eps or abs(e1 - e2) > eps:
                return VerifyReport(False, f"tile {idx} is not congruent to the base tile")
    boundary = tiling.target_points
    for idx, t in enumerate(tiling.tiles):
        for p in t.points:
            if not sphgeo.point_in_convex_polygon(p, boundary, snap=eps):
                return VerifyReport(False, f"tile {idx} leaves the target")
    for i in range(len(tiling.tiles)):
        for j in range(i + 1, len(tiling.tiles)):
            if _tiles_overlap(tiling.tiles[i], tiling.tiles[j], eps):
                return VerifyReport(False, f"tiles {i} and {j} overlap")
    k = len(tiling.target_points)
    target_area = math.fsum(tiling.target_angles) - (k - 2) * math.pi
    tiles_area = 0.0
    for t in tiling.tiles:
        pairs = _triple_angle_edge_pairs(t.points)
        tiles_area += math.fsum(a for a, _ in pairs) - math.pi
    if abs(tiles_area - target_area) > max(1, len(tiling.tiles)) * 1e-9:
        return VerifyReport(False, "tile areas do not sum to the target area")
    return VerifyReport(True)


def _segments_cross_transversally(a1, b1, a2, b2, snap):
    n1 = np.cross(a1, b1)
    n2 = np.cross(a2, b2)
    d = np.cross(n1, n2)
    nd = np.linalg.norm(d)
    if nd < 1e-12:
        return False  # collinear contact is not a transversal crossing
    d = d / nd
    for p in (d, -d):
        if sphgeo.on_arc(p, a1, b1, snap) and sphgeo.on_arc(p, a2, b2, snap):
            if all(sphgeo.arc_length(p, e) > 10 * snap for e in (a1, b1, a2, b2)):
                return True
    return False


def _tiles_overlap(t1: TilePlacement, t2: TilePlacement, eps: float) -> bool:
    pts1, pts2 = t1.points, t2.points
    for i in range(3):
        for j in range(3):
            if _segments_cross_transversally(pts1[i], pts1[(i + 1) % 3],
                                             pts2[j], pts2[(j + 1) % 3], eps):
                return True
    c1 = sphgeo.unit(sum(pts1))
    c2 = sphgeo.unit(sum(pts2))
    if sphgeo.point_in_triangle(c1, pts2, snap=-eps):
        return True
    if sphgeo.point_in_triangle(c2, pts1, snap=-eps):
        return True
    return False


def lune_two_tile_tiling(alpha: float) -> tuple:
    """The alpha-lune tiled by two copies of the (alpha, pi/2, pi/2) tile.

    The tile's right-angle corners sit on the equator, so the two mirror
    copies meet along the equatorial edge and fill the lune.  Returns the
    tiling (lune boundary encoded with its edge midpoints) and the tile.
    """
    if not (0 < alpha < math.pi):
        raise ValueError("lune angle must be in (0, pi)")
    north = np.array([0.0, 0.0, 1.0])
    south = -north
    m1 = np.array([1.0, 0.0, 0.0])
    m2 = np.array([math.cos(alpha), math.sin(alpha), 0.0])
    tiles = [TilePlacement([north, m1, m2], (0, 1, 2)),
             TilePlacement([south, m1, m2], (0, 1, 2))]
    tiling = SphTiling([north, m1, south, m2],
                       (alpha, math.pi, alpha, math.pi), tiles)
    tile = TileSpec.from_radians(alpha, math.pi / 2, math.pi / 2)
    return tiling, tile


# ---------------------------------------------------------------------------
# SVG rendering (stereographic projection)
# ---------------------------------------------------------------------------


def render_tiling_svg(tiling: SphTiling, path: str, size: int = 480) -> None:
    center = sphgeo.unit(sum(tiling.target_points))
    ref = np.array([1.0, 0.0, 0.0])
    if abs(float(np.dot(ref, center))) > 0.9:
        ref = np.array([0.0, 1.0, 0.0])
    e1 = sphgeo.unit(np.cross(center, ref))
    e2 = np.cross(center, e1)

    def project(p):
        w = float(np.dot(p, center))
        return (float(np.dot(p, e1)) / (1 + w), float(np.dot(p, e2)) / (1 + w))

    def arc_points(a, b, segments=64):
        ang = sphgeo.arc_length(a, b)
        if ang < 1e-12:
            return [project(a)]
        out = []
        for s in range(segments + 1):
            t = s / segments
            p = sphgeo.unit(a * math.sin((1 - t) * ang) + b * math.sin(t * ang))
            out.append(project(p))
        return out

    polylines = []
    bounds = [math.inf, math.inf, -math.inf, -math.inf]

    def emit(points, fill, stroke):
        nonlocal bounds
        for x, y in points:
            bounds = [min(bounds[0], x), min(bounds[1], y),
                      max(bounds[2], x), max(bounds[3], y)]
        polylines.append((points, fill, stroke))

    for idx, t in enumerate(tiling.tiles):
        pts = []
        for i in range(3):
            pts.extend(arc_points(t.points[i], t.points[(i + 1) % 3])[:-1])
        pts.append(pts[0])
        hue = (idx * 0.618034) % 1.0
        r, g, b = colorsys.hls_to_rgb(hue, 0.72, 0.65)
        fill = f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"
        emit(pts, fill, "#444444")
    tpts = []
    k = len(tiling.target_points)
    for i in range(k):
        tpts.extend(arc_points(tiling.target_points[i],
                               tiling.target_points[(i + 1) % k])[:-1])
    tpts.append(tpts[0])
    emit(tpts, "none", "#000000")

    x0, y0, x1, y1 = bounds
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.05 * span

    def svg_xy(p):
        x = (p[0] - x0 + pad) / (span + 2 * pad) * size
        y = size - (p[1] - y0 + pad) / (span + 2 * pad) * size
        return f"{x:.2f},{y:.2f}"

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
             f'height="{size}" viewBox="0 0 {size} {size}">']
    for points, fill, stroke in polylines:
        pstr = " ".join(svg_xy(p) for p in points)
        parts.append(f'<polygon points="{pstr}" fill="{fill}" stroke="{stroke}" '
                     f'stroke-width="1.2" fill-opacity="0.85"/>')
    parts.append("</svg>")
    with open(path, "w") as f:
        f.write("\n".join(parts))


# ---------------------------------------------------------------------------
# Algebraic degree of k^(1/d)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeReport:
    k: int
    d: int
    degree: int

    @property
    def min_distinct_edge_lengths(self) -> int:
        return self.degree


def _integer_root(k: int, e: int) -> Optional[int]:
    if e == 1:
        return k
    r = round(k ** (1.0 / e))
    for cand in (r - 1, r, r + 1):
        if cand >= 1 and cand ** e == k:
            return cand
    return None


def algebraic_degree(k: int, d: int) -> DegreeReport:
    """Degree of the minimal polynomial of k^(1/d) over Q.

    Equal to d/e where e is the largest divisor of d with k a perfect e-th
    power: the residual binomial x^(d/e) - k^(1/e) is then irreducible (its
    base is not a p-th power for any prime p dividing d/e, and being
    positive it avoids the -4*b^4 exceptional factorization).
    """
    if k < 2 or d < 2:
        raise ValueError("need k >= 2 and d >= 2")
    best = 1
    for e in range(1, d + 1):
        if d % e == 0 and _integer_root(k, e) is not None:
            best = e
    return DegreeReport(k, d, d // best)


def minimal_polynomial_degree_bruteforce(k: int, d: int) -> int:
    """Oracle: factor x^d - k over Z by trial monic integer factors.

    Only degrees up to 4 are needed; the candidate coefficient ranges come
    from the root bound |root| = k^(1/d).
    """
    if d not in (2, 3, 4):
        raise ValueError("oracle supports d in {2, 3, 4}")
    root_bound = int(math.ceil(k ** (1.0 / d))) + 1
    # degree-1 factors: rational (hence integer) roots
    lin = [r for r in range(1, root_bound + 1) if r ** d == k]
    if lin:
        return 1
    if d == 2:
        return 2
    if d == 3:
        return 3  # no linear factor of x^3 - k means irreducible (degree 3)
    # d == 4: look for quadratic factors x^2 + u x + v with integer u, v
    for u in range(-2 * root_bound, 2 * root_bound + 1):
        for v in range(-k, k + 1):
            if v == 0 or k % abs(v) != 0:
                continue
            # x^4 - k = (x^2+ux+v)(x^2-ux+(u^2-v)) + (2uv-u^3)x + (v^2-u^2v-k)
            if 2 * u * v - u ** 3 == 0 and v * v - u * u * v - k == 0:
                return 2
    return 4
