"""Global and local balance of face-colored maps.

A region is a proper nonempty set of faces whose topological boundary is a
disjoint union of simple cycles, each keeping its interior A-colored faces
on the inside.  Local balance demands strictly more A faces than B faces in
every such region, for both alternating colorings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBipartiteFaces, SizeLimitExceeded
from .surface_map import (
    COLOR_A,
    COLOR_B,
    CombinatorialMap,
    FaceColoring,
    alternating_coloring,
)

DEFAULT_REGION_CAP = 10**6


@dataclass(frozen=True)
class GlobalBalance:
    ok: bool
    d: int | None
    reason: str | None = None


@dataclass(frozen=True)
class Region:
    """Interior of a positive cobordant multicycle."""

    faces: frozenset[int]
    boundary_edges: frozenset[int]
    boundary_cycles: tuple[tuple[int, ...], ...]
    a_count: int
    b_count: int

    def sorted_faces(self) -> tuple[int, ...]:
        return tuple(sorted(self.faces))


@dataclass(frozen=True)
class BalanceReport:
    d: int | None
    globally_balanced: bool
    locally_balanced: bool
    violation: Region | None = None
    violation_on_flipped: bool = False
    reason: str | None = None


def _corner_double_incidence(m: CombinatorialMap) -> int | None:
    """A corner incident twice to some face, or None."""
    corners = set(m.corners)
    vod = m.vertex_of_dart
    for face in m.faces:
        seen = set()
        for d in face:
            v = vod[d]
            if v in corners:
                if v in seen:
                    return v
                seen.add(v)
    return None


def is_globally_balanced(
    m: CombinatorialMap, coloring: FaceColoring | None = None
) -> GlobalBalance:
    """Equal face-color counts, plus the structural sanity checks.

    Structural defects (loops, no alternating coloring, a corner incident
    twice to one face) are reported as not balanced with a reason rather
    than raised.
    """
    if coloring is None:
        try:
            coloring = alternating_coloring(m)
        except NotBipartiteFaces:
            return GlobalBalance(False, None, "no alternating face coloring exists")
    if m.has_loops:
        return GlobalBalance(False, None, "the graph has a loop")
    v = _corner_double_incidence(m)
    if v is not None:
        return GlobalBalance(False, None, f"corner {v} is incident twice to a face")
    a = len(coloring.faces_of(COLOR_A))
    b = len(coloring.faces_of(COLOR_B))
    if a != b:
        return GlobalBalance(False, None, f"{a} A faces versus {b} B faces")
    return GlobalBalance(True, a)


def region_from_faces(
    m: CombinatorialMap, coloring: FaceColoring, face_set
) -> Region | None:
    """Build the region on ``face_set`` or return None if invariants fail.

    Checks: proper nonempty subset, face-connected through interior edges,
    every boundary edge has its A side inside, and the boundary meets every
    vertex in 0 or 2 edge ends (so it splits into vertex-disjoint simple
    cycles).
    """
    inside = frozenset(face_set)
    if not inside or len(inside) >= m.face_count:
        return None
    fod = m.face_of_dart
    vod = m.vertex_of_dart

    boundary = []
    inside_darts = []
    vertex_ends: dict[int, int] = {}
    for i, (d, e) in enumerate(m.edges):
        fin_d = fod[d] in inside
        fin_e = fod[e] in inside
        if fin_d == fin_e:
            continue
        din = d if fin_d else e
        if coloring.color(fod[din]) != COLOR_A:
            return None
        boundary.append(i)
        inside_darts.append(din)
        for dart in (d, e):
            v = vod[dart]
            vertex_ends[v] = vertex_ends.get(v, 0) + 1
    if any(c != 2 for c in vertex_ends.values()):
        return None

    # connectivity through interior edges
    adjacency: dict[int, list[int]] = {f: [] for f in inside}
    for d, e in m.edges:
        f, g = fod[d], fod[e]
        if f in inside and g in inside:
            adjacency[f].append(g)
            adjacency[g].append(f)
    start = next(iter(inside))
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for g in adjacency[f]:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    if len(seen) != len(inside):
        return None

    # chain the inside darts into boundary cycles
    by_vertex: dict[int, list[int]] = {}
    for din in inside_darts:
        by_vertex.setdefault(vod[din], []).append(din)
    remaining = set(inside_darts)
    cycles = []
    while remaining:
        d = min(remaining)
        cyc = []
        while d in remaining:
            remaining.discard(d)
            cyc.append(d)
            w = vod[m.alpha[d]]
            nxt = [x for x in by_vertex.get(w, ()) if x != d and x in remaining]
            if not nxt:
                break
            d = nxt[0]
        cycles.append(tuple(cyc))

    a = sum(1 for f in inside if coloring.color(f) == COLOR_A)
    b = len(inside) - a
    return Region(inside, frozenset(boundary), tuple(cycles), a, b)


def positive_regions(
    m: CombinatorialMap,
    coloring: FaceColoring,
    cap: int = DEFAULT_REGION_CAP,
) -> list[Region]:
    """All regions, in sorted face-set order.

    Enumerates connected face subsets by growth, pruning branches whose
    boundary exposes a B face inside against an A face that can no longer
    be absorbed.  Raises :class:`SizeLimitExceeded` past ``cap`` regions.
    """
    nf = m.face_count
    fod = m.face_of_dart
    neighbor_sets: list[set[int]] = [set() for _ in range(nf)]
    for d, e in m.edges:
        f, g = fod[d], fod[e]
        if f != g:
            neighbor_sets[f].add(g)
            neighbor_sets[g].add(f)
    neighbors = [tuple(sorted(s)) for s in neighbor_sets]

    found: list[Region] = []

    def consider(inside: frozenset[int]):
        region = region_from_faces(m, coloring, inside)
        if region is not None:
            found.append(region)
            if len(found) > cap:
                raise SizeLimitExceeded(f"more than {cap} regions")

    def doomed(root: int, inside: frozenset[int], forbidden: frozenset[int]) -> bool:
        # a B face inside exposes an A-side neighbor that can never be added
        for f in inside:
            if coloring.color(f) != COLOR_B:
                continue
            for g in neighbor_sets[f]:
                if g not in inside and (g < root or g in forbidden):
                    return True
        return False

    def grow(root: int, inside: frozenset[int], ext: list[int], forbidden: frozenset[int]):
        consider(inside)
        if doomed(root, inside, forbidden):
            return
        for i, v in enumerate(ext):
            rest = ext[i + 1 :]
            present = inside | set(rest) | forbidden | {v}
            extra = [w for w in neighbors[v] if w > root and w not in present]
            grow(root, inside | {v}, rest + extra, forbidden)
            forbidden = forbidden | {v}

    for root in range(nf):
        initial = [g for g in neighbors[root] if g > root]
        grow(root, frozenset({root}), initial, frozenset())

    found.sort(key=lambda r: r.sorted_faces())
    return found


def is_locally_balanced(
    m: CombinatorialMap,
    coloring: FaceColoring | None = None,
    cap: int = DEFAULT_REGION_CAP,
) -> BalanceReport:
    """Full balance report; checks both alternating colorings.

    On failure the first violating region (in deterministic order) is
    returned as a certificate.
    """
    gb = is_globally_balanced(m, coloring)
    if not gb.ok:
        return BalanceReport(None, False, False, reason=gb.reason)
    if coloring is None:
        coloring = alternating_coloring(m)
    for flipped, col in ((False, coloring), (True, coloring.flip())):
        for region in positive_regions(m, col, cap=cap):
            if region.a_count <= region.b_count:
                return BalanceReport(
                    gb.d,
                    True,
                    False,
                    violation=region,
                    violation_on_flipped=flipped,
                    reason=(
                        f"region with {region.a_count} A faces and "
                        f"{region.b_count} B faces"
                    ),
                )
    return BalanceReport(gb.d, True, True)


def corner_bound_check(m: CombinatorialMap) -> bool:
    """Corner count at most 2(g + d - 1) on a globally balanced map."""
    gb = is_globally_balanced(m)
    if not gb.ok:
        raise ValueError(f"map is not globally balanced: {gb.reason}")
    return len(m.corners) <= 2 * (m.genus() + gb.d - 1)


def is_generic_thurston(m: CombinatorialMap) -> bool:
    """Planar, 4-regular, with 2d - 2 vertices for d = F/2."""
    if m.genus() != 0 or m.face_count % 2 != 0:
        return False
    d = m.face_count // 2
    if any(val != 4 for val in m.vertex_valences):
        return False
    return m.vertex_count == 2 * d - 2
