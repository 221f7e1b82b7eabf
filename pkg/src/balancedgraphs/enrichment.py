"""Dot graphs, the Hall condition, perfect matchings, and enrichment.

Each face receives ``m - e_F`` dots, where ``m`` is the total corner count
and ``e_F`` the number of corners on the face.  Dots in A faces may be
matched with dots in edge-adjacent B faces; a perfect matching turns into
2-valent vertices subdividing shared edges, after which every face carries
exactly ``m`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeDotCount, NoPerfectMatching
from .surface_map import (
    COLOR_A,
    COLOR_B,
    CombinatorialMap,
    FaceColoring,
    face_adjacency,
    subdivide_edges,
)

Dot = tuple[int, int]


@dataclass(frozen=True)
class DotGraph:
    m: int
    dot_counts: tuple[int, ...]
    dots_a: tuple[Dot, ...]
    dots_b: tuple[Dot, ...]
    # collapsed adjacency between faces, and the shared edges per face pair
    face_neighbors: tuple[tuple[int, ...], ...]
    shared_edges: dict[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True)
class HallResult:
    ok: bool
    witness: tuple[Dot, ...] = ()

    def witness_faces(self) -> tuple[int, ...]:
        return tuple(sorted({face for face, _ in self.witness}))


@dataclass(frozen=True)
class DotMatching:
    pairs: tuple[tuple[Dot, Dot, int], ...]


def dot_graph(m: CombinatorialMap, coloring: FaceColoring) -> DotGraph:
    """Dot graph of a globally balanced map with at least 2 corners.

    The counts assume the input carries no 2-valent vertices yet; those
    are exactly what enrichment inserts afterwards.
    """
    corners = set(m.corners)
    total = len(corners)
    if total < 2:
        raise ValueError(f"need at least 2 corners, found {total}")
    vod = m.vertex_of_dart
    counts = []
    for face in m.faces:
        e_f = len({vod[d] for d in face} & corners)
        if e_f > total:
            raise NegativeDotCount(f"face has {e_f} corners but only {total} exist")
        counts.append(total - e_f)
    dots_a = tuple(
        (f, i) for f in coloring.faces_of(COLOR_A) for i in range(counts[f])
    )
    dots_b = tuple(
        (f, i) for f in coloring.faces_of(COLOR_B) for i in range(counts[f])
    )
    shared: dict[tuple[int, int], list[int]] = {}
    neighbor_sets: list[set[int]] = [set() for _ in range(m.face_count)]
    for f, g, edge_id in face_adjacency(m):
        if f == g:
            continue
        key = (min(f, g), max(f, g))
        shared.setdefault(key, []).append(edge_id)
        neighbor_sets[f].add(g)
        neighbor_sets[g].add(f)
    return DotGraph(
        total,
        tuple(counts),
        dots_a,
        dots_b,
        tuple(tuple(sorted(s)) for s in neighbor_sets),
        {k: tuple(sorted(v)) for k, v in shared.items()},
    )


def _maximum_matching(dg: DotGraph) -> dict[Dot, Dot]:
    """Kuhn's augmenting paths; returns the B-dot to A-dot assignment."""
    a_by_face: dict[int, list[Dot]] = {}
    for dot in dg.dots_a:
        a_by_face.setdefault(dot[0], []).append(dot)
    match_a: dict[Dot, Dot] = {}
    match_b: dict[Dot, Dot] = {}

    def neighbors_of(b_face: int):
        for g in dg.face_neighbors[b_face]:
            yield from a_by_face.get(g, ())

    def augment(b: Dot, visited: set[Dot]) -> bool:
        for a in neighbors_of(b[0]):
            if a in visited:
                continue
            visited.add(a)
            if a not in match_a or augment(match_a[a], visited):
                match_a[a] = b
                match_b[b] = a
                return True
        return False

    for b in dg.dots_b:
        augment(b, set())
    return match_b


def hall_check(dg: DotGraph) -> HallResult:
    """Whether every set of B dots has at least as many A neighbors.

    Decided through maximum-matching deficiency; on failure the witness is
    a set of B dots whose neighborhood is strictly smaller.
    """
    match_b = _maximum_matching(dg)
    unmatched = [b for b in dg.dots_b if b not in match_b]
    if not unmatched:
        return HallResult(True)
    # alternating reachability from the unmatched B dots
    match_a = {a: b for b, a in match_b.items()}
    a_by_face: dict[int, list[Dot]] = {}
    for dot in dg.dots_a:
        a_by_face.setdefault(dot[0], []).append(dot)
    reach_b: set[Dot] = set(unmatched)
    reach_a: set[Dot] = set()
    frontier = list(unmatched)
    while frontier:
        b = frontier.pop()
        for g in dg.face_neighbors[b[0]]:
            for a in a_by_face.get(g, ()):
                if a in reach_a:
                    continue
                reach_a.add(a)
                partner = match_a.get(a)
                if partner is not None and partner not in reach_b:
                    reach_b.add(partner)
                    frontier.append(partner)
    witness = tuple(sorted(reach_b))
    return HallResult(False, witness)


def perfect_matching(dg: DotGraph) -> DotMatching:
    """A perfect matching with host edges, deterministic in the dot order.

    Matched pairs between a face pair are spread round-robin over the
    edges that pair shares.  Raises :class:`NoPerfectMatching` with a Hall
    witness when none exists.
    """
    if len(dg.dots_a) != len(dg.dots_b):
        raise NoPerfectMatching(
            f"{len(dg.dots_a)} A dots versus {len(dg.dots_b)} B dots"
        )
    result = hall_check(dg)
    if not result.ok:
        raise NoPerfectMatching("Hall condition fails", witness=result.witness)
    match_b = _maximum_matching(dg)
    per_pair: dict[tuple[int, int], int] = {}
    pairs = []
    for b in dg.dots_b:
        a = match_b[b]
        key = (min(a[0], b[0]), max(a[0], b[0]))
        hosts = dg.shared_edges[key]
        t = per_pair.get(key, 0)
        per_pair[key] = t + 1
        pairs.append((a, b, hosts[t % len(hosts)]))
    pairs.sort()
    return DotMatching(tuple(pairs))


def iter_perfect_matchings(dg: DotGraph):
    """Yield one perfect matching per distinct pair-count matrix.

    Dots within a face are interchangeable, so two matchings produce the
    same enriched map exactly when they pair the same number of dots
    between each face pair.  Deterministic order.
    """
    a_faces = sorted({f for f, _ in dg.dots_a})
    b_remaining = {}
    for f, _ in dg.dots_b:
        b_remaining[f] = b_remaining.get(f, 0) + 1
    counts = dg.dot_counts

    def distribute(i: int, allocation: dict[tuple[int, int], int]):
        if i == len(a_faces):
            if all(v == 0 for v in b_remaining.values()):
                yield dict(allocation)
            return
        f = a_faces[i]
        targets = [g for g in dg.face_neighbors[f] if b_remaining.get(g, 0) > 0]

        def split(need: int, t: int):
            if t == len(targets):
                if need == 0:
                    yield from distribute(i + 1, allocation)
                return
            g = targets[t]
            top = min(need, b_remaining[g])
            for take in range(top + 1):
                if take:
                    allocation[(f, g)] = take
                    b_remaining[g] -= take
                yield from split(need - take, t + 1)
                if take:
                    del allocation[(f, g)]
                    b_remaining[g] += take

        yield from split(counts[f], 0)

    for allocation in distribute(0, {}):
        a_next = {f: 0 for f in a_faces}
        b_next: dict[int, int] = {}
        per_pair: dict[tuple[int, int], int] = {}
        pairs = []
        for (f, g), k in sorted(allocation.items()):
            hosts = dg.shared_edges[(min(f, g), max(f, g))]
            for _ in range(k):
                a_dot = (f, a_next[f])
                a_next[f] += 1
                b_dot = (g, b_next.get(g, 0))
                b_next[g] = b_dot[1] + 1
                key = (min(f, g), max(f, g))
                t = per_pair.get(key, 0)
                per_pair[key] = t + 1
                pairs.append((a_dot, b_dot, hosts[t % len(hosts)]))
        pairs.sort()
        yield DotMatching(tuple(pairs))


def enrich(m: CombinatorialMap, matching: DotMatching) -> CombinatorialMap:
    """Insert one 2-valent vertex per matched pair on its host edge.

    Old dart, vertex and face ids survive; each pair adds one vertex, and
    several pairs may subdivide the same edge.
    """
    counts: dict[int, int] = {}
    for _, _, edge_id in matching.pairs:
        counts[edge_id] = counts.get(edge_id, 0) + 1
    if not counts:
        return m
    return subdivide_edges(m, counts)
