"""Independent slow checkers the library results are compared against."""

from __future__ import annotations

from itertools import combinations

import balancedgraphs as bg


def region_invariants_hold(m, coloring, face_set) -> bool:
    """Direct re-statement of the region conditions, no shared code paths."""
    inside = set(face_set)
    if not inside or len(inside) >= m.face_count:
        return False
    fod = m.face_of_dart
    vod = m.vertex_of_dart
    boundary_ends: dict[int, int] = {}
    for d, e in m.edges:
        sides = (fod[d] in inside, fod[e] in inside)
        if sides[0] == sides[1]:
            continue
        inside_dart = d if sides[0] else e
        if coloring.color(fod[inside_dart]) != bg.COLOR_A:
            return False
        boundary_ends[vod[d]] = boundary_ends.get(vod[d], 0) + 1
        boundary_ends[vod[e]] = boundary_ends.get(vod[e], 0) + 1
    if any(c != 2 for c in boundary_ends.values()):
        return False
    # connectivity through edges interior to the set
    start = next(iter(inside))
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for d, e in m.edges:
            pair = {fod[d], fod[e]}
            if f in pair and pair <= inside:
                for g in pair:
                    if g not in seen:
                        seen.add(g)
                        stack.append(g)
    return seen == inside


def brute_force_regions(m, coloring):
    """Every face subset passing the region invariants, as sorted tuples."""
    out = []
    faces = range(m.face_count)
    for size in range(1, m.face_count):
        for subset in combinations(faces, size):
            if region_invariants_hold(m, coloring, subset):
                out.append(subset)
    return sorted(out)


def brute_force_locally_balanced(m, coloring) -> bool:
    for col in (coloring, coloring.flip()):
        for subset in brute_force_regions(m, col):
            a = sum(1 for f in subset if col.color(f) == bg.COLOR_A)
            if a <= len(subset) - a:
                return False
    return True


def face_subset_hall_ok(m, coloring) -> bool:
    """Hall condition checked over subsets of B faces directly.

    Dots in one face share their neighborhood, so it is enough to compare
    dot totals of B-face subsets against their collected A neighbors.
    """
    corners = set(m.corners)
    total = len(corners)
    vod = m.vertex_of_dart
    counts = [
        total - len({vod[d] for d in face} & corners) for face in m.faces
    ]
    neighbors: list[set[int]] = [set() for _ in range(m.face_count)]
    for f, g, _ in bg.face_adjacency(m):
        if f != g:
            neighbors[f].add(g)
            neighbors[g].add(f)
    b_faces = coloring.faces_of(bg.COLOR_B)
    for size in range(1, len(b_faces) + 1):
        for subset in combinations(b_faces, size):
            need = sum(counts[f] for f in subset)
            have = sum(counts[g] for g in set().union(*(neighbors[f] for f in subset)))
            if have < need:
                return False
    return True


def thurston_single_cycle_balanced(m, coloring) -> bool:
    """The single-cycle condition for planar maps, both colorings.

    Positive cycles are vertex-simple directed cycles of darts whose left
    face is A colored; the faces flooded from those left faces without
    crossing the cycle must hold strictly more A than B faces.
    """
    assert m.genus() == 0
    vod, fod = m.vertex_of_dart, m.face_of_dart
    adjacency = bg.face_adjacency(m)
    for col in (coloring, coloring.flip()):
        outgoing: dict[int, list[int]] = {}
        for d in range(m.dart_count):
            if col.color(fod[d]) == bg.COLOR_A:
                outgoing.setdefault(vod[d], []).append(d)
        cycles: list[list[int]] = []

        def search(start, v, path, visited):
            for d in outgoing.get(v, ()):
                w = vod[m.alpha[d]]
                if w == start:
                    cycles.append(path + [d])
                elif w > start and w not in visited:
                    search(start, w, path + [d], visited | {w})

        for start in range(m.vertex_count):
            search(start, start, [], {start})
        for cyc in cycles:
            cyc_edges = {m.edge_of_dart[d] for d in cyc}
            inside = {fod[d] for d in cyc}
            stack = list(inside)
            while stack:
                f = stack.pop()
                for g, h, e in adjacency:
                    if e in cyc_edges:
                        continue
                    if g == f and h not in inside:
                        inside.add(h)
                        stack.append(h)
                    elif h == f and g not in inside:
                        inside.add(g)
                        stack.append(g)
            a = sum(1 for f in inside if col.color(f) == bg.COLOR_A)
            if a <= len(inside) - a:
                return False
    return True
