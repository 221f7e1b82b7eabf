"""Admissible vertex labelings, passports, and charge conservation.

On an enriched balanced graph whose faces all carry the same number ``m``
of vertices, an admissible labeling assigns 1..m so that the labels read
cyclically increasing around every A face (and reversed around B faces),
and so that for every label the half-valences sum to the degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InconsistentPropagation, InfeasibleWeighting
from .surface_map import (
    COLOR_A,
    COLOR_B,
    CombinatorialMap,
    FaceColoring,
    alternating_coloring,
)
from .enrichment import dot_graph, enrich, iter_perfect_matchings


@dataclass(frozen=True)
class VertexLabeling:
    """Per-vertex labels in 1..m."""

    m: int
    labels: tuple[int, ...]

    def of(self, vertex_id: int) -> int:
        return self.labels[vertex_id]

    def vertices_with(self, label: int) -> tuple[int, ...]:
        return tuple(v for v, lb in enumerate(self.labels) if lb == label)


@dataclass(frozen=True)
class Passport:
    """One partition of the degree per label."""

    d: int
    parts: tuple[tuple[int, ...], ...]


def _face_vertex_sequences(m: CombinatorialMap) -> list[tuple[int, ...]]:
    vod = m.vertex_of_dart
    return [tuple(vod[d] for d in face) for face in m.faces]


def _is_cyclic_rotation_of_range(seq, mm: int) -> bool:
    if len(seq) != mm or sorted(seq) != list(range(1, mm + 1)):
        return False
    start = seq.index(1)
    return all(seq[(start + t) % mm] == t + 1 for t in range(mm))


def admissible_labeling(
    m: CombinatorialMap, coloring: FaceColoring
) -> VertexLabeling:
    """Construct an admissible labeling by propagation across corners.

    The first A face (minimal face id) reads 1..m starting at its minimal
    dart; labels spread to A faces sharing a corner until all vertices are
    labeled, then the full labeling is verified rather than assumed.
    """
    sequences = _face_vertex_sequences(m)
    lengths = {len(seq) for seq in sequences}
    if len(lengths) != 1:
        raise InconsistentPropagation(
            f"faces carry different vertex counts: {sorted(lengths)}"
        )
    mm = lengths.pop()
    for seq in sequences:
        if len(set(seq)) != mm:
            raise InconsistentPropagation("a vertex is incident twice to a face")

    a_faces = [f for f in range(m.face_count) if coloring.color(f) == COLOR_A]
    corners = set(m.corners)
    a_faces_of_vertex: dict[int, list[int]] = {}
    for f in a_faces:
        for v in sequences[f]:
            a_faces_of_vertex.setdefault(v, []).append(f)

    labels = [0] * m.vertex_count

    def stamp(face: int, anchor_pos: int, anchor_label: int):
        seq = sequences[face]
        for t in range(mm):
            v = seq[(anchor_pos + t) % mm]
            want = (anchor_label - 1 + t) % mm + 1
            if labels[v] == 0:
                labels[v] = want
            elif labels[v] != want:
                raise InconsistentPropagation(
                    f"vertex {v} receives labels {labels[v]} and {want}"
                )

    first = a_faces[0]
    stamp(first, 0, 1)
    done = {first}
    queue = [first]
    while queue:
        f = queue.pop(0)
        for v in sequences[f]:
            if v not in corners:
                continue
            for g in a_faces_of_vertex[v]:
                if g in done:
                    continue
                stamp(g, sequences[g].index(v), labels[v])
                done.add(g)
                queue.append(g)
    if any(lb == 0 for lb in labels):
        raise InconsistentPropagation("propagation did not reach every vertex")

    labeling = VertexLabeling(mm, tuple(labels))
    ok, why = verify_labeling(m, coloring, labeling)
    if not ok:
        raise InconsistentPropagation(f"propagated labeling is not admissible: {why}")
    return labeling


def verify_labeling(
    m: CombinatorialMap, coloring: FaceColoring, lab: VertexLabeling
) -> tuple[bool, str | None]:
    """Check both admissibility conditions; returns (ok, first violation)."""
    if len(lab.labels) != m.vertex_count:
        return False, "one label per vertex required"
    if any(not 1 <= lb <= lab.m for lb in lab.labels):
        return False, "labels must lie in 1..m"
    sequences = _face_vertex_sequences(m)
    for f, seq in enumerate(sequences):
        read = [lab.labels[v] for v in seq]
        if coloring.color(f) == COLOR_B:
            read = read[::-1]
        if not _is_cyclic_rotation_of_range(read, lab.m):
            return False, f"face {f} reads labels {read}"
    d = m.face_count // 2
    for j in range(1, lab.m + 1):
        total = sum(
            len(m.vertices[v]) // 2 for v in range(m.vertex_count) if lab.labels[v] == j
        )
        if total != d:
            return False, f"label {j} has half-valence sum {total}, expected {d}"
    return True, None


def passport_of(m: CombinatorialMap, lab: VertexLabeling) -> Passport:
    """Partitions of the degree: half-valences per label, sorted decreasing."""
    d = m.face_count // 2
    parts = []
    for j in range(1, lab.m + 1):
        part = tuple(
            sorted(
                (len(m.vertices[v]) // 2 for v in lab.vertices_with(j)), reverse=True
            )
        )
        parts.append(part)
    return Passport(d, tuple(parts))


def compress_labels(
    m: CombinatorialMap, lab: VertexLabeling
) -> tuple[CombinatorialMap, VertexLabeling]:
    """Remove label classes made of 2-valent vertices only.

    The vertices of the removed classes are spliced out (their edges merge)
    and the remaining labels renumbered 1..m-p in the same cyclic order.
    Requires at least one corner.
    """
    if not m.corners:
        raise ValueError("compression requires at least one corner")
    valences = m.vertex_valences
    removable = {
        j
        for j in range(1, lab.m + 1)
        if all(valences[v] == 2 for v in lab.vertices_with(j))
    }
    if not removable:
        return m, lab
    removed_vertices = {
        v for v in range(m.vertex_count) if lab.labels[v] in removable
    }
    removed_darts = {d for v in removed_vertices for d in m.vertices[v]}

    def survivor_partner(d: int) -> int:
        partner = m.alpha[d]
        hops = 0
        while partner in removed_darts:
            partner = m.alpha[m.sigma[partner]]
            hops += 1
            if hops > m.dart_count:
                raise InconsistentPropagation("removed vertices form a closed cycle")
        return partner

    kept = sorted(set(range(m.dart_count)) - removed_darts)
    dense = {d: i for i, d in enumerate(kept)}
    alpha = [dense[survivor_partner(d)] for d in kept]
    sigma = [dense[m.sigma[d]] for d in kept]
    new_map = CombinatorialMap(alpha, sigma)

    rank = {}
    for j in range(1, lab.m + 1):
        if j not in removable:
            rank[j] = len(rank) + 1
    new_labels = [
        rank[lab.labels[v]]
        for v in range(m.vertex_count)
        if v not in removed_vertices
    ]
    return new_map, VertexLabeling(len(rank), tuple(new_labels))


def generic_labeling(
    m: CombinatorialMap, coloring: FaceColoring | None = None
) -> tuple[CombinatorialMap, VertexLabeling]:
    """An admissible labeling with pairwise distinct corner labels.

    Applies to simple maps (every vertex 4-valent).  Matchings are tried
    in deterministic order until one labels the corners injectively.
    """
    if any(val != 4 for val in m.vertex_valences):
        raise ValueError("generic labelings require every vertex to be 4-valent")
    if coloring is None:
        coloring = alternating_coloring(m)
    dg = dot_graph(m, coloring)
    ncorners = m.vertex_count
    for matching in iter_perfect_matchings(dg):
        enriched = enrich(m, matching)
        try:
            lab = admissible_labeling(enriched, coloring)
        except InconsistentPropagation:
            continue
        corner_labels = lab.labels[:ncorners]
        if len(set(corner_labels)) == ncorners:
            return enriched, lab
    raise InconsistentPropagation("no matching produces distinct corner labels")


@dataclass(frozen=True)
class ChargeableGraph:
    """Bipartite graph with input and output vertex sets and capacities.

    Vertices are ("x", i) and ("y", j).  ``inputs`` lie on the x side and
    ``outputs`` on the y side; every other vertex is interior and carries a
    positive capacity.
    """

    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]
    inputs: frozenset[int]
    outputs: frozenset[int]
    capacity: dict = field(default_factory=dict)

    def interior_vertices(self):
        for i in range(self.x_count):
            if i not in self.inputs:
                yield ("x", i)
        for j in range(self.y_count):
            if j not in self.outputs:
                yield ("y", j)


@dataclass(frozen=True)
class Weighting:
    weights: tuple[float, ...]


@dataclass(frozen=True)
class ChargeReport:
    in_value: float
    out_value: float
    equal: bool


def charge_conservation_check(
    cg: ChargeableGraph, w: Weighting, tol: float = 1e-9
) -> ChargeReport:
    """Input and output values of a feasible weighting, and their equality.

    Feasibility (strict positivity, interior sums equal to capacity) is
    enforced and raises :class:`InfeasibleWeighting`; equality of the two
    values is reported, not asserted.
    """
    if len(w.weights) != len(cg.edges):
        raise InfeasibleWeighting("one weight per edge required")
    if any(weight <= 0 for weight in w.weights):
        raise InfeasibleWeighting("weights must be strictly positive")
    sums: dict[tuple[str, int], float] = {}
    for (x, y), weight in zip(cg.edges, w.weights):
        sums[("x", x)] = sums.get(("x", x), 0.0) + weight
        sums[("y", y)] = sums.get(("y", y), 0.0) + weight
    for v in cg.interior_vertices():
        cap = cg.capacity.get(v)
        if cap is None:
            raise InfeasibleWeighting(f"interior vertex {v} has no capacity")
        if abs(sums.get(v, 0.0) - cap) > tol:
            raise InfeasibleWeighting(
                f"vertex {v} carries {sums.get(v, 0.0)}, capacity is {cap}"
            )
    in_value = sum(
        weight for (x, _), weight in zip(cg.edges, w.weights) if x in cg.inputs
    )
    out_value = sum(
        weight for (_, y), weight in zip(cg.edges, w.weights) if y in cg.outputs
    )
    return ChargeReport(in_value, out_value, abs(in_value - out_value) <= tol)
