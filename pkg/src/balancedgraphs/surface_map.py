"""Combinatorial maps: cell graphs on closed oriented surfaces.

A map is stored as a rotation system on darts (half-edges) 0..2E-1:

* ``alpha`` pairs the two darts of each edge (fixed-point-free involution),
* ``sigma`` is the counterclockwise successor around each vertex.

Vertices are the orbits of ``sigma``, edges the orbits of ``alpha`` and
faces the orbits of ``phi`` where ``phi(d) = sigma(alpha(d))``.  Traversing
a face cycle keeps that face on the left of each dart.  The Euler count
``V - E + F = 2 - 2g`` recovers the genus of the underlying surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BadPermutation,
    Disconnected,
    InvariantViolation,
    NonIntegerGenus,
    NotBipartiteFaces,
    NotInvolution,
    ParseError,
)
from .permutations import Perm, check_permutation

COLOR_A = "A"
COLOR_B = "B"


class CombinatorialMap:
    """An immutable rotation system.

    ``alpha`` and ``sigma`` are permutations of ``0..dart_count-1`` in
    one-line notation.  ``alpha`` must be an involution without fixed
    points and the pair must act transitively (the cell graph fills a
    connected surface).
    """

    def __init__(self, alpha, sigma, check: bool = True):
        alpha = tuple(alpha)
        sigma = tuple(sigma)
        if check:
            n = len(alpha)
            if n == 0 or n % 2 != 0:
                raise BadPermutation("dart count must be positive and even")
            alpha = check_permutation(alpha, n)
            sigma = check_permutation(sigma, n)
            for d in range(n):
                if alpha[d] == d:
                    raise NotInvolution(f"alpha fixes dart {d}")
                if alpha[alpha[d]] != d:
                    raise NotInvolution(f"alpha is not an involution at dart {d}")
            if not _orbit_reaches_all(alpha, sigma):
                raise Disconnected("the darts are not connected under alpha and sigma")
        self._alpha = alpha
        self._sigma = sigma

    @property
    def alpha(self) -> Perm:
        return self._alpha

    @property
    def sigma(self) -> Perm:
        return self._sigma

    @property
    def dart_count(self) -> int:
        return len(self._alpha)

    def phi(self, dart: int) -> int:
        """Next dart along the face on the left of ``dart``."""
        return self._sigma[self._alpha[dart]]

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return _orbits(self._sigma)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        phi = tuple(self._sigma[self._alpha[d]] for d in range(self.dart_count))
        return _orbits(phi)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (d, self._alpha[d]) for d in range(self.dart_count) if d < self._alpha[d]
        )

    @cached_property
    def vertex_of_dart(self) -> tuple[int, ...]:
        return _index_of(self.vertices, self.dart_count)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        return _index_of(self.faces, self.dart_count)

    @cached_property
    def edge_of_dart(self) -> tuple[int, ...]:
        out = [0] * self.dart_count
        for i, (d, e) in enumerate(self.edges):
            out[d] = out[e] = i
        return tuple(out)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def vertex_valences(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.vertices)

    @cached_property
    def corners(self) -> tuple[int, ...]:
        """Vertex ids of valence greater than 2."""
        return tuple(i for i, v in enumerate(self.vertices) if len(v) > 2)

    @cached_property
    def has_loops(self) -> bool:
        vod = self.vertex_of_dart
        return any(vod[d] == vod[e] for d, e in self.edges)

    def genus(self) -> int:
        chi = self.vertex_count - self.edge_count + self.face_count
        if chi % 2 != 0 or chi > 2:
            raise NonIntegerGenus(f"Euler characteristic {chi} is not 2 - 2g with g >= 0")
        return (2 - chi) // 2

    def relabel(self, dart_map) -> "CombinatorialMap":
        """Apply a dart relabeling: dart d becomes dart_map[d]."""
        n = self.dart_count
        perm = check_permutation(tuple(dart_map), n)
        alpha = [0] * n
        sigma = [0] * n
        for d in range(n):
            alpha[perm[d]] = perm[self._alpha[d]]
            sigma[perm[d]] = perm[self._sigma[d]]
        return CombinatorialMap(alpha, sigma, check=False)

    @cached_property
    def _canonical(self) -> tuple["CombinatorialMap", tuple[int, ...]]:
        best = None
        best_map = None
        for root in range(self.dart_count):
            relabeling = _bfs_relabeling(self._alpha, self._sigma, root)
            n = self.dart_count
            alpha = [0] * n
            sigma = [0] * n
            for d in range(n):
                alpha[relabeling[d]] = relabeling[self._alpha[d]]
                sigma[relabeling[d]] = relabeling[self._sigma[d]]
            key = (tuple(alpha), tuple(sigma))
            if best is None or key < best:
                best = key
                best_map = relabeling
        canon = CombinatorialMap(best[0], best[1], check=False)
        return canon, tuple(best_map)

    def canonical(self) -> "CombinatorialMap":
        """The canonical representative of the isomorphism class."""
        return self._canonical[0]

    def canonical_dart_map(self) -> tuple[int, ...]:
        """Relabeling sending this map onto :meth:`canonical`."""
        return self._canonical[1]

    def canonical_key(self) -> tuple[Perm, Perm]:
        canon = self.canonical()
        return (canon.alpha, canon.sigma)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CombinatorialMap)
            and self._alpha == other._alpha
            and self._sigma == other._sigma
        )

    def __hash__(self) -> int:
        return hash((self._alpha, self._sigma))

    def __repr__(self) -> str:
        return f"CombinatorialMap(alpha={list(self._alpha)}, sigma={list(self._sigma)})"


def _orbits(perm: Perm) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return tuple(out)


def _index_of(orbits, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i, orbit in enumerate(orbits):
        for d in orbit:
            out[d] = i
    return tuple(out)


def _orbit_reaches_all(alpha: Perm, sigma: Perm) -> bool:
    n = len(alpha)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        d = stack.pop()
        for e in (alpha[d], sigma[d]):
            if not seen[e]:
                seen[e] = True
                count += 1
                stack.append(e)
    return count == n


def _bfs_relabeling(alpha: Perm, sigma: Perm, root: int) -> list[int]:
    """New id per dart, breadth-first from ``root`` via alpha then sigma."""
    new = [-1] * len(alpha)
    order = [root]
    new[root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (alpha[d], sigma[d]):
            if new[e] < 0:
                new[e] = len(order)
                order.append(e)
    return new


def build_map(dart_count: int, alpha, sigma) -> CombinatorialMap:
    """Validate and build a map from its dart count and permutations."""
    alpha = tuple(alpha)
    sigma = tuple(sigma)
    if dart_count <= 0 or dart_count % 2 != 0:
        raise BadPermutation(f"dart count must be positive and even, got {dart_count}")
    if len(alpha) != dart_count or len(sigma) != dart_count:
        raise BadPermutation("alpha and sigma must have length dart_count")
    return CombinatorialMap(alpha, sigma)


def faces(m: CombinatorialMap) -> tuple[tuple[int, ...], ...]:
    """Face cycles of ``m`` (orbits of ``sigma circ alpha``)."""
    return m.faces


def genus(m: CombinatorialMap) -> int:
    return m.genus()


@dataclass(frozen=True)
class FaceColoring:
    """A proper two-coloring of the faces, values ``"A"`` and ``"B"``."""

    colors: tuple[str, ...]

    def color(self, face_id: int) -> str:
        return self.colors[face_id]

    def flip(self) -> "FaceColoring":
        return FaceColoring(
            tuple(COLOR_B if c == COLOR_A else COLOR_A for c in self.colors)
        )

    def faces_of(self, color: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c == color)


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex valences and the corner subset (valence above 2)."""

    valences: tuple[int, ...]
    corners: tuple[int, ...]


def degree_profile(m: CombinatorialMap) -> DegreeProfile:
    return DegreeProfile(m.vertex_valences, m.corners)


def face_adjacency(m: CombinatorialMap) -> tuple[tuple[int, int, int], ...]:
    """Dual multigraph: one arc ``(face, face, edge_id)`` per edge of ``m``.

    Parallel arcs are preserved; they matter when several edges separate
    the same pair of faces.
    """
    fod = m.face_of_dart
    return tuple((fod[d], fod[e], i) for i, (d, e) in enumerate(m.edges))


def alternating_coloring(m: CombinatorialMap) -> FaceColoring:
    """The alternating face coloring with the face left of dart 0 colored A.

    Raises :class:`NotBipartiteFaces` when the face adjacency graph has an
    odd cycle.  The only other proper coloring is the flip of this one.
    """
    nf = m.face_count
    colors = [None] * nf
    adjacency = [[] for _ in range(nf)]
    for f, g, _ in face_adjacency(m):
        adjacency[f].append(g)
        adjacency[g].append(f)
    start = m.face_of_dart[0]
    colors[start] = COLOR_A
    queue = [start]
    while queue:
        f = queue.pop()
        other = COLOR_B if colors[f] == COLOR_A else COLOR_A
        for g in adjacency[f]:
            if colors[g] is None:
                colors[g] = other
                queue.append(g)
            elif colors[g] == colors[f]:
                raise NotBipartiteFaces("adjacent faces cannot be colored differently")
    # the map is connected, so every face was reached
    return FaceColoring(tuple(colors))


def are_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap) -> bool:
    """Whether a dart relabeling commuting with sigma and alpha exists."""
    if m1.dart_count != m2.dart_count:
        return False
    return m1.canonical_key() == m2.canonical_key()


def subdivide_edges(m: CombinatorialMap, counts: dict[int, int]) -> CombinatorialMap:
    """Insert ``counts[edge_id]`` 2-valent vertices on each listed edge.

    Old darts keep their ids; new darts are appended, so old vertex and
    face ids are preserved.
    """
    alpha = list(m.alpha)
    sigma = list(m.sigma)
    for edge_id in sorted(counts):
        k = counts[edge_id]
        if k <= 0:
            continue
        d0, d1 = m.edges[edge_id]
        # chain d0 -- x_1 -- ... -- x_k -- d1; each x_i contributes darts p, q
        prev = d0
        for _ in range(k):
            p = len(alpha)
            q = p + 1
            alpha.extend([0, 0])
            sigma.extend([q, p])
            alpha[prev] = p
            alpha[p] = prev
            prev = q
        alpha[prev] = d1
        alpha[d1] = prev
    return CombinatorialMap(alpha, sigma)


@dataclass(frozen=True)
class MapDocument:
    """A deserialized map together with its optional decorations."""

    map: CombinatorialMap
    labels: tuple[int, ...] | None = None
    colors: FaceColoring | None = None
    real_cycle: tuple[int, ...] | None = None


def serialize(
    m: CombinatorialMap,
    labels=None,
    coloring: FaceColoring | None = None,
    real_cycle=None,
) -> str:
    """Canonical text document for ``m`` and optional decorations.

    The map is put into canonical form first, so serialization is stable
    across runs and across isomorphic dart labelings of the same input.
    ``labels`` is a per-vertex array (vertex ids in canonical order) and
    ``colors`` a per-face array.
    """
    canon = m.canonical()
    dart_map = m.canonical_dart_map()
    doc: dict = {
        "darts": canon.dart_count,
        "alpha": list(canon.alpha),
        "sigma": list(canon.sigma),
    }
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != m.vertex_count:
            raise InvariantViolation("labels must list one value per vertex")
        new_labels = [0] * canon.vertex_count
        for old_v, orbit in enumerate(m.vertices):
            new_v = canon.vertex_of_dart[dart_map[orbit[0]]]
            new_labels[new_v] = labels[old_v]
        doc["labels"] = new_labels
    if coloring is not None:
        if len(coloring.colors) != m.face_count:
            raise InvariantViolation("colors must list one value per face")
        new_colors = [""] * canon.face_count
        for old_f, orbit in enumerate(m.faces):
            new_f = canon.face_of_dart[dart_map[orbit[0]]]
            new_colors[new_f] = coloring.colors[old_f]
        doc["colors"] = new_colors
    if real_cycle is not None:
        doc["real_cycle"] = [dart_map[d] for d in real_cycle]
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def deserialize(text: str) -> MapDocument:
    """Parse a map document, validating all structural invariants."""
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not a valid document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("map document must be a JSON object")
    try:
        darts = doc["darts"]
        alpha = doc["alpha"]
        sigma = doc["sigma"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from exc
    if not isinstance(darts, int) or not isinstance(alpha, list) or not isinstance(sigma, list):
        raise ParseError("fields darts, alpha, sigma have the wrong types")
    try:
        m = build_map(darts, alpha, sigma)
    except (BadPermutation, NotInvolution, Disconnected) as exc:
        raise InvariantViolation(str(exc)) from exc

    labels = None
    if "labels" in doc:
        labels = doc["labels"]
        if (
            not isinstance(labels, list)
            or len(labels) != m.vertex_count
            or any(not isinstance(x, int) for x in labels)
        ):
            raise InvariantViolation("labels must list one integer per vertex")
        labels = tuple(labels)

    colors = None
    if "colors" in doc:
        raw = doc["colors"]
        if (
            not isinstance(raw, list)
            or len(raw) != m.face_count
            or any(c not in (COLOR_A, COLOR_B) for c in raw)
        ):
            raise InvariantViolation("colors must assign A or B to every face")
        fod = m.face_of_dart
        for d, e in m.edges:
            if raw[fod[d]] == raw[fod[e]]:
                raise InvariantViolation("colors is not a proper face two-coloring")
        colors = FaceColoring(tuple(raw))

    real_cycle = None
    if "real_cycle" in doc:
        raw = doc["real_cycle"]
        if not isinstance(raw, list) or any(
            not isinstance(d, int) or not 0 <= d < m.dart_count for d in raw
        ):
            raise InvariantViolation("real_cycle must list dart ids")
        real_cycle = tuple(raw)

    return MapDocument(m, labels, colors, real_cycle)
