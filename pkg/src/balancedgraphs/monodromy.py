"""Constellations: permutation monodromy of branched coverings of the sphere.

A constellation of degree d is a sequence of permutations of {1..d}, one
per branch point in cyclic order, whose composite acts as the identity
(later factors applied first) and whose group acts transitively.  Sheets
are the A faces of the pullback graph; around a vertex with label j the
incident A faces follow a cycle of the j-th permutation in sigma order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import NotVerified, NonIntegerGenus, ParseError
from .labeling import Passport, VertexLabeling
from .permutations import (
    Perm,
    check_permutation,
    compose_chain,
    cycle_type,
    cycles,
    identity,
    is_transitive,
)
from .surface_map import COLOR_A, COLOR_B, CombinatorialMap, FaceColoring


@dataclass(frozen=True)
class Constellation:
    """Degree and permutations, stored 0-indexed in one-line notation."""

    d: int
    perms: tuple[Perm, ...]

    def __post_init__(self):
        for p in self.perms:
            check_permutation(p, self.d)

    @property
    def m(self) -> int:
        return len(self.perms)

    @classmethod
    def from_cycles(cls, d: int, cycle_lists) -> "Constellation":
        """Build from 1-indexed cycle notation, one list of cycles per slot."""
        perms = []
        for cycle_list in cycle_lists:
            p = list(range(d))
            for cyc in cycle_list:
                for i, x in enumerate(cyc):
                    p[x - 1] = cyc[(i + 1) % len(cyc)] - 1
            perms.append(tuple(p))
        return cls(d, tuple(perms))


@dataclass(frozen=True)
class ConstellationReport:
    ok: bool
    product_is_identity: bool
    transitive: bool
    genus: int | None
    cycle_types: tuple[tuple[int, ...], ...]
    passport_match: bool | None = None
    failures: tuple[str, ...] = ()


def verify_constellation(
    c: Constellation,
    expected: Passport | None = None,
    ignore_trivial_parts: bool = False,
) -> ConstellationReport:
    """Check the product-identity and transitivity invariants.

    When ``expected`` is given, the cycle types (fixed points included, or
    stripped with ``ignore_trivial_parts``) are compared against it.  The
    genus comes from the Euler count of the would-be pullback surface.
    """
    failures = []
    product_ok = compose_chain(c.perms, c.d) == identity(c.d)
    if not product_ok:
        failures.append("composite of the permutations is not the identity")
    transitive = is_transitive(c.perms, c.d)
    if not transitive:
        failures.append("the permutations do not act transitively")
    types = tuple(cycle_type(p) for p in c.perms)
    branching = sum(length - 1 for t in types for length in t)
    two_minus_2g = 2 * c.d - branching
    g = None
    if two_minus_2g % 2 == 0 and two_minus_2g <= 2:
        g = (2 - two_minus_2g) // 2
    else:
        failures.append("branching total is inconsistent with an integer genus")
    passport_match = None
    if expected is not None:
        want = []
        for part in expected.parts:
            entries = tuple(sorted(part, reverse=True))
            if ignore_trivial_parts:
                entries = tuple(x for x in entries if x != 1)
            want.append(entries)
        have = [
            tuple(x for x in t if x != 1) if ignore_trivial_parts else t
            for t in types
        ]
        passport_match = list(have) == want
        if not passport_match:
            failures.append("cycle types do not match the expected passport")
    ok = product_ok and transitive and g is not None and passport_match is not False
    return ConstellationReport(
        ok, product_ok, transitive, g, types, passport_match, tuple(failures)
    )


def rh_genus(p: Passport) -> int:
    """Genus forced by the total branching of a passport."""
    branching = sum(entry - 1 for part in p.parts for entry in part)
    two_minus_2g = 2 * p.d - branching
    if two_minus_2g % 2 != 0:
        raise NonIntegerGenus(f"branching parity inconsistent for degree {p.d}")
    g = (2 - two_minus_2g) // 2
    if g < 0:
        raise NonIntegerGenus(f"negative genus {g} for degree {p.d}")
    return g


def pullback_from_constellation(
    c: Constellation,
) -> tuple[CombinatorialMap, FaceColoring, VertexLabeling]:
    """Build the cell graph over the branch-point curve of a covering.

    Edges are indexed by (arc j, sheet s); dart 2(jd+s) leaves the vertex
    over branch point j along the boundary of A sheet s, its partner
    arrives at the vertex over branch point j+1.  A faces are the sheets,
    vertex labels record the branch point, and the output is canonical.
    """
    report = verify_constellation(c)
    if not report.ok:
        raise NotVerified("; ".join(report.failures))
    d, m = c.d, c.m
    n = 2 * d * m

    def out(j: int, s: int) -> int:
        return 2 * (j * d + s)

    def arrive(j: int, s: int) -> int:
        return 2 * (j * d + s) + 1

    alpha = [0] * n
    sigma = [0] * n
    for j in range(m):
        pj = c.perms[j]
        for s in range(d):
            alpha[out(j, s)] = arrive(j, s)
            alpha[arrive(j, s)] = out(j, s)
            sigma[out(j, s)] = arrive((j - 1) % m, pj[s])
            sigma[arrive(j, s)] = out((j + 1) % m, s)
    built = CombinatorialMap(alpha, sigma)

    colors = [
        COLOR_A if built.faces[f][0] % 2 == 0 else COLOR_B
        for f in range(built.face_count)
    ]
    # every face is all-out or all-in darts; the out ones are the sheets
    labels = [0] * built.vertex_count
    for j in range(m):
        for s in range(d):
            labels[built.vertex_of_dart[out(j, s)]] = j + 1

    canon = built.canonical()
    dart_map = built.canonical_dart_map()
    new_colors = [""] * canon.face_count
    for f, orbit in enumerate(built.faces):
        new_colors[canon.face_of_dart[dart_map[orbit[0]]]] = colors[f]
    new_labels = [0] * canon.vertex_count
    for v, orbit in enumerate(built.vertices):
        new_labels[canon.vertex_of_dart[dart_map[orbit[0]]]] = labels[v]
    return canon, FaceColoring(tuple(new_colors)), VertexLabeling(m, tuple(new_labels))


def constellation_from(
    m: CombinatorialMap, coloring: FaceColoring, lab: VertexLabeling
) -> Constellation:
    """Read the monodromy off an admissible graph.

    A faces are numbered by minimal dart; around each vertex with label j
    the incident A faces, read in sigma order, contribute one cycle to the
    j-th permutation.
    """
    a_faces = [f for f in range(m.face_count) if coloring.color(f) == COLOR_A]
    sheet = {f: i for i, f in enumerate(a_faces)}
    d = len(a_faces)
    perms = []
    fod = m.face_of_dart
    for j in range(1, lab.m + 1):
        p = list(range(d))
        seen: set[int] = set()
        for v in lab.vertices_with(j):
            ring = [
                sheet[fod[dart]]
                for dart in m.vertices[v]
                if coloring.color(fod[dart]) == COLOR_A
            ]
            for i, s in enumerate(ring):
                if s in seen:
                    raise NotVerified(
                        f"sheet {s + 1} appears twice around vertices with label {j}"
                    )
                seen.add(s)
                p[s] = ring[(i + 1) % len(ring)]
        perms.append(tuple(p))
    return Constellation(d, tuple(perms))


def conjugation_canonical(c: Constellation) -> Constellation:
    """Minimal representative under simultaneous sheet relabeling."""
    best = None
    for relabel in itertools.permutations(range(c.d)):
        candidate = tuple(
            tuple(relabel[p[s]] for s in _inverse_order(relabel))
            for p in c.perms
        )
        if best is None or candidate < best:
            best = candidate
    return Constellation(c.d, best)


def _inverse_order(relabel: tuple[int, ...]) -> list[int]:
    inv = [0] * len(relabel)
    for i, x in enumerate(relabel):
        inv[x] = i
    return inv


def serialize_constellation(c: Constellation) -> str:
    """Text document with 1-indexed one-line permutations."""
    doc = {"d": c.d, "perms": [[x + 1 for x in p] for p in c.perms]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def deserialize_constellation(text: str) -> Constellation:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not a valid document: {exc}") from exc
    if not isinstance(doc, dict) or "d" not in doc or "perms" not in doc:
        raise ParseError("constellation document needs fields d and perms")
    d = doc["d"]
    perms = doc["perms"]
    if not isinstance(d, int) or d < 1 or not isinstance(perms, list):
        raise ParseError("field d must be a positive integer, perms a list")
    out = []
    for p in perms:
        if not isinstance(p, list):
            raise ParseError("each permutation must be a list")
        out.append(check_permutation(tuple(x - 1 for x in p), d))
    return Constellation(d, tuple(out))
