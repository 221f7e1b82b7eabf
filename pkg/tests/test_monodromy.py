import pytest

import balancedgraphs as bg


def _realize(m, coloring):
    dg = bg.dot_graph(m, coloring)
    enriched = bg.enrich(m, bg.perfect_matching(dg))
    return enriched, bg.admissible_labeling(enriched, coloring)


def test_constellation_from_b2(b2):
    coloring = bg.alternating_coloring(b2)
    enriched, lab = _realize(b2, coloring)
    c = bg.constellation_from(enriched, coloring, lab)
    assert c == bg.Constellation.from_cycles(2, [[(1, 2)], [(1, 2)]])
    report = bg.verify_constellation(c, bg.passport_of(enriched, lab))
    assert report.ok and report.genus == 0


def test_constellation_from_cycle_map(cycle_map):
    coloring = bg.alternating_coloring(cycle_map)
    lab = bg.admissible_labeling(cycle_map, coloring)
    c = bg.constellation_from(cycle_map, coloring, lab)
    assert c == bg.Constellation(1, ((0,), (0,)))


def test_constellation_from_t1(t1):
    coloring = bg.alternating_coloring(t1)
    lab = bg.admissible_labeling(t1, coloring)
    c = bg.constellation_from(t1, coloring, lab)
    assert c.m == 4 and all(p == (1, 0) for p in c.perms)


def test_verify_constellation_examples():
    ok = bg.Constellation.from_cycles(2, [[(1, 2)], [(1, 2)]])
    report = bg.verify_constellation(ok)
    assert report.ok and report.genus == 0
    assert report.cycle_types == ((2,), (2,))

    torus = bg.Constellation.from_cycles(2, [[(1, 2)]] * 4)
    report = bg.verify_constellation(torus)
    assert report.ok and report.genus == 1

    bad = bg.Constellation.from_cycles(3, [[(1, 2)], [(1, 3)]])
    report = bg.verify_constellation(bad)
    assert not report.ok and not report.product_is_identity


def test_verify_constellation_passport_flag():
    c = bg.Constellation.from_cycles(3, [[(1, 2)], [(1, 2)]])
    full = bg.Passport(3, ((2, 1), (2, 1)))
    stripped = bg.Passport(3, ((2,), (2,)))
    assert bg.verify_constellation(c, full).passport_match
    assert not bg.verify_constellation(c, stripped).passport_match
    assert bg.verify_constellation(c, stripped, ignore_trivial_parts=True).passport_match


def test_rh_genus():
    assert bg.rh_genus(bg.Passport(2, ((2,), (2,)))) == 0
    assert bg.rh_genus(bg.Passport(2, ((2,), (2,), (2,), (2,)))) == 1
    assert bg.rh_genus(bg.Passport(1, ((1,), (1,)))) == 0
    assert bg.rh_genus(bg.Passport(3, ((3,), (3,)))) == 0
    with pytest.raises(bg.NonIntegerGenus):
        bg.rh_genus(bg.Passport(2, ((2,), (2,), (2,))))
    with pytest.raises(bg.NonIntegerGenus):
        # too little branching forces a negative genus
        bg.rh_genus(bg.Passport(3, ((2, 1), (2, 1))))


def test_pullback_b2(b2):
    c = bg.Constellation.from_cycles(2, [[(1, 2)], [(1, 2)]])
    m, coloring, lab = bg.pullback_from_constellation(c)
    assert bg.are_isomorphic(m, b2)
    ok, why = bg.verify_labeling(m, coloring, lab)
    assert ok, why


def test_pullback_identity_degree_one(cycle_map):
    c = bg.Constellation(1, ((0,), (0,)))
    m, _, _ = bg.pullback_from_constellation(c)
    assert bg.are_isomorphic(m, cycle_map)


def test_pullback_t1(t1):
    c = bg.Constellation.from_cycles(2, [[(1, 2)]] * 4)
    m, coloring, lab = bg.pullback_from_constellation(c)
    assert (m.vertex_count, m.edge_count, m.face_count) == (4, 8, 4)
    assert m.genus() == 1
    assert bg.are_isomorphic(m, t1)
    report = bg.is_locally_balanced(m, coloring)
    assert report.locally_balanced and report.d == 2
    assert len(m.corners) == 4  # type (1, 2, 4)


def test_pullback_rejects_unverified():
    with pytest.raises(bg.NotVerified):
        bg.pullback_from_constellation(
            bg.Constellation.from_cycles(3, [[(1, 2)], [(1, 3)]])
        )
    # transitivity failure
    with pytest.raises(bg.NotVerified):
        bg.pullback_from_constellation(
            bg.Constellation.from_cycles(2, [[], []])
        )


def test_round_trip_constellations(constellation_corpus):
    for c in constellation_corpus:
        m, coloring, lab = bg.pullback_from_constellation(c)
        assert m.face_count == 2 * c.d
        ok, why = bg.verify_labeling(m, coloring, lab)
        assert ok, why
        back = bg.constellation_from(m, coloring, lab)
        assert bg.conjugation_canonical(back).perms == bg.conjugation_canonical(c).perms
        # genus agreement with the passport
        assert m.genus() == bg.rh_genus(bg.passport_of(m, lab))
        # vertex valences are twice the cycle lengths
        for j, perm in enumerate(c.perms, start=1):
            lengths = sorted(
                len(m.vertices[v]) // 2 for v in lab.vertices_with(j)
            )
            expected = sorted(
                len(cyc) for cyc in _perm_cycles(perm)
            )
            assert lengths == expected


def _perm_cycles(p):
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if not seen[s]:
            cyc = [s]
            seen[s] = True
            x = p[s]
            while x != s:
                seen[x] = True
                cyc.append(x)
                x = p[x]
            out.append(cyc)
    return out


def test_round_trip_corpus_maps(gb_corpus):
    for m in gb_corpus:
        coloring = bg.alternating_coloring(m)
        dg = bg.dot_graph(m, coloring)
        if not bg.hall_check(dg).ok:
            continue
        enriched, lab = _realize(m, coloring)
        c = bg.constellation_from(enriched, coloring, lab)
        passport = bg.passport_of(enriched, lab)
        assert bg.verify_constellation(c, passport).ok
        rebuilt, _, _ = bg.pullback_from_constellation(c)
        assert bg.are_isomorphic(rebuilt, enriched)
        # corner bound after forgetting superfluous labels
        new_map, new_lab = bg.compress_labels(enriched, lab)
        d = new_map.face_count // 2
        assert new_lab.m <= 2 * (new_map.genus() + d - 1)


def test_conjugation_canonical_identifies_relabelings():
    c1 = bg.Constellation.from_cycles(3, [[(1, 2, 3)], [(1, 3, 2)]])
    c2 = bg.Constellation.from_cycles(3, [[(2, 3, 1)], [(2, 1, 3)]])
    assert bg.conjugation_canonical(c1).perms == bg.conjugation_canonical(c2).perms
    inverse = bg.Constellation.from_cycles(3, [[(1, 3, 2)], [(1, 2, 3)]])
    assert (
        bg.conjugation_canonical(c1).perms == bg.conjugation_canonical(inverse).perms
    )  # swapped 3-cycles are conjugate by a transposition


def test_round_trip_random_larger_degree():
    # spot checks beyond the exhaustive corpus caps
    import random

    from balancedgraphs.permutations import compose_chain, inverse, is_transitive

    rng = random.Random(1349)
    found = 0
    while found < 25:
        d = rng.choice((5, 6))
        mm = rng.choice((2, 3, 4, 5))
        pre = tuple(
            tuple(rng.sample(range(d), d)) for _ in range(mm - 1)
        )
        perms = pre + (inverse(compose_chain(pre, d)),)
        if not is_transitive(perms, d):
            continue
        c = bg.Constellation(d, perms)
        m, coloring, lab = bg.pullback_from_constellation(c)
        assert m.face_count == 2 * d
        back = bg.constellation_from(m, coloring, lab)
        assert bg.conjugation_canonical(back).perms == bg.conjugation_canonical(c).perms
        assert m.genus() == bg.rh_genus(bg.passport_of(m, lab))
        found += 1


def test_constellation_serialization_round_trip():
    c = bg.Constellation.from_cycles(3, [[(1, 2, 3)], [(1, 3, 2)]])
    text = bg.serialize_constellation(c)
    assert bg.deserialize_constellation(text) == c
    with pytest.raises(bg.ParseError):
        bg.deserialize_constellation("{}")
    with pytest.raises(bg.ParseError):
        bg.deserialize_constellation("not json")
