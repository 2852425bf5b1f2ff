"""Exact minimum covers: solver vs brute force, M(q), and the pencil analysis."""

import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from pgturan.covering import (
    CoveringError,
    compute_Mq,
    exhaustive_cover_exists,
    m_of_arc,
    min_hitting_set,
    passant_analysis,
    verify_appendix,
)
from pgturan.geometry import build_geometry, format_coords, point_of
from pgturan.structures import (
    apply_projectivity,
    bits,
    enumerate_complete_arcs,
    mask_of,
    projectivity_from_frame,
    secant_profile,
)


def brute_minimum(universe, family):
    pts = [p for p in bits(universe)]
    for size in range(len(pts) + 1):
        for combo in itertools.combinations(pts, size):
            m = mask_of(combo)
            if all(m & lm for lm in family):
                return size
    return None


def test_empty_family_is_free():
    res = min_hitting_set((1 << 5) - 1, [])
    assert (res.minimum_size, res.witness, res.optimal) == (0, 0, True)


def test_disjoint_line_rejected():
    with pytest.raises(CoveringError):
        min_hitting_set(0b0011, [0b1100])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_solver_matches_brute_force(data):
    n = data.draw(st.integers(3, 9))
    universe = (1 << n) - 1
    n_lines = data.draw(st.integers(1, 6))
    family = []
    for _ in range(n_lines):
        size = data.draw(st.integers(1, n))
        pts = data.draw(st.sets(st.integers(0, n - 1), min_size=size, max_size=size))
        family.append(mask_of(pts))
    res = min_hitting_set(universe, family)
    assert res.optimal
    assert res.minimum_size == brute_minimum(universe, family)
    assert all(res.witness & lm for lm in family)


@pytest.mark.parametrize("q,expect", [(3, 2), (4, 3), (5, 4), (7, 6), (8, 7)])
def test_m_of_arc_values(q, expect):
    g = build_geometry(2, q)
    rep = compute_Mq(g)
    assert rep.M_q == expect
    assert all(c.cover.optimal for c in rep.per_class)
    # removing arc and witness leaves no full line
    left = g.all_points_mask & ~rep.witness_arc.mask & ~rep.witness_cover.witness
    assert not any(lm & left == lm for lm in g.line_point_incidence)
    # independent exhaustion: no cover of size M(q) - 1 for the witness class
    fam = [g.line_point_incidence[l] for l in rep.witness_arc.passant_ids]
    universe = g.all_points_mask & ~rep.witness_arc.mask
    assert not exhaustive_cover_exists(universe, fam, expect - 1)


def test_mq_report_bounds():
    for q in (3, 4, 5, 7, 8):
        rep = compute_Mq(build_geometry(2, q))
        assert rep.M_q <= q - 1
        assert rep.max_over_classes >= rep.M_q


def test_m_of_arc_requires_complete():
    g = build_geometry(2, 5)
    two = secant_profile(g, mask_of([0, 1]))
    with pytest.raises(CoveringError):
        m_of_arc(g, two)


def test_m_invariant_under_collineation():
    g = build_geometry(2, 7)
    arcs = enumerate_complete_arcs(g)
    rec = next(a for a in arcs if a.size == 6)
    base = m_of_arc(g, rec).minimum_size
    # four points of the 8-arc are in general position, so they define a map
    big = next(a for a in arcs if a.size == 8)
    mat = projectivity_from_frame(g, big.points[2:6])
    moved = secant_profile(g, apply_projectivity(g, mat, rec.mask))
    assert moved.is_complete
    assert m_of_arc(g, moved).minimum_size == base


def k1_record(g):
    k1 = mask_of(point_of(g, s) for s in
                 ("(-1,1,1)", "(1,1,1)", "(1,-1,1)", "(-1,-1,1)", "(0,2,1)", "(0,3,1)"))
    return secant_profile(g, k1)


def test_passant_analysis_k1():
    g = build_geometry(2, 7)
    ana = passant_analysis(g, k1_record(g))
    assert ana.passant_count == 24
    assert ana.peak_multiplicity == 5
    expected = {point_of(g, s) for s in
                ("(0,1,0)", "(1,2,6)", "(1,6,5)", "(1,5,1)", "(0,0,1)", "(1,1,2)")}
    assert set(ana.peak_points) == expected
    # every passant has q+1 points, all off the arc
    assert sum(ana.per_point.values()) == 24 * 8
    for lid in ana.arc.passant_ids:
        assert g.line_point_incidence[lid] & ana.arc.mask == 0


def test_pencil_of_named_point_k2():
    g = build_geometry(2, 7)
    k2 = mask_of(point_of(g, s) for s in
                 ("(-1,1,1)", "(1,1,1)", "(1,-1,1)", "(-1,-1,1)", "(0,2,1)", "(0,-3,1)"))
    ana = passant_analysis(g, secant_profile(g, k2))
    p5 = point_of(g, "(0,0,1)")
    got = {format_coords(g, "line", l) for l in ana.pencils[p5]}
    assert got == {"[1,3,0]", "[1,2,0]", "[0,1,0]", "[1,5,0]", "[1,4,0]"}


def test_lemma_floor_by_independent_exhaustion():
    # no 5 points cover the 24 passants (q=7), no 6 cover the 34 (q=8)
    g7 = build_geometry(2, 7)
    rec = k1_record(g7)
    fam = [g7.line_point_incidence[l] for l in rec.passant_ids]
    assert not exhaustive_cover_exists(g7.all_points_mask & ~rec.mask, fam, 5)

    g8 = build_geometry(2, 8)
    k = mask_of(point_of(g8, s) for s in
                ("(1,0,0)", "(0,1,0)", "(0,0,1)", "(1,1,1)", "(ω^3,ω^2,1)", "(ω^2,ω^3,1)"))
    rec8 = secant_profile(g8, k)
    fam8 = [g8.line_point_incidence[l] for l in rec8.passant_ids]
    assert not exhaustive_cover_exists(g8.all_points_mask & ~rec8.mask, fam8, 6)


@pytest.mark.parametrize("which,q", [("A", 7), ("B", 8)])
def test_appendix_reproduces(which, q):
    claims = verify_appendix(build_geometry(2, q), which)
    failing = [c for c in claims if c.status != "pass"]
    assert not failing, [f"{c.claim_id}: {c.expected} vs {c.computed}" for c in failing]


def test_appendix_claim_inventory():
    claims_a = verify_appendix(build_geometry(2, 7), "A")
    ids = {c.claim_id for c in claims_a}
    # both arcs, all six pencils each, both union caps, and the cover floor
    assert "appendixA.K1.pencil.P1" in ids and "appendixA.K2.pencil.P6" in ids
    assert "appendixA.K1.union.I4" in ids and "appendixA.K2.union.I5" in ids
    assert "appendixA.K1.mincover" in ids
    assert sum(c.claim_id.endswith("mincover") for c in claims_a) == 2

    claims_b = verify_appendix(build_geometry(2, 8), "B")
    ids_b = {c.claim_id for c in claims_b}
    assert {"appendixB.K.union.I4", "appendixB.K.union.I5", "appendixB.K.union.I6",
            "appendixB.K.mincover"} <= ids_b
    assert sum("tripleint" in c.claim_id for c in claims_b) == 4


def test_appendix_wrong_plane_rejected():
    with pytest.raises(CoveringError):
        verify_appendix(build_geometry(2, 7), "B")
    with pytest.raises(CoveringError):
        verify_appendix(build_geometry(2, 7), "C")


def test_mq_budget_guard():
    with pytest.raises(CoveringError):
        compute_Mq(build_geometry(2, 9))
