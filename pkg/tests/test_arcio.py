"""Tests for the arc data model, parsers, and simplicity validation."""

from __future__ import annotations

import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from arcsupport.arcio import (
    PolygonalArc,
    _candidate_pairs,
    is_segment_arc,
    load_arc,
    parse_arc,
    serialize_arc,
    validate_simple,
)
from arcsupport.errors import InvalidArcError, ParseError
from arcsupport.geom import Point, segments_intersect


class TestPolygonalArc:
    def test_nodes_coerced_to_points(self):
        arc = PolygonalArc(((0, 0), (1.5, 2)))
        assert isinstance(arc.nodes[0], Point)
        assert arc.nodes[1] == Point(1.5, 2.0)
        assert len(arc) == 2
        assert not arc.closed

    def test_open_needs_two_nodes(self):
        with pytest.raises(InvalidArcError):
            PolygonalArc(((0, 0),))

    def test_closed_needs_three_nodes(self):
        with pytest.raises(InvalidArcError):
            PolygonalArc(((0, 0), (1, 0)), closed=True)

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidArcError):
            PolygonalArc(((0, 0), (math.inf, 1)))
        with pytest.raises(InvalidArcError):
            PolygonalArc(((0, 0), (1, math.nan)))

    def test_segments_open(self):
        arc = PolygonalArc(((0, 0), (1, 0), (1, 1)))
        assert arc.segment_count() == 2
        assert list(arc.segments()) == [
            (Point(0, 0), Point(1, 0)), (Point(1, 0), Point(1, 1))]

    def test_segments_closed_wrap(self):
        arc = PolygonalArc(((0, 0), (1, 0), (0, 1)), closed=True)
        assert arc.segment_count() == 3
        assert arc.segment(2) == (Point(0, 1), Point(0, 0))

    def test_tolerance_scales_with_diagonal(self):
        small = PolygonalArc(((0, 0), (1, 1))).tolerance()
        big = PolygonalArc(((0, 0), (1000, 1000))).tolerance()
        assert big.eps_len == pytest.approx(1000 * small.eps_len)
        custom = PolygonalArc(((0, 0), (1, 1))).tolerance(rel=1e-6,
                                                          eps_angle=1e-3)
        assert custom.eps_len == pytest.approx(1e-6 * math.sqrt(2))
        assert custom.eps_angle == 1e-3


class TestJsonParsing:
    def test_round_trip(self):
        arc = PolygonalArc(((0.1, -2.25), (1e-17, 3.5), (7, 0.30000000000000004)))
        again = parse_arc(serialize_arc(arc))
        assert again.nodes == arc.nodes
        assert again.closed == arc.closed

    def test_round_trip_closed(self):
        arc = PolygonalArc(((0, 0), (2, 0), (1, 2)), closed=True)
        again = parse_arc(serialize_arc(arc))
        assert again.closed is True
        assert again.nodes == arc.nodes

    def test_closed_defaults_false(self):
        arc = parse_arc('{"nodes": [[0, 0], [1, 1]]}')
        assert arc.closed is False

    @pytest.mark.parametrize("text", [
        '[[0, 0], [1, 1]]',                                   # not an object
        '{"nodes": [[0, 0], [1, 1]], "color": "red"}',        # unknown key
        '{"nodes": [[0, 0], [1, 1]], "closed": 1}',           # non-bool closed
        '{"nodes": "zig"}',                                   # nodes not a list
        '{"nodes": [[0, 0], [1]]}',                           # short pair
        '{"nodes": [[0, 0], [1, "a"]]}',                      # non-numeric
        '{"nodes": [[0, 0], [1, true]]}',                     # bool is not a number
        '{"nodes": [[0, 0]]}',                                # too few nodes
        '{"nodes": [[Infinity, 0], [1, 1]]}',                 # non-finite
        '{"nodes": [[0, 0], [1, 1]',                          # syntax error
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            parse_arc(text)


class TestCsvParsing:
    def test_basic_with_header_comments_blanks(self):
        text = "x,y\n# a comment\n0, 0\n\n1,2  # trailing note\n3 , -4\n"
        arc = parse_arc(text, fmt="csv")
        assert arc.nodes == (Point(0, 0), Point(1, 2), Point(3, -4))
        assert arc.closed is False

    def test_error_reports_line_number(self):
        text = "0,0\n1,1\nnope,nope\n"
        with pytest.raises(ParseError, match="line 3"):
            parse_arc(text, fmt="csv")

    def test_only_one_header_allowed(self):
        with pytest.raises(ParseError):
            parse_arc("x,y\na,b\n0,0\n1,1\n", fmt="csv")

    def test_wrong_field_count(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_arc("0,0\n1,2,3\n", fmt="csv")

    def test_non_finite_rejected(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_arc("0,0\ninf,1\n", fmt="csv")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_arc("0,0", fmt="xml")


class TestLoadArc:
    def test_by_extension(self, tmp_path):
        j = tmp_path / "arc.json"
        j.write_text('{"nodes": [[0, 0], [1, 1], [2, 0]]}')
        c = tmp_path / "arc.csv"
        c.write_text("0,0\n1,1\n2,0\n")
        assert load_arc(str(j)).nodes == load_arc(str(c)).nodes

    def test_explicit_format_overrides(self, tmp_path):
        p = tmp_path / "arc.txt"
        p.write_text("0,0\n1,1\n")
        assert len(load_arc(str(p), fmt="csv")) == 2


class TestSegmentArcDetection:
    def test_collinear_is_segment(self):
        assert is_segment_arc(PolygonalArc(((0, 0), (1, 0), (3, 0))))
        assert is_segment_arc(PolygonalArc(((0, 0), (2, 2), (0.5, 0.5))))

    def test_pentagon_is_not(self, pentagon_arc):
        assert not is_segment_arc(pentagon_arc)

    def test_small_bump_above_eps(self):
        arc = PolygonalArc(((0, 0), (1, 1e-4), (2, 0)))
        assert not is_segment_arc(arc)

    def test_bump_below_eps_counts_as_segment(self):
        arc = PolygonalArc(((0, 0), (1, 1e-12), (2, 0)))
        assert is_segment_arc(arc)


class TestValidateSimple:
    def test_pentagon_ok(self, pentagon_arc):
        report = validate_simple(pentagon_arc)
        assert report.ok and bool(report) and report.violations == ()

    def test_duplicate_node(self):
        arc = PolygonalArc(((0, 0), (1, 1), (1, 1), (2, 0)))
        report = validate_simple(arc)
        assert not report.ok
        assert report.violations[0].kind == "duplicate_node"
        assert report.violations[0].indices == (1, 2)

    def test_endpoints_coincide(self):
        arc = PolygonalArc(((0, 0), (1, 1), (2, 0), (0, 0)))
        report = validate_simple(arc)
        assert any(v.kind == "endpoints_coincide" for v in report.violations)

    def test_backtrack(self):
        arc = PolygonalArc(((0, 0), (2, 0), (1, 0)))
        report = validate_simple(arc)
        assert any(v.kind == "backtrack" for v in report.violations)

    def test_right_angle_is_not_backtrack(self):
        arc = PolygonalArc(((0, 0), (1, 0), (1, 1)))
        assert validate_simple(arc).ok

    def test_segments_cross(self):
        arc = PolygonalArc(((0, 0), (2, 2), (2, 0), (0, 2)))
        report = validate_simple(arc)
        kinds = {v.kind for v in report.violations}
        assert "segments_cross" in kinds
        crossing = next(v for v in report.violations
                        if v.kind == "segments_cross")
        assert crossing.indices == (0, 2)

    def test_touch_counts_as_cross(self):
        # Later segment passes through an earlier node.
        arc = PolygonalArc(((0, 0), (2, 0), (2, 2), (0, -2)))
        report = validate_simple(arc)
        assert any(v.kind == "segments_cross" for v in report.violations)

    def test_closed_square_ok(self):
        arc = PolygonalArc(((0, 0), (1, 0), (1, 1), (0, 1)), closed=True)
        assert validate_simple(arc).ok

    def test_closed_bowtie_rejected(self):
        arc = PolygonalArc(((0, 0), (1, 1), (1, 0), (0, 1)), closed=True)
        assert not validate_simple(arc).ok

    def test_closed_wrap_adjacency_not_flagged(self):
        # Segments 0 and n-1 share the first node; that contact is legal.
        arc = PolygonalArc(((0, 0), (2, 0), (1, 2)), closed=True)
        assert validate_simple(arc).ok


class TestCandidatePrefilter:
    """The bbox prefilter must never drop a truly intersecting pair."""

    def _all_pairs(self, arc, tol):
        m = arc.segment_count()
        n = len(arc)
        found = []
        for i in range(m):
            for j in range(i + 2, m):
                if arc.closed and i == 0 and j == m - 1:
                    continue
                if segments_intersect(arc.segment(i), arc.segment(j),
                                      "any", tol):
                    found.append((i, j))
        return found

    def test_matches_quadratic_reference(self):
        rng = random.Random(7)
        for trial in range(40):
            n = rng.randint(4, 14)
            closed = trial % 3 == 0 and n >= 3
            pts = []
            while len(pts) < n:
                p = (rng.uniform(0, 10), rng.uniform(0, 10))
                if not pts or (abs(p[0] - pts[-1][0]) > 1e-6
                               or abs(p[1] - pts[-1][1]) > 1e-6):
                    pts.append(p)
            arc = PolygonalArc(tuple(pts), closed=closed)
            tol = arc.tolerance()
            reference = self._all_pairs(arc, tol)
            candidates = set(_candidate_pairs(arc, tol.eps_len))
            hits = [p for p in candidates
                    if segments_intersect(arc.segment(p[0]), arc.segment(p[1]),
                                          "any", tol)]
            assert sorted(hits) == sorted(reference)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.floats(-100, 100, allow_nan=False),
                          st.floats(-100, 100, allow_nan=False)),
                min_size=2, max_size=12))
def test_serialize_parse_round_trip_property(coords):
    try:
        arc = PolygonalArc(tuple(coords))
    except InvalidArcError:
        return
    again = parse_arc(serialize_arc(arc))
    assert again.nodes == arc.nodes


def test_json_float_round_trip_is_exact():
    value = 0.1 + 0.2  # 0.30000000000000004
    arc = PolygonalArc(((value, -value), (1e300, 5e-324)))
    again = parse_arc(serialize_arc(arc))
    assert again.nodes[0].x == value
    assert again.nodes[1].y == 5e-324
