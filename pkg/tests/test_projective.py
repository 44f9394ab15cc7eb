import itertools

import pytest

from cubiclines.fields import GF, QQ
from cubiclines.projective import (IdenticalLines, LineP3, collinear,
                                   enumerate_lines_p3, enumerate_points,
                                   format_line, line_count_p3, lines_meet,
                                   meet_point, on_common_conic, parse_line,
                                   proj_point)


def twisted_cubic_point(F, t):
    t = F.coerce(t)
    return (F.one, t, F.mul(F.mul(t, t), t))


@pytest.mark.parametrize("q,p,d", [(2, 2, 1), (3, 3, 1), (4, 2, 2),
                                   (5, 5, 1)])
def test_point_and_line_counts(q, p, d):
    F = GF(p, d)
    pts = enumerate_points(F, 3)
    assert len(pts) == q ** 3 + q ** 2 + q + 1
    assert len(set(pts)) == len(pts)
    lines = enumerate_lines_p3(F)
    assert len(lines) == line_count_p3(q)
    assert len(set(lines)) == len(lines)
    for line in lines[:40]:
        assert len(set(line.points())) == q + 1


def test_lines_f2_f4_paper_counts():
    assert len(enumerate_lines_p3(GF(2))) == 35
    assert len(enumerate_lines_p3(GF(3))) == 130
    assert len(enumerate_lines_p3(GF(2, 2))) == 357


@pytest.mark.parametrize("q,p,d", [(2, 2, 1), (3, 3, 1), (4, 2, 2)])
def test_enumeration_matches_span_oracle(q, p, d):
    F = GF(p, d)
    pts = enumerate_points(F, 3)
    spans = set()
    for a, b in itertools.combinations(pts, 2):
        spans.add(LineP3.through(F, a, b))
    assert spans == set(enumerate_lines_p3(F))


def test_skew_and_meeting_lines():
    E1 = LineP3(QQ, [[0, 0, 1, 0], [0, 0, 0, 1]])
    E2 = LineP3(QQ, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert not lines_meet(E1, E2)
    L1 = LineP3(QQ, [[1, -1, 0, 0], [0, 0, 1, -1]])
    L2 = LineP3(QQ, [[1, 0, -1, 0], [0, 1, 0, -1]])
    assert lines_meet(L1, L2)
    assert lines_meet(L2, L1)
    p = meet_point(L1, L2)
    assert p == proj_point(QQ, [1, -1, -1, 1])
    assert L1.contains_point(p) and L2.contains_point(p)
    with pytest.raises(IdenticalLines):
        lines_meet(L1, L1)


def test_meet_is_symmetric_over_finite_field(rng):
    F = GF(3)
    lines = enumerate_lines_p3(F)
    for _ in range(120):
        a, b = rng.sample(lines, 2)
        assert lines_meet(a, b) == lines_meet(b, a)
        if lines_meet(a, b):
            p = meet_point(a, b)
            assert a.contains_point(p) and b.contains_point(p)


def test_collinearity_on_twisted_cubic():
    pts = [twisted_cubic_point(QQ, t) for t in (1, 2, -3)]
    assert collinear(QQ, *pts)
    pts = [twisted_cubic_point(QQ, t) for t in (0, 1, 2)]
    assert not collinear(QQ, *pts)
    with pytest.raises(ValueError):
        collinear(QQ, pts[0], pts[0], pts[1])


def test_conic_condition_on_twisted_cubic():
    six = [twisted_cubic_point(QQ, t) for t in (1, 2, 3, -1, -2, -3)]
    assert on_common_conic(QQ, six)
    six = [twisted_cubic_point(QQ, t) for t in (0, 1, 2, 3, 4, 5)]
    assert not on_common_conic(QQ, six)


def test_conic_condition_matches_degree5_term(rng):
    """Six twisted-cubic points lie on a conic iff their parameter sum
    vanishes (the degree-5 coefficient criterion)."""
    F = GF(7)
    seen = 0
    while seen < 40:
        ts = rng.sample(range(7), 6)
        pts = [twisted_cubic_point(F, t) for t in ts]
        expect = F.is_zero(F.coerce(sum(ts)))
        assert on_common_conic(F, pts) == expect
        seen += 1


def test_line_text_roundtrip():
    L = LineP3(QQ, [[1, 0, -1, 0], [0, 1, 0, -1]])
    assert parse_line(QQ, format_line(L)) == L
    F = GF(2, 2)
    M = LineP3(F, [[1, 2, 0, 0], [0, 0, 1, 3]])
    assert parse_line(F, format_line(M)) == M


def test_plucker_derived_printout():
    L = LineP3(QQ, [[1, 0, 0, 0], [0, 1, 0, 0]])
    pl = L.plucker()
    assert pl[0] == 1 and all(v == 0 for v in pl[1:])
