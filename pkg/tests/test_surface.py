import itertools
import math

import pytest

from cubiclines.fields import GF, QQ, embedding
from cubiclines.projective import LineP3, enumerate_lines_p3, lines_meet
from cubiclines.surface import (CubicForm, ExtensionBudgetError,
                                SingularSurfaceError, all_27_lines,
                                format_surface, frobenius_cycle_type,
                                is_smooth, is_smooth_fast, is_smooth_rank,
                                line_in_surface, line_in_surface_setwise,
                                parse_surface, rational_count_from_cycle_type,
                                rational_lines, residual_line,
                                surface_points)

F4_SURFACES = {
    0: "x0^3 + x1^3 + x0^2*x2 + x2^3 + x3^3",
    1: "x0^3 + a*x0*x1^2 + x1^3 + a*x0^2*x2 + x2^3 + a*x0^2*x3 + a*x0*x1*x3 + x3^3",
    2: "x0^3 + a*x0*x1^2 + x1^3 + a*x0*x1*x2 + x2^3 + a*x0^2*x3 + a*x0*x1*x3 + x3^3",
    3: "x0^3 + x0^2*x1 + x1^3 + x0^2*x2 + x2^3 + x3^3",
    5: "x0^3 + a*x0^2*x1 + a*x0*x1^2 + x1^3 + a*x0*x1*x2 + x2^3 + a*x0*x1*x3 + x3^3",
    7: "x0^2*x1 + x0*x1^2 + x0^2*x2 + x2^3 + x0^2*x3 + x3^3",
    9: "x0^3 + x1^3 + a*x2^3 + a*x3^3",
    15: "a*x0^3 + x0^2*x1 + x0*x1^2 + a*x1^3 + x0^2*x2 + x0*x1*x2 + x1^2*x2"
        " + x0*x2^2 + x1*x2^2 + a*x2^3 + x0^2*x3 + x0*x1*x3 + x1^2*x3"
        " + x0*x2*x3 + x1*x2*x3 + x2^2*x3 + x0*x3^2 + x1*x3^2 + x2*x3^2"
        " + a*x3^3",
    27: "x0^3 + x1^3 + x2^3 + x3^3",
}

F8_27_SURFACE = "x0^2*x3 + x1^2*x2 + x0*x3^2 + x1*x2^2 + x1*x2*x3"

FERMAT_LINES_Q = [
    LineP3(QQ, [[1, -1, 0, 0], [0, 0, 1, -1]]),
    LineP3(QQ, [[1, 0, -1, 0], [0, 1, 0, -1]]),
    LineP3(QQ, [[1, 0, 0, -1], [0, 1, -1, 0]]),
]


def test_smoothness_examples():
    assert is_smooth(parse_surface(QQ, "x0^3+x1^3+x2^3+x3^3"))
    sing = parse_surface(QQ, "x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3")
    # all four partials and f vanish at [1:0:0:0]
    assert sing.evaluate([1, 0, 0, 0]) == 0
    assert all(v == 0 for v in sing.gradient_at([1, 0, 0, 0]))
    assert not is_smooth(sing)
    assert not is_smooth(parse_surface(QQ, "x0^3"))


def test_smooth_fast_agrees_with_buchberger(rng):
    for F in [GF(2), GF(3), GF(2, 2), GF(5)]:
        checked = 0
        while checked < 12:
            coeffs = [rng.randrange(F.order) for _ in range(20)]
            if all(c == 0 for c in coeffs):
                continue
            f = CubicForm(F, coeffs)
            assert is_smooth_fast(f) == is_smooth(f)
            checked += 1


def test_smoothness_invariant_under_linear_substitution(rng):
    from cubiclines import linalg
    F = GF(5)
    checked = 0
    while checked < 10:
        coeffs = [rng.randrange(5) for _ in range(20)]
        if all(c == 0 for c in coeffs):
            continue
        f = CubicForm(F, coeffs)
        mat = [[rng.randrange(5) for _ in range(4)] for _ in range(4)]
        if F.is_zero(linalg.det(F, mat)):
            continue
        g = f.transform(mat)
        assert is_smooth_fast(f) == is_smooth_fast(g)
        checked += 1


def test_fermat_contains_its_three_lines():
    ferm = parse_surface(QQ, "x0^3+x1^3+x2^3+x3^3")
    for line in FERMAT_LINES_Q:
        assert line_in_surface(ferm, line)
    assert not line_in_surface(ferm, LineP3(QQ, [[0, 0, 1, 0], [0, 0, 0, 1]]))


def test_residual_line_fermat():
    ferm = parse_surface(QQ, "x0^3+x1^3+x2^3+x3^3")
    l1, l2, l3 = FERMAT_LINES_Q
    assert residual_line(ferm, l1, l2) == l3
    assert residual_line(ferm, l1, l3) == l2
    r = residual_line(ferm, l1, residual_line(ferm, l1, l2))
    assert r == l2
    with pytest.raises(Exception):
        residual_line(ferm, l1, l1)


def test_f4_lemma_counts_and_smoothness():
    F = GF(2, 2)
    for expect, text in F4_SURFACES.items():
        f = parse_surface(F, text)
        assert is_smooth_fast(f)
        assert rational_lines(f).count() == expect


def test_f4_counts_against_brute_force():
    F = GF(2, 2)
    lines = enumerate_lines_p3(F)
    for expect, text in F4_SURFACES.items():
        f = parse_surface(F, text)
        brute = sum(1 for line in lines if line_in_surface(f, line))
        assert brute == expect


def test_f8_surface_27_lines_and_points():
    F = GF(2, 3)
    f = parse_surface(F, F8_27_SURFACE)
    assert is_smooth_fast(f)
    ls = rational_lines(f)
    assert ls.count() == 27
    for line, _ in ls.entries:
        assert line_in_surface(f, line)
    assert len(surface_points(f)) > 105


def test_f4_three_line_residual_closure():
    F = GF(2, 2)
    f = parse_surface(F, F4_SURFACES[3])
    ls = rational_lines(f)
    lines = ls.lines()
    assert len(lines) == 3
    for a, b in itertools.combinations(lines, 2):
        if lines_meet(a, b):
            third = residual_line(f, a, b)
            assert third in lines


def test_rational_lines_refuses_singular():
    F = GF(2)
    sing = parse_surface(F, "x0^3")
    with pytest.raises(SingularSurfaceError):
        rational_lines(sing)


def test_setwise_vs_algebraic_f3(rng):
    """Over F_3 (and any field with at least 3 elements) set-wise and
    algebraic containment agree, for arbitrary cubic forms."""
    F = GF(3)
    lines = enumerate_lines_p3(F)
    checked = 0
    while checked < 25:
        coeffs = [rng.randrange(3) for _ in range(20)]
        if all(c == 0 for c in coeffs):
            continue
        f = CubicForm(F, coeffs)
        for line in lines:
            assert line_in_surface(f, line) == \
                line_in_surface_setwise(f, line)
        checked += 1


def test_setwise_strictly_weaker_over_f2():
    F = GF(2)
    f = parse_surface(F, "x0^2*x3+x0*x3^2+x1^2*x2+x1*x2^2")
    assert is_smooth_fast(f)
    lines = enumerate_lines_p3(F)
    alg = sum(1 for line in lines if line_in_surface(f, line))
    setw = sum(1 for line in lines if line_in_surface_setwise(f, line))
    assert alg == 15 and setw == 35


def test_all_27_lines_f4_nine():
    F = GF(2, 2)
    f = parse_surface(F, F4_SURFACES[9])
    full = all_27_lines(f)
    assert full.count() == 27
    lines = full.lines()
    assert len(set(lines)) == 27
    for line in lines:
        fK = f.map_field(embedding(F, full.top_field), full.top_field)
        assert line_in_surface(fK, line)
    degs = [sum(1 for m in lines if m != l and lines_meet(l, m))
            for l in lines]
    assert set(degs) == {10}
    tri = [t for t in itertools.combinations(lines, 3)
           if all(lines_meet(a, b) for a, b in itertools.combinations(t, 2))]
    assert len(tri) == 45
    # no two coplanar triples share two lines
    for t1, t2 in itertools.combinations(tri, 2):
        assert len(set(t1) & set(t2)) <= 1


def test_cycle_type_consistency_f4():
    F = GF(2, 2)
    for expect in (9, 2, 3):
        f = parse_surface(F, F4_SURFACES[expect])
        full = all_27_lines(f)
        ct = frobenius_cycle_type(full)
        assert sum(ct) == 27
        assert sum(1 for c in ct if c == 1) == expect
        # N_k from the cycle type equals the rational count over F_{4^k}
        for k in (1, 2, 3):
            K, fK = GF(2, 2 * k), f.map_field(
                embedding(F, GF(2, 2 * k)), GF(2, 2 * k))
            assert rational_count_from_cycle_type(ct, k) == \
                rational_lines(fK).count()
        # rational sublist = degree-1 entries
        assert len(full.rational_sublist()) == expect


def test_min_def_degrees_divide_splitting_degree():
    F = GF(2, 2)
    f = parse_surface(F, F4_SURFACES[1])
    full = all_27_lines(f)
    m = full.top_field.d // F.d
    for _, deg in full.entries:
        assert m % deg == 0


def test_no_skew_triple_implies_at_most_six(rng):
    """Smooth surfaces without a rational skew triple have at most 6
    rational lines (checked over F_4 samples)."""
    F = GF(2, 2)
    checked = 0
    while checked < 60:
        coeffs = [rng.randrange(4) for _ in range(20)]
        if all(c == 0 for c in coeffs):
            continue
        f = CubicForm(F, coeffs)
        if not is_smooth_fast(f):
            continue
        ls = rational_lines(f, check_smooth=False)
        lines = ls.lines()
        has_skew_triple = any(
            not lines_meet(a, b) and not lines_meet(a, c)
            and not lines_meet(b, c)
            for a, b, c in itertools.combinations(lines, 3))
        if not has_skew_triple:
            assert ls.count() <= 6
        checked += 1


def test_surface_text_roundtrip():
    F = GF(2, 2)
    for text in F4_SURFACES.values():
        f = parse_surface(F, text)
        assert parse_surface(F, format_surface(f)) == f
    f = parse_surface(QQ, "x0^2*x2-x0*x2^2+17/39*x1*x2^2")
    assert parse_surface(QQ, format_surface(f)) == f
