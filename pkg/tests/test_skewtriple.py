import itertools
from fractions import Fraction

import pytest

from cubiclines.fields import GF, QQ, NumberField
from cubiclines.poly import Poly, parse_poly
from cubiclines.projective import lines_meet
from cubiclines.skewtriple import (SkewTripleForm, classify, embed_standard,
                                   find_skew_triple, g_of, h_display, h_of)
from cubiclines.surface import (line_in_surface, parse_surface,
                                rational_lines)

EX_3SKEW = ("x0^2*x2-x0*x2^2+2*x0^2*x3-2*x0*x1*x2+x1^2*x2-x0*x1*x3"
            "+2*x1^2*x3-2*x1*x3^2")
EX_7 = ("x0^2*x2-x0*x2^2+2*x0^2*x3-2*x0*x1*x2+x1^2*x2-x0*x1*x3"
        "+x1^2*x3-x1*x3^2")
EX_15 = ("x0^2*x2-x0*x2^2+x0^2*x3-x0*x1*x2+x1^2*x2-2*x0*x1*x3+x1*x2^2"
         "-x0*x2*x3-x0*x3^2+2*x1*x2*x3")
EX_27 = ("x0^2*x2-x0*x2^2+x0^2*x3-x0*x1*x2+17/39*x1*x2^2-17/39*x0*x2*x3"
         "+2*x1^2*x2-3*x0*x1*x3+12/13*x0*x3^2+1/13*x1*x2*x3")


def form_of(text):
    return SkewTripleForm.from_cubic(parse_surface(QQ, text))


def test_standard_triple_is_contained():
    for text in (EX_3SKEW, EX_7, EX_15, EX_27):
        f = parse_surface(QQ, text)
        form = SkewTripleForm.from_cubic(f)
        for line in form.standard_lines():
            assert line_in_surface(f, line)
        for a, b in itertools.combinations(form.standard_lines(), 2):
            assert not lines_meet(a, b)


def test_g_values_match_the_worked_examples():
    assert g_of(form_of(EX_3SKEW)) == parse_poly(QQ, "t^3+2")
    assert g_of(form_of(EX_7)) == parse_poly(QQ, "t^3+1")
    assert g_of(form_of(EX_15)) == parse_poly(QQ, "t^3-t")
    assert g_of(form_of(EX_27)) == parse_poly(QQ, "t^3-t")


def test_h_at_the_printed_labellings():
    # fifteen-line example, t4 = 0, t5 = 1: h = s^2 - 2s + 3
    h15 = h_display(QQ, h_of(form_of(EX_15), QQ, QQ.coerce,
                             Fraction(0), Fraction(1)))
    assert h15 == parse_poly(QQ, "t^2-2*t+3")
    # twenty-seven-line example: h is (1/72)(28 s^2 + 108 s - 81) up to
    # the monic normalization
    h27 = h_display(QQ, h_of(form_of(EX_27), QQ, QQ.coerce,
                             Fraction(0), Fraction(1)))
    assert h27 == Poly(QQ, [Fraction(-81, 28), Fraction(108, 28), 1])
    # seven-line example: t4 = -1, t5 a root of t^2 - t + 1;
    # h is a unit multiple of 16 s^2 - 11 s + 2
    K = NumberField((1, -1, 1))
    h7 = h_display(K, h_of(form_of(EX_7), K, K.coerce,
                           K.from_int(-1), K.gen))
    assert h7 == Poly(K, [K.coerce(Fraction(2, 16)),
                          K.coerce(Fraction(-11, 16)), K.one])


def test_classification_of_the_worked_examples():
    rep = classify(form_of(EX_3SKEW))
    assert rep.case == "1" and rep.count is None
    assert tuple(sorted(rep.candidates)) == (3, 9)
    rep = classify(form_of(EX_7))
    assert rep.case == "2a" and rep.count == 7
    rep = classify(form_of(EX_15))
    assert rep.case == "3a" and rep.count == 15
    rep = classify(form_of(EX_27))
    assert rep.case == "3c" and rep.count == 27


def test_count_invariant_under_root_relabelling():
    form = form_of(EX_15)
    counts = set()
    for t4, t5 in itertools.permutations((0, 1, -1), 2):
        try:
            lead, mid, const = h_of(form, QQ, QQ.coerce,
                                    Fraction(t4), Fraction(t5))
        except Exception:
            continue
        h = h_display(QQ, (lead, mid, const))
        from cubiclines.poly import factor
        if QQ.is_zero(lead):
            counts.add(27)
        else:
            _, facs = factor(h)
            counts.add(27 if all(p.degree() == 1 for p, _ in facs) else 15)
    assert counts == {15}


def test_g_leading_coefficient_error():
    F = GF(5)
    vals = dict.fromkeys(
        ("a0201", "a0102", "a2010", "a1020", "a0210", "a1002", "a1101",
         "a0111", "a0120", "a2001", "a1011", "a1110"), 0)
    vals.update(a0201=1, a0102=4, a0210=1, a1101=4)
    form = SkewTripleForm(F, vals)
    with pytest.raises(ValueError):
        g_of(form)


def test_classifier_matches_enumeration_random(rng):
    from cubiclines.surface import is_smooth_fast
    for q, p, d in [(5, 5, 1), (7, 7, 1), (9, 3, 2)]:
        F = GF(p, d)
        done = 0
        while done < 40:
            vals = {}
            for nm in ("a0201", "a2010", "a0210", "a1002", "a1101",
                       "a0120", "a2001", "a1011"):
                vals[nm] = rng.randrange(q)
            vals["a0102"] = F.neg(vals["a0201"])
            vals["a1020"] = F.neg(vals["a2010"])
            vals["a0111"] = F.neg(F.add(F.add(vals["a0210"],
                                              vals["a1002"]),
                                        vals["a1101"]))
            vals["a1110"] = F.neg(F.add(F.add(vals["a0120"],
                                              vals["a2001"]),
                                        vals["a1011"]))
            try:
                form = SkewTripleForm(F, vals)
            except ValueError:
                continue
            if F.is_zero(vals["a2010"]):
                continue
            f = form.to_cubic()
            if not is_smooth_fast(f):
                continue
            rep = classify(form)
            assert rep.count == rational_lines(f, check_smooth=False).count()
            done += 1


def test_embed_standard_from_found_triple():
    F = GF(7)
    from cubiclines.blowup import GaloisPattern, construct_surface
    rep = construct_surface(F, GaloisPattern.from_item(2),
                            enumerate_lines=False)
    f = rep.surface
    ls = rational_lines(f)
    triple = find_skew_triple(ls)
    assert triple is not None
    form, matrix = embed_standard(f, triple)
    g = form.to_cubic()
    for line in form.standard_lines():
        assert line_in_surface(g, line)
    # count is invariant under the transform
    crep = classify(form)
    assert crep.count == ls.count() == 15


def test_embed_standard_rejects_meeting_lines():
    F = GF(2, 2)
    f = parse_surface(F, "x0^3 + x0^2*x1 + x1^3 + x0^2*x2 + x2^3 + x3^3")
    ls = rational_lines(f)
    assert find_skew_triple(ls) is None
    with pytest.raises(ValueError):
        embed_standard(f)
