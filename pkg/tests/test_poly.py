import itertools
from fractions import Fraction

import pytest

from cubiclines.fields import GF, QQ, embedding
from cubiclines.poly import (Poly, eisenstein_at_z, eisenstein_check,
                             eisenstein_substitutes_q,
                             eisenstein_substitutes_z, factor, format_poly,
                             is_irreducible, parse_poly, quadratic_roots,
                             resultant, roots, splitting_field_roots,
                             sqrt_in_field, triple_sum_free)


def test_factor_t2t1_over_f2():
    F = GF(2)
    f = parse_poly(F, "t^2+t+1")
    assert is_irreducible(f)
    unit, facs = factor(f)
    assert facs == [(f, 1)]


def test_factor_t3_plus_1_over_q():
    f = parse_poly(QQ, "t^3+1")
    unit, facs = factor(f)
    assert unit == 1
    assert [repr(g) for g, m in facs] == ["t+1", "t^2-t+1"]
    # the rational root is -1 (the t_4 of the seven-line example)
    assert roots(f) == [Fraction(-1)]


def test_factor_sextic_irreducible_over_q():
    f = parse_poly(QQ, "t^6+t^5+1")
    assert is_irreducible(f)


def test_factor_reassembles_and_certifies(rng):
    for F in [GF(2), GF(5), GF(2, 2), GF(3, 2)]:
        for _ in range(15):
            coeffs = [rng.randrange(F.order) for _ in range(rng.randrange(2, 8))]
            coeffs.append(1)
            f = Poly(F, coeffs)
            unit, facs = factor(f)
            prod = Poly(F, [unit])
            for g, m in facs:
                assert is_irreducible(g)
                for _ in range(m):
                    prod = prod * g
            assert prod == f
    for _ in range(10):
        coeffs = [Fraction(rng.randrange(-6, 7)) for _ in range(6)] + [Fraction(1)]
        f = Poly(QQ, coeffs)
        unit, facs = factor(f)
        prod = Poly(QQ, [unit])
        for g, m in facs:
            assert is_irreducible(g)
            for _ in range(m):
                prod = prod * g
        assert prod == f


def test_factor_order_is_deterministic():
    f = parse_poly(QQ, "t^6+15*t^5+85*t^4+225*t^3+274*t^2+120*t")
    _, facs = factor(f)
    degrees = [g.degree() for g, _ in facs]
    assert degrees == sorted(degrees)
    assert factor(f) == factor(f)


def test_is_irreducible_examples():
    F4 = GF(2, 2)
    f = parse_poly(F4, "t^2+t+a")
    assert is_irreducible(f)
    # oracle: a is not in the image of x^2 + x on F_4
    image = {F4.add(F4.mul(x, x), x) for x in F4.elements()}
    assert F4.from_coeffs([0, 1]) not in image
    assert is_irreducible(parse_poly(QQ, "t^2+1"))
    assert not is_irreducible(parse_poly(QQ, "t^2"))
    assert not is_irreducible(parse_poly(GF(7), "t^2"))


def test_triple_sum_free_paper_sextics():
    ok = parse_poly(QQ, "t^6+15*t^5+85*t^4+225*t^3+274*t^2+120*t")
    assert triple_sum_free(ok)
    bad = Poly.from_roots(QQ, [0, 1, -1, 2, -3, 5])
    assert not triple_sum_free(bad)


def test_triple_sum_free_requires_squarefree():
    f = parse_poly(QQ, "t^2+2*t+1")
    with pytest.raises(ValueError):
        triple_sum_free(f)


def test_triple_sum_free_resultant_vs_splitting_oracle(rng):
    F = GF(5)
    tested = 0
    while tested < 120:
        G = Poly(F, [rng.randrange(5) for _ in range(6)] + [1])
        if not G.is_squarefree():
            continue
        fast = triple_sum_free(G, force_resultant=True)
        # independent oracle: roots in the splitting field, all triples
        K, emb, rs = splitting_field_roots(G)
        slow = all(not K.is_zero(K.add(K.add(a, b), c))
                   for a, b, c in itertools.combinations(rs, 3))
        assert fast == slow
        tested += 1


def test_triple_sum_free_char2_and_char3(rng):
    for F in [GF(2, 2), GF(3)]:
        tested = 0
        while tested < 40:
            G = Poly(F, [rng.randrange(F.order) for _ in range(6)] + [1])
            if not G.is_squarefree():
                continue
            fast = triple_sum_free(G, force_resultant=True)
            K, emb, rs = splitting_field_roots(G)
            slow = all(not K.is_zero(K.add(K.add(a, b), c))
                       for a, b, c in itertools.combinations(rs, 3))
            assert fast == slow
            tested += 1


def test_resultant_matches_root_products():
    f = Poly.from_roots(QQ, [1, 2, 3])
    g = Poly.from_roots(QQ, [4, 5])
    # res(f, g) = prod g(alpha) over roots alpha of f (both monic)
    expect = Fraction(1)
    for a in (1, 2, 3):
        expect *= (a - 4) * (a - 5)
    assert resultant(f, g) == expect


def test_eisenstein_examples():
    assert eisenstein_check(parse_poly(QQ, "t^4+2"), 2)
    assert not eisenstein_check(parse_poly(QQ, "t^2+4"), 2)
    assert eisenstein_check(parse_poly(QQ, "t^3+3*t^2+3"), 3)
    with pytest.raises(ValueError):
        eisenstein_check(parse_poly(QQ, "2*t^2+2"), 2)
    z = Poly.x(QQ)
    one, zero = Poly.one(QQ), Poly.zero(QQ)
    assert eisenstein_at_z([z, zero, zero, zero, one])          # t^4 + z
    assert not eisenstein_at_z([z * z, zero, one])              # t^2 + z^2
    assert not eisenstein_at_z([one, zero, one])                # t^2 + 1


def test_eisenstein_substitute_families():
    for orig, repl, p, via in eisenstein_substitutes_q(2, 3):
        if via:
            assert eisenstein_check(repl, p)
        assert is_irreducible(repl)
        assert repl.degree() == orig.degree()
    for name, coeffs in eisenstein_substitutes_z():
        if name in ("t^2+z+1", "t^2+t+z"):
            continue     # irreducible, but not via Eisenstein at (z)
        assert eisenstein_at_z(coeffs), name


def test_quadratic_roots_all_fields(rng):
    for F in [GF(5), GF(7), GF(2, 3), GF(3, 2), GF(2, 2)]:
        els = list(F.elements())
        for _ in range(60):
            a = rng.choice(els[1:])
            b, c = rng.choice(els), rng.choice(els)
            rs = quadratic_roots(F, a, b, c)
            for r in rs:
                val = F.add(F.add(F.mul(a, F.mul(r, r)), F.mul(b, r)), c)
                assert F.is_zero(val)
            # root count parity check by brute force
            brute = [x for x in els
                     if F.is_zero(F.add(F.add(F.mul(a, F.mul(x, x)),
                                              F.mul(b, x)), c))]
            assert sorted(set(rs)) == sorted(brute)


def test_sqrt_in_field():
    assert sqrt_in_field(QQ, Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(QQ, Fraction(2)) is None
    F = GF(13)
    for x in range(13):
        s = sqrt_in_field(F, x)
        if s is not None:
            assert F.mul(s, s) == x
    squares = {F.mul(x, x) for x in range(13)}
    for x in range(13):
        assert (sqrt_in_field(F, x) is not None) == (x in squares)


def test_poly_text_roundtrip():
    cases = [
        (QQ, "t^6+3*t^5+2*t^4+2*t^3+3*t^2+1"),
        (QQ, "t^2-11/16*t+1/8"),
        (GF(2, 2), "t^2+t+a"),
        (GF(2, 3), "t^6+t^5+a^2*t^4+a*t^3+a^2*t^2+t+1"),
        (GF(5), "2*t^3+4*t+1"),
    ]
    for F, text in cases:
        f = parse_poly(F, text)
        assert format_poly(f) == text
        assert parse_poly(F, format_poly(f)) == f


def test_pow_mod_and_gcd(rng):
    F = GF(7)
    f = parse_poly(F, "t^5+3*t+1")
    x = Poly.x(F)
    h = x.pow_mod(7 ** 5, f)
    assert h == x % f or (h - x) % f == Poly.zero(F)
