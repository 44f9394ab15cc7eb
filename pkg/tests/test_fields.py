from fractions import Fraction

import pytest

from cubiclines.fields import (GF, QQ, NumberField, default_modulus,
                               embedding, next_prime, parse_field)


FIELDS = [QQ, GF(2), GF(3), GF(5), GF(2, 2), GF(2, 3), GF(2, 4), GF(3, 2),
          GF(5, 2), GF(7)]


def _sample(F, rng, n=24):
    if F.order is None:
        return [Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
                for _ in range(n)]
    return [rng.randrange(F.order) for _ in range(n)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms_sampled(F, rng):
    xs = _sample(F, rng)
    for a, b, c in zip(xs, xs[1:], xs[2:]):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == F.zero
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one
        assert F.sub(a, b) == F.add(a, F.neg(b))


@pytest.mark.parametrize("F", [GF(2, 2), GF(2, 3), GF(2, 4), GF(3, 2),
                               GF(5, 2)], ids=repr)
def test_frobenius_order(F):
    for a in F.elements():
        x = a
        for _ in range(F.d):
            x = F.frobenius(x)
        assert x == a
    # frobenius is an automorphism
    for a in list(F.elements())[:10]:
        for b in list(F.elements())[:10]:
            assert F.frobenius(F.mul(a, b)) == \
                F.mul(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.add(a, b)) == \
                F.add(F.frobenius(a), F.frobenius(b))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_trace_linear_surjective_kernel(d):
    F = GF(2, d)
    kernel = [x for x in F.elements() if F.trace(x) == 0]
    assert len(kernel) == 1 << (d - 1)
    values = {F.trace(x) for x in F.elements()}
    assert values == {0, 1}
    els = list(F.elements())
    for a in els[:8]:
        for b in els[:8]:
            assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 2


def test_default_moduli():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    # the quartic default matches the x^4+x+1 convention
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert GF(2, 4).modulus == (1, 1, 0, 0, 1)


def test_embedding_simple():
    F2, F4 = GF(2), GF(2, 2)
    e = embedding(F2, F4)
    assert e(0) == F4.zero and e(1) == F4.one


def test_embedding_root_property():
    F4, F16 = GF(2, 2), GF(2, 4)
    e = embedding(F4, F16)
    img = e(F4.from_coeffs([0, 1]))
    # the image of a satisfies a^2 + a + 1 = 0 in F16
    val = F16.add(F16.mul(img, img), F16.add(img, F16.one))
    assert val == F16.zero


def test_embedding_is_ring_map(rng):
    for src, dst in [(GF(2, 2), GF(2, 6)), (GF(2, 3), GF(2, 6)),
                     (GF(3), GF(3, 2)), (GF(5), GF(5, 2)),
                     (GF(2, 2), GF(2, 4))]:
        e = embedding(src, dst)
        els = list(src.elements())
        for a in els:
            for b in els[:6]:
                assert e(src.mul(a, b)) == dst.mul(e(a), e(b))
                assert e(src.add(a, b)) == dst.add(e(a), e(b))


def test_embedding_tower_coherence():
    for chain in [(GF(2), GF(2, 2), GF(2, 4)),
                  (GF(2, 2), GF(2, 4), GF(2, 8)),
                  (GF(2), GF(2, 3), GF(2, 6)),
                  (GF(2, 2), GF(2, 6), GF(2, 12)),
                  (GF(3), GF(3, 2), GF(3, 4))]:
        a, b, c = chain
        e_ab, e_bc, e_ac = embedding(a, b), embedding(b, c), embedding(a, c)
        for x in a.elements():
            assert e_bc(e_ab(x)) == e_ac(x)


def test_frobenius_fixes_embedded_subfield():
    F4, F16 = GF(2, 2), GF(2, 4)
    e = embedding(F4, F16)
    for x in F4.elements():
        y = e(x)
        # Frobenius^2 = x -> x^4 fixes the embedded copy of F_4 pointwise
        assert F16.frobenius(y, 2) == y


def test_field_order_cap():
    with pytest.raises(ValueError):
        GF(2, 30)


def test_numberfield_arithmetic():
    K = NumberField((1, -1, 1))     # w^2 - w + 1
    w = K.gen
    assert K.mul(w, w) == K.sub(w, K.one)
    for a in [K.gen, K.from_int(3), K.add(w, K.from_int(2))]:
        assert K.mul(a, K.inv(a)) == K.one
    assert K.is_rational(K.from_int(5))
    assert not K.is_rational(w)


def test_parse_field_roundtrip():
    assert parse_field("Q") is QQ
    assert parse_field("GF(4)") is GF(2, 2)
    assert parse_field("GF(2^3)") is GF(2, 3)
    F = parse_field("GF(2^4; modulus=x^4+x+1)")
    assert F.modulus == (1, 1, 0, 0, 1)
    assert parse_field(GF(2, 4).spec()) is GF(2, 4)


def test_next_prime():
    assert next_prime(10) == 11
    assert next_prime(13) == 17
    assert next_prime(2 ** 20) == 1048583
