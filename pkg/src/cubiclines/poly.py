"""Dense univariate polynomials over the field contexts of cubiclines.fields.

Coefficients are stored ascending (coeffs[i] is the x^i coefficient) with
trailing zeros trimmed; the zero polynomial has an empty tuple.  Factoring
is Cantor–Zassenhaus over finite fields and big-prime reduction plus
subset recombination over Q (degree <= 8).  All randomized splitting is
seeded from the input, so every result is deterministic.

The module also houses the root-sum analysis used to certify six-point
configurations: triple_sum_free decides whether three distinct roots of a
squarefree polynomial sum to zero, either by listing roots in an explicit
splitting field or by a composed-sum resultant computation that works over
any field, including characteristic 2 and 3.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .fields import (GF, MAX_TABLE_ORDER, QQ, embedding, next_prime)


class Poly:
    """Univariate polynomial over a field context."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- basics

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls.one(field)
        for r in roots:
            f = f * cls(field, [field.neg(field.coerce(r)), field.one])
        return f

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return format_poly(self)

    # -- ring operations

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [F.add(self[i], other[i]) for i in range(n)]
        return Poly(F, out)

    def __sub__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = [F.sub(self[i], other[i]) for i in range(n)]
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        F = self.field
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly.zero(F)
            out = [F.zero] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not F.is_zero(ai):
                    for j, bj in enumerate(b):
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
            return Poly(F, out)
        c = F.coerce(other)
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    __rmul__ = __mul__

    def __divmod__(self, other):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv_lead = F.inv(other.lc())
        q = [F.zero] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            if F.is_zero(rem[-1]):
                rem.pop()
                continue
            c = F.mul(rem[-1], inv_lead)
            off = len(rem) - 1 - db
            q[off] = c
            for i, bi in enumerate(other.coeffs):
                rem[off + i] = F.sub(rem[off + i], F.mul(c, bi))
            rem.pop()
        return Poly(F, q), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * self.field.inv(self.lc())

    def evaluate(self, v):
        F = self.field
        v = F.coerce(v)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, v), c)
        return acc

    def compose_linear(self, c0, c1):
        """f(c1*x + c0)."""
        F = self.field
        lin = Poly(F, [c0, c1])
        acc = Poly.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly(F, [c])
        return acc

    def shift(self, a):
        """f(x + a)."""
        return self.compose_linear(a, self.field.one)

    def derivative(self):
        F = self.field
        if self.degree() < 1:
            return Poly.zero(F)
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(F.from_int(i) if F.char == 0 else
                             F.from_int(i % F.char), self.coeffs[i]))
        return Poly(F, out)

    def map_coeffs(self, fn, new_field):
        return Poly(new_field, [fn(c) for c in self.coeffs])

    # -- gcd machinery

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other):
        F = self.field
        r0, r1 = self, other
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = F.inv(r0.lc())
        return r0 * c, s0 * c, t0 * c

    def pow_mod(self, e, modulus):
        F = self.field
        r = Poly.one(F)
        b = self % modulus
        while e:
            if e & 1:
                r = (r * b) % modulus
            b = (b * b) % modulus
            e >>= 1
        return r

    def is_squarefree(self):
        if self.is_zero():
            return False
        if self.degree() == 0:
            return True
        d = self.derivative()
        if d.is_zero():
            return False   # p-th power over a perfect field
        return self.gcd(d).degree() == 0

    def sort_key(self):
        """Deterministic order: degree, then coefficients from the top down."""
        F = self.field
        return (self.degree(),
                tuple(F.sort_key(c) for c in reversed(self.coeffs)))


# ---------------------------------------------------------------------------
# factoring


def factor(f):
    """Factor into irreducibles: returns (unit, [(monic factor, mult), ...]).

    unit * prod(g^m) == f.  Factors are sorted by degree, then by
    coefficients from the leading end.  Supported over finite fields and
    over Q (degree <= 8).
    """
    F = f.field
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if F.kind == "finite":
        return _factor_finite(f)
    if F is QQ or F.kind == "rationals":
        if f.degree() > 8:
            raise ValueError("rational factoring supported up to degree 8")
        return _factor_rationals(f)
    raise TypeError(f"factoring not supported over {F!r}")


def is_irreducible(f):
    """True iff f has no nontrivial factorization over its field."""
    if f.degree() < 1:
        raise ValueError("irreducibility is for nonconstant polynomials")
    F = f.field
    if F.kind == "finite":
        n = f.degree()
        q = F.order
        fm = f.monic()
        x = Poly.x(F)
        h = x
        for ell in sorted(set(_prime_factors(n))):
            h_l = _frobenius_power(x, q, n // ell, fm)
            if fm.gcd(h_l - x).degree() != 0:
                return False
        h_n = _frobenius_power(x, q, n, fm)
        return (h_n - x) % fm == Poly.zero(F)
    if F is QQ or F.kind == "rationals":
        _, facs = factor(f)
        return len(facs) == 1 and facs[0][1] == 1
    raise TypeError(f"irreducibility not supported over {F!r}")


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_power(x, q, k, modulus):
    """x^(q^k) mod modulus."""
    h = x
    for _ in range(k):
        h = h.pow_mod(q, modulus)
    return h


def _det_rng(f, salt=""):
    key = "|".join(str(f.field.sort_key(c)) for c in f.coeffs)
    return random.Random(f"{salt}:{key}")


def _factor_finite(f):
    F = f.field
    unit = f.lc()
    f = f.monic()
    out = []
    for g, mult in _squarefree_decomposition(f):
        for h in _factor_squarefree_finite(g):
            out.append((h, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    return unit, out


def _squarefree_decomposition(f):
    """[(squarefree monic, multiplicity)] with product f (f monic)."""
    F = f.field
    p = F.char
    if f.degree() == 0:
        return []
    d = f.derivative()
    if d.is_zero():
        # f = g(x^p); over a perfect field f = h(x)^p
        h = _pth_root(f)
        return [(g, m * p) for g, m in _squarefree_decomposition(h)]
    out = []
    c = f.gcd(d)
    w = f.exact_div(c)
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree() > 0:
            out.append((z, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree() > 0:
        if p == 0:
            raise ArithmeticError("squarefree decomposition failed")
        h = _pth_root(c)
        for g, m in _squarefree_decomposition(h):
            out.append((g, m * p))
    # merge equal squarefree parts (can arise from the p-th power branch)
    merged = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + 0
    combined = []
    seen = {}
    for g, m in out:
        if g in seen:
            seen[g] += m
        else:
            seen[g] = m
            combined.append(g)
    return [(g, seen[g]) for g in combined]


def _pth_root(f):
    """For f = g(x^p) over GF(p^d), the h with h^p = f."""
    F = f.field
    p = F.char
    coeffs = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            coeffs.append(F.pow(c, F.order // p))
        elif not F.is_zero(c):
            raise ArithmeticError("not a polynomial in x^p")
    return Poly(F, coeffs)


def _factor_squarefree_finite(f):
    """Irreducible factors of a monic squarefree f over a finite field."""
    F = f.field
    q = F.order
    out = []
    x = Poly.x(F)
    h = x
    rest = f
    d = 0
    while rest.degree() > 0:
        d += 1
        if 2 * d > rest.degree():
            out.append(rest)
            break
        h = h.pow_mod(q, rest)
        g = rest.gcd(h - x)
        if g.degree() > 0:
            out.extend(_equal_degree_split(g, d))
            rest = rest.exact_div(g)
            h = h % rest
    return sorted(out, key=lambda t: t.sort_key())


def _equal_degree_split(f, d):
    """Split monic squarefree f whose irreducible factors all have degree d."""
    F = f.field
    if f.degree() == d:
        return [f]
    q = F.order
    rng = _det_rng(f, salt=f"edf{d}")
    while True:
        r = Poly(F, [F.coerce(rng.randrange(q)) for _ in range(f.degree())])
        if r.degree() < 1:
            continue
        if F.char == 2:
            # trace map over F_2
            k = d * _log2(q)
            s = Poly.zero(F)
            t = r % f
            for _ in range(k):
                s = (s + t) % f
                t = (t * t) % f
            g = f.gcd(s)
        else:
            e = (q ** d - 1) // 2
            s = r.pow_mod(e, f) - Poly.one(F)
            g = f.gcd(s)
        if 0 < g.degree() < f.degree():
            return sorted(_equal_degree_split(g, d)
                          + _equal_degree_split(f.exact_div(g), d),
                          key=lambda t: t.sort_key())


def _log2(q):
    k = q.bit_length() - 1
    assert 1 << k == q
    return k


def roots(f):
    """Sorted roots of f lying in its own coefficient field."""
    F = f.field
    if F.kind == "finite":
        if f.degree() == 0:
            return []
        q = F.order
        x = Poly.x(F)
        fm = f.monic()
        g = fm.gcd(x.pow_mod(q, fm) - x)
        if g.degree() == 0:
            return []
        lin = _equal_degree_split(g, 1)
        return sorted(F.neg(h[0]) for h in lin)
    if F is QQ or F.kind == "rationals":
        _, facs = factor(f)
        return sorted((-g[0] for g, _ in facs if g.degree() == 1),
                      key=F.sort_key)
    raise TypeError(f"root finding not supported over {F!r}")


Poly.roots = roots


def _factor_rationals(f):
    unit = f.lc()
    f = f.monic()
    out = []
    for g, mult in _squarefree_decomposition_q(f):
        for h in _factor_squarefree_q(g):
            out.append((h, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    return unit, out


def _squarefree_decomposition_q(f):
    if f.degree() == 0:
        return []
    out = []
    c = f.gcd(f.derivative())
    w = f.exact_div(c)
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree() > 0:
            out.append((z, i))
        w = y
        c = c.exact_div(y)
        i += 1
    return out


def _to_int_poly(f):
    """Scale a monic rational poly to a primitive integer coefficient list."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _factor_squarefree_q(f):
    """Irreducible monic factors of a monic squarefree rational polynomial."""
    n = f.degree()
    if n == 1:
        return [f]
    ints = _to_int_poly(f)
    lc = ints[-1]
    norm2 = math.isqrt(sum(c * c for c in ints)) + 1
    bound = 2 ** n * norm2 * abs(lc)
    p = next_prime(max(2 * bound + 1, 100))
    while True:
        Fp = GF(p)
        fp = Poly(Fp, [c % p for c in ints])
        if fp.degree() == n and fp.is_squarefree():
            break
        p = next_prime(p)
        Fp = GF(p)
    modular = _factor_squarefree_finite(fp.monic())
    # subset recombination with symmetric lifts
    pool = list(modular)
    found = []
    remaining = list(ints)

    def lift(c):
        return c - p if c > p // 2 else c

    size = 1
    while pool and size <= len(pool):
        hit = None
        for subset in _subsets_of_size(len(pool), size):
            cand = Poly(Fp, [lc % p])
            for idx in subset:
                cand = cand * pool[idx]
            coeffs = [lift(int(c)) for c in cand.coeffs]
            g = 0
            for c in coeffs:
                g = math.gcd(g, c)
            if g > 1:
                coeffs = [c // g for c in coeffs]
            if coeffs[-1] < 0:
                coeffs = [-c for c in coeffs]
            quot = _int_poly_exact_div(remaining, coeffs)
            if quot is not None:
                hit = (subset, coeffs, quot)
                break
        if hit is None:
            size += 1
            continue
        subset, coeffs, quot = hit
        found.append(Poly(QQ, [Fraction(c) for c in coeffs]).monic())
        pool = [g for i, g in enumerate(pool) if i not in set(subset)]
        remaining = quot
        lc = remaining[-1]
        size = max(size, 1)
    if len(remaining) > 1:
        found.append(Poly(QQ, [Fraction(c) for c in remaining]).monic())
    return sorted(found, key=lambda t: t.sort_key())


def _subsets_of_size(n, k):
    import itertools
    return itertools.combinations(range(n), k)


def _int_poly_exact_div(a, b):
    """Exact division of integer coefficient lists, or None."""
    if len(b) > len(a):
        return None
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for off in range(len(a) - len(b), -1, -1):
        num = a[off + len(b) - 1]
        if num % b[-1]:
            return None
        c = num // b[-1]
        q[off] = c
        if c:
            for i in range(len(b)):
                a[off + i] -= c * b[i]
    if any(a[: len(b) - 1]) or any(a[len(b) - 1:]):
        return None
    return q


# ---------------------------------------------------------------------------
# root-sum analysis


def splitting_field_roots(f):
    """(K, embed, roots): all roots of squarefree f over GF(q) in the
    smallest extension K of the base field containing them."""
    F = f.field
    if F.kind != "finite":
        raise TypeError("explicit splitting fields only over finite fields")
    _, facs = factor(f)
    m = 1
    for g, _ in facs:
        m = m * g.degree() // math.gcd(m, g.degree())
    K = GF(F.p, F.d * m)
    emb = embedding(F, K)
    fk = f.map_coeffs(emb, K)
    rs = roots(fk)
    if len(rs) != f.degree():
        raise ArithmeticError("polynomial did not split in its splitting field")
    return K, emb, rs


def triple_sum_free(G, force_resultant=False):
    """True iff no three distinct roots of squarefree G sum to zero.

    Over finite fields with a small enough splitting field the roots are
    listed explicitly and all triples tested; otherwise (and over Q) a
    composed-sum resultant computation is used, evaluated by exact
    polynomial division so no degeneracy can produce 0/0.
    """
    F = G.field
    if G.degree() < 3:
        _require_squarefree(G)
        return True
    _require_squarefree(G)
    if F.kind == "finite" and not force_resultant:
        m = 1
        _, facs = factor(G)
        for g, _ in facs:
            m = m * g.degree() // math.gcd(m, g.degree())
        if F.order ** m <= MAX_TABLE_ORDER:
            _, _, rs = splitting_field_roots(G)
            K = GF(F.p, F.d * m)
            import itertools
            for a, b, c in itertools.combinations(rs, 3):
                if K.is_zero(K.add(K.add(a, b), c)):
                    return False
            return True
    return _triple_sum_free_resultant(G)


def _require_squarefree(G):
    if not G.is_squarefree():
        raise ValueError("triple_sum_free requires a squarefree polynomial")


def _triple_sum_free_resultant(G):
    """Composed-sum route: S3(0) != 0 where S3 has roots t_i+t_j+t_k.

    With G monic of degree n and roots t_i:
      P2(x)  = Res_y(G(y), G(x-y))        = D(x) * S2(x)^2,
      D(x)   = prod (x - 2 t_i),
      T(x)   = Res_y(G(y), S2(x-y))       = S3(x)^3 * C(x),
      C(x)   = [Res_y(D(y), G(x-y))] / G3(x),
      G3(x)  = prod (x - 3 t_i).
    All divisions are exact polynomial divisions; the answer is T/C at 0.
    """
    F = G.field
    G = G.monic()
    n = G.degree()
    K, emb = F, (lambda c: c)
    deg_needed = n * (n * (n - 1) // 2) + 1
    if F.kind == "finite" and F.order < deg_needed + 2:
        m = 1
        while F.order ** m < deg_needed + 2:
            m += 1
        K = GF(F.p, F.d * m)
        emb = embedding(F, K)
        G = G.map_coeffs(emb, K)
    P2 = _composed_resultant(G, G)
    D = _scaled_roots_poly(G, 2)
    S2sq = P2.exact_div(D)
    S2 = _poly_sqrt(S2sq)
    T = _composed_resultant(G, S2)
    CG3 = _composed_resultant(D, G)
    G3 = _scaled_roots_poly(G, 3)
    C = CG3.exact_div(G3)
    Q = T.exact_div(C)
    return not K.is_zero(Q.evaluate(K.zero))


def _scaled_roots_poly(G, k):
    """Monic polynomial whose roots are k * (roots of monic G)."""
    F = G.field
    n = G.degree()
    kk = F.from_int(k)
    if F.is_zero(kk):
        return Poly(F, [F.zero] * n + [F.one])
    out = []
    for i, c in enumerate(G.coeffs):
        out.append(F.mul(c, F.pow(kk, n - i)))
    return Poly(F, out)


def _composed_resultant(A, B):
    """Res_y(A(y), B(x - y)) = prod over roots a of A of B(x - a).

    A and B monic; computed by evaluation at field points and Newton
    interpolation.  Degree of the result is deg(A) * deg(B).
    """
    F = A.field
    deg = A.degree() * B.degree()
    pts = _eval_points(F, deg + 1)
    vals = []
    for x0 in pts:
        by = B.compose_linear(x0, F.neg(F.one))   # B(x0 - y) as poly in y
        vals.append(resultant(A, by))
    return _newton_interpolate(F, pts, vals)


def _eval_points(F, count):
    if F.kind == "finite":
        if F.order < count:
            raise ValueError("field too small for interpolation")
        return [F.coerce(i) if F.d == 1 else i for i in range(count)]
    return [F.from_int(i) for i in range(count)]


def _newton_interpolate(F, pts, vals):
    n = len(pts)
    coef = list(vals)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = F.sub(coef[i], coef[i - 1])
            den = F.sub(pts[i], pts[i - j])
            coef[i] = F.div(num, den)
    out = Poly(F, [coef[-1]])
    for i in range(n - 2, -1, -1):
        out = out * Poly(F, [F.neg(pts[i]), F.one]) + Poly(F, [coef[i]])
    return out


def resultant(A, B):
    """Res_x(A, B) over a field, by the Euclidean recursion."""
    F = A.field
    if A.is_zero() or B.is_zero():
        return F.zero
    res = F.one
    a, b = A, B
    sign = F.one
    while b.degree() > 0:
        r = a % b
        if r.is_zero():
            return F.zero if a.degree() > 0 else res
        da, db, dr = a.degree(), b.degree(), r.degree()
        if (da * db) % 2 and F.char != 2:
            sign = F.neg(sign)
        res = F.mul(res, F.pow(b.lc(), da - dr))
        a, b = b, r
    # b is a nonzero constant
    res = F.mul(res, F.pow(b.coeffs[0], a.degree()))
    return F.mul(res, sign)


def _poly_sqrt(A):
    """Monic square root of a monic polynomial that is a perfect square."""
    F = A.field
    if A.degree() % 2:
        raise ArithmeticError("odd degree cannot be a square")
    m = A.degree() // 2
    if F.char == 2:
        out = []
        for i in range(m + 1):
            if 2 * i < len(A.coeffs) + 1:
                c = A[2 * i]
            else:
                c = F.zero
            out.append(F.sqrt(c))
        for i, c in enumerate(A.coeffs):
            if i % 2 and not F.is_zero(c):
                raise ArithmeticError("not a square in characteristic 2")
        S = Poly(F, out)
    else:
        s = [F.zero] * (m + 1)
        s[m] = F.one
        inv2 = F.inv(F.from_int(2))
        for k in range(1, m + 1):
            acc = A[2 * m - k]
            for i in range(m - k + 1, m):
                j = 2 * m - k - i
                if m - k < j <= m:
                    acc = F.sub(acc, F.mul(s[i], s[j]))
            s[m - k] = F.mul(acc, inv2)
        S = Poly(F, s)
    if S * S != A:
        raise ArithmeticError("square root verification failed")
    return S


# ---------------------------------------------------------------------------
# Eisenstein criteria


def eisenstein_check(f, p):
    """Eisenstein's criterion at the integer prime p, for monic f over Q
    with integer coefficients."""
    if f.field is not QQ and f.field.kind != "rationals":
        raise TypeError("eisenstein_check expects a rational polynomial")
    if f.is_zero() or f.lc() != 1:
        raise ValueError("polynomial must be monic")
    coeffs = []
    for c in f.coeffs:
        if c.denominator != 1:
            raise ValueError("polynomial must have integer coefficients")
        coeffs.append(c.numerator)
    if not all(c % p == 0 for c in coeffs[:-1]):
        return False
    return coeffs[0] % (p * p) != 0


def eisenstein_at_z(coeffs_in_z):
    """Eisenstein's criterion for Q[z] at the prime element (z).

    coeffs_in_z lists the t^i coefficients (ascending) as Polys in z over
    Q; the polynomial must be monic in t.
    """
    if not coeffs_in_z:
        raise ValueError("empty polynomial")
    lead = coeffs_in_z[-1]
    if lead != Poly.one(QQ):
        raise ValueError("polynomial must be monic in t")
    for c in coeffs_in_z[:-1]:
        if not c.is_zero() and c.evaluate(Fraction(0)) != 0:
            return False
    c0 = coeffs_in_z[0]
    if c0.is_zero():
        return False
    # z-valuation of the constant term must be exactly 1
    if c0.evaluate(Fraction(0)) != 0:
        return False
    shifted = Poly(QQ, list(c0.coeffs)[1:])
    return shifted.evaluate(Fraction(0)) != 0


def eisenstein_substitutes_q(p, q):
    """Irreducible stand-ins over Q for the nonlinear factors of the eleven
    standard sextics, built from two distinct primes p and q.

    Returns [(original, replacement, prime, via_eisenstein)].  All entries
    are irreducible; t^2+t+p is the one replacement whose irreducibility
    does not literally follow from Eisenstein (its t-coefficient is 1),
    coming instead from its negative discriminant.
    """
    if p == q:
        raise ValueError("need two distinct primes")

    def P(*cs):
        return Poly(QQ, [Fraction(c) for c in cs])

    return [
        (P(1, 0, 1), P(p, 0, 1), p, True),              # t^2+1 -> t^2+p
        (P(2, 0, 1), P(q, 0, 1), q, True),              # t^2+2 -> t^2+q
        (P(1, 1, 1), P(p, 1, 1), p, False),             # t^2+t+1 -> t^2+t+p
        (P(1, 0, 1, 1), P(p, 0, p, 1), p, True),        # t^3+t^2+1 -> t^3+pt^2+p
        (P(1, 0, 2, 1), P(p, 0, p * p, 1), p, True),    # t^3+2t^2+1 -> t^3+p^2t^2+p
        (P(1, 0, 0, 0, 1), P(p, 0, 0, 0, 1), p, True),  # t^4+1 -> t^4+p
        (P(1, 0, 1, 0, 1, 1), P(p, 0, 0, 0, p, 1), p, True),
        (P(1, 0, 0, 0, 0, 1, 1), P(p, 0, 0, 0, 0, p, 1), p, True),
    ]


def eisenstein_substitutes_z():
    """The k(z) analogues: replacements whose coefficients live in Q[z].

    Returns [(name, coeffs_in_z)] where coeffs_in_z is suitable for
    eisenstein_at_z.
    """
    z = Poly.x(QQ)
    one = Poly.one(QQ)
    zero = Poly.zero(QQ)
    zp1 = z + one

    def entry(name, *cs):
        return (name, list(cs))

    return [
        entry("t^2+z", z, zero, one),
        entry("t^2+z+1", zp1, zero, one),       # not Eisenstein; irreducible anyway
        entry("t^2+t+z", z, one, one),
        entry("t^3+z*t^2+z", z, zero, z, one),
        entry("t^3+z^2*t^2+z", z, zero, z * z, one),
        entry("t^4+z", z, zero, zero, zero, one),
        entry("t^5+z*t^4+z", z, zero, zero, zero, z, one),
        entry("t^6+z*t^5+z", z, zero, zero, zero, zero, z, one),
    ]


# ---------------------------------------------------------------------------
# quadratic equations (used for conic splitting)


def sqrt_in_field(F, a):
    """A square root of a in the field, or None if a is not a square."""
    if F.is_zero(a):
        return F.zero
    if F.kind == "rationals" or F is QQ:
        num, den = a.numerator, a.denominator
        if num < 0:
            return None
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None
    if F.kind != "finite":
        raise TypeError(f"sqrt not supported over {F!r}")
    if F.p == 2:
        return F.sqrt(a)
    q = F.order
    if F.pow(a, (q - 1) // 2) != F.one:
        return None
    if q % 4 == 3:
        r = F.pow(a, (q + 1) // 4)
        return min(r, F.neg(r))
    # Tonelli–Shanks, deterministic nonresidue scan
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    nr = None
    for c in range(2, q):
        cand = F.coerce(c) if F.d == 1 else c
        if not F.is_zero(cand) and F.pow(cand, (q - 1) // 2) != F.one:
            nr = cand
            break
    g = F.pow(nr, s)
    x = F.pow(a, (s + 1) // 2)
    b = F.pow(a, s)
    r = e
    while b != F.one:
        m = 0
        t = b
        while t != F.one:
            t = F.mul(t, t)
            m += 1
        gs = F.pow(g, 1 << (r - m - 1))
        g = F.mul(gs, gs)
        x = F.mul(x, gs)
        b = F.mul(b, g)
        r = m
    return min(x, F.neg(x))


def _artin_schreier_matrix(F):
    d = F.d
    cols = []
    for i in range(d):
        e = F.from_coeffs([1 if j == i else 0 for j in range(d)])
        img = F.add(F.mul(e, e), e)
        cols.append(F.coeffs(img))
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def solve_artin_schreier(F, c):
    """A solution y of y^2 + y = c over GF(2^d), or None (Tr(c) = 1)."""
    if F.p != 2:
        raise TypeError("Artin–Schreier solve is for characteristic 2")
    d = F.d
    mat = _artin_schreier_matrix(F)
    rhs = list(F.coeffs(c))
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, d) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(d):
            if i != r and aug[i][col]:
                aug[i] = [(x ^ y) for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, d):
        if aug[i][d]:
            return None
    sol = [0] * d
    for i, col in enumerate(pivots):
        sol[col] = aug[i][d]
    return F.from_coeffs(sol)


def quadratic_roots(F, a, b, c):
    """Roots in F of a*x^2 + b*x + c (a != 0), sorted; [] if none lie in F."""
    a, b, c = F.coerce(a), F.coerce(b), F.coerce(c)
    if F.is_zero(a):
        raise ValueError("not a quadratic")
    if F.char == 2:
        if F.is_zero(b):
            r = F.sqrt(F.div(c, a)) if F.kind == "finite" else None
            if r is None:
                return []
            return [r, r]
        # x = (b/a) y turns it into y^2 + y = c*a/b^2
        u = F.div(F.mul(c, a), F.mul(b, b))
        y = solve_artin_schreier(F, u)
        if y is None:
            return []
        scale = F.div(b, a)
        r1 = F.mul(scale, y)
        r2 = F.mul(scale, F.add(y, F.one))
        return sorted([r1, r2], key=F.sort_key)
    disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)))
    s = sqrt_in_field(F, disc)
    if s is None:
        return []
    inv2a = F.inv(F.mul(F.from_int(2), a))
    r1 = F.mul(F.sub(s, b), inv2a)
    r2 = F.mul(F.sub(F.neg(s), b), inv2a)
    return sorted({r1, r2}, key=F.sort_key) if r1 != r2 else [r1, r2]


# ---------------------------------------------------------------------------
# text format


def format_poly(f, var="t"):
    """Canonical text form, descending powers: 't^2+t+a', '2*t^3+1', ..."""
    F = f.field
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree(), -1, -1):
        c = f[i]
        if F.is_zero(c):
            continue
        cs = F.format(c) if hasattr(F, "format") else str(c)
        if i == 0:
            body = f"({cs})" if _needs_parens(cs) else cs
            terms.append(body)
            continue
        v = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            terms.append(v)
        elif cs == "-1" and F.char == 0:
            terms.append(f"-{v}")
        else:
            body = f"({cs})" if _needs_parens(cs) else cs
            terms.append(f"{body}*{v}")
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _needs_parens(s):
    return "+" in s or ("-" in s[1:])


def parse_poly(F, text, var="t"):
    """Parse the canonical text form back into a Poly over F."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly.zero(F)
    terms = []
    cur = ""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-(*^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs = {}
    for term in terms:
        c, e = _parse_term(F, term, var)
        coeffs[e] = F.add(coeffs.get(e, F.zero), c)
    deg = max(coeffs)
    return Poly(F, [coeffs.get(i, F.zero) for i in range(deg + 1)])


def _parse_term(F, term, var):
    sign = F.one
    while term and term[0] in "+-":
        if term[0] == "-":
            sign = F.neg(sign)
        term = term[1:]
    if not term:
        raise ValueError("dangling sign")
    parts = _split_top(term, "*")
    coeff = F.one
    exp = 0
    for part in parts:
        if not part:
            raise ValueError(f"bad term {term!r}")
        base, _, p_exp = part.partition("^")
        e = int(p_exp) if p_exp else 1
        if base == var:
            exp += e
        else:
            val = _parse_scalar(F, base)
            coeff = F.mul(coeff, F.pow(val, e) if e != 1 else val)
    return F.mul(sign, coeff), exp


def _split_top(s, sep):
    out, cur, depth = [], "", 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def _parse_scalar(F, text):
    t = text
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    if F.kind == "finite" and ("a" in t):
        val = F.zero
        for piece in _split_signed(t):
            sgn = F.one
            p = piece
            while p and p[0] in "+-":
                if p[0] == "-":
                    sgn = F.neg(sgn)
                p = p[1:]
            factors = p.split("*")
            acc = F.one
            for fpart in factors:
                base, _, pe = fpart.partition("^")
                e = int(pe) if pe else 1
                if base == "a":
                    gen = F.from_coeffs([0, 1]) if F.d > 1 else F.one
                    acc = F.mul(acc, F.pow(gen, e))
                else:
                    acc = F.mul(acc, F.pow(F.from_int(int(base)), e))
            val = F.add(val, F.mul(sgn, acc))
        return val
    if "/" in t:
        num, den = t.split("/")
        if F.kind == "finite":
            return F.div(F.from_int(int(num)), F.from_int(int(den)))
        return F.coerce(Fraction(int(num), int(den)))
    return F.from_int(int(t))


def _split_signed(s):
    out, cur = [], ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*^":
            out.append(cur)
            cur = ch
        else:
            cur += ch
    out.append(cur)
    return out
