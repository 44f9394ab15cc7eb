"""Classification of line counts for surfaces containing a skew triple.

A surface containing the standard skew triple V(x0,x1), V(x2,x3),
V(x0-x2,x1-x3) has twelve free coefficients (the other eight cubic
coefficients vanish and four linear relations hold).  From them:

  * a cubic g(t) whose roots t4,t5,t6 give the lines
    C_i = V(x0 - t_i x1, x2 - t_i x3);
  * a quadratic h(s) over the field of (t4,t5), computed through the
    l3/u/v coefficient chain, whose roots s1,s2 decide the rationality of
    the remaining lines.

classify() reads the count off the rationality pattern of g- and s-roots:
three rational g-roots give 27 (s-roots rational) or 15; one rational
g-root gives 15 or 7; an irreducible g leaves {3,9}, which finite fields
resolve by enumeration and Q cannot resolve from g and h alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fields import GF, QQ, NumberField, embedding
from .poly import Poly, factor, roots
from .projective import LineP3, lines_meet
from .surface import (CubicForm, SingularSurfaceError, is_smooth_fast,
                      line_in_surface, rational_lines)

COEFF_NAMES = ("a0201", "a0102", "a2010", "a1020", "a0210", "a1002",
               "a1101", "a0111", "a0120", "a2001", "a1011", "a1110")

_FORBIDDEN = ((3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3),
              (2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 2, 1), (0, 0, 1, 2))

E1_ROWS = ((0, 0, 1, 0), (0, 0, 0, 1))      # V(x0, x1)
E2_ROWS = ((1, 0, 0, 0), (0, 1, 0, 0))      # V(x2, x3)
E3_ROWS = ((1, 0, 1, 0), (0, 1, 0, 1))      # V(x0-x2, x1-x3)


def _exp_of(name):
    return tuple(int(ch) for ch in name[1:])


class SkewTripleForm:
    """Cubic surface through the standard skew triple, by 12 coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        if isinstance(coeffs, dict):
            vals = {k: field.coerce(v) for k, v in coeffs.items()}
            missing = [n for n in COEFF_NAMES if n not in vals]
            if missing:
                raise ValueError(f"missing coefficients {missing}")
        else:
            seq = list(coeffs)
            if len(seq) != 12:
                raise ValueError("twelve coefficients expected")
            vals = {n: field.coerce(v) for n, v in zip(COEFF_NAMES, seq)}
        self.field = field
        self.coeffs = vals
        self._check_relations()

    def _check_relations(self):
        F = self.field
        c = self.coeffs
        rel = [
            F.add(c["a0201"], c["a0102"]),
            F.add(c["a2010"], c["a1020"]),
            F.add(F.add(c["a0210"], c["a1002"]),
                  F.add(c["a1101"], c["a0111"])),
            F.add(F.add(c["a0120"], c["a2001"]),
                  F.add(c["a1011"], c["a1110"])),
        ]
        if any(not F.is_zero(r) for r in rel):
            raise ValueError("coefficients violate the skew-triple relations")

    @classmethod
    def from_cubic(cls, f):
        F = f.field
        for exp in _FORBIDDEN:
            if not F.is_zero(f.coeff(exp)):
                raise ValueError(
                    "surface is not in standard skew-triple position")
        vals = {n: f.coeff(_exp_of(n)) for n in COEFF_NAMES}
        return cls(F, vals)

    def to_cubic(self):
        return CubicForm.from_dict(
            self.field, {_exp_of(n): v for n, v in self.coeffs.items()})

    def __getitem__(self, name):
        return self.coeffs[name]

    def standard_lines(self):
        F = self.field
        return (LineP3(F, E1_ROWS), LineP3(F, E2_ROWS), LineP3(F, E3_ROWS))


def g_of(form):
    """The cubic whose roots t4,t5,t6 locate C4,C5,C6."""
    F = form.field
    if F.is_zero(form["a2010"]):
        raise ValueError(
            "leading coefficient a2010 vanishes: the C-pencil chart misses "
            "a line at infinity; re-coordinate the skew triple and retry")
    return Poly(F, [form["a0201"],
                    F.add(form["a0210"], form["a1101"]),
                    F.add(form["a2001"], form["a1110"]),
                    form["a2010"]])


def _l3_at(form, K, lift, t):
    c1 = K.add(K.mul(lift(form["a2010"]), K.mul(t, t)),
               K.add(K.mul(lift(form["a1110"]), t), lift(form["a0210"])))
    c2 = K.add(K.mul(lift(form["a2010"]), t),
               K.add(lift(form["a0120"]), lift(form["a1110"])))
    c3 = K.sub(K.mul(lift(form["a2001"]), t), lift(form["a1002"]))
    return c1, c2, c3


class PivotVanished(ArithmeticError):
    """A denominator of the h-chain vanished for this root labelling."""

    def __init__(self, which):
        super().__init__(f"pivot vanished: {which}")
        self.which = which


def h_of(form, K, lift, t4, t5):
    """h(s) over K through the l3/u/v chain at the roots t4, t5.

    Returned as the coefficient triple (lead, mid, const) of a binary
    quadratic: a vanishing lead means one root sits at infinity of the
    chart (and the corresponding line is defined over the field of t4).
    """
    c1, c2, c3 = _l3_at(form, K, lift, t4)
    d1, d2, d3 = _l3_at(form, K, lift, t5)
    if K.is_zero(c1):
        raise PivotVanished("c1")
    if K.is_zero(d1):
        raise PivotVanished("d1")
    piv = K.add(c3, K.mul(c2, t4))
    if K.is_zero(piv):
        raise PivotVanished("c3 + c2*t4")
    dt = K.sub(t4, t5)
    u1 = K.div(dt, c1)
    u2 = K.neg(K.div(K.add(c3, K.mul(c2, t5)), piv))
    u3 = K.div(dt, piv)
    ratio = K.div(c1, d1)
    v2 = K.div(K.mul(ratio, K.sub(K.mul(d2, c3), K.mul(d3, c2))), piv)
    v3 = K.neg(K.div(K.mul(ratio, K.add(K.mul(d2, t4), d3)), piv))
    lead = v2
    mid = K.add(K.sub(K.mul(u1, v2), u2), v3)
    const = K.sub(K.mul(u1, v3), u3)
    if K.is_zero(lead) and K.is_zero(mid):
        raise PivotVanished("h collapsed to a constant")
    return (lead, mid, const)


def h_display(K, triple):
    """h as a Poly for reports: monic when honestly quadratic."""
    lead, mid, const = triple
    h = Poly(K, [const, mid, lead])
    return h.monic() if not K.is_zero(lead) else h


@dataclass
class ClassifyReport:
    """Outcome of the skew-triple count classification."""

    g: Poly
    g_factors: list
    case: str
    t4: object = None
    t5_modulus: Poly = None
    h: Poly = None
    rational_s_roots: int = None
    count: int = None
    candidates: tuple = None
    resolved_by_enumeration: bool = False

    def to_json_dict(self):
        return {
            "g": repr(self.g),
            "g_factors": [repr(p) for p, _ in self.g_factors],
            "case": self.case,
            "t4": None if self.t4 is None else str(self.t4),
            "t5_modulus": None if self.t5_modulus is None
            else repr(self.t5_modulus),
            "h": None if self.h is None else repr(self.h),
            "rational_s_roots": self.rational_s_roots,
            "count": self.count,
            "candidates": None if self.candidates is None
            else list(self.candidates),
        }


def _quadratic_extension(F, quad):
    """(K, lift, t5, expand) for the root field of an irreducible quadratic.

    expand(x) writes x in the basis (1, t5) over the lifted base field,
    returning a pair of base-field elements.
    """
    if F.kind == "rationals":
        K = NumberField(tuple(quad.monic().coeffs))
        lift = K.coerce
        t5 = K.gen

        def expand(x):
            return (Fraction(x[0]), Fraction(x[1]))

        return K, lift, t5, expand
    if F.kind == "finite":
        K = GF(F.p, F.d * 2)
        emb = embedding(F, K)
        qK = quad.map_coeffs(emb, K)
        rs = roots(qK)
        if not rs:
            raise ArithmeticError("quadratic did not split in F_{q^2}")
        t5 = rs[0]
        # invert the F_q-linear bijection (a, b) |-> emb(a) + emb(b)*t5
        els = sorted(F.elements(), key=F.sort_key)
        table = {}
        for a in els:
            for b in els:
                table[K.add(emb(a), K.mul(emb(b), t5))] = (a, b)

        def expand(x):
            return table[x]

        return K, emb, t5, expand
    raise TypeError(f"no quadratic extension machinery over {F!r}")


def _in_base(K, F, x):
    if K.kind == "numberfield":
        return K.is_rational(x)
    return K.frobenius(x, F.d) == x


def _rational_s_root_count(F, K, triple, expand):
    """Base-rational roots of the binary quadratic h, counted projectively.

    A vanishing leading coefficient puts one root at infinity of the
    chart, which corresponds to a line defined over the base field.
    """
    lead, mid, const = triple
    if K.is_zero(lead):
        finite = K.neg(K.div(const, mid))
        return 1 + (1 if _in_base(K, F, finite) else 0)
    h = Poly(K, [const, mid, lead]).monic()
    comps = [expand(c) for c in h.coeffs]
    h0 = Poly(F, [c[0] for c in comps])
    h1 = Poly(F, [c[1] for c in comps])
    if h1.is_zero():
        g = h0
    elif h0.is_zero():
        g = h1
    else:
        g = h0.gcd(h1)
    if g.degree() <= 0:
        return 0
    if g.degree() == 2:
        _, facs = factor(g)
        return 2 if all(p.degree() == 1 for p, _ in facs) else 0
    return 1


def classify(form, check_smooth=True):
    """Count classification for a smooth surface with the standard triple."""
    F = form.field
    f = form.to_cubic()
    if check_smooth and not is_smooth_fast(f):
        raise SingularSurfaceError("classification requires a smooth surface")
    g = g_of(form)
    unit, facs = factor(g)
    if not g.is_squarefree():
        raise ArithmeticError(
            "g has a repeated root on a smooth surface (arithmetic bug)")
    degrees = sorted(p.degree() for p, _ in facs)
    if degrees == [3]:
        # case (1): no rational g-root
        if F.kind == "finite":
            count = rational_lines(f, check_smooth=False).count()
            if count not in (3, 9):
                raise ArithmeticError(
                    f"case (1) enumeration returned {count}")
            return ClassifyReport(g=g, g_factors=facs, case="1",
                                  count=count, candidates=(3, 9),
                                  resolved_by_enumeration=True)
        return ClassifyReport(g=g, g_factors=facs, case="1",
                              candidates=(3, 9))
    if degrees == [1, 2]:
        lin = next(p for p, _ in facs if p.degree() == 1)
        quad = next(p for p, _ in facs if p.degree() == 2)
        t4_base = F.neg(lin[0])
        K, lift, t5, expand = _quadratic_extension(F, quad)
        t5_choices = [t5, K.sub(K.neg(lift(quad.monic()[1])), t5)]
        triple = None
        for t5_try in t5_choices:
            try:
                triple = h_of(form, K, lift, lift(t4_base), t5_try)
                break
            except PivotVanished:
                continue
        if triple is None:
            raise PivotVanished("all root labellings for case (2)")
        nrat = _rational_s_root_count(F, K, triple, expand)
        h = h_display(K, triple)
        if nrat == 0:
            return ClassifyReport(g=g, g_factors=facs, case="2a",
                                  t4=t4_base, t5_modulus=quad, h=h,
                                  rational_s_roots=0, count=7)
        if nrat == 2:
            return ClassifyReport(g=g, g_factors=facs, case="2c",
                                  t4=t4_base, t5_modulus=quad, h=h,
                                  rational_s_roots=2, count=15)
        raise ArithmeticError(
            "mixed s-root rationality in case (2): impossible by the "
            "C3/L12 rationality link")
    # case (3): all three roots rational
    rts = sorted(roots(g), key=F.sort_key)
    if len(rts) != 3:
        raise ArithmeticError("rational cubic did not yield three roots")
    triple = None
    used = None
    for t4, t5 in itertools.permutations(rts, 2):
        try:
            triple = h_of(form, F, F.coerce, t4, t5)
            used = (t4, t5)
            break
        except PivotVanished:
            continue
    if triple is None:
        raise PivotVanished("all root labellings for case (3)")
    lead, mid, const = triple
    h = h_display(F, triple)
    if F.is_zero(lead):
        nrat = 2    # the infinity root plus a base-field finite root
    else:
        _, hfacs = factor(h)
        nrat = 2 if all(p.degree() == 1 for p, _ in hfacs) else 0
    if nrat == 2:
        return ClassifyReport(g=g, g_factors=facs, case="3c", t4=used[0],
                              h=h, rational_s_roots=2, count=27)
    return ClassifyReport(g=g, g_factors=facs, case="3a", t4=used[0],
                          h=h, rational_s_roots=0, count=15)


# ---------------------------------------------------------------------------
# moving an arbitrary skew triple to the standard one


def find_skew_triple(lineset):
    """First triple of pairwise skew lines among the given rational lines."""
    lines = lineset.lines() if hasattr(lineset, "lines") else list(lineset)
    for trip in itertools.combinations(lines, 3):
        if all(not lines_meet(a, b)
               for a, b in itertools.combinations(trip, 2)):
            return trip
    return None


def embed_standard(f, triple=None):
    """Transform f so a skew triple becomes the standard one.

    Returns (SkewTripleForm, matrix) with matrix the substitution used:
    the new form is f(M y).  Raises if no skew triple of rational lines
    exists.
    """
    F = f.field
    if triple is None:
        if F.kind != "finite":
            raise ValueError("over an infinite field, pass the triple")
        triple = find_skew_triple(rational_lines(f))
        if triple is None:
            raise ValueError("surface has no rational skew triple")
    m1, m2, m3 = triple
    for line in triple:
        if not line_in_surface(f, line):
            raise ValueError("triple lines must lie in the surface")
    for a, b in itertools.combinations(triple, 2):
        if lines_meet(a, b):
            raise ValueError("triple is not pairwise skew")
    from . import linalg
    # decompose two spanning points of m3 as (point of m1) + (point of m2)
    def decompose(vec):
        cols = []
        for r in range(4):
            cols.append([m1.rows[0][r], m1.rows[1][r],
                         m2.rows[0][r], m2.rows[1][r]])
        sol = linalg.solve(F, cols, list(vec))
        p1 = [F.add(F.mul(sol[0], m1.rows[0][r]),
                    F.mul(sol[1], m1.rows[1][r])) for r in range(4)]
        p2 = [F.add(F.mul(sol[2], m2.rows[0][r]),
                    F.mul(sol[3], m2.rows[1][r])) for r in range(4)]
        return p1, p2
    p1, p2 = decompose(m3.rows[0])
    q1, q2 = decompose(m3.rows[1])
    # M columns: images of e0..e3 are p2, q2, p1, q1
    M = [[p2[r], q2[r], p1[r], q1[r]] for r in range(4)]
    g = f.transform(M)
    form = SkewTripleForm.from_cubic(g)
    std = form.standard_lines()
    for line in std:
        assert line_in_surface(g, line)
    return form, M
