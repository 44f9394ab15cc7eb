"""Cubic surfaces with prescribed rational-line counts, built by blowing
up six points of P^2 with controlled Galois orbits.

The six points are placed on the twisted cubic [1:t:t^3]: a sextic G(t)
with distinct roots, nonzero degree-5 term and no zero triple sums puts
its root set in general position, and the multiset of degrees of G's
irreducible factors fixes the Galois orbits.  The anticanonical system of
the blow-up (the 4-dimensional space of cubics through the six points) is
computed by reducing the curve parameterization modulo each factor, which
keeps all linear algebra over the base field; the image surface is the
unique cubic relation among the four basis curves.

The fully split pattern (six rational points) cannot sit on a twisted
cubic over tiny fields -- F_5 has five elements, and every six-element
subset of F_7 or F_8 contains a zero 3-sum -- so that one cell may fall
back to an explicit general-position search in P^2(F_q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg, weyl
from .char2 import ConstructionExhausted, field_generator, sextic_builder
from .fields import GF, QQ
from .graphs import IntersectionGraph, graph_isomorphic
from .poly import Poly, factor, is_irreducible, parse_poly, triple_sum_free
from .projective import collinear, on_common_conic, proj_point
from .surface import CubicForm, _monomials, is_smooth_fast, rational_lines

PATTERN_ITEMS = {
    1: (1, 1, 1, 1, 1, 1), 2: (1, 1, 1, 1, 2), 3: (1, 1, 1, 3),
    4: (1, 1, 2, 2), 5: (1, 1, 4), 6: (1, 2, 3), 7: (2, 2, 2),
    8: (1, 5), 9: (2, 4), 10: (3, 3), 11: (6,),
}
ITEM_OF_DEGREES = {v: k for k, v in PATTERN_ITEMS.items()}

PREDICTED_COUNTS = {1: 27, 2: 15, 3: 9, 4: 7, 5: 5, 6: 3, 7: 3, 8: 2,
                    9: 1, 10: 0, 11: 0}

# orbit structure of the six points as a permutation of the indices 1..6
INDEX_PERMS = {
    1: [1, 2, 3, 4, 5, 6],
    2: [1, 2, 3, 4, 6, 5],
    3: [1, 2, 3, 5, 6, 4],
    4: [1, 2, 4, 3, 6, 5],
    5: [1, 2, 4, 5, 6, 3],
    6: [1, 3, 4, 2, 6, 5],
    7: [2, 1, 4, 3, 6, 5],
    8: [1, 3, 4, 5, 6, 2],
    9: [2, 3, 4, 1, 6, 5],
    10: [2, 3, 1, 5, 6, 4],
    11: [2, 3, 4, 5, 6, 1],
}

# the eleven standard sextics over Q
Q_SEXTICS = {
    1: "t^6+15*t^5+85*t^4+225*t^3+274*t^2+120*t",
    2: "t^6+10*t^5+36*t^4+60*t^3+59*t^2+50*t+24",
    3: "t^6+7*t^5+17*t^4+18*t^3+12*t^2+11*t+6",
    4: "t^6+3*t^5+5*t^4+9*t^3+8*t^2+6*t+4",
    5: "t^6+3*t^5+2*t^4+t^2+3*t+2",
    6: "t^6+2*t^5+2*t^4+3*t^3+2*t^2+t+1",
    7: "t^6+t^5+4*t^4+3*t^3+5*t^2+2*t+2",
    8: "t^6+t^5+t^3+t",
    9: "t^6+t^5+t^4+t^2+t+1",
    10: "t^6+3*t^5+2*t^4+2*t^3+3*t^2+1",
    11: "t^6+t^5+1",
}


@dataclass(frozen=True)
class GaloisPattern:
    """Multiset of irreducible-factor degrees plus its case number."""

    degrees: tuple
    item: int

    @classmethod
    def from_degrees(cls, degrees):
        key = tuple(sorted(degrees))
        if sum(key) != 6 or any(d < 1 for d in key):
            raise ValueError("degrees must be positive and sum to 6")
        return cls(key, ITEM_OF_DEGREES[key])

    @classmethod
    def from_item(cls, item):
        return cls(PATTERN_ITEMS[item], item)


def predicted_count(pattern):
    """(rational line count, expected intersection graph) for a pattern."""
    count = PREDICTED_COUNTS[pattern.item]
    sigma = INDEX_PERMS[pattern.item]
    labels = weyl.fixed_labels_of_index_perm(sigma)
    graph = weyl.restricted_model(labels)
    if graph.order() != count:
        raise ArithmeticError("fixed-label count disagrees with the table")
    return count, graph


def verify_six_point_conditions(G, degrees):
    """Check distinct roots, nonzero degree-5 term, triple-sum-freeness
    and the prescribed factor degrees; returns None or a failure string."""
    from .char2 import _verify_pattern_poly
    return _verify_pattern_poly(G, degrees)


class _IrredPool:
    """Lazily materialized list of monic irreducibles of one degree."""

    def __init__(self, F, deg):
        self.F = F
        self.deg = deg
        self.items = []
        self.exhausted = False
        self._gen = self._generate()

    def _generate(self):
        F = self.F
        els = sorted(F.elements(), key=F.sort_key)
        for tail in itertools.product(els, repeat=self.deg):
            f = Poly(F, list(tail) + [F.one])
            if is_irreducible(f):
                yield f

    def ensure(self, n):
        while len(self.items) < n and not self.exhausted:
            try:
                self.items.append(next(self._gen))
            except StopIteration:
                self.exhausted = True
        return self.items


def _generic_pattern_search(F, degrees, budget=200000):
    """Deterministic search for G with the given factor degrees satisfying
    all six-point conditions; reports the most frequent failure.

    Pools of irreducibles are grown lazily (a valid combination usually
    appears among the first few candidates of each degree)."""
    from collections import Counter
    fails = Counter()
    degree_counts = Counter(degrees)
    pools = {d: _IrredPool(F, d) for d in degree_counts}
    tried = set()
    cap = max(degree_counts.values()) + 2
    while True:
        choosers = []
        all_exhausted = True
        for d in sorted(degree_counts):
            pool = pools[d].ensure(cap)
            if not pools[d].exhausted:
                all_exhausted = False
            if len(pool) < degree_counts[d]:
                choosers = None
                break
            choosers.append(list(
                itertools.combinations(range(len(pool)), degree_counts[d])))
        if choosers is not None:
            degs_sorted = sorted(degree_counts)
            for combo in itertools.product(*choosers):
                key = tuple(zip(degs_sorted, combo))
                if key in tried:
                    continue
                tried.add(key)
                if len(tried) > budget:
                    raise ConstructionExhausted(
                        f"search budget exhausted for degrees "
                        f"{list(degrees)} over {F!r}")
                G = Poly.one(F)
                for d, idxs in key:
                    for i in idxs:
                        G = G * pools[d].items[i]
                fail = verify_six_point_conditions(G, list(degrees))
                if fail is None:
                    return G
                fails[fail] += 1
        if all_exhausted or (choosers is None and
                             all(pools[d].exhausted for d in degree_counts)):
            break
        cap *= 2
    most = fails.most_common(1)
    detail = f"; most frequent failure: {most[0][0]}" if most else ""
    raise ConstructionExhausted(
        f"no sextic with factor degrees {list(degrees)} over {F!r}{detail}")


def pattern_polynomial(pattern, F):
    """A sextic G(t) realizing the pattern over F.

    Over Q the eleven standard polynomials are returned; over F_{2^d} the
    constructive builders run first with the generic search as fallback;
    odd characteristic searches directly.
    """
    degrees = list(pattern.degrees)
    if F is QQ or F.kind == "rationals":
        G = parse_poly(QQ, Q_SEXTICS[pattern.item])
        fail = verify_six_point_conditions(G, degrees)
        if fail:
            raise ArithmeticError(f"standard sextic failed: {fail}")
        return G
    if F.kind != "finite":
        raise TypeError(f"unsupported field {F!r}")
    if pattern.item == 1:
        return _fully_split_sextic(F)
    if F.p == 2:
        try:
            cert = sextic_builder(F.d, pattern.item)
            return cert.poly
        except ConstructionExhausted:
            return _generic_pattern_search(F, degrees)
    return _generic_pattern_search(F, degrees)


def _fully_split_sextic(F):
    """Six distinct rational points on the twisted cubic, when possible."""
    gen = field_generator(F)
    if F.p == 2 and F.d == 4 and F.modulus == (1, 1, 0, 0, 1):
        a = gen
        a2 = F.mul(a, a)
        roots = [F.zero, F.one, a, a2, F.add(F.add(a2, a), F.one),
                 F.mul(a2, a)]
        G = Poly.from_roots(F, roots)
        fail = verify_six_point_conditions(G, [1] * 6)
        if fail:
            raise ArithmeticError(f"quartic-field point set failed: {fail}")
        return G
    if F.p == 2 and F.d >= 5:
        a = gen
        roots = [F.zero, F.one]
        cur = a
        for _ in range(4):
            roots.append(cur)
            cur = F.mul(cur, a)
        G = Poly.from_roots(F, roots)
        fail = verify_six_point_conditions(G, [1] * 6)
        if fail:
            raise ArithmeticError(f"power point set failed: {fail}")
        return G
    return _generic_pattern_search(F, [1] * 6)


# ---------------------------------------------------------------------------
# six points and the anticanonical system

MONOMIALS_P2 = _monomials(3, 3)       # the 10 plane cubic monomials
MONOMIALS_P2_DEG9 = _monomials(3, 9)  # 55 degree-9 monomials


@dataclass
class SixPoints:
    """Six general points of P^2, as twisted-cubic orbits or explicitly."""

    field: object
    factors: list = None            # irreducible factors of G (orbit mode)
    points: list = None             # six rational points (explicit mode)
    G: Poly = None

    @classmethod
    def from_sextic(cls, G):
        F = G.field
        unit, facs = factor(G)
        factors = []
        for g, m in facs:
            factors.extend([g] * m)
        fail = verify_six_point_conditions(
            G, [g.degree() for g in factors])
        if fail:
            raise ValueError(f"sextic violates the six-point conditions: {fail}")
        factors.sort(key=lambda g: g.sort_key())
        return cls(field=F, factors=factors, G=G)

    @classmethod
    def from_points(cls, F, points):
        pts = [proj_point(F, p) for p in points]
        if len(set(pts)) != 6:
            raise ValueError("need six distinct points")
        for a, b, c in itertools.combinations(pts, 3):
            if collinear(F, a, b, c):
                raise ValueError("three of the points are collinear")
        if on_common_conic(F, pts):
            raise ValueError("the six points lie on a conic")
        return cls(field=F, points=pts)

    def pattern(self):
        if self.factors is not None:
            return GaloisPattern.from_degrees(
                [g.degree() for g in self.factors])
        return GaloisPattern.from_item(1)


def find_general_points(F, budget=200000):
    """Deterministic six general-position rational points in P^2(F_q)."""
    from .projective import enumerate_points
    pts = enumerate_points(F, 2)
    chosen = []

    def ok_with(p):
        for a, b in itertools.combinations(chosen, 2):
            if collinear(F, a, b, p):
                return False
        return True

    def extend(start):
        if len(chosen) == 6:
            return not on_common_conic(F, chosen)
        for i in range(start, len(pts)):
            p = pts[i]
            if ok_with(p):
                chosen.append(p)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise ConstructionExhausted(
            f"no six general rational points in P^2({F!r})")
    return list(chosen)


def cubics_through(six):
    """Canonical basis of the 4-dimensional space of plane cubics through
    the six points (conjugate orbits handled by reduction mod factors)."""
    F = six.field
    rows = []
    if six.points is not None:
        for x, y, z in six.points:
            row = []
            for (i, j, k) in MONOMIALS_P2:
                v = F.one
                for base, e in ((x, i), (y, j), (z, k)):
                    for _ in range(e):
                        v = F.mul(v, base)
                row.append(v)
            rows.append(row)
    else:
        for g in six.factors:
            d = g.degree()
            # c(1, t, t^3) mod g: each monomial contributes t^(j + 3k)
            cols = []
            for (i, j, k) in MONOMIALS_P2:
                e = j + 3 * k
                rem = Poly.x(F).pow_mod(e, g) if e else Poly.one(F)
                cols.append([rem[r] for r in range(d)])
            for r in range(d):
                rows.append([cols[c][r] for c in range(10)])
    if len(rows) != 6:
        raise ArithmeticError("six conditions expected")
    kern = linalg.kernel_basis(F, rows, 10)
    if len(kern) != 4:
        raise ArithmeticError(
            f"anticanonical system has dimension {len(kern)}, not 4")
    return kern


def _tern_mul(F, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            prev = out.get(key)
            v = F.mul(c1, c2)
            out[key] = v if prev is None else F.add(prev, v)
    return {e: c for e, c in out.items() if not F.is_zero(c)}


def anticanonical_image(F, basis):
    """The unique cubic relation among the four basis cubics: the image
    surface of the blow-up in P^3."""
    forms = []
    for vec in basis:
        forms.append({exp: c for exp, c in zip(MONOMIALS_P2, vec)
                      if not F.is_zero(c)})
    idx9 = {m: i for i, m in enumerate(MONOMIALS_P2_DEG9)}
    cols = []
    from .surface import MONOMIALS
    for exp in MONOMIALS:
        prod = {(0, 0, 0): F.one}
        for var, e in enumerate(exp):
            for _ in range(e):
                prod = _tern_mul(F, prod, forms[var])
        col = [F.zero] * len(MONOMIALS_P2_DEG9)
        for e, c in prod.items():
            col[idx9[e]] = c
        cols.append(col)
    rows = [[cols[c][r] for c in range(20)]
            for r in range(len(MONOMIALS_P2_DEG9))]
    kern = linalg.kernel_basis(F, rows, 20)
    if len(kern) == 0:
        raise ArithmeticError("no cubic relation among the basis curves")
    if len(kern) > 1:
        raise ArithmeticError("degenerate anticanonical image")
    return CubicForm(F, kern[0])


@dataclass
class ConstructionReport:
    pattern: GaloisPattern
    G: Poly
    six: SixPoints
    surface: CubicForm
    predicted_count: int
    predicted_graph: IntersectionGraph
    enumerated_count: int = None
    graphs_isomorphic: bool = None

    def to_json_dict(self):
        return {
            "pattern": list(self.pattern.degrees),
            "case": self.pattern.item,
            "G": repr(self.G) if self.G is not None else None,
            "points": None if self.six.points is None
            else [[self.six.field.format(v) for v in p]
                  for p in self.six.points],
            "surface": repr(self.surface),
            "predicted_count": self.predicted_count,
            "enumerated_count": self.enumerated_count,
            "graphs_isomorphic": self.graphs_isomorphic,
        }


def construct_surface(F, pattern, enumerate_lines=True):
    """Full pipeline: pattern -> G -> six points -> surface -> validation."""
    if isinstance(pattern, (list, tuple)):
        pattern = GaloisPattern.from_degrees(pattern)
    try:
        G = pattern_polynomial(pattern, F)
        six = SixPoints.from_sextic(G)
    except ConstructionExhausted:
        if pattern.item == 1 and F.kind == "finite":
            six = SixPoints.from_points(F, find_general_points(F))
            G = None
        else:
            raise
    basis = cubics_through(six)
    f = anticanonical_image(F, basis)
    if not is_smooth_fast(f):
        raise ArithmeticError("blow-up image is not smooth")
    count, graph = predicted_count(pattern)
    rep = ConstructionReport(pattern=pattern, G=G, six=six, surface=f,
                             predicted_count=count, predicted_graph=graph)
    if enumerate_lines and F.kind == "finite":
        ls = rational_lines(f)
        rep.enumerated_count = ls.count()
        from .graphs import intersection_graph
        got = intersection_graph(ls.lines())
        rep.graphs_isomorphic = graph_isomorphic(got, graph) is not None
    return rep


def constructible_items(F):
    """Which of the eleven patterns admit a six-point configuration over F."""
    out = []
    for item in range(1, 12):
        pattern = GaloisPattern.from_item(item)
        try:
            pattern_polynomial(pattern, F)
            out.append(item)
        except ConstructionExhausted:
            if item == 1 and F.kind == "finite":
                try:
                    find_general_points(F)
                    out.append(item)
                except ConstructionExhausted:
                    pass
    return out
