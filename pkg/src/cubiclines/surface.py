"""Cubic surfaces in P^3: smoothness, line containment, line enumeration.

A CubicForm stores 20 coefficients indexed by exponent tuples
(i,j,k,l), i+j+k+l = 3, in descending lexicographic order.  Smoothness is
decided by Buchberger's algorithm on the ideal (f, df/dx0..df/dx3) in
degrevlex order (projective emptiness of the singular locus); the hot
paths use an equivalent Macaulay-matrix rank criterion.

Rational lines are found by scanning the points of one plane section:
every line of the surface meets the plane, and at a surface point P the
lines through P are the common roots of a binary quadratic and a binary
cubic obtained by restricting f to the tangent plane.  The full 27-line
configuration over the splitting extension is computed by the same first
line search followed by tritangent-pencil recursion: sweeping the pencil
of planes through a known line, splitting the residual conic in each
degenerate member, and closing under the 10-neighbour relation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import groebner, linalg
from .fields import GF, QQ, embedding
from .poly import Poly, factor, quadratic_roots, roots
from .projective import (IdenticalLines, LineP3, enumerate_points,
                         lines_meet, meet_point, proj_point)


def _monomials(nvars, degree):
    out = []
    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)
    rec([], degree, nvars)
    out.sort(reverse=True)
    return out


MONOMIALS = _monomials(4, 3)                  # the 20 cubic monomials
MONOMIAL_INDEX = {m: i for i, m in enumerate(MONOMIALS)}
VALID_SMOOTH_LINE_COUNTS = frozenset({0, 1, 2, 3, 5, 7, 9, 15, 27})


class SingularSurfaceError(ValueError):
    """Raised when an operation restricted to smooth surfaces is refused."""


class ExtensionBudgetError(RuntimeError):
    """Raised when a line solve would exceed the extension-degree budget."""


class CubicForm:
    """A nonzero homogeneous cubic in x0..x3 over a field context."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if len(coeffs) != 20:
            raise ValueError("a cubic form has 20 coefficients")
        if all(field.is_zero(c) for c in coeffs):
            raise ValueError("zero form is not a cubic surface")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, field, d):
        coeffs = [field.zero] * 20
        for exp, c in d.items():
            coeffs[MONOMIAL_INDEX[tuple(exp)]] = field.coerce(c)
        return cls(field, coeffs)

    def coeff(self, exp):
        return self.coeffs[MONOMIAL_INDEX[tuple(exp)]]

    def __eq__(self, other):
        return (isinstance(other, CubicForm) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return format_surface(self)

    def evaluate(self, pt):
        F = self.field
        pt = [F.coerce(v) for v in pt]
        acc = F.zero
        for exp, c in zip(MONOMIALS, self.coeffs):
            if F.is_zero(c):
                continue
            term = c
            for v, e in zip(pt, exp):
                for _ in range(e):
                    term = F.mul(term, v)
            acc = F.add(acc, term)
        return acc

    def partial(self, var):
        """Coefficient dict of df/dx_var (a quadric)."""
        F = self.field
        out = {}
        for exp, c in zip(MONOMIALS, self.coeffs):
            if F.is_zero(c) or exp[var] == 0:
                continue
            new = list(exp)
            mult = new[var]
            new[var] -= 1
            key = tuple(new)
            add = F.mul(F.from_int(mult), c)
            out[key] = F.add(out.get(key, F.zero), add)
        return {e: c for e, c in out.items() if not F.is_zero(c)}

    def gradient_at(self, pt):
        F = self.field
        pt = [F.coerce(v) for v in pt]
        grads = []
        for var in range(4):
            acc = F.zero
            for exp, c in self.partial(var).items():
                term = c
                for v, e in zip(pt, exp):
                    for _ in range(e):
                        term = F.mul(term, v)
                acc = F.add(acc, term)
            grads.append(acc)
        return grads

    def as_mpoly(self):
        F = self.field
        return {exp: c for exp, c in zip(MONOMIALS, self.coeffs)
                if not F.is_zero(c)}

    def substitute(self, matrix):
        """Coefficient dict of f(M y) where x_r = sum_s M[r][s] y_s."""
        F = self.field
        nvars = len(matrix[0])
        zero_exp = (0,) * nvars
        total = {}
        for exp, c in zip(MONOMIALS, self.coeffs):
            if F.is_zero(c):
                continue
            acc = {zero_exp: c}
            for var in range(4):
                row = matrix[var]
                for _ in range(exp[var]):
                    new = {}
                    for e, v in acc.items():
                        for s in range(nvars):
                            if F.is_zero(row[s]):
                                continue
                            key = tuple(x + (1 if i == s else 0)
                                        for i, x in enumerate(e))
                            prod = F.mul(v, row[s])
                            prev = new.get(key)
                            new[key] = prod if prev is None else F.add(prev, prod)
                    acc = new
            for e, v in acc.items():
                prev = total.get(e)
                total[e] = v if prev is None else F.add(prev, v)
        return {e: v for e, v in total.items() if not F.is_zero(v)}

    def transform(self, matrix):
        """The cubic form f(M y) for an invertible 4x4 matrix M."""
        return CubicForm.from_dict(self.field, self.substitute(matrix))

    def map_field(self, fn, new_field):
        return CubicForm(new_field, [fn(c) for c in self.coeffs])


# ---------------------------------------------------------------------------
# smoothness


def is_smooth(f):
    """Buchberger route: the singular locus (f, partials) is empty in P^3."""
    F = f.field
    if F.kind not in ("rationals", "finite"):
        raise TypeError("smoothness is decided over Q or a finite field")
    gens = [f.as_mpoly()] + [f.partial(v) for v in range(4)]
    gens = [g for g in gens if g]
    basis = groebner.groebner_basis(F, gens)
    if not basis:
        return False
    return groebner.projective_locus_empty(F, basis)


def _rank_mod_p(mat, p):
    M = np.array(mat, dtype=np.int64) % p
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows or r == ncols:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = M[r] * inv % p
        below = r + 1 + np.nonzero(M[r + 1:, c])[0]
        if below.size:
            M[below] = (M[below] - M[below, c:c + 1] * M[r]) % p
        r += 1
    return r


def _rank_gf2_bits(rows):
    """Rank of 0/1 rows given as bit-packed Python ints.

    Pivot rows are kept mutually reduced, so one reduction pass suffices.
    """
    pivots = {}
    for v in rows:
        for pos, pv in pivots.items():
            if v >> pos & 1:
                v ^= pv
        if v:
            pos = (v & -v).bit_length() - 1
            for p2, pv in pivots.items():
                if pv >> pos & 1:
                    pivots[p2] = pv ^ v
            pivots[pos] = v
    return len(pivots)


def _macaulay_rows(f, degree):
    """Rows spanning the degree-`degree` piece of (partials [+ f])."""
    F = f.field
    gens = [f.partial(v) for v in range(4)]
    if F.char == 3 or F.char == 0:
        gens.append(f.as_mpoly())
    basis = _monomials(4, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if not g:
            continue
        gdeg = sum(next(iter(g)))
        for m in _monomials(4, degree - gdeg):
            row = [F.zero] * len(basis)
            for e, c in g.items():
                key = tuple(a + b for a, b in zip(e, m))
                row[index[key]] = c
            rows.append(row)
    return rows, len(basis)


def is_smooth_rank(f):
    """Macaulay-matrix rank criterion over a finite field (exact)."""
    F = f.field
    if F.kind != "finite":
        raise TypeError("rank criterion implemented over finite fields")
    degree = 6 if F.char == 3 else 5
    rows, ncols = _macaulay_rows(f, degree)
    p, d = F.p, F.d
    if p == 2:
        # bit-packed rows over F_2 via the regular representation
        mul_cache = {}

        def val_bits(v):
            out = mul_cache.get(v)
            if out is None:
                out = [F.mul(v, 1 << j) if d > 1 else v for j in range(d)]
                mul_cache[v] = out
            return out

        bit_rows = []
        for row in rows:
            packed = [0] * d
            for ci, v in enumerate(row):
                if v:
                    vb = val_bits(v)
                    shift = ci * d
                    for j in range(d):
                        packed[j] |= vb[j] << shift
            bit_rows.extend(packed)
        return _rank_gf2_bits(bit_rows) == ncols * d
    if d == 1:
        mat = [[int(v) for v in row] for row in rows]
        return _rank_mod_p(np.array(mat, dtype=np.int64), p) == ncols
    # blow each GF(p^d) entry up to the d x d regular representation
    gen_cols = {}

    def rep(a):
        m = gen_cols.get(a)
        if m is None:
            cols = []
            for j in range(d):
                e = F.from_coeffs([1 if i == j else 0 for i in range(d)])
                cols.append(F.coeffs(F.mul(a, e)))
            m = [[cols[j][i] for j in range(d)] for i in range(d)]
            gen_cols[a] = m
        return m

    big = np.zeros((len(rows) * d, ncols * d), dtype=np.int64)
    for ri, row in enumerate(rows):
        for ci, v in enumerate(row):
            if F.is_zero(v):
                continue
            big[ri * d:(ri + 1) * d, ci * d:(ci + 1) * d] = rep(v)
    return _rank_mod_p(big, p) == ncols * d


_GOOD_PRIMES = (5, 7, 11, 13, 17, 19, 23)


def is_smooth_fast(f):
    """Exact smoothness with cheaper routes; agrees with is_smooth."""
    F = f.field
    if F.kind == "finite":
        return is_smooth_rank(f)
    # over Q: a smooth reduction mod p certifies smoothness
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    for p in _GOOD_PRIMES:
        red = [v % p for v in ints]
        if all(v == 0 for v in red):
            continue
        if is_smooth_rank(CubicForm(GF(p), red)):
            return True
    return is_smooth(f)


# ---------------------------------------------------------------------------
# containment


def line_in_surface(f, line):
    """Algebraic containment: f(p + t q) vanishes identically."""
    F = f.field
    a, b = line.rows
    mat = [[a[r], b[r]] for r in range(4)]
    restricted = f.substitute(mat)
    return not restricted


def line_in_surface_setwise(f, line):
    """Set-wise containment: every rational point of the line lies on f."""
    F = f.field
    if F.order is None:
        raise TypeError("set-wise containment is a finite-field notion")
    return all(F.is_zero(f.evaluate(p)) for p in line.points())


def surface_points(f):
    """All rational points of V(f) in canonical order."""
    F = f.field
    return [p for p in enumerate_points(F, 3) if F.is_zero(f.evaluate(p))]


# ---------------------------------------------------------------------------
# lines through a point, plane-section scans


def lines_through_point(f, pt):
    """All lines through the surface point pt contained in V(f)."""
    F = f.field
    pt = proj_point(F, pt)
    grad = f.gradient_at(pt)
    if all(F.is_zero(g) for g in grad):
        raise SingularSurfaceError(f"singular point {pt}")
    kern = linalg.kernel_basis(F, [grad], 4)
    span = [list(pt)]
    extras = []
    for vec in kern:
        cand = span + [vec]
        if len(linalg.rref(F, cand)[0]) == len(cand):
            span.append(vec)
            extras.append(vec)
        if len(extras) == 2:
            break
    if len(extras) != 2:
        raise ArithmeticError("tangent space degenerated")
    U, V = extras
    mat = [[U[r], V[r], pt[r]] for r in range(4)]
    T = f.substitute(mat)
    for bad in ((0, 0, 3), (1, 0, 2), (0, 1, 2)):
        if bad in T:
            raise ArithmeticError("tangent restriction inconsistent")
    q2 = Poly(F, [T.get((0, 2, 1), F.zero), T.get((1, 1, 1), F.zero),
                  T.get((2, 0, 1), F.zero)])
    c3 = Poly(F, [T.get((0, 3, 0), F.zero), T.get((1, 2, 0), F.zero),
                  T.get((2, 1, 0), F.zero), T.get((3, 0, 0), F.zero)])
    if q2.is_zero() and c3.is_zero():
        raise SingularSurfaceError("tangent plane lies in the surface")
    dirs = []
    if q2.is_zero():
        g = c3
    elif c3.is_zero():
        g = q2
    else:
        g = q2.gcd(c3)
    if g.degree() >= 1:
        for r in roots(g):
            dirs.append((r, F.one))
    # direction (1:0), i.e. the root at infinity of both binary forms
    if F.is_zero(q2[2]) and F.is_zero(c3[3]):
        dirs.append((F.one, F.zero))
    out = []
    for a, b in dirs:
        d_vec = [F.add(F.mul(a, U[r]), F.mul(b, V[r])) for r in range(4)]
        line = LineP3.through(F, pt, d_vec)
        out.append(line)
    return out


def _plane_section_points(f, plane_basis):
    """Points of {f = 0} on the plane spanned by three basis vectors,
    plus any full pencil lines contained in the section."""
    F = f.field
    mat = [[plane_basis[0][r], plane_basis[1][r], plane_basis[2][r]]
           for r in range(4)]
    tern = f.substitute(mat)

    def to_p3(u, v, w):
        return proj_point(F, [
            F.add(F.add(F.mul(u, plane_basis[0][r]), F.mul(v, plane_basis[1][r])),
                  F.mul(w, plane_basis[2][r])) for r in range(4)])

    def w_poly(u, v):
        coeffs = [F.zero] * 4
        for (i, j, k), c in tern.items():
            term = c
            for _ in range(i):
                term = F.mul(term, u)
            for _ in range(j):
                term = F.mul(term, v)
            coeffs[k] = F.add(coeffs[k], term)
        return Poly(F, coeffs)

    pts = []
    whole_lines = []
    els = sorted(F.elements(), key=F.sort_key)
    for v in els:
        pw = w_poly(F.one, v)
        if pw.is_zero():
            # the whole pencil line lies in the section: keep it, and keep
            # its points too -- other lines of the surface cross it there
            whole_lines.append(LineP3.through(F, to_p3(F.one, v, F.zero),
                                              to_p3(F.one, v, F.one)))
            pts.extend(to_p3(F.one, v, w) for w in els)
            continue
        for w in roots(pw):
            pts.append(to_p3(F.one, v, w))
    pw = w_poly(F.zero, F.one)
    if pw.is_zero():
        whole_lines.append(LineP3.through(F, to_p3(F.zero, F.one, F.zero),
                                          to_p3(F.zero, F.one, F.one)))
        pts.extend(to_p3(F.zero, F.one, w) for w in els)
    else:
        for w in roots(pw):
            pts.append(to_p3(F.zero, F.one, w))
    corner = to_p3(F.zero, F.zero, F.one)
    if F.is_zero(f.evaluate(corner)):
        pts.append(corner)
    seen = set()
    unique = []
    for p in pts:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    return unique, whole_lines


_STD_PLANE = None


def _standard_plane(F):
    one, zero = F.one, F.zero
    return [(one, zero, zero, zero), (zero, one, zero, zero),
            (zero, zero, one, zero)]


@dataclass
class LineSet:
    """Lines on a surface, each tagged with its minimal definition degree."""

    surface: CubicForm
    base_field: object
    top_field: object
    entries: list = dc_field(default_factory=list)   # [(LineP3, min degree)]
    complete: bool = False

    def __post_init__(self):
        seen = set()
        for line, _ in self.entries:
            if line in seen:
                raise ValueError("duplicate line in LineSet")
            seen.add(line)

    def lines(self):
        return [line for line, _ in self.entries]

    def count(self):
        return len(self.entries)

    def rational_sublist(self):
        return [line for line, deg in self.entries if deg == 1]


def rational_lines(f, check_smooth=True):
    """All lines of P^3(F_q) algebraically contained in the smooth surface f."""
    F = f.field
    if F.kind != "finite":
        raise TypeError("rational_lines enumerates over a finite field")
    if check_smooth and not is_smooth_fast(f):
        raise SingularSurfaceError(
            "rational_lines refuses singular surfaces")
    pts, whole_lines = _plane_section_points(f, _standard_plane(F))
    found = set(whole_lines)
    for p in pts:
        found.update(lines_through_point(f, p))
    lines = sorted(found, key=LineP3.sort_key)
    for line in lines:
        assert line_in_surface(f, line)
    if len(lines) not in VALID_SMOOTH_LINE_COUNTS:
        raise ArithmeticError(
            f"smooth surface with {len(lines)} rational lines "
            "contradicts the classification")
    return LineSet(surface=f, base_field=F, top_field=F,
                   entries=[(line, 1) for line in lines], complete=False)


# ---------------------------------------------------------------------------
# residual line


def residual_line(f, l1, l2):
    """Third component of the plane section through two meeting lines."""
    F = f.field
    if not (line_in_surface(f, l1) and line_in_surface(f, l2)):
        raise ValueError("both lines must lie in the surface")
    p = meet_point(l1, l2)   # raises on skew or identical input
    def other_point(line):
        for row in line.rows:
            cand = [list(p), list(row)]
            if len(linalg.rref(F, cand)[0]) == 2:
                return row
        raise ArithmeticError("degenerate line")
    b = other_point(l1)
    c = other_point(l2)
    mat = [[p[r], b[r], c[r]] for r in range(4)]
    T = f.substitute(mat)
    lin = {
        "a": T.get((1, 1, 1), F.zero),
        "b": T.get((0, 2, 1), F.zero),
        "c": T.get((0, 1, 2), F.zero),
    }
    expected = {(1, 1, 1), (0, 2, 1), (0, 1, 2)}
    if any(e not in expected for e in T):
        raise ArithmeticError("plane section did not factor as expected")
    kern = linalg.kernel_basis(F, [[lin["a"], lin["b"], lin["c"]]], 3)
    if len(kern) != 2:
        raise ArithmeticError("residual form degenerated")
    def to_p3(vec):
        return [F.add(F.add(F.mul(vec[0], p[r]), F.mul(vec[1], b[r])),
                      F.mul(vec[2], c[r])) for r in range(4)]
    out = LineP3(F, [to_p3(kern[0]), to_p3(kern[1])])
    assert line_in_surface(f, out)
    return out


# ---------------------------------------------------------------------------
# the 27 lines over the splitting extension


def extend_surface(f, m):
    """(K, f over K) for the degree-m extension of f's finite base field."""
    F = f.field
    K = GF(F.p, F.d * m)
    emb = embedding(F, K)
    return K, f.map_field(emb, K)


def first_line(f, max_degree=12, point_budget=1 << 19):
    """A line on f over the smallest extension, by plane-section scans."""
    F = f.field
    for m in range(1, max_degree + 1):
        if F.order ** m > (1 << 24):
            raise ExtensionBudgetError(
                f"first-line search passed the field-order cap at degree {m}")
        if F.order ** m > point_budget:
            raise ExtensionBudgetError(
                f"first-line scan budget exceeded at extension degree {m}")
        K, fK = extend_surface(f, m)
        pts, whole_lines = _plane_section_points(fK, _standard_plane(K))
        if whole_lines:
            return whole_lines[0], m
        for p in pts:
            lines = lines_through_point(fK, p)
            if lines:
                return lines[0], m
    raise ExtensionBudgetError(
        f"no line found up to extension degree {max_degree}")


def _complete_basis(F, a, b):
    """Two canonical vectors completing span(a, b) to all of k^4."""
    span = [list(a), list(b)]
    out = []
    for i in range(4):
        e = [F.one if j == i else F.zero for j in range(4)]
        cand = span + [e]
        if len(linalg.rref(F, cand)[0]) == len(cand):
            span.append(e)
            out.append(e)
        if len(out) == 2:
            return out
    raise ArithmeticError("could not complete basis")


def _pencil_discriminant(f, line):
    """The binary quintic (as poly in t, plus the t=infinity plane data)
    whose roots mark the tritangent planes of the pencil through `line`."""
    F = f.field
    a, b = line.rows
    c, d = _complete_basis(F, a, b)
    # restrict to (u, v, w, t) |-> u a + v b + w(c + t d): coefficients are
    # polynomials in t of degree = w-exponent
    Rt = lambda coeffs: Poly(F, coeffs)
    # build ternary cubic with t-polynomial coefficients by substituting
    # rows x_r = u a_r + v b_r + w c_r + (w t) d_r; track w and t together
    # via a 4-variable substitution (u, v, w, z) with z = w t.
    mat = [[a[r], b[r], c[r], d[r]] for r in range(4)]
    quart = f.substitute(mat)   # exponents (u, v, w, z)
    tern = {}
    for (i, j, k, l), coeff in quart.items():
        key = (i, j, k + l)      # w-degree, with t-degree l
        cur = tern.setdefault(key, {})
        cur[l] = F.add(cur.get(l, F.zero), coeff)
    def tpoly(key):
        d_ = tern.get(key, {})
        if not d_:
            return Poly.zero(F)
        deg = max(d_)
        return Poly(F, [d_.get(i, F.zero) for i in range(deg + 1)])
    for bad in ((3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0)):
        if tern.get(bad):
            raise ValueError("line is not contained in the surface")
    conic = {
        "a": tpoly((2, 0, 1)), "b": tpoly((0, 2, 1)), "c": tpoly((0, 0, 3)),
        "d": tpoly((1, 1, 1)), "e": tpoly((1, 0, 2)), "f": tpoly((0, 1, 2)),
    }
    four = Poly(F, [F.from_int(4)])
    disc = (four * conic["a"] * conic["b"] * conic["c"]
            + conic["d"] * conic["e"] * conic["f"]
            - conic["a"] * conic["f"] * conic["f"]
            - conic["b"] * conic["e"] * conic["e"]
            - conic["c"] * conic["d"] * conic["d"])
    return conic, disc, (a, b, c, d)


def _conic_at(F, conic, t):
    return {k: p.evaluate(t) for k, p in conic.items()}


def _conic_at_infinity(f, line):
    """Residual conic of the plane span(a, b, d) (the pencil's t = inf)."""
    F = f.field
    a, b = line.rows
    c, d = _complete_basis(F, a, b)
    mat = [[a[r], b[r], d[r]] for r in range(4)]
    tern = f.substitute(mat)
    return {
        "a": tern.get((2, 0, 1), F.zero), "b": tern.get((0, 2, 1), F.zero),
        "c": tern.get((0, 0, 3), F.zero), "d": tern.get((1, 1, 1), F.zero),
        "e": tern.get((1, 0, 2), F.zero), "f": tern.get((0, 1, 2), F.zero),
    }, (a, b, d)


def _conic_discriminant(F, q):
    four = F.from_int(4)
    return F.sub(
        F.add(F.mul(four, F.mul(q["a"], F.mul(q["b"], q["c"]))),
              F.mul(q["d"], F.mul(q["e"], q["f"]))),
        F.add(F.add(F.mul(q["a"], F.mul(q["f"], q["f"])),
                    F.mul(q["b"], F.mul(q["e"], q["e"]))),
              F.mul(q["c"], F.mul(q["d"], q["d"]))))


def _split_conic(F, q, basis3):
    """Split a rank-2 ternary conic into its two lines (in P^3 coords).

    Returns ([LineP3, LineP3], needed_degree) -- needed_degree 2 when the
    two lines are conjugate over a quadratic extension.
    """
    A, B, C = basis3

    def to_p3(vec):
        return [F.add(F.add(F.mul(vec[0], A[r]), F.mul(vec[1], B[r])),
                      F.mul(vec[2], C[r])) for r in range(4)]

    if F.char == 2:
        s = (q["f"], q["e"], q["d"])
        if all(F.is_zero(v) for v in s):
            raise ArithmeticError("double-line section on a smooth surface")
    else:
        two = F.from_int(2)
        rows = [[F.mul(two, q["a"]), q["d"], q["e"]],
                [q["d"], F.mul(two, q["b"]), q["f"]],
                [q["e"], q["f"], F.mul(two, q["c"])]]
        kern = linalg.kernel_basis(F, rows, 3)
        if len(kern) != 1:
            raise ArithmeticError("conic does not have rank 2")
        s = tuple(kern[0])

    def conic_eval(u, v, w):
        return _eval_conic(F, q, u, v, w)

    if not F.is_zero(conic_eval(*s)):
        raise ArithmeticError("singular point not on conic")
    # restrict the conic to a coordinate line not through s
    for miss in range(3):
        if not F.is_zero(s[miss]):
            break
    others = [i for i in range(3) if i != miss]

    def unit(i):
        return tuple(F.one if j == i else F.zero for j in range(3))

    e1, e2 = unit(others[0]), unit(others[1])
    # binary quadratic alpha u^2 + beta uv + gamma v^2 on e1, e2
    alpha = conic_eval(*e1)
    gamma = conic_eval(*e2)
    both = conic_eval(*(F.add(x, y) for x, y in zip(e1, e2)))
    beta = F.sub(F.sub(both, alpha), gamma)
    if F.is_zero(alpha) and F.is_zero(gamma) and F.is_zero(beta):
        raise ArithmeticError("conic restriction vanished")
    pts2 = []
    if F.is_zero(alpha):
        pts2.append((F.one, F.zero))
        if not F.is_zero(beta):
            pts2.append(proj2 := (F.neg(F.div(gamma, beta)), F.one))
    else:
        rs = quadratic_roots(F, alpha, beta, gamma)
        if not rs:
            return None, 2
        for r in rs:
            pts2.append((r, F.one))
    if len(pts2) == 1:
        pts2 = pts2 * 2
    lines = []
    for u, v in pts2[:2]:
        pvec = tuple(F.add(F.mul(u, a_), F.mul(v, b_))
                     for a_, b_ in zip(e1, e2))
        lines.append(LineP3(F, [to_p3(s), to_p3(pvec)]))
    return lines, 1


def _eval_conic(F, q, u, v, w):
    acc = F.zero
    for key, uu, vv in (("a", u, u), ("b", v, v), ("c", w, w),
                        ("d", u, v), ("e", u, w), ("f", v, w)):
        acc = F.add(acc, F.mul(q[key], F.mul(uu, vv)))
    return acc


def neighbours_of_line(f, line):
    """(lines meeting `line` inside V(f), needed extension degree).

    needed == 1 when everything split over the current field; otherwise
    the lcm of the extension degrees that would be required.
    """
    F = f.field
    conic, disc, (a, b, c, d) = _pencil_discriminant(f, line)
    needed = 1
    out = []
    if disc.is_zero():
        raise ArithmeticError("pencil discriminant vanished identically")
    _, facs = factor(disc)
    ts = []
    for g, _mult in facs:
        if g.degree() == 1:
            ts.append(F.neg(g[0]))
        else:
            needed = needed * g.degree() // math.gcd(needed, g.degree())
    for t in ts:
        qv = _conic_at(F, conic, t)
        basis3 = (a, b, [F.add(cc, F.mul(t, dd)) for cc, dd in zip(c, d)])
        pair, extra = _split_conic(F, qv, basis3)
        if pair is None:
            needed = needed * extra // math.gcd(needed, extra)
            continue
        out.extend(pair)
    if disc.degree() < 5:
        # the plane at t = infinity is tritangent
        qinf, basis3 = _conic_at_infinity(f, line)
        if not F.is_zero(_conic_discriminant(F, qinf)):
            raise ArithmeticError("degree drop without tritangent at infinity")
        pair, extra = _split_conic(F, qinf, basis3)
        if pair is None:
            needed = needed * extra // math.gcd(needed, extra)
        else:
            out.extend(pair)
    return out, needed


def all_27_lines(f, max_degree=12):
    """The 27 lines over the minimal splitting extension, tagged with
    their minimal fields of definition."""
    F = f.field
    if F.kind != "finite":
        raise TypeError("the 27-line solver runs over finite fields")
    if not is_smooth_fast(f):
        raise SingularSurfaceError("27-line solve refuses singular surfaces")
    line0, m = first_line(f, max_degree=max_degree)
    while True:
        if m > max_degree:
            raise ExtensionBudgetError(
                f"splitting degree {m} exceeds the budget {max_degree}")
        K, fK = extend_surface(f, m)
        emb = embedding(GF(F.p, F.d * _line_level(line0, F)), K) \
            if False else None
        seed = line0.map_field(embedding(line0.field, K), K) \
            if line0.field is not K else line0
        lines = {seed}
        queue = [seed]
        needed_total = 1
        while queue:
            cur = queue.pop()
            nbrs, needed = neighbours_of_line(fK, cur)
            if needed > 1:
                needed_total = needed_total * needed // math.gcd(
                    needed_total, needed)
            for nb in nbrs:
                if nb not in lines:
                    lines.add(nb)
                    queue.append(nb)
        if needed_total == 1:
            break
        m *= needed_total
    if len(lines) != 27:
        raise ArithmeticError(f"line closure found {len(lines)} lines")
    ordered = sorted(lines, key=LineP3.sort_key)
    perm = frobenius_permutation(ordered, F)
    degs = _orbit_lengths(perm)
    entries = [(line, degs[i]) for i, line in enumerate(ordered)]
    return LineSet(surface=f, base_field=F, top_field=K,
                   entries=entries, complete=True)


def _line_level(line, base):
    return line.field.d // base.d


def frobenius_permutation(lines, base_field):
    """sigma with sigma(i) = index of the q-power Frobenius image."""
    if not lines:
        return []
    K = lines[0].field
    e = base_field.d
    index = {line: i for i, line in enumerate(lines)}
    perm = []
    for line in lines:
        img = LineP3(K, [[K.frobenius(v, e) for v in row]
                         for row in line.rows])
        perm.append(index[img])
    return perm


def _orbit_lengths(perm):
    n = len(perm)
    seen = [False] * n
    lengths = [0] * n
    for i in range(n):
        if seen[i]:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        for k in orbit:
            seen[k] = True
            lengths[k] = len(orbit)
    return lengths


def frobenius_cycle_type(ls):
    """Cycle type (descending partition of 27) of Frobenius on the lines."""
    if not ls.complete or ls.count() != 27:
        raise ValueError("cycle type needs the complete 27-line set")
    perm = frobenius_permutation(ls.lines(), ls.base_field)
    lengths = _orbit_lengths(perm)
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = perm[i]
        seen[i] = True
        size = 1
        while j != i:
            seen[j] = True
            size += 1
            j = perm[j]
        out.append(size)
    out.sort(reverse=True)
    assert sum(out) == 27
    return tuple(out)


def rational_count_from_cycle_type(cycle_type, k=1):
    """Number of lines fixed by Frobenius^k, i.e. rational over F_{q^k}."""
    return sum(c for c in cycle_type for _ in (0,) if k % c == 0)


# ---------------------------------------------------------------------------
# text format


_VAR_NAMES = ["x0", "x1", "x2", "x3"]


def format_surface(f, star=True):
    F = f.field
    terms = []
    for exp, c in zip(MONOMIALS, f.coeffs):
        if F.is_zero(c):
            continue
        cs = F.format(c) if hasattr(F, "format") else str(c)
        mono = "*".join(
            (_VAR_NAMES[i] if e == 1 else f"{_VAR_NAMES[i]}^{e}")
            for i, e in enumerate(exp) if e)
        if cs == "1":
            terms.append(mono)
        elif cs == "-1" and F.char == 0:
            terms.append(f"-{mono}")
        else:
            body = f"({cs})" if ("+" in cs or "-" in cs[1:]) else cs
            terms.append(f"{body}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def parse_surface(F, text):
    """Parse an expression in x0..x3 (or x_0..x_3) into a CubicForm."""
    from .poly import _parse_scalar
    s = text.replace(" ", "").replace("_", "")
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
        sign = F.one
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = F.neg(sign)
            term = term[1:]
        exp = [0, 0, 0, 0]
        coeff = sign
        for part in term.split("*"):
            if not part:
                raise ValueError(f"bad term in {text!r}")
            base, _, pe = part.partition("^")
            e = int(pe) if pe else 1
            if base in _VAR_NAMES:
                exp[int(base[1])] += e
            else:
                val = _parse_scalar(F, base)
                coeff = F.mul(coeff, F.pow(val, e) if e != 1 else val)
        if sum(exp) != 3:
            raise ValueError(f"non-cubic term in {text!r}")
        key = tuple(exp)
        coeffs[key] = F.add(coeffs.get(key, F.zero), coeff)
    return CubicForm.from_dict(F, coeffs)
