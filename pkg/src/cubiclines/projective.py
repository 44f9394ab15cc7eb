"""Points and lines in P^2 and P^3 over exact fields.

Projective points are tuples of field elements scaled so the first
nonzero coordinate is 1 (one canonical representative per point).  A line
in P^3 is the row span of a 2x4 matrix kept in reduced row-echelon form,
so two lines are equal iff their matrices are equal, and the RREF matrix
doubles as a total enumeration order.
"""

from __future__ import annotations

import itertools

from . import linalg


class IdenticalLines(ValueError):
    """Raised where two supposedly distinct lines coincide."""


def proj_point(F, vec):
    """Canonical representative: first nonzero coordinate scaled to 1."""
    vec = [F.coerce(v) for v in vec]
    for v in vec:
        if not F.is_zero(v):
            inv = F.inv(v)
            return tuple(F.mul(inv, w) for w in vec)
    raise ValueError("zero vector is not a projective point")


def enumerate_points(F, dim):
    """All points of P^dim(F) in canonical order (leading-1 blocks)."""
    if F.order is None:
        raise ValueError("cannot enumerate points over an infinite field")
    els = sorted(F.elements(), key=F.sort_key)
    pts = []
    for lead in range(dim + 1):
        head = [F.zero] * lead + [F.one]
        tail_len = dim - lead
        for tail in itertools.product(els, repeat=tail_len):
            pts.append(tuple(head) + tail)
    return pts


class LineP3:
    """A line in P^3 as the row span of a rank-2 matrix in RREF."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        mat = [[field.coerce(v) for v in row] for row in rows]
        red, pivots = linalg.rref(field, mat)
        if len(red) != 2:
            raise ValueError("line requires a rank-2 span")
        self.field = field
        self.rows = (tuple(red[0]), tuple(red[1]))

    @classmethod
    def through(cls, F, p, q):
        return cls(F, [list(p), list(q)])

    def __eq__(self, other):
        return (isinstance(other, LineP3) and self.field is other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.field), self.rows))

    def sort_key(self):
        F = self.field
        return tuple(F.sort_key(v) for row in self.rows for v in row)

    def __repr__(self):
        return format_line(self)

    def basis_points(self):
        return proj_point(self.field, self.rows[0]), \
            proj_point(self.field, self.rows[1])

    def points(self):
        """The q+1 rational points of the line (finite fields)."""
        F = self.field
        a, b = self.rows
        pts = [proj_point(F, b)]
        for t in sorted(F.elements(), key=F.sort_key):
            vec = [F.add(x, F.mul(t, y)) for x, y in zip(a, b)]
            pts.append(proj_point(F, vec))
        return pts

    def contains_point(self, pt):
        F = self.field
        stacked = [list(self.rows[0]), list(self.rows[1]), list(pt)]
        red, _ = linalg.rref(F, stacked)
        return len(red) == 2

    def map_field(self, fn, new_field):
        return LineP3(new_field, [[fn(v) for v in row] for row in self.rows])

    def frobenius(self):
        F = self.field
        return LineP3(F, [[F.frobenius(v) for v in row] for row in self.rows])

    def plucker(self):
        """Derived Plücker coordinates (p01,p02,p03,p12,p13,p23)."""
        F = self.field
        a, b = self.rows
        out = []
        for i, j in itertools.combinations(range(4), 2):
            out.append(F.sub(F.mul(a[i], b[j]), F.mul(a[j], b[i])))
        return tuple(out)


def lines_meet(L1, L2):
    """True iff distinct lines L1, L2 intersect (raises on identical)."""
    if L1 == L2:
        raise IdenticalLines("lines are identical")
    F = L1.field
    stacked = [list(L1.rows[0]), list(L1.rows[1]),
               list(L2.rows[0]), list(L2.rows[1])]
    return F.is_zero(linalg.det(F, stacked))


def meet_point(L1, L2):
    """The common point of two meeting lines."""
    if L1 == L2:
        raise IdenticalLines("lines are identical")
    F = L1.field
    # alpha*a1 + beta*a2 = gamma*b1 + delta*b2
    cols = []
    for k in range(4):
        cols.append([L1.rows[0][k], L1.rows[1][k],
                     F.neg(L2.rows[0][k]), F.neg(L2.rows[1][k])])
    ker = linalg.kernel_basis(F, cols, 4)
    if not ker:
        raise ValueError("lines are skew")
    alpha, beta = ker[0][0], ker[0][1]
    vec = [F.add(F.mul(alpha, L1.rows[0][k]), F.mul(beta, L1.rows[1][k]))
           for k in range(4)]
    return proj_point(F, vec)


def enumerate_lines_p3(F, max_q=64):
    """All lines of P^3(F_q), each exactly once, ordered by RREF matrix.

    Count is (q^2+1)(q^2+q+1).
    """
    if F.order is None:
        raise ValueError("cannot enumerate lines over an infinite field")
    if F.order > max_q:
        raise ValueError(f"line enumeration budget exceeded (q={F.order})")
    els = sorted(F.elements(), key=F.sort_key)
    lines = []
    for i, j in itertools.combinations(range(4), 2):
        free0 = [c for c in range(4) if c > i and c != j]
        free1 = [c for c in range(4) if c > j]
        for vals0 in itertools.product(els, repeat=len(free0)):
            row0 = [F.zero] * 4
            row0[i] = F.one
            for c, v in zip(free0, vals0):
                row0[c] = v
            for vals1 in itertools.product(els, repeat=len(free1)):
                row1 = [F.zero] * 4
                row1[j] = F.one
                for c, v in zip(free1, vals1):
                    row1[c] = v
                lines.append(LineP3(F, [row0, row1]))
    lines.sort(key=LineP3.sort_key)
    return lines


def line_count_p3(q):
    return (q * q + 1) * (q * q + q + 1)


def collinear(F, p, q, r):
    """Whether three pairwise distinct points of P^2 lie on a line."""
    pts = [proj_point(F, p), proj_point(F, q), proj_point(F, r)]
    if len(set(pts)) != 3:
        raise ValueError("points must be pairwise distinct")
    return F.is_zero(linalg.det(F, pts))


def on_common_conic(F, points):
    """Whether six pairwise distinct points of P^2 lie on a conic."""
    pts = [proj_point(F, p) for p in points]
    if len(set(pts)) != 6:
        raise ValueError("points must be pairwise distinct")
    rows = []
    for x, y, z in pts:
        rows.append([F.mul(x, x), F.mul(x, y), F.mul(y, y),
                     F.mul(x, z), F.mul(y, z), F.mul(z, z)])
    return F.is_zero(linalg.det(F, rows))


def format_line(line):
    F = line.field
    def fmt(v):
        return F.format(v) if hasattr(F, "format") else str(v)
    a, b = line.rows
    return "[[" + ",".join(fmt(v) for v in a) + "],[" + \
        ",".join(fmt(v) for v in b) + "]]"


def parse_line(F, text):
    t = text.replace(" ", "")
    if not (t.startswith("[[") and t.endswith("]]")):
        raise ValueError(f"cannot parse line {text!r}")
    body = t[2:-2]
    rows = body.split("],[")
    if len(rows) != 2:
        raise ValueError(f"cannot parse line {text!r}")
    from .poly import _parse_scalar
    mat = [[_parse_scalar(F, v) for v in row.split(",")] for row in rows]
    return LineP3(F, mat)
