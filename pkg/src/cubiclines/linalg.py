"""Small exact linear algebra over a field context (dense lists)."""

from __future__ import annotations


def rref(F, rows):
    """Reduced row-echelon form: returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if not F.is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][col]):
                c = rows[i][col]
                rows[i] = [F.sub(v, F.mul(c, w))
                           for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows if any(not F.is_zero(v) for v in row)]
    return rows, pivots


def rank(F, rows):
    return len(rref(F, rows)[0])


def det(F, rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    sign = F.one
    out = F.one
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not F.is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            return F.zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = F.neg(sign)
        p = rows[col][col]
        out = F.mul(out, p)
        inv = F.inv(p)
        for i in range(col + 1, n):
            if not F.is_zero(rows[i][col]):
                c = F.mul(rows[i][col], inv)
                rows[i] = [F.sub(v, F.mul(c, w))
                           for v, w in zip(rows[i], rows[col])]
    return F.mul(out, sign)


def kernel_basis(F, rows, ncols):
    """Canonical echelon basis of {x : rows @ x = 0}."""
    red, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [F.zero] * ncols
        vec[fc] = F.one
        for i, pc in enumerate(pivots):
            vec[pc] = F.neg(red[i][fc])
        basis.append(vec)
    return basis


def solve(F, rows, rhs):
    """One solution of rows @ x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(F, aug)
    ncols = len(rows[0]) if rows else 0
    for row in red:
        if all(F.is_zero(v) for v in row[:-1]) and not F.is_zero(row[-1]):
            return None
    x = [F.zero] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[i][-1]
    return x


def matvec(F, rows, v):
    out = []
    for row in rows:
        acc = F.zero
        for a, b in zip(row, v):
            if not (F.is_zero(a) or F.is_zero(b)):
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out
