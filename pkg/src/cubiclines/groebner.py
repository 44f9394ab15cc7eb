"""Buchberger's algorithm for small homogeneous ideals, degrevlex order.

Multivariate polynomials are dicts mapping exponent tuples to field
elements.  Only what the smoothness test needs: S-polynomials, full
normal-form reduction, a reduced basis, and the emptiness test for the
projective zero locus (the quotient is finite-dimensional iff every
variable has a pure power among the leading monomials).
"""

from __future__ import annotations


def _drl_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def mp_normalize(F, d):
    return {e: c for e, c in d.items() if not F.is_zero(c)}


def mp_add(F, a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = F.add(out.get(e, F.zero), c)
    return mp_normalize(F, out)


def mp_scale(F, a, c):
    return mp_normalize(F, {e: F.mul(c, v) for e, v in a.items()})


def mp_mul_term(F, a, exp, c):
    out = {}
    for e, v in a.items():
        key = tuple(x + y for x, y in zip(e, exp))
        out[key] = F.mul(v, c)
    return mp_normalize(F, out)


def mp_mul(F, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            prev = out.get(key)
            out[key] = F.mul(c1, c2) if prev is None else \
                F.add(prev, F.mul(c1, c2))
    return mp_normalize(F, out)


def leading_term(poly):
    exp = max(poly, key=_drl_key)
    return exp, poly[exp]


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def normal_form(F, poly, basis):
    rem = {}
    work = dict(poly)
    while work:
        exp = max(work, key=_drl_key)
        coeff = work.pop(exp)
        if F.is_zero(coeff):
            continue
        hit = None
        for g in basis:
            lt_exp, lt_c = leading_term(g)
            if _divides(lt_exp, exp):
                hit = (g, lt_exp, lt_c)
                break
        if hit is None:
            rem[exp] = F.add(rem.get(exp, F.zero), coeff)
            continue
        g, lt_exp, lt_c = hit
        quot_exp = tuple(a - b for a, b in zip(exp, lt_exp))
        factor = F.div(coeff, lt_c)
        sub = mp_mul_term(F, g, quot_exp, factor)
        sub.pop(tuple(a + b for a, b in zip(quot_exp, lt_exp)), None)
        work[exp] = F.zero
        for e, c in sub.items():
            work[e] = F.sub(work.get(e, F.zero), c)
        work = {e: c for e, c in work.items() if not F.is_zero(c)}
    return mp_normalize(F, rem)


def s_poly(F, f, g):
    ef, cf = leading_term(f)
    eg, cg = leading_term(g)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = mp_mul_term(F, f, tuple(a - b for a, b in zip(lcm, ef)), F.inv(cf))
    mg = mp_mul_term(F, g, tuple(a - b for a, b in zip(lcm, eg)), F.inv(cg))
    return mp_add(F, mf, mp_scale(F, mg, F.neg(F.one)))


def _lcm_exp(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def groebner_basis(F, polys):
    """Buchberger with normal selection (smallest lcm degree first) and
    the coprimality and chain criteria."""
    basis = []
    for p in polys:
        p = mp_normalize(F, p)
        if p:
            _, c = leading_term(p)
            basis.append(mp_scale(F, p, F.inv(c)))
    lts = [leading_term(g)[0] for g in basis]
    pairs = {(j, i) for i in range(len(basis)) for j in range(i)}

    def chain_redundant(i, j):
        lcm_ij = _lcm_exp(lts[i], lts[j])
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not _divides(lts[k], lcm_ij):
                continue
            a, b = tuple(sorted((i, k))), tuple(sorted((j, k)))
            if a not in pairs and b not in pairs:
                return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(_lcm_exp(lts[ij[0]],
                                                       lts[ij[1]])), ij))
        pairs.discard((i, j))
        if all(a == 0 or b == 0 for a, b in zip(lts[i], lts[j])):
            continue   # coprime leading monomials
        if chain_redundant(i, j):
            continue
        s = s_poly(F, basis[i], basis[j])
        r = normal_form(F, s, basis)
        if r:
            _, c = leading_term(r)
            r = mp_scale(F, r, F.inv(c))
            basis.append(r)
            lts.append(leading_term(r)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    return _reduce_basis(F, basis)


def _reduce_basis(F, basis):
    lts = [leading_term(g)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        if any(j != i and _divides(lts[j], lts[i])
               and (j < i or lts[j] != lts[i]) for j in range(len(basis))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(F, g, others) if others else g
        if r:
            _, c = leading_term(r)
            out.append(mp_scale(F, r, F.inv(c)))
    out.sort(key=lambda g: _drl_key(leading_term(g)[0]))
    return out


def projective_locus_empty(F, basis):
    """True iff the homogeneous ideal's projective zero locus is empty."""
    nvars = len(next(iter(basis[0])))
    for var in range(nvars):
        if not any(_is_pure_power(leading_term(g)[0], var) for g in basis):
            return False
    return True


def _is_pure_power(exp, var):
    return exp[var] > 0 and all(e == 0 for i, e in enumerate(exp) if i != var)
