"""Exact field contexts: Q, GF(p^d) and small number fields Q[x]/(m).

Element representations are plain hashable Python values; all arithmetic
goes through the field context object.

  * Rationals: elements are fractions.Fraction.
  * FiniteField(p, d): elements are ints in [0, p^d).  The int encodes the
    coefficient vector of the residue class in base p, little-endian:
    c_0 + c_1*p + ... + c_{d-1}*p^{d-1} stands for sum c_i * x^i modulo
    the defining polynomial.  For p = 2 this is the usual bit packing.
  * NumberField(m): elements are length-d tuples of Fractions (coefficient
    vectors of residues modulo the monic irreducible m over Q).

Multiplication in finite fields of order <= 2^20 is table-driven
(discrete exp/log); larger fields (allowed up to 2^24, for splitting
fields of line configurations) fall back to digit arithmetic.

Field embeddings GF(p^d) -> GF(p^D) for d | D are canonical and coherent:
compositions along any tower agree exactly with the direct embedding.
This is arranged by fixing, per prime p, a compatible system of generator
images across the divisor lattice of degrees (least valid root at every
step), and routing every embedding through that spine.
"""

from __future__ import annotations

import functools
from array import array
from fractions import Fraction

MAX_FIELD_ORDER = 1 << 24       # representation/arithmetic cap
MAX_TABLE_ORDER = 1 << 20       # exp/log tables and full enumeration cap


# ---------------------------------------------------------------------------
# small helpers on polynomials over the prime field F_p (dense int lists)

def _pf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead % p
        off = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
    return _pf_trim(a)


def _pf_powmod(a, e, m, p):
    r = [1]
    b = _pf_rem(a, m, p)
    while e:
        if e & 1:
            r = _pf_rem(_pf_mul(r, b, p), m, p)
        b = _pf_rem(_pf_mul(b, b, p), m, p)
        e >>= 1
    return r


def _pf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pf_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pf_is_irreducible(f, p):
    """Irreducibility over F_p via x^(p^i) - x gcd conditions."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    h = list(x)
    for i in range(1, n // 2 + 1):
        h = _pf_powmod(h, p, f, p)
        diff = _pf_trim([(hc - xc) % p for hc, xc in
                         zip(h + [0] * 2, x + [0] * len(h))])
        if len(_pf_gcd(f, diff, p)) > 1:
            return False
    h = _pf_powmod(x, p ** n, f, p)
    diff = _pf_trim([(hc - xc) % p for hc, xc in
                     zip(h + [0] * 2, x + [0] * len(h))])
    return not diff


def _int_to_digits(n, p, d):
    out = []
    for _ in range(d):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _digits_to_int(digits, p):
    n = 0
    for c in reversed(digits):
        n = n * p + c
    return n


@functools.lru_cache(maxsize=None)
def default_modulus(p, d):
    """Lexicographically least monic irreducible of degree d over F_p.

    Order is on the tuple (c_{d-1}, ..., c_0) of lower coefficients.
    """
    if d == 1:
        return (0, 1)
    for k in range(p ** d):
        low = _int_to_digits(k, p, d)[::-1]      # big-endian -> (c_{d-1}..c_0)
        f = low[::-1] + [1]
        if _pf_is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    n = max(2, n + 1)
    while not _is_prime(n):
        n += 1
    return n


def _factor_int(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# field contexts


class Rationals:
    """The field Q; elements are Fractions in lowest terms."""

    char = 0
    degree = 1
    order = None
    kind = "rationals"

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / Fraction(b)

    def is_zero(self, a):
        return a == 0

    def pow(self, a, e):
        return a ** e

    def coeffs(self, a):
        return (a,)

    def sort_key(self, a):
        return (a.numerator, a.denominator)

    def format(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class FiniteField:
    """GF(p^d) with an explicit monic irreducible modulus over F_p."""

    kind = "finite"

    def __init__(self, p, d=1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("degree must be >= 1")
        if p ** d > MAX_FIELD_ORDER:
            raise ValueError(f"field order {p}^{d} exceeds {MAX_FIELD_ORDER}")
        self.p = self.char = p
        self.d = self.degree = d
        self.order = p ** d
        if modulus is None:
            modulus = default_modulus(p, d)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree d")
        if d > 1 and not _pf_is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        # x^(d+j) mod modulus for j = 0..d-2, as digit vectors
        red = []
        cur = [(-c) % p for c in modulus[:-1]]
        red.append(list(cur))
        for _ in range(d - 2):
            cur = [0] + cur
            if cur[d]:
                lead = cur[d]
                cur = [(cur[i] + lead * red[0][i]) % p for i in range(d)]
            cur = cur[:d]
            red.append(list(cur))
        self._red_rows = red
        self._exp = None
        self._log = None
        self._gen = None

    # -- construction / conversion

    def from_int(self, n):
        return n % self.p

    def coerce(self, a):
        if isinstance(a, int):
            if 0 <= a < self.order:
                return a
            return a % self.p
        raise TypeError(f"cannot coerce {a!r} into {self!r}")

    def from_coeffs(self, coeffs):
        return _digits_to_int([c % self.p for c in coeffs], self.p)

    def coeffs(self, a):
        return tuple(_int_to_digits(a, self.p, self.d))

    def elements(self):
        if self.order > MAX_TABLE_ORDER:
            raise ValueError("field too large to enumerate")
        return range(self.order)

    # -- arithmetic

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.d == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * mult
            mult *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        if self.d == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            a, ra = divmod(a, p)
            out += (-ra) % p * mult
            mult *= p
        return out

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _ensure_tables(self):
        if self._exp is not None:
            return
        if self.order > MAX_TABLE_ORDER:
            return
        g = self._find_generator()
        q = self.order
        exp = array('q', [0]) * 0
        exp = array('q', [0] * (2 * (q - 1)))
        log = array('q', [0] * q)
        cur = 1
        for k in range(q - 1):
            exp[k] = cur
            exp[k + q - 1] = cur
            log[cur] = k
            cur = self._mul_digits(cur, g)
        self._gen = g
        self._exp = exp
        self._log = log

    def _find_generator(self):
        q = self.order
        fac = _factor_int(q - 1)
        cands = range(2, q) if self.d > 1 else range(2, q)
        for g in cands:
            if all(self._pow_digits(g, (q - 1) // r) != 1 for r in fac):
                return g
        if q == 2:
            return 1
        raise RuntimeError("no generator found")  # unreachable

    def generator(self):
        """Canonical multiplicative generator (also used by exp/log tables)."""
        self._ensure_tables()
        if self._gen is None:
            self._gen = self._find_generator()
        return self._gen

    def _mul_digits(self, a, b):
        p, d = self.p, self.d
        if d == 1:
            return a * b % p
        if p == 2:
            # carryless multiply then reduce
            out = 0
            x = a
            while x:
                low = x & -x
                out ^= b << low.bit_length() - 1
                x ^= low
            md = _digits_to_int(self.modulus, 2)
            top = out.bit_length() - 1
            while top >= d:
                out ^= md << (top - d)
                top = out.bit_length() - 1
            return out
        da = _int_to_digits(a, p, d)
        db = _int_to_digits(b, p, d)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for j in range(2 * d - 2, d - 1, -1):
            c = prod[j]
            if c:
                row = self._red_rows[j - d]
                for i in range(d):
                    prod[i] = (prod[i] + c * row[i]) % p
        return _digits_to_int(prod[:d], p)

    def _pow_digits(self, a, e):
        r = 1
        b = a
        while e:
            if e & 1:
                r = self._mul_digits(r, b)
            b = self._mul_digits(b, b)
            e >>= 1
        return r

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.d == 1:
            return a * b % self.p
        self._ensure_tables()
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_digits(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        self._ensure_tables()
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_digits(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self.d == 1:
            return pow(a, e, self.p)
        self._ensure_tables()
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        return self._pow_digits(a, e)

    def is_zero(self, a):
        return a == 0

    def sort_key(self, a):
        return a

    # -- Galois structure

    def frobenius(self, a, times=1):
        """x -> x^(p^times)."""
        return self.pow(a, self.p ** (times % self.d))

    def trace(self, a):
        """Trace to the prime field, returned as an int in [0, p)."""
        t = self.zero
        x = a
        for _ in range(self.d):
            t = self.add(t, x)
            x = self.frobenius(x)
        assert t < self.p
        return t

    def sqrt(self, a):
        """A square root in char 2 (always exists; Frobenius inverse)."""
        if self.p != 2:
            raise ValueError("sqrt here is the char-2 inverse Frobenius")
        return self.frobenius(a, self.d - 1)

    def format(self, a):
        if self.d == 1:
            return str(a)
        terms = []
        for i in reversed(range(self.d)):
            c = a // self.p ** i % self.p
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                v = "a" if i == 1 else f"a^{i}"
                terms.append(v if c == 1 else f"{c}*{v}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        if self.d == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.d})"

    def spec(self):
        """Round-trippable field header, e.g. GF(2^4; modulus=x^4+x+1)."""
        if self.d == 1:
            return f"GF({self.p})"
        terms = []
        for i in reversed(range(self.d + 1)):
            c = self.modulus[i]
            if not c:
                continue
            v = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(v if (c == 1 and i > 0) else (str(c) if i == 0 else f"{c}*{v}"))
        return f"GF({self.p}^{self.d}; modulus={'+'.join(terms)})"


@functools.lru_cache(maxsize=None)
def _gf_cached(p, d, modulus):
    return FiniteField(p, d, modulus)


def GF(p, d=1, modulus=None):
    """Cached finite-field constructor: equal (p, d, modulus) arguments
    give the identical object, with the default modulus resolved first."""
    if modulus is None:
        modulus = default_modulus(p, d)
    else:
        modulus = tuple(c % p for c in modulus)
    return _gf_cached(p, d, modulus)


class NumberField:
    """Q[x]/(m) for a monic irreducible m over Q, degree 2..6."""

    kind = "numberfield"
    char = 0
    order = None

    def __init__(self, modulus, name="w"):
        modulus = tuple(Fraction(c) for c in modulus)
        if len(modulus) < 3 or len(modulus) > 7:
            raise ValueError("number field degree must be between 2 and 6")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.d = self.degree = len(modulus) - 1
        self.name = name
        self.zero = (Fraction(0),) * self.degree
        self.one = tuple([Fraction(1)] + [Fraction(0)] * (self.degree - 1))
        self.gen = tuple(Fraction(1) if i == 1 else Fraction(0)
                         for i in range(self.degree))
        # x^(d+j) mod modulus
        d = self.degree
        red = []
        cur = [-c for c in modulus[:-1]]
        red.append(list(cur))
        for _ in range(d - 2):
            cur = [Fraction(0)] + cur
            lead = cur[d]
            cur = [cur[i] + lead * red[0][i] for i in range(d)]
            red.append(list(cur))
        self._red_rows = red

    def from_int(self, n):
        return tuple([Fraction(n)] + [Fraction(0)] * (self.degree - 1))

    def coerce(self, a):
        if isinstance(a, tuple) and len(a) == self.degree:
            return tuple(Fraction(c) for c in a)
        if isinstance(a, (int, Fraction)):
            return self.from_int(0) if a == 0 else tuple(
                [Fraction(a)] + [Fraction(0)] * (self.degree - 1))
        raise TypeError(f"cannot coerce {a!r} into {self!r}")

    def coeffs(self, a):
        return a

    def from_coeffs(self, coeffs):
        return tuple(Fraction(c) for c in coeffs)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for j in range(2 * d - 2, d - 1, -1):
            c = prod[j]
            if c:
                row = self._red_rows[j - d]
                for i in range(d):
                    prod[i] += c * row[i]
        return tuple(prod[:d])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0")
        # extended Euclid in Q[x] against the modulus
        r0, r1 = list(self.modulus), _trim_frac(list(a))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        lead = r0[-1]
        inv_coeffs = [c / lead for c in s0]
        inv_coeffs += [Fraction(0)] * (self.degree - len(inv_coeffs))
        return tuple(inv_coeffs[:self.degree])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, b = self.one, a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def is_rational(self, a):
        return all(c == 0 for c in a[1:])

    def sort_key(self, a):
        return tuple((c.numerator, c.denominator) for c in a)

    def format(self, a):
        terms = []
        for i in reversed(range(self.degree)):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                v = self.name if i == 1 else f"{self.name}^{i}"
                terms.append(v if c == 1 else f"{c}*{v}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"QQ[{self.name}]/({self.name}^{self.degree}+...)"


def _trim_frac(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim_frac(out)


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim_frac([x - y for x, y in zip(a, b)])


def _frac_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        c = a[-1] / b[-1]
        off = len(a) - len(b)
        q[off] = c
        for i in range(len(b)):
            a[off + i] -= c * b[i]
        a.pop()
        _trim_frac(a)
    return q, a


# ---------------------------------------------------------------------------
# canonical coherent embeddings between finite fields of the same
# characteristic


class Embedding:
    """A ring embedding src -> dst determined by the image of src's generator.

    Callable on elements; images of the polynomial generator are chosen so
    that compositions along any tower agree exactly with direct embeddings.
    """

    def __init__(self, src, dst, gen_image):
        self.src = src
        self.dst = dst
        self.gen_image = gen_image
        # powers of the generator image
        pows = [dst.one]
        for _ in range(src.degree - 1):
            pows.append(dst.mul(pows[-1], gen_image))
        self._pows = pows

    def __call__(self, a):
        dst = self.dst
        out = dst.zero
        for c, pw in zip(self.src.coeffs(a), self._pows):
            if c:
                out = dst.add(out, dst.mul(dst.from_int(c), pw))
        return out

    def __repr__(self):
        return f"Embedding({self.src!r} -> {self.dst!r})"


def _poly_roots_in(field, coeffs):
    """Sorted roots in `field` of a polynomial given by prime-field coeffs."""
    from . import poly
    f = poly.Poly(field, [field.from_int(c) for c in coeffs])
    return sorted(f.roots())


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@functools.lru_cache(maxsize=None)
def _lattice_gen_image(p, d, D):
    """Image of GF(p^d)'s canonical generator inside canonical GF(p^D)."""
    if D % d:
        raise ValueError(f"no embedding GF({p}^{d}) -> GF({p}^{D})")
    big = GF(p, D)
    if d == 1:
        return big.one
    small = GF(p, d)
    roots = _poly_roots_in(big, small.modulus)
    if not roots:
        raise ValueError("modulus has no root in destination (corrupted ctx)")
    valid = []
    for r in roots:
        pows = [big.one]
        for _ in range(d - 1):
            pows.append(big.mul(pows[-1], r))
        ok = True
        for dd in _divisors(d)[:-1]:
            if dd == 1:
                continue
            img_mid = _lattice_gen_image(p, dd, d)    # element of GF(p^d)
            img_big = _lattice_gen_image(p, dd, D)
            # evaluate img_mid's coefficient vector at r
            acc = big.zero
            for c, pw in zip(small.coeffs(img_mid), pows):
                if c:
                    acc = big.add(acc, big.mul(big.from_int(c), pw))
            if acc != img_big:
                ok = False
                break
        if ok:
            valid.append(r)
    if not valid:
        raise ValueError("no coherent root choice (corrupted ctx)")
    return min(valid)


@functools.lru_cache(maxsize=None)
def _field_iso_from_canonical(field):
    """Embedding canonical GF(p^d) -> `field` (same degree, custom modulus)."""
    can = GF(field.p, field.d)
    if field is can:
        return Embedding(can, can, _gen_element(can))
    roots = _poly_roots_in(field, can.modulus)
    return Embedding(can, field, min(roots))


def _gen_element(field):
    return field.from_coeffs([0, 1] if field.d > 1 else [1])


@functools.lru_cache(maxsize=None)
def _field_iso_to_canonical(field):
    """Embedding `field` -> canonical GF(p^d) (inverse of the above)."""
    can = GF(field.p, field.d)
    if field is can:
        return Embedding(can, can, _gen_element(can))
    fwd = _field_iso_from_canonical(field)
    # invert the F_p-linear map given by powers of fwd.gen_image
    p, d = field.p, field.d
    cols = [field.coeffs(pw) for pw in fwd._pows]
    # solve cols * x = e_1 basis images: build inverse matrix mod p
    mat = [[cols[j][i] for j in range(d)] for i in range(d)]
    inv = _matinv_mod_p(mat, p)
    gen_target = field.coeffs(_gen_element(field))
    img = [sum(inv[i][j] * gen_target[j] for j in range(d)) % p
           for i in range(d)]
    return Embedding(field, can, can.from_coeffs(img) if d > 1 else can.one)


def _matinv_mod_p(mat, p):
    n = len(mat)
    aug = [list(map(lambda v: v % p, row)) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [v * inv % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(v - c * w) % p for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@functools.lru_cache(maxsize=None)
def embedding(src, dst):
    """The canonical embedding GF(p^d) -> GF(p^D), d | D.

    Tower-coherent: embedding(b, c) o embedding(a, b) == embedding(a, c)
    as maps, exactly.
    """
    if src.kind != "finite" or dst.kind != "finite":
        raise TypeError("embedding is for finite fields")
    if src.p != dst.p:
        raise ValueError("different characteristics")
    if dst.d % src.d:
        raise ValueError(f"{src.d} does not divide {dst.d}")
    if src is dst:
        return Embedding(src, dst, _gen_element(src))
    to_can = _field_iso_to_canonical(src)
    lat = _lattice_gen_image(src.p, src.d, dst.d)
    can_dst = GF(dst.p, dst.d)
    from_can = _field_iso_from_canonical(dst)
    # image of src generator through the spine
    can_src = GF(src.p, src.d)
    mid = to_can(_gen_element(src))
    spine = Embedding(can_src, can_dst, lat)
    return Embedding(src, dst, from_can(spine(mid)))


def parse_field(text):
    """Parse 'Q' or 'GF(p)' / 'GF(p^d)' / 'GF(q)' / 'GF(p^d; modulus=...)'."""
    from . import poly
    t = text.strip()
    if t in ("Q", "QQ", "Rationals"):
        return QQ
    if not (t.startswith("GF(") and t.endswith(")")):
        raise ValueError(f"cannot parse field spec {text!r}")
    body = t[3:-1]
    mod = None
    if ";" in body:
        body, modpart = body.split(";", 1)
        modpart = modpart.strip()
        if not modpart.startswith("modulus="):
            raise ValueError(f"bad field spec {text!r}")
        mod = modpart[len("modulus="):]
    body = body.strip()
    if "^" in body:
        p, d = body.split("^")
        p, d = int(p), int(d)
    else:
        q = int(body)
        fac = _factor_int(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        [(p, d)] = fac.items()
    if mod is None:
        return GF(p, d)
    base = GF(p)
    mpoly = poly.parse_poly(base, mod, var="x")
    return GF(p, d, tuple(mpoly.coeffs))
