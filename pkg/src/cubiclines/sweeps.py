"""Exhaustive coefficient sweeps: the full F_2 census and templated
searches.

The F_2 census walks all 2^20 - 1 nonzero cubic forms.  Smoothness per
form: in characteristic 2, Euler's relation makes f redundant, so the
surface is smooth iff the four partial quadrics have no common projective
zero, iff (Macaulay bound for four quadrics in P^3) the degree-5 graded
piece of their ideal has full rank 56 over F_2.  Each of the 80 products
(cubic monomial) x (partial) is one 56-bit row, rows depend linearly on
the coefficient bits, and a batched bit-parallel Gaussian elimination
ranks tens of thousands of forms at once in numpy.  Line counts come from
precomputed 20-bit parity masks (4 restriction coefficients per line for
algebraic containment, 3 point evaluations for set-wise containment).

Results are deterministic: histograms are index-order independent and
witnesses are the minimal coefficient index per count, so any
parallel partition merges to identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .fields import GF
from .projective import enumerate_lines_p3
from .surface import (MONOMIALS, CubicForm, _monomials, is_smooth_fast,
                      line_in_surface, line_in_surface_setwise,
                      rational_lines)

F2 = GF(2)

VALID_F2_COUNTS = frozenset({0, 1, 2, 3, 5, 9, 15})


def form_from_index(idx, field=F2):
    """The cubic form whose coefficients are the bits of idx (bit j is the
    j-th monomial in the descending-lex order)."""
    coeffs = [(idx >> j) & 1 for j in range(20)]
    return CubicForm(field, coeffs)


def index_from_form(f):
    idx = 0
    for j, c in enumerate(f.coeffs):
        if c:
            idx |= 1 << j
    return idx


def _macaulay_row_table():
    """(20, 80) uint64 table: contribution of coefficient bit j to each of
    the 80 degree-5 Macaulay rows (4 partials x 20 multiplier monomials)."""
    m5 = _monomials(4, 5)
    idx5 = {m: i for i, m in enumerate(m5)}
    table = np.zeros((20, 80), dtype=np.uint64)
    for j, mj in enumerate(MONOMIALS):
        for i in range(4):
            if mj[i] % 2 == 0:
                continue     # char-2 derivative of an even power vanishes
            dm = tuple(e - (1 if k == i else 0) for k, e in enumerate(mj))
            for r, mult in enumerate(MONOMIALS):
                target = tuple(a + b for a, b in zip(dm, mult))
                table[j, i * 20 + r] ^= np.uint64(1 << idx5[target])
    return table


def _line_mask_tables():
    """Per line of P^3(F_2): 4 restriction-parity masks (algebraic
    containment) and 3 point-evaluation masks (set-wise containment)."""
    lines = enumerate_lines_p3(F2)
    alg = np.zeros((len(lines), 4), dtype=np.uint32)
    setw = np.zeros((len(lines), 3), dtype=np.uint32)
    for li, line in enumerate(lines):
        a, b = line.rows
        for j, mono in enumerate(MONOMIALS):
            f = CubicForm(F2, [1 if k == j else 0 for k in range(20)])
            restricted = f.substitute([[a[r], b[r]] for r in range(4)])
            for (du, dv), c in restricted.items():
                if c:
                    alg[li, dv] ^= np.uint32(1 << j)
        for pi, pt in enumerate(line.points()):
            for j, mono in enumerate(MONOMIALS):
                v = 1
                for coord, e in zip(pt, mono):
                    if e and coord == 0:
                        v = 0
                        break
                if v:
                    setw[li, pi] ^= np.uint32(1 << j)
    return lines, alg, setw


_CACHED = {}


def _tables():
    if "rows" not in _CACHED:
        _CACHED["rows"] = _macaulay_row_table()
        _CACHED["lines"], _CACHED["alg"], _CACHED["setw"] = \
            _line_mask_tables()
    return _CACHED


def smooth_mask_f2(indices):
    """Boolean array: which coefficient indices give smooth surfaces."""
    table = _tables()["rows"]
    idx = np.asarray(indices, dtype=np.uint32)
    B = idx.shape[0]
    rows = np.zeros((B, 80), dtype=np.uint64)
    for j in range(20):
        sel = (idx >> j) & 1 != 0
        if sel.any():
            rows[sel] ^= table[j]
    # Gauss-Jordan with fully reduced pivot rows: every stored pivot has
    # zero bits at all other pivot columns of its surface, so one
    # reduction pass per row (in any column order) is exact.
    pivots = np.zeros((B, 56), dtype=np.uint64)
    rank = np.zeros(B, dtype=np.int16)
    active_cols = []
    for r in range(80):
        v = rows[:, r].copy()
        for c in active_cols:
            pc = pivots[:, c]
            need = (((v >> np.uint64(c)) & np.uint64(1)) != 0) & (pc != 0)
            if need.any():
                v[need] ^= pc[need]
        nz = v != 0
        if not nz.any():
            continue
        vv = v[nz]
        ids = np.nonzero(nz)[0]
        low = vv & (~vv + np.uint64(1))
        cs = np.log2(low.astype(np.float64)).astype(np.uint64)
        pivots[ids, cs] = vv
        rank[nz] += 1
        # back-eliminate the new pivot bit from this surface's other pivots
        for c in active_cols:
            pc = pivots[ids, c]
            hit = (((pc >> cs) & np.uint64(1)) != 0) & (pc != 0) \
                & (cs != np.uint64(c))
            if hit.any():
                pivots[ids[hit], c] = pc[hit] ^ vv[hit]
        for c in np.unique(cs):
            if int(c) not in active_cols:
                active_cols.append(int(c))
        if rank.min() >= 56:
            break
    return rank >= 56


def line_counts_f2(indices, setwise=False):
    """Algebraic (or set-wise) line counts for an array of indices."""
    t = _tables()
    masks = t["setw"] if setwise else t["alg"]
    idx = np.asarray(indices, dtype=np.uint32)
    total = np.zeros(idx.shape[0], dtype=np.int16)
    for li in range(masks.shape[0]):
        ok = np.ones(idx.shape[0], dtype=bool)
        for mask in masks[li]:
            if mask == 0:
                continue
            par = np.bitwise_count(idx & np.uint32(mask)) & 1
            ok &= par == 0
        total += ok.astype(np.int16)
    return total


@dataclass
class CensusResult:
    histogram: dict
    witnesses: dict                  # count -> minimal coefficient index
    smooth_total: int
    count_set: tuple
    setwise_witness: int = None      # smooth index with setwise > algebraic

    def to_json_dict(self):
        return {
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witnesses": {str(k): repr(form_from_index(v))
                          for k, v in sorted(self.witnesses.items())},
            "smooth_total": self.smooth_total,
            "count_set": list(self.count_set),
            "setwise_witness":
                None if self.setwise_witness is None
                else repr(form_from_index(self.setwise_witness)),
        }


def _census_chunk(args):
    lo, hi, want_setwise = args
    idx = np.arange(lo, hi, dtype=np.uint32)
    smooth = smooth_mask_f2(idx)
    sm_idx = idx[smooth]
    counts = line_counts_f2(sm_idx)
    hist = {}
    wit = {}
    for c in np.unique(counts):
        sel = sm_idx[counts == c]
        hist[int(c)] = int(sel.shape[0])
        wit[int(c)] = int(sel.min())
    setwise_wit = None
    if want_setwise:
        sw = line_counts_f2(sm_idx, setwise=True)
        bigger = sm_idx[sw > counts]
        if bigger.shape[0]:
            setwise_wit = int(bigger.min())
    return hist, wit, int(sm_idx.shape[0]), setwise_wit


def f2_census(chunk_size=1 << 15, threads=1, setwise_witness=True):
    """The full census of all 2^20 - 1 nonzero cubic forms over F_2."""
    ranges = []
    lo = 1
    top = 1 << 20
    while lo < top:
        hi = min(lo + chunk_size, top)
        ranges.append((lo, hi, setwise_witness))
        lo = hi
    if threads > 1:
        import multiprocessing
        with multiprocessing.Pool(threads) as pool:
            parts = pool.map(_census_chunk, ranges)
    else:
        parts = [_census_chunk(r) for r in ranges]
    hist = {}
    wit = {}
    smooth_total = 0
    setwise_wit = None
    for h, w, s, sw in parts:
        smooth_total += s
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        for k, v in w.items():
            wit[k] = min(wit.get(k, v), v)
        if sw is not None:
            setwise_wit = sw if setwise_wit is None else min(setwise_wit, sw)
    return CensusResult(histogram=dict(sorted(hist.items())),
                        witnesses=dict(sorted(wit.items())),
                        smooth_total=smooth_total,
                        count_set=tuple(sorted(hist)),
                        setwise_witness=setwise_wit)


# ---------------------------------------------------------------------------
# templated sweeps over any small field


@dataclass
class SweepConfig:
    """Appendix-style template: fixed coefficient values with a block of
    varying positions."""

    field: object
    template: list                   # 20 entries: field element or None
    setwise: bool = False
    smooth_only: bool = True
    count_filter: frozenset = None
    limit: int = None

    @classmethod
    def block(cls, field, varying, offset, fill=None, **kw):
        """varying positions [offset, offset+varying), the rest filled."""
        if varying + offset > 20:
            raise ValueError("template exceeds the 20-coefficient vector")
        fill = field.one if fill is None else field.coerce(fill)
        template = [fill] * 20
        for i in range(offset, offset + varying):
            template[i] = None
        return cls(field=field, template=template, **kw)


@dataclass
class SweepResult:
    histogram: dict
    witnesses: dict                  # count -> CubicForm
    examined: int
    smooth_total: int

    def to_json_dict(self):
        return {
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witnesses": {str(k): repr(v)
                          for k, v in sorted(self.witnesses.items())},
            "examined": self.examined,
            "smooth_total": self.smooth_total,
        }


def run_sweep(cfg):
    """Deterministic histogram of line counts over the template's smooth
    members, with the first witness per count."""
    F = cfg.field
    positions = [i for i, v in enumerate(cfg.template) if v is None]
    if F.order is None:
        raise ValueError("sweeps need a finite field")
    if cfg.setwise:
        all_lines = enumerate_lines_p3(F, max_q=8)
    els = sorted(F.elements(), key=F.sort_key)
    hist = {}
    wits = {}
    examined = 0
    smooth_total = 0
    for combo in itertools.product(els, repeat=len(positions)):
        coeffs = list(cfg.template)
        for pos, v in zip(positions, combo):
            coeffs[pos] = v
        if all(F.is_zero(c) for c in coeffs):
            continue
        examined += 1
        if cfg.limit and examined > cfg.limit:
            break
        f = CubicForm(F, coeffs)
        smooth = is_smooth_fast(f)
        if cfg.smooth_only and not smooth:
            continue
        smooth_total += smooth
        if cfg.setwise:
            count = sum(1 for line in all_lines
                        if line_in_surface_setwise(f, line))
        else:
            count = rational_lines(f, check_smooth=False).count() if smooth \
                else sum(1 for line in enumerate_lines_p3(F, max_q=8)
                         if line_in_surface(f, line))
        if cfg.count_filter and count not in cfg.count_filter:
            continue
        hist[count] = hist.get(count, 0) + 1
        if count not in wits:
            wits[count] = f
    return SweepResult(histogram=dict(sorted(hist.items())),
                       witnesses=wits, examined=examined,
                       smooth_total=smooth_total)
