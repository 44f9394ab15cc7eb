"""The combinatorial 27-line model and its automorphism group.

Labels: E1..E6 (exceptional classes), C1..C6 (conic classes), Lij
(1 <= i < j <= 6).  Incidence: Ei meets Cj iff i != j; Ei and Ci meet Lmn
iff i is one of m, n; Lij meets Lmn iff {i,j} and {m,n} are disjoint;
no E-E or C-C incidences.  The resulting graph is 10-regular with 45
triangles and its automorphism group has order 51840.

possible_fixed_counts computes Fix(g) for every group element and closes
the family under intersection: since Fix(<g1..gk>) is the intersection of
the Fix(g_i), the closure is exactly the family of subgroup fixed sets,
so the set of its sizes is the set of realizable rational-line counts.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graphs import IntersectionGraph, graph_isomorphic

E_LABELS = tuple(f"E{i}" for i in range(1, 7))
C_LABELS = tuple(f"C{i}" for i in range(1, 7))
L_LABELS = tuple(f"L{i}{j}" for i, j in itertools.combinations(range(1, 7), 2))
LABELS = E_LABELS + C_LABELS + L_LABELS
LABEL_INDEX = {l: i for i, l in enumerate(LABELS)}


def _labels_meet(a, b):
    ta, tb = a[0], b[0]
    if ta == "E" and tb == "E":
        return False
    if ta == "C" and tb == "C":
        return False
    if {ta, tb} == {"E", "C"}:
        return a[1] != b[1]
    if ta in "EC" and tb == "L":
        return a[1] in b[1:]
    if tb in "EC" and ta == "L":
        return b[1] in a[1:]
    # both L: meet iff index pairs are disjoint
    return not (set(a[1:]) & set(b[1:]))


@lru_cache(maxsize=1)
def incidence_model():
    """The intersection graph of the 27-line model."""
    n = 27
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _labels_meet(LABELS[i], LABELS[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return IntersectionGraph(LABELS, adj)


def index_permutation(sigma):
    """Permutation of the 27 labels induced by sigma on {1..6}.

    sigma is given as a dict or list mapping 1..6 to 1..6.
    """
    if isinstance(sigma, (list, tuple)):
        sig = {i + 1: sigma[i] for i in range(6)}
    else:
        sig = dict(sigma)
    out = []
    for lab in LABELS:
        if lab[0] in "EC":
            out.append(LABEL_INDEX[f"{lab[0]}{sig[int(lab[1])]}"])
        else:
            a, b = sorted((sig[int(lab[1])], sig[int(lab[2])]))
            out.append(LABEL_INDEX[f"L{a}{b}"])
    return tuple(out)


def is_model_automorphism(perm):
    g = incidence_model()
    for i in range(27):
        for j in range(i + 1, 27):
            if g.has_edge(i, j) != g.has_edge(perm[i], perm[j]):
                return False
    return True


def _compose(p, q):
    """p after q (apply q first)."""
    return tuple(p[q[i]] for i in range(len(q)))


@lru_cache(maxsize=1)
def automorphism_group():
    """(generators, all elements) of the model's automorphism group.

    Generators: two index permutations generating S6 plus one
    backtracking-found automorphism moving E1 to C1; the element list is
    the closure under composition and has order 51840.
    """
    g = incidence_model()
    gen_s6_a = index_permutation([2, 1, 3, 4, 5, 6])
    gen_s6_b = index_permutation([2, 3, 4, 5, 6, 1])
    extra = graph_isomorphic(g, g, forced={LABEL_INDEX["E1"]:
                                           LABEL_INDEX["C1"]})
    extra = tuple(extra)
    assert is_model_automorphism(extra)
    gens = [gen_s6_a, gen_s6_b, extra]
    identity = tuple(range(27))
    elements = {identity}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for gen in gens:
            nxt = _compose(gen, cur)
            if nxt not in elements:
                elements.add(nxt)
                frontier.append(nxt)
    return gens, sorted(elements)


def group_order():
    return len(automorphism_group()[1])


def fixed_set_mask(perm):
    m = 0
    for i in range(27):
        if perm[i] == i:
            m |= 1 << i
    return m


def possible_fixed_counts():
    """Sizes of all subgroup fixed sets: the realizable line counts."""
    _, elements = automorphism_group()
    base = {fixed_set_mask(p) for p in elements}
    closed = set(base)
    frontier = set(base)
    while frontier:
        new = set()
        for a in frontier:
            for b in base:
                c = a & b
                if c not in closed:
                    closed.add(c)
                    new.add(c)
        frontier = new
    return sorted({bin(m).count("1") for m in closed})


def fixed_labels_of_index_perm(sigma):
    """Labels fixed by the line permutation induced by sigma on indices."""
    perm = index_permutation(sigma)
    return [LABELS[i] for i in range(27) if perm[i] == i]


def restricted_model(labels):
    g = incidence_model()
    return g.restrict([LABEL_INDEX[l] for l in labels])


# ---------------------------------------------------------------------------
# classical configurations inside the model


def _adjacent(i, j):
    return incidence_model().has_edge(i, j)


def transversals_of_four_skew(labels):
    """The exactly-two labels meeting all of four pairwise skew lines."""
    idx = [LABEL_INDEX[l] if isinstance(l, str) else l for l in labels]
    if len(idx) != 4 or len(set(idx)) != 4:
        raise ValueError("need four distinct labels")
    for a, b in itertools.combinations(idx, 2):
        if _adjacent(a, b):
            raise ValueError("labels are not pairwise skew")
    g = incidence_model()
    hits = [LABELS[v] for v in range(27)
            if v not in idx and all(g.has_edge(v, u) for u in idx)]
    if len(hits) != 2:
        raise ArithmeticError("four skew lines must have two transversals")
    return hits


@lru_cache(maxsize=1)
def all_double_sixes():
    """All 36 double sixes as (sextuple, sextuple) of label tuples."""
    g = incidence_model()
    sixers = []

    def extend(cur, start):
        if len(cur) == 6:
            sixers.append(tuple(cur))
            return
        for v in range(start, 27):
            if all(not g.has_edge(v, u) for u in cur):
                cur.append(v)
                extend(cur, v + 1)
                cur.pop()

    extend([], 0)
    paired = {}
    for s in sixers:
        sset = set(s)
        # partner sextuple: each line meets exactly five of s
        partner = [v for v in range(27) if v not in sset
                   and sum(1 for u in s if g.has_edge(v, u)) == 5]
        if len(partner) == 6:
            key = tuple(sorted((s, tuple(partner)))[0])
            pair = tuple(sorted((s, tuple(partner))))
            paired[pair] = True
    out = []
    for s1, s2 in paired:
        out.append((tuple(LABELS[v] for v in s1),
                    tuple(LABELS[v] for v in s2)))
    return sorted(out)


def double_six_of(pair):
    """The unique double six separating the two given skew labels."""
    a, b = (LABEL_INDEX[x] if isinstance(x, str) else x for x in pair)
    if _adjacent(a, b) or a == b:
        raise ValueError("the pair must be two distinct skew labels")
    la, lb = LABELS[a], LABELS[b]
    hits = []
    for s1, s2 in all_double_sixes():
        if (la in s1 and lb in s2) or (la in s2 and lb in s1):
            hits.append((s1, s2))
    if len(hits) != 1:
        raise ArithmeticError(
            f"expected a unique separating double six, found {len(hits)}")
    return hits[0][0] + hits[0][1]


def _triangle_through_edge(i, j):
    g = incidence_model()
    common = g.adj[i] & g.adj[j]
    if bin(common).count("1") != 1:
        raise ArithmeticError("edge not in a unique triangle")
    return common.bit_length() - 1


def steiner_complete(triple1, triple2):
    """Complete two disjoint coplanar triples to a Steiner system.

    Returns a 3x3 grid of labels whose rows and columns are coplanar
    triples; the first two columns are the inputs (rows matched so each
    line of triple1 meets exactly one line of triple2).
    """
    g = incidence_model()
    t1 = [LABEL_INDEX[l] if isinstance(l, str) else l for l in triple1]
    t2 = [LABEL_INDEX[l] if isinstance(l, str) else l for l in triple2]
    for t in (t1, t2):
        if len(t) != 3 or not all(g.has_edge(a, b)
                                  for a, b in itertools.combinations(t, 2)):
            raise ValueError("inputs must be coplanar triples")
    if set(t1) & set(t2):
        raise ValueError("triples must be disjoint")
    grid = []
    used = set()
    for a in t1:
        partners = [b for b in t2 if g.has_edge(a, b)]
        if len(partners) != 1:
            raise ArithmeticError(
                "each line must meet exactly one line of the other triple")
        b = partners[0]
        if b in used:
            raise ArithmeticError("two lines met the same partner")
        used.add(b)
        c = _triangle_through_edge(a, b)
        grid.append((LABELS[a], LABELS[b], LABELS[c]))
    # verify rows and columns are coplanar triples
    cols = list(zip(*grid))
    for triple in list(grid) + cols:
        idx = [LABEL_INDEX[l] for l in triple]
        if not all(g.has_edge(x, y)
                   for x, y in itertools.combinations(idx, 2)):
            raise ArithmeticError("completion is not a Steiner system")
    return grid


# ---------------------------------------------------------------------------
# transport of geometric Frobenius into the model


def model_permutation_from_lines(lines, perm):
    """Transport a permutation of 27 concrete lines into the label model.

    lines: the 27 lines; perm: permutation as an index list.  Returns the
    induced permutation of the model labels through any incidence-
    preserving identification, or raises if the intersection graph does
    not match the model.
    """
    from .graphs import intersection_graph
    g = intersection_graph(lines, labels=list(range(len(lines))))
    model = incidence_model()
    iso = graph_isomorphic(g, model)
    if iso is None:
        raise ValueError("line configuration is not the 27-line model")
    inv = [0] * 27
    for v, w in enumerate(iso):
        inv[w] = v
    return tuple(iso[perm[inv[i]]] for i in range(27))


def report():
    gens, elements = automorphism_group()
    return {
        "group_order": len(elements),
        "fixed_count_set": possible_fixed_counts(),
        "double_six_count": len(all_double_sixes()),
    }
