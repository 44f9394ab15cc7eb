"""Intersection graphs of line configurations and the permissible-graph
catalog.

A graph is stored as per-vertex adjacency bitmasks (order <= 27 fits an
int).  "Permissible" means: no three pairwise non-adjacent vertices,
every edge lies in a 3-cycle, and no two distinct 3-cycles share an edge.
The order-7 exhaustive facts (no permissible graph of order 7; every
7-vertex graph without a disjoint triple has two triangles sharing an
edge) are verified by a bit-parallel sweep over all 2^21 labeled graphs.
"""

from __future__ import annotations

import itertools

import numpy as np

from .projective import lines_meet


class IntersectionGraph:
    """Simple graph on at most 27 labelled vertices."""

    __slots__ = ("labels", "adj")

    def __init__(self, labels, adj_masks):
        labels = tuple(labels)
        if len(labels) > 27:
            raise ValueError("intersection graphs have order at most 27")
        self.labels = labels
        self.adj = tuple(int(m) for m in adj_masks)
        n = len(labels)
        for i, m in enumerate(self.adj):
            if m >> n:
                raise ValueError("adjacency mask out of range")
            if m & (1 << i):
                raise ValueError("no loops allowed")
        for i in range(n):
            for j in range(n):
                if bool(self.adj[i] & (1 << j)) != bool(self.adj[j] & (1 << i)):
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, labels, edges):
        labels = list(labels)
        index = {l: i for i, l in enumerate(labels)}
        adj = [0] * len(labels)
        for a, b in edges:
            i, j = (index[a], index[b]) if a in index else (a, b)
            if i == j:
                raise ValueError("no loops")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(labels, adj)

    def order(self):
        return len(self.labels)

    def has_edge(self, i, j):
        return bool(self.adj[i] & (1 << j))

    def degree(self, i):
        return bin(self.adj[i]).count("1")

    def degrees(self):
        return [self.degree(i) for i in range(self.order())]

    def edges(self):
        n = self.order()
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.has_edge(i, j)]

    def triangles(self):
        n = self.order()
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                if not self.has_edge(i, j):
                    continue
                common = self.adj[i] & self.adj[j] & ~((1 << (j + 1)) - 1)
                k = j + 1
                m = common
                while m:
                    low = m & -m
                    out.append((i, j, low.bit_length() - 1))
                    m ^= low
        return out

    def restrict(self, vertices):
        vertices = list(vertices)
        labels = [self.labels[v] for v in vertices]
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for j, w in enumerate(vertices):
                if i != j and self.has_edge(v, w):
                    adj[i] |= 1 << j
        return IntersectionGraph(labels, adj)

    def relabel(self, perm):
        """Graph with vertex i renamed perm[i]."""
        n = self.order()
        adj = [0] * n
        labels = [None] * n
        for i in range(n):
            labels[perm[i]] = self.labels[i]
            for j in range(n):
                if self.has_edge(i, j):
                    adj[perm[i]] |= 1 << perm[j]
        return IntersectionGraph(labels, adj)

    def edge_count(self):
        return len(self.edges())

    def __eq__(self, other):
        return (isinstance(other, IntersectionGraph)
                and self.labels == other.labels and self.adj == other.adj)

    def __hash__(self):
        return hash((self.labels, self.adj))

    def __repr__(self):
        return f"IntersectionGraph(order={self.order()}, edges={self.edges()})"

    def to_json_dict(self):
        return {"order": self.order(),
                "labels": [str(l) for l in self.labels],
                "edges": [[i, j] for i, j in self.edges()]}

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        for i, l in enumerate(self.labels):
            lines.append(f'  v{i} [label="{l}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def intersection_graph(lines, labels=None):
    """Graph whose vertices are the given pairwise distinct lines and whose
    edges are their intersections."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise ValueError("lines must be pairwise distinct")
    if labels is None:
        labels = [repr(l) for l in lines]
    n = len(lines)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if lines_meet(lines[i], lines[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return IntersectionGraph(labels, adj)


def is_permissible(g):
    """No disjoint triple, every edge in a 3-cycle, no two 3-cycles
    sharing an edge."""
    n = g.order()
    full = (1 << n) - 1
    for i in range(n):
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                common = g.adj[i] & g.adj[j]
                cnt = bin(common).count("1")
                if cnt == 0:
                    return False       # edge not in any 3-cycle
                if cnt > 1:
                    return False       # two 3-cycles share the edge
            else:
                # a third vertex non-adjacent to both gives a disjoint triple
                rest = full & ~g.adj[i] & ~g.adj[j] & ~(1 << i) & ~(1 << j)
                m = rest
                while m:
                    low = m & -m
                    k = low.bit_length() - 1
                    if not g.has_edge(i, k) and not g.has_edge(j, k):
                        return False
                    m ^= low
    return True


# -- catalog


def _edge_index(n):
    pairs = list(itertools.combinations(range(n), 2))
    return {pair: idx for idx, pair in enumerate(pairs)}, pairs


def _graph_from_bits(n, bits, eidx_pairs):
    adj = [0] * n
    for idx, (i, j) in enumerate(eidx_pairs):
        if bits >> idx & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return IntersectionGraph(tuple(range(n)), adj)


def canonical_form(g):
    """Minimal edge bitmask over all vertex relabelings (order <= 8)."""
    n = g.order()
    eidx, pairs = _edge_index(n)
    best = None
    for perm in itertools.permutations(range(n)):
        bits = 0
        for i, j in g.edges():
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            bits |= 1 << eidx[(a, b)]
        if best is None or bits < best:
            best = bits
    return best


def permissible_catalog(n):
    """All permissible graphs of order n (1 <= n <= 7) up to isomorphism."""
    if not 1 <= n <= 7:
        raise ValueError("catalog is computed for orders 1..7")
    if n == 7:
        hits = _permissible_order7_bits()
    else:
        eidx, pairs = _edge_index(n)
        hits = []
        for bits in range(1 << len(pairs)):
            g = _graph_from_bits(n, bits, pairs)
            if is_permissible(g):
                hits.append(bits)
        hits = [_graph_from_bits(n, b, pairs) for b in hits]
    reps = {}
    for g in (hits if n != 7 else []):
        reps.setdefault(canonical_form(g), g)
    if n == 7:
        eidx, pairs = _edge_index(7)
        for bits in hits:
            g = _graph_from_bits(7, int(bits), pairs)
            reps.setdefault(canonical_form(g), g)
    return [reps[k] for k in sorted(reps)]


def _order7_masks():
    eidx, pairs = _edge_index(7)
    triple_masks = []
    for i, j, k in itertools.combinations(range(7), 3):
        triple_masks.append((1 << eidx[(i, j)]) | (1 << eidx[(i, k)])
                            | (1 << eidx[(j, k)]))
    return eidx, pairs, triple_masks


def _order7_scan():
    """(no_disjoint_triple_mask, shared_triangle_edge_mask, permissible_mask)
    as boolean numpy arrays over all 2^21 labeled graphs of order 7."""
    eidx, pairs, triple_masks = _order7_masks()
    g = np.arange(1 << 21, dtype=np.uint32)
    has_indep = np.zeros(g.shape, dtype=bool)
    for i, j, k in itertools.combinations(range(7), 3):
        m = np.uint32((1 << eidx[(i, j)]) | (1 << eidx[(i, k)])
                      | (1 << eidx[(j, k)]))
        has_indep |= (g & m) == 0
    shared = np.zeros(g.shape, dtype=bool)
    edge_in_triangle_ok = np.ones(g.shape, dtype=bool)
    for i, j in pairs:
        e_ij = np.uint32(1 << eidx[(i, j)])
        present = (g & e_ij) != 0
        tri_count = np.zeros(g.shape, dtype=np.uint8)
        for k in range(7):
            if k in (i, j):
                continue
            m = e_ij | np.uint32(1 << eidx[tuple(sorted((i, k)))]) \
                | np.uint32(1 << eidx[tuple(sorted((j, k)))])
            tri_count += ((g & m) == m).astype(np.uint8)
        shared |= tri_count >= 2
        edge_in_triangle_ok &= ~present | (tri_count >= 1)
    permissible = ~has_indep & edge_in_triangle_ok & ~shared
    return ~has_indep, shared, permissible


def _permissible_order7_bits():
    _, _, permissible = _order7_scan()
    return np.nonzero(permissible)[0].tolist()


def verify_shared_triangle_forcing_order7():
    """Exhaustive order-7 fact: every labeled 7-vertex graph with no three
    pairwise non-adjacent vertices contains two distinct 3-cycles sharing
    an edge.  Returns (number of no-disjoint-triple graphs, True/False)."""
    no_indep, shared, _ = _order7_scan()
    count = int(no_indep.sum())
    return count, bool(np.all(~no_indep | shared))


# -- isomorphism


def _refine_colors(g):
    n = g.order()
    colors = [g.degree(i) for i in range(n)]
    for _ in range(n):
        sig = []
        for i in range(n):
            nb = sorted(colors[j] for j in range(n) if g.has_edge(i, j))
            sig.append((colors[i], tuple(nb)))
        palette = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def graph_isomorphic(g1, g2, forced=None):
    """Backtracking isomorphism test; returns a mapping list or None.

    forced: optional dict {vertex_of_g1: vertex_of_g2} the isomorphism
    must extend.
    """
    n = g1.order()
    if n != g2.order() or g1.edge_count() != g2.edge_count():
        return None
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None
    mapping = [-1] * n
    used = 0
    forced = dict(forced or {})
    order = sorted(range(n), key=lambda v: (-g1.degree(v), c1[v], v))
    # put forced vertices first
    order.sort(key=lambda v: 0 if v in forced else 1)

    def candidates(v):
        out = []
        for w in range(n):
            if used >> w & 1:
                continue
            if c1[v] != c2[w]:
                continue
            ok = True
            for u in range(n):
                if mapping[u] != -1:
                    if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                        ok = False
                        break
            if ok:
                out.append(w)
        return out

    def backtrack(pos):
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        cands = [forced[v]] if v in forced else candidates(v)
        for w in cands:
            if used >> w & 1:
                continue
            if c1[v] != c2[w]:
                continue
            consistent = True
            for u in range(n):
                if mapping[u] != -1 and \
                        g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    consistent = False
                    break
            if not consistent:
                continue
            mapping[v] = w
            used |= 1 << w
            if backtrack(pos + 1):
                return True
            mapping[v] = -1
            used &= ~(1 << w)
        return False

    if backtrack(0):
        return list(mapping)
    return None


# -- named small graphs


def complete_graph(n):
    return IntersectionGraph.from_edges(
        range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n):
    return IntersectionGraph(tuple(range(n)), [0] * n)


def path_graph(n):
    return IntersectionGraph.from_edges(range(n),
                                        [(i, i + 1) for i in range(n - 1)])


def triangle_plus_isolated():
    return IntersectionGraph.from_edges(range(4), [(0, 1), (0, 2), (1, 2)])


def bowtie_graph():
    return IntersectionGraph.from_edges(
        range(5), [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def two_triangles():
    return IntersectionGraph.from_edges(
        range(6), [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def friendship_graph():
    """Three triangles sharing one vertex (order 7)."""
    return IntersectionGraph.from_edges(
        range(7), [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4),
                   (0, 5), (0, 6), (5, 6)])


def expected_permissible(n):
    """The unique permissible graph of each order 1..6."""
    return {1: empty_graph(1), 2: empty_graph(2), 3: complete_graph(3),
            4: triangle_plus_isolated(), 5: bowtie_graph(),
            6: two_triangles()}[n]
