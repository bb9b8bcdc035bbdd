"""Finite simple graphs, induced subgraphs and intersection representations.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one neighbour
bitmask per vertex, so the common set operations (common neighbours,
"adjacent to all of U and none of V") are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .errors import CapExceeded, GraphError

VertexMap = tuple  # pattern vertex i -> host vertex VertexMap[i]

DEFAULT_SEARCH_CAP = 10


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric for pair ({v}, {u})")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        m = np.asarray(matrix, dtype=bool)
        n = m.shape[0]
        if m.shape != (n, n):
            raise GraphError("adjacency matrix must be square")
        if n and m.diagonal().any():
            raise GraphError(f"self-loop at vertex {int(np.flatnonzero(m.diagonal())[0])}")
        if not (m == m.T).all():
            raise GraphError("adjacency matrix is not symmetric")
        adj = tuple(sum(1 << int(j) for j in np.flatnonzero(m[i])) for i in range(n))
        return cls(n, adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            m[u, v] = m[v, u] = True
        return m

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(k: int) -> Graph:
    """kK2: vertices 2i and 2i+1 joined."""
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def graph_from_index(n: int, index: int) -> Graph:
    """The labelled graph whose lexicographic pair list is encoded by the bits of ``index``."""
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if index >> k & 1])


def all_labeled_graphs(n: int):
    for index in range(1 << (n * (n - 1) // 2)):
        yield graph_from_index(n, index)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, vs) -> Graph:
    vs = list(vs)
    if len(set(vs)) != len(vs):
        raise GraphError(f"duplicate vertices in {vs}")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    adj = []
    for v in vs:
        mask = 0
        for u in bits(g.adj[v]):
            if u in pos:
                mask |= 1 << pos[u]
        adj.append(mask)
    return Graph(len(vs), tuple(adj))


def find_induced_embedding(pattern: Graph, host: Graph, cap: int = DEFAULT_SEARCH_CAP) -> Optional[VertexMap]:
    """First injective map realising ``pattern`` as an induced subgraph of ``host``.

    Pattern vertices are placed in order ``0, 1, ...``; host candidates are
    tried in ascending order, so the returned map is deterministic.
    """
    if pattern.n > cap:
        raise CapExceeded(f"pattern has {pattern.n} vertices; search cap is {cap}")
    k = pattern.n
    if k > host.n:
        return None
    full = (1 << host.n) - 1
    phi = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = full & ~used
        for j in range(i):
            h = host.adj[phi[j]]
            cand &= h if pattern.adj[i] >> j & 1 else ~h
            if not cand:
                return False
        while cand:
            low = cand & -cand
            phi[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(phi) if extend(0, 0) else None


# -- intersection representations ------------------------------------------------


@dataclass(frozen=True)
class SetFamily:
    ground_size: int
    sets: tuple  # of frozenset

    @property
    def sentinel(self) -> int:
        """The reserved point contained in no set (always the last point)."""
        return self.ground_size - 1

    def masks(self) -> list:
        return [sum(1 << x for x in s) for s in self.sets]


def intersection_graph(fam: SetFamily) -> Graph:
    masks = fam.masks()
    n = len(masks)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if masks[i] & masks[j]:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _degenerate_parts(h: Graph):
    """Split vertices into isolated vertices, isolated edges and the rest."""
    isolated, iso_edges, core = [], [], []
    for v in range(h.n):
        d = h.degree(v)
        if d == 0:
            isolated.append(v)
        elif d == 1:
            (u,) = h.neighbors(v)
            if h.degree(u) == 1:
                if v < u:
                    iso_edges.append((v, u))
                continue
            core.append(v)
        else:
            core.append(v)
    return isolated, iso_edges, core


def intersection_representation(h: Graph) -> SetFamily:
    """Distinct sets ``A_v`` with ``A_u & A_v`` nonempty exactly when ``u ~ v``.

    Ground points, in order: the edges among non-degenerate vertices
    (lexicographic), one fresh point per isolated vertex, two per isolated
    edge (``{q}`` and ``{q, r}``), and a final sentinel point in no set.
    """
    isolated, iso_edges, core = _degenerate_parts(h)
    core_set = set(core)
    sets = [set() for _ in range(h.n)]
    point = 0
    for u, v in h.edges():
        if u in core_set:
            sets[u].add(point)
            sets[v].add(point)
            point += 1
    for v in isolated:
        sets[v].add(point)
        point += 1
    for u, v in iso_edges:
        sets[u].add(point)
        sets[v].update((point, point + 1))
        point += 2
    return SetFamily(point + 1, tuple(frozenset(s) for s in sets))


# -- random graphs and the extension property ------------------------------------


def random_graph(n: int, seed: int) -> Graph:
    """G(n, 1/2): one fair bit per pair, pairs in lexicographic order, drawn
    from ``numpy.random.default_rng(seed)``."""
    if n < 2:
        return empty_graph(max(n, 0))
    rng = np.random.default_rng(seed)
    flips = rng.integers(0, 2, size=n * (n - 1) // 2)
    pairs = combinations(range(n), 2)
    return Graph.from_edges(n, [p for p, f in zip(pairs, flips) if f])


@dataclass(frozen=True)
class ExtensionReport:
    passed: bool
    s: int
    t: int
    checked: int
    witness: Optional[tuple] = None  # (U, V) lacking a extension vertex

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "s": self.s,
            "t": self.t,
            "checked": self.checked,
            "witness": None if self.witness is None else {"U": list(self.witness[0]), "V": list(self.witness[1])},
        }


def extension_property_check(g: Graph, s: int, t: int) -> ExtensionReport:
    """Check that every disjoint (U, V) with |U| = s, |V| = t has a vertex
    outside U and V joined to all of U and none of V."""
    if s < 0 or t < 0 or s + t > g.n:
        raise GraphError(f"need 0 <= s, t and s + t <= n (got s={s}, t={t}, n={g.n})")
    full = (1 << g.n) - 1
    checked = 0
    for U in combinations(range(g.n), s):
        common = full
        umask = 0
        for u in U:
            common &= g.adj[u]
            umask |= 1 << u
        rest = [v for v in range(g.n) if not umask >> v & 1]
        for V in combinations(rest, t):
            cand = common
            for v in V:
                cand &= ~g.adj[v] & ~(1 << v)
            checked += 1
            if not cand:
                return ExtensionReport(False, s, t, checked, (U, V))
    return ExtensionReport(True, s, t, checked)
