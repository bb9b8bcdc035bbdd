"""Threshold graphs: recognition with certificates, forbidden 4-vertex
subgraphs, nested split decompositions and dismantling schedules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from .errors import GraphError, NotThresholdError, VerificationError
from .graph import Graph, bits, cycle_graph, find_induced_embedding, induced_subgraph, matching_graph, path_graph

ISOLATED = "isolated"
DOMINATING = "dominating"

PATTERNS = {"C4": cycle_graph(4), "P4": path_graph(4), "2K2": matching_graph(2)}


@dataclass(frozen=True)
class ForbiddenWitness:
    vertices: tuple
    pattern: str

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "pattern": self.pattern}


@dataclass(frozen=True)
class DismantleSchedule:
    rounds: tuple  # of (kind, tuple of vertices)

    @property
    def stage_count(self) -> int:
        return len(self.rounds)

    def round_of(self) -> dict:
        """vertex -> (1-based round index, kind)"""
        return {v: (i, kind) for i, (kind, vs) in enumerate(self.rounds, start=1) for v in vs}

    def to_json(self) -> dict:
        return {"stage_count": self.stage_count, "rounds": [{"kind": k, "vertices": list(vs)} for k, vs in self.rounds]}


@dataclass(frozen=True)
class ThresholdCertificate:
    n: int
    creation_sequence: tuple  # of (vertex, kind), in order of addition
    weights: tuple  # integer weight per vertex
    threshold_value: int

    def replay(self) -> Graph:
        """Rebuild the graph by adding vertices in creation order."""
        seen = set()
        adj = [0] * self.n
        present = 0
        for v, kind in self.creation_sequence:
            if not 0 <= v < self.n or v in seen:
                raise GraphError(f"creation sequence repeats or misplaces vertex {v}")
            if kind not in (ISOLATED, DOMINATING):
                raise GraphError(f"unknown creation kind {kind!r}")
            seen.add(v)
            if kind == DOMINATING:
                adj[v] = present
                for u in bits(present):
                    adj[u] |= 1 << v
            present |= 1 << v
        if len(seen) != self.n:
            raise GraphError("creation sequence does not cover every vertex")
        return Graph(self.n, tuple(adj))

    def weights_realize(self, g: Graph) -> bool:
        """Exact check of ``u ~ v  <=>  w(u) + w(v) > t`` over all pairs."""
        w, t = self.weights, self.threshold_value
        return all(
            g.has_edge(u, v) == (w[u] + w[v] > t) for u in range(g.n) for v in range(u + 1, g.n)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "creation_sequence": [[v, k] for v, k in self.creation_sequence],
            "weights": list(self.weights),
            "threshold": self.threshold_value,
        }


@dataclass(frozen=True)
class NSGDecomposition:
    independent_cells: tuple  # U_1..U_h
    clique_cells: tuple  # V_1..V_h
    level: tuple  # per-vertex level, 1-based

    @property
    def levels(self) -> int:
        return len(self.clique_cells)

    @property
    def shape(self) -> tuple:
        """(m_1..m_h; n_1..n_h)"""
        return tuple(len(u) for u in self.independent_cells), tuple(len(v) for v in self.clique_cells)

    def check(self, g: Graph) -> bool:
        U = [v for cell in self.independent_cells for v in cell]
        V = [v for cell in self.clique_cells for v in cell]
        if sorted(U + V) != list(range(g.n)):
            return False
        if any(g.has_edge(a, b) for i, a in enumerate(U) for b in U[i + 1 :]):
            return False
        if not all(g.has_edge(a, b) for i, a in enumerate(V) for b in V[i + 1 :]):
            return False
        for i, cell in enumerate(self.independent_cells):
            allowed = {v for c in self.clique_cells[: i + 1] for v in c}
            for u in cell:
                if set(g.neighbors(u)) != allowed:
                    return False
        return True


def _peel(g: Graph):
    """Greedy maximal-round dismantling.  Returns (rounds, leftover mask)."""
    alive = (1 << g.n) - 1
    rounds = []
    while alive:
        size = alive.bit_count()
        iso, dom = [], []
        for v in bits(alive):
            d = (g.adj[v] & alive).bit_count()
            if d == 0:
                iso.append(v)
            elif d == size - 1:
                dom.append(v)
        if iso:
            rounds.append((ISOLATED, tuple(iso)))
            removed = iso
        elif dom:
            rounds.append((DOMINATING, tuple(dom)))
            removed = dom
        else:
            break
        for v in removed:
            alive &= ~(1 << v)
    return rounds, alive


def _verified_witness(g: Graph, quad, pattern: str) -> ForbiddenWitness:
    sub = induced_subgraph(g, quad)
    if find_induced_embedding(PATTERNS[pattern], sub) is None:
        raise VerificationError(f"witness {quad} does not induce {pattern}")
    return ForbiddenWitness(tuple(quad), pattern)


def forbidden_subgraph_scan(g: Graph):
    """First 4-subset (lexicographic) inducing C4, P4 or 2K2, or ``None``."""
    if g.n < 4:
        return None
    hit = kernels.first_forbidden_quad(g.to_matrix())
    if hit is None:
        return None
    return _verified_witness(g, *hit)


def _schedule_certificate(n: int, rounds) -> ThresholdCertificate:
    m = len(rounds)
    weights = [0] * n
    creation = []
    for i, (kind, vs) in enumerate(rounds, start=1):
        for v in vs:
            weights[v] = i if kind == ISOLATED else 2 * m - i + 1
    for kind, vs in reversed(rounds):
        creation.extend((v, kind) for v in vs)
    return ThresholdCertificate(n, tuple(creation), tuple(weights), 2 * m)


def recognize_threshold(g: Graph) -> Union[ThresholdCertificate, ForbiddenWitness]:
    rounds, leftover = _peel(g)
    if leftover:
        # the stuck remainder has no isolated or dominating vertex, so it
        # contains a forbidden quadruple
        rest = bits(leftover)
        hit = kernels.first_forbidden_quad(induced_subgraph(g, rest).to_matrix())
        if hit is None:
            raise VerificationError("peeling stalled but no forbidden subgraph found")
        quad, pattern = hit
        return _verified_witness(g, sorted(rest[i] for i in quad), pattern)
    return _schedule_certificate(g.n, rounds)


def is_threshold(g: Graph) -> bool:
    return isinstance(recognize_threshold(g), ThresholdCertificate)


def dismantle_stages(g: Graph) -> DismantleSchedule:
    rounds, leftover = _peel(g)
    if leftover:
        witness = recognize_threshold(g)
        raise NotThresholdError(witness)
    return DismantleSchedule(tuple(rounds))


def nsg_decomposition(cert: ThresholdCertificate) -> NSGDecomposition:
    """Levels from the reversed creation sequence: each level is a clique cell
    (dominating run) followed by an independent cell (isolated run)."""
    cert.replay()  # validates the sequence
    runs = []
    for v, kind in reversed(cert.creation_sequence):
        if runs and runs[-1][0] == kind:
            runs[-1][1].append(v)
        else:
            runs.append((kind, [v]))
    U, V = [], []
    for kind, vs in runs:
        if kind == DOMINATING:
            V.append(tuple(sorted(vs)))
            U.append(())
        else:
            if not V:
                V.append(())
                U.append(())
            U[-1] = tuple(sorted(U[-1] + tuple(vs)))
    level = [0] * cert.n
    for i in range(len(V)):
        for v in U[i] + V[i]:
            level[v] = i + 1
    return NSGDecomposition(tuple(U), tuple(V), tuple(level))


def random_threshold(n: int, seed: int) -> Graph:
    """Random creation sequence: a uniform random vertex order and a fair
    isolated/dominating choice per added vertex."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    kinds = rng.integers(0, 2, size=n)
    adj = [0] * n
    present = 0
    for v, k in zip(order.tolist(), kinds.tolist()):
        if k:
            adj[v] = present
            for u in bits(present):
                adj[u] |= 1 << v
        present |= 1 << v
    return Graph(n, tuple(adj))
