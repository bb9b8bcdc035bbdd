"""Red/green/blue colourings of complete graphs realised in A x A for a
Boolean ring A: red pairs multiply to zero componentwise, green pairs have
zero dot product but nonzero componentwise product, blue pairs have
nonzero dot product."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CapExceeded, GraphError, ParseError, VerificationError
from .graph import Graph
from .rings import BooleanRing, FiniteRing, ProductRing, get_cap
from .zdg import LabeledGraph

RED, GREEN, BLUE = "red", "green", "blue"
COLORS = (RED, GREEN, BLUE)
_SHORT = {"r": RED, "g": GREEN, "b": BLUE}


@dataclass(frozen=True)
class ColoredCompleteGraph:
    n: int
    colors: tuple  # colour of each pair (u, v), u < v, lexicographic order

    def __post_init__(self):
        if len(self.colors) != self.n * (self.n - 1) // 2:
            raise GraphError("one colour per unordered pair required")
        for c in self.colors:
            if c not in COLORS:
                raise GraphError(f"unknown colour {c!r}")

    @classmethod
    def from_dict(cls, n: int, colors: dict) -> "ColoredCompleteGraph":
        out = []
        for u, v in itertools.combinations(range(n), 2):
            c = colors.get((u, v), colors.get((v, u)))
            if c is None:
                raise GraphError(f"pair ({u}, {v}) has no colour")
            out.append(_SHORT.get(c, c))
        return cls(n, tuple(out))

    def pairs(self):
        return itertools.combinations(range(self.n), 2)

    def color(self, u: int, v: int) -> str:
        if u > v:
            u, v = v, u
        # index of (u, v) in lexicographic pair order
        k = u * (2 * self.n - u - 1) // 2 + (v - u - 1)
        return self.colors[k]

    def graph_of(self, *colors) -> Graph:
        return Graph.from_edges(self.n, [p for p, c in zip(self.pairs(), self.colors) if c in colors])

    def to_text(self) -> str:
        rows = [f"n={self.n}"] + [f"{u} {v} {c[0]}" for (u, v), c in zip(self.pairs(), self.colors)]
        return "\n".join(rows)


def parse_colored(text: str) -> ColoredCompleteGraph:
    """Edge list with a third column r/g/b; every pair must be coloured."""
    n = None
    colors = {}
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if first and line.startswith("n="):
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {line!r}", line=lineno) from None
            first = False
            continue
        first = False
        fields = line.split()
        if len(fields) != 3 or fields[2] not in _SHORT:
            raise ParseError("expected 'u v c' with c in r/g/b", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("non-integer vertex", line=lineno) from None
        if u == v or u < 0 or v < 0:
            raise ParseError("invalid pair", line=lineno)
        colors[(min(u, v), max(u, v))] = _SHORT[fields[2]]
    if n is None:
        n = max((v for _, v in colors), default=-1) + 1
    if any(v >= n for _, v in colors):
        raise ParseError(f"vertex out of range for n={n}")
    return ColoredCompleteGraph.from_dict(n, colors)


def random_coloring(n: int, seed: int) -> ColoredCompleteGraph:
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, 3, size=n * (n - 1) // 2)
    return ColoredCompleteGraph(n, tuple(COLORS[i] for i in picks.tolist()))


def all_colorings(n: int):
    for combo in itertools.product(COLORS, repeat=n * (n - 1) // 2):
        yield ColoredCompleteGraph(n, combo)


def augment_coloring(x: ColoredCompleteGraph) -> ColoredCompleteGraph:
    """Append two vertices (three when n <= 1) joined to everything by green
    edges, so the green graph has minimum degree >= 2."""
    extra = 3 if x.n <= 1 else 2
    n = x.n + extra
    colors = []
    for u, v in itertools.combinations(range(n), 2):
        colors.append(x.color(u, v) if v < x.n else GREEN)
    return ColoredCompleteGraph(n, tuple(colors))


@dataclass(frozen=True)
class DotEmbedding:
    ring: dict  # descriptor of the Boolean ring A on P
    edges: tuple  # P: the blue-or-green pairs of the augmented colouring
    pairs: tuple  # vertex -> (S mask, T mask) over P
    original_n: int
    augmented: ColoredCompleteGraph

    @property
    def added(self) -> tuple:
        return tuple(range(self.original_n, self.augmented.n))

    def theta(self, v: int):
        return self.pairs[v]

    def to_json(self) -> dict:
        A = BooleanRing(len(self.edges))
        return {
            "ring": self.ring,
            "edges": {str(i): list(e) for i, e in enumerate(self.edges)},
            "pairs": {str(v): {"S": A.to_text(s), "T": A.to_text(t)} for v, (s, t) in enumerate(self.pairs)},
            "original_n": self.original_n,
            "added": list(self.added),
            "added_colors": GREEN,
        }


def build_dot_embedding(x: ColoredCompleteGraph) -> DotEmbedding:
    """S(v): green edges at v; T(v): blue or green edges at v."""
    aug = augment_coloring(x)
    P = [p for p, c in zip(aug.pairs(), aug.colors) if c != RED]
    S = [0] * aug.n
    T = [0] * aug.n
    for i, (u, v) in enumerate(P):
        bit = 1 << i
        T[u] |= bit
        T[v] |= bit
        if aug.color(u, v) == GREEN:
            S[u] |= bit
            S[v] |= bit
    pairs = tuple(zip(S, T))
    if len(set(pairs)) != len(pairs):
        raise VerificationError("theta is not injective")
    return DotEmbedding(BooleanRing(len(P)).descriptor(), tuple(P), pairs, x.n, aug)


def componentwise_product(R: FiniteRing, a, b) -> tuple:
    if len(a) != len(b):
        raise ValueError("tuples must have equal length")
    return tuple(R.mul(x, y) for x, y in zip(a, b))


def dot_product(R: FiniteRing, a, b):
    if len(a) != len(b):
        raise ValueError("tuples must have equal length")
    out = R.zero
    for x, y in zip(a, b):
        out = R.add(out, R.mul(x, y))
    return out


def dot_product_graph(R: FiniteRing, m: int, cap: Optional[int] = None) -> LabeledGraph:
    """Nonzero tuples of R^m, adjacent when distinct with zero dot product."""
    limit = get_cap(cap)
    if R.order**m > limit:
        raise CapExceeded(f"{R.order}^{m} tuples exceed cap {limit}")
    elems = list(R.elements(cap))
    zero = (R.zero,) * m
    verts = [t for t in itertools.product(elems, repeat=m) if t != zero]
    k = len(verts)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if dot_product(R, verts[i], verts[j]) == R.zero:
                adj[i, j] = adj[j, i] = True
    power = ProductRing([R] * m)
    return LabeledGraph(Graph.from_matrix(adj), tuple(power.to_text(t) for t in verts), tuple(verts))


@dataclass
class TrichotomyReport:
    passed: bool
    checked: int
    counts: dict
    failures: list

    def to_json(self) -> dict:
        return {"pass": self.passed, "checked": self.checked, "counts": self.counts, "failures": self.failures}


def verify_trichotomy(x: ColoredCompleteGraph, emb: DotEmbedding) -> TrichotomyReport:
    """Red: theta(v) * theta(w) = 0.  Green: * nonzero, dot zero.  Blue: dot nonzero."""
    A = BooleanRing(len(emb.edges))
    A2 = ProductRing([A, A])
    zero2 = A2.zero
    failures = []
    counts = {c: 0 for c in COLORS}
    for u, v in x.pairs():
        c = x.color(u, v)
        counts[c] += 1
        a, b = emb.pairs[u], emb.pairs[v]
        star_zero = componentwise_product(A, a, b) == zero2
        dot_zero = dot_product(A, a, b) == A.zero
        ok = star_zero if c == RED else (not star_zero and dot_zero) if c == GREEN else not dot_zero
        if not ok:
            failures.append(
                {
                    "pair": [u, v],
                    "color": c,
                    "theta": [A2.to_text(a), A2.to_text(b)],
                    "componentwise_zero": star_zero,
                    "dot_zero": dot_zero,
                }
            )
    return TrichotomyReport(not failures, sum(counts.values()), counts, failures)
