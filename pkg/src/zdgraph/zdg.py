"""Zero-divisor graphs and the ring-side threshold tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import RingError
from .graph import Graph, complete_graph
from .graphio import to_dot, to_graph6
from .rings import FiniteRing, ProductRing, is_field
from .rings.modular import ModularRing, prime_power, valuation
from .threshold import ThresholdCertificate, recognize_threshold


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple  # element text per vertex
    elements: tuple = field(default=(), compare=False, repr=False)

    def vertex_of(self, text: str) -> int:
        return self.labels.index(text)

    def to_json(self) -> dict:
        return {"graph6": to_graph6(self.graph), "labels": list(self.labels)}

    def to_dot(self) -> str:
        return to_dot(self.graph, self.labels, name="Gamma")


def zero_divisors(R: FiniteRing, cap: Optional[int] = None) -> list:
    zero = R.zero
    return [a for a in R.elements(cap) if a != zero and not R.is_unit(a, cap)]


def zero_divisor_graph(R: FiniteRing, cap: Optional[int] = None) -> LabeledGraph:
    """Vertices: the zero-divisors in enumeration order; a ~ b iff a != b and ab = 0."""
    zds = zero_divisors(R, cap)
    if zds:
        m = R.zero_product_matrix(zds)
        m[range(len(zds)), range(len(zds))] = False
        g = Graph.from_matrix(m)
    else:
        g = Graph(0, ())
    return LabeledGraph(g, tuple(R.to_text(a) for a in zds), tuple(zds))


# -- necessary conditions on annihilators ------------------------------------------


@dataclass
class ConditionResult:
    """First violating pair for one condition.

    ``literal`` is the first pair (in enumeration order) violating the
    condition as stated.  ``realized`` is the first pair for which the
    violation comes with four distinct vertices inducing C4, P4 or 2K2,
    i.e. a violation that genuinely contradicts thresholdness.
    """

    name: str
    literal: Optional[dict] = None
    realized: Optional[dict] = None
    hypothesis_pairs: int = 0

    def to_json(self) -> dict:
        return {
            "condition": self.name,
            "literal_violation": self.literal,
            "violation": self.realized,
            "hypothesis_pairs": self.hypothesis_pairs,
        }


@dataclass
class ConditionReport:
    ring: dict
    vertex_count: int
    conditions: dict  # name -> ConditionResult

    @property
    def passed(self) -> bool:
        """No realized violation of any condition."""
        return all(c.realized is None for c in self.conditions.values())

    @property
    def literally_passed(self) -> bool:
        return all(c.literal is None for c in self.conditions.values())

    def violated(self) -> list:
        return [name for name, c in self.conditions.items() if c.realized is not None]

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "vertex_count": self.vertex_count,
            "passed": self.passed,
            "literally_passed": self.literally_passed,
            "conditions": [c.to_json() for c in self.conditions.values()],
        }


def _cross_witness(R, x, y, ann_x, ann_y, order):
    """Distinct a in Ann(x)\\Ann(y), b in Ann(y)\\Ann(x), both outside {0, x, y}."""
    bad = {R.zero, x, y}
    a = min((e for e in ann_x - ann_y if e not in bad), key=order.__getitem__, default=None)
    b = min((e for e in ann_y - ann_x if e not in bad), key=order.__getitem__, default=None)
    if a is None or b is None:
        return None
    return a, b


def check_pair(R: FiniteRing, x, y, anns=None, order=None) -> dict:
    """Evaluate the four annihilator conditions on one pair of zero-divisors.

    Returns ``{name: (literal_violation, realizing_witness_or_None)}``.
    """
    anns = anns if anns is not None else {}
    if order is None:
        order = {e: i for i, e in enumerate(R.elements())}
    zero = R.zero
    ann_x = anns.get(x) or frozenset(e for e in R.elements() if R.mul(x, e) == zero)
    ann_y = anns.get(y) or frozenset(e for e in R.elements() if R.mul(y, e) == zero)
    out = {}
    cross = None
    meet_trivial = ann_x & ann_y == {zero}
    incomparable = not (ann_x <= ann_y or ann_y <= ann_x)
    if meet_trivial or incomparable:
        cross = _cross_witness(R, x, y, ann_x, ann_y, order)
    out["a"] = (meet_trivial, cross if meet_trivial else None)
    out["b"] = (incomparable, cross if incomparable else None)

    out["c"] = (False, None)
    out["d"] = (False, None)
    for small, big, s, t in ((ann_x, ann_y, x, y), (ann_y, ann_x, y, x)):
        if not (small < big and R.mul(s, t) != zero):
            continue
        nz = sorted((e for e in small if e != zero), key=order.__getitem__)
        for a, b in combinations(nz, 2):
            if R.mul(a, b) != zero:
                out["c"] = (True, (a, b))
                break
        for a in sorted(small, key=order.__getitem__):
            for b in sorted(big - small, key=order.__getitem__):
                if R.mul(a, b) != zero:
                    out["d"] = (True, (a, b))
                    break
            else:
                continue
            break
        out["hypothesis"] = True
    return out


def ann_threshold_conditions(R: FiniteRing, cap: Optional[int] = None) -> ConditionReport:
    """Scan all pairs of distinct zero-divisors, in enumeration order.

    (a) Ann(x) & Ann(y) != {0}; (b) the annihilators are comparable;
    (c)/(d) under Ann(x) < Ann(y) and xy != 0: the nonzero elements of
    Ann(x) are pairwise annihilating, and Ann(x) * (Ann(y) - Ann(x)) = 0.
    """
    elems = list(R.elements(cap))
    zero = R.zero
    zds = [a for a in elems if a != zero and not R.is_unit(a, cap)]
    anns = {x: frozenset(e for e in elems if R.mul(x, e) == zero) for x in zds}
    order = {e: i for i, e in enumerate(elems)}
    results = {name: ConditionResult(name) for name in "abcd"}
    text = R.to_text
    for x, y in combinations(zds, 2):
        verdict = check_pair(R, x, y, anns, order)
        hyp = verdict.pop("hypothesis", False)
        for name, (violated, witness) in verdict.items():
            res = results[name]
            if name in "cd" and hyp:
                res.hypothesis_pairs += 1
            if not violated:
                continue
            entry = {"x": text(x), "y": text(y)}
            if res.literal is None:
                res.literal = entry
            if witness is not None and res.realized is None:
                res.realized = dict(entry, a=text(witness[0]), b=text(witness[1]))
    return ConditionReport(R.descriptor(), len(zds), results)


# -- classification tests ------------------------------------------------------------


@dataclass(frozen=True)
class NonlocalVerdict:
    graph_threshold: bool
    condition_holds: bool
    star_leaves: Optional[int]  # q - 1 when Gamma is a star K_{1, q-1}

    @property
    def agree(self) -> bool:
        return self.graph_threshold == self.condition_holds

    def to_json(self) -> dict:
        return {
            "graph_threshold": self.graph_threshold,
            "condition_holds": self.condition_holds,
            "agree": self.agree,
            "star_leaves": self.star_leaves,
        }


def is_star(g: Graph) -> bool:
    """g is K_{1, n-1} for some n >= 2."""
    if g.n < 2 or g.edge_count != g.n - 1:
        return False
    return any(g.degree(v) == g.n - 1 for v in range(g.n))


def f2_times_field(R: ProductRing, cap: Optional[int] = None) -> bool:
    """Exactly two factors, both fields, one of them with two elements."""
    if len(R.factors) != 2 or not all(is_field(f, cap) for f in R.factors):
        return False
    return any(f.order == 2 for f in R.factors)


def classify_nonlocal_threshold(R: ProductRing, cap: Optional[int] = None) -> NonlocalVerdict:
    if not isinstance(R, ProductRing) or len(R.factors) < 2 or any(f.order < 2 for f in R.factors):
        raise RingError("expected a product of at least two nontrivial rings")
    lg = zero_divisor_graph(R, cap)
    graph_threshold = isinstance(recognize_threshold(lg.graph), ThresholdCertificate)
    cond = f2_times_field(R, cap)
    leaves = lg.graph.n - 1 if is_star(lg.graph) else None
    return NonlocalVerdict(graph_threshold, cond, leaves)


def is_complete_graph_check(R: FiniteRing, generators=(), cap: Optional[int] = None) -> bool:
    """Gamma(R) is complete; ``generators`` are checked to square to zero
    and to annihilate each other first."""
    zero = R.zero
    for g, h in combinations(list(generators), 2):
        if R.mul(g, h) != zero:
            raise RingError("generators do not annihilate each other")
    for g in generators:
        if R.mul(g, g) != zero:
            raise RingError("generators must square to zero")
    lg = zero_divisor_graph(R, cap)
    return lg.graph == complete_graph(lg.graph.n)


@dataclass(frozen=True)
class PrincipalLocalVerdict:
    threshold: bool
    valuation_weights_agree: bool
    certificate: Optional[ThresholdCertificate]
    graph: LabeledGraph


def principal_local_threshold_check(R: ModularRing, cap: Optional[int] = None) -> PrincipalLocalVerdict:
    """For Z/p^k: recognise Gamma(R) and check it against the valuation weights.

    With w(a) = v_p(a), ab = 0 iff w(a) + w(b) >= k, i.e. the weights realise
    the graph with strict threshold k - 1.
    """
    if not isinstance(R, ModularRing):
        raise RingError("expected Z/n")
    pk = prime_power(R.modulus)
    if pk is None:
        raise RingError(f"{R.modulus} is not a prime power")
    p, k = pk
    lg = zero_divisor_graph(R, cap)
    cert = recognize_threshold(lg.graph)
    weights = [valuation(a, p) for a in lg.elements]
    g = lg.graph
    agree = all(
        g.has_edge(u, v) == (weights[u] + weights[v] > k - 1) for u in range(g.n) for v in range(u + 1, g.n)
    )
    ok = isinstance(cert, ThresholdCertificate)
    return PrincipalLocalVerdict(ok, agree, cert if ok else None, lg)
