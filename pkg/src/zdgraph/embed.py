"""Constructive embeddings of graphs into zero-divisor graphs, and an
independent verifier for them.

Four backends: Boolean rings (via intersection representations of the
complement), squarefree Z_n (the same set family through a prime map),
local monomial quotients, and Z/p^(2m+1) for threshold graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from sympy import isprime, nextprime
from sympy import prime as nth_prime

from .errors import ElementError, RingError, VerificationError
from .graph import Graph, complement, intersection_representation
from .rings import BooleanRing, ModularRing, get_cap, graph_quotient_ring, make_ring
from .threshold import ISOLATED, dismantle_stages

BACKENDS = ("boolean", "zn", "local", "threshold")


@dataclass(frozen=True)
class Embedding:
    backend: str
    ring: dict  # ring descriptor
    vertex_map: tuple  # element text per graph vertex
    witnesses: tuple = ()  # per vertex: text of a nonzero b with image * b = 0
    info: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out = {
            "backend": self.backend,
            "ring": self.ring,
            "map": {str(v): t for v, t in enumerate(self.vertex_map)},
        }
        if self.witnesses:
            out["witnesses"] = {str(v): t for v, t in enumerate(self.witnesses)}
        if self.info:
            out["info"] = self.info
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Embedding":
        n = len(data["map"])
        vmap = tuple(data["map"][str(v)] for v in range(n))
        wit = tuple(data["witnesses"][str(v)] for v in range(n)) if "witnesses" in data else ()
        return cls(data["backend"], data["ring"], vmap, wit, data.get("info", {}))


@dataclass
class VerificationReport:
    passed: bool
    injective: bool
    zero_divisors: bool
    adjacency: bool
    ring_order: int
    failures: list
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "checks": {"injective": self.injective, "zero_divisors": self.zero_divisors, "adjacency": self.adjacency},
            "ring_order": self.ring_order,
            "failures": self.failures,
        }


def verify_embedding(g: Graph, emb: Embedding, cap: Optional[int] = None) -> VerificationReport:
    """Check injectivity, zero-divisor membership and ``u ~ v <=> image(u) * image(v) = 0``.

    Membership uses ``is_unit`` when the ring is within the enumeration cap
    and the embedding's annihilating witnesses otherwise.
    """
    start = time.perf_counter()
    R = make_ring(emb.ring)
    failures = []
    if len(emb.vertex_map) != g.n:
        raise VerificationError(f"map covers {len(emb.vertex_map)} vertices, graph has {g.n}")
    try:
        images = [R.from_text(t) for t in emb.vertex_map]
    except ElementError as exc:
        raise VerificationError(f"unparseable image: {exc}") from None

    injective = len(set(images)) == len(images)
    if not injective:
        seen = {}
        for v, a in enumerate(images):
            if a in seen:
                failures.append({"check": "injective", "vertices": [seen[a], v], "element": emb.vertex_map[v]})
            seen.setdefault(a, v)

    zero = R.zero
    small = R.order <= get_cap(cap)
    zd_ok = True
    for v, a in enumerate(images):
        if a == zero:
            ok = False
        elif small:
            ok = not R.is_unit(a, cap)
        elif emb.witnesses:
            b = R.from_text(emb.witnesses[v])
            ok = b != zero and R.mul(a, b) == zero
        else:
            ok = False
        if not ok:
            zd_ok = False
            failures.append({"check": "zero_divisor", "vertex": v, "element": emb.vertex_map[v]})

    adj_ok = True
    for u, v in combinations(range(g.n), 2):
        product_zero = R.mul(images[u], images[v]) == zero
        if product_zero != g.has_edge(u, v):
            adj_ok = False
            failures.append(
                {
                    "check": "adjacency",
                    "pair": [u, v],
                    "elements": [emb.vertex_map[u], emb.vertex_map[v]],
                    "edge": g.has_edge(u, v),
                    "product_zero": product_zero,
                }
            )
    return VerificationReport(
        injective and zd_ok and adj_ok, injective, zd_ok, adj_ok, R.order, failures, time.perf_counter() - start
    )


def _checked(g: Graph, emb: Embedding) -> Embedding:
    report = verify_embedding(g, emb)
    if not report.passed:
        raise VerificationError(f"{emb.backend} embedding failed verification", report)
    return emb


def embed_boolean(g: Graph, verify: bool = True) -> Embedding:
    """v -> A_v from an intersection representation of the complement, so
    u ~ v in g iff A_u and A_v are disjoint."""
    fam = intersection_representation(complement(g))
    R = BooleanRing(fam.ground_size)
    sentinel = R.to_text(1 << fam.sentinel)
    emb = Embedding(
        "boolean",
        R.descriptor(),
        tuple(R.to_text(m) for m in fam.masks()),
        (sentinel,) * g.n,
        {"ground_size": fam.ground_size},
    )
    return _checked(g, emb) if verify else emb


def first_primes(m: int) -> list:
    return [int(nth_prime(i)) for i in range(1, m + 1)]


def embed_zn(g: Graph, verify: bool = True) -> Embedding:
    """Point i of the Boolean ground set -> the (i+1)-th prime; v -> the
    product of the primes outside A_v, in Z_n with n the product of all."""
    fam = intersection_representation(complement(g))
    primes = first_primes(fam.ground_size)
    n = 1
    for p in primes:
        n *= p
    images, witnesses = [], []
    for s in fam.sets:
        inside, outside = 1, 1
        for i, p in enumerate(primes):
            if i in s:
                inside *= p
            else:
                outside *= p
        images.append(str(outside))
        witnesses.append(str(inside))
    emb = Embedding(
        "zn",
        ModularRing(n).descriptor(),
        tuple(images),
        tuple(witnesses),
        {"ground_size": fam.ground_size, "primes": primes},
    )
    return _checked(g, emb) if verify else emb


def embed_local(g: Graph, p: int = 2, verify: bool = True) -> Embedding:
    """v_i -> x_i in F_p[x_1..x_n] / (degree 3, x_i x_j for edges)."""
    R = graph_quotient_ring(g, p)
    images = [R.variable(i) for i in range(g.n)]
    witnesses = [R.mul(x, x) for x in images]  # x_i^2 survives, x_i^3 = 0
    emb = Embedding(
        "local",
        R.descriptor(),
        tuple(R.to_text(a) for a in images),
        tuple(R.to_text(b) for b in witnesses),
        {"p": p, "dimension": R.dim},
    )
    return _checked(g, emb) if verify else emb


def smallest_prime_above(n: int) -> int:
    return int(nextprime(n))


def embed_threshold(g: Graph, p: Optional[int] = None, verify: bool = True) -> Embedding:
    """Isolated round i -> u * p^i, dominating round i -> u * p^(2m-i+1) in
    Z/p^(2m+1), with unit multipliers 1, 2, ... per round in vertex order.

    Raises :class:`NotThresholdError` (carrying the witness) otherwise.
    """
    schedule = dismantle_stages(g)
    m = schedule.stage_count
    if p is None:
        p = smallest_prime_above(g.n)
    elif not isprime(p):
        raise RingError(f"{p} is not prime")
    modulus = p ** (2 * m + 1)
    images = [0] * g.n
    exponents = [0] * g.n
    for i, (kind, vs) in enumerate(schedule.rounds, start=1):
        e = i if kind == ISOLATED else 2 * m - i + 1
        if len(vs) > p - 1:
            raise RingError(f"round {i} has {len(vs)} vertices but only {p - 1} units of valuation {e}")
        for u, v in enumerate(vs, start=1):
            images[v] = u * p**e
            exponents[v] = e
    emb = Embedding(
        "threshold",
        ModularRing(modulus).descriptor(),
        tuple(map(str, images)),
        tuple(str(p ** (2 * m + 1 - e)) for e in exponents),
        {"p": p, "stages": m, "exponents": exponents, "schedule": schedule.to_json()},
    )
    return _checked(g, emb) if verify else emb


def embed(g: Graph, backend: str, prime: Optional[int] = None, verify: bool = True) -> Embedding:
    if backend == "boolean":
        return embed_boolean(g, verify)
    if backend == "zn":
        return embed_zn(g, verify)
    if backend == "local":
        return embed_local(g, prime or 2, verify)
    if backend == "threshold":
        return embed_threshold(g, prime, verify)
    raise ValueError(f"unknown backend {backend!r}")


# -- size bounds -----------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    p_actual: int
    nominal_count: int  # m + a + b on the complement
    ring_order: int
    edges: int
    isolated_vertices: int
    isolated_edges: int

    def to_json(self) -> dict:
        return {
            "p_actual": self.p_actual,
            "paper_count": self.nominal_count,
            "ring_order": self.ring_order,
            "complement": {
                "edges": self.edges,
                "isolated_vertices": self.isolated_vertices,
                "isolated_edges": self.isolated_edges,
            },
        }


def size_bound(g: Graph) -> BoundReport:
    """Ground-set size actually used by the Boolean backend against the
    count m + a + b (edges, isolated vertices, isolated edges) of the
    complement."""
    h = complement(g)
    fam = intersection_representation(h)
    a = sum(1 for v in range(h.n) if h.degree(v) == 0)
    b = sum(1 for u, v in h.edges() if h.degree(u) == 1 and h.degree(v) == 1)
    m = h.edge_count
    return BoundReport(fam.ground_size, m + a + b, 2**fam.ground_size, m, a, b)
