from __future__ import annotations

import itertools
from typing import Optional, Sequence

from ..errors import ElementError, RingAxiomError, RingError
from .base import FiniteRing, format_lincomb, parse_lincomb


class StructureConstantRing(FiniteRing):
    """A ring given by additive generators and their pairwise products.

    The additive group is the direct sum of cyclic groups Z/orders[i]; an
    element is its coefficient tuple.  ``table[i][j]`` is the coefficient
    vector of ``g_i * g_j`` and multiplication extends bilinearly.
    Commutativity, associativity, the unity and well-definedness modulo the
    additive orders are checked on generators at construction; bilinearity
    carries them to the whole ring.
    """

    kind = "structure"

    def __init__(self, generators: Sequence[str], orders: Sequence[int], table, one: Optional[Sequence[int]] = None):
        self.generators = tuple(generators)
        self.orders = tuple(int(o) for o in orders)
        d = len(self.generators)
        if len(self.orders) != d or d == 0:
            raise RingError("need one additive order per generator, and at least one generator")
        if any(o < 2 for o in self.orders):
            raise RingError("additive orders must be >= 2")
        if len(set(self.generators)) != d:
            raise RingError("generator names must be distinct")
        if len(table) != d or any(len(row) != d for row in table):
            raise RingError(f"multiplication table must be {d}x{d}")
        self.table = tuple(tuple(self._reduce(vec) for vec in row) for row in table)
        if one is None:
            one = [1 if g == "1" else 0 for g in self.generators] if "1" in self.generators else [1] + [0] * (d - 1)
        self._one = self._reduce(one)
        self._check_axioms()

    def _reduce(self, vec):
        if len(vec) != len(self.orders):
            raise RingError(f"vector {vec!r} has the wrong length")
        return tuple(int(c) % o for c, o in zip(vec, self.orders))

    def _gen(self, i):
        return tuple(1 if j == i else 0 for j in range(len(self.generators)))

    def _check_axioms(self):
        d = len(self.generators)
        names = self.generators
        for i, j in itertools.combinations_with_replacement(range(d), 2):
            if self.table[i][j] != self.table[j][i]:
                raise RingAxiomError("table is not commutative", witness=(names[i], names[j]))
        for i in range(d):
            for j in range(d):
                if self.scalar(self.orders[i], self.table[i][j]) != self.zero:
                    raise RingAxiomError(
                        "product is incompatible with the additive order of a generator", witness=(names[i], names[j])
                    )
        for i, j, k in itertools.product(range(d), repeat=3):
            left = self.mul(self.table[i][j], self._gen(k))
            right = self.mul(self._gen(i), self.table[j][k])
            if left != right:
                raise RingAxiomError("table is not associative", witness=(names[i], names[j], names[k]))
        for i in range(d):
            if self.mul(self._one, self._gen(i)) != self._gen(i):
                raise RingAxiomError("declared unity does not act as identity", witness=names[i])

    @property
    def order(self):
        out = 1
        for o in self.orders:
            out *= o
        return out

    @property
    def zero(self):
        return (0,) * len(self.orders)

    @property
    def one(self):
        return self._one

    def add(self, a, b):
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def neg(self, a):
        return tuple(-x % o for x, o in zip(a, self.orders))

    def mul(self, a, b):
        d = len(self.orders)
        out = [0] * d
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.table[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for t, v in enumerate(row[j]):
                    if v:
                        out[t] += c * v
        return tuple(v % o for v, o in zip(out, self.orders))

    def _iter_elements(self):
        return itertools.product(*(range(o) for o in self.orders))

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == len(self.orders)
            and all(isinstance(c, int) and 0 <= c < o for c, o in zip(a, self.orders))
        )

    def _const_index(self):
        return self.generators.index("1") if "1" in self.generators else None

    def to_text(self, a):
        return format_lincomb(a, self.generators, self._const_index())

    def from_text(self, text):
        basis = {g: self._gen(i) for i, g in enumerate(self.generators) if g != "1"}
        try:
            return parse_lincomb(self, text, basis)
        except ElementError:
            raise
        except (ValueError, AttributeError) as exc:
            raise ElementError(f"cannot parse {text!r}: {exc}") from None

    def descriptor(self):
        return {
            "kind": self.kind,
            "generators": list(self.generators),
            "orders": list(self.orders),
            "table": [[list(v) for v in row] for row in self.table],
            "one": list(self._one),
        }

    def __repr__(self):
        return f"StructureConstantRing(generators={list(self.generators)}, orders={list(self.orders)})"


def localex_ring() -> StructureConstantRing:
    """Z_4[x,y,z] / (x^2-2, y^2-2, z^2, 2x, 2y, 2z, xy, xz, yz-2).

    Additive basis 1 (order 4) and x, y, z (order 2): 32 elements.
    """
    one, x, y, z = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    two, zero = (2, 0, 0, 0), (0, 0, 0, 0)
    table = [
        [one, x, y, z],
        [x, two, zero, zero],
        [y, zero, two, two],
        [z, zero, two, zero],
    ]
    return StructureConstantRing(["1", "x", "y", "z"], [4, 2, 2, 2], table)
