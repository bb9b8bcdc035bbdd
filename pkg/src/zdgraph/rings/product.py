from __future__ import annotations

import itertools

from ..errors import ElementError, RingError
from .base import FiniteRing


def _split_top_level(s: str):
    parts, depth, buf = [], 0, []
    for ch in s:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    parts.append("".join(buf))
    return parts


class ProductRing(FiniteRing):
    """Direct product; elements are tuples and every operation is componentwise."""

    kind = "product"

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise RingError("a product ring needs at least one factor")

    @property
    def order(self):
        out = 1
        for f in self.factors:
            out *= f.order
        return out

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _iter_elements(self):
        return itertools.product(*(list(f._iter_elements()) for f in self.factors))

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(f.contains(x) for f, x in zip(self.factors, a))
        )

    def is_unit(self, a, cap=None):
        return all(f.is_unit(x, cap) for f, x in zip(self.factors, a))

    def to_text(self, a):
        return "(" + ",".join(f.to_text(x) for f, x in zip(self.factors, a)) + ")"

    def from_text(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ElementError(f"product element must be parenthesised: {text!r}")
        parts = _split_top_level(s[1:-1])
        if len(parts) != len(self.factors):
            raise ElementError(f"expected {len(self.factors)} components in {text!r}")
        return tuple(f.from_text(p) for f, p in zip(self.factors, parts))

    def descriptor(self):
        return {"kind": self.kind, "factors": [f.descriptor() for f in self.factors]}

    def __repr__(self):
        return "ProductRing(" + ", ".join(map(repr, self.factors)) + ")"
