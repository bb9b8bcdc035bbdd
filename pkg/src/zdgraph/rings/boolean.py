from __future__ import annotations

from .. import kernels
from ..errors import ElementError, RingError
from ..graph import bits
from .base import FiniteRing


class BooleanRing(FiniteRing):
    """Subsets of ``{0..p-1}`` as bitmasks; ``+`` is symmetric difference and
    ``*`` is intersection."""

    kind = "boolean"

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise RingError("ground_size must be non-negative")
        self.ground_size = ground_size
        self.full = (1 << ground_size) - 1

    @property
    def order(self):
        return 1 << self.ground_size

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return self.full

    def add(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        return a & b

    def _iter_elements(self):
        return iter(range(self.order))

    def contains(self, a):
        return isinstance(a, int) and 0 <= a <= self.full

    def is_unit(self, a, cap=None):
        return a == self.full

    def to_text(self, a):
        return "{" + ",".join(map(str, bits(a))) + "}"

    def from_text(self, text):
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise ElementError(f"Boolean element must look like {{0,2}}: {text!r}")
        inner = s[1:-1].strip()
        mask = 0
        if inner:
            for part in inner.split(","):
                try:
                    x = int(part)
                except ValueError:
                    raise ElementError(f"bad point {part!r} in {text!r}") from None
                if not 0 <= x < self.ground_size:
                    raise ElementError(f"point {x} outside ground set of size {self.ground_size}")
                mask |= 1 << x
        return mask

    def element_from_set(self, points):
        return sum(1 << x for x in set(points))

    def zero_product_matrix(self, elems):
        if self.ground_size <= kernels.BOOLEAN_KERNEL_LIMIT:
            return kernels.disjoint_masks(elems)
        return super().zero_product_matrix(elems)

    def descriptor(self):
        return {"kind": self.kind, "ground_size": self.ground_size}

    def __repr__(self):
        return f"BooleanRing({self.ground_size})"
