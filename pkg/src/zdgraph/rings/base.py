"""The finite commutative ring contract shared by every realization."""

from __future__ import annotations

import os
import re
from abc import ABC, abstractmethod
from typing import Iterator, Optional

from ..errors import CapExceeded, ElementError

DEFAULT_CAP = 2**20


def get_cap(cap: Optional[int] = None) -> int:
    """Explicit argument, else ``$ZDG_CAP``, else ``2**20``."""
    if cap is not None:
        return cap
    env = os.environ.get("ZDG_CAP")
    return int(env) if env else DEFAULT_CAP


class FiniteRing(ABC):
    """A finite commutative ring with unity.

    Elements are plain hashable Python values in canonical form, so element
    equality is ``==``.  Arithmetic methods do not validate their arguments;
    the module-level helpers in :mod:`zdgraph.rings.analysis` do.
    """

    kind: str

    @property
    @abstractmethod
    def order(self) -> int: ...

    @property
    @abstractmethod
    def zero(self): ...

    @property
    @abstractmethod
    def one(self): ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def _iter_elements(self) -> Iterator: ...

    @abstractmethod
    def contains(self, a) -> bool: ...

    @abstractmethod
    def to_text(self, a) -> str: ...

    @abstractmethod
    def from_text(self, text: str): ...

    @abstractmethod
    def descriptor(self) -> dict: ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scalar(self, k: int, a):
        """k * a for an integer k >= 0, by doubling."""
        out, base = self.zero, a
        while k:
            if k & 1:
                out = self.add(out, base)
            base = self.add(base, base)
            k >>= 1
        return out

    def power(self, a, k: int):
        out, base = self.one, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def elements(self, cap: Optional[int] = None) -> Iterator:
        """Every element exactly once, in the ring's fixed enumeration order."""
        limit = get_cap(cap)
        if self.order > limit:
            raise CapExceeded(f"{self!r} has {self.order} elements; enumeration cap is {limit}")
        return self._iter_elements()

    def validate(self, a):
        if not self.contains(a):
            raise ElementError(f"{a!r} is not an element of {self!r}")
        return a

    def is_unit(self, a, cap: Optional[int] = None) -> bool:
        """Generic scan for an inverse; realizations override with closed forms."""
        return any(self.mul(a, b) == self.one for b in self.elements(cap))

    def zero_product_matrix(self, elems):
        """Boolean matrix of ``elems[i] * elems[j] == 0``."""
        import numpy as np

        k = len(elems)
        out = np.zeros((k, k), dtype=bool)
        zero = self.zero
        for i in range(k):
            a = elems[i]
            for j in range(i, k):
                out[i, j] = out[j, i] = self.mul(a, elems[j]) == zero
        return out

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(repr(self.descriptor()))


# -- linear-combination text, shared by the quotient realizations ---------------------

_TERM = re.compile(r"^(?:(\d+)\*)?(.+)$")


def format_lincomb(coeffs, names, const_index: Optional[int]) -> str:
    """Non-constant terms in basis order, then the constant, e.g. ``x+y+2``."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0 or i == const_index:
            continue
        terms.append(names[i] if c == 1 else f"{c}*{names[i]}")
    if const_index is not None and coeffs[const_index]:
        terms.append(str(coeffs[const_index]))
    return "+".join(terms) if terms else "0"


def split_signed_terms(text: str):
    """Split ``a+b-c`` into [(+1, 'a'), (+1, 'b'), (-1, 'c')]."""
    s = text.replace(" ", "")
    if not s:
        raise ElementError("empty element text")
    out = []
    sign, start = 1, 0
    if s[0] in "+-":
        sign, start = (-1 if s[0] == "-" else 1), 1
    buf = []
    for ch in s[start:]:
        if ch in "+-":
            if not buf:
                raise ElementError(f"malformed expression {text!r}")
            out.append((sign, "".join(buf)))
            sign, buf = (-1 if ch == "-" else 1), []
        else:
            buf.append(ch)
    if not buf:
        raise ElementError(f"malformed expression {text!r}")
    out.append((sign, "".join(buf)))
    return out


def parse_lincomb(ring: FiniteRing, text: str, basis_elements: dict):
    """Parse a signed sum of ``[c*]name`` terms and bare integers.

    ``basis_elements`` maps a basis name to its ring element; bare integers
    are multiples of the unity.
    """
    total = ring.zero
    for sign, term in split_signed_terms(text):
        if term.isdigit():
            value = ring.scalar(int(term), ring.one)
        else:
            m = _TERM.match(term)
            coeff, name = m.group(1), m.group(2)
            if name not in basis_elements:
                raise ElementError(f"unknown basis name {name!r} in {text!r}")
            value = ring.scalar(int(coeff) if coeff else 1, basis_elements[name])
        total = ring.add(total, value if sign > 0 else ring.neg(value))
    return total
