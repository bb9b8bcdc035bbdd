from __future__ import annotations

import itertools
from typing import Optional, Sequence

from ..errors import ElementError, RingError
from .base import FiniteRing, format_lincomb, parse_lincomb
from .galois import _is_prime


def _divides(m, e) -> bool:
    return all(a <= b for a, b in zip(m, e))


class MonomialQuotientRing(FiniteRing):
    """F_p[x_1..x_k] modulo an ideal generated by monomials.

    The monomials not divisible by any zero monomial form an F_p-basis, listed
    in graded lexicographic order (degree, then larger exponent of earlier
    variables first).  Elements are coefficient tuples over that basis.
    """

    kind = "monomial"

    def __init__(
        self,
        p: int,
        variables: Sequence[str],
        zero_monomials=(),
        zero_degree: Optional[int] = None,
        exponent_bounds: Optional[Sequence[int]] = None,
    ):
        if not _is_prime(p):
            raise RingError(f"coefficient field order {p} is not prime")
        self.p = p
        self.variables = tuple(variables)
        k = len(self.variables)
        if len(set(self.variables)) != k:
            raise RingError("variable names must be distinct")
        zeros = [tuple(m) for m in zero_monomials]
        if exponent_bounds is not None:
            if len(exponent_bounds) != k:
                raise RingError("one exponent bound per variable required")
            zeros += [tuple(b if i == j else 0 for j in range(k)) for i, b in enumerate(exponent_bounds)]
        for m in zeros:
            if len(m) != k or any(e < 0 for e in m):
                raise RingError(f"zero monomial {m} has the wrong shape")
        self.zero_monomials = tuple(sorted(set(zeros)))
        self.zero_degree = zero_degree
        for i in range(k):
            pure = any(all(e == 0 for j, e in enumerate(m) if j != i) for m in self.zero_monomials)
            if not pure and zero_degree is None:
                raise RingError(f"variable {self.variables[i]} is not nilpotent; the quotient would be infinite")

        self.basis = self._enumerate_basis()
        self.dim = len(self.basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.names = tuple(self._monomial_name(m) for m in self.basis)
        self._table = [[self.index.get(tuple(a + b for a, b in zip(u, v)), -1) for v in self.basis] for u in self.basis]

    def is_zero_monomial(self, e) -> bool:
        if self.zero_degree is not None and sum(e) >= self.zero_degree:
            return True
        return any(_divides(m, e) for m in self.zero_monomials)

    def _enumerate_basis(self):
        k = len(self.variables)
        unit = (0,) * k
        if self.is_zero_monomial(unit):
            raise RingError("the ideal contains 1; the quotient is the zero ring")
        found = {unit}
        frontier = [unit]
        while frontier:
            nxt = []
            for e in frontier:
                for i in range(k):
                    f = e[:i] + (e[i] + 1,) + e[i + 1 :]
                    if f not in found and not self.is_zero_monomial(f):
                        found.add(f)
                        nxt.append(f)
            frontier = nxt
        return sorted(found, key=lambda e: (sum(e), tuple(-x for x in e)))

    def _monomial_name(self, e) -> str:
        parts = [v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x]
        return "*".join(parts) if parts else "1"

    @property
    def order(self):
        return self.p**self.dim

    @property
    def zero(self):
        return (0,) * self.dim

    @property
    def one(self):
        return (1,) + (0,) * (self.dim - 1)

    def variable(self, name_or_index):
        i = self.variables.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return self.monomial(tuple(1 if j == i else 0 for j in range(len(self.variables))))

    def monomial(self, exponents):
        e = tuple(exponents)
        out = [0] * self.dim
        if e in self.index:
            out[self.index[e]] = 1
        return tuple(out)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        out = [0] * self.dim
        nb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            row = self._table[i]
            for j, y in nb:
                t = row[j]
                if t >= 0:
                    out[t] += x * y
        p = self.p
        return tuple(c % p for c in out)

    def _iter_elements(self):
        return itertools.product(range(self.p), repeat=self.dim)

    def contains(self, a):
        return isinstance(a, tuple) and len(a) == self.dim and all(isinstance(c, int) and 0 <= c < self.p for c in a)

    def is_unit(self, a, cap=None):
        # every variable is nilpotent, so the ring is local with maximal ideal
        # the elements of zero constant term
        return a[0] != 0

    def to_text(self, a):
        return format_lincomb(a, self.names, 0)

    def from_text(self, text):
        basis = {name: tuple(1 if j == i else 0 for j in range(self.dim)) for i, name in enumerate(self.names)}
        try:
            return parse_lincomb(self, text, basis)
        except ElementError:
            raise
        except (ValueError, AttributeError) as exc:
            raise ElementError(f"cannot parse {text!r}: {exc}") from None

    def descriptor(self):
        d = {
            "kind": self.kind,
            "p": self.p,
            "variables": list(self.variables),
            "zero_monomials": [list(m) for m in self.zero_monomials],
        }
        if self.zero_degree is not None:
            d["zero_degree"] = self.zero_degree
        return d

    def __repr__(self):
        return f"MonomialQuotientRing(p={self.p}, variables={list(self.variables)}, dim={self.dim})"


def graph_quotient_ring(g, p: int = 2) -> MonomialQuotientRing:
    """F_p[x_1..x_n] / (all degree-3 monomials, x_i x_j for every edge ij)."""
    n = g.n
    zeros = []
    for u, v in g.edges():
        e = [0] * n
        e[u] += 1
        e[v] += 1
        zeros.append(e)
    return MonomialQuotientRing(p, [f"x{i + 1}" for i in range(n)], zeros, zero_degree=3)
