from __future__ import annotations

from sympy import isprime

from ..errors import ElementError, RingAxiomError, RingError
from .base import FiniteRing, split_signed_terms

# monic irreducible polynomials, coefficients lowest degree first
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}

MAX_ORDER = 64
GENERATOR = "a"


def _is_prime(p: int) -> bool:
    return isinstance(p, int) and bool(isprime(p))


class GaloisField(FiniteRing):
    """GF(p^k) for p^k <= 64 as F_p[a]/(f) with f from a fixed table.

    An element is the integer whose base-p digits are its coefficients
    (digit i is the coefficient of a^i).
    """

    kind = "galois"

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise RingError(f"{p} is not prime")
        if k < 1 or p**k > MAX_ORDER:
            raise RingError(f"GF({p}^{k}) is outside the supported range p^k <= {MAX_ORDER}")
        if k > 1 and (p, k) not in IRREDUCIBLE:
            raise RingError(f"no irreducible polynomial tabulated for GF({p}^{k})")
        self.p, self.k = p, k
        self.q = p**k
        self.modulus_poly = IRREDUCIBLE.get((p, k), (0, 1))
        self._add = [[self._encode([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]) for b in range(self.q)] for a in range(self.q)]
        self._mul = [[self._poly_mul(a, b) for b in range(self.q)] for a in range(self.q)]
        self._neg = [self._encode([-x % p for x in self._digits(a)]) for a in range(self.q)]
        for a in range(1, self.q):
            if 1 not in self._mul[a]:
                raise RingAxiomError(f"GF({p}^{k}) table polynomial is reducible", witness=a)

    def _digits(self, a):
        return [a // self.p**i % self.p for i in range(self.k)]

    def _encode(self, digits):
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _poly_mul(self, a, b):
        p, k = self.p, self.k
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
        f = self.modulus_poly
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(k + 1):
                    prod[deg - k + i] = (prod[deg - k + i] - c * f[i]) % p
        return self._encode(prod[:k])

    @property
    def order(self):
        return self.q

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def _iter_elements(self):
        return iter(range(self.q))

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.q

    def is_unit(self, a, cap=None):
        return a != 0

    def to_text(self, a):
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self._digits(a)))):
            if not c:
                continue
            mono = "" if i == 0 else GENERATOR if i == 1 else f"{GENERATOR}^{i}"
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def from_text(self, text):
        total = 0
        for sign, term in split_signed_terms(text):
            coeff, _, mono = term.partition("*") if "*" in term else (None, None, term)
            if mono.isdigit() and coeff is None:
                c, e = int(mono), 0
            else:
                c = int(coeff) if coeff is not None else 1
                if mono == GENERATOR:
                    e = 1
                elif mono.startswith(GENERATOR + "^") and mono[2:].isdigit():
                    e = int(mono[2:])
                else:
                    raise ElementError(f"cannot parse term {term!r} of {text!r}")
            if e >= self.k:
                raise ElementError(f"degree {e} too large for GF({self.p}^{self.k})")
            value = self._encode([c % self.p if i == e else 0 for i in range(self.k)])
            total = self.add(total, value if sign > 0 else self.neg(value))
        return total

    def descriptor(self):
        return {"kind": self.kind, "p": self.p, "k": self.k}

    def __repr__(self):
        return f"GaloisField({self.p}, {self.k})"
