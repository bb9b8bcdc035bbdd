from __future__ import annotations

from math import gcd

from .. import kernels
from ..errors import ElementError, RingError
from .base import FiniteRing


class ModularRing(FiniteRing):
    """Integers modulo n, for any n >= 2 (Python integers, no size limit)."""

    kind = "modular"

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise RingError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus

    @property
    def order(self):
        return self.modulus

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def _iter_elements(self):
        return iter(range(self.modulus))

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.modulus

    def is_unit(self, a, cap=None):
        return gcd(a, self.modulus) == 1

    def to_text(self, a):
        return str(a)

    def from_text(self, text):
        try:
            a = int(text.strip())
        except ValueError:
            raise ElementError(f"not an integer: {text!r}") from None
        if not 0 <= a < self.modulus:
            raise ElementError(f"{a} is not a residue mod {self.modulus}")
        return a

    def zero_product_matrix(self, elems):
        if self.modulus < kernels.MODULAR_KERNEL_LIMIT:
            return kernels.modular_zero_products(elems, self.modulus)
        return super().zero_product_matrix(elems)

    def descriptor(self):
        return {"kind": self.kind, "modulus": self.modulus}

    def __repr__(self):
        return f"ModularRing({self.modulus})"


def prime_power(n: int):
    """``(p, k)`` with ``n == p**k`` and k >= 1, or ``None``."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n, 1
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def valuation(a: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if a == 0:
        raise ValueError("valuation of zero is undefined")
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    return k
