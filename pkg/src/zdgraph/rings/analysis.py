"""Ring-theoretic scans: units, annihilators, zero-divisors, locality and
nilpotency.  These validate their element arguments."""

from __future__ import annotations

import random
from typing import Optional

from ..errors import CapExceeded, ElementError, NotNilpotentError
from .base import FiniteRing, get_cap


def multiply(R: FiniteRing, a, b):
    return R.mul(R.validate(a), R.validate(b))


def is_unit(R: FiniteRing, a, cap: Optional[int] = None) -> bool:
    return R.is_unit(R.validate(a), cap)


def annihilator(R: FiniteRing, a, cap: Optional[int] = None) -> frozenset:
    """``{y : a*y = 0}`` by exhaustive scan."""
    R.validate(a)
    zero = R.zero
    return frozenset(y for y in R.elements(cap) if R.mul(a, y) == zero)


def is_zero_divisor(R: FiniteRing, a, cap: Optional[int] = None) -> bool:
    """Nonzero and not a unit.

    In a finite commutative ring every nonzero element is either a unit or
    a zero-divisor, so this needs no enumeration when ``is_unit`` has a
    closed form.
    """
    R.validate(a)
    return a != R.zero and not R.is_unit(a, cap)


def is_field(R: FiniteRing, cap: Optional[int] = None) -> bool:
    return R.order > 1 and all(R.is_unit(a, cap) for a in R.elements(cap) if a != R.zero)


def nonunits_form_ideal(R: FiniteRing, cap: Optional[int] = None, sample: Optional[int] = None, seed: int = 0) -> bool:
    """True iff the non-units are closed under addition and under
    multiplication by arbitrary elements, i.e. R is local.

    With ``sample`` set, only that many random pairs are checked for each
    closure property (a one-sided test: ``False`` is always conclusive).
    """
    elems = list(R.elements(cap))
    nonunits = [a for a in elems if not R.is_unit(a, cap)]
    nu = set(nonunits)
    if sample is None:
        add_pairs = ((a, b) for i, a in enumerate(nonunits) for b in nonunits[i:])
        mul_pairs = ((a, r) for a in nonunits for r in elems)
    else:
        rng = random.Random(seed)
        add_pairs = ((rng.choice(nonunits), rng.choice(nonunits)) for _ in range(sample))
        mul_pairs = ((rng.choice(nonunits), rng.choice(elems)) for _ in range(sample))
    return all(R.add(a, b) in nu for a, b in add_pairs) and all(R.mul(a, r) in nu for a, r in mul_pairs)


def nilpotency_index(R: FiniteRing, generators, cap: Optional[int] = None) -> int:
    """Least r with I^r = 0 for the ideal I generated by ``generators``.

    I^r is generated as an ideal by the r-fold products of generators, so
    it vanishes exactly when every such product is zero.
    """
    limit = get_cap(cap)
    gens = [R.validate(g) for g in generators]
    zero = R.zero
    level = {g for g in gens if g != zero}
    r = 1
    seen = set()
    while level:
        key = frozenset(level)
        if key in seen:
            raise NotNilpotentError("products of the generators never vanish")
        seen.add(key)
        level = {R.mul(x, g) for x in level for g in gens} - {zero}
        if len(level) > limit:
            raise CapExceeded(f"ideal power generating set exceeds cap {limit}")
        r += 1
    return r


def element_from_text(R: FiniteRing, text: str):
    a = R.from_text(text)
    if not R.contains(a):
        raise ElementError(f"{text!r} did not parse to an element of {R!r}")
    return a


def element_to_text(R: FiniteRing, a) -> str:
    return R.to_text(R.validate(a))
