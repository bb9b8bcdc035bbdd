"""JSON ring descriptors: ``{"kind": ..., <parameters>}``."""

from __future__ import annotations

import json
from importlib import resources

from ..errors import RingError
from .boolean import BooleanRing
from .galois import GaloisField
from .modular import ModularRing
from .monomial import MonomialQuotientRing
from .product import ProductRing
from .structure import StructureConstantRing


def make_ring(descriptor: dict):
    try:
        kind = descriptor["kind"]
        if kind == "boolean":
            return BooleanRing(int(descriptor["ground_size"]))
        if kind == "modular":
            return ModularRing(int(descriptor["modulus"]))
        if kind == "product":
            return ProductRing([make_ring(f) for f in descriptor["factors"]])
        if kind == "galois":
            return GaloisField(int(descriptor["p"]), int(descriptor.get("k", 1)))
        if kind == "monomial":
            return MonomialQuotientRing(
                int(descriptor["p"]),
                descriptor["variables"],
                descriptor.get("zero_monomials", ()),
                descriptor.get("zero_degree"),
                descriptor.get("exponent_bounds"),
            )
        if kind == "structure":
            return StructureConstantRing(
                descriptor["generators"], descriptor["orders"], descriptor["table"], descriptor.get("one")
            )
    except (KeyError, TypeError) as exc:
        raise RingError(f"malformed {descriptor.get('kind', '?')!r} descriptor: {exc!r}") from None
    raise RingError(f"unknown ring kind {kind!r}")


def load_ring(path: str):
    with open(path) as fh:
        return make_ring(json.load(fh))


FIXTURES = ("z6", "f2xf5", "localex", "prop_complete", "prop_nsg", "prop_nonthreshold")


def fixture_descriptor(name: str) -> dict:
    """Ring descriptors shipped with the package (see ``zdgraph/data``)."""
    text = resources.files("zdgraph").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)
