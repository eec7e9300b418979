"""The BhSet container and its JSON form."""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import BhError, WrongGroup
from .groups import CyclicGroup, Group, Homomorphism, group_from_json


@dataclass
class BhSet:
    """A finite subset of a group, claimed to be B_h[claimed_g].

    ``claimed_g`` is an upper bound inherited from the construction; the
    verifier measures the true multiplicity.  ``chain`` records every
    homomorphism applied since the base construction.
    """

    group: Group
    elements: tuple
    h: int
    claimed_g: int = 1
    provenance: dict = field(default_factory=dict)
    chain: list = field(default_factory=list)

    def __post_init__(self):
        if self.h < 1:
            raise BhError(f"h must be positive, got {self.h}")
        if self.claimed_g < 1:
            raise BhError(f"claimed_g must be positive, got {self.claimed_g}")
        canon = {}
        for x in self.elements:
            c = self.group.canonical(x)
            canon[c] = None
        self.elements = tuple(sorted(canon, key=self.group.sort_key))

    @classmethod
    def cyclic(cls, N: int, elements: Iterable[int], h: int, claimed_g: int = 1, **provenance):
        return cls(CyclicGroup(N), tuple(elements), h, claimed_g, dict(provenance))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        try:
            return self.group.canonical(x) in self.elements
        except WrongGroup:
            return False

    def values(self) -> list:
        """Elements in JSON-friendly form."""
        return [self.group.element_to_json(x) for x in self.elements]

    def to_json(self) -> dict:
        out = {
            "group": self.group.to_json(),
            "h": self.h,
            "claimed_g": self.claimed_g,
            "elements": self.values(),
            "provenance": self.provenance,
        }
        if self.chain:
            out["chain"] = self.chain
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "BhSet":
        group = group_from_json(obj["group"])
        elements = tuple(group.element_from_json(v) for v in obj["elements"])
        return cls(
            group,
            elements,
            int(obj["h"]),
            int(obj.get("claimed_g", 1)),
            dict(obj.get("provenance", {})),
            list(obj.get("chain", [])),
        )

    @classmethod
    def loads(cls, text: str) -> "BhSet":
        return cls.from_json(json.loads(text))


def image_set(A: BhSet, phi: Homomorphism) -> BhSet:
    """phi(A) with claimed_g multiplied by |Ker(phi)| and the step recorded."""
    if A.group != phi.source:
        raise WrongGroup(f"set lives in {A.group}, homomorphism starts at {phi.source}")
    g1 = phi.kernel_size
    image = [phi._apply(x) for x in A.elements]
    out = BhSet(
        phi.target,
        tuple(image),
        A.h,
        A.claimed_g * g1,
        copy.deepcopy(A.provenance),
        copy.deepcopy(A.chain),
    )
    out.chain.append(
        {
            "hom": phi.to_json(),
            "claimed_g_factor": g1,
            "size_before": len(A),
            "size_after": len(out),
        }
    )
    return out


def translate(A: BhSet, t: Any) -> BhSet:
    t = A.group.canonical(t)
    return BhSet(
        A.group,
        tuple(A.group.add(x, t) for x in A.elements),
        A.h,
        A.claimed_g,
        copy.deepcopy(A.provenance),
        copy.deepcopy(A.chain),
    )
