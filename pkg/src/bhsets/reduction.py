"""Homomorphic images of B_h sets.

If A is B_h[g] in G and phi has a kernel of size g1, phi(A) is B_h[g*g1];
phi(A) keeps |A| elements iff (A - A) meets Ker(phi) only in 0.
"""

from __future__ import annotations

from typing import NamedTuple

from .algebra import prime_power
from .constructions import bose_chowla_field_set, gt_modular, ruzsa_modular
from .errors import DivisibilityViolation, NoValidSubfieldCondition, WrongGroup
from .groups import (
    CosetDlog,
    CosetProjection,
    Composition,
    CyclicGroup,
    Homomorphism,
    ModReduction,
    kernel_elements,
)
from .sets import BhSet, image_set


class Preservation(NamedTuple):
    preserved: bool
    witness: tuple | None


def reduce_set(A: BhSet, phi: Homomorphism) -> BhSet:
    """phi(A) with claimed_g = A.claimed_g * |Ker(phi)|; duplicates merge."""
    return image_set(A, phi)


def reduce_mod(A: BhSet, g: int) -> BhSet:
    """Shorthand for the reduction Z_N -> Z_{N/g} of a cyclic set."""
    if not isinstance(A.group, CyclicGroup):
        raise WrongGroup(f"mod-reduction needs a cyclic group, got {A.group}")
    return image_set(A, ModReduction(A.group.N, g))


def cardinality_preserved(A: BhSet, phi: Homomorphism) -> Preservation:
    """Decide |phi(A)| = |A| through (A - A) and Ker(phi)."""
    if A.group != phi.source:
        raise WrongGroup(f"set lives in {A.group}, homomorphism starts at {phi.source}")
    G = A.group
    kernel = set(kernel_elements(phi))
    zero = G.identity()
    for i, a1 in enumerate(A.elements):
        for a2 in A.elements[:i]:
            d = G.sub(a1, a2)
            if d != zero and d in kernel:
                return Preservation(False, (a1, a2))
    return Preservation(True, None)


def _checked(out: BhSet, base: BhSet, phi: Homomorphism) -> BhSet:
    verdict = cardinality_preserved(base, phi)
    if not verdict.preserved or len(out) != len(base):
        raise AssertionError(f"cardinality dropped under {phi.to_json()}: {verdict.witness}")
    out.provenance["cardinality_preserved"] = True
    return out


def ruzsa_g(p: int, theta=None, g: int = 1) -> BhSet:
    """B_2[g] set with p - 1 elements in Z_{(p^2 - p)/g}; needs g | p - 1."""
    if g < 1 or (p - 1) % g:
        raise DivisibilityViolation(f"g={g} does not divide p-1={p - 1}")
    base = ruzsa_modular(p, theta)
    phi = ModReduction(p * p - p, g)
    out = _checked(image_set(base, phi), base, phi)
    out.provenance["g"] = g
    return out


def gt_g(p: int, h: int, theta=None, g: int = 1, modulus=None) -> BhSet:
    """B_h[g] set with p elements in Z_{(p^h - p)/g}.

    Requires g | p^(h-1) - 1 so that <(p^(h-1) - 1)/g> is a subgroup of
    order g in the logarithm coordinate.
    """
    m = p ** (h - 1) - 1
    if g < 1 or m % g:
        raise DivisibilityViolation(f"g={g} does not divide p^(h-1)-1={m}")
    base = gt_modular(p, h, theta, modulus)
    phi = ModReduction(p**h - p, g)
    out = _checked(image_set(base, phi), base, phi)
    out.provenance["g"] = g
    out.provenance["condition"] = "g | p^(h-1) - 1"
    return out


def subfield_witness(q: int, h: int, g: int) -> int | None:
    """Least proper divisor k of h with q^k = 1 (mod g), if any."""
    for k in range(1, h):
        if h % k == 0 and (q**k - 1) % g == 0:
            return k
    return None


def bc_g(q: int, h: int, theta=None, g: int = 1, modulus=None) -> BhSet:
    """B_h[g] set with q elements in Z_{(q^h - 1)/g}.

    Built on the field side: theta + F_q is projected onto F*/H_g with
    H_g = <theta^((q^h - 1)/g)>, then read off through the coset logarithm.
    """
    prime_power(q)
    if g < 1:
        raise NoValidSubfieldCondition(f"g must be positive, got {g}")
    k = subfield_witness(q, h, g)
    if k is None:
        raise NoValidSubfieldCondition(
            f"no proper divisor k of h={h} with q^k = 1 mod {g} (q={q})"
        )
    base = bose_chowla_field_set(q, h, theta, modulus)
    F = base.group.ring
    theta_el = F(base.provenance["theta"])
    proj = CosetProjection(F, theta_el ** ((F.order - 1) // g), theta_el)
    phi = Composition((proj, CosetDlog(proj.target)))
    # Ker(phi) = Ker(proj) since the coset logarithm is injective
    out = _checked(image_set(base, phi), base, proj)
    out.provenance.update({"construction": "bose-chowla", "g": g, "k": k})
    return out
