"""Base B_h constructions over finite fields.

Every function returns a :class:`BhSet` with ``claimed_g = 1``.  Field
parameters default to the smallest irreducible modulus and the first
primitive element in scan order; an explicit modulus or theta is checked,
never trusted.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import (
    FieldDescriptor,
    FieldElement,
    QuotientRing,
    degree_over,
    discrete_log,
    find_primitive,
    in_subfield,
    is_irreducible,
    is_prime,
    is_primitive,
    poly_eval,
    poly_reduce_coeffs,
    prime_field,
    prime_power,
    subfield_elements,
)
from .errors import BadDegree, BhError, DegreeOne, NonPrimitiveBase, RootInS
from .groups import (
    CosetDlog,
    CosetQuotient,
    CrtCombine,
    CyclicGroup,
    ProductGroup,
    UnitGroup,
)
from .sets import BhSet, image_set


def resolve_field(p: int, n: int, modulus=None, theta=None) -> tuple:
    """Build F_{p^n} and a primitive element from loose user input.

    ``theta`` may be None/"auto", a FieldElement, a coefficient list or a
    notation string such as ``"-2x^2+2x-1"``.  Returns (field, theta).
    """
    if isinstance(theta, FieldElement):
        F = theta.field
        if not isinstance(F, FieldDescriptor) or F.p != p or F.n != n:
            raise BhError(f"theta lives in {F}, expected a field of order {p}^{n}")
        if modulus is not None and tuple(poly_reduce_coeffs(modulus, p)) != F.modulus:
            raise BhError("theta's field modulus disagrees with the requested modulus")
    else:
        F = FieldDescriptor(p, n, modulus)
        if theta is None or (isinstance(theta, str) and theta == "auto"):
            theta = find_primitive(F)
        else:
            theta = F(theta)
    if not is_primitive(theta):
        raise NonPrimitiveBase(f"{theta} is not a primitive element of {F}")
    return F, theta


def _field_provenance(F: FieldDescriptor, theta: FieldElement) -> dict:
    return {"modulus": list(F.modulus), "theta": list(theta.coeffs)}


def derksen_set(F: FieldDescriptor, px: Sequence[int], S: Iterable[int]) -> BhSet:
    """{x - s : s in S} inside the unit group of F[x]/(px), a B_deg(px) set."""
    if F.n != 1:
        raise BhError("the base field must be a prime field")
    p = F.p
    px = poly_reduce_coeffs(px, p)
    if len(px) < 2 or px[-1] != 1:
        raise BhError("px must be monic of degree >= 1")
    S = sorted({s % p for s in S})
    for s in S:
        if poly_eval(px, s, p) == 0:
            raise RootInS(s)
    ring = FieldDescriptor(p, modulus=px) if is_irreducible(px, p) else QuotientRing(p, px)
    x = ring.gen
    return BhSet(
        UnitGroup(ring),
        tuple(x - s for s in S),
        len(px) - 1,
        1,
        {"construction": "derksen", "p": p, "poly": list(px), "S": S},
    )


def _check_h(h: int, least: int):
    if h < least:
        raise BadDegree(f"h must be >= {least}, got {h}")


def bose_chowla_field_set(q: int, h: int, theta=None, modulus=None) -> BhSet:
    """theta + F_q as a B_h subset of the unit group of F_{q^h}."""
    _check_h(h, 2)
    p, k = prime_power(q)
    F, theta = resolve_field(p, k * h, modulus, theta)
    prov = {"construction": "bose-chowla-field", "q": q, "h": h}
    prov.update(_field_provenance(F, theta))
    return BhSet(UnitGroup(F), tuple(theta + a for a in subfield_elements(F, k)), h, 1, prov)


def bose_chowla(q: int, h: int, theta=None, modulus=None) -> BhSet:
    """log_theta(theta + F_q), a B_h set of q residues in Z_{q^h - 1}."""
    _check_h(h, 2)
    p, k = prime_power(q)
    F, theta = resolve_field(p, k * h, modulus, theta)
    logs = [discrete_log(theta, theta + a) for a in subfield_elements(F, k)]
    prov = {"construction": "bose-chowla", "q": q, "h": h}
    prov.update(_field_provenance(F, theta))
    return BhSet(CyclicGroup(F.order - 1), tuple(logs), h, 1, prov)


def bose_chowla_scan(q: int, h: int, theta=None, modulus=None) -> list:
    """The classic form {a in [1, q^h - 1] : theta^a - theta in F_q}.

    Walks every power of theta and tests subfield membership with the
    Frobenius map, so it shares no code path with :func:`bose_chowla`.
    """
    _check_h(h, 2)
    p, k = prime_power(q)
    F, theta = resolve_field(p, k * h, modulus, theta)
    Q1 = F.order - 1
    out = []
    y = theta
    for a in range(1, Q1 + 1):
        if in_subfield(y - theta, q):
            out.append(a % Q1)
        y = y * theta
    return sorted(out)


def _primitive_root(p: int, theta) -> int:
    if not is_prime(p):
        raise BhError(f"{p} is not prime")
    Fp = prime_field(p)
    t = find_primitive(Fp) if theta is None or theta == "auto" else Fp(int(theta))
    if not is_primitive(t):
        raise NonPrimitiveBase(f"{int(theta)} is not a primitive root mod {p}")
    return t.coeffs[0]


def ruzsa_base(p: int, theta=None) -> BhSet:
    """R(p, theta) = {(a, theta^a) : 1 <= a <= p-1} in Z_{p-1} x Z_p."""
    t = _primitive_root(p, theta)
    G = ProductGroup((CyclicGroup(p - 1), CyclicGroup(p)))
    elems = tuple((a % (p - 1), pow(t, a, p)) for a in range(1, p))
    return BhSet(G, elems, 2, 1, {"construction": "ruzsa", "p": p, "theta": t})


def ruzsa_modular(p: int, theta=None) -> BhSet:
    """CRT image of R(p, theta) in Z_{p^2 - p}."""
    return image_set(ruzsa_base(p, theta), CrtCombine(p - 1, p))


def gt_base(p: int, h: int, theta=None, modulus=None) -> BhSet:
    """GT(p, h, theta) = {(a, log_theta(theta + a)) : a in Z_p} in Z_p x Z_{p^(h-1) - 1}."""
    _check_h(h, 3)
    if not is_prime(p):
        raise BhError(f"{p} is not prime")
    F, theta = resolve_field(p, h - 1, modulus, theta)
    G = ProductGroup((CyclicGroup(p), CyclicGroup(F.order - 1)))
    elems = tuple((a, discrete_log(theta, theta + a)) for a in range(p))
    prov = {"construction": "gomez-trujillo", "p": p, "h": h}
    prov.update(_field_provenance(F, theta))
    return BhSet(G, elems, h, 1, prov)


def gt_modular(p: int, h: int, theta=None, modulus=None) -> BhSet:
    """CRT image of GT(p, h, theta) in Z_{p^h - p}."""
    return image_set(gt_base(p, h, theta, modulus), CrtCombine(p, p ** (h - 1) - 1))


def singer_quotient_set(q: int, m: int, beta=None, modulus=None, theta=None) -> BhSet:
    """SG(q, beta) = {1} u {(beta + a) F_q^*} in F_{q^m}^* / F_q^*.

    ``m`` is the degree of the ambient field over F_q.  With beta of degree
    d + 1 over F_q the result is B_d with q + 1 elements.
    """
    p, k = prime_power(q)
    if m < 2:
        raise BadDegree(f"extension degree must be >= 2, got {m}")
    if isinstance(beta, FieldElement):
        F = beta.field
        if modulus is not None and tuple(poly_reduce_coeffs(modulus, p)) != F.modulus:
            raise BhError("beta's field modulus disagrees with the requested modulus")
    else:
        F = FieldDescriptor(p, k * m, modulus)
    if beta is None or (isinstance(beta, str) and beta == "auto"):
        beta = find_primitive(F)
    else:
        beta = F(beta)
    if F.p != p or F.n != k * m:
        raise BhError(f"beta lives in {F}, expected F_{q}^{m}")
    deg = degree_over(beta, q)
    if deg == 1:
        raise DegreeOne(f"{beta} lies in F_{q}")
    if theta is None:
        theta = beta if is_primitive(beta) else find_primitive(F)
    else:
        theta = F(theta)
    sub_gen = theta ** ((F.order - 1) // (q - 1))
    H = CosetQuotient(F, sub_gen, theta)
    elems = [F.one] + [beta + a for a in subfield_elements(F, k)]
    prov = {
        "construction": "singer-generalized",
        "q": q,
        "m": m,
        "beta": list(beta.coeffs),
        "beta_degree": deg,
        "modulus": list(F.modulus),
        "theta": list(theta.coeffs),
    }
    return BhSet(H, tuple(elems), deg - 1, 1, prov)


def singer_generalized(q: int, m: int, beta=None, modulus=None, theta=None) -> BhSet:
    """SG(q, beta) realized in Z_N, N = (q^m - 1)/(q - 1), via the coset logarithm."""
    A = singer_quotient_set(q, m, beta, modulus, theta)
    return image_set(A, CosetDlog(A.group))
