"""Lower-bound formulas for f_h(N, g) and F_h(N, g), with optional witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import is_prime, prime_power
from .errors import BhError
from .reduction import bc_g, gt_g, ruzsa_g, subfield_witness
from .verifier import verify

FAMILIES = ("ruzsa-eq1", "gt-eq2", "bc-eq3", "lindstrom", "mo-a", "mo-b", "mo-c")

# parameter names each family reads from the ranges mapping
FAMILY_PARAMS = {
    "ruzsa-eq1": ("p", "g"),
    "gt-eq2": ("p", "h", "g"),
    "bc-eq3": ("q", "h", "g"),
    "lindstrom": ("N", "h", "g"),
    "mo-a": ("p", "k"),
    "mo-b": ("q", "k"),
    "mo-c": ("q", "k"),
}


@dataclass
class BoundRecord:
    family: str
    parameters: dict
    modulus_N: int
    h: int
    g: int
    bound_value: int | float
    achieved: int | None = None
    measured_g: int | None = None
    witness: list | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "parameters": self.parameters,
            "N": self.modulus_N,
            "h": self.h,
            "g": self.g,
            "bound": self.bound_value,
        }
        if self.achieved is not None:
            out["achieved"] = self.achieved
            out["measured_g"] = self.measured_g
            out["witness"] = self.witness
        return out


def integer_root(x: int, h: int) -> tuple:
    """(r, exact) with r = floor(x^(1/h)) computed in integers."""
    if x < 0 or h < 1:
        raise BhError("integer_root needs x >= 0 and h >= 1")
    r = int(round(x ** (1.0 / h)))
    while r**h > x:
        r -= 1
    while (r + 1) ** h <= x:
        r += 1
    return r, r**h == x


def lindstrom_value(N: int, g: int, h: int) -> int | float:
    """The finite form (gN + 1)^(1/h); an int when gN + 1 is a perfect h-th power."""
    r, exact = integer_root(g * N + 1, h)
    return r if exact else (g * N + 1) ** (1.0 / h)


def _is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except BhError:
        return False
    return True


def bound_record(family: str, **params) -> BoundRecord:
    """One record, or BhError when the family's preconditions fail."""
    if family == "ruzsa-eq1":
        p, g = params["p"], params["g"]
        if not is_prime(p) or g < 1 or (p - 1) % g:
            raise BhError(f"need p prime and g | p - 1 (p={p}, g={g})")
        return BoundRecord(family, {"p": p, "g": g}, (p * p - p) // g, 2, g, p - 1)
    if family == "gt-eq2":
        p, h, g = params["p"], params["h"], params["g"]
        if not is_prime(p) or h < 3 or g < 1 or (p ** (h - 1) - 1) % g:
            raise BhError(f"need p prime, h >= 3, g | p^(h-1) - 1 (p={p}, h={h}, g={g})")
        return BoundRecord(family, {"p": p, "h": h, "g": g}, (p**h - p) // g, h, g, p)
    if family == "bc-eq3":
        q, h, g = params["q"], params["h"], params["g"]
        if not _is_prime_power(q) or h < 2 or g < 1 or subfield_witness(q, h, g) is None:
            raise BhError(f"need q^k = 1 mod g for a proper divisor k of h (q={q}, h={h}, g={g})")
        return BoundRecord(family, {"q": q, "h": h, "g": g}, (q**h - 1) // g, h, g, q)
    if family == "lindstrom":
        N, h, g = params["N"], params["h"], params["g"]
        if N < 1 or h < 2 or g < 1:
            raise BhError(f"need N >= 1, h >= 2, g >= 1 (N={N}, h={h}, g={g})")
        return BoundRecord(family, {"N": N, "h": h, "g": g}, N, h, g, lindstrom_value(N, g, h))
    if family in ("mo-a", "mo-b", "mo-c"):
        k = params["k"]
        if k < 1:
            raise BhError(f"need k >= 1, got {k}")
        if family == "mo-a":
            p = params["p"]
            if not is_prime(p):
                raise BhError(f"{p} is not prime")
            return BoundRecord(family, {"p": p, "k": k}, p * p - p, 2, k * k, k * (p - 1))
        q = params["q"]
        if not _is_prime_power(q):
            raise BhError(f"{q} is not a prime power")
        if family == "mo-b":
            return BoundRecord(family, {"q": q, "k": k}, q * q - 1, 2, k * k, k * q)
        return BoundRecord(family, {"q": q, "k": k}, q * q + q + 1, 2, k * k, k * q + 1)
    raise BhError(f"unknown family {family!r}")


def attach_witness(rec: BoundRecord) -> BoundRecord:
    """Construct the set realizing an eq1-eq3 bound and measure its g*."""
    P = rec.parameters
    if rec.family == "ruzsa-eq1":
        A = ruzsa_g(P["p"], None, P["g"])
    elif rec.family == "gt-eq2":
        A = gt_g(P["p"], P["h"], None, P["g"])
    elif rec.family == "bc-eq3":
        A = bc_g(P["q"], P["h"], None, P["g"])
    else:
        return rec
    rec.achieved = len(A)
    rec.measured_g = verify(A).exact_g
    rec.witness = A.values()
    return rec


def bound_table(family: str, ranges: dict, witness: bool = False) -> tuple:
    """Records for every parameter combination; returns (records, skipped notes)."""
    if family not in FAMILY_PARAMS:
        raise BhError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    names = FAMILY_PARAMS[family]
    missing = [n for n in names if n not in ranges]
    if missing:
        raise BhError(f"family {family} needs parameters {', '.join(missing)}")
    values: list = [list(_as_iter(ranges[n])) for n in names]
    records, notes = [], []
    for combo in itertools.product(*values):
        params = dict(zip(names, combo))
        try:
            rec = bound_record(family, **params)
        except BhError as exc:
            notes.append(f"skipped {params}: {exc}")
            continue
        if witness:
            attach_witness(rec)
        records.append(rec)
    return records, notes


def _as_iter(v) -> Iterable[int]:
    if isinstance(v, int):
        return [v]
    return v


# The two comparisons against Martin-O'Bryant that the construction improves on.
COMPARISONS = (
    {"N": 20, "g": 4, "ours": ("bc-eq3", {"q": 9, "h": 2, "g": 4}), "mo": ("mo-a", {"p": 5, "k": 2})},
    {"N": 42, "g": 4, "ours": ("bc-eq3", {"q": 13, "h": 2, "g": 4}), "mo": ("mo-a", {"p": 7, "k": 2})},
)


def comparison_rows(witness: bool = True) -> list:
    rows = []
    for c in COMPARISONS:
        ours = bound_record(c["ours"][0], **c["ours"][1])
        mo = bound_record(c["mo"][0], **c["mo"][1])
        if witness:
            attach_witness(ours)
        rows.append({"N": c["N"], "g": c["g"], "ours": ours, "martin_obryant": mo})
    return rows
