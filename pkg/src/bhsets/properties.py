"""Randomized and exhaustive property checks over the certified constructions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import divisors, is_prime
from .constructions import bose_chowla, gt_modular, ruzsa_modular, singer_generalized
from .groups import ModReduction
from .reduction import cardinality_preserved
from .sets import BhSet, image_set
from .verifier import multiset_count, representation_counts, verify

GT_PARAMS = ((3, 3), (3, 4), (5, 3), (5, 4), (7, 3))
SINGER_PARAMS = tuple((q, m) for q in (2, 3, 4, 5) for m in (3, 4))


def bose_chowla_params(limit: int = 5000) -> list:
    """(q, h) over prime q with h >= 2 and q^h <= limit."""
    out = []
    for q in range(2, limit + 1):
        if not is_prime(q) or q * q > limit:
            continue
        h = 2
        while q**h <= limit:
            out.append((q, h))
            h += 1
    return out


def certified_bases() -> list:
    """Every base construction the certification suite covers, in a fixed order."""
    sets = [bose_chowla(q, h) for q, h in bose_chowla_params()]
    sets += [ruzsa_modular(p) for p in range(2, 32) if is_prime(p)]
    sets += [gt_modular(p, h) for p, h in GT_PARAMS]
    sets += [singer_generalized(q, m) for q, m in SINGER_PARAMS]
    return sets


@dataclass
class TrialSummary:
    trials: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def reduction_bound_trials(trials: int, seed: int, bases: list | None = None, max_g: int = 12) -> TrialSummary:
    """Reduce random certified bases by random divisors g <= max_g; g* must stay <= claimed."""
    rng = random.Random(seed)
    bases = certified_bases() if bases is None else bases
    out = TrialSummary()
    for _ in range(trials):
        A = rng.choice(bases)
        N = A.group.N
        g = rng.choice([d for d in divisors(N) if d <= max_g])
        B = image_set(A, ModReduction(N, g))
        measured = verify(B).exact_g
        out.trials += 1
        if measured > B.claimed_g:
            out.violations.append({"N": N, "g": g, "set": list(A.elements), "g*": measured})
    return out


def preservation_trials(trials: int, seed: int, max_size: int = 50, max_kernel: int = 64) -> TrialSummary:
    """Random subsets of Z_N against random mod-reductions with |Ker| <= max_kernel."""
    rng = random.Random(seed)
    out = TrialSummary()
    for _ in range(trials):
        N = rng.randint(2, 600)
        g = rng.choice([d for d in divisors(N) if d <= max_kernel])
        size = rng.randint(1, min(max_size, N))
        A = BhSet.cyclic(N, rng.sample(range(N), size), 2)
        phi = ModReduction(N, g)
        verdict = cardinality_preserved(A, phi)
        kept = len(image_set(A, phi)) == len(A)
        out.trials += 1
        if verdict.preserved != kept:
            out.violations.append({"N": N, "g": g, "set": list(A.elements)})
    return out


def mitm_trials(trials: int, seed: int, max_multisets: int = 10**5) -> TrialSummary:
    """Meet-in-the-middle counts against direct enumeration on random inputs."""
    rng = random.Random(seed)
    out = TrialSummary()
    while out.trials < trials:
        h = rng.randint(2, 6)
        N = rng.randint(2, 2000)
        size = rng.randint(1, min(N, 40))
        if multiset_count(size, h) > max_multisets:
            continue
        A = BhSet.cyclic(N, rng.sample(range(N), size), h)
        direct = representation_counts(A, h, method="direct")
        mitm = representation_counts(A, h, method="mitm")
        out.trials += 1
        if direct != mitm:
            out.violations.append({"N": N, "h": h, "set": list(A.elements)})
    return out
