"""Exact representation counting for h-fold sums.

A representation of b is a multiset {a_1, ..., a_h} drawn from A (with
repetition) whose group sum is b.  For a listed set of distinct elements
this is the same as counting index tuples i_1 <= ... <= i_h.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field

import numpy as np

from .errors import BhError, EmptySet, TooLarge
from .groups import CyclicGroup
from .sets import BhSet

ENUMERATION_CAP = 10**8
DIRECT_LIMIT = 10**6
WITNESS_CAP = 100


def multiset_count(n: int, h: int) -> int:
    """C(n + h - 1, h): multisets of size h from n items."""
    if n == 0:
        return 1 if h == 0 else 0
    return math.comb(n + h - 1, h)


@dataclass
class VerificationReport:
    h: int
    set_size: int
    group_order: int
    exact_g: int
    witnesses: list  # [(target, [multiset, ...]), ...]
    multisets_enumerated: int
    truncated: bool = False
    method: str = "direct"
    group: object = field(default=None, repr=False)

    def to_json(self) -> dict:
        enc = self.group.element_to_json if self.group is not None else (lambda x: x)
        return {
            "h": self.h,
            "set_size": self.set_size,
            "group_order": self.group_order,
            "exact_g": self.exact_g,
            "witnesses": [
                {"target": enc(t), "reps": [[enc(a) for a in rep] for rep in reps]}
                for t, reps in self.witnesses
            ],
            "enumerated": self.multisets_enumerated,
            "truncated": self.truncated,
        }

    def witness_targets(self) -> list:
        return [t for t, _ in self.witnesses]

    def reps_for(self, target) -> list:
        for t, reps in self.witnesses:
            if t == target:
                return reps
        return []


def _check_size(n: int, h: int, cap: int) -> int:
    total = multiset_count(n, h)
    if total > cap:
        raise TooLarge(f"{total} multisets exceed the enumeration cap {cap}", size=total)
    return total


def _counts_direct(A: BhSet, h: int) -> Counter:
    G = A.group
    counts: Counter = Counter()
    if isinstance(G, CyclicGroup):
        N = G.N
        for combo in itertools.combinations_with_replacement(A.elements, h):
            counts[sum(combo) % N] += 1
    else:
        for combo in itertools.combinations_with_replacement(A.elements, h):
            counts[G.sum(combo)] += 1
    return counts


def _counts_mitm(A: BhSet, h: int) -> Counter:
    """Split each index tuple i_1 <= ... <= i_h after position ceil(h/2).

    With j = i_{h1}, the left part is any multiset of size h1 whose largest
    index is j and the right part any multiset of size h - h1 whose
    smallest index is >= j.  For each j the two half-sum histograms are
    convolved cyclically; processing j downward keeps one running right
    histogram.
    """
    G = A.group
    if not isinstance(G, CyclicGroup):
        raise BhError("meet-in-the-middle counting is implemented for cyclic groups")
    N = G.N
    a = [int(x) for x in A.elements]
    n = len(a)
    if h == 1:
        return Counter({x: 1 for x in a})
    h1 = (h + 1) // 2
    h2 = h - h1

    left = [defaultdict(int) for _ in range(n)]
    for combo in itertools.combinations_with_replacement(range(n), h1):
        left[combo[-1]][sum(a[i] for i in combo) % N] += 1
    right_exact = [defaultdict(int) for _ in range(n)]
    for combo in itertools.combinations_with_replacement(range(n), h2):
        right_exact[combo[0]][sum(a[i] for i in combo) % N] += 1

    running = np.zeros(N, dtype=np.int64)
    acc = np.zeros(N, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        for s, c in right_exact[j].items():
            running[s] += c
        for s, c in left[j].items():
            acc += c * np.roll(running, s)
    return Counter({int(t): int(c) for t, c in enumerate(acc) if c})


def representation_counts(
    A: BhSet, h: int | None = None, cap: int = ENUMERATION_CAP, method: str = "auto"
) -> Counter:
    """Map each reachable target to its number of h-multiset representations."""
    h = A.h if h is None else h
    total = _check_size(len(A), h, cap)
    if method == "auto":
        method = "mitm" if total > DIRECT_LIMIT and isinstance(A.group, CyclicGroup) else "direct"
    if method == "direct":
        return _counts_direct(A, h)
    if method == "mitm":
        return _counts_mitm(A, h)
    raise BhError(f"unknown counting method {method!r}")


def _collect_reps(A: BhSet, h: int, targets: set, method: str) -> dict:
    G = A.group
    reps = defaultdict(list)
    if method == "mitm" and isinstance(G, CyclicGroup):
        N = G.N
        a = A.elements
        h1 = (h + 1) // 2
        right_by_sum = defaultdict(list)
        for combo in itertools.combinations_with_replacement(range(len(a)), h - h1):
            right_by_sum[sum(a[i] for i in combo) % N].append(combo)
        for lc in itertools.combinations_with_replacement(range(len(a)), h1):
            s = sum(a[i] for i in lc) % N
            for t in targets:
                for rc in right_by_sum.get((t - s) % N, ()):
                    if rc[0] >= lc[-1]:
                        reps[t].append(tuple(a[i] for i in lc + rc))
        for t in reps:
            reps[t].sort(key=lambda rep: [G.sort_key(x) for x in rep])
        return reps
    for combo in itertools.combinations_with_replacement(A.elements, h):
        t = G.sum(combo)
        if t in targets:
            reps[t].append(combo)
    return reps


def verify(
    A: BhSet, h: int | None = None, cap: int = ENUMERATION_CAP, method: str = "auto"
) -> VerificationReport:
    """Measure g*(A, h) and collect every target that attains it."""
    h = A.h if h is None else h
    if not len(A):
        raise EmptySet("the empty set has no representations")
    total = _check_size(len(A), h, cap)
    if method == "auto":
        method = "mitm" if total > DIRECT_LIMIT and isinstance(A.group, CyclicGroup) else "direct"
    counts = representation_counts(A, h, cap, method)
    g_star = max(counts.values())
    tops = sorted((t for t, c in counts.items() if c == g_star), key=A.group.sort_key)
    truncated = len(tops) > WITNESS_CAP
    tops = tops[:WITNESS_CAP]
    reps = _collect_reps(A, h, set(tops), method)
    return VerificationReport(
        h=h,
        set_size=len(A),
        group_order=A.group.order,
        exact_g=g_star,
        witnesses=[(t, [list(r) for r in reps[t]]) for t in tops],
        multisets_enumerated=total,
        truncated=truncated,
        method=method,
        group=A.group,
    )


def exact_g(A: BhSet, h: int | None = None, cap: int = ENUMERATION_CAP) -> int:
    return verify(A, h, cap).exact_g


def is_bhg(A: BhSet, h: int | None, g: int, cap: int = ENUMERATION_CAP) -> bool:
    return exact_g(A, h, cap) <= g


def difference_set(A: BhSet, cap: int = ENUMERATION_CAP) -> list:
    """A - A, sorted in the group's canonical order."""
    if len(A) ** 2 > cap:
        raise TooLarge(f"{len(A) ** 2} differences exceed the cap {cap}", size=len(A) ** 2)
    G = A.group
    diffs = {G.sub(x, y) for x in A.elements for y in A.elements}
    return sorted(diffs, key=G.sort_key)


def representations(A: BhSet, target, h: int | None = None, cap: int = ENUMERATION_CAP) -> list:
    """All h-multisets of A summing to target, in lexicographic order."""
    h = A.h if h is None else h
    total = _check_size(len(A), h, cap)
    target = A.group.canonical(target)
    method = "mitm" if total > DIRECT_LIMIT and isinstance(A.group, CyclicGroup) else "direct"
    return [list(r) for r in _collect_reps(A, h, {target}, method).get(target, [])]
