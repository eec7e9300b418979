"""Finite abelian groups and homomorphisms between them.

Groups are written additively.  Elements are plain values: ``int`` residues
for cyclic groups, tuples for products, and :class:`FieldElement` for unit
groups and coset quotients (where "add" is field multiplication).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .algebra import (
    FieldDescriptor,
    FieldElement,
    QuotientRing,
    discrete_log,
    find_primitive,
    is_primitive,
    multiplicative_order,
)
from .errors import BhError, NonPrimitiveBase, NotCoprime, TooLarge, WrongGroup

ENUMERATION_CAP = 10**6


class Group:
    """Interface shared by every group kind."""

    kind = "abstract"

    @property
    def order(self) -> int:
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def canonical(self, x):
        """Validate x and return its canonical form; raise WrongGroup otherwise."""
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise NotImplementedError

    def sort_key(self, x):
        return x

    def sum(self, xs):
        acc = self.identity()
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def multiple(self, x, k: int):
        acc = self.identity()
        base = x
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def element_to_json(self, x):
        return x

    def element_from_json(self, v):
        return self.canonical(v)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class CyclicGroup(Group):
    N: int
    kind = "cyclic"

    def __post_init__(self):
        if self.N < 1:
            raise BhError(f"cyclic group order must be positive, got {self.N}")

    @property
    def order(self):
        return self.N

    def identity(self):
        return 0

    def add(self, x, y):
        return (x + y) % self.N

    def neg(self, x):
        return -x % self.N

    def canonical(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise WrongGroup(f"{x!r} is not a residue of Z_{self.N}")
        return x % self.N

    def elements(self):
        return iter(range(self.N))

    def to_json(self):
        return {"kind": "cyclic", "N": self.N}

    def __str__(self):
        return f"Z_{self.N}"


@dataclass(frozen=True)
class ProductGroup(Group):
    factors: tuple
    kind = "product"

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def order(self):
        return math.prod(f.order for f in self.factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def canonical(self, x):
        if not isinstance(x, (tuple, list)) or len(x) != len(self.factors):
            raise WrongGroup(f"{x!r} is not an element of {self}")
        return tuple(f.canonical(a) for f, a in zip(self.factors, x))

    def elements(self):
        return itertools.product(*(f.elements() for f in self.factors))

    def sort_key(self, x):
        return tuple(f.sort_key(a) for f, a in zip(self.factors, x))

    def element_to_json(self, x):
        return [f.element_to_json(a) for f, a in zip(self.factors, x)]

    def element_from_json(self, v):
        return tuple(f.element_from_json(a) for f, a in zip(self.factors, v))

    def to_json(self):
        return {"kind": "product", "factors": [f.to_json() for f in self.factors]}

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class UnitGroup(Group):
    """The multiplicative group of a quotient ring F_p[x]/(f)."""

    ring: QuotientRing
    kind = "unit-group"

    @property
    def order(self):
        if isinstance(self.ring, FieldDescriptor):
            return self.ring.order - 1
        return _count_units(self.ring)

    def identity(self):
        return self.ring.one

    def add(self, x, y):
        return x * y

    def neg(self, x):
        return x.inverse()

    def canonical(self, x):
        try:
            x = self.ring(x)
        except BhError as exc:
            raise WrongGroup(str(exc)) from exc
        if x.is_zero():
            raise WrongGroup("zero is not a unit")
        if not isinstance(self.ring, FieldDescriptor):
            x.inverse()  # raises DivisionByZero for non-units
        return x

    def elements(self):
        for x in self.ring.elements():
            if not x.is_zero():
                if isinstance(self.ring, FieldDescriptor):
                    yield x
                else:
                    try:
                        x.inverse()
                    except BhError:
                        continue
                    yield x

    def sort_key(self, x):
        return x.index

    def element_to_json(self, x):
        return list(x.coeffs)

    def to_json(self):
        return {"kind": "unit-group", "field": self.ring.to_json()}

    def __str__(self):
        return f"({self.ring})*"


@functools.lru_cache(maxsize=64)
def _count_units(ring: QuotientRing) -> int:
    if ring.order > ENUMERATION_CAP:
        raise TooLarge(f"ring of order {ring.order} too large to count units", size=ring.order)
    count = 0
    for x in ring.elements():
        if x.is_zero():
            continue
        try:
            x.inverse()
        except BhError:
            continue
        count += 1
    return count


@dataclass(frozen=True)
class CosetQuotient(Group):
    """F* / <subgroup_gen>, each coset represented by its member of least log.

    With theta primitive and m = |F*| / |<subgroup_gen>|, the coset of x is
    {theta^(log x + j*m)}, so its canonical member is theta^(log x mod m).
    """

    field: FieldDescriptor
    subgroup_gen: FieldElement
    theta: FieldElement = None
    kind = "coset-quotient"

    def __post_init__(self):
        if self.theta is None:
            object.__setattr__(self, "theta", find_primitive(self.field))
        elif not is_primitive(self.theta):
            raise NonPrimitiveBase(f"{self.theta} is not primitive")
        if self.subgroup_gen.field != self.field or self.subgroup_gen.is_zero():
            raise WrongGroup("subgroup generator must be a unit of the field")

    @functools.cached_property
    def subgroup_order(self) -> int:
        return multiplicative_order(self.subgroup_gen)

    @property
    def order(self):
        return (self.field.order - 1) // self.subgroup_order

    def log(self, x) -> int:
        """Least discrete log in the coset of x, i.e. the index in Z_order."""
        return discrete_log(self.theta, x) % self.order

    def identity(self):
        return self.field.one

    def add(self, x, y):
        return self.canonical(x * y)

    def neg(self, x):
        return self.canonical(x.inverse())

    def canonical(self, x):
        try:
            x = self.field(x)
        except BhError as exc:
            raise WrongGroup(str(exc)) from exc
        if x.is_zero():
            raise WrongGroup("zero is not a unit")
        return self.theta ** self.log(x)

    def elements(self):
        for e in range(self.order):
            yield self.theta**e

    def sort_key(self, x):
        return self.log(x)

    def element_to_json(self, x):
        return list(x.coeffs)

    def to_json(self):
        return {
            "kind": "coset-quotient",
            "field": self.field.to_json(),
            "subgroup_gen": list(self.subgroup_gen.coeffs),
            "theta": list(self.theta.coeffs),
        }

    def __str__(self):
        return f"{self.field}* / <{self.subgroup_gen}>"


def group_from_json(obj: dict) -> Group:
    kind = obj["kind"]
    if kind == "cyclic":
        return CyclicGroup(int(obj["N"]))
    if kind == "product":
        return ProductGroup(tuple(group_from_json(f) for f in obj["factors"]))
    if kind == "unit-group":
        f = obj["field"]
        try:
            ring = FieldDescriptor.from_json(f)
        except BhError:
            ring = QuotientRing(f["p"], tuple(f["modulus"]))
        return UnitGroup(ring)
    if kind == "coset-quotient":
        F = FieldDescriptor.from_json(obj["field"])
        theta = F(obj["theta"]) if obj.get("theta") is not None else None
        return CosetQuotient(F, F(obj["subgroup_gen"]), theta)
    raise BhError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# homomorphisms


class Homomorphism:
    """A homomorphism with a known kernel size.

    ``surjective`` homomorphisms satisfy kernel_size * |target| = |source|.
    """

    kind = "abstract"
    surjective = True
    source: Group
    target: Group

    @property
    def kernel_size(self) -> int:
        raise NotImplementedError

    def _apply(self, x):
        raise NotImplementedError

    def __call__(self, x):
        try:
            x = self.source.canonical(x)
        except (WrongGroup, TypeError, ValueError) as exc:
            raise WrongGroup(f"{x!r} is not in the source group {self.source}") from exc
        return self._apply(x)

    def params(self) -> dict:
        return {}

    def kernel(self, cap: int = ENUMERATION_CAP) -> list:
        """Kernel by enumeration of the source; subclasses override with closed forms."""
        if self.source.order > cap:
            raise TooLarge(f"source of order {self.source.order} too large", size=self.source.order)
        e = self.target.identity()
        return [x for x in self.source.elements() if self._apply(x) == e]

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        out.update(self.params())
        out["kernel_size"] = self.kernel_size
        return out


@dataclass(frozen=True)
class IdentityHom(Homomorphism):
    group: Group
    kind = "identity"

    @property
    def source(self):
        return self.group

    @property
    def target(self):
        return self.group

    @property
    def kernel_size(self):
        return 1

    def _apply(self, x):
        return x

    def kernel(self):
        return [self.group.identity()]

    def params(self):
        return {"group": self.group.to_json()}


@dataclass(frozen=True)
class ModReduction(Homomorphism):
    """Z_N -> Z_{N/g}, x -> x mod N/g."""

    N: int
    g: int
    kind = "mod-reduction"

    def __post_init__(self):
        if self.g < 1 or self.N % self.g:
            raise BhError(f"reduction divisor {self.g} does not divide {self.N}")

    @property
    def source(self):
        return CyclicGroup(self.N)

    @property
    def target(self):
        return CyclicGroup(self.N // self.g)

    @property
    def kernel_size(self):
        return self.g

    def _apply(self, x):
        return x % (self.N // self.g)

    def kernel(self):
        m = self.N // self.g
        return [m * i for i in range(self.g)]

    def params(self):
        return {"N": self.N, "g": self.g}


def crt_combine(x: Sequence[int], m: int, n: int) -> int:
    """The t in [0, mn) with t = x[0] mod m and t = x[1] mod n."""
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    a, b = x[0] % m, x[1] % n
    return (a + m * ((b - a) * pow(m, -1, n) % n)) % (m * n) if n > 1 else a % (m * n)


def crt_split(t: int, m: int, n: int) -> tuple:
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    return (t % m, t % n)


@dataclass(frozen=True)
class CrtCombine(Homomorphism):
    """Z_m x Z_n -> Z_mn in the declared factor order."""

    m: int
    n: int
    kind = "crt-combine"

    def __post_init__(self):
        if math.gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) != 1")

    @property
    def source(self):
        return ProductGroup((CyclicGroup(self.m), CyclicGroup(self.n)))

    @property
    def target(self):
        return CyclicGroup(self.m * self.n)

    @property
    def kernel_size(self):
        return 1

    def _apply(self, x):
        return crt_combine(x, self.m, self.n)

    def kernel(self):
        return [(0, 0)]

    def params(self):
        return {"m": self.m, "n": self.n}


@dataclass(frozen=True)
class CrtSplit(Homomorphism):
    m: int
    n: int
    kind = "crt-split"

    def __post_init__(self):
        if math.gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) != 1")

    @property
    def source(self):
        return CyclicGroup(self.m * self.n)

    @property
    def target(self):
        return ProductGroup((CyclicGroup(self.m), CyclicGroup(self.n)))

    @property
    def kernel_size(self):
        return 1

    def _apply(self, t):
        return crt_split(t, self.m, self.n)

    def kernel(self):
        return [0]

    def params(self):
        return {"m": self.m, "n": self.n}


@dataclass(frozen=True)
class DlogIso(Homomorphism):
    """log_theta : F* -> Z_{p^n - 1}."""

    field: FieldDescriptor
    theta: FieldElement
    kind = "dlog-iso"

    def __post_init__(self):
        if not is_primitive(self.theta):
            raise NonPrimitiveBase(f"{self.theta} is not primitive in {self.field}")

    @property
    def source(self):
        return UnitGroup(self.field)

    @property
    def target(self):
        return CyclicGroup(self.field.order - 1)

    @property
    def kernel_size(self):
        return 1

    def _apply(self, x):
        return discrete_log(self.theta, x)

    def kernel(self):
        return [self.field.one]

    def params(self):
        return {"field": self.field.to_json(), "theta": list(self.theta.coeffs)}


@dataclass(frozen=True)
class CosetProjection(Homomorphism):
    """F* -> F*/<subgroup_gen>, x -> x<subgroup_gen>."""

    field: FieldDescriptor
    subgroup_gen: FieldElement
    theta: FieldElement = None
    kind = "coset-projection"

    def __post_init__(self):
        if self.theta is None:
            object.__setattr__(self, "theta", find_primitive(self.field))

    @property
    def source(self):
        return UnitGroup(self.field)

    @property
    def target(self):
        return CosetQuotient(self.field, self.subgroup_gen, self.theta)

    @property
    def kernel_size(self):
        return multiplicative_order(self.subgroup_gen)

    def _apply(self, x):
        return self.target.canonical(x)

    def kernel(self):
        out = []
        x = self.field.one
        for _ in range(self.kernel_size):
            out.append(x)
            x = x * self.subgroup_gen
        return sorted(out, key=lambda e: e.index)

    def params(self):
        return {
            "field": self.field.to_json(),
            "subgroup_gen": list(self.subgroup_gen.coeffs),
            "theta": list(self.theta.coeffs),
        }


@dataclass(frozen=True)
class CosetDlog(Homomorphism):
    """F*/H -> Z_{|F*/H|}, coset -> least log of its members (an isomorphism)."""

    quotient: CosetQuotient
    kind = "coset-dlog"

    @property
    def source(self):
        return self.quotient

    @property
    def target(self):
        return CyclicGroup(self.quotient.order)

    @property
    def kernel_size(self):
        return 1

    def _apply(self, x):
        return self.quotient.log(x)

    def kernel(self):
        return [self.quotient.identity()]

    def params(self):
        return {"quotient": self.quotient.to_json()}


@dataclass(frozen=True)
class Componentwise(Homomorphism):
    parts: tuple
    kind = "componentwise"

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def source(self):
        return ProductGroup(tuple(h.source for h in self.parts))

    @property
    def target(self):
        return ProductGroup(tuple(h.target for h in self.parts))

    @property
    def surjective(self):
        return all(h.surjective for h in self.parts)

    @property
    def kernel_size(self):
        return math.prod(h.kernel_size for h in self.parts)

    def _apply(self, x):
        return tuple(h._apply(a) for h, a in zip(self.parts, x))

    def kernel(self):
        return list(itertools.product(*(h.kernel() for h in self.parts)))

    def params(self):
        return {"parts": [h.to_json() for h in self.parts]}


@dataclass(frozen=True)
class Composition(Homomorphism):
    """Apply ``steps[0]`` first, then ``steps[1]``, and so on."""

    steps: tuple
    kind = "composition"

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise BhError("empty composition")
        for a, b in zip(self.steps, self.steps[1:]):
            if a.target != b.source:
                raise WrongGroup(f"cannot compose: {a.target} != {b.source}")

    @property
    def source(self):
        return self.steps[0].source

    @property
    def target(self):
        return self.steps[-1].target

    @property
    def surjective(self):
        return all(h.surjective for h in self.steps)

    @property
    def kernel_size(self):
        # |ker(b o a)| = |ker a| * |ker b| when a is onto b's source
        if self.surjective:
            return math.prod(h.kernel_size for h in self.steps)
        return len(self.kernel())

    def _apply(self, x):
        for h in self.steps:
            x = h._apply(x)
        return x

    def params(self):
        return {"steps": [h.to_json() for h in self.steps]}


def hom_from_json(obj: dict) -> Homomorphism:
    kind = obj["kind"]
    if kind == "identity":
        return IdentityHom(group_from_json(obj["group"]))
    if kind == "mod-reduction":
        return ModReduction(obj["N"], obj["g"])
    if kind == "crt-combine":
        return CrtCombine(obj["m"], obj["n"])
    if kind == "crt-split":
        return CrtSplit(obj["m"], obj["n"])
    if kind == "dlog-iso":
        F = FieldDescriptor.from_json(obj["field"])
        return DlogIso(F, F(obj["theta"]))
    if kind == "coset-projection":
        F = FieldDescriptor.from_json(obj["field"])
        return CosetProjection(F, F(obj["subgroup_gen"]), F(obj["theta"]))
    if kind == "coset-dlog":
        return CosetDlog(group_from_json(obj["quotient"]))
    if kind == "componentwise":
        return Componentwise(tuple(hom_from_json(h) for h in obj["parts"]))
    if kind == "composition":
        return Composition(tuple(hom_from_json(h) for h in obj["steps"]))
    raise BhError(f"unknown homomorphism kind {kind!r}")


# ---------------------------------------------------------------------------
# operation-level helpers


def apply_hom(phi: Homomorphism, x: Any):
    return phi(x)


def kernel_elements(phi: Homomorphism, cap: int = ENUMERATION_CAP) -> list:
    """Elements of the kernel; closed form where known, else enumeration up to cap."""
    if type(phi).kernel is Homomorphism.kernel:
        return phi.kernel(cap)
    return phi.kernel()


def dlog_iso(field: FieldDescriptor, theta: FieldElement) -> DlogIso:
    return DlogIso(field, theta)


def coset_projection(
    field: FieldDescriptor, subgroup_gen: FieldElement, theta: FieldElement | None = None
) -> CosetProjection:
    return CosetProjection(field, field(subgroup_gen), theta)
