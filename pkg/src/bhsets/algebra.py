"""Exact arithmetic in F_p and F_{p^n} = F_p[x]/(f).

Polynomials are tuples of integers in [0, p), constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  Field elements keep
a fixed-length coefficient vector so that they can be enumerated and encoded
as integers: the vector (c_0, ..., c_{n-1}) has index sum(c_i * p**i), i.e.
the constant term varies fastest.  Every "scan order" in this module is
ascending index order.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BhError,
    DivisionByZero,
    MixedFields,
    NonPrimitiveBase,
    NotIrreducible,
    TooLarge,
    ZeroElement,
    ZeroTarget,
)

FACTORIZE_CAP = 2**63 - 1
LOG_TABLE_LIMIT = 2**20

Poly = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# integers


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with strictly increasing primes

    def __post_init__(self):
        prod = 1
        last = 1
        for q, e in self.factors:
            if q <= last or e < 1 or not is_prime(q):
                raise BhError(f"bad factor list {self.factors}")
            last = q
            prod *= q**e
        if prod != self.value:
            raise BhError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self):
        return tuple(q for q, _ in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)


@functools.lru_cache(maxsize=1024)
def factorize(m: int) -> Factorization:
    """Prime factorization by trial division."""
    if m < 1:
        raise BhError(f"cannot factor {m}")
    if m > FACTORIZE_CAP:
        raise TooLarge(f"{m} exceeds factorization cap {FACTORIZE_CAP}", size=m)
    out = []
    rest = m
    q = 2
    while q * q <= rest:
        if rest % q == 0:
            e = 0
            while rest % q == 0:
                rest //= q
                e += 1
            out.append((q, e))
        q += 1 if q == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return Factorization(m, tuple(out))


def divisors(m: int) -> list:
    ds = [1]
    for q, e in factorize(m).factors:
        ds = [d * q**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def prime_power(q: int) -> tuple:
    """Return (p, k) with q = p**k, or raise if q is not a prime power."""
    fact = factorize(q) if q > 1 else None
    if fact is None or len(fact.factors) != 1:
        raise BhError(f"{q} is not a prime power")
    return fact.factors[0]


# ---------------------------------------------------------------------------
# polynomials over F_p


def poly_trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_reduce_coeffs(a: Iterable[int], p: int) -> Poly:
    return poly_trim([c % p for c in a])


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return poly_trim(
        [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    )


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return poly_trim(
        [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    )


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_reduce_coeffs(out, p)


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv_lead % p
            q[i - db] = c
            for j, bj in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * bj) % p
    return poly_trim(q), poly_reduce_coeffs(r[:db] if db else [], p)


def poly_mod(a: Poly, b: Poly, p: int) -> Poly:
    return poly_divmod(a, b, p)[1]


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic gcd."""
    while b:
        a, b = b, poly_mod(a, b, p)
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def poly_powmod(a: Poly, k: int, f: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = poly_mod(a, f, p)
    while k:
        if k & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        k >>= 1
    return poly_mod(result, f, p)


def poly_eval(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p: gcd(f, x^(p^k) - x) = 1 for every k <= deg/2."""
    f = poly_reduce_coeffs(f, p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = (0, 1)
    xp = x
    for _ in range(n // 2):
        xp = poly_powmod(xp, p, f, p)
        if len(poly_gcd(f, poly_sub(xp, x, p), p)) > 1:
            return False
    return True


def iter_monic(p: int, n: int) -> Iterator[Poly]:
    """All monic degree-n polynomials in scan order (constant term fastest)."""
    for i in range(p**n):
        yield index_to_coeffs(i, p, n) + (1,)


def iter_irreducibles(p: int, n: int) -> Iterator[Poly]:
    for f in iter_monic(p, n):
        if is_irreducible(f, p):
            yield f


@functools.lru_cache(maxsize=256)
def find_irreducible(p: int, n: int) -> Poly:
    """Smallest monic irreducible of degree n over F_p in scan order."""
    if not is_prime(p):
        raise BhError(f"{p} is not prime")
    if n < 1:
        raise BhError(f"degree must be >= 1, got {n}")
    return next(iter_irreducibles(p, n))


def index_to_coeffs(i: int, p: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        i, r = divmod(i, p)
        out.append(r)
    return tuple(out)


def coeffs_to_index(c: Sequence[int], p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = acc * p + v
    return acc


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*x(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str, p: int) -> Poly:
    """Parse polynomial notation such as ``-2x^2+2x-1`` into coefficients mod p.

    Unicode minus signs are accepted.  A bare comma separated list
    (``6,2,5``) is read as coefficients, constant term first.
    """
    s = text.replace("−", "-").replace(" ", "").replace("**", "^")
    if re.fullmatch(r"-?\d+(,-?\d+)*", s) and "," in s:
        return poly_reduce_coeffs([int(t) for t in s.split(",")], p)
    if not s:
        raise BhError("empty polynomial")
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise BhError(f"cannot parse polynomial {text!r}")
        sign, num, xpart, exp = m.groups()
        if not num and not xpart:
            raise BhError(f"cannot parse polynomial {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        d = (int(exp) if exp else 1) if xpart else 0
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
    deg = max(coeffs)
    return poly_reduce_coeffs([coeffs.get(i, 0) for i in range(deg + 1)], p)


def format_poly(c: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(c) - 1, -1, -1):
        v = c[i]
        if not v:
            continue
        if i == 0:
            terms.append(str(v))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if v == 1 else f"{v}{mono}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# rings and fields


@dataclass(frozen=True)
class QuotientRing:
    """F_p[x]/(f) for a monic f of degree >= 1, not necessarily irreducible."""

    p: int
    modulus: tuple

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))
        if not is_prime(self.p):
            raise BhError(f"characteristic {self.p} is not prime")
        if len(self.modulus) < 2 or self.modulus[-1] != 1:
            raise BhError(f"modulus {list(self.modulus)} must be monic of degree >= 1")

    @property
    def n(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p**self.n

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (constant), coefficient sequence or notation string."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value,))
        if isinstance(value, str):
            return FieldElement(self, parse_poly(value, self.p))
        return FieldElement(self, tuple(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,))

    @property
    def gen(self) -> "FieldElement":
        """The class of x."""
        return FieldElement(self, (0, 1))

    def from_index(self, i: int) -> "FieldElement":
        return FieldElement(self, index_to_coeffs(i, self.p, self.n), _canonical=True)

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.order):
            yield self.from_index(i)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    def __str__(self):
        return f"F_{self.p}[x]/({format_poly(self.modulus)})"


class FieldDescriptor(QuotientRing):
    """F_{p^n} as F_p[x]/(f) with f monic irreducible of degree n."""

    def __init__(self, p: int, n: int | None = None, modulus: Sequence[int] | None = None):
        if modulus is None:
            if n is None:
                raise BhError("need a degree or a modulus")
            if not is_prime(p):
                raise BhError(f"characteristic {p} is not prime")
            modulus = find_irreducible(p, n)
        super().__init__(p, tuple(modulus))
        if n is not None and self.n != n:
            raise BhError(f"modulus has degree {self.n}, expected {n}")
        if not is_irreducible(self.modulus, self.p):
            raise NotIrreducible(f"{format_poly(self.modulus)} is reducible over F_{self.p}")

    def __repr__(self):
        return f"FieldDescriptor(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def __str__(self):
        if self.n == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.n}[{format_poly(self.modulus)}]"

    @classmethod
    def from_json(cls, obj: dict) -> "FieldDescriptor":
        return cls(obj["p"], obj.get("n"), obj.get("modulus"))

    @property
    def unit_order(self) -> int:
        return self.order - 1


def prime_field(p: int) -> FieldDescriptor:
    """F_p; the modulus is x, so elements are plain residues."""
    return FieldDescriptor(p, 1, (0, 1))


class FieldElement:
    """An element of a QuotientRing, stored as a canonical coefficient vector."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, ring: QuotientRing, coeffs: Sequence[int], _canonical: bool = False):
        self.field = ring
        if not _canonical:
            c = poly_reduce_coeffs(coeffs, ring.p)
            if len(c) > ring.n:
                c = poly_mod(c, ring.modulus, ring.p)
            coeffs = tuple(c) + (0,) * (ring.n - len(c))
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- plumbing --------------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, (other,))
        return NotImplemented

    @property
    def poly(self) -> Poly:
        return poly_trim(self.coeffs)

    @property
    def index(self) -> int:
        return coeffs_to_index(self.coeffs, self.field.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldElement(self.field, (other,))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.field.modulus, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"FieldElement({format_poly(self.poly)})"

    def __str__(self):
        return format_poly(self.poly)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), True
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs), True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)), True
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.field
        p, f, n = ring.p, ring.modulus, ring.n
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        # f monic: x^n = -(f_0 + ... + f_{n-1} x^{n-1})
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                base = k - n
                for j in range(n):
                    prod[base + j] -= c * f[j]
        return FieldElement(ring, tuple(v % p for v in prod[:n]), True)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Extended Euclid in F_p[x]; fails when the element is not a unit."""
        ring = self.field
        p = ring.p
        a = self.poly
        if not a:
            raise DivisionByZero("inverse of zero")
        r0, r1 = ring.modulus, a
        s0, s1 = (), (1,)
        while r1:
            q, r = poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        if len(r0) != 1:
            raise DivisionByZero(f"{self} is not a unit in {ring}")
        inv_c = pow(r0[0], -1, p)
        return FieldElement(ring, tuple(c * inv_c % p for c in s0))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> list:
        return list(self.coeffs)


def field_arith(a: FieldElement, b: FieldElement | None, op: str, k: int | None = None) -> FieldElement:
    """Dispatch helper: op in {'add', 'sub', 'mul', 'inv', 'pow'}."""
    if b is not None and isinstance(b, FieldElement) and a.field != b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** (k if k is not None else b)
    raise BhError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# multiplicative structure


def unit_factorization(F: FieldDescriptor) -> Factorization:
    return factorize(F.order - 1)


def multiplicative_order(a: FieldElement, fact: Factorization | None = None) -> int:
    """Least e >= 1 with a^e = 1, found by stripping prime factors of p^n - 1."""
    if a.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    F = a.field
    if fact is None:
        fact = unit_factorization(F)
    if fact.value != F.order - 1:
        raise BhError(f"factorization of {fact.value} does not match p^n - 1 = {F.order - 1}")
    e = fact.value
    for q, k in fact.factors:
        for _ in range(k):
            if (a ** (e // q)) == F.one:
                e //= q
            else:
                break
    return e


def is_primitive(a: FieldElement) -> bool:
    if a.is_zero():
        return False
    return multiplicative_order(a) == a.field.order - 1


@functools.lru_cache(maxsize=256)
def find_primitive(F: FieldDescriptor) -> FieldElement:
    """First primitive element of F in scan order."""
    fact = unit_factorization(F)
    for i in range(1, F.order):
        a = F.from_index(i)
        if multiplicative_order(a, fact) == F.order - 1:
            return a
    raise AssertionError("unreachable: finite fields are cyclic")


@functools.lru_cache(maxsize=64)
def _log_table(base: FieldElement) -> dict:
    table = {}
    x = base.field.one
    for e in range(base.field.order - 1):
        table[x.coeffs] = e
        x = x * base
    return table


def _bsgs(base: FieldElement, target: FieldElement, order: int) -> int:
    m = math.isqrt(order - 1) + 1
    baby = {}
    x = base.field.one
    for j in range(m):
        baby.setdefault(x.coeffs, j)
        x = x * base
    step = base ** (order - m)  # base^(-m)
    y = target
    for i in range(m + 1):
        j = baby.get(y.coeffs)
        if j is not None:
            return (i * m + j) % order
        y = y * step
    raise AssertionError("target not in the group generated by base")


def discrete_log(base: FieldElement, target: FieldElement, method: str = "auto") -> int:
    """Exact logarithm of target to the primitive base, in [0, p^n - 1).

    ``method`` is "table" (full power table, cached per base), "bsgs"
    (baby-step giant-step) or "auto" (table up to 2^20 elements).
    """
    F = base.field
    target = F(target)
    if target.is_zero():
        raise ZeroTarget("logarithm of zero")
    if not is_primitive(base):
        raise NonPrimitiveBase(f"{base} is not primitive in {F}")
    if method == "auto":
        method = "table" if F.order <= LOG_TABLE_LIMIT else "bsgs"
    if method == "table":
        return _log_table(base)[target.coeffs]
    if method == "bsgs":
        return _bsgs(base, target, F.order - 1)
    raise BhError(f"unknown discrete log method {method!r}")


# ---------------------------------------------------------------------------
# subfields


def subfield_elements(F: FieldDescriptor, k: int) -> list:
    """The p^k elements of the unique subfield F_{p^k} of F, in scan order."""
    if F.n % k:
        raise BhError(f"F_{F.p}^{k} is not a subfield of F_{F.p}^{F.n}")
    if k == 1:
        return [F(c) for c in range(F.p)]
    q = F.p**k
    g = find_primitive(F) ** ((F.order - 1) // (q - 1))
    out = [F.zero]
    x = F.one
    for _ in range(q - 1):
        out.append(x)
        x = x * g
    return sorted(out, key=lambda e: e.index)


def in_subfield(a: FieldElement, q: int) -> bool:
    """Membership in F_q via the Frobenius fixed-point test a^q = a."""
    return a**q == a


def degree_over(a: FieldElement, q: int) -> int:
    """Degree of a over F_q: least e dividing [F : F_q] with a^(q^e) = a."""
    F = a.field
    p, k = prime_power(q)
    if p != F.p or F.n % k:
        raise BhError(f"F_{q} is not a subfield of {F}")
    m = F.n // k
    for e in divisors(m):
        if a ** (q**e) == a:
            return e
    return m
