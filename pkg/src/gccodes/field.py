"""Exact arithmetic in GF(p^M).

Elements are residues of polynomials over GF(p) modulo a fixed monic
irreducible of degree M.  Internally an element is the integer
``c_0 + c_1 p + ... + c_{M-1} p^{M-1}`` built from its coefficient
sequence; this is also the canonical ordering of elements.  For p = 2 the
integer is a bit mask and addition is XOR.

The modulus is the first monic irreducible of degree M when monic
polynomials are listed by that same integer encoding, so a field is a pure
function of ``(p, M)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

from sympy import factorint, isprime

MAX_ORDER = 2**63


# -- helpers on dense coefficient lists over GF(p) ----------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(poly: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    M = len(poly) - 1
    if M < 1:
        return False
    if M == 1:
        return True
    # x^(p^M) == x (mod poly)
    xp = _pmod([0, 1], poly, p)
    powers = {}
    for i in range(1, M + 1):
        xp = _ppowmod_x_p(xp, poly, p)
        powers[i] = xp
    if _psub(powers[M], [0, 1], p):
        return False
    for ell in factorint(M):
        d = M // ell
        g = _pgcd(poly, _psub(powers[d], [0, 1], p), p)
        if len(g) != 1:
            return False
    return True


def _ppowmod_x_p(a, m, p):
    # a(x)^p mod m
    result = [1]
    base = list(a)
    e = p
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _int_to_digits(v: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _digits_to_int(digits, p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


# -- the field ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^M) with a canonical modulus (coefficients low degree first)."""

    p: int
    M: int
    modulus: tuple[int, ...]
    _mod_int: int = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_mod_int", _digits_to_int(self.modulus, self.p))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.M})"

    @property
    def order(self) -> int:
        return self.p**self.M

    # elements
    def __call__(self, value) -> FieldElement:
        """Coerce an int (canonical encoding) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"{value} is not an element encoding of {self!r}")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.M or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("bad coefficient sequence")
        return FieldElement(self, _digits_to_int(coeffs, self.p))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    # integer-level arithmetic; everything else is built on these
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, M = self.p, self.M
        return _digits_to_int(
            [(x + y) % p for x, y in zip(_int_to_digits(a, p, M), _int_to_digits(b, p, M))], p
        )

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, M = self.p, self.M
        return _digits_to_int([(-x) % p for x in _int_to_digits(a, p, M)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            M, mod = self.M, self._mod_int
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
                if a >> M:
                    a ^= mod
            return acc
        p, M = self.p, self.M
        prod = _pmul(_int_to_digits(a, p, M), _int_to_digits(b, p, M), p)
        return _digits_to_int(_pmod(prod, list(self.modulus), p), p)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if a == 0:
            return 0 if k else 1
        k %= self.order - 1
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.order - 2)

    def scalar(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    @functools.cached_property
    def primitive_element(self) -> FieldElement:
        """Least generator of the multiplicative group in canonical order."""
        return FieldElement(self, _least_primitive(self))


def _least_primitive(F: FieldSpec) -> int:
    N = F.order - 1
    if N == 1:
        return 1
    cofactors = [N // ell for ell in factorint(N)]
    for v in range(2, F.order):
        if all(F.pow(v, c) != 1 for c in cofactors):
            return v
    raise AssertionError("multiplicative group is cyclic")


@functools.cache
def field_build(p: int, M: int) -> FieldSpec:
    """Canonical GF(p^M)."""
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if M < 1:
        raise ValueError("extension degree must be positive")
    if p**M > MAX_ORDER:
        raise ValueError(f"GF({p}^{M}) exceeds the supported order 2^63")
    if M == 1:
        return FieldSpec(p, 1, (0, 1))
    for tail in range(p**M):
        poly = _int_to_digits(tail, p, M) + [1]
        if is_irreducible(poly, p):
            return FieldSpec(p, M, tuple(poly))
    raise AssertionError(f"no irreducible of degree {M} over GF({p})")


@dataclass(frozen=True, order=False)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_int_to_digits(self.value, self.field.p, self.field.M))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands live in different fields")
            return other.value
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def __lt__(self, other: FieldElement) -> bool:
        return self.value < self._other(other)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        """Multiplicative order."""
        if not self.value:
            raise ZeroDivisionError("zero has no multiplicative order")
        N = self.field.order - 1
        k = N
        for ell, mult in factorint(N).items():
            for _ in range(mult):
                if self.field.pow(self.value, k // ell) == 1:
                    k //= ell
                else:
                    break
        return k

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(reversed(terms)) or "0"


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise ValueError("operands live in different fields")


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    _check_same(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, e), = f.items()
    return p, e


def frobenius_pow(a: FieldElement, q: int, i: int) -> FieldElement:
    """a^(q^i)."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    F = a.field
    if not a.value:
        return a
    return FieldElement(F, F.pow(a.value, pow(q, i, F.order - 1)))


def subfield_membership(a: FieldElement, d: int) -> bool:
    """True iff a lies in the subfield of order p^d."""
    F = a.field
    if d < 1 or F.M % d:
        raise ValueError(f"GF({F.p}^{d}) is not a subfield of {F!r}")
    return frobenius_pow(a, F.p, d) == a


def relative_trace(a: FieldElement, q: int, r: int) -> FieldElement:
    """Trace from GF(q^r) down to GF(q) of an element of GF(q^r)."""
    p, e = prime_power(q)
    if p != a.field.p:
        raise ValueError("q is not a power of the characteristic")
    if not subfield_membership(a, e * r):
        raise ValueError(f"element does not lie in GF({q}^{r})")
    total = a.field.zero
    conj = a
    for _ in range(r):
        total = total + conj
        conj = frobenius_pow(conj, q, 1)
    return total


def primitive_nth_root(F: FieldSpec, n: int) -> FieldElement:
    """gamma^((|F|-1)/n) for the least primitive element gamma of F."""
    if n < 1 or (F.order - 1) % n:
        raise ValueError(f"{n} does not divide |{F!r}*| = {F.order - 1}")
    gamma = F.primitive_element
    return gamma ** ((F.order - 1) // n)
