"""Dense univariate polynomials over a :class:`~gccodes.field.FieldSpec`.

Coefficients are stored low degree first as canonical element integers and
always normalized (no trailing zeros).  The zero polynomial has degree
``None`` so that degree arithmetic on it fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldElement, FieldSpec


def _norm(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _norm(self.coeffs))

    # construction
    @classmethod
    def from_elements(cls, field: FieldSpec, elems: Sequence[FieldElement | int]) -> Polynomial:
        return cls(field, tuple(field(e).value for e in elems))

    @classmethod
    def zero(cls, field: FieldSpec) -> Polynomial:
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> Polynomial:
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> Polynomial:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c: int = 1) -> Polynomial:
        return cls(field, (0,) * k + (c,))

    @classmethod
    def xn_minus_1(cls, field: FieldSpec, n: int) -> Polynomial:
        if n < 1:
            raise ValueError("n must be positive")
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def linear(cls, field: FieldSpec, root: int) -> Polynomial:
        """x - root."""
        return cls(field, (field.neg(root), 1))

    # basic data
    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if i < len(self.coeffs) else 0)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def padded(self, length: int) -> list[int]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coordinates")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def _check(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    # ring operations
    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(F, tuple(
            F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)
        ))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        F = self.field
        if isinstance(other, FieldElement):
            other = Polynomial(F, (F(other).value,))
        elif isinstance(other, int):
            other = Polynomial(F, (F.scalar(other),))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial):
        return poly_divmod(self, other)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[1]

    def __call__(self, a: FieldElement) -> FieldElement:
        return poly_eval(self, a)

    def monic(self) -> Polynomial:
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic form")
        F = self.field
        inv = F.inv(self.lead)
        return Polynomial(F, tuple(F.mul(c, inv) for c in self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = repr(FieldElement(self.field, c))
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({coef})*{mono}")
            else:
                terms.append(coef)
        return " + ".join(reversed(terms))


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    f._check(g)
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    F = f.field
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return Polynomial.zero(F), f
    inv_lead = F.inv(g.lead)
    quot = [0] * (len(rem) - dg)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        c = rem[shift + dg]
        if not c:
            continue
        c = F.mul(c, inv_lead)
        quot[shift] = c
        for i, gi in enumerate(g.coeffs):
            if gi:
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, gi))
    return Polynomial(F, tuple(quot)), Polynomial(F, tuple(rem[:dg]))


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    f._check(g)
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic least common multiple."""
    if f.is_zero or g.is_zero:
        f._check(g)
        if f.is_zero and g.is_zero:
            raise ValueError("lcm(0, 0) is undefined")
        return Polynomial.zero(f.field)
    q, r = poly_divmod(f * g, poly_gcd(f, g))
    assert r.is_zero
    return q.monic()


def poly_sigma(f: Polynomial, q: int, times: int = 1) -> Polynomial:
    """Raise every coefficient to the power q^times."""
    F = f.field
    e = pow(q, times, F.order - 1) if F.order > 2 else 1
    return Polynomial(F, tuple(F.pow(c, e) if c else 0 for c in f.coeffs))


def poly_psi(f: Polynomial, q: int) -> Polynomial:
    """sigma(f) - f."""
    return poly_sigma(f, q) - f


def poly_reciprocal(f: Polynomial) -> Polynomial:
    """x^deg(f) f(1/x)."""
    if f.is_zero:
        raise ValueError("reciprocal of the zero polynomial")
    return Polynomial(f.field, tuple(reversed(f.coeffs)))


def poly_mod_xn_minus_1(f: Polynomial, n: int) -> Polynomial:
    if n < 1:
        raise ValueError("n must be positive")
    F = f.field
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        if c:
            out[i % n] = F.add(out[i % n], c)
    return Polynomial(F, tuple(out))


def poly_eval(f: Polynomial, a: FieldElement) -> FieldElement:
    F = f.field
    x = F(a).value
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return FieldElement(F, acc)


def coefficients_in_subfield(f: Polynomial, d: int) -> bool:
    """True iff every coefficient is fixed by x -> x^(p^d)."""
    F = f.field
    e = F.p**d
    return all(F.pow(c, e) == c for c in f.coeffs if c)
