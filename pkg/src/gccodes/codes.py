"""Cyclic codes over GF(q^r) and their F_q-weight distributions.

Every code lives in the splitting field F of x^n - 1 over GF(q^r), with a
fixed primitive n-th root of unity zeta.  The code with root set B is
generated by g_B(x) = prod_{k in B} (x - zeta^k).  For enumeration the
codewords are moved to index arrays over the coefficient subfield GF(q^r)
(see :mod:`gccodes.span`).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclotomic import Block, InvalidBlockError, OrbitTable, orbit_table, multiplicative_order
from .enumerators import (
    WeightEnumerator,
    even_subcode_counts,
    extended_counts,
    full_space_hamming,
    galois_supplemented_counts,
    zero_sum_hamming,
)
from .field import FieldElement, FieldSpec, field_build, prime_power, primitive_nth_root
from .poly import (
    Polynomial,
    coefficients_in_subfield,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_lcm,
    poly_mod_xn_minus_1,
    poly_sigma,
)
from .span import LinearSpan, SmallField, check_guard, histogram, small_field


class NotGaloisCoprime(ValueError):
    pass


class CodeConsistencyError(AssertionError):
    """An internal cross-check failed; this indicates a bug, not bad input."""


@functools.cache
def splitting_field(n: int, q: int, r: int) -> FieldSpec:
    """GF(p^(e r t)) with q = p^e and t = ord(q^r mod n)."""
    p, e = prime_power(q)
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    t = multiplicative_order(pow(q, r, n), n)
    return field_build(p, e * r * t)


@dataclass(frozen=True, eq=False)
class CyclicCode:
    n: int
    q: int
    r: int
    generator: Polynomial
    roots: frozenset[int]
    block: Block | None = None

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def zeta(self) -> FieldElement:
        return primitive_nth_root(self.field, self.n)

    @property
    def e(self) -> int:
        return prime_power(self.q)[1]

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    @property
    def size(self) -> int:
        return (self.q**self.r) ** self.dimension

    @property
    def table(self) -> OrbitTable:
        return orbit_table(self.n, self.q, self.r)

    @property
    def coefficient_field(self) -> SmallField:
        """GF(q^r) inside the splitting field."""
        return small_field(self.field, self.e * self.r)

    @property
    def base_field(self) -> SmallField:
        """GF(q) inside the splitting field."""
        return small_field(self.field, self.e)

    def basis(self) -> np.ndarray:
        """Rows x^i g(x), i < dim, as GF(q^r) index arrays."""
        sf = self.coefficient_field
        rows = np.zeros((self.dimension, self.n), dtype=sf.dtype)
        if not self.dimension:
            return rows
        g = [sf.idx(c) for c in self.generator.padded(self.n)]
        for i in range(self.dimension):
            rows[i] = np.roll(g, i)
        return rows

    def span(self) -> LinearSpan:
        return LinearSpan(self.coefficient_field, self.basis(), self.n)

    def word_polynomial(self, word: Sequence[int]) -> Polynomial:
        """Polynomial of a GF(q^r) index word."""
        sf = self.coefficient_field
        return Polynomial(self.field, tuple(sf.elements[int(i)] for i in word))

    def contains(self, word: Sequence[int]) -> bool:
        f = self.word_polynomial(word)
        return poly_divmod(f, self.generator)[1].is_zero

    def __repr__(self) -> str:
        src = f" B={self.block!r}" if self.block is not None else ""
        return f"CyclicCode(n={self.n}, q={self.q}, r={self.r}, dim={self.dimension}{src})"


def _roots_of(g: Polynomial, n: int) -> frozenset[int]:
    F = g.field
    zeta = primitive_nth_root(F, n)
    return frozenset(k for k in range(n) if not poly_eval(g, zeta**k))


def generator_from_roots(F: FieldSpec, n: int, roots) -> Polynomial:
    zeta = primitive_nth_root(F, n)
    g = Polynomial.one(F)
    for k in sorted(roots):
        g = g * Polynomial.linear(F, (zeta**k).value)
    return g


def code_from_roots(n: int, q: int, r: int, roots, block: Block | None = None) -> CyclicCode:
    """Cyclic code whose generator vanishes exactly at zeta^k, k in roots.

    roots must be stable under multiplication by q^r, otherwise the generator
    is not defined over GF(q^r).
    """
    roots = frozenset(k % n for k in roots)
    qr = pow(q, r, n)
    if {(k * qr) % n for k in roots} != roots:
        raise ValueError("root set is not closed under multiplication by q^r")
    F = splitting_field(n, q, r)
    g = generator_from_roots(F, n, roots)
    p, e = prime_power(q)
    if not coefficients_in_subfield(g, e * r):
        raise CodeConsistencyError(f"generator for roots {sorted(roots)} is not over GF({q}^{r})")
    return CyclicCode(n, q, r, g, roots, block)


def code_from_block(B: Block) -> CyclicCode:
    if not B.is_valid:
        raise InvalidBlockError(f"{B!r} is not a q^r-block: {B.check.reason}")
    t = B.table
    return code_from_roots(t.n, t.q, t.r, B.elements, block=B)


def code_from_generator(g: Polynomial, n: int, q: int, r: int) -> CyclicCode:
    F = splitting_field(n, q, r)
    if g.field != F:
        raise ValueError(f"generator must be given over the splitting field {F!r}")
    if g.is_zero:
        raise ValueError("zero generator")
    g = g.monic()
    if not poly_divmod(Polynomial.xn_minus_1(F, n), g)[1].is_zero:
        raise ValueError("generator does not divide x^n - 1")
    if not coefficients_in_subfield(g, prime_power(q)[1] * r):
        raise ValueError(f"generator has coefficients outside GF({q}^{r})")
    return CyclicCode(n, q, r, g, _roots_of(g, n))


def even_subcode(C: CyclicCode) -> CyclicCode:
    """C+ = words with coordinate sum 0, generated by (x - 1) g."""
    if 0 in C.roots:
        return C
    return code_from_roots(C.n, C.q, C.r, C.roots | {0})


# -- Galois coprimality -------------------------------------------------------

def is_galois_coprime(g: Polynomial, q: int, r: int, n: int | None = None) -> bool:
    """gcd(g, sigma^i g) = 1 for 1 <= i < r."""
    if n is not None and not poly_divmod(Polynomial.xn_minus_1(g.field, n), g)[1].is_zero:
        raise ValueError("g does not divide x^n - 1")
    one = Polynomial.one(g.field)
    return all(poly_gcd(g, poly_sigma(g, q, i)) == one for i in range(1, r))


def conjugate_lcm(g: Polynomial, q: int, r: int) -> Polynomial:
    """[g, g^sigma, ..., g^(sigma^(r-1))]."""
    out = g
    for i in range(1, r):
        out = poly_lcm(out, poly_sigma(g, q, i))
    return out


def _require_coprime(C: CyclicCode) -> None:
    if not is_galois_coprime(C.generator, C.q, C.r):
        raise NotGaloisCoprime(f"{C!r}: generator is not Galois coprime")


# -- closed forms -------------------------------------------------------------

def fqwe_closed(C: CyclicCode) -> WeightEnumerator:
    _require_coprime(C)
    return WeightEnumerator(
        C.n, galois_supplemented_counts(C.n, C.q, C.r, C.generator.degree), "fq_weight"
    )


def fqwe_even_subcode(C: CyclicCode) -> WeightEnumerator:
    _require_coprime(C)
    return WeightEnumerator(C.n, even_subcode_counts(C.n, C.q, C.r, C.generator.degree), "fq_weight")


def fqwe_extended(C: CyclicCode) -> WeightEnumerator:
    _require_coprime(C)
    return WeightEnumerator(C.n + 1, extended_counts(C.n, C.q, C.r, C.generator.degree), "fq_weight")


# -- brute force --------------------------------------------------------------

def _fq_weight_hist(span: LinearSpan, q: int, workers: int = 1) -> list[int]:
    mask = span.sf.in_subfield_mask(q)
    n = span.n

    def fn(chunk):
        return histogram(mask[chunk].sum(axis=1), n)

    return span.reduce(fn, np.add, workers).tolist()


def _hamming_hist(span: LinearSpan, workers: int = 1) -> list[int]:
    n = span.n
    return span.reduce(lambda c: histogram(np.count_nonzero(c, axis=1), n), np.add, workers).tolist()


def fqwe_brute(C: CyclicCode, guard: int | None = None, workers: int = 1) -> WeightEnumerator:
    """Count coordinates fixed by x -> x^q over every codeword."""
    check_guard(C.size, guard)
    return WeightEnumerator(C.n, tuple(_fq_weight_hist(C.span(), C.q, workers)), "fq_weight")


def hamming_brute(C: CyclicCode, guard: int | None = None, workers: int = 1) -> WeightEnumerator:
    check_guard(C.size, guard)
    return WeightEnumerator(C.n, tuple(_hamming_hist(C.span(), workers)), "hamming")


def extended_span(C: CyclicCode) -> LinearSpan:
    """The code extended by an overall parity coordinate -sum(c)."""
    sf = C.coefficient_field
    basis = C.basis()
    parity = sf.neg_table[sf.sum_rows(basis)] if len(basis) else np.zeros(0, sf.dtype)
    return LinearSpan(sf, np.concatenate([basis, parity[:, None]], axis=1), C.n + 1)


def fqwe_extended_brute(C: CyclicCode, guard: int | None = None) -> WeightEnumerator:
    check_guard(C.size, guard)
    return WeightEnumerator(C.n + 1, tuple(_fq_weight_hist(extended_span(C), C.q)), "fq_weight")


def fqwe_even_subcode_brute(C: CyclicCode, guard: int | None = None) -> WeightEnumerator:
    return fqwe_brute(even_subcode(C), guard)


def psi_weight_enumerator_brute(C: CyclicCode, guard: int | None = None) -> WeightEnumerator:
    """Hamming distribution of the set psi(C) = {sigma(c) - c : c in C}."""
    check_guard(C.size, guard)
    sf = C.coefficient_field
    Q, n = sf.size, C.n
    if Q**n >= 2**63:
        raise ValueError("words too long to key as 64-bit integers")
    frob = sf.frobenius(C.q)
    psi = sf.add_table[frob, sf.neg_table[np.arange(Q)]]
    place = (Q ** np.arange(n)).astype(np.int64)
    keys = []
    for chunk in C.span().chunks():
        keys.append(np.unique(psi[chunk].astype(np.int64) @ place))
    distinct = np.unique(np.concatenate(keys))
    digits = (distinct[:, None] // place[None, :]) % Q
    weights = np.count_nonzero(digits, axis=1)
    return WeightEnumerator(n, tuple(histogram(weights, n).tolist()), "psi_image")


def _base_code_span(h: Polynomial, n: int, sf: SmallField) -> LinearSpan:
    """The cyclic code over the small field generated by h (coefficients in it)."""
    k = n - h.degree
    g = np.array([sf.idx(c) for c in h.padded(n)], dtype=sf.dtype)
    rows = np.zeros((k, n), dtype=sf.dtype)
    for i in range(k):
        rows[i] = np.roll(g, i)
    return LinearSpan(sf, rows, n)


def fqwe_r2(g: Polynomial, q: int, n: int, guard: int | None = None, r: int = 2) -> WeightEnumerator:
    """F_q-weight distribution for r = 2 through the F_q-code of gcd(g, g^sigma)."""
    if r != 2:
        raise ValueError("this route only applies to quadratic extensions (r = 2)")
    F = g.field
    if not poly_divmod(Polynomial.xn_minus_1(F, n), g)[1].is_zero:
        raise ValueError("g does not divide x^n - 1")
    gs = poly_sigma(g, q)
    h = poly_gcd(g, gs)
    e = prime_power(q)[1]
    if not coefficients_in_subfield(h, e):
        raise CodeConsistencyError("gcd(g, g^sigma) is not defined over F_q")
    L = poly_lcm(g, gs)
    span = _base_code_span(h, n, small_field(F, e))
    check_guard(span.size, guard)
    hamming = WeightEnumerator(n, tuple(_hamming_hist(span)), "hamming")
    return hamming.reciprocal().scaled(q ** (n - L.degree), "fq_weight")


def _hamming_over_extension(span: LinearSpan, copies: int, guard: int | None) -> list[int]:
    """Hamming enumerator of the GF(q^copies)-span of an F_q-code.

    A word over GF(q^copies) is a tuple of ``copies`` words of the F_q-code
    (one per basis coordinate); it is nonzero at j iff some component is.
    """
    n = span.n
    check_guard(span.size**copies, guard)
    place = (np.int64(1) << np.arange(n, dtype=np.int64))
    masks, counts = [], []
    for chunk in span.chunks():
        m, c = np.unique((chunk != 0).astype(np.int64) @ place, return_counts=True)
        masks.append(m)
        counts.append(c)
    m, inv = np.unique(np.concatenate(masks), return_inverse=True)
    c = np.bincount(inv, weights=np.concatenate(counts)).astype(np.int64)
    dist = {0: 1}
    for _ in range(copies):
        new: dict[int, int] = {}
        for a, ca in dist.items():
            for b, cb in zip(m.tolist(), c.tolist()):
                key = a | b
                new[key] = new.get(key, 0) + ca * cb
        dist = new
    out = [0] * (n + 1)
    for mask, cnt in dist.items():
        out[bin(mask).count("1")] += cnt
    return out


def fqwe_subcode(C: CyclicCode, g0: Polynomial, guard: int | None = None) -> WeightEnumerator:
    """F_q-weights of the subcode generated by g0 g, g0 over F_q."""
    _require_coprime(C)
    F, n, q, r = C.field, C.n, C.q, C.r
    if g0.field != F:
        raise ValueError("g0 must be given over the code's splitting field")
    g0 = g0.monic()
    e = C.e
    if not coefficients_in_subfield(g0, e):
        raise ValueError("g0 has coefficients outside F_q")
    if not poly_divmod(Polynomial.xn_minus_1(F, n), g0 * C.generator)[1].is_zero:
        raise ValueError("g0 g does not divide x^n - 1")
    Q = q ** (r - 1)
    x_minus_1 = Polynomial.linear(F, 1)
    if g0 == Polynomial.one(F):
        counts = full_space_hamming(n, Q)
    elif g0 == x_minus_1:
        counts = zero_sum_hamming(n, Q)
    else:
        counts = _hamming_over_extension(_base_code_span(g0, n, C.base_field), r - 1, guard)
    W = WeightEnumerator(n, tuple(counts), "hamming")
    exponent = n - r * C.generator.degree - g0.degree
    return W.reciprocal().scaled(Fraction(q) ** exponent, "fq_weight")


# -- distances ----------------------------------------------------------------

def _min_weight(span: LinearSpan, select=None, workers: int = 1) -> int | None:
    n = span.n

    def fn(chunk):
        w = np.count_nonzero(chunk, axis=1)
        keep = w > 0 if select is None else (w > 0) & select(chunk)
        return int(w[keep].min()) if keep.any() else n + 1

    best = span.reduce(fn, min, workers)
    return None if best == n + 1 else best


def min_distance(C: CyclicCode, guard: int | None = None, workers: int = 1) -> int | None:
    """Minimum weight of a nonzero codeword (None for the zero code)."""
    check_guard(C.size, guard)
    return _min_weight(C.span(), workers=workers)


def is_complete_code(C: CyclicCode) -> bool:
    """Galois coprime and the conjugates of g multiply to 1 + x + ... + x^(n-1)."""
    n, qk = C.n, 1
    seen: set[int] = set()
    for _ in range(C.r):
        t = {(k * qk) % n for k in C.roots}
        if t & seen:
            return False
        seen |= t
        qk = (qk * C.q) % n
    return seen == set(range(1, n))


def min_weight_odd_type(C: CyclicCode, guard: int | None = None, workers: int = 1) -> int | None:
    """Least weight of a codeword whose coordinates do not sum to zero."""
    if not is_complete_code(C):
        raise ValueError(f"{C!r} is not a complete Galois supplemented code")
    check_guard(C.size, guard)
    sf = C.coefficient_field
    return _min_weight(C.span(), select=lambda ch: sf.sum_rows(ch) != 0, workers=workers)


# -- idempotents --------------------------------------------------------------

def idempotent(C: CyclicCode) -> Polynomial:
    """The idempotent generator: 0 at the roots of g, 1 at the other n-th roots of 1."""
    F, n = C.field, C.n
    if n % F.p == 0:
        raise ValueError("n must be invertible in the field")
    zeta = C.zeta.value
    inv_n = F.inv(F.scalar(n))
    nonroots = [k for k in range(n) if k not in C.roots]
    coeffs = []
    for j in range(n):
        s = 0
        for k in nonroots:
            s = F.add(s, F.pow(zeta, (-k * j) % n))
        coeffs.append(F.mul(inv_n, s))
    e = Polynomial(F, tuple(coeffs))
    _verify_idempotent(C, e)
    return e


def _verify_idempotent(C: CyclicCode, e: Polynomial) -> None:
    F, n = C.field, C.n
    if poly_mod_xn_minus_1(e * e, n) != e:
        raise CodeConsistencyError("e^2 != e mod x^n - 1")
    xn1 = Polynomial.xn_minus_1(F, n)
    gen = xn1 if e.is_zero else poly_gcd(e, xn1)
    if gen != C.generator.monic():
        raise CodeConsistencyError("the ideal generated by e is not the code")


def _gf4_lambda(F: FieldSpec, lam) -> FieldElement:
    w = primitive_nth_root(F, 3)
    if lam is None or lam == "w":
        return w
    if lam == "w2":
        return w * w
    lam = F(lam)
    if lam not in (w, w * w):
        raise ValueError("lambda must lie in GF(4) minus GF(2)")
    return lam


def _require_quaternary_complete(B: Block) -> None:
    t = B.table
    if (t.q, t.r) != (2, 2):
        raise InvalidBlockError("quaternary duality needs q = 2, r = 2")
    if not B.is_valid:
        raise InvalidBlockError(f"{B!r} is not a 2^2-block: {B.check.reason}")
    if not B.is_complete:
        raise InvalidBlockError(f"{B!r} is not complete")


def quaternary_dual_block(B: Block, lam=None) -> Block:
    """B* = {1 <= j < n : sum_{i in B} zeta^(-ij) = lambda}."""
    _require_quaternary_complete(B)
    t = B.table
    n = t.n
    F = splitting_field(n, 2, 2)
    lam = _gf4_lambda(F, lam)
    lam2 = lam * lam
    zeta = primitive_nth_root(F, n)
    star = []
    for j in range(1, n):
        s = F.zero
        for i in B:
            s = s + zeta ** ((-i * j) % n)
        if s == lam:
            star.append(j)
        elif s != lam2:
            raise CodeConsistencyError(f"power sum at j={j} is not lambda or lambda^2")
    out = t.block(star)
    if not (out.is_valid and out.is_complete):
        raise CodeConsistencyError(f"B* = {out!r} is not a complete block")
    return out


def quaternary_idempotent_form(B: Block, lam=None) -> Polynomial:
    """(n+1)/2 + lambda S_{B*}(x) + lambda^2 S_{2B*}(x) over the splitting field."""
    star = quaternary_dual_block(B, lam)
    n = B.table.n
    F = splitting_field(n, 2, 2)
    lam = _gf4_lambda(F, lam)
    coeffs = [0] * n
    coeffs[0] = F.scalar((n + 1) // 2)
    for j in star:
        coeffs[j] = lam.value
    for j in star.scaled(2):
        coeffs[j] = (lam * lam).value
    return Polynomial(F, tuple(coeffs))


# -- duality of extended codes ------------------------------------------------

@dataclass(frozen=True)
class DualityReport:
    block: Block
    dual_block: Block
    dim_extended: int
    orthogonal_to_dual: bool
    self_orthogonal: bool

    @property
    def self_dual(self) -> bool:
        return self.self_orthogonal and 2 * self.dim_extended == self.block.table.n + 1


def _extended_rows(C: CyclicCode) -> list[list[int]]:
    F = C.field
    rows = []
    for i in range(C.dimension):
        word = (Polynomial.monomial(F, i) * C.generator).padded(C.n)
        s = 0
        for c in word:
            s = F.add(s, c)
        rows.append(word + [F.neg(s)])
    return rows


def _dot(F: FieldSpec, u, v) -> int:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def dual_extended_check(B: Block, guard: int | None = None) -> DualityReport:
    """Check that the extended code of B is orthogonal to that of -qB.

    Both codes have dimension (n+1)/2 when B is complete and r = 2, so
    orthogonality of the two bases already identifies the dual.
    """
    t = B.table
    if prime_power(t.q)[0] != 2:
        raise InvalidBlockError("needs q a power of 2")
    if not B.is_valid or not B.is_complete:
        raise InvalidBlockError(f"{B!r} is not a complete block")
    C = code_from_block(B)
    dual_block = B.scaled(-t.q)
    D = code_from_block(dual_block)
    check_guard(C.dimension * D.dimension, guard)
    F = C.field
    rows_c = _extended_rows(C)
    rows_d = _extended_rows(D)
    return DualityReport(
        block=B,
        dual_block=dual_block,
        dim_extended=C.dimension,
        orthogonal_to_dual=all(_dot(F, u, v) == 0 for u in rows_c for v in rows_d)
        and C.dimension + D.dimension == t.n + 1,
        self_orthogonal=all(_dot(F, u, v) == 0 for u in rows_c for v in rows_c),
    )


# -- automorphisms ------------------------------------------------------------

def apply_affine(word: Sequence, a: int, b: int, n: int | None = None) -> list:
    """Move the entry at position j to position a*j + b.

    Positions are labelled 1..n (label n is 0 mod n), so a = -1, b = 1 is the
    reversal (c_1, ..., c_n) -> (c_n, ..., c_1).
    """
    n = len(word) if n is None else n
    if len(word) != n:
        raise ValueError("word length does not match n")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    out = [None] * n
    for j in range(1, n + 1):
        dest = (a * j + b) % n or n
        out[dest - 1] = word[j - 1]
    return out


def is_automorphism(C: CyclicCode, a: int, b: int, guard: int | None = None) -> bool:
    """True iff the affine permutation maps every basis word back into C."""
    check_guard(C.dimension, guard)
    for row in C.basis():
        if not C.contains(apply_affine(list(row), a, b, C.n)):
            return False
    return True


def is_reversible_code(C: CyclicCode) -> bool:
    return {(-k) % C.n for k in C.roots} == set(C.roots)
