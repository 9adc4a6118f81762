"""Weight enumerators as exact integer count vectors, and their closed forms.

Counts are Python ints throughout.  ``counts[w]`` is the number of words of
weight ``w`` (Hamming weight, F_q-weight, or Hamming weight of the psi-image,
depending on ``kind``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

KINDS = ("hamming", "fq_weight", "psi_image")


class NonIntegralCount(ArithmeticError):
    pass


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    counts: tuple[int, ...]
    kind: str = "hamming"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown enumerator kind {self.kind!r}")
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise ValueError(f"need {self.n + 1} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("negative count")
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def reciprocal(self, kind: str | None = None) -> WeightEnumerator:
        """W(Y, X): counts read backwards."""
        return WeightEnumerator(self.n, self.counts[::-1], kind or self.kind)

    def scaled(self, factor, kind: str | None = None) -> WeightEnumerator:
        return WeightEnumerator(self.n, _integral([Fraction(factor) * c for c in self.counts]), kind or self.kind)

    def diff(self, other: WeightEnumerator) -> list[int]:
        return [a - b for a, b in zip(self.counts, other.counts)]

    def as_dict(self) -> dict:
        return {"n": self.n, "kind": self.kind, "counts": list(self.counts)}

    @classmethod
    def from_histogram(cls, hist: Sequence[int], n: int, kind: str) -> WeightEnumerator:
        counts = [int(c) for c in hist][: n + 1]
        counts += [0] * (n + 1 - len(counts))
        return cls(n, tuple(counts), kind)


def _integral(values: Sequence[Fraction]) -> tuple[int, ...]:
    out = []
    for v in values:
        v = Fraction(v)
        if v.denominator != 1:
            raise NonIntegralCount(f"count {v} is not an integer")
        out.append(int(v))
    return tuple(out)


def galois_supplemented_counts(n: int, q: int, r: int, deg_g: int) -> tuple[int, ...]:
    """F_q-weight counts of a Galois supplemented code:
    q^(n - r deg g) (X + (q^(r-1) - 1) Y)^n."""
    if r * deg_g > n:
        raise ValueError("r * deg g cannot exceed n for a Galois coprime divisor")
    a = q ** (r - 1) - 1
    scale = q ** (n - r * deg_g)
    return tuple(scale * comb(n, w) * a ** (n - w) for w in range(n + 1))


def _two_term(length: int, q: int, r: int, exponent: int) -> tuple[int, ...]:
    # q^exponent ((X + aY)^L + a (X - Y)^L)
    a = q ** (r - 1) - 1
    scale = Fraction(q) ** exponent
    vals = [
        scale * comb(length, w) * (a ** (length - w) + a * (-1) ** (length - w))
        for w in range(length + 1)
    ]
    return _integral(vals)


def even_subcode_counts(n: int, q: int, r: int, deg_g: int) -> tuple[int, ...]:
    """F_q-weight counts of the even weight subcode C+."""
    return _two_term(n, q, r, n - r * (deg_g + 1))


def extended_counts(n: int, q: int, r: int, deg_g: int) -> tuple[int, ...]:
    """F_q-weight counts of the code extended by a parity coordinate (length n+1)."""
    return _two_term(n + 1, q, r, n + 1 - r * (deg_g + 1))


def full_space_hamming(n: int, Q: int) -> tuple[int, ...]:
    """((Q-1) X + Y)^n."""
    return tuple(comb(n, w) * (Q - 1) ** w for w in range(n + 1))


def zero_sum_hamming(n: int, Q: int) -> tuple[int, ...]:
    """Hamming enumerator of {x in GF(Q)^n : sum x = 0}."""
    return _integral([
        Fraction(comb(n, w) * ((Q - 1) ** w + (Q - 1) * (-1) ** w), Q) for w in range(n + 1)
    ])


# -- rank-sum formula ----------------------------------------------------------

def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if p == 2:
        basis: list[int] = []
        for row in rows:
            v = 0
            for bit, x in enumerate(row):
                if x % 2:
                    v |= 1 << bit
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)
    m = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


MAX_RANK_ROWS = 20


def rank_weight_oracle(H, T_size: int, p: int = 2) -> WeightEnumerator:
    """Hamming enumerator of {x in T^n : xH = 0} from the subset-rank sum.

    H is an n x m matrix over GF(p).  T is an F_p-space of size T_size; the
    count depends on T only through its size:
    sum over U of |T|^(|U| - rk H_U) X^|U| (Y - X)^(n - |U|),
    with H_U the rows of H indexed by U.
    """
    H = [list(map(int, row)) for row in np.asarray(H).tolist()]
    n = len(H)
    if n > MAX_RANK_ROWS:
        raise ValueError(f"{n} rows is beyond the 2^n subset loop limit ({MAX_RANK_ROWS})")
    counts = [0] * (n + 1)
    for u in range(n + 1):
        for U in itertools.combinations(range(n), u):
            rk = _rank_mod_p([H[i] for i in U], p) if U else 0
            base = T_size ** (u - rk)
            # X^u (Y - X)^(n-u): coefficient of X^(u+j) is (-1)^j C(n-u, j)
            for j in range(n - u + 1):
                counts[u + j] += base * (-1) ** j * comb(n - u, j)
    return WeightEnumerator(n, tuple(counts), "hamming")


def nullspace_enumerator_brute(H, p: int = 2) -> WeightEnumerator:
    """Hamming enumerator of {x in GF(p)^n : xH = 0} by listing all p^n words."""
    H = np.asarray(H, dtype=np.int64) % p
    n = H.shape[0]
    words = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)
    ok = np.all((words @ H) % p == 0, axis=1)
    weights = np.count_nonzero(words[ok], axis=1)
    hist = np.bincount(weights, minlength=n + 1)
    return WeightEnumerator(n, tuple(int(c) for c in hist), "hamming")
