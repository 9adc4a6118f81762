"""Exhaustive enumeration of F-linear spans with numpy.

Codewords never leave the small field they live in: a :class:`SmallField`
indexes the subfield GF(p^d) of a larger :class:`FieldSpec` by coordinates
in the power basis 1, b, ..., b^(d-1) of its canonical primitive element b.
With this indexing addition is digitwise mod p, which for p = 2 is plain
XOR of the indices.
"""

from __future__ import annotations

import functools
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, Sequence, TypeVar

import numpy as np

from .field import FieldSpec, primitive_nth_root

DEFAULT_GUARD = 2**28
_CHUNK_ROWS = 2**16

T = TypeVar("T")


class GuardExceeded(RuntimeError):
    def __init__(self, required: int, guard: int):
        super().__init__(f"enumeration needs {required} words, guard is {guard}")
        self.required = required
        self.guard = guard


def default_guard() -> int:
    env = os.environ.get("GCCODES_GUARD")
    return int(env) if env else DEFAULT_GUARD


def check_guard(required: int, guard: int | None) -> None:
    guard = default_guard() if guard is None else guard
    if required > guard:
        raise GuardExceeded(required, guard)


class SmallField:
    """GF(p^d) embedded in F, with lookup tables on element indices."""

    def __init__(self, F: FieldSpec, d: int):
        if F.M % d:
            raise ValueError(f"GF({F.p}^{d}) is not a subfield of {F!r}")
        self.big = F
        self.p = F.p
        self.d = d
        self.size = F.p**d
        if self.size > 2**16:
            raise ValueError("subfield too large for table lookups")
        beta = primitive_nth_root(F, self.size - 1).value
        powers = [1]
        for _ in range(d - 1):
            powers.append(F.mul(powers[-1], beta))
        elems = []
        for idx in range(self.size):
            v, x = 0, idx
            for b in powers:
                x, digit = divmod(x, F.p)
                for _ in range(digit):
                    v = F.add(v, b)
            elems.append(v)
        self.elements: list[int] = elems
        self.index: dict[int, int] = {v: i for i, v in enumerate(elems)}
        if len(self.index) != self.size:
            raise AssertionError("power basis is not a basis")
        dtype = np.uint8 if self.size <= 256 else np.uint16
        self.dtype = dtype
        Q = self.size
        self.mul_table = np.array(
            [[self.index[F.mul(a, b)] for b in elems] for a in elems], dtype=dtype
        )
        self.add_table = np.array(
            [[self.index[F.add(a, b)] for b in elems] for a in elems], dtype=dtype
        )
        self.neg_table = np.array([self.index[F.neg(a)] for a in elems], dtype=dtype)
        self._frob: dict[int, np.ndarray] = {}
        assert self.add_table.shape == (Q, Q)

    def idx(self, v: int) -> int:
        """Index of the big-field element v, which must lie in the subfield."""
        try:
            return self.index[v]
        except KeyError:
            raise ValueError(f"element {v} is not in GF({self.p}^{self.d})") from None

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_table[a, b]

    def scale(self, c: int, a: np.ndarray) -> np.ndarray:
        return self.mul_table[c][a]

    def frobenius(self, q: int) -> np.ndarray:
        """Index map a -> a^q."""
        if q not in self._frob:
            F = self.big
            self._frob[q] = np.array([self.index[F.pow(a, q)] for a in self.elements], dtype=self.dtype)
        return self._frob[q]

    def in_subfield_mask(self, q: int) -> np.ndarray:
        """Boolean mask over indices: fixed by a -> a^q."""
        return self.frobenius(q) == np.arange(self.size)

    def sum_rows(self, words: np.ndarray) -> np.ndarray:
        """Coordinate sum of each row."""
        if self.p == 2:
            return np.bitwise_xor.reduce(words, axis=1)
        acc = np.zeros(words.shape[0], dtype=self.dtype)
        for j in range(words.shape[1]):
            acc = self.add_table[acc, words[:, j]]
        return acc


@functools.cache
def small_field(F: FieldSpec, d: int) -> SmallField:
    return SmallField(F, d)


class LinearSpan:
    """All GF(Q)-combinations of the rows of ``basis`` (k x n index array).

    Messages run in lexicographic order of their coefficient tuples with the
    last basis row varying fastest inside a chunk.
    """

    def __init__(self, sf: SmallField, basis: np.ndarray, n: int):
        self.sf = sf
        self.basis = np.asarray(basis, dtype=sf.dtype).reshape(-1, n)
        self.k, self.n = self.basis.shape

    @property
    def size(self) -> int:
        return self.sf.size**self.k

    def _split(self, chunk_rows: int) -> int:
        Q = self.sf.size
        k_lo = 0
        while k_lo < self.k and Q ** (k_lo + 1) <= chunk_rows:
            k_lo += 1
        return k_lo

    @functools.cached_property
    def _low_table(self) -> np.ndarray:
        k_lo = self._split(_CHUNK_ROWS)
        sf = self.sf
        table = np.zeros((1, self.n), dtype=sf.dtype)
        for row in self.basis[self.k - k_lo:][::-1]:
            table = np.concatenate(
                [sf.add(table, sf.scale(c, row)[None, :]) for c in range(sf.size)]
            )
        return table

    def _offset(self, msg_hi: Sequence[int]) -> np.ndarray:
        sf = self.sf
        off = np.zeros(self.n, dtype=sf.dtype)
        for c, row in zip(msg_hi, self.basis):
            if c:
                off = sf.add(off, sf.scale(c, row))
        return off

    @property
    def num_chunks(self) -> int:
        return self.sf.size ** (self.k - self._split(_CHUNK_ROWS))

    def chunk(self, i: int) -> np.ndarray:
        k_hi = self.k - self._split(_CHUNK_ROWS)
        Q = self.sf.size
        digits = []
        for _ in range(k_hi):
            i, dgt = divmod(i, Q)
            digits.append(dgt)
        off = self._offset(digits[::-1])
        return self.sf.add(self._low_table, off[None, :])

    def chunks(self) -> Iterator[np.ndarray]:
        for i in range(self.num_chunks):
            yield self.chunk(i)

    def reduce(
        self,
        fn: Callable[[np.ndarray], T],
        merge: Callable[[T, T], T],
        workers: int = 1,
    ) -> T:
        """Apply fn to every chunk and fold the results with merge.

        merge must be associative and commutative; the result does not
        depend on the worker count.
        """
        if workers <= 1 or self.num_chunks == 1:
            it = (fn(c) for c in self.chunks())
            acc = next(it)
            for x in it:
                acc = merge(acc, x)
            return acc
        ranges = np.array_split(np.arange(self.num_chunks), workers)

        def run(idx):
            acc = None
            for i in idx:
                x = fn(self.chunk(int(i)))
                acc = x if acc is None else merge(acc, x)
            return acc

        with ThreadPoolExecutor(workers) as pool:
            parts = [p for p in pool.map(run, ranges) if p is not None]
        acc = parts[0]
        for x in parts[1:]:
            acc = merge(acc, x)
        return acc


def histogram(values: np.ndarray, n: int) -> np.ndarray:
    return np.bincount(values, minlength=n + 1).astype(np.int64)

