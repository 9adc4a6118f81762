"""Constant GC-content DNA codes from reversible Galois supplemented codes.

Nucleotides are identified with GF(4) = {0, 1, w, w^2} (w the canonical
element of order 3) by G = 0, C = 1, A = w, T = w^2 = w + 1.  G and C are the
elements of GF(2), so GC-content is the F_2-weight, and adding 1 swaps
G<->C and A<->T, so the Watson-Crick complement is "add 1".

Words are handled in bulk as ``uint8`` arrays of GF(4) indices 0..3 in that
same order, where addition is XOR.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .codes import CyclicCode, code_from_block, even_subcode, is_galois_coprime, is_reversible_code
from .cyclotomic import Block, InvalidBlockError, orbit_table
from .span import check_guard

LETTERS = "GCAT"
SYMBOLS = ("0", "1", "w", "w2")
_LETTER_INDEX = {c: i for i, c in enumerate(LETTERS)}

MAX_EXHAUSTIVE_PAIRS = 10**7


def to_letters(word: Sequence[int]) -> str:
    return "".join(LETTERS[int(x)] for x in word)


def from_letters(s: str) -> np.ndarray:
    try:
        return np.array([_LETTER_INDEX[c] for c in s.upper()], dtype=np.uint8)
    except KeyError as exc:
        raise ValueError(f"not a nucleotide: {exc.args[0]!r}") from None


@dataclass(frozen=True)
class DnaWord:
    letters: str

    def __post_init__(self):
        from_letters(self.letters)

    @classmethod
    def from_field(cls, word: Sequence[int]) -> DnaWord:
        return cls(to_letters(word))

    @property
    def field_form(self) -> tuple[int, ...]:
        return tuple(int(x) for x in from_letters(self.letters))

    @property
    def gc_content(self) -> int:
        return gc_content(self.field_form)

    def reverse_complement(self) -> DnaWord:
        return DnaWord.from_field(reverse_complement(self.field_form))


def reverse_complement(v):
    """(x_1, ..., x_n) -> (x_n + 1, ..., x_1 + 1).

    Accepts a nucleotide string or GF(4) indices (1-D word or 2-D batch of
    words) and returns the same kind.
    """
    if isinstance(v, str):
        return to_letters(reverse_complement(from_letters(v)))
    arr = np.asarray(v, dtype=np.uint8)
    out = arr[..., ::-1] ^ np.uint8(1)
    return out if isinstance(v, np.ndarray) else tuple(int(x) for x in out)


def gc_content(v) -> int | np.ndarray:
    """Number of coordinates in GF(2), i.e. letters G or C."""
    if isinstance(v, str):
        v = from_letters(v)
    arr = np.asarray(v)
    return (arr < 2).sum(axis=-1)


def lexicographic_less(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a < b in lexicographic index order (rows must differ)."""
    diff = a != b
    first = np.argmax(diff, axis=1)
    rows = np.arange(a.shape[0])
    return a[rows, first] < b[rows, first]


@dataclass
class DnaCodebook:
    words: np.ndarray
    n: int
    claimed_d: int
    gc_weight: int
    block: tuple[int, ...]
    construction: str
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.words)

    def letters(self) -> Iterable[str]:
        for w in self.words:
            yield to_letters(w)

    def metadata(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "d": self.claimed_d,
            "w": self.gc_weight,
            "block": list(self.block),
            "construction": self.construction,
            "count": len(self),
            **self.meta,
        }

    def to_fasta(self) -> str:
        return "".join(
            f">word_{i} gc={self.gc_weight}\n{s}\n" for i, s in enumerate(self.letters())
        )

    def write(self, fasta_path: str | Path, json_path: str | Path | None = None) -> None:
        fasta_path = Path(fasta_path)
        with open(fasta_path, "w", newline="\n") as fh:
            for i, s in enumerate(self.letters()):
                fh.write(f">word_{i} gc={self.gc_weight}\n{s}\n")
        if json_path is not None:
            Path(json_path).write_text(json.dumps(self.metadata(), indent=2, sort_keys=True) + "\n")


def expected_codebook_size(n: int, deg_g: int) -> int:
    """2^(n - 2 deg g - 1) C(n, (n+1)/2)."""
    return 2 ** (n - 2 * deg_g - 1) * comb(n, (n + 1) // 2)


def _check_dna_source(C: CyclicCode) -> None:
    if (C.q, C.r) != (2, 2):
        raise ValueError("DNA constructions need a code over GF(4) (q = 2, r = 2)")
    if C.n % 2 == 0:
        raise ValueError("n must be odd")
    if not is_reversible_code(C):
        raise ValueError(f"{C!r} is not reversible (-B != B)")
    if not is_galois_coprime(C.generator, C.q, C.r):
        raise ValueError(f"{C!r} is not Galois supplemented")


def _select(span, keep) -> np.ndarray:
    parts = [chunk[keep(chunk)] for chunk in span.chunks()]
    return np.concatenate(parts) if parts else np.zeros((0, span.n), np.uint8)


def _block_tuple(C: CyclicCode) -> tuple[int, ...]:
    return tuple(sorted(C.roots))


def build_even_subcode_codebook(C: CyclicCode, d: int, guard: int | None = None) -> DnaCodebook:
    """Words of C+ whose GC-content is the odd one of (n-1)/2, (n+1)/2."""
    _check_dna_source(C)
    n = C.n
    w = (n - 1) // 2 if ((n - 1) // 2) % 2 else (n + 1) // 2
    plus = even_subcode(C)
    check_guard(plus.size, guard)
    words = _select(plus.span(), lambda ch: gc_content(ch) == w)
    expected = expected_codebook_size(n, C.generator.degree)
    if len(words) != expected:
        raise AssertionError(f"even subcode gave {len(words)} words, closed form says {expected}")
    return DnaCodebook(words, n, d, w, _block_tuple(C), "even_subcode")


def build_rc_pair_split_codebook(C: CyclicCode, d: int, guard: int | None = None) -> DnaCodebook:
    """From each pair {v, v^RC} of C keep the lexicographically smaller word,
    then keep GC-content (n+1)/2."""
    _check_dna_source(C)
    n = C.n
    w = (n + 1) // 2
    check_guard(C.size, guard)

    def keep(ch):
        sel = ch[gc_content(ch) == w]
        mask = np.zeros(len(ch), dtype=bool)
        idx = np.flatnonzero(gc_content(ch) == w)
        mask[idx] = lexicographic_less(sel, reverse_complement(sel))
        return mask

    words = _select(C.span(), keep)
    expected = expected_codebook_size(n, C.generator.degree)
    if len(words) != expected:
        raise AssertionError(f"RC split gave {len(words)} words, closed form says {expected}")
    return DnaCodebook(words, n, d, w, _block_tuple(C), "rc_pair_split")


@dataclass(frozen=True)
class VerificationReport:
    count: int
    claimed_d: int
    min_distance: int | None
    min_rc_distance: int | None
    gc_uniform: bool
    exhaustive: bool
    pairs_checked: int

    @property
    def passed(self) -> bool:
        d = self.claimed_d
        ok_d = self.min_distance is None or self.min_distance >= d
        ok_rc = self.min_rc_distance is None or self.min_rc_distance >= d
        return ok_d and ok_rc and self.gc_uniform

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "claimed_d": self.claimed_d,
            "min_distance": self.min_distance,
            "min_rc_distance": self.min_rc_distance,
            "gc_uniform": self.gc_uniform,
            "mode": "exhaustive" if self.exhaustive else "sampled",
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
        }


def verify_codebook(
    book: DnaCodebook,
    max_pairs: int = MAX_EXHAUSTIVE_PAIRS,
    seed: int = 0,
    samples: int = 10**6,
) -> VerificationReport:
    """Check the three DNA-code conditions.

    Exhaustive when the number of ordered pairs is at most ``max_pairs``;
    otherwise ``samples`` uniformly random pairs are checked and the report
    is tagged as sampled (not a certificate).
    """
    words = np.asarray(book.words, dtype=np.uint8)
    N = len(words)
    rc = reverse_complement(words)
    gc_ok = bool(np.all(gc_content(words) == book.gc_weight)) if N else True
    if N * N <= max_pairs:
        best_d, best_rc = book.n + 1, book.n + 1
        step = max(1, 2**22 // max(1, N * book.n))
        for s in range(0, N, step):
            block = words[s : s + step]
            dist = (block[:, None, :] != words[None, :, :]).sum(axis=2)
            idx = np.arange(len(block))
            dist[idx, s + idx] = book.n + 1
            best_d = min(best_d, int(dist.min()))
            best_rc = min(best_rc, int((block[:, None, :] != rc[None, :, :]).sum(axis=2).min()))
        return VerificationReport(
            N, book.claimed_d,
            None if N < 2 else best_d,
            None if N == 0 else best_rc,
            gc_ok, True, N * N,
        )
    rng = np.random.default_rng(seed)
    i = rng.integers(0, N, samples)
    j = rng.integers(0, N, samples)
    distinct = i != j
    d = (words[i[distinct]] != words[j[distinct]]).sum(axis=1)
    drc = (words[i] != rc[j]).sum(axis=1)
    return VerificationReport(
        N, book.claimed_d,
        int(d.min()) if len(d) else None,
        int(drc.min()),
        gc_ok, False, samples,
    )


def _as_block(n: int, B) -> Block:
    if isinstance(B, Block):
        return B
    return orbit_table(n, 2, 2).block(B)


def lower_bound(n: int, B, d: int | None = None) -> int:
    """2^(n - 2|B| - 1) C(n, (n+1)/2) for a reversible 2^2-block B.

    d is the verified minimum distance of C_B and is only recorded by the
    caller; the count does not depend on it.
    """
    block = _as_block(n, B)
    if block.table.n != n or (block.table.q, block.table.r) != (2, 2):
        raise InvalidBlockError("block must be a 2^2-block of Z/nZ")
    if n % 2 == 0:
        raise InvalidBlockError("n must be odd")
    if not block.is_valid:
        raise InvalidBlockError(f"{block!r}: {block.check.reason}")
    if not block.is_reversible:
        raise InvalidBlockError(f"{block!r} is not reversible")
    return expected_codebook_size(n, len(block))


def complete_code_bound(n: int) -> int:
    """C(n, (n+1)/2), the bound for complete codes."""
    return comb(n, (n + 1) // 2)


def codebook_for_block(n: int, B, d: int, construction: str = "even", guard: int | None = None) -> DnaCodebook:
    C = code_from_block(_as_block(n, B))
    if construction == "even":
        return build_even_subcode_codebook(C, d, guard)
    if construction == "rc":
        return build_rc_pair_split_codebook(C, d, guard)
    raise ValueError(f"unknown construction {construction!r}")
