"""Orbits of <q> and <q^r> on Z/nZ, and q^r-blocks.

A q^r-block is a subset B of Z/nZ that is a union of <q^r>-orbits, takes
at most one such orbit from each <q>-orbit, and has r | ord(q mod m_k) for
every k in B, where m_k = n / gcd(n, k).  Blocks index the cyclic codes
over GF(q^r) whose generator is coprime to all of its Galois conjugates.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .field import prime_power

DEFAULT_MAX_N = 255


class InvalidBlockError(ValueError):
    pass


def multiplicative_order(q: int, m: int) -> int:
    """ord(q mod m); ord(q mod 1) = 1."""
    if m == 1:
        return 1
    if math.gcd(q, m) != 1:
        raise ValueError(f"{q} is not a unit modulo {m}")
    k, x = 1, q % m
    while x != 1:
        x = (x * q) % m
        k += 1
    return k


def _orbits(n: int, gen: int) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for k in range(n):
        if k in seen:
            continue
        orb = []
        x = k
        while x not in orb:
            orb.append(x)
            x = (x * gen) % n
        seen.update(orb)
        out.append(tuple(sorted(orb)))
    return out


@dataclass(frozen=True, eq=False)
class OrbitTable:
    n: int
    q: int
    r: int
    s: int
    H_orbits: tuple[tuple[int, ...], ...]
    G_orbits: tuple[tuple[int, ...], ...]
    orbit_to_Gorbit: tuple[int, ...]
    m: tuple[int, ...]
    s_k: tuple[int, ...]

    @functools.cached_property
    def H_index(self) -> dict[int, int]:
        """Element -> index of its H-orbit."""
        return {k: i for i, orb in enumerate(self.H_orbits) for k in orb}

    @functools.cached_property
    def G_index(self) -> dict[int, int]:
        return {k: i for i, orb in enumerate(self.G_orbits) for k in orb}

    def block(self, elements: Iterable[int]) -> Block:
        return Block(tuple(sorted({k % self.n for k in elements})), self)

    def __eq__(self, other):
        return isinstance(other, OrbitTable) and (self.n, self.q, self.r) == (other.n, other.q, other.r)

    def __hash__(self):
        return hash((self.n, self.q, self.r))


@functools.cache
def orbit_table(n: int, q: int, r: int) -> OrbitTable:
    prime_power(q)
    if n < 2:
        raise ValueError("n must be at least 2")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    if r < 1:
        raise ValueError("r must be positive")
    qr = pow(q, r, n)
    H = _orbits(n, qr)
    G = _orbits(n, q % n)
    G_of = {k: i for i, orb in enumerate(G) for k in orb}
    m = tuple(n // math.gcd(n, k) for k in range(n))
    return OrbitTable(
        n=n, q=q, r=r,
        s=multiplicative_order(q, n),
        H_orbits=tuple(H),
        G_orbits=tuple(G),
        orbit_to_Gorbit=tuple(G_of[orb[0]] for orb in H),
        m=m,
        s_k=tuple(multiplicative_order(q, mk) for mk in m),
    )


def galois_supplemented_exists(n: int, q: int, r: int) -> bool:
    """r | ord(q mod n)."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    return multiplicative_order(q, n) % r == 0


class BlockCheck(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def validate_block(B: Iterable[int], table: OrbitTable) -> BlockCheck:
    n = table.n
    elems = set(B)
    if any(not 0 <= k < n for k in elems):
        return BlockCheck(False, f"elements must lie in 0..{n - 1}")
    used_H = {table.H_index[k] for k in elems}
    if any(not set(table.H_orbits[i]) <= elems for i in used_H):
        return BlockCheck(False, "not a union of H-orbits")
    G_used = [table.orbit_to_Gorbit[i] for i in used_H]
    if len(G_used) != len(set(G_used)):
        return BlockCheck(False, "two H-orbits in one G-orbit")
    for k in sorted(elems):
        if table.s_k[k] % table.r:
            return BlockCheck(False, f"r={table.r} does not divide ord(q mod m_{k})={table.s_k[k]}")
    return BlockCheck(True, "valid")


@dataclass(frozen=True)
class Block:
    elements: tuple[int, ...]
    table: OrbitTable

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, k):
        return k % self.table.n in self._set

    @functools.cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def scaled(self, a: int) -> Block:
        """a*B mod n."""
        return self.table.block(a * k for k in self.elements)

    @functools.cached_property
    def check(self) -> BlockCheck:
        return validate_block(self.elements, self.table)

    @property
    def is_valid(self) -> bool:
        return self.check.ok

    @property
    def is_complete(self) -> bool:
        return is_complete(self)

    @property
    def is_reversible(self) -> bool:
        return is_reversible_block(self)

    @property
    def is_selfdual_candidate(self) -> bool:
        try:
            return is_selfdual_block(self)
        except InvalidBlockError:
            return False

    def flags(self) -> dict:
        return {
            "complete": self.is_complete,
            "reversible": self.is_reversible,
            "selfdual": self.is_selfdual_candidate,
        }

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _require_valid(B: Block) -> None:
    if not B.is_valid:
        raise InvalidBlockError(f"{B!r} is not a q^r-block: {B.check.reason}")


def is_complete(B: Block) -> bool:
    """True iff the translates q^k B, 0 <= k < r, partition Z/nZ minus 0."""
    _require_valid(B)
    t = B.table
    seen: set[int] = set()
    for k in range(t.r):
        translate = set(B.scaled(pow(t.q, k, t.n)).elements)
        if seen & translate:
            return False
        seen |= translate
    return seen == set(range(1, t.n))


def is_reversible_block(B: Block) -> bool:
    """-B = B."""
    _require_valid(B)
    return B.scaled(-1).elements == B.elements


def is_selfdual_block(B: Block) -> bool:
    """-qB = B, for q a power of 2 and B complete."""
    _require_valid(B)
    p, _ = prime_power(B.table.q)
    if p != 2:
        raise InvalidBlockError("self-duality test needs q a power of 2")
    if not is_complete(B):
        raise InvalidBlockError(f"{B!r} is not complete")
    return B.scaled(-B.table.q).elements == B.elements


def quadratic_residues(n: int) -> tuple[int, ...]:
    """Nonzero squares modulo n that are units."""
    return tuple(sorted({(i * i) % n for i in range(1, n) if math.gcd(i, n) == 1}))


def enumerate_blocks(
    table: OrbitTable,
    complete: bool | None = None,
    reversible: bool | None = None,
    selfdual: bool | None = None,
    size: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> list[Block]:
    """All nonempty valid blocks matching the filters, sorted by element tuple."""
    if table.n > max_n:
        raise ValueError(f"n={table.n} exceeds the enumeration cap {max_n}")
    # H-orbits usable in a block, grouped by G-orbit
    choices: dict[int, list[tuple[int, ...]]] = {}
    for i, orb in enumerate(table.H_orbits):
        if table.s_k[orb[0]] % table.r == 0:
            choices.setdefault(table.orbit_to_Gorbit[i], []).append(orb)
    groups = [[()] + opts for _, opts in sorted(choices.items())]
    out = []
    for pick in itertools.product(*groups):
        elems = tuple(sorted(k for orb in pick for k in orb))
        if not elems:
            continue
        if size is not None and len(elems) != size:
            continue
        B = Block(elems, table)
        if complete is not None and is_complete(B) != complete:
            continue
        if reversible is not None and is_reversible_block(B) != reversible:
            continue
        if selfdual is not None:
            if not is_complete(B):
                continue
            if is_selfdual_block(B) != selfdual:
                continue
        out.append(B)
    out.sort(key=lambda b: b.elements)
    return out
