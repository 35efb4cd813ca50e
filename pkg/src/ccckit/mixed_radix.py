"""Index <-> digit-vector maps for mixed-radix domains.

A domain is a product of blocks Z_{p_1}^{m_1} x ... x Z_{p_k}^{m_k}.  A point
is a flat digit vector (x_1, ..., x_m), m = m_1 + ... + m_k, where the digits
of block i lie in {0, ..., p_i - 1}.  Integers x in [0, L), L = prod p_i^{m_i},
correspond bijectively to points: block 1 varies fastest, and within a block
the first digit is the least significant one.  Concretely

    x = sigma_1 * delta_1 + sigma_2 * delta_2 + ... + sigma_k * delta_k,

where sigma_i is the base-p_i value of block i's digits (LSB first) and the
strides satisfy delta_1 = 1, delta_{i+1} = delta_i * p_i^{m_i}.

For k = 1 this degenerates to the ordinary base-p expansion, least significant
digit first.  Multi-block domains require strictly increasing distinct primes;
a single block may use any radix >= 2 (the uniform case is also used with
composite moduli, e.g. Z_6^m).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import prod

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class DomainSpec:
    """A mixed-radix domain given as ((p_1, m_1), ..., (p_k, m_k)).

    p_i is the digit bound (radix) of block i and m_i the number of digits.
    Derived quantities: q = prod p_i (the common modulus the blocks embed in),
    L = prod p_i^{m_i} (number of points), m = sum m_i (number of variables).
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("domain needs at least one block")
        object.__setattr__(self, "blocks", tuple((int(p), int(mi)) for p, mi in self.blocks))
        for p, mi in self.blocks:
            if p < 2:
                raise ValueError(f"block radix must be >= 2, got {p}")
            if mi < 1:
                raise ValueError(f"block length must be >= 1, got {mi}")
        if len(self.blocks) > 1:
            radices = [p for p, _ in self.blocks]
            if any(not _is_prime(p) for p in radices):
                raise ValueError(f"multi-block domains require prime radices, got {radices}")
            if any(a >= b for a, b in zip(radices, radices[1:])):
                raise ValueError(f"block radices must be strictly increasing, got {radices}")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def q(self) -> int:
        return prod(p for p, _ in self.blocks)

    @property
    def m(self) -> int:
        return sum(mi for _, mi in self.blocks)

    @property
    def L(self) -> int:
        return prod(p**mi for p, mi in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """L_i = p_i^{m_i} for each block."""
        return tuple(p**mi for p, mi in self.blocks)

    @property
    def deltas(self) -> tuple[int, ...]:
        """Strides delta_i: delta_1 = 1, delta_{i+1} = delta_i * L_i."""
        out = [1]
        for size in self.block_sizes[:-1]:
            out.append(out[-1] * size)
        return tuple(out)

    @property
    def block_offsets(self) -> tuple[int, ...]:
        """Start index of each block in the flat digit vector."""
        out = [0]
        for _, mi in self.blocks[:-1]:
            out.append(out[-1] + mi)
        return tuple(out)

    @property
    def radix_per_position(self) -> tuple[int, ...]:
        """Digit bound of each of the m flat positions."""
        out = []
        for p, mi in self.blocks:
            out.extend([p] * mi)
        return tuple(out)

    def block_of_position(self, j: int) -> int:
        """Block index owning flat position j (0-based)."""
        if not 0 <= j < self.m:
            raise ValueError(f"position {j} out of range for m={self.m}")
        for i, (off, (_, mi)) in enumerate(zip(self.block_offsets, self.blocks)):
            if off <= j < off + mi:
                return i
        raise AssertionError

    def block_positions(self, i: int) -> tuple[int, ...]:
        """Flat positions belonging to block i."""
        off = self.block_offsets[i]
        return tuple(range(off, off + self.blocks[i][1]))

    def to_json(self) -> list[dict]:
        return [{"p": p, "m": mi} for p, mi in self.blocks]

    @staticmethod
    def from_json(data) -> "DomainSpec":
        return DomainSpec(tuple((int(b["p"]), int(b["m"])) for b in data))


def int_to_vec(x: int, d: DomainSpec) -> tuple[int, ...]:
    """Digit vector of x, block 1 first, least significant digit first."""
    if not 0 <= x < d.L:
        raise ValueError(f"index {x} out of range [0, {d.L})")
    digits = []
    y = x
    for p, mi in d.blocks:
        sigma = y % (p**mi)
        y //= p**mi
        for _ in range(mi):
            digits.append(sigma % p)
            sigma //= p
    return tuple(digits)


def vec_to_int(v, d: DomainSpec) -> int:
    """Inverse of int_to_vec; validates digit bounds blockwise."""
    v = tuple(v)
    if len(v) != d.m:
        raise ValueError(f"expected {d.m} digits, got {len(v)}")
    x = 0
    pos = 0
    for delta, (p, mi) in zip(d.deltas, d.blocks):
        sigma = 0
        for j in range(mi):
            digit = v[pos + j]
            if not 0 <= digit < p:
                raise ValueError(f"digit {digit} at position {pos + j} violates bound {p}")
            sigma += digit * p**j
        x += sigma * delta
        pos += mi
    return x


@functools.lru_cache(maxsize=64)
def digit_matrix(d: DomainSpec) -> np.ndarray:
    """(L, m) array whose row x is int_to_vec(x, d).  Read-only."""
    cols = []
    idx = np.arange(d.L)
    for (p, mi), delta in zip(d.blocks, d.deltas):
        sigma = (idx // delta) % (p**mi)
        for j in range(mi):
            cols.append((sigma // p**j) % p)
    out = np.stack(cols, axis=1).astype(np.int64)
    out.setflags(write=False)
    return out
