"""Sequences attached to q-ary functions.

``eta`` is the raw Z_q value list of a function.  ``psi`` turns it into a
unimodular sequence whose entries are q-th roots of unity, represented by
their integer exponents.  ``psi_restricted`` keeps the exponent only on the
restriction support N_c and stores a literal zero (``None``) elsewhere;
correlation code skips those entries instead of faking them with exponent
tricks, so everything downstream stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qary import QaryFunction, RestrictedFunction, restrict


@dataclass(frozen=True)
class RootSequence:
    """Length-L sequence of exponents in Z_q, with None for a literal zero entry."""

    q: int
    entries: tuple

    def __post_init__(self):
        ents = tuple(None if e is None else int(e) for e in self.entries)
        if self.q < 1:
            raise ValueError("modulus must be >= 1")
        if any(e is not None and not 0 <= e < self.q for e in ents):
            raise ValueError(f"exponents must lie in [0, {self.q})")
        object.__setattr__(self, "entries", ents)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e is not None)

    def is_full(self) -> bool:
        return all(e is not None for e in self.entries)

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(exponents int64 with 0 at holes, defined-mask bool)."""
        mask = np.array([e is not None for e in self.entries], dtype=bool)
        exps = np.array([0 if e is None else e for e in self.entries], dtype=np.int64)
        return exps, mask

    def to_complex(self) -> np.ndarray:
        exps, mask = self.to_arrays()
        vals = np.exp(2j * np.pi * exps / self.q)
        vals[~mask] = 0.0
        return vals


def eta(f: QaryFunction) -> list[int]:
    """The Z_q value list (f_0, f_1, ..., f_{L-1})."""
    return [int(v) for v in f.table]


def psi(f: QaryFunction) -> RootSequence:
    """Exponent sequence: entry x is f(x), nothing is zeroed out."""
    return RootSequence(f.q, tuple(int(v) for v in f.table))


def psi_restricted(f: QaryFunction, J, c) -> RootSequence:
    """Exponent sequence of f on N_c, literal zero (None) off the support."""
    view = restrict(f, J, c)
    return psi_of_restriction(view)


def psi_of_restriction(view: RestrictedFunction) -> RootSequence:
    support = set(int(i) for i in view.support)
    f = view.base
    ents = tuple(int(f.table[x]) if x in support else None for x in range(len(f.table)))
    return RootSequence(f.q, ents)


def to_csv_fields(seq: RootSequence) -> list[str]:
    """Exponents as CSV cells; a literal zero entry becomes the empty field."""
    return ["" if e is None else str(e) for e in seq.entries]


def from_csv_fields(q: int, fields) -> RootSequence:
    return RootSequence(q, tuple(None if f == "" else int(f) for f in fields))


def superpose(parts) -> RootSequence:
    """Sum of sequences with pairwise disjoint supports (entrywise union)."""
    parts = list(parts)
    if not parts:
        raise ValueError("nothing to superpose")
    q = parts[0].q
    L = len(parts[0])
    if any(p.q != q or len(p) != L for p in parts):
        raise ValueError("superpose needs a common modulus and length")
    ents: list = [None] * L
    for part in parts:
        for i, e in enumerate(part.entries):
            if e is None:
                continue
            if ents[i] is not None:
                raise ValueError(f"supports overlap at position {i}")
            ents[i] = e
    return RootSequence(q, tuple(ents))
