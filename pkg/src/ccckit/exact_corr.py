"""Aperiodic correlation with exact zero-testing in the group ring Z[Z_q].

A correlation value Theta(a, b)(tau) of root-of-unity sequences is a sum of
q-th roots of unity.  We never collapse it to floating point for decisions:
the sum is kept as an integer multiplicity vector counts[0..q-1] (counts[j] =
how many terms contributed the root with exponent j).  Such an element is
zero as a complex number iff its counts polynomial is divisible by the q-th
cyclotomic polynomial -- an exact integer computation.  This matters because
for composite q there are nontrivial vanishing sums of roots of unity, so a
small float magnitude proves nothing and a large one can still be misleading
near the tolerance.  Float evaluation is provided as a prefilter/diagnostic
only.

Shift conventions for tau >= 0: Theta(a,b)(tau) = sum_t a_t * conj(b_{t+tau});
for tau < 0 the conjugate-reversal symmetry Theta(a,b)(-tau) =
conj(Theta(b,a)(tau)) is used instead of recomputing (conjugation in the
group ring is exponent negation).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .waveform import RootSequence

# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficients, trailing zeros trimmed)


def poly_trim(p) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_divmod_exact(num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Divide by a monic integer polynomial; quotient and remainder stay integral."""
    den = poly_trim(den)
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    d = len(den) - 1
    quot = [0] * max(len(rem) - d, 0)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            quot[i - d] = c
            for j, dj in enumerate(den):
                rem[i - d + j] -= c * dj
    return poly_trim(quot), poly_trim(rem)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    poly = poly_trim(num)
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly_divmod_exact(poly, cyclotomic(d))
            if rem:
                raise AssertionError(f"non-exact cyclotomic division for n={n}, d={d}")
    return poly


@functools.lru_cache(maxsize=None)
def reduction_matrix(q: int) -> np.ndarray:
    """(q, deg Phi_q) int64 matrix; row j holds x^j reduced modulo Phi_q.

    counts @ matrix is the remainder of the counts polynomial, so a batch of
    group-ring elements can be zero-tested with one integer matmul.
    """
    phi = cyclotomic(q)
    d = len(phi) - 1
    rows = np.zeros((q, d), dtype=np.int64)
    cur = [1] + [0] * max(d - 1, 0)
    for j in range(q):
        rows[j, : len(cur)] = cur
        cur = [0] + cur  # multiply by x
        if len(cur) > d:
            lead = cur.pop()
            if lead:
                for t in range(d):
                    cur[t] -= lead * phi[t]
    rows.setflags(write=False)
    return rows


# ---------------------------------------------------------------------------
# group-ring elements


@dataclass(frozen=True)
class GroupRingElement:
    """sum_j counts[j] * zeta_q^j held exactly as integer multiplicities."""

    q: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.q:
            raise ValueError(f"need {self.q} multiplicities, got {len(counts)}")
        object.__setattr__(self, "counts", counts)

    @staticmethod
    def zero(q: int) -> "GroupRingElement":
        return GroupRingElement(q, (0,) * q)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.q != other.q:
            raise ValueError("modulus mismatch")
        return GroupRingElement(self.q, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.q != other.q:
            raise ValueError("modulus mismatch")
        return GroupRingElement(self.q, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def conjugate(self) -> "GroupRingElement":
        """Complex conjugation: exponent j becomes -j mod q."""
        return GroupRingElement(self.q, tuple(self.counts[(-j) % self.q] for j in range(self.q)))

    def shifted(self, const: int) -> "GroupRingElement":
        """Subtract the integer const (as const * zeta^0)."""
        counts = list(self.counts)
        counts[0] -= const
        return GroupRingElement(self.q, tuple(counts))

    def to_complex(self) -> complex:
        roots = np.exp(2j * np.pi * np.arange(self.q) / self.q)
        return complex(np.dot(np.asarray(self.counts, dtype=np.float64), roots))

    def magnitude(self) -> float:
        return abs(self.to_complex())


def is_zero_exact(g: GroupRingElement) -> bool:
    """True iff g is zero as a complex number.

    The evaluation map Z[x]/(x^q - 1) -> C at a primitive q-th root has
    kernel generated by Phi_q, so zero-ness is exactly divisibility of the
    counts polynomial by Phi_q.  Pure-int arithmetic; no precision caveats.
    """
    _, rem = poly_divmod_exact(g.counts, cyclotomic(g.q))
    return not rem


def zero_count_rows(counts: np.ndarray, q: int) -> np.ndarray:
    """Boolean vector: which rows of an (N, q) counts matrix are exactly zero."""
    red = reduction_matrix(q)
    rem = counts.astype(np.int64) @ red
    return ~rem.any(axis=1)


def counts_to_complex(counts: np.ndarray, q: int) -> np.ndarray:
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    return counts.astype(np.float64) @ roots


# ---------------------------------------------------------------------------
# correlation of sequences and code rows


def _as_arrays(seq):
    if isinstance(seq, RootSequence):
        exps, mask = seq.to_arrays()
        return exps, mask, seq.q
    raise TypeError(f"expected RootSequence, got {type(seq)!r}")


def _stack_row(row):
    """Stack a code row (list of RootSequence) into (exps (M,L), mask (M,L), q)."""
    if isinstance(row, RootSequence):
        row = [row]
    exps, masks, qs = [], [], set()
    for seq in row:
        e, m, q = _as_arrays(seq)
        exps.append(e)
        masks.append(m)
        qs.add(q)
    if len(qs) != 1:
        raise ValueError(f"mixed moduli in code row: {sorted(qs)}")
    lens = {len(e) for e in exps}
    if len(lens) != 1:
        raise ValueError(f"mixed lengths in code row: {sorted(lens)}")
    return np.stack(exps), np.stack(masks), qs.pop()


def accf_exact(a: RootSequence, b: RootSequence, tau: int) -> GroupRingElement:
    """Aperiodic cross-correlation of two sequences at one shift, exactly.

    Entries that are literal zeros (None) contribute nothing.  Conjugation of
    b negates its exponents mod q.
    """
    ea, ma, qa = _as_arrays(a)
    eb, mb, qb = _as_arrays(b)
    if qa != qb:
        raise ValueError(f"modulus mismatch: {qa} != {qb}")
    if len(ea) != len(eb):
        raise ValueError(f"length mismatch: {len(ea)} != {len(eb)}")
    L = len(ea)
    if not -L < tau < L:
        raise ValueError(f"shift {tau} out of range for length {L}")
    if tau >= 0:
        d = (ea[: L - tau] - eb[tau:]) % qa
        valid = ma[: L - tau] & mb[tau:]
    else:
        d = (ea[-tau:] - eb[: L + tau]) % qa
        valid = ma[-tau:] & mb[: L + tau]
    counts = np.bincount(d[valid], minlength=qa)
    return GroupRingElement(qa, tuple(int(c) for c in counts))


def code_accf(row1, row2, tau: int) -> GroupRingElement:
    """Code-level correlation: the sum of accf_exact over paired sequences."""
    e1, m1, q1 = _stack_row(row1)
    e2, m2, q2 = _stack_row(row2)
    if q1 != q2 or e1.shape != e2.shape:
        raise ValueError("code rows must share modulus, length and sequence count")
    M, L = e1.shape
    if not -L < tau < L:
        raise ValueError(f"shift {tau} out of range for length {L}")
    counts = _counts_at_shift(e1, m1, e2, m2, q1, tau)
    return GroupRingElement(q1, tuple(int(c) for c in counts))


def _counts_at_shift(e1, m1, e2, m2, q, tau):
    L = e1.shape[1]
    if tau >= 0:
        d = (e1[:, : L - tau] - e2[:, tau:]) % q
        valid = m1[:, : L - tau] & m2[:, tau:]
    else:
        d = (e1[:, -tau:] - e2[:, : L + tau]) % q
        valid = m1[:, -tau:] & m2[:, : L + tau]
    return np.bincount(d[valid], minlength=q)


def pair_counts_nonneg_shifts(e1, m1, e2, m2, q) -> np.ndarray:
    """(L, q) int64 matrix of code-level counts for tau = 0 .. L-1."""
    M, L = e1.shape
    out = np.zeros((L, q), dtype=np.int64)
    full = bool(m1.all() and m2.all())
    for tau in range(L):
        d = (e1[:, : L - tau] - e2[:, tau:]) % q
        if full:
            out[tau] = np.bincount(d.ravel(), minlength=q)
        else:
            valid = m1[:, : L - tau] & m2[:, tau:]
            out[tau] = np.bincount(d[valid], minlength=q)
    return out


def counts_via_convolution(row1, row2) -> np.ndarray:
    """(2L-1, q) counts for tau = -(L-1) .. L-1 via generating polynomials.

    Independent of the shiftwise path: each sequence becomes a polynomial in z
    with one-hot group-ring coefficients, and the product A(z) * conj(B)(1/z)
    is expanded with integer convolutions per residue pair.  Row index
    tau + L - 1 holds the counts at shift tau.
    """
    e1, m1, q = _stack_row(row1)
    e2, m2, _ = _stack_row(row2)
    M, L = e1.shape
    out = np.zeros((2 * L - 1, q), dtype=np.int64)
    for m in range(M):
        hot1 = np.zeros((q, L), dtype=np.int64)
        hot2 = np.zeros((q, L), dtype=np.int64)
        idx = np.arange(L)
        hot1[e1[m], idx] = m1[m].astype(np.int64)
        hot2[e2[m], idx] = m2[m].astype(np.int64)
        for r1 in range(q):
            if not hot1[r1].any():
                continue
            for r2 in range(q):
                if not hot2[r2].any():
                    continue
                # convolve pairs hot1[t] with hot2[t + (L-1-u)]; reversing maps
                # output index u back to shift tau = t' - t with tau + L - 1 = u
                conv = np.convolve(hot1[r1], hot2[r2][::-1])[::-1]
                out[:, (r1 - r2) % q] += conv
    return out


@dataclass(frozen=True)
class CorrelationProfile:
    """Exact counts for every shift of a pair of code rows.

    counts[tau + L - 1] is the multiplicity vector at shift tau, for
    tau = -(L-1) .. L-1.  Narrowing to complex numbers is derived data.
    """

    q: int
    L: int
    M: int
    counts: np.ndarray

    @property
    def taus(self) -> range:
        return range(-(self.L - 1), self.L)

    def element(self, tau: int) -> GroupRingElement:
        return GroupRingElement(self.q, tuple(int(c) for c in self.counts[tau + self.L - 1]))

    def complex_values(self) -> np.ndarray:
        return counts_to_complex(self.counts, self.q)

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.complex_values())

    def zero_flags(self) -> np.ndarray:
        return zero_count_rows(self.counts, self.q)


def correlation_profile(row1, row2) -> CorrelationProfile:
    """All shifts of the code-level correlation between two rows.

    Nonnegative shifts are computed directly; negative shifts come from the
    symmetry Theta(a,b)(-tau) = conj(Theta(b,a)(tau)), i.e. exponent negation
    of the reversed-pair counts.
    """
    e1, m1, q = _stack_row(row1)
    e2, m2, q2 = _stack_row(row2)
    if q != q2 or e1.shape != e2.shape:
        raise ValueError("code rows must share modulus, length and sequence count")
    M, L = e1.shape
    fwd = pair_counts_nonneg_shifts(e1, m1, e2, m2, q)
    rev = pair_counts_nonneg_shifts(e2, m2, e1, m1, q)
    neg_index = (-np.arange(q)) % q
    counts = np.zeros((2 * L - 1, q), dtype=np.int64)
    counts[L - 1 :] = fwd
    for tau in range(1, L):
        counts[L - 1 - tau] = rev[tau][neg_index]
    return CorrelationProfile(q, L, M, counts)
