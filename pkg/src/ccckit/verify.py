"""Certification and refutation of the complete-complementarity property.

``verify_ccc`` checks every code pair at every shift.  In exact mode each
correlation value is an integer multiplicity vector tested for zero-ness via
cyclotomic reduction; there are no false positives or negatives.  Float mode
uses a magnitude threshold and is advisory only -- for composite alphabets a
tiny float magnitude is expected for true zeros but can never certify one.

``necessity_probe`` drives the converse direction: specs whose chain tables
were deliberately corrupted must fail, and for uniform-domain specs with a
constant chain table the failure provably localizes at the witness shifts
tau = q^m - n * q^{m-i}, which are scanned first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .construct import CodeSet, ConstructionSpec, build_code_set
from .exact_corr import (
    GroupRingElement,
    counts_to_complex,
    pair_counts_nonneg_shifts,
    zero_count_rows,
)
from .qary import is_permutation_mod

FLOAT_ZERO_FACTOR = 1e-9  # float mode calls |Theta| < factor * M * L "zero"


@dataclass(frozen=True)
class Violation:
    k1: int
    k2: int
    tau: int
    element: GroupRingElement

    def magnitude(self) -> float:
        return self.element.magnitude()


@dataclass(frozen=True)
class VerifyReport:
    is_ccc: bool
    peak: int
    mode: str
    K: int
    M: int
    L: int
    q: int
    shifts_tested: int
    violations: tuple = ()
    total_violations: int = 0

    def summary(self) -> str:
        verdict = "CCC" if self.is_ccc else f"NOT a CCC ({self.total_violations} violating cells)"
        return (
            f"({self.K},{self.L}) set over Z_{self.q}: {verdict}; "
            f"peak {self.peak} = M*L; mode={self.mode}; cells tested {self.shifts_tested}"
        )

    def to_dict(self) -> dict:
        return {
            "is_ccc": self.is_ccc,
            "peak": self.peak,
            "mode": self.mode,
            "K": self.K,
            "M": self.M,
            "L": self.L,
            "q": self.q,
            "shifts_tested": self.shifts_tested,
            "total_violations": self.total_violations,
            "violations": [
                {"k1": v.k1, "k2": v.k2, "tau": v.tau, "counts": list(v.element.counts)}
                for v in self.violations
            ],
        }


def _row_arrays(C: CodeSet, k: int):
    exps = C.exps[k]
    mask = np.ones(exps.shape, dtype=bool) if C.mask is None else C.mask[k]
    return exps, mask


def _pair_counts(C: CodeSet, k1: int, k2: int) -> np.ndarray:
    e1, m1 = _row_arrays(C, k1)
    e2, m2 = _row_arrays(C, k2)
    return pair_counts_nonneg_shifts(e1, m1, e2, m2, C.q)


def verify_ccc(C: CodeSet, mode: str = "exact", max_violations: int = 16) -> VerifyReport:
    """Check the full CCC property of a code set.

    All ordered pairs are scanned at shifts 0..L-1; negative shifts are
    covered by the conjugate-reversal symmetry, which maps them onto the
    reversed pair's positive shifts.  Requirements: same-code shift 0 equals
    exactly M*L, everything else is zero.
    """
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    K, M, L, q = C.K, C.M, C.L, C.q
    peak = M * L
    bad_cells: list[tuple[int, int, int, np.ndarray]] = []
    shifts = 0
    for k1 in range(K):
        for k2 in range(k1, K):
            ordered = [(k1, k2)] if k1 == k2 else [(k1, k2), (k2, k1)]
            for a, b in ordered:
                counts = _pair_counts(C, a, b)
                shifts += L
                target = counts.copy()
                if a == b:
                    target[0, 0] -= peak  # demand exactly M*L at shift 0
                if mode == "exact":
                    ok = zero_count_rows(target, q)
                else:
                    mags = np.abs(counts_to_complex(target, q))
                    ok = mags < FLOAT_ZERO_FACTOR * peak
                for tau in np.flatnonzero(~ok):
                    bad_cells.append((a, b, int(tau), counts[tau]))
    bad_cells.sort(key=lambda cell: cell[:3])
    violations = tuple(
        Violation(a, b, tau, GroupRingElement(q, tuple(int(c) for c in row)))
        for a, b, tau, row in bad_cells[:max_violations]
    )
    return VerifyReport(
        is_ccc=not bad_cells,
        peak=peak,
        mode=mode,
        K=K,
        M=M,
        L=L,
        q=q,
        shifts_tested=shifts,
        violations=violations,
        total_violations=len(bad_cells),
    )


def verify_ccc_sampled(C: CodeSet, cells: int, seed: int = 0) -> VerifyReport:
    """Exact verification on uniformly sampled (ordered pair, shift) cells.

    The same-code shift-0 peaks are always included on top of the sample.
    """
    rng = random.Random(seed)
    K, M, L, q = C.K, C.M, C.L, C.q
    peak = M * L
    bad: list[tuple[int, int, int, np.ndarray]] = []
    tested = 0

    def check(a: int, b: int, tau: int):
        nonlocal tested
        e1, m1 = _row_arrays(C, a)
        e2, m2 = _row_arrays(C, b)
        d = (e1[:, : L - tau] - e2[:, tau:]) % q
        valid = m1[:, : L - tau] & m2[:, tau:]
        counts = np.bincount(d[valid], minlength=q).astype(np.int64)
        target = counts.copy()
        if a == b and tau == 0:
            target[0] -= peak
        tested += 1
        if not zero_count_rows(target[None, :], q)[0]:
            bad.append((a, b, tau, counts))

    for k in range(K):
        check(k, k, 0)
    for _ in range(cells):
        a, b = rng.randrange(K), rng.randrange(K)
        tau = rng.randrange(L)
        if a == b and tau == 0:
            tau = rng.randrange(1, L)
        check(a, b, tau)
    bad.sort(key=lambda cell: cell[:3])
    violations = tuple(
        Violation(a, b, tau, GroupRingElement(q, tuple(int(c) for c in row)))
        for a, b, tau, row in bad[:16]
    )
    return VerifyReport(
        is_ccc=not bad,
        peak=peak,
        mode="exact-sampled",
        K=K,
        M=M,
        L=L,
        q=q,
        shifts_tested=tested,
        violations=violations,
        total_violations=len(bad),
    )


def gram_check_float(C: CodeSet, tol_factor: float = 1e-9) -> tuple[bool, float]:
    """Float Gram-matrix check via FFT: C(z) C^dagger(1/z) = M L I_K.

    Returns (ok, worst absolute deviation).  Advisory: float magnitudes can
    suggest but never certify exact zero-ness.
    """
    K, M, L, q = C.K, C.M, C.L, C.q
    peak = M * L
    vals = np.exp(2j * np.pi * C.exps / q)
    if C.mask is not None:
        vals = vals * C.mask
    n = 1
    while n < 2 * L:
        n *= 2
    F = np.fft.fft(vals, n=n, axis=2)
    worst = 0.0
    for k1 in range(K):
        for k2 in range(k1, K):
            spec = (F[k1] * np.conj(F[k2])).sum(axis=0)
            corr = np.fft.ifft(spec)  # index tau for tau >= 0, n - tau for tau < 0
            mags = np.abs(corr)
            if k1 == k2:
                mags[0] = abs(corr[0] - peak)
            keep = np.concatenate([mags[:L], mags[n - L + 1 :]])
            worst = max(worst, float(keep.max()))
    return worst < tol_factor * peak, worst


# ---------------------------------------------------------------------------
# necessity probes


def witness_shifts(cs: ConstructionSpec) -> list[int]:
    """The shift family where corrupted chain tables provably surface.

    Per block i with p = p_i, free length k_i = m_i - n_i and stride delta_i:
    tau = delta_i * (p^{k_i} - n * p^{k_i - s}) for s = 1..k_i-1, n = 1..p-1.
    Shift s probes chain slot k_i - s, so a constant table in slot j fires at
    s = k_i - j (n = 1) and the scan below visits exactly that cell early.
    """
    func = cs.func
    d = func.domain
    out: list[int] = []
    for i, ((p, _), ni, delta) in enumerate(zip(d.blocks, func.n, d.deltas)):
        k_i = d.blocks[i][1] - ni
        for s in range(1, k_i):
            for n in range(1, p):
                tau = delta * (p**k_i - n * p ** (k_i - s))
                if 0 < tau < d.L and tau not in out:
                    out.append(tau)
    return out


@dataclass(frozen=True)
class ProbeResult:
    found: bool
    tau: int = -1
    k1: int = -1
    k2: int = -1
    element: GroupRingElement | None = None
    scanned_witness_shifts: tuple = ()
    used_full_scan: bool = False

    def summary(self) -> str:
        if not self.found:
            return "no violation found (corrupted spec still verifies -- unexpected)"
        where = "witness scan" if not self.used_full_scan else "full scan"
        return (
            f"violation at shift {self.tau} between codes {self.k1} and {self.k2} "
            f"({where}); |Theta| = {self.element.magnitude():.6g}"
        )


def necessity_probe(cs: ConstructionSpec, full_scan_fallback: bool = True) -> ProbeResult:
    """Hunt for the correlation violation a corrupted spec must produce.

    Scans the witness shifts first (constant-table corruptions provably show
    up there when the position ordering is the identity), then optionally the
    whole pair/shift grid.  Only flagged-corrupted specs are accepted: for
    valid specs the builders already guarantee the property.
    """
    if not cs.corrupted:
        raise ValueError("necessity_probe expects a spec flagged corrupted")
    C = build_code_set(cs)
    q = C.q
    taus = witness_shifts(cs)
    for tau in taus:
        for k1 in range(C.K):
            for k2 in range(C.K):
                e1, m1 = _row_arrays(C, k1)
                e2, m2 = _row_arrays(C, k2)
                d = (e1[:, : C.L - tau] - e2[:, tau:]) % q
                valid = m1[:, : C.L - tau] & m2[:, tau:]
                counts = np.bincount(d[valid], minlength=q).astype(np.int64)
                if not zero_count_rows(counts[None, :], q)[0]:
                    return ProbeResult(
                        found=True,
                        tau=tau,
                        k1=k1,
                        k2=k2,
                        element=GroupRingElement(q, tuple(int(c) for c in counts)),
                        scanned_witness_shifts=tuple(taus),
                    )
    if full_scan_fallback:
        report = verify_ccc(C, mode="exact", max_violations=1)
        if report.violations:
            v = report.violations[0]
            return ProbeResult(
                found=True,
                tau=v.tau,
                k1=v.k1,
                k2=v.k2,
                element=v.element,
                scanned_witness_shifts=tuple(taus),
                used_full_scan=True,
            )
    return ProbeResult(found=False, scanned_witness_shifts=tuple(taus))


# ---------------------------------------------------------------------------
# the permutation <-> vanishing-character-sum equivalence


def character_sum(table, r: int) -> GroupRingElement:
    """sum_x zeta_q^{r * t(x)} as a group-ring element."""
    q = len(table)
    counts = [0] * q
    for x in range(q):
        counts[(r * table[x]) % q] += 1
    return GroupRingElement(q, tuple(counts))


def lemma1_equiv_check(q: int, sample: int | None = None, seed: int = 0) -> bool:
    """Confirm: all nonzero-character sums vanish exactly iff the map permutes Z_q.

    Exhaustive over all q^q tables when feasible (q <= 4 is 256 tables);
    otherwise checks `sample` random tables.  Returns True iff there is no
    counterexample.
    """
    from .exact_corr import is_zero_exact

    def tables():
        if sample is None:
            if q**q > 100_000:
                raise ValueError(f"q={q} too large for exhaustive check; pass sample=")
            for idx in range(q**q):
                yield tuple((idx // q**u) % q for u in range(q))
        else:
            rng = random.Random(seed)
            for _ in range(sample):
                yield tuple(rng.randrange(q) for _ in range(q))
            # make sure both sides of the equivalence are exercised
            base = list(range(q))
            for _ in range(max(sample // 10, 1)):
                rng.shuffle(base)
                yield tuple(base)

    for t in tables():
        vanish = all(is_zero_exact(character_sum(t, r)) for r in range(1, q))
        if vanish != is_permutation_mod(t, q):
            return False
    return True
