import random

import numpy as np
import pytest

import ccckit as ck
from ccckit import example72
from ccckit.exact_corr import (
    GroupRingElement,
    accf_exact,
    code_accf,
    correlation_profile,
    counts_via_convolution,
    cyclotomic,
    is_zero_exact,
    poly_divmod_exact,
    poly_mul,
    zero_count_rows,
)
from ccckit.qary import restriction_values
from ccckit.waveform import RootSequence, psi, psi_restricted

from conftest import rand_root_sequence


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def test_cyclotomic_small():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_product_identity(n):
    prod = (1,)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = poly_mul(prod, cyclotomic(d))
    expect = tuple([-1] + [0] * (n - 1) + [1])
    assert prod == expect


def test_poly_divmod_requires_monic():
    with pytest.raises(ValueError):
        poly_divmod_exact((1, 2, 3), (1, 2))


# ---------------------------------------------------------------------------
# group-ring elements and the exact zero test


def test_is_zero_reference_cases():
    assert is_zero_exact(GroupRingElement(6, (1, 0, 1, 0, 1, 0)))  # 1 + w^2 + w^4
    assert not is_zero_exact(GroupRingElement(6, (1, 1, 0, 0, 0, 0)))
    for q in range(1, 13):
        assert is_zero_exact(GroupRingElement(q, (3,) * q)) == (q > 1)


def test_is_zero_mixed_orbit_sums():
    # sums of complete p-orbits inside Z_6 vanish; lone roots do not
    assert is_zero_exact(GroupRingElement(6, (1, 0, 0, 1, 0, 0)))  # 1 + w^3
    assert is_zero_exact(GroupRingElement(6, (0, 2, 0, 0, 2, 0)))  # 2w(1 + w^3)
    assert not is_zero_exact(GroupRingElement(6, (0, 0, 1, 0, 0, 0)))


def test_is_zero_agrees_with_float(rng):
    for _ in range(500):
        q = rng.choice([2, 3, 4, 5, 6, 8, 12])
        if rng.random() < 0.5:
            counts = [rng.randrange(-30, 31) for _ in range(q)]
        else:
            base = [rng.randrange(-5, 6) for _ in range(q)]
            counts = [0] * q
            phi = cyclotomic(q)
            for i, b in enumerate(base):
                for j, c in enumerate(phi):
                    counts[(i + j) % q] += b * c
        g = GroupRingElement(q, tuple(counts))
        if is_zero_exact(g):
            assert g.magnitude() < 1e-6
        else:
            assert g.magnitude() > 1e-7


def test_zero_count_rows_matches_scalar():
    rng = random.Random(5)
    rows = np.array(
        [[rng.randrange(-4, 5) for _ in range(6)] for _ in range(200)], dtype=np.int64
    )
    flags = zero_count_rows(rows, 6)
    for row, flag in zip(rows, flags):
        assert is_zero_exact(GroupRingElement(6, tuple(int(v) for v in row))) == bool(flag)


def test_conjugate():
    g = GroupRingElement(6, (1, 2, 3, 4, 5, 6))
    assert g.conjugate().counts == (1, 6, 5, 4, 3, 2)
    val = g.to_complex()
    assert abs(g.conjugate().to_complex() - val.conjugate()) < 1e-9


# ---------------------------------------------------------------------------
# accf


def test_accf_zero_shift_self():
    seq = psi(example72.function())
    g = accf_exact(seq, seq, 0)
    assert g.counts[0] == 72 and sum(g.counts) == 72
    assert abs(g.to_complex() - 72) < 1e-9


def test_accf_hand_example():
    a = RootSequence(2, (0, 0, 0, 1))  # (+, +, +, -)
    g = accf_exact(a, a, 1)
    assert g.counts == (2, 1)
    assert abs(g.to_complex() - 1) < 1e-12


def _accf_complex_oracle(a: RootSequence, b: RootSequence, tau: int) -> complex:
    # independent brute-force evaluation straight from the defining sum
    va, vb = a.to_complex(), b.to_complex()
    L = len(a)
    if tau >= 0:
        return sum(va[t] * np.conj(vb[t + tau]) for t in range(L - tau))
    return sum(va[t - tau] * np.conj(vb[t]) for t in range(L + tau))


def test_accf_against_bruteforce(rng):
    for _ in range(25):
        q = rng.choice([2, 3, 4, 6])
        L = rng.randrange(2, 12)
        a = rand_root_sequence(rng, q, L, holes=True)
        b = rand_root_sequence(rng, q, L, holes=True)
        for tau in range(-(L - 1), L):
            g = accf_exact(a, b, tau)
            assert abs(g.to_complex() - _accf_complex_oracle(a, b, tau)) < 1e-9
            assert sum(g.counts) <= L - abs(tau)


def test_accf_restricted_support_counts():
    f = example72.function()
    seq = psi_restricted(f, (1,), (0,))
    g = accf_exact(seq, seq, 1)
    # support pairs (t, t+1) both defined: only the (4n, 4n+1) pairs, 18 of them
    assert sum(g.counts) == 18
    assert abs(g.to_complex() - _accf_complex_oracle(seq, seq, 1)) < 1e-9


def test_accf_conjugate_symmetry(rng):
    for _ in range(10):
        q = rng.choice([3, 4, 6])
        L = rng.randrange(2, 10)
        a = rand_root_sequence(rng, q, L, holes=True)
        b = rand_root_sequence(rng, q, L, holes=True)
        for tau in range(L):
            assert accf_exact(a, b, -tau).counts == accf_exact(b, a, tau).conjugate().counts


def test_accf_errors():
    a = RootSequence(2, (0, 1))
    with pytest.raises(ValueError):
        accf_exact(a, RootSequence(3, (0, 1)), 0)
    with pytest.raises(ValueError):
        accf_exact(a, RootSequence(2, (0, 1, 0)), 0)
    with pytest.raises(ValueError):
        accf_exact(a, a, 2)


# ---------------------------------------------------------------------------
# code-level correlation


def test_code_accf_golay_pair():
    row = [RootSequence(2, (0, 0, 0, 1)), RootSequence(2, (0, 1, 0, 0))]
    g = code_accf(row, row, 1)
    assert is_zero_exact(g)
    g0 = code_accf(row, row, 0)
    assert g0.counts[0] == 8 and sum(g0.counts) == 8


def test_code_accf_verified_set_cross_row():
    codes = example72.build()
    g = code_accf(codes.code(0), codes.code(5), 0)
    assert is_zero_exact(g)
    g = code_accf(codes.code(0), codes.code(0), 0)
    assert g.shifted(864).counts == (0,) * 6 or is_zero_exact(g.shifted(864))


def test_code_accf_shape_errors():
    row = [RootSequence(2, (0, 0, 0, 1))]
    with pytest.raises(ValueError):
        code_accf(row, [RootSequence(2, (0, 0, 0, 1))] * 2, 0)


# ---------------------------------------------------------------------------
# profiles and the convolution cross-check


def test_profile_negative_shifts_match_direct(rng):
    q, L, M = 6, 9, 2
    row1 = [rand_root_sequence(rng, q, L, holes=True) for _ in range(M)]
    row2 = [rand_root_sequence(rng, q, L, holes=True) for _ in range(M)]
    prof = correlation_profile(row1, row2)
    for tau in prof.taus:
        assert prof.element(tau).counts == code_accf(row1, row2, tau).counts


def test_profile_matches_convolution_path(rng):
    for holes in (False, True):
        q, L, M = 6, 11, 3
        row1 = [rand_root_sequence(rng, q, L, holes=holes) for _ in range(M)]
        row2 = [rand_root_sequence(rng, q, L, holes=holes) for _ in range(M)]
        prof = correlation_profile(row1, row2)
        conv = counts_via_convolution(row1, row2)
        assert np.array_equal(prof.counts, conv)


def test_profile_verified_set_shapes():
    codes = example72.build()
    prof = correlation_profile(codes.code(1), codes.code(1))
    mags = prof.magnitudes()
    center = codes.L - 1
    assert abs(mags[center] - 864) < 1e-6
    off = np.delete(mags, center)
    assert off.max() < 1e-6
    flags = prof.zero_flags()
    assert not flags[center]
    assert np.delete(flags, center).all()
    # cross profile of two distinct codes: exactly zero at every shift
    cross = correlation_profile(codes.code(1), codes.code(11))
    assert cross.zero_flags().all()
    assert cross.magnitudes().max() < 1e-6


def test_profile_empty_overlap_is_zero():
    # single-support sequences: at the extreme positive shift nothing overlaps
    a = RootSequence(4, (None, None, 0))
    b = RootSequence(4, (2, None, None))
    prof = correlation_profile([a], [b])
    assert prof.element(2).counts == (0, 0, 0, 0)
    assert sum(prof.element(0).counts) == 0
    assert prof.element(-2).counts == (0, 0, 1, 0)  # exponent 0 - 2 mod 4


def test_restricted_decomposition_exhaustive(rng):
    # Theta(psi f, psi g)(tau) = sum over (c1, c2) of the restricted correlations
    d = ck.DomainSpec(((2, 2), (3, 1)))
    J = (1, 2)
    table_f = [rng.randrange(6) for _ in range(d.L)]
    table_g = [rng.randrange(6) for _ in range(d.L)]
    f = ck.QaryFunction(d, np.array(table_f))
    g = ck.QaryFunction(d, np.array(table_g))
    parts_f = [psi_restricted(f, J, c) for c in restriction_values(d, J)]
    parts_g = [psi_restricted(g, J, c) for c in restriction_values(d, J)]
    full_f, full_g = psi(f), psi(g)
    for tau in range(-(d.L - 1), d.L):
        total = GroupRingElement.zero(6)
        for pf in parts_f:
            for pg in parts_g:
                total = total + accf_exact(pf, pg, tau)
        assert total.counts == accf_exact(full_f, full_g, tau).counts
