import random

import numpy as np
import pytest

import ccckit as ck
from ccckit import example72
from ccckit.exact_corr import counts_via_convolution, is_zero_exact
from ccckit.qary import constant_table, identity_table
from ccckit.verify import character_sum, witness_shifts

from conftest import rand_nonperm_table, rand_theorem1_spec, rand_theorem2_spec


def test_trivial_code_set_verifies():
    report = ck.verify_ccc(ck.trivial_code_set())
    assert report.is_ccc and report.peak == 1


def test_verified_12_72():
    report = ck.verify_ccc(example72.build())
    assert report.is_ccc
    assert report.peak == 864
    assert report.total_violations == 0
    assert report.mode == "exact"


def test_float_mode_agrees_on_builds(rng):
    for spec in (rand_theorem1_spec(rng, 4, 2), rand_theorem2_spec(rng, 2, 3, 2, 2)):
        C = ck.build_code_set(spec)
        exact = ck.verify_ccc(C, mode="exact")
        approx = ck.verify_ccc(C, mode="float")
        assert exact.is_ccc and approx.is_ccc


def test_corrupted_4_64_fails_at_witness_shift(rng):
    spec = rand_theorem1_spec(rng, 4, 3, identity_pi=True)
    bad = ck.corrupt_spec(spec, 0, 0, "f", constant_table(4))  # slot 1 constant
    C = ck.build_code_set(bad)
    report = ck.verify_ccc(C, max_violations=1000)
    assert not report.is_ccc
    assert any(v.tau == 60 for v in report.violations)  # 4^3 - 4^(3-2)
    assert report.total_violations >= len(report.violations)
    capped = ck.verify_ccc(C, max_violations=3)
    assert len(capped.violations) == 3
    assert capped.total_violations == report.total_violations
    taus = [(v.k1, v.k2, v.tau) for v in report.violations]
    assert taus == sorted(taus)


def test_witness_shift_table():
    s32 = rand_theorem1_spec(random.Random(1), 3, 2)
    assert witness_shifts(s32) == [6, 3]
    s43 = rand_theorem1_spec(random.Random(1), 4, 3)
    assert witness_shifts(s43) == [48, 32, 16, 60, 56, 52]
    t2 = rand_theorem2_spec(random.Random(1), 2, 3, 2, 2)
    assert witness_shifts(t2) == [2, 24, 12]


@pytest.mark.parametrize(
    "q,m,slot,tau",
    [(3, 2, 0, 6), (4, 3, 1, 48), (4, 3, 0, 60)],
)
def test_necessity_probe_constant_corruption(q, m, slot, tau, rng):
    spec = rand_theorem1_spec(rng, q, m, identity_pi=True)
    bad = ck.corrupt_spec(spec, 0, slot, "f", constant_table(q))
    result = ck.necessity_probe(bad)
    assert result.found
    assert result.tau == tau
    assert not result.used_full_scan
    assert not is_zero_exact(result.element)


def test_necessity_probe_theorem2_block1(rng):
    spec = rand_theorem2_spec(rng, 2, 3, 2, 2, lam=0, identity_pi=True)
    bad = ck.corrupt_spec(spec, 0, 0, "f", constant_table(6))
    result = ck.necessity_probe(bad)
    assert result.found and result.tau == 2  # 2^2 - 2^1 inside block 1


def test_necessity_probe_rejects_valid_spec(rng):
    with pytest.raises(ValueError):
        ck.necessity_probe(rand_theorem1_spec(rng, 3, 2))


def test_necessity_randomized_uniform_suite(rng):
    # randomized corruptions (non-constant too) must always be refuted
    for q in (2, 3, 4, 5, 6):
        for m in (2, 3):
            for _ in range(20):
                spec = rand_theorem1_spec(rng, q, m)
                slot = rng.randrange(m - 1)
                which = rng.choice(["f", "fp"])
                bad = ck.corrupt_spec(spec, 0, slot, which, rand_nonperm_table(rng, q, q))
                assert ck.necessity_probe(bad).found, (q, m, slot, which)


def test_necessity_randomized_mixed_suite(rng):
    for m1, m2 in ((2, 2), (3, 2)):
        for _ in range(20):
            spec = rand_theorem2_spec(rng, 2, 3, m1, m2)
            block = rng.randrange(2)
            n_chains = (m1 - 1, m2 - 1)[block]
            if n_chains == 0:
                block = 1 - block
                n_chains = (m1 - 1, m2 - 1)[block]
            slot = rng.randrange(n_chains)
            p_block = (2, 3)[block]
            bad = ck.corrupt_spec(
                spec, block, slot, rng.choice(["f", "fp"]),
                rand_nonperm_table(rng, 6, p_block),
            )
            assert ck.necessity_probe(bad).found, (m1, m2, block, slot)


def test_sufficiency_randomized_mixed_suite(rng):
    for m1, m2 in ((2, 2), (3, 2)):
        for _ in range(20):
            C = ck.build_code_set(rand_theorem2_spec(rng, 2, 3, m1, m2))
            report = ck.verify_ccc(C)
            assert report.is_ccc, (m1, m2)
            assert report.peak == 2 ** (m1 + 1) * 3 ** (m2 + 1)


def test_lemma1_equivalence_exhaustive():
    assert ck.lemma1_equiv_check(2)
    assert ck.lemma1_equiv_check(3)  # all 27 maps
    assert ck.lemma1_equiv_check(4)  # all 256 maps
    assert ck.lemma1_equiv_check(6, sample=300, seed=7)


def test_lemma1_identity_table_both_sides():
    t = identity_table(2)
    assert ck.is_permutation_mod(t, 2)
    assert is_zero_exact(character_sum(t, 1))


def test_character_sum_counts():
    g = character_sum(constant_table(5, 2), 3)
    assert g.counts == (0, 5, 0, 0, 0)  # all mass at 2*3 mod 5


def test_gram_float_and_exact_agree(rng):
    good = ck.build_code_set(rand_theorem2_spec(rng, 2, 3, 2, 2))
    ok, worst = ck.gram_check_float(good)
    assert ok and worst < 1e-9 * 216
    bad_spec = ck.corrupt_spec(
        rand_theorem1_spec(rng, 4, 2, identity_pi=True), 0, 0, "f", constant_table(4)
    )
    bad = ck.build_code_set(bad_spec)
    ok, worst = ck.gram_check_float(bad)
    assert not ok and worst > 1.0
    assert not ck.verify_ccc(bad).is_ccc


def test_gram_polynomial_identity_matches_shiftwise():
    # C(z) C^dagger(1/z) entries, expanded by convolution, match the verifier's
    # shiftwise counts on every pair of a verified set
    C = ck.build_theorem1(
        3, 2, [identity_table(3)], [identity_table(3)], [constant_table(3)] * 2, (0, 1)
    )
    assert ck.verify_ccc(C).is_ccc
    for k1 in range(C.K):
        for k2 in range(C.K):
            conv = counts_via_convolution(C.code(k1), C.code(k2))
            prof = ck.correlation_profile(C.code(k1), C.code(k2))
            assert np.array_equal(conv, prof.counts)
            flags = prof.zero_flags()
            center = C.L - 1
            if k1 == k2:
                assert not flags[center]
                assert np.delete(flags, center).all()
            else:
                assert flags.all()


def test_verify_sampled_consistent(rng):
    C = ck.build_code_set(rand_theorem2_spec(rng, 2, 3, 2, 2))
    report = ck.verify_ccc_sampled(C, 150, seed=3)
    assert report.is_ccc
    assert report.shifts_tested >= 150 + C.K


def test_verify_rejects_unknown_mode():
    with pytest.raises(ValueError):
        ck.verify_ccc(ck.trivial_code_set(), mode="fuzzy")


def test_verify_report_summary_strings(rng):
    C = ck.build_code_set(rand_theorem1_spec(rng, 2, 2))
    assert "CCC" in ck.verify_ccc(C).summary()
