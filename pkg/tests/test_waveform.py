import numpy as np
import pytest

from ccckit import example72
from ccckit.mixed_radix import DomainSpec
from ccckit.qary import MonomialForm, restriction_values, zero_function
from ccckit.waveform import RootSequence, eta, psi, psi_restricted, superpose


def test_eta_reference_sequence():
    assert tuple(eta(example72.function())) == example72.ETA_REFERENCE


def test_eta_zero_function():
    assert eta(zero_function(example72.DOMAIN)) == [0] * 72


def test_eta_single_variable():
    d = DomainSpec(((2, 1),))
    f = MonomialForm(d, {(1,): 1}).to_function()
    assert eta(f) == [0, 1]


def test_psi_matches_eta_and_is_full():
    f = example72.function()
    seq = psi(f)
    assert seq.q == 6
    assert seq.is_full()
    assert tuple(seq.entries) == example72.ETA_REFERENCE
    assert seq.support == tuple(range(72))


def test_psi_zero_function_is_all_ones():
    seq = psi(zero_function(example72.DOMAIN))
    vals = seq.to_complex()
    assert np.allclose(vals, 1.0)


def test_psi_product_function():
    d = DomainSpec(((2, 2),))
    f = MonomialForm(d, {(1, 1): 1}).to_function()
    assert psi(f).entries == (0, 0, 0, 1)  # (+, +, +, -)


def test_psi_restricted_reference_pattern():
    f = example72.function()
    seq = psi_restricted(f, (1,), (0,))
    assert tuple(seq.entries) == example72.PSI_RESTRICTED_X2_0
    assert len(seq.support) == 36


def test_psi_restricted_empty_J():
    f = example72.function()
    assert psi_restricted(f, (), ()).entries == psi(f).entries


def test_restriction_support_sizes_and_superposition():
    f = example72.function()
    J = (1, 4)
    parts = [psi_restricted(f, J, c) for c in restriction_values(example72.DOMAIN, J)]
    assert all(len(p.support) == 72 // (2 * 3) for p in parts)
    supports = [set(p.support) for p in parts]
    assert set().union(*supports) == set(range(72))
    assert sum(len(s) for s in supports) == 72
    assert superpose(parts).entries == psi(f).entries


def test_superpose_rejects_overlap():
    f = example72.function()
    part = psi_restricted(f, (1,), (0,))
    with pytest.raises(ValueError):
        superpose([part, part])


def test_csv_fields_roundtrip():
    from ccckit.waveform import from_csv_fields, to_csv_fields

    seq = RootSequence(6, (0, None, 5, None))
    fields = to_csv_fields(seq)
    assert fields == ["0", "", "5", ""]
    assert from_csv_fields(6, fields).entries == seq.entries


def test_root_sequence_validation():
    with pytest.raises(ValueError):
        RootSequence(6, (0, 6))
    with pytest.raises(ValueError):
        RootSequence(6, (-1,))
    seq = RootSequence(6, (0, None, 5))
    assert seq.support == (0, 2)
    vals = seq.to_complex()
    assert vals[1] == 0
    assert abs(vals[2] - np.exp(2j * np.pi * 5 / 6)) < 1e-12
