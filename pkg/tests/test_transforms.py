import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpf.boolfun import TruthTable, from_values
from mpf.errors import NonPowerOfTwoError
from mpf.gf2n import make_field
from mpf.transforms import (
    GaussianInt,
    Spectrum,
    bent4_witnesses,
    fwht,
    inverse_twisted,
    is_flat,
    transform_U,
    transform_V,
)
from oracles import (
    spectrum_pairs,
    twisted_values_mv,
    twisted_values_uv,
    u_spectrum_symmetric_form,
    u_spectrum_weight_form,
    v_spectrum_direct,
)

F4 = make_field(2)


def test_gaussian_int_norm():
    assert GaussianInt(3, -4).norm_sq == 25


def test_fwht_delta_pairing():
    out = fwht(np.ones((4, 2), dtype=np.int64) * np.array([1, 0]))
    assert out[0].tolist() == [4, 0]
    assert not out[1:].any()


def test_fwht_orthogonality():
    for u0 in range(8):
        row = np.array([(-1) ** ((u0 & x).bit_count() & 1) for x in range(8)], dtype=np.int64)
        out = fwht(row)
        expected = np.zeros(8, dtype=np.int64)
        expected[u0] = 8
        assert np.array_equal(out, expected)


def test_fwht_rejects_bad_length():
    with pytest.raises(NonPowerOfTwoError):
        fwht(np.ones(6, dtype=np.int64))
    with pytest.raises(NonPowerOfTwoError):
        fwht(np.ones((0, 2), dtype=np.int64))


def test_fwht_rejects_floats():
    with pytest.raises(TypeError):
        fwht(np.ones(4, dtype=np.float64))


def test_fwht_accepts_gaussian_tuples():
    out = fwht([GaussianInt(1, 0), GaussianInt(0, 1)])
    assert out.tolist() == [[1, 1], [1, -1]]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_fwht_parseval_on_signs(n, data):
    size = 1 << n
    signs = np.array([data.draw(st.sampled_from((-1, 1))) for _ in range(size)], dtype=np.int64)
    out = fwht(signs)
    assert int((out * out).sum()) == size * size


def test_transform_U_examples():
    g0 = TruthTable(2, 0, "mv")
    s = transform_U(g0, 0b11)
    assert s.value(0) == (0, 2)  # 1 + i + i + i^2
    walsh = transform_U(g0, 0)
    assert spectrum_pairs(walsh) == [(4, 0), (0, 0), (0, 0), (0, 0)]


def test_transform_V_examples():
    g0 = TruthTable(2, 0, "uv")
    s = transform_V(F4, g0, 1)
    assert s.value(0) == (0, -2)
    walsh = transform_V(F4, g0, 0)
    assert spectrum_pairs(walsh) == [(4, 0), (0, 0), (0, 0), (0, 0)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transform_U_equals_both_direct_forms(n):
    size = 1 << n
    for bits in range(1 << size):
        g = TruthTable(n, bits, "mv")
        for c in range(size):
            got = spectrum_pairs(transform_U(g, c))
            assert got == u_spectrum_weight_form(g, c)
            assert got == u_spectrum_symmetric_form(g, c)


@pytest.mark.parametrize("n", [1, 2])
def test_transform_V_equals_direct_form_exhaustive(n):
    spec = make_field(n)
    size = 1 << n
    for bits in range(1 << size):
        g = TruthTable(n, bits, "uv")
        for c in range(size):
            assert spectrum_pairs(transform_V(spec, g, c)) == v_spectrum_direct(spec, g, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 4), st.data())
def test_transform_V_equals_direct_form_random(n, data):
    spec = make_field(n)
    size = 1 << n
    bits = data.draw(st.integers(0, (1 << size) - 1))
    c = data.draw(st.integers(0, size - 1))
    g = TruthTable(n, bits, "uv")
    assert spectrum_pairs(transform_V(spec, g, c)) == v_spectrum_direct(spec, g, c)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.data())
def test_parseval_both_modes(n, data):
    size = 1 << n
    bits = data.draw(st.integers(0, (1 << size) - 1))
    c = data.draw(st.integers(0, size - 1))
    su = transform_U(TruthTable(n, bits, "mv"), c)
    assert int(su.norms_sq().sum()) == size * size
    sv = transform_V(make_field(n), TruthTable(n, bits, "uv"), c)
    assert int(sv.norms_sq().sum()) == size * size


def test_is_flat_examples():
    bent = from_values([0, 0, 0, 1], "mv")  # x1 * x2
    assert is_flat(transform_U(bent, 0))
    assert not is_flat(transform_U(TruthTable(2, 0, "mv"), 0))
    assert is_flat(transform_V(F4, TruthTable(2, 0, "uv"), 1))


def test_bent4_witnesses_uv_zero():
    assert bent4_witnesses(TruthTable(2, 0, "uv"), F4) == {1, 2, 3}


def test_bent4_witnesses_mv_zero():
    assert bent4_witnesses(TruthTable(2, 0, "mv")) == {0b11}


def test_bent4_witnesses_mv_affine_contains_all_ones():
    g = from_values([0, 1, 1, 0], "mv")  # x_1 + x_2
    assert 0b11 in bent4_witnesses(g)


def test_no_bent_functions_on_three_variables():
    for bits in range(256):
        assert 0 not in bent4_witnesses(TruthTable(3, bits, "mv"))


def test_affine_uv_flat_for_every_nonzero_twist():
    # g = Tr(ax) + b has a flat twisted spectrum at every c != 0
    spec = make_field(3)
    from mpf.gf2n import fe_mul, trace_n

    for a in spec.elements():
        for b in (0, 1):
            g = from_values([trace_n(spec, fe_mul(spec, a, x)) ^ b for x in spec.elements()], "uv")
            for c in range(1, spec.order):
                s = transform_V(spec, g, c)
                assert is_flat(s)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_inverse_round_trip_mv(n, data):
    size = 1 << n
    bits = data.draw(st.integers(0, (1 << size) - 1))
    c = data.draw(st.integers(0, size - 1))
    g = TruthTable(n, bits, "mv")
    s = transform_U(g, c)
    recovered = inverse_twisted(s)
    assert [tuple(v) for v in recovered] == twisted_values_mv(g, c)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_inverse_round_trip_uv(n, data):
    spec = make_field(n)
    size = 1 << n
    bits = data.draw(st.integers(0, (1 << size) - 1))
    c = data.draw(st.integers(0, size - 1))
    g = TruthTable(n, bits, "uv")
    s = transform_V(spec, g, c)
    recovered = inverse_twisted(s, spec)
    assert [tuple(v) for v in recovered] == twisted_values_uv(spec, g, c)


def test_inverse_of_zero_spectrum_is_zero():
    zero = Spectrum(2, "mv", 0, np.zeros((4, 2), dtype=np.int64))
    assert not inverse_twisted(zero).any()


def test_inverse_recovers_delta():
    delta = np.zeros((8, 2), dtype=np.int64)
    delta[5, 0] = 1
    s = Spectrum(3, "mv", 0, fwht(delta))
    assert np.array_equal(inverse_twisted(s), delta)


def test_spectrum_value_accessor():
    s = transform_U(TruthTable(2, 0, "mv"), 0b11)
    v = s.value(0)
    assert isinstance(v, GaussianInt)
    assert v.norm_sq == 4
