import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _util import max_abs, random_element, random_spinor
from lorentz_optics import lorentz, polarization as pol, sl2c
from lorentz_optics.errors import DomainError

SQRT_HALF = 1 / math.sqrt(2)

amplitudes = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
spinors = st.tuples(amplitudes, amplitudes).filter(lambda p: abs(p[0]) + abs(p[1]) > 1e-3)


def physical_stokes(draw_s0, direction, degree):
    d = np.asarray(direction)
    return np.concatenate([[draw_s0], draw_s0 * degree * d / np.linalg.norm(d)])


stokes_vectors = st.builds(
    physical_stokes,
    st.floats(0.01, 100),
    st.lists(st.floats(-1, 1), min_size=3, max_size=3).filter(lambda d: np.linalg.norm(d) > 1e-3),
    st.floats(0, 1),
)


def test_coherency_from_jones_examples():
    np.testing.assert_array_equal(pol.coherency_from_jones([1, 0]), [[1, 0], [0, 0]])
    np.testing.assert_allclose(pol.coherency_from_jones([SQRT_HALF, SQRT_HALF]), np.full((2, 2), 0.5))


@given(spinors)
def test_pure_coherency_is_rank_one(psi):
    c = pol.coherency_from_jones(psi)
    tr = (c[0, 0] + c[1, 1]).real
    assert tr == pytest.approx(abs(psi[0]) ** 2 + abs(psi[1]) ** 2)
    assert abs(np.linalg.det(c)) <= 1e-12 * tr**2


def test_zero_spinor_rejected():
    with pytest.raises(DomainError):
        pol.coherency_from_jones([0, 0])


@pytest.mark.parametrize(
    "c, s",
    [
        (pol.coherency_from_jones([1, 0]), [1, 1, 0, 0]),
        (np.diag([0.5, 0.5]), [1, 0, 0, 0]),
        (pol.coherency_from_jones([SQRT_HALF, SQRT_HALF]), [1, 0, 1, 0]),
    ],
)
def test_stokes_from_coherency_examples(c, s):
    np.testing.assert_allclose(pol.stokes_from_coherency(c), s, atol=1e-15)


def test_stokes_sign_of_s3_follows_phase_lift():
    # after phase_shift(pi/2) the diagonal beam must sit at (1, 0, 0, 1)
    psi = pol.transform_jones(sl2c.phase_shift(math.pi / 2), [SQRT_HALF, SQRT_HALF])
    np.testing.assert_allclose(pol.stokes_from_jones(psi), [1, 0, 0, 1], atol=1e-15)


def test_coherency_from_stokes_examples():
    np.testing.assert_array_equal(pol.coherency_from_stokes([1, 0, 0, 0]), np.diag([0.5, 0.5]))
    np.testing.assert_array_equal(pol.coherency_from_stokes([1, 1, 0, 0]), [[1, 0], [0, 0]])


@given(stokes_vectors)
def test_stokes_round_trip(s):
    back = pol.stokes_from_coherency(pol.coherency_from_stokes(s))
    assert max_abs(back, s) <= 1e-12 * max(1.0, s[0])


def test_stokes_round_trip_random(rng):
    for _ in range(1000):
        d = rng.normal(size=3)
        s = np.concatenate([[1.0], rng.uniform() * d / np.linalg.norm(d)])
        assert max_abs(pol.stokes_from_coherency(pol.coherency_from_stokes(s)), s) <= 1e-12


@pytest.mark.parametrize(
    "s", [[1, 1.5, 0, 0], [-1, 0, 0, 0], [1, 0.8, 0.8, 0], [math.nan, 0, 0, 0]]
)
def test_unphysical_stokes_rejected(s):
    with pytest.raises(DomainError):
        pol.coherency_from_stokes(s)


def test_non_hermitian_coherency_rejected():
    with pytest.raises(DomainError):
        pol.stokes_from_coherency([[1, 0.5], [0.1, 1]])
    with pytest.raises(DomainError):
        pol.stokes_from_coherency([[1, 2], [2, 1]])


def test_transform_jones_examples():
    psi = np.array([0.3 + 0.1j, -0.7j])
    np.testing.assert_array_equal(pol.transform_jones(np.eye(2), psi), psi)
    np.testing.assert_allclose(pol.transform_jones(sl2c.rotation(math.pi), [1, 0]), [0, 1], atol=1e-15)
    eta = 0.9
    np.testing.assert_allclose(
        pol.transform_jones(sl2c.attenuation(eta), [1, 1]), [math.exp(eta / 2), math.exp(-eta / 2)]
    )


def test_mueller_examples():
    np.testing.assert_array_equal(pol.mueller_from_sl2c(np.eye(2)), np.eye(4))
    eta = 1.3
    np.testing.assert_allclose(
        pol.mueller_from_sl2c(sl2c.attenuation(eta)) @ [1, 0, 0, 0],
        [math.cosh(eta), math.sinh(eta), 0, 0],
        atol=1e-15,
    )


def test_stokes_covariance_pure(rng):
    for _ in range(1000):
        a, psi = random_element(rng), random_spinor(rng)
        # oracle: transform the spinor, then extract Stokes via the coherency matrix
        direct = pol.stokes_from_coherency(pol.coherency_from_jones(a @ psi))
        via_mueller = pol.mueller_from_sl2c(a) @ pol.stokes_from_coherency(pol.coherency_from_jones(psi))
        assert max_abs(direct, via_mueller) <= 1e-9


def test_stokes_covariance_mixed(rng):
    for _ in range(300):
        a = random_element(rng)
        c = pol.decohere(pol.coherency_from_jones(random_spinor(rng)), rng.uniform())
        direct = pol.stokes_from_coherency(pol.transform_coherency(a, c))
        assert max_abs(direct, lorentz.lift(a) @ pol.stokes_from_coherency(c)) <= 1e-9


def test_mass_invariant_under_mueller(rng):
    for _ in range(500):
        a = random_element(rng)
        c = pol.decohere(pol.coherency_from_jones(random_spinor(rng)), rng.uniform())
        s = pol.stokes_from_coherency(c)
        m2 = lorentz.minkowski_interval(s)
        assert abs(lorentz.minkowski_interval(lorentz.lift(a) @ s) - m2) <= 1e-9 * max(1.0, s[0] ** 2)


@given(spinors)
def test_pure_states_have_vanishing_mass(psi):
    s = pol.stokes_from_coherency(pol.coherency_from_jones(psi))
    assert pol.mixedness(s).m_squared <= 1e-9 * s[0] ** 2
    assert pol.mixedness(s).kind == pol.PURE
    assert pol.mixedness(pol.stokes_from_jones(psi)).ratio <= 1e-9


def test_stokes_from_jones_matches_coherency_path(rng):
    for _ in range(200):
        psi = random_spinor(rng)
        direct = pol.stokes_from_jones(psi)
        assert max_abs(direct, pol.stokes_from_coherency(pol.coherency_from_jones(psi))) <= 1e-14 * direct[0]


def test_decohere_examples():
    c = pol.coherency_from_jones([SQRT_HALF, 1j * SQRT_HALF])
    np.testing.assert_array_equal(pol.decohere(c, 1.0), c)
    full = pol.decohere(pol.coherency_from_jones([SQRT_HALF, SQRT_HALF]), 0.0)
    np.testing.assert_allclose(full, np.diag([0.5, 0.5]))
    np.testing.assert_allclose(pol.stokes_from_coherency(full), [1, 0, 0, 0])


@pytest.mark.parametrize("r", [-0.1, 1.1, math.nan])
def test_decohere_range(r):
    with pytest.raises(DomainError):
        pol.decohere(np.diag([0.5, 0.5]), r)


@given(spinors, st.floats(0, 1), st.floats(0, 1))
def test_decohere_monotone_and_closed_form(psi, r1, r2):
    c = pol.coherency_from_jones(psi)
    s = pol.stokes_from_coherency(c)
    lo, hi = sorted([r1, r2])
    m_lo = pol.mixedness(pol.stokes_from_coherency(pol.decohere(c, lo))).m_squared
    m_hi = pol.mixedness(pol.stokes_from_coherency(pol.decohere(c, hi))).m_squared
    slack = 1e-12 * s[0] ** 2
    assert m_lo >= m_hi - slack
    closed = s[0] ** 2 - s[1] ** 2 - lo**2 * (s[2] ** 2 + s[3] ** 2)
    assert m_lo == pytest.approx(closed, abs=1e-12 * s[0] ** 2 + 1e-300)


def test_mixedness_examples():
    pure = pol.mixedness([1, 1, 0, 0])
    assert pure.m_squared == 0 and pure.kind == pol.PURE
    rand = pol.mixedness([1, 0, 0, 0])
    assert rand.ratio == 1 and rand.kind == pol.COMPLETELY_RANDOM
    part = pol.mixedness([1, 0.6, 0, 0])
    assert part.m_squared == pytest.approx(0.64, abs=1e-15)
    assert part.ratio == pytest.approx(0.8, abs=1e-15)
    assert part.kind == pol.PARTIALLY_MIXED


def test_mixedness_zero_intensity():
    with pytest.raises(DomainError):
        pol.mixedness([0, 0, 0, 0])
