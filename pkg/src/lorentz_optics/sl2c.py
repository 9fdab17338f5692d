"""Two-by-two unimodular complex matrices for optical elements.

Every element is an ``(2, 2)`` complex128 array with determinant one.
The generators use half-angle arguments so that their Lorentz lifts carry
the full angle or rapidity.
"""
from dataclasses import dataclass
import math

import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError, NumericalIntegrityError, UsageError

ELLIPTIC = "Elliptic"
PARABOLIC = "Parabolic"
HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class ConjugacyClass:
    tag: str
    trace: float


def _finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}")
    return value


def det_scale(m):
    """Magnitude of the two products entering the determinant."""
    return abs(m[0, 0] * m[1, 1]) + abs(m[0, 1] * m[1, 0])


def det_error(m):
    """|det - 1| relative to :func:`det_scale` (floored at one)."""
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return abs(det - 1.0) / max(1.0, det_scale(m))


def as_sl2c(m, tol=DEFAULT_TOL.det):
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix entries must be finite")
    if det_error(m) > tol:
        raise DomainError(f"determinant deviates from 1 by {det_error(m):.3e}")
    return m


def identity():
    return np.eye(2, dtype=np.complex128)


def phase_shift(phi):
    half = _finite("phi", phi) / 2
    return np.array([[np.exp(1j * half), 0], [0, np.exp(-1j * half)]], dtype=np.complex128)


def rotation(theta):
    half = _finite("theta", theta) / 2
    c, s = math.cos(half), math.sin(half)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def attenuation(eta):
    half = _finite("eta", eta) / 2
    return np.array([[math.exp(half), 0], [0, math.exp(-half)]], dtype=np.complex128)


def x_boost(chi):
    half = _finite("chi", chi) / 2
    ch, sh = math.cosh(half), math.sinh(half)
    return np.array([[ch, sh], [sh, ch]], dtype=np.complex128)


GENERATORS = {
    "phase": phase_shift,
    "rot": rotation,
    "atten": attenuation,
    "xboost": x_boost,
}


def compose(elements, tol=DEFAULT_TOL.det):
    """Product of ``elements`` in beam order.

    The first element acts first on the beam, so it sits rightmost in the
    matrix product. The determinant is re-checked, never renormalized.
    """
    elements = list(elements)
    if not elements:
        raise UsageError("cannot compose an empty chain")
    out = identity()
    for m in elements:
        out = as_sl2c(m, tol) @ out
    err = det_error(out)
    if err > tol:
        raise NumericalIntegrityError(f"determinant drifted by {err:.3e} during composition")
    return out


def classify_real(m, tol_det=DEFAULT_TOL.det, tol_cls=DEFAULT_TOL.cls):
    """Elliptic / parabolic / hyperbolic label of a real unimodular matrix."""
    m = np.asarray(m)
    if np.iscomplexobj(m):
        if np.max(np.abs(m.imag)) > tol_det:
            raise DomainError("classify_real needs a real matrix")
        m = m.real
    m = as_sl2c(m, tol_det).real
    trace = float(m[0, 0] + m[1, 1])
    excess = abs(trace) - 2.0
    if abs(excess) <= tol_cls:
        tag = PARABOLIC
    elif excess < 0:
        tag = ELLIPTIC
    else:
        tag = HYPERBOLIC
    return ConjugacyClass(tag, trace)
