"""Jones spinors, coherency matrices and Stokes four-vectors.

Conventions: ``C[i, j] = <psi_i conj(psi_j)>`` and
``C = (S0*I + S1*s3 + S2*s1 - S3*s2) / 2``, the same Pauli basis used by
:mod:`lorentz_optics.lorentz`. With this pairing the Stokes vector of
``A psi`` is exactly ``lift(A) @ stokes(psi)``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError
from .lorentz import hermitian_from_vector, lift, minkowski_interval
from .sl2c import as_sl2c

PURE = "Pure"
PARTIALLY_MIXED = "PartiallyMixed"
COMPLETELY_RANDOM = "CompletelyRandom"

HERMITIAN_TOL = 1e-12
PHYSICAL_TOL = 1e-9


@dataclass(frozen=True)
class MixednessReport:
    m_squared: float
    ratio: float
    kind: str

    def as_dict(self):
        return {"m_squared": self.m_squared, "ratio": self.ratio, "class": self.kind}


def jones(psi1, psi2):
    return check_jones(np.array([psi1, psi2], dtype=np.complex128))


def check_jones(psi):
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (2,) or not np.all(np.isfinite(psi)):
        raise DomainError("a Jones spinor is two finite complex amplitudes")
    if not np.any(psi):
        raise DomainError("the zero spinor carries no beam")
    return psi


def check_coherency(c):
    c = np.asarray(c, dtype=np.complex128)
    if c.shape != (2, 2) or not np.all(np.isfinite(c)):
        raise DomainError("a coherency matrix is a finite 2x2 matrix")
    scale = max(1.0, float(abs(c[0, 0]) + abs(c[1, 1])))
    if np.max(np.abs(c - c.conj().T)) > HERMITIAN_TOL * scale:
        raise DomainError("coherency matrix is not Hermitian")
    if min(c[0, 0].real, c[1, 1].real) < -HERMITIAN_TOL * scale:
        raise DomainError("coherency matrix has a negative intensity")
    if (c[0, 0] * c[1, 1]).real - abs(c[0, 1]) ** 2 < -HERMITIAN_TOL * scale**2:
        raise DomainError("coherency matrix is not positive semidefinite")
    return c


def check_stokes(s):
    s = np.asarray(s, dtype=np.float64)
    if s.shape != (4,) or not np.all(np.isfinite(s)):
        raise DomainError("a Stokes vector is four finite numbers")
    if s[0] < 0:
        raise DomainError("S0 must be non-negative")
    if minkowski_interval(s) < -PHYSICAL_TOL * max(1.0, s[0] ** 2):
        raise DomainError("Stokes vector is unphysical: polarized part exceeds S0")
    return s


def coherency_from_jones(psi):
    psi = check_jones(psi)
    return np.outer(psi, psi.conj())


def stokes_from_coherency(c):
    c = check_coherency(c)
    c11, c12, c21, c22 = c[0, 0], c[0, 1], c[1, 0], c[1, 1]
    return np.array(
        [
            (c11 + c22).real,
            (c11 - c22).real,
            (c12 + c21).real,
            (1j * (c21 - c12)).real,
        ]
    )


def coherency_from_stokes(s):
    return 0.5 * hermitian_from_vector(check_stokes(s))


def stokes_from_jones(psi):
    """Stokes vector of a pure beam, placed exactly on the light cone.

    S0 is taken as the norm of the polarized part, which equals
    ``|psi1|^2 + |psi2|^2`` analytically and keeps ``M`` at zero in floats.
    """
    psi = check_jones(psi)
    cross = psi[0] * psi[1].conj()
    a1, a2 = abs(psi[0]) ** 2, abs(psi[1]) ** 2
    s1, s2, s3 = a1 - a2, 2.0 * cross.real, 2.0 * cross.imag
    return np.array([_norm3(s1, s2, s3), s1, s2, s3])


def _norm3(a, b, c):
    return math.hypot(a, b, c)


def mass_squared(s):
    """``S0^2 - |s|^2`` in the factored form that avoids cancellation."""
    s = np.asarray(s, dtype=np.float64)
    polarized = _norm3(s[1], s[2], s[3])
    return float((s[0] - polarized) * (s[0] + polarized))


def transform_jones(a, psi):
    return as_sl2c(a) @ check_jones(psi)


def transform_coherency(a, c):
    a = as_sl2c(a)
    return a @ check_coherency(c) @ a.conj().T


def mueller_from_sl2c(a):
    """Mueller matrix of a lossless element; identical to its Lorentz lift."""
    return lift(a)


def decohere(c, r):
    """Scale the cross-coherence between the two beams by ``r`` in [0, 1]."""
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"coherence factor must lie in [0, 1], got {r}")
    c = check_coherency(c).copy()
    c[0, 1] *= r
    c[1, 0] *= r
    return c


def mixedness(s, tol=DEFAULT_TOL.mix):
    s = check_stokes(s)
    if s[0] == 0:
        raise DomainError("mixedness is undefined for S0 = 0")
    m2 = mass_squared(s)
    ratio = min(1.0, math.sqrt(max(m2, 0.0)) / s[0])
    # M itself cannot resolve below ~sqrt(eps) * S0, so purity is judged on M^2
    if m2 <= tol * s[0] ** 2:
        kind = PURE
    elif ratio >= 1.0 - tol:
        kind = COMPLETELY_RANDOM
    else:
        kind = PARTIALLY_MIXED
    return MixednessReport(m2, ratio, kind)
