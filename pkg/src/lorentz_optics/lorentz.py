"""Spinor-to-vector map from SL(2,C) onto proper orthochronous Lorentz matrices.

Coordinates are ordered ``(t, z, x, y)``. A four-vector is packed into the
Hermitian matrix ``t*I + z*s3 + x*s1 - y*s2``; an element ``A`` acts on it by
``X -> A X A^dagger``. The minus sign on the ``y`` slot makes the phase-shift
generator turn the ``(x, y)`` plane counter-clockwise, as required for the
lift of ``phase_shift(phi)`` to be the ordinary rotation by ``phi``.
"""
import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError
from .sl2c import as_sl2c

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# basis[mu] pairs with coordinate mu of (t, z, x, y); tr(basis[mu] basis[nu]) = 2 delta
BASIS = np.stack([np.eye(2, dtype=np.complex128), SIGMA_3, SIGMA_1, -SIGMA_2])


def hermitian_from_vector(v):
    v = np.asarray(v, dtype=np.float64)
    return np.einsum("m,mij->ij", v, BASIS)


def vector_from_hermitian(h):
    h = np.asarray(h)
    return 0.5 * np.einsum("mij,ji->m", BASIS, h).real


def lift(a, tol=DEFAULT_TOL.det):
    """4x4 Lorentz matrix of ``a``; ``lift(a) == lift(-a)``."""
    a = as_sl2c(a, tol)
    # Lambda[mu, nu] = 1/2 tr(B_mu A B_nu A^dagger)
    left = np.einsum("mij,jk->mik", BASIS, a)
    right = np.einsum("nkl,pl->nkp", BASIS, a.conj())
    return 0.5 * np.einsum("mik,nki->mn", left, right).real


def metric_defect(lam):
    lam = np.asarray(lam, dtype=np.float64)
    return float(np.max(np.abs(lam.T @ METRIC @ lam - METRIC)))


def relative_metric_defect(lam):
    """Metric defect divided by ``max(1, max|lam|)**2``.

    Rounding a boost with entries of size ``s`` to doubles already costs
    about ``eps * s**2`` in the metric, so large boosts need this scaling.
    """
    lam = np.asarray(lam, dtype=np.float64)
    return metric_defect(lam) / max(1.0, float(np.max(np.abs(lam)))) ** 2


def check_lorentz(lam, tol=DEFAULT_TOL.metric):
    """Validate a proper orthochronous Lorentz matrix and return it as floats."""
    lam = np.asarray(lam, dtype=np.float64)
    if lam.shape != (4, 4) or not np.all(np.isfinite(lam)):
        raise DomainError("expected a finite 4x4 matrix")
    defect = relative_metric_defect(lam)
    if defect > tol:
        raise DomainError(f"matrix violates the Minkowski metric by {defect:.3e}")
    if lam[0, 0] < 1.0 - tol:
        raise DomainError("matrix is not orthochronous")
    # det is +-1 once the metric holds; only the sign is numerically reliable
    if np.linalg.det(lam) <= 0:
        raise DomainError("matrix is not proper")
    return lam


def apply(lam, v, tol=DEFAULT_TOL.metric):
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (4,) or not np.all(np.isfinite(v)):
        raise DomainError("expected a finite four-vector")
    return check_lorentz(lam, tol) @ v


def minkowski_interval(v):
    t, z, x, y = np.asarray(v, dtype=np.float64)
    return float(t * t - z * z - x * x - y * y)
