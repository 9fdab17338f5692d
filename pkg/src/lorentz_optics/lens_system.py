"""Paraxial one-lens optics and its little-group decomposition.

With equal arms ``z1 = z2 = z`` the one-lens matrix, conjugated by
``diag(z**-0.5, z**0.5)`` and negated, becomes the core matrix

    [[x - 1, x - 2],
     [x,     x - 1]],   x = z / f,

whose trace ``2(x - 1)`` decides the regime: a boosted rotation for
``0 < x < 2``, a boosted x-boost for ``x > 2`` and a shear at ``x = 2``.
Approaching ``x = 2`` from either side sends the boost parameter to
infinity while the angle shrinks to zero.
"""
from dataclasses import dataclass
import math

import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError
from .sl2c import ELLIPTIC, HYPERBOLIC, PARABOLIC

MASSIVE_LIKE = "MassiveLike"
MASSLESS_LIKE = "MasslessLike"
TACHYON_LIKE = "TachyonLike"

PARTICLE_LABEL = {
    ELLIPTIC: MASSIVE_LIKE,
    PARABOLIC: MASSLESS_LIKE,
    HYPERBOLIC: TACHYON_LIKE,
}

BELOW = "below"
ABOVE = "above"

RENORMALIZE_TOL = 1e-12


@dataclass(frozen=True)
class OneLensSystem:
    z1: float
    z2: float
    f: float

    def __post_init__(self):
        for name in ("z1", "z2", "f"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.z1 <= 0 or self.z2 <= 0:
            raise DomainError("object and image distances must be positive")
        if self.f == 0:
            raise DomainError("focal length must be non-zero")


@dataclass(frozen=True)
class WignerDecomposition:
    """Factorisation of a core matrix; only the fields of ``tag`` are set."""

    tag: str
    eta: float | None = None
    phi: float | None = None
    chi: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        wanted = {
            ELLIPTIC: {"eta", "phi"},
            HYPERBOLIC: {"eta", "chi"},
            PARABOLIC: {"gamma"},
        }.get(self.tag)
        if wanted is None:
            raise DomainError(f"unknown decomposition tag {self.tag!r}")
        present = {k for k in ("eta", "phi", "chi", "gamma") if getattr(self, k) is not None}
        if present != wanted:
            raise DomainError(f"{self.tag} decomposition needs exactly {sorted(wanted)}")

    @property
    def particle_label(self):
        return PARTICLE_LABEL[self.tag]

    def as_dict(self):
        out = {"tag": self.tag, "particle_label": self.particle_label}
        for k in ("eta", "phi", "chi", "gamma"):
            if getattr(self, k) is not None:
                out[k] = getattr(self, k)
        return out


@dataclass(frozen=True)
class ContractionRow:
    x: float
    eta: float
    angle: float
    lower_left: float
    upper_right: float

    def as_dict(self):
        return {
            "x": self.x,
            "eta": self.eta,
            "angle": self.angle,
            "lower_left": self.lower_left,
            "upper_right": self.upper_right,
        }


def lens(f):
    f = float(f)
    if f == 0 or not math.isfinite(f):
        raise DomainError("focal length must be finite and non-zero")
    return np.array([[1.0, 0.0], [-1.0 / f, 1.0]])


def translation(z):
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("distance must be finite")
    return np.array([[1.0, z], [0.0, 1.0]])


def one_lens_chain(system):
    return translation(system.z2) @ lens(system.f) @ translation(system.z1)


def is_focused(system, tol=DEFAULT_TOL.focus):
    if tol <= 0:
        raise DomainError("focus tolerance must be positive")
    z1, z2, f = system.z1, system.z2, system.f
    return abs(z1 + z2 - z1 * z2 / f) <= tol


def core_matrix(x):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    return np.array([[x - 1.0, x - 2.0], [x, x - 1.0]])


def renormalize_core(z, f):
    """Return ``(x, scale)`` with ``-D M D^-1 == core_matrix(x)``.

    ``M`` is the equal-arm one-lens matrix and ``D = diag(1/scale, scale)``
    with ``scale = sqrt(z)``. The identity is checked before returning.
    """
    z, f = float(z), float(f)
    if not z > 0:
        raise DomainError("arm length z must be positive")
    m = one_lens_chain(OneLensSystem(z, z, f))
    x = z / f
    scale = math.sqrt(z)
    d = np.diag([1.0 / scale, scale])
    d_inv = np.diag([scale, 1.0 / scale])
    core = core_matrix(x)
    got = -d @ m @ d_inv
    err = float(np.max(np.abs(got - core)))
    if err > RENORMALIZE_TOL * max(1.0, float(np.max(np.abs(core)))):
        raise DomainError(f"renormalisation mismatch {err:.3e}")
    return x, scale


def _elliptic(x, gap):
    # gap = 2 - x > 0, passed separately to avoid cancellation near x = 2
    half = math.atan2(math.sqrt(x * gap), x - 1.0)
    return WignerDecomposition(ELLIPTIC, eta=0.5 * math.log(x / gap), phi=2.0 * half)


def _hyperbolic(x, gap):
    # gap = x - 2 > 0
    half = math.asinh(math.sqrt(x * gap))
    return WignerDecomposition(HYPERBOLIC, eta=0.5 * math.log(x / gap), chi=2.0 * half)


def decompose_core(x, tol=DEFAULT_TOL.cls):
    """Split ``core_matrix(x)`` into a boosted rotation, boost or shear.

    For ``0 < x < 2`` the core equals ``[[c, -e^-eta s], [e^eta s, c]]`` with
    ``c, s = cos(phi/2), sin(phi/2)``; for ``x > 2`` the same with
    hyperbolic functions of ``chi/2`` and a plus sign. Inside the band
    ``|x - 2| <= tol`` the exact shear ``[[1, 0], [2, 1]]`` is reported.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"x = {x} is outside the supported regime x > 0")
    if abs(x - 2.0) <= tol:
        return WignerDecomposition(PARABOLIC, gamma=2.0)
    if x < 2.0:
        return _elliptic(x, 2.0 - x)
    return _hyperbolic(x, x - 2.0)


def reconstruct(d):
    if d.tag == ELLIPTIC:
        c, s = math.cos(d.phi / 2), math.sin(d.phi / 2)
        return np.array([[c, -math.exp(-d.eta) * s], [math.exp(d.eta) * s, c]])
    if d.tag == HYPERBOLIC:
        c, s = math.cosh(d.chi / 2), math.sinh(d.chi / 2)
        return np.array([[c, math.exp(-d.eta) * s], [math.exp(d.eta) * s, c]])
    return np.array([[1.0, 0.0], [d.gamma, 1.0]])


def contraction_sweep(epsilons, side):
    """Decompose the core at ``x = 2 -+ eps`` for each ``eps`` in (0, 1).

    Rows follow input order. ``upper_right`` is the core entry ``x - 2``,
    i.e. exactly ``-eps`` below and ``+eps`` above.
    """
    side = side.lower()
    if side not in (BELOW, ABOVE):
        raise DomainError(f"side must be {BELOW!r} or {ABOVE!r}")
    rows = []
    for eps in epsilons:
        eps = float(eps)
        if not 0.0 < eps < 1.0:
            raise DomainError(f"eps must lie in (0, 1), got {eps}")
        if side == BELOW:
            x = 2.0 - eps
            d = _elliptic(x, eps)
            angle = d.phi
            lower_left = math.exp(d.eta) * math.sin(d.phi / 2)
            upper_right = -eps
        else:
            x = 2.0 + eps
            d = _hyperbolic(x, eps)
            angle = d.chi
            lower_left = math.exp(d.eta) * math.sinh(d.chi / 2)
            upper_right = eps
        rows.append(ContractionRow(x, d.eta, angle, lower_left, upper_right))
    return rows
