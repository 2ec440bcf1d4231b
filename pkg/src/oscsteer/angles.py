"""Mixing-angle geometry for the three-oscillator normal-mode rotation.

The whole geometric freedom of the reduced system is one tangent, mu_theta.
The other two Euler tangents are tied to it by the diagonalization
constraints

    mu_Phi = (1 - mu_theta^2 - sqrt(3 - mu_theta^2)) / sqrt(2 + mu_theta^2 - mu_theta^4)
    mu_phi = (1 - mu_theta * sqrt(2 - mu_theta^2)) / (mu_theta^2 - 1)

mu_phi has a removable 0/0 at mu_theta = 1 (analytic limit 0) and diverges
at mu_theta = -1, so the admissible interval is [-1 + eps, 1].

Branch convention: only tangents are constrained, so sines/cosines are
reconstructed on the principal branch with cos > 0 for all three angles.
Any consistent branch leaves the steering quantities unchanged; the
cross-path checks in the verification suite would catch a wrong choice.

All functions accept floats or numpy arrays elementwise and are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

DEFAULT_EPS = 1e-6


@dataclass(frozen=True)
class Frequencies:
    """Normal-mode angular frequencies; all equal in the reduced regime."""

    theta_x: float
    theta_y: float
    theta_z: float

    def __post_init__(self) -> None:
        if not (self.theta_x > 0 and self.theta_y > 0 and self.theta_z > 0):
            raise DomainError("frequencies must be strictly positive")

    @classmethod
    def reduced(cls, theta: float = 1.0) -> "Frequencies":
        return cls(theta, theta, theta)

    @property
    def is_reduced(self) -> bool:
        return self.theta_x == self.theta_y == self.theta_z

    @property
    def theta(self) -> float:
        """The single characteristic frequency; only defined when reduced."""
        if not self.is_reduced:
            raise DomainError("frequencies differ; no single characteristic value")
        return self.theta_x


@dataclass(frozen=True)
class MixingConfig:
    """One mixing angle plus the two derived tangents and all six sin/cos.

    Fields may be floats or equally-shaped numpy arrays (grid evaluation).
    """

    mu_theta: float
    mu_Phi: float
    mu_phi: float
    s_theta: float
    c_theta: float
    s_Phi: float
    c_Phi: float
    s_phi: float
    c_phi: float

    @classmethod
    def from_angles(cls, theta: float, Phi: float, phi: float) -> "MixingConfig":
        """Build directly from angle values, bypassing the constraint tie."""
        return cls(
            mu_theta=np.tan(theta),
            mu_Phi=np.tan(Phi),
            mu_phi=np.tan(phi),
            s_theta=np.sin(theta),
            c_theta=np.cos(theta),
            s_Phi=np.sin(Phi),
            c_Phi=np.cos(Phi),
            s_phi=np.sin(phi),
            c_phi=np.cos(phi),
        )

    def angles(self) -> tuple:
        """(theta, Phi, phi) in radians, from the stored sin/cos pairs."""
        return (
            np.arctan2(self.s_theta, self.c_theta),
            np.arctan2(self.s_Phi, self.c_Phi),
            np.arctan2(self.s_phi, self.c_phi),
        )

    def validate(self) -> None:
        """Raise DomainError if the sin/cos/tangent fields are inconsistent."""
        triples = (
            (self.s_theta, self.c_theta, self.mu_theta),
            (self.s_Phi, self.c_Phi, self.mu_Phi),
            (self.s_phi, self.c_phi, self.mu_phi),
        )
        for s, c, mu in triples:
            if np.any(np.abs(s * s + c * c - 1.0) > 1e-14):
                raise DomainError("sin^2 + cos^2 != 1")
            mask = np.abs(c) > 1e-9
            if np.any(np.abs(np.where(mask, s / np.where(mask, c, 1.0) - mu, 0.0)) > 1e-12):
                raise DomainError("sin/cos does not reproduce the stored tangent")


def _sincos(mu):
    c = 1.0 / np.sqrt(1.0 + mu * mu)
    return mu * c, c


def constraint_mu_Phi(mu_theta):
    """Second Euler tangent from the diagonalization constraint."""
    mu2 = np.asarray(mu_theta) ** 2
    disc = 2.0 + mu2 - mu2 * mu2
    if np.any(disc <= 0.0):
        raise DomainError("constraint denominator 2 + mu^2 - mu^4 is not positive")
    out = (1.0 - mu2 - np.sqrt(3.0 - mu2)) / np.sqrt(disc)
    return out if out.ndim else float(out)


def constraint_mu_phi(mu_theta):
    """Third Euler tangent; removable singularity at mu_theta = 1."""
    mu = np.asarray(mu_theta, dtype=float)
    at_one = mu == 1.0
    safe = np.where(at_one, 0.0, mu)
    out = np.where(at_one, 0.0,
                   (1.0 - safe * np.sqrt(2.0 - safe * safe)) / (safe * safe - 1.0))
    return out if out.ndim else float(out)


def derive_mixing(mu_theta, eps: float = DEFAULT_EPS) -> MixingConfig:
    """Solve the angle constraints for one mixing tangent.

    mu_theta must lie in [-1 + eps, 1]; the left endpoint is excluded
    because mu_phi diverges there.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    mu = np.asarray(mu_theta, dtype=float)
    if np.any(mu < -1.0 + eps) or np.any(mu > 1.0):
        raise DomainError(
            f"mu_theta must lie in [{-1.0 + eps}, 1], got {mu_theta!r}")
    mu_Phi = constraint_mu_Phi(mu)
    mu_phi = constraint_mu_phi(mu)
    s_t, c_t = _sincos(mu)
    s_F, c_F = _sincos(np.asarray(mu_Phi))
    s_p, c_p = _sincos(np.asarray(mu_phi))

    def _native(v):
        v = np.asarray(v)
        return v if v.ndim else float(v)

    return MixingConfig(
        mu_theta=_native(mu), mu_Phi=_native(mu_Phi), mu_phi=_native(mu_phi),
        s_theta=_native(s_t), c_theta=_native(c_t),
        s_Phi=_native(s_F), c_Phi=_native(c_F),
        s_phi=_native(s_p), c_phi=_native(c_p),
    )


def rotation_matrix(cfg: MixingConfig) -> np.ndarray:
    """Euler rotation taking lab coordinates to normal-mode coordinates.

    Rows are the normal axes expressed in the lab basis; orthogonal with
    determinant +1. For array-valued configs the leading axes broadcast,
    giving shape (3, 3) + field shape.
    """
    st, ct = cfg.s_theta, cfg.c_theta
    sF, cF = cfg.s_Phi, cfg.c_Phi
    sp, cp = cfg.s_phi, cfg.c_phi
    rows = [
        [ct * cF, sF, st * cF],
        [-cp * sF * ct - sp * st, cp * cF, -cp * sF * st + sp * ct],
        [sp * sF * ct - cp * st, -sp * cF, sp * sF * st + cp * ct],
    ]
    return np.stack([np.stack([np.asarray(e, dtype=float) for e in row]) for row in rows])
