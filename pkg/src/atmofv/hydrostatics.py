"""Local hydrostatic reconstruction and the isentropic background column.

Within each cell the equilibrium is represented by the polytrope
p0(z) = P * rho0(z)^gamma anchored at the cell center, with

    rho0(z) = (rho0_c^(gamma-1) - (gamma-1)/gamma * g/P * (z - z_c))^(1/(gamma-1))

the unique closed-form solution of dp0/dz = -rho0*g under that polytropic
relation. Profiles are refreshed from the evolving cell averages so the
cell-center perturbations vanish identically; for a uniform background
potential temperature every cell shares the same P and adjacent profiles
coincide at their common face, which is what makes the scheme
well-balanced to round-off.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AboveAtmosphereError, ProfileDegenerateError
from .mesh import Mesh
from .thermo import GasConstants


@dataclass(frozen=True)
class HydrostaticProfile:
    """Single-cell equilibrium profile, anchored at the cell center."""

    rho0_c: float
    p0_c: float
    P: float
    z_c: float
    dz: float
    gamma: float
    g: float

    def rho0(self, z):
        base = (self.rho0_c ** (self.gamma - 1.0)
                - (self.gamma - 1.0) / self.gamma * self.g * (np.asarray(z) - self.z_c) / self.P)
        if np.any(base <= 0.0):
            raise ProfileDegenerateError(
                f"profile anchored at z={self.z_c} degenerate at z={z}")
        return base ** (1.0 / (self.gamma - 1.0))

    def p0(self, z):
        return self.P * self.rho0(z) ** self.gamma


def profile_from_center(rho0_c, p0_c, z_c, dz, k: GasConstants) -> HydrostaticProfile:
    """Build the cell profile with P = p0_c / rho0_c^gamma.

    Raises ProfileDegenerateError when the root argument is non-positive
    anywhere in [z_c - dz/2, z_c + dz/2].
    """
    if not (rho0_c > 0.0 and p0_c > 0.0):
        raise ProfileDegenerateError(
            f"profile needs positive anchor values, got rho0={rho0_c}, p0={p0_c}")
    prof = HydrostaticProfile(rho0_c=rho0_c, p0_c=p0_c,
                              P=p0_c / rho0_c ** k.gamma,
                              z_c=z_c, dz=dz, gamma=k.gamma, g=k.g)
    prof.rho0(np.array([z_c - 0.5 * dz, z_c + 0.5 * dz]))
    return prof


def isentropic_column(theta0, z, k: GasConstants):
    """Analytic uniform-theta0 atmosphere: returns (p0, rho0, T0) at z.

    p0 = p_g * (1 - g z / (c_p theta0))^(c_p/R); valid while the base is
    positive, i.e. below the top of the isentropic atmosphere.
    """
    z = np.asarray(z, dtype=float)
    base = 1.0 - k.g * z / (k.c_p * theta0)
    if np.any(base <= 0.0):
        raise AboveAtmosphereError(
            f"height {z} is above the theta0={theta0} atmosphere top")
    p0 = k.p_g * base ** (k.c_p / k.R)
    T0 = theta0 * (p0 / k.p_g) ** (k.R / k.c_p)
    rho0 = p0 / (k.R * T0)
    if np.ndim(z) == 0:
        return float(p0), float(rho0), float(T0)
    return p0, rho0, T0


@dataclass
class ProfileField:
    """Per-cell profile data over the full (ni, nj) layout.

    rgm1 caches rho0^(gamma-1) so a profile evaluation costs one power.
    """

    rho0: np.ndarray
    p0: np.ndarray
    P: np.ndarray
    rgm1: np.ndarray

    @classmethod
    def allocate(cls, mesh: Mesh):
        return cls(rho0=mesh.allocate_scalar(), p0=mesh.allocate_scalar(),
                   P=mesh.allocate_scalar(), rgm1=mesh.allocate_scalar())

    def copy(self):
        return ProfileField(self.rho0.copy(), self.p0.copy(),
                            self.P.copy(), self.rgm1.copy())


def refresh_profiles(prims, mesh: Mesh, k: GasConstants,
                     out: ProfileField | None = None,
                     ghosts=False) -> ProfileField:
    """Anchor every cell profile at the current cell averages.

    `prims` is the (rho, u, w, p, T) tuple; only interior cells are
    refreshed unless `ghosts` is set (ghost profiles are normally
    refreshed by mesh.fill_ghosts from the mirrored states).
    """
    rho, _, _, p, _ = prims
    if out is None:
        out = ProfileField.allocate(mesh)
    ng = 0 if ghosts else mesh.ng
    _kernels.refresh_profiles(rho, p, k.gamma, out.rho0, out.p0, out.P,
                              out.rgm1, ng, mesh.ni - ng, ng, mesh.nj - ng)
    return out
