"""Uniform structured grid in the xz-plane with ghost layers.

Fields are plain numpy arrays indexed (i, j): scalars have shape
(ni, nj) and conserved fields (4, ni, nj), where ni = nx + 2*n_ghost and
nj = nz + 2*n_ghost. Two ghost layers implement no-flux walls by
reflection: the normal velocity is negated, the tangential one copied,
and density/pressure are mirrored as perturbations against the
wall-adjacent cell's hydrostatic profile extended across the wall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConfigurationError, raise_from_status


@dataclass(frozen=True)
class GridSpec:
    """Interior cell counts, spacings and origin of a uniform grid."""

    nx: int
    nz: int
    dx: float
    dz: float
    x0: float = 0.0
    z0: float = 0.0
    n_ghost: int = 2

    def __post_init__(self):
        if self.nx < 3 or self.nz < 3:
            raise ConfigurationError(
                f"grid needs nx, nz >= 3, got {self.nx}x{self.nz}")
        if not (self.dx > 0.0 and self.dz > 0.0):
            raise ConfigurationError(
                f"grid spacings must be positive, got dx={self.dx}, dz={self.dz}")
        if self.n_ghost != 2:
            raise ConfigurationError(
                f"exactly 2 ghost layers are supported, got {self.n_ghost}")


class Mesh:
    """Geometry of a GridSpec: cell centers, faces, index ranges."""

    def __init__(self, spec: GridSpec):
        self.spec = spec
        self.ng = spec.n_ghost
        self.nx = spec.nx
        self.nz = spec.nz
        self.dx = spec.dx
        self.dz = spec.dz
        self.x0 = spec.x0
        self.z0 = spec.z0
        self.ni = spec.nx + 2 * self.ng
        self.nj = spec.nz + 2 * self.ng
        # cell centers, ghost layers included
        self.xc = spec.x0 + (np.arange(self.ni) - self.ng + 0.5) * spec.dx
        self.zc = spec.z0 + (np.arange(self.nj) - self.ng + 0.5) * spec.dz
        self.cell_volume = spec.dx * spec.dz
        # interior face counts; x faces enumerated first, row-major
        self.n_xfaces = (spec.nx + 1) * spec.nz
        self.n_zfaces = spec.nx * (spec.nz + 1)
        self.n_faces = self.n_xfaces + self.n_zfaces

    @property
    def interior(self):
        """Slice pair selecting interior cells of an (ni, nj) array."""
        return (slice(self.ng, self.ni - self.ng),
                slice(self.ng, self.nj - self.ng))

    @property
    def xc_int(self):
        return self.xc[self.ng:self.ni - self.ng]

    @property
    def zc_int(self):
        return self.zc[self.ng:self.nj - self.ng]

    def allocate_conserved(self):
        return np.zeros((4, self.ni, self.nj))

    def allocate_scalar(self):
        return np.zeros((self.ni, self.nj))


def build_grid(spec: GridSpec) -> Mesh:
    return Mesh(spec)


def fill_ghosts(q, profiles, mesh: Mesh, k, prims=None, update_profiles=True):
    """Populate ghost cells of a conserved field in place.

    `profiles` is a hydrostatics.ProfileField whose interior entries are
    current; ghost profile entries are refreshed here too unless
    `update_profiles` is False (frozen-profile stepping). Returns the
    primitive arrays (rho, u, w, p, T) with ghosts filled, computing the
    interior ones first when `prims` is not given.
    """
    from .hydrostatics import refresh_profiles  # cycle-free at call time

    status = np.zeros(4, dtype=np.int64)
    if prims is None:
        rho = np.empty((mesh.ni, mesh.nj))
        u = np.empty_like(rho)
        w = np.empty_like(rho)
        p = np.empty_like(rho)
        T = np.empty_like(rho)
        _kernels.primitives(q, mesh.zc, k.c_v, k.R, k.g, rho, u, w, p, T,
                            mesh.ng, mesh.ni - mesh.ng,
                            mesh.ng, mesh.nj - mesh.ng, status)
        raise_from_status(status)
        prims = (rho, u, w, p, T)
    rho, u, w, p, T = prims
    _kernels.fill_ghosts(q, rho, u, w, p, T,
                         profiles.rho0, profiles.p0, profiles.P, profiles.rgm1,
                         mesh.zc, mesh.ng, k.c_v, k.R, k.g, k.gamma,
                         1 if update_profiles else 0, status)
    raise_from_status(status)
    return prims
