"""Assembly of the semi-discrete right-hand side.

For every interior cell

    dq_i/dt = -(1/V) sum_j f_j A_j  +  S_i  +  D_i

with f_j the Riemann flux through face j, S_i the well-balanced gravity
source built from the own-cell hydrostatic profile at the cell faces
(so it cancels the within-cell hydrostatic pressure flux exactly), and
D_i the constant-coefficient artificial diffusion acting on velocity
and temperature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import raise_from_status
from .hydrostatics import ProfileField, refresh_profiles
from .mesh import Mesh, fill_ghosts
from .muscl import SlopeSet, perturbation_slopes
from .riemann import SolverChoice
from .thermo import GasConstants


@dataclass(frozen=True)
class DiffusionParams:
    """Artificial diffusivity mu_a (m^2/s) and Prandtl number."""

    mu_a: float = 0.0
    Pr: float = 1.0

    def __post_init__(self):
        if self.mu_a < 0.0:
            raise ValueError(f"mu_a must be non-negative, got {self.mu_a}")
        if not self.Pr > 0.0:
            raise ValueError(f"Pr must be positive, got {self.Pr}")


class Workspace:
    """Reusable buffers for one operator evaluation."""

    def __init__(self, mesh: Mesh):
        self.mesh = mesh
        self.rho = mesh.allocate_scalar()
        self.u = mesh.allocate_scalar()
        self.w = mesh.allocate_scalar()
        self.p = mesh.allocate_scalar()
        self.T = mesh.allocate_scalar()
        self.profiles = ProfileField.allocate(mesh)
        self.slopes = SlopeSet.allocate(mesh)
        self.Fx = np.zeros((4, mesh.nx + 1, mesh.nz))
        self.Fz = np.zeros((4, mesh.nx, mesh.nz + 1))
        self.status = np.zeros(4, dtype=np.int64)

    @property
    def prims(self):
        return (self.rho, self.u, self.w, self.p, self.T)


def compute_primitives(q, mesh: Mesh, k: GasConstants, ws: Workspace | None = None):
    """Interior primitive arrays (rho, u, w, p, T) from a conserved field."""
    if ws is None:
        ws = Workspace(mesh)
    ws.status[:] = 0
    _kernels.primitives(q, mesh.zc, k.c_v, k.R, k.g,
                        ws.rho, ws.u, ws.w, ws.p, ws.T,
                        mesh.ng, mesh.ni - mesh.ng,
                        mesh.ng, mesh.nj - mesh.ng, ws.status)
    raise_from_status(ws.status)
    return ws.prims


def assemble_rhs(q, mesh: Mesh, k: GasConstants, choice: SolverChoice,
                 diffusion: DiffusionParams = DiffusionParams(),
                 ws: Workspace | None = None,
                 frozen_profiles: ProfileField | None = None,
                 out=None):
    """Full spatial operator L(q) on the interior; ghost entries are zero.

    Profiles are refreshed from q unless `frozen_profiles` is given, in
    which case they are used as-is (per-step refresh mode).
    """
    if ws is None:
        ws = Workspace(mesh)
    if out is None:
        out = mesh.allocate_conserved()

    prims = compute_primitives(q, mesh, k, ws)
    if frozen_profiles is None:
        profiles = refresh_profiles(prims, mesh, k, out=ws.profiles)
        update = True
    else:
        profiles = frozen_profiles
        update = False
    fill_ghosts(q, profiles, mesh, k, prims=prims, update_profiles=update)
    perturbation_slopes(prims, profiles, mesh, k, out=ws.slopes)

    ws.status[:] = 0
    sl = ws.slopes
    _kernels.flux_x(ws.rho, ws.u, ws.w, ws.p,
                    sl.sx_rho, sl.sx_u, sl.sx_w, sl.sx_p,
                    mesh.zc, mesh.dx, mesh.ng, k.c_p, k.R, k.g, k.gamma,
                    choice.solver_id, *choice.kernel_args(), ws.Fx, ws.status)
    raise_from_status(ws.status)
    _kernels.flux_z(ws.rho, ws.u, ws.w, ws.p, profiles.rho0, profiles.p0,
                    sl.sz_rho, sl.sz_u, sl.sz_w, sl.sz_p,
                    sl.rho0_dn, sl.p0_dn, sl.rho0_up, sl.p0_up,
                    mesh.z0, mesh.dz, mesh.ng, k.c_p, k.R, k.g, k.gamma,
                    choice.solver_id, *choice.kernel_args(), ws.Fz, ws.status)
    raise_from_status(ws.status)
    _kernels.combine_rhs(ws.Fx, ws.Fz, sl.p0_dn, sl.p0_up,
                         ws.u, ws.w, ws.T, mesh.dx, mesh.dz, mesh.ng,
                         diffusion.mu_a, k.c_p, diffusion.Pr, out)
    return out


# ---------------------------------------------------------------------------
# the three contributions as standalone operations (used by tests and
# cross-checked against the fused kernel)
# ---------------------------------------------------------------------------

def flux_divergence(Fx, Fz, mesh: Mesh):
    """-(1/V) sum_j f_j A_j per interior cell from per-face flux arrays."""
    out = np.zeros((4, mesh.nx, mesh.nz))
    out -= (Fx[:, 1:, :] - Fx[:, :-1, :]) / mesh.dx
    out -= (Fz[:, :, 1:] - Fz[:, :, :-1]) / mesh.dz
    return out


def well_balanced_source(slopes: SlopeSet, mesh: Mesh):
    """Gravity source from the own-cell profile at the two z faces.

    Equals (p0(z_top) - p0(z_bot))/dz = -rho0*g + O(dz^2) in the
    vertical momentum slot; mass and energy sources are zero.
    """
    ii, jj = mesh.interior
    out = np.zeros((4, mesh.nx, mesh.nz))
    out[2] = (slopes.p0_up[ii, jj] - slopes.p0_dn[ii, jj]) / mesh.dz
    return out


def diffusion_rhs(prims, params: DiffusionParams, mesh: Mesh, k: GasConstants):
    """Artificial diffusion: mu_a * lap(u, w) on momentum and
    c_p*mu_a/Pr * lap(T) on energy, 5-point stencil with filled ghosts."""
    _, u, w, _, T = prims
    out = np.zeros((4, mesh.nx, mesh.nz))
    if params.mu_a == 0.0:
        return out

    def lap(f):
        c = f[1:-1, 1:-1]
        return ((f[2:, 1:-1] - 2.0 * c + f[:-2, 1:-1]) / mesh.dx ** 2
                + (f[1:-1, 2:] - 2.0 * c + f[1:-1, :-2]) / mesh.dz ** 2)

    ng = mesh.ng
    box = (slice(ng - 1, mesh.ni - ng + 1), slice(ng - 1, mesh.nj - ng + 1))
    out[1] = params.mu_a * lap(u[box])
    out[2] = params.mu_a * lap(w[box])
    out[3] = k.c_p * params.mu_a / params.Pr * lap(T[box])
    return out
