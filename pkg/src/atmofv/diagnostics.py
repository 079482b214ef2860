"""Measured quantities: velocity extrema, theta perturbation fields,
line samples and the density-current front location."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mesh import Mesh
from .thermo import GasConstants


@dataclass(frozen=True)
class DiagnosticRecord:
    t: float
    w_max: float
    w_min: float
    u_max: float
    u_min: float
    theta_p_min: float
    theta_p_max: float
    total_mass: float
    cfl: float

    FIELDS = ("t", "w_max", "w_min", "u_max", "u_min",
              "theta_p_min", "theta_p_max", "total_mass", "cfl")


def primitive_fields(q, mesh: Mesh, k: GasConstants):
    """Interior (nx, nz) arrays of rho, u, w, p, T, theta.

    Computed directly from the conserved field with numpy, independently
    of the solver kernels."""
    ii, jj = mesh.interior
    rho = q[0, ii, jj]
    u = q[1, ii, jj] / rho
    w = q[2, ii, jj] / rho
    U = q[3, ii, jj] / rho - 0.5 * (u * u + w * w) - k.g * mesh.zc_int[None, :]
    T = U / k.c_v
    p = rho * k.R * T
    theta = T / (p / k.p_g) ** (k.R / k.c_p)
    return {"rho": rho, "u": u, "w": w, "p": p, "T": T, "theta": theta}


def theta_perturbation(q, mesh: Mesh, k: GasConstants, theta0):
    """theta' = theta - theta0 over interior cells."""
    return primitive_fields(q, mesh, k)["theta"] - theta0


def compute_record(q, mesh: Mesh, k: GasConstants, theta0, t, dt) -> DiagnosticRecord:
    f = primitive_fields(q, mesh, k)
    a = np.sqrt(k.gamma * f["p"] / f["rho"])
    cfl = np.max((np.abs(f["u"]) + a) / mesh.dx
                 + (np.abs(f["w"]) + a) / mesh.dz) * dt
    tp = f["theta"] - theta0
    return DiagnosticRecord(
        t=t,
        w_max=float(f["w"].max()), w_min=float(f["w"].min()),
        u_max=float(f["u"].max()), u_min=float(f["u"].min()),
        theta_p_min=float(tp.min()), theta_p_max=float(tp.max()),
        total_mass=float(f["rho"].sum() * mesh.cell_volume),
        cfl=float(cfl))


def line_sample(field, mesh: Mesh, z_line):
    """Values of an interior (nx, nz) field along the cell row nearest
    z_line; ties pick the lower row. Returns (x_centers, values)."""
    zc = mesh.zc_int
    if not mesh.z0 <= z_line <= mesh.z0 + mesh.nz * mesh.dz:
        raise ValueError(f"z_line={z_line} outside the domain")
    j = int(np.argmin(np.abs(zc - z_line)))  # argmin takes the first tie
    return mesh.xc_int.copy(), np.asarray(field)[:, j].copy()


def front_location(theta_p, mesh: Mesh, threshold=-1.0):
    """Rightmost ground crossing of theta' = threshold.

    Scans the bottom interior row from the right and linearly
    interpolates between adjacent cell centers; returns the domain x
    minimum when no crossing exists."""
    row = np.asarray(theta_p)[:, 0]
    x = mesh.xc_int
    for m in range(row.shape[0] - 2, -1, -1):
        lo, hi = row[m], row[m + 1]
        if lo <= threshold < hi:
            frac = (threshold - lo) / (hi - lo)
            return float(x[m] + frac * (x[m + 1] - x[m]))
    return float(mesh.x0)


def count_minima_below(values, threshold=-1.0, smooth_passes=1):
    """Local minima deeper than threshold after 3-point smoothing.

    Used to count resolved rotors in a theta' line sample."""
    v = np.asarray(values, dtype=float)
    for _ in range(smooth_passes):
        s = v.copy()
        s[1:-1] = (v[:-2] + v[1:-1] + v[2:]) / 3.0
        v = s
    inner = v[1:-1]
    is_min = (inner < v[:-2]) & (inner < v[2:]) & (inner < threshold)
    return int(np.count_nonzero(is_min))
