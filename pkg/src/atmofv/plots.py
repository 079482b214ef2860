"""Report figures rendered next to the delimited output files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_diagnostics_figure(records, path):
    """Velocity-extrema history: max|w| on a log axis plus u/w envelopes."""
    t = np.array([r.t for r in records])
    wmax = np.array([max(abs(r.w_max), abs(r.w_min)) for r in records])
    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.2))
    ax0.semilogy(t, np.maximum(wmax, 1e-30), color="tab:blue")
    ax0.set_xlabel("t [s]")
    ax0.set_ylabel(r"max $|w|$ [m/s]")
    ax0.grid(True, which="both", alpha=0.3)
    for name, color in (("u_max", "tab:orange"), ("u_min", "tab:orange"),
                        ("w_max", "tab:green"), ("w_min", "tab:green")):
        ax1.plot(t, [getattr(r, name) for r in records], color=color,
                 label=name if name.endswith("max") else None)
    ax1.set_xlabel("t [s]")
    ax1.set_ylabel("velocity extrema [m/s]")
    ax1.legend(loc="best", fontsize=8)
    ax1.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_field_figure(field, mesh, path, label=r"$\theta'$ [K]", title=""):
    """Filled pseudocolor of an interior (nx, nz) field."""
    x = mesh.x0 + np.arange(mesh.nx + 1) * mesh.dx
    z = mesh.z0 + np.arange(mesh.nz + 1) * mesh.dz
    fig, ax = plt.subplots(figsize=(7, 7 * mesh.nz * mesh.dz
                                    / (mesh.nx * mesh.dx) + 1.2))
    m = ax.pcolormesh(x, z, np.asarray(field).T, shading="flat",
                      cmap="RdBu_r")
    fig.colorbar(m, ax=ax, label=label)
    ax.set_xlabel("x [m]")
    ax.set_ylabel("z [m]")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_line_figure(x, values, path, z_line, label=r"$\theta'$ [K]"):
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.plot(x, values, color="tab:blue")
    ax.set_xlabel("x [m]")
    ax.set_ylabel(label)
    ax.set_title(f"z = {z_line:g} m")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_shocktube_figure(results, path):
    """Density profiles of each solver against the exact solution.

    `results` maps solver name -> (x, rho, rho_exact)."""
    fig, ax = plt.subplots(figsize=(6.5, 4))
    first = True
    for name, (x, rho, rho_ex) in results.items():
        if first:
            ax.plot(x, rho_ex, "k-", lw=1.2, label="exact")
            first = False
        ax.plot(x, rho, lw=0.9, label=name)
    ax.set_xlabel("x")
    ax.set_ylabel(r"$\rho$")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
