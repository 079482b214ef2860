"""File emission: CSV diagnostics and VTK legacy field snapshots.

Floats are written with 17 significant digits so re-parsing reproduces
the binary values exactly. Snapshots use the legacy ASCII
STRUCTURED_POINTS format with cell data, readable by any VTK viewer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .mesh import Mesh


@dataclass
class OutputPlan:
    """Where and how often a run writes files."""

    out_dir: str
    snapshot_every: int = 0          # steps; 0 = final snapshot only
    diagnostics_every: int = 100
    line_z: float | None = None
    formats: tuple = ("csv", "vtk")
    figures: bool = False

    def __post_init__(self):
        if self.diagnostics_every < 1:
            raise ValueError("diagnostics_every must be >= 1")
        if self.snapshot_every < 0:
            raise ValueError("snapshot_every must be >= 0")


def fmt(x):
    """17-significant-digit decimal; round-trips any float64."""
    return format(float(x), ".17g")


DIAG_HEADER = "t,w_max,w_min,u_max,u_min,theta_p_min,theta_p_max,total_mass,cfl"


class DiagnosticsWriter:
    """Incremental CSV writer, flushed per record so partial output of
    an aborted run stays valid."""

    def __init__(self, path):
        self.path = path
        self._fh = open(path, "w")
        self._fh.write(DIAG_HEADER + "\n")
        self._fh.flush()

    def write(self, rec):
        row = ",".join(fmt(getattr(rec, name)) for name in rec.FIELDS)
        self._fh.write(row + "\n")
        self._fh.flush()

    def close(self):
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def write_diagnostics_csv(records, path):
    """One-shot emission of a record sequence."""
    with DiagnosticsWriter(path) as w:
        for rec in records:
            w.write(rec)
    return path


def snapshot_filename(case, flux, t, ext="vtk"):
    return f"{case}_{flux}_t{t:g}.{ext}"


def write_snapshot(fields, mesh: Mesh, t, path, title="atmofv snapshot"):
    """Legacy-ASCII VTK structured points with the given cell-data arrays.

    `fields` maps array names to interior (nx, nz) arrays; the VTK y axis
    carries the physical z coordinate."""
    nx, nz = mesh.nx, mesh.nz
    lines = ["# vtk DataFile Version 3.0",
             f"{title} t={t:g}",
             "ASCII",
             "DATASET STRUCTURED_POINTS",
             f"DIMENSIONS {nx + 1} {nz + 1} 1",
             f"ORIGIN {fmt(mesh.x0)} {fmt(mesh.z0)} 0",
             f"SPACING {fmt(mesh.dx)} {fmt(mesh.dz)} 1",
             f"CELL_DATA {nx * nz}"]
    for name, arr in fields.items():
        if arr.shape != (nx, nz):
            raise ValueError(f"field {name!r} has shape {arr.shape}, "
                             f"expected {(nx, nz)}")
        lines.append(f"SCALARS {name} double 1")
        lines.append("LOOKUP_TABLE default")
        for j in range(nz):
            lines.append(" ".join(fmt(arr[i, j]) for i in range(nx)))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def write_theta_csv(theta_p, mesh: Mesh, path):
    """theta' as a plain CSV grid, one row per z level (bottom first)."""
    nx, nz = mesh.nx, mesh.nz
    with open(path, "w") as fh:
        fh.write("# theta_p grid, rows are z levels bottom to top\n")
        for j in range(nz):
            fh.write(",".join(fmt(theta_p[i, j]) for i in range(nx)) + "\n")
    return path


def write_line_sample(x, values, path, name="theta_p"):
    with open(path, "w") as fh:
        fh.write(f"x,{name}\n")
        for xi, vi in zip(x, values):
            fh.write(f"{fmt(xi)},{fmt(vi)}\n")
    return path


def ensure_dir(path):
    os.makedirs(path, exist_ok=True)
    return path
