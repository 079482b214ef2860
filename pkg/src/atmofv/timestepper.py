"""Classical RK4 time integration and the run loop."""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AtmofvError, ConfigurationError, StepFailureError
from .hydrostatics import refresh_profiles
from .mesh import Mesh, build_grid, fill_ghosts
from .operators import DiffusionParams, Workspace, assemble_rhs, compute_primitives
from .riemann import SolverChoice
from .thermo import GasConstants


@dataclass
class RunState:
    """Loop bookkeeping; t is always n*dt (tracked by multiplication)."""

    t: float
    n: int
    q: np.ndarray


def rk4_step(q, dt, rhs):
    """One classical RK4 step for dq/dt = rhs(q); q is any ndarray."""
    k1 = rhs(q)
    k2 = rhs(q + 0.5 * dt * k1)
    k3 = rhs(q + 0.5 * dt * k2)
    k4 = rhs(q + dt * k3)
    return q + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


class Stepper:
    """Buffered RK4 stepper over the full spatial operator.

    refresh_per_stage selects whether the hydrostatic profiles are
    re-anchored at every RK stage (default, keeps every stage
    well-balanced) or once per step from the step-start state.
    """

    def __init__(self, mesh: Mesh, k: GasConstants, choice: SolverChoice,
                 diffusion: DiffusionParams = DiffusionParams(),
                 refresh_per_stage=True):
        self.mesh = mesh
        self.k = k
        self.choice = choice
        self.diffusion = diffusion
        self.refresh_per_stage = refresh_per_stage
        self.ws = Workspace(mesh)
        self._k = [mesh.allocate_conserved() for _ in range(4)]
        self._qs = mesh.allocate_conserved()

    def rhs(self, q, out=None, frozen_profiles=None):
        return assemble_rhs(q, self.mesh, self.k, self.choice, self.diffusion,
                            ws=self.ws, frozen_profiles=frozen_profiles, out=out)

    def step(self, q, dt, out=None):
        """Advance one step; raises StepFailureError with the stage index."""
        if out is None:
            out = self.mesh.allocate_conserved()
        frozen = None
        if not self.refresh_per_stage:
            prims = compute_primitives(q, self.mesh, self.k, self.ws)
            frozen = refresh_profiles(prims, self.mesh, self.k,
                                      out=self.ws.profiles)
            fill_ghosts(q, frozen, self.mesh, self.k, prims=prims,
                        update_profiles=True)
        k1, k2, k3, k4 = self._k
        qs = self._qs
        stage = 0
        try:
            stage = 1
            self.rhs(q, out=k1, frozen_profiles=frozen)
            _kernels.axpy(q, 0.5 * dt, k1, qs)
            stage = 2
            self.rhs(qs, out=k2, frozen_profiles=frozen)
            _kernels.axpy(q, 0.5 * dt, k2, qs)
            stage = 3
            self.rhs(qs, out=k3, frozen_profiles=frozen)
            _kernels.axpy(q, dt, k3, qs)
            stage = 4
            self.rhs(qs, out=k4, frozen_profiles=frozen)
        except AtmofvError as exc:
            raise StepFailureError(f"RK stage {stage} failed: {exc}",
                                   step=None, stage=stage) from exc
        _kernels.rk4_combine(q, k1, k2, k3, k4, dt, out)
        return out


def run_case(cfg, k: GasConstants | None = None, on_diagnostic=None,
             on_snapshot=None, snapshot_every=0, progress=True):
    """Integrate a benchmark case from t=0 to t_end with fixed dt.

    Emits a DiagnosticRecord at t=0, every cfg.diag_every steps and at
    t_end; on_snapshot(state) fires every snapshot_every steps (0 = only
    at t_end) and at t_end. Returns (RunState, records).
    """
    from .cases import init_state
    from .diagnostics import compute_record

    if k is None:
        k = GasConstants.dry_air()
    cfg.validate()
    mesh = build_grid(cfg.grid_spec())
    q = init_state(cfg, mesh, k)
    stepper = Stepper(mesh, k, cfg.solver,
                      DiffusionParams(mu_a=cfg.mu_a, Pr=cfg.pr),
                      refresh_per_stage=cfg.refresh_per_stage)

    n_steps = cfg.n_steps
    records = []
    state = RunState(t=0.0, n=0, q=q)

    def emit(state):
        rec = compute_record(state.q, mesh, k, cfg.theta0, state.t, cfg.dt)
        records.append(rec)
        if progress:
            print(f"step {state.n} t={state.t:.3f} cfl={rec.cfl:.3f} "
                  f"max|w|={max(abs(rec.w_max), abs(rec.w_min)):.3e} "
                  f"mass={rec.total_mass:.15e}", file=sys.stderr)
        if on_diagnostic is not None:
            on_diagnostic(rec)

    emit(state)
    if on_snapshot is not None and n_steps == 0:
        on_snapshot(state)

    buf = mesh.allocate_conserved()
    for n in range(1, n_steps + 1):
        try:
            buf = stepper.step(state.q, cfg.dt, out=buf)
        except StepFailureError as exc:
            exc.step = n
            raise StepFailureError(
                f"step {n} (t={n * cfg.dt:g}): {exc}", step=n,
                stage=exc.stage) from exc
        state.q, buf = buf, state.q
        state.n = n
        state.t = n * cfg.dt
        final = n == n_steps
        if n % cfg.diag_every == 0 or final:
            emit(state)
        if on_snapshot is not None and (
                final or (snapshot_every > 0 and n % snapshot_every == 0)):
            on_snapshot(state)
    return state, records


def validate_time_grid(t_end, dt):
    """t_end must be an integer multiple of dt; returns the step count."""
    if not dt > 0.0:
        raise ConfigurationError(f"dt must be positive, got {dt}")
    if t_end < 0.0:
        raise ConfigurationError(f"t_end must be non-negative, got {t_end}")
    n = int(round(t_end / dt)) if t_end > 0 else 0
    if abs(n * dt - t_end) > 1e-9 * max(dt, t_end):
        raise ConfigurationError(
            f"t_end={t_end} is not an integer multiple of dt={dt}")
    return n
