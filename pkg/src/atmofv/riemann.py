"""Approximate Riemann solvers behind one interface, plus an exact solver.

Four schemes compute the interface flux from a left/right state pair:
Roe-Pike (eigen-decomposition of the Roe-averaged Jacobian), HLLC
(three-wave with restored contact), AUSM+-up (Mach/pressure splitting
with low-Mach velocity and pressure diffusion) and HLLC-AUSM (HLLC mass
flow and shock correction combined with the AUSM interface pressure).

States are rotated into the face-normal frame; the single tangential
component is passively advected. The total enthalpy h = U + p/rho + K
excludes the gravitational energy; every solver transports gravitational
energy as Phi * (mass flux) so solver(q, q) equals the physical flux,
which includes Phi through the face value of e.

The exact solver (Newton iteration on the star-region pressure) serves
as the verification oracle for all four schemes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import SolverBreakdownError, VacuumError
from .thermo import GasConstants, PrimitiveState

SOLVER_IDS = {
    "roe-pike": _kernels.ROE_PIKE,
    "hllc": _kernels.HLLC,
    "ausm-up": _kernels.AUSM_UP,
    "hllc-ausm": _kernels.HLLC_AUSM,
}

SOLVER_NAMES = tuple(SOLVER_IDS)


@dataclass(frozen=True)
class SolverChoice:
    """Named flux scheme plus the AUSM low-Mach parameters.

    ausm_beta_canonical switches the interface-Mach polynomial between
    the coefficient-1 form used here by default and the canonical
    coefficient-2 form.
    """

    name: str
    k_p: float = 0.25
    k_u: float = 0.75
    sigma: float = 1.0
    m_inf: float = 0.01
    ausm_beta_canonical: bool = False

    def __post_init__(self):
        if self.name not in SOLVER_IDS:
            raise ValueError(
                f"unknown solver {self.name!r}; expected one of {SOLVER_NAMES}")
        if not (self.k_p > 0 and self.k_u > 0 and self.sigma > 0):
            raise ValueError("AUSM parameters K_p, K_u, sigma must be positive")
        if not 0.0 < self.m_inf <= 1.0:
            raise ValueError(f"m_inf must lie in (0, 1], got {self.m_inf}")

    @property
    def solver_id(self):
        return SOLVER_IDS[self.name]

    @property
    def beta_coef(self):
        return 2.0 if self.ausm_beta_canonical else 1.0

    def kernel_args(self):
        return (self.k_p, self.k_u, self.sigma, self.m_inf ** 2, self.beta_coef)


@dataclass(frozen=True)
class FaceState:
    """One side of a face: arrays (or scalars) of rho, u, w, p."""

    rho: np.ndarray
    u: np.ndarray
    w: np.ndarray
    p: np.ndarray

    @classmethod
    def from_primitive(cls, s: PrimitiveState):
        return cls(rho=s.rho, u=s.u, w=s.w, p=s.p)


@dataclass(frozen=True)
class FacePair:
    """Left/right reconstructed states, unit normal and face height."""

    left: FaceState
    right: FaceState
    normal: np.ndarray  # (2,) or (2, n)
    z: float | np.ndarray = 0.0


@dataclass(frozen=True)
class InterfaceFlux:
    mass: np.ndarray
    mom_x: np.ndarray
    mom_z: np.ndarray
    energy: np.ndarray


def physical_flux(s: FaceState | PrimitiveState, normal, z, k: GasConstants) -> InterfaceFlux:
    """Exact flux of the state itself: (rho u.n, rho u (u.n) + p n, (rho e + p) u.n)."""
    if isinstance(s, PrimitiveState):
        s = FaceState.from_primitive(s)
    nx, nz = np.asarray(normal[0], dtype=float), np.asarray(normal[1], dtype=float)
    un = s.u * nx + s.w * nz
    T = s.p / (k.R * s.rho)
    h = k.c_p * T + 0.5 * (s.u * s.u + s.w * s.w)
    return InterfaceFlux(mass=s.rho * un,
                         mom_x=s.rho * s.u * un + s.p * nx,
                         mom_z=s.rho * s.w * un + s.p * nz,
                         energy=s.rho * un * (h + k.g * z))


def _solve_pair(fp: FacePair, k: GasConstants, choice: SolverChoice) -> InterfaceFlux:
    rhoL = np.atleast_1d(np.asarray(fp.left.rho, dtype=float))
    n = rhoL.shape[0]

    def arr(x):
        return np.broadcast_to(np.asarray(x, dtype=float), (n,)).copy()

    uL, wL, pL = arr(fp.left.u), arr(fp.left.w), arr(fp.left.p)
    rhoR, uR, wR, pR = (arr(fp.right.rho), arr(fp.right.u),
                        arr(fp.right.w), arr(fp.right.p))
    normal = np.asarray(fp.normal, dtype=float)
    nx = arr(normal[0])
    nz = arr(normal[1])
    z = arr(fp.z)

    # face frame: normal velocity along n, tangent t = (-nz, nx)
    unL = uL * nx + wL * nz
    utL = -uL * nz + wL * nx
    unR = uR * nx + wR * nz
    utR = -uR * nz + wR * nx
    hL = k.c_p * pL / (k.R * rhoL) + 0.5 * (uL * uL + wL * wL)
    hR = k.c_p * pR / (k.R * rhoR) + 0.5 * (uR * uR + wR * wR)
    phi = k.g * z

    out = np.empty((4, n))
    status = np.zeros(4, dtype=np.int64)
    _kernels.flux_batch(choice.solver_id, rhoL, unL, utL, pL, hL,
                        rhoR, unR, utR, pR, hR, phi, k.gamma,
                        *choice.kernel_args(), out, status)
    if status[0] != 0:
        raise SolverBreakdownError(
            f"{choice.name} failed on face {int(status[1])}")

    mom_x = out[1] * nx - out[2] * nz
    mom_z = out[1] * nz + out[2] * nx
    if np.isscalar(fp.left.rho) or np.ndim(fp.left.rho) == 0:
        return InterfaceFlux(float(out[0, 0]), float(mom_x[0]),
                             float(mom_z[0]), float(out[3, 0]))
    return InterfaceFlux(mass=out[0], mom_x=mom_x, mom_z=mom_z, energy=out[3])


def roe_pike_flux(fp: FacePair, k: GasConstants) -> InterfaceFlux:
    return _solve_pair(fp, k, SolverChoice("roe-pike"))


def hllc_flux(fp: FacePair, k: GasConstants) -> InterfaceFlux:
    return _solve_pair(fp, k, SolverChoice("hllc"))


def ausm_up_flux(fp: FacePair, choice: SolverChoice, k: GasConstants) -> InterfaceFlux:
    if choice.name != "ausm-up":
        choice = SolverChoice("ausm-up", choice.k_p, choice.k_u, choice.sigma,
                              choice.m_inf, choice.ausm_beta_canonical)
    return _solve_pair(fp, k, choice)


def hllc_ausm_flux(fp: FacePair, k: GasConstants,
                   choice: SolverChoice | None = None) -> InterfaceFlux:
    if choice is None:
        choice = SolverChoice("hllc-ausm")
    elif choice.name != "hllc-ausm":
        choice = SolverChoice("hllc-ausm", choice.k_p, choice.k_u, choice.sigma,
                              choice.m_inf, choice.ausm_beta_canonical)
    return _solve_pair(fp, k, choice)


def solver_flux(fp: FacePair, k: GasConstants, choice: SolverChoice) -> InterfaceFlux:
    """Dispatch on choice.name; the single entry point used by the grid."""
    return _solve_pair(fp, k, choice)


# ---------------------------------------------------------------------------
# exact Riemann solver (verification oracle)
# ---------------------------------------------------------------------------

@dataclass
class ExactRiemann:
    """Exact solution of the 1D Riemann problem for an ideal gas.

    left/right are (rho, u, p) triples. The star-region pressure is
    found by Newton iteration on the standard two-sided pressure
    function to 1e-12 relative; sample(xi) evaluates the self-similar
    solution at xi = x/t.
    """

    left: tuple
    right: tuple
    gamma: float
    p_star: float = field(init=False)
    u_star: float = field(init=False)

    def __post_init__(self):
        rl, ul, pl = self.left
        rr, ur, pr = self.right
        if min(rl, rr, pl, pr) <= 0.0:
            raise ValueError("Riemann data must have positive rho and p")
        g = self.gamma
        al = math.sqrt(g * pl / rl)
        ar = math.sqrt(g * pr / rr)
        if 2.0 * (al + ar) / (g - 1.0) <= ur - ul:
            raise VacuumError("initial data generate vacuum")

        def side(p, pk, rk, ak):
            # f and f' for one side: shock branch above pk, rarefaction below
            if p > pk:
                A = 2.0 / ((g + 1.0) * rk)
                B = (g - 1.0) / (g + 1.0) * pk
                sq = math.sqrt(A / (p + B))
                f = (p - pk) * sq
                df = sq * (1.0 - 0.5 * (p - pk) / (p + B))
            else:
                f = 2.0 * ak / (g - 1.0) * ((p / pk) ** ((g - 1.0) / (2.0 * g)) - 1.0)
                df = (p / pk) ** (-(g + 1.0) / (2.0 * g)) / (rk * ak)
            return f, df

        du = ur - ul
        # two-rarefaction guess is positive and robust for these problems
        zexp = (g - 1.0) / (2.0 * g)
        p = ((al + ar - 0.5 * (g - 1.0) * du)
             / (al / pl ** zexp + ar / pr ** zexp)) ** (1.0 / zexp)
        p = max(p, 1e-14 * min(pl, pr))
        for _ in range(200):
            fl, dfl = side(p, pl, rl, al)
            fr, dfr = side(p, pr, rr, ar)
            dp = (fl + fr + du) / (dfl + dfr)
            pn = p - dp
            if pn <= 0.0:
                pn = 0.5 * p
            if abs(pn - p) <= 1e-12 * pn:
                p = pn
                break
            p = pn
        else:
            raise SolverBreakdownError("exact Riemann Newton failed to converge")
        fl, _ = side(p, pl, rl, al)
        fr, _ = side(p, pr, rr, ar)
        self.p_star = p
        self.u_star = 0.5 * (ul + ur) + 0.5 * (fr - fl)

    def sample(self, xi):
        """(rho, u, p) at similarity coordinate xi = x/t."""
        xi_arr = np.atleast_1d(np.asarray(xi, dtype=float))
        out = np.empty((3, xi_arr.shape[0]))
        for i, s in enumerate(xi_arr):
            out[:, i] = self._sample_one(s)
        if np.ndim(xi) == 0:
            return tuple(out[:, 0])
        return out[0], out[1], out[2]

    def _sample_one(self, s):
        g = self.gamma
        ps, us = self.p_star, self.u_star
        rl, ul, pl = self.left
        rr, ur, pr = self.right
        if s <= us:
            # left of contact
            ak = math.sqrt(g * pl / rl)
            if ps > pl:  # left shock
                sk = ul - ak * math.sqrt((g + 1.0) / (2.0 * g) * ps / pl
                                         + (g - 1.0) / (2.0 * g))
                if s <= sk:
                    return rl, ul, pl
                rk = rl * ((ps / pl + (g - 1.0) / (g + 1.0))
                           / ((g - 1.0) / (g + 1.0) * ps / pl + 1.0))
                return rk, us, ps
            # left rarefaction
            head = ul - ak
            astar = ak * (ps / pl) ** ((g - 1.0) / (2.0 * g))
            tail = us - astar
            if s <= head:
                return rl, ul, pl
            if s >= tail:
                return rl * (ps / pl) ** (1.0 / g), us, ps
            u = (2.0 / (g + 1.0)) * (ak + 0.5 * (g - 1.0) * ul + s)
            a = ak - 0.5 * (g - 1.0) * (u - ul)
            rho = rl * (a / ak) ** (2.0 / (g - 1.0))
            p = pl * (a / ak) ** (2.0 * g / (g - 1.0))
            return rho, u, p
        # right of contact
        ak = math.sqrt(g * pr / rr)
        if ps > pr:  # right shock
            sk = ur + ak * math.sqrt((g + 1.0) / (2.0 * g) * ps / pr
                                     + (g - 1.0) / (2.0 * g))
            if s >= sk:
                return rr, ur, pr
            rk = rr * ((ps / pr + (g - 1.0) / (g + 1.0))
                       / ((g - 1.0) / (g + 1.0) * ps / pr + 1.0))
            return rk, us, ps
        # right rarefaction
        head = ur + ak
        astar = ak * (ps / pr) ** ((g - 1.0) / (2.0 * g))
        tail = us + astar
        if s >= head:
            return rr, ur, pr
        if s <= tail:
            return rr * (ps / pr) ** (1.0 / g), us, ps
        u = (2.0 / (g + 1.0)) * (-ak + 0.5 * (g - 1.0) * ur + s)
        a = ak + 0.5 * (g - 1.0) * (u - ur)
        rho = rr * (a / ak) ** (2.0 / (g - 1.0))
        p = pr * (a / ak) ** (2.0 * g / (g - 1.0))
        return rho, u, p


def exact_riemann(left, right, gamma) -> ExactRiemann:
    return ExactRiemann(left=tuple(left), right=tuple(right), gamma=gamma)
