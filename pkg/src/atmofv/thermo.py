"""Thermodynamic closure for dry air treated as an ideal gas.

Total energy per unit mass is split as e = U + K + Phi with internal
energy U = c_v*T, kinetic energy K = |u|^2/2 and gravitational energy
Phi = g*z. Pressure follows the ideal-gas law p = rho*R*T
= rho*c_v*T*(gamma - 1). The potential temperature theta = T/pi with
Exner function pi = (p/p_g)^(R/c_p) is the working diagnostic variable
of all benchmarks.

Velocities live in the xz-plane: u horizontal, w vertical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidStateError


@dataclass(frozen=True)
class GasConstants:
    """Gas and gravity constants, carried by value through the solver.

    Invariants enforced on construction: R = c_p - c_v and
    gamma = c_p/c_v exactly as stored, all fields positive.
    """

    c_v: float
    c_p: float
    R: float
    gamma: float
    g: float
    p_g: float

    def __post_init__(self):
        for name in ("c_v", "c_p", "R", "gamma", "p_g"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"GasConstants.{name} must be positive")
        if self.g < 0.0:
            raise ValueError("GasConstants.g must be non-negative")
        if self.R != self.c_p - self.c_v:
            raise ValueError("GasConstants requires R == c_p - c_v exactly")
        if self.gamma != self.c_p / self.c_v:
            raise ValueError("GasConstants requires gamma == c_p/c_v exactly")

    @classmethod
    def from_cv_R(cls, c_v, R, g=9.81, p_g=1.0e5):
        c_p = c_v + R
        return cls(c_v=c_v, c_p=c_p, R=R, gamma=c_p / c_v, g=g, p_g=p_g)

    @classmethod
    def dry_air(cls, g=9.81):
        """Standard dry-air constants: c_v = 715.5, R = 287 J/(kg K)."""
        return cls.from_cv_R(715.5, 287.0, g=g)

    @classmethod
    def ideal(cls, gamma=1.4, R=1.0, g=0.0, p_g=1.0):
        """Constants for a generic ideal gas with a prescribed gamma.

        Used by the shock-tube verification where gamma = 1.4 exactly.
        """
        c_v = R / (gamma - 1.0)
        return cls(c_v=c_v, c_p=c_v + R, R=R, gamma=(c_v + R) / c_v, g=g, p_g=p_g)


@dataclass(frozen=True)
class PrimitiveState:
    """Point values of (rho, u, w, p, T, theta)."""

    rho: float
    u: float
    w: float
    p: float
    T: float
    theta: float


@dataclass(frozen=True)
class ConservedState:
    """Per-cell conserved vector (rho, rho*u, rho*w, rho*e)."""

    rho: float
    rho_u: float
    rho_w: float
    rho_e: float


def sound_speed(p, rho, k: GasConstants):
    """Speed of sound sqrt(gamma*p/rho)."""
    if not (p > 0.0 and rho > 0.0):
        raise ValueError(f"sound_speed requires p, rho > 0, got p={p}, rho={rho}")
    return math.sqrt(k.gamma * p / rho)


def exner(p, k: GasConstants):
    """Exner function pi = (p/p_g)^(R/c_p)."""
    return (p / k.p_g) ** (k.R / k.c_p)


def potential_temperature(p, T, k: GasConstants):
    """theta = T / pi, the temperature after adiabatic descent to p_g."""
    if not (p > 0.0 and T > 0.0):
        raise ValueError(f"potential_temperature requires p, T > 0, got p={p}, T={T}")
    return T / exner(p, k)


def primitive_from_conserved(q: ConservedState, z, k: GasConstants) -> PrimitiveState:
    """Recover primitives from a conserved state at height z.

    Raises InvalidStateError when density or the recovered internal
    energy is non-positive.
    """
    if not q.rho > 0.0:
        raise InvalidStateError(f"non-positive density {q.rho} at z={z}")
    u = q.rho_u / q.rho
    w = q.rho_w / q.rho
    U = q.rho_e / q.rho - 0.5 * (u * u + w * w) - k.g * z
    if not U > 0.0:
        raise InvalidStateError(f"non-positive internal energy {U} at z={z}")
    T = U / k.c_v
    p = q.rho * k.R * T
    return PrimitiveState(rho=q.rho, u=u, w=w, p=p, T=T,
                          theta=potential_temperature(p, T, k))


def conserved_from_primitive(s: PrimitiveState, z, k: GasConstants) -> ConservedState:
    """Build the conserved vector; rho_e = rho*(c_v*T + K + g*z)."""
    if not (s.rho > 0.0 and s.p > 0.0 and s.T > 0.0):
        raise InvalidStateError(f"invalid primitive state {s}")
    e = k.c_v * s.T + 0.5 * (s.u * s.u + s.w * s.w) + k.g * z
    return ConservedState(rho=s.rho, rho_u=s.rho * s.u, rho_w=s.rho * s.w,
                          rho_e=s.rho * e)
