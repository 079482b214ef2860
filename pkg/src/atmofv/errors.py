"""Exception types raised by the solver."""


class AtmofvError(Exception):
    """Base class for all solver errors."""


class ConfigurationError(AtmofvError):
    """Invalid grid, case or run configuration."""


class InvalidStateError(AtmofvError):
    """A cell state violates positivity of density or internal energy."""


class PositivityError(InvalidStateError):
    """A reconstructed face state has non-positive density or pressure."""


class ProfileDegenerateError(AtmofvError):
    """Hydrostatic profile root argument non-positive within a cell."""


class SolverBreakdownError(AtmofvError):
    """An approximate Riemann solver produced an unusable wave structure."""


class VacuumError(AtmofvError):
    """Riemann data generates vacuum; no solution with positive pressure."""


class AboveAtmosphereError(AtmofvError):
    """Requested height lies above the top of the isentropic atmosphere."""


class StepFailureError(AtmofvError):
    """A time step aborted; carries the failing step and stage."""

    def __init__(self, message, step, stage=None):
        super().__init__(message)
        self.step = step
        self.stage = stage


def raise_from_status(status):
    """Translate a kernel status array into the matching exception."""
    code, i, j, extra = (int(v) for v in status)
    if code == 0:
        return
    loc = f"cell (i={i}, j={j})"
    if code == 1:
        raise InvalidStateError(f"non-positive density in {loc}")
    if code == 2:
        raise InvalidStateError(f"non-positive internal energy in {loc}")
    if code == 3:
        raise InvalidStateError(f"non-positive ghost state at {loc}")
    if code == 4:
        raise ProfileDegenerateError(
            f"hydrostatic profile degenerate in {loc}: cell too tall or "
            "state too rarefied")
    if code == 5:
        axis = "x" if extra == 0 else "z"
        raise PositivityError(
            f"non-positive reconstructed state at the +{axis} face of {loc}")
    if code == 6:
        raise SolverBreakdownError(f"Roe average sound speed broke down at {loc}")
    if code == 7:
        raise SolverBreakdownError(f"degenerate HLLC wave structure at {loc}")
    raise AtmofvError(f"unknown kernel status {code} at {loc}")
