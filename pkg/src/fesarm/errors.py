"""Exception types shared across the package."""


class FesArmError(Exception):
    """Base class for all package errors."""


class InvalidInputError(FesArmError, ValueError):
    """A numeric argument is non-finite or outside its documented domain."""


class ModelConfigError(FesArmError, ValueError):
    """A model definition is internally inconsistent (bad geometry, bad units)."""


class SimulationDivergedError(FesArmError, RuntimeError):
    """The integrator produced a non-finite state.

    Attributes:
        substep: index of the 1 ms substep (within the control step) that
            first produced a non-finite value.
    """

    def __init__(self, substep: int, message: str | None = None):
        self.substep = int(substep)
        super().__init__(message or f"simulation diverged at substep {substep}")


class UpdateDivergedError(FesArmError, RuntimeError):
    """An agent update produced a non-finite loss; the update was aborted.

    Attributes:
        step: training step index at which the update was attempted.
        losses: mapping of loss name to the (possibly non-finite) value.
    """

    def __init__(self, step: int, losses: dict):
        self.step = int(step)
        self.losses = dict(losses)
        super().__init__(f"non-finite loss at update step {step}: {losses}")


class CheckpointFormatError(FesArmError, ValueError):
    """A checkpoint file has a bad magic number, version, or shape table."""
