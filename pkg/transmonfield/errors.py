# coding: utf-8

__all__ = ['ValidationError', 'UnderdeterminedError', 'DegenerateDataError',
           'FitError', 'ConvergenceError', 'SequenceStageError',
           'UnphysicalDephasingWarning', 'BelowEnvelopeWarning',
           'RegimeWarning']

class ValidationError(ValueError):
    """Input values or configuration content violate a stated invariant."""

class UnderdeterminedError(ValidationError):
    """Fewer data points than the free parameters of a fit can support."""

class DegenerateDataError(ValidationError):
    """Data do not span enough distinct values to define the fit."""

class FitError(RuntimeError):
    """A fit or numerical search failed to produce a usable result."""

class ConvergenceError(FitError):
    """An iterative procedure ran out of its budget."""

class SequenceStageError(FitError):
    """
    A stage of the synthetic measurement sequence failed.

    Parameters
    ----------
    stage : str
        The name of the failing stage, e.g. 'rabi' or 't1'.
    message : str
        Description of the failure.
    """
    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f'{stage}: {message}')

class UnphysicalDephasingWarning(UserWarning):
    """Pure dephasing rate came out negative."""

class BelowEnvelopeWarning(UserWarning):
    """A decay rate lies below the parabolic lower envelope."""

class RegimeWarning(UserWarning):
    """Effective E_J/E_C is below the transmon-regime threshold."""
