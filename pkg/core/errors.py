from typing import Optional


class WorkbenchError(Exception):
    """Base class for every failure the workbench reports to the user."""


class AlgebraConsistencyError(WorkbenchError):
    """Structure tables disagree with the matrix realization."""


class LevelRequiredError(WorkbenchError):
    """A central term was needed but no level was supplied."""


class NotAdmissibleError(WorkbenchError):
    pass


class NonHomogeneousStateError(WorkbenchError):
    pass


class NonNegativeModeError(WorkbenchError):
    pass


class ExpressionSyntaxError(WorkbenchError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.message = message
        self.position = position
        if position is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at position {position}")


class UnknownGeneratorError(ExpressionSyntaxError):
    pass


class ZhuReductionError(WorkbenchError):
    """A zero-weight reduction did not land in S(h)."""


class UnsupportedSystemError(WorkbenchError):
    """The polynomial system lies outside what the linear-factor solver handles."""


class StateFileError(WorkbenchError):
    pass


class InvalidXiError(WorkbenchError):
    pass
