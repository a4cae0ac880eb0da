class AppException(Exception):
    """Base application exception."""

    def __init__(self, message: str, exit_code: int = 3):
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class UsageException(AppException):
    """Raised when command-line input is malformed."""

    def __init__(self, message: str = "Invalid usage"):
        super().__init__(message=message, exit_code=2)


class UnknownModuleException(UsageException):
    """Raised when a translation module name is not known."""

    def __init__(self, name: str):
        super().__init__(message=f"Unknown module: {name}")
        self.name = name


class ComputationException(AppException):
    """Raised when an exact computation cannot be carried out."""

    def __init__(self, message: str = "Computation failed"):
        super().__init__(message=message, exit_code=3)


class DivisionByZeroException(ComputationException):
    """Raised when dividing by an exact zero."""

    def __init__(self, message: str = "Division by zero"):
        super().__init__(message=message)


class PoleException(ComputationException):
    """Raised when a rational function is specialized at one of its poles."""

    def __init__(self, message: str = "Specialization hits a pole"):
        super().__init__(message=message)


class ModeMismatchException(ComputationException):
    """Raised when generic and rational field elements are mixed."""

    def __init__(self, message: str = "Field element mode mismatch"):
        super().__init__(message=message)


class WindowOverflowException(ComputationException):
    """Raised when a PBW monomial leaves the truncation window."""

    def __init__(self, height: int, window: int):
        super().__init__(
            message=f"PBW height {height} exceeds truncation window {window}"
        )
        self.height = height
        self.window = window


class ClosureException(ComputationException):
    """Raised when the bracket table cannot be closed consistently."""

    def __init__(self, message: str = "Bracket table closure failed"):
        super().__init__(message=message)


class HypothesisException(ComputationException):
    """Raised when an operation's hypothesis does not hold for its input."""

    def __init__(self, message: str = "Hypothesis does not hold"):
        super().__init__(message=message)


class NotAtypicalException(ComputationException):
    """Raised when an atypical-only operation receives a typical weight."""

    def __init__(self, message: str = "Weight is not atypical"):
        super().__init__(message=message)


class VerificationFailedException(AppException):
    """Raised when a verification suite reports failures."""

    def __init__(self, message: str = "Verification failed"):
        super().__init__(message=message, exit_code=1)
