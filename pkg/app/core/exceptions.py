"""Domain and Application exceptions"""

class DomainException(Exception):
    """Base exception for domain layer"""
    pass


class ValidationError(DomainException):
    """Validation failed"""
    pass


class MalformedDate(DomainException):
    """A time expression names a date that does not exist"""
    pass


class UnsupportedPattern(DomainException):
    """Surface form matches none of the supported time-expression classes"""
    def __init__(self, surface: str):
        self.surface = surface
        super().__init__(f"Unsupported time expression: '{surface}'")


class OracleInconsistency(DomainException):
    """Generated composition table violates an algebraic invariant"""
    pass


class BadAnnotation(DomainException):
    """Document annotation cannot be turned into a graph"""
    pass


class UnnormalizableTimex(DomainException):
    """Document timex has neither a usable value nor a parseable surface"""
    def __init__(self, surface: str, value: str | None = None):
        self.surface = surface
        self.value = value
        super().__init__(f"Cannot normalize timex '{surface}' (value={value!r})")


class OverlapConflict(DomainException):
    """Two spans selected for marking overlap"""
    def __init__(self, first: tuple[int, int], second: tuple[int, int]):
        self.first = first
        self.second = second
        super().__init__(f"Marked spans {first} and {second} overlap")


class DimensionMismatch(DomainException):
    """Weight matrices and node states disagree in shape"""
    pass


class ApplicationError(Exception):
    """Base exception for application layer"""
    pass


class UseCaseError(ApplicationError):
    """Use case execution failed"""
    pass


class InfrastructureError(Exception):
    """Base exception for infrastructure layer"""
    pass


class RepositoryError(InfrastructureError):
    """Repository operation failed"""
    pass


class DatasetParseError(InfrastructureError):
    """Input file could not be parsed"""
    def __init__(self, path: str, line: int | None, reason: str):
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line is not None else path
        super().__init__(f"{location}: {reason}")
