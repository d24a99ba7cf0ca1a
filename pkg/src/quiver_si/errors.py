"""Exception and warning classes raised across the package."""


class QuiverSIError(Exception):
    """Base class for all errors raised by this package."""


class CycleError(QuiverSIError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("quiver has an oriented cycle: " + " -> ".join(self.cycle))


class DanglingEndpointError(QuiverSIError):
    pass


class DuplicateIdError(QuiverSIError):
    pass


class UnknownVertexError(QuiverSIError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DomainMismatchError(QuiverSIError):
    pass


class NotOrthogonalError(QuiverSIError):
    """Raised when sigma . alpha != 0, i.e. the weight space SI(Q, alpha)_sigma is zero."""


class ZeroWeightError(QuiverSIError):
    pass


class NotSquareError(QuiverSIError):
    pass


class ShapeError(QuiverSIError):
    pass


class ZeroVectorError(QuiverSIError):
    pass


class DimensionMismatchError(QuiverSIError):
    pass


class LengthMismatchError(QuiverSIError):
    pass


class SchemaError(QuiverSIError):
    """Malformed JSON input. ``pointer`` is a JSON pointer to the offending node."""

    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class RankDeficientWarning(UserWarning):
    """The rows handed to :func:`minor_kernel` are linearly dependent; the kernel vector is zero."""
