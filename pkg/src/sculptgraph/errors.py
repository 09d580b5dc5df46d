class SculptError(Exception):
    """Base class for errors raised by this package."""


class SchemaError(SculptError, ValueError):
    """Malformed mode list or scheme file."""


class StructuralError(SculptError, ValueError):
    """A graph does not have the shape an operation requires."""


class BunchingError(SculptError, ValueError):
    """A Fock state violates the one-boson-per-qubit-mode contract."""
