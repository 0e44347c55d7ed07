"""Exception hierarchy.

Every error raised by the mathematical modules derives from
:class:`StackyError` and carries a ``details`` dict that the command-line
front end serializes verbatim.
"""

from __future__ import annotations


class StackyError(Exception):
    kind = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict:
        from .io import jsonable

        return {"error": self.kind, "message": self.message,
                "details": jsonable(self.details)}


class FieldMismatchError(StackyError, ArithmeticError):
    kind = "field-mismatch"


class InputError(StackyError, ValueError):
    kind = "input"


class PreconditionError(StackyError):
    kind = "precondition"


class DataError(PreconditionError):
    kind = "data"


class UnboundedError(PreconditionError):
    kind = "unbounded"


class WallError(PreconditionError):
    kind = "wall"


class StructureError(StackyError):
    kind = "structure"


class MorphismError(StackyError):
    kind = "morphism"


class FreenessViolation(StackyError):
    """H does not act freely on the arrows; ``details['witness']`` is (h, f)."""

    kind = "freeness"


class CertificateInvalidError(StackyError):
    kind = "certificate-invalid"
