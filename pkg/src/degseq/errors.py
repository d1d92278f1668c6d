"""Exception hierarchy for degseq."""

from __future__ import annotations

from typing import Any


class DegSeqError(RuntimeError):
    """Base exception that carries structured context."""

    def __init__(self, message: str, *, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.context = context or {}

    def as_dict(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self), "context": self.context}


class SequenceError(DegSeqError):
    """Raised for malformed degree sequences, constraints or vertex labels."""


class CapacityError(DegSeqError):
    """Raised when an exact computation exceeds the configured vertex cap."""


class UndefinedProbabilityError(DegSeqError):
    """Raised when a probability or statistic is undefined (for example N(d) = 0)."""


class SingularityError(DegSeqError):
    """Raised when an operator or formula hits a zero denominator."""


class DomainError(DegSeqError):
    """Raised when a function is evaluated outside its declared domain."""


class DomainExhaustedError(DomainError):
    """Raised when a domain ladder is too small for the requested iteration."""


class PreconditionError(DegSeqError):
    """Raised when an asymptotic formula is evaluated outside its regime."""


class DisconnectedGraphError(DegSeqError):
    """Raised when ratio propagation meets a disconnected sequence graph."""


class ModelError(DegSeqError):
    """Raised for invalid random-model parameters."""


class ConfigurationError(DegSeqError):
    """Raised when configuration validation fails."""


class UsageError(DegSeqError):
    """Raised for malformed command lines and recipes."""


__all__ = [
    "DegSeqError",
    "SequenceError",
    "CapacityError",
    "UndefinedProbabilityError",
    "SingularityError",
    "DomainError",
    "DomainExhaustedError",
    "PreconditionError",
    "DisconnectedGraphError",
    "ModelError",
    "ConfigurationError",
    "UsageError",
]
