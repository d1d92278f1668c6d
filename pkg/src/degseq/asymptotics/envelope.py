"""Error scalars used to size tolerances in numerical checks."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from ..core.sequence import DegreeSequence
from ..errors import PreconditionError


@dataclass(frozen=True)
class ErrorEnvelope:
    eta1: float
    eta2: float
    xi: float
    delta: float
    epsilon: float
    regime_error: float | None = None

    def as_dict(self) -> dict[str, float | None]:
        return asdict(self)


def error_envelope(
    d: DegreeSequence,
    k0: int | None,
    *,
    alpha: float | None = None,
    eps: float | None = None,
) -> ErrorEnvelope:
    """Evaluate the envelope for ``d``.

    ``k0=None`` is the untruncated limit where the (2d/n)^k0 term vanishes.
    The spread comes from ``alpha`` (ε = d^(α-1)), ``eps``, or else the
    sequence itself (max |d_i - d|/d).
    """

    n = d.n
    mean = d.total / n
    if mean <= 0:
        raise PreconditionError("needs a positive mean degree")
    if alpha is not None:
        epsilon = mean ** (alpha - 1)
    elif eps is not None:
        epsilon = eps
    else:
        epsilon = max(abs(value - mean) for value in d.degrees) / mean
    mu = mean / (n - 1) if n > 1 else 1.0
    tail = 0.0 if k0 is None else (2 * mean / n) ** k0
    eta1 = 1 / (mean * n) + epsilon * mean / n**2 + epsilon**4 * mean**2 / n**2 + tail
    eta2 = epsilon / n + epsilon**3 * mean**2 / n**2
    xi = mu * epsilon**4 + (0.0 if k0 is None else (2 * mu) ** (k0 - 1))
    regime_error = None
    if alpha is not None:
        regime_error = math.log(n) ** 2 / math.sqrt(n) + mean ** (5 * alpha - 3)
    return ErrorEnvelope(
        eta1=eta1,
        eta2=eta2,
        xi=xi,
        delta=1 / mean,
        epsilon=epsilon,
        regime_error=regime_error,
    )


__all__ = ["ErrorEnvelope", "error_envelope"]
