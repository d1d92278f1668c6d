"""Degree-sequence data model and exact summary statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from ..errors import SequenceError, UndefinedProbabilityError


class ParityClass(str, enum.Enum):
    """Parity of the degree sum."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, total: int) -> "ParityClass":
        return cls.EVEN if total % 2 == 0 else cls.ODD


@dataclass(frozen=True)
class DegreeSequence:
    """Immutable vector of non-negative integer degrees.

    Entries above ``n - 1`` are representable; operators evaluate functions at
    perturbed sequences that need not be graphical.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            degrees = tuple(int(value) for value in self.degrees)
        except (TypeError, ValueError) as exc:
            raise SequenceError("degrees must be integers", context={"degrees": repr(self.degrees)}) from exc
        if not degrees:
            raise SequenceError("a degree sequence needs at least one vertex")
        if min(degrees) < 0:
            raise SequenceError("degrees must be non-negative", context={"degrees": list(degrees)})
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, values: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse ``"3,3,3,3"`` (whitespace tolerated)."""

        tokens = [token.strip() for token in text.replace("\n", ",").split(",")]
        tokens = [token for token in tokens if token]
        if not tokens:
            raise SequenceError("empty degree sequence", context={"text": text})
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError as exc:
            raise SequenceError(f"cannot parse degree sequence {text!r}") from exc

    @classmethod
    def from_file(cls, path: str | Path) -> "DegreeSequence":
        """Read one integer per line; blank lines and ``#`` comments are skipped."""

        lines = Path(path).read_text(encoding="utf-8").splitlines()
        values = [line.split("#", 1)[0].strip() for line in lines]
        return cls.parse(",".join(value for value in values if value))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, index: int) -> int:
        return self.degrees[index]

    def __iter__(self):
        return iter(self.degrees)

    @cached_property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def parity(self) -> ParityClass:
        return ParityClass.of(self.total)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def sorted_desc(self) -> "DegreeSequence":
        return DegreeSequence(tuple(sorted(self.degrees, reverse=True)))

    def shifted(self, changes: Mapping[int, int]) -> "DegreeSequence":
        """Return a copy with ``changes[i]`` added to entry ``i``."""

        values = list(self.degrees)
        for index, delta in changes.items():
            values[index] += delta
        return DegreeSequence(tuple(values))

    def minus(self, *vertices: int) -> "DegreeSequence":
        """Return ``d - e_a - e_b - ...`` (repeated vertices subtract repeatedly)."""

        values = list(self.degrees)
        for vertex in vertices:
            values[vertex] -= 1
        return DegreeSequence(tuple(values))

    def stats(self) -> "SequenceStats":
        return stats(self)

    def as_dict(self) -> dict[str, Any]:
        return {"n": self.n, "degrees": list(self.degrees)}

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.degrees)


@dataclass(frozen=True)
class SequenceStats:
    """Exact statistics of a degree sequence.

    ``mu``, ``gamma2`` and ``eps`` raise :class:`UndefinedProbabilityError` when
    their defining denominators vanish; the remaining fields are always set.
    """

    n: int
    M1: int
    M2: int
    mean: Fraction
    sigma2: Fraction
    Delta: int
    _mu: Fraction | None = field(default=None, repr=False)
    _gamma2: Fraction | None = field(default=None, repr=False)
    _eps: tuple[Fraction, ...] | None = field(default=None, repr=False)

    @property
    def mu(self) -> Fraction:
        if self._mu is None:
            raise UndefinedProbabilityError("mu needs at least two vertices", context={"n": self.n})
        return self._mu

    @property
    def gamma2(self) -> Fraction:
        if self._gamma2 is None:
            raise UndefinedProbabilityError("gamma2 needs at least two vertices", context={"n": self.n})
        return self._gamma2

    @property
    def eps(self) -> tuple[Fraction, ...]:
        if self._eps is None:
            raise UndefinedProbabilityError("eps needs a positive mean degree", context={"M1": self.M1})
        return self._eps

    @property
    def delta(self) -> Fraction:
        """Reciprocal mean degree."""

        if self.M1 == 0:
            raise UndefinedProbabilityError("delta needs a positive mean degree")
        return 1 / self.mean

    def as_floats(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "n": self.n,
            "M1": self.M1,
            "M2": self.M2,
            "mean": float(self.mean),
            "sigma2": float(self.sigma2),
            "Delta": self.Delta,
        }
        if self._mu is not None:
            payload["mu"] = float(self._mu)
            payload["gamma2"] = float(self._gamma2)
        if self._eps is not None:
            payload["eps"] = [float(value) for value in self._eps]
        return payload


def stats(d: DegreeSequence) -> SequenceStats:
    n = d.n
    total = d.total
    mean = Fraction(total, n)
    square_dev = sum((Fraction(value) - mean) ** 2 for value in d.degrees)
    mu = gamma2 = None
    if n >= 2:
        mu = mean / (n - 1)
        gamma2 = square_dev / (n - 1) ** 2
    eps = None
    if total > 0:
        eps = tuple((value - mean) / mean for value in d.degrees)
    return SequenceStats(
        n=n,
        M1=total,
        M2=sum(value * (value - 1) for value in d.degrees),
        mean=mean,
        sigma2=square_dev / n,
        Delta=max(d.degrees),
        _mu=mu,
        _gamma2=gamma2,
        _eps=eps,
    )


def as_sequence(value: DegreeSequence | Sequence[int]) -> DegreeSequence:
    if isinstance(value, DegreeSequence):
        return value
    return DegreeSequence(tuple(value))


__all__ = ["DegreeSequence", "ParityClass", "SequenceStats", "stats", "as_sequence"]
