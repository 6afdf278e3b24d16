"""Finite probability vectors, total variation distance and entropy."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    EmptyDistribution,
    NegativeMass,
    NotNormalized,
    ParameterOutOfRange,
    ParseError,
    SupportMismatch,
)

NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability mass over the symbol indices ``0..n-1``.

    The stored vector is exactly what the caller passed in (no renormalization)
    and is read-only.
    """

    probs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.probs, dtype=float).reshape(-1)
        if arr.size == 0:
            raise EmptyDistribution("distribution needs at least one symbol")
        if not np.all(np.isfinite(arr)):
            raise ParameterOutOfRange("probabilities must be finite")
        if np.any(arr < 0):
            raise NegativeMass(f"negative mass at index {int(np.argmax(arr < 0))}")
        total = math.fsum(arr.tolist())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(total)
        arr.setflags(write=False)
        object.__setattr__(self, "probs", arr)

    def __len__(self):
        return self.probs.size

    def __iter__(self):
        return iter(self.probs.tolist())

    def __getitem__(self, i):
        return float(self.probs[i])

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.probs.shape == other.probs.shape and bool(
            np.all(self.probs == other.probs)
        )

    def __hash__(self):
        return hash(tuple(self.probs.tolist()))

    def __repr__(self):
        return f"Distribution({self.probs.tolist()!r})"

    def padded(self, n: int) -> np.ndarray:
        if n < len(self):
            raise SupportMismatch(f"cannot pad length {len(self)} down to {n}")
        out = np.zeros(n)
        out[: len(self)] = self.probs
        return out


DistLike = Union[Distribution, Sequence[float], np.ndarray]


def new_distribution(values: Iterable[float]) -> Distribution:
    """Validate ``values`` and wrap them as a :class:`Distribution`."""
    return Distribution(np.asarray(list(values), dtype=float))


def as_distribution(p: DistLike) -> Distribution:
    if isinstance(p, Distribution):
        return p
    return new_distribution(p)


def aligned(p: DistLike, q: DistLike, pad: bool = True):
    """Return the two mass vectors as equal-length arrays.

    Shorter vectors are zero-padded unless ``pad`` is false, in which case a
    length difference raises :class:`SupportMismatch`.
    """
    p, q = as_distribution(p), as_distribution(q)
    if len(p) != len(q) and not pad:
        raise SupportMismatch(f"support sizes differ: {len(p)} vs {len(q)}")
    n = max(len(p), len(q))
    return p.padded(n), q.padded(n)


def total_variation(p: DistLike, q: DistLike, pad: bool = True) -> float:
    """Half the L1 distance between ``p`` and ``q``."""
    a, b = aligned(p, q, pad)
    return min(1.0, 0.5 * math.fsum(np.abs(a - b).tolist()))


def entropy(p: DistLike, base: float = math.e) -> float:
    """Shannon entropy with ``0 log 0 = 0``, in units of ``log(base)``."""
    if not base > 1:
        raise ParameterOutOfRange(f"entropy base must exceed 1, got {base}")
    probs = as_distribution(p).probs
    nz = probs[probs > 0]
    h = -math.fsum((nz * np.log(nz)).tolist())
    return max(0.0, h) / math.log(base)


def parse_distribution(text: str, path=None) -> Distribution:
    """Parse the one-probability-per-line text format.

    Lines starting with ``#`` and blank lines are ignored.
    """
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ParseError(f"not a number: {line!r}", path, lineno) from None
    if not values:
        raise EmptyDistribution(f"{path or 'input'}: no probabilities found")
    return new_distribution(values)


def read_distribution(path) -> Distribution:
    path = Path(path)
    return parse_distribution(path.read_text(), path=str(path))


def format_distribution(p: DistLike) -> str:
    return "".join(f"{v!r}\n" for v in as_distribution(p))
