"""Codeword-length analysis for uniquely decodable (UD) lossless codes.

Units are explicit in every name: ``*_dary`` is in d-ary digits, ``*_nats`` in
nats. The redundancy is measured in d-ary digits and converted with ``log d``
inside the bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import bounds, fdiv
from .dist import Distribution, DistLike, as_distribution, read_distribution
from .errors import KraftViolation, ParameterOutOfRange, ParseError, ZeroMassSymbol

KRAFT_TOL = 1e-12
# snap log_d values this close to an integer, so exact powers of d give exact lengths
_INT_SNAP = 1e-12


def _log_d(x, d):
    if d == 2:
        v = math.log2(x)
    elif d == 10:
        v = math.log10(x)
    else:
        v = math.log(x) / math.log(d)
    r = round(v)
    return float(r) if abs(v - r) < _INT_SNAP else v


@dataclass(frozen=True)
class UdCode:
    """Codeword lengths over a ``d``-ary alphabet paired with the source distribution."""

    d: int
    lengths: Sequence[int]
    source: Distribution

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ParameterOutOfRange(f"code alphabet size must be an integer >= 2, got {self.d}")
        lengths = tuple(int(l) for l in self.lengths)
        if any(l != l0 for l, l0 in zip(lengths, self.lengths)) or any(l < 1 for l in lengths):
            raise ParameterOutOfRange(f"codeword lengths must be positive integers, got {list(self.lengths)}")
        source = as_distribution(self.source)
        if len(lengths) != len(source):
            raise ParameterOutOfRange(
                f"{len(lengths)} codeword lengths for {len(source)} source symbols"
            )
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "source", source)
        c = kraft_sum(self)
        if c > 1.0 + KRAFT_TOL:
            raise KraftViolation(c)


def kraft_sum(code: UdCode) -> float:
    return math.fsum(float(code.d) ** -l for l in code.lengths)


def induced_distribution(code: UdCode) -> Distribution:
    """Q(u) = d^-l(u) / c, the distribution the lengths are optimal for."""
    c = kraft_sum(code)
    return Distribution(np.array([float(code.d) ** -l / c for l in code.lengths]))


def average_length(code: UdCode) -> float:
    return math.fsum(p * l for p, l in zip(code.source, code.lengths))


def slack(code: UdCode) -> np.ndarray:
    """Per-symbol ``l(u) + log_d P(u)``; needs every P(u) > 0."""
    probs = code.source.probs
    if np.any(probs <= 0):
        raise ZeroMassSymbol("slack is undefined for symbols with zero probability")
    return np.array([l + _log_d(p, code.d) for l, p in zip(code.lengths, probs.tolist())])


def redundancy(code: UdCode) -> float:
    """Average length minus the base-d source entropy, in d-ary digits."""
    terms = [p * (l + _log_d(p, code.d)) for p, l in zip(code.source, code.lengths) if p > 0]
    return max(0.0, math.fsum(terms))


def kl_to_induced(code: UdCode) -> float:
    """D(P||Q) in nats via ``redundancy * log d + log c``."""
    return max(0.0, redundancy(code) * math.log(code.d) + math.log(kraft_sum(code)))


def _expected_slack_term(code):
    delta = slack(code)
    return math.fsum((code.source.probs * delta * float(code.d) ** -delta).tolist())


def kl_from_induced(code: UdCode) -> float:
    """D(Q||P) in nats via ``-log c - (log d / c) E[delta d^-delta]``."""
    c = kraft_sum(code)
    value = -math.log(c) - math.log(code.d) / c * _expected_slack_term(code)
    return max(0.0, value)


def jeffreys_to_induced(code: UdCode) -> float:
    """J(P, Q) in nats; the ``log c`` terms of the two directions cancel."""
    c = kraft_sum(code)
    log_d = math.log(code.d)
    value = 0.5 * (redundancy(code) * log_d - log_d / c * _expected_slack_term(code))
    return max(0.0, value)


def length_condition_holds(code: UdCode) -> bool:
    """True iff l(u) >= ceil(log_d 1/P(u)) for every symbol."""
    return bool(np.all(slack(code) >= 0.0))


def shannon_code(p: DistLike, d: int = 2) -> UdCode:
    """Lengths ceil(log_d 1/P(u)), floored at one digit."""
    p = as_distribution(p)
    if np.any(p.probs <= 0):
        raise ZeroMassSymbol("Shannon code needs every symbol to have positive probability")
    if int(d) != d or d < 2:
        raise ParameterOutOfRange(f"code alphabet size must be an integer >= 2, got {d}")
    lengths = [max(1, math.ceil(-_log_d(x, d))) for x in p]
    return UdCode(int(d), lengths, p)


def l1_distance(code: UdCode) -> float:
    q = induced_distribution(code)
    return math.fsum(np.abs(code.source.probs - q.probs).tolist())


class L1Bounds(NamedTuple):
    csiszar: float
    kl_tight: float
    jeffreys_tight: Optional[float]


def l1_bounds_from_redundancy(redundancy_dary: float, d: int, condition_holds: bool = True) -> L1Bounds:
    """The three upper bounds on sum |P - Q| given only the redundancy.

    ``jeffreys_tight`` is ``None`` unless ``condition_holds``.
    """
    if not (redundancy_dary >= 0.0 and math.isfinite(redundancy_dary)):
        raise ParameterOutOfRange(f"redundancy must be finite and nonnegative, got {redundancy_dary}")
    x = redundancy_dary * math.log(d)
    csiszar = min(math.sqrt(2.0 * x), 2.0)
    kl_tight = min(2.0 * bounds.l_curve_inverse(x), 2.0)
    jeff = 2.0 * bounds.jeffreys_epsilon_solver(x / 2.0) if condition_holds else None
    return L1Bounds(csiszar, kl_tight, jeff)


def _condition_or_false(code):
    if np.any(code.source.probs <= 0):
        return False
    return length_condition_holds(code)


def l1_bounds(code: UdCode) -> L1Bounds:
    return l1_bounds_from_redundancy(redundancy(code), code.d, _condition_or_false(code))


@dataclass(frozen=True)
class CodeReport:
    kraft_sum: float
    q_induced: Distribution
    redundancy_dary: float
    kl_pq_nats: float
    kl_qp_nats: float
    jeffreys_nats: float
    l1_actual: float
    bound_csiszar: float
    bound_kl: float
    bound_jeffreys: Optional[float]
    condition_holds: bool
    slack_dary: Optional[tuple] = field(default=None)

    def rows(self):
        """``(name, value)`` pairs in display order."""
        return [
            ("kraft_sum", self.kraft_sum),
            ("redundancy_dary", self.redundancy_dary),
            ("kl_pq_nats", self.kl_pq_nats),
            ("kl_qp_nats", self.kl_qp_nats),
            ("jeffreys_nats", self.jeffreys_nats),
            ("l1_actual", self.l1_actual),
            ("bound_csiszar", self.bound_csiszar),
            ("bound_kl", self.bound_kl),
            ("bound_jeffreys", self.bound_jeffreys),
            ("condition_holds", self.condition_holds),
        ]


def analyze(code: UdCode) -> CodeReport:
    """Everything about ``code`` in one report.

    When some source symbol has zero probability the dual divergences are
    infinite, the slack is undefined and the Jeffreys bound is omitted.
    """
    q = induced_distribution(code)
    positive = bool(np.all(code.source.probs > 0))
    if positive:
        kl_qp = kl_from_induced(code)
        jeff = jeffreys_to_induced(code)
        delta = tuple(slack(code).tolist())
    else:
        kl_qp = fdiv.kl(q, code.source)
        jeff = fdiv.jeffreys(code.source, q)
        delta = None
    b = l1_bounds(code)
    return CodeReport(
        kraft_sum=kraft_sum(code),
        q_induced=q,
        redundancy_dary=redundancy(code),
        kl_pq_nats=kl_to_induced(code),
        kl_qp_nats=kl_qp,
        jeffreys_nats=jeff,
        l1_actual=l1_distance(code),
        bound_csiszar=b.csiszar,
        bound_kl=b.kl_tight,
        bound_jeffreys=b.jeffreys_tight,
        condition_holds=b.jeffreys_tight is not None,
        slack_dary=delta,
    )


def parse_code(text: str, source: Optional[DistLike] = None, path=None) -> UdCode:
    """Parse the code text format.

    First meaningful line is ``d=<int>``; each later line is ``<length>`` or
    ``<length> <probability>``. Probabilities must be given on every line or
    on none, in which case ``source`` supplies them. ``#`` comments and blank
    lines are skipped.
    """
    d = None
    lengths, probs = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if d is None:
            key, sep, val = line.partition("=")
            if not sep or key.strip() != "d":
                raise ParseError(f"expected 'd=<int>', got {line!r}", path, lineno)
            try:
                d = int(val.strip())
            except ValueError:
                raise ParseError(f"bad alphabet size {val.strip()!r}", path, lineno) from None
            continue
        parts = line.split()
        if len(parts) not in (1, 2):
            raise ParseError(f"expected '<length> [<probability>]', got {line!r}", path, lineno)
        try:
            length = int(parts[0])
        except ValueError:
            raise ParseError(f"bad codeword length {parts[0]!r}", path, lineno) from None
        lengths.append(length)
        if len(parts) == 2:
            try:
                probs.append(float(parts[1]))
            except ValueError:
                raise ParseError(f"bad probability {parts[1]!r}", path, lineno) from None
        if probs and len(probs) != len(lengths):
            raise ParseError("probabilities must be given on every line or on none", path, lineno)
    if d is None:
        raise ParseError("missing 'd=<int>' header", path)
    if not lengths:
        raise ParseError("no codeword lengths", path)
    if probs:
        if source is not None:
            raise ParseError("probabilities given both inline and in a separate distribution", path)
        source = probs
    elif source is None:
        raise ParseError("probabilities omitted; a separate distribution file is required", path)
    return UdCode(d, lengths, as_distribution(source))


def read_code(path, dist_path=None) -> UdCode:
    path = Path(path)
    source = read_distribution(dist_path) if dist_path is not None else None
    return parse_code(path.read_text(), source, path=str(path))


def format_code(code: UdCode) -> str:
    lines = [f"d={code.d}"]
    lines += [f"{l} {p!r}" for l, p in zip(code.lengths, code.source)]
    return "\n".join(lines) + "\n"
