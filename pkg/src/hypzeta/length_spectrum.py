"""Primitive geodesic length spectrum of the modular surface.

Primitive hyperbolic conjugacy classes of the modular group biject with
aperiodic cyclic words over the parabolic generators
L = [[1,1],[0,1]] and R = [[1,0],[1,1]] that use both letters; the class
invariant is the trace of the word's matrix product. Words are kept in
canonical form (lexicographically minimal rotation, i.e. the Lyndon
representative). Enumeration walks the prenecklace tree and prunes on
the trace, which never decreases when a word is extended; the claimed
minimum trace ell+1 at word length ell is enforced as a tested invariant.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    CapacityError,
    NonPrimitiveError,
    SingleLetterError,
)

__all__ = [
    "GeodesicClass",
    "TraceShell",
    "LengthSpectrum",
    "GENERATOR_CONVENTION",
    "CACHE_VERSION",
    "class_from_word",
    "canonical_rotation",
    "necklace_count",
    "enumerate_spectrum",
    "trace_of_word",
    "write_cache",
    "read_cache",
]

GENERATOR_CONVENTION = "L=[[1,1],[0,1]],R=[[1,0],[1,1]]"
CACHE_VERSION = "1"
MODULAR_GROUP_LABEL = "modular"


def _word_matrix(word: str) -> tuple[int, int, int, int]:
    a, b, c, d = 1, 0, 0, 1
    for ch in word:
        if ch == "L":
            a, b, c, d = a, a + b, c, c + d
        elif ch == "R":
            a, b, c, d = a + b, b, c + d, d
        else:
            raise ValueError(f"word may only contain L and R, got {ch!r}")
    return a, b, c, d


def trace_of_word(word: str) -> int:
    a, _, _, d = _word_matrix(word)
    return a + d


def canonical_rotation(word: str) -> str:
    """Lexicographically minimal rotation (L sorts before R)."""
    doubled = word + word
    return min(doubled[i : i + len(word)] for i in range(len(word)))


def _is_aperiodic(word: str) -> bool:
    return (word + word).find(word, 1) == len(word)


def _norm_and_length(trace: int) -> tuple[float, float]:
    t = float(trace)
    norm = ((t + math.sqrt(t * t - 4.0)) / 2.0) ** 2
    length = 2.0 * math.acosh(t / 2.0)
    return norm, length


@dataclass(frozen=True)
class GeodesicClass:
    """One primitive hyperbolic class: canonical word, trace, norm, length."""

    word: str
    trace: int
    norm: float
    length: float


@dataclass(frozen=True)
class TraceShell:
    """All classes sharing one trace, collapsed to (count, norm, length)."""

    trace: int
    count: int
    norm: float
    length: float


@dataclass(frozen=True)
class LengthSpectrum:
    """Complete multiset of primitive classes with trace <= max_trace.

    `classes` is None when the spectrum was restored from a trace-level
    cache; the shell table always carries the data the Euler products use.
    """

    shells: tuple[TraceShell, ...]
    max_trace: int
    group_label: str = MODULAR_GROUP_LABEL
    classes: tuple[GeodesicClass, ...] | None = None

    def mult(self, trace: int) -> int:
        for shell in self.shells:
            if shell.trace == trace:
                return shell.count
        return 0

    @property
    def class_count(self) -> int:
        return sum(shell.count for shell in self.shells)

    @property
    def min_length(self) -> float:
        return self.shells[0].length if self.shells else math.inf


def class_from_word(word: str) -> GeodesicClass:
    """Build the class named by a cyclic word, canonicalizing the rotation.

    Raises SingleLetterError for L^k / R^k (parabolic, trace 2) and
    NonPrimitiveError for proper powers.
    """
    if not word:
        raise ValueError("empty word")
    if len(set(word)) == 1:
        raise SingleLetterError(f"word {word!r} is a power of a single generator")
    if not _is_aperiodic(word):
        raise NonPrimitiveError(f"word {word!r} is a proper power")
    canon = canonical_rotation(word)
    trace = trace_of_word(canon)
    norm, length = _norm_and_length(trace)
    return GeodesicClass(word=canon, trace=trace, norm=norm, length=length)


def _moebius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def necklace_count(length: int) -> int:
    """Aperiodic binary necklaces of the given length using both letters."""
    if length < 2:
        raise ValueError("length must be at least 2")
    total = sum(_moebius(d) * 2 ** (length // d) for d in range(1, length + 1) if length % d == 0)
    return total // length


def _shells_from_classes(classes: list[GeodesicClass]) -> tuple[TraceShell, ...]:
    by_trace: dict[int, int] = {}
    for cls in classes:
        by_trace[cls.trace] = by_trace.get(cls.trace, 0) + 1
    shells = []
    for trace in sorted(by_trace):
        norm, length = _norm_and_length(trace)
        shells.append(TraceShell(trace=trace, count=by_trace[trace], norm=norm, length=length))
    return tuple(shells)


def enumerate_spectrum(max_trace: int, max_classes: int = 1_000_000) -> LengthSpectrum:
    """All primitive classes with trace <= max_trace, exactly once each.

    Walks the prenecklace tree over {L, R} recording Lyndon words (the
    canonical rotations) and pruning any prefix whose trace already
    exceeds max_trace; extending a word never lowers the trace. Raises
    CapacityError when more than max_classes classes appear.
    """
    if max_trace < 3:
        raise ValueError("max_trace must be at least 3")
    max_len = max_trace - 1
    found: list[tuple[str, int]] = []

    # iterative DFS over prenecklaces; entries: (word, period, a, b, c, d)
    stack = [("L", 1, 1, 1, 0, 1)]
    while stack:
        word, period, a, b, c, d = stack.pop()
        t = len(word)
        if period == t and t >= 2 and a + d >= 3:
            found.append((word, a + d))
            if len(found) > max_classes:
                raise CapacityError(
                    f"more than {max_classes} classes below trace {max_trace}"
                )
        if t == max_len:
            continue
        base = word[t - period]
        if base == "L":
            # same-period child L, then the period-resetting child R
            na, nb, nc, nd = a, a + b, c, c + d
            if na + nd <= max_trace:
                stack.append((word + "L", period, na, nb, nc, nd))
            na, nb, nc, nd = a + b, b, c + d, d
            if na + nd <= max_trace:
                stack.append((word + "R", t + 1, na, nb, nc, nd))
        else:
            na, nb, nc, nd = a + b, b, c + d, d
            if na + nd <= max_trace:
                stack.append((word + "R", period, na, nb, nc, nd))
    classes = []
    for word, trace in found:
        norm, length = _norm_and_length(trace)
        classes.append(GeodesicClass(word=word, trace=trace, norm=norm, length=length))
    classes.sort(key=lambda cls: (cls.trace, cls.word))
    return LengthSpectrum(
        shells=_shells_from_classes(classes),
        max_trace=max_trace,
        group_label=MODULAR_GROUP_LABEL,
        classes=tuple(classes),
    )


def _meta_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def write_cache(spectrum: LengthSpectrum, path: str | Path) -> None:
    """Write the trace-level table as CSV plus a JSON metadata sidecar."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trace", "count", "length", "norm"])
        for shell in spectrum.shells:
            writer.writerow(
                [shell.trace, shell.count, repr(shell.length), repr(shell.norm)]
            )
    meta = {
        "group": spectrum.group_label,
        "max_trace": spectrum.max_trace,
        "generator_convention": GENERATOR_CONVENTION,
        "version": CACHE_VERSION,
    }
    with _meta_path(path).open("w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_cache(path: str | Path, max_trace: int,
               group_label: str = MODULAR_GROUP_LABEL) -> LengthSpectrum | None:
    """Load a cached spectrum; None unless the metadata matches exactly."""
    path = Path(path)
    meta_file = _meta_path(path)
    if not path.exists() or not meta_file.exists():
        return None
    try:
        with meta_file.open() as fh:
            meta = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    expected = {
        "group": group_label,
        "max_trace": max_trace,
        "generator_convention": GENERATOR_CONVENTION,
        "version": CACHE_VERSION,
    }
    if meta != expected:
        return None
    shells = []
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["trace", "count", "length", "norm"]:
            return None
        for row in reader:
            shells.append(
                TraceShell(
                    trace=int(row["trace"]),
                    count=int(row["count"]),
                    length=float(row["length"]),
                    norm=float(row["norm"]),
                )
            )
    shells.sort(key=lambda shell: shell.trace)
    return LengthSpectrum(
        shells=tuple(shells),
        max_trace=max_trace,
        group_label=group_label,
        classes=None,
    )
