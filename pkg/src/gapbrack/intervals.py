"""Closed-interval sets on ``[0, ambient]``.

Sets are kept canonical: components sorted, pairwise disjoint, and separated
by strictly positive gaps.  Complements of closed sets are open; they are
stored by their closures, so identities between sets are exact only up to
isolated points (see :meth:`IntervalSet.regularised`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

KAPPA_AMBIENT = 2.0


@dataclass(frozen=True, order=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not self.lo <= self.hi:
            raise ValueError(f"interval has lo > hi: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol


def _canonical(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    out: list[Interval] = []
    for iv in sorted(parts):
        if out and iv.lo <= out[-1].hi:
            if iv.hi > out[-1].hi:
                out[-1] = Interval(out[-1].lo, iv.hi)
        else:
            out.append(iv)
    return tuple(out)


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of closed intervals inside ``[0, ambient]``."""

    intervals: tuple[Interval, ...] = ()
    ambient: float = 2.0

    def __post_init__(self):
        parts = [iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.intervals]
        object.__setattr__(self, "intervals", _canonical(parts))
        object.__setattr__(self, "ambient", float(self.ambient))

    @classmethod
    def of(cls, pairs: Iterable[tuple[float, float]], ambient: float) -> "IntervalSet":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs), ambient)

    @classmethod
    def full(cls, ambient: float) -> "IntervalSet":
        return cls((Interval(0.0, ambient),), ambient)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def pairs(self) -> list[tuple[float, float]]:
        return [(iv.lo, iv.hi) for iv in self.intervals]

    @property
    def measure(self) -> float:
        return sum(iv.width for iv in self.intervals)

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return any(iv.contains(x, tol) for iv in self.intervals)

    def widen(self, tol: float) -> "IntervalSet":
        """Grow every component by ``tol`` on both sides, clipped to the ambient range."""
        return IntervalSet(
            tuple(Interval(max(0.0, iv.lo - tol), min(self.ambient, iv.hi + tol)) for iv in self.intervals),
            self.ambient,
        )

    def nondegenerate(self) -> "IntervalSet":
        return IntervalSet(tuple(iv for iv in self.intervals if not iv.is_degenerate), self.ambient)

    def degenerate_points(self) -> list[float]:
        return [iv.lo for iv in self.intervals if iv.is_degenerate]

    def regularised(self) -> "IntervalSet":
        """Closure of the interior: isolated points removed."""
        return self.nondegenerate()

    def is_subset(self, other: "IntervalSet", tol: float = 0.0) -> bool:
        return all(
            any(o.lo - tol <= iv.lo and iv.hi <= o.hi + tol for o in other.intervals)
            for iv in self.intervals
        )


def _check_ambient(a: IntervalSet, b: IntervalSet) -> float:
    if abs(a.ambient - b.ambient) > 1e-12 * max(1.0, a.ambient):
        raise ValueError(f"ambient bounds differ: {a.ambient} vs {b.ambient}")
    return a.ambient


def interval_union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return IntervalSet(a.intervals + b.intervals, _check_ambient(a, b))


def interval_intersection(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    ambient = _check_ambient(a, b)
    out = []
    i = j = 0
    x, y = a.intervals, b.intervals
    while i < len(x) and j < len(y):
        lo = max(x[i].lo, y[j].lo)
        hi = min(x[i].hi, y[j].hi)
        if lo <= hi:
            out.append(Interval(lo, hi))
        if x[i].hi < y[j].hi:
            i += 1
        else:
            j += 1
    return IntervalSet(tuple(out), ambient)


def interval_complement(a: IntervalSet, ambient: float | None = None, min_width: float = 0.0) -> IntervalSet:
    """Closures of the gaps of ``a`` in ``[0, ambient]``.

    Gaps narrower than ``min_width`` are dropped.
    """
    top = a.ambient if ambient is None else float(ambient)
    out = []
    cursor = 0.0
    for iv in a.intervals:
        if iv.lo > cursor:
            out.append(Interval(cursor, min(iv.lo, top)))
        cursor = max(cursor, iv.hi)
    if cursor < top:
        out.append(Interval(cursor, top))
    keep = tuple(iv for iv in out if iv.width > 0 and iv.width >= min_width)
    return IntervalSet(keep, top)


def kappa_reflect(s: IntervalSet) -> IntervalSet:
    """Image under ``x -> 2 - x``; only meaningful on ``[0, 2]``."""
    if abs(s.ambient - KAPPA_AMBIENT) > 1e-12:
        raise ValueError(f"kappa reflection needs ambient bound 2, got {s.ambient}")
    return IntervalSet(tuple(Interval(2.0 - iv.hi, 2.0 - iv.lo) for iv in s.intervals), s.ambient)
