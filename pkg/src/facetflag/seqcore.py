"""Integer-sequence combinatorics: compositions, multinomials, conjugation
and the (weak) majorization order.

Everything here is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Composition",
    "DegreeSequence",
    "Verdict",
    "MajorizationRelation",
    "multinomial",
    "conjugate",
    "compare",
    "permutations_of",
    "compositions_of",
]


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered tuple of positive rank jumps; ``total`` is the rank they reach."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Composition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Composition:
        """Parse ``"1,1,2"``."""
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"bad composition {text!r}: expected comma-separated integers") from None
        return cls(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0]

    def ranks(self) -> tuple[int, ...]:
        """Ranks visited by a flag with these jumps (the partial sums)."""
        return tuple(accumulate(self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing sequence of nonnegative integers.

    Use :meth:`from_values` to sort arbitrary input; the constructor
    insists on already sorted entries.
    """

    entries: tuple[int, ...]
    sum: int = field(init=False, compare=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"degree entries must be nonnegative integers, got {x!r}")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise ValueError("degree sequence entries must be non-increasing")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "sum", sum(entries))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> DegreeSequence:
        return cls(tuple(sorted(values, reverse=True)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


class Verdict(enum.Enum):
    EQUAL = "Equal"
    MAJORIZES = "Majorizes"
    MAJORIZED_BY = "MajorizedBy"
    WEAKLY_MAJORIZES = "WeaklyMajorizes"
    WEAKLY_MAJORIZED_BY = "WeaklyMajorizedBy"
    INCOMPARABLE = "Incomparable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MajorizationRelation:
    """Outcome of :func:`compare`.

    ``first_violation`` is the smallest prefix length ``r`` at which the
    first argument's partial sum falls below the second's, or ``None`` when
    the first argument dominates every prefix.
    """

    verdict: Verdict
    first_violation: int | None = None

    @property
    def dominates(self) -> bool:
        """True when ``a`` (weakly) majorizes ``b`` or equals it."""
        return self.verdict in (Verdict.EQUAL, Verdict.MAJORIZES, Verdict.WEAKLY_MAJORIZES)


def _as_tuple(d) -> tuple[int, ...]:
    if isinstance(d, DegreeSequence):
        return d.entries
    return tuple(d)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """``n! / (p1! p2! ...)`` for parts summing to exactly ``n``."""
    parts = tuple(parts)
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial arguments must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, expected {n}")
    result = 1
    remaining = n
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


def conjugate(d) -> DegreeSequence:
    """Partition transpose: entry ``i`` counts the entries of ``d`` that are ``>= i``."""
    entries = _as_tuple(d)
    if not entries:
        return DegreeSequence(())
    top = max(entries)
    return DegreeSequence(tuple(sum(1 for x in entries if x >= i) for i in range(1, top + 1)))


def compare(a, b) -> MajorizationRelation:
    """Decide how ``a`` and ``b`` sit in the (weak) majorization order.

    Sequences of different length are zero-padded. Prefix sums are compared
    in both directions over the padded length; totals decide between strict
    and weak majorization.
    """
    xs = _as_tuple(a)
    ys = _as_tuple(b)
    padded = list(zip_longest(xs, ys, fillvalue=0))
    if all(x == y for x, y in padded):
        return MajorizationRelation(Verdict.EQUAL)

    a_violation = b_violation = None
    pa = pb = 0
    for r, (x, y) in enumerate(padded, start=1):
        pa += x
        pb += y
        if a_violation is None and pa < pb:
            a_violation = r
        if b_violation is None and pb < pa:
            b_violation = r

    # the last padded prefix is the total, so domination already orders the sums
    if a_violation is None:
        verdict = Verdict.MAJORIZES if pa == pb else Verdict.WEAKLY_MAJORIZES
        return MajorizationRelation(verdict)
    if b_violation is None:
        verdict = Verdict.MAJORIZED_BY if pa == pb else Verdict.WEAKLY_MAJORIZED_BY
        return MajorizationRelation(verdict, a_violation)
    return MajorizationRelation(Verdict.INCOMPARABLE, a_violation)


def _next_permutation(seq: list[int]) -> bool:
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1:] = reversed(seq[i + 1:])
    return True


def permutations_of(c: Composition | Sequence[int]) -> list[Composition]:
    """Distinct orderings of the parts of ``c``, in lexicographic order."""
    parts = sorted(c.parts if isinstance(c, Composition) else c)
    out = [Composition(tuple(parts))]
    while _next_permutation(parts):
        out.append(Composition(tuple(parts)))
    return out


def compositions_of(k: int) -> list[Composition]:
    """All ``2**(k-1)`` compositions of ``k``, coarsest first.

    Bit ``j`` of the mask places a cut after position ``j + 1``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = []
    for mask in range(1 << (k - 1)):
        parts = []
        run = 1
        for j in range(k - 1):
            if mask >> j & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(tuple(parts)))
    out.sort(key=lambda c: (len(c), [-p for p in c.parts]))
    return out
