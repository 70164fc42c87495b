"""Face-to-flag degrees, f-vectors and flag f-vectors.

For a pure poset of rank ``k`` and a composition ``c`` of ``k``, the degree
of a face ``F`` of rank ``c.first`` is the number of chains
``F < X2 < ... < Xm`` with ``rank(Xj) = c1 + ... + cj``. Three routes
compute it:

* :func:`degree_sequence` - backward dynamic programming over the
  prescribed ranks, using the cached rank-to-rank relation;
* :func:`degree_sequence_simplicial` - facet degree times a multinomial,
  valid when every upper interval ``[F, facet]`` is boolean;
* :func:`degree_sequence_naive` - explicit depth-first enumeration of every
  chain, for testing the other two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .poset import PreconditionError, RankedPoset, is_boolean_interval, is_pure
from .seqcore import Composition, DegreeSequence, multinomial

__all__ = [
    "FVector",
    "FlagFVector",
    "degree_of_face",
    "face_degrees",
    "degree_sequence",
    "degree_sequence_simplicial",
    "degree_sequence_naive",
    "f_vector",
    "flag_f",
    "flag_f_vector",
    "sequence_json",
]


@dataclass(frozen=True)
class FVector:
    counts: Mapping[int, int]

    def __getitem__(self, r: int) -> int:
        return self.counts.get(r, 0)

    def as_tuple(self) -> tuple[int, ...]:
        top = max(self.counts, default=0)
        return tuple(self.counts.get(r, 0) for r in range(1, top + 1))

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class FlagFVector:
    """Chain counts keyed by the strictly increasing tuple of ranks they hit."""

    entries: Mapping[tuple[int, ...], int]

    def __getitem__(self, ranks: tuple[int, ...]) -> int:
        return self.entries[tuple(ranks)]


def _as_composition(c) -> Composition:
    return c if isinstance(c, Composition) else Composition(tuple(c))


def _check(p: RankedPoset, c: Composition) -> None:
    if c.total != p.max_rank:
        raise PreconditionError(
            f"composition {c} sums to {c.total} but the poset has rank {p.max_rank}; flags must end at the top rank"
        )
    if not is_pure(p):
        raise PreconditionError("face-to-flag degrees are only defined for pure posets")


def _chain_weights(p: RankedPoset, ranks: tuple[int, ...]) -> dict[Hashable, int]:
    """For each element of rank ``ranks[0]``, the number of chains above it through ``ranks[1:]``."""
    weight = {x: 1 for x in p.of_rank(ranks[-1])}
    for lo, hi in zip(reversed(ranks[:-1]), reversed(ranks[1:])):
        rel = p.relation(lo, hi)
        weight = {x: sum(weight[y] for y in above) for x, above in rel.items()}
    return weight


def face_degrees(p: RankedPoset, c) -> dict[Hashable, int]:
    """Degree of every rank-``c.first`` face, keyed by face id."""
    c = _as_composition(c)
    _check(p, c)
    return _chain_weights(p, c.ranks())


def degree_of_face(p: RankedPoset, face, c) -> int:
    c = _as_composition(c)
    _check(p, c)
    if face not in p:
        raise PreconditionError(f"unknown face {face!r}")
    if p.rank(face) != c.first:
        raise PreconditionError(f"face {face!r} has rank {p.rank(face)}, composition starts at {c.first}")
    return _chain_weights(p, c.ranks())[face]


def degree_sequence(p: RankedPoset, c) -> DegreeSequence:
    return DegreeSequence.from_values(face_degrees(p, c).values())


def degree_sequence_simplicial(p: RankedPoset, c, check: bool = False) -> DegreeSequence:
    """Facet degree of each rank-``c.first`` face times ``multinomial(k - c.first, c[1:])``.

    Only valid when every interval ``[F, H]`` with ``rank(F) = c.first`` and
    ``rank(H) = k`` is boolean. Pass ``check=True`` to verify that first.
    """
    c = _as_composition(c)
    _check(p, c)
    k = c.total
    rel = p.relation(c.first, k)
    if check:
        for face, facets in rel.items():
            for h in facets:
                if not is_boolean_interval(p, face, h):
                    raise PreconditionError(f"interval [{face!r}, {h!r}] is not boolean")
    factor = multinomial(k - c.first, c.parts[1:])
    return DegreeSequence.from_values(len(facets) * factor for facets in rel.values())


def _chains_from(p: RankedPoset, x, targets: tuple[int, ...]):
    if not targets:
        yield (x,)
        return
    nxt = targets[0]
    for y in p.up_set(x):
        if p.rank(y) == nxt:
            for tail in _chains_from(p, y, targets[1:]):
                yield (x,) + tail


def degree_sequence_naive(p: RankedPoset, c) -> DegreeSequence:
    """Count chains one at a time by depth-first search over up-sets."""
    c = _as_composition(c)
    _check(p, c)
    ranks = c.ranks()
    counts = []
    for face in p.of_rank(c.first):
        counts.append(sum(1 for _ in _chains_from(p, face, ranks[1:])))
    return DegreeSequence.from_values(counts)


def f_vector(p: RankedPoset) -> FVector:
    return FVector({r: len(p.of_rank(r)) for r in range(1, p.max_rank + 1)})


def flag_f(p: RankedPoset, ranks: Iterable[int]) -> int:
    """Number of chains whose elements have exactly the given ranks."""
    ranks = tuple(ranks)
    if not ranks:
        raise PreconditionError("rank tuple must be nonempty")
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise PreconditionError(f"ranks {ranks} must be strictly increasing")
    if ranks[0] < 1 or ranks[-1] > p.max_rank:
        raise PreconditionError(f"ranks {ranks} outside 1..{p.max_rank}")
    return sum(_chain_weights(p, ranks).values())


def flag_f_vector(p: RankedPoset) -> FlagFVector:
    """Every entry of the flag f-vector, keyed by nonempty rank subsets."""
    k = p.max_rank
    entries = {}
    for size in range(1, k + 1):
        for ranks in combinations(range(1, k + 1), size):
            entries[ranks] = flag_f(p, ranks)
    return FlagFVector(entries)


def sequence_json(c, d: DegreeSequence) -> dict:
    """The ``{"composition", "sequence", "sum"}`` record used for JSON output."""
    c = _as_composition(c)
    return {"composition": list(c.parts), "sequence": list(d.entries), "sum": d.sum}
