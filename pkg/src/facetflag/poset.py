"""Graded face posets with an implicit minimal element.

A :class:`RankedPoset` stores its elements with ranks ``>= 1`` and the cover
relation between consecutive ranks. The minimal element is never stored;
:data:`BOTTOM` stands for it wherever an interval needs it. Ranks count
dimension plus one, so vertices sit at rank 1.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable

import networkx as nx

__all__ = [
    "BOTTOM",
    "PosetError",
    "PosetParseError",
    "PreconditionError",
    "RankedPoset",
    "Interval",
    "from_covers",
    "interval",
    "is_pure",
    "is_boolean_interval",
    "is_simplicial_poset",
    "is_simplicial_complex",
    "is_simple_facet",
    "facets_isomorphic_as_lattices",
    "truncate",
    "disjoint_union",
    "parse_poset",
    "format_poset",
    "element_token",
]


class _Bottom:
    __slots__ = ()

    def __repr__(self):
        return "0̂"


BOTTOM = _Bottom()


class PosetError(ValueError):
    """Structural validation failure."""


class PosetParseError(PosetError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PreconditionError(ValueError):
    """An operation was called on input outside its contract."""


class RankedPoset:
    """Immutable graded poset above an implicit ``0̂``.

    Reachability is derived from the covers. :meth:`relation` composes
    covers one rank at a time and caches the result per rank pair;
    :meth:`up_set` and :meth:`down_set` walk the Hasse diagram directly.
    Caches only ever receive recomputed-equal values, so concurrent readers
    are harmless.
    """

    def __init__(self, ranks: dict[Hashable, int], covers: Iterable[tuple[Hashable, Hashable]]):
        self._rank = dict(ranks)
        up = defaultdict(set)
        down = defaultdict(set)
        for lo, hi in covers:
            up[lo].add(hi)
            down[hi].add(lo)
        self._up = {x: frozenset(up.get(x, ())) for x in self._rank}
        self._down = {x: frozenset(down.get(x, ())) for x in self._rank}
        by_rank = defaultdict(list)
        for x, r in self._rank.items():
            by_rank[r].append(x)
        self._by_rank = {r: tuple(xs) for r, xs in by_rank.items()}
        self.max_rank = max(self._rank.values(), default=0)
        self._relation_cache: dict[tuple[int, int], dict] = {}
        self._up_cache: dict = {}
        self._down_cache: dict = {}
        self._boolean_cache: dict = {}

    # basic access

    def __len__(self):
        return len(self._rank)

    def __contains__(self, x):
        return x in self._rank

    def __iter__(self):
        return iter(self._rank)

    def __repr__(self):
        return f"RankedPoset({len(self)} elements, max_rank={self.max_rank})"

    @property
    def elements(self) -> list[tuple[Hashable, int]]:
        return list(self._rank.items())

    @property
    def covers(self) -> list[tuple[Hashable, Hashable]]:
        return [(lo, hi) for lo, his in self._up.items() for hi in his]

    def rank(self, x) -> int:
        if x is BOTTOM:
            return 0
        return self._rank[x]

    def of_rank(self, r: int) -> tuple:
        """Elements of rank ``r`` in insertion order."""
        return self._by_rank.get(r, ())

    def upper_covers(self, x) -> frozenset:
        if x is BOTTOM:
            return frozenset(self.of_rank(1))
        return self._up[x]

    def lower_covers(self, x) -> frozenset:
        return self._down[x]

    def maximal_elements(self) -> list:
        return [x for x in self._rank if not self._up[x]]

    # order relation

    def up_set(self, x) -> frozenset:
        """Elements strictly above ``x``, found by depth-first search."""
        if x is BOTTOM:
            return frozenset(self._rank)
        cached = self._up_cache.get(x)
        if cached is None:
            cached = frozenset(_reach(x, self._up))
            self._up_cache[x] = cached
        return cached

    def down_set(self, x) -> frozenset:
        """Elements strictly below ``x``, excluding ``0̂``."""
        cached = self._down_cache.get(x)
        if cached is None:
            cached = frozenset(_reach(x, self._down))
            self._down_cache[x] = cached
        return cached

    def leq(self, x, y) -> bool:
        if x is BOTTOM or x == y:
            return True
        if y is BOTTOM:
            return False
        return self.rank(x) < self.rank(y) and y in self.up_set(x)

    def relation(self, lo_rank: int, hi_rank: int) -> dict:
        """Map each rank-``lo_rank`` element to the rank-``hi_rank`` elements above it.

        Built by composing the cover relation rank by rank.
        """
        if hi_rank < lo_rank:
            raise ValueError("hi_rank must be >= lo_rank")
        key = (lo_rank, hi_rank)
        cached = self._relation_cache.get(key)
        if cached is not None:
            return cached
        if hi_rank == lo_rank:
            rel = {x: frozenset((x,)) for x in self.of_rank(lo_rank)}
        else:
            below = self.relation(lo_rank, hi_rank - 1)
            rel = {}
            for x, mids in below.items():
                tops = set()
                for m in mids:
                    tops |= self._up[m]
                rel[x] = frozenset(tops)
        self._relation_cache[key] = rel
        return rel


def _reach(x, adjacency) -> set:
    seen = set()
    stack = list(adjacency[x])
    while stack:
        y = stack.pop()
        if y not in seen:
            seen.add(y)
            stack.extend(adjacency[y])
    return seen


def from_covers(elements: Iterable[tuple[Hashable, int]], covers: Iterable[tuple[Hashable, Hashable]]) -> RankedPoset:
    """Validate and build a poset from ``(id, rank)`` pairs and ``(lower, upper)`` covers.

    Every cover must climb exactly one rank, and every element above rank 1
    must cover something (otherwise its chain down to ``0̂`` skips ranks).
    """
    ranks: dict = {}
    for x, r in elements:
        if x in ranks:
            raise PosetError(f"duplicate element id {x!r}")
        if not isinstance(r, int) or r < 1:
            raise PosetError(f"element {x!r} has rank {r!r}; ranks start at 1")
        ranks[x] = r
    cover_list = []
    for lo, hi in covers:
        for end in (lo, hi):
            if end not in ranks:
                raise PosetError(f"cover ({lo!r}, {hi!r}) references unknown element {end!r}")
        if ranks[hi] != ranks[lo] + 1:
            raise PosetError(
                f"cover ({lo!r}, {hi!r}) must go up one rank, got {ranks[lo]} -> {ranks[hi]}"
            )
        cover_list.append((lo, hi))
    p = RankedPoset(ranks, cover_list)
    for x, r in ranks.items():
        if r > 1 and not p.lower_covers(x):
            raise PosetError(f"element {x!r} of rank {r} covers nothing")
    return p


@dataclass(frozen=True)
class Interval:
    bottom: Hashable
    top: Hashable
    members: frozenset
    span: int


def interval(p: RankedPoset, bottom, top) -> Interval:
    """The closed interval ``[bottom, top]``; ``bottom`` may be :data:`BOTTOM`."""
    if not p.leq(bottom, top):
        raise PreconditionError(f"{bottom!r} is not below {top!r}")
    if bottom is BOTTOM:
        members = p.down_set(top) | {top, BOTTOM}
    else:
        members = (p.up_set(bottom) & p.down_set(top)) | {bottom, top}
    return Interval(bottom, top, frozenset(members), p.rank(top) - p.rank(bottom))


def is_pure(p: RankedPoset) -> bool:
    return all(p.rank(x) == p.max_rank for x in p.maximal_elements())


def _atom_map(p: RankedPoset, iv: Interval) -> tuple[dict, list]:
    base = p.rank(iv.bottom)
    atoms = frozenset(z for z in iv.members if z is not BOTTOM and p.rank(z) == base + 1)
    sets = {z: atoms & (p.down_set(z) | {z}) if z is not BOTTOM else frozenset() for z in iv.members}
    return sets, atoms


def _lower_in(p: RankedPoset, z, members: frozenset) -> frozenset:
    below = p.lower_covers(z) if p.rank(z) > 1 else frozenset({BOTTOM})
    return below & members


def is_boolean_interval(p: RankedPoset, bottom, top) -> bool:
    """Whether ``[bottom, top]`` is isomorphic to the subset lattice of its atoms.

    Each member is sent to the set of atoms below it. The interval is boolean
    iff there are ``span`` atoms, the map is a bijection onto all subsets,
    and covers go exactly to single-atom removals. Results are cached on
    the poset.
    """
    key = (bottom, top)
    cached = p._boolean_cache.get(key)
    if cached is None:
        cached = _boolean(p, bottom, top)
        p._boolean_cache[key] = cached
    return cached


def _boolean(p: RankedPoset, bottom, top) -> bool:
    iv = interval(p, bottom, top)
    t = iv.span
    if len(iv.members) != 1 << t:
        return False
    atom_sets, atoms = _atom_map(p, iv)
    if len(atoms) != t:
        return False
    if len(set(atom_sets.values())) != len(atom_sets):
        return False
    # injective into a set of size 2**t with 2**t members: surjective too.
    # Matching Hasse diagrams then give matching orders, since intervals are convex.
    for z in iv.members:
        if z == bottom:
            continue
        s = atom_sets[z]
        lower = {atom_sets[y] for y in _lower_in(p, z, iv.members)}
        if lower != {s - {a} for a in s}:
            return False
    return True


def is_simplicial_poset(p: RankedPoset) -> bool:
    """Every lower interval ``[0̂, x]`` is boolean."""
    # cheap necessary check before the full test
    for x, r in p.elements:
        if len(p.lower_covers(x)) != (r if r > 1 else 0):
            return False
    return all(is_boolean_interval(p, BOTTOM, x) for x in p)


def is_simplicial_complex(p: RankedPoset) -> bool:
    """A simplicial poset whose faces are determined by their vertex sets."""
    if not is_simplicial_poset(p):
        return False
    seen = set()
    for x in p:
        verts = frozenset(v for v in p.down_set(x) if p.rank(v) == 1) if p.rank(x) > 1 else frozenset((x,))
        if verts in seen:
            return False
        seen.add(verts)
    return True


def is_simple_facet(p: RankedPoset, facet) -> bool:
    """Every upper interval ``[x, facet]`` with ``x != 0̂`` is boolean."""
    if facet not in p or p.upper_covers(facet):
        raise PreconditionError(f"{facet!r} is not a maximal element")
    return all(is_boolean_interval(p, x, facet) for x in p.down_set(facet) | {facet})


def _hasse_digraph(p: RankedPoset, top) -> nx.DiGraph:
    g = nx.DiGraph()
    members = p.down_set(top) | {top}
    for x in members:
        g.add_node(x, rank=p.rank(x))
    for x in members:
        for y in p.lower_covers(x):
            g.add_edge(y, x)
    return g


def facets_isomorphic_as_lattices(p: RankedPoset) -> bool:
    """Whether all lower intervals below maximal elements are isomorphic graded posets."""
    facets = p.maximal_elements()
    if len(facets) < 2:
        return True
    graphs = [_hasse_digraph(p, f) for f in facets]
    first = graphs[0]
    same_rank = lambda a, b: a["rank"] == b["rank"]  # noqa: E731
    for g in graphs[1:]:
        if g.number_of_nodes() != first.number_of_nodes() or g.number_of_edges() != first.number_of_edges():
            return False
        if not nx.is_isomorphic(first, g, node_match=same_rank):
            return False
    return True


def truncate(p: RankedPoset, r: int) -> RankedPoset:
    """Drop every element above rank ``r``."""
    keep = {x: rk for x, rk in p.elements if rk <= r}
    return RankedPoset(keep, [(lo, hi) for lo, hi in p.covers if hi in keep])


def disjoint_union(*posets: RankedPoset) -> RankedPoset:
    """Side-by-side union; ids become ``(index, id)`` pairs."""
    ranks = {}
    covers = []
    for i, q in enumerate(posets):
        ranks.update({(i, x): r for x, r in q.elements})
        covers.extend(((i, lo), (i, hi)) for lo, hi in q.covers)
    return RankedPoset(ranks, covers)


# text format

_TOKEN = re.compile(r"^[\x21-\x7e]+$")


def parse_poset(text: str) -> RankedPoset:
    """Read ``elem <id> <rank>`` / ``cover <lower> <upper>`` records."""
    elements = []
    covers = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "elem":
            if len(fields) != 3:
                raise PosetParseError("expected 'elem <id> <rank>'", lineno)
            try:
                r = int(fields[2])
            except ValueError:
                raise PosetParseError(f"rank {fields[2]!r} is not an integer", lineno) from None
            if r < 1:
                raise PosetParseError(f"rank must be >= 1, got {r}", lineno)
            if fields[1] in seen:
                raise PosetParseError(f"duplicate element id {fields[1]!r}", lineno)
            seen[fields[1]] = r
            elements.append((fields[1], r))
        elif kind == "cover":
            if len(fields) != 3:
                raise PosetParseError("expected 'cover <lower-id> <upper-id>'", lineno)
            lo, hi = fields[1], fields[2]
            for end in (lo, hi):
                if end not in seen:
                    raise PosetParseError(f"unknown element {end!r}", lineno)
            if seen[hi] != seen[lo] + 1:
                raise PosetParseError(
                    f"cover {lo} -> {hi} must go up one rank, got {seen[lo]} -> {seen[hi]}", lineno
                )
            covers.append((lo, hi))
        else:
            raise PosetParseError(f"unknown record type {kind!r}", lineno)
    return from_covers(elements, covers)


def element_token(x) -> str:
    if isinstance(x, (frozenset, set)):
        tok = ",".join(sorted(map(str, x), key=_natural_key))
    elif isinstance(x, tuple):
        tok = ":".join(element_token(part) for part in x)
    else:
        tok = str(x)
    if not _TOKEN.match(tok):
        raise ValueError(f"cannot render element id {x!r} as a whitespace-free token")
    return tok


def _natural_key(s: str):
    try:
        return (0, int(s), s)
    except ValueError:
        return (1, 0, s)


def format_poset(p: RankedPoset) -> str:
    """Render ``p`` in the ``elem``/``cover`` text format, ordered by rank."""
    names = {x: element_token(x) for x in p}
    if len(set(names.values())) != len(names):
        raise ValueError("element ids collide after rendering")
    lines = [f"# ranked poset: {len(p)} elements, max rank {p.max_rank}"]
    for r in range(1, p.max_rank + 1):
        for x in sorted(p.of_rank(r), key=lambda x: _natural_key(names[x])):
            lines.append(f"elem {names[x]} {r}")
    for r in range(2, p.max_rank + 1):
        rows = []
        for hi in p.of_rank(r):
            for lo in p.lower_covers(hi):
                rows.append((names[lo], names[hi]))
        rows.sort(key=lambda t: (_natural_key(t[0]), _natural_key(t[1])))
        lines.extend(f"cover {lo} {hi}" for lo, hi in rows)
    return "\n".join(lines) + "\n"
