"""Builders for face posets: simplicial complexes from facet lists, solid
cross-polytopes and cubes, cubical grids, and seeded random pure complexes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Hashable, Iterable

from .poset import PosetParseError, PreconditionError, RankedPoset, from_covers

__all__ = [
    "FacetList",
    "facets_to_poset",
    "gen_complete_complex",
    "gen_simplex",
    "gen_cross_polytope_solid",
    "gen_hypercube_solid",
    "gen_cubical_grid",
    "gen_random_pure",
    "parse_facets",
    "format_facets",
]


def _vertex_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


@dataclass(frozen=True)
class FacetList:
    """Maximal faces of a simplicial complex.

    Build with :meth:`normalize`, which drops duplicates and facets contained
    in other facets.
    """

    facets: tuple[frozenset, ...]

    @classmethod
    def normalize(cls, facets: Iterable[Iterable[Hashable]]) -> FacetList:
        sets = {frozenset(f) for f in facets}
        if frozenset() in sets:
            raise ValueError("facets must be nonempty")
        maximal = [f for f in sets if not any(f < g for g in sets)]
        maximal.sort(key=lambda f: (-len(f), sorted(map(_vertex_key, f))))
        return cls(tuple(maximal))

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)


def facets_to_poset(f: FacetList | Iterable[Iterable[Hashable]]) -> RankedPoset:
    """Face poset of the complex generated by ``f``; ids are vertex frozensets."""
    if not isinstance(f, FacetList):
        f = FacetList.normalize(f)
    faces = set()
    for facet in f:
        members = sorted(facet, key=_vertex_key)
        for size in range(1, len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, size))
    ordered = sorted(faces, key=lambda s: (len(s), sorted(map(_vertex_key, s))))
    covers = [(face - {v}, face) for face in ordered if len(face) > 1 for v in face]
    return from_covers(((face, len(face)) for face in ordered), covers)


def gen_complete_complex(n: int, k: int) -> FacetList:
    """All ``k``-subsets of ``{1..n}``."""
    if not 1 <= k <= n:
        raise PreconditionError(f"need 1 <= k <= n, got n={n}, k={k}")
    return FacetList(tuple(frozenset(c) for c in combinations(range(1, n + 1), k)))


def gen_simplex(k: int) -> FacetList:
    """A single facet with ``k`` vertices (rank ``k``)."""
    return gen_complete_complex(k, k)


def _solid(faces_by_rank: dict[int, list], cover_pairs, top_rank: int) -> RankedPoset:
    elements = [(x, r) for r in sorted(faces_by_rank) for x in faces_by_rank[r]]
    elements.append(("top", top_rank))
    covers = list(cover_pairs)
    covers.extend((x, "top") for x in faces_by_rank.get(top_rank - 1, ()))
    return from_covers(elements, covers)


def gen_cross_polytope_solid(d: int) -> RankedPoset:
    """Face lattice of the ``d``-dimensional cross-polytope, top included.

    Proper faces are nonempty sets of signed coordinates ``±1..±d`` with no
    antipodal pair; the polytope itself is the element ``"top"`` of rank
    ``d + 1``.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    faces: dict[int, list] = {}
    for size in range(1, d + 1):
        row = []
        for axes in combinations(range(1, d + 1), size):
            for signs in product((1, -1), repeat=size):
                row.append(frozenset(s * a for s, a in zip(signs, axes)))
        faces[size] = row
    covers = [(face - {v}, face) for size in range(2, d + 1) for face in faces[size] for v in face]
    return _solid(faces, covers, d + 1)


def gen_hypercube_solid(d: int) -> RankedPoset:
    """Face lattice of the ``d``-cube, top included.

    Faces are words over ``0``, ``1``, ``*``; a word with ``j`` stars has
    rank ``j + 1`` and the all-star word is the top.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    words = ["".join(w) for w in product("01*", repeat=d)]
    elements = [(w, w.count("*") + 1) for w in words]
    covers = []
    for w in words:
        for i, ch in enumerate(w):
            if ch == "*":
                covers.append((w[:i] + "0" + w[i + 1:], w))
                covers.append((w[:i] + "1" + w[i + 1:], w))
    elements.sort(key=lambda e: (e[1], e[0]))
    return from_covers(elements, covers)


def gen_cubical_grid(shape: Iterable[int]) -> RankedPoset:
    """Cubical complex of the box ``[0,n1] x ... x [0,nd]`` cut into unit cubes.

    Each unit cube is a maximal element of rank ``d + 1``; ``(2, 1, 1)`` gives
    two solid 3-cubes glued along a square. A face id lists one coordinate
    per axis, ``a`` for a point or ``a-b`` for a unit step, e.g. ``"0-1,1,0-1"``.
    """
    shape = tuple(shape)
    if not shape or any(n < 1 for n in shape):
        raise PreconditionError(f"grid shape must be nonempty positive integers, got {shape}")
    axis_choices = [[(a,) for a in range(n + 1)] + [(a, a + 1) for a in range(n)] for n in shape]

    def name(face):
        return ",".join("-".join(map(str, c)) for c in face)

    elements = []
    covers = []
    for face in product(*axis_choices):
        steps = [i for i, c in enumerate(face) if len(c) == 2]
        elements.append((name(face), len(steps) + 1))
        for i in steps:
            for end in face[i]:
                covers.append((name(face[:i] + ((end,),) + face[i + 1:]), name(face)))
    elements.sort(key=lambda e: e[1])
    return from_covers(elements, covers)


def gen_random_pure(n: int, k: int, m: int, seed: int) -> FacetList:
    """``m`` distinct ``k``-subsets of ``{1..n}`` drawn uniformly without replacement."""
    if not 1 <= k <= n:
        raise PreconditionError(f"need 1 <= k <= n, got n={n}, k={k}")
    if not 1 <= m <= math.comb(n, k):
        raise PreconditionError(f"m={m} outside 1..C({n},{k})={math.comb(n, k)}")
    rng = random.Random(seed)
    pool = list(combinations(range(1, n + 1), k))
    chosen = sorted(rng.sample(pool, m))
    return FacetList(tuple(frozenset(c) for c in chosen))


def parse_facets(text: str) -> FacetList:
    """One facet per line, whitespace-separated vertex ids, ``#`` comments.

    Integer-looking ids become ints so that facets sort numerically.
    """
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        verts = []
        for tok in line.split():
            try:
                verts.append(int(tok))
            except ValueError:
                verts.append(tok)
        if len(set(verts)) != len(verts):
            raise PosetParseError(f"repeated vertex in facet {line!r}", lineno)
        facets.append(verts)
    return FacetList.normalize(facets)


def format_facets(f: FacetList) -> str:
    lines = [f"# {len(f)} facets"]
    for facet in f:
        lines.append(" ".join(str(v) for v in sorted(facet, key=_vertex_key)))
    return "\n".join(lines) + "\n"
