"""Explicit simplicial complexes and exact reduced homology.

This is the ground truth the closed formulas are checked against: complexes
are enumerated exhaustively on small labeled vertex sets and their Betti
numbers come from exact ranks of the reduced boundary maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .compat import IntSeq
from .linalg import rank_mod_p, rank_rational

__all__ = [
    "SimplicialComplex",
    "BettiProfile",
    "from_facets",
    "parse_facets",
    "f_vector",
    "boundary_matrix",
    "reduced_betti",
    "cycle_space_dim",
    "enumerate_complexes",
    "count_complexes",
    "survey",
    "realize",
    "MAX_ENUM_VERTICES",
]

MAX_ENUM_VERTICES = 6

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of nonempty faces on vertices ``0 .. vertex_count-1``.

    Faces are sorted vertex tuples.  The empty face is implicit.
    """

    vertex_count: int
    faces: frozenset[Face]

    def __post_init__(self) -> None:
        faces = frozenset(tuple(sorted(face)) for face in self.faces)
        object.__setattr__(self, "faces", faces)
        for face in faces:
            if not face:
                raise ValueError("the empty face is implicit and must not be listed")
            if len(set(face)) != len(face):
                raise ValueError(f"repeated vertex in face {face}")
            if face[0] < 0 or face[-1] >= self.vertex_count:
                raise ValueError(f"face {face} uses a vertex outside [0, {self.vertex_count})")
            if len(face) > 1:
                for sub in combinations(face, len(face) - 1):
                    if sub not in faces:
                        raise ValueError(f"not downward closed: {sub} missing below {face}")

    @property
    def dimension(self) -> int:
        return max((len(face) for face in self.faces), default=0) - 1

    def simplices(self, dim: int) -> list[Face]:
        """Faces of dimension ``dim`` in lexicographic order; ``dim = -1`` gives the empty face."""
        if dim == -1:
            return [()]
        return sorted(face for face in self.faces if len(face) == dim + 1)

    def facets(self) -> list[Face]:
        maximal = [
            face
            for face in self.faces
            if not any(len(other) > len(face) and set(face) <= set(other) for other in self.faces)
        ]
        return sorted(maximal, key=lambda face: (len(face), face))

    def is_empty(self) -> bool:
        return not self.faces


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers and cycle-space dimensions over one field."""

    betti: IntSeq
    cycle_dims: tuple[int, ...]
    field_tag: str
    f: IntSeq

    def to_json(self) -> dict:
        return {
            "f": list(self.f),
            "betti": list(self.betti),
            "cycle_dims": list(self.cycle_dims),
            "field": self.field_tag,
        }


def from_facets(vertex_count: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of a facet list."""
    faces: set[Face] = set()
    for facet in facets:
        facet = tuple(sorted(set(int(v) for v in facet)))
        if not facet:
            raise ValueError("empty facet")
        bad = [v for v in facet if not 0 <= v < vertex_count]
        if bad:
            raise ValueError(f"vertex id {bad[0]} out of range [0, {vertex_count})")
        for size in range(1, len(facet) + 1):
            faces.update(combinations(facet, size))
    return SimplicialComplex(vertex_count, frozenset(faces))


def parse_facets(text: str) -> list[list[int]]:
    """Parse ``"0 1 2; 2 3"`` into ``[[0, 1, 2], [2, 3]]``."""
    facets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        facet = []
        for token in chunk.split():
            if not token.isdigit():
                raise ValueError(f"bad vertex id {token!r} in facet {chunk!r}")
            facet.append(int(token))
        facets.append(facet)
    return facets


def f_vector(c: SimplicialComplex) -> IntSeq:
    counts = [0] * (c.dimension + 1)
    for face in c.faces:
        counts[len(face) - 1] += 1
    return IntSeq(counts)


def boundary_matrix(c: SimplicialComplex, k: int) -> list[list[int]]:
    """Reduced boundary map from k-faces to (k-1)-faces (rows: k-1, columns: k).

    Deleting the j-th smallest vertex carries sign ``(-1)^j``; for ``k = 0``
    the target is the one-dimensional space of the empty face.
    """
    targets = c.simplices(k - 1)
    index = {face: i for i, face in enumerate(targets)}
    sources = c.simplices(k)
    matrix = [[0] * len(sources) for _ in targets]
    for col, face in enumerate(sources):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            matrix[index[sub]][col] = -1 if j % 2 else 1
    return matrix


def _field_tag(field) -> tuple[str, int | None]:
    if field in ("Q", "q", "QQ", None, 0):
        return "Q", None
    p = int(str(field).lstrip("Ff"))
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{field!r} does not name a prime field")
    return f"F{p}", p


def _rank(matrix: list[list[int]], p: int | None) -> int:
    if not matrix or not matrix[0]:
        return 0
    return rank_rational(matrix) if p is None else rank_mod_p(matrix, p)


def reduced_betti(c: SimplicialComplex, field="Q") -> BettiProfile:
    """Reduced Betti numbers over the rationals (``"Q"``) or a prime field (``2``, ``"F3"``, ...)."""
    if c.is_empty():
        raise ValueError("reduced Betti numbers need a nonempty complex")
    tag, p = _field_tag(field)
    top = c.dimension
    ranks = [_rank(boundary_matrix(c, k), p) for k in range(top + 1)] + [0]
    f = f_vector(c)
    cycles = tuple(f[k] - ranks[k] for k in range(top + 1))
    betti = IntSeq(cycles[k] - ranks[k + 1] for k in range(top + 1))
    return BettiProfile(betti, cycles, tag, f)


def cycle_space_dim(c: SimplicialComplex, k: int, field="Q") -> int:
    """Dimension of the kernel of the reduced boundary map on k-chains."""
    if c.is_empty():
        raise ValueError("cycle spaces need a nonempty complex")
    faces = c.simplices(k)
    if not faces:
        return 0
    _, p = _field_tag(field)
    return len(faces) - _rank(boundary_matrix(c, k), p)


def _check_bound(max_vertices: int) -> None:
    if max_vertices < 0:
        raise ValueError("vertex count must be natural")
    if max_vertices > MAX_ENUM_VERTICES:
        raise ValueError(
            f"enumeration is capped at {MAX_ENUM_VERTICES} vertices (asked for {max_vertices})"
        )


def _enumerate_masks(n: int) -> Iterator[list[int]]:
    # candidates of size >= 2 in (size, colex) order; colex == numeric order of masks
    candidates = sorted(
        (mask for mask in range(1 << n) if bin(mask).count("1") >= 2),
        key=lambda mask: (bin(mask).count("1"), mask),
    )
    facets_below = {
        mask: [mask & ~(1 << v) for v in range(n) if mask >> v & 1] for mask in candidates
    }
    chosen = set(1 << v for v in range(n))
    picked: list[int] = []

    def walk(i: int) -> Iterator[list[int]]:
        if i == len(candidates):
            yield picked
            return
        mask = candidates[i]
        if all(sub in chosen for sub in facets_below[mask]):
            chosen.add(mask)
            picked.append(mask)
            yield from walk(i + 1)
            picked.pop()
            chosen.discard(mask)
        yield from walk(i + 1)

    yield from walk(0)


def _mask_face(mask: int) -> Face:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def enumerate_complexes(max_vertices: int) -> Iterator[SimplicialComplex]:
    """Every complex whose vertex set is exactly ``0 .. max_vertices-1``, each once.

    Complexes using fewer labels show up at smaller vertex counts; union
    over ``1 .. N`` to cover all complexes on at most N vertices.
    """
    _check_bound(max_vertices)
    n = max_vertices
    if n == 0:
        return
    vertices = [(v,) for v in range(n)]
    for masks in _enumerate_masks(n):
        faces = frozenset(vertices + [_mask_face(mask) for mask in masks])
        yield SimplicialComplex(n, faces)


def count_complexes(n: int) -> int:
    _check_bound(n)
    if n == 0:
        return 0
    return sum(1 for _ in _enumerate_masks(n))


@dataclass(frozen=True)
class SurveyEntry:
    complex: SimplicialComplex
    f: IntSeq
    betti: IntSeq
    cycle_dims: tuple[int, ...]


@lru_cache(maxsize=None)
def survey(n: int, field="Q") -> tuple[SurveyEntry, ...]:
    """Enumerate complexes on exactly ``n`` vertices with their Betti data (cached, n <= 5)."""
    if n > 5:
        raise ValueError("survey keeps every complex in memory; use enumerate_complexes above 5 vertices")
    entries = []
    for c in enumerate_complexes(n):
        profile = reduced_betti(c, field)
        entries.append(SurveyEntry(c, profile.f, profile.betti, profile.cycle_dims))
    return tuple(entries)


def realize(
    f: Sequence[int], beta: Sequence[int], max_vertices: int = 5, field="Q"
) -> SimplicialComplex | None:
    """First enumerated complex with f-vector ``f`` and Betti sequence ``beta``, else None."""
    _check_bound(max_vertices)
    f, beta = IntSeq(f), IntSeq(beta)
    n = f[0]
    if n == 0 or n > max_vertices:
        return None
    if n <= 5:
        for entry in survey(n, field if field != "q" else "Q"):
            if entry.f == f and entry.betti == beta:
                return entry.complex
        return None
    for c in enumerate_complexes(n):
        if f_vector(c) == f and reduced_betti(c, field).betti == beta:
            return c
    return None
