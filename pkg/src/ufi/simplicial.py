"""Abstract simplicial complexes on labelled vertices, with faces stored as bitmasks.

A complex is determined by its vertex label tuple and its facet bitmasks.  The
canonical face order everywhere is (cardinality, mask); all derived data (face
lists, f-vectors, minimal non-faces) is deterministic.  The void complex (no
faces at all) is representable as ``facets == ()`` but is rejected by every
operation that needs an actual complex; the irrelevant complex ``⟨∅⟩`` has the
single facet ``0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import DEFAULT_GUARDS, Guards, InputError

FVector = tuple  # (1, f_0, ..., f_dim)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def _submasks(m: int):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def face_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (_popcount(mask), _bits(mask))


class SimplicialComplex:
    """An abstract simplicial complex with ordered, labelled vertices."""

    def __init__(
        self,
        vertices: Sequence[str],
        facet_masks: Iterable[int],
        *,
        allow_uncovered: bool = False,
    ):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError(f"duplicate vertex labels in {vertices!r}")
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise InputError(f"vertex labels must be nonempty strings, got {v!r}")
        universe = (1 << len(vertices)) - 1
        masks = set()
        for m in facet_masks:
            if m < 0 or m & ~universe:
                raise InputError("facet mentions a vertex outside the label list")
            masks.add(m)
        # drop non-maximal faces
        facets = tuple(
            sorted(
                (m for m in masks if not any(m != o and m & o == m for o in masks)),
                key=face_sort_key,
            )
        )
        covered = 0
        for m in facets:
            covered |= m
        if not allow_uncovered and covered != universe:
            missing = [vertices[i] for i in _bits(universe & ~covered)]
            raise InputError(
                f"vertices {missing} appear in no facet; list them as singleton facets "
                "or omit them"
            )
        self.vertices = vertices
        self.facets = facets

    # -- construction -------------------------------------------------------

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Iterable[str] | str],
        vertices: Sequence[str] | None = None,
        *,
        allow_uncovered: bool = False,
        guards: Guards = DEFAULT_GUARDS,
    ) -> "SimplicialComplex":
        """Build a complex from facet token lists (a string means its characters)."""
        facet_tokens = [list(f) for f in facets]
        if vertices is None:
            seen: list[str] = []
            for f in facet_tokens:
                for v in f:
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        guards.check_vertices(len(vertices))
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise InputError(f"duplicate vertex labels in {vertices!r}")
        masks = []
        for f in facet_tokens:
            m = 0
            for v in f:
                if v not in pos:
                    raise InputError(f"facet vertex {v!r} not among {tuple(vertices)!r}")
                if m >> pos[v] & 1:
                    raise InputError(f"facet {f!r} repeats vertex {v!r}")
                m |= 1 << pos[v]
            masks.append(m)
        return cls(vertices, masks, allow_uncovered=allow_uncovered)

    # -- basic structure -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def _require_nonvoid(self) -> None:
        if self.is_void:
            raise InputError("operation undefined for the void complex")

    @property
    def dim(self) -> int:
        self._require_nonvoid()
        return _popcount(self.facets[-1]) - 1

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """All faces in canonical order (the empty face first)."""
        out: set[int] = set()
        for f in self.facets:
            out.update(_submasks(f))
        return tuple(sorted(out, key=face_sort_key))

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(self.faces)

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    @cached_property
    def f_vector(self) -> FVector:
        self._require_nonvoid()
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[_popcount(f)] += 1
        return tuple(counts)

    # -- labels <-> masks ----------------------------------------------------

    def parse_face(self, tokens: Iterable[str] | str) -> int:
        pos = {v: i for i, v in enumerate(self.vertices)}
        m = 0
        for v in tokens:
            if v not in pos:
                raise InputError(f"unknown vertex {v!r}")
            m |= 1 << pos[v]
        return m

    def face_tokens(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))

    def format_face(self, mask: int) -> str:
        toks = self.face_tokens(mask)
        if not toks:
            return "{}"
        sep = "" if all(len(v) == 1 for v in self.vertices) else ","
        return sep.join(toks)

    # -- derived complexes ---------------------------------------------------

    def link(self, face_mask: int) -> "SimplicialComplex":
        self._require_nonvoid()
        if not self.has_face(face_mask):
            raise InputError(f"link of a non-face {self.format_face(face_mask)}")
        rel = [f & ~face_mask for f in self.facets if f & face_mask == face_mask]
        used = 0
        for m in rel:
            used |= m
        keep = _bits(used)
        newpos = {old: new for new, old in enumerate(keep)}
        verts = tuple(self.vertices[i] for i in keep)
        remapped = [
            sum(1 << newpos[i] for i in _bits(m)) if m else 0 for m in rel
        ]
        return SimplicialComplex(verts, remapped)

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Minimal subsets of the vertex set that are not faces, canonical order."""
        self._require_nonvoid()
        faces = self.face_set
        out = set()
        for f in self.faces:
            for v in range(self.n):
                if f >> v & 1:
                    continue
                cand = f | (1 << v)
                if cand in faces or cand in out:
                    continue
                if all(cand & ~(1 << u) in faces for u in _bits(cand)):
                    out.add(cand)
        return tuple(sorted(out, key=face_sort_key))

    def alexander_dual(self) -> "SimplicialComplex":
        """Complex whose faces are the complements of the non-faces of this one."""
        self._require_nonvoid()
        universe = (1 << self.n) - 1
        facets = [universe & ~m for m in self.minimal_nonfaces()]
        return SimplicialComplex(self.vertices, facets, allow_uncovered=True)

    def underlying_graph(self) -> "SimpleGraph":
        self._require_nonvoid()
        edges = [_bits(f) for f in self.faces if _popcount(f) == 2]
        return SimpleGraph(self.vertices, edges)

    def is_flag(self, guards: Guards = DEFAULT_GUARDS) -> bool:
        """True when the complex is determined by its graph (every set of pairwise
        adjacent vertices is a face)."""
        self._require_nonvoid()
        if self.n == 0:
            return True
        return self == clique_complex(self.underlying_graph(), guards=guards)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        inner = ", ".join(self.format_face(f) for f in self.facets)
        return f"<complex on {''.join(self.vertices) or '()'} with facets [{inner}]>"


@dataclass(frozen=True)
class SimpleGraph:
    """A finite simple graph on the same labelled vertex set as a complex."""

    vertices: tuple
    edges: tuple

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple]):
        object.__setattr__(self, "vertices", tuple(vertices))
        norm = set()
        for a, b in edges:
            if a == b:
                raise InputError("loops are not allowed")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbours(self, v: int) -> frozenset:
        return frozenset(
            b if a == v else a for a, b in self.edges if v in (a, b)
        )

    def complement(self) -> "SimpleGraph":
        present = set(self.edges)
        edges = [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (i, j) not in present
        ]
        return SimpleGraph(self.vertices, edges)

    @classmethod
    def from_edges(
        cls, edges: Iterable[Iterable[str] | str], vertices: Sequence[str] | None = None
    ) -> "SimpleGraph":
        pairs = [tuple(e) for e in edges]
        if vertices is None:
            seen: list[str] = []
            for e in pairs:
                for v in e:
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        pos = {v: i for i, v in enumerate(vertices)}
        try:
            idx = [(pos[a], pos[b]) for a, b in pairs]
        except KeyError as exc:
            raise InputError(f"edge vertex {exc.args[0]!r} not among {tuple(vertices)!r}")
        return cls(vertices, idx)


def clique_complex(graph: SimpleGraph, guards: Guards = DEFAULT_GUARDS) -> SimplicialComplex:
    """The complex whose faces are the cliques of the graph."""
    guards.check_vertices(graph.n)
    if graph.n == 0:
        return SimplicialComplex((), [0])
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    facets = [sum(1 << v for v in clique) for clique in nx.find_cliques(g)]
    return SimplicialComplex(graph.vertices, facets)


def independence_complex(graph: SimpleGraph, guards: Guards = DEFAULT_GUARDS) -> SimplicialComplex:
    """The complex whose faces are the independent sets of the graph."""
    return clique_complex(graph.complement(), guards=guards)


def stanley_reisner_exponents(complex_: SimplicialComplex) -> tuple:
    """Exponent vectors (over the complex's vertices) of the squarefree monomials
    generating the face ring's defining ideal: one per minimal non-face."""
    out = []
    for m in complex_.minimal_nonfaces():
        out.append(tuple(1 if m >> i & 1 else 0 for i in range(complex_.n)))
    return tuple(out)
