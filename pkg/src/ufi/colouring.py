"""Ordered vertex colourings: properness, nesting, and the two chromatic numbers.

A colouring is an ordered partition of the vertex set into ordered classes.  The
order within a class is meaningful: class ``(d, a)`` assigns d the first position
and a the second.  A class order is a *nesting order* when the vertex links are
weakly decreasing along it (first-listed vertex has the largest link); a
colouring is *nested* when it is proper and every class admits a nesting order.

The nested chromatic number is computed exactly by a chain-cover argument: the
containment preorder on links is collapsed to a partial order on equal-link
groups, and a minimum chain cover of that order (via bipartite matching) yields
an optimal nested colouring together with an antichain certifying optimality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DEFAULT_GUARDS, Guards, InputError, PreconditionError, SizeGuardError
from .simplicial import SimplicialComplex, SimpleGraph


@dataclass(frozen=True)
class Colouring:
    """An ordered partition of vertex indices into ordered colour classes."""

    classes: tuple

    def __init__(self, classes: Iterable[Iterable[int]]):
        object.__setattr__(
            self, "classes", tuple(tuple(c) for c in classes)
        )

    @property
    def k(self) -> int:
        return len(self.classes)

    def validate_for(self, complex_: SimplicialComplex, *, allow_empty: bool = False) -> None:
        seen: set[int] = set()
        for ci, cls in enumerate(self.classes):
            if not cls and not allow_empty:
                raise InputError(
                    f"class {ci + 1} is empty (pass allow_empty to permit this)"
                )
            for v in cls:
                if not 0 <= v < complex_.n:
                    raise InputError(f"class {ci + 1} mentions unknown vertex index {v}")
                if v in seen:
                    raise InputError(
                        f"vertex {complex_.vertices[v]!r} appears in two classes"
                    )
                seen.add(v)
        if len(seen) != complex_.n:
            missing = [complex_.vertices[v] for v in range(complex_.n) if v not in seen]
            raise InputError(f"vertices {missing} are uncoloured")

    @classmethod
    def from_tokens(
        cls,
        complex_: SimplicialComplex,
        classes: Iterable[Iterable[str] | str],
        *,
        allow_empty: bool = False,
    ) -> "Colouring":
        pos = {v: i for i, v in enumerate(complex_.vertices)}
        idx = []
        for c in classes:
            row = []
            for v in c:
                if v not in pos:
                    raise InputError(f"colouring mentions unknown vertex {v!r}")
                row.append(pos[v])
            idx.append(row)
        col = cls(idx)
        col.validate_for(complex_, allow_empty=allow_empty)
        return col

    def class_of(self, v: int) -> int:
        for ci, c in enumerate(self.classes):
            if v in c:
                return ci
        raise InputError(f"vertex index {v} is uncoloured")

    def position_in_class(self, v: int) -> int:
        """1-based listed position of v within its class."""
        return self.classes[self.class_of(v)].index(v) + 1

    def tokens(self, complex_: SimplicialComplex) -> tuple:
        return tuple(tuple(complex_.vertices[v] for v in c) for c in self.classes)

    def __repr__(self) -> str:
        return "Colouring(" + " | ".join(
            "{" + ",".join(map(str, c)) + "}" for c in self.classes
        ) + ")"


def properness_witness(complex_: SimplicialComplex, colouring: Colouring):
    """None if no colour class contains an edge of the complex; otherwise the
    offending (class index, u, v)."""
    for ci, cls in enumerate(colouring.classes):
        for a in range(len(cls)):
            for b in range(a + 1, len(cls)):
                if complex_.has_face((1 << cls[a]) | (1 << cls[b])):
                    return (ci, cls[a], cls[b])
    return None


def is_proper(complex_: SimplicialComplex, colouring: Colouring) -> bool:
    return properness_witness(complex_, colouring) is None


# ---------------------------------------------------------------------------
# link containment preorder
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinkPreorder:
    """For each ordered vertex pair, whether link(u) ⊇ link(v); with link sizes."""

    n: int
    geq: tuple  # geq[u][v] is True iff link(u) ⊇ link(v)
    sizes: tuple  # number of faces in each vertex link

    def comparable(self, u: int, v: int) -> bool:
        return self.geq[u][v] or self.geq[v][u]

    def equivalent(self, u: int, v: int) -> bool:
        return self.geq[u][v] and self.geq[v][u]


def link_preorder(complex_: SimplicialComplex) -> LinkPreorder:
    complex_._require_nonvoid()
    n = complex_.n
    link_sets = []
    for v in range(n):
        bit = 1 << v
        link_sets.append(frozenset(f & ~bit for f in complex_.faces if f & bit))
    geq = tuple(
        tuple(link_sets[u] >= link_sets[v] for v in range(n)) for u in range(n)
    )
    return LinkPreorder(n, geq, tuple(len(s) for s in link_sets))


def nesting_order(
    complex_: SimplicialComplex,
    class_vertices: Sequence[int],
    pre: LinkPreorder | None = None,
):
    """Sort one colour class so links weakly decrease (largest link first).

    Returns ``(order, None)`` on success — ties broken by the input order, the
    vertex with the smallest link last — or ``(None, (u, v))`` with an
    incomparable witness pair when no nesting order exists.  The class must be
    independent in the complex (no two of its vertices share a face).
    """
    verts = list(class_vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if complex_.has_face((1 << u) | (1 << v)):
                raise PreconditionError(
                    "class is not independent: vertices "
                    f"{complex_.vertices[u]!r} and {complex_.vertices[v]!r} share a face"
                )
    pre = pre or link_preorder(complex_)
    order = sorted(class_vertices, key=lambda v: (-pre.sizes[v], class_vertices.index(v)))
    for a, b in zip(order, order[1:]):
        if not pre.geq[a][b]:
            return None, (a, b)
    return tuple(order), None


@dataclass(frozen=True)
class NestedResult:
    nested: bool
    orders: tuple | None  # canonical nesting order per class, when nested
    witness: tuple | None  # (class index, u, v) incomparable pair, when not


def is_nested(
    complex_: SimplicialComplex, colouring: Colouring, *, allow_empty: bool = False
) -> NestedResult:
    """Proper + every class admits a nesting order; reports canonical orders."""
    colouring.validate_for(complex_, allow_empty=allow_empty)
    bad = properness_witness(complex_, colouring)
    if bad is not None:
        return NestedResult(False, None, bad)
    pre = link_preorder(complex_)
    orders = []
    for ci, cls in enumerate(colouring.classes):
        order, witness = nesting_order(complex_, cls, pre)
        if order is None:
            return NestedResult(False, None, (ci, *witness))
        orders.append(order)
    return NestedResult(True, tuple(orders), None)


# ---------------------------------------------------------------------------
# minimum chain covers (Dilworth via bipartite matching)
# ---------------------------------------------------------------------------


def _max_matching(m: int, adj: Sequence[Sequence[int]]) -> dict:
    """Deterministic augmenting-path matching; returns {right: left}."""
    match_right: dict[int, int] = {}

    def try_assign(u: int, seen: set) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or try_assign(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(m):
        try_assign(u, set())
    return match_right


def chain_cover(m: int, less) -> tuple:
    """Minimum chain cover of a strict partial order on 0..m-1.

    ``less[a][b]`` must be a transitive irreflexive relation.  Returns
    ``(chains, antichain)`` where chains are tuples listed from the largest
    element downwards along ``less``, and the antichain has one element per
    chain (a maximum antichain, certifying minimality).
    """
    adj = [[b for b in range(m) if less[a][b]] for a in range(m)]
    match_right = _max_matching(m, adj)
    match_left = {u: v for v, u in match_right.items()}

    # König: alternating reachability from unmatched left vertices
    z_left = {u for u in range(m) if u not in match_left}
    z_right: set[int] = set()
    frontier = list(z_left)
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if match_left.get(u) == v or v in z_right:
                continue
            z_right.add(v)
            w = match_right.get(v)
            if w is not None and w not in z_left:
                z_left.add(w)
                frontier.append(w)
    antichain = tuple(u for u in range(m) if u in z_left and u not in z_right)

    starts = [u for u in range(m) if u not in match_right]
    chains = []
    for s in starts:
        chain = [s]
        while chain[-1] in match_left:
            chain.append(match_left[chain[-1]])
        chains.append(tuple(chain))
    assert len(chains) == m - len(match_right) == len(antichain)
    return tuple(chains), antichain


def _grouped_chain_cover(n: int, geq) -> tuple:
    """Collapse mutual-containment groups, cover the quotient by chains, and lift.

    Returns (classes, antichain_representatives): each class lists vertex
    indices with weakly decreasing links/neighbourhoods.
    """
    groups: list[list[int]] = []
    where: dict[int, int] = {}
    for v in range(n):
        for gi, g in enumerate(groups):
            if geq[v][g[0]] and geq[g[0]][v]:
                g.append(v)
                where[v] = gi
                break
        else:
            where[v] = len(groups)
            groups.append([v])
    m = len(groups)
    less = [
        [
            a != b and geq[groups[a][0]][groups[b][0]] and not geq[groups[b][0]][groups[a][0]]
            for b in range(m)
        ]
        for a in range(m)
    ]
    chains, antichain = chain_cover(m, less)
    classes = tuple(
        tuple(v for g in chain for v in groups[g]) for chain in chains
    )
    classes = tuple(sorted(classes, key=lambda c: c[0]))
    reps = tuple(sorted(groups[g][0] for g in antichain))
    return classes, reps


def nested_chromatic_number(
    complex_: SimplicialComplex, guards: Guards = DEFAULT_GUARDS
):
    """Smallest number of classes in a nested colouring, with witnesses.

    Returns ``(number, colouring, antichain)``: the colouring is nested with
    exactly that many classes, and the antichain is a set of vertices with
    pairwise incomparable links, so no nested colouring can use fewer classes.
    """
    complex_._require_nonvoid()
    guards.check_vertices(complex_.n)
    if complex_.n == 0:
        return 0, Colouring(()), ()
    pre = link_preorder(complex_)
    classes, reps = _grouped_chain_cover(complex_.n, pre.geq)
    colouring = Colouring(classes)
    check = is_nested(complex_, colouring)
    assert check.nested, "chain cover produced a non-nested colouring"
    return len(classes), colouring, reps


def graph_nested_chromatic_number(graph: SimpleGraph, guards: Guards = DEFAULT_GUARDS):
    """Graph analogue: classes ordered by weakly decreasing open neighbourhoods."""
    guards.check_vertices(graph.n)
    if graph.n == 0:
        return 0, (), ()
    nbhd = [graph.neighbours(v) for v in range(graph.n)]
    geq = [[nbhd[u] >= nbhd[v] for v in range(graph.n)] for u in range(graph.n)]
    classes, reps = _grouped_chain_cover(graph.n, geq)
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            assert nbhd[a] >= nbhd[b]
    return len(classes), classes, reps


def chromatic_number(complex_: SimplicialComplex, guards: Guards = DEFAULT_GUARDS):
    """Exact chromatic number of the underlying graph, with a witness partition."""
    complex_._require_nonvoid()
    return graph_chromatic_number(complex_.underlying_graph(), guards)


def graph_chromatic_number(graph: SimpleGraph, guards: Guards = DEFAULT_GUARDS):
    """Exact chromatic number of a simple graph, with a witness partition."""
    n = graph.n
    if n > guards.max_chromatic_vertices:
        raise SizeGuardError(
            f"exact colouring limited to {guards.max_chromatic_vertices} vertices; got {n}"
        )
    if n == 0:
        return 0, ()
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in graph.edges:
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(range(n), key=lambda v: -len(adj[v]))

    # greedy clique on the degree order gives a lower bound
    clique: list[int] = []
    for v in order:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    lower = len(clique)

    def feasible(k: int):
        colour = [-1] * n

        def assign(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            banned = {colour[u] for u in adj[v] if colour[u] >= 0}
            for c in range(min(used + 1, k)):
                if c in banned:
                    continue
                colour[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                colour[v] = -1
            return False

        return colour if assign(0, 0) else None

    k = lower
    while True:
        colour = feasible(k)
        if colour is not None:
            classes = tuple(
                tuple(v for v in range(n) if colour[v] == c) for c in range(k)
            )
            return k, tuple(c for c in classes if c)
        k += 1


def singleton_colouring(complex_: SimplicialComplex) -> Colouring:
    """One class per vertex, in vertex order; always proper and nested."""
    complex_._require_nonvoid()
    return Colouring(tuple((v,) for v in range(complex_.n)))


# ---------------------------------------------------------------------------
# the auxiliary complex pairing faces with the classes they miss
# ---------------------------------------------------------------------------


def bvt_complex(
    complex_: SimplicialComplex, colouring: Colouring, guards: Guards = DEFAULT_GUARDS
) -> SimplicialComplex:
    """The complex on the vertices plus one primed vertex per colour class whose
    faces are σ ∪ T' with σ a face and every class in T disjoint from σ.

    For singleton colourings its Alexander dual recovers the uniform face ideal
    as a Stanley–Reisner ideal (primed vertices playing the y-variables).
    """
    complex_._require_nonvoid()
    colouring.validate_for(complex_, allow_empty=True)
    bad = properness_witness(complex_, colouring)
    if bad is not None:
        ci, u, v = bad
        raise PreconditionError(
            f"colouring is not proper: {complex_.vertices[u]} and {complex_.vertices[v]} "
            f"share class {ci + 1} but span a face"
        )
    k = colouring.k
    primes = tuple(f"{i + 1}'" for i in range(k))
    for p in primes:
        if p in complex_.vertices:
            raise InputError(f"vertex label {p!r} collides with a class label")
    verts = complex_.vertices + primes
    guards.check_vertices(len(verts))
    class_masks = [sum(1 << v for v in c) for c in colouring.classes]
    n = complex_.n
    candidates = []
    for f in complex_.faces:
        allowed = 0
        for i in range(k):
            if not f & class_masks[i]:
                allowed |= 1 << (n + i)
        candidates.append(f | allowed)
    guards.check_faces(len(candidates))
    return SimplicialComplex(verts, candidates)
