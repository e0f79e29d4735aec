"""Index-vector posets of coloured complexes.

Faces of a properly coloured complex are encoded by their index vectors,
partially ordered componentwise inside the box poset prod_i {0, ..., #C_i}.
Most of the resolution-theoretic structure of the uniform face ideal is
visible here: order-ideal-ness detects nesting orders, boolean intervals
count Betti numbers, and covering relations carry the first syzygies.
"""

from __future__ import annotations

from itertools import combinations

from .colouring import Colouring, properness_witness
from .errors import DEFAULT_GUARDS, Guards, PreconditionError
from .simplicial import SimplicialComplex, _bits
from .uniform import index_vector


def _vector_sort_key(e):
    return (sum(e), e)


class IndexVectorPoset:
    """A set of index vectors under the componentwise order."""

    def __init__(self, class_sizes, elements, face_masks=None):
        self.class_sizes = tuple(class_sizes)
        order = sorted(range(len(elements)), key=lambda i: _vector_sort_key(elements[i]))
        self.elements = tuple(tuple(elements[i]) for i in order)
        if face_masks is None:
            self.face_masks = None
        else:
            self.face_masks = tuple(face_masks[i] for i in order)
        self._index = {e: i for i, e in enumerate(self.elements)}
        assert len(self._index) == len(self.elements), "duplicate elements"

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e) -> bool:
        return tuple(e) in self._index

    @staticmethod
    def leq(u, v) -> bool:
        return all(a <= b for a, b in zip(u, v))


def index_vector_poset(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> IndexVectorPoset:
    """The poset of index vectors of the faces of a properly coloured complex."""
    complex_._require_nonvoid()
    guards.check_vertices(complex_.n)
    guards.check_faces(len(complex_.faces))
    colouring.validate_for(complex_, allow_empty=allow_empty)
    bad = properness_witness(complex_, colouring)
    if bad is not None:
        ci, u, v = bad
        raise PreconditionError(
            f"colouring is not proper: vertices {complex_.vertices[u]!r} and "
            f"{complex_.vertices[v]!r} of class {ci + 1} share a face"
        )
    elements = [index_vector(complex_, colouring, f) for f in complex_.faces]
    sizes = [len(c) for c in colouring.classes]
    return IndexVectorPoset(sizes, elements, face_masks=complex_.faces)


def is_order_ideal(poset: IndexVectorPoset) -> bool:
    """Whether the poset is closed downwards inside its box poset."""
    for e in poset.elements:
        for i, ei in enumerate(e):
            if ei and e[:i] + (ei - 1,) + e[i + 1 :] not in poset:
                return False
    return True


def meet(poset: IndexVectorPoset, u, v):
    """The meet of two elements, or None if it does not exist.

    Computed definitionally: the meet is the unique maximal common lower
    bound among the poset's own elements.
    """
    u, v = tuple(u), tuple(v)
    lower = [w for w in poset.elements if poset.leq(w, u) and poset.leq(w, v)]
    maximal = [
        w
        for w in lower
        if not any(w != z and poset.leq(w, z) for z in lower)
    ]
    if len(maximal) == 1:
        return maximal[0]
    return None


def is_meet_semilattice(poset: IndexVectorPoset) -> bool:
    """Whether every pair of elements has a meet."""
    return all(
        meet(poset, u, v) is not None
        for u, v in combinations(poset.elements, 2)
    )


def covering_relations(poset: IndexVectorPoset) -> tuple:
    """All covers (lower, upper, gap); gap is the difference of element sums.

    A gap larger than one signals a hole below the upper element: some box
    vector between the two is missing from the poset.
    """
    covers = []
    for u in poset.elements:
        for v in poset.elements:
            if u == v or not poset.leq(u, v):
                continue
            if any(
                w != u and w != v and poset.leq(u, w) and poset.leq(w, v)
                for w in poset.elements
            ):
                continue
            covers.append((u, v, sum(v) - sum(u)))
    covers.sort(key=lambda c: (_vector_sort_key(c[1]), _vector_sort_key(c[0])))
    return tuple(covers)


def is_meet_distributive(poset: IndexVectorPoset) -> bool:
    """Whether each interval below an element and its covered set is boolean.

    For every element v, let S be the set of elements covered by v and u the
    meet of S.  The subsets of S must map bijectively (by iterated meets,
    with the empty meet being v) onto the interval [u, v].
    """
    covers = covering_relations(poset)
    below: dict[tuple, list] = {e: [] for e in poset.elements}
    for lo, hi, _gap in covers:
        below[hi].append(lo)
    for v in poset.elements:
        covered = below[v]
        if not covered:
            continue
        u = covered[0]
        for w in covered[1:]:
            got = meet(poset, u, w)
            if got is None:
                return False
            u = got
        interval = [
            w for w in poset.elements if poset.leq(u, w) and poset.leq(w, v)
        ]
        if len(interval) != 1 << len(covered):
            return False
        seen = set()
        for r in range(len(covered) + 1):
            for subset in combinations(covered, r):
                w = v
                for z in subset:
                    w = meet(poset, w, z)
                    if w is None:
                        return False
                seen.add(w)
        if len(seen) != 1 << len(covered) or seen != set(interval):
            return False
    return True


def boolean_interval_count(poset: IndexVectorPoset, rank: int) -> tuple:
    """Count intervals [u, v] forming a full boolean lattice of a given rank.

    An interval qualifies when v - u is a 0/1 vector with the given number of
    ones and every box vector between u and v belongs to the poset.  The
    second return value records whether the poset is an order ideal — only
    then do these counts agree with the Betti numbers of the face ideal.
    """
    count = 0
    for v in poset.elements:
        support = [i for i, vi in enumerate(v) if vi]
        for drop in combinations(support, rank):
            ok = True
            for r in range(len(drop) + 1):
                for part in combinations(drop, r):
                    w = tuple(
                        vi - 1 if i in part else vi for i, vi in enumerate(v)
                    )
                    if w not in poset:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count, is_order_ideal(poset)


# ---------------------------------------------------------------------------
# minimal non-faces
# ---------------------------------------------------------------------------


class NonfacePoset:
    """Index vectors of the colourful minimal non-faces of a coloured complex."""

    def __init__(self, class_sizes, elements, masks):
        self.class_sizes = tuple(class_sizes)
        order = sorted(range(len(elements)), key=lambda i: _vector_sort_key(elements[i]))
        self.elements = tuple(tuple(elements[i]) for i in order)
        self.masks = tuple(masks[i] for i in order)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def minimal_elements(self) -> tuple:
        """The componentwise-minimal vectors among the elements."""
        return tuple(
            e
            for e in self.elements
            if not any(
                f != e and IndexVectorPoset.leq(f, e) for f in self.elements
            )
        )


def minimal_nonface_poset(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> NonfacePoset:
    """Index vectors of minimal non-faces that meet each class at most once.

    Minimal non-faces inside a single colour class (pairs of same-class
    vertices) are skipped: they never meet each class at most once and carry
    no index vector.
    """
    complex_._require_nonvoid()
    guards.check_vertices(complex_.n)
    colouring.validate_for(complex_, allow_empty=allow_empty)
    bad = properness_witness(complex_, colouring)
    if bad is not None:
        ci, u, v = bad
        raise PreconditionError(
            f"colouring is not proper: vertices {complex_.vertices[u]!r} and "
            f"{complex_.vertices[v]!r} of class {ci + 1} share a face"
        )
    sizes = [len(c) for c in colouring.classes]
    elements = []
    masks = []
    for mask in complex_.minimal_nonfaces():
        seen = [0] * colouring.k
        colourful = True
        for v in _bits(mask):
            ci = colouring.class_of(v)
            if seen[ci]:
                colourful = False
                break
            seen[ci] = colouring.position_in_class(v)
        if colourful:
            elements.append(tuple(seen))
            masks.append(mask)
    return NonfacePoset(sizes, elements, masks)


# ---------------------------------------------------------------------------
# first syzygies from covering relations
# ---------------------------------------------------------------------------


def first_syzygies_covering(poset: IndexVectorPoset) -> tuple:
    """The covering syzygies of the face ideal, one record per cover.

    A cover (u, v) with difference g gives the relation
    y^g * m_u - x^g * m_v = 0 in degree n + |g|; these relations minimally
    generate the first syzygy module of the face ideal.
    """
    records = []
    for u, v, gap in covering_relations(poset):
        diff = tuple(b - a for a, b in zip(u, v))
        n = sum(poset.class_sizes)
        records.append(
            {
                "lower": u,
                "upper": v,
                "difference": diff,
                "degree": n + gap,
                "linear": gap == 1,
            }
        )
    return tuple(records)


def first_betti_lower_bound(poset: IndexVectorPoset) -> tuple:
    """Covering-syzygy counts by degree, plus the coarse f-vector count.

    The first value maps syzygy degree to the number of covering syzygies in
    that degree; summed, it is the first Betti number of the face ideal.  The
    second value is sum_j j * f_{j-1}, the count predicted by the f-vector
    alone — the two agree exactly when the poset is an order ideal, and the
    coarse count undershoots otherwise.
    """
    by_degree: dict[int, int] = {}
    for record in first_syzygies_covering(poset):
        d = record["degree"]
        by_degree[d] = by_degree.get(d, 0) + 1
    coarse = sum(sum(1 for x in e if x) for e in poset.elements)
    return dict(sorted(by_degree.items())), coarse


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _vector_label(e) -> str:
    return "(" + ",".join(str(x) for x in e) + ")"


def hasse_dot(poset: IndexVectorPoset, title: str = "P") -> str:
    """Hasse diagram of the poset in DOT format, bottom to top."""
    lines = [f"digraph {title} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    names = {e: f"v{i}" for i, e in enumerate(poset.elements)}
    for e in poset.elements:
        lines.append(f'  {names[e]} [label="{_vector_label(e)}"];')
    for u, v, _gap in covering_relations(poset):
        lines.append(f"  {names[u]} -> {names[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
