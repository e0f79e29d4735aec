"""The cubical complex of boxes inside an index-vector order ideal.

Every pair (u, J) with u and u + chi_J in the poset spans a box; when the
poset is an order ideal these boxes form a cubical complex whose cells,
labelled with the monomials x^(s-u) y^(u+chi_J), support the minimal free
resolution of the uniform face ideal.  The complex collapses step by step to
a point, and the labelled chain complex can be verified to be a resolution
directly: squares to zero, minimal, and exact in every multidegree.
"""

from __future__ import annotations

from itertools import combinations

from .colouring import Colouring
from .errors import DEFAULT_GUARDS, Guards, PreconditionError
from .exact import homology_ranks
from .monomial import Expt, MonomialIdeal, format_monomial, m_divides
from .oracles import betti_oracle, lcm_lattice
from .poset import IndexVectorPoset, index_vector_poset, is_order_ideal
from .simplicial import SimplicialComplex
from .uniform import ufi_variables

Cube = tuple  # (lower: tuple[int, ...], free: tuple[int, ...])


def cube_dim(cube: Cube) -> int:
    return len(cube[1])


def cube_top(cube: Cube) -> tuple:
    lower, free = cube
    return tuple(x + 1 if i in free else x for i, x in enumerate(lower))


def cube_label(cube: Cube, class_sizes) -> Expt:
    """Exponent vector x^(s - lower) y^(lower + chi_free)."""
    lower, free = cube
    xs = tuple(s - u for s, u in zip(class_sizes, lower))
    ys = tuple(u + (1 if i in free else 0) for i, u in enumerate(lower))
    return xs + ys


def is_cube_face(inner: Cube, outer: Cube) -> bool:
    """Whether one box is a face of another."""
    ilow, ifree = inner
    olow, ofree = outer
    if not set(ifree) <= set(ofree):
        return False
    for i, (a, b) in enumerate(zip(ilow, olow)):
        if i in ifree or i not in ofree:
            if a != b:
                return False
        elif a not in (b, b + 1):
            return False
    return True


def cube_facets(cube: Cube):
    """The codimension-one faces: each free direction pinned low or high."""
    lower, free = cube
    for j in free:
        rest = tuple(i for i in free if i != j)
        yield (lower, rest)
        top = tuple(x + 1 if i == j else x for i, x in enumerate(lower))
        yield (top, rest)


class CubicalComplex:
    """The boxes spanned inside an index-vector order ideal."""

    def __init__(self, class_sizes, cubes):
        self.class_sizes = tuple(class_sizes)
        self.cubes = tuple(
            sorted(
                ((tuple(lo), tuple(sorted(fr))) for lo, fr in cubes),
                key=lambda c: (cube_dim(c), c[0], c[1]),
            )
        )
        self._cube_set = set(self.cubes)
        assert len(self._cube_set) == len(self.cubes), "duplicate cubes"

    def __len__(self) -> int:
        return len(self.cubes)

    def __contains__(self, cube: Cube) -> bool:
        return cube in self._cube_set

    @property
    def dim(self) -> int:
        return max((cube_dim(c) for c in self.cubes), default=-1)

    def f_vector(self) -> tuple:
        counts = [0] * (self.dim + 1)
        for c in self.cubes:
            counts[cube_dim(c)] += 1
        return tuple(counts)

    def by_dim(self, d: int) -> tuple:
        return tuple(c for c in self.cubes if cube_dim(c) == d)

    def validate(self) -> None:
        """Closure under facets, and pairwise intersections are cells."""
        for cube in self.cubes:
            for facet in cube_facets(cube):
                facet = (facet[0], tuple(sorted(facet[1])))
                assert facet in self._cube_set, f"missing facet {facet} of {cube}"
        for a, b in combinations(self.cubes, 2):
            lo = tuple(max(x, y) for x, y in zip(a[0], b[0]))
            hi = tuple(min(x, y) for x, y in zip(cube_top(a), cube_top(b)))
            if any(x > y for x, y in zip(lo, hi)):
                continue
            meet = (lo, tuple(i for i, (x, y) in enumerate(zip(lo, hi)) if x < y))
            assert meet in self._cube_set, f"intersection {meet} of {a}, {b} missing"

    def labels(self) -> dict:
        return {c: cube_label(c, self.class_sizes) for c in self.cubes}


def cubical_complex(poset: IndexVectorPoset) -> CubicalComplex:
    """All boxes with both corners in an order-ideal poset."""
    if not is_order_ideal(poset):
        raise PreconditionError(
            "the index-vector poset is not an order ideal; no cubical "
            "resolution is attached to this colouring order"
        )
    cubes = []
    for top in poset.elements:
        support = [i for i, x in enumerate(top) if x]
        for r in range(len(support) + 1):
            for free in combinations(support, r):
                lower = tuple(
                    x - 1 if i in free else x for i, x in enumerate(top)
                )
                assert lower in poset
                cubes.append((lower, free))
    complex_ = CubicalComplex(poset.class_sizes, cubes)
    complex_.validate()
    return complex_


def cubical_for(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> CubicalComplex:
    poset = index_vector_poset(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    return cubical_complex(poset)


# ---------------------------------------------------------------------------
# the labelled chain complex
# ---------------------------------------------------------------------------


def _position(j: int, free) -> int:
    return sorted(free).index(j)


class CellularFreeComplex:
    """The chain complex of free modules read off the labelled boxes.

    ``basis[i]`` lists the i-cubes; ``differentials[i]`` (i >= 1) holds
    entries (row, col, sign, exponent) meaning the matrix of the map from
    homological degree i to i-1 has sign * x^exponent in that position.  The
    augmentation sends each 0-cube to its label, a generator of the ideal.
    """

    def __init__(self, cubical: CubicalComplex):
        self.cubical = cubical
        self.class_sizes = cubical.class_sizes
        self.variables = ufi_variables(len(self.class_sizes))
        self.basis = [cubical.by_dim(d) for d in range(cubical.dim + 1)]
        self.ranks = tuple(len(layer) for layer in self.basis)
        index = [{c: i for i, c in enumerate(layer)} for layer in self.basis]
        self.differentials: dict[int, tuple] = {}
        k = len(self.class_sizes)
        for i in range(1, len(self.basis)):
            entries = []
            for col, cube in enumerate(self.basis[i]):
                lower, free = cube
                for j in free:
                    sign = (-1) ** _position(j, free)
                    rest = tuple(x for x in free if x != j)
                    bottom = (lower, rest)
                    top = (
                        tuple(x + 1 if t == j else x for t, x in enumerate(lower)),
                        rest,
                    )
                    y_step = tuple(
                        1 if t == k + j else 0 for t in range(2 * k)
                    )
                    x_step = tuple(1 if t == j else 0 for t in range(2 * k))
                    entries.append((index[i - 1][bottom], col, sign, y_step))
                    entries.append((index[i - 1][top], col, -sign, x_step))
            self.differentials[i] = tuple(entries)
        self.augmentation = tuple(
            (0, col, 1, cube_label(cube, self.class_sizes))
            for col, cube in enumerate(self.basis[0])
        )

    def generators(self) -> tuple:
        return tuple(
            cube_label(c, self.class_sizes) for c in self.basis[0]
        )

    def betti_by_multidegree(self) -> dict:
        """(homological index, label) -> number of cubes with that label."""
        out: dict[tuple, int] = {}
        for i, layer in enumerate(self.basis):
            for cube in layer:
                key = (i, cube_label(cube, self.class_sizes))
                out[key] = out.get(key, 0) + 1
        return out

    def as_dict(self) -> dict:
        """A JSON-ready description of the complex."""
        return {
            "variables": list(self.variables),
            "ranks": list(self.ranks),
            "basis": [
                [
                    {
                        "lower": list(lower),
                        "free": list(free),
                        "label": format_monomial(
                            self.variables, cube_label((lower, free), self.class_sizes)
                        ),
                    }
                    for lower, free in layer
                ]
                for layer in self.basis
            ],
            "differentials": {
                str(i): [
                    {
                        "row": row,
                        "col": col,
                        "sign": sign,
                        "monomial": format_monomial(self.variables, expt),
                    }
                    for row, col, sign, expt in entries
                ]
                for i, entries in self.differentials.items()
            },
        }


def cellular_free_complex(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> CellularFreeComplex:
    return CellularFreeComplex(
        cubical_for(complex_, colouring, allow_empty=allow_empty, guards=guards)
    )


# ---------------------------------------------------------------------------
# collapsing to a point
# ---------------------------------------------------------------------------


def collapse_sequence(cubical: CubicalComplex) -> tuple:
    """An elementary collapse schedule taking the complex to a single point.

    Vertices of the poset are peeled from the top (largest coordinate sum,
    then lexicographically largest): for a vertex v with support of size d and
    s its largest supported direction, the 2^(d-1) boxes with top corner v and
    s free pair off with the boxes where s is pinned low, in descending
    dimension.  Every step is machine-checked to be an elementary collapse —
    the free face is present and has exactly one live proper coface.
    """
    live = set(cubical.cubes)
    tops = sorted(
        {cube_top(c) for c in cubical.cubes},
        key=lambda t: (sum(t), t),
        reverse=True,
    )
    steps = []
    for v in tops:
        support = [i for i, x in enumerate(v) if x]
        if not support:
            continue
        d = len(support)
        special = support[-1]
        others = [i for i in support if i != special]
        for size in range(d - 1, -1, -1):
            for rest in combinations(others, size):
                free_g = tuple(sorted((*rest, special)))
                lower_g = tuple(
                    x - 1 if i in free_g else x for i, x in enumerate(v)
                )
                cube_g = (lower_g, free_g)
                lower_f = tuple(
                    x - 1 if i in rest else x for i, x in enumerate(v)
                )
                cube_f = (lower_f, tuple(rest))
                assert cube_f in live and cube_g in live
                cofaces = [
                    c
                    for c in live
                    if c != cube_f and is_cube_face(cube_f, c)
                ]
                assert cofaces == [cube_g], (
                    f"{cube_f} is not free: live cofaces {cofaces}"
                )
                live.discard(cube_f)
                live.discard(cube_g)
                steps.append((cube_f, cube_g))
    assert live == {((0,) * len(cubical.class_sizes), ())}, (
        "collapse did not terminate at the empty-face vertex"
    )
    assert 2 * len(steps) + 1 == len(cubical.cubes)
    return tuple(steps)


# ---------------------------------------------------------------------------
# resolution verification
# ---------------------------------------------------------------------------


def _compose_is_zero(outer: tuple, inner: tuple) -> bool:
    """Whether the product of two monomial matrices vanishes identically."""
    by_col_inner: dict[int, list] = {}
    for row, col, sign, expt in inner:
        by_col_inner.setdefault(col, []).append((row, sign, expt))
    by_col_outer: dict[int, list] = {}
    for row, col, sign, expt in outer:
        by_col_outer.setdefault(col, []).append((row, sign, expt))
    for middles in by_col_inner.values():
        acc: dict[tuple, int] = {}
        for m, s1, e1 in middles:
            for r, s2, e2 in by_col_outer.get(m, ()):
                key = (r, tuple(a + b for a, b in zip(e1, e2)))
                acc[key] = acc.get(key, 0) + s1 * s2
        if any(acc.values()):
            return False
    return True


def _reduced_cubical_homology(cubes, class_sizes) -> list[int]:
    """Reduced rational homology ranks of a set of cubes closed under faces."""
    if not cubes:
        return []
    top = max(cube_dim(c) for c in cubes)
    layers = [[()]] + [
        sorted(c for c in cubes if cube_dim(c) == d) for d in range(top + 1)
    ]
    index = [{c: i for i, c in enumerate(layer)} for layer in layers]
    dims = [len(layer) for layer in layers]
    boundaries: list[list[list[int]]] = [[]]
    for d in range(1, len(layers)):
        mat = [[0] * dims[d] for _ in range(dims[d - 1])]
        for col, cube in enumerate(layers[d]):
            if d == 1:
                mat[0][col] = 1
                continue
            lower, free = cube
            for j in free:
                sign = (-1) ** _position(j, free)
                rest = tuple(x for x in free if x != j)
                bottom = (lower, rest)
                top_face = (
                    tuple(x + 1 if t == j else x for t, x in enumerate(lower)),
                    rest,
                )
                mat[index[d - 1][bottom]][col] += sign
                mat[index[d - 1][top_face]][col] -= sign
        boundaries.append(mat)
    return homology_ranks(dims, boundaries)


def verify_resolution(
    free_complex: CellularFreeComplex,
    ideal: MonomialIdeal,
    guards: Guards = DEFAULT_GUARDS,
) -> dict:
    """Check that the labelled chain complex minimally resolves the ideal.

    Four independent checks: consecutive differentials compose to zero (as
    matrices of signed monomials); no differential entry is a unit, so the
    resolution is minimal; the augmentation hits exactly the minimal
    generators; and for every multidegree in the lcm lattice the sub-complex
    of cells whose label divides it has vanishing reduced homology.  Finally
    the multigraded Betti numbers read off the cells are compared with the
    homological oracle.
    """
    report: dict[str, object] = {}
    ranks = free_complex.ranks
    report["ranks"] = ranks

    ok_sq = True
    for i in range(2, len(ranks)):
        ok_sq = ok_sq and _compose_is_zero(
            free_complex.differentials[i - 1], free_complex.differentials[i]
        )
    if len(ranks) >= 2:
        ok_sq = ok_sq and _compose_is_zero(
            free_complex.augmentation, free_complex.differentials[1]
        )
    report["squares_to_zero"] = ok_sq

    entries = [
        expt
        for mat in free_complex.differentials.values()
        for (_r, _c, _s, expt) in mat
    ]
    report["minimal"] = all(sum(e) >= 1 for e in entries)

    gens = tuple(sorted(free_complex.generators()))
    report["generators_match"] = gens == tuple(sorted(ideal.gens))

    labels = free_complex.cubical.labels()
    acyclic = True
    for a in lcm_lattice(ideal):
        sub = [c for c, lab in labels.items() if m_divides(lab, a)]
        hom = _reduced_cubical_homology(sub, free_complex.class_sizes)
        if not sub or any(hom):
            acyclic = False
            break
    report["acyclic_in_every_multidegree"] = acyclic

    cellular = free_complex.betti_by_multidegree()
    oracle = betti_oracle(ideal, guards).as_dict()
    report["betti_numbers_match_oracle"] = cellular == oracle

    report["ok"] = bool(
        ok_sq
        and report["minimal"]
        and report["generators_match"]
        and acyclic
        and report["betti_numbers_match_oracle"]
    )
    return report


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def cubical_dot(cubical: CubicalComplex, title: str = "X") -> str:
    """Face-containment diagram of the boxes, in DOT format."""
    variables = ufi_variables(len(cubical.class_sizes))
    lines = [f"digraph {title} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    names = {c: f"c{i}" for i, c in enumerate(cubical.cubes)}
    for cube in cubical.cubes:
        label = format_monomial(variables, cube_label(cube, cubical.class_sizes))
        lower = ",".join(str(x) for x in cube[0])
        free = ",".join(str(i + 1) for i in cube[1]) or "-"
        lines.append(
            f'  {names[cube]} [label="({lower})|{free}\\n{label}"];'
        )
    for cube in cubical.cubes:
        for facet in cube_facets(cube):
            facet = (facet[0], tuple(sorted(facet[1])))
            lines.append(f"  {names[facet]} -> {names[cube]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
