"""End-to-end acceptance checks, one per shipped guarantee.

Every test prints exactly one ``[acceptance NN] <name>: PASS`` line (shown
with ``pytest -s``, or in the captured output on failure) and enforces a
wall-clock budget on top of the functional assertions.  The exhaustive
linearity sweep is marked ``slow`` and excluded from the default run; the
seeded sampled variant always runs.  Run the full sweep with ``pytest -m
slow tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from dataclasses import replace
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import pytest

from ufi import (
    Colouring,
    DEFAULT_GUARDS,
    MonomialIdeal,
    SimplicialComplex,
    associated_primes_generic,
    betti_closed_form,
    betti_from_oracle,
    betti_oracle,
    bsd_ideal,
    bsd_quotient,
    cellular_free_complex,
    collapse_sequence,
    cubical_for,
    first_betti_lower_bound,
    first_syzygy_degrees,
    graph_nested_chromatic_number,
    hilbert_numerator,
    hilbert_numerator_closed_form,
    hilbert_summary,
    index_vector_poset,
    is_nested,
    is_order_ideal,
    lcm_lattice,
    nested_chromatic_number,
    persistence_report,
    power_as_ufi,
    product_as_ufi,
    ufi_associated_primes,
    ufi_irreducible_decomposition,
    ufi_variables,
    uniform_face_ideal,
    verify_resolution,
)
from ufi.cli import main as cli_main
from ufi.colouring import link_preorder
from ufi.cubical import cube_dim, cube_facets, is_cube_face
from ufi.exact import divide_by_one_minus_t, poly_eval

from conftest import pad_to_k, random_nested_instance


@contextmanager
def acceptance(number: int, name: str, budget: float):
    """Time a criterion, print its single pass/fail line, enforce the budget."""
    start = time.monotonic()
    try:
        yield
    except BaseException:
        elapsed = time.monotonic() - start
        print(f"[acceptance {number:02d}] {name}: FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.monotonic() - start
    if elapsed >= budget:
        print(
            f"[acceptance {number:02d}] {name}: FAIL "
            f"(over budget: {elapsed:.2f}s >= {budget:.0f}s)"
        )
        raise AssertionError(
            f"{name} exceeded its budget: {elapsed:.2f}s >= {budget:.0f}s"
        )
    print(
        f"[acceptance {number:02d}] {name}: PASS ({elapsed:.2f}s, "
        f"budget {budget:.0f}s)"
    )


# ---------------------------------------------------------------------------
# shared inputs
# ---------------------------------------------------------------------------

RUNNING_JSON = '{"facets":["abc","bcd","ce","de","df"],"colouring":["da","be","cf"]}'
FOUR_CLASS_JSON = '{"facets":["abc","bcd","ce","de","df"],"colouring":["af","be","c","d"]}'
SINGLETON_JSON = (
    '{"facets":["abc","bcd","ce","de","df"],'
    '"colouring":["a","b","c","d","e","f"]}'
)

GENERATORS_3 = [
    "x1^2*x2^2*x3^2",
    "y1^2*x2^2*x3^2",
    "x1^2*x2*y2*x3^2",
    "x1^2*x2^2*x3*y3",
    "x1*y1*x2^2*x3^2",
    "x1^2*y2^2*x3^2",
    "x1^2*x2^2*y3^2",
    "y1^2*x2*y2*x3^2",
    "y1^2*x2^2*x3*y3",
    "x1^2*x2*y2*x3*y3",
    "x1*y1*x2*y2*x3^2",
    "x1*y1*x2^2*x3*y3",
    "x1^2*y2^2*x3*y3",
    "x1*y1*y2^2*x3^2",
    "x1*y1*x2^2*y3^2",
    "y1^2*x2*y2*x3*y3",
    "x1*y1*x2*y2*x3*y3",
]

GENERATORS_4 = [
    "x1^2*x2^2*x3*x4",
    "x1*y1*x2^2*x3*x4",
    "x1^2*x2*y2*x3*x4",
    "x1^2*x2^2*y3*x4",
    "x1^2*x2^2*x3*y4",
    "x1^2*y2^2*x3*x4",
    "y1^2*x2^2*x3*x4",
    "x1*y1*x2*y2*x3*x4",
    "x1*y1*x2^2*y3*x4",
    "x1^2*x2*y2*y3*x4",
    "x1^2*x2*y2*x3*y4",
    "x1^2*x2^2*y3*y4",
    "x1^2*y2^2*y3*x4",
    "x1^2*y2^2*x3*y4",
    "y1^2*x2^2*x3*y4",
    "x1*y1*x2*y2*y3*x4",
    "x1^2*x2*y2*y3*y4",
]

GENERATORS_6 = [
    "x1*x2*x3*x4*x5*x6",
    "y1*x2*x3*x4*x5*x6",
    "x1*y2*x3*x4*x5*x6",
    "x1*x2*y3*x4*x5*x6",
    "x1*x2*x3*y4*x5*x6",
    "x1*x2*x3*x4*y5*x6",
    "x1*x2*x3*x4*x5*y6",
    "y1*y2*x3*x4*x5*x6",
    "y1*x2*y3*x4*x5*x6",
    "x1*y2*y3*x4*x5*x6",
    "x1*y2*x3*y4*x5*x6",
    "x1*x2*y3*y4*x5*x6",
    "x1*x2*y3*x4*y5*x6",
    "x1*x2*x3*y4*y5*x6",
    "x1*x2*x3*y4*x5*y6",
    "y1*y2*y3*x4*x5*x6",
    "x1*y2*y3*y4*x5*x6",
]


def running_complex() -> SimplicialComplex:
    return SimplicialComplex.from_facets(["abc", "bcd", "ce", "de", "df"])


def running_colouring(cx: SimplicialComplex) -> Colouring:
    return Colouring.from_tokens(cx, ["da", "be", "cf"])


def four_class_colouring(cx: SimplicialComplex) -> Colouring:
    return Colouring.from_tokens(cx, ["da", "be", "c", "f"])


# ---------------------------------------------------------------------------
# 1: the three generator lists, through the command line
# ---------------------------------------------------------------------------


def test_01_golden_generators(capsys):
    with acceptance(1, "golden generator lists", 1.0):
        for payload, k, expected in (
            (RUNNING_JSON, 3, GENERATORS_3),
            (FOUR_CLASS_JSON, 4, GENERATORS_4),
            (SINGLETON_JSON, 6, GENERATORS_6),
        ):
            code = cli_main(["ideal", payload])
            out = capsys.readouterr().out
            assert code == 0
            assert sorted(out.splitlines()) == sorted(expected)
            want = MonomialIdeal.from_strings(ufi_variables(k), expected)
            assert len(want.gens) == 17
    capsys.readouterr()  # swallow the report line printed by the helper


# ---------------------------------------------------------------------------
# 2: closed-form Betti numbers against the homological oracle
# ---------------------------------------------------------------------------


def test_02_betti_table_agreement():
    with acceptance(2, "Betti table closed form vs oracle", 60.0):
        cx = running_complex()
        col = running_colouring(cx)
        closed = betti_closed_form(cx, col)
        assert dict(closed.entries) == {
            (0, 6): 17,
            (1, 7): 28,
            (2, 8): 14,
            (3, 9): 2,
        }
        oracle = betti_from_oracle(uniform_face_ideal(cx, col))
        assert dict(oracle.entries) == dict(closed.entries)


# ---------------------------------------------------------------------------
# 3: decompositions into pure diagrams, with exact reconstruction
# ---------------------------------------------------------------------------


def test_03_boij_soederberg_decompositions():
    with acceptance(3, "Boij-Soederberg decompositions", 1.0):
        cx = running_complex()
        col = running_colouring(cx)
        closed = betti_closed_form(cx, col)

        ideal_dec = bsd_ideal(cx)
        by_length = {len(d.degrees): c for c, d in ideal_dec.terms}
        # coefficient j! * f_{j-1} on the diagram with degrees n .. n+j
        assert by_length == {1: 1, 2: 6, 3: 16, 4: 12}
        assert all(d.degrees == tuple(range(6, 5 + m + 1))
                   for c, d in ideal_dec.terms for m in [len(d.degrees)])
        assert ideal_dec.table() == {k: Fraction(v) for k, v in closed.entries}

        quotient_dec = bsd_quotient(cx)
        by_length = {len(d.degrees): c for c, d in quotient_dec.terms}
        assert by_length == {2: 26, 3: 116, 4: 108}
        assert quotient_dec.table() == {
            k: Fraction(v) for k, v in closed.quotient().entries
        }


# ---------------------------------------------------------------------------
# 4: nested chromatic numbers with verified witnesses
# ---------------------------------------------------------------------------


def test_04_nested_chromatic_numbers():
    with acceptance(4, "nested chromatic numbers", 1.0):
        cx = running_complex()
        chi, witness, _ = nested_chromatic_number(cx)
        assert chi == 3
        assert is_nested(cx, witness).nested

        gamma = SimplicialComplex.from_facets(["abc", "bd", "cde"])
        chi, witness, _ = nested_chromatic_number(gamma)
        assert chi == 5
        assert is_nested(gamma, witness).nested

        graph = gamma.underlying_graph()
        chi, classes, _ = graph_nested_chromatic_number(graph)
        assert chi == 3
        edges = [
            graph.vertices[u] + graph.vertices[v]
            for u in range(graph.n)
            for v in sorted(graph.neighbours(u))
            if u < v
        ]
        skeleton = SimplicialComplex.from_facets(edges, vertices=graph.vertices)
        assert is_nested(skeleton, Colouring(classes)).nested


# ---------------------------------------------------------------------------
# 5: linear first syzygies exactly on the nested colourings
# ---------------------------------------------------------------------------
#
# The sharp, listing-level fact: the first syzygies all live in degree n+1
# exactly when the listed classes form a nesting order, i.e. when the index
# vectors are an order ideal.  At the partition level, some listing is linear
# exactly when the colouring is nested.  The sampled variant always runs; the
# full enumeration over every complex on <= 5 vertices and every ordered
# proper colouring is marked slow.


def _complexes_on_exactly(n: int) -> list:
    """Representatives (up to relabelling) of complexes using all n vertices.

    A complex in which every vertex is a face is determined by its facets of
    size >= 2 (an antichain) plus the isolated vertices left uncovered, so
    enumerating antichains enumerates complexes.
    """
    subsets = [
        frozenset(c)
        for size in range(2, n + 1)
        for c in combinations(range(n), size)
    ]
    antichains = []

    def extend(start: int, chosen: list) -> None:
        antichains.append(tuple(chosen))
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(not (s <= t or t <= s) for t in chosen):
                chosen.append(s)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    seen, reps = set(), []
    perms = list(permutations(range(n)))
    for facets in antichains:
        canon = min(
            tuple(sorted(tuple(sorted(p[v] for v in f)) for f in facets))
            for p in perms
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(facets)
    return reps


def _build_complex(n: int, facets) -> SimplicialComplex:
    labels = [chr(97 + i) for i in range(n)]
    covered = set().union(*facets) if facets else set()
    tokens = ["".join(labels[v] for v in sorted(f)) for f in facets]
    tokens += [labels[v] for v in range(n) if v not in covered]
    return SimplicialComplex.from_facets(tokens, vertices=labels)


def _adjacency(cx: SimplicialComplex) -> list:
    nbr = [set() for _ in range(cx.n)]
    for mask in cx.faces:
        verts = [i for i in range(cx.n) if mask >> i & 1]
        for u, v in combinations(verts, 2):
            nbr[u].add(v)
            nbr[v].add(u)
    return nbr


def _ordered_proper_colourings(cx: SimplicialComplex) -> list:
    """Every ordered partition into independent classes, with every listing."""
    nbr = _adjacency(cx)
    out: list = []

    def extend(remaining: set, classes: list) -> None:
        if not remaining:
            out.append(tuple(classes))
            return
        rest = sorted(remaining)
        for size in range(1, len(rest) + 1):
            for subset in combinations(rest, size):
                if any(v in nbr[u] for u, v in combinations(subset, 2)):
                    continue
                for listing in permutations(subset):
                    classes.append(listing)
                    extend(remaining - set(subset), classes)
                    classes.pop()

    extend(set(range(cx.n)), [])
    return out


def _listing_is_linear(cx: SimplicialComplex, col: Colouring) -> bool:
    ideal = uniform_face_ideal(cx, col)
    return set(first_syzygy_degrees(ideal)) <= {cx.n + 1}


def _oracle_agrees_on_first_syzygies(cx, col) -> None:
    ideal = uniform_face_ideal(cx, col)
    table = betti_oracle(ideal)
    oracle_row = {
        j: r for (i, j), r in table.totals().items() if i == 1 and r
    }
    assert first_syzygy_degrees(ideal) == oracle_row


def _check_listing(cx: SimplicialComplex, classes) -> bool:
    """Assert the listing-level equivalence; return the linearity flag."""
    col = Colouring(classes)
    linear = _listing_is_linear(cx, col)
    poset = index_vector_poset(cx, col)
    assert linear == is_order_ideal(poset), (cx, classes)
    return linear


def test_05_linearity_matches_nestedness_sampled():
    with acceptance(5, "linearity iff nestedness (sampled)", 120.0):
        rng = random.Random(505)
        nested_seen = not_nested_seen = 0
        for trial in range(520):
            n = rng.randint(2, 5)
            subsets = [
                frozenset(c)
                for size in range(2, n + 1)
                for c in combinations(range(n), size)
            ]
            rng.shuffle(subsets)
            facets: list = []
            for s in subsets[: rng.randint(0, 6)]:
                if all(not (s <= t or t <= s) for t in facets):
                    facets.append(s)
            cx = _build_complex(n, facets)

            nbr = _adjacency(cx)
            remaining = list(range(n))
            rng.shuffle(remaining)
            classes = []
            while remaining:
                cls = [remaining.pop()]
                for v in remaining[:]:
                    if all(v not in nbr[u] for u in cls) and rng.random() < 0.5:
                        cls.append(v)
                        remaining.remove(v)
                rng.shuffle(cls)
                classes.append(tuple(cls))

            linear = _check_listing(cx, tuple(classes))
            verdict = is_nested(cx, Colouring(classes))
            if verdict.nested:
                nested_seen += 1
                # some listing is linear: the canonical nesting order is
                canonical = Colouring(verdict.orders)
                assert _listing_is_linear(cx, canonical)
            else:
                not_nested_seen += 1
                assert not linear  # no listing of this partition can be
            if trial % 40 == 0 and len(cx.faces) <= 25:
                _oracle_agrees_on_first_syzygies(cx, Colouring(classes))
        assert nested_seen >= 50 and not_nested_seen >= 50


@pytest.mark.slow
def test_05_linearity_matches_nestedness_exhaustive():
    with acceptance(5, "linearity iff nestedness (exhaustive)", 1800.0):
        listingsateach = {}
        oracle_checks = 0
        for n in range(1, 6):
            count = 0
            for facets in _complexes_on_exactly(n):
                cx = _build_complex(n, facets)
                by_partition: dict = {}
                for classes in _ordered_proper_colourings(cx):
                    linear = _check_listing(cx, classes)
                    key = frozenset(frozenset(c) for c in classes)
                    by_partition[key] = by_partition.get(key, False) or linear
                    count += 1
                    if count % 997 == 0 and len(cx.faces) <= 25:
                        _oracle_agrees_on_first_syzygies(cx, Colouring(classes))
                        oracle_checks += 1
                for key, some_listing_linear in by_partition.items():
                    col = Colouring(tuple(tuple(sorted(c)) for c in key))
                    assert some_listing_linear == is_nested(cx, col).nested
            listingsateach[n] = count
        assert listingsateach == {1: 1, 2: 6, 3: 60, 4: 1160, 5: 49392}
        assert oracle_checks >= 20


# ---------------------------------------------------------------------------
# 6: the interleaved pair of edges, where the coarse count undershoots
# ---------------------------------------------------------------------------


def test_06_interleaved_first_syzygies():
    with acceptance(6, "interleaved colouring syzygy counts", 5.0):
        cx = SimplicialComplex.from_facets(["ab", "cd"])
        col = Colouring.from_tokens(cx, ["ac", "bd"])
        ideal = uniform_face_ideal(cx, col)
        table = betti_oracle(ideal)
        first = {j: r for (i, j), r in table.totals().items() if i == 1}
        assert sum(first.values()) == 9
        by_degree, coarse = first_betti_lower_bound(index_vector_poset(cx, col))
        assert sum(by_degree.values()) == 9
        assert coarse == 8


# ---------------------------------------------------------------------------
# 7: irreducible decomposition and associated primes
# ---------------------------------------------------------------------------


def test_07_decomposition_soundness():
    with acceptance(7, "irreducible decomposition soundness", 300.0):
        cx = running_complex()
        col3 = running_colouring(cx)
        col4 = four_class_colouring(cx)

        decomposition = ufi_irreducible_decomposition(cx, col3)
        assert decomposition.intersection() == uniform_face_ideal(cx, col3)
        assert ufi_associated_primes(cx, col3) == (
            ("x1", "x2"),
            ("x1", "x3"),
            ("x1", "y1"),
            ("x2", "x3"),
            ("x2", "y2"),
            ("x3", "y3"),
            ("x1", "x2", "x3"),
        )
        assert ufi_associated_primes(cx, col4) == (
            ("x1", "x2"),
            ("x1", "x4"),
            ("x1", "y1"),
            ("x2", "x4"),
            ("x2", "y2"),
            ("x3", "x4"),
            ("x3", "y3"),
            ("x4", "y4"),
            ("x1", "x2", "x3"),
        )
        square = persistence_report(cx, col4, 2)
        new_at_square = sorted(
            set(square.primes_by_power[1]) - set(square.primes_by_power[0])
        )
        assert new_at_square == [
            ("x1", "x2", "x3", "x4"),
            ("x1", "x2", "x4"),
        ]

        rng = random.Random(707)
        for _ in range(200):
            rcx, rcol = random_nested_instance(rng, max_vertices=7)
            ideal = uniform_face_ideal(rcx, rcol)
            assert ufi_irreducible_decomposition(rcx, rcol).intersection() == ideal
            assert ufi_associated_primes(rcx, rcol) == associated_primes_generic(
                ideal
            )


# ---------------------------------------------------------------------------
# 8: associated primes persist along powers
# ---------------------------------------------------------------------------


def test_08_associated_prime_persistence():
    with acceptance(8, "associated primes persist along powers", 600.0):
        cx = running_complex()
        col = four_class_colouring(cx)
        # the fourth power lives on 24 vertices, past the default guard
        wide = replace(DEFAULT_GUARDS, max_vertices=24, max_faces=20_000)
        report = persistence_report(cx, col, 4, guards=wide)
        assert [len(p) for p in report.primes_by_power] == [9, 11, 11, 11]
        assert report.inclusions == (True, True, True)

        rng = random.Random(808)
        for _ in range(50):
            rcx, rcol = random_nested_instance(rng, max_vertices=4)
            small = persistence_report(rcx, rcol, 4)
            assert small.inclusions == (True, True, True)


# ---------------------------------------------------------------------------
# 9: Hilbert series, multiplicity, and the numerical invariants
# ---------------------------------------------------------------------------


def _invariants_from_oracles(ideal: MonomialIdeal, k: int) -> dict:
    """Dimension data from the Hilbert numerator, homological data from the
    Betti oracle, with depth through the Auslander-Buchsbaum equation."""
    numerator = hilbert_numerator(ideal)
    codim = 0
    while poly_eval(numerator, 1) == 0:
        numerator = divide_by_one_minus_t(numerator)
        codim += 1
    table = betti_from_oracle(ideal)
    pdim = table.projective_dimension + 1  # resolve the quotient, not the ideal
    return {
        "codimension": codim,
        "dimension": 2 * k - codim,
        "multiplicity": poly_eval(numerator, 1),
        "projective_dimension": pdim,
        "depth": 2 * k - pdim,
        "regularity": table.regularity,
    }


def test_09_hilbert_cross_checks():
    with acceptance(9, "Hilbert series and invariants", 300.0):
        cx = running_complex()
        col = running_colouring(cx)
        ideal = uniform_face_ideal(cx, col)

        closed_q = hilbert_numerator_closed_form(cx)
        oracle_q = divide_by_one_minus_t(
            divide_by_one_minus_t(hilbert_numerator(ideal))
        )
        assert closed_q == oracle_q
        summary = hilbert_summary(cx, col)
        assert summary.multiplicity == 13 == comb(7, 2) - 8

        rng = random.Random(909)
        checked = 0
        while checked < 100:
            rcx, rcol = random_nested_instance(rng, max_vertices=7)
            rideal = uniform_face_ideal(rcx, rcol)
            if len(rideal.gens) > 22:
                continue
            s = hilbert_summary(rcx, rcol)
            n, k, d = rcx.n, rcol.k, rcx.dim
            assert s.codimension == 2
            assert s.dimension == 2 * k - 2
            assert s.projective_dimension == d + 2
            assert s.depth == 2 * (k - 1) - d
            assert s.regularity == n
            derived = _invariants_from_oracles(rideal, k)
            assert derived == {
                "codimension": s.codimension,
                "dimension": s.dimension,
                "multiplicity": s.multiplicity,
                "projective_dimension": s.projective_dimension,
                "depth": s.depth,
                "regularity": s.regularity,
            }
            checked += 1


# ---------------------------------------------------------------------------
# 10: the box complex supports the minimal free resolution
# ---------------------------------------------------------------------------


def test_10_cellular_resolution():
    with acceptance(10, "cellular resolution of the running example", 120.0):
        cx = running_complex()
        col = running_colouring(cx)
        ideal = uniform_face_ideal(cx, col)

        cubical = cubical_for(cx, col)
        assert cubical.f_vector() == (17, 28, 14, 2)

        # elementary collapses down to a single point, checked step by step
        steps = collapse_sequence(cubical)
        remaining = set(cubical.cubes)
        for free, coface in steps:
            assert free in remaining and coface in remaining
            assert is_cube_face(free, coface)
            assert cube_dim(coface) == cube_dim(free) + 1
            other_cofaces = [
                c
                for c in remaining
                if c not in (free, coface) and is_cube_face(free, c)
            ]
            assert not other_cofaces
            remaining -= {free, coface}
        assert len(remaining) == 1 and cube_dim(next(iter(remaining))) == 0

        # labels strictly grow from a box's facets to the box itself
        labels = cubical.labels()
        for cube in cubical.cubes:
            if cube_dim(cube) == 0:
                continue
            for facet in cube_facets(cube):
                facet = (facet[0], tuple(sorted(facet[1])))
                below, here = labels[facet], labels[cube]
                assert below != here
                assert all(a <= b for a, b in zip(below, here))

        distinct = set(labels.values())
        assert len(distinct) == 61
        assert distinct <= set(lcm_lattice(ideal))

        resolution = cellular_free_complex(cx, col)
        report = verify_resolution(resolution, ideal)
        assert report["ranks"] == (17, 28, 14, 2)
        assert report["squares_to_zero"]
        assert report["minimal"]
        assert report["generators_match"]
        assert report["acyclic_in_every_multidegree"]
        assert report["betti_numbers_match_oracle"]
        assert report["ok"]


# ---------------------------------------------------------------------------
# 11: products and powers stay in the family, listings permute freely
# ---------------------------------------------------------------------------


def _swap_vertices(col: Colouring, u: int, v: int) -> Colouring:
    swapped = []
    for cls in col.classes:
        swapped.append(
            tuple(v if w == u else u if w == v else w for w in cls)
        )
    return Colouring(tuple(swapped))


def test_11_product_and_power_closure():
    with acceptance(11, "product and power closure", 300.0):
        rng = random.Random(1111)
        for _ in range(100):
            cx1, col1 = random_nested_instance(rng, max_vertices=5)
            cx2, col2 = random_nested_instance(rng, max_vertices=5)
            k = max(col1.k, col2.k)
            pad1, pad2 = pad_to_k(cx1, col1, k), pad_to_k(cx2, col2, k)
            pcx, pcol, pideal = product_as_ufi((cx1, pad1), (cx2, pad2))
            left = uniform_face_ideal(cx1, pad1, allow_empty=True)
            right = uniform_face_ideal(cx2, pad2, allow_empty=True)
            assert pideal == left.multiply(right)
            assert is_nested(pcx, pcol, allow_empty=True).nested

        # exchanging two vertices with equal links leaves the ideal alone,
        # whether they sit in the same class or in different ones
        cone = SimplicialComplex.from_facets(["ab", "ac"])
        same_class = Colouring.from_tokens(cone, ["a", "bc"])
        apart = Colouring.from_tokens(cone, ["a", "b", "c"])
        for colouring in (same_class, apart):
            base = uniform_face_ideal(cone, colouring)
            swapped = _swap_vertices(colouring, 1, 2)
            assert uniform_face_ideal(cone, swapped) == base
            assert is_nested(cone, swapped).nested

        exercised = 0
        for _ in range(120):
            rcx, rcol = random_nested_instance(rng, max_vertices=6)
            pre = link_preorder(rcx)
            pairs = [
                (u, v)
                for u in range(rcx.n)
                for v in range(u + 1, rcx.n)
                if pre.equivalent(u, v)
            ]
            if not pairs:
                continue
            base = uniform_face_ideal(rcx, rcol)
            for u, v in pairs[:3]:
                swapped = _swap_vertices(rcol, u, v)
                assert uniform_face_ideal(rcx, swapped) == base
                assert is_nested(rcx, swapped).nested
            exercised += 1
            if exercised >= 25:
                break
        assert exercised >= 25

        # squaring stays in the family as well, with the kernel check inside
        cx = running_complex()
        col = running_colouring(cx)
        _, _, square = power_as_ufi(cx, col, 2)
        assert square == uniform_face_ideal(cx, col).power(2)
