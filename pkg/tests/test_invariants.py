import random
from fractions import Fraction
from math import comb

import pytest

from ufi import (
    BettiTable,
    Colouring,
    InputError,
    SimplicialComplex,
    betti_closed_form,
    betti_from_oracle,
    bsd_generic,
    bsd_ideal,
    bsd_quotient,
    hilbert_numerator_closed_form,
    hilbert_summary,
    pure_diagram,
    render_betti,
    uniform_face_ideal,
)

from conftest import random_nested_instance


def test_running_betti_closed_form(running, col_c):
    table = betti_closed_form(running, col_c)
    assert table.entries == (((0, 6), 17), ((1, 7), 28), ((2, 8), 14), ((3, 9), 2))
    assert table.projective_dimension == 3
    assert table.regularity == 6


def test_closed_form_depends_only_on_f_vector(running, col_c, col_d_nested, col_s):
    tables = {
        betti_closed_form(running, col).entries
        for col in (col_c, col_d_nested, col_s)
    }
    assert len(tables) == 1


def test_closed_form_matches_oracle_running(running, col_c):
    ideal = uniform_face_ideal(running, col_c)
    assert betti_closed_form(running, col_c).entries == betti_from_oracle(ideal).entries


def test_closed_form_matches_oracle_random():
    rng = random.Random(2024)
    checked = 0
    while checked < 10:
        cx, col = random_nested_instance(rng, max_vertices=5)
        ideal = uniform_face_ideal(cx, col)
        if len(ideal.gens) > 20:
            continue
        assert betti_closed_form(cx, col).entries == betti_from_oracle(ideal).entries
        checked += 1


def test_betti_zeroth_row_counts_faces(running, col_c):
    # beta_0 equals the number of generators equals the number of faces
    table = dict(betti_closed_form(running, col_c).entries)
    assert sum(v for (i, _j), v in table.items() if i == 0) == sum(running.f_vector)


def test_render_betti_running_ideal(running, col_c):
    out = render_betti(betti_closed_form(running, col_c))
    assert out.splitlines() == [
        "     0   1   2  3",
        "6:  17  28  14  2",
    ]


def test_render_betti_running_quotient(running, col_c):
    out = render_betti(betti_closed_form(running, col_c).quotient())
    assert out.splitlines() == [
        "    0   1   2   3  4",
        "0:  1   .   .   .  .",
        "5:  .  17  28  14  2",
    ]


def test_render_betti_suppresses_zero_rows():
    table = BettiTable.from_dict({(0, 0): 1, (1, 3): 6, (2, 4): 7, (3, 5): 2})
    assert render_betti(table).splitlines() == [
        "    0  1  2  3",
        "0:  1  .  .  .",
        "2:  .  6  7  2",
    ]


def test_betti_table_round_trip():
    entries = {(0, 2): 3, (1, 3): 2}
    table = BettiTable.from_dict(entries)
    assert table.as_dict() == entries


def test_quotient_shifts_homological_degree(running, col_c):
    q = betti_closed_form(running, col_c).quotient()
    assert q.entries == (
        ((0, 0), 1),
        ((1, 6), 17),
        ((2, 7), 28),
        ((3, 8), 14),
        ((4, 9), 2),
    )


# ---------------------------------------------------------------------------
# Hilbert series data
# ---------------------------------------------------------------------------


def test_hilbert_summary_running(running, col_c):
    hs = hilbert_summary(running, col_c)
    assert hs.n == 6
    assert hs.k == 3
    assert hs.f_vector == (1, 6, 8, 2)
    assert hs.numerator == {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: -10, 7: 2}
    assert hs.dimension == 4
    assert hs.codimension == 2
    assert hs.multiplicity == 13
    assert hs.projective_dimension == 4
    assert hs.depth == 2
    assert hs.regularity == 6
    assert not hs.cohen_macaulay


def test_multiplicity_complement_identity(running, col_c):
    # e(R/I) = binom(n+1, 2) - sum of colourful-nonface corrections; for the
    # running example it lands at binom(7, 2) - 8
    hs = hilbert_summary(running, col_c)
    assert hs.multiplicity == comb(7, 2) - 8


def test_hilbert_closed_form_matches_summary(running, col_c):
    assert hilbert_numerator_closed_form(running) == hilbert_summary(
        running, col_c
    ).numerator


def test_summary_invariant_formulas_random():
    rng = random.Random(99)
    for _ in range(25):
        cx, col = random_nested_instance(rng, max_vertices=6)
        hs = hilbert_summary(cx, col)
        k = len([c for c in col.classes if c])
        d = cx.dim
        assert hs.codimension == 2
        assert hs.dimension == 2 * hs.k - 2
        assert hs.projective_dimension == d + 2
        assert hs.depth == 2 * (hs.k - 1) - d
        assert hs.regularity == hs.n
        assert hs.cohen_macaulay == (d == 0)
        assert hs.depth + hs.projective_dimension == 2 * hs.k
        assert k <= hs.k


def test_summary_zero_ring():
    empty = SimplicialComplex.from_facets([""])
    hs = hilbert_summary(empty, Colouring(()))
    assert (hs.n, hs.k) == (0, 0)
    assert hs.numerator == {}
    assert hs.dimension == -1
    assert hs.multiplicity == 0
    assert hs.cohen_macaulay


def test_summary_point():
    pt = SimplicialComplex.from_facets(["a"])
    hs = hilbert_summary(pt, Colouring.from_tokens(pt, ["a"]))
    assert hs.dimension == 0
    assert hs.multiplicity == 1
    assert hs.projective_dimension == 2
    assert hs.depth == 0
    assert hs.cohen_macaulay


# ---------------------------------------------------------------------------
# Boij-Soederberg style decompositions
# ---------------------------------------------------------------------------


def test_pure_diagram_entries():
    pd = pure_diagram((6, 7, 8, 9))
    assert pd.entries() == {
        (0, 6): Fraction(1, 6),
        (1, 7): Fraction(1, 2),
        (2, 8): Fraction(1, 2),
        (3, 9): Fraction(1, 6),
    }


def test_pure_diagram_validation():
    with pytest.raises(InputError):
        pure_diagram((3, 3))
    with pytest.raises(InputError):
        pure_diagram(())


def test_pure_diagram_chain_order():
    # longer diagrams sit lower in the decomposition chain
    assert pure_diagram((6, 7, 8, 9)) <= pure_diagram((6, 7, 8))
    assert pure_diagram((6, 7, 8)) <= pure_diagram((6, 7))
    assert not (pure_diagram((6, 7)) <= pure_diagram((6, 7, 8)))
    assert pure_diagram((6, 7)) <= pure_diagram((6, 8))


def test_bsd_ideal_running(running):
    decomp = bsd_ideal(running)
    assert [(c, d.degrees) for c, d in decomp.terms] == [
        (12, (6, 7, 8, 9)),
        (16, (6, 7, 8)),
        (6, (6, 7)),
        (1, (6,)),
    ]
    assert decomp.check_chain()


def test_bsd_quotient_running(running):
    decomp = bsd_quotient(running)
    assert [(c, d.degrees) for c, d in decomp.terms] == [
        (108, (0, 6, 7, 8, 9)),
        (116, (0, 6, 7, 8)),
        (26, (0, 6, 7)),
    ]
    assert decomp.check_chain()


def test_bsd_reconstructs_tables_exactly(running, col_c):
    table = betti_closed_form(running, col_c)
    assert bsd_ideal(running).table() == dict(table.entries)
    assert bsd_quotient(running).table() == dict(table.quotient().entries)


def test_bsd_generic_greedy_agrees_running(running, col_c):
    table = betti_closed_form(running, col_c)
    greedy = bsd_generic(table)
    assert [(c, d.degrees) for c, d in greedy.terms] == [
        (12, (6, 7, 8, 9)),
        (16, (6, 7, 8)),
        (6, (6, 7)),
        (1, (6,)),
    ]
    assert greedy.table() == dict(table.entries)


def test_bsd_generic_agrees_random():
    rng = random.Random(606)
    for _ in range(15):
        cx, col = random_nested_instance(rng, max_vertices=6)
        table = betti_closed_form(cx, col)
        closed = bsd_ideal(cx)
        greedy = bsd_generic(table)
        assert greedy.table() == dict(table.entries)
        assert [(c, d.degrees) for c, d in closed.terms] == [
            (c, d.degrees) for c, d in greedy.terms
        ]
        quotient = bsd_generic(table.quotient())
        assert quotient.table() == dict(table.quotient().entries)
        assert quotient.check_chain()


def test_bsd_coefficients_from_f_vector(running):
    # coefficient on pi(n..n+j) is j! * f_{j-1}
    f = running.f_vector
    decomp = bsd_ideal(running)
    coeffs = {len(d.degrees) - 1: c for c, d in decomp.terms}
    from math import factorial

    for j, fj in enumerate(f):
        if fj:
            assert coeffs[j] == factorial(j) * fj
