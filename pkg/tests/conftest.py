"""Shared fixtures: the running example, small named complexes, and a seeded
generator of random nested instances used by the statistical suites."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from ufi import (
    Colouring,
    DEFAULT_GUARDS,
    SimplicialComplex,
    nested_chromatic_number,
)

RUNNING_FACETS = ["abc", "bcd", "ce", "de", "df"]


@pytest.fixture(scope="session")
def running():
    """Delta = <abc, bcd, ce, de, df> on a..f."""
    return SimplicialComplex.from_facets(RUNNING_FACETS)


@pytest.fixture(scope="session")
def col_c(running):
    """The nested 3-colouring {d,a} | {b,e} | {c,f}, listed in nesting order."""
    return Colouring.from_tokens(running, ["da", "be", "cf"])


@pytest.fixture(scope="session")
def col_d_nested(running):
    """The nested 4-colouring {d,a} | {b,e} | {c} | {f}."""
    return Colouring.from_tokens(running, ["da", "be", "c", "f"])


@pytest.fixture(scope="session")
def col_d_golden(running):
    """The non-nested 4-colouring {a,f} | {b,e} | {c} | {d}."""
    return Colouring.from_tokens(running, ["af", "be", "c", "d"])


@pytest.fixture(scope="session")
def col_s(running):
    """The singleton colouring {a} | ... | {f}."""
    return Colouring.from_tokens(running, list("abcdef"))


@pytest.fixture(scope="session")
def gamma():
    """Gamma = <abc, bd, cde>: chromatic number 3, nested chromatic number 5."""
    return SimplicialComplex.from_facets(["abc", "bd", "cde"])


@pytest.fixture(scope="session")
def awkward():
    """Two disjoint edges with the interleaved colouring {a,c} | {b,d}."""
    cx = SimplicialComplex.from_facets(["ab", "cd"])
    return cx, Colouring.from_tokens(cx, ["ac", "bd"])


# ---------------------------------------------------------------------------
# random nested instances
# ---------------------------------------------------------------------------

_LETTERS = "abcdefghijklmnopqrst"


def random_complex(rng: random.Random, max_vertices: int = 7) -> SimplicialComplex:
    """A random nonvoid complex in which every vertex is a face."""
    n = rng.randint(1, max_vertices)
    verts = list(_LETTERS[:n])
    candidates = [
        set(c)
        for size in (2, 3, 4)
        if size <= n
        for c in combinations(verts, size)
    ]
    count = rng.randint(0, min(len(candidates), 7))
    faces = rng.sample(candidates, count) if count else []
    facets = [set(v) for v in verts] + faces
    return SimplicialComplex.from_facets(
        ["".join(sorted(f)) for f in facets], vertices=verts
    )


def random_nested_instance(rng: random.Random, max_vertices: int = 7):
    """A random complex together with a nested colouring in nesting order."""
    cx = random_complex(rng, max_vertices)
    _chi, colouring, _antichain = nested_chromatic_number(cx, DEFAULT_GUARDS)
    return cx, colouring


def pad_to_k(cx: SimplicialComplex, colouring: Colouring, k: int) -> Colouring:
    """Append empty colour classes so the colouring has exactly k classes."""
    if colouring.k > k:
        raise ValueError("cannot shrink a colouring")
    classes = [tuple(c) for c in colouring.classes]
    classes += [()] * (k - len(classes))
    return Colouring(tuple(classes))
