"""Uniform face ideals: faces of a coloured complex to monomials and back.

A complex Delta on coloured vertices turns each face sigma into the monomial

    prod_i  x_i^(#C_i - e_i) * y_i^(e_i)

where e_i records which member of the i-th class sigma uses (1-based position
in the listed class order, 0 if the class is missed).  The ideal generated by
all face monomials is equigenerated in degree n = number of vertices, with one
minimal generator per face of Delta.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .colouring import Colouring, is_proper, properness_witness
from .errors import DEFAULT_GUARDS, Guards, InputError, PreconditionError, UfiError
from .monomial import BorelPoset, Expt, MonomialIdeal
from .simplicial import SimplicialComplex, _bits


def ufi_variables(k: int) -> tuple[str, ...]:
    """The ring variables, grouped: x1..xk then y1..yk."""
    if k < 0:
        raise InputError(f"number of classes must be nonnegative; got {k}")
    return tuple(f"x{i}" for i in range(1, k + 1)) + tuple(
        f"y{i}" for i in range(1, k + 1)
    )


def q_k_poset(k: int) -> BorelPoset:
    """The poset on x1..xk,y1..yk with x_i < y_i and nothing else comparable."""
    return BorelPoset(2 * k, [(i, k + i) for i in range(k)])


def index_vector(
    complex_: SimplicialComplex, colouring: Colouring, face_mask: int
) -> tuple[int, ...]:
    """The vector (e_1, ..., e_k) of 1-based class positions used by a face.

    A face may meet each colour class at most once; two vertices of the face
    in one class mean the colouring is not proper on this face.
    """
    e = [0] * colouring.k
    for v in _bits(face_mask):
        ci = colouring.class_of(v)
        if e[ci]:
            raise PreconditionError(
                f"face {complex_.format_face(face_mask)!r} meets class {ci + 1} twice"
            )
        e[ci] = colouring.position_in_class(v)
    return tuple(e)


def uniform_monomial(colouring: Colouring, e: Sequence[int]) -> Expt:
    """Exponent vector of prod x_i^(#C_i - e_i) y_i^(e_i) for an index vector."""
    if len(e) != colouring.k:
        raise InputError(f"index vector has length {len(e)}; expected {colouring.k}")
    sizes = [len(c) for c in colouring.classes]
    for i, (ei, ci) in enumerate(zip(e, sizes)):
        if not 0 <= ei <= ci:
            raise InputError(
                f"index {ei} out of range 0..{ci} for class {i + 1}"
            )
    return tuple(ci - ei for ei, ci in zip(e, sizes)) + tuple(e)


def face_for_index_vector(colouring: Colouring, e: Sequence[int]) -> int:
    """Vertex mask of the face with the given index vector."""
    mask = 0
    for i, ei in enumerate(e):
        if ei:
            mask |= 1 << colouring.classes[i][ei - 1]
    return mask


def uniform_face_ideal(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> MonomialIdeal:
    """The uniform face ideal of a complex with a proper ordered colouring."""
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
    variables = ufi_variables(colouring.k)
    gens = [
        uniform_monomial(colouring, index_vector(complex_, colouring, f))
        for f in complex_.faces
    ]
    ideal = MonomialIdeal(variables, gens)
    # all generators share degree n and are incomparable, so none collapse
    assert len(ideal.gens) == len(complex_.faces)
    return ideal


def face_monomial_tags(
    complex_: SimplicialComplex, colouring: Colouring
) -> tuple[tuple[str, str, str], ...]:
    """(face, index vector, monomial) display triples, in canonical face order."""
    variables = ufi_variables(colouring.k)
    from .monomial import format_monomial

    out = []
    for f in complex_.faces:
        e = index_vector(complex_, colouring, f)
        m = uniform_monomial(colouring, e)
        vector = "(" + ",".join(str(x) for x in e) + ")"
        out.append(
            (complex_.format_face(f), vector, format_monomial(variables, m))
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# products and powers of uniform face ideals are again uniform face ideals
# ---------------------------------------------------------------------------


def _vector_sums(
    first: set[tuple[int, ...]], second: set[tuple[int, ...]]
) -> set[tuple[int, ...]]:
    return {
        tuple(a + b for a, b in zip(e, f))
        for e, f in product(first, second)
    }


def _complex_from_vectors(
    vectors: set[tuple[int, ...]],
    class_sizes: Sequence[int],
    label_prefix: str,
) -> tuple[SimplicialComplex, Colouring]:
    """Rebuild a coloured complex whose faces have exactly the given vectors.

    The vertex for position j of class i is labelled ``<prefix><i>.<j>`` and
    the classes are listed in position order, so index vectors carry over.
    """
    labels: list[str] = []
    classes: list[tuple[int, ...]] = []
    for i, size in enumerate(class_sizes):
        cls = []
        for j in range(1, size + 1):
            cls.append(len(labels))
            labels.append(f"{label_prefix}{i + 1}.{j}")
        classes.append(tuple(cls))
    facet_masks = []
    for e in vectors:
        mask = 0
        for i, ei in enumerate(e):
            if ei:
                mask |= 1 << classes[i][ei - 1]
        facet_masks.append(mask)
    complex_ = SimplicialComplex(labels, facet_masks, allow_uncovered=True)
    return complex_, Colouring(classes)


def _check_downward_closed(
    vectors: set[tuple[int, ...]], what: str
) -> None:
    for e in vectors:
        for i, ei in enumerate(e):
            if ei:
                dropped = e[:i] + (0,) + e[i + 1 :]
                if dropped not in vectors:
                    raise UfiError(
                        f"{what} index vectors are not closed under dropping "
                        f"a class; {e} is present but {dropped} is not"
                    )


def product_as_ufi(
    first: tuple[SimplicialComplex, Colouring],
    second: tuple[SimplicialComplex, Colouring],
    *,
    guards: Guards = DEFAULT_GUARDS,
) -> tuple[SimplicialComplex, Colouring, MonomialIdeal]:
    """A coloured complex whose uniform face ideal is the product of two others.

    Both inputs must be coloured with the same number of classes.  The class
    sizes of the result are the sums of the input class sizes, and the index
    vectors of the result are exactly the coordinatewise sums of input index
    vectors.  The returned ideal is recomputed from the new complex and checked
    against the literal product of the two input ideals.
    """
    (cx1, col1), (cx2, col2) = first, second
    if col1.k != col2.k:
        raise PreconditionError(
            f"colourings have {col1.k} and {col2.k} classes; the product needs "
            "equal counts (pad with empty classes if necessary)"
        )
    ideal1 = uniform_face_ideal(cx1, col1, allow_empty=True, guards=guards)
    ideal2 = uniform_face_ideal(cx2, col2, allow_empty=True, guards=guards)
    vecs1 = {index_vector(cx1, col1, f) for f in cx1.faces}
    vecs2 = {index_vector(cx2, col2, f) for f in cx2.faces}
    sums = _vector_sums(vecs1, vecs2)
    _check_downward_closed(sums, "product")
    sizes = [a + b for a, b in zip(
        (len(c) for c in col1.classes), (len(c) for c in col2.classes)
    )]
    guards.check_vertices(sum(sizes))
    guards.check_faces(len(sums))
    complex_, colouring = _complex_from_vectors(sums, sizes, "e")
    ideal = uniform_face_ideal(
        complex_, colouring, allow_empty=True, guards=guards
    )
    expected = ideal1.multiply(ideal2)
    if ideal != expected:
        raise UfiError(
            "product reconstruction failed: the rebuilt ideal does not equal "
            "the product of the inputs"
        )
    return complex_, colouring, ideal


def power_as_ufi(
    complex_: SimplicialComplex,
    colouring: Colouring,
    t: int,
    *,
    guards: Guards = DEFAULT_GUARDS,
) -> tuple[SimplicialComplex, Colouring, MonomialIdeal]:
    """A coloured complex whose uniform face ideal is the t-th power of I.

    Classes grow to t times their size; faces are t-fold sums of index
    vectors.  The returned ideal is checked against the literal power.
    """
    if t < 1:
        raise InputError(f"power must be at least 1; got {t}")
    guards.check_power(t)
    ideal = uniform_face_ideal(complex_, colouring, allow_empty=True, guards=guards)
    vecs = {index_vector(complex_, colouring, f) for f in complex_.faces}
    sums = vecs
    for _ in range(t - 1):
        sums = _vector_sums(sums, vecs)
    _check_downward_closed(sums, "power")
    sizes = [t * len(c) for c in colouring.classes]
    guards.check_vertices(sum(sizes))
    guards.check_faces(len(sums))
    power_complex, power_colouring = _complex_from_vectors(sums, sizes, "p")
    power_ideal = uniform_face_ideal(
        power_complex, power_colouring, allow_empty=True, guards=guards
    )
    expected = ideal.power(t)
    if power_ideal != expected:
        raise UfiError(
            "power reconstruction failed: the rebuilt ideal does not equal "
            f"the {t}-th power of the input"
        )
    return power_complex, power_colouring, power_ideal
