"""Irreducible decompositions, associated primes, and persistence under powers.

For a nested colouring listed in nesting order, the face ideal decomposes in
closed form: one component (x_i^j, y_i^{#C_i-j+1}) per class position, plus
one component (x_j^{#C_j-e_j+1} : e_j > 0) per minimal element e of the
colourful minimal non-face vectors.  The intersection is always re-verified
against the ideal itself, and associated primes are the radicals of the
surviving components — identical to the closed-form prime list whenever every
vertex of the complex is a face (on degenerate complexes without singleton
faces some class components drop out as redundant).
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import Colouring
from .errors import DEFAULT_GUARDS, Guards, PreconditionError, UfiError
from .monomial import MonomialIdeal, irreducible_ideal
from .poset import index_vector_poset, is_order_ideal, minimal_nonface_poset
from .simplicial import SimplicialComplex
from .uniform import power_as_ufi, ufi_variables, uniform_face_ideal


@dataclass(frozen=True)
class UfiDecomposition:
    """Closed-form irredundant irreducible decomposition of a face ideal."""

    variables: tuple
    class_components: tuple  # ((i, j), MonomialIdeal) with i, j 1-based
    nonface_components: tuple  # (e, MonomialIdeal) indexed by minimal vectors

    @property
    def components(self) -> tuple:
        return tuple(c for _key, c in self.class_components) + tuple(
            c for _key, c in self.nonface_components
        )

    def intersection(self) -> MonomialIdeal:
        result = MonomialIdeal(self.variables, [(0,) * len(self.variables)])
        for component in self.components:
            result = result.intersect(component)
        return result

    def primes(self) -> tuple:
        """Radicals of the components: the associated primes of the quotient."""
        seen = []
        for component in self.components:
            support = frozenset(
                i for g in component.gens for i, x in enumerate(g) if x
            )
            if support not in seen:
                seen.append(support)
        return tuple(
            tuple(self.variables[i] for i in sorted(s))
            for s in sorted(seen, key=lambda s: (len(s), sorted(s)))
        )


def _require_nesting_order(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool,
    guards: Guards,
) -> None:
    poset = index_vector_poset(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    if not is_order_ideal(poset):
        raise PreconditionError(
            "classes are not listed in nesting order; the closed-form "
            "decomposition does not apply — use the generic splitter instead"
        )


def ufi_irreducible_decomposition(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> UfiDecomposition:
    """The closed-form decomposition, verified against the ideal exactly."""
    _require_nesting_order(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    k = colouring.k
    variables = ufi_variables(k)
    sizes = [len(c) for c in colouring.classes]
    class_entries = []
    for i in range(k):
        for j in range(1, sizes[i] + 1):
            e = [0] * (2 * k)
            e[i] = j
            e[k + i] = sizes[i] - j + 1
            class_entries.append(((i + 1, j), tuple(e)))
    nonfaces = minimal_nonface_poset(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    nonface_entries = []
    for e in nonfaces.minimal_elements:
        expt = [0] * (2 * k)
        for i, ei in enumerate(e):
            if ei:
                expt[i] = sizes[i] - ei + 1
        nonface_entries.append((e, tuple(expt)))

    ideal = uniform_face_ideal(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    vectors = [v for _key, v in class_entries + nonface_entries]
    full = MonomialIdeal(variables, [(0,) * (2 * k)])
    for v in vectors:
        full = full.intersect(irreducible_ideal(variables, v))
    if full != ideal:
        raise UfiError(
            "closed-form decomposition failed verification: the intersection "
            "of the components does not equal the face ideal"
        )

    def inside(inner, outer) -> bool:
        # the irreducible ideal of `inner` sits inside that of `outer`
        return all(0 < outer[j] <= x for j, x in enumerate(inner) if x)

    # A component is redundant exactly when a single other component lies
    # inside it: if every other component escaped, the lcm of one escaping
    # pure power apiece would lie in their intersection yet outside this one.
    # (Redundancy only occurs when some vertex is not a face.)
    def redundant(idx: int) -> bool:
        return any(
            m != idx and inside(vectors[m], vectors[idx])
            for m in range(len(vectors))
        )

    kept_class = tuple(
        (key, irreducible_ideal(variables, v))
        for idx, (key, v) in enumerate(class_entries)
        if not redundant(idx)
    )
    offset = len(class_entries)
    kept_nonface = tuple(
        (key, irreducible_ideal(variables, v))
        for idx, (key, v) in enumerate(nonface_entries)
        if not redundant(offset + idx)
    )
    return UfiDecomposition(variables, kept_class, kept_nonface)


def ufi_associated_primes(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> tuple:
    """Associated primes of R/I: (x_i, y_i) per class plus one prime per
    minimal non-face vector, supported on its positive coordinates."""
    return ufi_irreducible_decomposition(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    ).primes()


def is_unmixed(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> bool:
    """Whether all minimal associated primes have the same height.

    Heights are cardinalities; only inclusion-minimal primes count, so
    embedded primes of larger support do not break unmixedness.
    """
    primes = [
        frozenset(p)
        for p in ufi_associated_primes(
            complex_, colouring, allow_empty=allow_empty, guards=guards
        )
    ]
    minimal = [
        p for p in primes if not any(q != p and q < p for q in primes)
    ]
    return len({len(p) for p in minimal}) <= 1


@dataclass(frozen=True)
class PersistenceReport:
    """Associated primes of the powers of a face ideal, with inclusion flags."""

    primes_by_power: tuple  # primes_by_power[i] belongs to power i+1
    inclusions: tuple  # inclusions[i]: power i+1 primes inside power i+2 primes

    @property
    def persistent(self) -> bool:
        return all(self.inclusions)


def persistence_report(
    complex_: SimplicialComplex,
    colouring: Colouring,
    max_power: int,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> PersistenceReport:
    """Ass(R/I^t) for t = 1 .. max_power, with the inclusion chain checked.

    Each power is realised as the face ideal of its own coloured complex, so
    the closed-form prime list applies at every power.  The inclusions
    Ass(R/I^t) within Ass(R/I^(t+1)) are recomputed, not assumed; a failure
    here would falsify the persistence property and raises immediately.
    """
    guards.check_power(max_power)
    _require_nesting_order(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    by_power = []
    for t in range(1, max_power + 1):
        if t == 1:
            power_complex, power_colouring = complex_, colouring
        else:
            power_complex, power_colouring, _ideal = power_as_ufi(
                complex_, colouring, t, guards=guards
            )
        # every power lives in the same ring K[x1..xk, y1..yk], so the prime
        # sets are directly comparable across powers
        primes = ufi_associated_primes(
            power_complex, power_colouring, allow_empty=True, guards=guards
        )
        by_power.append(primes)
    inclusions = []
    for a, b in zip(by_power, by_power[1:]):
        inclusions.append(frozenset(a) <= frozenset(b))
    report = PersistenceReport(tuple(by_power), tuple(inclusions))
    if not report.persistent:
        raise UfiError(
            "associated primes failed to persist across powers: "
            f"{[sorted(map(str, p)) for p in report.primes_by_power]}"
        )
    return report
