"""Homological invariants: Betti tables, Hilbert data, pure-diagram decompositions.

The face ideal of a nested colouring (classes listed largest link first) has a
linear resolution, so everything here has a closed form in the f-vector of the
complex; the oracle routes in :mod:`ufi.oracles` recompute the same data from
first principles and the two are kept separate deliberately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .colouring import Colouring
from .errors import DEFAULT_GUARDS, Guards, InputError, PreconditionError
from .exact import Poly, divide_by_one_minus_t, poly_eval, poly_str
from .monomial import MonomialIdeal
from .oracles import betti_oracle
from .poset import index_vector_poset, is_order_ideal
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers: (homological index, internal degree) -> rank."""

    entries: tuple  # sorted ((i, j), rank) pairs, ranks positive

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        cleaned = {key: r for key, r in data.items() if r}
        return cls(tuple(sorted(cleaned.items())))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, key) -> int:
        return dict(self.entries).get(key, 0)

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _j), _r in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), _r in self.entries), default=0)

    def quotient(self) -> "BettiTable":
        """The table of R/I given the table of I: shift and add the free rank."""
        shifted = {(i + 1, j): r for (i, j), r in self.entries}
        shifted[(0, 0)] = 1
        return BettiTable.from_dict(shifted)


def betti_from_oracle(ideal: MonomialIdeal, guards: Guards = DEFAULT_GUARDS) -> BettiTable:
    """Total Betti table of an ideal via the multigraded homological oracle."""
    return BettiTable.from_dict(betti_oracle(ideal, guards).total())


def betti_closed_form(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> BettiTable:
    """Betti table of the face ideal, straight from the f-vector.

    beta_{i, n+i} = sum_j C(j, i) f_{j-1}; needs the classes listed in
    nesting order (the index-vector poset must be an order ideal), which is
    exactly when the resolution is linear and this formula applies.
    """
    poset = index_vector_poset(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    if not is_order_ideal(poset):
        raise PreconditionError(
            "classes are not listed in nesting order; the closed form needs a "
            "linear resolution — use the homological oracle instead"
        )
    f = complex_.f_vector
    n = complex_.n
    entries = {}
    for i in range(len(f)):
        rank = sum(comb(j, i) * f[j] for j in range(i, len(f)))
        if rank:
            entries[(i, n + i)] = rank
    return BettiTable.from_dict(entries)


def render_betti(table: BettiTable) -> str:
    """Fixed-width table, one column per homological index, rows by j - i.

    Rows with no entries are dropped; zeros inside a kept row print as
    periods.
    """
    if not table.entries:
        return "(empty table)"
    data = table.as_dict()
    cols = sorted({i for i, _j in data})
    lo, hi = min(cols), max(cols)
    cols = list(range(lo, hi + 1))
    rows = sorted({j - i for i, j in data})
    cells: dict[tuple, str] = {}
    for r in rows:
        for c in cols:
            val = data.get((c, c + r), 0)
            cells[(r, c)] = str(val) if val else "."
    row_labels = [f"{r}:" for r in rows]
    label_w = max(len(s) for s in row_labels)
    col_w = [
        max(len(str(c)), max(len(cells[(r, c)]) for r in rows)) for c in cols
    ]
    lines = [
        " " * label_w
        + "".join(f"  {str(c).rjust(w)}" for c, w in zip(cols, col_w))
    ]
    for r, label in zip(rows, row_labels):
        lines.append(
            label.rjust(label_w)
            + "".join(f"  {cells[(r, c)].rjust(w)}" for c, w in zip(cols, col_w))
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Hilbert series and the usual numerical invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSummary:
    """Numerical invariants of R/I for a nested colouring order.

    ``numerator`` is the polynomial Q with Hilbert series Q(t)/(1-t)^dimension.
    ``projective_dimension`` and ``regularity`` refer to the quotient and the
    ideal respectively: pdim(R/I) = dim(complex) + 2, while reg(I) = n because
    the resolution is linear.  For the empty-complex ideal <1> the quotient is
    the zero ring and the conventions are: Q = 0, dimension -1, codimension
    2k, multiplicity 0, projective dimension 0, depth 0, regularity 0, and
    Cohen–Macaulay true.
    """

    n: int
    k: int
    f_vector: tuple
    numerator: dict
    dimension: int
    codimension: int
    multiplicity: int
    projective_dimension: int
    depth: int
    regularity: int
    cohen_macaulay: bool

    @property
    def numerator_str(self) -> str:
        return poly_str(self.numerator)


def hilbert_numerator_closed_form(complex_: SimplicialComplex) -> Poly:
    """Q(t) with H_{R/I}(t) = Q(t)/(1-t)^(2k-2), from the f-vector alone."""
    n = complex_.n
    f = complex_.f_vector
    q: Poly = {i: i + 1 for i in range(n)}
    # subtract t^n * sum_{i >= 2} f_{i-1} (1-t)^(i-2)
    for i in range(2, len(f)):
        coeff = f[i]
        binom = {e: comb(i - 2, e) * (-1) ** e for e in range(i - 1)}
        for e, c in binom.items():
            key = n + e
            q[key] = q.get(key, 0) - coeff * c
    return {e: c for e, c in q.items() if c}


def hilbert_summary(
    complex_: SimplicialComplex,
    colouring: Colouring,
    *,
    allow_empty: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> HilbertSummary:
    """All the standard invariants of R/I, by closed form.

    Requires the classes in nesting order, like the closed Betti form.
    """
    poset = index_vector_poset(
        complex_, colouring, allow_empty=allow_empty, guards=guards
    )
    if not is_order_ideal(poset):
        raise PreconditionError(
            "classes are not listed in nesting order; closed-form invariants "
            "do not apply"
        )
    n = complex_.n
    k = colouring.k
    f = complex_.f_vector
    if n == 0:
        return HilbertSummary(
            n=0,
            k=k,
            f_vector=f,
            numerator={},
            dimension=-1,
            codimension=2 * k,
            multiplicity=0,
            projective_dimension=0,
            depth=0,
            regularity=0,
            cohen_macaulay=True,
        )
    q = hilbert_numerator_closed_form(complex_)
    dim_delta = complex_.dim
    multiplicity = poly_eval(q, 1)
    f1 = f[2] if len(f) > 2 else 0
    assert multiplicity == comb(n + 1, 2) - f1
    pdim = dim_delta + 2
    return HilbertSummary(
        n=n,
        k=k,
        f_vector=f,
        numerator=q,
        dimension=2 * k - 2,
        codimension=2,
        multiplicity=multiplicity,
        projective_dimension=pdim,
        depth=2 * k - pdim,
        regularity=n,
        cohen_macaulay=dim_delta == 0,
    )


# ---------------------------------------------------------------------------
# pure diagrams and decompositions of Betti tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PureDiagram:
    """The pure diagram pi(d): entry |prod_{j != i} 1/(d_j - d_i)| at (i, d_i)."""

    degrees: tuple

    def __post_init__(self):
        d = self.degrees
        if not d or any(a >= b for a, b in zip(d, d[1:])):
            raise InputError(f"degrees must increase strictly; got {d}")

    def entry(self, i: int) -> Fraction:
        d = self.degrees
        value = Fraction(1)
        for j, dj in enumerate(d):
            if j != i:
                value /= abs(dj - d[i])
        return value

    def entries(self) -> dict:
        return {(i, di): self.entry(i) for i, di in enumerate(self.degrees)}

    def __le__(self, other: "PureDiagram") -> bool:
        """Longer diagrams are smaller; degrees compare on the shared prefix."""
        if len(self.degrees) < len(other.degrees):
            return False
        return all(a <= b for a, b in zip(self.degrees, other.degrees))


def pure_diagram(degrees) -> PureDiagram:
    return PureDiagram(tuple(int(d) for d in degrees))


@dataclass(frozen=True)
class BSDecomposition:
    """A Betti table as a positive combination along a chain of pure diagrams."""

    terms: tuple  # ((coefficient, PureDiagram) pairs, largest diagram last)

    def table(self) -> dict:
        out: dict[tuple, Fraction] = {}
        for coeff, diagram in self.terms:
            for key, val in diagram.entries().items():
                out[key] = out.get(key, 0) + coeff * val
        return {key: val for key, val in out.items() if val}

    def check_chain(self) -> bool:
        diagrams = [d for _c, d in self.terms]
        return all(a <= b for a, b in zip(diagrams, diagrams[1:]))


def bsd_ideal(complex_: SimplicialComplex) -> BSDecomposition:
    """Decomposition of the face-ideal Betti table; integral by construction.

    The coefficient on pi(n, ..., n+j) is j! * f_{j-1}, for j from the top
    dimension down to 0 — an ascending chain of diagrams.
    """
    complex_._require_nonvoid()
    n = complex_.n
    f = complex_.f_vector
    terms = []
    for j in range(len(f) - 1, -1, -1):
        coeff = factorial(j) * f[j]
        if coeff:
            terms.append((coeff, pure_diagram(range(n, n + j + 1))))
    decomp = BSDecomposition(tuple(terms))
    assert decomp.check_chain()
    return decomp


def bsd_quotient(complex_: SimplicialComplex) -> BSDecomposition:
    """Decomposition of the quotient Betti table, again with integer weights.

    The coefficient on pi(0, n, ..., n+j) is
    j! * (n * f_{j-1} + sum_v (f_{j-2}(link v) - f_{j-1}(link v))).
    """
    complex_._require_nonvoid()
    n = complex_.n
    if n == 0:
        raise InputError("the zero ring has no Betti table to decompose")
    f = complex_.f_vector
    link_f = []
    for v in range(n):
        link = complex_.link(1 << v)
        link_f.append(link.f_vector)
    terms = []
    for j in range(len(f) - 1, 0, -1):
        total = n * f[j]
        for lf in link_f:
            f_low = lf[j - 1] if j - 1 < len(lf) else 0
            f_high = lf[j] if j < len(lf) else 0
            total += f_low - f_high
        coeff = factorial(j) * total
        assert coeff >= 0
        if coeff:
            terms.append((coeff, pure_diagram((0, *range(n, n + j + 1)))))
    decomp = BSDecomposition(tuple(terms))
    assert decomp.check_chain()
    return decomp


def bsd_generic(table: BettiTable) -> BSDecomposition:
    """Greedy decomposition of any Betti table along its top strand.

    Repeatedly read the minimal degree in each homological column, subtract
    the largest multiple of that pure diagram that keeps the table
    nonnegative, and recurse; raises if the table is not a nonnegative
    combination of pure diagrams (then it is not the Betti table of a
    Cohen–Macaulay module).
    """
    work: dict[tuple, Fraction] = {
        key: Fraction(r) for key, r in table.entries
    }
    terms = []
    while work:
        cols = sorted({i for i, _j in work})
        if cols[0] != 0 or cols != list(range(len(cols))):
            raise InputError("table has missing homological columns; cannot peel")
        degrees = []
        for i in cols:
            degrees.append(min(j for (c, j) in work if c == i))
        if any(a >= b for a, b in zip(degrees, degrees[1:])):
            raise InputError(
                f"top strand {tuple(degrees)} is not strictly increasing; "
                "not a valid decomposition target"
            )
        diagram = pure_diagram(degrees)
        coeff = min(
            work[(i, di)] / diagram.entry(i) for i, di in enumerate(degrees)
        )
        assert coeff > 0
        for key, val in diagram.entries().items():
            rest = work.get(key, Fraction(0)) - coeff * val
            if rest < 0:
                raise InputError("table is not a nonnegative chain combination")
            if rest:
                work[key] = rest
            else:
                work.pop(key, None)
        terms.append((coeff, diagram))
    decomp = BSDecomposition(tuple(terms))
    if not decomp.check_chain():
        raise InputError("greedy peel did not produce a chain of diagrams")
    assert decomp.table() == {key: Fraction(r) for key, r in table.entries}
    return decomp
