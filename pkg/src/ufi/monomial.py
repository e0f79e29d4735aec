"""Monomial ideals with exact exponent-vector arithmetic.

Monomials are exponent tuples over a fixed ordered variable list; ideals store
their unique minimal generators in a canonical order (degree, then exponents).
This module also houses the combinatorial shellability-style predicates
(stable, strongly stable, poset-Borel, polymatroidal and friends), which are
all decided literally from the definitions by finite checks on the generators.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError

Expt = tuple  # exponent vector, one entry per variable


def m_deg(e: Expt) -> int:
    return sum(e)


def m_divides(a: Expt, b: Expt) -> bool:
    return all(x <= y for x, y in zip(a, b))


def m_lcm(a: Expt, b: Expt) -> Expt:
    return tuple(max(x, y) for x, y in zip(a, b))


def m_mul(a: Expt, b: Expt) -> Expt:
    return tuple(x + y for x, y in zip(a, b))


def m_quotient(a: Expt, b: Expt) -> Expt:
    """Exponent vector of the colon quotient a : b, i.e. max(a-b, 0)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def format_monomial(variables: Sequence[str], e: Expt) -> str:
    parts = []
    for name, exp in zip(variables, e):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


_TERM = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_monomial(variables: Sequence[str], text: str) -> Expt:
    pos = {v: i for i, v in enumerate(variables)}
    e = [0] * len(variables)
    text = text.strip()
    if text == "1":
        return tuple(e)
    for term in text.split("*"):
        m = _TERM.match(term.strip())
        if not m:
            raise InputError(f"cannot parse monomial term {term!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        if name not in pos:
            raise InputError(f"unknown variable {name!r} (have {tuple(variables)})")
        e[pos[name]] += exp
    return tuple(e)


def minimalize(expts: Iterable[Expt]) -> tuple:
    """Unique minimal generators among the given monomials, canonical order."""
    uniq = set(expts)
    mins = [
        e
        for e in uniq
        if not any(o != e and m_divides(o, e) for o in uniq)
    ]
    return tuple(sorted(mins, key=lambda e: (m_deg(e), e)))


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators."""

    def __init__(self, variables: Sequence[str], generators: Iterable[Expt]):
        self.variables = tuple(variables)
        nv = len(self.variables)
        gens = []
        for e in generators:
            e = tuple(int(x) for x in e)
            if len(e) != nv or any(x < 0 for x in e):
                raise InputError(f"bad exponent vector {e!r} for {nv} variables")
            gens.append(e)
        self.gens = minimalize(gens)

    @classmethod
    def from_strings(cls, variables: Sequence[str], texts: Iterable[str]) -> "MonomialIdeal":
        return cls(variables, [parse_monomial(variables, t) for t in texts])

    # -- structure -----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    def contains(self, e: Expt) -> bool:
        return any(m_divides(g, e) for g in self.gens)

    def degrees(self) -> tuple:
        return tuple(sorted({m_deg(g) for g in self.gens}))

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) <= 1

    def is_squarefree(self) -> bool:
        return all(all(x <= 1 for x in g) for g in self.gens)

    def generator_strings(self) -> tuple:
        return tuple(format_monomial(self.variables, g) for g in self.gens)

    # -- arithmetic ----------------------------------------------------------

    def _same_ring(self, other: "MonomialIdeal") -> None:
        if self.variables != other.variables:
            raise InputError("ideals live in different polynomial rings")

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same_ring(other)
        return MonomialIdeal(self.variables, self.gens + other.gens)

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same_ring(other)
        return MonomialIdeal(
            self.variables, [m_mul(a, b) for a in self.gens for b in other.gens]
        )

    def power(self, t: int) -> "MonomialIdeal":
        if t < 1:
            raise InputError("power must be >= 1")
        out = self
        for _ in range(t - 1):
            out = out.multiply(self)
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same_ring(other)
        return MonomialIdeal(
            self.variables, [m_lcm(a, b) for a in self.gens for b in other.gens]
        )

    def colon(self, e: Expt) -> "MonomialIdeal":
        return MonomialIdeal(self.variables, [m_quotient(g, e) for g in self.gens])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.variables == other.variables
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({', '.join(self.generator_strings()) or '0'})"


def irreducible_ideal(variables: Sequence[str], e: Expt) -> MonomialIdeal:
    """The ideal generated by x_i^{e_i} over the support of e."""
    gens = []
    for i, exp in enumerate(e):
        if exp:
            g = [0] * len(variables)
            g[i] = exp
            gens.append(tuple(g))
    return MonomialIdeal(variables, gens)


# ---------------------------------------------------------------------------
# exchange-move predicates
# ---------------------------------------------------------------------------


def _move(e: Expt, src: int, dst: int) -> Expt:
    out = list(e)
    out[src] -= 1
    out[dst] += 1
    return tuple(out)


def is_stable(ideal: MonomialIdeal) -> bool:
    """Every x_i * g / x_max(g) stays in the ideal, for i below the largest
    variable index supporting each minimal generator g."""
    for g in ideal.gens:
        support = [i for i, x in enumerate(g) if x]
        if not support:
            continue
        mu = support[-1]
        for i in range(mu):
            if not ideal.contains(_move(g, mu, i)):
                return False
    return True


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Closed under every exchange x_i * g / x_j with i < j."""
    for g in ideal.gens:
        for j, x in enumerate(g):
            if not x:
                continue
            for i in range(j):
                if not ideal.contains(_move(g, j, i)):
                    return False
    return True


@dataclass(frozen=True)
class BorelPoset:
    """A partial order on variable indices: pairs (small, large) generate it."""

    nvars: int
    relations: frozenset

    def __init__(self, nvars: int, relations: Iterable[tuple]):
        rel = frozenset((int(a), int(b)) for a, b in relations)
        for a, b in rel:
            if not (0 <= a < nvars and 0 <= b < nvars) or a == b:
                raise InputError(f"bad poset relation {(a, b)}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "relations", rel)

    def closure(self) -> frozenset:
        """Transitive closure as a set of (small, large) pairs."""
        below: dict[int, set[int]] = {v: {v} for v in range(self.nvars)}
        changed = True
        while changed:
            changed = False
            for a, b in self.relations:
                if not below[a] <= below[b]:
                    below[b] |= below[a]
                    changed = True
        pairs = frozenset(
            (a, b) for b in range(self.nvars) for a in below[b] if a != b
        )
        for a, b in pairs:
            if (b, a) in pairs:
                raise InputError("relations contain a cycle")
        return pairs


def is_q_borel(ideal: MonomialIdeal, poset: BorelPoset) -> bool:
    """Closed under exchanges x_small * g / x_large along the poset order."""
    if poset.nvars != ideal.nvars:
        raise InputError("poset and ideal have different variable counts")
    for small, large in poset.closure():
        for g in ideal.gens:
            if g[large] and not ideal.contains(_move(g, large, small)):
                return False
    return True


def q_borel_generators(ideal: MonomialIdeal, poset: BorelPoset) -> tuple:
    """The minimal monomials whose exchange-closure generates the ideal.

    Only defined for ideals generated in a single degree that are closed under
    the poset's exchange moves; in that case the answer is exactly the minimal
    generators that are not a one-move image of another minimal generator.
    """
    if not ideal.is_equigenerated():
        raise PreconditionError("generators must all have the same degree")
    if not is_q_borel(ideal, poset):
        raise PreconditionError("ideal is not closed under the poset's moves")
    closure = poset.closure()
    gens = set(ideal.gens)
    images = set()
    for g in gens:
        for small, large in closure:
            if g[large]:
                images.add(_move(g, large, small))
    return tuple(g for g in ideal.gens if g not in images)


def is_principal_q_borel(ideal: MonomialIdeal, poset: BorelPoset) -> bool:
    try:
        return len(q_borel_generators(ideal, poset)) == 1
    except PreconditionError:
        return False


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Exchange property between every ordered pair of minimal generators."""
    if not ideal.is_equigenerated():
        raise PreconditionError("polymatroidal is defined for equigenerated ideals")
    gens = ideal.gens
    for a in gens:
        for b in gens:
            if a == b:
                continue
            for i in range(len(a)):
                if a[i] <= b[i]:
                    continue
                if not any(
                    b[j] > a[j] and ideal.contains(_move(a, i, j))
                    for j in range(len(a))
                ):
                    return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree() and is_polymatroidal(ideal)


def is_weakly_polymatroidal(ideal: MonomialIdeal) -> bool:
    """One-sided exchange keyed to the first index where two generators differ."""
    gens = ideal.gens
    for a in gens:
        for b in gens:
            if a == b:
                continue
            i = next((i for i in range(len(a)) if a[i] != b[i]), None)
            if i is None or a[i] < b[i]:
                continue
            if not any(
                b[j] and ideal.contains(_move(b, j, i)) for j in range(i + 1, len(b))
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# irreducible decomposition by generator splitting
# ---------------------------------------------------------------------------


def _component_contains(a: Expt, b: Expt) -> bool:
    """Whether the irreducible ideal of b contains the irreducible ideal of a,
    i.e. every generator x_i^{a_i} lies in (x_j^{b_j} : b_j > 0)."""
    return all(not x or (y and x >= y) for x, y in zip(a, b))


def irreducible_decomposition_generic(
    ideal: MonomialIdeal, *, max_nodes: int = 500_000
) -> tuple:
    """Irredundant irreducible components of any monomial ideal.

    Works by repeatedly splitting a generator g = u·v with coprime u, v into
    the two ideals replacing g by u and by v; leaves have pure-power
    generators only and are exponent vectors of irreducible ideals.  Returns
    the components as exponent vectors in canonical order.  The unit ideal has
    no components (empty intersection); the zero ideal is rejected.
    """
    if ideal.is_zero:
        raise InputError("the zero ideal has no irreducible decomposition here")
    memo: dict[frozenset, frozenset] = {}
    counter = [0]

    def split(gens: frozenset) -> frozenset:
        counter[0] += 1
        if counter[0] > max_nodes:
            from .errors import SizeGuardError

            raise SizeGuardError("irreducible decomposition exceeded the node budget")
        if gens in memo:
            return memo[gens]
        mixed = next(
            (
                g
                for g in sorted(gens, key=lambda e: (m_deg(e), e))
                if sum(1 for x in g if x) >= 2
            ),
            None,
        )
        if mixed is None:
            vec = [0] * len(next(iter(gens)))
            for g in gens:
                for i, x in enumerate(g):
                    if x:
                        vec[i] = x
            result = frozenset([tuple(vec)])
        else:
            i = next(i for i, x in enumerate(mixed) if x)
            u = tuple(x if j == i else 0 for j, x in enumerate(mixed))
            v = tuple(0 if j == i else x for j, x in enumerate(mixed))
            rest = gens - {mixed}
            result = split(frozenset(minimalize(rest | {u}))) | split(
                frozenset(minimalize(rest | {v}))
            )
        memo[gens] = result
        return result

    if ideal.is_unit:
        return ()
    raw = split(frozenset(ideal.gens))
    irredundant = [
        a
        for a in raw
        if not any(b != a and _component_contains(b, a) for b in raw)
    ]
    return tuple(sorted(irredundant, key=lambda e: (sum(1 for x in e if x), e)))


def associated_primes_generic(ideal: MonomialIdeal) -> tuple:
    """Supports of the irredundant irreducible components, as sorted tuples of
    variable names (ordered by size, then by variable index)."""
    comps = irreducible_decomposition_generic(ideal)
    supports = {frozenset(i for i, x in enumerate(c) if x) for c in comps}
    return tuple(
        tuple(ideal.variables[i] for i in sorted(s))
        for s in sorted(supports, key=lambda s: (len(s), sorted(s)))
    )
