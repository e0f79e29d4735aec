"""Independent ground-truth computations for small monomial ideals.

These are deliberately definition-driven and make no use of the closed forms
elsewhere in the package, so the two routes can be compared in tests: graded
Betti numbers via simplicial homology of upper Koszul complexes over the lcm
lattice, and Hilbert series numerators via colon short exact sequences (with a
Taylor-complex inclusion–exclusion variant as a second opinion).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DEFAULT_GUARDS, Guards, InputError
from .exact import Poly, poly_add, poly_sub, simplicial_reduced_homology
from .monomial import Expt, MonomialIdeal, m_deg, m_lcm, m_quotient, minimalize


def lcm_lattice(ideal: MonomialIdeal, *, max_size: int = 20_000) -> tuple:
    """All lcms of nonempty sets of minimal generators, canonically sorted."""
    from .errors import SizeGuardError

    seen = set(ideal.gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in ideal.gens:
                m = m_lcm(a, g)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
                    if len(seen) > max_size:
                        raise SizeGuardError("lcm lattice exceeded the size cap")
        frontier = nxt
    return tuple(sorted(seen, key=lambda e: (m_deg(e), e)))


@dataclass(frozen=True)
class MultigradedBettiTable:
    """Multigraded Betti numbers of an ideal: (homological index, multidegree) -> rank."""

    variables: tuple
    entries: tuple  # sorted ((i, multidegree), rank) pairs

    def as_dict(self) -> dict:
        return dict(self.entries)

    def total(self) -> dict:
        """Coarsen to the standard grading: (i, total degree) -> rank."""
        out: dict[tuple, int] = {}
        for (i, a), r in self.entries:
            key = (i, m_deg(a))
            out[key] = out.get(key, 0) + r
        return out


def betti_oracle(ideal: MonomialIdeal, guards: Guards = DEFAULT_GUARDS) -> MultigradedBettiTable:
    """Multigraded Betti numbers of an ideal, from first principles.

    For each multidegree a in the lcm lattice, the rank of the i-th Betti number
    in degree a is the reduced homology rank in dimension i-1 of the simplicial
    complex of squarefree vectors b <= supp(a) with x^(a-b) in the ideal.
    """
    if ideal.is_zero:
        raise InputError("Betti oracle expects a nonzero monomial ideal")
    guards.check_oracle(len(ideal.gens), ideal.nvars)
    entries = []
    for a in lcm_lattice(ideal):
        supp = [i for i, x in enumerate(a) if x]
        faces = []
        for r in range(len(supp) + 1):
            for sub in combinations(supp, r):
                b = tuple(
                    a[i] - 1 if i in sub else a[i] for i in range(len(a))
                )
                if ideal.contains(b):
                    faces.append(frozenset(sub))
        hom = simplicial_reduced_homology(faces)
        for dim, rank in sorted(hom.items()):
            entries.append(((dim + 1, a), rank))
    entries.sort(key=lambda item: (item[0][0], m_deg(item[0][1]), item[0][1]))
    return MultigradedBettiTable(ideal.variables, tuple(entries))


def first_syzygy_degrees(ideal: MonomialIdeal, *, max_lattice: int = 50_000) -> dict:
    """Total degrees of the first syzygies: {degree: beta_1 in that degree}.

    The i = 1 slice of the Betti oracle, but needing only connected components
    of the one-skeleton of each upper Koszul complex, so it scales to ideals
    the full oracle's guard would reject.
    """
    if ideal.is_zero:
        raise InputError("first-syzygy oracle expects a nonzero monomial ideal")
    out: dict[int, int] = {}
    for a in lcm_lattice(ideal, max_size=max_lattice):
        supp = [i for i, x in enumerate(a) if x]
        verts = [
            i
            for i in supp
            if ideal.contains(tuple(x - (j == i) for j, x in enumerate(a)))
        ]
        if not verts:
            continue
        parent = {i: i for i in verts}

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for u, v in combinations(verts, 2):
            b = tuple(x - (j == u) - (j == v) for j, x in enumerate(a))
            if ideal.contains(b):
                parent[find(u)] = find(v)
        components = len({find(i) for i in verts})
        if components > 1:
            d = m_deg(a)
            out[d] = out.get(d, 0) + components - 1
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# Hilbert series numerators
# ---------------------------------------------------------------------------


def hilbert_numerator(ideal: MonomialIdeal) -> Poly:
    """Numerator of the Hilbert series of R/I over (1-t)^(number of variables).

    Computed by the colon recursion N(J + (g)) = N(J) - t^deg(g) · N(J : g),
    starting from N(0) = 1; exact integer polynomial arithmetic throughout.
    """
    memo: dict[frozenset, Poly] = {}

    def rec(gens: frozenset) -> Poly:
        if not gens:
            return {0: 1}
        if any(not any(g) for g in gens):
            return {}
        key = gens
        if key in memo:
            return memo[key]
        ordered = sorted(gens, key=lambda e: (m_deg(e), e))
        g = ordered[-1]
        rest = ordered[:-1]
        n_rest = rec(frozenset(rest))
        colon = frozenset(minimalize([m_quotient(h, g) for h in rest]))
        n_colon = rec(colon)
        out = poly_sub(n_rest, {e + m_deg(g): c for e, c in n_colon.items()})
        memo[key] = out
        return out

    return rec(frozenset(ideal.gens))


def hilbert_numerator_inclusion_exclusion(ideal: MonomialIdeal) -> Poly:
    """Same numerator by alternating sums of lcm degrees over generator subsets.

    Exponential in the number of generators; used as a second opinion on small
    inputs.
    """
    gens = ideal.gens
    if len(gens) > 20:
        raise InputError("inclusion-exclusion route limited to 20 generators")
    out: Poly = {0: 1}
    for r in range(1, len(gens) + 1):
        sign = (-1) ** r
        for sub in combinations(gens, r):
            lcm: Expt = sub[0]
            for g in sub[1:]:
                lcm = m_lcm(lcm, g)
            out = poly_add(out, {m_deg(lcm): sign})
    return out
