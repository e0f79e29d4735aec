"""Exact arithmetic kernels: rational ranks, reduced simplicial homology, integer polynomials.

Everything here is exact (``fractions.Fraction`` / ``int``); no floating point.
Polynomials in one variable t are sparse ``dict[int, int]`` mapping exponent to
coefficient, with zero coefficients never stored.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

# ---------------------------------------------------------------------------
# rational linear algebra
# ---------------------------------------------------------------------------


def rational_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank of a matrix, computed exactly by Gaussian elimination over Q."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
        if row == len(mat):
            break
    return rank


def homology_ranks(dims: Sequence[int], boundaries: Sequence[Sequence[Sequence[int]]]) -> list[int]:
    """Homology ranks of a chain complex over Q.

    ``dims[i]`` is the dimension of the i-th chain group; ``boundaries[i]`` (for
    i >= 1) is the matrix of the map from chain group i to chain group i-1, with
    ``dims[i-1]`` rows and ``dims[i]`` columns.  Consecutive maps must compose
    to zero.  Returns ``dim H_i`` for each i.
    """
    for i in range(2, len(dims)):
        if not (dims[i] and dims[i - 1] and dims[i - 2]):
            continue
        outer, inner = boundaries[i - 1], boundaries[i]
        for r in range(dims[i - 2]):
            for c in range(dims[i]):
                if sum(outer[r][m] * inner[m][c] for m in range(dims[i - 1])):
                    raise InputError("boundary maps do not compose to zero")
    ranks = [0] * (len(dims) + 1)
    for i in range(1, len(dims)):
        ranks[i] = rational_rank(boundaries[i]) if dims[i] and dims[i - 1] else 0
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(len(dims))]


def simplicial_reduced_homology(faces: Iterable[frozenset[int]]) -> dict[int, int]:
    """Reduced rational homology of an abstract simplicial complex.

    ``faces`` must be closed under taking subsets and include the empty face if
    nonvoid.  Returns ``{i: dim H~_i}`` for i = -1 .. dim, with zero entries
    omitted.  The void complex (no faces at all) has no homology; the complex
    ``{∅}`` has H~_{-1} of rank one.
    """
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return {}
    top = max(by_dim)
    layers = [sorted(by_dim.get(d, [])) for d in range(-1, top + 1)]
    index = [{face: i for i, face in enumerate(layer)} for layer in layers]
    dims = [len(layer) for layer in layers]
    boundaries: list[list[list[int]]] = [[]]
    for d in range(1, len(layers)):
        mat = [[0] * dims[d] for _ in range(dims[d - 1])]
        for col, face in enumerate(layers[d]):
            for j in range(len(face)):
                sub = face[:j] + face[j + 1 :]
                mat[index[d - 1][sub]][col] = (-1) ** j
        boundaries.append(mat)
    hom = homology_ranks(dims, boundaries)
    return {d - 1: h for d, h in enumerate(hom) if h}


# ---------------------------------------------------------------------------
# sparse integer polynomials in t
# ---------------------------------------------------------------------------

Poly = dict  # dict[int, int]


def poly(*pairs: tuple[int, int]) -> Poly:
    out: Poly = {}
    for e, c in pairs:
        if c:
            out[e] = out.get(e, 0) + c
            if not out[e]:
                del out[e]
    return out


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
        if not out[e]:
            del out[e]
    return out


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, {e: -c for e, c in q.items()})


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
            if not out[e]:
                del out[e]
    return out


def poly_pow(p: Poly, n: int) -> Poly:
    out: Poly = {0: 1}
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    return sum((c * x**e for e, c in p.items()), Fraction(0))


def divide_by_one_minus_t(p: Poly) -> Poly:
    """Exact quotient p(t) / (1 - t); rejects p with p(1) != 0."""
    if not p:
        return {}
    top = max(p)
    out: Poly = {}
    acc = 0
    for e in range(top + 1):
        acc += p.get(e, 0)
        if acc and e < top:
            out[e] = acc
    if acc:
        raise InputError("polynomial is not divisible by 1 - t")
    return out


def poly_str(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    terms = []
    for e in sorted(p):
        c = p[e]
        if e == 0:
            body = str(abs(c))
        else:
            head = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{head}{var}" + (f"^{e}" if e > 1 else "")
        terms.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
