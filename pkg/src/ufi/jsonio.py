"""Reading coloured complexes from JSON and serialising results back out.

The input format is a single object with ``facets`` (a list of faces),
optional ``vertices`` (fixing the vertex order), and optional ``colouring``
(a list of classes, in order).  Faces and classes are token lists; a bare
string like ``"abc"`` is shorthand for its characters.
"""

from __future__ import annotations

import json
from typing import Any

from .colouring import Colouring
from .errors import DEFAULT_GUARDS, Guards, InputError
from .monomial import MonomialIdeal
from .simplicial import SimplicialComplex


def _tokens(entry: Any, what: str) -> list[str]:
    if isinstance(entry, str):
        return list(entry)
    if isinstance(entry, (list, tuple)):
        out = []
        for tok in entry:
            if not isinstance(tok, str) or not tok:
                raise InputError(f"{what} entries must be nonempty strings; got {tok!r}")
            out.append(tok)
        return out
    raise InputError(f"{what} must be a string or a list of strings; got {entry!r}")


def parse_input(
    data: Any, *, allow_empty: bool = False, guards: Guards = DEFAULT_GUARDS
) -> tuple[SimplicialComplex, Colouring | None]:
    """Build the complex and (optional) colouring described by a JSON object."""
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    unknown = set(data) - {"vertices", "facets", "colouring"}
    if unknown:
        raise InputError(f"unknown input keys: {sorted(unknown)}")
    if "facets" not in data:
        raise InputError('input needs a "facets" list')
    facets = data["facets"]
    if not isinstance(facets, list):
        raise InputError('"facets" must be a list of faces')
    facet_tokens = [_tokens(f, "facet") for f in facets]
    vertices = None
    if "vertices" in data:
        vertices = _tokens(data["vertices"], "vertices")
    complex_ = SimplicialComplex.from_facets(
        facet_tokens, vertices=vertices, guards=guards
    )
    colouring = None
    if "colouring" in data and data["colouring"] is not None:
        classes = data["colouring"]
        if not isinstance(classes, list):
            raise InputError('"colouring" must be a list of classes')
        colouring = Colouring.from_tokens(
            complex_,
            [_tokens(c, "class") for c in classes],
            allow_empty=allow_empty,
        )
    return complex_, colouring


def load_input(
    source: str, *, allow_empty: bool = False, guards: Guards = DEFAULT_GUARDS
) -> tuple[SimplicialComplex, Colouring | None]:
    """Parse a path to a JSON file, or an inline JSON object string."""
    text = source
    if not source.lstrip().startswith("{"):
        try:
            with open(source, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read input {source!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return parse_input(data, allow_empty=allow_empty, guards=guards)


def require_colouring(colouring: Colouring | None) -> Colouring:
    if colouring is None:
        raise InputError('this command needs a "colouring" in the input')
    return colouring


# ---------------------------------------------------------------------------
# serialisers
# ---------------------------------------------------------------------------


def complex_to_dict(complex_: SimplicialComplex) -> dict:
    return {
        "vertices": list(complex_.vertices),
        "facets": [list(complex_.face_tokens(f)) for f in complex_.facets],
        "f_vector": list(complex_.f_vector),
    }


def colouring_to_dict(complex_: SimplicialComplex, colouring: Colouring) -> dict:
    return {
        "classes": [
            [complex_.vertices[v] for v in cls] for cls in colouring.classes
        ]
    }


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    return {
        "variables": list(ideal.variables),
        "generators": list(ideal.generator_strings()),
    }


def dumps(payload: Any) -> str:
    """Canonical JSON: sorted keys, stable separators, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
