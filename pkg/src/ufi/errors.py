"""Exception hierarchy and size guards.

Every guarded operation takes an optional :class:`Guards` value; the defaults are
sized so that all documented examples run instantly while genuinely explosive
inputs (oracle homology on many generators, high powers) fail fast with a clear
message instead of hanging.
"""
from __future__ import annotations

from dataclasses import dataclass


class UfiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(UfiError):
    """Malformed input: bad facet lists, labels, colourings, JSON, monomial text."""


class SizeGuardError(UfiError):
    """Input exceeds a configured size guard (see :class:`Guards`)."""


class PreconditionError(UfiError):
    """Input is well-formed but violates a mathematical precondition.

    Carries a human-readable witness (e.g. the offending vertex pair for a
    colouring that is not nested) in ``args[0]``.
    """


@dataclass(frozen=True)
class Guards:
    """Size limits for guarded operations."""

    max_vertices: int = 20
    max_faces: int = 4096
    max_oracle_generators: int = 25
    max_oracle_variables: int = 14
    max_power: int = 4
    max_chromatic_vertices: int = 15

    def check_vertices(self, n: int) -> None:
        if n > self.max_vertices:
            raise SizeGuardError(
                f"complex has {n} vertices; guard allows {self.max_vertices}"
            )

    def check_faces(self, count: int) -> None:
        if count > self.max_faces:
            raise SizeGuardError(
                f"complex has {count} faces; guard allows {self.max_faces}"
            )

    def check_oracle(self, n_gens: int, n_vars: int) -> None:
        if n_gens > self.max_oracle_generators:
            raise SizeGuardError(
                f"oracle limited to {self.max_oracle_generators} generators; got {n_gens}"
            )
        if n_vars > self.max_oracle_variables:
            raise SizeGuardError(
                f"oracle limited to {self.max_oracle_variables} variables; got {n_vars}"
            )

    def check_power(self, t: int) -> None:
        if t > self.max_power:
            raise SizeGuardError(f"powers limited to {self.max_power}; got {t}")


DEFAULT_GUARDS = Guards()
