"""Exception types shared across the package."""
from __future__ import annotations


class MeadowError(Exception):
    """Base class for all domain errors raised by this package."""


class CarrierBoundError(MeadowError):
    """A requested carrier exceeds the configured size bound."""


class RingSpecError(MeadowError):
    """A ring table document is malformed or not closed over its carrier."""


class DescriptorError(MeadowError):
    """A ring descriptor string does not parse."""


class AxiomViolationError(MeadowError):
    """A table-backed ring fails one of the commutative-ring axioms.

    Carries the name of the first violated axiom and a witness assignment.
    """

    def __init__(self, name: str, law: str, witness: tuple[int, ...] | None):
        self.name = name
        self.law = law
        self.witness = witness
        at = "" if not witness else " at " + ", ".join(
            f"{v}={w}" for v, w in zip("xyz", witness)
        )
        super().__init__(f"axiom {name} {law} violated{at}")


class NotAMeadowError(MeadowError):
    """A ring has an element without a generalized inverse."""

    def __init__(self, ring_label: str, witness: int):
        self.ring_label = ring_label
        self.witness = witness
        super().__init__(
            f"{ring_label} is not a meadow: element {witness} has no generalized inverse"
        )


class NotAFieldError(MeadowError):
    """A meadow fails the field test (some nonzero x has x*inv(x) != 1)."""


class ConsistencyError(MeadowError):
    """Internal invariant broken: corrupted tables or an implementation bug."""
