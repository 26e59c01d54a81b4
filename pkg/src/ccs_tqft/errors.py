"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CcsError(Exception):
    """Base class for all errors raised by ccs_tqft."""


class AxiomViolation(CcsError):
    """A group, homomorphism, action or crossed-module axiom failed.

    ``axiom`` names the law (``identity``, ``inverse``, ``associativity``,
    ``homomorphism``, ``action``, ``automorphism``, ``eq1``, ``eq2``) and
    ``witness`` holds the offending element indices.
    """

    def __init__(self, axiom: str, witness: tuple = (), detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"{axiom} axiom violated at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class KernelNotCentral(CcsError):
    pass


class NotSurjective(CcsError):
    pass


class SizeLimit(CcsError):
    """An enumeration or construction would exceed its configured cap."""


class InvalidComplex(CcsError):
    pass


class NotInternal(CcsError):
    pass


class NotMergeable(CcsError):
    pass


class SamePosition(CcsError):
    pass


class NotSeparating(CcsError):
    pass


class BoundaryMismatch(CcsError):
    pass


class MissingColour(CcsError):
    pass


class UnknownKind(CcsError):
    pass


class ArityMismatch(CcsError):
    pass


class ModuleMismatch(CcsError):
    pass


class ParityMismatch(CcsError):
    """Two ExactScalars with incompatible sqrt(|G|) parts were added."""


class IdentityViolation(CcsError):
    """An identity that holds by theorem failed; always an implementation bug."""


class UnknownFixture(CcsError):
    pass


class ParseError(CcsError):
    pass
