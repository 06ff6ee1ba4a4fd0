"""
Verifier factory and exports.

Usage:
    from hallforge.verifiers import create_verifier

    verifier = create_verifier("rlhp")
    bundle = verifier.run([1, 2, 3])
    bundle.passed
"""

from ..protocol import Identity, VerificationReport
from .base import BaseVerifier, VerificationError


# Lazy imports keep `hallforge verify thm2.1` from importing numpy
def _factorial_classes():
    from . import factorial
    return factorial


def _generating_classes():
    from . import generating
    return generating


def _structural_classes():
    from . import structural
    return structural


VERIFIER_REGISTRY = {
    Identity.THM_2_1.value: lambda: _factorial_classes().FactorialVerifier,
    Identity.SKIP.value: lambda: _factorial_classes().SkipVerifier,
    Identity.RLHP.value: lambda: _generating_classes().ReducedLectureHallVerifier,
    Identity.LHP.value: lambda: _generating_classes().LectureHallVerifier,
    Identity.REFINED_LHP.value: lambda: _generating_classes().RefinedLectureHallVerifier,
    Identity.REFINED_RLHP.value: lambda: _generating_classes().RefinedReducedVerifier,
    Identity.Q_ANALOGUE_2.value: lambda: _generating_classes().QAnalogueVerifier,
    Identity.FACTORIZATION.value: lambda: _generating_classes().FactorizationVerifier,
    Identity.LEMMAS.value: lambda: _structural_classes().StepIdentityVerifier,
    Identity.BIJECTION.value: lambda: _structural_classes().BijectionVerifier,
    Identity.CARDINALITY.value: lambda: _structural_classes().CardinalityVerifier,
    Identity.ERRATA.value: lambda: _structural_classes().ErrataVerifier,
}


def create_verifier(identity: str, **kwargs) -> BaseVerifier:
    """
    Create a verifier by identity name.

    Raises:
        VerificationError: If the identity is not known
    """
    if identity not in VERIFIER_REGISTRY:
        available = ", ".join(VERIFIER_REGISTRY)
        raise VerificationError(f"Unknown identity: {identity}. Available: {available}")
    verifier_class = VERIFIER_REGISTRY[identity]()
    return verifier_class(**kwargs)


def list_identities() -> list[str]:
    return list(VERIFIER_REGISTRY.keys())


def verify(identity: str, value: int, qmax: int | None = None, **kwargs) -> VerificationReport:
    """Check one identity at one parameter point, guards and default qmax included."""
    return create_verifier(identity, **kwargs).run([value], qmax=qmax).reports[0]


__all__ = [
    "BaseVerifier",
    "VerificationError",
    "VERIFIER_REGISTRY",
    "create_verifier",
    "list_identities",
    "verify",
]
