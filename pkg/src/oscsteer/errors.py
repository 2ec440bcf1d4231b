"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """Input outside the admissible parameter domain."""


class SpecError(ValueError):
    """A request exceeds what an operation supports (e.g. observable degree)."""


class OverflowGuard(OverflowError):
    """Quantum numbers so large that even log-space evaluation underflows."""


class NoSteeringError(RuntimeError):
    """Maximization target is identically zero over the requested bracket."""


class TranscriptionFlag(UserWarning):
    """A closed-form value disagrees with an independently computed one.

    Non-fatal: flags a suspected typo in the closed-form tables so the
    verification report can list it. Carries (direction, delta) context
    in the message.
    """
