"""Shared exception types."""


class IntegrityError(RuntimeError):
    """A structural guarantee failed to hold.

    Every statement this library re-checks is a proven property of the
    factorizations involved, so a violation always signals a defect in the
    implementation (or a corrupted input object), never new mathematics.
    """
