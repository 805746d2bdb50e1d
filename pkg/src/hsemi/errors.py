"""Exception hierarchy shared by all modules."""


class SemigroupError(Exception):
    """Base class for every error raised by hsemi."""


class MalformedTable(SemigroupError, ValueError):
    pass


class NonAssociative(SemigroupError, ValueError):
    """Raised with the first violating triple (i, j, k) in lexicographic order."""

    def __init__(self, triple):
        self.triple = tuple(triple)
        i, j, k = self.triple
        super().__init__(f"table is not associative at (i, j, k) = ({i}, {j}, {k})")


class PreconditionViolated(SemigroupError, ValueError):
    pass


class InternalInconsistency(SemigroupError, AssertionError):
    """Two independent computations disagreed; this is a bug, not bad input."""


class NotClosed(SemigroupError, ValueError):
    pass


class NotInverse(SemigroupError, ValueError):
    pass


class NotAKernel(SemigroupError, ValueError):
    pass


class NotACongruence(SemigroupError, ValueError):
    pass


class BoundExceeded(SemigroupError, ValueError):
    pass


class NotAGroup(SemigroupError, ValueError):
    pass


class DegreeTooLarge(SemigroupError, ValueError):
    pass


class UnknownConstruction(SemigroupError, KeyError):
    pass


class UnknownTheoremId(SemigroupError, KeyError):
    pass
