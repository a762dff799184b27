"""Exception hierarchy shared by all zcolor modules."""


class ZColorError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(ZColorError):
    """Matrix or vector dimensions do not match the requested operation."""


class DiagramFormatError(ZColorError):
    """A diagram or coloring document is malformed (bad JSON, bad field)."""


class ValidationError(ZColorError):
    """A diagram violates its structural invariants."""

    def __init__(self, problems):
        self.problems = tuple(problems)
        super().__init__("; ".join(self.problems))


class InvalidSpecError(ZColorError):
    """A generator parameter set is outside the supported family."""


class UnrepresentableDiagramError(ZColorError):
    """The requested diagram cannot be expressed in the arc/crossing model."""


class UnsupportedDiagramError(ZColorError):
    """The diagram is valid but outside an operation's precondition."""


class TheoremHypothesisError(ZColorError):
    """Parameters violate the hypothesis of a named verification."""


class NotZColorableError(ZColorError):
    """The diagram admits no nontrivial integer coloring."""


class NotApplicableError(ZColorError):
    """The operation requires a coloring space of a different dimension."""


class DiagramTooLargeError(ZColorError):
    """The diagram exceeds the size guard of an exhaustive search."""
