"""Exception types raised across the toolkit."""


class SqchooseError(Exception):
    """Base class for all toolkit errors."""


class MalformedRotation(SqchooseError):
    """A rotation system repeats or omits a dart."""


class UnknownConfiguration(SqchooseError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown configuration {name!r}")


class ExponentExceedsList(SqchooseError):
    """A certificate monomial uses an exponent t_v >= |L(v)|."""

    def __init__(self, vertex, exponent, size):
        self.vertex = vertex
        self.exponent = exponent
        self.size = size
        super().__init__(f"exponent {exponent} at {vertex} needs a list of size > {exponent}, got {size}")


class UnknownLemma(SqchooseError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown lemma {name!r} (or no coefficient certificates for it)")


class DetectionOnly(SqchooseError):
    """The lemma is only checked structurally; there is nothing to verify by coloring."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"lemma {name!r} is detection-only")


class Disconnected(SqchooseError):
    pass


class NotCubic(SqchooseError):
    pass


class HypothesisViolation(SqchooseError):
    """A graph fails one of the theorem's hypotheses; `reason` names the witness."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"hypothesis violated: {reason}" + (f" at {witness}" if witness is not None else ""))


class SizeBound(SqchooseError):
    pass


class ParseError(SqchooseError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ScanFailure(SqchooseError):
    """A kept graph has chi(G^2) > 7; either a toolkit bug or a counterexample."""
