"""Exception hierarchy shared across the package.

Everything derives from ScxError so callers can catch input/validation
problems with a single except clause. Numerical failures (e.g. LAPACK
non-convergence) are deliberately left to the underlying libraries.
"""


class ScxError(Exception):
    """Base class for all validation errors raised by this package."""


# -- complex construction and I/O --------------------------------------------

class EmptyInput(ScxError):
    pass


class InvalidSimplex(ScxError):
    """Vertex list is empty, has repeated vertices, or negative labels."""


class DuplicateSimplex(ScxError):
    pass


class NonPositiveWeight(ScxError):
    pass


class DimensionOutOfRange(ScxError):
    pass


class ParseError(ScxError):
    """Malformed complex file; carries the 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# -- linear algebra -----------------------------------------------------------

class NonSymmetricInput(ScxError):
    pass


class InnerWeightNotIdentity(ScxError):
    """Weights at the domain dimension of an up Laplacian must all be 1."""


class NoNontrivialSubspace(ScxError):
    """The orthogonal complement of the trivial subspace is empty."""


# -- sparsification -----------------------------------------------------------

class EmptyDimension(ScxError):
    pass


class InvalidSampleCount(ScxError):
    pass


class ShapeMismatch(ScxError):
    pass


class DomainError(ScxError):
    pass


# -- Cheeger constants --------------------------------------------------------

class InvalidPartition(ScxError):
    pass


class TooLargeForBruteForce(ScxError):
    pass


class NoValidPartition(ScxError):
    pass


# -- learning -----------------------------------------------------------------

class DimensionTooLow(ScxError):
    pass


class IsolatedItem(ScxError):
    pass


class KTooLarge(ScxError):
    pass


class NotLabelConnected(ScxError):
    pass


class NoLabels(ScxError):
    pass


# -- harness ------------------------------------------------------------------

class InvalidParams(ScxError):
    pass
