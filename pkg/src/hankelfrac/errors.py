"""Exception types shared across modules."""


class InvalidBSeq(ValueError):
    """An index sequence violates b_{-1}=-1, b_0=0, monotonicity or the no-triple rule."""


class InsufficientDepth(ValueError):
    """A finite continued fraction is too short for the requested truncation order."""


class InsufficientOrder(ValueError):
    """A truncated power series does not carry enough coefficients."""


class NonUnitConstantTerm(ValueError):
    """A series that must start with 1 does not."""


class DepthOutOfRange(IndexError):
    pass


class IndexOutOfRange(IndexError):
    pass


class UnsupportedFamily(ValueError):
    pass


class ParamOutOfRange(ValueError):
    pass


class UnknownName(KeyError):
    pass


class ZeroDeterminant(ArithmeticError):
    """A Hankel determinant vanished where a continued fraction needs it nonzero.

    ``n`` and ``offset`` identify ``det(f_{i+j+offset})_{i,j=0}^n``; ``partial``
    holds the numerators recovered before the failure.
    """

    def __init__(self, n: int, offset: int, partial=()):
        self.n = n
        self.offset = offset
        self.partial = list(partial)
        super().__init__(
            f"Hankel determinant of size {n} at offset {offset} vanishes "
            f"({len(self.partial)} numerators recovered)"
        )


class InsufficientLength(ValueError):
    """A finite index sequence does not reach far enough to decide the request."""
