"""Exception hierarchy shared by every module of the package."""


class IncGenError(Exception):
    """Base class for domain errors (CLI maps these to exit status 1)."""


class PosetError(IncGenError):
    pass


class NotReflexive(PosetError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"relation is not reflexive at element {i}")


class NotAntisymmetric(PosetError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"relation is not antisymmetric: {i} <= {j} and {j} <= {i}")


class NotTransitive(PosetError):
    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"relation is not transitive: {i} <= {j} <= {k} but not {i} <= {k}")


class PosetSyntaxError(PosetError):
    def __init__(self, line: int, msg: str = "malformed line"):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class IndexOutOfRange(IncGenError):
    def __init__(self, index, bound):
        self.index, self.bound = index, bound
        super().__init__(f"index {index} out of range 1..{bound}")


class RingError(IncGenError):
    pass


class RingMismatch(RingError):
    pass


class RingSpecError(RingError):
    pass


class NotAProduct(RingError):
    pass


class NoRadicalReduction(RingError):
    pass


class WrongRingKind(RingError):
    pass


class ShapeMismatch(IncGenError):
    pass


class InvalidShape(IncGenError):
    pass


class TooLarge(IncGenError):
    """Raised when a brute-force computation would exceed its size guard."""
