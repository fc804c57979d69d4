"""Exception types shared across the library."""


class TiltfanError(ValueError):
    """Base class for all validation errors raised by this package."""


class DetNotUnit(TiltfanError):
    pass


class ZeroVector(TiltfanError):
    pass


class DependentGenerators(TiltfanError):
    pass


class NonSaturated(TiltfanError):
    def __init__(self, divisor):
        super().__init__(f"generators span a non-saturated sublattice (elementary divisor {divisor})")
        self.divisor = divisor


class NonUnimodularChamber(TiltfanError):
    def __init__(self, index, det=None):
        super().__init__(f"chamber {index} is not unimodular (det {det})")
        self.index = index
        self.det = det


class SignCoherenceViolation(TiltfanError):
    def __init__(self, chamber, coordinate):
        super().__init__(
            f"chamber {chamber} has rays on both sides of base coordinate {coordinate}"
        )
        self.chamber = chamber
        self.coordinate = coordinate


class DanglingWall(TiltfanError):
    def __init__(self, wall):
        super().__init__(f"codimension-1 face {wall} lies in only one chamber")
        self.wall = wall


class IncompleteFan(TiltfanError):
    pass


class OrderViolation(TiltfanError):
    def __init__(self, wall):
        super().__init__(f"wall {wall} admits no normal that is nonnegative on the base chamber")
        self.wall = wall


class NotAFace(TiltfanError):
    pass


class NotPalindromic(TiltfanError):
    pass


class NotSkewSymmetric(TiltfanError):
    pass


class SignIncoherence(TiltfanError):
    def __init__(self, k):
        super().__init__(f"c-vector {k} has mixed signs; mutation invariant broken")
        self.k = k


class UnsupportedGraph(TiltfanError):
    pass


class Disconnected(TiltfanError):
    pass


class NotFiniteType(TiltfanError):
    pass


class NotConvex(TiltfanError):
    pass


class OriginNotInterior(TiltfanError):
    pass


class NotRank2(TiltfanError):
    pass


class DimensionTooLarge(TiltfanError):
    pass


class ParseError(TiltfanError):
    pass
