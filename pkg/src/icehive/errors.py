"""Error taxonomy shared across the engine."""


class IcehiveError(Exception):
    """Base class for all engine errors."""


class FrozenVertexMutation(IcehiveError):
    """Mutation requested at a frozen vertex."""


class UnknownVertex(IcehiveError):
    """Vertex id or label not present in the quiver."""


class ClassTooLarge(IcehiveError):
    """Mutation class or permutation search exceeded its size bound."""


class ExactDivisionFailure(IcehiveError):
    """A Laurent division that should be exact left a remainder.

    Along genuine mutation sequences this signals an implementation bug,
    not a data problem: exchange divisions are guaranteed exact.
    """


class NoGVector(IcehiveError):
    """No exponent vector of the polynomial qualifies as a g-vector."""


class RankDeficient(IcehiveError):
    """An operation requiring a full-rank B-matrix got a deficient one."""


class DimensionMismatch(IcehiveError):
    """Vector or matrix dimensions inconsistent with the quiver."""


class InvalidConfig(IcehiveError):
    """Weight data violates the B*sigma = 0 constraint (or a precondition)."""


class NoRationalSolution(IcehiveError):
    """The extension system B*Theta = -B_e has no rational solution."""


class NoIntegerSolution(IcehiveError):
    """B*Theta = -B_e is rationally solvable but has no integer solution."""


class SizeTooSmall(IcehiveError):
    """Hive size below the minimum (l >= 2)."""


class InvalidTriangulation(IcehiveError):
    """Triangle list does not triangulate the marked disk."""


class FlipUndefined(IcehiveError):
    """Flip requested along a diagonal whose gluing is not consistent."""


class NotADiagonal(IcehiveError):
    """Edge is not an interior diagonal of the triangulation."""


class InvalidChoice(IcehiveError):
    """Twist arguments do not name a triangle/edge pair of the triangulation."""


class StepFailed(IcehiveError):
    """A deletion-pipeline step could not be completed."""


class DegeneratePoint(IcehiveError):
    """A random evaluation point made an exchange denominator vanish."""


class SingularBlock(IcehiveError):
    """A group element block is not invertible."""
