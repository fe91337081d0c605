"""icehive: exact ice-quiver cluster combinatorics."""

from .errors import (
    ClassTooLarge,
    DegeneratePoint,
    DimensionMismatch,
    ExactDivisionFailure,
    FlipUndefined,
    FrozenVertexMutation,
    IcehiveError,
    InvalidChoice,
    InvalidConfig,
    InvalidTriangulation,
    NoGVector,
    NoIntegerSolution,
    NoRationalSolution,
    NotADiagonal,
    RankDeficient,
    SingularBlock,
    SizeTooSmall,
    StepFailed,
    UnknownVertex,
)
from .quiver import IceQuiver, b_equivalent, iso_classes, mutation_class
from .surface import (
    DiskTriangulation,
    GluedQuiver,
    alternating_triangulation,
    all_triangulations,
    flip,
    flip_sequence,
    flip_verify,
    glue,
    twist,
    twist_sequence,
    twist_verify,
)

__all__ = [
    "IceQuiver",
    "b_equivalent",
    "iso_classes",
    "mutation_class",
    "DiskTriangulation",
    "GluedQuiver",
    "alternating_triangulation",
    "all_triangulations",
    "flip",
    "flip_sequence",
    "flip_verify",
    "glue",
    "twist",
    "twist_sequence",
    "twist_verify",
    "IcehiveError",
    "FrozenVertexMutation",
    "UnknownVertex",
    "ClassTooLarge",
    "ExactDivisionFailure",
    "NoGVector",
    "RankDeficient",
    "DimensionMismatch",
    "InvalidConfig",
    "NoRationalSolution",
    "NoIntegerSolution",
    "SizeTooSmall",
    "InvalidTriangulation",
    "FlipUndefined",
    "NotADiagonal",
    "InvalidChoice",
    "StepFailed",
    "DegeneratePoint",
    "SingularBlock",
]
