"""Bredon and Borel Z2-equivariant cohomology of finite Z2-CW complexes."""

from ._core import (
    Complex,
    Error,
    Group,
    InvalidComplex,
    ParseError,
    SubcomplexNotInvariant,
    UnknownSpace,
    borel,
    bredon,
    build,
    cellular,
    check_exactness,
    coefficient_systems,
    from_json,
    group_cohomology_z2,
    list_spaces,
    restriction_to_fixed,
    stable,
)

__all__ = [
    "Complex",
    "Error",
    "Group",
    "InvalidComplex",
    "ParseError",
    "SubcomplexNotInvariant",
    "UnknownSpace",
    "borel",
    "bredon",
    "build",
    "cellular",
    "check_exactness",
    "classify",
    "coefficient_systems",
    "from_json",
    "group_cohomology_z2",
    "list_spaces",
    "restriction_to_fixed",
    "stable",
]


def classify(space):
    """H^2_Z2(X|X^tau; Z(1)) and the number of rank-2k Quaternionic phases (None if infinite).

    `space` is a catalog name or a Complex. Valid as a count for dimension <= 3.
    """
    x = build(space) if isinstance(space, str) else space
    if x.dimension > 4:
        raise ValueError("classification needs dimension <= 4")
    g = bredon(x, "0~Ztilde", 2)
    return g, (g.order() if g.free_rank == 0 else None)
