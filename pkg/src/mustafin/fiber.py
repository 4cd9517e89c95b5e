"""Special fibers of one-apartment Mustafin degenerations.

Every hull lattice point v carries a reduced diagonal map toward each
generator: factor i survives exactly on the argmin set J_i of v_i - v, and
its kernel is the complementary coordinate subspace. A hull point
contributes an irreducible component iff the image of its joint rational
map has full dimension d-1, which the multidegree engine decides exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Sequence

from .errors import ContractError, DomainError, InvariantViolationError
from .hull import contains, lattice_points
from .multidegree import (
    CoordinateSubspace,
    DIndexTable,
    MultidegreeSet,
    admissible_tuples,
    dimension_p,
    intersection_dims,
)
from .tropical import Configuration, TorusPoint, is_general_position, normalize


@dataclass(frozen=True)
class ReductionProfile:
    """Per-factor reduction data of the diagonal maps at one hull vertex."""

    vertex: TorusPoint
    argmins: tuple[frozenset[int], ...]
    kernels: tuple[CoordinateSubspace, ...]

    def diagonals(self) -> tuple[tuple[int, ...], ...]:
        """0/1 diagonal of each factor map: 1 exactly on the argmin set."""
        d = len(self.vertex)
        return tuple(
            tuple(1 if j + 1 in J else 0 for j in range(d)) for J in self.argmins
        )


@dataclass(frozen=True)
class ComponentDescriptor:
    """Invariants of the variety contributed by one hull lattice point.

    ``factor_dims[i]`` is the dimension of the image in factor i
    (|J_i| - 1); ``p`` is the dimension of the joint image;
    ``is_component`` flags p = d-1; ``is_primary`` flags vertices of the
    original configuration, whose component maps birationally onto its
    factor.
    """

    vertex: TorusPoint
    profile: ReductionProfile
    table: DIndexTable
    p: int
    multidegrees: MultidegreeSet
    is_component: bool
    is_primary: bool
    factor_dims: tuple[int, ...]


class ComponentCounts(NamedTuple):
    total: int
    primary: int
    secondary: int


def reduction_profile(config: Configuration, v: TorusPoint) -> ReductionProfile:
    """Argmin sets and kernels of the reduced diagonal maps at hull point ``v``."""
    if not contains(config, v):
        raise DomainError(f"{v.coords} is not in the hull of the configuration")
    argmins = []
    kernels = []
    for p in config.points:
        diffs = [p[j] - v[j] for j in range(config.d)]
        lo = min(diffs)
        J = frozenset(j + 1 for j, value in enumerate(diffs) if value == lo)
        argmins.append(J)
        kernels.append(CoordinateSubspace(config.d, frozenset(range(1, config.d + 1)) - J))
    return ReductionProfile(v, tuple(argmins), tuple(kernels))


def describe_vertex(config: Configuration, v: TorusPoint) -> ComponentDescriptor:
    """Full descriptor (profile, dimension, multidegrees) of one hull point."""
    profile = reduction_profile(config, v)
    table = intersection_dims(profile.kernels)
    p = dimension_p(config.d, table)
    mset = MultidegreeSet(p, frozenset(admissible_tuples(config.d, table, p)))
    return ComponentDescriptor(
        vertex=v,
        profile=profile,
        table=table,
        p=p,
        multidegrees=mset,
        is_component=(p == config.d - 1),
        is_primary=(v in config.points),
        factor_dims=tuple(len(J) - 1 for J in profile.argmins),
    )


def classify(config: Configuration) -> list[ComponentDescriptor]:
    """One descriptor per hull lattice point, in lexicographic vertex order.

    Descriptors with ``is_component`` set are exactly the irreducible
    components of the special fiber.
    """
    return [describe_vertex(config, v) for v in lattice_points(config)]


def multidegree_partition(
    config: Configuration,
    descriptors: Sequence[ComponentDescriptor] | None = None,
) -> dict[tuple[int, ...], TorusPoint]:
    """Assign every tuple with sum d-1 to the unique component claiming it.

    Raises InvariantViolationError if some tuple is claimed by zero or by
    several components; that would indicate a bug, not bad input.
    """
    if descriptors is None:
        descriptors = classify(config)
    claims: dict[tuple[int, ...], TorusPoint] = {}
    for desc in descriptors:
        if not desc.is_component:
            continue
        for m in desc.multidegrees.tuples:
            if m in claims:
                raise InvariantViolationError(
                    f"multidegree {m} claimed by both {claims[m].coords} and {desc.vertex.coords}"
                )
            claims[m] = desc.vertex
    expected = set(_compositions(config.d - 1, config.n))
    missing = expected - set(claims)
    extra = set(claims) - expected
    if missing or extra:
        raise InvariantViolationError(
            f"multidegree partition is not total: missing {sorted(missing)}, extra {sorted(extra)}"
        )
    return claims


def _compositions(total: int, n: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(total,)]
    out = []
    for v in range(total + 1):
        out.extend((v,) + rest for rest in _compositions(total - v, n - 1))
    return out


def component_counts(
    config: Configuration,
    descriptors: Sequence[ComponentDescriptor] | None = None,
) -> ComponentCounts:
    """Total, primary and secondary component counts of the special fiber."""
    if descriptors is None:
        descriptors = classify(config)
    total = sum(1 for desc in descriptors if desc.is_component)
    primary = sum(1 for desc in descriptors if desc.is_component and desc.is_primary)
    return ComponentCounts(total, primary, total - primary)


def is_monomial_type(
    config: Configuration,
    descriptors: Sequence[ComponentDescriptor] | None = None,
) -> bool:
    """True iff the fiber is cut out by monomials.

    Equivalent both to tropical general position and to the secondary
    count reaching binom(n+d-2, d-1) - n; both are computed and
    cross-asserted.
    """
    gp = is_general_position(config)
    counts = component_counts(config, descriptors)
    saturated = counts.secondary == comb(config.n + config.d - 2, config.d - 1) - config.n
    if gp != saturated:
        raise InvariantViolationError(
            f"general position ({gp}) disagrees with the secondary-count law ({saturated})"
        )
    return gp


def realize_component(kernels: Sequence[CoordinateSubspace]) -> tuple[Configuration, TorusPoint]:
    """Configuration whose fiber has a component with the prescribed kernels.

    Generator i is the indicator vector of kernel i's member set; the
    component sits at the origin. Requires the kernels to intersect
    trivially, to be pairwise distinct (distinct generators), and to admit
    a degree-(d-1) multidegree tuple: trivial intersection alone does not
    force a full-dimensional image (e.g. complementary 2-dimensional
    kernels in d=4 give a 2-dimensional product of lines), and then no
    configuration can realize them as a component.
    """
    if not kernels:
        raise ContractError("need at least one kernel")
    d = kernels[0].d
    if any(w.d != d for w in kernels):
        raise ContractError("kernels have mismatched ambient dimensions")
    common = frozenset(range(1, d + 1))
    for w in kernels:
        common &= w.members
    if common:
        raise ContractError(f"kernels share the directions {sorted(common)}; intersection must be trivial")
    if dimension_p(d, intersection_dims(tuple(kernels))) != d - 1:
        raise ContractError("kernels cannot support a component of full dimension d-1")
    points = tuple(
        normalize(tuple(1 if j + 1 in w.members else 0 for j in range(d))) for w in kernels
    )
    config = Configuration(d, points)
    origin = normalize((0,) * d)
    return config, origin
