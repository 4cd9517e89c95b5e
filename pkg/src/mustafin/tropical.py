"""Min-plus primitives on exact integer points of the tropical torus.

Points live in Z^d modulo the all-ones direction. Every public operation
works on normalized representatives (first coordinate pinned to 0), which
makes equality, hashing and lexicographic order well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import ContractError, DegenerateSegmentError, DimensionError


@dataclass(frozen=True, order=True)
class TorusPoint:
    """A lattice class in one apartment, stored as a normalized integer vector."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) < 2:
            raise DimensionError(f"ambient dimension must be >= 2, got {len(self.coords)}")
        if self.coords[0] != 0:
            raise ContractError(f"coordinates {self.coords} are not normalized; use normalize()")

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, j: int) -> int:
        return self.coords[j]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)


@dataclass(frozen=True)
class Configuration:
    """An ordered tuple of n distinct torus points in ambient dimension d."""

    d: int
    points: tuple[TorusPoint, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ContractError("a configuration needs at least one point")
        for p in self.points:
            if len(p) != self.d:
                raise DimensionError(f"point {p.coords} does not have length d={self.d}")
        if len(set(self.points)) != len(self.points):
            raise ContractError("configuration points must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.points)


def normalize(raw: Sequence[int]) -> TorusPoint:
    """Canonical representative of ``raw`` modulo the all-ones direction.

    Subtracts ``raw[0]`` from every coordinate; idempotent and invariant
    under adding a constant vector.
    """
    coords = tuple(int(c) for c in raw)
    if len(coords) < 2:
        raise DimensionError(f"ambient dimension must be >= 2, got {len(coords)}")
    base = coords[0]
    return TorusPoint(tuple(c - base for c in coords))


def configuration(d: int, raw_points: Sequence[Sequence[int]]) -> Configuration:
    """Build a configuration, normalizing every input vector."""
    return Configuration(d, tuple(normalize(p) for p in raw_points))


def tropical_combination(lambdas: Sequence[int], config: Configuration) -> TorusPoint:
    """Min-plus combination: coordinate j is min_i(lambdas[i] + v_i[j])."""
    if len(lambdas) != config.n:
        raise DimensionError(f"expected {config.n} coefficients, got {len(lambdas)}")
    return normalize(
        tuple(
            min(lam + p[j] for lam, p in zip(lambdas, config.points))
            for j in range(config.d)
        )
    )


def segment(x: TorusPoint, y: TorusPoint) -> list[TorusPoint]:
    """Breakpoints of the tropical segment from ``x`` to ``y``.

    The segment is a concatenation of at most d-1 ordinary line segments
    whose directions are zero-one vectors modulo the all-ones direction;
    the returned list holds the <= d distinct corner points in order from
    ``x`` to ``y``, computed as min(c + x, y) for c running through the
    sorted values of y - x.
    """
    if len(x) != len(y):
        raise DimensionError(f"endpoint dimensions differ: {len(x)} vs {len(y)}")
    if x == y:
        raise DegenerateSegmentError(f"segment endpoints coincide at {x.coords}")
    delta = [y[j] - x[j] for j in range(len(x))]
    breakpoints: list[TorusPoint] = []
    for c in sorted(set(delta)):
        point = normalize(tuple(min(c + x[j], y[j]) for j in range(len(x))))
        if not breakpoints or breakpoints[-1] != point:
            breakpoints.append(point)
    return breakpoints


def tropical_determinant(matrix: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Min-plus determinant of a square matrix.

    Returns ``(value, optimal_count)`` where value is the minimum over all
    permutations of the diagonal sum and optimal_count the number of
    permutations attaining it. The matrix is tropically singular iff
    optimal_count >= 2. Exhaustive enumeration; intended for desk scale
    (r <= 9).
    """
    r = len(matrix)
    if r == 0:
        raise DimensionError("empty matrix has no tropical determinant")
    rows = [tuple(row) for row in matrix]
    if any(len(row) != r for row in rows):
        raise DimensionError(f"matrix is not square: {r} rows, widths {[len(q) for q in rows]}")
    best: int | None = None
    count = 0
    for sigma in permutations(range(r)):
        total = sum(rows[i][sigma[i]] for i in range(r))
        if best is None or total < best:
            best, count = total, 1
        elif total == best:
            count += 1
    assert best is not None
    return best, count


def is_tropically_singular(matrix: Sequence[Sequence[int]]) -> bool:
    """True iff the minimum in the tropical determinant is attained at least twice."""
    return tropical_determinant(matrix)[1] >= 2


def singular_square_minor(
    config: Configuration,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First tropically singular square minor of the coordinate matrix, if any.

    Scans all square submatrices of the n x d point matrix from maximal
    size down to 2 x 2 (1 x 1 minors are never singular) and returns the
    0-based ``(row_indices, column_indices)`` of the first singular one,
    or None when the configuration is in tropical general position.
    """
    for r in range(min(config.n, config.d), 1, -1):
        for rows in combinations(range(config.n), r):
            for cols in combinations(range(config.d), r):
                minor = [[config.points[i][j] for j in cols] for i in rows]
                if is_tropically_singular(minor):
                    return rows, cols
    return None


def is_general_position(config: Configuration) -> bool:
    """True iff no square minor of the point matrix is tropically singular.

    Full genericity (every size, not only maximal minors) is what makes
    the induced subdivision a triangulation; it is exactly the hypothesis
    under which the hull has binom(n+d-2, d-1) polyhedral vertices and the
    skeleton-signature map is a bijection onto the multidegree tuples.
    """
    return singular_square_minor(config) is None
