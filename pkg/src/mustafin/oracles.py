"""Brute-force reference computations used to cross-check the fast paths.

These deliberately avoid the residuation projection, the permutation scan
and the hull-point signature machinery, so that each check in the test
suite and in ``verify`` compares two independent routes.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .apartment import DiagonalLatticeClass, class_to_point, intersection_class, point_to_class
from .hull import bounding_box
from .tropical import Configuration, TorusPoint, normalize, tropical_combination


def coordinate_range(config: Configuration) -> int:
    """Largest coordinate spread over the normalized generators."""
    return max(hi - lo for lo, hi in bounding_box(config))


def brute_force_hull(config: Configuration) -> frozenset[TorusPoint]:
    """All integer tropical combinations with coefficients in [0, range]^n.

    With normalized generators the canonical coefficients of any hull
    lattice point already lie in that box, so the enumeration is
    exhaustive; the result is intersected with the bounding box.
    """
    reach = coordinate_range(config)
    box = bounding_box(config)
    points = set()
    for lam in product(range(reach + 1), repeat=config.n):
        z = tropical_combination(lam, config)
        if all(lo <= z[j] <= hi for j, (lo, hi) in enumerate(box)):
            points.add(z)
    return frozenset(points)


def assignment_min_count(matrix: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Tropical determinant via dynamic programming over column subsets.

    dp[mask] holds (min cost, number of optimal partial assignments) after
    matching the first popcount(mask) rows to the columns in mask.
    """
    r = len(matrix)
    rows = [tuple(row) for row in matrix]
    full = (1 << r) - 1
    best: list[tuple[int, int] | None] = [None] * (1 << r)
    best[0] = (0, 1)
    for mask in range(1 << r):
        state = best[mask]
        if state is None:
            continue
        i = mask.bit_count()
        if i == r:
            continue
        cost, ways = state
        for j in range(r):
            bit = 1 << j
            if mask & bit:
                continue
            nxt = mask | bit
            cand = cost + rows[i][j]
            cur = best[nxt]
            if cur is None or cand < cur[0]:
                best[nxt] = (cand, ways)
            elif cand == cur[0]:
                best[nxt] = (cand, cur[1] + ways)
    result = best[full]
    assert result is not None
    return result


def skeleton_scan(config: Configuration, m: Sequence[int]) -> set[TorusPoint]:
    """Locate multidegree ``m`` by scanning signatures over the brute-force hull.

    Argmin multiplicities are recomputed inline rather than through the
    hull module.
    """
    hits = set()
    for point in brute_force_hull(config):
        ok = True
        for target, generator in zip(m, config.points):
            diffs = [generator[j] - point[j] for j in range(config.d)]
            if diffs.count(min(diffs)) - 1 < target:
                ok = False
                break
        if ok:
            hits.add(point)
    return hits


def convex_closure_by_intersections(config: Configuration) -> frozenset[TorusPoint]:
    """Closure of the generators under pairwise lattice intersections.

    Iterates [pi^a L, pi^b L'] |-> class of pi^a L meet pi^b L' (exponentwise
    max) to a fixpoint; shifts beyond the coordinate range add nothing
    because one lattice then contains the other.
    """
    reach = coordinate_range(config)
    closure: set[DiagonalLatticeClass] = {point_to_class(p) for p in config.points}
    while True:
        fresh = set()
        current = list(closure)
        for a_idx, c1 in enumerate(current):
            for c2 in current[a_idx:]:
                for shift in range(-reach, reach + 1):
                    merged = intersection_class(0, c1, shift, c2)
                    if merged not in closure:
                        fresh.add(merged)
        if not fresh:
            break
        closure |= fresh
    return frozenset(class_to_point(c) for c in closure)


def all_box_points(config: Configuration) -> list[TorusPoint]:
    """Every normalized lattice point of the generators' bounding box."""
    box = bounding_box(config)
    return [
        normalize(candidate)
        for candidate in product(*(range(lo, hi + 1) for lo, hi in box))
    ]
