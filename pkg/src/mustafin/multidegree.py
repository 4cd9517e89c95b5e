"""Dimension and multidegree combinatorics for images of rational maps.

Given coordinate subspaces W_1, ..., W_n of k^d with the map
P(k^d) --> P(k^d/W_1) x ... x P(k^d/W_n), the image's dimension p, its
multidegree tuples and its multigraded Hilbert function are determined by
the table d_I = dim of the intersection of the W_i over I. Everything here
is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Sequence

from .errors import ContractError, UndefinedMapError


@dataclass(frozen=True)
class CoordinateSubspace:
    """Span of a subset of the standard basis vectors e_j, j in 1..d."""

    d: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ContractError(f"ambient dimension must be positive, got {self.d}")
        if not all(1 <= j <= self.d for j in self.members):
            raise ContractError(f"members {sorted(self.members)} not within 1..{self.d}")

    @property
    def dim(self) -> int:
        return len(self.members)

    def bitmask(self) -> int:
        mask = 0
        for j in self.members:
            mask |= 1 << (j - 1)
        return mask


def subspace(d: int, members: Iterable[int] = ()) -> CoordinateSubspace:
    return CoordinateSubspace(d, frozenset(members))


@dataclass(frozen=True)
class DIndexTable:
    """Intersection dimensions d_I for every nonempty subset I of factors.

    Entry ``by_mask[mask]`` is the dimension of the intersection of the
    kernels selected by the bits of ``mask`` (bit i-1 for factor i);
    ``by_mask[0]`` is the ambient dimension d.
    """

    d: int
    n: int
    by_mask: tuple[int, ...]

    def of(self, factors: Iterable[int]) -> int:
        """d_I for the 1-based factor index set I."""
        mask = 0
        for i in factors:
            if not 1 <= i <= self.n:
                raise ContractError(f"factor index {i} not within 1..{self.n}")
            mask |= 1 << (i - 1)
        return self.by_mask[mask]


@dataclass(frozen=True)
class MultidegreeSet:
    """Admissible exponent tuples of common total degree p."""

    p: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        for t in self.tuples:
            if sum(t) != self.p or any(v < 0 for v in t):
                raise ContractError(f"tuple {t} is not a nonnegative vector of total {self.p}")

    def sorted_tuples(self) -> list[tuple[int, ...]]:
        return sorted(self.tuples)


def intersection_dims(kernels: Sequence[CoordinateSubspace]) -> DIndexTable:
    """Tabulate d_I = |intersection of member sets over I| for all nonempty I."""
    if not kernels:
        raise ContractError("need at least one subspace")
    d = kernels[0].d
    if any(w.d != d for w in kernels):
        raise ContractError("subspaces have mismatched ambient dimensions")
    n = len(kernels)
    bits = [w.bitmask() for w in kernels]
    full = (1 << d) - 1
    by_mask = [d] * (1 << n)
    for mask in range(1, 1 << n):
        inter = full
        probe = mask
        while probe:
            i = (probe & -probe).bit_length() - 1
            inter &= bits[i]
            probe &= probe - 1
        by_mask[mask] = inter.bit_count()
    return DIndexTable(d, n, tuple(by_mask))


def _tuples_with_sum(caps: Sequence[int], total: int) -> Iterable[tuple[int, ...]]:
    """All nonnegative tuples below the given caps with the given sum."""
    n = len(caps)

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == n - 1:
            if 0 <= remaining <= caps[i]:
                yield prefix + (remaining,)
            return
        for v in range(min(caps[i], remaining) + 1):
            yield from rec(i + 1, remaining - v, prefix + (v,))

    if n:
        yield from rec(0, total, ())


def admissible_tuples(d: int, table: DIndexTable, h: int) -> set[tuple[int, ...]]:
    """The set M(h): tuples m >= 0 with sum h and d - sum_{i in I} m_i > d_I for all I."""
    if h < 0:
        raise ContractError(f"total degree must be nonnegative, got {h}")
    n = table.n
    caps = [d - 1 - table.by_mask[1 << i] for i in range(n)]
    if any(c < 0 for c in caps):
        return set()
    result = set()
    for m in _tuples_with_sum(caps, h):
        # sums[mask] = sum of m_i over the bits of mask, built by peeling the low bit
        sums = [0] * (1 << n)
        ok = True
        for mask in range(1, 1 << n):
            low = (mask & -mask).bit_length() - 1
            sums[mask] = sums[mask & (mask - 1)] + m[low]
            if d - sums[mask] <= table.by_mask[mask]:
                ok = False
                break
        if ok:
            result.add(m)
    return result


def dimension_p(d: int, table: DIndexTable) -> int:
    """Largest h with M(h) nonempty; the dimension of the image variety.

    Emptiness is monotone in h (dropping a unit from an admissible tuple
    keeps it admissible), so an upward scan stops at the first empty level.
    """
    if not admissible_tuples(d, table, 0):
        raise UndefinedMapError("M(0) is empty: some kernel is the full ambient space")
    p = 0
    for h in range(1, table.n * (d - 1) + 1):
        if not admissible_tuples(d, table, h):
            break
        p = h
    return p


def multidegree_set(d: int, table: DIndexTable) -> MultidegreeSet:
    """M(p) at the maximal nonempty level p."""
    p = dimension_p(d, table)
    return MultidegreeSet(p, frozenset(admissible_tuples(d, table, p)))


def hilbert_function(mset: MultidegreeSet, u: Sequence[int]) -> int:
    """Multigraded Hilbert function at u.

    Inclusion-exclusion over the nonempty subsets S of the multidegree
    tuples: sum of (-1)^(|S|-1) * prod_i binom(u_i + l_i, l_i), where l_i
    is the smallest i-th entry over S. Exact big-integer arithmetic.
    """
    tuples = mset.sorted_tuples()
    if not tuples:
        raise ContractError("Hilbert function of an empty multidegree set is undefined")
    n = len(tuples[0])
    u = tuple(int(v) for v in u)
    if len(u) != n:
        raise ContractError(f"expected {n} grading variables, got {len(u)}")
    if any(v < 0 for v in u):
        raise ContractError(f"grading variables must be nonnegative: {u}")

    total = 0

    def rec(idx: int, mins: tuple[int, ...] | None, size: int) -> None:
        nonlocal total
        if idx == len(tuples):
            if size:
                assert mins is not None
                sign = 1 if size % 2 else -1
                total += sign * prod(comb(u[i] + mins[i], mins[i]) for i in range(n))
            return
        rec(idx + 1, mins, size)
        t = tuples[idx]
        merged = t if mins is None else tuple(min(a, b) for a, b in zip(mins, t))
        rec(idx + 1, merged, size + 1)

    rec(0, None, 0)
    return total
