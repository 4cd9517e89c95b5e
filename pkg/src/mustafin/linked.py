"""Rank-one linked-Grassmannian combinatorics over a hull of lattice classes.

Vertices are the hull lattice points, edges the building-adjacent pairs.
Each directed edge carries the 0/1 diagonal of its special-fiber map: for
u -> v with difference shifted to a zero-one vector w, the diagonal is
supported on the zero set of w (the inclusion direction), and the opposite
direction gets the complement. Composing diagonals along paths either
reproduces the minimal-path map or vanishes identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .apartment import is_adjacent
from .errors import ContractError, DomainError, InvariantViolationError
from .hull import contains, lattice_points
from .tropical import Configuration, TorusPoint, normalize, segment


class _ZeroPathMap:
    """Distinguished outcome of a path whose composed map vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _ZeroPathMap()


@dataclass
class LinkedGraph:
    """Graph of hull lattice classes with diagonal edge maps."""

    d: int
    vertices: tuple[TorusPoint, ...]
    edge_maps: dict[tuple[TorusPoint, TorusPoint], tuple[int, ...]] = field(repr=False)

    @property
    def edges(self) -> list[tuple[TorusPoint, TorusPoint]]:
        """Unordered edges, each reported once with endpoints sorted."""
        return sorted({tuple(sorted((u, v))) for u, v in self.edge_maps})

    def diagonal(self, u: TorusPoint, v: TorusPoint) -> tuple[int, ...]:
        try:
            return self.edge_maps[(u, v)]
        except KeyError:
            raise ContractError(f"{u.coords} -> {v.coords} is not an edge") from None

    def neighbors(self, u: TorusPoint) -> list[TorusPoint]:
        return sorted(v for (a, v) in self.edge_maps if a == u)


def step_diagonal(u: TorusPoint, v: TorusPoint) -> tuple[int, ...]:
    """Diagonal of the edge map u -> v: 1 where the shifted difference is 0."""
    if not is_adjacent(u, v):
        raise ContractError(f"{u.coords} and {v.coords} are not adjacent")
    diff = [v[j] - u[j] for j in range(len(u))]
    lo = min(diff)
    return tuple(1 if value == lo else 0 for value in diff)


def build_graph(config: Configuration) -> LinkedGraph:
    """Linked graph on the hull lattice points of a configuration."""
    verts = lattice_points(config).sorted_points()
    edge_maps: dict[tuple[TorusPoint, TorusPoint], tuple[int, ...]] = {}
    for a, u in enumerate(verts):
        for v in verts[a + 1 :]:
            if is_adjacent(u, v):
                edge_maps[(u, v)] = step_diagonal(u, v)
                edge_maps[(v, u)] = step_diagonal(v, u)
    return LinkedGraph(config.d, tuple(verts), edge_maps)


def path_map(graph: LinkedGraph, path: Sequence[TorusPoint]):
    """Entrywise product of edge diagonals along ``path``; ZERO if it vanishes.

    A single-vertex path composes to the identity (all-ones) diagonal.
    """
    if not path:
        raise ContractError("a path needs at least one vertex")
    for vertex in path:
        if vertex not in graph.vertices:
            raise ContractError(f"{vertex.coords} is not a vertex of the graph")
    product = (1,) * graph.d
    for u, v in zip(path, path[1:]):
        diag = graph.diagonal(u, v)
        product = tuple(a * b for a, b in zip(product, diag))
    if not any(product):
        return ZERO
    return product


@dataclass(frozen=True)
class ChainExactnessReport:
    """Exactness of a chain of diagonal maps, one flag list per condition.

    Per edge i: (1) ker f_i = im g_i and (2) ker g_i = im f_i, where f
    runs forward along the chain and g backward. Per interior vertex i:
    (3) im f_{i-1} meets ker f_i trivially and (4) im g_i meets ker g_{i-1}
    trivially; for 0/1 diagonals both reduce to support nesting.
    """

    ker_f_is_im_g: tuple[bool, ...]
    ker_g_is_im_f: tuple[bool, ...]
    im_f_avoids_ker_f: tuple[bool, ...]
    im_g_avoids_ker_g: tuple[bool, ...]

    @property
    def all_ok(self) -> bool:
        return all(
            all(flags)
            for flags in (
                self.ker_f_is_im_g,
                self.ker_g_is_im_f,
                self.im_f_avoids_ker_f,
                self.im_g_avoids_ker_g,
            )
        )


def exactness_check(graph: LinkedGraph, path: Sequence[TorusPoint]) -> ChainExactnessReport:
    """Check the four chain exactness conditions along a path in the graph."""
    if len(path) < 2:
        raise ContractError("exactness needs a chain with at least one edge")
    forward = [graph.diagonal(u, v) for u, v in zip(path, path[1:])]
    backward = [graph.diagonal(v, u) for u, v in zip(path, path[1:])]

    def supp(diag):
        return frozenset(j for j, a in enumerate(diag) if a)

    full = frozenset(range(graph.d))
    cond1 = tuple(full - supp(f) == supp(g) for f, g in zip(forward, backward))
    cond2 = tuple(full - supp(g) == supp(f) for f, g in zip(forward, backward))
    cond3 = tuple(
        not (supp(forward[i - 1]) & (full - supp(forward[i])))
        for i in range(1, len(forward))
    )
    cond4 = tuple(
        not (supp(backward[i]) & (full - supp(backward[i - 1])))
        for i in range(1, len(backward))
    )
    return ChainExactnessReport(cond1, cond2, cond3, cond4)


def segment_lattice_path(x: TorusPoint, y: TorusPoint) -> list[TorusPoint]:
    """Consecutive adjacent lattice points along the tropical segment x -> y.

    Expands each classical piece of the segment into unit steps of its
    zero-one direction; this walk is a minimal path in the linked graph.
    """
    if x == y:
        return [x]
    path = [x]
    for target in segment(x, y)[1:]:
        current = path[-1]
        diff = [target[j] - current[j] for j in range(len(x))]
        lo = min(diff)
        shifted = [value - lo for value in diff]
        length = max(shifted)
        unit = [1 if value else 0 for value in shifted]
        if any(value not in (0, length) for value in shifted):
            raise InvariantViolationError(
                f"segment step {diff} from {current.coords} is not a scaled zero-one vector"
            )
        for _ in range(length):
            current = normalize(tuple(c + a for c, a in zip(current, unit)))
            path.append(current)
        if path[-1] != target:
            raise InvariantViolationError("segment walk missed its breakpoint")
    return path


def simple_root_maps(config: Configuration, root: TorusPoint) -> list[tuple[int, ...]]:
    """Composed minimal-path diagonals from ``root`` toward each generator.

    Agreement with the reduction profile at the root is a theorem, not an
    assumption; the test suite checks it.
    """
    if not contains(config, root):
        raise DomainError(f"{root.coords} is not in the hull of the configuration")
    maps = []
    for generator in config.points:
        product = (1,) * config.d
        path = segment_lattice_path(root, generator)
        for u, v in zip(path, path[1:]):
            diag = step_diagonal(u, v)
            product = tuple(a * b for a, b in zip(product, diag))
        maps.append(product)
    return maps


def graph_to_dot(graph: LinkedGraph) -> str:
    """DOT rendering; edge labels show the two diagonal supports."""

    def name(p: TorusPoint) -> str:
        return '"' + ",".join(str(c) for c in p.coords) + '"'

    def supp(diag) -> str:
        return "{" + ",".join(str(j + 1) for j, a in enumerate(diag) if a) + "}"

    lines = ["graph hull {"]
    for v in graph.vertices:
        lines.append(f"  {name(v)};")
    for u, v in graph.edges:
        label = f"{supp(graph.diagonal(u, v))} / {supp(graph.diagonal(v, u))}"
        lines.append(f'  {name(u)} -- {name(v)} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
