"""Undirected multigraphs and the random graph generators built on them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .sampling import DegreeSequence, GeneralizedParetoLaw, as_generator, sample_generalized_pareto


@dataclass(frozen=True)
class Graph:
    """Vertex count plus an (m, 2) array of undirected edges.

    Self-loops and parallel edges are allowed; a self-loop adds 2 to the
    degree of its vertex.
    """

    n_vertices: int
    edges: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= self.n_vertices):
            raise ValueError(f"edge endpoints must lie in [0, {self.n_vertices})")
        object.__setattr__(self, "edges", e)

    @property
    def n_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n_vertices).astype(np.int64)

    def directed_edges(self) -> np.ndarray:
        """Both orientations of every edge; a self-loop yields (i, i) twice."""
        return np.concatenate([self.edges, self.edges[:, ::-1]])

    def relabel(self, perm) -> "Graph":
        perm = np.asarray(perm, dtype=np.int64)
        return Graph(self.n_vertices, perm[self.edges])


def configuration_model(degrees, seed) -> Graph:
    """Uniform random perfect matching of half-edges; loops and multi-edges kept."""
    if not isinstance(degrees, DegreeSequence):
        degrees = DegreeSequence(degrees)
    rng = as_generator(seed)
    stubs = np.repeat(np.arange(degrees.n, dtype=np.int64), degrees.degrees)
    return Graph(degrees.n, rng.permutation(stubs).reshape(-1, 2))


def erase_parallel_and_loops(graph: Graph) -> Graph:
    e = graph.edges
    e = e[e[:, 0] != e[:, 1]]
    e = np.unique(np.sort(e, axis=1), axis=0)
    return Graph(graph.n_vertices, e)


def insert_intermediate_vertices(graph: Graph) -> Graph:
    """Subdivide every edge {u, v} into u-m-v through a fresh vertex m.

    A self-loop at i becomes two parallel edges {i, m}, so D_i is unchanged.
    """
    n, m = graph.n_vertices, graph.n_edges
    mids = np.arange(n, n + m, dtype=np.int64)
    e = graph.edges
    new = np.empty((2 * m, 2), dtype=np.int64)
    new[0::2, 0] = e[:, 0]
    new[0::2, 1] = mids
    new[1::2, 0] = mids
    new[1::2, 1] = e[:, 1]
    return Graph(n + m, new)


def preferential_attachment(n: int, seed) -> Graph:
    """Tree grown from the edge {0, 1}; vertex t attaches to an older vertex
    chosen with probability proportional to its degree."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    rng = as_generator(seed)
    # Picking a uniform endpoint of the existing edge list is picking a vertex
    # with probability deg / sum(deg).
    picks = rng.integers(0, 2 * np.arange(1, n - 1)) if n > 2 else np.empty(0, dtype=np.int64)
    ends = [0] * (2 * (n - 1))
    ends[0], ends[1] = 1, 0
    for t in range(2, n):
        k = 2 * (t - 1)
        ends[k] = t
        ends[k + 1] = ends[int(picks[t - 2])]
    return Graph(n, np.asarray(ends, dtype=np.int64).reshape(-1, 2))


@dataclass(frozen=True)
class BipartitePairList:
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.int64).ravel()
        y = np.asarray(self.y, dtype=np.int64).ravel()
        if x.shape != y.shape:
            raise ValueError("x and y block sizes must have equal length")
        if x.size == 0:
            raise ValueError("at least one block is required")
        if np.any(x < 1) or np.any(y < 1):
            raise ValueError("every block size must be at least 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_pairs(cls, pairs) -> "BipartitePairList":
        arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        return cls(arr[:, 0], arr[:, 1])

    def __len__(self):
        return int(self.x.size)


def bipartite_collection(pairs: BipartitePairList) -> Graph:
    """Disjoint union of complete bipartite blocks K_{x_i, y_i}."""
    if not isinstance(pairs, BipartitePairList):
        pairs = BipartitePairList.from_pairs(pairs)
    x, y = pairs.x, pairs.y
    sizes = x + y
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    per_block = x * y
    block = np.repeat(np.arange(x.size), per_block)
    starts = np.concatenate([[0], np.cumsum(per_block)[:-1]])
    local = np.arange(int(per_block.sum()), dtype=np.int64) - starts[block]
    yb = y[block]
    left = offsets[block] + local // yb
    right = offsets[block] + x[block] + local % yb
    return Graph(int(sizes.sum()), np.column_stack([left, right]))


def bipartite_block_sizes(u1, u2, b: float, a: float) -> BipartitePairList:
    """Block sizes X = ceil(b(U1 + U2)), Y = ceil(b(U1 + a U2))."""
    u1 = np.asarray(u1, dtype=float)
    u2 = np.asarray(u2, dtype=float)
    x = np.ceil(b * (u1 + u2))
    y = np.ceil(b * (u1 + a * u2))
    return BipartitePairList(np.maximum(x, 1), np.maximum(y, 1))


def sample_bipartite_pairs(b: float, a: float, law: GeneralizedParetoLaw, n: int, seed) -> BipartitePairList:
    if not b > 0:
        raise ValueError(f"b must be positive, got {b}")
    if not a >= 1:
        raise ValueError(f"a must be at least 1, got {a}")
    rng = as_generator(seed)
    u = sample_generalized_pareto(law, 2 * n, rng).reshape(n, 2)
    return bipartite_block_sizes(u[:, 0], u[:, 1], b, a)


class EdgeListError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.rstrip()!r}")
        self.lineno = lineno


def parse_edgelist(text: str) -> Graph:
    """Parse 'u v' lines with 0-based indices; '#' lines and blanks are skipped."""
    ends = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, line, "expected two vertex indices")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, line, "vertex indices must be integers") from None
        if u < 0 or v < 0:
            raise EdgeListError(lineno, line, "vertex indices must be non-negative")
        ends.append((u, v))
    n = 1 + max((max(e) for e in ends), default=-1)
    return Graph(n, np.asarray(ends, dtype=np.int64).reshape(-1, 2))


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(graph: Graph, path) -> None:
    lines = [f"# n_vertices={graph.n_vertices} n_edges={graph.n_edges}"]
    lines += [f"{u} {v}" for u, v in graph.edges.tolist()]
    Path(path).write_text("\n".join(lines) + "\n")

