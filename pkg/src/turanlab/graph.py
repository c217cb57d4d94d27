"""Bitset-backed simple graphs.

Vertices are integers 0..n-1.  Adjacency is stored as one Python integer
per vertex whose set bits are the neighbours, so all neighbourhood algebra
(intersection, union, popcount) runs on machine words regardless of order.
Graphs are immutable; every edit returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4096
GRAPH6_MAX_ORDER = 258047


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input or unencodable graphs."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_ORDER:
            raise ValueError(f"order must be in 0..{MAX_ORDER}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self._m = -1

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = True) -> "Graph":
        n = len(rows)
        if n > MAX_ORDER:
            raise ValueError(f"order must be at most {MAX_ORDER}, got {n}")
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r >> n or r < 0:
                    raise ValueError(f"row {v} has bits outside 0..{n - 1}")
                if (r >> v) & 1:
                    raise ValueError(f"self-loop at vertex {v}")
                r &= full
            for v, r in enumerate(rows):
                for u in bits(r):
                    if not (rows[u] >> v) & 1:
                        raise ValueError(f"adjacency not symmetric at ({v},{u})")
        g = cls.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._m = -1
        return g

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    @property
    def edge_count(self) -> int:
        if self._m < 0:
            self._m = sum(r.bit_count() for r in self.rows) // 2
        return self._m

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows, check=False)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(rows, check=False)

    def add_vertex(self, neighbor_mask: int = 0) -> "Graph":
        n = self.n
        if neighbor_mask >> n:
            raise ValueError("neighbor mask out of range")
        rows = [r | (((neighbor_mask >> v) & 1) << n) for v, r in enumerate(self.rows)]
        rows.append(neighbor_mask)
        return Graph.from_rows(rows, check=False)

    def complement(self) -> "Graph":
        n = self.n
        full = (1 << n) - 1
        rows = [(~r & full) & ~(1 << v) for v, r in enumerate(self.rows)]
        return Graph.from_rows(rows, check=False)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; vertex i maps to position i."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("duplicate vertices")
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            r = self.rows[v]
            acc = 0
            for w, j in pos.items():
                if (r >> w) & 1:
                    acc |= 1 << j
            rows[i] = acc
        return Graph.from_rows(rows, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabelled copy where old vertex v becomes ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        rows = [0] * n
        for v in range(n):
            acc = 0
            for u in bits(self.rows[v]):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph.from_rows(rows, check=False)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return Graph.from_rows(rows, check=False)


# -- named constructors ---------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_rows([full & ~(1 << v) for v in range(n)], check=False)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive vertex blocks."""
    if any(s < 0 for s in sizes):
        raise ValueError("negative class size")
    n = sum(sizes)
    rows = [0] * n
    full = (1 << n) - 1
    offset = 0
    for s in sizes:
        block = ((1 << s) - 1) << offset
        for v in range(offset, offset + s):
            rows[v] = full & ~block
        offset += s
    return Graph.from_rows(rows, check=False)


def cone(g: Graph) -> Graph:
    """``g`` plus one new vertex adjacent to everything."""
    return g.add_vertex((1 << g.n) - 1)


# -- partitions and twin classes ------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint, non-empty vertex blocks with a kind tag."""

    blocks: tuple[tuple[int, ...], ...]
    kind: str

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            for v in b:
                if v in seen:
                    raise ValueError(f"vertex {v} in two blocks")
                seen.add(v)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def covers(self, n: int) -> bool:
        return sum(len(b) for b in self.blocks) == n


def twin_classes(g: Graph) -> Partition:
    """Partition into maximal sets of vertices with identical open
    neighbourhoods (so twins are never adjacent)."""
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(g.rows):
        groups.setdefault(r, []).append(v)
    blocks = sorted((tuple(vs) for vs in groups.values()), key=lambda b: b[0])
    return Partition(tuple(blocks), "twin-classes")


# -- blow-ups --------------------------------------------------------------


def blow_up(g: Graph, weights: Sequence[int]) -> Graph:
    """Replace vertex v by an independent set of ``weights[v]`` copies,
    joining copies exactly when the originals were adjacent.

    Copies of vertex v occupy positions offset(v)..offset(v)+w(v)-1 where
    offsets follow the original vertex order.
    """
    if len(weights) != g.n:
        raise ValueError(f"need {g.n} weights, got {len(weights)}")
    if any(w < 1 for w in weights):
        raise ValueError("all blow-up weights must be >= 1")
    offsets = [0] * g.n
    acc = 0
    for v, w in enumerate(weights):
        offsets[v] = acc
        acc += w
    n = acc
    block_mask = [((1 << weights[v]) - 1) << offsets[v] for v in range(g.n)]
    rows = [0] * n
    for v in range(g.n):
        nb = 0
        for u in bits(g.rows[v]):
            nb |= block_mask[u]
        for i in range(offsets[v], offsets[v] + weights[v]):
            rows[i] = nb
    return Graph.from_rows(rows, check=False)


# -- graph6 ----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode as graph6: header byte(s) for n, then upper-triangle bits
    x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte, each +63."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"graph6 supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    out = [head]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) for c in s]
    for c in data:
        if c < 63 or c > 126:
            raise GraphFormatError(f"character {chr(c)!r} outside graph6 range 63..126")
    if data[0] == 126:  # '~'
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 order header")
        if data[1] == 126:
            raise GraphFormatError("graph6 orders above 258047 not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphFormatError(f"bit payload too short: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise GraphFormatError(f"trailing bytes after graph6 payload ({len(body) - need} extra)")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            bit = (byte >> (5 - (k % 6))) & 1
            k += 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    # remaining padding bits must be zero for a bit-exact encoding
    while k < 6 * need:
        byte = body[k // 6] - 63
        if (byte >> (5 - (k % 6))) & 1:
            raise GraphFormatError("nonzero padding bits in graph6 payload")
        k += 1
    return Graph.from_rows(rows, check=False)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    out = []
    for line in lines:
        if line.strip():
            out.append(from_graph6(line))
    return out
