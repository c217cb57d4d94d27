"""Exact clique number, exact chromatic number, k-colourability with
witnesses, and minimum-degree peeling down to an r-partite remainder.

The clique solver is a bitset branch-and-bound with a greedy colouring
bound.  The colourability solver branches on the vertex with the fewest
remaining colours (saturation order), propagates forced colours, and only
ever opens one previously unused colour per branch, which is what makes
refuting colourability on mid-sized graphs feasible.  Searches accept an
optional node budget; exhausting it raises ``SearchBudgetExceeded`` so a
resource abort can never be mistaken for a mathematical answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits


class SearchBudgetExceeded(RuntimeError):
    """Search ran out of its node budget before reaching an exact answer."""

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class CliquePresentError(ValueError):
    """A forbidden clique is present; ``witness`` holds its vertices."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Coloring:
    """Proper colouring witness: colour per vertex, palette = max+1."""

    colors: tuple[int, ...]
    palette: int

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


def _normalized_coloring(raw: Sequence[int]) -> Coloring:
    remap: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return Coloring(tuple(out), len(remap))


@dataclass(frozen=True)
class PeelResult:
    """Vertices removed (in order) until the rest became r-partite, plus
    the parts of the remainder."""

    removed: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]


# -- cliques ----------------------------------------------------------------


def _color_sort(rows: Sequence[int], pmask: int) -> list[tuple[int, int]]:
    """Greedy colouring of the candidate set; returns (vertex, colour)
    pairs in assignment order, colour counts starting at 1."""
    order = []
    color = 0
    rest = pmask
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            rest ^= low
            avail = (avail ^ low) & ~rows[v]
    return order


def max_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, deterministic for a given labelling."""
    n = g.n
    if n == 0:
        return ()
    rows = g.rows
    best: list[int] = []

    def expand(r: list[int], pmask: int) -> None:
        nonlocal best
        for v, c in reversed(_color_sort(rows, pmask)):
            if len(r) + c <= len(best):
                return
            r.append(v)
            sub = pmask & rows[v]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = r.copy()
            r.pop()
            pmask &= ~(1 << v)

    expand([], (1 << n) - 1)
    return tuple(sorted(best))


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    w = max_clique(g)
    return len(w), w


def find_clique(g: Graph, size: int, within: int | None = None) -> tuple[int, ...] | None:
    """Some clique of exactly ``size`` vertices inside the mask ``within``
    (whole graph if omitted), or None.  Early-exits on first hit."""
    rows = g.rows
    mask = (1 << g.n) - 1 if within is None else within
    if size == 0:
        return ()

    def rec(r: list[int], pmask: int, need: int) -> tuple[int, ...] | None:
        if need == 0:
            return tuple(r)
        while pmask:
            if pmask.bit_count() < need:
                return None
            low = pmask & -pmask
            v = low.bit_length() - 1
            pmask ^= low
            r.append(v)
            got = rec(r, pmask & rows[v], need - 1)
            if got is not None:
                return got
            r.pop()
        return None

    return rec([], mask, size)


def is_clique_free(g: Graph, q: int) -> bool:
    return find_clique(g, q) is None


def assert_clique_free(g: Graph, q: int) -> None:
    w = find_clique(g, q)
    if w is not None:
        raise CliquePresentError(f"graph contains a K_{q}", w)


# -- colourability -----------------------------------------------------------


def _greedy_clique(rows: Sequence[int], n: int) -> list[int]:
    """Greedy clique grown from the highest-degree vertex; used only to
    seed colour symmetry breaking."""
    if n == 0:
        return []
    degs = [r.bit_count() for r in rows]
    v = max(range(n), key=lambda u: (degs[u], -u))
    clique = [v]
    cand = rows[v]
    while cand:
        u = max(bits(cand), key=lambda w: ((rows[w] & cand).bit_count(), -w))
        clique.append(u)
        cand &= rows[u]
    return clique


def _two_color(rows: Sequence[int], n: int) -> list[int] | None:
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(rows[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int | None):
        self.left = nodes

    def spend(self) -> bool:
        if self.left is None:
            return True
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _k_color(rows: Sequence[int], n: int, k: int, budget: _Budget) -> list[int] | None:
    """A proper colouring with colours 0..k-1, or None if impossible."""
    if n == 0:
        return []
    if k <= 0:
        return None
    if k == 1:
        return [0] * n if all(r == 0 for r in rows) else None
    if k >= n:
        return list(range(n))
    if k == 2:
        return _two_color(rows, n)

    clique = _greedy_clique(rows, n)
    if len(clique) > k:
        return None

    full = (1 << k) - 1
    dom = [full] * n
    color = [-1] * n
    degs = [r.bit_count() for r in rows]
    state = {"uncolored": n, "used": 0}

    trail: list[tuple[int, int]] = []  # (vertex, previous domain)
    assigned_stack: list[int] = []

    def place(v: int, c: int) -> bool:
        """Assign colour c to v and propagate forced assignments.
        Returns False on a dead end (caller rewinds trail and stack)."""
        queue = [(v, c)]
        while queue:
            w, cw = queue.pop()
            if color[w] >= 0:
                if color[w] != cw:
                    return False
                continue
            color[w] = cw
            assigned_stack.append(w)
            state["uncolored"] -= 1
            state["used"] |= 1 << cw
            for u in bits(rows[w]):
                if color[u] >= 0:
                    if color[u] == cw:
                        return False
                    continue
                d = dom[u]
                if d & (1 << cw):
                    trail.append((u, d))
                    d &= ~(1 << cw)
                    dom[u] = d
                    if d == 0:
                        return False
                    if d & (d - 1) == 0:
                        queue.append((u, d.bit_length() - 1))
        return True

    def dfs() -> bool:
        if state["uncolored"] == 0:
            return True
        if not budget.spend():
            raise SearchBudgetExceeded(f"{k}-colourability search budget exhausted")
        # saturation order: fewest remaining colours, then highest degree,
        # then lowest index
        v = -1
        best_key = None
        for u in range(n):
            if color[u] >= 0:
                continue
            key = (dom[u].bit_count(), -degs[u], u)
            if best_key is None or key < best_key:
                best_key = key
                v = u
        used = state["used"]
        fresh = ~used & (used + 1) if used != full else 0
        allowed = dom[v] & (used | fresh)
        for c in bits(allowed):
            tmark = len(trail)
            amark = len(assigned_stack)
            umark = state["used"]
            if place(v, c) and dfs():
                return True
            while len(trail) > tmark:
                u, d = trail.pop()
                dom[u] = d
            while len(assigned_stack) > amark:
                w = assigned_stack.pop()
                color[w] = -1
                state["uncolored"] += 1
            state["used"] = umark
        return False

    for i, v in enumerate(clique):
        if not place(v, i):
            return None
    if state["uncolored"] and not dfs():
        return None
    return color


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy saturation-order colouring; an upper bound for chi."""
    n = g.n
    rows = g.rows
    color = [-1] * n
    neighbor_colors = [0] * n
    degs = g.degrees()
    for _ in range(n):
        v = -1
        best_key = None
        for u in range(n):
            if color[u] >= 0:
                continue
            key = (-neighbor_colors[u].bit_count(), -degs[u], u)
            if best_key is None or key < best_key:
                best_key = key
                v = u
        c = 0
        taken = neighbor_colors[v]
        while (taken >> c) & 1:
            c += 1
        color[v] = c
        for u in bits(rows[v]):
            neighbor_colors[u] |= 1 << c
    return _normalized_coloring(color)


def is_r_colorable(g: Graph, r: int, node_budget: int | None = None
                   ) -> tuple[bool, Coloring | None]:
    """Exact r-colourability with a witness colouring when true."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if g.n == 0:
        return True, Coloring((), 0)
    if r == 0:
        return False, None
    raw = _k_color(g.rows, g.n, r, _Budget(node_budget))
    if raw is None:
        return False, None
    col = _normalized_coloring(raw)
    assert col.is_proper(g)
    return True, col


def chromatic_number(g: Graph, node_budget: int | None = None
                     ) -> tuple[int, Coloring]:
    """Exact chromatic number with witness.  With a node budget, an
    exhausted search raises ``SearchBudgetExceeded`` carrying the bounds
    established so far instead of returning a wrong answer."""
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    lower, _ = clique_number(g)
    greedy = dsatur_coloring(g)
    upper = greedy.palette
    if lower == upper:
        return upper, greedy
    budget = _Budget(node_budget)
    refuted = lower - 1
    for k in range(lower, upper):
        try:
            raw = _k_color(g.rows, n, k, budget)
        except SearchBudgetExceeded:
            raise SearchBudgetExceeded(
                f"chromatic number undecided: in [{refuted + 1}, {upper}]",
                lower=refuted + 1, upper=upper)
        if raw is not None:
            col = _normalized_coloring(raw)
            assert col.is_proper(g) and col.palette <= k
            return col.palette, col
        refuted = k
    return upper, greedy


# -- AES peeling -------------------------------------------------------------


def aes_peel(g: Graph, r: int) -> PeelResult:
    """While the graph is not r-colourable, remove a minimum-degree vertex
    (lowest index on ties); return the removals and an r-partition of the
    remainder.

    Requires a K_{r+1}-free input.  Each removed vertex is checked against
    the degree bound deg(v) <= (3r-4)/(3r-1) * order that such graphs
    guarantee for their minimum degree; a violation would mean a bug.
    """
    assert_clique_free(g, r + 1)
    alive = list(range(g.n))
    cur = g
    removed: list[int] = []
    while True:
        ok, col = is_r_colorable(cur, r)
        if ok:
            assert col is not None
            parts: list[list[int]] = [[] for _ in range(col.palette)]
            for i, c in enumerate(col.colors):
                parts[c].append(alive[i])
            return PeelResult(tuple(removed),
                              tuple(tuple(p) for p in parts if p))
        degs = cur.degrees()
        v = min(range(cur.n), key=lambda u: (degs[u], alive[u]))
        if degs[v] * (3 * r - 1) > (3 * r - 4) * cur.n:
            raise AssertionError(
                "minimum degree exceeds the guaranteed bound; "
                "this indicates a solver bug")
        removed.append(alive[v])
        keep = [u for u in range(cur.n) if u != v]
        cur = cur.induced(keep)
        alive = [alive[u] for u in keep]
