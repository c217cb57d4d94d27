"""Filtered enumeration of non-isomorphic graphs.

Graphs are generated order by order: every graph on n vertices arises from
a graph on n-1 vertices by attaching a new vertex, and for K_q-freeness the
attachment set must induce no K_{q-1}.  Children are deduplicated through
canonical certificates, so each level contains exactly one representative
per isomorphism class, sorted canonically.

Levels are cached per filter so repeated queries (the verification
commands share the triangle-free levels, for instance) pay once.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .canon import canonical_certificate_rows
from .graph import Graph


class EnumerationLimitError(ValueError):
    """Raised for enumeration requests that are infeasible by contract."""


UNRESTRICTED_MAX = 11

# filter key: None for all graphs, q >= 3 for K_q-free
_LEVELS: dict[int | None, list[list[Graph]]] = {}


def _class_count_estimate(n: int) -> str:
    """Rough isomorphism-class count 2^C(n,2) / n!, as a decimal string."""
    import math

    log10 = n * (n - 1) / 2 * math.log10(2) - math.log10(math.factorial(n))
    exp = int(log10)
    return f"~{10 ** (log10 - exp):.1f}e{exp}"


def _has_clique_mask(rows: Sequence[int], mask: int, size: int) -> bool:
    """Does the induced subgraph on ``mask`` contain a K_size?"""
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if mask.bit_count() + 1 < size:
            return False
        if _has_clique_mask(rows, rows[v] & mask, size - 1):
            return True
    return False


def _extension_sets(rows: Sequence[int], k: int, q: int | None) -> list[int]:
    """All attachment masks S such that adding a vertex joined to S keeps
    the graph K_q-free, i.e. S induces no K_{q-1}.  Includes the empty set."""
    if q is None:
        return list(range(1 << k))
    if q == 2:
        # forbidding K_2 means no edges ever: only the empty attachment
        return [0]
    out = [0]
    need = q - 2  # a K_{q-1} through u inside S means a K_{q-2} in S & N(u)

    def grow(smask: int, start: int) -> None:
        for u in range(start, k):
            common = rows[u] & smask
            if common.bit_count() >= need and _has_clique_mask(rows, common, need):
                continue
            nxt = smask | (1 << u)
            out.append(nxt)
            grow(nxt, u + 1)

    grow(0, 0)
    return out


def _next_level(parents: list[Graph], q: int | None) -> list[Graph]:
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for parent in parents:
        prows = parent.rows
        k = parent.n
        newbit = 1 << k
        for smask in _extension_sets(prows, k, q):
            rows = [r | newbit if (smask >> v) & 1 else r for v, r in enumerate(prows)]
            rows.append(smask)
            cert = canonical_certificate_rows(rows, k + 1)
            if cert not in seen:
                seen.add(cert)
                out.append(Graph.from_rows(cert, check=False))
    out.sort(key=lambda g: g.rows)
    return out


def levels_up_to(max_order: int, forbidden_clique: int | None = None) -> list[list[Graph]]:
    """Lists of all non-isomorphic (K_q-free) graphs for orders 1..max_order.

    ``levels[i]`` holds order i+1.  Unrestricted enumeration is capped at
    order 11 by contract; hereditary clique filters have no hard cap.
    """
    q = forbidden_clique
    if q is not None and q < 2:
        raise ValueError("forbidden clique size must be >= 2")
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if q is None and max_order > UNRESTRICTED_MAX:
        raise EnumerationLimitError(
            f"unrestricted enumeration is limited to order {UNRESTRICTED_MAX}; "
            f"order {max_order} has {_class_count_estimate(max_order)} classes"
        )
    levels = _LEVELS.setdefault(q, [])
    if not levels:
        levels.append([Graph(1)])
    while len(levels) < max_order:
        levels.append(_next_level(levels[-1], q))
    return levels[:max_order]


def enumerate_graphs(n: int, forbidden_clique: int | None = None) -> list[Graph]:
    """All non-isomorphic graphs of order exactly ``n`` passing the filter,
    one canonical representative each, in canonical order."""
    if n == 0:
        return [Graph(0)]
    return levels_up_to(n, forbidden_clique)[n - 1]


def iter_graphs_up_to(max_order: int, forbidden_clique: int | None = None
                      ) -> Iterator[Graph]:
    for level in levels_up_to(max_order, forbidden_clique):
        yield from level


def clear_cache() -> None:
    _LEVELS.clear()
