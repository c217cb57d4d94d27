"""Canonical labelling and isomorphism testing.

The canonical form is computed per connected component by iterated
equitable refinement plus backtracking over the first non-singleton cell.
Two prunings keep the search tree small without external dependencies:

* interchangeable vertices (open or closed twins) inside the target cell
  are branched on only once, which collapses blow-ups and multipartite
  graphs to a handful of leaves;
* components are canonicalised independently and then sorted, so unions
  of many isomorphic components never multiply the search.

The certificate of a labelling is the tuple of relabelled adjacency rows;
the canonical labelling is the one with the lexicographically smallest
certificate.  Certificates of isomorphic graphs are identical.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits


def _refine(cells: list[list[int]], rows: Sequence[int]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every
    cell until stable.  Sub-cells are ordered by their count signature,
    which keeps the cell order isomorphism-invariant."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                rv = rows[v]
                sig = tuple((rv & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not split:
            return out
        cells = out


def _certificate(rows: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {old: new for new, old in enumerate(order)}
    out = []
    for old in order:
        acc = 0
        for u in bits(rows[old]):
            acc |= 1 << pos[u]
        out.append(acc)
    return tuple(out)


def _canon_search(rows: Sequence[int], k: int) -> tuple[tuple[int, ...], list[int]]:
    """Best certificate and the labelling (new index -> local vertex)
    achieving it, for a graph on local vertices 0..k-1."""
    best_cert: tuple[int, ...] | None = None
    best_order: list[int] | None = None

    def rec(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_order
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            cert = _certificate(rows, order)
            if best_cert is None or cert < best_cert:
                best_cert = cert
                best_order = order
            return
        # candidates up to interchangeability: skip v when an earlier u in
        # the cell is an open twin (equal rows) or closed twin (rows differ
        # exactly in the bits u, v)
        cands: list[int] = []
        for v in cell:
            rv = rows[v]
            for u in cands:
                d = rows[u] ^ rv
                if d == 0 or d == (1 << u) | (1 << v):
                    break
            else:
                cands.append(v)
        rest_template = cell
        for v in cands:
            rest = [u for u in rest_template if u != v]
            sub = cells[:idx] + [[v], rest] + cells[idx + 1:]
            rec(_refine(sub, rows))

    rec(_refine([list(range(k))], rows))
    assert best_cert is not None and best_order is not None
    return best_cert, best_order


def _components(rows: Sequence[int], n: int) -> list[int]:
    """Connected components as vertex masks, in order of smallest vertex."""
    unseen = (1 << n) - 1
    comps = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        unseen &= ~comp
    return comps


def canonical_certificate_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """Canonical certificate (relabelled adjacency rows) of the graph given
    by ``rows``.  Equal for two graphs iff they are isomorphic."""
    if n == 0:
        return ()
    comps = _components(rows, n)
    if len(comps) == 1:
        cert, _ = _canon_search(rows, n)
        return cert
    pieces = []
    for comp in comps:
        verts = list(bits(comp))
        pos = {v: i for i, v in enumerate(verts)}
        local = []
        for v in verts:
            acc = 0
            for u in bits(rows[v] & comp):
                acc |= 1 << pos[u]
            local.append(acc)
        cert, _ = _canon_search(local, len(verts))
        pieces.append((len(verts), cert))
    # concatenate component certificates, larger components last so that
    # the combined certificate is again isomorphism-invariant
    pieces.sort()
    out: list[int] = []
    offset = 0
    for size, cert in pieces:
        out.extend(r << offset for r in cert)
        offset += size
    return tuple(out)


def canonical_form(g: Graph) -> Graph:
    """A canonically relabelled copy; isomorphic graphs map to equal graphs."""
    return Graph.from_rows(canonical_certificate_rows(g.rows, g.n), check=False)


def certificate(g: Graph) -> tuple[int, ...]:
    return canonical_certificate_rows(g.rows, g.n)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)
