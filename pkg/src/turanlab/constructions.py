"""Closed-form quantities and explicit graph families.

Every constructor fixes a vertex labelling (documented per function) so
graph6 output is reproducible byte for byte.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graph import Graph, bits, complete_multipartite


def turan_class_sizes(n: int, r: int) -> list[int]:
    """Class sizes of the balanced complete r-partite graph, descending."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_number(n: int, r: int) -> int:
    """Edge count of the balanced complete r-partite graph on n vertices."""
    sizes = turan_class_sizes(n, r)
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph; classes are consecutive vertex
    blocks in decreasing size order."""
    return complete_multipartite(turan_class_sizes(n, r))


def threshold_size(n: int, r: int) -> int:
    """Largest size of a K_{r+1}-free graph of order n that is *not*
    r-colourable.  Defined for n >= r+3; below that no such graph exists."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if n < r + 3:
        raise ValueError(f"no graph on {n} vertices is K_{r + 1}-free and "
                         f"non-{r}-colourable; need n >= r+3 = {r + 3}")
    if n >= 2 * r + 1:
        return turan_number(n, r) - n // r + 1
    return turan_number(n, r) - 2


def _extremal_base(n: int, r: int) -> tuple[list[list[int]], int, int]:
    """Vertex classes of the balanced (n-1)-vertex r-partite base and the
    indices of the two attachment classes (W-host first).

    Vertices 0..n-2 fill the classes in decreasing size order; vertex n-1
    is the extra vertex.  For n > 2r the attachment classes are the two
    smallest, for r+3 <= n <= 2r the two largest (of size 2).  When the
    two differ in size the host is the larger one.
    """
    if n < r + 3:
        raise ValueError(f"need n >= r+3 = {r + 3}")
    sizes = turan_class_sizes(n - 1, r)
    classes: list[list[int]] = []
    off = 0
    for s in sizes:
        classes.append(list(range(off, off + s)))
        off += s
    if n >= 2 * r + 1:
        host, other = r - 2, r - 1  # two smallest; sizes[host] >= sizes[other]
    else:
        host, other = 0, 1  # two largest, both of size 2
    return classes, host, other


def extremal_graph(n: int, r: int) -> Graph:
    """The tight example for the non-colourability threshold: a balanced
    complete r-partite graph on n-1 vertices plus a vertex u joined to two
    chosen classes in one vertex each (v1, v2) and to every other class
    fully, with the edge v1 v2 removed.  u is vertex n-1; v1, v2 are the
    first vertices of their classes."""
    return _family_member(n, r, 1, "standard")


def extremal_family(n: int, r: int, l: int, variant: str = "standard") -> Graph:
    """Member of the extremal family at the threshold size.

    standard: u is joined to the first ``l`` vertices W of the host class
    (v1 included) and to v2; the edges between W and v2 are removed.
    prime: the mirrored move with the roles of the two attachment classes
    swapped; it yields a graph not isomorphic to any standard member
    exactly when the two attachment classes differ in size, so it is only
    defined then (host one larger than the other).

    Valid for 1 <= l <= floor(n/r) - 1; l = host size is rejected because
    joining u to a whole class gives an r-colourable graph.
    """
    s = n // r
    if not 1 <= l <= s - 1:
        raise ValueError(f"l must be in 1..{s - 1}, got {l}")
    return _family_member(n, r, l, variant)


def _family_member(n: int, r: int, l: int, variant: str) -> Graph:
    if variant not in ("standard", "prime"):
        raise ValueError(f"unknown variant {variant!r}")
    classes, host, other = _extremal_base(n, r)
    if variant == "prime":
        if len(classes[host]) != len(classes[other]) + 1:
            raise ValueError(
                "prime variant needs attachment classes of different sizes "
                "(n divisible by r with n >= 3r; for r = 2 even n >= 6)")
        host, other = other, host
    if l > len(classes[host]) - 1:
        # joining u to a whole class yields an r-colourable graph
        raise ValueError(f"l must be at most {len(classes[host]) - 1} "
                         f"for the {variant} variant at (n={n}, r={r})")
    u = n - 1
    w_set = classes[host][:l]
    v_other = classes[other][0]
    g = complete_multipartite([len(c) for c in classes]).add_vertex(0)
    rows = list(g.rows)

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    def drop(a: int, b: int) -> None:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    for i, c in enumerate(classes):
        if i not in (host, other):
            for v in c:
                add(u, v)
    for w in w_set:
        add(u, w)
        drop(v_other, w)
    add(u, v_other)
    return Graph.from_rows(rows, check=False)


def groetzsch_graph() -> Graph:
    """The Mycielskian of the 5-cycle: 11 vertices, 20 edges, triangle-free
    and 4-chromatic.  Cycle 0..4, shadow of i is 5+i, apex is 10."""
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        edges.append((i, j))
        edges.append((5 + i, j))
        edges.append((5 + j, i))
        edges.append((10, 5 + i))
    return Graph(11, edges)


def k4free_5chromatic() -> Graph:
    """A 12-vertex K4-free graph of chromatic number 5 whose best triangle
    misses only two vertices' worth of degree.

    Labels: triangle 0,1,2; then 3=a12, 4=b12, 5=b23, 6=c23, 7=a13,
    8=b13, 9=c13, 10=x, 11=y.
    """
    v1, v2, v3 = 0, 1, 2
    a12, b12, b23, c23, a13, b13, c13, x, y = 3, 4, 5, 6, 7, 8, 9, 10, 11
    edges = [(v1, v2), (v2, v3), (v1, v3)]
    for t in (a12, b12):
        edges += [(t, v1), (t, v2)]
    for t in (b23, c23):
        edges += [(t, v2), (t, v3)]
    for t in (a13, b13, c13):
        edges += [(t, v1), (t, v3)]
    edges += [(x, v1), (x, a12), (x, a13)]
    edges += [(y, v3), (y, c23), (y, c13)]
    edges += [(x, y)]
    for t in (b12, b23, b13):
        edges += [(x, t), (y, t)]
    # a_ij ~ c_kl whenever the index pairs differ
    edges += [(a12, c23), (a12, c13), (a13, c23)]
    return Graph(12, edges)


def _independent_sets(g: Graph, include_empty: bool) -> list[int]:
    out = []
    n = g.n
    for mask in range(1 << n):
        if mask == 0 and not include_empty:
            continue
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if g.rows[v] & m:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def trianglefree_5chromatic(include_empty: bool = True) -> Graph:
    """A triangle-free graph of chromatic number 5 built around a 5-cycle
    plus an isolated vertex F: two hubs v, w and, for each independent set
    I of F, satellites v_I ~ v and w_I ~ w; v_I ~ I, w_I ~ I, and
    v_I ~ w_J exactly when I and J are disjoint.

    Labels: F = 0..5 (cycle 0..4, isolated 5), v = 6, w = 7, then the v_I
    block and the w_I block with I enumerated as increasing bitmasks.
    ``include_empty`` controls whether the empty set contributes a
    satellite pair (the measured deficiency is 6 either way).
    """
    f = Graph(6, [(i, (i + 1) % 5) for i in range(5)])
    sets = _independent_sets(f, include_empty)
    v, w = 6, 7
    base = 8
    k = len(sets)
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges.append((v, w))
    for idx, smask in enumerate(sets):
        vi = base + idx
        wi = base + k + idx
        edges.append((v, vi))
        edges.append((w, wi))
        for t in bits(smask):
            edges.append((vi, t))
            edges.append((wi, t))
    for i, si in enumerate(sets):
        for j, sj in enumerate(sets):
            if si & sj == 0:
                edges.append((base + i, base + k + j))
    return Graph(8 + 2 * k, edges)


def three_sat_many_twin_classes(f: int, n: int) -> Graph:
    """Triangle-saturated graph of near-extremal size with 2^{f+1} + f + 2
    twin classes: a seed set S of f vertices, blocks U and W of 2^f
    vertices realising every S-neighbourhood, u_I ~ w_J iff I and J are
    disjoint, and bulk sets U', W' completely joined to each other and to
    the opposite block.

    Labels: S = 0..f-1, U next 2^f (vertex U[i] has S-neighbourhood given
    by the bits of i), W next 2^f likewise, then U' (ceil of the rest) and
    W'.
    """
    if f < 0:
        raise ValueError("f must be >= 0")
    if n <= 4 ** f:
        raise ValueError(f"need n > 4^f = {4 ** f} (f below half the log)")
    p = 1 << f
    rest = n - f - 2 * p
    if rest < 2:
        raise ValueError(f"need n >= {f + 2 * p + 2} so both bulk sets are non-empty")
    u0 = f
    w0 = f + p
    up0 = f + 2 * p
    nu = (rest + 1) // 2
    wp0 = up0 + nu
    edges = []
    for i in range(p):
        for j in bits(i):
            edges.append((u0 + i, j))
            edges.append((w0 + i, j))
        for j in range(p):
            if i & j == 0:
                edges.append((u0 + i, w0 + j))
    for a in range(up0, wp0):
        for b in range(wp0, n):
            edges.append((a, b))  # U' x W'
        for b in range(w0, w0 + p):
            edges.append((a, b))  # U' x W
    for a in range(u0, u0 + p):
        for b in range(wp0, n):
            edges.append((a, b))  # U x W'
    return Graph(n, edges)


def _half_subsets(m: int) -> list[tuple[int, ...]]:
    return list(combinations(range(m), m // 2))


def sat_non_blowup(m: int, r: int, n: int) -> Graph:
    """Clique-saturated graph (forbidding K_{r+1}) that is not a blow-up
    of any bounded graph: a balanced r-partite graph on n-1 vertices with
    three tampered windows W1 (size M = C(m, m/2)), W2, W3 (size m each),
    an apex joined to the windows and the remaining classes, a matching
    between W2 and W3, and one distinct half-subset of W2 wired to each W1
    vertex.

    Labels: classes of the (n-1)-vertex base in decreasing size order,
    windows at the start of classes 1..3, apex is n-1.
    """
    if r < 3:
        raise ValueError("r must be >= 3")
    if m < 2 or m % 2:
        raise ValueError("m must be even and >= 2")
    big_m = comb(m, m // 2)
    sizes = turan_class_sizes(n - 1, r)
    if big_m > sizes[-1] or m > sizes[-1]:
        raise ValueError(
            f"classes of size {sizes[-1]} cannot host windows of sizes "
            f"{big_m} and {m}")
    classes = []
    off = 0
    for s in sizes:
        classes.append(list(range(off, off + s)))
        off += s
    apex = n - 1
    w1 = classes[0][:big_m]
    w2 = classes[1][:m]
    w3 = classes[2][:m]
    g = complete_multipartite(sizes).add_vertex(0)
    rows = list(g.rows)

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    def drop(a: int, b: int) -> None:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    for widx in (w1, w2, w3):
        for v in widx:
            add(apex, v)
    for i in range(3, r):
        for v in classes[i]:
            add(apex, v)
    for a in w1:
        for b in w2 + w3:
            drop(a, b)
    for a in w2:
        for b in w3:
            drop(a, b)
    for t in range(m):
        add(w2[t], w3[t])
    for widx, half in zip(w1, _half_subsets(m)):
        for t in half:
            add(widx, w2[t])
        for t in range(m):
            if t not in half:
                add(widx, w3[t])
    return Graph.from_rows(rows, check=False)


def three_sat_twin_free(m: int) -> Graph:
    """Twin-free triangle-saturated graph on 2m + 4*log2(m) vertices with
    m^2 + 2m*log2(m) + 2*log2(m)^2 + 2*log2(m) edges (m a power of two).

    Blocks S1, S2, U1, U2 of size t = log2(m) and B1, B2 of size m;
    complete joins S1-S2, U1-U2, B1-B2; B1 realises all S2-subsets (B1[i]
    joined to bits of i) and B2 all S1-subsets; matchings U1[j]-S1[j] and
    U2[j]-S2[j]; U1[j] joined to the B2 vertices avoiding S1[j], and
    symmetrically for U2.

    Labels: S1, S2, U1, U2, B1, B2 in consecutive blocks.
    """
    t = m.bit_length() - 1
    if m < 2 or 1 << t != m:
        raise ValueError("m must be a power of two, at least 2")
    s1 = list(range(0, t))
    s2 = list(range(t, 2 * t))
    u1 = list(range(2 * t, 3 * t))
    u2 = list(range(3 * t, 4 * t))
    b1 = list(range(4 * t, 4 * t + m))
    b2 = list(range(4 * t + m, 4 * t + 2 * m))
    n = 2 * m + 4 * t
    edges = []
    for a in s1:
        for b in s2:
            edges.append((a, b))
    for a in u1:
        for b in u2:
            edges.append((a, b))
    for a in b1:
        for b in b2:
            edges.append((a, b))
    for i in range(m):
        for j in bits(i):
            edges.append((b1[i], s2[j]))
            edges.append((b2[i], s1[j]))
    for j in range(t):
        edges.append((u1[j], s1[j]))
        edges.append((u2[j], s2[j]))
        for i in range(m):
            if not (i >> j) & 1:
                edges.append((u1[j], b2[i]))
                edges.append((u2[j], b1[i]))
    return Graph(n, edges)


def sat_twin_free(m: int, r: int) -> Graph:
    """Twin-free K_{r+1}-saturated graph on n = r*(C(m, m/2) + 2m + 1)
    vertices: r rotated copies of the non-blow-up gadget on a balanced
    r-partite base, one hub vertex per copy, and greedy edges among the
    hubs (pairs in index order, kept when no K_{r+1} arises).

    Labels: class i of the base occupies block i of size M + 2m laid out
    as [W1 window of gadget i | W2 window of gadget i-1 | W3 window of
    gadget i-2]; hubs are the last r vertices.
    """
    if r < 3:
        raise ValueError("r must be >= 3")
    if m < 2 or m % 2:
        raise ValueError("m must be even and >= 2")
    big_m = comb(m, m // 2)
    cls = big_m + 2 * m
    n = r * (cls + 1)
    classes = [list(range(i * cls, (i + 1) * cls)) for i in range(r)]
    hubs = [r * cls + i for i in range(r)]
    g = complete_multipartite([cls] * r)
    for _ in range(r):
        g = g.add_vertex(0)
    rows = list(g.rows)

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    def drop(a: int, b: int) -> None:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    halves = _half_subsets(m)
    for i in range(r):
        w1 = classes[i][:big_m]
        w2 = classes[(i + 1) % r][big_m:big_m + m]
        w3 = classes[(i + 2) % r][big_m + m:big_m + 2 * m]
        for a in w1:
            for b in w2 + w3:
                drop(a, b)
        for a in w2:
            for b in w3:
                drop(a, b)
        for tpos in range(m):
            add(w2[tpos], w3[tpos])
        for widx, half in zip(w1, halves):
            for tpos in half:
                add(widx, w2[tpos])
            for tpos in range(m):
                if tpos not in half:
                    add(widx, w3[tpos])
        for v in w1 + w2 + w3:
            add(hubs[i], v)
        for k in range(r):
            if k not in ((i) % r, (i + 1) % r, (i + 2) % r):
                for v in classes[k]:
                    add(hubs[i], v)
    # greedy hub edges, keeping the graph K_{r+1}-free
    from .invariants import find_clique

    for i in range(r):
        for j in range(i + 1, r):
            add(hubs[i], hubs[j])
            if find_clique(Graph.from_rows(rows, check=False), r + 1) is not None:
                drop(hubs[i], hubs[j])
    return Graph.from_rows(rows, check=False)
