"""Naive type-A Brauer composition, written independently of the product engine.

Diagrams are dicts on labelled points ("t", i) / ("b", i); the middle row of a
stacked product is labelled ("m", i).
"""

from __future__ import annotations

from ..connectors import Connector


def _as_graph(conn: Connector, upper: bool) -> dict[tuple[str, int], tuple[str, int]]:
    g = {}
    for a, b, _ in conn.pairs:
        pa = _label(a, upper)
        pb = _label(b, upper)
        g[pa] = pb
        g[pb] = pa
    return g


def _label(ep: int, upper: bool) -> tuple[str, int]:
    if upper:
        return ("t", ep) if ep > 0 else ("m", -ep)
    return ("m", ep) if ep > 0 else ("b", -ep)


def typeA_oracle_product(c1: Connector, c2: Connector) -> tuple[int, Connector]:
    """Return (number of closed loops, composite connector) ignoring decorations."""
    if c1.n != c2.n:
        from ..algebra import SizeMismatch

        raise SizeMismatch(f"SizeMismatch: {c1.n} vs {c2.n}")
    n = c1.n
    up = _as_graph(c1, True)
    down = _as_graph(c2, False)
    visited = set()
    pairs = []
    for start in [("t", i) for i in range(1, n + 1)] + [("b", i) for i in range(1, n + 1)]:
        if start in visited:
            continue
        cur = start
        graph = up if start[0] == "t" else down
        while True:
            visited.add(cur)
            nxt = graph[cur]
            visited.add(nxt)
            if nxt[0] != "m":
                break
            graph = down if graph is up else up
            cur = nxt
        ends = [start, nxt]
        signed = [p[1] if p[0] == "t" else -p[1] for p in ends]
        pairs.append((signed[0], signed[1], 0))
    loops = 0
    for i in range(1, n + 1):
        if ("m", i) in visited:
            continue
        loops += 1
        cur, graph = ("m", i), up
        while True:
            visited.add(cur)
            cur = graph[cur]
            graph = down if graph is up else up
            if cur == ("m", i):
                break
    return loops, Connector(n, pairs)
