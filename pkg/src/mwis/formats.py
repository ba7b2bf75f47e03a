"""Graph file parsing (METIS and edge-list formats) and the two benchmark
weight-assignment families."""

from __future__ import annotations

import logging
import random

from .graph import Graph, build_graph, replace_weights

log = logging.getLogger(__name__)

WEIGHT_RANGE = 200  # both weight families produce weights in [1, 200]


class ParseError(ValueError):
    """Malformed graph file; message carries the offending line number."""


def parse_metis(text: str) -> tuple[Graph, list[int]]:
    """Parse a METIS adjacency file into a Graph plus original 1-based ids.

    Header is "n m [fmt]" with fmt 0 (unweighted; weights default to 1) or
    10 (leading vertex weight per line). '%' lines are comments. Neighbor
    lists are 1-based and must be symmetric.
    """
    lines = text.splitlines()
    header: list[str] | None = None
    header_line = 0
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped.startswith("%"):
            continue
        if header is None:
            if not stripped:
                continue
            header = stripped.split()
            header_line = lineno
        else:
            rows.append((lineno, stripped))

    if header is None:
        raise ParseError("empty file: missing header")
    if len(header) not in (2, 3):
        raise ParseError(f"line {header_line}: header must be 'n m' or 'n m fmt'")
    try:
        n, m = int(header[0]), int(header[1])
        fmt = int(header[2]) if len(header) == 3 else 0
    except ValueError as exc:
        raise ParseError(f"line {header_line}: non-integer header token") from exc
    if fmt not in (0, 10):
        raise ParseError(f"line {header_line}: unsupported fmt {fmt} (expected 0 or 10)")

    # Trailing blank lines are tolerated; missing vertex lines are not.
    while len(rows) > n and not rows[-1][1]:
        rows.pop()
    if len(rows) != n:
        raise ParseError(f"expected {n} vertex lines, found {len(rows)}")

    weights = [1] * n
    adjacency: list[list[int]] = []
    for v, (lineno, row) in enumerate(rows):
        tokens = row.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer token") from exc
        if fmt == 10:
            if not values:
                raise ParseError(f"line {lineno}: missing vertex weight")
            if values[0] < 1:
                raise ParseError(f"line {lineno}: vertex weight must be positive")
            weights[v] = values[0]
            values = values[1:]
        nbs = []
        for u in values:
            if not 1 <= u <= n:
                raise ParseError(f"line {lineno}: neighbor {u} out of range 1..{n}")
            if u == v + 1:
                raise ParseError(f"line {lineno}: self-loop on vertex {u}")
            nbs.append(u - 1)
        adjacency.append(nbs)

    neighbor_sets = [set(a) for a in adjacency]
    edges: list[tuple[int, int]] = []
    for v, nbs in enumerate(neighbor_sets):
        for u in nbs:
            if v not in neighbor_sets[u]:
                raise ParseError(
                    f"line {rows[v][0]}: vertex {u + 1} missing reciprocal neighbor {v + 1}"
                )
            if v < u:
                edges.append((v, u))
    if len(edges) != m:
        raise ParseError(f"header claims {m} edges, adjacency lists encode {len(edges)}")

    return build_graph(n, edges, weights), list(range(1, n + 1))


def parse_edgelist(text: str) -> tuple[Graph, list[int]]:
    """Parse "u v" edge lines into a Graph plus the original vertex ids.

    Ids are arbitrary non-negative integers, densely renumbered by first
    appearance. '#' lines are comments; duplicate edges collapse; self-loops
    are dropped with a warning. Weights default to 1.
    """
    index: dict[int, int] = {}
    ids: list[int] = []
    edges: list[tuple[int, int]] = []

    def dense(original: int) -> int:
        mapped = index.get(original)
        if mapped is None:
            mapped = len(ids)
            index[original] = mapped
            ids.append(original)
        return mapped

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {len(tokens)} tokens")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex id") from exc
        if a < 0 or b < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        if a == b:
            log.warning("line %d: dropping self-loop on vertex %d", lineno, a)
            dense(a)
            continue
        edges.append((dense(a), dense(b)))

    n = len(ids)
    return build_graph(n, edges, [1] * n), ids


def to_metis(g: Graph) -> str:
    """Serialize a Graph in METIS form with vertex weights (fmt 10)."""
    out = [f"{g.n} {g.m} 10"]
    for v in range(g.n):
        row = [str(g.weights[v])]
        row.extend(str(u + 1) for u in g.adjacency[v])
        out.append(" ".join(row))
    return "\n".join(out) + "\n"


def assign_weights_family_a(g: Graph, ids: list[int]) -> Graph:
    """Deterministic weights keyed to the original 1-based file ids:
    ((id - 1) mod 200) + 1."""
    if len(ids) != g.n:
        raise ValueError(f"expected {g.n} ids, got {len(ids)}")
    return replace_weights(g, [(i - 1) % WEIGHT_RANGE + 1 for i in ids])


def assign_weights_family_b(g: Graph, seed: int) -> Graph:
    """Seeded uniform random weights in [1, 200]."""
    rng = random.Random(seed)
    return replace_weights(g, [rng.randint(1, WEIGHT_RANGE) for _ in range(g.n)])
