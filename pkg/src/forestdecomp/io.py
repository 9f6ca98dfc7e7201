"""Plain-text file formats and DOT export.

Edge list files carry a ``n m`` header and one ``u v`` line per edge; edge
ids are assigned in file order starting at 0.  Assignment files carry a
``r m`` header and one ``edge_id forest_index`` line per edge.  Violation
certificates are three fixed lines.  All writers emit newline-terminated,
byte-deterministic text.
"""

from __future__ import annotations

from .decompose import Certificate, Decomposition
from .graph import Graph, restriction_edge_count

__all__ = [
    "ParseError",
    "parse_graph",
    "serialize_graph",
    "parse_assignment",
    "format_assignment",
    "parse_certificate",
    "format_certificate",
    "export_dot",
    "PALETTE",
]

# Shared edge palette; valid both as DOT color names and matplotlib colors.
PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta")


class ParseError(ValueError):
    """Malformed input file; ``line`` is the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _content_lines(text: str) -> list[tuple[int, str]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped))
    return rows


def _two_ints(row: str, lineno: int, what: str) -> tuple[int, int]:
    fields = row.split()
    if len(fields) != 2:
        raise ParseError(f"expected two integers for {what}, got {row!r}", lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(
            f"expected two integers for {what}, got {row!r}", lineno
        ) from None


def parse_graph(text: str) -> Graph:
    """Parse an edge list file into a :class:`Graph`.

    Blank lines and lines starting with ``#`` are ignored.  Duplicate
    endpoint pairs become parallel edges with distinct ids; self-loops are
    accepted here and rejected later by decomposition.
    """
    rows = _content_lines(text)
    if not rows:
        raise ParseError("missing 'n m' header line")
    header_line, header = rows[0]
    n, m = _two_ints(header, header_line, "the 'n m' header")
    if n < 0 or m < 0:
        raise ParseError("header counts must be nonnegative", header_line)
    edge_rows = rows[1:]
    if len(edge_rows) < m:
        raise ParseError(
            f"expected {m} edge lines, found only {len(edge_rows)}",
            edge_rows[-1][0] if edge_rows else header_line,
        )
    if len(edge_rows) > m:
        raise ParseError(
            f"expected {m} edge lines, found extra data", edge_rows[m][0]
        )
    edges = []
    for lineno, row in edge_rows:
        u, v = _two_ints(row, lineno, "an edge")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(
                f"edge endpoint out of range: ({u}, {v}) with n={n}", lineno
            )
        edges.append((u, v))
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_assignment(d: Decomposition) -> str:
    lines = [f"{d.r} {len(d.assignment)}"]
    lines.extend(f"{eid} {d.assignment[eid]}" for eid in sorted(d.assignment))
    return "\n".join(lines) + "\n"


def parse_assignment(text: str) -> Decomposition:
    """Parse an assignment file; edge lines may come in any order."""
    rows = _content_lines(text)
    if not rows:
        raise ParseError("missing 'r m' header line")
    header_line, header = rows[0]
    r, m = _two_ints(header, header_line, "the 'r m' header")
    if r < 0 or m < 0:
        raise ParseError("header counts must be nonnegative", header_line)
    body = rows[1:]
    if len(body) != m:
        if len(body) > m:
            where = body[m][0]
        else:
            where = body[-1][0] if body else header_line
        raise ParseError(
            f"expected {m} assignment lines, found {len(body)}", where
        )
    assignment: dict[int, int] = {}
    for lineno, row in body:
        eid, f = _two_ints(row, lineno, "an assignment")
        if not 0 <= eid < m:
            raise ParseError(f"edge id {eid} out of range for m={m}", lineno)
        if eid in assignment:
            raise ParseError(f"edge id {eid} assigned twice", lineno)
        if not 1 <= f <= r:
            raise ParseError(f"forest index {f} outside 1..{r}", lineno)
        assignment[eid] = f
    return Decomposition(r, assignment)


def format_certificate(g: Graph, r: int, cert: Certificate) -> str:
    vertices = cert.sorted_vertices()
    count = restriction_edge_count(g, vertices)
    bound = r * (len(vertices) - 1)
    return (
        f"VIOLATION r={r}\n"
        + " ".join(str(v) for v in vertices)
        + f"\ne(X)={count} bound={bound}\n"
    )


def parse_certificate(text: str) -> tuple[int, Certificate]:
    """Parse a certificate file back into ``(r, Certificate)``."""
    rows = _content_lines(text)
    if len(rows) != 3:
        raise ParseError(f"expected 3 certificate lines, found {len(rows)}")
    (l1, head), (l2, body), (_l3, _tail) = rows
    if not head.startswith("VIOLATION r="):
        raise ParseError("first line must read 'VIOLATION r=<r>'", l1)
    try:
        r = int(head.removeprefix("VIOLATION r="))
    except ValueError:
        raise ParseError("first line must read 'VIOLATION r=<r>'", l1) from None
    try:
        vertices = frozenset(int(v) for v in body.split())
    except ValueError:
        raise ParseError("second line must list vertex ids", l2) from None
    if not vertices:
        raise ParseError("certificate vertex set is empty", l2)
    return r, Certificate(vertices)


def export_dot(g: Graph, d: Decomposition) -> str:
    """Render a decomposition as an undirected DOT graph.

    Each edge is colored by its forest index (the palette cycles past
    ``r = 8``) and labeled ``F<i>``.  Vertex names are the integer ids.
    """
    lines = ["graph forests {"]
    lines.extend(f"  {v};" for v in range(g.n))
    for eid in range(g.m):
        u, v = g.edges[eid]
        f = d.assignment[eid]
        color = PALETTE[(f - 1) % len(PALETTE)]
        lines.append(f'  {u} -- {v} [color={color}, label="F{f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
