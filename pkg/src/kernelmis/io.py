"""Readers and writers for edge-list, METIS and DIMACS graph files."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

FORMATS = ("edge-list", "metis", "dimacs")

_EXTENSIONS = {
    ".el": "edge-list",
    ".txt": "edge-list",
    ".edges": "edge-list",
    ".graph": "metis",
    ".metis": "metis",
    ".col": "dimacs",
    ".dimacs": "dimacs",
    ".clq": "dimacs",
}


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def detect_format(path: str | Path) -> str:
    fmt = _EXTENSIONS.get(Path(path).suffix.lower())
    if fmt is None:
        raise GraphFormatError(f"cannot infer graph format from {str(path)!r}; pass a format")
    return fmt


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n: int, edges: list[tuple[int, int, int]], strict: bool) -> Graph:
    g = Graph(n)
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in edge {u} {v}", lineno)
        if u == v:
            if strict:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            continue
        g.add_edge(u, v)
    return g


def _parse_edge_list(lines: list[str], strict: bool) -> Graph:
    edges = []
    n = 0
    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0][0] in "#%":
            continue
        if len(tokens) < 2:
            raise GraphFormatError("edge line needs two endpoints", lineno)
        u, v = _ints(tokens[:2], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex index in edge {u} {v}", lineno)
        n = max(n, u + 1, v + 1)
        edges.append((u, v, lineno))
    return _build(n, edges, strict)


def _parse_metis(lines: list[str], strict: bool) -> Graph:
    body = [(i, line) for i, line in enumerate(lines, 1) if not line.lstrip().startswith("%")]
    while body and not body[0][1].strip():
        body.pop(0)
    if not body:
        raise GraphFormatError("missing METIS header")
    lineno, header = body[0]
    head = _ints(header.split(), lineno)
    if len(head) < 2:
        raise GraphFormatError("METIS header needs 'n m'", lineno)
    n = head[0]
    if len(head) > 2 and head[2] != 0:
        raise GraphFormatError(f"weighted METIS (fmt={head[2]}) is not supported", lineno)
    rows = body[1:]
    # trailing blank lines past the n-th vertex are tolerated
    while len(rows) > n and not rows[-1][1].strip():
        rows.pop()
    if len(rows) != n:
        raise GraphFormatError(f"expected {n} adjacency lines, found {len(rows)}")
    edges = []
    for v, (lineno, line) in enumerate(rows):
        for u in _ints(line.split(), lineno):
            edges.append((v, u - 1, lineno))
    return _build(n, edges, strict)


def _parse_dimacs(lines: list[str], strict: bool) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) < 4:
                raise GraphFormatError("problem line needs 'p edge n m'", lineno)
            n = _ints(tokens[2:3], lineno)[0]
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(tokens) < 3:
                raise GraphFormatError("edge line needs two endpoints", lineno)
            u, v = _ints(tokens[1:3], lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return _build(n, edges, strict)


_PARSERS = {"edge-list": _parse_edge_list, "metis": _parse_metis, "dimacs": _parse_dimacs}


def parse_graph(text: str | bytes, format: str = "edge-list", strict: bool = True) -> Graph:
    """Parse a graph; duplicate edges are merged, self-loops rejected when strict."""
    if format not in _PARSERS:
        raise GraphFormatError(f"unknown format {format!r}; expected one of {', '.join(FORMATS)}")
    if isinstance(text, bytes):
        text = text.decode()
    return _PARSERS[format](text.splitlines(), strict)


def read_graph(path: str | Path, format: str | None = None, strict: bool = True) -> Graph:
    return parse_graph(Path(path).read_bytes(), format or detect_format(path), strict)


def to_edge_list(g: Graph) -> str:
    """Canonical form: ascending 'u v' lines with u < v, LF endings."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_metis(g: Graph) -> str:
    if g.n != g.capacity:
        raise ValueError("METIS output needs a compacted graph")
    lines = [f"{g.n} {g.m}"]
    lines += [" ".join(str(u + 1) for u in sorted(g.adj[v])) for v in range(g.n)]
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    if g.n != g.capacity:
        raise ValueError("DIMACS output needs a compacted graph")
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


WRITERS = {"edge-list": to_edge_list, "metis": to_metis, "dimacs": to_dimacs}


def read_solution(path: str | Path) -> list[int]:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line[0] in "#%":
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise GraphFormatError(f"bad vertex id {line!r}", lineno) from None
    return out


def write_solution(path: str | Path, vertices) -> None:
    Path(path).write_text("".join(f"{v}\n" for v in sorted(vertices)))
