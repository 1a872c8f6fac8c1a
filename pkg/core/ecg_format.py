"""Reader and writer for the line-oriented `.ecg` edge-colored graph format.

    ecg <n> <m>
    <u> <v> <c>      (m lines, canonical edge order on output)

Lines starting with `#` and blank lines are ignored on input.
"""
import re
from typing import Iterator, List, Tuple

from core.errors import InputError, ParseError
from core.graph import EdgeColoredGraph, edge_key


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


# ASCII digits with an optional leading minus; no "+", "_" or other digits
_INTEGER = re.compile(r"-?[0-9]+")


def parse_int(token: str, line_number: int, what: str) -> int:
    if not _INTEGER.fullmatch(token):
        raise ParseError(line_number, f"{what} must be an integer, got {token!r}")
    return int(token)


def parse(text: str) -> EdgeColoredGraph:
    """
    Parse `.ecg` text into a graph.

    Raises:
        ParseError: With the offending line number for a malformed header,
            a malformed edge line, a self-loop, a duplicate edge, a vertex id
            outside 0..n-1, a negative color or a wrong edge count.
    """
    lines = _content_lines(text)
    try:
        header_number, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing 'ecg <n> <m>' header") from None
    if len(header) != 3 or header[0] != "ecg":
        raise ParseError(header_number, "header must read 'ecg <n> <m>'")
    n = parse_int(header[1], header_number, "vertex count")
    m = parse_int(header[2], header_number, "edge count")
    if n < 1 or m < 0:
        raise ParseError(header_number, f"invalid sizes n={n} m={m}")

    triples = []
    seen = set()
    last_number = header_number
    for number, fields in lines:
        last_number = number
        if len(fields) != 3:
            raise ParseError(number, "edge line must read '<u> <v> <c>'")
        u = parse_int(fields[0], number, "vertex id")
        v = parse_int(fields[1], number, "vertex id")
        c = parse_int(fields[2], number, "color")
        if u == v:
            raise ParseError(number, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(number, f"vertex id outside 0..{n - 1}")
        if c < 0:
            raise ParseError(number, f"negative color {c}")
        key = edge_key(u, v)
        if key in seen:
            raise ParseError(number, f"duplicate edge {key}")
        seen.add(key)
        triples.append((u, v, c))

    if len(triples) != m:
        raise ParseError(last_number, f"header announces {m} edges, found {len(triples)}")
    try:
        return EdgeColoredGraph(n, triples)
    except InputError as e:
        raise ParseError(last_number, str(e)) from None


def serialize(graph: EdgeColoredGraph) -> str:
    """Write a graph as `.ecg` text with edges in canonical order and a final newline."""
    lines = [f"ecg {graph.n} {graph.m}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in graph.colored_edges())
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    """
    Read an instance file as UTF-8.

    Raises:
        ParseError: On bytes that are not UTF-8, naming the line they sit on.
    """
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise ParseError(line_number, f"not UTF-8 text ({e.reason})") from None


def read_graph(path: str) -> EdgeColoredGraph:
    return parse(read_text(path))


def write_graph(graph: EdgeColoredGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize(graph))
