"""Directed bipartite graphs, the `.dcg` format and directed 4-cycle detection.

    dcg <|A|> <|B|> <arcs>
    <u> <v>          (one arc u -> v per line; A = 0..|A|-1, B = |A|..|A|+|B|-1)
"""
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, Optional, Tuple

from core.ecg_format import parse_int, read_text
from core.errors import InputError, ParseError

Arc = Tuple[int, int]
DirectedCycle = Tuple[Arc, Arc, Arc, Arc]


class Digraph:
    """Directed bipartite graph with parts A and B; every arc crosses between them."""

    __slots__ = ("a_size", "b_size", "arcs", "_out", "_in")

    def __init__(self, a_size: int, b_size: int, arcs: Iterable[Arc] = ()):
        if a_size < 1 or b_size < 1:
            raise InputError(f"both parts need at least one vertex, got |A|={a_size} |B|={b_size}")
        total = a_size + b_size
        arc_set = set()
        out = [set() for _ in range(total)]
        into = [set() for _ in range(total)]
        for u, v in arcs:
            if not (0 <= u < total and 0 <= v < total):
                raise InputError(f"arc ({u}, {v}) has an endpoint outside 0..{total - 1}")
            if (u < a_size) == (v < a_size):
                raise InputError(f"arc ({u}, {v}) does not cross between the parts")
            if (u, v) in arc_set:
                raise InputError(f"duplicate arc ({u}, {v})")
            arc_set.add((u, v))
            out[u].add(v)
            into[v].add(u)
        self.a_size = a_size
        self.b_size = b_size
        self.arcs: FrozenSet[Arc] = frozenset(arc_set)
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in into)

    @property
    def part_a(self) -> range:
        return range(self.a_size)

    @property
    def part_b(self) -> range:
        return range(self.a_size, self.a_size + self.b_size)

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def is_oriented(self) -> bool:
        """True when no pair of vertices carries arcs in both directions."""
        return all((v, u) not in self.arcs for u, v in self.arcs)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.a_size, self.b_size, self.arcs) == (other.a_size, other.b_size, other.arcs)

    def __hash__(self):
        return hash((self.a_size, self.b_size, self.arcs))

    def __repr__(self):
        return f"Digraph(|A|={self.a_size}, |B|={self.b_size}, arcs={len(self.arcs)})"


def parse_dcg(text: str) -> Digraph:
    """Parse `.dcg` text; errors name the offending line."""
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            rows.append((number, stripped.split()))
    if not rows:
        raise ParseError(1, "missing 'dcg <|A|> <|B|> <arcs>' header")
    number, header = rows[0]
    if len(header) != 4 or header[0] != "dcg":
        raise ParseError(number, "header must read 'dcg <|A|> <|B|> <arcs>'")
    a_size, b_size, count = (parse_int(x, number, "header size") for x in header[1:])

    arcs = []
    for number, fields in rows[1:]:
        if len(fields) != 2:
            raise ParseError(number, "arc line must read '<u> <v>'")
        arcs.append((parse_int(fields[0], number, "arc endpoint"), parse_int(fields[1], number, "arc endpoint")))
    last = rows[-1][0]
    if len(arcs) != count:
        raise ParseError(last, f"header announces {count} arcs, found {len(arcs)}")
    try:
        return Digraph(a_size, b_size, arcs)
    except InputError as e:
        raise ParseError(last, str(e)) from None


def serialize_dcg(digraph: Digraph) -> str:
    """`.dcg` text with arcs sorted, ending in a newline."""
    lines = [f"dcg {digraph.a_size} {digraph.b_size} {len(digraph.arcs)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(digraph.arcs))
    return "\n".join(lines) + "\n"


def read_digraph(path: str) -> Digraph:
    return parse_dcg(read_text(path))


def find_directed_c4(digraph: Digraph) -> Optional[DirectedCycle]:
    """
    Return arcs a->b->a'->b'->a with a != a' in A and b != b' in B, or None.

    For each ordered pair (a, a'), the middle vertices b of a->b->a' are
    out(a) ∩ in(a'); the return vertices b' of a'->b'->a are out(a') ∩ in(a).
    A cycle exists iff some choice has b != b'.
    """
    for a in digraph.part_a:
        for a2 in digraph.part_a:
            if a2 == a:
                continue
            forward = digraph.out_neighbors(a) & digraph.in_neighbors(a2)
            if not forward:
                continue
            back = digraph.out_neighbors(a2) & digraph.in_neighbors(a)
            for b in sorted(forward):
                b2 = next((x for x in sorted(back) if x != b), None)
                if b2 is not None:
                    return ((a, b), (b, a2), (a2, b2), (b2, a))
    return None


def brute_force_directed_c4(digraph: Digraph) -> Optional[DirectedCycle]:
    """Try every ordered 4-tuple (a, b, a', b'); used to recheck the fast detector."""
    arcs = digraph.arcs
    for a, b, a2, b2 in product(digraph.part_a, digraph.part_b, digraph.part_a, digraph.part_b):
        if a == a2 or b == b2:
            continue
        cycle = ((a, b), (b, a2), (a2, b2), (b2, a))
        if all(arc in arcs for arc in cycle):
            return cycle
    return None
