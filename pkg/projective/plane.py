"""Finite projective planes of prime order over the integers mod p."""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from core.errors import InputError, UnsupportedError
from utils.progress import display_progress


@dataclass(frozen=True)
class ProjectivePlane:
    """
    Points, lines and incidence of a plane of order t.

    `incidence[l]` is the set of points on line l. Points and lines are both
    numbered 0..t^2+t; in planes from `build_plane`, point i and line i
    come from the same canonical triple.
    """

    order: int
    points: Tuple[int, ...]
    lines: Tuple[int, ...]
    incidence: Tuple[FrozenSet[int], ...]

    def points_on(self, line: int) -> FrozenSet[int]:
        return self.incidence[line]

    def lines_through(self, point: int) -> FrozenSet[int]:
        return frozenset(l for l in self.lines if point in self.incidence[l])

    def dual(self) -> "ProjectivePlane":
        """Swap the roles of points and lines."""
        incidence = tuple(self.lines_through(p) for p in self.points)
        return ProjectivePlane(self.order, self.lines, self.points, incidence)

    def without_incidence(self, point: int, line: int) -> "ProjectivePlane":
        """Return a copy with one point removed from one line (not a plane any more)."""
        incidence = list(self.incidence)
        incidence[line] = incidence[line] - {point}
        return ProjectivePlane(self.order, self.points, self.lines, tuple(incidence))


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    detail: str

    def __str__(self):
        return f"{self.axiom}: {self.detail}"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def is_prime_power(q: int) -> bool:
    """True for p^k with p prime and k >= 1."""
    if q < 2:
        return False
    base = next(d for d in range(2, q + 1) if q % d == 0)
    while q % base == 0:
        q //= base
    return q == 1


def canonical_triples(p: int):
    """Nonzero triples mod p whose first nonzero coordinate is 1, in lexicographic order."""
    triples = []
    for triple in product(range(p), repeat=3):
        nonzero = [x for x in triple if x]
        if nonzero and nonzero[0] == 1:
            triples.append(triple)
    return triples


def build_plane(p: int) -> ProjectivePlane:
    """
    Build the plane of order p from homogeneous coordinates mod p.

    Points and lines are the canonical triples; line l contains point x iff
    the dot product of their triples is 0 mod p.

    Raises:
        InputError: When p is not a prime.
        UnsupportedError: When p is a prime power p^k with k >= 2.
    """
    if not isinstance(p, int) or p < 2:
        raise InputError(f"plane order must be a prime, got {p!r}")
    if not is_prime(p):
        if is_prime_power(p):
            raise UnsupportedError(
                f"order {p} is a prime power; only prime orders are supported (no GF(p^k) arithmetic)"
            )
        raise InputError(f"plane order must be a prime, got {p}")

    display_progress(f"Building projective plane of order {p}...")
    triples = canonical_triples(p)
    coords = np.array(triples, dtype=np.int64)
    on_line = (coords @ coords.T) % p == 0
    incidence = tuple(frozenset(int(x) for x in np.flatnonzero(on_line[l])) for l in range(len(triples)))
    ids = tuple(range(len(triples)))
    return ProjectivePlane(p, ids, ids, incidence)


def verify_plane_axioms(plane: ProjectivePlane) -> Optional[AxiomViolation]:
    """
    Check the three plane axioms exhaustively, then the counting conditions.

    Returns:
        AxiomViolation or None: The first failure found, or None when the
            structure is a projective plane of its stated order.
    """
    t = plane.order
    through = {p: plane.lines_through(p) for p in plane.points}

    for a, b in combinations(plane.points, 2):
        common = through[a] & through[b]
        if len(common) != 1:
            return AxiomViolation("two points", f"points {a} and {b} lie on {len(common)} common lines")

    for l1, l2 in combinations(plane.lines, 2):
        common = plane.incidence[l1] & plane.incidence[l2]
        if len(common) != 1:
            return AxiomViolation("two lines", f"lines {l1} and {l2} meet in {len(common)} points")

    line_of: Dict[FrozenSet[int], int] = {}
    for l in plane.lines:
        for a, b in combinations(sorted(plane.incidence[l]), 2):
            line_of[frozenset((a, b))] = l

    def collinear(a, b, c):
        l = line_of.get(frozenset((a, b)))
        return l is not None and c in plane.incidence[l]

    quadrangle = next(
        (
            quad
            for quad in combinations(plane.points, 4)
            if not any(collinear(*triple) for triple in combinations(quad, 3))
        ),
        None,
    )
    if quadrangle is None:
        return AxiomViolation("quadrangle", "no four points with no three collinear")

    size = t * t + t + 1
    if len(plane.points) != size or len(plane.lines) != size:
        return AxiomViolation(
            "counts", f"{len(plane.points)} points and {len(plane.lines)} lines, expected {size}"
        )
    for l in plane.lines:
        if len(plane.incidence[l]) != t + 1:
            return AxiomViolation("counts", f"line {l} has {len(plane.incidence[l])} points, expected {t + 1}")
    for p in plane.points:
        if len(through[p]) != t + 1:
            return AxiomViolation("counts", f"point {p} is on {len(through[p])} lines, expected {t + 1}")
    return None
