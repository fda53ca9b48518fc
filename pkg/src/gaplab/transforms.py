"""Label transforms that preserve gap-labelling validity.

Three rank-based relabellings are provided:

* ``distinctify`` makes all labels pairwise distinct while preserving their
  relative order (ties broken by vertex index), via label*2n + rank.
* ``power_two_relabel`` maps the vertex with the i-th smallest label to 2**i,
  capping the largest label at 2**(n-1).
* ``golomb_relabel`` maps the vertex of rank i to the i-th mark of a Golomb
  ruler shifted by 2p**2, capping the largest label at O(n**2).  The shift
  keeps every degree-one colour (a full label, at least 2p**2) above every
  gap colour (a mark difference, at most 2p**2 - p - 1).

All three require a valid input labelling; the ruler and power-of-two maps
additionally require distinct labels (apply ``distinctify`` first).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidLabellingError
from .graph import Graph
from .labelling import Labelling, is_gap_labelling, validate_labelling


@dataclass(frozen=True)
class PrimeWitness:
    """A prime found in [n, 2n]; Bertrand's postulate guarantees existence."""

    p: int
    range_low: int
    range_high: int


@dataclass(frozen=True)
class GolombRuler:
    """Strictly increasing marks with all pairwise differences distinct."""

    marks: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.marks)

    @property
    def length(self) -> int:
        return self.marks[-1] - self.marks[0]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> PrimeWitness:
    """Smallest prime p >= max(n, 2); always lands within [n, 2n] for n >= 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return PrimeWitness(p=p, range_low=n, range_high=2 * n)


def erdos_turan_ruler(p: int) -> GolombRuler:
    """Order-p ruler with marks 2pk + (k^2 mod p); largest mark <= 2p^2 - p - 1."""
    if not is_prime(p):
        raise ValueError(f"ruler construction needs a prime, got {p}")
    return GolombRuler(tuple(2 * p * k + (k * k) % p for k in range(p)))


def is_golomb_ruler(marks) -> bool:
    """Brute-force check that all pairwise differences are distinct."""
    marks = tuple(marks)
    if any(b <= a for a, b in zip(marks, marks[1:])):
        return False
    diffs = [b - a for a, b in combinations(marks, 2)]
    return len(diffs) == len(set(diffs))


def _require_valid(g: Graph, labels) -> Labelling:
    labels = validate_labelling(g, labels)
    ok, report = is_gap_labelling(g, labels)
    if not ok:
        raise InvalidLabellingError(
            f"input is not a valid gap labelling ({report})", report=report
        )
    return labels


def _ranks(labels: Labelling) -> list[int]:
    """Vertices ordered by (label, vertex index); position = rank."""
    return sorted(range(len(labels)), key=lambda v: (labels[v], v))


def distinctify(g: Graph, labels) -> Labelling:
    """Make all labels distinct while keeping the labelling valid.

    The vertex of rank i (stable sort by label, then index) is relabelled
    label*2n + i, which preserves the label order and therefore every gap
    comparison that decides properness.
    """
    labels = _require_valid(g, labels)
    out = [0] * g.n
    for rank, v in enumerate(_ranks(labels)):
        out[v] = labels[v] * 2 * g.n + rank
    return tuple(out)


def _require_distinct(labels: Labelling) -> None:
    if len(set(labels)) != len(labels):
        raise InvalidLabellingError(
            "labels must be pairwise distinct; apply distinctify first"
        )


def power_two_relabel(g: Graph, labels) -> Labelling:
    """Send the vertex with the i-th smallest label to 2**i."""
    labels = _require_valid(g, labels)
    _require_distinct(labels)
    out = [0] * g.n
    for rank, v in enumerate(_ranks(labels)):
        out[v] = 1 << rank
    return tuple(out)


def golomb_relabel(g: Graph, labels) -> Labelling:
    """Send the vertex of rank i to mark a_i + 2p^2, with p = next_prime(n)."""
    labels = _require_valid(g, labels)
    _require_distinct(labels)
    p = next_prime(g.n).p
    marks = erdos_turan_ruler(p).marks
    shift = 2 * p * p
    out = [0] * g.n
    for rank, v in enumerate(_ranks(labels)):
        out[v] = marks[rank] + shift
    return tuple(out)
