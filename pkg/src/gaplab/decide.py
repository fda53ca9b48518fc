"""Complete decision procedure for gap-vertex-labelability.

A graph is labelable iff some bijection from a fixed set of n "marks" to the
vertices induces a proper colouring: any valid labelling can be made
injective and then replaced, rank for rank, by shifted Golomb-ruler marks
without breaking properness, so searching mark bijections is exhaustive.
The marks are the first n Erdos-Turan marks for p = next_prime(n), shifted
by 2p**2 so that degree-one colours (whole labels) can never collide with
gap colours (mark differences).

The search places marks from the outside in (largest, smallest, second
largest, ...).  A vertex's colour is pinned as soon as its known neighbour
extremes can no longer be beaten by the unplaced marks, so dense graphs are
refuted after only a couple of placements.  The first mark is only tried on
one representative per automorphism orbit.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import SearchBudgetExceeded, UnsupportedInputError
from .graph import Graph, graph_from_edges, is_connected
from .labelling import Labelling, is_gap_labelling
from .symmetry import orbit_representatives
from .transforms import erdos_turan_ruler, next_prime


@dataclass(frozen=True)
class DecisionResult:
    labelable: bool
    witness: Labelling | None
    assignments_tried: int


def decision_marks(n: int) -> tuple[int, ...]:
    """The n shifted ruler marks the decision search assigns to vertices."""
    p = next_prime(n).p
    shift = 2 * p * p
    return tuple(m + shift for m in erdos_turan_ruler(p).marks[:n])


class _Searcher:
    """Depth-first mark assignment with early colour pinning.

    One instance accumulates ``tried`` across branches so that budgets span
    the whole decision, not a single first-mark placement.
    """

    def __init__(self, g: Graph, marks: tuple[int, ...], budget: int | None = None):
        self.g = g
        self.n = g.n
        self.adj = g.adjacency
        self.marks = marks  # ascending
        self.budget = budget
        self.tried = 0
        # Placement order: indices into marks, outside-in.
        order = []
        lo, hi = 0, g.n - 1
        while lo <= hi:
            order.append(hi)
            if lo < hi:
                order.append(lo)
            lo += 1
            hi -= 1
        self.mark_order = order

    def run(self, first_vertex: int) -> Labelling | None:
        label: list[int | None] = [None] * self.n
        return self._place(0, first_vertex, label)

    def _place(self, depth: int, vertex: int, label: list[int | None]) -> Labelling | None:
        self.tried += 1
        if self.budget is not None and self.tried > self.budget:
            raise SearchBudgetExceeded(self.tried, self.budget)
        label[vertex] = self.marks[self.mark_order[depth]]
        try:
            if not self._conflict(label, depth + 1):
                if depth + 1 == self.n:
                    return tuple(label)
                for cand in range(self.n):
                    if label[cand] is None:
                        found = self._place(depth + 1, cand, label)
                        if found is not None:
                            return found
            return None
        finally:
            label[vertex] = None

    def _conflict(self, label: list[int | None], placed: int) -> bool:
        """True when two adjacent vertices already have equal pinned colours."""
        hi_placed = (placed + 1) // 2
        lo_placed = placed // 2
        if lo_placed < self.n - hi_placed:
            min_rem = self.marks[lo_placed]
            max_rem = self.marks[self.n - hi_placed - 1]
        else:
            min_rem = max_rem = None  # nothing unplaced
        colour: list[int | None] = [None] * self.n
        for v in range(self.n):
            nbrs = self.adj[v]
            vals = [label[u] for u in nbrs if label[u] is not None]
            if len(vals) == len(nbrs):
                colour[v] = vals[0] if len(nbrs) == 1 else max(vals) - min(vals)
            elif vals and len(nbrs) > 1 and max_rem is not None:
                hi, lo = max(vals), min(vals)
                if hi > max_rem and lo < min_rem:
                    colour[v] = hi - lo
        for u, v in self.g.edges:
            cu, cv = colour[u], colour[v]
            if cu is not None and cu == cv:
                return True
        return False


def _require_searchable(g: Graph) -> None:
    if g.n < 2:
        raise UnsupportedInputError("decision needs at least two vertices")
    if not is_connected(g):
        raise UnsupportedInputError("decision is defined for connected graphs only")


def _branch_task(payload) -> tuple[Labelling | None, int]:
    n, edges, first_vertex = payload
    g = graph_from_edges(n, edges)
    searcher = _Searcher(g, decision_marks(n))
    witness = searcher.run(first_vertex)
    return witness, searcher.tried


def decide(g: Graph, *, budget: int | None = None, workers: int = 1) -> DecisionResult:
    """Decide gap-vertex-labelability; returns a verified witness if one exists.

    ``workers`` > 1 fans the first-mark placements out to separate processes;
    results are consumed in placement order so the outcome (and the counter)
    is identical to a single-threaded run.  A budget forces sequential search
    so the cap applies to the exact same assignment sequence.
    """
    _require_searchable(g)
    reps = orbit_representatives(g)
    marks = decision_marks(g.n)

    if workers > 1 and budget is None and len(reps) > 1:
        payload = [(g.n, tuple(sorted(g.edges)), r) for r in reps]
        tried = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_branch_task, p) for p in payload]
            for fut in futures:
                witness, branch_tried = fut.result()
                tried += branch_tried
                if witness is not None:
                    for other in futures:
                        other.cancel()
                    return DecisionResult(True, witness, tried)
        return DecisionResult(False, None, tried)

    searcher = _Searcher(g, marks, budget=budget)
    for rep in reps:
        witness = searcher.run(rep)
        if witness is not None:
            return DecisionResult(True, witness, searcher.tried)
    return DecisionResult(False, None, searcher.tried)


def vertex_gap_number(g: Graph, k_max: int, *, budget: int | None = None) -> int | None:
    """Least k <= k_max admitting a valid labelling with labels from 1..k.

    Repeated labels are allowed (the least k often needs them).  Returns None
    when every k up to k_max fails; raises SearchBudgetExceeded when the cap
    is hit first, which is a different outcome from "no such k".
    """
    _require_searchable(g)
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    n = g.n
    adj = g.adjacency
    # Colour of v is known once all its neighbours are assigned.
    known_at = [max(adj[v]) for v in range(n)]
    tried = 0

    def search(k: int) -> bool:
        nonlocal tried
        label = [0] * n
        colour: list[int | None] = [None] * n

        def place(v: int) -> bool:
            nonlocal tried
            for lab in range(1, k + 1):
                tried += 1
                if budget is not None and tried > budget:
                    raise SearchBudgetExceeded(tried, budget)
                label[v] = lab
                newly = [w for w in range(n) if known_at[w] == v]
                ok = True
                for w in newly:
                    vals = [label[u] for u in adj[w]]
                    colour[w] = vals[0] if len(vals) == 1 else max(vals) - min(vals)
                for w in newly:
                    if any(colour[x] == colour[w] for x in adj[w] if colour[x] is not None):
                        ok = False
                        break
                if ok and (v + 1 == n or place(v + 1)):
                    return True
                for w in newly:
                    colour[w] = None
            return False

        return place(0)

    for k in range(1, k_max + 1):
        if search(k):
            return k
    return None


def naive_decide(g: Graph) -> DecisionResult:
    """Reference decision by plain enumeration of all mark bijections.

    No pruning and no symmetry reduction; exists as an independent oracle
    for the optimised search and is only practical for very small graphs.
    """
    from itertools import permutations

    _require_searchable(g)
    marks = decision_marks(g.n)
    tried = 0
    for perm in permutations(marks):
        tried += 1
        ok, _ = is_gap_labelling(g, perm)
        if ok:
            return DecisionResult(True, tuple(perm), tried)
    return DecisionResult(False, None, tried)
