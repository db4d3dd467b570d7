"""Exact minimal-label-count search on small rectangular patches.

Complete and deterministic: iterative deepening over the candidate label
count, where each feasibility probe runs a depth-first assignment in
row-major vertex order, pruning any partial assignment that violates the
separation requirement against an already-labeled vertex. The search is
independent of the modular schemes, so it serves as ground truth for
them on desk-scale instances (at most 64 vertices).

A single search is sequential; independent probes may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

MAX_VERTICES = 64
DEFAULT_NODE_BUDGET = 10_000_000


class InvalidPatch(ValueError):
    pass


@dataclass(frozen=True)
class Patch:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidPatch(
                f"patch needs positive dimensions, got {self.rows}x{self.cols}"
            )

    @property
    def n_vertices(self) -> int:
        return self.rows * self.cols

    def vertices(self) -> list[tuple[int, int]]:
        """Row-major order: y ascending, x ascending within each row."""
        return [(x, y) for y in range(self.rows) for x in range(self.cols)]


@dataclass(frozen=True)
class PatchSearchResult:
    minimal_lambda: int
    certificate: dict[tuple[int, int], int]
    nodes_explored: int
    exhausted: bool  # True iff optimality was proven within budget


@dataclass(frozen=True)
class SpanBoundsComparison:
    patch_lambda: int
    global_ub: Optional[int]
    consistent: Optional[bool]


def _gap_constraints(patch: Patch, k: int) -> list[list[tuple[int, int]]]:
    # For vertex i: every earlier j within distance k, with the required gap.
    verts = patch.vertices()
    cons: list[list[tuple[int, int]]] = []
    for i, (xi, yi) in enumerate(verts):
        row = []
        for j in range(i):
            xj, yj = verts[j]
            d = abs(xi - xj) + abs(yi - yj)
            if d <= k:
                row.append((j, k + 1 - d))
        cons.append(row)
    return cons


def clique_lower_bound(patch: Patch, k: int) -> int:
    """Size of the largest in-patch ball of radius floor(k/2).

    Such a ball is pairwise within distance k, so all its vertices need
    distinct labels; its size is a valid starting point for iterative
    deepening.
    """
    m = k // 2
    cells = patch.vertices()
    best = 1
    for cx, cy in cells:
        size = sum(1 for x, y in cells if abs(x - cx) + abs(y - cy) <= m)
        if size > best:
            best = size
    return best


def greedy_certificate(patch: Patch, k: int) -> dict[tuple[int, int], int]:
    """First-fit row-major labeling; always feasible, usually not minimal."""
    cons = _gap_constraints(patch, k)
    labels: list[int] = []
    for i in range(patch.n_vertices):
        lab = 0
        while any(abs(lab - labels[j]) < gap for j, gap in cons[i]):
            lab += 1
        labels.append(lab)
    verts = patch.vertices()
    return {verts[i]: labels[i] for i in range(len(verts))}


def probe_feasible(patch: Patch, k: int, lam: int,
                   node_budget: int = DEFAULT_NODE_BUDGET):
    """Decide whether the patch admits a labeling from {0, ..., lam-1}.

    Returns (feasible, certificate, nodes): feasible is True or False, or
    None when the budget ran out before the tree was exhausted. Labels
    are tried in ascending order. The first vertex is capped at
    (lam-1)//2; this is sound because reflecting every label through
    lam-1 maps valid labelings to valid labelings, so any feasible
    instance has a solution in the restricted space. A node is one
    candidate label considered at one vertex.
    """
    if lam < 1:
        return False, None, 0
    cons = _gap_constraints(patch, k)
    n = patch.n_vertices
    labels = [-1] * n
    next_try = [0] * n
    limits = [lam - 1] * n
    limits[0] = (lam - 1) // 2
    nodes = 0
    i = 0
    while True:
        placed = False
        lab = next_try[i]
        limit = limits[i]
        while lab <= limit:
            nodes += 1
            if nodes > node_budget:
                return None, None, nodes
            ok = True
            for j, gap in cons[i]:
                if abs(lab - labels[j]) < gap:
                    ok = False
                    break
            if ok:
                placed = True
                break
            lab += 1
        if placed:
            labels[i] = lab
            next_try[i] = lab + 1
            i += 1
            if i == n:
                verts = patch.vertices()
                return True, {verts[t]: labels[t] for t in range(n)}, nodes
            next_try[i] = 0
        else:
            next_try[i] = 0
            i -= 1
            if i < 0:
                return False, None, nodes
            labels[i] = -1


def exact_span(patch: Patch, k: int,
               node_budget: int = DEFAULT_NODE_BUDGET) -> PatchSearchResult:
    """Smallest feasible label count for the patch, with a certificate.

    Iterative deepening upward from the in-patch clique bound. Every
    probe below the answer exhausts its tree, so exhausted=True means
    optimality is proven. If the node budget runs out first, the result
    falls back to the best known feasible count (greedy first-fit) with
    exhausted=False; its certificate is still valid.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if node_budget < 1:
        raise ValueError("node budget must be positive")
    if patch.n_vertices > MAX_VERTICES:
        raise InvalidPatch(
            f"patch has {patch.n_vertices} vertices; exact search is limited "
            f"to {MAX_VERTICES}"
        )
    greedy = greedy_certificate(patch, k)
    greedy_lam = max(greedy.values()) + 1
    lam = clique_lower_bound(patch, k)
    nodes_total = 0
    while lam < greedy_lam:
        feasible, cert, used = probe_feasible(patch, k, lam,
                                              node_budget - nodes_total)
        nodes_total += used
        if feasible is None:
            return PatchSearchResult(greedy_lam, greedy, nodes_total, False)
        if feasible:
            return PatchSearchResult(lam, cert, nodes_total, True)
        lam += 1
    # Everything below the greedy count is proven infeasible.
    return PatchSearchResult(greedy_lam, greedy, nodes_total, True)


def patch_span_vs_bounds(patch: Patch, k: int,
                         node_budget: int = DEFAULT_NODE_BUDGET) -> SpanBoundsComparison:
    """Exact patch result against the infinite-grid scheme size.

    consistent is True/False only when the search proved optimality and a
    scheme exists for k (a finite patch never needs more labels than the
    whole grid uses); otherwise None.
    """
    from .scheme import UnsupportedK, lambda_ub

    result = exact_span(patch, k, node_budget)
    try:
        ub: Optional[int] = lambda_ub(k)
    except UnsupportedK:
        ub = None
    consistent = None
    if result.exhausted and ub is not None:
        consistent = result.minimal_lambda <= ub
    return SpanBoundsComparison(result.minimal_lambda, ub, consistent)
