"""Materialized posets of placements: Hasse diagrams, gradedness, export.

build_poset computes the full order relation of R(n) or I(n) from the
counting matrices alone, so everything here is independent of the move
generators in covers.py and can serve as an oracle for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import RookError
from .kerov import rank_general, rank_orthogonal
from .placements import DEFAULT_CAP, Kind, RookPlacement, enumerate_placements
from .order import rank_matrix


class Poset:
    """A finite poset of placements with its Hasse diagram.

    `leq` is the full boolean order relation over `elements`; the cover
    relation is its transitive reduction, also kept as a matrix, and
    `hasse` lists the cover edges as (lower_index, upper_index) pairs.
    """

    def __init__(
        self,
        n: int,
        kind: Kind,
        elements: tuple[RookPlacement, ...],
        leq: np.ndarray,
    ) -> None:
        m = len(elements)
        leq = np.ascontiguousarray(np.asarray(leq, dtype=bool))
        if leq.shape != (m, m):
            raise RookError(f"leq must be {m}x{m}, got {leq.shape}")
        eye = np.eye(m, dtype=bool)
        if not leq.diagonal().all():
            raise RookError("order relation is not reflexive")
        if ((leq & leq.T) != eye).any():
            raise RookError("order relation is not antisymmetric")
        self.n = n
        self.kind: Kind = kind
        self.elements = tuple(elements)
        self.leq = leq
        strict = leq & ~eye
        # Transitive reduction: drop an edge when a two-step path exists.
        f = strict.astype(np.float32)
        self.cover_matrix = strict & ~((f @ f) > 0.5)
        self.hasse: tuple[tuple[int, int], ...] = tuple(
            sorted((int(a), int(b)) for a, b in zip(*np.nonzero(self.cover_matrix)))
        )
        self._index = {e: k for k, e in enumerate(self.elements)}
        self.leq.setflags(write=False)
        self.cover_matrix.setflags(write=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, placement: RookPlacement) -> int:
        try:
            return self._index[placement]
        except KeyError:
            raise RookError(
                f"placement {placement.to_text()!r} (n={placement.n}) is not "
                f"an element of this poset"
            ) from None

    def leq_elements(self, a: RookPlacement, b: RookPlacement) -> bool:
        return bool(self.leq[self.index_of(a), self.index_of(b)])


def build_poset(n: int, kind: Kind = "general", cap: int = DEFAULT_CAP) -> Poset:
    """Enumerate all placements of the given kind and materialize their order."""
    elements = enumerate_placements(n, kind, cap=cap)
    m = len(elements)
    mats = np.array(
        [rank_matrix(e).entries for e in elements], dtype=np.int64
    ).reshape(m, -1)
    leq = np.empty((m, m), dtype=bool)
    for a in range(m):
        leq[a] = (mats[a] <= mats).all(axis=1)
    return Poset(n, kind, elements, leq)


def brute_force_covers(poset: Poset, placement: RookPlacement) -> set[RookPlacement]:
    """Lower covers of an element, read off the materialized relation only."""
    idx = poset.index_of(placement)
    return {poset.elements[t] for t in np.nonzero(poset.cover_matrix[:, idx])[0]}


@dataclass
class GradedReport:
    """Outcome of check_graded.

    When the poset is graded, rank_of maps every element to its Hasse
    distance from the minimum and rank_formula_ok records whether that
    distance agrees with the closed-form rank everywhere.  On failure,
    witness describes the problem and witness_chains, when applicable,
    holds two maximal chains of different lengths.
    """

    is_graded: bool
    min_element: RookPlacement | None
    max_element: RookPlacement | None
    rank_of: dict[RookPlacement, int]
    max_chain_length: int | None
    witness: str | None
    witness_chains: (
        tuple[tuple[RookPlacement, ...], tuple[RookPlacement, ...]] | None
    )
    rank_formula_ok: bool | None


def _formula_rank(poset: Poset, e: RookPlacement) -> int:
    if poset.kind == "orthogonal":
        return rank_orthogonal(e)
    if poset.n < 2:
        return 0
    return rank_general(e)


def check_graded(poset: Poset) -> GradedReport:
    """Decide gradedness: unique extrema and, for every element, equal
    longest and shortest Hasse paths from the minimum (which then is its
    rank).  On success the ranks are cross-checked against the closed
    formulas; on failure a witness is produced.
    """
    m = len(poset)
    strict = poset.leq & ~np.eye(m, dtype=bool)
    minimal = [i for i in range(m) if not strict[:, i].any()]
    maximal = [i for i in range(m) if not strict[i, :].any()]
    if len(minimal) != 1 or len(maximal) != 1:
        which = "minimal" if len(minimal) != 1 else "maximal"
        offenders = minimal if len(minimal) != 1 else maximal
        return GradedReport(
            is_graded=False,
            min_element=poset.elements[minimal[0]] if len(minimal) == 1 else None,
            max_element=poset.elements[maximal[0]] if len(maximal) == 1 else None,
            rank_of={},
            max_chain_length=None,
            witness=(
                f"expected exactly one {which} element, found "
                f"{[poset.elements[i].to_text() for i in offenders]}"
            ),
            witness_chains=None,
            rank_formula_ok=None,
        )
    bottom, top = minimal[0], maximal[0]

    out_edges: list[list[int]] = [[] for _ in range(m)]
    indegree = [0] * m
    for a, b in poset.hasse:
        out_edges[a].append(b)
        indegree[b] += 1
    longest = [-1] * m
    shortest = [m + 1] * m
    long_parent = [-1] * m
    short_parent = [-1] * m
    longest[bottom] = shortest[bottom] = 0
    queue = [i for i in range(m) if indegree[i] == 0]
    order = []
    while queue:
        x = queue.pop()
        order.append(x)
        for y in out_edges[x]:
            if longest[x] + 1 > longest[y]:
                longest[y] = longest[x] + 1
                long_parent[y] = x
            if shortest[x] + 1 < shortest[y]:
                shortest[y] = shortest[x] + 1
                short_parent[y] = x
            indegree[y] -= 1
            if indegree[y] == 0:
                queue.append(y)

    uneven = [x for x in range(m) if longest[x] != shortest[x]]
    if uneven:
        x = uneven[0]
        tail: list[int] = []
        y = x
        while out_edges[y]:
            y = out_edges[y][0]
            tail.append(y)

        def _chain(parent: list[int]) -> tuple[RookPlacement, ...]:
            path = [x]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            return tuple(poset.elements[i] for i in path + tail)

        chain_long, chain_short = _chain(long_parent), _chain(short_parent)
        return GradedReport(
            is_graded=False,
            min_element=poset.elements[bottom],
            max_element=poset.elements[top],
            rank_of={},
            max_chain_length=None,
            witness=(
                f"maximal chains of lengths {len(chain_long) - 1} and "
                f"{len(chain_short) - 1} both end at "
                f"{poset.elements[top].to_text()!r}"
            ),
            witness_chains=(chain_long, chain_short),
            rank_formula_ok=None,
        )

    rank_of = {poset.elements[i]: longest[i] for i in range(m)}
    formula_ok = all(
        rank_of[e] == _formula_rank(poset, e) for e in poset.elements
    )
    return GradedReport(
        is_graded=True,
        min_element=poset.elements[bottom],
        max_element=poset.elements[top],
        rank_of=rank_of,
        max_chain_length=longest[top],
        witness=None,
        witness_chains=None,
        rank_formula_ok=formula_ok,
    )


def iter_maximal_chains(poset: Poset) -> Iterator[tuple[int, ...]]:
    """Every maximal chain as a tuple of element indices, bottom to top.

    Exponentially many in general; meant for small boards, where it
    serves as a second, slower gradedness oracle.
    """
    m = len(poset)
    strict = poset.leq & ~np.eye(m, dtype=bool)
    out_edges = [[] for _ in range(m)]
    for a, b in poset.hasse:
        out_edges[a].append(b)
    minimal = [i for i in range(m) if not strict[:, i].any()]

    def rec(path: list[int]) -> Iterator[tuple[int, ...]]:
        succ = out_edges[path[-1]]
        if not succ:
            yield tuple(path)
            return
        for y in succ:
            path.append(y)
            yield from rec(path)
            path.pop()

    for start in minimal:
        yield from rec([start])


def _ranks_by_formula(poset: Poset) -> list[int]:
    return [_formula_rank(poset, e) for e in poset.elements]


def export_dot(poset: Poset, include_ranks: bool = False) -> str:
    """Render the Hasse diagram as a DOT digraph, edges oriented upward.

    Node labels are the placement strings.  With include_ranks, each
    node also carries a rank attribute and same-rank elements are tied
    into one layer.
    """
    lines = [f'digraph "{poset.kind}_{poset.n}" {{', "  rankdir=BT;"]
    ranks = _ranks_by_formula(poset) if include_ranks else None
    for i, e in enumerate(poset.elements):
        if ranks is None:
            lines.append(f'  {i} [label="{e.to_text()}"];')
        else:
            lines.append(f'  {i} [label="{e.to_text()}", rank={ranks[i]}];')
    if ranks is not None:
        for level in range(max(ranks) + 1):
            same = [str(i) for i, r in enumerate(ranks) if r == level]
            if same:
                lines.append("  { rank=same; " + "; ".join(same) + "; }")
    for a, b in poset.hasse:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(poset: Poset) -> dict:
    """JSON-ready dump: elements in canonical order, Hasse edges by index,
    and the closed-form rank of every element."""
    return {
        "n": poset.n,
        "kind": poset.kind,
        "elements": [[[r.row, r.col] for r in e.roots] for e in poset.elements],
        "hasse": [list(edge) for edge in poset.hasse],
        "ranks": _ranks_by_formula(poset),
    }
