"""Cover moves: the placements lying directly below a given one.

Each move takes a placement D to a placement strictly below it in the
dominance order, and the union of all families yields exactly the
lower covers of D (the edges entering D in the Hasse diagram).  There
are two move catalogues: one for the full family of placements and one
for orthogonal placements, whose poset is not an induced subposet so
its moves differ.

Throughout, R_k is the set of roots of D in row k and C_k the set in
column k.  A move never touches the board size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import OrthogonalityError
from .order import minimal_roots, root_leq
from .placements import Root, RookPlacement, roots_to_text

MoveKind = Literal[
    "remove",
    "slide_right",
    "slide_up",
    "cross_general",
    "cross_orthogonal",
    "split_general",
    "split_orthogonal",
]


@dataclass(frozen=True)
class CoverMove:
    """One application of a move family: result = (D - source) + target."""

    kind: str
    source: tuple[Root, ...]
    target: tuple[Root, ...]
    result: RookPlacement

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "source": roots_to_text(self.source),
            "target": roots_to_text(self.target),
            "result": self.result.to_text(),
        }


def _below(a: Root, b: Root) -> bool:
    # strict root order
    return a != b and root_leq(a, b)


def _move(
    kind: str, d: RookPlacement, source: tuple[Root, ...], target: tuple[Root, ...]
) -> CoverMove:
    result = d.replace(remove=source, add=target)
    return CoverMove(kind, tuple(sorted(source)), tuple(sorted(target)), result)


def _require_orthogonal(d: RookPlacement) -> None:
    if not d.is_orthogonal():
        raise OrthogonalityError(
            f"placement {d.to_text()!r} is not orthogonal"
        )


def removal_candidates_general(d: RookPlacement) -> frozenset[Root]:
    """Minimal roots (i, j) whose removal is a cover: every index strictly
    between j and i must be both a row and a column of D."""
    rows, cols = d.rows, d.cols
    return frozenset(
        r
        for r in minimal_roots(d)
        if all(k in rows and k in cols for k in range(r.col + 1, r.row))
    )


def removal_candidates_orthogonal(d: RookPlacement) -> frozenset[Root]:
    """Orthogonal analogue: every index strictly between j and i must be
    a row or a column of D."""
    _require_orthogonal(d)
    used = d.rows | d.cols
    return frozenset(
        r
        for r in minimal_roots(d)
        if all(k in used for k in range(r.col + 1, r.row))
    )


def _removal_moves(d: RookPlacement, candidates: frozenset[Root]) -> list[CoverMove]:
    return [_move("remove", d, (r,), ()) for r in sorted(candidates)]


def _slide_right(d: RookPlacement, orthogonal: bool) -> list[CoverMove]:
    rows, cols = d.rows, d.cols
    blocked = (rows | cols) if orthogonal else cols
    moves = []
    for r in d.roots:
        i, j = r.row, r.col
        free = [k for k in range(j + 1, i) if k not in blocked]
        if not free:
            continue
        m = free[0]
        if not orthogonal and any(k not in rows for k in range(j + 1, m + 1)):
            continue
        new = Root(i, m)
        if any(_below(p, r) and not _below(p, new) for p in d.roots):
            continue
        moves.append(_move("slide_right", d, (r,), (new,)))
    return moves


def _slide_up(d: RookPlacement, orthogonal: bool) -> list[CoverMove]:
    rows, cols = d.rows, d.cols
    blocked = (rows | cols) if orthogonal else rows
    moves = []
    for r in d.roots:
        i, j = r.row, r.col
        free = [k for k in range(j + 1, i) if k not in blocked]
        if not free:
            continue
        m = free[-1]
        # The column condition starts at m itself, mirroring the row
        # condition of the rightward slide under board transposition.
        if not orthogonal and any(k not in cols for k in range(m, i)):
            continue
        new = Root(m, j)
        if any(_below(p, r) and not _below(p, new) for p in d.roots):
            continue
        moves.append(_move("slide_up", d, (r,), (new,)))
    return moves


def slide_right_general(d: RookPlacement) -> list[CoverMove]:
    """Move a root (i, j) to (i, m) where m is the first free column
    strictly between j and i.  Requires rows j+1..m of D occupied and no
    root of D strictly below (i, j) but not strictly below (i, m)."""
    return _slide_right(d, orthogonal=False)


def slide_up_general(d: RookPlacement) -> list[CoverMove]:
    """Move a root (i, j) to (m, j) where m is the last free row strictly
    between j and i.  Requires columns m..i-1 of D occupied and no root
    of D strictly below (i, j) but not strictly below (m, j)."""
    return _slide_up(d, orthogonal=False)


def slide_right_orthogonal(d: RookPlacement) -> list[CoverMove]:
    """Orthogonal rightward slide: m is the first index strictly between
    j and i that is neither a row nor a column of D."""
    _require_orthogonal(d)
    return _slide_right(d, orthogonal=True)


def slide_up_orthogonal(d: RookPlacement) -> list[CoverMove]:
    """Orthogonal upward slide: m is the last index strictly between
    j and i that is neither a row nor a column of D."""
    _require_orthogonal(d)
    return _slide_up(d, orthogonal=True)


def cross_moves_general(d: RookPlacement) -> list[CoverMove]:
    """For nested roots (i, j) < (a, b) of D with no root of D strictly
    between them, trade the pair for (i, b) and (a, j)."""
    moves = []
    for low in d.roots:
        for high in d.roots:
            if not _below(low, high):
                continue
            if any(_below(low, p) and _below(p, high) for p in d.roots):
                continue
            target = (Root(low.row, high.col), Root(high.row, low.col))
            moves.append(_move("cross_general", d, (low, high), target))
    return moves


def split_moves_general(d: RookPlacement) -> list[CoverMove]:
    """Split a root (i, j) into (i, b) and (a, j) for indices j < a <= b < i.

    Requires row a and column b of D free; every index strictly between
    a and b both a row and a column of D; when a != b, additionally row b
    and column a of D occupied; and every root of D strictly below (i, j)
    but not strictly below (a, j) must lie strictly below (i, b).
    """
    rows, cols = d.rows, d.cols
    moves = []
    for r in d.roots:
        i, j = r.row, r.col
        for a in range(j + 1, i):
            if a in rows:
                continue
            for b in range(a, i):
                if b in cols:
                    continue
                if any(k not in rows or k not in cols for k in range(a + 1, b)):
                    continue
                if a != b and (b not in rows or a not in cols):
                    continue
                upper, lower = Root(i, b), Root(a, j)
                if any(
                    _below(p, r) and not _below(p, lower) and not _below(p, upper)
                    for p in d.roots
                ):
                    continue
                moves.append(_move("split_general", d, (r,), (upper, lower)))
    return moves


def cross_moves_orthogonal(d: RookPlacement) -> list[CoverMove]:
    """For roots (i, j) and (a, b) of D interleaved as j < b < i < a,
    trade the pair for (b, j) and (a, i).

    Requires every index strictly between b and i to be a row or a
    column of D, and no root of D strictly below (i, j) but not strictly
    below (b, j), nor strictly below (a, b) but not strictly below (a, i).
    """
    _require_orthogonal(d)
    used = d.rows | d.cols
    moves = []
    for outer in d.roots:
        i, j = outer.row, outer.col
        for inner in d.roots:
            a, b = inner.row, inner.col
            if not (j < b < i < a):
                continue
            if any(k not in used for k in range(b + 1, i)):
                continue
            low, high = Root(b, j), Root(a, i)
            if any(
                (_below(p, outer) and not _below(p, low))
                or (_below(p, inner) and not _below(p, high))
                for p in d.roots
            ):
                continue
            moves.append(_move("cross_orthogonal", d, (outer, inner), (low, high)))
    return moves


def split_moves_orthogonal(d: RookPlacement) -> list[CoverMove]:
    """Split a root (i, j) into (i, b) and (a, j) for indices j < a < b < i.

    Requires indices a and b to be neither rows nor columns of D; every
    index strictly between a and b a row or a column of D; and every root
    of D strictly below (i, j) but not strictly below (a, j) must lie
    strictly below (i, b).
    """
    _require_orthogonal(d)
    used = d.rows | d.cols
    moves = []
    for r in d.roots:
        i, j = r.row, r.col
        for a in range(j + 1, i):
            if a in used:
                continue
            for b in range(a + 1, i):
                if b in used:
                    continue
                if any(k not in used for k in range(a + 1, b)):
                    continue
                upper, lower = Root(i, b), Root(a, j)
                if any(
                    _below(p, r) and not _below(p, lower) and not _below(p, upper)
                    for p in d.roots
                ):
                    continue
                moves.append(_move("split_orthogonal", d, (r,), (upper, lower)))
    return moves


def moves_general(d: RookPlacement) -> list[CoverMove]:
    """All cover moves of a placement, in family order."""
    return (
        _removal_moves(d, removal_candidates_general(d))
        + slide_right_general(d)
        + slide_up_general(d)
        + cross_moves_general(d)
        + split_moves_general(d)
    )


def moves_orthogonal(d: RookPlacement) -> list[CoverMove]:
    """All cover moves of an orthogonal placement, in family order.

    The nested-cross family is the general one: on orthogonal input it
    stays inside the orthogonal family because it only re-pairs the four
    endpoint indices.  Each result is checked and a violation raises,
    since silently dropping one would hide a real bug.
    """
    _require_orthogonal(d)
    moves = (
        _removal_moves(d, removal_candidates_orthogonal(d))
        + slide_right_orthogonal(d)
        + slide_up_orthogonal(d)
        + cross_moves_general(d)
        + cross_moves_orthogonal(d)
        + split_moves_orthogonal(d)
    )
    for m in moves:
        if not m.result.is_orthogonal():
            raise OrthogonalityError(
                f"{m.kind} on {d.to_text()!r} left the orthogonal family: "
                f"{m.result.to_text()!r}"
            )
    return moves


def predecessors_general(d: RookPlacement) -> set[RookPlacement]:
    """Distinct results of all general cover moves."""
    return {m.result for m in moves_general(d)}


def predecessors_orthogonal(d: RookPlacement) -> set[RookPlacement]:
    """Distinct results of all orthogonal cover moves."""
    return {m.result for m in moves_orthogonal(d)}
