"""Uncondensed virtual curve diagrams.

A diagram on ``n`` curves is stored as the upper line (points numbered
1..u from left to right) and, for each curve, the sequence of upper
positions it visits after leaving its base point.  Arc ``k`` of a curve
joins its ``k-1``-th and ``k``-th upper points; arc 0 is the base arc and
the remaining arcs alternate over (odd ``k``) and under (even ``k``).

Geometry is purely positional: over arcs are chords above the line and
may not interleave, under arcs are chords below it, and base arcs rise
from base points 1..n (ordered left to right) to the line.
"""

from __future__ import annotations

import dataclasses
import random
import re
from typing import Iterator, Optional

BASE, OVER, UNDER = "base", "over", "under"
LEFT, RIGHT = "left", "right"
T_MOVE, B_MOVE = "T", "B"


class DiagramError(ValueError):
    pass


def arc_kind(position: int) -> str:
    if position == 0:
        return BASE
    return OVER if position % 2 else UNDER


@dataclasses.dataclass(frozen=True)
class Arc:
    curve: int  # 0-based curve index
    position: int  # index along the curve, 0 = base arc

    @property
    def kind(self) -> str:
        return arc_kind(self.position)


@dataclasses.dataclass(frozen=True)
class Move:
    kind: str  # T_MOVE or B_MOVE
    arc: Arc


@dataclasses.dataclass(frozen=True)
class Vcd:
    n: int
    u: int
    curves: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(tuple(c) for c in self.curves))

    def __str__(self):
        return canonical_text(self)

    # -- lookups -------------------------------------------------------

    def point_index(self) -> dict[int, tuple[int, int]]:
        """Map upper position -> (curve, index along the curve's upper part)."""
        return {p: (j, k) for j, c in enumerate(self.curves)
                for k, p in enumerate(c)}

    def arcs(self) -> Iterator[Arc]:
        for j, c in enumerate(self.curves):
            for k in range(len(c)):
                yield Arc(j, k)

    def endpoints(self, x: Arc) -> tuple[Optional[int], int]:
        """Endpoints in curve order; the base arc's first end is ``None``."""
        c = self.curves[x.curve]
        if x.position == 0:
            return None, c[0]
        return c[x.position - 1], c[x.position]

    def span(self, x: Arc) -> tuple[int, int]:
        a, b = self.endpoints(x)
        if a is None:
            raise DiagramError("base arcs have no upper span")
        return (a, b) if a < b else (b, a)

    def terminals(self) -> list[tuple[int, int]]:
        """``(position, curve)`` of terminal points, left to right."""
        return sorted((c[-1], j) for j, c in enumerate(self.curves))

    def nonterminal_count(self) -> int:
        return self.u - self.n

    def over_arc_count(self) -> int:
        return sum(len(c) // 2 for c in self.curves)


def trivial_diagram(n: int) -> Vcd:
    if n < 1:
        raise DiagramError("need at least one curve")
    return Vcd(n, n, tuple((j + 1,) for j in range(n)))


# -- text format ---------------------------------------------------------

def canonical_text(d: Vcd) -> str:
    parts = [f"vcd n={d.n} u={d.u}"]
    for j, c in enumerate(d.curves):
        parts.append(f"c{j + 1}: " + " ".join(map(str, c)))
    return " / ".join(parts)


_HEAD = re.compile(r"vcd n=(\d+) u=(\d+)\Z")
_CURVE = re.compile(r"c(\d+):((?: \d+)*)\Z")


def parse_vcd(text: str) -> Vcd:
    chunks = [s.strip() for s in text.strip().split(" / ")]
    m = _HEAD.match(chunks[0])
    if m is None:
        raise DiagramError(f"bad header {chunks[0]!r}")
    n, u = int(m.group(1)), int(m.group(2))
    if len(chunks) != n + 1:
        raise DiagramError(f"expected {n} curves, got {len(chunks) - 1}")
    curves = []
    for j, chunk in enumerate(chunks[1:], start=1):
        cm = _CURVE.match(chunk)
        if cm is None or int(cm.group(1)) != j:
            raise DiagramError(f"bad curve entry {chunk!r}")
        curves.append(tuple(int(p) for p in cm.group(2).split()))
    return Vcd(n, u, tuple(curves))


# -- validation ------------------------------------------------------------

def _interleave(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def validate(d: Vcd) -> list[str]:
    problems = []
    if len(d.curves) != d.n:
        problems.append(f"curve count {len(d.curves)} != n={d.n}")
    seen: dict[int, int] = {}
    for j, c in enumerate(d.curves):
        if not c:
            problems.append(f"degree violation: curve {j + 1} has no upper point")
        for p in c:
            if not 1 <= p <= d.u:
                problems.append(f"curve {j + 1}: position {p} outside 1..{d.u}")
            elif p in seen:
                problems.append(f"degree violation: position {p} visited twice")
            seen[p] = j
    missing = set(range(1, d.u + 1)) - set(seen)
    if missing:
        problems.append(f"degree violation: positions {sorted(missing)} unused")
    if problems:
        return problems
    spans = [d.span(x) for x in d.arcs() if x.kind == OVER]
    spans.sort()
    # Non-interleaving chords form a laminar family; check with a stack.
    stack: list[int] = []
    for lo, hi in spans:
        while stack and stack[-1] < lo:
            stack.pop()
        if stack and hi > stack[-1]:
            problems.append(f"over-arc crossing violation at span ({lo}, {hi})")
            break
        stack.append(hi)
    return problems


# -- crossing structure ----------------------------------------------------

def _require_not_over(x: Arc):
    if x.kind == OVER:
        raise DiagramError("over arcs never cross; predicate undefined")


def arcs_cross(d: Vcd, x: Arc, y: Arc) -> bool:
    _require_not_over(x)
    _require_not_over(y)
    if x == y:
        return False
    if x.kind == UNDER and y.kind == UNDER:
        return _interleave(d.span(x), d.span(y))
    if x.kind == BASE and y.kind == BASE:
        tx, ty = d.curves[x.curve][0], d.curves[y.curve][0]
        return (x.curve < y.curve) != (tx < ty)
    under, base = (x, y) if x.kind == UNDER else (y, x)
    lo, hi = d.span(under)
    return lo < d.curves[base.curve][0] < hi


def encloses(d: Vcd, x: Arc, p: int) -> bool:
    if x.kind == BASE:
        raise DiagramError("base arcs do not span the upper line")
    lo, hi = d.span(x)
    return lo < p < hi


def is_free(d: Vcd, x: Arc) -> bool:
    _require_not_over(x)
    others = [y for y in d.arcs() if y.kind != OVER and y != x]
    if any(arcs_cross(d, x, y) for y in others):
        return False
    if x.kind == BASE:
        return True
    lo, hi = d.span(x)
    inside = [y for y in others if y.kind == UNDER
              and lo < d.span(y)[0] and d.span(y)[1] < hi]
    spans = [d.span(y) for y in inside]
    return not any(_interleave(a, b) for k, a in enumerate(spans)
                   for b in spans[k + 1:])


def veering(d: Vcd, p: int) -> Optional[str]:
    j, k = d.point_index()[p]
    c = d.curves[j]
    # The over arc at p is the odd-indexed one among arcs k and k+1.
    if k % 2 == 0:
        if k + 1 >= len(c):
            return None
        other = c[k + 1]
    else:
        other = c[k - 1]
    return RIGHT if other > p else LEFT


def _veer_map(d: Vcd) -> dict[int, str]:
    out = {}
    for j, c in enumerate(d.curves):
        for k in range(1, len(c), 2):
            a, b = c[k - 1], c[k]
            out[a] = RIGHT if b > a else LEFT
            out[b] = RIGHT if a > b else LEFT
    return out


def center_gap(d: Vcd, i: int, veer: Optional[dict] = None) -> int:
    """Gap (insert after this position) between the centers of interval ``i``.

    Interval ``i`` is ``[t_i, t_{i+1}]`` for 1 <= i < n; ``i = 0`` and
    ``i = n`` use virtual bounds before and after every upper point.
    """
    if veer is None:
        veer = _veer_map(d)
    terms = [p for p, _ in d.terminals()]
    lo = terms[i - 1] if i >= 1 else 0
    hi = terms[i] if i < d.n else d.u + 1
    gap = lo
    for q in range(lo + 1, hi):
        if veer.get(q) == LEFT:
            gap = q
    return gap


def centers(d: Vcd, i: int, check: bool = True) -> tuple[Optional[int], Optional[int]]:
    """Center points ``(u_i, v_i)``; ``None`` marks a virtual bound."""
    if not 0 <= i <= d.n:
        raise DiagramError(f"interval index {i} outside 0..{d.n}")
    if check and find_simplifying_move(d) is not None:
        raise DiagramError("centers are defined for simplified diagrams only")
    g = center_gap(d, i)
    u = g if g >= 1 else None
    v = g + 1 if g + 1 <= d.u else None
    return u, v


# -- moves -----------------------------------------------------------------

def simplifying_moves(d: Vcd) -> list[Move]:
    moves = []
    for j, c in enumerate(d.curves):
        for k in range(1, len(c)):
            if abs(c[k] - c[k - 1]) == 1:
                kind = T_MOVE if k == len(c) - 1 else B_MOVE
                moves.append(Move(kind, Arc(j, k)))
    return moves


def find_simplifying_move(d: Vcd) -> Optional[Move]:
    moves = simplifying_moves(d)
    return moves[0] if moves else None


def is_simplified(d: Vcd) -> bool:
    return find_simplifying_move(d) is None


def apply_move(d: Vcd, m: Move) -> Vcd:
    j, k = m.arc.curve, m.arc.position
    c = d.curves[j]
    if k < 1 or k >= len(c) or abs(c[k] - c[k - 1]) != 1:
        raise DiagramError(f"{m} is not a simplifying move")
    terminal = k == len(c) - 1
    if terminal != (m.kind == T_MOVE):
        raise DiagramError(f"{m}: move type does not match terminality")
    if m.kind == T_MOVE:
        deleted = {c[k]}
        new_c = c[:k]
    else:
        deleted = {c[k - 1], c[k]}
        new_c = c[:k - 1] + c[k + 1:]
    curves = list(d.curves)
    curves[j] = new_c
    return _renumber(d.n, d.u, curves, deleted)


def _renumber(n: int, u: int, curves, deleted: set[int]) -> Vcd:
    shift, new = 0, {}
    for p in range(1, u + 1):
        if p in deleted:
            shift += 1
        else:
            new[p] = p - shift
    return Vcd(n, u - len(deleted), tuple(tuple(new[p] for p in c) for c in curves))


class _Work:
    """Mutable diagram with linked upper line and linked curves.

    Point ids are arbitrary hashables.  ``par[p]`` is the parity of p's
    index along its curve, which T and B moves never change.
    """

    def __init__(self, n: int, order, curves):
        self.n = n
        self.left: dict = {}
        self.right: dict = {}
        prev = None
        for p in order:
            self.left[p] = prev
            if prev is not None:
                self.right[prev] = p
            prev = p
        if prev is not None:
            self.right[prev] = None
        self.head = order[0] if order else None
        self.cprev: dict = {}
        self.cnext: dict = {}
        self.par: dict = {}
        self.first: list = []
        self.curve_of: dict = {}
        for j, c in enumerate(curves):
            self.first.append(c[0])
            for k, p in enumerate(c):
                self.cprev[p] = c[k - 1] if k else None
                self.cnext[p] = c[k + 1] if k + 1 < len(c) else None
                self.par[p] = k % 2
                self.curve_of[p] = j

    def adjacent(self, a, b) -> bool:
        return self.right[a] == b or self.left[a] == b

    def _unlink(self, p):
        lp, rp = self.left.pop(p), self.right.pop(p)
        if lp is None:
            self.head = rp
        else:
            self.right[lp] = rp
        if rp is not None:
            self.left[rp] = lp
        return lp, rp

    def _touch(self, p, out: list):
        if p is None or p not in self.cnext:
            return
        if self.cnext[p] is not None:
            out.append(p)
        if self.cprev[p] is not None:
            out.append(self.cprev[p])

    def step(self, p, out: list) -> Optional[str]:
        """Try the move on arc (p, next(p)); append arcs to recheck."""
        if p not in self.cnext:
            return None
        q = self.cnext[p]
        if q is None or not self.adjacent(p, q):
            return None
        if self.cnext[q] is None:
            self.cnext[p] = None
            lq, rq = self._unlink(q)
            for e in (self.cprev, self.cnext, self.par, self.curve_of):
                del e[q]
            self._touch(lq, out)
            self._touch(rq, out)
            self._touch(p, out)
            return T_MOVE
        a, z = self.cprev[p], self.cnext[q]
        # p, q adjacent, so unlinking one at a time leaves the block's
        # outer neighbours as lp/rq.
        lp, _ = self._unlink(p)
        _, rq = self._unlink(q)
        if a is None:
            self.first[self.curve_of[p]] = z
        else:
            self.cnext[a] = z
        self.cprev[z] = a
        for r in (p, q):
            for e in (self.cprev, self.cnext, self.par, self.curve_of):
                del e[r]
        self._touch(lp, out)
        self._touch(rq, out)
        self._touch(z, out)
        if a is not None:
            self._touch(a, out)
        return B_MOVE

    def simplify(self, rng: Optional[random.Random] = None) -> int:
        todo = [p for p in self.cnext if self.cnext[p] is not None]
        if rng is not None:
            rng.shuffle(todo)
        count = 0
        while todo:
            if rng is not None:
                k = rng.randrange(len(todo))
                todo[k], todo[-1] = todo[-1], todo[k]
            p = todo.pop()
            if self.step(p, todo):
                count += 1
        return count

    def order(self) -> list:
        out, p = [], self.head
        while p is not None:
            out.append(p)
            p = self.right[p]
        return out

    def curves(self) -> list[list]:
        out = []
        for p in self.first:
            c = []
            while p is not None:
                c.append(p)
                p = self.cnext[p]
            out.append(c)
        return out

    def to_vcd(self) -> Vcd:
        pos = {p: k for k, p in enumerate(self.order(), start=1)}
        return Vcd(self.n, len(pos),
                   tuple(tuple(pos[p] for p in c) for c in self.curves()))


def work_from(d: Vcd) -> _Work:
    return _Work(d.n, list(range(1, d.u + 1)), d.curves)


def simplify(d: Vcd, rng: Optional[random.Random] = None) -> Vcd:
    """Apply simplifying moves until none remain (random order if ``rng``)."""
    w = work_from(d)
    w.simplify(rng)
    return w.to_vcd()
