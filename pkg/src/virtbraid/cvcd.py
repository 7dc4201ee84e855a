"""Condensed virtual curve diagrams.

Each bundle (parallelity class of over or under arcs) is stored as an
interval pair ``(a, b, w)``: its left end occupies upper positions
``a .. a+w-1``, its right end ``b .. b+w-1``, and strand ``k`` (0 =
outermost) joins ``a+k`` to ``b+w-1-k``.  Positions are 0-based and
arbitrary precision, so a diagram costs O(m log r) space no matter how
many arcs it condenses.  Base arcs are kept as one position per curve.

The run-length encoded upper line used by the text format is derived
from the interval pairs on demand.
"""

from __future__ import annotations

import dataclasses
import re
from bisect import bisect_right
from typing import Iterable, Optional

from .vcd import Vcd

O, U = "O", "U"
KINDS = (O, U)


class CondensedError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Run:
    width: int
    above: Optional[str]  # "O<k>.L" / "O<k>.R"
    below: Optional[str]  # "U<k>.L" / "U<k>.R" / "B<j>"
    terminal: Optional[int] = None  # 1-based curve index

    def __str__(self):
        s = f"[{self.width} {self.above or '-'}/{self.below or '-'}"
        if self.terminal is not None:
            s += f" T{self.terminal}"
        return s + "]"


@dataclasses.dataclass(frozen=True)
class Stats:
    arcs: int
    max_weight: int
    weight_digits: int


@dataclasses.dataclass(frozen=True)
class CVcd:
    """Immutable condensed diagram in canonical (maximal-bundle) form."""

    n: int
    size: int  # number of upper points of the underlying diagram
    over: tuple[tuple[int, int, int], ...]
    under: tuple[tuple[int, int, int], ...]
    base: tuple[int, ...]  # base[j] = upper end of curve j's base arc
    term: tuple[int, ...]  # term[j] = terminal point of curve j

    def __str__(self):
        return canonical_serialize(self)

    def pairs(self, kind: str) -> tuple[tuple[int, int, int], ...]:
        return self.over if kind == O else self.under

    @property
    def arc_count(self) -> int:
        return len(self.over) + len(self.under) + self.n

    def runs(self) -> list[Run]:
        return _runs(self)

    def stats(self) -> Stats:
        return stats(self)


# -- the mutable engine ------------------------------------------------------

class Pairs:
    """Mutable interval-pair diagram used by moves and the generator action."""

    def __init__(self, n: int, size: int, over, under, base, term):
        self.n = n
        self.size = size
        self.p = {O: [list(x) for x in over], U: [list(x) for x in under]}
        self.base = list(base)
        self.term = list(term)

    @classmethod
    def of(cls, c: CVcd) -> "Pairs":
        return cls(c.n, c.size, c.over, c.under, c.base, c.term)

    def freeze(self) -> CVcd:
        self.normalize()
        return CVcd(self.n, self.size,
                    tuple(sorted(tuple(x) for x in self.p[O])),
                    tuple(sorted(tuple(x) for x in self.p[U])),
                    tuple(self.base), tuple(self.term))

    # -- structural primitives ---------------------------------------------

    def normalize(self):
        """Merge bundles that are parallel (nested with adjacent ends)."""
        for kind in KINDS:
            by_left = {x[0]: x for x in self.p[kind]}
            out = []
            absorbed = set()
            for x in sorted(self.p[kind]):
                if x[0] in absorbed:
                    continue
                a, b, w = x
                while True:
                    y = by_left.get(a + w)
                    if y is None or y[1] + y[2] != b or y[0] in absorbed:
                        break
                    absorbed.add(y[0])
                    b, w = y[1], w + y[2]
                out.append([a, b, w])
            self.p[kind] = out

    def cut(self, pos: int, kinds: Iterable[str] = KINDS):
        """Split bundles so that no end block contains both pos-1 and pos."""
        for kind in kinds:
            out = []
            for a, b, w in self.p[kind]:
                if a < pos < a + w:
                    k = pos - a
                elif b < pos < b + w:
                    k = b + w - pos
                else:
                    out.append([a, b, w])
                    continue
                out.append([a, b + w - k, k])
                out.append([a + k, b, w - k])
            self.p[kind] = out

    def split_strands(self, kind: str, idx: int, ks: Iterable[int]) -> list[int]:
        """Split bundle ``idx`` at strand offsets ``ks``; return new indices."""
        a, b, w = self.p[kind][idx]
        cuts = sorted({k for k in ks if 0 < k < w})
        bounds = [0] + cuts + [w]
        pieces = [[a + lo, b + w - hi, hi - lo]
                  for lo, hi in zip(bounds, bounds[1:])]
        self.p[kind][idx] = pieces[0]
        start = len(self.p[kind])
        self.p[kind].extend(pieces[1:])
        return [idx] + list(range(start, start + len(pieces) - 1))

    def remap(self, fn):
        """Apply a position map that is a translation on every end block."""
        for kind in KINDS:
            for x in self.p[kind]:
                x[0], x[1] = sorted((fn(x[0]), fn(x[1])))
        self.base = [fn(q) for q in self.base]
        self.term = [fn(q) for q in self.term]

    def insert_gap(self, g: int, width: int):
        """Open ``width`` new positions before current position ``g``."""
        self.cut(g)
        self.remap(lambda q: q + width if q >= g else q)
        self.size += width

    def delete_range(self, x: int, length: int):
        """Remove positions ``x .. x+length-1`` (must be unreferenced)."""
        end = x + length
        self.remap(lambda q: q - length if q >= end else q)
        self.size -= length

    # -- queries ---------------------------------------------------------------

    def locate(self, kind: str, q: int) -> Optional[tuple[int, int, str]]:
        """``(bundle index, strand, side)`` of the ``kind`` end covering q."""
        for idx, (a, b, w) in enumerate(self.p[kind]):
            if a <= q < a + w:
                return idx, q - a, "L"
            if b <= q < b + w:
                return idx, b + w - 1 - q, "R"
        return None

    def veer_segments(self):
        """Sorted ``(start, end, side)`` over-end blocks; "R" = left-veering."""
        segs = []
        for a, b, w in self.p[O]:
            segs.append((a, a + w, "L"))
            segs.append((b, b + w, "R"))
        segs.sort()
        return segs

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted((q, j) for j, q in enumerate(self.term))

    def center_gap(self, i: int, terms=None, segs=None) -> int:
        """Insert position between the centers of interval ``i`` (0..n)."""
        if terms is None:
            terms = self.sorted_terms()
        if segs is None:
            segs = self.veer_segments()
        lo = terms[i - 1][0] if i >= 1 else -1
        hi = terms[i][0] if i < self.n else self.size
        gap = lo + 1
        # the center gap sits after the last left-veering point in (lo, hi)
        for s, e, side in segs:
            if side == "R" and s < hi and e > lo + 1:
                gap = max(gap, min(e, hi))
        return gap

    def terminal_set(self) -> dict[int, int]:
        return {q: j for j, q in enumerate(self.term)}

    # -- condensed moves ---------------------------------------------------------

    def candidate_moves(self) -> list[tuple[str, str, int]]:
        terms = self.terminal_set()
        out = []
        for kind in KINDS:
            for idx, (a, b, w) in enumerate(self.p[kind]):
                if b == a + w:
                    t = a + w - 1 in terms or b in terms
                    out.append(("T" if t else "B", kind, idx))
        return out

    def apply_T(self, kind: str, idx: int):
        a, b, w = self.p[kind][idx]
        if b != a + w:
            raise CondensedError("innermost strand endpoints are not adjacent")
        terms = self.terminal_set()
        inner_l, inner_r = a + w - 1, b
        if inner_r in terms:
            x, y = inner_r, inner_l
        elif inner_l in terms:
            x, y = inner_l, inner_r
        else:
            raise CondensedError("condensed T-move needs a terminal innermost end")
        j = terms[x]
        if w == 1:
            del self.p[kind][idx]
        else:
            self.p[kind][idx] = [a, b + 1, w - 1]
        self.term[j] = y
        self.delete_range(x, 1)

    def b_extent(self, kind: str, idx: int) -> int:
        """Number of inner strands a condensed B-move on ``idx`` deletes."""
        a, b, w = self.p[kind][idx]
        if b != a + w:
            raise CondensedError("innermost strand endpoints are not adjacent")
        last = -1
        for q in self.term:
            if a <= q < a + w:
                last = max(last, q - a)
            elif b <= q < b + w:
                last = max(last, b + w - 1 - q)
        if last == w - 1:
            raise CondensedError("innermost strand is terminal; use a T-move")
        return w - 1 - last

    def apply_B(self, kind: str, idx: int, limit: Optional[int] = None) -> int:
        """Delete the inner terminal-free strands of bundle ``idx``.

        Flanking arcs of the other kind are fused pairwise.  ``limit`` caps
        the number of strands deleted (used when a deeper deletion would
        fold an arc back into the deleted zone).  Returns strands deleted.
        """
        t = self.b_extent(kind, idx)
        if limit is not None:
            t = min(t, limit)
        a, b, w = self.p[kind][idx]
        c = b  # zone is [c - t, c + t)
        other = U if kind == O else O
        zl, zr = c - t, c + t

        # pieces of the zone covered by other-kind ends and base arcs
        left_pieces, right_pieces = [], []
        touched = {}
        for j, (qa, qb, qw) in enumerate(self.p[other]):
            hit = False
            for s, e in ((qa, qa + qw), (qb, qb + qw)):
                lo, hi = max(s, zl), min(e, zr)
                if lo >= hi:
                    continue
                hit = True
                if hi <= c:
                    left_pieces.append((lo, hi, "pair", j))
                elif lo >= c:
                    right_pieces.append((lo, hi, "pair", j))
                else:
                    left_pieces.append((lo, c, "pair", j))
                    right_pieces.append((c, hi, "pair", j))
            if hit:
                touched[j] = []
        if kind == O:
            for j, q in enumerate(self.base):
                if zl <= q < c:
                    left_pieces.append((q, q + 1, "base", j))
                elif c <= q < zr:
                    right_pieces.append((q, q + 1, "base", j))

        # d-ranges: left point c-d, right point c+d-1, d = 1..t
        def to_d(pieces, left):
            out = []
            for lo, hi, tag, j in pieces:
                d0, d1 = (c - hi + 1, c - lo + 1) if left else (lo - c + 1, hi - c + 1)
                out.append((d0, d1, tag, j))
            out.sort()
            return out

        L, R = to_d(left_pieces, True), to_d(right_pieces, False)
        cover = sum(d1 - d0 for d0, d1, _, _ in L), sum(d1 - d0 for d0, d1, _, _ in R)
        if cover != (t, t):
            raise CondensedError("zone is not fully covered by flanking arcs")

        fused = []
        new_base = {}
        li = ri = 0
        d = 1
        while d <= t:
            l0, l1, ltag, lj = L[li]
            r0, r1, rtag, rj = R[ri]
            d1 = min(l1, r1)
            if ltag == "pair" and rtag == "pair":
                qa, qb, qw = self.p[other][lj]
                s1 = qa + qb + qw - 1
                qa2, qb2, qw2 = self.p[other][rj]
                s2 = qa2 + qb2 + qw2 - 1
                # far ends: left partner increases with d, right decreases
                f0, f1 = s1 - c + d, s1 - c + d1
                g0, g1 = s2 - c - d1 + 2, s2 - c - d + 2
                for q in (f0, f1 - 1, g0, g1 - 1):
                    if zl <= q < zr:
                        raise CondensedError("flanking arc folds back into the zone")
                lo_i, hi_i = sorted(((f0, f1), (g0, g1)))
                fused.append([lo_i[0], hi_i[0], d1 - d])
                touched[lj].append((c - d1 + 1, c - d + 1))
                touched[rj].append((c + d - 1, c + d1 - 1))
            elif ltag == "base" and rtag == "pair":
                qa, qb, qw = self.p[other][rj]
                far = qa + qb + qw - 1 - (c + d - 1)
                new_base[lj] = far
                touched[rj].append((c + d - 1, c + d))
            elif ltag == "pair" and rtag == "base":
                qa, qb, qw = self.p[other][lj]
                far = qa + qb + qw - 1 - (c - d)
                new_base[rj] = far
                touched[lj].append((c - d, c - d + 1))
            else:
                raise CondensedError("two base arcs cannot be fused")
            d = d1
            if d >= l1:
                li += 1
            if d >= r1:
                ri += 1

        # strip zone strands from the touched bundles
        kept = []
        for j, x in enumerate(self.p[other]):
            if j not in touched:
                kept.append(x)
                continue
            qa, qb, qw = x
            removed = []
            for lo, hi in touched[j]:
                if qa <= lo < qa + qw:
                    removed.append((lo - qa, hi - qa))
                else:
                    removed.append((qb + qw - hi, qb + qw - lo))
            removed.sort()
            cur = 0
            for k0, k1 in removed + [(qw, qw)]:
                if k0 > cur:
                    kept.append([qa + cur, qb + qw - k0, k0 - cur])
                cur = max(cur, k1)
        self.p[other] = kept + fused
        for j, q in new_base.items():
            self.base[j] = q

        if t == w:
            del self.p[kind][idx]
        else:
            self.p[kind][idx] = [a, b + t, w - t]
        self.delete_range(zl, 2 * t)
        return t

    def fold_limit(self, kind: str, idx: int) -> int:
        """Largest deletion depth whose zone contains no arc of the other kind
        with both ends inside it."""
        t = self.b_extent(kind, idx)
        a, b, w = self.p[kind][idx]
        c = b
        other = U if kind == O else O

        def radius(q):
            return c - q if q < c else q - c + 1

        best = t
        for qa, qb, qw in self.p[other]:
            # the ends of strand k sum to a constant, so the strand nearest
            # the pair's midpoint is the first to fit inside a growing zone
            mid = (qb + qw - qa - 1) // 2
            r = min(max(radius(qa + k), radius(qb + qw - 1 - k))
                    for k in {min(max(mid, 0), qw - 1), min(max(mid + 1, 0), qw - 1)})
            if r <= best:
                best = r - 1
        return best

    @staticmethod
    def _strand_within(qa, qb, qw, c, r) -> bool:
        zl, zr = c - r, c + r
        # strands with left point in zone: k in [zl - qa, zr - qa)
        k1 = (max(0, zl - qa), min(qw, zr - qa))
        # right point qb+qw-1-k in zone: k in (qb+qw-1-zr, qb+qw-1-zl]
        k2 = (max(0, qb + qw - zr), min(qw, qb + qw - zl))
        return max(k1[0], k2[0]) < min(k1[1], k2[1])

    def simplify(self, counts: Optional[dict] = None, on_move=None, rng=None):
        """Apply condensed moves until none remain.

        T-moves go first, then B-moves, unless ``rng`` is given, in which
        case a random applicable move is taken each time.
        """
        while True:
            self.normalize()
            moves = self.candidate_moves()
            if not moves:
                return
            if rng is not None:
                rng.shuffle(moves)
            move = None
            for kind_m, kind, idx in moves:
                if kind_m == "T" or rng is not None:
                    lim = None if kind_m == "T" else self.fold_limit(kind, idx)
                    if lim != 0:
                        move = (kind_m, kind, idx, lim)
                        break
            if move is None:
                for kind_m, kind, idx in moves:
                    lim = self.fold_limit(kind, idx)
                    if lim > 0:
                        move = (kind_m, kind, idx, lim)
                        if lim == self.b_extent(kind, idx):
                            break
            kind_m, kind, idx, lim = move
            if on_move is not None:
                on_move(self, kind_m, kind, idx)
            if kind_m == "T":
                self.apply_T(kind, idx)
            else:
                self.apply_B(kind, idx, lim)
            if counts is not None:
                counts[kind_m] = counts.get(kind_m, 0) + 1

    # -- consistency -------------------------------------------------------------

    def violations(self) -> list[str]:
        out = []
        cov_o, cov_u = [], []
        for a, b, w in self.p[O]:
            if w < 1 or a + w > b:
                out.append(f"bad over pair {(a, b, w)}")
            cov_o += [(a, a + w), (b, b + w)]
        for a, b, w in self.p[U]:
            if w < 1 or a + w > b:
                out.append(f"bad under pair {(a, b, w)}")
            cov_u += [(a, a + w), (b, b + w)]
        cov_u += [(q, q + 1) for q in self.base]
        self._check_tiling(cov_o, "over", set(self.term), out)
        self._check_tiling(cov_u, "under/base", set(self.term), out)
        tset = set(self.term)
        if len(tset) != self.n:
            out.append("terminal points collide")
        spans = sorted((a, b + w) for a, b, w in self.p[O])
        stack = []
        for lo, hi in spans:
            while stack and stack[-1] <= lo:
                stack.pop()
            if stack and hi > stack[-1]:
                out.append("over bundles interleave")
                break
            stack.append(hi)
        return out

    def _check_tiling(self, cov, label, terms, out):
        cov.sort()
        cur = 0
        for s, e in cov:
            while cur < s:
                if cur not in terms:
                    out.append(f"position {cur} lacks an {label} arc")
                    return
                cur += 1
            if s < cur:
                out.append(f"{label} ends overlap at {s}")
                return
            cur = e
        while cur < self.size:
            if cur not in terms:
                out.append(f"position {cur} lacks an {label} arc")
                return
            cur += 1
        if cur > self.size:
            out.append(f"{label} ends exceed the upper line")


# -- construction and conversion --------------------------------------------

def trivial_condensed(n: int) -> CVcd:
    return CVcd(n, n, (), (), tuple(range(n)), tuple(range(n)))


def condense(d: Vcd) -> CVcd:
    over, under = [], []
    for c in d.curves:
        for k in range(1, len(c)):
            x, y = sorted((c[k - 1] - 1, c[k] - 1))
            (over if k % 2 else under).append([x, y, 1])
    base = tuple(c[0] - 1 for c in d.curves)
    term = tuple(c[-1] - 1 for c in d.curves)
    return Pairs(d.n, d.u, over, under, base, term).freeze()


class _Partner:
    def __init__(self, triples):
        ends = []
        for a, b, w in triples:
            ends.append((a, a + w, a + b + w - 1))
            ends.append((b, b + w, a + b + w - 1))
        ends.sort()
        self.starts = [e[0] for e in ends]
        self.ends = ends

    def __call__(self, q):
        k = bisect_right(self.starts, q) - 1
        if k < 0:
            return None
        s, e, tot = self.ends[k]
        return tot - q if s <= q < e else None


def expand(c: CVcd, cap: int = 10 ** 6) -> Vcd:
    """Underlying uncondensed diagram; refuses when a weight exceeds ``cap``."""
    r = stats(c).max_weight
    if r > cap:
        raise CondensedError(
            f"bundle weight with {len(str(r))} digits exceeds cap {cap}")
    if c.size > 4 * cap * max(1, c.arc_count):
        raise CondensedError("diagram too large to expand")
    over, under = _Partner(c.over), _Partner(c.under)
    terms = set(c.term)
    curves = []
    for j in range(c.n):
        q, seq, k = c.base[j], [], 1
        while True:
            seq.append(q + 1)
            if q in terms and q == c.term[j]:
                break
            q = (over if k % 2 else under)(q)
            if q is None:
                raise CondensedError(f"curve {j + 1} runs off the diagram")
            k += 1
        curves.append(tuple(seq))
    return Vcd(c.n, c.size, tuple(curves))


# -- derived run list and text format --------------------------------------------

def _runs(c: CVcd) -> list[Run]:
    above, below = [], []
    for idx, (a, b, w) in enumerate(c.over):
        above += [(a, a + w, ("O", idx, "L")), (b, b + w, ("O", idx, "R"))]
    for idx, (a, b, w) in enumerate(c.under):
        below += [(a, a + w, ("U", idx, "L")), (b, b + w, ("U", idx, "R"))]
    below += [(q, q + 1, ("B", j, None)) for j, q in enumerate(c.base)]
    above.sort()
    below.sort()
    term = {q: j for j, q in enumerate(c.term)}
    cuts = {0, c.size}
    for s, e, _ in above + below:
        cuts.update((s, e))
    for q in term:
        cuts.update((q, q + 1))
    cuts = sorted(cuts)

    raw = []
    ia = ib = 0
    for s, e in zip(cuts, cuts[1:]):
        while ia < len(above) and above[ia][1] <= s:
            ia += 1
        while ib < len(below) and below[ib][1] <= s:
            ib += 1
        ra = above[ia][2] if ia < len(above) and above[ia][0] <= s else None
        rb = below[ib][2] if ib < len(below) and below[ib][0] <= s else None
        raw.append([e - s, ra, rb, term.get(s)])
    merged = []
    for r in raw:
        if (merged and merged[-1][1] == r[1] and merged[-1][2] == r[2]
                and merged[-1][3] is None and r[3] is None):
            merged[-1][0] += r[0]
        else:
            merged.append(r)

    names: dict[tuple, int] = {}
    counters = {"O": 0, "U": 0}

    def name(ref):
        if ref is None:
            return None
        kind, idx, side = ref
        if kind == "B":
            return f"B{idx + 1}"
        key = (kind, idx)
        if key not in names:
            counters[kind] += 1
            names[key] = counters[kind]
        return f"{kind}{names[key]}.{side}"

    out = []
    for width, ra, rb, t in merged:
        na = name(ra)
        nb = name(rb)
        out.append(Run(width, na, nb, None if t is None else t + 1))
    return out


def _bundle_order(c: CVcd) -> tuple[list[int], list[int]]:
    """Over/under bundle indices in order of first appearance."""
    seen = {O: [], U: []}
    events = []
    for idx, (a, b, w) in enumerate(c.over):
        events.append((a, 0, O, idx))
    for idx, (a, b, w) in enumerate(c.under):
        events.append((a, 1, U, idx))
    events.sort()
    for _, _, kind, idx in events:
        seen[kind].append(idx)
    return seen[O], seen[U]


def canonical_serialize(c: CVcd) -> str:
    runs = " ".join(str(r) for r in _runs(c))
    o_order, u_order = _bundle_order(c)
    o = "".join(f" O{k}={c.over[idx][2]}" for k, idx in enumerate(o_order, 1))
    u = "".join(f" U{k}={c.under[idx][2]}" for k, idx in enumerate(u_order, 1))
    return f"cvcd n={c.n} | runs: {runs} | O:{o} | U:{u}"


_RUN = re.compile(r"\[(\d+) (-|O\d+\.[LR])/(-|U\d+\.[LR]|B\d+)(?: T(\d+))?\]")
_TEXT = re.compile(r"cvcd n=(\d+) \| runs: (.*) \| O:(.*) \| U:(.*)\Z")


def parse_condensed(text: str) -> CVcd:
    m = _TEXT.match(text.strip())
    if m is None:
        raise CondensedError("not a condensed diagram serialization")
    n = int(m.group(1))
    weights = {}
    for grp in (m.group(3), m.group(4)):
        for tok in grp.split():
            key, val = tok.split("=")
            weights[key] = int(val)
    ends: dict[str, list] = {}
    base, term = [None] * n, [None] * n
    pos = 0
    for rm in _RUN.finditer(m.group(2)):
        width = int(rm.group(1))
        for ref in (rm.group(2), rm.group(3)):
            if ref == "-":
                continue
            if ref.startswith("B"):
                base[int(ref[1:]) - 1] = pos
                continue
            key, side = ref.split(".")
            e = ends.setdefault(key, [None, None])
            slot = 0 if side == "L" else 1
            if e[slot] is None:
                e[slot] = [pos, pos + width]
            elif e[slot][1] == pos:
                e[slot][1] = pos + width
            else:
                raise CondensedError(f"end {ref} is not contiguous")
        if rm.group(4):
            term[int(rm.group(4)) - 1] = pos
        pos += width
    over, under = [], []
    for key, (l, r) in ends.items():
        w = weights[key]
        if l is None or r is None or l[1] - l[0] != w or r[1] - r[0] != w:
            raise CondensedError(f"bundle {key} ends do not match weight {w}")
        (over if key[0] == "O" else under).append([l[0], r[0], w])
    if None in base or None in term:
        raise CondensedError("missing base or terminal markers")
    return Pairs(n, pos, over, under, base, term).freeze()


# -- measurements ---------------------------------------------------------------

def stats(c: CVcd) -> Stats:
    r = max([w for _, _, w in c.over + c.under], default=1)
    return Stats(c.arc_count, r, len(str(r)))


def is_simplified(c: CVcd) -> bool:
    return not Pairs.of(c).candidate_moves()


def free_counts(c: CVcd) -> tuple[int, int, int]:
    """``(over bundles, free under bundles, free base arcs)``."""
    under = c.under

    def interleave(x, y):
        return x[0] < y[0] < x[1] < y[1] or y[0] < x[0] < y[1] < x[1]

    # a strand of bundle (a,b,w) spans at least (a+w-1, b) and at most (a, b+w-1)
    inner = [(a + w - 1, b) for a, b, w in under]
    free_under = 0
    for k, (a, b, w) in enumerate(under):
        if any(interleave(inner[k], inner[j]) for j in range(len(under)) if j != k):
            continue
        if any(a + w <= q < b for q in c.base):
            continue
        inside = [inner[j] for j, (x, y, v) in enumerate(under)
                  if j != k and a + w <= x and y + v <= b]
        if any(interleave(p, q) for i, p in enumerate(inside) for q in inside[i + 1:]):
            continue
        free_under += 1
    free_base = 0
    for j, q in enumerate(c.base):
        if any(a + w <= q < b for a, b, w in under):
            continue
        if any((j < k) != (q < c.base[k]) for k in range(c.n) if k != j):
            continue
        free_base += 1
    return len(c.over), free_under, free_base


# -- public move API ----------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class CondensedMove:
    kind: str  # "T" or "B"
    bundle: str  # O or U
    pair: tuple[int, int, int]


def find_condensed_move(c: CVcd) -> Optional[CondensedMove]:
    w = Pairs.of(c)
    for kind_m, kind, idx in w.candidate_moves():
        return CondensedMove(kind_m, kind, tuple(w.p[kind][idx]))
    return None


def _locate_move(c: CVcd, m: CondensedMove) -> tuple[Pairs, int]:
    w = Pairs.of(c)
    try:
        idx = [tuple(x) for x in w.p[m.bundle]].index(tuple(m.pair))
    except ValueError:
        raise CondensedError(f"{m}: no such bundle") from None
    return w, idx


def apply_condensed_T(c: CVcd, m: CondensedMove) -> CVcd:
    w, idx = _locate_move(c, m)
    w.apply_T(m.bundle, idx)
    return w.freeze()


def apply_condensed_B(c: CVcd, m: CondensedMove) -> CVcd:
    w, idx = _locate_move(c, m)
    a, b, wt = w.p[m.bundle][idx]
    if b != a + wt:
        raise CondensedError(f"{m}: innermost endpoints are not adjacent")
    if a + wt - 1 in w.term or b in w.term:
        raise CondensedError(f"{m}: innermost strand is terminal")
    w.apply_B(m.bundle, idx)
    return w.freeze()


def simplify_condensed(c: CVcd, counts: Optional[dict] = None, rng=None) -> CVcd:
    w = Pairs.of(c)
    w.simplify(counts, rng=rng)
    return w.freeze()
