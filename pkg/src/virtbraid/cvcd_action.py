"""Generator action computed directly on condensed diagrams.

Each generator inserts a bounded number of new bundles, so the cost of a
letter is polynomial in the number of bundles and in the number of digits
of the weights, never in the weights themselves.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Optional

from .cvcd import O, U, CondensedError, CVcd, Pairs, trivial_condensed
from .word import BraidWord, Letter


@dataclasses.dataclass
class LetterReport:
    letter: Letter
    t_moves: int
    b_moves: int
    before: CVcd
    after: CVcd


def mirror_pairs(w: Pairs):
    top = w.size - 1
    for kind in (O, U):
        w.p[kind] = [[w.size - b - wt, w.size - a - wt, wt] for a, b, wt in w.p[kind]]
    w.base = [top - q for q in w.base]
    w.term = [top - q for q in w.term]


def _pair(x: int, y: int, wt: int) -> list[int]:
    return [x, y, wt] if x < y else [y, x, wt]


def sigma_right(w: Pairs, i: int):
    """Unsimplified sigma_i; the resulting diagram is valid but may admit moves."""
    n = w.n
    terms = w.sorted_terms()
    ti, cj = terms[i - 1]
    landing = w.center_gap(i + 1, terms) if i + 1 < n else w.size
    w.cut(landing)

    # isolate the terminal strand of t_i's over bundle, if it has one
    term_pair = None
    hit = w.locate(O, ti)
    if hit is not None:
        idx, k, _ = hit
        w.split_strands(O, idx, (k, k + 1))
        term_pair = [tuple(x) for x in w.p[O]].index(
            next(tuple(x) for x in w.p[O]
                 if x[2] == 1 and ti in (x[0], x[1])))

    crossing = []
    for idx, (a, b, wt) in enumerate(w.p[O]):
        if idx == term_pair:
            continue
        ina, inb = ti < a < landing, ti < b < landing
        if ina != inb:
            inside = a if ina else b
            crossing.append((inside, idx, ina))
    crossing.sort()
    total = 2 * sum(w.p[O][idx][2] for _, idx, _ in crossing) + 1

    w.remap(lambda q: q + total if q >= landing else q)
    w.size += total

    # layout at the landing gap: L-(C_k) .. L-(C_1) land L+(C_1) .. L+(C_k)
    half = total // 2
    land = landing + half
    left_edge, right_edge = land, land + 1
    new_over, new_under, dead = [], [], set()
    for _, idx, ina in crossing:
        a, b, wt = w.p[O][idx]
        inside, outside = (a, b) if ina else (b, a)
        lm = left_edge - wt
        lp = right_edge
        left_edge, right_edge = lm, right_edge + wt
        new_over.append(_pair(inside, lm, wt))
        new_under.append([lm, lp, wt])
        new_over.append(_pair(lp, outside, wt))
        dead.add(idx)

    if term_pair is not None:
        a, b, _ = w.p[O][term_pair]
        other = a if b == ti else b
        new_over.append(_pair(other, land, 1))
        dead.add(term_pair)
    else:
        new_over.append([ti, land, 1])
    w.p[O] = [x for k, x in enumerate(w.p[O]) if k not in dead] + new_over
    w.p[U].extend(new_under)
    w.term[cj] = land
    if term_pair is not None:
        w.delete_range(ti, 1)


def tau(w: Pairs, i: int):
    """Unsimplified tau_i: dip over bundles through three gaps, swap blocks."""
    terms = w.sorted_terms()
    segs = w.veer_segments()
    gaps = [w.center_gap(k, terms, segs) for k in (i - 1, i, i + 1)]
    shift = 0
    cuts = []
    for g0 in gaps:
        g = g0 + shift
        w.cut(g)
        strad = [(a, idx) for idx, (a, b, wt) in enumerate(w.p[O]) if a + wt <= g <= b]
        strad.sort()  # outermost first
        half = sum(w.p[O][idx][2] for _, idx in strad)
        w.remap(lambda q, g=g, s=2 * half: q + s if q >= g else q)
        w.size += 2 * half
        mid = g + half
        left_edge = right_edge = mid
        new_over, new_under = [], []
        dead = set()
        for _, idx in strad:
            a, b, wt = w.p[O][idx]
            gm, gp = left_edge - wt, right_edge
            left_edge, right_edge = gm, right_edge + wt
            new_over.append([a, gm, wt])
            new_under.append([gm, gp, wt])
            new_over.append([gp, b, wt])
            dead.add(idx)
        w.p[O] = [x for k, x in enumerate(w.p[O]) if k not in dead] + new_over
        w.p[U].extend(new_under)
        cuts.append(mid)
        shift += 2 * half
    c1, c2, c3 = cuts
    for c in cuts:
        w.cut(c)
    lx, ly = c2 - c1, c3 - c2

    def move(q):
        if c1 <= q < c2:
            return q + ly
        if c2 <= q < c3:
            return q - lx
        return q

    w.remap(move)


def naive_condensed(w: Pairs, g: Letter):
    if not 1 <= g.index <= w.n - 1:
        raise CondensedError(f"generator index {g.index} invalid for n={w.n}")
    if g.is_tau:
        tau(w, g.index)
    elif g.sign > 0:
        sigma_right(w, g.index)
    else:
        mirror_pairs(w)
        sigma_right(w, w.n - g.index)
        mirror_pairs(w)


def is_superficial(w: Pairs, kind: str, idx: int) -> bool:
    """B-move on an under bundle whose inner ends veer apart along over arcs."""
    if kind != U:
        return False
    a, b, wt = w.p[kind][idx]
    veers = []
    for q in (a + wt - 1, b):
        hit = w.locate(O, q)
        if hit is None:
            return False
        veers.append(hit[2])
    return veers[0] != veers[1]


def apply_generator_condensed(c: CVcd, g: Letter, counts: Optional[dict] = None,
                              check: bool = False) -> CVcd:
    """``g . c`` simplified.  ``check`` validates the input and asserts that
    B-moves performed after tau are superficial."""
    w = Pairs.of(c)
    if check and w.candidate_moves():
        raise CondensedError("generator action requires a simplified diagram")

    def superficial_only(v, move, kind, idx):
        if move == "B" and not is_superficial(v, kind, idx):
            raise AssertionError(f"non-superficial B-move after {g}")

    naive_condensed(w, g)
    w.simplify(counts, superficial_only if check and g.is_tau else None)
    return w.freeze()


def apply_word_condensed(c: CVcd, word: BraidWord,
                         hook: Optional[Callable[[LetterReport], None]] = None,
                         check: bool = False) -> CVcd:
    if word.n != c.n:
        raise CondensedError(f"word on {word.n} strands applied to {c.n} curves")
    for g in word.letters:
        counts: dict = {}
        nxt = apply_generator_condensed(c, g, counts, check)
        if hook is not None:
            hook(LetterReport(g, counts.get("T", 0), counts.get("B", 0), c, nxt))
        c = nxt
    return c


def act_on_trivial_condensed(word: BraidWord, hook=None, check: bool = False) -> CVcd:
    return apply_word_condensed(trivial_condensed(word.n), word, hook, check)
