"""Generator action on uncondensed simplified diagrams.

This is the ground-truth oracle for the condensed action.  Word letters
act in token order: the first token acts first.
"""

from __future__ import annotations

import itertools

from .vcd import (DiagramError, Vcd, _veer_map, _Work, center_gap,
                  is_simplified, trivial_diagram)
from .word import BraidWord, Letter


def mirror(d: Vcd) -> Vcd:
    """Reverse the upper line (left-right reflection above the base line)."""
    u = d.u
    return Vcd(d.n, u, tuple(tuple(u + 1 - p for p in c) for c in d.curves))


def _over_arcs(curves):
    for j, c in enumerate(curves):
        for k in range(1, len(c), 2):
            yield j, k


def _sigma_right(d: Vcd, i: int) -> tuple[list, list]:
    """Naive sigma_i: t_i travels over t_{i+1} and lands in the next center gap."""
    n, u = d.n, d.u
    veer = _veer_map(d)
    terms = d.terminals()
    ti, cj = terms[i - 1]
    # for i = n-1 the terminal comes to rest after the last upper point
    landing = center_gap(d, i + 1, veer) if i + 1 < n else u
    lo, hi = ti, landing + 0.5
    fresh = itertools.count(u + 1)

    crossing = []
    for j, k in _over_arcs(d.curves):
        a, b = d.curves[j][k - 1], d.curves[j][k]
        if ti in (a, b):
            continue
        ina, inb = lo < a < hi, lo < b < hi
        if ina != inb:
            crossing.append((a if ina else b, j, k, ina))
    # The first arc met along the path from t_i ends up innermost.
    crossing.sort()
    lefts, rights, repl = [], [], {}
    for _, j, k, ina in crossing:
        lm, lp = next(fresh), next(fresh)
        lefts.insert(0, lm)
        rights.append(lp)
        repl[(j, k)] = [lm, lp] if ina else [lp, lm]

    curves = []
    for j, c in enumerate(d.curves):
        out = [c[0]]
        for k in range(1, len(c)):
            out.extend(repl.get((j, k), ()))
            out.append(c[k])
        curves.append(out)
    land = next(fresh)
    order = list(range(1, u + 1))
    if len(d.curves[cj]) % 2 == 0:
        # terminal arc is an over arc: t_i itself moves
        curves[cj][-1] = land
        order.remove(ti)
    else:
        curves[cj].append(land)
    k = order.index(landing) + 1 if landing else 0
    order[k:k] = lefts + [land] + rights
    return order, curves


def _tau(d: Vcd, i: int) -> tuple[list, list]:
    """Naive tau_i: dip over arcs through the three center gaps, swap blocks."""
    u = d.u
    veer = _veer_map(d)
    gaps = [center_gap(d, i - 1, veer), center_gap(d, i, veer),
            center_gap(d, i + 1, veer)]
    # Positions are fractions so new points can sit inside a gap.
    pos = {p: float(p) for p in range(1, u + 1)}
    curves = [list(c) for c in d.curves]
    fresh = itertools.count(u + 1)
    for g in gaps:
        x = g + 0.5
        straddle = []
        for j, k in _over_arcs(curves):
            a, b = curves[j][k - 1], curves[j][k]
            if min(pos[a], pos[b]) < x < max(pos[a], pos[b]):
                straddle.append((abs(pos[a] - pos[b]), j, k))
        # Outermost straddler gets the dip closest to the gap.
        straddle.sort(reverse=True)
        ins = {}
        for level, (_, j, k) in enumerate(straddle, start=1):
            lm, lp = next(fresh), next(fresh)
            eps = level / (4.0 * (len(straddle) + 1))
            pos[lm], pos[lp] = x - eps, x + eps
            a, b = curves[j][k - 1], curves[j][k]
            ins[(j, k)] = [lm, lp] if pos[a] < pos[b] else [lp, lm]
        for j, c in enumerate(curves):
            out = [c[0]]
            for k in range(1, len(c)):
                out.extend(ins.get((j, k), ()))
                out.append(c[k])
            curves[j] = out
    order = sorted(pos, key=pos.__getitem__)
    cuts = [g + 0.5 for g in gaps]
    A = [p for p in order if pos[p] < cuts[0]]
    X = [p for p in order if cuts[0] < pos[p] < cuts[1]]
    Y = [p for p in order if cuts[1] < pos[p] < cuts[2]]
    Z = [p for p in order if pos[p] > cuts[2]]
    return A + Y + X + Z, curves


def naive_action(d: Vcd, g: Letter) -> tuple[list, list]:
    """Unsimplified ``g . d`` as (upper order of point ids, curves of ids)."""
    if not 1 <= g.index <= d.n - 1:
        raise DiagramError(f"generator index {g.index} invalid for n={d.n}")
    if g.is_tau:
        return _tau(d, g.index)
    if g.sign > 0:
        return _sigma_right(d, g.index)
    # sigma_i^{-1} is the mirror image of sigma_{n-i}
    order, curves = _sigma_right(mirror(d), d.n - g.index)
    return order[::-1], curves


def naive_vcd(d: Vcd, g: Letter) -> Vcd:
    order, curves = naive_action(d, g)
    pos = {p: k for k, p in enumerate(order, start=1)}
    return Vcd(d.n, len(order), tuple(tuple(pos[p] for p in c) for c in curves))


def apply_generator(d: Vcd, g: Letter, check: bool = False) -> Vcd:
    if check and not is_simplified(d):
        raise DiagramError("generator action requires a simplified diagram")
    order, curves = naive_action(d, g)
    w = _Work(d.n, order, curves)
    w.simplify()
    return w.to_vcd()


def apply_word(d: Vcd, w: BraidWord, check: bool = False) -> Vcd:
    if w.n != d.n:
        raise DiagramError(f"word on {w.n} strands applied to {d.n} curves")
    for g in w.letters:
        d = apply_generator(d, g, check=check)
    return d


def act_on_trivial(w: BraidWord) -> Vcd:
    return apply_word(trivial_diagram(w.n), w)
