"""Shared fixtures: random diagrams built by undoing simplifications."""

from __future__ import annotations

import random

from virtbraid.bench import random_word
from virtbraid.vcd import Vcd, validate
from virtbraid.vcd_action import act_on_trivial
from virtbraid.word import BraidWord, generators, relations


def _insert(d: Vcd, gap: int, count: int):
    """Open ``count`` positions after position ``gap``; return new ids."""
    curves = [[p + count if p > gap else p for p in c] for c in d.curves]
    return curves, list(range(gap + 1, gap + 1 + count))


def grow_terminal(d: Vcd, rng: random.Random) -> Vcd:
    j = rng.randrange(d.n)
    t = d.curves[j][-1]
    gap = t if rng.random() < 0.5 else t - 1
    curves, (z,) = _insert(d, gap, 1)
    curves[j].append(z)
    return Vcd(d.n, d.u + 1, tuple(map(tuple, curves)))


def split_arc(d: Vcd, rng: random.Random) -> Vcd:
    """Replace an arc (x, y) by x - a - b - y with a, b adjacent."""
    j = rng.randrange(d.n)
    k = rng.randrange(1, len(d.curves[j]) + 1)  # arc k ends at curve point k
    if k == len(d.curves[j]):
        return grow_terminal(d, rng)
    gap = rng.randrange(0, d.u + 1)
    curves, (a, b) = _insert(d, gap, 2)
    if rng.random() < 0.5:
        a, b = b, a
    curves[j][k:k] = [a, b]
    return Vcd(d.n, d.u + 2, tuple(map(tuple, curves)))


def unsimplify(d: Vcd, rng: random.Random, steps: int) -> Vcd:
    done = 0
    while done < steps:
        e = split_arc(d, rng) if rng.random() < 0.7 else grow_terminal(d, rng)
        if not validate(e):
            d, done = e, done + 1
    return d


def random_diagram(n: int, max_len: int, rng: random.Random) -> Vcd:
    w = random_word(n, rng.randint(0, max_len), rng.getrandbits(32))
    return act_on_trivial(w)


def trivial_word(n: int, rng: random.Random, max_len: int = 60) -> BraidWord:
    """Random product of conjugated relators and cancelling pairs."""
    rels = [lhs * rhs.inverse() for _, lhs, rhs in relations(n)]
    gens = generators(n)
    out = BraidWord(n)
    while True:
        if rng.random() < 0.7:
            r = rng.choice(rels)
        else:
            g = rng.choice(gens)
            r = BraidWord(n, (g, g.inverse()))
        u = random_word(n, rng.randint(0, 4), rng.getrandbits(32))
        piece = u * r * u.inverse()
        if len(out) + len(piece) > max_len:
            return out
        out = out * piece if rng.random() < 0.5 else piece * out
