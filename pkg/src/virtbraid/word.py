"""Virtual braid words over the standard generators of VB_n.

Tokens are ``s<i>`` (sigma_i), ``S<i>`` (sigma_i inverse) and ``t<i>``
(tau_i), separated by whitespace.  Indices are 1-based.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Iterator, Sequence

_TOKEN = re.compile(r"([sSt])([0-9]+)\Z")


class WordSyntaxError(ValueError):
    """Malformed token or out-of-range generator index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


@dataclasses.dataclass(frozen=True)
class Letter:
    kind: str  # "sigma" or "tau"
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("sigma", "tau"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind == "tau" and self.sign != 1:
            raise ValueError("tau letters are involutions and carry sign +1")
        if self.index < 1:
            raise ValueError("generator indices are 1-based")

    @property
    def is_tau(self) -> bool:
        return self.kind == "tau"

    def inverse(self) -> "Letter":
        if self.is_tau:
            return self
        return Letter("sigma", self.index, -self.sign)

    def __str__(self):
        if self.is_tau:
            return f"t{self.index}"
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"


def sigma(i: int, sign: int = 1) -> Letter:
    return Letter("sigma", i, sign)


def tau(i: int) -> Letter:
    return Letter("tau", i)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("virtual braid words need n >= 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for pos, g in enumerate(self.letters):
            if not 1 <= g.index <= self.n - 1:
                raise WordSyntaxError(
                    f"index {g.index} outside [1, {self.n - 1}]", pos)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return BraidWord(self.n, self.letters[item])
        return self.letters[item]

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def __str__(self):
        return render(self)

    def inverse(self) -> "BraidWord":
        return inverse(self)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated tokens into a word on ``n`` strands."""
    if n < 2:
        raise ValueError("virtual braid words need n >= 2 strands")
    letters = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN.match(tok)
        if m is None:
            raise WordSyntaxError(f"malformed token {tok!r}", pos)
        index = int(m.group(2))
        if not 1 <= index <= n - 1:
            raise WordSyntaxError(f"index {index} outside [1, {n - 1}]", pos)
        c = m.group(1)
        if c == "t":
            letters.append(tau(index))
        else:
            letters.append(sigma(index, 1 if c == "s" else -1))
    return BraidWord(n, tuple(letters))


def render(w: BraidWord) -> str:
    return " ".join(str(g) for g in w.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(g.inverse() for g in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for g in w.letters:
        if stack and stack[-1] == g.inverse():
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.n, tuple(stack))


# Permutations are 1-based image tuples: perm[k - 1] is the image of k.
Permutation = tuple


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def _compose_transpositions(n: int, indices: Iterable[int]) -> Permutation:
    # Track where each strand currently sits; the transposition (i, i+1)
    # swaps whatever occupies positions i and i+1.
    at = list(range(1, n + 1))  # at[pos - 1] = strand now at pos
    for i in indices:
        at[i - 1], at[i] = at[i], at[i - 1]
    image = [0] * n
    for pos, strand in enumerate(at, start=1):
        image[strand - 1] = pos
    return tuple(image)


def permutation_image(w: BraidWord) -> Permutation:
    """Strand permutation; sigma_i and tau_i both map to (i, i+1)."""
    return _compose_transpositions(w.n, (g.index for g in w.letters))


def virtual_permutation_image(w: BraidWord) -> Permutation:
    """Image under sigma_i -> identity, tau_i -> (i, i+1)."""
    return _compose_transpositions(
        w.n, (g.index for g in w.letters if g.is_tau))


def exponent_sum(w: BraidWord) -> int:
    return sum(g.sign for g in w.letters if not g.is_tau)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[p[k] - 1] for k in range(len(p)))


def invert_permutation(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for k, image in enumerate(p, start=1):
        out[image - 1] = k
    return tuple(out)


def relations(n: int) -> Iterator[tuple[str, BraidWord, BraidWord]]:
    """Every defining relation instance of VB_n as ``(family, lhs, rhs)``."""
    W = lambda *gs: BraidWord(n, gs)
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                yield "far-sigma", W(sigma(i), sigma(j)), W(sigma(j), sigma(i))
                yield "far-tau", W(tau(i), tau(j)), W(tau(j), tau(i))
                yield "far-mixed", W(sigma(i), tau(j)), W(tau(j), sigma(i))
        yield "tau-involution", W(tau(i), tau(i)), W()
    for i in range(1, n - 1):
        yield ("braid", W(sigma(i), sigma(i + 1), sigma(i)),
               W(sigma(i + 1), sigma(i), sigma(i + 1)))
        yield ("tau-braid", W(tau(i), tau(i + 1), tau(i)),
               W(tau(i + 1), tau(i), tau(i + 1)))
        yield ("mixed", W(tau(i + 1), sigma(i), tau(i + 1)),
               W(tau(i), sigma(i + 1), tau(i)))


RELATION_FAMILIES = ("far-sigma", "braid", "far-tau", "tau-braid",
                     "tau-involution", "far-mixed", "mixed")


def generators(n: int) -> list[Letter]:
    gs = [sigma(i) for i in range(1, n)]
    gs += [sigma(i, -1) for i in range(1, n)]
    gs += [tau(i) for i in range(1, n)]
    return gs
