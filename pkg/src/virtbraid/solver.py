"""Word problem for virtual braids via the action on condensed diagrams."""

from __future__ import annotations

import dataclasses
import math
from typing import Optional

from .cvcd import CVcd, Stats, canonical_serialize, stats, trivial_condensed
from .cvcd_action import apply_generator_condensed
from .word import (BraidWord, exponent_sum, identity_permutation, inverse,
                   permutation_image, virtual_permutation_image)

TRIVIAL, NONTRIVIAL = "trivial", "nontrivial"
INCONCLUSIVE = "inconclusive"


@dataclasses.dataclass(frozen=True)
class QuickInvariants:
    permutation: tuple[int, ...]
    virtual_permutation: tuple[int, ...]
    exponent_sum: int

    def reason(self) -> Optional[str]:
        """First invariant that separates the word from the identity, if any."""
        ident = identity_permutation(len(self.permutation))
        if self.permutation != ident:
            return "permutation"
        if self.virtual_permutation != ident:
            return "virtual permutation"
        if self.exponent_sum != 0:
            return "exponent sum"
        return None


@dataclasses.dataclass(frozen=True)
class BoundAudit:
    arcs_ok: bool
    weight_ok: bool
    digits_ok: bool

    @property
    def ok(self) -> bool:
        return self.arcs_ok and self.weight_ok and self.digits_ok


@dataclasses.dataclass(frozen=True)
class Certificate:
    verdict: str
    canonical: str
    quick: QuickInvariants
    stats: Stats
    bound_audit: BoundAudit


@dataclasses.dataclass(frozen=True)
class PrefixReport:
    length: int
    arcs: int
    max_weight: int
    weight_digits: int
    audit: BoundAudit


def quick_invariants(w: BraidWord) -> QuickInvariants:
    return QuickInvariants(permutation_image(w), virtual_permutation_image(w),
                           exponent_sum(w))


def quick_nontriviality(w: BraidWord) -> tuple[str, Optional[str]]:
    """``("certified_nontrivial", reason)`` or ``("inconclusive", None)``."""
    reason = quick_invariants(w).reason()
    if reason is None:
        return INCONCLUSIVE, None
    return "certified_nontrivial", reason


def audit(n: int, length: int, s: Stats) -> BoundAudit:
    digit_cap = math.log10(6) * length + 1
    return BoundAudit(s.arcs <= (1 + 17 * length) * n,
                      s.max_weight <= 6 ** length,
                      s.weight_digits <= digit_cap)


def diagram(w: BraidWord) -> CVcd:
    c = trivial_condensed(w.n)
    for g in w.letters:
        c = apply_generator_condensed(c, g)
    return c


def is_trivial(w: BraidWord) -> Certificate:
    quick = quick_invariants(w)
    c = diagram(w)
    canon = canonical_serialize(c)
    trivial = c == trivial_condensed(w.n)
    if trivial and quick.reason() is not None:
        raise AssertionError(f"diagram says trivial but {quick.reason()} differs")
    s = stats(c)
    return Certificate(TRIVIAL if trivial else NONTRIVIAL, canon, quick, s,
                       audit(w.n, len(w), s))


def are_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"words on {w1.n} and {w2.n} strands")
    return diagram(w1) == diagram(w2)


def are_equal_by_quotient(w1: BraidWord, w2: BraidWord) -> bool:
    """Second reduction: the quotient ``w1 . w2^-1`` is trivial."""
    if w1.n != w2.n:
        raise ValueError(f"words on {w1.n} and {w2.n} strands")
    return is_trivial(w1 * inverse(w2)).verdict == TRIVIAL


def invariant_report(w: BraidWord) -> list[PrefixReport]:
    """Stats and bound checks for every prefix, the empty one included."""
    c = trivial_condensed(w.n)
    out = []
    for k in range(len(w) + 1):
        if k:
            c = apply_generator_condensed(c, w.letters[k - 1])
        s = stats(c)
        out.append(PrefixReport(k, s.arcs, s.max_weight, s.weight_digits,
                                audit(w.n, k, s)))
    return out
