import random

import pytest

from helpers import random_diagram
from virtbraid.bench import random_word
from virtbraid.vcd import (DiagramError, canonical_text, is_simplified,
                           parse_vcd, trivial_diagram, validate)
from virtbraid.vcd_action import (act_on_trivial, apply_generator, apply_word,
                                  mirror, naive_vcd)
from virtbraid.word import (generators, parse_word, permutation_image,
                            relations, sigma, tau)


@pytest.mark.parametrize("word,text", [
    ("s1", "vcd n=2 u=3 / c1: 1 3 / c2: 2"),
    ("t1", "vcd n=2 u=2 / c1: 2 / c2: 1"),
    ("S1", "vcd n=2 u=3 / c1: 2 / c2: 3 1"),
])
def test_golden(word, text):
    assert canonical_text(act_on_trivial(parse_word(word, 2))) == text


@pytest.mark.parametrize("word", ["s1 S1", "S1 s1", "t1 t1"])
def test_cancellation_on_identity(word):
    assert act_on_trivial(parse_word(word, 2)) == trivial_diagram(2)


def test_braid_relation_on_identity():
    a = act_on_trivial(parse_word("s1 s2 s1", 3))
    b = act_on_trivial(parse_word("s2 s1 s2", 3))
    assert a == b


def test_errors():
    with pytest.raises(DiagramError):
        apply_generator(trivial_diagram(2), sigma(2))
    with pytest.raises(DiagramError):
        apply_word(trivial_diagram(3), parse_word("s1", 2))
    fold = parse_vcd("vcd n=2 u=4 / c1: 1 3 2 / c2: 4")
    with pytest.raises(DiagramError):
        apply_generator(fold, sigma(1), check=True)


def _samples(seed, count, n_range=(2, 5), max_len=12):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        yield random_diagram(n, max_len, rng)


def test_relations_hold():
    for d in _samples(1, 60):
        for family, lhs, rhs in relations(d.n):
            assert apply_word(d, lhs) == apply_word(d, rhs), family


def test_inverses_cancel():
    for d in _samples(2, 60):
        for g in generators(d.n):
            assert apply_generator(apply_generator(d, g), g.inverse()) == d


def test_results_are_valid_and_simplified():
    for d in _samples(3, 60):
        for g in generators(d.n):
            e = apply_generator(d, g)
            assert validate(e) == []
            assert is_simplified(e)
            assert validate(naive_vcd(d, g)) == []


def test_mirror_conjugates_sigma():
    for d in _samples(4, 40):
        n = d.n
        for i in range(1, n):
            lhs = mirror(apply_generator(mirror(d), sigma(n - i)))
            assert lhs == apply_generator(d, sigma(i, -1))
            assert mirror(apply_generator(mirror(d), tau(n - i))) == apply_generator(d, tau(i))


def test_terminal_bookkeeping():
    rng = random.Random(6)
    for _ in range(80):
        n = rng.randint(2, 5)
        w = random_word(n, rng.randint(0, 12), rng.getrandbits(32))
        d = act_on_trivial(w)
        order = [j for _, j in d.terminals()]
        perm = permutation_image(w)
        for j in range(n):
            assert order[perm[j] - 1] == j


def test_growth_bounds():
    # after sigma the count is at most M + 2(#over arcs) + 1 <= 3M + 1
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(2, 5)
        w = random_word(n, rng.randint(1, 10), rng.getrandbits(32))
        d = trivial_diagram(n)
        for k, g in enumerate(w.letters, start=1):
            m = d.nonterminal_count()
            overs = d.over_arc_count()
            d = apply_generator(d, g)
            now = d.nonterminal_count()
            if g.is_tau:
                assert now <= 6 * m
            else:
                assert now <= m + 2 * overs + 1 <= 3 * m + 1
            assert now <= 6 ** (k - 1)


def test_sigma_witness_exceeds_two_m_plus_one():
    d = act_on_trivial(parse_word("S1", 3))
    assert d.nonterminal_count() == 1
    e = apply_generator(d, sigma(2))
    assert canonical_text(e) == "vcd n=3 u=7 / c1: 2 6 / c2: 3 5 7 1 / c3: 4"
    assert e.nonterminal_count() == 4
