import pytest
from hypothesis import given, strategies as st

from virtbraid.word import (RELATION_FAMILIES, BraidWord, WordSyntaxError,
                            compose, exponent_sum, free_reduce, generators,
                            identity_permutation, invert_permutation,
                            parse_word, permutation_image, relations, render,
                            sigma, tau, virtual_permutation_image)


def words(n_max=5, l_max=12):
    return st.integers(2, n_max).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(1, n - 1), st.sampled_from(["s", "S", "t"])),
            max_size=l_max,
        ).map(lambda xs: BraidWord(n, tuple(
            tau(i) if k == "t" else sigma(i, 1 if k == "s" else -1)
            for i, k in xs))))


def test_parse_basic():
    w = parse_word("s1 S2 t1", 3)
    assert w.letters == (sigma(1), sigma(2, -1), tau(1))


def test_parse_empty_and_whitespace():
    assert len(parse_word("", 2)) == 0
    assert len(parse_word("   ", 4)) == 0
    assert parse_word(" s1\tt1 \n", 2) == parse_word("s1 t1", 2)


@pytest.mark.parametrize("text,pos", [("s1 x2", 1), ("t0", 0), ("s1 s3", 1), ("s", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text, 3)
    assert err.value.position == pos


def test_n_too_small():
    with pytest.raises(ValueError):
        BraidWord(1)


@given(words())
def test_render_round_trip(w):
    assert parse_word(render(w), w.n) == w


@given(words())
def test_inverse_is_involution(w):
    assert w.inverse().inverse() == w
    assert len(free_reduce(w * w.inverse())) == 0


def test_free_reduce_cancels_tau_pairs():
    assert len(free_reduce(parse_word("t1 s2 S2 t1", 3))) == 0
    assert render(free_reduce(parse_word("s1 t1 t2", 3))) == "s1 t1 t2"


def test_permutation_images():
    assert permutation_image(parse_word("s1", 3)) == (2, 1, 3)
    assert virtual_permutation_image(parse_word("s1", 3)) == (1, 2, 3)
    assert virtual_permutation_image(parse_word("t1 s2 s1 t2 S1 S2", 3)) == (3, 1, 2)
    assert exponent_sum(parse_word("s1 s2 s1 s1 s2 s1", 3)) == 6
    assert exponent_sum(parse_word("t1 S1", 2)) == -1


@given(words(), words())
def test_permutation_is_homomorphism(a, b):
    if a.n != b.n:
        return
    assert permutation_image(a * b) == compose(permutation_image(a), permutation_image(b))
    p = permutation_image(a)
    assert compose(p, invert_permutation(p)) == identity_permutation(a.n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_relations_cover_families(n):
    fams = {f for f, _, _ in relations(n)}
    expected = set(RELATION_FAMILIES)
    if n < 4:
        expected -= {"far-sigma", "far-tau", "far-mixed"}
    if n < 3:
        expected -= {"braid", "tau-braid", "mixed"}
    assert fams == expected


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relations_preserve_invariants(n):
    for _, lhs, rhs in relations(n):
        assert permutation_image(lhs) == permutation_image(rhs)
        assert virtual_permutation_image(lhs) == virtual_permutation_image(rhs)
        assert exponent_sum(lhs) == exponent_sum(rhs)


def test_generators():
    gs = generators(4)
    assert len(gs) == 9 and len(set(gs)) == 9
