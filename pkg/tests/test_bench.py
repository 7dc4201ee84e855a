import math

import pytest

from virtbraid.bench import TSV_HEADER, loglog_slope, random_word, scaling_run


def test_random_word_deterministic():
    assert random_word(4, 30, 7) == random_word(4, 30, 7)
    assert random_word(4, 30, 7) != random_word(4, 30, 8)


def test_random_word_shape():
    w = random_word(3, 5, 123)
    assert len(w) == 5
    assert {g.index for g in w} <= {1, 2}
    assert len(random_word(2, 0, 1)) == 0


def test_random_word_covers_alphabet():
    w = random_word(3, 600, 1)
    kinds = {(g.kind, g.index, g.sign) for g in w}
    assert len(kinds) == 6


@pytest.mark.parametrize("n,l", [(1, 3), (3, -1)])
def test_random_word_errors(n, l):
    with pytest.raises(ValueError):
        random_word(n, l, 0)


def test_slope_of_power_law():
    ls = [10, 20, 40, 80]
    assert loglog_slope(ls, [l ** 3 for l in ls]) == pytest.approx(3.0)
    assert loglog_slope([5], [1.0]) is None


def test_scaling_run_small():
    rep = scaling_run(4, [10, 20, 40], 2, seed=3)
    assert [r.length for r in rep.rows] == [10, 20, 40]
    assert rep.tsv().splitlines()[0] == TSV_HEADER
    assert rep.slope is not None
    for r in rep.rows:
        assert r.max_arcs <= (1 + 17 * r.length) * 4
        assert r.max_weight_digits <= math.log10(6) * r.length + 1


def test_scaling_run_deterministic_columns():
    a = scaling_run(3, [8, 16], 2, seed=5)
    b = scaling_run(3, [8, 16], 2, seed=5)
    assert [(r.max_arcs, r.max_weight_digits) for r in a.rows] == \
        [(r.max_arcs, r.max_weight_digits) for r in b.rows]


@pytest.mark.parametrize("lengths,samples", [([], 2), ([10, 5], 2), ([10], 0)])
def test_scaling_run_rejects_bad_config(lengths, samples):
    with pytest.raises(ValueError):
        scaling_run(3, lengths, samples, seed=1)
