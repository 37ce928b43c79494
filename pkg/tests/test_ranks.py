import pytest
from hypothesis import given, strategies as st

from gini_bounds import DomainError, RankSample, gamma_rank_statistic


def test_comonotone_and_countermonotone_n4():
    up = RankSample(tuple((i, i) for i in range(1, 5)))
    assert gamma_rank_statistic(up) == 1.0
    down = RankSample(tuple((i, 5 - i) for i in range(1, 5)))
    assert gamma_rank_statistic(down) == -1.0


def test_two_observation_sample():
    assert gamma_rank_statistic(RankSample(((1, 1), (2, 2)))) == 1.0


@pytest.mark.parametrize("n", range(2, 11))
def test_extremes_for_all_small_n(n):
    up = RankSample(tuple((i, i) for i in range(1, n + 1)))
    down = RankSample(tuple((i, n + 1 - i) for i in range(1, n + 1)))
    assert gamma_rank_statistic(up) == 1.0
    assert gamma_rank_statistic(down) == -1.0


def test_malformed_ranks_reported():
    with pytest.raises(DomainError, match=r"duplicates \[1\], missing \[2\]"):
        RankSample(((1, 1), (1, 2)))
    with pytest.raises(DomainError, match="s-ranks"):
        RankSample(((1, 2), (2, 2)))
    with pytest.raises(DomainError, match="at least 2"):
        RankSample(((1, 1),))


@given(st.permutations(list(range(1, 13))), st.permutations(list(range(12))))
def test_invariant_under_reordering_observations(s_ranks, order):
    n = len(s_ranks)
    pairs = [(i + 1, s_ranks[i]) for i in range(n)]
    reordered = [pairs[k] for k in order]
    assert gamma_rank_statistic(RankSample(tuple(pairs))) == gamma_rank_statistic(
        RankSample(tuple(reordered))
    )


@given(st.permutations(list(range(1, 10))))
def test_statistic_in_range(s_ranks):
    sample = RankSample(tuple((i + 1, s) for i, s in enumerate(s_ranks)))
    assert -1.0 <= gamma_rank_statistic(sample) <= 1.0


def test_csv_round_trip(tmp_path):
    path = tmp_path / "ranks.csv"
    sample = RankSample(((2, 1), (1, 3), (3, 2)))
    sample.to_csv(path)
    assert RankSample.from_csv(path) == sample
