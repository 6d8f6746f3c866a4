from __future__ import annotations

import numpy as np
import pytest

from persistry import (
    League,
    LeagueRow,
    MetricConfig,
    PointCloud,
    build_distance_matrix,
    compare,
    compute_intervals,
    rank_correlation,
    rips_filtration,
    summarize,
)


def _cloud(points) -> PointCloud:
    return PointCloud((f"p{i}", p) for i, p in enumerate(points))


def _summary(points, config=MetricConfig(), team="t"):
    cloud = _cloud(points)
    code = compute_intervals(rips_filtration(build_distance_matrix(cloud)), max_dim=1)
    return summarize(team, code, cloud, config)


def _league(standings) -> League:
    n = len(standings)
    rows = tuple(
        LeagueRow(f"team{i}", i + 1, 1000 - i, 50, s) for i, s in enumerate(standings)
    )
    return League(rows)


SQUARE = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]


def test_metric_config_bounds():
    MetricConfig(noise_fraction=0.0)
    MetricConfig(noise_fraction=0.5)
    with pytest.raises(ValueError, match="noise_fraction"):
        MetricConfig(noise_fraction=0.51)
    with pytest.raises(ValueError, match="noise_fraction"):
        MetricConfig(noise_fraction=-0.1)


def test_two_point_summary():
    s = _summary([(0.0, 0.0), (5.0, 0.0)])
    assert s.top_line == 5.0
    assert s.mean_bar_length == 5.0
    assert s.h1_count == 0 and s.h1_total_length == 0.0
    assert s.sparsity_profile.sparsity == 5.0


def test_top_line_equals_profile_end(ring_cloud):
    cloud = ring_cloud
    code = compute_intervals(rips_filtration(build_distance_matrix(cloud)), max_dim=1)
    s = summarize("ring", code, cloud)
    assert s.top_line == s.sparsity_profile.top_line
    assert s.h1_count == 1
    assert s.h1_total_length == pytest.approx(69.641941 - 35.114100, abs=1e-5)
    assert s.mean_bar_length == pytest.approx(np.mean(s.sparsity_profile.values))


def test_noise_floor_drops_short_cycles():
    # the square's loop lives from side to diagonal, about 41% of top_line;
    # a high enough floor erases it from the metrics
    counted = _summary(SQUARE, MetricConfig(noise_fraction=0.01))
    assert counted.h1_count == 1
    ignored = _summary(SQUARE, MetricConfig(noise_fraction=0.5))
    assert ignored.h1_count == 0
    assert ignored.h1_total_length == 0.0


def test_summary_scale_covariance():
    base = _summary(SQUARE)
    tripled = _summary([(3 * x, 3 * y) for x, y in SQUARE])
    assert tripled.top_line == pytest.approx(3.0 * base.top_line)
    assert tripled.mean_bar_length == pytest.approx(3.0 * base.mean_bar_length)
    assert tripled.h1_total_length == pytest.approx(3.0 * base.h1_total_length)
    assert tripled.h1_count == base.h1_count


def test_summarize_requires_finite_component_death():
    cloud = _cloud([(0.0, 0.0), (1.0, 0.0)])
    # truncated before the points join: only essential bars remain
    code = compute_intervals(
        rips_filtration(build_distance_matrix(cloud), max_value=0.5), max_dim=1
    )
    with pytest.raises(ValueError, match="finite dimension-0"):
        summarize("t", code, cloud)


def test_compare_neutral_on_identical_summaries():
    a = _summary(SQUARE)
    b = _summary(SQUARE)
    report = compare(a, b)
    assert report.verdict == "neutral"
    assert all(v == 0.0 for v in report.deltas.values())


def test_compare_verdict_ordering():
    square = _summary(SQUARE)  # one loop
    filled = _summary(SQUARE + [(1.0, 1.0)])  # center point wedges the loop away
    report = compare(square, filled)
    assert report.verdict == "improved"
    assert report.deltas["h1_count"] == -1.0

    spread = _summary([(0.0, 0.0), (6.0, 0.0)])
    tight = _summary([(0.0, 0.0), (5.0, 0.0)])
    assert compare(tight, spread).verdict == "improved"  # no loops, longer bars win
    assert compare(spread, tight).verdict == "worsened"


def test_compare_is_antisymmetric():
    a = _summary(SQUARE)
    b = _summary(SQUARE + [(1.0, 1.0)])
    fwd = compare(a, b)
    rev = compare(b, a)
    assert (fwd.verdict, rev.verdict) == ("improved", "worsened")
    for key in fwd.deltas:
        assert fwd.deltas[key] == pytest.approx(-rev.deltas[key])


def test_compare_rejects_mismatched_inputs():
    a = _summary(SQUARE, team="x")
    b = _summary(SQUARE, team="y")
    with pytest.raises(ValueError, match="cannot compare"):
        compare(a, b)
    c = _summary(SQUARE, MetricConfig(noise_fraction=0.02), team="x")
    with pytest.raises(ValueError, match="different configs"):
        compare(a, c)


def test_rank_correlation_extremes():
    n = 12
    assert rank_correlation(_league(list(range(1, n + 1)))).rho == 1.0
    assert rank_correlation(_league(list(range(n, 0, -1)))).rho == -1.0


def test_rank_correlation_matches_pearson_of_ranks(dataset):
    report = rank_correlation(dataset.league)
    ranks = np.array([list(p) for p in report.pairs], dtype=float)
    expected = np.corrcoef(ranks[:, 0], ranks[:, 1])[0, 1]
    assert report.rho == pytest.approx(expected, abs=1e-12)
    assert report.n == 30


def test_rank_correlation_ignores_team_labels():
    a = _league([3, 1, 2, 4])
    rows = tuple(
        LeagueRow(r.team.upper(), r.corsi_rank, r.corsi_for, r.points, r.standing)
        for r in a.rows
    )
    assert rank_correlation(a).rho == rank_correlation(League(rows)).rho


def test_rank_correlation_needs_two_rows():
    with pytest.raises(ValueError, match="at least two"):
        rank_correlation(League((LeagueRow("solo", 1, 10, 5, 1),)))


def test_summary_to_dict_shape():
    s = _summary(SQUARE)
    doc = s.to_dict()
    assert doc["team"] == "t"
    assert doc["h1_count"] == 1
    assert len(doc["sparsity_profile"]) == 3
    assert set(doc["tunneling"]) == {"diameter", "center", "method", "starts_used"}
    assert doc["noise_fraction"] == 0.01
