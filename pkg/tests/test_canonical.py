"""Structure of the mod-n edge coloring classes."""

from itertools import combinations

import pytest

from eflcolor import (
    SelfLoopError,
    canonical_edge_color,
    chromatic_class,
    class_structure_report,
)


@pytest.mark.parametrize(
    "a,b,n,expected",
    [(0, 6, 9, 6), (2, 3, 5, 0), (4, 5, 6, 3), (1, 2, 4, 3), (3, 4, 7, 0)],
)
def test_edge_color_values(a, b, n, expected):
    assert canonical_edge_color(a, b, n) == expected
    assert canonical_edge_color(b, a, n) == expected


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        canonical_edge_color(2, 2, 5)


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        canonical_edge_color(0, 7, 5)


def test_class_n5_i1():
    c = chromatic_class(1, 5)
    assert set(c.edges) == {(0, 1), (2, 4)}
    assert c.isolated == (3,)


def test_class_n6_i0():
    c = chromatic_class(0, 6)
    assert set(c.edges) == {(1, 5), (2, 4)}
    assert c.isolated == (0, 3)


def test_class_n6_i1_perfect_matching():
    c = chromatic_class(1, 6)
    assert set(c.edges) == {(0, 1), (2, 5), (3, 4)}
    assert c.isolated == ()
    assert c.is_perfect_matching


def test_smallest_case_n2():
    zero = chromatic_class(0, 2)
    assert zero.edges == ()
    assert zero.isolated == (0, 1)
    one = chromatic_class(1, 2)
    assert one.edges == ((0, 1),)
    assert one.isolated == ()


def brute_class(i, n):
    """Direct degree count over all K_n edges."""
    edges = [(a, b) for a, b in combinations(range(n), 2) if (a + b) % n == i]
    degree = {v: 0 for v in range(n)}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    return edges, [v for v in range(n) if degree[v] == 0], max(degree.values(), default=0)


@pytest.mark.parametrize("n", range(2, 51))
def test_structure_all_n_to_50(n):
    summaries = class_structure_report(n)
    total_edges = 0
    for summary in summaries:
        i = summary.index
        edges, isolated, max_degree = brute_class(i, n)
        assert max_degree <= 1
        assert summary.edge_count == len(edges)
        assert summary.isolated_count == len(isolated)
        cls = chromatic_class(i, n)
        assert list(cls.edges) == edges
        assert list(cls.isolated) == isolated
        total_edges += len(edges)
        if n % 2 == 1:
            assert summary.isolated_count == 1
            assert summary.edge_count == (n - 1) // 2
        elif i % 2 == 0:
            assert summary.isolated_count == 2
            assert summary.edge_count == (n - 2) // 2
        else:
            assert summary.isolated_count == 0
            assert summary.edge_count == n // 2
    assert total_edges == n * (n - 1) // 2


@pytest.mark.parametrize("n", range(2, 31))
def test_isolated_rule_doubling(n):
    for i in range(n):
        cls = chromatic_class(i, n)
        assert set(cls.isolated) == {u for u in range(n) if (2 * u) % n == i}
