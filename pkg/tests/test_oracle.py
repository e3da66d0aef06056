"""Exact chromatic index, enumeration, and the full-sweep labeling oracle."""

from itertools import product

import pytest

from eflcolor import (
    TooLargeError,
    check_proper,
    enumerate_decompositions,
    exact_chromatic_index,
    exhaustive_labeling_oracle,
    fixture,
    greedy_coloring,
    near_pencil,
    random_decomposition,
    search_labeling,
    trivial_edges,
    validate_decomposition,
)
from eflcolor.oracle import partition_cover_count


def brute_chi(d):
    """Exact chromatic index by trying every coloring, smallest k first."""
    m = len(d.elements)
    for k in range(1, m + 1):
        for assignment in product(range(k), repeat=m):
            if check_proper(d, list(assignment)).ok:
                return k
    raise AssertionError("unreachable")


class TestExactChi:
    def test_edges_of_k4(self):
        assert exact_chromatic_index(trivial_edges(4)).chi == 3

    def test_single_element(self):
        d = validate_decomposition(4, [(0, 1, 2, 3)])
        assert exact_chromatic_index(d).chi == 1

    def test_near_pencil_needs_n(self):
        # the big clique meets every pendant edge and pendants meet at the apex
        for n in (4, 5, 6, 7):
            assert exact_chromatic_index(near_pencil(n)).chi == n

    def test_witness_is_proper_and_optimal_size(self):
        for seed in range(20):
            d = random_decomposition(7, seed)
            result = exact_chromatic_index(d)
            verdict = check_proper(d, result.witness)
            assert verdict.ok
            assert verdict.colors_used == result.chi

    def test_matches_brute_force_small(self):
        for n in (3, 4):
            for d in enumerate_decompositions(n):
                assert exact_chromatic_index(d).chi == brute_chi(d)

    def test_paper_k9_between_bounds(self):
        d = fixture("paper_k9")
        result = exact_chromatic_index(d)
        assert result.chi <= 9
        assert check_proper(d, result.witness).ok

    def test_line_graph_of_odd_complete_graph(self):
        # edge chromatic number of K_n: n-1 for even n, n for odd n
        assert exact_chromatic_index(trivial_edges(6)).chi == 5
        assert exact_chromatic_index(trivial_edges(7)).chi == 7
        assert exact_chromatic_index(trivial_edges(9)).chi == 9

    def test_deterministic(self):
        d = random_decomposition(8, 3)
        r1 = exact_chromatic_index(d)
        r2 = exact_chromatic_index(d)
        assert r1 == r2


class TestGreedy:
    def test_single_element(self):
        d = validate_decomposition(3, [(0, 1, 2)])
        assert greedy_coloring(d) == (0,)

    def test_edge_triangle(self):
        d = trivial_edges(3)
        coloring = greedy_coloring(d)
        assert len(set(coloring)) == 3

    def test_always_proper(self):
        for n in range(3, 10):
            for seed in range(15):
                d = random_decomposition(n, seed)
                assert check_proper(d, greedy_coloring(d)).ok


class TestEnumeration:
    def test_counts_small(self):
        assert sum(1 for _ in enumerate_decompositions(2)) == 1
        assert sum(1 for _ in enumerate_decompositions(3)) == 2

    def test_n3_contents(self):
        found = [
            tuple(e.vertices for e in d.elements)
            for d in enumerate_decompositions(3)
        ]
        assert ((0, 1), (0, 2), (1, 2)) in found
        assert ((0, 1, 2),) in found

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_counts_match_slow_partition_enumerator(self, n):
        fast = sum(1 for _ in enumerate_decompositions(n))
        assert fast == partition_cover_count(n)

    def test_all_emitted_are_valid(self):
        for n in (4, 5):
            for d in enumerate_decompositions(n):
                validate_decomposition(n, [e.vertices for e in d.elements])

    def test_no_duplicates(self):
        for n in (4, 5):
            seen = set()
            for d in enumerate_decompositions(n):
                key = tuple(sorted(e.vertices for e in d.elements))
                assert key not in seen
                seen.add(key)

    def test_too_large_rejected(self):
        with pytest.raises(TooLargeError):
            next(enumerate_decompositions(7))

    def test_dedup_reduces_counts(self):
        full = sum(1 for _ in enumerate_decompositions(4))
        reduced = sum(1 for _ in enumerate_decompositions(4, dedup=True))
        # {K_4}, E(K_4), one-triangle-plus-pendants: 3 shapes
        assert reduced == 3
        assert reduced < full


class TestLabelingOracle:
    def test_too_large(self):
        d = fixture("paper_k9")
        abstract = [e.vertices for e in d.elements]
        with pytest.raises(TooLargeError):
            exhaustive_labeling_oracle(9, abstract)

    def test_trivial_edges_identity_works(self):
        d = trivial_edges(5)
        abstract = [e.vertices for e in d.elements]
        found = exhaustive_labeling_oracle(5, abstract)
        assert found is not None
        labeling, _ = found
        # lexicographically first bijection is the identity
        assert [x for _, x in labeling.assignment] == [0, 1, 2, 3, 4]

    def test_fano_agreement(self):
        d = fixture("fano_k7")
        abstract = [tuple(f"p{v}" for v in e.vertices) for e in d.elements]
        assert exhaustive_labeling_oracle(7, abstract) is None
        assert search_labeling(7, abstract) is None
