import pytest

from mooremix.bounds import DegreePair
from mooremix.constructions import (
    cayley_dihedral,
    cycle,
    golden_graphs,
    line_digraph_of_cycle_digons,
)
from mooremix.graph import is_isomorphic
from mooremix.search import DiameterMode, SearchSpec, enumerate_classes


class TestCycle:
    def test_undirected(self):
        g = cycle(5, directed=False)
        assert g.total_regularity() == DegreePair(2, 0)
        assert g.diameter() == 2

    def test_directed(self):
        g = cycle(5, directed=True)
        assert g.total_regularity() == DegreePair(0, 1)
        assert g.diameter() == 4

    def test_directed_triangle_strict(self):
        assert len(cycle(3, directed=True).arcs) == 3

    def test_too_small(self):
        with pytest.raises(ValueError):
            cycle(2, directed=False)


class TestLineDigraph:
    def test_regular_on_2n_vertices(self):
        for n in (3, 4, 5):
            g = line_digraph_of_cycle_digons(n)
            assert g.n == 2 * n
            assert g.total_regularity() == DegreePair(1, 1)

    def test_n5_matches_golden_witness(self):
        g = line_digraph_of_cycle_digons(5)
        assert g.diameter() == 3
        assert sum(is_isomorphic(g, h) for h in golden_graphs()) == 1

    def test_n3_appears_in_enumeration(self):
        res = enumerate_classes(
            SearchSpec(dp=DegreePair(1, 1), k=2, n=6, diameter_mode=DiameterMode.AT_MOST)
        )
        g = line_digraph_of_cycle_digons(3)
        assert any(is_isomorphic(g, h) for h in res.graphs)


class TestCayleyDihedral:
    def test_regularity(self):
        for n in (3, 4, 5, 7):
            assert cayley_dihedral(n).total_regularity() == DegreePair(1, 1)

    def test_n5_self_converse(self):
        g = cayley_dihedral(5)
        assert is_isomorphic(g, g.converse())

    def test_n5_matches_golden_witness(self):
        g = cayley_dihedral(5)
        assert sum(is_isomorphic(g, h) for h in golden_graphs()) == 1

    def test_counts(self):
        g = cayley_dihedral(5)
        assert (g.n, len(g.edges), len(g.arcs)) == (10, 5, 10)


class TestWitnessAgreement:
    def test_both_witnesses_same_class(self):
        ld = line_digraph_of_cycle_digons(5)
        cay = cayley_dihedral(5)
        assert is_isomorphic(ld, cay)

    def test_golden_self_converse(self):
        for g in golden_graphs():
            assert is_isomorphic(g, g.converse())
