import random
import time

import networkx as nx
import pytest

from src.enumeration import enumerate_free_trees
from src.errors import InfeasibleError, SizeCapExceededError, VertexOutOfRangeError
from src.graph import Graph, Tree, classify, path_tree, subdivide
from src.solver import Method, bounds, gamma, gamma_brute, gamma_tree_dp, is_toids
from tests.conftest import random_prufer_tree


def figure_black_set(sub):
    """Conjunto mínimo da árvore de exemplo em S(T)"""
    return {1, 4} | {sub.midpoint(i, j) for i, j in [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]}


class TestPredicate:
    """Testes para o predicado TOIDS"""

    def test_center_and_leaf(self):
        """Testa P3 com o centro e uma folha"""
        assert is_toids(path_tree(3), {1, 0}) is True

    def test_center_only(self):
        """Testa P3 só com o centro (centro sem vizinho em D)"""
        assert is_toids(path_tree(3), {1}) is False

    def test_complement_must_be_independent(self):
        """Testa P4 com complemento contendo uma aresta"""
        assert is_toids(path_tree(4), {1, 2}) is True
        assert is_toids(path_tree(5), {1, 2}) is False

    def test_figure_black_vertices(self, figure_tree):
        """Testa o conjunto de 8 vértices da subdivisão da árvore de exemplo"""
        sub = subdivide(figure_tree)
        assert is_toids(sub.graph, figure_black_set(sub)) is True

    def test_out_of_range(self):
        """Testa rejeição de ids fora de V"""
        with pytest.raises(VertexOutOfRangeError):
            is_toids(path_tree(3), {7})


class TestBruteForce:
    """Testes para o oráculo de força bruta"""

    def test_p3(self):
        """Testa S(P2) = P3"""
        solution = gamma_brute(path_tree(3))
        assert solution.value == 2
        assert solution.method == Method.BRUTE_FORCE

    def test_p9(self):
        """Testa S(P5) = P9"""
        assert gamma_brute(path_tree(9)).value == 6

    def test_figure_subdivision(self, figure_tree):
        """Testa γ(S(T)) = 8 com e sem o conjunto forçado"""
        sub = subdivide(figure_tree)
        assert gamma_brute(sub.graph).value == 8
        forced = gamma_brute(sub.graph, sub.images({1, 3, 4}))
        assert forced.value == 8
        assert {1, 3, 4} <= forced.witness

    def test_lexicographic_witness(self):
        """Testa a testemunha lexicograficamente mínima"""
        # em P6 os vizinhos das folhas (1 e 4) são obrigatórios; {0, 3} é o menor completamento
        assert gamma_brute(path_tree(6)).witness == {0, 1, 3, 4}

    def test_size_cap(self):
        """Testa o limite de tamanho"""
        with pytest.raises(SizeCapExceededError):
            gamma_brute(path_tree(30))
        with pytest.raises(SizeCapExceededError):
            gamma_brute(path_tree(9), cap=8)

    def test_isolated_vertex_infeasible(self):
        """Testa grafo com vértice isolado"""
        with pytest.raises(InfeasibleError):
            gamma_brute(Graph.from_edges(3, [(0, 1)]))

    def test_cyclic_graph(self):
        """Testa o predicado genérico em um ciclo C5"""
        c5 = Graph.from_networkx(nx.cycle_graph(5))
        solution = gamma_brute(c5)
        assert is_toids(c5, solution.witness)
        assert solution.value == 4


class TestTreeDP:
    """Testes para a programação dinâmica em árvores"""

    def test_known_values(self, figure_tree):
        """Testa valores conhecidos"""
        assert gamma_tree_dp(path_tree(3)).value == 2
        assert gamma_tree_dp(path_tree(9)).value == 6
        assert gamma_tree_dp(subdivide(figure_tree).graph).value == 8
        assert gamma(figure_tree) == 3

    def test_agrees_with_oracle(self):
        """Testa a DP contra a força bruta em todas as árvores com n <= 9"""
        for n in range(2, 10):
            for t in enumerate_free_trees(n):
                for g in (t, subdivide(t).graph):
                    dp = gamma_tree_dp(g)
                    assert dp.value == gamma_brute(g).value
                    assert is_toids(g, dp.witness)

    def test_forced_never_decreases(self):
        """Testa monotonicidade do conjunto forçado"""
        rng = random.Random(21)
        for _ in range(40):
            t = random_prufer_tree(rng.randint(2, 14), rng)
            forced = set(rng.sample(range(t.vertex_count), rng.randint(1, t.vertex_count)))
            free = gamma_tree_dp(t).value
            solution = gamma_tree_dp(t, forced)
            assert solution.value >= free
            assert forced <= solution.witness
            assert solution.value == gamma_brute(t, forced).value

    def test_forced_supports_on_subdivision(self):
        """Testa a igualdade ao forçar suportes e semi-suportes em S(T)"""
        for n in range(3, 10):
            for t in enumerate_free_trees(n):
                classes = classify(t)
                sub = subdivide(t)
                forced = sub.images(classes.supports | classes.semi_supports)
                assert gamma_tree_dp(sub.graph, forced).value == gamma_tree_dp(sub.graph).value

    def test_large_random_tree(self):
        """Testa o tempo linear em uma árvore de 100000 vértices"""
        rng = random.Random(2024)
        sequence = [rng.randrange(100_000) for _ in range(100_000 - 2)]
        t = Tree.from_networkx(nx.from_prufer_sequence(sequence))
        started = time.perf_counter()
        solution = gamma_tree_dp(t)
        elapsed = time.perf_counter() - started
        assert len(solution.witness) == solution.value
        assert elapsed < 1.0


class TestBounds:
    """Testes para o relatório de cotas"""

    def test_figure_tree(self, figure_tree):
        """Testa a árvore de exemplo: cota superior atingida, inferior não inteira"""
        report = bounds(figure_tree)
        assert (report.n, report.l, report.s) == (7, 4, 2)
        assert report.lower_num == 22
        assert report.upper_num == 24
        assert report.gamma == 8
        assert report.attains_upper is True
        assert report.attains_lower is False

    def test_p2(self, p2):
        """Testa P2: atinge as duas cotas"""
        report = bounds(p2)
        assert (report.lower_num, report.upper_num, report.gamma) == (6, 6, 2)
        assert report.attains_lower and report.attains_upper

    def test_p6(self):
        """Testa P6: nenhum numerador divisível por 3"""
        report = bounds(path_tree(6))
        assert (report.lower_num, report.upper_num) == (20, 22)
        assert not report.attains_lower
        assert not report.attains_upper

    def test_sandwich_on_random_trees(self):
        """Testa lower_num <= 3γ <= upper_num"""
        rng = random.Random(99)
        for _ in range(100):
            report = bounds(random_prufer_tree(rng.randint(2, 60), rng))
            assert report.sandwich_holds
