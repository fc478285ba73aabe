import random

import pytest

from src.errors import (
    DisconnectedError,
    EmptyGraphError,
    InvalidGraphError,
    InvalidTreeError,
    RootVertexError,
    TrivialTreeError,
    VertexOutOfRangeError,
)
from src.graph import (
    Graph,
    Tree,
    as_tree,
    classify,
    diametral_path,
    maximal_subtree,
    path_tree,
    remove_vertices,
    rooted_view,
    star_tree,
    subdivide,
)
from tests.conftest import random_prufer_tree, relabeled


class TestTree:
    """Testes para a validação da árvore"""

    def test_from_edges_sorts_adjacency(self):
        """Testa se as listas de adjacência ficam ordenadas"""
        t = Tree.from_edges(4, [(2, 0), (0, 1), (3, 0)])
        assert t.adjacency[0] == (1, 2, 3)
        assert t.edge_count == 3
        assert list(t.edges()) == [(0, 1), (0, 2), (0, 3)]

    def test_single_vertex_is_a_tree(self):
        """Testa se a árvore trivial é aceita"""
        t = Tree(((),))
        assert t.vertex_count == 1

    def test_cycle_rejected(self):
        """Testa rejeição de grafo cíclico"""
        with pytest.raises(InvalidTreeError):
            Tree.from_edges(3, [(0, 1), (1, 2), (0, 2)])

    def test_disconnected_rejected(self):
        """Testa rejeição de grafo desconexo"""
        with pytest.raises(DisconnectedError):
            Tree.from_edges(4, [(0, 1), (2, 3)])

    def test_asymmetric_adjacency_rejected(self):
        """Testa rejeição de adjacência assimétrica"""
        with pytest.raises(InvalidGraphError):
            Graph(((1,), ()))

    def test_self_loop_rejected(self):
        """Testa rejeição de laço"""
        with pytest.raises(InvalidGraphError):
            Graph(((0,),))

    def test_empty_graph_rejected(self):
        """Testa rejeição de grafo sem vértices"""
        with pytest.raises(EmptyGraphError):
            Graph(())

    def test_as_tree_names_vertex_by_label(self):
        """Testa se o diagnóstico usa o rótulo da entrada"""
        g = Graph.from_edges(4, [(0, 1), (2, 3)], {0: "a", 1: "b", 2: "c", 3: "d"})
        with pytest.raises(DisconnectedError, match="c é inalcançável a partir de a"):
            as_tree(g)

    def test_networkx_round_trip(self, figure_tree):
        """Testa conversão de ida e volta com networkx"""
        g = figure_tree.to_networkx()
        assert Tree.from_networkx(g) == figure_tree


class TestClassify:
    """Testes para a classificação de vértices"""

    def test_figure_tree(self, figure_tree):
        """Testa as classes da árvore de exemplo"""
        classes = classify(figure_tree)
        assert classes.leaves == {0, 2, 5, 6}
        assert classes.supports == {1, 4}
        assert classes.strong_supports == {1, 4}
        assert classes.strong_leaves == {0, 2, 5, 6}
        assert classes.weak_leaves == set()
        assert classes.semi_supports == {3}
        assert classes.nss == set()
        assert classes.l_count == 4
        assert classes.s_count == 2

    def test_q3_center(self, q3):
        """Testa se o centro de Q_3 é o único vizinho de semi-suporte"""
        classes = classify(q3.tree)
        assert classes.nss == {0}
        assert classes.semi_supports == {1, 4, 7}
        assert classes.supports == {2, 5, 8}

    def test_p2_default_support(self, p2):
        """Testa a convenção padrão de P2"""
        classes = classify(p2)
        assert classes.supports == {0}
        assert classes.leaves == {1}
        assert classes.weak_leaves == {1}
        assert classes.p2_support_choice == 0

    def test_p2_override(self, p2):
        """Testa a escolha explícita do suporte de P2"""
        classes = classify(p2, p2_support_choice=1)
        assert classes.supports == {1}
        assert classes.leaves == {0}

    def test_trivial_tree_rejected(self):
        """Testa rejeição da árvore trivial"""
        with pytest.raises(TrivialTreeError):
            classify(Tree(((),)))

    def test_leaf_partition_on_random_trees(self):
        """Testa se folhas fortes e fracas particionam as folhas"""
        rng = random.Random(11)
        for _ in range(50):
            classes = classify(random_prufer_tree(rng.randint(3, 30), rng))
            assert classes.strong_leaves | classes.weak_leaves == classes.leaves
            assert not classes.strong_leaves & classes.weak_leaves
            assert classes.strong_supports <= classes.supports
            assert not classes.semi_supports & (classes.supports | classes.leaves)
            assert not classes.nss & (classes.semi_supports | classes.supports)


class TestSubdivide:
    """Testes para o grafo subdivisão"""

    def test_p2_becomes_p3(self, p2):
        """Testa S(P2) = P3"""
        sub = subdivide(p2)
        assert sub.graph.vertex_count == 3
        assert sub.edge_vertex == {(0, 1): 2}
        assert sub.midpoint(1, 0) == 2
        assert list(sub.graph.edges()) == [(0, 2), (1, 2)]

    def test_figure_tree(self, figure_tree):
        """Testa S(T) da árvore de exemplo"""
        sub = subdivide(figure_tree)
        graph = sub.graph
        assert graph.vertex_count == 13
        assert set(graph.leaves) == {0, 2, 5, 6}
        for (i, j), m in sub.edge_vertex.items():
            assert graph.neighbors(m) == (i, j)
        for u, v in graph.edges():
            assert not (u in sub.original_ids and v in sub.original_ids)
        assert graph.name(sub.midpoint(0, 1)) == "v^{v1,v2}"

    def test_star_becomes_spider(self, k13):
        """Testa S(K_{1,3}): aranha com três pernas de comprimento 2"""
        graph = subdivide(k13).graph
        assert graph.vertex_count == 7
        assert graph.degree(0) == 3
        assert sorted(graph.degree(v) for v in range(7)) == [1, 1, 1, 2, 2, 2, 3]

    def test_supports_at_distance_two_from_leaves(self):
        """Testa se todo suporte fica a distância 2 de uma folha em S(T)"""
        rng = random.Random(5)
        for _ in range(30):
            t = random_prufer_tree(rng.randint(3, 25), rng)
            sub = subdivide(t)
            classes = classify(t)
            for s in classes.supports:
                leaf = next(w for w in t.neighbors(s) if w in classes.leaves)
                assert sub.graph.neighbors(sub.midpoint(s, leaf)) == tuple(sorted((s, leaf)))

    def test_trivial_tree_rejected(self):
        """Testa rejeição da árvore trivial"""
        with pytest.raises(TrivialTreeError):
            subdivide(Tree(((),)))


class TestRootedUtilities:
    """Testes para caminho diametral, subárvores e remoções"""

    def test_diametral_path_of_path(self, p5):
        """Testa o caminho diametral de P5"""
        path = diametral_path(p5)
        assert path.vertices == (0, 1, 2, 3, 4)
        assert path.diameter == 4

    def test_diametral_path_tie_break(self, k13):
        """Testa o desempate lexicográfico em K_{1,3}"""
        assert diametral_path(k13).vertices == (1, 0, 2)

    def test_diametral_path_figure_tree(self, figure_tree):
        """Testa o caminho diametral da árvore de exemplo"""
        assert diametral_path(figure_tree).vertices == (0, 1, 3, 4, 5)

    def test_diameter_is_isomorphism_invariant(self):
        """Testa invariância do diâmetro sob reindexação"""
        rng = random.Random(3)
        for _ in range(20):
            t = random_prufer_tree(rng.randint(2, 30), rng)
            path = diametral_path(t)
            assert diametral_path(relabeled(t, rng)).diameter == path.diameter
            for u, v in zip(path.vertices, path.vertices[1:]):
                assert v in t.neighbors(u)
            assert t.degree(path.vertices[0]) == 1
            assert t.degree(path.vertices[-1]) == 1

    def test_rooted_view_depths(self, figure_tree):
        """Testa pais e profundidades a partir de v1"""
        rv = rooted_view(figure_tree, 0)
        assert rv.parent[0] is None
        assert rv.depth == (0, 1, 2, 2, 3, 4, 4)
        assert rv.children(figure_tree, 4) == [5, 6]

    def test_maximal_subtree(self, figure_tree):
        """Testa a subárvore maximal em v5 com raiz v1"""
        rv = rooted_view(figure_tree, 0)
        sub, mapping = maximal_subtree(rv, figure_tree, 4)
        assert mapping == {4: 0, 5: 1, 6: 2}
        assert sub.vertex_count == 3
        assert sub.degree(0) == 2
        assert sub.name(0) == "v5"

    def test_maximal_subtree_of_leaf(self, figure_tree):
        """Testa a subárvore maximal de uma folha"""
        rv = rooted_view(figure_tree, 0)
        sub, _ = maximal_subtree(rv, figure_tree, 6)
        assert sub.vertex_count == 1

    def test_maximal_subtree_at_root_rejected(self, figure_tree):
        """Testa rejeição da subárvore maximal na raiz"""
        rv = rooted_view(figure_tree, 0)
        with pytest.raises(RootVertexError):
            maximal_subtree(rv, figure_tree, 0)

    def test_subtrees_of_root_children_cover_tree(self):
        """Testa se as subárvores dos filhos da raiz mais a raiz recuperam a árvore"""
        rng = random.Random(8)
        for _ in range(20):
            t = random_prufer_tree(rng.randint(2, 25), rng)
            rv = rooted_view(t, 0)
            covered = {0}
            for child in rv.children(t, 0):
                _, mapping = maximal_subtree(rv, t, child)
                assert not covered & mapping.keys()
                covered |= mapping.keys()
            assert covered == set(range(t.vertex_count))

    def test_remove_endpoint(self, p5):
        """Testa P5 menos uma extremidade = P4"""
        t, mapping = remove_vertices(p5, {0})
        assert t == path_tree(4)
        assert mapping == {1: 0, 2: 1, 3: 2, 4: 3}

    def test_remove_keeps_support(self, figure_tree):
        """Testa se v2 continua suporte após remover v1"""
        t, mapping = remove_vertices(figure_tree, {0})
        assert t.vertex_count == 6
        assert mapping[1] in classify(t).supports

    def test_remove_center_disconnects(self, p5):
        """Testa erro ao desconectar a árvore"""
        with pytest.raises(DisconnectedError):
            remove_vertices(p5, {2})

    def test_remove_everything(self, p2):
        """Testa erro ao esvaziar a árvore"""
        with pytest.raises(EmptyGraphError):
            remove_vertices(p2, {0, 1})

    def test_remove_out_of_range(self, p2):
        """Testa rejeição de ids fora de V"""
        with pytest.raises(VertexOutOfRangeError):
            remove_vertices(p2, {5})

    def test_star_helper(self):
        """Testa o construtor de estrelas"""
        assert star_tree(4).degree(0) == 4
