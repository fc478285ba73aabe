import random

import networkx as nx
import pytest

from src.families import build_q
from src.graph import Tree, path_tree, star_tree

# v1..v7 -> 0..6: v2 ~ v1, v3, v4; v4 ~ v5; v5 ~ v6, v7
FIGURE_EDGES = [(1, 0), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]
FIGURE_LABELS = {i: f"v{i + 1}" for i in range(7)}

FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def random_prufer_tree(n: int, rng: random.Random) -> Tree:
    """Árvore aleatória uniforme via sequência de Prüfer"""
    if n == 2:
        return path_tree(2)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Tree.from_networkx(nx.from_prufer_sequence(sequence))


def relabeled(t: Tree, rng: random.Random) -> Tree:
    """Cópia isomorfa com ids embaralhados"""
    permutation = list(range(t.vertex_count))
    rng.shuffle(permutation)
    return Tree.from_edges(t.vertex_count, [(permutation[u], permutation[v]) for u, v in t.edges()])


@pytest.fixture
def figure_tree():
    """Árvore de 7 vértices com dois suportes fortes e um semi-suporte"""
    return Tree.from_edges(7, FIGURE_EDGES, FIGURE_LABELS)


@pytest.fixture
def q3():
    return build_q(3)


@pytest.fixture
def p2():
    return path_tree(2)


@pytest.fixture
def p5():
    return path_tree(5)


@pytest.fixture
def k13():
    return star_tree(3)


@pytest.fixture
def figure_edge_file(tmp_path):
    """Lista de arestas da árvore de 7 vértices em disco"""
    path = tmp_path / "figure.txt"
    lines = ["# árvore de exemplo", ""] + [f"{u} {v}" for u, v in FIGURE_EDGES]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def report_dir(tmp_path):
    path = tmp_path / "reports"
    path.mkdir()
    return path
