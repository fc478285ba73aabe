"""
Representação de árvores, classificação de vértices e construção do grafo subdivisão
"""

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    DisconnectedError,
    EmptyGraphError,
    InvalidGraphError,
    InvalidTreeError,
    RootVertexError,
    TrivialTreeError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class Graph:
    """Grafo simples com vértices densos 0..n-1 e listas de adjacência ordenadas"""

    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        adjacency = self.adjacency
        n = len(adjacency)
        if n == 0:
            raise EmptyGraphError("O grafo não tem vértices")

        for v, nbrs in enumerate(adjacency):
            previous = -1
            for w in nbrs:
                if not 0 <= w < n:
                    raise InvalidGraphError(f"Vizinho {w} de {self.name(v)} fora do intervalo")
                if w == v:
                    raise InvalidGraphError(f"Laço no vértice {self.name(v)}")
                if w <= previous:
                    raise InvalidGraphError(
                        f"Vizinhos de {self.name(v)} duplicados ou fora de ordem"
                    )
                previous = w
                if v < w:
                    back = adjacency[w]
                    i = bisect_left(back, v)
                    if i == len(back) or back[i] != v:
                        raise InvalidGraphError(
                            f"Adjacência assimétrica entre {self.name(v)} e {self.name(w)}"
                        )

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Mapping[int, str]] = None):
        """
        Constrói o grafo a partir de uma lista de arestas

        Args:
            vertex_count: Número de vértices
            edges: Pares (u, v) com 0 <= u, v < vertex_count
            labels: Nomes de exibição opcionais
        """
        lists: List[List[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRangeError([x for x in (u, v) if not 0 <= x < vertex_count],
                                            vertex_count)
            lists[u].append(v)
            lists[v].append(u)
        return cls(tuple(tuple(sorted(nbrs)) for nbrs in lists), labels)

    @classmethod
    def from_networkx(cls, g: nx.Graph):
        """Converte um grafo networkx, reindexando os nós em ordem crescente"""
        nodes = sorted(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in g.edges()]
        labels = None
        if any(node != i for i, node in enumerate(nodes)):
            labels = {i: str(node) for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), edges, labels)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Itera as arestas (u, v) com u < v em ordem lexicográfica"""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def name(self, v: int) -> str:
        """Nome de exibição do vértice (rótulo da entrada ou o próprio id)"""
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def check_vertices(self, vertices: Iterable[int]) -> None:
        bad = [v for v in vertices if not 0 <= v < self.vertex_count]
        if bad:
            raise VertexOutOfRangeError(bad, self.vertex_count)


@dataclass(frozen=True)
class Tree(Graph):
    """Árvore: grafo conexo com n - 1 arestas"""

    def __post_init__(self):
        super().__post_init__()
        dist, _, _ = _bfs(self, 0)
        for v, d in enumerate(dist):
            if d < 0:
                raise DisconnectedError(
                    f"Grafo desconexo: {self.name(v)} é inalcançável a partir de {self.name(0)}"
                )
        if self.edge_count != self.vertex_count - 1:
            raise InvalidTreeError(
                f"Grafo cíclico: {self.edge_count} arestas para {self.vertex_count} vértices"
            )

    @property
    def leaves(self) -> List[int]:
        return [v for v, nbrs in enumerate(self.adjacency) if len(nbrs) == 1]


def as_tree(graph: Graph) -> Tree:
    """Valida um grafo genérico como árvore, com diagnóstico em caso de falha"""
    if isinstance(graph, Tree):
        return graph
    return Tree(graph.adjacency, graph.labels)


def path_tree(n: int) -> Tree:
    """Caminho P_n com vértices 0..n-1 em ordem"""
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(k: int) -> Tree:
    """Estrela K_{1,k} com centro 0"""
    return Tree.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _bfs(graph: Graph, source: int) -> Tuple[List[int], List[int], List[int]]:
    """Retorna (distâncias, pais, ordem de visita); -1 marca não alcançado"""
    n = len(graph.adjacency)
    dist = [-1] * n
    parent = [-1] * n
    dist[source] = 0
    order = [source]
    queue = deque([source])
    adjacency = graph.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv
                parent[w] = v
                order.append(w)
                queue.append(w)
    return dist, parent, order


# ---------------------------------------------------------------------------
# Classificação de vértices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexClassification:
    """As sete classes de vértices de uma árvore não trivial"""

    leaves: frozenset
    supports: frozenset
    strong_supports: frozenset
    strong_leaves: frozenset
    weak_leaves: frozenset
    semi_supports: frozenset
    nss: frozenset
    p2_support_choice: Optional[int] = None

    @property
    def l_count(self) -> int:
        return len(self.leaves)

    @property
    def s_count(self) -> int:
        return len(self.supports)

    def as_dict(self) -> Dict[str, object]:
        return {
            "leaves": sorted(self.leaves),
            "supports": sorted(self.supports),
            "strong_supports": sorted(self.strong_supports),
            "strong_leaves": sorted(self.strong_leaves),
            "weak_leaves": sorted(self.weak_leaves),
            "semi_supports": sorted(self.semi_supports),
            "nss": sorted(self.nss),
            "l_count": self.l_count,
            "s_count": self.s_count,
            "p2_support_choice": self.p2_support_choice,
        }


def classify(t: Tree, p2_support_choice: Optional[int] = None) -> VertexClassification:
    """
    Calcula folhas, suportes, suportes fortes, folhas fortes/fracas,
    semi-suportes e vizinhos de semi-suportes

    Args:
        t: Árvore com pelo menos dois vértices
        p2_support_choice: Vértice de P2 tratado como suporte (padrão: menor id)
    """
    n = t.vertex_count
    if n < 2:
        raise TrivialTreeError("Classes de vértices não definidas para a árvore trivial")

    if n == 2:
        support = 0 if p2_support_choice is None else p2_support_choice
        if support not in (0, 1):
            raise VertexOutOfRangeError([support], 2)
        leaf = 1 - support
        empty = frozenset()
        return VertexClassification(
            leaves=frozenset({leaf}),
            supports=frozenset({support}),
            strong_supports=empty,
            strong_leaves=empty,
            weak_leaves=frozenset({leaf}),
            semi_supports=empty,
            nss=empty,
            p2_support_choice=support,
        )

    adjacency = t.adjacency
    leaves = frozenset(v for v in range(n) if len(adjacency[v]) == 1)
    leaf_count = [sum(1 for w in adjacency[v] if w in leaves) for v in range(n)]
    supports = frozenset(v for v in range(n) if leaf_count[v] >= 1)
    strong_supports = frozenset(v for v in supports if leaf_count[v] >= 2)
    strong_leaves = frozenset(
        v for v in leaves if sum(1 for w in adjacency[v] if w in strong_supports) == 1
    )
    weak_leaves = leaves - strong_leaves
    semi_supports = frozenset(
        v for v in range(n)
        if v not in supports and v not in leaves
        and any(w in supports for w in adjacency[v])
    )
    nss = frozenset(
        v for v in range(n)
        if v not in semi_supports and v not in supports
        and any(w in semi_supports for w in adjacency[v])
    )
    return VertexClassification(
        leaves=leaves,
        supports=supports,
        strong_supports=strong_supports,
        strong_leaves=strong_leaves,
        weak_leaves=weak_leaves,
        semi_supports=semi_supports,
        nss=nss,
    )


# ---------------------------------------------------------------------------
# Grafo subdivisão
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubdivisionMap:
    """S(T) e a correspondência aresta -> vértice v^{i,j}"""

    graph: Tree
    original_ids: frozenset
    edge_vertex: Mapping[Tuple[int, int], int]

    def midpoint(self, i: int, j: int) -> int:
        """Vértice v^{i,j} (= v^{j,i})"""
        return self.edge_vertex[(i, j) if i < j else (j, i)]

    def images(self, vertices: Iterable[int]) -> frozenset:
        """Imagens de vértices originais em S(T)"""
        images = frozenset(vertices)
        missing = images - self.original_ids
        if missing:
            raise VertexOutOfRangeError(missing, len(self.original_ids))
        return images


def subdivide(t: Tree) -> SubdivisionMap:
    """Subdivide cada aresta exatamente uma vez; originais mantêm seus ids"""
    n = t.vertex_count
    if n < 2:
        raise TrivialTreeError("A subdivisão exige uma árvore não trivial")

    size = 2 * n - 1
    lists: List[List[int]] = [list() for _ in range(size)]
    edge_vertex: Dict[Tuple[int, int], int] = {}
    labels = dict(t.labels) if t.labels else None
    for index, (u, v) in enumerate(t.edges()):
        m = n + index
        lists[u].append(m)
        lists[v].append(m)
        lists[m] = [u, v]
        edge_vertex[(u, v)] = m
        if labels is not None:
            labels[m] = f"v^{{{t.name(u)},{t.name(v)}}}"

    # os midpoints são anexados em ordem crescente, então as listas já estão ordenadas
    graph = Tree(tuple(tuple(nbrs) for nbrs in lists), labels)
    return SubdivisionMap(graph=graph, original_ids=frozenset(range(n)), edge_vertex=edge_vertex)


# ---------------------------------------------------------------------------
# Árvores enraizadas, caminho diametral e subárvores
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootedView:
    """Orientação da árvore a partir de uma raiz"""

    root: int
    parent: Tuple[Optional[int], ...]
    depth: Tuple[int, ...]
    order: Tuple[int, ...]

    def children(self, t: Tree, v: int) -> List[int]:
        return [w for w in t.adjacency[v] if self.parent[w] == v]

    def descendants(self, t: Tree, v: int) -> List[int]:
        """D(v): vértices cujo caminho até a raiz passa por v"""
        result: List[int] = []
        stack = self.children(t, v)
        while stack:
            w = stack.pop()
            result.append(w)
            stack.extend(self.children(t, w))
        return sorted(result)


def rooted_view(t: Tree, root: int) -> RootedView:
    t.check_vertices([root])
    dist, parent, order = _bfs(t, root)
    parents = tuple(None if v == root else parent[v] for v in range(t.vertex_count))
    return RootedView(root=root, parent=parents, depth=tuple(dist), order=tuple(order))


@dataclass(frozen=True)
class DiametralPath:
    vertices: Tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.vertices) - 1


def diametral_path(t: Tree) -> DiametralPath:
    """
    Caminho mais longo com desempate determinístico: o par de extremos (a, b)
    lexicograficamente menor entre todos os pares à distância d
    """
    if t.vertex_count < 2:
        raise TrivialTreeError("Caminho diametral exige n >= 2")

    dist0, _, _ = _bfs(t, 0)
    x = _first_farthest(dist0)
    dist_x, _, _ = _bfs(t, x)
    y = _first_farthest(dist_x)
    dist_y, _, _ = _bfs(t, y)
    d = dist_x[y]

    # em árvores, ecc(v) = max(dist(v, x), dist(v, y)) para extremos x, y de um diâmetro
    a = next(v for v in range(t.vertex_count) if max(dist_x[v], dist_y[v]) == d)
    dist_a, parent_a, _ = _bfs(t, a)
    b = _first_farthest(dist_a)

    path = [b]
    while path[-1] != a:
        path.append(parent_a[path[-1]])
    path.reverse()
    return DiametralPath(vertices=tuple(path))


def _first_farthest(dist: Sequence[int]) -> int:
    far = max(dist)
    return dist.index(far)


class Subtree(NamedTuple):
    """Subárvore induzida e o mapa id antigo -> id novo"""

    tree: Tree
    mapping: Dict[int, int]


def _induced(t: Tree, keep: Sequence[int]) -> Subtree:
    mapping = {old: new for new, old in enumerate(keep)}
    lists = [
        tuple(mapping[w] for w in t.adjacency[old] if w in mapping)
        for old in keep
    ]
    labels = None
    if t.labels:
        labels = {new: t.name(old) for old, new in mapping.items()}
    return Subtree(Tree(tuple(lists), labels), mapping)


def maximal_subtree(rv: RootedView, t: Tree, v: int) -> Subtree:
    """T_v: subárvore induzida por D(v) ∪ {v}"""
    t.check_vertices([v])
    if v == rv.root:
        raise RootVertexError(f"A subárvore maximal não está definida na raiz {t.name(v)}")
    keep = sorted([v] + rv.descendants(t, v))
    return _induced(t, keep)


def remove_vertices(t: Tree, s: Iterable[int]) -> Subtree:
    """T - S com reindexação densa; falha se o resultado for vazio ou desconexo"""
    removed = set(s)
    t.check_vertices(removed)
    keep = [v for v in range(t.vertex_count) if v not in removed]
    if not keep:
        raise EmptyGraphError("A remoção deixa o grafo vazio")
    try:
        return _induced(t, keep)
    except DisconnectedError as e:
        raise DisconnectedError(f"A remoção desconecta a árvore: {e}") from e
