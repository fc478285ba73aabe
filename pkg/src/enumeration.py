"""
Enumeração exaustiva de árvores livres não rotuladas e formas canônicas
"""

import logging
from itertools import product
from typing import Dict, Iterator, List, Set, Tuple, Union

import networkx as nx

from .errors import TrivialTreeError
from .graph import Tree, _bfs, as_tree
from .families import Membership, membership

logger = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 16

CanonicalForm = Tuple[int, ...]


def _centroids(t: Tree) -> List[int]:
    n = t.vertex_count
    _, parent, order = _bfs(t, 0)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    result = []
    for v in range(n):
        heaviest = n - size[v]
        for w in t.adjacency[v]:
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if 2 * heaviest <= n:
            result.append(v)
    return result


def _rooted_level_sequence(t: Tree, root: int) -> CanonicalForm:
    _, parent, order = _bfs(t, root)
    codes: Dict[int, CanonicalForm] = {}
    for v in reversed(order):
        child_codes = sorted(
            (codes.pop(w) for w in t.adjacency[v] if parent[w] == v),
            reverse=True,
        )
        code = [0]
        for child in child_codes:
            code.extend(level + 1 for level in child)
        codes[v] = tuple(code)
    return codes[root]


def canonical_form(t: Tree) -> CanonicalForm:
    """
    Sequência de níveis da raiz centroide

    Filhos ordenados pela subsequência canônica decrescente; com dois
    centroides vale a maior das duas sequências.
    """
    t = as_tree(t)
    return max(_rooted_level_sequence(t, c) for c in _centroids(t))


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"Ordem fora do intervalo 1..{MAX_ENUMERATION_ORDER}: {n}")


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """
    Cada árvore livre com n vértices exatamente uma vez

    A geração usa o algoritmo de sequências de níveis do networkx; a ordem
    de saída é a das formas canônicas decrescentes.
    """
    _check_order(n)
    if n == 1:
        yield Tree(((),))
        return
    if n == 2:
        yield Tree.from_edges(2, [(0, 1)])
        return
    trees = [Tree.from_networkx(g) for g in nx.nonisomorphic_trees(n)]
    keyed = sorted(((canonical_form(t), t) for t in trees), key=lambda item: item[0], reverse=True)
    logger.debug("n=%d: %d árvores livres", n, len(keyed))
    for _, t in keyed:
        yield t


def _partitions(total: int, parts: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Partições de total em no máximo `parts` partes não crescentes"""
    if total == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _arrangements(remaining: List[int], length: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for label, left in enumerate(remaining):
        if left:
            remaining[label] -= 1
            for rest in _arrangements(remaining, length - 1):
                yield (label,) + rest
            remaining[label] += 1


def _degree_ordered_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Sequências de Prüfer em que a multiplicidade dos rótulos não cresce

    Reindexar qualquer árvore por grau decrescente produz uma sequência
    desse tipo (o rótulo v aparece grau(v) - 1 vezes), logo toda classe de
    isomorfismo continua representada.
    """
    for counts in _partitions(n - 2, n, n - 2):
        yield from _arrangements(list(counts), n - 2)


def prufer_free_tree_forms(n: int, exhaustive: bool = False) -> Set[CanonicalForm]:
    """
    Oráculo independente: sequências de Prüfer deduplicadas pela forma canônica

    Args:
        n: Ordem das árvores
        exhaustive: Percorre todas as n^(n-2) sequências em vez de apenas as
            ordenadas por grau
    """
    _check_order(n)
    if n == 1:
        return {(0,)}
    if n == 2:
        return {canonical_form(Tree.from_edges(2, [(0, 1)]))}
    sequences = product(range(n), repeat=n - 2) if exhaustive else _degree_ordered_sequences(n)
    forms: Set[CanonicalForm] = set()
    decoded = 0
    for sequence in sequences:
        forms.add(canonical_form(Tree.from_networkx(nx.from_prufer_sequence(list(sequence)))))
        decoded += 1
    logger.debug("n=%d: %d sequências de Prüfer, %d formas", n, decoded, len(forms))
    return forms


def find_members(n: int, which: Union[Membership, str]) -> List[Tree]:
    """
    Árvores com n vértices com a assinatura de pertinência pedida

    `lower` e `upper` incluem as árvores que atingem as duas cotas; `both`
    e `neither` são exatos.
    """
    which = Membership(which)
    if n < 2:
        raise TrivialTreeError("Pertinência definida apenas para n >= 2")
    result = []
    for t in enumerate_free_trees(n):
        signature = membership(t)
        if which == Membership.LOWER:
            selected = signature in (Membership.LOWER, Membership.BOTH)
        elif which == Membership.UPPER:
            selected = signature in (Membership.UPPER, Membership.BOTH)
        else:
            selected = signature == which
        if selected:
            result.append(t)
    return result
