"""
Cálculo exato do número de dominação total outer-independente
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional

from .config import Config
from .errors import InfeasibleError, SizeCapExceededError, TrivialTreeError
from .graph import Graph, Tree, _bfs, as_tree, classify, subdivide

logger = logging.getLogger(__name__)

INF = math.inf


class Method(str, Enum):
    BRUTE_FORCE = "brute_force"
    TREE_DP = "tree_dp"


@dataclass(frozen=True)
class ToidSolution:
    """Valor ótimo e um conjunto testemunha"""

    value: int
    witness: FrozenSet[int]
    method: Method
    forced: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.witness) != self.value:
            raise ValueError("O tamanho da testemunha difere do valor")
        if not self.forced <= self.witness:
            raise ValueError("A testemunha não contém o conjunto forçado")

    def as_dict(self) -> Dict[str, object]:
        return {
            "value": self.value,
            "witness": sorted(self.witness),
            "method": self.method.value,
            "forced": sorted(self.forced),
        }


@dataclass(frozen=True)
class BoundReport:
    """Numeradores inteiros das cotas e o valor em S(T)"""

    n: int
    l: int
    s: int
    lower_num: int
    upper_num: int
    gamma: int

    @property
    def attains_lower(self) -> bool:
        return 3 * self.gamma == self.lower_num

    @property
    def attains_upper(self) -> bool:
        return 3 * self.gamma == self.upper_num

    @property
    def sandwich_holds(self) -> bool:
        return self.lower_num <= 3 * self.gamma <= self.upper_num

    def as_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "l": self.l,
            "s": self.s,
            "lower_num": self.lower_num,
            "upper_num": self.upper_num,
            "gamma": self.gamma,
            "attains_lower": self.attains_lower,
            "attains_upper": self.attains_upper,
        }


def is_toids(g: Graph, d: Iterable[int]) -> bool:
    """
    Verifica se D é um conjunto dominante total outer-independente

    Todo vértice precisa de um vizinho em D e V - D precisa ser independente.
    """
    members = frozenset(d)
    g.check_vertices(members)
    for v, nbrs in enumerate(g.adjacency):
        if not any(w in members for w in nbrs):
            return False
    for u, v in g.edges():
        if u not in members and v not in members:
            return False
    return True


def gamma_brute(g: Graph, forced: Iterable[int] = frozenset(), cap: Optional[int] = None) -> ToidSolution:
    """
    Oráculo de força bruta: busca em cardinalidade crescente

    Args:
        g: Grafo (não precisa ser árvore)
        forced: Vértices que devem pertencer ao conjunto
        cap: Limite de vértices (padrão: Config.BRUTE_FORCE_CAP)

    Returns:
        ToidSolution com a testemunha lexicograficamente mínima
    """
    forced = frozenset(forced)
    limit = Config.BRUTE_FORCE_CAP if cap is None else cap
    n = g.vertex_count
    if n > limit:
        raise SizeCapExceededError(f"Força bruta limitada a {limit} vértices (n={n})")
    g.check_vertices(forced)

    adjacency = g.adjacency
    if any(len(nbrs) == 0 for nbrs in adjacency):
        raise InfeasibleError("Vértice isolado não pode ser dominado totalmente")

    neighbor_mask = [0] * n
    for v, nbrs in enumerate(adjacency):
        for w in nbrs:
            neighbor_mask[v] |= 1 << w

    # o vizinho de uma folha está em todo conjunto dominante total
    required = set(forced)
    for v, nbrs in enumerate(adjacency):
        if len(nbrs) == 1:
            required.add(nbrs[0])
    required_mask = 0
    for v in required:
        required_mask |= 1 << v
    free = [v for v in range(n) if v not in required]
    full = (1 << n) - 1

    def valid(mask: int) -> bool:
        outside = full & ~mask
        for v in range(n):
            nb = neighbor_mask[v]
            if not nb & mask:
                return False
            if (outside >> v) & 1 and nb & outside:
                return False
        return True

    for k in range(len(free) + 1):
        for combo in combinations(free, k):
            mask = required_mask
            for v in combo:
                mask |= 1 << v
            if valid(mask):
                witness = frozenset(required) | frozenset(combo)
                logger.debug("Força bruta: n=%d valor=%d", n, len(witness))
                return ToidSolution(len(witness), witness, Method.BRUTE_FORCE, forced)

    raise InfeasibleError(f"Nenhum TOIDS contém o conjunto forçado {sorted(forced)}")


# Estados da programação dinâmica
_IN_FREE, _IN_DOM, _OUT_DOM, _OUT_FREE = range(4)


def gamma_tree_dp(t: Tree, forced: Iterable[int] = frozenset()) -> ToidSolution:
    """
    Programação dinâmica linear em árvores

    Estados por vértice v (na subárvore de v):
      A: v em D sem filho em D (o pai precisa estar em D)
      B: v em D com algum filho em D
      C: v fora de D; todos os filhos em D e dominados abaixo
      Z: v fora de D sem filhos (o pai precisa estar em D)
    Vértices forçados não admitem C nem Z.
    """
    forced = frozenset(forced)
    n = t.vertex_count
    if n < 2:
        raise TrivialTreeError("γ não está definido para a árvore trivial")
    t.check_vertices(forced)

    adjacency = t.adjacency
    _, parent, order = _bfs(t, 0)

    a = [0.0] * n
    b = [0.0] * n
    c = [0.0] * n
    z = [0.0] * n

    for v in reversed(order):
        p = parent[v]
        sum_out = 0.0
        sum_any = 0.0
        sum_b = 0.0
        best_gain = INF
        has_child = False
        for w in adjacency[v]:
            if w == p:
                continue
            has_child = True
            aw, bw, cw, zw = a[w], b[w], c[w], z[w]
            sum_out += cw if cw < zw else zw
            best_in = aw if aw < bw else bw
            best_any = min(best_in, cw, zw)
            sum_any += best_any
            sum_b += bw
            gain = best_in - best_any
            if gain < best_gain:
                best_gain = gain

        a[v] = 1 + sum_out
        if has_child:
            b[v] = 1 + sum_any + best_gain
            c[v] = sum_b
            z[v] = INF
        else:
            b[v] = INF
            c[v] = INF
            z[v] = 0.0
        if v in forced:
            c[v] = INF
            z[v] = INF

    root = order[0]
    best = min(b[root], c[root])
    if best == INF:
        raise InfeasibleError(f"Nenhum TOIDS contém o conjunto forçado {sorted(forced)}")

    state = [_OUT_FREE] * n
    state[root] = _IN_DOM if b[root] <= c[root] else _OUT_DOM
    witness: List[int] = []
    for v in order:
        sv = state[v]
        p = parent[v]
        if sv == _IN_FREE:
            witness.append(v)
            for w in adjacency[v]:
                if w != p:
                    state[w] = _OUT_DOM if c[w] <= z[w] else _OUT_FREE
        elif sv == _IN_DOM:
            witness.append(v)
            chosen_in = False
            pick = -1
            pick_gain = INF
            for w in adjacency[v]:
                if w == p:
                    continue
                aw, bw, cw, zw = a[w], b[w], c[w], z[w]
                best_in = aw if aw <= bw else bw
                best_out = cw if cw <= zw else zw
                if best_in <= best_out:
                    state[w] = _IN_FREE if aw <= bw else _IN_DOM
                    chosen_in = True
                else:
                    state[w] = _OUT_DOM if cw <= zw else _OUT_FREE
                    if best_in - best_out < pick_gain:
                        pick, pick_gain = w, best_in - best_out
            if not chosen_in:
                state[pick] = _IN_FREE if a[pick] <= b[pick] else _IN_DOM
        elif sv == _OUT_DOM:
            for w in adjacency[v]:
                if w != p:
                    state[w] = _IN_DOM

    value = int(best)
    logger.debug("DP em árvore: n=%d valor=%d", n, value)
    return ToidSolution(value, frozenset(witness), Method.TREE_DP, forced)


def gamma(t: Tree) -> int:
    """γ_t^oi da árvore"""
    return gamma_tree_dp(as_tree(t)).value


def bounds(t: Tree) -> BoundReport:
    """Avalia as cotas inferior e superior para γ_t^oi(S(T))"""
    t = as_tree(t)
    classes = classify(t)
    n, l, s = t.vertex_count, classes.l_count, classes.s_count
    value = gamma_tree_dp(subdivide(t).graph).value
    return BoundReport(
        n=n,
        l=l,
        s=s,
        lower_num=4 * n - l - s,
        upper_num=4 * n - l + s - 2,
        gamma=value,
    )
