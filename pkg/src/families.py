"""
Famílias construtivas de árvores que atingem as cotas inferior e superior

As operações F1-F3 constroem a família inferior e O1-O3 a superior, sempre a
partir de P2. O reconhecimento aritmético é a autoridade; o redutor estrutural
produz um roteiro de construção que serve de certificado.
"""

import heapq
import json
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import (
    BoundNotAttainedError,
    ClassViolationError,
    EmptyLegalClassError,
    ExcludedTreeError,
    StrongLeavesPresentError,
    TrivialTreeError,
)
from .graph import Tree, as_tree, classify, diametral_path, path_tree, rooted_view, subdivide
from .solver import bounds, gamma_tree_dp

logger = logging.getLogger(__name__)


class Family(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


class Membership(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"
    NEITHER = "neither"


class OperationKind(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"

    @property
    def family(self) -> Family:
        return Family.LOWER if self.value.startswith("F") else Family.UPPER


FAMILY_KINDS = {
    Family.LOWER: (OperationKind.F1, OperationKind.F2, OperationKind.F3),
    Family.UPPER: (OperationKind.O1, OperationKind.O2, OperationKind.O3),
}

DEMANDED_CLASS = {
    OperationKind.F1: "S",
    OperationKind.O1: "S",
    OperationKind.F2: "S ∪ SS",
    OperationKind.F3: "L_w",
    OperationKind.O2: "S ∪ L_w",
    OperationKind.O3: "L_w",
}


class OperationStep(BaseModel):
    """Uma operação de construção; site=None pede um sorteio no gerador"""

    model_config = ConfigDict(frozen=True)

    kind: OperationKind
    site: Optional[int] = Field(default=None, ge=0)
    r: Optional[int] = None

    @model_validator(mode="after")
    def check_r(self):
        if self.kind == OperationKind.O3:
            if self.r is None or self.r < 2:
                raise ValueError("O3 exige r >= 2")
        elif self.r is not None:
            raise ValueError(f"{self.kind.value} não aceita o parâmetro r")
        return self


class OperationScript(BaseModel):
    """Roteiro serializável: base P2 e a lista de operações"""

    model_config = ConfigDict(frozen=True)

    base: str = Field(default="P2", pattern="^P2$")
    steps: List[OperationStep] = Field(default_factory=list)


def script_to_json(script: OperationScript) -> str:
    return script.model_dump_json(exclude_none=True)


def script_from_json(text: str) -> OperationScript:
    return OperationScript.model_validate_json(text)


@dataclass(frozen=True)
class ReductionTrace:
    """Resultado do redutor estrutural"""

    family: Family
    accepted: bool
    steps: Tuple[OperationStep, ...] = ()
    rejection: Optional[str] = None
    vertex_map: Dict[int, int] = field(default_factory=dict)
    base: str = "P2"

    @property
    def script(self) -> OperationScript:
        return OperationScript(base=self.base, steps=list(self.steps))

    def as_dict(self) -> Dict[str, object]:
        return {
            "family": self.family.value,
            "accepted": self.accepted,
            "rejection": self.rejection,
            "script": json.loads(script_to_json(self.script)),
            "vertex_map": {str(k): v for k, v in sorted(self.vertex_map.items())},
        }


@dataclass(frozen=True)
class QGadget:
    tree: Tree
    central: int
    r: int


@dataclass(frozen=True)
class GeneratedMember:
    tree: Tree
    script: OperationScript
    family: Optional[Family]


def build_q(r: int) -> QGadget:
    """Q_r: centro 0 e r caminhos 3i-2, 3i-1, 3i"""
    if r < 2:
        raise ValueError("Q_r exige r >= 2")
    edges = []
    for i in range(1, r + 1):
        edges += [(0, 3 * i - 2), (3 * i - 2, 3 * i - 1), (3 * i - 1, 3 * i)]
    return QGadget(tree=Tree.from_edges(3 * r + 1, edges), central=0, r=r)


# ---------------------------------------------------------------------------
# Construção
# ---------------------------------------------------------------------------

class _GrowingTree:
    """Árvore que só cresce; predicados de classe calculados localmente"""

    def __init__(self, t: Tree):
        self.adjacency: List[List[int]] = [list(nbrs) for nbrs in t.adjacency]
        self.labels = dict(t.labels) if t.labels else None

    @property
    def size(self) -> int:
        return len(self.adjacency)

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    def leaf_count(self, v: int) -> int:
        return sum(1 for w in self.adjacency[v] if len(self.adjacency[w]) == 1)

    def is_support(self, v: int) -> bool:
        return self.leaf_count(v) >= 1

    def is_weak_leaf(self, v: int) -> bool:
        return self.is_leaf(v) and self.leaf_count(self.adjacency[v][0]) < 2

    def is_semi_support(self, v: int) -> bool:
        if self.is_leaf(v) or self.is_support(v):
            return False
        return any(self.is_support(w) for w in self.adjacency[v])

    def is_legal(self, kind: OperationKind, v: int) -> bool:
        if self.size == 2:
            # qualquer rotulação de P2 vale, exceto F3 (que produziria P5)
            return kind != OperationKind.F3
        if kind in (OperationKind.F1, OperationKind.O1):
            return self.is_support(v)
        if kind == OperationKind.F2:
            return self.is_support(v) or self.is_semi_support(v)
        if kind in (OperationKind.F3, OperationKind.O3):
            return self.is_weak_leaf(v)
        return self.is_support(v) or self.is_weak_leaf(v)

    def check(self, step: OperationStep) -> None:
        if step.site is None:
            raise ValueError(f"{step.kind.value} sem vértice de aplicação")
        if not 0 <= step.site < self.size:
            raise ClassViolationError(step.kind.value, step.site, DEMANDED_CLASS[step.kind],
                                      "vértice inexistente")
        if not self.is_legal(step.kind, step.site):
            raise ClassViolationError(step.kind.value, step.site, DEMANDED_CLASS[step.kind])

    def _attach_path(self, v: int, length: int) -> None:
        previous = v
        for _ in range(length):
            x = len(self.adjacency)
            self.adjacency.append([previous])
            self.adjacency[previous].append(x)
            previous = x

    def apply(self, step: OperationStep) -> None:
        self.check(step)
        v = step.site
        kind = step.kind
        if kind in (OperationKind.F1, OperationKind.O1):
            self._attach_path(v, 1)
        elif kind == OperationKind.F2:
            self._attach_path(v, 2)
        elif kind in (OperationKind.F3, OperationKind.O2):
            self._attach_path(v, 3)
        else:
            # o centro de Q_r é identificado com a folha fraca v
            for _ in range(step.r):
                self._attach_path(v, 3)

    def draw_site(self, kind: OperationKind, rng: random.Random, probes: int = 32) -> int:
        """Sorteio uniforme na classe legal: rejeição e depois varredura completa"""
        n = self.size
        for _ in range(probes):
            v = rng.randrange(n)
            if self.is_legal(kind, v):
                return v
        legal = [v for v in range(n) if self.is_legal(kind, v)]
        if not legal:
            raise EmptyLegalClassError(f"Nenhum vértice legal para {kind.value} (n={n})")
        return rng.choice(legal)

    def to_tree(self) -> Tree:
        return Tree(tuple(tuple(sorted(nbrs)) for nbrs in self.adjacency), self.labels)


def apply_step(t: Tree, step: OperationStep) -> Tree:
    """
    Aplica uma operação F/O à árvore

    Args:
        t: Árvore com n >= 2
        step: Operação com vértice de aplicação definido

    Returns:
        A árvore aumentada; os novos vértices recebem os ids seguintes

    Raises:
        ClassViolationError: se o vértice não pertence à classe exigida
    """
    t = as_tree(t)
    if t.vertex_count < 2:
        raise TrivialTreeError("As operações exigem n >= 2")
    builder = _GrowingTree(t)
    builder.apply(step)
    return builder.to_tree()


def legal_sites(t: Tree, kind: Union[OperationKind, str]) -> List[int]:
    """Vértices da classe exigida pela operação, em ordem crescente"""
    kind = OperationKind(kind)
    t = as_tree(t)
    if t.vertex_count < 2:
        raise TrivialTreeError("As operações exigem n >= 2")
    builder = _GrowingTree(t)
    return [v for v in range(t.vertex_count) if builder.is_legal(kind, v)]


def _script_family(steps: Sequence[OperationStep]) -> Optional[Family]:
    families = {step.kind.family for step in steps}
    if len(families) > 1:
        raise ValueError("Um roteiro não pode misturar operações F e O")
    return families.pop() if families else None


def generate(steps: Union[OperationScript, Sequence[OperationStep]],
             seed: Optional[int] = None) -> GeneratedMember:
    """
    Constrói um membro da família a partir de P2

    Vértices omitidos (site=None) são sorteados uniformemente na classe legal
    com um gerador semeado.
    """
    if isinstance(steps, OperationScript):
        steps = steps.steps
    family = _script_family(steps)
    rng = random.Random(seed)
    builder = _GrowingTree(path_tree(2))
    realized: List[OperationStep] = []
    for step in steps:
        if step.site is None:
            step = step.model_copy(update={"site": builder.draw_site(step.kind, rng)})
        builder.apply(step)
        realized.append(step)
    return GeneratedMember(builder.to_tree(), OperationScript(steps=realized), family)


def random_member(family: Union[Family, str], steps: int, seed: Optional[int] = None,
                  r_choices: Sequence[int] = (2, 3, 4)) -> GeneratedMember:
    """Membro aleatório com `steps` operações sorteadas da família"""
    family = Family(family)
    rng = random.Random(seed)
    builder = _GrowingTree(path_tree(2))
    realized: List[OperationStep] = []
    for _ in range(steps):
        kinds = list(FAMILY_KINDS[family])
        rng.shuffle(kinds)
        for kind in kinds:
            try:
                site = builder.draw_site(kind, rng)
            except EmptyLegalClassError:
                continue
            r = rng.choice(list(r_choices)) if kind == OperationKind.O3 else None
            step = OperationStep(kind=kind, site=site, r=r)
            builder.apply(step)
            realized.append(step)
            break
        else:
            raise EmptyLegalClassError(f"Nenhuma operação de {family.value} aplicável")
    return GeneratedMember(builder.to_tree(), OperationScript(steps=realized), family)


def replay(trace: Union[ReductionTrace, OperationScript]) -> Tree:
    """Reconstrói a árvore aplicando o roteiro a partir de P2"""
    script = trace.script if isinstance(trace, ReductionTrace) else trace
    if any(step.site is None for step in script.steps):
        raise ValueError("O roteiro precisa de todos os vértices de aplicação")
    return generate(script).tree


# ---------------------------------------------------------------------------
# Reconhecimento
# ---------------------------------------------------------------------------

def recognize_arith(t: Tree, which: Union[Family, str]) -> bool:
    """Pertinência pela igualdade na cota (teste autoritativo)"""
    family = Family(which)
    t = as_tree(t)
    if t.vertex_count < 2:
        raise TrivialTreeError("Pertinência definida apenas para n >= 2")
    classes = classify(t)
    n, l, s = t.vertex_count, classes.l_count, classes.s_count
    numerator = 4 * n - l - s if family == Family.LOWER else 4 * n - l + s - 2
    if numerator % 3:
        return False
    return 3 * gamma_tree_dp(subdivide(t).graph).value == numerator


def membership(t: Tree) -> Membership:
    """Assinatura de pertinência às duas famílias"""
    report = bounds(t)
    if report.attains_lower and report.attains_upper:
        return Membership.BOTH
    if report.attains_lower:
        return Membership.LOWER
    if report.attains_upper:
        return Membership.UPPER
    return Membership.NEITHER


class _Reject(Exception):
    pass


class _Workspace:
    """Cópia mutável da árvore enraizada para remoções de baixo para cima"""

    def __init__(self, t: Tree, root: int):
        n = t.vertex_count
        rv = rooted_view(t, root)
        self.root = root
        self.parent = rv.parent
        self.depth = rv.depth
        self.adjacency: List[Set[int]] = [set(nbrs) for nbrs in t.adjacency]
        self.size = n
        self.leaf_count = [
            sum(1 for w in nbrs if len(t.adjacency[w]) == 1) for nbrs in t.adjacency
        ]
        self.strong: Set[int] = {v for v in range(n) if self.leaf_count[v] >= 2}
        self.buckets: Dict[int, List[int]] = {}
        for v in range(n):
            if len(t.adjacency[v]) == 1:
                self.buckets.setdefault(self.depth[v], []).append(v)
        for heap in self.buckets.values():
            heapq.heapify(heap)
        self.max_depth = max(self.buckets)

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    def only_neighbor(self, v: int) -> int:
        return next(iter(self.adjacency[v]))

    def is_support(self, v: int) -> bool:
        return self.leaf_count[v] >= 1

    def is_weak_leaf(self, v: int) -> bool:
        return self.is_leaf(v) and self.leaf_count[self.only_neighbor(v)] < 2

    def is_strong_leaf(self, v: int) -> bool:
        return self.is_leaf(v) and self.leaf_count[self.only_neighbor(v)] >= 2

    def is_semi_support(self, v: int) -> bool:
        if self.is_leaf(v) or self.is_support(v):
            return False
        return any(self.leaf_count[w] >= 1 for w in self.adjacency[v])

    def is_nss(self, v: int) -> bool:
        if self.is_support(v) or self.is_semi_support(v):
            return False
        return any(self.is_semi_support(w) for w in self.adjacency[v])

    def children(self, v: int) -> List[int]:
        return sorted(w for w in self.adjacency[v] if w != self.parent[v])

    def _set_strong(self, v: int) -> None:
        if self.leaf_count[v] >= 2:
            self.strong.add(v)
        else:
            self.strong.discard(v)

    def remove_leaf(self, x: int) -> None:
        p = self.only_neighbor(x)
        self.adjacency[p].discard(x)
        self.adjacency[x].clear()
        self.size -= 1
        self.strong.discard(x)
        self.leaf_count[p] -= 1
        self._set_strong(p)
        if len(self.adjacency[p]) == 1:
            q = self.only_neighbor(p)
            self.leaf_count[q] += 1
            self._set_strong(q)
            heapq.heappush(self.buckets.setdefault(self.depth[p], []), p)

    def deepest_leaf(self) -> int:
        while True:
            heap = self.buckets.get(self.max_depth, [])
            while heap and not self.is_leaf(heap[0]):
                heapq.heappop(heap)
            if heap:
                return heap[0]
            self.max_depth -= 1

    def strong_leaf(self) -> Tuple[int, int]:
        support = next(iter(self.strong))
        for w in self.adjacency[support]:
            if w != self.root and self.is_leaf(w):
                return support, w
        raise _Reject("suporte forte sem folha removível")

    def alive(self) -> List[int]:
        return [v for v, nbrs in enumerate(self.adjacency) if nbrs]


# Um passo da redução: (tipo, vértice, vértices adicionados na ordem de construção, r)
_Reduction = Tuple[OperationKind, int, Tuple[int, ...], Optional[int]]


def _reduce_lower(ws: _Workspace) -> List[_Reduction]:
    reductions: List[_Reduction] = []
    while ws.size > 4:
        v1 = ws.deepest_leaf()
        v2 = ws.parent[v1]
        v3 = ws.parent[v2]
        if len(ws.adjacency[v2]) >= 3:
            ws.remove_leaf(v1)
            if not ws.is_support(v2):
                raise _Reject(f"F1: {v2} não é suporte após a remoção")
            reductions.append((OperationKind.F1, v2, (v1,), None))
        elif len(ws.adjacency[v3]) >= 3:
            ws.remove_leaf(v1)
            ws.remove_leaf(v2)
            if not (ws.is_support(v3) or ws.is_semi_support(v3)):
                raise _Reject(f"F2: {v3} não pertence a S ∪ SS")
            reductions.append((OperationKind.F2, v3, (v2, v1), None))
        else:
            v4 = ws.parent[v3]
            for v in (v1, v2, v3):
                ws.remove_leaf(v)
            if ws.size == 2:
                raise _Reject("a redução chega a P5, que não pertence à família inferior")
            if not ws.is_weak_leaf(v4):
                raise _Reject(f"F3: {v4} não é folha fraca após remover o caminho")
            reductions.append((OperationKind.F3, v4, (v3, v2, v1), None))
        logger.debug("Redução inferior: %s", reductions[-1])
    return reductions


def _q_branches(ws: _Workspace, center: int) -> List[Tuple[int, int, int]]:
    branches = []
    for c in ws.children(center):
        c_children = ws.children(c)
        if len(ws.adjacency[c]) != 2 or len(c_children) != 1:
            raise _Reject(f"O3: ramo em {c} não é um caminho de três vértices")
        c2 = c_children[0]
        c2_children = ws.children(c2)
        if len(ws.adjacency[c2]) != 2 or len(c2_children) != 1:
            raise _Reject(f"O3: ramo em {c} não é um caminho de três vértices")
        c3 = c2_children[0]
        if not ws.is_leaf(c3):
            raise _Reject(f"O3: ramo em {c} não termina em folha")
        branches.append((c, c2, c3))
    return branches


def _reduce_upper(ws: _Workspace) -> List[_Reduction]:
    reductions: List[_Reduction] = []
    while ws.size > 4:
        if ws.strong:
            support, leaf = ws.strong_leaf()
            ws.remove_leaf(leaf)
            reductions.append((OperationKind.O1, support, (leaf,), None))
            logger.debug("Redução superior: %s", reductions[-1])
            continue

        v1 = ws.deepest_leaf()
        v2 = ws.parent[v1]
        v3 = ws.parent[v2]
        v4 = ws.parent[v3] if v3 is not None else None
        if v4 is None:
            raise _Reject("caminho a partir da folha mais profunda curto demais")
        if len(ws.adjacency[v3]) >= 3:
            raise _Reject(f"grau de {v3} >= 3 sem folhas fortes")

        for v in (v1, v2, v3):
            ws.remove_leaf(v)

        if ws.size == 2 or ws.is_support(v4) or ws.is_weak_leaf(v4):
            reductions.append((OperationKind.O2, v4, (v3, v2, v1), None))
        elif ws.is_nss(v4):
            others = _q_branches(ws, v4)
            branches = sorted(others + [(v3, v2, v1)])
            for c, c2, c3 in others:
                for v in (c3, c2, c):
                    ws.remove_leaf(v)
            if not (ws.size == 2 or ws.is_weak_leaf(v4)):
                raise _Reject(f"O3: {v4} não é folha fraca após remover Q_r")
            added = tuple(v for branch in branches for v in branch)
            reductions.append((OperationKind.O3, v4, added, len(branches)))
        elif ws.is_strong_leaf(v4):
            raise _Reject(f"{v4} é folha forte após remover o caminho")
        else:
            raise _Reject(f"{v4} é semi-suporte após remover o caminho")
        logger.debug("Redução superior: %s", reductions[-1])
    return reductions


def _base_case(ws: _Workspace, family: Family,
               reductions: List[_Reduction]) -> Tuple[Tuple[int, int], List[_Reduction]]:
    """Resolve P2, P3, K_{1,3} e P4; retorna a base e os passos de construção"""
    alive = ws.alive()
    if len(alive) == 2:
        u, v = alive
        if reductions:
            kind, site = reductions[-1][0], reductions[-1][1]
            other = v if site == u else u
            # suporte na posição 0 e folha na posição 1 de P2
            if kind in (OperationKind.O2, OperationKind.O3):
                return (other, site), []
            return (site, other), []
        return (u, v), []

    center_kind = OperationKind.F1 if family == Family.LOWER else OperationKind.O1
    degrees = {v: len(ws.adjacency[v]) for v in alive}
    if len(alive) == 3:
        c = next(v for v in alive if degrees[v] == 2)
        x, y = sorted(ws.adjacency[c])
        return (c, x), [(center_kind, c, (y,), None)]

    hub = [v for v in alive if degrees[v] == 3]
    if hub:
        c = hub[0]
        x, y, z = sorted(ws.adjacency[c])
        return (c, x), [(center_kind, c, (y,), None), (center_kind, c, (z,), None)]

    if family == Family.UPPER:
        raise _Reject("P4 não pertence à família superior")
    a = min(v for v in alive if degrees[v] == 1)
    b = ws.only_neighbor(a)
    c = next(w for w in ws.adjacency[b] if w != a)
    d = next(w for w in ws.adjacency[c] if w != b)
    return (b, a), [(OperationKind.F2, b, (c, d), None)]


def recognize_structural(t: Tree, which: Union[Family, str]) -> ReductionTrace:
    """
    Redutor estrutural com certificado de construção

    A árvore é enraizada na extremidade final do caminho diametral e o
    redutor processa sempre uma folha de profundidade máxima. Rejeição é um
    valor (accepted=False com o motivo), não uma exceção.
    """
    family = Family(which)
    t = as_tree(t)
    if t.vertex_count < 2:
        raise TrivialTreeError("Pertinência definida apenas para n >= 2")

    root = diametral_path(t).vertices[-1]
    ws = _Workspace(t, root)
    try:
        reductions = _reduce_lower(ws) if family == Family.LOWER else _reduce_upper(ws)
        base, base_steps = _base_case(ws, family, reductions)
    except _Reject as e:
        logger.debug("Rejeitado (%s): %s", family.value, e)
        return ReductionTrace(family=family, accepted=False, rejection=str(e))

    construction = base_steps + list(reversed(reductions))
    order = list(base)
    for _, _, added, _ in construction:
        order.extend(added)
    vertex_map = {v: i for i, v in enumerate(order)}
    steps = tuple(
        OperationStep(kind=kind, site=vertex_map[site], r=r)
        for kind, site, _, r in construction
    )
    return ReductionTrace(family=family, accepted=True, steps=steps, vertex_map=vertex_map)


def _is_path(t: Tree) -> bool:
    return all(len(nbrs) <= 2 for nbrs in t.adjacency)


def lemma3_check(t: Tree) -> bool:
    """
    Todo semi-suporte tem exatamente um vizinho suporte

    Pré-condições, verificadas nesta ordem: T não é P5, T atinge a cota
    superior e T não tem folhas fortes.
    """
    t = as_tree(t)
    if t.vertex_count < 2:
        raise TrivialTreeError("Classes de vértices não definidas para a árvore trivial")
    if t.vertex_count == 5 and _is_path(t):
        raise ExcludedTreeError("P5 é excluída")
    if not recognize_arith(t, Family.UPPER):
        raise BoundNotAttainedError("A árvore não atinge a cota superior")
    classes = classify(t)
    if classes.strong_leaves:
        raise StrongLeavesPresentError(
            f"Folhas fortes presentes: {sorted(classes.strong_leaves)}"
        )
    return all(
        sum(1 for w in t.adjacency[v] if w in classes.supports) == 1
        for v in classes.semi_supports
    )
