"""
Hierarquia de exceções do pacote de dominação total outer-independente
"""

from typing import Iterable, Optional


class ToidError(Exception):
    """Erro base de todas as operações do pacote"""


class InvalidGraphError(ToidError, ValueError):
    """Adjacência inválida (assimétrica, laço ou vizinho duplicado)"""


class InvalidTreeError(InvalidGraphError):
    """O grafo não é uma árvore (ciclo ou número de arestas incorreto)"""


class DisconnectedError(InvalidTreeError):
    """O grafo (ou o resultado de uma remoção) é desconexo"""


class EmptyGraphError(InvalidTreeError):
    """O grafo não tem vértices"""


class TrivialTreeError(ToidError, ValueError):
    """A operação exige uma árvore não trivial (n >= 2)"""


class VertexOutOfRangeError(ToidError, ValueError):
    """Identificador de vértice fora de V"""

    def __init__(self, vertices: Iterable[int], vertex_count: int):
        self.vertices = sorted(vertices)
        self.vertex_count = vertex_count
        super().__init__(
            f"Vértices fora do intervalo 0..{vertex_count - 1}: {self.vertices}"
        )


class RootVertexError(ToidError, ValueError):
    """A subárvore maximal não está definida na raiz"""


class InfeasibleError(ToidError):
    """Nenhum TOIDS contém o conjunto forçado"""


class SizeCapExceededError(ToidError):
    """O grafo excede o limite da força bruta"""


class ClassViolationError(ToidError, ValueError):
    """O sítio de uma operação não pertence à classe exigida"""

    def __init__(self, kind: str, site: int, demanded: str, detail: Optional[str] = None):
        self.kind = kind
        self.site = site
        self.demanded = demanded
        message = f"{kind}: o vértice {site} não pertence a {demanded}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class EmptyLegalClassError(ToidError):
    """Nenhum vértice legal para a operação pedida"""


class PreconditionError(ToidError):
    """Pré-condição de um lema não satisfeita"""


class ExcludedTreeError(PreconditionError):
    """A árvore é explicitamente excluída pelo enunciado (P5)"""


class BoundNotAttainedError(PreconditionError):
    """A árvore não atinge a cota exigida"""


class StrongLeavesPresentError(PreconditionError):
    """A árvore possui folhas fortes"""


class FormatError(ToidError, ValueError):
    """Entrada malformada (lista de arestas ou graph6)"""

    def __init__(self, message: str, unit: str, offset: int):
        self.unit = unit
        self.offset = offset
        super().__init__(f"{message} ({unit} {offset})")


class ReportWriteError(ToidError):
    """Falha de E/S ao persistir um relatório"""
