"""
Leitura e escrita de árvores: lista de arestas e graph6
"""

import logging
import os
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from .errors import FormatError
from .graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_VERTICES = 2 ** 18


def parse_edge_list(text: str) -> Graph:
    """
    Interpreta o formato de lista de arestas

    Cada linha contém um par "u v"; `#` inicia um comentário e linhas em
    branco são ignoradas. Uma linha com um único token declara um vértice
    isolado (útil para a árvore trivial). Se todos os tokens forem inteiros
    não negativos eles são os próprios ids; caso contrário cada token é um
    rótulo e recebe um id na ordem de primeira aparição.

    Args:
        text: Conteúdo do arquivo

    Returns:
        Graph com os vértices e arestas lidos
    """
    rows: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise FormatError(f"Esperado 'u v', encontrado {len(tokens)} tokens", "linha", lineno)
        rows.append((lineno, tokens))

    if not rows:
        raise FormatError("Lista de arestas vazia", "linha", 0)

    numeric = all(token.isascii() and token.isdigit() for _, tokens in rows for token in tokens)
    index: Dict[str, int] = {}
    labels: Optional[Dict[int, str]] = None if numeric else {}

    def vertex_id(token: str) -> int:
        if numeric:
            return int(token)
        if token not in index:
            index[token] = len(index)
            labels[index[token]] = token
        return index[token]

    edges = set()
    edge_list: List[Tuple[int, int]] = []
    vertex_count = 0
    for lineno, tokens in rows:
        ids = [vertex_id(token) for token in tokens]
        vertex_count = max(vertex_count, max(ids) + 1)
        if len(ids) == 1:
            continue
        u, v = ids
        if u == v:
            raise FormatError(f"Laço no vértice {tokens[0]}", "linha", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(f"Aresta duplicada {tokens[0]} {tokens[1]}", "linha", lineno)
        edges.add(key)
        edge_list.append(key)

    return Graph.from_edges(vertex_count, edge_list, labels)


def read_edge_list(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: Optional[Union[str, Path]] = None) -> str:
    """
    Serializa o grafo como lista de arestas (ids 0-based)

    Args:
        g: Grafo a serializar
        path: Se informado, grava também no arquivo

    Returns:
        Texto da lista de arestas
    """
    lines = [f"# n={g.vertex_count}"]
    if g.vertex_count == 1:
        lines.append("0")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _graph6_size(data: bytes) -> Tuple[int, int]:
    """Lê N(n) e retorna (n, bytes consumidos)"""
    if not data:
        raise FormatError("graph6 vazio", "byte", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("Cabeçalho de tamanho graph6 truncado", "byte", len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("Cabeçalho de tamanho graph6 truncado", "byte", len(data))
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def decode_graph6(text: Union[str, bytes]) -> Graph:
    """
    Decodifica uma string graph6 (com ou sem o cabeçalho >>graph6<<)

    Raises:
        FormatError: com o deslocamento do byte inválido
    """
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]

    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"Byte inválido {byte!r} em graph6", "byte", offset)

    n, consumed = _graph6_size(data)
    if n > GRAPH6_MAX_VERTICES:
        raise FormatError(f"graph6 com {n} vértices excede o limite", "byte", 0)
    expected = consumed + (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise FormatError(
            f"Comprimento graph6 incorreto: esperado {expected} bytes, obtido {len(data)}",
            "byte", min(len(data), expected),
        )

    return Graph.from_networkx(nx.from_graph6_bytes(data))


def encode_graph6(g: Graph) -> str:
    """Codifica o grafo em graph6, sem cabeçalho e sem quebra de linha"""
    if g.vertex_count > GRAPH6_MAX_VERTICES:
        raise ValueError(f"graph6 suporta até {GRAPH6_MAX_VERTICES} vértices")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def load_graph(source: str, fmt: str = "edgelist") -> Graph:
    """
    Carrega um grafo a partir de um caminho ou de uma string graph6 inline

    Args:
        source: Caminho do arquivo (ou string graph6 quando fmt == "graph6")
        fmt: "edgelist" ou "graph6"
    """
    if fmt == "edgelist":
        logger.debug("Lendo lista de arestas de %s", source)
        return read_edge_list(source)
    if fmt == "graph6":
        if os.path.isfile(source):
            logger.debug("Lendo graph6 de %s", source)
            lines = [line for line in Path(source).read_text(encoding="ascii").splitlines()
                     if line.strip()]
            if not lines:
                raise FormatError("Arquivo graph6 vazio", "byte", 0)
            return decode_graph6(lines[0])
        return decode_graph6(source)
    raise ValueError(f"Formato desconhecido: {fmt}")
