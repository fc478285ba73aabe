import pytest

from src.errors import FormatError
from src.formats import (
    decode_graph6,
    encode_graph6,
    load_graph,
    parse_edge_list,
    write_edge_list,
)
from src.graph import Tree, as_tree, path_tree


class TestEdgeList:
    """Testes para o formato de lista de arestas"""

    def test_comments_and_blank_lines(self):
        """Testa se comentários e linhas em branco são ignorados"""
        g = parse_edge_list("# caminho\n\n0 1  # primeira\n1 2\n")
        assert g.vertex_count == 3
        assert list(g.edges()) == [(0, 1), (1, 2)]
        assert g.labels is None

    def test_labeled_vertices(self):
        """Testa rótulos não numéricos"""
        g = parse_edge_list("raiz a\na b\n")
        assert g.vertex_count == 3
        assert g.name(0) == "raiz"
        assert g.name(2) == "b"

    def test_unicode_digit_is_a_label(self):
        """Testa que dígitos não ASCII viram rótulos em vez de ids"""
        g = parse_edge_list("0 1\n1 ²\n")
        assert g.vertex_count == 3
        assert g.name(2) == "²"
        assert as_tree(g).vertex_count == 3

    def test_single_vertex_line(self):
        """Testa a declaração de vértice isolado"""
        g = parse_edge_list("0\n")
        assert as_tree(g).vertex_count == 1

    def test_too_many_tokens(self):
        """Testa erro com o número da linha"""
        with pytest.raises(FormatError) as e:
            parse_edge_list("0 1\n1 2 3\n")
        assert e.value.unit == "linha"
        assert e.value.offset == 2

    def test_self_loop_line(self):
        """Testa laço reportado pela linha"""
        with pytest.raises(FormatError, match="linha 3"):
            parse_edge_list("0 1\n# nada\n1 1\n")

    def test_duplicate_edge(self):
        """Testa aresta duplicada"""
        with pytest.raises(FormatError, match="linha 2"):
            parse_edge_list("0 1\n1 0\n")

    def test_empty_input(self):
        """Testa entrada vazia"""
        with pytest.raises(FormatError):
            parse_edge_list("# só comentário\n")

    def test_writer_output(self, figure_tree):
        """Testa o texto produzido pelo escritor"""
        text = write_edge_list(figure_tree)
        assert text.splitlines()[0] == "# n=7"
        assert parse_edge_list(text).adjacency == figure_tree.adjacency

    def test_read_from_file(self, figure_edge_file, figure_tree):
        """Testa leitura de arquivo"""
        g = load_graph(str(figure_edge_file), "edgelist")
        assert g.adjacency == figure_tree.adjacency


class TestGraph6:
    """Testes para o formato graph6"""

    def test_decode_k2(self):
        """Testa a decodificação de K2"""
        assert list(decode_graph6("A_").edges()) == [(0, 1)]

    def test_decode_p3_with_header(self):
        """Testa a decodificação com cabeçalho opcional"""
        g = decode_graph6(">>graph6<<Bg\n")
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_encode_known_strings(self):
        """Testa a codificação de K2 e P3"""
        assert encode_graph6(path_tree(2)) == "A_"
        assert encode_graph6(path_tree(3)) == "Bg"

    def test_decode_encode_figure_tree(self, figure_tree):
        """Testa a codificação da árvore de exemplo"""
        code = encode_graph6(figure_tree)
        assert decode_graph6(code).adjacency == figure_tree.adjacency

    def test_invalid_byte_offset(self):
        """Testa o deslocamento de byte inválido"""
        with pytest.raises(FormatError) as e:
            decode_graph6("B!")
        assert e.value.unit == "byte"
        assert e.value.offset == 1

    def test_wrong_length(self):
        """Testa comprimento incorreto"""
        with pytest.raises(FormatError, match="Comprimento"):
            decode_graph6("Bgg")

    def test_empty_string(self):
        """Testa string vazia"""
        with pytest.raises(FormatError):
            decode_graph6("")

    def test_load_inline_string(self):
        """Testa string graph6 passada diretamente"""
        assert as_tree(load_graph("Bg", "graph6")) == path_tree(3)

    def test_load_from_file(self, tmp_path):
        """Testa arquivo graph6"""
        path = tmp_path / "p3.g6"
        path.write_text("Bg\n", encoding="ascii")
        assert isinstance(as_tree(load_graph(str(path), "graph6")), Tree)

    def test_unknown_format(self):
        """Testa formato desconhecido"""
        with pytest.raises(ValueError):
            load_graph("Bg", "sparse6")
