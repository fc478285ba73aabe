"""
Comando para construir o grafo subdivisão S(T)
"""

from pathlib import Path
from typing import Any, Dict

from src.formats import encode_graph6, write_edge_list
from src.graph import subdivide

from .base_command import INPUT_ERRORS, BaseCommand


class SubdivideCommand(BaseCommand):
    """Construir S(T) e a tabela v^{i,j}"""

    def get_description(self) -> str:
        return "Construir o grafo subdivisão S(T)"

    def execute(self, **kwargs) -> Dict[str, Any]:
        fmt = kwargs.get('fmt', 'edgelist')
        output = kwargs.get('output')
        try:
            tree = self.load_tree(kwargs['source'], fmt)
            sub = subdivide(tree)
            if fmt == 'graph6':
                text = encode_graph6(sub.graph) + "\n"
            else:
                text = write_edge_list(sub.graph)
            if output:
                Path(output).write_text(text, encoding="utf-8")
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao subdividir: {e}")

        table = [
            {"i": i, "j": j, "vertex": m}
            for (i, j), m in sorted(sub.edge_vertex.items())
        ]
        if output:
            self.emit(f"✅ S(T) gravado em {output} ({sub.graph.vertex_count} vértices)")
        else:
            self.emit(text.rstrip("\n"))
        self.emit("🔍 Vértices de subdivisão:")
        for row in table:
            self.emit(f"   v^{{{tree.name(row['i'])},{tree.name(row['j'])}}} = {row['vertex']}")

        return {
            "success": True,
            "vertex_count": sub.graph.vertex_count,
            "edges": [list(edge) for edge in sub.graph.edges()],
            "edge_vertex": table,
            "output": output,
        }
