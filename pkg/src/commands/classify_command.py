"""
Comando para classificar os vértices da árvore
"""

from typing import Any, Dict

from src.graph import classify

from .base_command import INPUT_ERRORS, BaseCommand

CLASS_TITLES = (
    ("leaves", "Folhas (L)"),
    ("supports", "Suportes (S)"),
    ("strong_supports", "Suportes fortes (S_s)"),
    ("strong_leaves", "Folhas fortes (L_s)"),
    ("weak_leaves", "Folhas fracas (L_w)"),
    ("semi_supports", "Semi-suportes (SS)"),
    ("nss", "Vizinhos de semi-suportes (N_SS)"),
)


class ClassifyCommand(BaseCommand):
    """Classificar os vértices da árvore"""

    def get_description(self) -> str:
        return "Classificar os vértices da árvore"

    def execute(self, **kwargs) -> Dict[str, Any]:
        try:
            tree = self.load_tree(kwargs['source'], kwargs.get('fmt', 'edgelist'))
            classes = classify(tree, kwargs.get('p2_support'))
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao classificar: {e}")

        data = classes.as_dict()
        self.emit(f"🌳 Árvore com {tree.vertex_count} vértices: l={classes.l_count}, s={classes.s_count}")
        for key, title in CLASS_TITLES:
            names = ", ".join(tree.name(v) for v in data[key])
            self.emit(f"   {title}: {{{names}}}")

        return {"success": True, **data}
