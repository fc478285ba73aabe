"""
Comando para listar as árvores de uma ordem com uma assinatura de pertinência
"""

from typing import Any, Dict

from src.enumeration import find_members
from src.formats import encode_graph6

from .base_command import INPUT_ERRORS, BaseCommand


class MembersCommand(BaseCommand):
    """Listar árvores de ordem n por assinatura de pertinência"""

    def get_description(self) -> str:
        return "Listar as árvores de ordem n que atingem as cotas pedidas"

    def execute(self, **kwargs) -> Dict[str, Any]:
        order = kwargs.get('order')
        which = kwargs.get('which')
        try:
            trees = find_members(order, which)
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao listar membros: {e}")

        codes = [encode_graph6(t) for t in trees]
        self.emit(f"🌳 {len(trees)} árvores com n={order} ({which})")
        for code in codes:
            self.emit(f"   {code}")

        return {
            "success": True,
            "order": order,
            "which": str(which),
            "count": len(trees),
            "graph6": codes,
        }
