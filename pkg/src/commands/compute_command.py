"""
Comando para calcular γ_t^oi da árvore e da subdivisão
"""

from typing import Any, Dict

from src.families import membership
from src.graph import subdivide
from src.solver import bounds, gamma_tree_dp

from .base_command import INPUT_ERRORS, BaseCommand


def _bound_line(name: str, numerator: int, attained: bool) -> str:
    if numerator % 3:
        return f"   Cota {name}: {numerator}/3 (não inteira, inatingível)"
    status = "✅ atingida" if attained else "❌ não atingida"
    return f"   Cota {name}: {numerator // 3} ({status})"


class ComputeCommand(BaseCommand):
    """Calcular γ_t^oi(T), γ_t^oi(S(T)) e as cotas"""

    def get_description(self) -> str:
        return "Calcular γ_t^oi(T), γ_t^oi(S(T)) e as cotas"

    def execute(self, **kwargs) -> Dict[str, Any]:
        try:
            tree = self.load_tree(kwargs['source'], kwargs.get('fmt', 'edgelist'))
            tree_solution = gamma_tree_dp(tree)
            sub = subdivide(tree)
            sub_solution = gamma_tree_dp(sub.graph)
            report = bounds(tree)
            signature = membership(tree)
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao calcular: {e}")

        self.emit(f"🌳 Árvore: n={report.n}, l={report.l}, s={report.s}")
        self.emit(f"📊 γ_t^oi(T) = {tree_solution.value}")
        self.emit(f"📊 γ_t^oi(S(T)) = {sub_solution.value}")
        self.emit(_bound_line("inferior", report.lower_num, report.attains_lower))
        self.emit(_bound_line("superior", report.upper_num, report.attains_upper))
        witness = ", ".join(sub.graph.name(v) for v in sorted(sub_solution.witness))
        self.emit(f"🔍 Testemunha em S(T): {{{witness}}}")

        return {
            "success": True,
            "gamma_tree": tree_solution.value,
            "gamma_subdivision": sub_solution.value,
            "witness_tree": sorted(tree_solution.witness),
            "witness_subdivision": sorted(sub_solution.witness),
            "membership": signature.value,
            **report.as_dict(),
        }
