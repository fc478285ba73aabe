"""
Comando para reconhecer pertinência às famílias inferior e superior
"""

import logging
from typing import Any, Dict

from src.families import recognize_arith, recognize_structural, script_to_json

from .base_command import INPUT_ERRORS, BaseCommand

logger = logging.getLogger(__name__)


class RecognizeCommand(BaseCommand):
    """Reconhecer pertinência com roteiro de construção"""

    def get_description(self) -> str:
        return "Reconhecer pertinência à família com roteiro replicável"

    def execute(self, **kwargs) -> Dict[str, Any]:
        family = kwargs.get('family')
        try:
            tree = self.load_tree(kwargs['source'], kwargs.get('fmt', 'edgelist'))
            member = recognize_arith(tree, family)
            trace = recognize_structural(tree, family)
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao reconhecer: {e}")

        if trace.accepted != member:
            logger.warning("Redutor estrutural divergiu do teste aritmético (%s)", trace.rejection)

        family_name = trace.family.value
        if member:
            self.emit(f"✅ A árvore pertence à família {family_name}")
        else:
            self.emit(f"❌ A árvore não pertence à família {family_name}")
        if trace.accepted:
            self.emit(f"🔍 Roteiro ({len(trace.steps)} passos a partir de P2):")
            for step in trace.steps:
                extra = f", r={step.r}" if step.r is not None else ""
                self.emit(f"   {step.kind.value} em {step.site}{extra}")
            self.emit(script_to_json(trace.script))
        elif trace.rejection:
            self.emit(f"   Motivo: {trace.rejection}")

        return {
            "success": True,
            "member": member,
            **trace.as_dict(),
        }
