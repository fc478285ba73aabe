"""
Comando para gerar membros das famílias
"""

import json
from pathlib import Path
from typing import Any, Dict

from src.families import generate, random_member, script_from_json, script_to_json
from src.formats import encode_graph6, write_edge_list

from .base_command import INPUT_ERRORS, BaseCommand


class GenerateCommand(BaseCommand):
    """Gerar um membro aleatório ou replicar um roteiro"""

    def get_description(self) -> str:
        return "Gerar um membro da família a partir de P2"

    def execute(self, **kwargs) -> Dict[str, Any]:
        fmt = kwargs.get('fmt', 'edgelist')
        output = kwargs.get('output')
        seed = kwargs.get('seed')
        try:
            if kwargs.get('script'):
                script = script_from_json(Path(kwargs['script']).read_text(encoding="utf-8"))
                member = generate(script, seed=seed)
            else:
                member = random_member(kwargs['family'], kwargs['steps'], seed=seed)
            tree = member.tree
            text = encode_graph6(tree) + "\n" if fmt == 'graph6' else write_edge_list(tree)
            if output:
                Path(output).write_text(text, encoding="utf-8")
        except INPUT_ERRORS as e:
            return self.failure(f"Erro ao gerar: {e}")

        family = member.family.value if member.family else "both"
        self.emit(f"🌳 Membro gerado ({family}) com {tree.vertex_count} vértices")
        if output:
            self.emit(f"✅ Árvore gravada em {output}")
        else:
            self.emit(text.rstrip("\n"))
        self.emit(f"🔍 Roteiro: {script_to_json(member.script)}")

        return {
            "success": True,
            "family": family,
            "vertex_count": tree.vertex_count,
            "edges": [list(edge) for edge in tree.edges()],
            "graph6": encode_graph6(tree),
            "script": json.loads(script_to_json(member.script)),
            "output": output,
        }
