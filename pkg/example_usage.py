#!/usr/bin/env python3
"""
Exemplo de uso da biblioteca de dominação total outer-independente
Este arquivo demonstra como usar o solver e as famílias programaticamente
"""

from src.config import Config
from src.enumeration import find_members
from src.families import (
    Family,
    OperationScript,
    OperationStep,
    generate,
    random_member,
    recognize_structural,
    replay,
    script_to_json,
)
from src.formats import encode_graph6
from src.graph import Tree, classify, subdivide
from src.solver import bounds, gamma_tree_dp
from src.sweep import SweepConfig, run_sweep


def main():
    """Exemplo completo de uso da biblioteca"""

    print("🚀 Dominação Total Outer-Independente - Exemplo de Uso")
    print("=" * 50)

    if not Config.validate_config():
        print("❌ Configurações inválidas. Verifique o arquivo .env")
        return

    # Exemplo 1: árvore de 7 vértices com dois suportes fortes
    tree = Tree.from_edges(7, [(1, 0), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)])
    classes = classify(tree)
    print(f"\n🌳 Suportes: {sorted(classes.supports)}, semi-suportes: {sorted(classes.semi_supports)}")

    sub = subdivide(tree)
    solution = gamma_tree_dp(sub.graph)
    print(f"📊 γ_t^oi(S(T)) = {solution.value}, testemunha {sorted(solution.witness)}")

    report = bounds(tree)
    print(f"📊 Cotas: {report.lower_num}/3 <= {solution.value} <= {report.upper_num}/3")

    # Exemplo 2: roteiro de construção e replay
    trace = recognize_structural(tree, Family.UPPER)
    if trace.accepted:
        print(f"\n🔍 Roteiro: {script_to_json(trace.script)}")
        print(f"✅ Replay com {replay(trace).vertex_count} vértices")

    # Exemplo 3: gerar membros
    script = OperationScript(steps=[OperationStep(kind="O2", site=1), OperationStep(kind="O3", site=4, r=2)])
    member = generate(script)
    print(f"\n🎲 Membro por roteiro: {encode_graph6(member.tree)}")
    member = random_member(Family.LOWER, steps=8, seed=42)
    print(f"🎲 Membro aleatório da família inferior: {member.tree.vertex_count} vértices")

    # Exemplo 4: árvores de ordem 6 nas duas famílias
    both = find_members(6, "both")
    print(f"\n📊 Árvores com n=6 nas duas famílias: {[encode_graph6(t) for t in both]}")

    # Exemplo 5: varredura pequena
    sweep = run_sweep(SweepConfig(max_n=7, progress=False))
    status = "✅" if sweep.ok else "❌"
    print(f"\n{status} Varredura até n=7: {sweep.total_trees} árvores, "
          f"{len(sweep.counterexamples)} contraexemplos")


if __name__ == "__main__":
    main()
