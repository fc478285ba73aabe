#!/usr/bin/env python3
"""
Dominação total outer-independente em árvores e em seus grafos subdivisão
Interface de linha de comando
"""

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

# Adicionar o diretório pai ao path para imports relativos
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

try:
    from src.config import Config
    from src.commands.command_factory import CommandFactory
    from src.families import Family, Membership
except ImportError:
    # Fallback para imports relativos quando executado como módulo
    from .config import Config
    from .commands.command_factory import CommandFactory
    from .families import Family, Membership

INPUT_COMMANDS = {"compute", "classify", "subdivide", "recognize"}


class CliConfig(BaseModel):
    """Argumentos validados da linha de comando"""

    command: Literal["compute", "classify", "subdivide", "recognize", "generate", "verify", "members"]
    input: Optional[str] = None
    format: Literal["edgelist", "graph6"] = "edgelist"
    family: Optional[Family] = None
    max_n: Optional[int] = Field(default=None, ge=2, le=16)
    seed: Optional[int] = None
    workers: Optional[int] = Field(default=None, ge=1)
    output: Optional[str] = None
    json_output: bool = False
    steps: Optional[int] = Field(default=None, ge=0)
    script: Optional[str] = None
    order: Optional[int] = Field(default=None, ge=2, le=16)
    which: Optional[Membership] = None
    csv: Optional[str] = None
    p2_support: Optional[int] = Field(default=None, ge=0, le=1)

    @model_validator(mode="after")
    def check_command_flags(self):
        if self.command in INPUT_COMMANDS and not self.input:
            raise ValueError(f"--input é obrigatório para '{self.command}'")
        if self.command == "recognize" and self.family is None:
            raise ValueError("--family é obrigatório para 'recognize'")
        if self.command == "generate":
            if (self.steps is None) == (self.script is None):
                raise ValueError("'generate' exige exatamente um de --steps ou --script")
            if self.steps is not None and self.family is None:
                raise ValueError("--steps exige --family")
            if self.script is not None and self.family is not None:
                raise ValueError("--family e --script são mutuamente exclusivos")
        if self.command == "members" and (self.order is None or self.which is None):
            raise ValueError("'members' exige --order e --which")
        return self

    def command_params(self) -> Dict[str, Any]:
        """Parâmetros passados ao comando"""
        if self.command in INPUT_COMMANDS:
            params = {'source': self.input, 'fmt': self.format}
            if self.command == 'recognize':
                params['family'] = self.family.value
            elif self.command == 'subdivide':
                params['output'] = self.output
            elif self.command == 'classify':
                params['p2_support'] = self.p2_support
            return params
        if self.command == 'generate':
            return {
                'family': self.family.value if self.family else None,
                'steps': self.steps,
                'script': self.script,
                'seed': self.seed,
                'fmt': self.format,
                'output': self.output,
            }
        if self.command == 'verify':
            return {
                'max_n': self.max_n,
                'workers': self.workers,
                'seed': self.seed,
                'output': self.output,
                'csv': self.csv,
            }
        return {'order': self.order, 'which': self.which.value}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Dominação total outer-independente em árvores e grafos subdivisão",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemplos de uso:
  # Calcular γ_t^oi(T), γ_t^oi(S(T)) e as cotas
  python src/main.py compute --input arvore.txt

  # Reconhecer pertinência à família superior com roteiro
  python src/main.py recognize --input Dh_ --format graph6 --family upper

  # Gerar um membro aleatório da família inferior
  python src/main.py generate --family lower --steps 10 --seed 7

  # Verificar todas as árvores até n = 10
  python src/main.py verify --max-n 10
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', dest='json_output', action='store_true',
                        help='Emitir um único documento JSON')

    tree_input = argparse.ArgumentParser(add_help=False)
    tree_input.add_argument('--input', help='Arquivo de entrada ou string graph6')
    tree_input.add_argument('--format', choices=['edgelist', 'graph6'], default='edgelist',
                            help='Formato da entrada (padrão: edgelist)')

    subparsers = parser.add_subparsers(dest='command', help='Comandos disponíveis')

    subparsers.add_parser('compute', parents=[common, tree_input],
                          help='Calcular γ_t^oi e as cotas')

    classify_parser = subparsers.add_parser('classify', parents=[common, tree_input],
                                            help='Classificar os vértices')
    classify_parser.add_argument('--p2-support', type=int, help='Vértice de P2 tratado como suporte')

    subdivide_parser = subparsers.add_parser('subdivide', parents=[common, tree_input],
                                             help='Construir S(T)')
    subdivide_parser.add_argument('--output', help='Arquivo de saída para S(T)')

    recognize_parser = subparsers.add_parser('recognize', parents=[common, tree_input],
                                             help='Reconhecer pertinência à família')
    recognize_parser.add_argument('--family', choices=['lower', 'upper'])

    generate_parser = subparsers.add_parser('generate', parents=[common],
                                            help='Gerar um membro da família')
    generate_parser.add_argument('--family', choices=['lower', 'upper'])
    generate_parser.add_argument('--steps', type=int, help='Número de operações sorteadas')
    generate_parser.add_argument('--script', help='Roteiro JSON a replicar')
    generate_parser.add_argument('--seed', type=int)
    generate_parser.add_argument('--format', choices=['edgelist', 'graph6'], default='edgelist')
    generate_parser.add_argument('--output', help='Arquivo de saída para a árvore')

    verify_parser = subparsers.add_parser('verify', parents=[common],
                                          help='Executar a varredura de verificação')
    verify_parser.add_argument('--max-n', type=int, help=f'Ordem máxima (padrão: {Config.SWEEP_MAX_N})')
    verify_parser.add_argument('--workers', type=int, help='Processos paralelos')
    verify_parser.add_argument('--seed', type=int)
    verify_parser.add_argument('--output', help=f'Relatório JSON (padrão: {Config.REPORT_PATH})')
    verify_parser.add_argument('--csv', help='Tabela CSV por ordem')

    members_parser = subparsers.add_parser('members', parents=[common],
                                           help='Listar árvores por pertinência')
    members_parser.add_argument('--order', type=int)
    members_parser.add_argument('--which', choices=['lower', 'upper', 'both', 'neither'])

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal da interface de linha de comando"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    try:
        cli = CliConfig(**{k: v for k, v in vars(args).items() if v is not None})
    except ValidationError as e:
        messages = [error["msg"] for error in e.errors()]
        if getattr(args, 'json_output', False):
            print(json.dumps({"success": False, "error": messages}, ensure_ascii=False))
        else:
            for message in messages:
                print(f"❌ {message}")
        return 2

    Config.configure_logging()
    if not Config.validate_config():
        print("❌ Configurações inválidas. Verifique o arquivo .env")
        return 2

    try:
        command = CommandFactory().create_command(cli.command, cli.json_output)
        result = command.execute(**cli.command_params())
    except KeyboardInterrupt:
        print("\n👋 Encerrando...")
        return 0

    if cli.json_output:
        print(json.dumps(result, ensure_ascii=False, indent=2))

    if result.get('success'):
        return 0
    return result.get('exit_code', 2)


if __name__ == "__main__":
    sys.exit(main())
