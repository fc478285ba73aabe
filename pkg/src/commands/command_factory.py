"""
Factory para criação de comandos
Implementa o Factory Pattern
"""

from typing import Dict, Type

from .base_command import BaseCommand
from .classify_command import ClassifyCommand
from .compute_command import ComputeCommand
from .generate_command import GenerateCommand
from .members_command import MembersCommand
from .recognize_command import RecognizeCommand
from .subdivide_command import SubdivideCommand
from .verify_command import VerifyCommand


class CommandFactory:
    """Factory para criação de comandos"""

    def __init__(self):
        self._commands: Dict[str, Type[BaseCommand]] = {
            'compute': ComputeCommand,
            'classify': ClassifyCommand,
            'subdivide': SubdivideCommand,
            'recognize': RecognizeCommand,
            'generate': GenerateCommand,
            'verify': VerifyCommand,
            'members': MembersCommand,
        }

    def create_command(self, command_name: str, json_output: bool = False) -> BaseCommand:
        """
        Cria um comando baseado no nome

        Args:
            command_name: Nome do comando
            json_output: Emitir um único documento JSON em vez de texto

        Returns:
            Instância do comando

        Raises:
            ValueError: Se o comando não existir
        """
        command_class = self._commands.get(command_name.lower())

        if not command_class:
            available_commands = ', '.join(self._commands.keys())
            raise ValueError(f"Comando '{command_name}' não encontrado. Comandos disponíveis: {available_commands}")

        return command_class(json_output)

    def get_available_commands(self) -> Dict[str, str]:
        """
        Retorna lista de comandos disponíveis

        Returns:
            Dicionário com nome e descrição dos comandos
        """
        return {
            name: command_class().get_description()
            for name, command_class in self._commands.items()
        }

