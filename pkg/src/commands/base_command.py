"""
Classe base para todos os comandos da CLI
Implementa o Command Pattern
"""

from abc import ABC, abstractmethod
from typing import Any, Dict

from src.errors import ToidError
from src.formats import load_graph
from src.graph import Tree, as_tree


class BaseCommand(ABC):
    """Classe base abstrata para todos os comandos"""

    def __init__(self, json_output: bool = False):
        self.json_output = json_output

    @abstractmethod
    def execute(self, **kwargs) -> Dict[str, Any]:
        """
        Executa o comando

        Returns:
            Dicionário com resultado da execução
        """
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Retorna descrição do comando"""
        pass

    def emit(self, text: str = "") -> None:
        """Imprime saída humana (suprimida com --json)"""
        if not self.json_output:
            print(text)

    def load_tree(self, source: str, fmt: str) -> Tree:
        return as_tree(load_graph(source, fmt))

    def failure(self, message: str, exit_code: int = 2) -> Dict[str, Any]:
        self.emit(f"❌ {message}")
        return {
            "success": False,
            "error": message,
            "exit_code": exit_code,
        }


# Erros de entrada e validação (código de saída 2); ValidationError do pydantic é um ValueError
INPUT_ERRORS = (ToidError, ValueError, OSError)
