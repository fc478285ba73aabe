import importlib
import os
from unittest.mock import patch

import src.config
from src.config import Config


class TestConfig:
    """Testes para a configuração"""

    def test_defaults_are_valid(self):
        """Testa se os valores padrão passam na validação"""
        assert Config.validate_config() is True

    def test_invalid_sweep_order(self, capsys):
        """Testa validação com ordem máxima fora do intervalo"""
        with patch.object(Config, "SWEEP_MAX_N", 40):
            assert Config.validate_config() is False
        out = capsys.readouterr().out
        assert "❌" in out
        assert "TOID_SWEEP_MAX_N" in out

    def test_invalid_workers(self):
        """Testa validação com número de processos inválido"""
        with patch.object(Config, "SWEEP_WORKERS", 0):
            assert Config.validate_config() is False

    def test_reads_environment(self):
        """Testa a leitura das variáveis de ambiente"""
        with patch.dict(os.environ, {"TOID_SWEEP_MAX_N": "9", "TOID_REPORT_PATH": "saida/r.json"}):
            reloaded = importlib.reload(src.config)
            assert reloaded.Config.SWEEP_MAX_N == 9
            assert reloaded.Config.REPORT_PATH == "saida/r.json"
        importlib.reload(src.config)

    def test_configure_logging(self):
        """Testa o nível de log configurado"""
        with patch("src.config.logging.basicConfig") as mock_basic:
            Config.configure_logging("debug")
            assert mock_basic.call_args.kwargs["level"] == "DEBUG"
