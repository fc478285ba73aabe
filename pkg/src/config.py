import logging
import os
from dotenv import load_dotenv

# Carregar variáveis de ambiente
load_dotenv()


class Config:
    """Configurações do solver e da varredura de verificação"""

    # Força bruta
    BRUTE_FORCE_CAP = int(os.getenv("TOID_BRUTE_FORCE_CAP", "24"))
    ORACLE_SUBDIVISION_CAP = int(os.getenv("TOID_ORACLE_SUBDIVISION_CAP", "19"))

    # Varredura
    SWEEP_MAX_N = int(os.getenv("TOID_SWEEP_MAX_N", "12"))
    SWEEP_WORKERS = int(os.getenv("TOID_SWEEP_WORKERS", "1"))
    SWEEP_SEED = int(os.getenv("TOID_SWEEP_SEED", "0"))
    LEMMA2_SITES = int(os.getenv("TOID_LEMMA2_SITES", "3"))
    REPORT_PATH = os.getenv("TOID_REPORT_PATH", "reports/sweep.json")

    # Logs
    LOG_LEVEL = os.getenv("TOID_LOG_LEVEL", "WARNING")

    @classmethod
    def validate_config(cls) -> bool:
        """Valida se todas as configurações estão dentro dos intervalos aceitos"""
        checks = {
            "TOID_BRUTE_FORCE_CAP": 2 <= cls.BRUTE_FORCE_CAP <= 30,
            "TOID_ORACLE_SUBDIVISION_CAP": cls.ORACLE_SUBDIVISION_CAP >= 3,
            "TOID_SWEEP_MAX_N": 2 <= cls.SWEEP_MAX_N <= 16,
            "TOID_SWEEP_WORKERS": cls.SWEEP_WORKERS >= 1,
            "TOID_LEMMA2_SITES": cls.LEMMA2_SITES >= 1,
        }

        invalid_vars = [name for name, ok in checks.items() if not ok]

        if invalid_vars:
            print("❌ Variáveis de ambiente inválidas:")
            for var in invalid_vars:
                print(f"   - {var}")
            return False

        return True

    @classmethod
    def configure_logging(cls, level: str = None) -> None:
        """Configura o logging raiz no nível configurado"""
        logging.basicConfig(
            level=(level or cls.LOG_LEVEL).upper(),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
