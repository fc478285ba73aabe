"""
Comando para executar a varredura de verificação
"""

from typing import Any, Dict

from src.config import Config
from src.sweep import REFUTED_CHECKS, SweepConfig, run_sweep

from .base_command import INPUT_ERRORS, BaseCommand


class VerifyCommand(BaseCommand):
    """Verificar cotas, caracterizações e lemas em todas as árvores pequenas"""

    def get_description(self) -> str:
        return "Executar a varredura de verificação"

    def execute(self, **kwargs) -> Dict[str, Any]:
        try:
            cfg = SweepConfig(
                max_n=kwargs.get('max_n') or Config.SWEEP_MAX_N,
                parallel_workers=kwargs.get('workers') or Config.SWEEP_WORKERS,
                seed=Config.SWEEP_SEED if kwargs.get('seed') is None else kwargs['seed'],
                report_path=kwargs.get('output') or Config.REPORT_PATH,
                csv_path=kwargs.get('csv'),
                progress=not self.json_output,
            )
            self.emit(f"🚀 Verificando todas as árvores com 2 <= n <= {cfg.max_n}")
            report = run_sweep(cfg)
        except INPUT_ERRORS as e:
            return self.failure(f"Erro na verificação: {e}")

        self.emit(f"📊 {report.total_trees} árvores verificadas em {report.timings['total']}s")
        for check, tally in report.tallies.items():
            if tally.failed == 0:
                status = "✅"
            else:
                status = "⚠️" if check in REFUTED_CHECKS else "❌"
            self.emit(f"   {status} {check.value}: {tally.passed} ok, {tally.failed} falhas,"
                      f" {tally.skipped} não aplicáveis")
        if report.refutations:
            self.emit(f"⚠️  {len(report.refutations)} refutações conhecidas da propriedade dos"
                      f" semi-suportes (não afetam o código de saída)")
        self.emit(f"📄 Relatório gravado em {cfg.report_path}")

        result = {
            "success": report.ok,
            "report_path": str(cfg.report_path),
            "report": report.model_dump(mode="json"),
        }
        if not report.ok:
            self.emit(f"❌ {len(report.counterexamples)} contraexemplos encontrados")
            result["error"] = f"{len(report.counterexamples)} contraexemplos"
            result["exit_code"] = 1
        else:
            self.emit("✅ Nenhum contraexemplo")
        return result
