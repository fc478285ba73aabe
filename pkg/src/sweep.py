"""
Varredura de verificação sobre todas as árvores pequenas
"""

import csv
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from .config import Config
from .enumeration import enumerate_free_trees
from .errors import PreconditionError, ReportWriteError, ToidError
from .families import (
    Family,
    OperationKind,
    OperationStep,
    apply_step,
    legal_sites,
    lemma3_check,
    recognize_structural,
    replay,
)
from .formats import encode_graph6, write_edge_list
from .graph import Tree, classify, subdivide
from .solver import BoundReport, gamma_brute, gamma_tree_dp, is_toids

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


class Check(str, Enum):
    BOUNDS = "bounds"
    CHAR_LOWER = "char_lower"
    CHAR_UPPER = "char_upper"
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    LEMMA3 = "lemma3"
    ORACLE_VS_DP = "oracle_vs_dp"


# Afirmações com contraexemplos conhecidos (a menor ocorre em n = 8): as
# falhas vão para `refutations` e não alteram o código de saída
REFUTED_CHECKS = frozenset({Check.LEMMA3})


class SweepConfig(BaseModel):
    """Parâmetros da varredura"""

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(default_factory=lambda: Config.SWEEP_MAX_N, ge=2, le=16)
    checks: FrozenSet[Check] = frozenset(Check)
    parallel_workers: int = Field(default_factory=lambda: Config.SWEEP_WORKERS, ge=1)
    report_path: Optional[Path] = None
    csv_path: Optional[Path] = None
    seed: int = Field(default_factory=lambda: Config.SWEEP_SEED)
    lemma2_sites: int = Field(default_factory=lambda: Config.LEMMA2_SITES, ge=1)
    oracle_cap: int = Field(default_factory=lambda: Config.ORACLE_SUBDIVISION_CAP, ge=3)
    batch_size: int = Field(default=64, ge=1)
    progress: bool = True


class CheckTally(BaseModel):
    passed: int = 0
    failed: int = 0
    skipped: int = 0


class MembershipCounts(BaseModel):
    count: int = 0
    lower: int = 0
    upper: int = 0
    both: int = 0


class Counterexample(BaseModel):
    check: Check
    n: int
    index: int
    edges: List[Tuple[int, int]]
    graph6: str
    detail: str


class SweepReport(BaseModel):
    """Relatório determinístico (exceto os tempos)"""

    schema_version: str = SCHEMA_VERSION
    max_n: int
    checks: List[Check]
    seed: int
    counts: Dict[int, int] = Field(default_factory=dict)
    memberships: Dict[int, MembershipCounts] = Field(default_factory=dict)
    tallies: Dict[Check, CheckTally] = Field(default_factory=dict)
    counterexamples: List[Counterexample] = Field(default_factory=list)
    refutations: List[Counterexample] = Field(default_factory=list)
    timings: Dict[str, float] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Verdadeiro quando nenhum teorema falhou; refutações conhecidas não contam"""
        return not self.counterexamples

    @property
    def total_trees(self) -> int:
        return sum(self.counts.values())


@dataclass
class _TreeOutcome:
    n: int
    index: int
    attains_lower: bool
    attains_upper: bool
    results: Dict[Check, Optional[bool]] = field(default_factory=dict)
    failures: List[Tuple[Check, str]] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)
    graph6: str = ""


# (operação, r, acréscimo esperado em γ de S(T))
LEMMA2_CASES = (
    (OperationKind.F1, None, 1),
    (OperationKind.O1, None, 1),
    (OperationKind.F2, None, 2),
    (OperationKind.F3, None, 4),
    (OperationKind.O2, None, 4),
    (OperationKind.O3, 2, 8),
    (OperationKind.O3, 3, 12),
    (OperationKind.O3, 4, 16),
)


def _replays_exactly(t: Tree, trace) -> bool:
    rebuilt = replay(trace)
    mapped = {tuple(sorted((trace.vertex_map[u], trace.vertex_map[v]))) for u, v in t.edges()}
    return rebuilt.vertex_count == t.vertex_count and mapped == set(rebuilt.edges())


def _check_characterization(t: Tree, family: Family, attains: bool) -> Optional[str]:
    trace = recognize_structural(t, family)
    if trace.accepted != attains:
        return (f"aritmético={attains} estrutural={trace.accepted}"
                f" ({trace.rejection or 'aceito'})")
    if trace.accepted and not _replays_exactly(t, trace):
        return "o roteiro aceito não reproduz a árvore"
    return None


def _check_lemma1(t: Tree, sub_graph, forced, gamma_value: int, cfg: SweepConfig) -> Optional[bool]:
    if t.vertex_count < 3:
        return None
    if sub_graph.vertex_count <= cfg.oracle_cap:
        forced_value = gamma_brute(sub_graph, forced, cap=cfg.oracle_cap).value
    else:
        forced_value = gamma_tree_dp(sub_graph, forced).value
    return forced_value == gamma_value


def _check_oracle(t: Tree, sub_graph, dp_solution, cfg: SweepConfig) -> Optional[str]:
    ran = False
    if not is_toids(sub_graph, dp_solution.witness):
        return "testemunha da DP inválida em S(T)"
    if t.vertex_count <= Config.BRUTE_FORCE_CAP:
        ran = True
        if gamma_brute(t).value != gamma_tree_dp(t).value:
            return "DP e força bruta divergem em T"
    if sub_graph.vertex_count <= cfg.oracle_cap:
        ran = True
        if gamma_brute(sub_graph, cap=cfg.oracle_cap).value != dp_solution.value:
            return "DP e força bruta divergem em S(T)"
    return None if ran else "skip"


def _check_lemma2(t: Tree, gamma_value: int, rng: random.Random, cfg: SweepConfig) -> List[str]:
    problems = []
    for kind, r, delta in LEMMA2_CASES:
        sites = legal_sites(t, kind)
        for site in rng.sample(sites, min(cfg.lemma2_sites, len(sites))):
            grown = apply_step(t, OperationStep(kind=kind, site=site, r=r))
            observed = gamma_tree_dp(subdivide(grown).graph).value - gamma_value
            if observed != delta:
                label = kind.value if r is None else f"{kind.value}(r={r})"
                problems.append(f"{label} em {site}: acréscimo {observed}, esperado {delta}")
    return problems


def _check_tree(n: int, index: int, t: Tree, cfg: SweepConfig) -> _TreeOutcome:
    classes = classify(t)
    sub = subdivide(t)
    dp_solution = gamma_tree_dp(sub.graph)
    value = dp_solution.value
    l, s = classes.l_count, classes.s_count
    report = BoundReport(n=n, l=l, s=s, lower_num=4 * n - l - s,
                         upper_num=4 * n - l + s - 2, gamma=value)
    outcome = _TreeOutcome(n, index, report.attains_lower, report.attains_upper)
    rng = random.Random(f"{cfg.seed}:{n}:{index}")

    def record(check: Check, ok: Optional[bool], detail: str = "") -> None:
        outcome.results[check] = ok
        if ok is False:
            outcome.failures.append((check, detail))

    for check in sorted(cfg.checks, key=lambda c: c.value):
        try:
            if check == Check.BOUNDS:
                record(check, report.sandwich_holds,
                       f"{report.lower_num} <= {3 * value} <= {report.upper_num} falhou")
            elif check == Check.CHAR_LOWER:
                problem = _check_characterization(t, Family.LOWER, report.attains_lower)
                record(check, problem is None, problem or "")
            elif check == Check.CHAR_UPPER:
                problem = _check_characterization(t, Family.UPPER, report.attains_upper)
                record(check, problem is None, problem or "")
            elif check == Check.LEMMA1:
                forced = sub.images(classes.supports | classes.semi_supports)
                record(check, _check_lemma1(t, sub.graph, forced, value, cfg),
                       "forçar S ∪ SS aumenta o ótimo")
            elif check == Check.LEMMA2:
                problems = _check_lemma2(t, value, rng, cfg)
                record(check, not problems, "; ".join(problems))
            elif check == Check.LEMMA3:
                try:
                    record(check, lemma3_check(t), "semi-suporte com mais de um vizinho suporte")
                except PreconditionError:
                    record(check, None)
            elif check == Check.ORACLE_VS_DP:
                problem = _check_oracle(t, sub.graph, dp_solution, cfg)
                if problem == "skip":
                    record(check, None)
                else:
                    record(check, problem is None, problem or "")
        except ToidError as e:
            record(check, False, f"{type(e).__name__}: {e}")

    if outcome.failures:
        outcome.edges = list(t.edges())
        outcome.graph6 = encode_graph6(t)
    return outcome


def _run_batch(batch: List[Tuple[int, int, Tree]], cfg: SweepConfig) -> List[_TreeOutcome]:
    return [_check_tree(n, index, t, cfg) for n, index, t in batch]


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """
    Executa as verificações para todas as árvores com 2 <= n <= max_n

    Falhas de verificação são registradas no relatório; apenas erros de
    E/S ao gravar o relatório são lançados.

    Args:
        cfg: Configuração da varredura

    Returns:
        SweepReport com contagens, totais por verificação e contraexemplos
    """
    started = time.perf_counter()
    report = SweepReport(max_n=cfg.max_n, checks=sorted(cfg.checks, key=lambda c: c.value),
                         seed=cfg.seed)

    jobs: List[Tuple[int, int, Tree]] = []
    for n in range(2, cfg.max_n + 1):
        trees = list(enumerate_free_trees(n))
        report.counts[n] = len(trees)
        jobs.extend((n, index, t) for index, t in enumerate(trees))
    enumerated = time.perf_counter()
    logger.info("Enumeradas %d árvores (2 <= n <= %d)", len(jobs), cfg.max_n)

    batches = [jobs[i:i + cfg.batch_size] for i in range(0, len(jobs), cfg.batch_size)]
    outcomes: List[_TreeOutcome] = []
    with tqdm(total=len(batches), desc="Varredura", unit="lote", disable=not cfg.progress) as bar:
        if cfg.parallel_workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.parallel_workers) as pool:
                futures = [pool.submit(_run_batch, batch, cfg) for batch in batches]
                for future in as_completed(futures):
                    outcomes.extend(future.result())
                    bar.update(1)
        else:
            for batch in batches:
                outcomes.extend(_run_batch(batch, cfg))
                bar.update(1)
    checked = time.perf_counter()

    outcomes.sort(key=lambda o: (o.n, o.index))
    for check in report.checks:
        report.tallies[check] = CheckTally()
    for outcome in outcomes:
        counts = report.memberships.setdefault(outcome.n, MembershipCounts())
        counts.count += 1
        counts.lower += outcome.attains_lower
        counts.upper += outcome.attains_upper
        counts.both += outcome.attains_lower and outcome.attains_upper
        for check, ok in outcome.results.items():
            tally = report.tallies[check]
            if ok is None:
                tally.skipped += 1
            elif ok:
                tally.passed += 1
            else:
                tally.failed += 1
        for check, detail in outcome.failures:
            item = Counterexample(
                check=check, n=outcome.n, index=outcome.index, edges=outcome.edges,
                graph6=outcome.graph6, detail=detail,
            )
            if check in REFUTED_CHECKS:
                logger.info("Refutação conhecida %s em n=%d #%d: %s", check.value, outcome.n,
                            outcome.index, detail)
                report.refutations.append(item)
            else:
                logger.warning("Contraexemplo %s em n=%d #%d: %s", check.value, outcome.n,
                               outcome.index, detail)
                report.counterexamples.append(item)

    report.timings = {
        "enumerate": round(enumerated - started, 3),
        "checks": round(checked - enumerated, 3),
        "total": round(time.perf_counter() - started, 3),
    }

    if cfg.report_path is not None:
        write_report(report, cfg.report_path)
    if cfg.csv_path is not None:
        write_csv(report, cfg.csv_path)
    return report


def write_report(report: SweepReport, path: Path) -> None:
    """Grava o JSON do relatório e um arquivo de arestas por contraexemplo ou refutação"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
        listed = [("counterexample", item) for item in report.counterexamples]
        listed += [("refutation", item) for item in report.refutations]
        for prefix, item in listed:
            target = path.parent / f"{prefix}_{item.check.value}_n{item.n}_{item.index}.txt"
            text = write_edge_list(Tree.from_edges(item.n, item.edges))
            target.write_text(f"# graph6 {item.graph6}\n# {item.detail}\n{text}", encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"Falha ao gravar o relatório em {path}: {e}") from e


def write_csv(report: SweepReport, path: Path) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(["n", "count", "lower", "upper", "both"])
            for n in sorted(report.memberships):
                row = report.memberships[n]
                writer.writerow([n, row.count, row.lower, row.upper, row.both])
    except OSError as e:
        raise ReportWriteError(f"Falha ao gravar o CSV em {path}: {e}") from e
