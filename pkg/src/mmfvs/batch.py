"""Batch solving with structured, reproducible reports.

Records are emitted in instance order regardless of worker scheduling, and
the report file excludes wall-clock timings unless asked, so repeated runs
with the same inputs produce byte-identical reports.
"""

from __future__ import annotations

import json
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping

from mmfvs.approx import approx_solve
from mmfvs.graph import Graph
from mmfvs.ksolver import solve_k
from mmfvs.oracle import opt_mmfvs_brute
from mmfvs.reduction import check_ppt_equivalence
from mmfvs.verify import is_minimal_fvs
from mmfvs.vcsolver import solve_vc

ALGORITHMS = ("bruteforce", "ksolver", "vcsolver", "approx", "ppt-check")


@dataclass
class RunRecord:
    instance: str
    algorithm: str
    params: dict[str, object]
    outcome: str  # yes | no | error
    size: int | None
    verified: bool | None
    stats: dict[str, object] = field(default_factory=dict)
    wall_time: float = 0.0
    error: str | None = None


class _Timeout(Exception):
    pass


def _alarm(_signum, _frame):
    raise _Timeout()


def _json_safe(mapping: Mapping[str, object]) -> dict[str, object]:
    out: dict[str, object] = {}
    for key, value in mapping.items():
        if isinstance(value, (int, float, str, bool)) or value is None:
            out[key] = value
        elif isinstance(value, (list, tuple)):
            if all(isinstance(x, (int, float, str, bool)) for x in value):
                out[key] = list(value)
        elif isinstance(value, dict):
            inner = _json_safe({str(k): v for k, v in value.items()})
            if inner or not value:
                out[key] = inner
    return out


def run_one(
    name: str,
    g: Graph,
    algorithm: str,
    params: Mapping[str, object] | None = None,
    timeout: float | None = None,
) -> RunRecord:
    params = dict(params or {})
    record = RunRecord(
        instance=name, algorithm=algorithm, params=_json_safe(params),
        outcome="error", size=None, verified=None,
    )
    started = time.perf_counter()
    old_handler = None
    if timeout:
        old_handler = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        if algorithm == "bruteforce":
            res = opt_mmfvs_brute(g, cap=int(params.get("cap", 20)))
            record.outcome = "yes"
            record.size = res.opt_value
            record.verified = is_minimal_fvs(g, res.witness) is not None
            record.stats = {"enumerated": res.enumerated}
            record.stats["solution"] = sorted(res.witness)
        elif algorithm == "ksolver":
            report = solve_k(g, int(params["k"]))
            record.outcome = report.outcome
            record.stats = {
                "nodes_explored": report.nodes_explored,
                "max_depth": report.max_depth,
                "guesses_tried": report.extras.get("guesses_tried", 0),
            }
            if report.is_yes:
                assert report.solution is not None
                record.size = len(report.solution.vertices)
                record.verified = is_minimal_fvs(g, report.solution.vertices) is not None
                record.stats["solution"] = sorted(report.solution.vertices)
        elif algorithm == "vcsolver":
            sol, report = solve_vc(g)
            record.outcome = "yes"
            record.size = len(sol.vertices)
            record.verified = is_minimal_fvs(g, sol.vertices) is not None
            record.stats = _json_safe(report.extras)
            record.stats["solution"] = sorted(sol.vertices)
        elif algorithm == "approx":
            result = approx_solve(g, float(params["epsilon"]))
            record.outcome = "yes"
            record.size = len(result.solution.vertices)
            record.verified = is_minimal_fvs(g, result.solution.vertices) is not None
            record.stats = {"mode": result.mode, **_json_safe(result.report.extras)}
            record.stats["solution"] = sorted(result.solution.vertices)
        elif algorithm == "ppt-check":
            same = check_ppt_equivalence(g, int(params["k"]), cap=int(params.get("cap", 20)))
            record.outcome = "yes" if same else "no"
            record.verified = same
        else:
            raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
        # a yes with an unverifiable solution must never leave the runner
        assert record.verified is not False or algorithm == "ppt-check"
    except _Timeout:
        record.outcome = "error"
        record.error = "timeout"
    except Exception as exc:  # recorded, batch continues
        record.outcome = "error"
        record.error = f"{type(exc).__name__}: {exc}"
    finally:
        if timeout:
            signal.setitimer(signal.ITIMER_REAL, 0.0)
            signal.signal(signal.SIGALRM, old_handler)
    record.wall_time = time.perf_counter() - started
    return record


def _worker(task: tuple[str, Graph, str, dict[str, object], float | None]) -> RunRecord:
    return run_one(*task)


def run_batch(
    instances: Iterable[tuple[str, Graph]],
    algorithm: str,
    params: Mapping[str, object] | None = None,
    threads: int = 1,
    timeout: float | None = None,
) -> list[RunRecord]:
    """Run one algorithm over named instances; record order follows input order."""
    tasks = [(name, g, algorithm, dict(params or {}), timeout) for name, g in instances]
    if threads <= 1:
        return [_worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_worker, tasks))


def render_report(records: Iterable[RunRecord], include_timings: bool = False) -> str:
    """Line-delimited JSON, deterministic unless timings are requested."""
    lines = []
    for record in records:
        payload = asdict(record)
        if not include_timings:
            payload.pop("wall_time")
        lines.append(json.dumps(payload, sort_keys=True))
    return "\n".join(lines) + "\n"


def summarize(records: Iterable[RunRecord]) -> str:
    """Plain-text summary table (greppable, one row per record)."""
    records = list(records)
    rows = [("instance", "algorithm", "outcome", "size", "verified", "seconds")]
    for r in records:
        rows.append(
            (
                r.instance,
                r.algorithm,
                r.outcome if not r.error else f"error:{r.error}",
                "-" if r.size is None else str(r.size),
                "-" if r.verified is None else str(r.verified).lower(),
                f"{r.wall_time:.3f}",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    done = sum(1 for r in records if not r.error)
    lines.append(f"{done}/{len(records)} instances completed")
    return "\n".join(lines) + "\n"
