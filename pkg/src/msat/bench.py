"""Run several algorithms over a corpus of instance files and cross-check answers.

Each (instance, algorithm) cell runs in its own forked process so a timeout
can kill it. Rows come out in corpus order, then algorithm order, whatever
order the cells finish in.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from msat.errors import CapacityError, UsageError
from msat.formats import parse_instance
from msat.formula import is_solution

CSV_FIELDS = ["instance", "algo", "answer", "time_s", "nodes", "arcs", "enumerated", "note"]


@dataclass
class Row:
    instance: str
    algo: str
    answer: str  # yes | no | timeout | n/a | capacity | error | bad-witness
    time_s: float = 0.0
    nodes: int | str = ""
    arcs: int | str = ""
    enumerated: int | str = ""
    note: str = ""


def _run_cell(conn, text, algo, max_nodes):
    from msat.solvers import ALGORITHMS

    start = time.perf_counter()
    try:
        instance = parse_instance(text)
        outcome = ALGORITHMS[algo](instance, max_nodes=max_nodes)
        answer = "yes" if outcome.answer else "no"
        if outcome.answer and not is_solution(instance, outcome.witness):
            answer = "bad-witness"
        stats = outcome.stats
        result = dict(answer=answer, nodes=stats.get("nodes", ""), arcs=stats.get("arcs", ""),
                      enumerated=stats.get("enumerated", ""), note="")
    except UsageError as exc:
        result = dict(answer="n/a", note=str(exc))
    except CapacityError as exc:
        result = dict(answer="capacity", note=str(exc))
    except Exception as exc:  # reported per cell, never fatal to the run
        result = dict(answer="error", note=f"{type(exc).__name__}: {exc}")
    result["time_s"] = round(time.perf_counter() - start, 6)
    conn.send(result)
    conn.close()


def run_cell(path: Path, algo: str, timeout: float | None, max_nodes: int | None) -> Row:
    ctx = multiprocessing.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_run_cell, args=(child, path.read_text(), algo, max_nodes))
    start = time.perf_counter()
    proc.start()
    child.close()
    if parent.poll(timeout):
        result = parent.recv()
        proc.join()
    else:
        proc.kill()
        proc.join()
        result = dict(answer="timeout", time_s=round(time.perf_counter() - start, 6),
                      note=f"exceeded {timeout}s")
    return Row(path.name, algo, **result)


def run_bench(corpus: Path, algos, timeout=None, jobs: int = 1, max_nodes=None) -> list:
    paths = sorted(p for p in Path(corpus).iterdir() if p.suffix == ".msat")
    cells = [(p, a) for p in paths for a in algos]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda cell: run_cell(cell[0], cell[1], timeout, max_nodes), cells))


def disagreements(rows) -> dict:
    """Instances whose decided answers conflict, or that produced an invalid witness."""
    by_instance = {}
    for row in rows:
        by_instance.setdefault(row.instance, []).append(row)
    bad = {}
    for name, group in by_instance.items():
        decided = {r.answer for r in group if r.answer in ("yes", "no")}
        if len(decided) > 1 or any(r.answer == "bad-witness" for r in group):
            bad[name] = {r.algo: r.answer for r in group}
    return bad


def minimized_report(rows, corpus: Path) -> str:
    """Describe the smallest conflicting instance (by file size) and its answers."""
    bad = disagreements(rows)
    if not bad:
        return ""
    name = min(bad, key=lambda nm: ((Path(corpus) / nm).stat().st_size, nm))
    answers = ", ".join(f"{algo}={ans}" for algo, ans in bad[name].items())
    return f"disagreement on {name} ({len(bad)} conflicting instance(s)): {answers}"


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return buf.getvalue()
