"""Experiment command-line interface.

Verbs:
  run           execute all (problem x variant x seed) runs from a JSON config
  report        summarize a runs.jsonl into CSV/Markdown comparison tables
  bench         time a single run and print FE throughput
  list-problems print the instance registry

The runs file is append-only JSON lines; rerunning a config skips triples
already present, and records are written in deterministic job order even
when executed in parallel.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import problems
from .core import ContractViolation
from .engine import AlgorithmConfig, RunRecord, run
from .operators import OperatorConfig
from .stats import friedman_ranks, wilcoxon_signed_rank

PRESETS = ("icsde-ga", "icsde-de", "isdeplus", "cdp-baseline")


def _variant_settings(preset: str, problem: str) -> tuple:
    """Map a preset name to (engine variant, operator kind)."""
    if preset == "icsde-ga":
        return "ICSDE", "GA"
    if preset == "icsde-de":
        return "ICSDE", "DE"
    if preset == "isdeplus":
        return "ISDE_PLUS", problems.default_operator_kind(problem)
    if preset == "cdp-baseline":
        return "CDP_BASELINE", problems.default_operator_kind(problem)
    raise ContractViolation(f"unknown variant preset: {preset}")


@dataclass
class ExperimentConfig:
    problems: list
    variants: list
    runs: int = 1
    base_seed: int = 0
    parallelism: int = 1
    output_dir: str = "."
    budget_override: float | None = None

    @classmethod
    def load(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ContractViolation(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                f"{exc.msg}"
            ) from exc
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ContractViolation(f"{path}: unknown config keys: {sorted(unknown)}")
        cfg = cls(**raw)
        if cfg.runs < 1:
            raise ContractViolation(f"{path}: runs must be >= 1")
        if cfg.parallelism < 1:
            raise ContractViolation(f"{path}: parallelism must be >= 1")
        for v in cfg.variants:
            if v not in PRESETS:
                raise ContractViolation(
                    f"{path}: unknown variant {v!r} (choose from {PRESETS})"
                )
        if not cfg.resolve_problems():
            raise ContractViolation(f"{path}: no instance matches {cfg.problems}")
        if cfg.budget_override is not None and cfg.budget_override <= 0:
            raise ContractViolation(f"{path}: budget_override must be positive")
        return cfg

    def resolve_problems(self) -> list:
        out = []
        for pattern in self.problems:
            matches = [p for p in problems.INSTANCE_IDS if fnmatch.fnmatch(p, pattern)]
            if not matches:
                raise ContractViolation(f"no instance matches pattern {pattern!r}")
            out.extend(m for m in matches if m not in out)
        return out


def _execute_job(job: tuple) -> str:
    problem, preset, seed, budget_override = job
    spec = problems.make_problem(problem)
    N, max_fes = problems.default_budget(problem)
    if budget_override is not None:
        max_fes = max(N, int(round(max_fes * budget_override)))
    variant, kind = _variant_settings(preset, problem)
    cfg = AlgorithmConfig(
        population_size=N,
        max_fes=max_fes,
        operator=OperatorConfig(kind=kind),
        variant=variant,
    )
    record = run(spec, cfg, seed)
    payload = record.__dict__ | {"variant_preset": preset}
    return json.dumps(payload, sort_keys=True)


def _existing_keys(runs_path: str) -> set:
    keys = set()
    if os.path.exists(runs_path):
        with open(runs_path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                keys.add((rec["problem"], rec["variant_preset"], rec["seed"]))
    return keys


def cmd_run(config_path: str) -> int:
    try:
        cfg = ExperimentConfig.load(config_path)
    except (ContractViolation, OSError, TypeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    out_dir = os.environ.get("ICSDE_OUTPUT_DIR", cfg.output_dir)
    os.makedirs(out_dir, exist_ok=True)
    runs_path = os.path.join(out_dir, "runs.jsonl")
    done = _existing_keys(runs_path)
    jobs = [
        (problem, preset, cfg.base_seed + r, cfg.budget_override)
        for problem in cfg.resolve_problems()
        for preset in cfg.variants
        for r in range(cfg.runs)
        if (problem, preset, cfg.base_seed + r) not in done
    ]
    print(f"{len(jobs)} run(s) to execute, {len(done)} already present")
    failures = 0
    with open(runs_path, "a") as sink:
        if cfg.parallelism > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
                for job, line in zip(jobs, pool.map(_execute_job, jobs)):
                    failures += _emit(sink, job, line)
        else:
            for job in jobs:
                failures += _emit(sink, job, _execute_job(job))
    if failures:
        print(f"{failures} run(s) recorded an error", file=sys.stderr)
    return 0


def _emit(sink, job, line: str) -> int:
    sink.write(line + "\n")
    sink.flush()
    rec = json.loads(line)
    if rec.get("error"):
        print(f"run {job[:3]} failed: {rec['error']}", file=sys.stderr)
        return 1
    return 0


def _load_records(runs_path: str) -> list:
    records = []
    with open(runs_path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def _final_hv(rec: dict) -> float:
    traj = rec.get("hv_trajectory") or [0.0]
    return float(traj[-1])


def cmd_report(runs_path: str, reference_variant: str, out_dir: str) -> int:
    try:
        records = _load_records(runs_path)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read runs file: {exc}", file=sys.stderr)
        return 2
    if not records:
        print("no records", file=sys.stderr)
        return 2
    os.makedirs(out_dir, exist_ok=True)
    by_cell: dict = {}
    for rec in records:
        by_cell.setdefault((rec["problem"], rec["variant_preset"]), {})[
            rec["seed"]
        ] = _final_hv(rec)
    instances = sorted({p for p, _ in by_cell})
    variants = sorted({v for _, v in by_cell})
    if reference_variant not in variants:
        reference_variant = variants[0]

    def paired(problem, variant):
        ref = by_cell.get((problem, reference_variant), {})
        other = by_cell.get((problem, variant), {})
        seeds = sorted(set(ref) & set(other))
        return (
            np.array([other[s] for s in seeds]),
            np.array([ref[s] for s in seeds]),
        )

    rows = []
    for problem in instances:
        for variant in variants:
            cell = by_cell.get((problem, variant))
            if not cell:
                continue
            values = np.array([cell[s] for s in sorted(cell)])
            mark = ""
            if variant != reference_variant and len(variants) >= 2:
                a, b = paired(problem, variant)
                mark = wilcoxon_signed_rank(a, b) if len(a) >= 5 else "?"
            rows.append(
                (problem, variant, float(values.mean()), float(values.std()), mark)
            )
    with open(os.path.join(out_dir, "report.csv"), "w") as fh:
        fh.write("instance,variant,mean,std,mark\n")
        for problem, variant, mean, std, mark in rows:
            fh.write(f"{problem},{variant},{mean:.6e},{std:.6e},{mark}\n")

    # Markdown table: one row per instance, one column per variant.
    cells = {(p, v): (m, s, mk) for p, v, m, s, mk in rows}
    with open(os.path.join(out_dir, "report.md"), "w") as fh:
        fh.write("| instance | " + " | ".join(variants) + " |\n")
        fh.write("|---" * (len(variants) + 1) + "|\n")
        tally = {v: [0, 0, 0] for v in variants}
        for problem in instances:
            best = max(
                (cells[(problem, v)][0] for v in variants if (problem, v) in cells),
                default=None,
            )
            parts = [problem]
            for v in variants:
                if (problem, v) not in cells:
                    parts.append("")
                    continue
                mean, std, mark = cells[(problem, v)]
                text = f"{mean:.4e} ({std:.2e}) {mark}".strip()
                if best is not None and mean == best:
                    text = f"**{text}**"
                parts.append(text)
                if mark in "+-=":
                    tally[v]["+-=".index(mark)] += 1
            fh.write("| " + " | ".join(parts) + " |\n")
        summary = [
            "/".join(str(c) for c in tally[v]) if v != reference_variant else "ref"
            for v in variants
        ]
        fh.write("| +/-/= | " + " | ".join(summary) + " |\n")

    # Friedman average ranks per suite (and overall = mean of suite ranks).
    suites: dict = {}
    for problem in instances:
        suites.setdefault(problems.suite_of(problem), []).append(problem)
    suite_rank_rows = []
    overall = np.zeros(len(variants))
    counted = 0
    for suite in sorted(suites):
        table = []
        for problem in suites[suite]:
            if all((problem, v) in cells for v in variants):
                table.append([cells[(problem, v)][0] for v in variants])
        if not table or len(variants) < 2:
            continue
        ranks = friedman_ranks(np.array(table))
        overall += ranks
        counted += 1
        for v, r in zip(variants, ranks):
            suite_rank_rows.append((suite, v, float(r)))
    with open(os.path.join(out_dir, "friedman.csv"), "w") as fh:
        fh.write("suite,variant,avg_rank\n")
        for suite, v, r in suite_rank_rows:
            fh.write(f"{suite},{v},{r:.6f}\n")
        if counted:
            for v, r in zip(variants, overall / counted):
                fh.write(f"overall,{v},{r:.6f}\n")
    with open(os.path.join(out_dir, "radar.csv"), "w") as fh:
        fh.write("suite,variant,avg_rank_within_suite\n")
        for suite, v, r in suite_rank_rows:
            fh.write(f"{suite},{v},{r:.6f}\n")
    print(f"wrote report.csv, report.md, friedman.csv, radar.csv in {out_dir}")
    return 0


def cmd_bench(problem: str, preset: str, seed: int, budget_override=None) -> int:
    line = _execute_job((problem, preset, seed, budget_override))
    rec = json.loads(line)
    secs = rec["wall_time_ms"] / 1000.0
    fes = rec["fes_used"]
    print(
        f"{problem}/{preset}/seed={seed}: {secs:.3f} s, {fes} FEs, "
        f"{fes / secs:.0f} FE/s, final HV {_final_hv(rec):.6f}"
    )
    return 0


def cmd_list_problems() -> int:
    for name in problems.INSTANCE_IDS:
        spec = problems.make_problem(name)
        N, fes = problems.default_budget(name)
        kind = problems.default_operator_kind(name)
        print(
            f"{name:12s} suite={problems.suite_of(name):8s} n={spec.n:3d} "
            f"m={spec.m} q={spec.q:2d} N={N:4d} FEs={fes:7d} operator={kind}"
        )
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="icsde", description="constrained multi-objective experiment runner"
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    p_run = sub.add_parser("run", help="execute runs from a JSON config")
    p_run.add_argument("config")
    p_rep = sub.add_parser("report", help="summarize a runs.jsonl")
    p_rep.add_argument("runs_file")
    p_rep.add_argument("--reference", default="cdp-baseline")
    p_rep.add_argument("--out-dir", default=None)
    p_bench = sub.add_parser("bench", help="time one run")
    p_bench.add_argument("problem")
    p_bench.add_argument("variant", choices=PRESETS)
    p_bench.add_argument("seed", type=int)
    p_bench.add_argument("--budget-override", type=float, default=None)
    sub.add_parser("list-problems", help="print the instance registry")
    args = parser.parse_args(argv)
    if args.verb == "run":
        return cmd_run(args.config)
    if args.verb == "report":
        out_dir = args.out_dir or os.path.dirname(os.path.abspath(args.runs_file))
        return cmd_report(args.runs_file, args.reference, out_dir)
    if args.verb == "bench":
        return cmd_bench(args.problem, args.variant, args.seed, args.budget_override)
    if args.verb == "list-problems":
        return cmd_list_problems()
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
