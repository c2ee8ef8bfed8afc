"""Experiment orchestration: config, bound tables, reports and their
CSV/JSON/SVG serialization.

All numeric report content is a deterministic function of the config and
seed (worker count included); the only nondeterministic field is the
timestamp, which comparison helpers exclude.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from dataclasses import asdict, dataclass
from math import factorial, log, sqrt
from typing import Any

from . import bounds
from .errors import BudgetExceededError, NumericRangeError
from .generators import gen_complete_uniform, gen_fano, gen_random_uniform
from .hypergraph import Hypergraph, read_hypergraph, uniformity, validate
from .montecarlo import DEFAULT_CHAIN_CEILING, MonteCarloReport, monte_carlo, wilson_interval, Z99
from .oracle import DEFAULT_ORACLE_BUDGET, greedy_success_exact, is_r_colorable


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: an instance source, Monte Carlo settings, budgets,
    and an optional output directory (None keeps everything in memory)."""

    source: dict[str, Any]
    r: int = 2
    trials: int = 1000
    seed: int = 0
    p: float | None = None
    count_chains: bool = False
    workers: int = 1
    chain_ceiling: int = DEFAULT_CHAIN_CEILING
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    run_oracle: bool = True
    out_dir: str | None = None
    plot: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("an explicit nonnegative seed is required")
        if self.r < 2:
            raise ValueError("need r >= 2")
        if "kind" not in self.source:
            raise ValueError("source needs a 'kind' field")
        if self.source["kind"] == "file" and not os.path.exists(self.source.get("path", "")):
            raise ValueError(f"instance file not found: {self.source.get('path')!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ExperimentConfig":
        return ExperimentConfig(**json.loads(text))


def load_instance(source: dict[str, Any]) -> Hypergraph:
    kind = source["kind"]
    if kind == "file":
        return read_hypergraph(source["path"])
    if kind == "fano":
        return gen_fano()
    if kind == "complete":
        return gen_complete_uniform(source["m"], source["n"])
    if kind == "random":
        return gen_random_uniform(
            source["m"], source["n"], source["edges"], source.get("seed", 0)
        )
    raise ValueError(f"unknown instance source kind {kind!r}")


# ---------------------------------------------------------------------------
# Bound tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    n: int
    r: int
    max_k_2col: float | None
    max_k_rcol: float | None
    lll_log10_D: float | None
    ref_sqrt: float
    ref_power: float
    ratio_2col: float | None
    ratio_rcol: float | None
    lll_log10_ratio: float | None
    error: str | None = None


def bound_table(n_values: list[int], r_values: list[int]) -> list[BoundRow]:
    """Certified edge-count coefficients and LLL degrees per (n, r).

    Numeric range failures mark the cell; the table always completes.
    """
    rows = []
    for n in n_values:
        for r in r_values:
            ref_sqrt = sqrt(n / log(n))
            ref_power = (n / log(n)) ** ((r - 1) / r)
            k2 = kr = lll_log10 = ratio2 = ratior = lll_ratio = None
            err = None
            try:
                if r == 2:
                    k2 = bounds.max_k_2col(n)
                    ratio2 = k2 / ref_sqrt
                kr = bounds.max_k_rcol(n, r)
                ratior = kr / ref_power
                cert = bounds.max_degree_lll(n, r)
                lll_log10 = cert.log_D / math.log(10)
                log_ref = ((r - 1) / r) * (log(n) - log(log(n))) + n * log(r)
                lll_ratio = (cert.log_D - log_ref) / math.log(10)
            except (NumericRangeError, ValueError, OverflowError) as exc:
                err = str(exc)
            rows.append(
                BoundRow(
                    n=n,
                    r=r,
                    max_k_2col=k2,
                    max_k_rcol=kr,
                    lll_log10_D=lll_log10,
                    ref_sqrt=ref_sqrt,
                    ref_power=ref_power,
                    ratio_2col=ratio2,
                    ratio_rcol=ratior,
                    lll_log10_ratio=lll_ratio,
                    error=err,
                )
            )
    return rows


_BOUND_FIELDS = [
    "n", "r", "max_k_2col", "max_k_rcol", "lll_log10_D",
    "ref_sqrt", "ref_power", "ratio_2col", "ratio_rcol", "lll_log10_ratio", "error",
]


def bound_table_to_csv(rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_BOUND_FIELDS)
    for row in rows:
        rec = asdict(row)
        writer.writerow(["" if rec[f] is None else rec[f] for f in _BOUND_FIELDS])
    return buf.getvalue()


def bound_table_from_csv(text: str) -> list[BoundRow]:
    reader = csv.DictReader(io.StringIO(text))
    rows = []
    for rec in reader:
        def num(key, cast=float):
            return cast(rec[key]) if rec[key] not in ("", None) else None

        rows.append(
            BoundRow(
                n=int(rec["n"]),
                r=int(rec["r"]),
                max_k_2col=num("max_k_2col"),
                max_k_rcol=num("max_k_rcol"),
                lll_log10_D=num("lll_log10_D"),
                ref_sqrt=float(rec["ref_sqrt"]),
                ref_power=float(rec["ref_power"]),
                ratio_2col=num("ratio_2col"),
                ratio_rcol=num("ratio_rcol"),
                lll_log10_ratio=num("lll_log10_ratio"),
                error=rec["error"] or None,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Full experiment
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleSection:
    within_budget: bool
    colorable: bool | None = None
    ordering_total: int | None = None
    ordering_proper: int | None = None
    exact_probability: str | None = None  # fraction as "p/q"
    mc_inside_wilson99: bool | None = None
    note: str | None = None


@dataclass(frozen=True)
class BoundSection:
    """Instance-level comparison against the analytic expectations."""

    k_coefficient: float | None
    best_p: float | None
    two_color_bound: float | None
    expected_short_edges: float | None
    expected_conflicting_chains: float | None
    empirical_mean_short: float | None
    empirical_mean_pairs: float | None


@dataclass(frozen=True)
class ExperimentReport:
    config: dict[str, Any]
    instance: dict[str, Any]
    mc: dict[str, Any]
    oracle: dict[str, Any]
    bounds: dict[str, Any]
    invariant_violations: list[str]
    timestamp: str


def _mc_asdict(report: MonteCarloReport) -> dict[str, Any]:
    d = asdict(report)
    d["wilson95"] = list(d["wilson95"])
    d["wilson99"] = list(d["wilson99"])
    if d["interval_counts"] is not None:
        d["interval_counts"] = list(d["interval_counts"])
    return d


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Generate/load, Monte Carlo, oracle cross-check, bound comparison.

    When config.out_dir is set, report.json and report.csv (and report.svg
    with config.plot) are written there; the directory is created up front
    so unwritable paths fail before any computation.
    """
    if config.out_dir is not None:
        os.makedirs(config.out_dir, exist_ok=True)
    report = _run(config)
    if config.out_dir is not None:
        write_report_files(report, config.out_dir, plot=config.plot)
    return report


def write_report_files(report: ExperimentReport, out_dir: str, plot: bool = False) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    json_path = os.path.join(out_dir, "report.json")
    csv_path = os.path.join(out_dir, "report.csv")
    paths = [json_path, csv_path]
    with open(json_path, "w", newline="\n") as fh:
        fh.write(report_to_json(report))
    with open(csv_path, "w", newline="\n") as fh:
        fh.write(report_to_csv(report))
    if plot and report.mc.get("estimate") is not None:
        svg_path = os.path.join(out_dir, "report.svg")
        est = report.mc["estimate"]
        with open(svg_path, "w", newline="\n") as fh:
            fh.write(svg_plot({"estimate": [(0.0, est), (1.0, est)]}, "success estimate"))
        paths.append(svg_path)
    return paths


def _run(config: ExperimentConfig) -> ExperimentReport:
    h = load_instance(config.source)
    violations = [v.message for v in validate(h) if v.severity == "error"]
    if violations:
        return ExperimentReport(
            config=json.loads(config.to_json()),
            instance={"vertex_count": h.vertex_count, "edge_count": h.edge_count},
            mc={},
            oracle={},
            bounds={},
            invariant_violations=violations,
            timestamp=_now(),
        )
    mc = monte_carlo(
        h,
        config.r,
        config.trials,
        config.seed,
        p=config.p,
        count_chains=config.count_chains,
        workers=config.workers,
        chain_ceiling=config.chain_ceiling,
    )
    if mc.interval_counts is not None and mc.total_conflicting_pairs is not None:
        if sum(mc.interval_counts) != mc.total_conflicting_pairs:
            violations.append(
                "interval-attributed conflicting pairs do not sum to the total"
            )

    oracle_sec = OracleSection(within_budget=False, note="oracle disabled")
    if config.run_oracle:
        try:
            if factorial(h.vertex_count) > config.oracle_budget:
                raise BudgetExceededError(
                    f"{h.vertex_count}! exceeds oracle budget {config.oracle_budget}"
                )
            stats = greedy_success_exact(h, config.r, config.oracle_budget)
            colorable, _ = is_r_colorable(h, config.r, config.oracle_budget)
            prob = stats.success_probability
            lo, hi = wilson_interval(mc.successes, mc.trials, Z99)
            inside = lo <= float(prob) <= hi
            if prob == 0 and mc.successes > 0:
                violations.append("successes observed on an instance with zero exact probability")
            if prob == 1 and mc.successes < mc.trials:
                violations.append("failures observed on an instance with exact probability one")
            oracle_sec = OracleSection(
                within_budget=True,
                colorable=colorable,
                ordering_total=stats.total_orderings,
                ordering_proper=stats.proper_orderings,
                exact_probability=f"{prob.numerator}/{prob.denominator}",
                mc_inside_wilson99=inside,
            )
        except BudgetExceededError as exc:
            oracle_sec = OracleSection(within_budget=False, note=str(exc))

    cert = uniformity(h)
    bound_sec = BoundSection(None, None, None, None, None, mc.mean_short_edges, mc.mean_conflicting_pairs)
    if cert is not None and mc.p is not None and h.edge_count:
        n = cert.n
        k = h.edge_count / (2.0 ** (n - 1) if config.r == 2 else config.r ** (n - 2))
        params = bounds.AnalysisParams(n=n, r=config.r, k=k, p=mc.p)
        opt = bounds.optimize_p(params.k, params.n) if config.r == 2 else None
        bound_sec = BoundSection(
            k_coefficient=params.k,
            best_p=opt.best_p if opt else None,
            two_color_bound=opt.best_value if opt else None,
            expected_short_edges=bounds.expected_short_edges(
                params.k, params.n, params.r, params.p
            ),
            expected_conflicting_chains=bounds.expected_conflicting_chains(
                params.k, params.n, params.r, params.p
            ),
            empirical_mean_short=mc.mean_short_edges,
            empirical_mean_pairs=mc.mean_conflicting_pairs,
        )

    return ExperimentReport(
        config=json.loads(config.to_json()),
        instance={
            "vertex_count": h.vertex_count,
            "edge_count": h.edge_count,
            "uniformity_n": cert.n if cert else None,
            "warnings": [v.message for v in validate(h) if v.severity == "warning"],
        },
        mc=_mc_asdict(mc),
        oracle=asdict(oracle_sec),
        bounds=asdict(bound_sec),
        invariant_violations=violations,
        timestamp=_now(),
    )


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())


def report_to_json(report: ExperimentReport) -> str:
    return json.dumps(asdict(report), sort_keys=True, indent=2) + "\n"


def report_from_json(text: str) -> ExperimentReport:
    raw = json.loads(text)
    return ExperimentReport(**raw)


def strip_timestamp(report: ExperimentReport) -> dict[str, Any]:
    d = asdict(report)
    d.pop("timestamp")
    return d


_CSV_METRICS = [
    ("trials", lambda r: r.mc.get("trials")),
    ("successes", lambda r: r.mc.get("successes")),
    ("estimate", lambda r: r.mc.get("estimate")),
    ("wilson95_lo", lambda r: r.mc.get("wilson95", [None, None])[0]),
    ("wilson95_hi", lambda r: r.mc.get("wilson95", [None, None])[1]),
    ("wilson99_lo", lambda r: r.mc.get("wilson99", [None, None])[0]),
    ("wilson99_hi", lambda r: r.mc.get("wilson99", [None, None])[1]),
    ("mean_conflicting_pairs", lambda r: r.mc.get("mean_conflicting_pairs")),
    ("mean_short_edges", lambda r: r.mc.get("mean_short_edges")),
    ("oracle_probability", lambda r: r.oracle.get("exact_probability")),
    ("violations", lambda r: len(r.invariant_violations)),
]


def report_to_csv(report: ExperimentReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([name for name, _ in _CSV_METRICS])
    writer.writerow(["" if (v := get(report)) is None else v for name, get in _CSV_METRICS])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Minimal SVG line plot (deterministic text output, no plotting dependency)
# ---------------------------------------------------------------------------


def svg_plot(
    series: dict[str, list[tuple[float, float]]],
    title: str,
    width: int = 640,
    height: int = 420,
) -> str:
    """Polyline plot of one or more (x, y) series."""
    pts = [p for s in series.values() for p in s]
    if not pts:
        raise ValueError("nothing to plot")
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    xspan = (x1 - x0) or 1.0
    yspan = (y1 - y0) or 1.0
    pad = 50

    def sx(x: float) -> float:
        return pad + (x - x0) / xspan * (width - 2 * pad)

    def sy(y: float) -> float:
        return height - pad - (y - y0) / yspan * (height - 2 * pad)

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<text x="{width // 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{pad}" y="{height - pad + 16}" font-size="10">{x0:g}</text>',
        f'<text x="{width - pad}" y="{height - pad + 16}" text-anchor="end" font-size="10">{x1:g}</text>',
        f'<text x="{pad - 4}" y="{height - pad}" text-anchor="end" font-size="10">{y0:g}</text>',
        f'<text x="{pad - 4}" y="{pad}" text-anchor="end" font-size="10">{y1:g}</text>',
    ]
    for i, (name, points) in enumerate(sorted(series.items())):
        color = colors[i % len(colors)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in sorted(points))
        out.append(f'<polyline fill="none" stroke="{color}" points="{coords}"/>')
        out.append(
            f'<text x="{width - pad}" y="{pad + 14 * i}" text-anchor="end" '
            f'font-size="11" fill="{color}">{name}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
