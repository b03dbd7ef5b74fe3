"""Deterministic experiment driver for threshold probing.

Sweeps a grid of (n, p, colouring-mode) cells, solves `trials` sampled
instances per cell, and aggregates per-cell summaries.  Every trial's seed
is derived from (master seed, n, p, mode, trial index) alone, so trials
are order-independent and a run with any thread count produces the same
records; aggregation folds records in sorted order, making the output
files byte-identical across serial and parallel execution.
"""

from __future__ import annotations

import json
import math
import os
import struct
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .components import monochromatic_components
from .graphs import (
    Colour,
    ColouredGraph,
    SimpleGraph,
    colour_random,
    colour_three_stars,
    generate_gnp,
)
from .hypergraph import build_component_hypergraph, tau_exact
from .rng import MASK64, finalise64
from .solver import (
    BRANCH_ALPHA3,
    BRANCH_CASE1,
    BRANCH_CASE2,
    BRANCH_CASE3,
    BRANCH_EGP,
    BRANCH_FALLBACK,
    BRANCH_KONIG,
    SolverConfig,
    solve_cover,
)

MODE_RANDOM = "random"
MODE_THREE_STAR = "three-star"
MODES = (MODE_RANDOM, MODE_THREE_STAR)

CSV_HEADER = (
    "n,p,mode,trials,frac_le3,mean_size,branch_egp,branch_a3,branch_konig,"
    "branch_case1,branch_case2,branch_case3,branch_fallback,exact_available"
)

_BRANCH_COLUMNS = (
    BRANCH_EGP,
    BRANCH_ALPHA3,
    BRANCH_KONIG,
    BRANCH_CASE1,
    BRANCH_CASE2,
    BRANCH_CASE3,
    BRANCH_FALLBACK,
)

THREADS_ENV = "MONOTREE_THREADS"


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid definition: n values, p given either explicitly or as
    scale * (ln n / n) ** exponent per n, trials per cell, colouring
    modes, master seed, and the exact-oracle policy."""

    n_values: tuple[int, ...]
    trials: int
    seed: int
    p_values: tuple[float, ...] = ()
    p_exponent: float | None = None
    p_scales: tuple[float, ...] = ()
    modes: tuple[str, ...] = (MODE_RANDOM,)
    exact_oracle: bool = True
    exact_component_limit: int = 60
    out_path: str | None = None

    def __post_init__(self):
        if not self.n_values:
            raise ValueError("need at least one n value")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if bool(self.p_values) == (self.p_exponent is not None):
            raise ValueError("specify exactly one of p_values or p_exponent")
        if self.p_exponent is not None and not self.p_scales:
            raise ValueError("p_exponent requires p_scales")
        for mode in self.modes:
            if mode not in MODES:
                raise ValueError(f"unknown colouring mode {mode!r}")
        if MODE_THREE_STAR in self.modes and min(self.n_values) < 4:
            raise ValueError("three-star mode needs n >= 4")
        for n, p, _ in self.cells():
            if not 0.0 < p <= 1.0:
                raise ValueError(f"cell (n={n}) has p={p} outside (0, 1]")

    def p_for(self, n: int) -> tuple[float, ...]:
        if self.p_values:
            return self.p_values
        base = (math.log(n) / n) ** self.p_exponent
        return tuple(scale * base for scale in self.p_scales)

    def cells(self) -> list[tuple[int, float, str]]:
        out = [
            (n, p, mode)
            for n in self.n_values
            for p in self.p_for(n)
            for mode in self.modes
        ]
        return sorted(out)


@dataclass(frozen=True)
class TrialRecord:
    n: int
    p: float
    mode: str
    trial: int
    skipped: bool
    size: int | None
    branch: str | None
    exact_size: int | None
    wall_time: float

    def core(self) -> tuple:
        """Everything deterministic about the record (wall time excluded)."""
        return (
            self.n,
            self.p,
            self.mode,
            self.trial,
            self.skipped,
            self.size,
            self.branch,
            self.exact_size,
        )


def _float_bits(p: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", p))[0]


def _mix(seed: int, value: int) -> int:
    return finalise64((seed ^ (value & MASK64)) * 0x9E3779B97F4A7C15 & MASK64)


def trial_seed(master: int, n: int, p: float, mode: str, trial: int) -> int:
    """Per-trial seed: a mix chain over the cell coordinates and trial
    index, independent of cell enumeration order."""
    s = _mix(master, n)
    s = _mix(s, _float_bits(p))
    s = _mix(s, MODES.index(mode))
    return _mix(s, trial)


def first_nonadjacent_triple(g: SimpleGraph) -> tuple[int, int, int] | None:
    """Lexicographically smallest pairwise non-adjacent triple, if any."""
    full = g.full_mask
    for u in range(g.n - 2):
        non_u = ~g.adj[u] & full & ~(1 << u)
        cand = non_u >> (u + 1)
        base = u + 1
        while cand:
            low = cand & -cand
            v = base + low.bit_length() - 1
            cand ^= low
            above = full & ~((1 << (v + 1)) - 1)
            third = non_u & ~g.adj[v] & above
            if third:
                w = (third & -third).bit_length() - 1
                return (u, v, w)
    return None


def run_trial(cfg: ExperimentConfig, n: int, p: float, mode: str, trial: int) -> TrialRecord:
    """One sampled instance of a cell, fully determined by (seed, cell,
    trial index).  Degenerate three-star cells (no non-adjacent triple)
    are recorded as skipped, never raised."""
    start = time.perf_counter()
    base_seed = trial_seed(cfg.seed, n, p, mode, trial)
    g = generate_gnp(n, p, _mix(base_seed, 0))
    cg: ColouredGraph | None = None
    if mode == MODE_THREE_STAR:
        triple = first_nonadjacent_triple(g)
        if triple is None:
            return TrialRecord(
                n, p, mode, trial, True, None, None, None,
                time.perf_counter() - start,
            )
        cg = colour_three_stars(g, *triple, base=Colour.RED)
    else:
        cg = colour_random(g, _mix(base_seed, 1))
    cover, trace = solve_cover(cg, SolverConfig())
    exact_size: int | None = None
    if cfg.exact_oracle and trace.component_count <= cfg.exact_component_limit:
        if trace.exact_size is not None:
            exact_size = trace.exact_size
        else:
            cert = tau_exact(build_component_hypergraph(monochromatic_components(cg)))
            exact_size = cert.size if cert else None
    return TrialRecord(
        n, p, mode, trial, False, cover.size, trace.branch, exact_size,
        time.perf_counter() - start,
    )


@dataclass(frozen=True)
class CellSummary:
    n: int
    p: float
    mode: str
    trials: int  # completed (non-skipped) trials
    frac_le3: float
    mean_size: float
    branch_counts: tuple[int, ...]  # aligned with _BRANCH_COLUMNS
    exact_available: bool

    def csv_row(self) -> str:
        cols = [
            str(self.n),
            repr(self.p),
            self.mode,
            str(self.trials),
            f"{self.frac_le3:.6f}",
            f"{self.mean_size:.6f}",
            *[str(c) for c in self.branch_counts],
            "true" if self.exact_available else "false",
        ]
        return ",".join(cols)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "p": self.p,
            "mode": self.mode,
            "trials": self.trials,
            "frac_le3": round(self.frac_le3, 6),
            "mean_size": round(self.mean_size, 6),
            "exact_available": self.exact_available,
        }
        for name, count in zip(_BRANCH_COLUMNS, self.branch_counts):
            out[f"branch_{_COLUMN_SUFFIX[name]}"] = count
        return out


_COLUMN_SUFFIX = {
    BRANCH_EGP: "egp",
    BRANCH_ALPHA3: "a3",
    BRANCH_KONIG: "konig",
    BRANCH_CASE1: "case1",
    BRANCH_CASE2: "case2",
    BRANCH_CASE3: "case3",
    BRANCH_FALLBACK: "fallback",
}


def _summarise(n: int, p: float, mode: str, records: list[TrialRecord]) -> CellSummary:
    done = [r for r in sorted(records, key=lambda r: r.trial) if not r.skipped]
    counts = {name: 0 for name in _BRANCH_COLUMNS}
    le3 = 0
    total = 0
    for r in done:
        assert r.size is not None and r.branch is not None
        counts[r.branch] += 1
        total += r.size
        if r.size <= 3:
            le3 += 1
    trials = len(done)
    return CellSummary(
        n,
        p,
        mode,
        trials,
        le3 / trials if trials else 0.0,
        total / trials if trials else 0.0,
        tuple(counts[name] for name in _BRANCH_COLUMNS),
        bool(done) and all(r.exact_size is not None for r in done),
    )


def probe_threshold(
    cfg: ExperimentConfig, threads: int | None = None
) -> list[CellSummary]:
    """Run the full grid and return per-cell summaries sorted by (n, p,
    mode); writes them to cfg.out_path (CSV, or JSON for a .json path)
    when set.  Output bytes depend only on the config."""
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    if threads < 1:
        raise ValueError("threads must be at least 1")
    sink = None
    if cfg.out_path is not None:
        sink = open(cfg.out_path, "w", encoding="utf-8", newline="\n")
    try:
        cells = cfg.cells()
        tasks = [(n, p, mode, t) for (n, p, mode) in cells for t in range(cfg.trials)]
        if threads == 1:
            records = [run_trial(cfg, *task) for task in tasks]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                records = list(pool.map(lambda t: run_trial(cfg, *t), tasks))
        by_cell: dict[tuple[int, float, str], list[TrialRecord]] = {c: [] for c in cells}
        for rec in records:
            by_cell[(rec.n, rec.p, rec.mode)].append(rec)
        rows = [_summarise(n, p, mode, by_cell[(n, p, mode)]) for (n, p, mode) in cells]
        if sink is not None:
            if cfg.out_path.endswith(".json"):
                json.dump([r.to_json() for r in rows], sink, indent=2, sort_keys=True)
                sink.write("\n")
            else:
                sink.write(CSV_HEADER + "\n")
                for row in rows:
                    sink.write(row.csv_row() + "\n")
        return rows
    finally:
        if sink is not None:
            sink.close()
