"""Statistical regularity checks for sampled graphs.

Three checks used as diagnostics and acceptance gates: pairwise edge
density between disjoint vertex sets, degree concentration, and
common-neighbourhood sizes of small tuples.  Each compares an observed
count against the band (1 +- epsilon) times its expectation under edge
probability p, and each is explicit about regimes where the band is
meaningless: too few vertices for qualifying sets ("vacuous") or an
expectation below 1/epsilon ("regime-invalid").  A report never counts a
pass in such a regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import SimpleGraph
from .rng import SplitMix64, derive_seed


@dataclass(frozen=True)
class PseudorandomConfig:
    """Tolerances and sample counts for the regularity checks.

    `size_constant` instantiates "much larger than log(n)/p" as
    size_constant * ln(n) / p when choosing qualifying set sizes;
    `pair_size` overrides that choice with an explicit |X| = |Y|.
    """

    epsilon: float = 0.1
    size_constant: float = 10.0
    max_tuple: int = 4
    density_samples: int = 200
    neighbourhood_samples: int = 100
    pair_size: int | None = None

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.size_constant <= 0:
            raise ValueError("size_constant must be positive")
        if not 1 <= self.max_tuple <= 6:
            raise ValueError("max_tuple must lie in 1..6")
        if self.density_samples < 1 or self.neighbourhood_samples < 1:
            raise ValueError("sample counts must be positive")
        if self.pair_size is not None and self.pair_size < 1:
            raise ValueError("pair_size must be positive")


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one check: counts, worst deviation, failing witnesses."""

    label: str
    status: str  # "ok" | "vacuous" | "regime-invalid"
    passes: int = 0
    fails: int = 0
    worst_deviation: float = 0.0
    witnesses: tuple = ()
    notes: tuple[str, ...] = ()

    @property
    def all_passed(self) -> bool:
        return self.status == "ok" and self.fails == 0 and self.passes > 0

    def pass_fraction(self) -> float:
        total = self.passes + self.fails
        return self.passes / total if total else 0.0

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "status": self.status,
            "passes": self.passes,
            "fails": self.fails,
            "worst_deviation": self.worst_deviation,
            "witnesses": [list(w) for w in self.witnesses],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class CheckReport:
    outcomes: tuple[CheckOutcome, ...]

    def outcome(self, label: str) -> CheckOutcome:
        for o in self.outcomes:
            if o.label == label:
                return o
        raise KeyError(label)

    def to_json(self) -> dict:
        return {"outcomes": [o.to_json() for o in self.outcomes]}


_MAX_WITNESSES = 8


def _qualifying_size(n: int, p: float, cfg: PseudorandomConfig) -> int | None:
    if cfg.pair_size is not None:
        return cfg.pair_size
    if p <= 0 or n < 2:
        return None
    return max(1, math.ceil(cfg.size_constant * math.log(n) / p))


def check_edge_density(
    g: SimpleGraph, p: float, cfg: PseudorandomConfig, seed: int
) -> CheckReport:
    """Sampled check that disjoint vertex sets X, Y of qualifying size span
    (1 +- epsilon) * p * |X| * |Y| edges, and at least one edge.

    Set sizes default to the minimum qualifying size from `size_constant`
    and can be pinned with `pair_size`.  Marked vacuous when the graph is
    too small to host two disjoint qualifying sets.
    """
    n = g.n
    size = _qualifying_size(n, p, cfg)
    if size is None or 2 * size > n:
        return CheckReport(
            (
                CheckOutcome(
                    "edge-density",
                    "vacuous",
                    notes=(f"no two disjoint sets of size {size} fit in {n} vertices",),
                ),
            )
        )
    mean = p * size * size
    lo, hi = (1 - cfg.epsilon) * mean, (1 + cfg.epsilon) * mean
    passes = fails = 0
    worst = 0.0
    witnesses: list[tuple] = []
    for s in range(cfg.density_samples):
        rng = SplitMix64(derive_seed(seed, s))
        picked = rng.sample(n, 2 * size)
        xs, ys = picked[:size], picked[size:]
        y_mask = 0
        for v in ys:
            y_mask |= 1 << v
        count = sum((g.adj[u] & y_mask).bit_count() for u in xs)
        deviation = abs(count - mean) / mean if mean else float(count)
        worst = max(worst, deviation)
        if lo <= count <= hi and count >= 1:
            passes += 1
        else:
            fails += 1
            if len(witnesses) < _MAX_WITNESSES:
                witnesses.append((s, count))
    return CheckReport(
        (
            CheckOutcome(
                "edge-density", "ok", passes, fails, worst, tuple(witnesses)
            ),
        )
    )


def check_degrees(g: SimpleGraph, p: float, cfg: PseudorandomConfig) -> CheckReport:
    """Exact check that every vertex degree lies in (1 +- epsilon) * p * n."""
    n = g.n
    if n == 0:
        return CheckReport(
            (CheckOutcome("degrees", "vacuous", notes=("empty graph",)),)
        )
    mean = p * n
    lo, hi = (1 - cfg.epsilon) * mean, (1 + cfg.epsilon) * mean
    notes: tuple[str, ...] = ()
    if p >= 1.0 and cfg.epsilon < 1.0 / n:
        notes = (f"complete-graph degree n-1 needs epsilon >= 1/n = {1.0 / n:.3g}",)
    passes = fails = 0
    worst = 0.0
    witnesses: list[tuple] = []
    for v in range(n):
        d = g.degree(v)
        deviation = abs(d - mean) / mean if mean else float(d)
        worst = max(worst, deviation)
        if lo <= d <= hi:
            passes += 1
        else:
            fails += 1
            if len(witnesses) < _MAX_WITNESSES:
                witnesses.append((v, d))
    return CheckReport(
        (
            CheckOutcome(
                "degrees", "ok", passes, fails, worst, tuple(witnesses), notes
            ),
        )
    )


def check_common_neighbourhoods(
    g: SimpleGraph, p: float, cfg: PseudorandomConfig, seed: int
) -> CheckReport:
    """Sampled check that every i-set of vertices, i up to `max_tuple`, has
    (1 +- epsilon) * p^i * n common neighbours (tuple members excluded from
    the count).

    A tuple size whose expected count p^i * n falls below 1/epsilon is
    marked regime-invalid instead of being tested.
    """
    n = g.n
    outcomes: list[CheckOutcome] = []
    for i in range(1, cfg.max_tuple + 1):
        label = f"common-neighbourhood i={i}"
        if n < i + 1:
            outcomes.append(
                CheckOutcome(label, "vacuous", notes=(f"need more than {i} vertices",))
            )
            continue
        mean = (p**i) * n
        if mean < 1.0 / cfg.epsilon:
            outcomes.append(
                CheckOutcome(
                    label,
                    "regime-invalid",
                    notes=(f"expected count {mean:.3g} below 1/epsilon",),
                )
            )
            continue
        lo, hi = (1 - cfg.epsilon) * mean, (1 + cfg.epsilon) * mean
        passes = fails = 0
        worst = 0.0
        witnesses: list[tuple] = []
        for s in range(cfg.neighbourhood_samples):
            rng = SplitMix64(derive_seed(seed, i * cfg.neighbourhood_samples + s))
            tup = rng.sample(n, i)
            count = g.common_neighbourhood(tup).bit_count()
            deviation = abs(count - mean) / mean
            worst = max(worst, deviation)
            if lo <= count <= hi:
                passes += 1
            else:
                fails += 1
                if len(witnesses) < _MAX_WITNESSES:
                    witnesses.append((tuple(sorted(tup)), count))
        outcomes.append(
            CheckOutcome(label, "ok", passes, fails, worst, tuple(witnesses))
        )
    return CheckReport(tuple(outcomes))
