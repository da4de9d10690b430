"""Random node percolation and the degree/path-length sweep harness.

Removal simulates vertex-level uncertainty: ``t`` distinct vertices are
drawn without replacement and deleted together with their incident
edges. Uniform mode gives every t-subset equal probability; the
membership-weighted extension draws sequentially with probability
proportional to (1 - membership grade) among survivors, falling back to
uniform once only grade-1 vertices remain. The weighted mode goes
beyond the uniform procedure and is labelled as an extension in all
emitted metadata.

Determinism: selection is a partial Fisher-Yates shuffle over vertices
sorted lexicographically by id, driven by a Mersenne Twister seeded
from the spec, so outcomes do not depend on input iteration order and
equal inputs give bit-identical outcomes. Sweep trials derive their
seeds from (base seed, fraction index, trial index) through a chained
splitmix64 mix (see :func:`derive_seed`); trials are independent given
those seeds, and results are keyed by fraction index, so any execution
order yields the same series.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import UndirectedGraph, VertexId
from .metrics import CONVENTIONS, average_degree, average_path_length

MODES = ("uniform", "membership_weighted")

_MASK64 = (1 << 64) - 1

ROUNDING_RULE = "t = floor(fraction * |V| + 0.5), half away from zero"
EMPTY_OUTCOME_RULE = (
    "outcomes with no vertices or no reachable pair contribute average "
    "degree 0 and average path length 0 and are counted in the means"
)
SEED_DERIVATION = (
    "splitmix64(splitmix64(splitmix64(base_seed) xor (fraction_index + 1)) "
    "xor (trial_index + 1))"
)


@dataclass(frozen=True)
class PercolationSpec:
    """How many vertices to remove, with what randomness."""

    removal_count: int
    seed: int
    mode: str = "uniform"

    def __post_init__(self):
        if self.removal_count < 0:
            raise ValueError("removal_count must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class PercolationOutcome:
    """Surviving graph, removal log in draw order, and the seed used."""

    graph: UndirectedGraph
    removed: tuple[VertexId, ...]
    seed: int


def _uniform_draws(ordered: list[VertexId], t: int, rng: random.Random) -> list[VertexId]:
    # Partial Fisher-Yates: after i swaps the prefix holds i uniform
    # without-replacement draws, so every t-subset is equally likely.
    pool = list(ordered)
    for i in range(t):
        j = rng.randrange(i, len(pool))
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:t]


def _weighted_draws(
    ordered: list[VertexId],
    t: int,
    rng: random.Random,
    memberships: Mapping[VertexId, float],
) -> list[VertexId]:
    weights = {}
    for v in ordered:
        if v not in memberships:
            raise ValueError(f"membership_weighted mode: no membership grade for {v!r}")
        grade = memberships[v]
        if not 0.0 <= grade <= 1.0:
            raise ValueError(f"membership grade for {v!r} outside [0, 1]: {grade}")
        weights[v] = 1.0 - grade
    pool = list(ordered)
    picked: list[VertexId] = []
    for _ in range(t):
        total = sum(weights[v] for v in pool)
        if total <= 0.0:
            i = rng.randrange(len(pool))
        else:
            x = rng.random() * total
            acc = 0.0
            i = len(pool) - 1
            for k, v in enumerate(pool):
                acc += weights[v]
                if x < acc:
                    i = k
                    break
        picked.append(pool.pop(i))
    return picked


def percolate(
    g: UndirectedGraph,
    spec: PercolationSpec,
    memberships: Mapping[VertexId, float] | None = None,
) -> PercolationOutcome:
    """Remove ``spec.removal_count`` distinct vertices from ``g``.

    The surviving graph keeps exactly the edges with both endpoints
    alive; survivors that lost all their edges stay as isolated
    vertices. Membership-weighted mode needs a grade for every vertex.
    """
    n = g.vertex_count
    if spec.removal_count > n:
        raise ValueError(f"cannot remove {spec.removal_count} of {n} vertices")
    ordered = list(g.vertices)  # already sorted lexicographically
    rng = random.Random(spec.seed)
    if spec.mode == "membership_weighted":
        if memberships is None:
            raise ValueError("membership_weighted mode requires vertex memberships")
        removed = _weighted_draws(ordered, spec.removal_count, rng, memberships)
    else:
        removed = _uniform_draws(ordered, spec.removal_count, rng)
    return PercolationOutcome(g.remove_vertices(removed), tuple(removed), spec.seed)


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(base_seed: int, fraction_index: int, trial_index: int) -> int:
    """Per-trial seed: chained splitmix64 over the three inputs."""
    h = _splitmix64(base_seed & _MASK64)
    h = _splitmix64(h ^ ((fraction_index + 1) & _MASK64))
    h = _splitmix64(h ^ ((trial_index + 1) & _MASK64))
    return h


def removal_count_for_fraction(fraction: float, vertex_count: int) -> int:
    """Fraction-of-vertices to count, rounding half away from zero."""
    return int(math.floor(fraction * vertex_count + 0.5))


@dataclass(frozen=True)
class SweepPoint:
    """Trial means at one removal fraction, with their standard errors."""

    fraction: float
    mean_average_degree: float
    mean_average_path_length: float
    trials: int
    sem_average_degree: float
    sem_average_path_length: float


@dataclass(frozen=True)
class SweepSeries:
    points: tuple[SweepPoint, ...]


def _mean_sem(values: Sequence[float]) -> tuple[float, float]:
    k = len(values)
    mean = sum(values) / k
    if k < 2:
        return mean, 0.0
    var = sum((v - mean) ** 2 for v in values) / (k - 1)
    return mean, math.sqrt(var / k)


def sweep(
    g: UndirectedGraph,
    fractions: Iterable[float],
    trials: int,
    base_seed: int,
    mode: str = "uniform",
    memberships: Mapping[VertexId, float] | None = None,
) -> SweepSeries:
    """Mean average degree and path length per removal fraction.

    Runs ``trials`` independent percolations at each fraction, with
    removal counts per :func:`removal_count_for_fraction` and seeds per
    :func:`derive_seed`. Degenerate outcomes count as 0, never skipped.
    """
    fracs = [float(f) for f in fractions]
    if not fracs:
        raise ValueError("need at least one fraction")
    if any(not 0.0 <= f <= 1.0 for f in fracs):
        raise ValueError("fractions must lie in [0, 1]")
    if any(b <= a for a, b in zip(fracs, fracs[1:])):
        raise ValueError("fractions must be strictly increasing")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n = g.vertex_count
    points = []
    for fi, fraction in enumerate(fracs):
        t = removal_count_for_fraction(fraction, n)
        degs = []
        apls = []
        for ti in range(trials):
            spec = PercolationSpec(t, derive_seed(base_seed, fi, ti), mode)
            outcome = percolate(g, spec, memberships)
            degs.append(average_degree(outcome.graph))
            apls.append(average_path_length(outcome.graph))
        mean_deg, sem_deg = _mean_sem(degs)
        mean_apl, sem_apl = _mean_sem(apls)
        points.append(
            SweepPoint(fraction, mean_deg, mean_apl, trials, sem_deg, sem_apl)
        )
    return SweepSeries(tuple(points))


def render_sweep_csv(series: SweepSeries) -> str:
    """Fixed-header CSV, 6 decimal places, LF endings."""
    lines = ["fraction,mean_avg_degree,mean_avg_path_length,trials"]
    for p in series.points:
        lines.append(
            f"{p.fraction:.6f},{p.mean_average_degree:.6f},"
            f"{p.mean_average_path_length:.6f},{p.trials}"
        )
    return "\n".join(lines) + "\n"


def sweep_metadata(base_seed: int, mode: str) -> dict:
    """Sidecar metadata: seed, mode, and the conventions in force."""
    return {
        "base_seed": base_seed,
        "mode": mode,
        "mode_note": (
            "membership_weighted is an extension beyond uniform removal"
            if mode == "membership_weighted"
            else "uniform removal"
        ),
        "seed_derivation": SEED_DERIVATION,
        "rounding": ROUNDING_RULE,
        "path_length_convention": CONVENTIONS["apl"],
        "empty_outcome_convention": EMPTY_OUTCOME_RULE,
    }


def render_sweep_metadata(base_seed: int, mode: str) -> str:
    return json.dumps(sweep_metadata(base_seed, mode), indent=2, sort_keys=True) + "\n"
