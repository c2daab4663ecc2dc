"""Bernoulli point-selection process cross-checking the unit sums.

Each trial flips an exact coin of bias x for every interior point of the
triangle, takes the convex chain hull of the chosen points, and tallies
the resulting polygon. The law of the hull is
    prob(P) = (1-x)^u(P) * x^(v(P)-2)
and the empirical table is compared row by row against those exact
rationals via binomial z-scores.

Randomness contract: the trial with index t under seed s draws 64-bit
words from sha256(s, t, block counter), so a trial's outcome depends only
on (seed, trial index). Splitting the trial range across processes
changes nothing; merged tallies are identical to the serial run. Coins
are exact: a word w accepts iff w mod den < num, after rejecting the
top sliver of the 2^64 range so every residue is equally likely.
"""

from __future__ import annotations

import hashlib
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import inf, sqrt

from .enumeration import enumerate_polygons
from .geometry import ChainPolygon, TriangleSpec, convex_hull_chain, polygon_stats, triangle_interior_points


@dataclass(frozen=True)
class SimulationConfig:
    spec: TriangleSpec
    x: Fraction
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if not 0 < self.x < 1:
            raise ValueError(f"x must lie strictly between 0 and 1, got {self.x}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass
class FrequencyTable:
    counts: dict  # ChainPolygon -> nonnegative int

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def exact_prob(p: ChainPolygon, x) -> Fraction:
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"x must lie strictly between 0 and 1, got {x}")
    s = polygon_stats(p)
    return (1 - x) ** s.u * x ** (s.v_count - 2)


def _count_masks(seed: int, start: int, stop: int, num: int, den: int, npoints: int) -> dict:
    """Tally chosen-point bitmasks for trials start..stop-1."""
    limit = (2 ** 64 // den) * den
    pack = struct.pack
    unpack = struct.unpack
    sha = hashlib.sha256
    tallies: dict[int, int] = {}
    for trial in range(start, stop):
        mask = 0
        words: tuple = ()
        widx = 0
        block = 0
        for point in range(npoints):
            while True:
                if widx >= len(words):
                    words = unpack(">4Q", sha(pack(">QQQ", seed, trial, block)).digest())
                    widx = 0
                    block += 1
                w = words[widx]
                widx += 1
                if w < limit:
                    break
            if w % den < num:
                mask |= 1 << point
        tallies[mask] = tallies.get(mask, 0) + 1
    return tallies


def simulate(config: SimulationConfig, jobs: int = 1) -> FrequencyTable:
    """Run config.trials rounds; deterministic for fixed (seed, trials)."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    interior = triangle_interior_points(config.spec)
    num, den = config.x.numerator, config.x.denominator

    if jobs == 1 or config.trials < 2 * jobs:
        tallies = _count_masks(config.seed, 0, config.trials, num, den, len(interior))
    else:
        per = -(-config.trials // jobs)
        bounds = [(t, min(t + per, config.trials)) for t in range(0, config.trials, per)]
        tallies = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_count_masks, config.seed, a, b, num, den, len(interior))
                for a, b in bounds
            ]
            for fut in futures:
                for mask, c in fut.result().items():
                    tallies[mask] = tallies.get(mask, 0) + c

    counts: dict[ChainPolygon, int] = {}
    for mask, c in tallies.items():
        chosen = [pt for bit, pt in enumerate(interior) if mask >> bit & 1]
        poly = convex_hull_chain(chosen, config.spec)
        counts[poly] = counts.get(poly, 0) + c
    return FrequencyTable(counts)


@dataclass(frozen=True)
class ComparisonRow:
    polygon: ChainPolygon
    count: int
    empirical: float
    exact: Fraction
    z: float
    flagged: bool


@dataclass(frozen=True)
class ComparisonReport:
    config: SimulationConfig
    rows: tuple
    exact_total: Fraction
    z_threshold: float

    @property
    def flagged_rows(self) -> tuple:
        return tuple(r for r in self.rows if r.flagged)

    @property
    def ok(self) -> bool:
        return self.exact_total == 1 and not self.flagged_rows


def compare(table: FrequencyTable, config: SimulationConfig,
            z_threshold: float = 4.0) -> ComparisonReport:
    """One row per family member (zero counts included), enumeration order."""
    family = list(enumerate_polygons(config.spec))
    known = set(family)
    for poly in table.counts:
        if poly not in known:
            raise ValueError(f"table contains a polygon outside the family: {poly}")
    if table.total != config.trials:
        raise ValueError(f"table holds {table.total} trials, config says {config.trials}")

    rows = []
    exact_total = Fraction(0)
    for poly in family:
        p = exact_prob(poly, config.x)
        exact_total += p
        count = table.counts.get(poly, 0)
        emp = count / config.trials
        sigma = sqrt(float(p * (1 - p)) / config.trials)
        if sigma == 0.0:
            z = 0.0 if emp == float(p) else inf
        else:
            z = (emp - float(p)) / sigma
        rows.append(ComparisonRow(poly, count, emp, p, z, abs(z) > z_threshold))
    return ComparisonReport(config, tuple(rows), exact_total, z_threshold)
