"""Signature tooling: which exponent multisets make the unit sum equal 1?

A triangle's signature is the multiset {(u(P), v(P)-2) : P in the chain
family}; the unit-sum identity says every such signature satisfies
    sum over pairs of x^a * (1-x)^b == 1
exactly. This module computes signatures, tests arbitrary pair multisets
against that equation, searches exhaustively for solutions within bounds,
and looks for triangles realizing a given multiset. The search is bounded
tooling only: it reports matches and non-matches, nothing more.

Unlike the composition steps, exponents here may be 0 (the pair (0,1) is
required in every searched multiset, and it has a = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import enumerate_polygons
from .geometry import TriangleSpec, polygon_stats
from .polyalgebra import UnitPoly, term_x_pow_times_one_minus_x_pow

Pair = tuple[int, int]


class SearchCapExceeded(Exception):
    """The backtracking search hit its node cap before finishing."""


@dataclass(frozen=True)
class Signature:
    """Multiset of exponent pairs, stored sorted so equality is multiset equality."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        for a, b in pairs:
            if a < 0 or b < 0:
                raise ValueError(f"exponents must be nonnegative, got ({a},{b})")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def as_set(self) -> "Signature":
        """Collapse multiplicities (the sum-to-1 reading needs the multiset)."""
        return Signature(tuple(set(self.pairs)))


def triangle_signature(m: int, n: int) -> Signature:
    spec = TriangleSpec(m, n)
    pairs = []
    for p in enumerate_polygons(spec):
        s = polygon_stats(p)
        pairs.append((s.u, s.v_count - 2))
    return Signature(tuple(pairs))


def unit_sum_of(sig: Signature) -> UnitPoly:
    total = UnitPoly.zero()
    for a, b in sig:
        total = total + term_x_pow_times_one_minus_x_pow(a, b)
    return total


def is_unit_multiset(sig: Signature) -> bool:
    return unit_sum_of(sig) == UnitPoly.one()


def search_unit_multisets(max_a: int, max_b: int, max_size: int,
                          node_cap: int = 200_000) -> list:
    """Every multiset of pairs (a <= max_a, b <= max_b, size <= max_size)
    that contains (0,1) and sums to 1. Exhaustive within bounds; raises
    SearchCapExceeded rather than returning a truncated list.

    Pruning facts (terms are strictly positive on 0 < x < 1):
    - the partial sum at x = 1/2 can never exceed 1;
    - at x = 0 only a = 0 terms survive, so exactly one pair has a = 0;
    - at x = 1 only b = 0 terms survive, so exactly one pair has b = 0.
    """
    if max_a < 0 or max_b < 0:
        raise ValueError("exponent bounds must be >= 0")
    if max_size < 1 or node_cap < 1:
        raise ValueError("max_size and node_cap must be >= 1")

    candidates = [(a, b) for a in range(max_a + 1) for b in range(max_b + 1)]
    one = UnitPoly.one()
    found = []
    visited = 0

    def extend(start: int, chosen: list, val_half: Fraction, a0: int, b0: int):
        nonlocal visited
        for idx in range(start, len(candidates)):
            visited += 1
            if visited > node_cap:
                raise SearchCapExceeded(
                    f"visited more than {node_cap} nodes within bounds "
                    f"({max_a},{max_b},{max_size})"
                )
            a, b = candidates[idx]
            new_a0 = a0 + (a == 0)
            new_b0 = b0 + (b == 0)
            if new_a0 > 1 or new_b0 > 1:
                continue
            new_val = val_half + Fraction(1, 2 ** (a + b))
            if new_val > 1:
                continue
            chosen.append((a, b))
            if new_val == 1:
                sig = Signature(tuple(chosen))
                if (0, 1) in sig.pairs and unit_sum_of(sig) == one:
                    found.append(sig)
            elif len(chosen) < max_size:
                extend(idx, chosen, new_val, new_a0, new_b0)
            chosen.pop()

    extend(0, [], Fraction(0), 0, 0)
    return sorted(found, key=lambda s: (len(s), s.pairs))


def match_signature(sig: Signature, max_m: int, max_n: int) -> list:
    """All (m, n) within bounds whose triangle signature equals sig."""
    if max_m < 1 or max_n < 1:
        raise ValueError("triangle bounds must be >= 1")
    return [
        (m, n)
        for m in range(1, max_m + 1)
        for n in range(1, max_n + 1)
        if triangle_signature(m, n) == sig
    ]
