"""Cylinder windows, window convergence of sequences, and finite orbits."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import (
    Config, DenseConfig, DenseMap, IndexSet, SemigroupKind, shift_apply,
)
from .errors import IndexSetMismatch, InfiniteIndexSet

__all__ = [
    "Window", "ConvergenceReport", "converges_on_window",
    "semigroup_maps", "orbit_pairs",
]


@dataclass(frozen=True)
class Window:
    """A finite set of coordinates; agreement on it is a basic open condition."""

    indices: tuple

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        if len(set(indices)) != len(indices):
            raise ValueError(f"repeated index in window {indices}")
        if any(i < 0 for i in indices):
            raise ValueError("window indices must be non-negative")
        object.__setattr__(self, "indices", indices)

    @classmethod
    def prefix(cls, depth: int) -> "Window":
        return cls(tuple(range(depth)))

    def check(self, gamma: IndexSet) -> "Window":
        bad = [i for i in self.indices if not gamma.contains(i)]
        if bad:
            raise IndexSetMismatch(f"window indices {bad} are outside {gamma}")
        return self

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)


@dataclass(frozen=True)
class ConvergenceReport:
    """Result of checking a sequence against a limit on a window.

    ``stabilization_index`` is the least ``n₀`` such that every checked term
    from ``n₀`` to ``checked_bound`` agrees with the limit on the window, or
    ``None`` when even the last term disagrees.
    """

    window: Window
    stabilization_index: Optional[int]
    limit_on_window: tuple
    checked_bound: int

    @property
    def stabilized(self) -> bool:
        return self.stabilization_index is not None

    def to_record(self) -> dict:
        return {
            "window": list(self.window.indices),
            "stabilization_index": -1 if self.stabilization_index is None else self.stabilization_index,
            "limit": list(self.limit_on_window),
            "bound": self.checked_bound,
        }


def converges_on_window(
    seq: Callable[[int], Config],
    target: Config,
    window: Window,
    bound: int,
    start: int = 0,
) -> ConvergenceReport:
    """Find where ``seq(n)`` settles onto ``target`` over ``window``.

    Terms ``seq(start), ..., seq(bound)`` are evaluated on the window only.
    """
    if bound < max(start, 1):
        raise ValueError(f"bound {bound} is below the first term {start}")
    window.check(target.index_set)
    limit = target.on(window)
    stab = None
    for n in range(bound, start - 1, -1):
        term = seq(n)
        if term.index_set != target.index_set:
            raise IndexSetMismatch(f"term {n} lives on {term.index_set}, target on {target.index_set}")
        if term.on(window) != limit:
            break
        stab = n
    return ConvergenceReport(window, stab, limit, bound)


def semigroup_maps(n: int, kind: SemigroupKind) -> Iterator[DenseMap]:
    """Elements of Γ^Γ (kind S) or of Sym(Γ) (kind H) for Γ = Finite(n).

    Lexicographic in the table encoding, so the identity is the first
    permutation.
    """
    if kind is SemigroupKind.S:
        tables = itertools.product(range(n), repeat=n)
    else:
        tables = itertools.permutations(range(n))
    for t in tables:
        yield DenseMap(t)


def orbit_pairs(x: Config, y: Config, kind: SemigroupKind) -> frozenset:
    """``{(σ_φ x, σ_φ y)}`` over the whole semigroup; finite Γ only.

    In a finite discrete space this is also the orbit closure.
    """
    gamma = x.index_set
    if not gamma.is_finite:
        raise InfiniteIndexSet("orbit enumeration needs a finite index set")
    if y.index_set != gamma:
        raise IndexSetMismatch(f"index sets differ: {gamma} vs {y.index_set}")
    assert isinstance(x, DenseConfig) and isinstance(y, DenseConfig)
    return frozenset(
        (shift_apply(phi, x), shift_apply(phi, y))
        for phi in semigroup_maps(gamma.size, kind)
    )
