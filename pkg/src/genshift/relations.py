"""Proximal (P), regionally proximal (Q) and syndetically proximal (L) relations.

Two independent routes are provided for each relation:

* brute-force *oracles*, which enumerate the acting semigroup on a finite
  index set and test the defining property directly, and
* closed-form *deciders*, which read the verdict off the agreement and
  disagreement sets and also accept finite-support points of ``X^ℕ``.

:func:`equivalence_harness` runs both over every pair of ``X^Γ``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .core import (
    Alphabet, Config, DenseConfig, FiniteSupportConfig, SemigroupKind,
    agreement, all_configs, disagreement,
)
from .errors import BudgetExceeded, IndexSetMismatch, InfiniteIndexSet, NotASuperset
from .topology import orbit_pairs

__all__ = [
    "RelationKind", "Method", "Verdict", "DEFAULT_BUDGET",
    "oracle_P", "oracle_Q", "oracle_L_H", "oracle",
    "decide_P_S", "decide_P_H", "decide_P", "decide_Q", "decide_L_H", "decide",
    "HarnessReport", "harness_cost", "equivalence_harness", "extend_alphabet",
]

DEFAULT_BUDGET = 2 ** 25


class RelationKind(enum.Enum):
    P = "P"
    Q = "Q"
    L = "L"

    def __str__(self):
        return self.value


class Method(enum.Enum):
    ORACLE = "oracle"
    DECIDER = "decider"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    value: bool
    method: Method
    witness_hint: Optional[Union[int, str]] = None

    def __bool__(self):
        return self.value

    def to_record(self) -> dict:
        return {"value": self.value, "method": str(self.method), "witness_hint": self.witness_hint}


def _check_pair(x: Config, y: Config):
    if x.index_set != y.index_set:
        raise IndexSetMismatch(f"index sets differ: {x.index_set} vs {y.index_set}")


def _finite_pair(x: Config, y: Config):
    _check_pair(x, y)
    if not x.index_set.is_finite:
        raise InfiniteIndexSet("oracles enumerate the semigroup and need a finite index set")
    return x.values, y.values


def _check_l_kind(kind):
    if kind is not SemigroupKind.H:
        raise ValueError("L is only defined for the group H")


# ---------------------------------------------------------------------------
# Oracles (finite Γ)
# ---------------------------------------------------------------------------

def _equalizable(xv: tuple, yv: tuple, kind: SemigroupKind) -> bool:
    n = len(xv)
    if kind is SemigroupKind.S:
        tables = itertools.product(range(n), repeat=n)
    else:
        tables = itertools.permutations(range(n))
    for t in tables:
        if all(xv[i] == yv[i] for i in t):
            return True
    return False


def oracle_P(x: Config, y: Config, kind: SemigroupKind) -> Verdict:
    """Is there a semigroup element with ``σ_φ x = σ_φ y``?

    With Γ and X finite the acting semigroup is finite, so a net realising
    proximality has a constant subnet and a single equalizing element
    suffices.
    """
    xv, yv = _finite_pair(x, y)
    return Verdict(_equalizable(xv, yv, kind), Method.ORACLE)


def oracle_Q(x: Config, y: Config, kind: SemigroupKind) -> Verdict:
    # in a finite discrete phase space the approximating triple net is
    # eventually constant, so Q collapses onto P
    return oracle_P(x, y, kind)


def oracle_L_H(x: Config, y: Config) -> Verdict:
    """Does every pair in the H-orbit of ``(x, y)`` lie in P(H)?"""
    _finite_pair(x, y)
    for u, v in sorted(orbit_pairs(x, y, SemigroupKind.H), key=lambda p: (p[0].values, p[1].values)):
        if not _equalizable(u.values, v.values, SemigroupKind.H):
            return Verdict(False, Method.ORACLE)
    return Verdict(True, Method.ORACLE)


def oracle(relation: RelationKind, kind: SemigroupKind, x: Config, y: Config) -> Verdict:
    if relation is RelationKind.P:
        return oracle_P(x, y, kind)
    if relation is RelationKind.Q:
        return oracle_Q(x, y, kind)
    _check_l_kind(kind)
    return oracle_L_H(x, y)


# ---------------------------------------------------------------------------
# Deciders (finite Γ or finite-support points of X^ℕ)
# ---------------------------------------------------------------------------

def decide_P_S(x: Config, y: Config) -> Verdict:
    """P(S): some coordinate agrees.  The hint is the least such index."""
    beta = agreement(x, y).first()
    if beta is None:
        return Verdict(False, Method.DECIDER)
    return Verdict(True, Method.DECIDER, beta)


def decide_P_H(x: Config, y: Config) -> Verdict:
    """P(H): the diagonal, plus (over ℕ) pairs agreeing on an infinite set."""
    if x == y:
        _check_pair(x, y)
        return Verdict(True, Method.DECIDER, "identity")
    if x.index_set.is_finite:
        _check_pair(x, y)
        return Verdict(False, Method.DECIDER)
    if agreement(x, y).is_infinite:
        return Verdict(True, Method.DECIDER, "MatchingWitness")
    return Verdict(False, Method.DECIDER)


def decide_P(x: Config, y: Config, kind: SemigroupKind) -> Verdict:
    return decide_P_S(x, y) if kind is SemigroupKind.S else decide_P_H(x, y)


def decide_Q(x: Config, y: Config, kind: SemigroupKind) -> Verdict:
    """Q is everything over ℕ and coincides with P on a finite index set."""
    _check_pair(x, y)
    if x.index_set.is_finite:
        return decide_P(x, y, kind)
    agreement(x, y)  # validates alphabet and representation
    return Verdict(True, Method.DECIDER, "PairingDoubleShift")


def decide_L_H(x: Config, y: Config) -> Verdict:
    """L(H): the diagonal for finite Γ, finite disagreement over ℕ."""
    if x.index_set.is_finite:
        _check_pair(x, y)
        if x == y:
            return Verdict(True, Method.DECIDER, "identity")
        return Verdict(False, Method.DECIDER)
    if disagreement(x, y).is_infinite:
        return Verdict(False, Method.DECIDER)
    return Verdict(True, Method.DECIDER, "BlockPartitionWitness")


def decide(relation: RelationKind, kind: SemigroupKind, x: Config, y: Config) -> Verdict:
    if relation is RelationKind.P:
        return decide_P(x, y, kind)
    if relation is RelationKind.Q:
        return decide_Q(x, y, kind)
    _check_l_kind(kind)
    return decide_L_H(x, y)


# ---------------------------------------------------------------------------
# Harness
# ---------------------------------------------------------------------------

def harness_cost(k: int, n: int, relation: RelationKind, kind: SemigroupKind) -> int:
    """Worst-case number of shift applications the harness performs."""
    maps = n ** n if kind is SemigroupKind.S else math.factorial(n)
    pairs = k ** (2 * n)
    if relation is RelationKind.L:
        return pairs * (2 * maps + maps * 2 * maps)
    return pairs * 2 * maps


@dataclass
class HarnessReport:
    relation: RelationKind
    semigroup: SemigroupKind
    alphabet: Alphabet
    gamma: int
    pairs_checked: int = 0
    true_count: int = 0
    mismatches: list = field(default_factory=list)
    rows: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_record(self) -> dict:
        return {
            "relation": str(self.relation),
            "semigroup": str(self.semigroup),
            "alphabet": list(self.alphabet.symbols),
            "gamma": self.gamma,
            "pairs_checked": self.pairs_checked,
            "true_count": self.true_count,
            "mismatches": [
                {"x": x, "y": y, "oracle": o, "decider": d} for x, y, o, d in self.mismatches
            ],
        }


def equivalence_harness(
    alphabet: Union[Alphabet, int],
    gamma_size: int,
    relation: RelationKind,
    kind: SemigroupKind,
    budget: int = DEFAULT_BUDGET,
) -> HarnessReport:
    """Compare oracle and decider on every ordered pair of ``X^Finite(n)``.

    ``true_count`` counts decider verdicts.  Raises :class:`BudgetExceeded`
    before doing any work if the worst-case cost is over ``budget``.
    """
    if isinstance(alphabet, int):
        alphabet = Alphabet.of_size(alphabet)
    if gamma_size < 1:
        raise ValueError("gamma_size must be at least 1")
    if relation is RelationKind.L:
        _check_l_kind(kind)
    cost = harness_cost(len(alphabet), gamma_size, relation, kind)
    if cost > budget:
        raise BudgetExceeded(f"{cost} shift applications exceed budget {budget}")
    report = HarnessReport(relation, kind, alphabet, gamma_size)
    points = list(all_configs(alphabet, gamma_size))
    for x in points:
        for y in points:
            o = oracle(relation, kind, x, y).value
            d = decide(relation, kind, x, y).value
            report.pairs_checked += 1
            report.true_count += d
            report.rows.append((str(x), str(y), o, d))
            if o != d:
                report.mismatches.append((str(x), str(y), o, d))
    return report


def extend_alphabet(x: Config, bigger: Alphabet) -> Config:
    """Reinterpret ``x`` as a point of ``bigger^Γ``."""
    if not x.alphabet.issubset(bigger):
        raise NotASuperset(f"{bigger} does not contain {x.alphabet}")
    if isinstance(x, DenseConfig):
        return DenseConfig(bigger, x.values)
    if isinstance(x, FiniteSupportConfig):
        return FiniteSupportConfig(bigger, x.default, x.exceptions)
    raise TypeError(f"cannot re-alphabet a {type(x).__name__}")
