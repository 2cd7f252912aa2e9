"""The acceptance grid: ten end-to-end checks, shared by ``genshift verify`` and pytest.

Every check is deterministic given ``seed``.  Random instances come from
:class:`random.Random` (Mersenne Twister) seeded with ``seed * 1000 + number``,
whose ``randrange``/``choice`` streams are stable across CPython releases.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .core import (
    Alphabet, FiniteSupportConfig, FiniteSupportPermutation, SemigroupKind,
    all_configs, compose_index_maps, disagreement, is_homeomorphism, shift_apply,
)
from .errors import BudgetExceeded
from .relations import (
    DEFAULT_BUDGET, RelationKind, decide, decide_L_H, decide_P, decide_P_H,
    decide_Q, equivalence_harness, extend_alphabet, harness_cost, oracle,
    oracle_L_H, oracle_P,
)
from .topology import Window, semigroup_maps
from .witnesses import (
    collapse_pair, witness_L_violation, witness_P_H_blocks,
    witness_P_H_countable, witness_Q_infinite,
)

__all__ = ["FINITE_GRID", "COMBOS", "CriterionResult", "CRITERIA", "grid_cost",
           "check_budget", "run_criterion", "run_all", "random_fs_config"]

FINITE_GRID = ((2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3))
COMBOS = (
    (RelationKind.P, SemigroupKind.S), (RelationKind.P, SemigroupKind.H),
    (RelationKind.Q, SemigroupKind.S), (RelationKind.Q, SemigroupKind.H),
    (RelationKind.L, SemigroupKind.H),
)
RUNTIME_LIMIT_S = 30.0


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


def grid_cost() -> int:
    """Largest single-harness cost over the finite grid."""
    return max(harness_cost(k, n, r, s) for k, n in FINITE_GRID for r, s in COMBOS)


def check_budget(budget: int):
    cost = grid_cost()
    if cost > budget:
        raise BudgetExceeded(f"acceptance grid needs {cost} shift applications, budget is {budget}")


def random_fs_config(rng: random.Random, alphabet: Alphabet, max_exceptions: int = 6,
                     span: int = 24, default=None) -> FiniteSupportConfig:
    default = rng.choice(alphabet.symbols) if default is None else default
    count = rng.randint(0, max_exceptions)
    indices = rng.sample(range(span), count)
    return FiniteSupportConfig(alphabet, default, tuple((i, rng.choice(alphabet.symbols)) for i in indices))


def _rng(seed: int, number: int) -> random.Random:
    return random.Random(seed * 1000 + number)


_AB = Alphabet(("a", "b"))
_ABC = Alphabet(("a", "b", "c"))


# ---------------------------------------------------------------------------
# individual criteria; each returns (passed, detail)
# ---------------------------------------------------------------------------

def _c1_ps_equivalence(seed, budget):
    t0 = time.perf_counter()
    pairs = mismatches = 0
    for k, n in FINITE_GRID:
        rep = equivalence_harness(k, n, RelationKind.P, SemigroupKind.S, budget)
        pairs += rep.pairs_checked
        mismatches += len(rep.mismatches)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < RUNTIME_LIMIT_S
    return ok, f"{pairs} pairs, {mismatches} mismatches, within {RUNTIME_LIMIT_S:.0f}s: {elapsed < RUNTIME_LIMIT_S}"


def _c2_diagonal_laws(seed, budget):
    pairs = bad = 0
    for k, n in FINITE_GRID:
        for relation in (RelationKind.P, RelationKind.L):
            rep = equivalence_harness(k, n, relation, SemigroupKind.H, budget)
            bad += len(rep.mismatches)
            for x, y, o, _ in rep.rows:
                pairs += 1
                bad += o != (x == y)
    return bad == 0, f"{pairs} oracle verdicts (P(H), L(H)), {bad} off-diagonal or mismatched"


def _c3_q_equals_p(seed, budget):
    pairs = bad = 0
    for k, n in FINITE_GRID:
        pts = list(all_configs(Alphabet.of_size(k), n))
        for kind in SemigroupKind:
            rep = equivalence_harness(k, n, RelationKind.Q, kind, budget)
            bad += len(rep.mismatches)
            for x, y in itertools.product(pts, repeat=2):
                pairs += 1
                bad += decide_Q(x, y, kind).value != decide_P(x, y, kind).value
    return bad == 0, f"{pairs} pairs x kind, {bad} mismatches"


def _c4_countable_witnesses(seed, budget):
    rng = _rng(seed, 4)
    traces = valid = ph_pairs = 0
    for _ in range(100):
        x, y = random_fs_config(rng, _AB), random_fs_config(rng, _AB)
        p = rng.choice(_AB.symbols)
        ph = decide_P_H(x, y).value and x != y
        ph_pairs += ph
        for depth in range(1, 9):
            w = Window.prefix(depth)
            if ph:
                traces += 1
                valid += witness_P_H_countable(x, y, w, 256).valid
            if decide_Q(x, y, SemigroupKind.H).value:
                traces += 1
                valid += witness_Q_infinite(x, y, p, w, 256).valid
    return valid == traces, f"{valid}/{traces} traces valid ({ph_pairs} non-diagonal P(H) pairs)"


def _c5_l_refutation(seed, budget):
    rng = _rng(seed, 5)
    ok = 0
    for _ in range(50):
        dx, dy = rng.sample(_AB.symbols, 2)
        x, y = random_fs_config(rng, _AB, default=dx), random_fs_config(rng, _AB, default=dy)
        p, q = rng.sample(_AB.symbols, 2)
        w = Window(tuple(rng.sample(range(16), rng.randint(1, 8))))
        trace = witness_L_violation(x, y, p, q, w)
        ok += trace.valid and not decide_L_H(x, y).value
    return ok == 50, f"{ok}/50 refutations valid with decide_L_H false"


def _c6_blocks(seed, budget):
    rng = _rng(seed, 6)
    ok = 0
    for _ in range(50):
        d = rng.choice(_AB.symbols)
        x, y = random_fs_config(rng, _AB, default=d), random_fs_config(rng, _AB, default=d)
        ok += all(witness_P_H_blocks(x, y, Window.prefix(depth), 512).valid for depth in range(1, 7))
    return ok == 50, f"{ok}/50 pairs valid at depths 1..6 (bound 512, blocks disjoint on 0..63)"


def _c7_algebraic_laws(seed, budget):
    checks = bad = 0
    for n in (1, 2, 3):
        pts = list(all_configs(_AB, n))
        maps = list(semigroup_maps(n, SemigroupKind.S))
        for phi in maps:
            image = {shift_apply(phi, x) for x in pts}
            surjective = set(phi.table) == set(range(n))
            checks += 1
            bad += is_homeomorphism(phi, _AB, phi.index_set) != (len(image) == len(pts))
            bad += surjective != (len(image) == len(pts))
            for psi in maps:
                chi = compose_index_maps(phi, psi)
                for x in pts:
                    checks += 1
                    bad += shift_apply(phi, shift_apply(psi, x)) != shift_apply(chi, x)
    return bad == 0, f"{checks} checks over |Γ|≤3, |X|=2, {bad} failures"


def _c8_permutation_invariance(seed, budget):
    checks = bad = 0
    for k, n in FINITE_GRID:
        pts = list(all_configs(Alphabet.of_size(k), n))
        perms = list(semigroup_maps(n, SemigroupKind.H))
        for x, y in itertools.product(pts, repeat=2):
            size = disagreement(x, y).cardinality
            for phi in perms:
                checks += 1
                bad += disagreement(shift_apply(phi, x), shift_apply(phi, y)).cardinality != size
    rng = _rng(seed, 8)
    for _ in range(100):
        x, y = random_fs_config(rng, _AB), random_fs_config(rng, _AB)
        swaps = [tuple(rng.sample(range(32), 2)) for _ in range(rng.randint(1, 6))]
        phi = FiniteSupportPermutation.from_swaps(swaps)
        before, after = disagreement(x, y), disagreement(shift_apply(phi, x), shift_apply(phi, y))
        checks += 1
        bad += before.kind != after.kind or before.cardinality != after.cardinality
    return bad == 0, f"{checks} checks, {bad} failures"


def _c9_collapse(seed, budget):
    rng = _rng(seed, 9)
    checks = bad = 0
    for _ in range(100):
        x, y, u = (random_fs_config(rng, _ABC) for _ in range(3))
        p, q = rng.choice(_ABC.symbols), rng.choice(_ABC.symbols)
        z, w = collapse_pair(x, y, u, p, q)
        checks += 1
        bad += decide_P_H(x, y).value and not decide_P_H(z, w).value
        bad += decide_L_H(x, y).value and not decide_L_H(z, w).value
    pts = list(all_configs(_AB, 2))
    for x, y, u in itertools.product(pts, repeat=3):
        for p, q in itertools.product(_AB.symbols, repeat=2):
            z, w = collapse_pair(x, y, u, p, q)
            checks += 1
            bad += decide_P_H(x, y).value and not decide_P_H(z, w).value
            bad += decide_L_H(x, y).value and not decide_L_H(z, w).value
            bad += oracle_P(x, y, SemigroupKind.H).value and not oracle_P(z, w, SemigroupKind.H).value
            bad += oracle_L_H(x, y).value and not oracle_L_H(z, w).value
    return bad == 0, f"{checks} quintuples, {bad} violated implications"


def _c10_alphabet_extension(seed, budget):
    checks = bad = 0
    pts = list(all_configs(_AB, 2))
    for x, y in itertools.product(pts, repeat=2):
        bx, by = extend_alphabet(x, _ABC), extend_alphabet(y, _ABC)
        for relation, kind in COMBOS:
            for route in (oracle, decide):
                checks += 1
                bad += route(relation, kind, x, y).value != route(relation, kind, bx, by).value
    return bad == 0, f"{checks} verdicts, {bad} changed under {{a,b}} -> {{a,b,c}}"


CRITERIA: list = [
    (1, "P(S) oracle = decider on finite grid", _c1_ps_equivalence),
    (2, "P(H) and L(H) oracles are the diagonal", _c2_diagonal_laws),
    (3, "Q = P on finite index sets", _c3_q_equals_p),
    (4, "countable deciders backed by witnesses", _c4_countable_witnesses),
    (5, "L(H) refutation by swaps", _c5_l_refutation),
    (6, "block-partition construction", _c6_blocks),
    (7, "composition and homeomorphism laws", _c7_algebraic_laws),
    (8, "disagreement size is permutation invariant", _c8_permutation_invariance),
    (9, "collapse preserves P(H) and L(H)", _c9_collapse),
    (10, "verdicts invariant under alphabet extension", _c10_alphabet_extension),
]


def run_criterion(number: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> CriterionResult:
    try:
        name, fn = next((n, f) for k, n, f in CRITERIA if k == number)
    except StopIteration:
        raise ValueError(f"no acceptance criterion numbered {number}") from None
    t0 = time.perf_counter()
    passed, detail = fn(seed, budget)
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - t0)


def run_all(seed: int = 0, budget: int = DEFAULT_BUDGET,
            progress: Callable[[CriterionResult], None] = None) -> list:
    check_budget(budget)
    results = []
    for number, _, _ in CRITERIA:
        res = run_criterion(number, seed, budget)
        if progress:
            progress(res)
        results.append(res)
    return results
