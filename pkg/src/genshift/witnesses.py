"""Constructive witnesses for relation membership and non-membership.

Each generator builds the explicit maps and points of a proof, evaluates the
relevant sequences on a cylinder window, and returns a :class:`WitnessTrace`
that is valid only if every sequence stabilizes within its bound and every
bijectivity certificate checks out pointwise.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .core import (
    COUNTABLE, Config, ConstantMap, DenseConfig, FiniteSupportConfig,
    FiniteSupportPermutation, IndexMap, MatchingExtension, PairingShiftPower,
    ProceduralConfig, agreement, disagreement, nth_outside, shift_apply,
)
from .errors import (
    AgreementNotInfinite, AlphabetTooSmall, DefaultsDiffer,
    DisagreementNotInfinite, IndexSetMismatch, NotAnAgreementIndex,
)
from .pairing import cantor_pair, cantor_unpair, mu, mu_inverse
from .relations import decide_P_H
from .topology import Window, converges_on_window

__all__ = [
    "WitnessTrace", "DEFAULT_BOUND", "check_inverse",
    "witness_P_S", "witness_Q_infinite", "witness_P_H_countable",
    "BlockPartition", "BlockUnionPermutation", "witness_P_H_blocks",
    "witness_L_violation", "collapse_pair", "collapse_trace",
]

DEFAULT_BOUND = 256


@dataclass
class WitnessTrace:
    construction: str
    claim: str
    parameters: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return (all(r.stabilized for r in self.reports.values())
                and all(self.certificates.values()))

    def to_record(self) -> dict:
        return {
            "construction": self.construction,
            "claim": self.claim,
            "parameters": self.parameters,
            "reports": [dict(label=k, **r.to_record()) for k, r in self.reports.items()],
            "certificates": dict(self.certificates),
            "valid": self.valid,
        }


def check_inverse(phi: IndexMap, indices) -> bool:
    """Pointwise check that ``phi.inverse`` inverts ``phi`` on ``indices``."""
    if not phi.bijective:
        return False
    for a in indices:
        if phi.inverse(phi(a)) != a or phi(phi.inverse(a)) != a:
            return False
    return True


def _countable_pair(x: Config, y: Config):
    if x.index_set != y.index_set:
        raise IndexSetMismatch(f"index sets differ: {x.index_set} vs {y.index_set}")
    if not (isinstance(x, FiniteSupportConfig) and isinstance(y, FiniteSupportConfig)):
        raise IndexSetMismatch("this construction needs finite-support points of X^ℕ")


# ---------------------------------------------------------------------------
# P(S): a constant map
# ---------------------------------------------------------------------------

def witness_P_S(x: Config, y: Config, beta: int) -> WitnessTrace:
    if x.index_set != y.index_set:
        raise IndexSetMismatch(f"index sets differ: {x.index_set} vs {y.index_set}")
    if not x.index_set.contains(beta) or x[beta] != y[beta]:
        raise NotAnAgreementIndex(f"x and y differ at {beta}")
    psi = ConstantMap(beta, x.index_set)
    sx, sy = shift_apply(psi, x), shift_apply(psi, y)
    return WitnessTrace(
        "ConstantMapWitness",
        claim=f"({x}, {y}) in P(S)",
        parameters={"psi": psi.literal(), "image": str(sx)},
        certificates={"images_equal": sx == sy},
    )


# ---------------------------------------------------------------------------
# Q over ℕ: truncate, then push the truncation off to infinity
# ---------------------------------------------------------------------------

def _truncation(x: Config, p: str, n: int) -> ProceduralConfig:
    # keep x on μ(ℕ × {k ≤ n}), p elsewhere
    return ProceduralConfig(
        x.alphabet,
        lambda a: x[a] if mu_inverse(a)[1] <= n else p,
        None, name=f"trunc({x},{p},{n})",
    )


def witness_Q_infinite(
    x: Config, y: Config, p: str, window: Window, bound: int = DEFAULT_BOUND,
) -> WitnessTrace:
    """``x^n → x``, ``y^n → y`` and ``σ_{φ^{2n}}`` sends both to constant ``p``."""
    _countable_pair(x, y)
    x.alphabet.check(p)
    window.check(x.index_set)
    const_p = FiniteSupportConfig.constant(x.alphabet, p)

    def images(z):
        return lambda n: shift_apply(PairingShiftPower(2 * n), _truncation(z, p, n))

    reports = {
        "truncation_x": converges_on_window(lambda n: _truncation(x, p, n), x, window, bound, start=1),
        "truncation_y": converges_on_window(lambda n: _truncation(y, p, n), y, window, bound, start=1),
        "image_x": converges_on_window(images(x), const_p, window, bound, start=1),
        "image_y": converges_on_window(images(y), const_p, window, bound, start=1),
    }
    sample = [(a, k) for a in range(8) for k in range(-4, 5)]
    certificates = {
        "pairing_injective": len({mu(a, k) for a, k in sample}) == len(sample)
        and all(mu_inverse(mu(a, k)) == (a, k) for a, k in sample),
        "shift_law": all(PairingShiftPower(1)(mu(a, k)) == mu(a, k + 1) for a, k in sample),
        "bijective": all(check_inverse(PairingShiftPower(2 * n), window) for n in range(1, bound + 1)),
    }
    return WitnessTrace(
        "PairingDoubleShift",
        claim=f"({x}, {y}) in Q(H) ⊆ Q(S)",
        parameters={
            "p": p, "phi": "pairshift(1)", "power": "pairshift(2n)",
            "mu_on_window": {str(a): list(mu_inverse(a)) for a in window},
        },
        reports=reports, certificates=certificates,
    )


# ---------------------------------------------------------------------------
# P(H) over ℕ: match a growing prefix into the agreement set
# ---------------------------------------------------------------------------

def witness_P_H_countable(
    x: Config, y: Config, window: Window, bound: int = DEFAULT_BOUND,
) -> WitnessTrace:
    """``φ_n`` sends ``0..n-1`` onto the first ``n`` agreement indices."""
    _countable_pair(x, y)
    agree = agreement(x, y)
    if not agree.is_infinite:
        raise AgreementNotInfinite(f"agreement set {agree} is finite")
    window.check(x.index_set)
    excluded = sorted(agree.indices)
    betas = [nth_outside(excluded, i) for i in range(bound)]

    maps = {}

    def phi(n):
        if n not in maps:
            maps[n] = MatchingExtension(tuple(betas[:n]))
        return maps[n]

    # the common limit reads x (= y) along the agreement enumeration
    limit = ProceduralConfig(x.alphabet, lambda i: x[nth_outside(excluded, i)], None, "limit")
    reports = {
        "image_x": converges_on_window(lambda n: shift_apply(phi(n), x), limit, window, bound, start=1),
        "image_y": converges_on_window(lambda n: shift_apply(phi(n), y), limit, window, bound, start=1),
    }
    certificates = {
        "prefix_in_agreement": all(b in agree for b in betas),
        "bijective": all(check_inverse(phi(n), window) for n in range(1, bound + 1)),
    }
    depth = max(window.indices, default=-1) + 1
    return WitnessTrace(
        "MatchingWitness",
        claim=f"({x}, {y}) in P(H)",
        parameters={
            "agreement": str(agree),
            "beta_prefix": betas[:depth],
            "phi_n": "match(beta_1..beta_n)",
        },
        reports=reports, certificates=certificates,
    )


# ---------------------------------------------------------------------------
# P(H) via a partition into countable blocks
# ---------------------------------------------------------------------------

class BlockPartition:
    """Partition ``{K_θ : θ ∈ A}`` of ℕ for a finite disagreement set ``B``.

    ``A = ℕ \\ B`` is enumerated increasingly as ``a_0, a_1, ...``;
    ``λ(b_i) = a_i`` injects ``B`` into ``A``; ``pair(θ, m) = a_{⟨rank θ, m⟩}``
    is a bijection ``A × ℕ → A``; and ``K_θ = pair({θ} × ℕ) ∪ λ⁻¹(θ)``.

    Inside each block a local enumeration is fixed: the λ-preimage (if any)
    gets local index 0 and ``pair(θ, m)`` comes next, in order of ``m``.
    """

    def __init__(self, disagreement_set):
        self.B = tuple(sorted(disagreement_set))
        self._B = frozenset(self.B)
        self.lam = {b: self.a(i) for i, b in enumerate(self.B)}
        self.lam_inv = {t: b for b, t in self.lam.items()}

    def a(self, j: int) -> int:
        return nth_outside(self.B, j)

    def rank(self, theta: int) -> int:
        return theta - bisect.bisect_left(self.B, theta)

    def pair(self, theta: int, m: int) -> int:
        return self.a(cantor_pair(self.rank(theta), m))

    def block_of(self, gamma: int) -> int:
        if gamma in self._B:
            return self.lam[gamma]
        return self.a(cantor_unpair(self.rank(gamma))[0])

    def has_preimage(self, theta: int) -> bool:
        return theta in self.lam_inv

    def local_index(self, gamma: int) -> int:
        if gamma in self._B:
            return 0
        m = cantor_unpair(self.rank(gamma))[1]
        return m + self.has_preimage(self.block_of(gamma))

    def global_index(self, theta: int, j: int) -> int:
        if self.has_preimage(theta):
            return self.lam_inv[theta] if j == 0 else self.pair(theta, j - 1)
        return self.pair(theta, j)

    def local_agreement(self, theta: int, i: int) -> int:
        """Local index of the ``i``-th (0-based) agreement element of ``K_θ``."""
        return i + self.has_preimage(theta)

    def members(self, theta: int, count: int) -> list:
        """The first ``count`` elements of ``K_θ`` by forward enumeration."""
        out = [self.lam_inv[theta]] if self.has_preimage(theta) else []
        out.extend(self.pair(theta, m) for m in range(count))
        return out


@dataclass(frozen=True)
class BlockUnionPermutation(IndexMap):
    """``ψ_n = ⋃_θ ψ^θ_n``: inside every block, the prefix-matching bijection."""

    partition: BlockPartition
    n: int

    index_set = COUNTABLE

    # Inside a block with a λ-preimage the local map is match(1, ..., n):
    # i < n ↦ i+1, n ↦ 0, and everything above n is fixed.  Blocks without
    # one are already entirely agreement, so ψ is the identity there.
    def _local(self, i):
        if i < self.n:
            return i + 1
        return 0 if i == self.n else i

    def _local_inverse(self, i):
        if i == 0:
            return self.n
        return i - 1 if i <= self.n else i

    def _apply(self, gamma, f):
        part = self.partition
        theta = part.block_of(gamma)
        if not part.has_preimage(theta):
            return gamma
        return part.global_index(theta, f(part.local_index(gamma)))

    def __call__(self, gamma):
        return self._apply(gamma, self._local)

    @property
    def bijective(self):
        return True

    def inverse(self, gamma):
        return self._apply(gamma, self._local_inverse)

    def literal(self):
        return f"blocks(B={list(self.partition.B)},n={self.n})"


def _blocks_disjoint_cover(part: BlockPartition, limit: int) -> bool:
    # forward-enumerate every K_θ that can reach below `limit`; since
    # a_j ≥ j and ⟨r, m⟩ ≥ max(r, m), θ = a_r and m range over r, m < limit
    owners = {}
    for r in range(limit):
        theta = part.a(r)
        for g in part.members(theta, limit):
            if g < limit:
                owners.setdefault(g, []).append(theta)
    for g in range(limit):
        if len(owners.get(g, ())) != 1 or owners[g][0] != part.block_of(g):
            return False
        theta = part.block_of(g)
        if part.global_index(theta, part.local_index(g)) != g:
            return False
    return True


def witness_P_H_blocks(
    x: Config, y: Config, window: Window, bound: int = DEFAULT_BOUND,
    sample: int = 64,
) -> WitnessTrace:
    _countable_pair(x, y)
    if x.default != y.default:
        raise DefaultsDiffer(f"defaults {x.default!r} and {y.default!r} differ")
    window.check(x.index_set)
    B = disagreement(x, y).indices
    part = BlockPartition(B)

    def target(gamma):
        theta = part.block_of(gamma)
        j = part.local_index(gamma)
        return x[part.global_index(theta, part.local_agreement(theta, j))]

    limit = ProceduralConfig(x.alphabet, target, None, "block-limit")
    reports = {
        "image_x": converges_on_window(
            lambda n: shift_apply(BlockUnionPermutation(part, n), x), limit, window, bound, start=1),
        "image_y": converges_on_window(
            lambda n: shift_apply(BlockUnionPermutation(part, n), y), limit, window, bound, start=1),
    }
    queried = sorted(set(window.indices) | set(range(sample)))
    certificates = {
        "lambda_injective_into_agreement": len(set(part.lam.values())) == len(part.B)
        and all(t not in part._B for t in part.lam.values()),
        "blocks_disjoint_cover": _blocks_disjoint_cover(part, sample),
        "block_agreement_infinite": all(
            x[g] == y[g]
            for r in range(4) for g in part.members(part.a(r), 16)[part.has_preimage(part.a(r)):]
        ),
        "bijective": all(
            check_inverse(BlockUnionPermutation(part, n), queried)
            for n in sorted({1, 2, 3, bound // 2, bound})
        ),
    }
    blocks = {}
    for g in queried:
        blocks.setdefault(part.block_of(g), []).append(g)
    return WitnessTrace(
        "BlockPartitionWitness",
        claim=f"({x}, {y}) in P(H)",
        parameters={
            "B": list(part.B),
            "lambda": {str(b): t for b, t in part.lam.items()},
            "blocks_on_window": {str(t): [g for g in gs if g in window.indices]
                                 for t, gs in sorted(blocks.items())
                                 if any(g in window.indices for g in gs)},
            "psi_n": "blocks(n)",
        },
        reports=reports, certificates=certificates,
    )


# ---------------------------------------------------------------------------
# L(H) refutation and the collapse construction
# ---------------------------------------------------------------------------

def collapse_pair(x: Config, y: Config, u: Config, p: str, q: str):
    """``z = q, w = p`` where ``x ≠ y``; ``z = w = u`` where ``x = y``."""
    if not (x.index_set == y.index_set == u.index_set):
        raise IndexSetMismatch("x, y and u must share an index set")
    alph = u.alphabet
    alph.check(p)
    alph.check(q)
    if isinstance(x, DenseConfig):
        z, w = [], []
        for a in range(len(x)):
            if x[a] != y[a]:
                z.append(q)
                w.append(p)
            else:
                z.append(u[a])
                w.append(u[a])
        return DenseConfig(alph, tuple(z)), DenseConfig(alph, tuple(w))
    if not all(isinstance(c, FiniteSupportConfig) for c in (x, y, u)):
        raise TypeError("collapse_pair needs dense or finite-support inputs")
    differ_by_default = x.default != y.default
    zd, wd = (q, p) if differ_by_default else (u.default, u.default)
    keys = x.support | y.support | u.support
    z_exc, w_exc = [], []
    for a in keys:
        if x[a] != y[a]:
            z_exc.append((a, q))
            w_exc.append((a, p))
        else:
            z_exc.append((a, u[a]))
            w_exc.append((a, u[a]))
    return FiniteSupportConfig(alph, zd, tuple(z_exc)), FiniteSupportConfig(alph, wd, tuple(w_exc))


def collapse_trace(x: Config, y: Config, u: Config, p: str, q: str) -> WitnessTrace:
    z, w = collapse_pair(x, y, u, p, q)
    if isinstance(x, DenseConfig):
        probe = range(len(x))
    else:
        probe = sorted(x.support | y.support | u.support | set(range(16)))
    replay = all(
        (z[a], w[a]) == ((q, p) if x[a] != y[a] else (u[a], u[a])) for a in probe
    )
    return WitnessTrace(
        "CollapsePair",
        claim=f"({x}, {y}) collapsed to ({z}, {w})",
        parameters={"u": str(u), "p": p, "q": q, "z": str(z), "w": str(w)},
        certificates={"pointwise_replay": replay},
    )


def witness_L_violation(
    x: Config, y: Config, p: str, q: str, window: Window,
) -> WitnessTrace:
    """Refute ``(x, y) ∈ L(H)`` when ``x`` and ``y`` differ on an infinite set.

    ``z`` is ``q`` on the disagreement set and ``p`` elsewhere.  Swapping the
    window with disagreement indices outside it carries ``(z, p̄)`` into the
    cylinder of ``(q̄, p̄)``, which is not a proximal pair.  The reported
    sequence is indexed by how many window coordinates have been swapped.
    """
    _countable_pair(x, y)
    x.alphabet.check(p)
    x.alphabet.check(q)
    if p == q:
        raise AlphabetTooSmall("the refutation needs two distinct symbols p ≠ q")
    window.check(x.index_set)
    differ = disagreement(x, y)
    if not differ.is_infinite:
        raise DisagreementNotInfinite(f"disagreement set {differ} is finite")
    alph = x.alphabet
    const_p = FiniteSupportConfig.constant(alph, p)
    const_q = FiniteSupportConfig.constant(alph, q)
    z = FiniteSupportConfig(alph, q, tuple((a, p) for a in differ.complement(x.index_set).indices))

    win = window.indices
    partners = []
    for b in differ.elements():
        if len(partners) == len(win):
            break
        if b not in win:
            partners.append(b)

    def psi(d):
        return FiniteSupportPermutation.from_swaps(zip(win[:d], partners[:d]))

    full = psi(len(win))
    bound = max(len(win), 1)
    reports = {
        "swapped_z": converges_on_window(lambda d: shift_apply(psi(d), z), const_q, window, bound, start=1),
        "fixed_p": converges_on_window(lambda d: shift_apply(psi(d), const_p), const_p, window, bound, start=1),
    }
    certificates = {
        "z_is_collapse": z == collapse_pair(x, y, const_p, p, q)[0],
        "partners_in_disagreement": all(b in differ for b in partners),
        "partners_outside_window": not set(partners) & set(win),
        "bijective": check_inverse(full, set(win) | set(partners)),
        "limit_not_proximal": not decide_P_H(const_q, const_p).value,
    }
    return WitnessTrace(
        "SwapRefutation",
        claim=f"({const_q}, {const_p}) in closure of H({z}, {const_p}) but not in P(H); "
              f"so ({x}, {y}) not in L(H)",
        parameters={"z": str(z), "p": p, "q": q, "psi": full.literal(), "partners": partners},
        reports=reports, certificates=certificates,
    )
