"""Alphabets, index sets, points of X^Γ, index maps and the generalized shift.

A generalized shift sends a point ``x`` of ``X^Γ`` to ``α ↦ x(φ(α))`` for a
self-map ``φ`` of the index set.  Three point representations exist:

* :class:`DenseConfig` -- a tuple of symbols, for ``Γ = {0, ..., n-1}``;
* :class:`FiniteSupportConfig` -- a default symbol plus finitely many
  exceptions, for ``Γ = ℕ``;
* :class:`ProceduralConfig` -- an arbitrary evaluation rule, used only inside
  witness constructions.

Everything here is immutable.
"""

from __future__ import annotations

import bisect
import enum
import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .errors import (
    AlphabetMismatch,
    IndexSetMismatch,
    NotBijective,
    UnknownSymbol,
    UnrepresentableComposition,
    UnrepresentableResult,
)
from .pairing import mu, mu_inverse

__all__ = [
    "Alphabet", "IndexSet", "COUNTABLE", "SemigroupKind",
    "Config", "DenseConfig", "FiniteSupportConfig", "ProceduralConfig",
    "IndexMap", "DenseMap", "FiniteSupportPermutation", "ConstantMap",
    "PairingShiftPower", "MatchingExtension", "ComposedMap",
    "AgreementSummary",
    "identity_map", "shift_apply", "compose_index_maps", "is_homeomorphism",
    "agreement", "disagreement", "all_configs", "nth_outside",
]


# ---------------------------------------------------------------------------
# Alphabet and index set
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    """A finite ordered set of at least two distinct symbol tokens."""

    symbols: tuple

    def __post_init__(self):
        symbols = tuple(str(s) for s in self.symbols)
        if len(symbols) < 2:
            raise ValueError("an alphabet needs at least two symbols")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in {symbols!r}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def of_size(cls, k: int) -> "Alphabet":
        """``a, b, c, ...`` for ``k ≤ 26``, ``s0, s1, ...`` beyond."""
        if k <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:k]))
        return cls(tuple(f"s{i}" for i in range(k)))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol):
        return symbol in self.symbols

    def issubset(self, other: "Alphabet") -> bool:
        return set(self.symbols) <= set(other.symbols)

    def check(self, symbol: str) -> str:
        if symbol not in self.symbols:
            raise UnknownSymbol(f"{symbol!r} is not in alphabet {self.symbols!r}")
        return symbol

    def __str__(self):
        return ",".join(self.symbols)


@dataclass(frozen=True)
class IndexSet:
    """``Finite(n)`` is ``{0, ..., n-1}``; ``size=None`` is ℕ."""

    size: Optional[int] = None

    def __post_init__(self):
        if self.size is not None and self.size < 1:
            raise ValueError("a finite index set must be nonempty")

    @classmethod
    def finite(cls, n: int) -> "IndexSet":
        return cls(n)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def contains(self, alpha: int) -> bool:
        return alpha >= 0 and (self.size is None or alpha < self.size)

    def __str__(self):
        return "countable" if self.size is None else str(self.size)


COUNTABLE = IndexSet(None)


class SemigroupKind(enum.Enum):
    S = "S"  # all self-maps
    H = "H"  # bijections only

    def __str__(self):
        return self.value


def _same_index_set(a, b):
    if a.index_set != b.index_set:
        raise IndexSetMismatch(f"index sets differ: {a.index_set} vs {b.index_set}")


def _same_alphabet(x, y):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {x.alphabet} vs {y.alphabet}")


# ---------------------------------------------------------------------------
# Configurations
# ---------------------------------------------------------------------------

class Config(ABC):
    """A point of ``X^Γ``.  ``config[α]`` evaluates the coordinate at ``α``."""

    alphabet: Alphabet

    @property
    @abstractmethod
    def index_set(self) -> IndexSet:
        ...

    @abstractmethod
    def __getitem__(self, alpha: int) -> str:
        ...

    def on(self, indices: Iterable[int]) -> tuple:
        return tuple(self[i] for i in indices)


@dataclass(frozen=True)
class DenseConfig(Config):
    alphabet: Alphabet
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise ValueError("a dense config needs at least one coordinate")
        for v in values:
            self.alphabet.check(v)
        object.__setattr__(self, "values", values)

    @property
    def index_set(self) -> IndexSet:
        return IndexSet(len(self.values))

    def __getitem__(self, alpha):
        return self.values[alpha]

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(self.values)


@dataclass(frozen=True)
class FiniteSupportConfig(Config):
    """A point of ``X^ℕ`` equal to ``default`` off a finite exception set.

    The exceptions are kept canonical: sorted by index, and never equal to
    the default, so structural equality is semantic equality.
    """

    alphabet: Alphabet
    default: str
    exceptions: tuple = ()

    def __post_init__(self):
        self.alphabet.check(self.default)
        items = self.exceptions
        if isinstance(items, Mapping):
            items = items.items()
        table = {}
        for alpha, sym in items:
            alpha = int(alpha)
            if alpha < 0:
                raise ValueError(f"negative index {alpha}")
            if alpha in table:
                raise ValueError(f"duplicate exception index {alpha}")
            table[alpha] = self.alphabet.check(sym)
        canon = tuple(sorted((a, s) for a, s in table.items() if s != self.default))
        object.__setattr__(self, "exceptions", canon)

    @classmethod
    def constant(cls, alphabet: Alphabet, symbol: str) -> "FiniteSupportConfig":
        return cls(alphabet, symbol, ())

    @property
    def index_set(self) -> IndexSet:
        return COUNTABLE

    @cached_property
    def table(self) -> dict:
        return dict(self.exceptions)

    @property
    def support(self) -> frozenset:
        return frozenset(self.table)

    def __getitem__(self, alpha):
        return self.table.get(alpha, self.default)

    def __str__(self):
        body = ",".join(f"{a}:{s}" for a, s in self.exceptions)
        return f"default={self.default}" + (f";{body}" if body else "")


@dataclass(frozen=True, eq=False)
class ProceduralConfig(Config):
    """A point given by an evaluation rule.

    ``support_bound`` is an index past which the rule is known to be
    constant, or ``None`` when nothing is claimed.
    """

    alphabet: Alphabet
    rule: Callable[[int], str]
    support_bound: Optional[int] = None
    name: str = "procedural"
    gamma: IndexSet = COUNTABLE

    @property
    def index_set(self) -> IndexSet:
        return self.gamma

    def __getitem__(self, alpha):
        return self.rule(alpha)

    def __str__(self):
        return f"<{self.name}>"


def all_configs(alphabet: Alphabet, n: int) -> Iterator[DenseConfig]:
    """Every point of ``X^Finite(n)``, lexicographic in alphabet order."""
    for values in itertools.product(alphabet.symbols, repeat=n):
        yield DenseConfig(alphabet, values)


# ---------------------------------------------------------------------------
# Index maps
# ---------------------------------------------------------------------------

def nth_outside(excluded_sorted, r: int) -> int:
    """The ``r``-th (0-based) natural number not in ``excluded_sorted``."""
    c = r
    for b in excluded_sorted:
        if b <= c:
            c += 1
        else:
            break
    return c


def _rank_outside(excluded_sorted, gamma: int) -> int:
    """Inverse of :func:`nth_outside` for ``gamma`` not in the excluded set."""
    return gamma - bisect.bisect_left(excluded_sorted, gamma)


class IndexMap(ABC):
    """A self-map of an index set.

    ``bijective`` is a certificate: when true, :meth:`inverse` is available.
    """

    index_set: IndexSet

    @abstractmethod
    def __call__(self, alpha: int) -> int:
        ...

    @property
    def bijective(self) -> bool:
        return False

    @property
    def is_identity(self) -> bool:
        return False

    def inverse(self, alpha: int) -> int:
        raise NotBijective(f"{self.literal()} carries no inverse rule")

    @abstractmethod
    def literal(self) -> str:
        ...

    def __str__(self):
        return self.literal()


@dataclass(frozen=True)
class DenseMap(IndexMap):
    table: tuple

    def __post_init__(self):
        table = tuple(int(t) for t in self.table)
        n = len(table)
        if n == 0:
            raise ValueError("a dense map needs at least one entry")
        if any(not 0 <= t < n for t in table):
            raise ValueError(f"dense map {table} leaves Finite({n})")
        object.__setattr__(self, "table", table)

    @property
    def index_set(self):
        return IndexSet(len(self.table))

    def __call__(self, alpha):
        return self.table[alpha]

    @property
    def bijective(self):
        return sorted(self.table) == list(range(len(self.table)))

    @property
    def is_identity(self):
        return self.table == tuple(range(len(self.table)))

    @cached_property
    def _inverse_table(self):
        inv = [0] * len(self.table)
        for i, t in enumerate(self.table):
            inv[t] = i
        return tuple(inv)

    def inverse(self, alpha):
        if not self.bijective:
            raise NotBijective(f"{self.literal()} is not a bijection")
        return self._inverse_table[alpha]

    def literal(self):
        return ",".join(map(str, self.table))


@dataclass(frozen=True)
class FiniteSupportPermutation(IndexMap):
    """A permutation of ℕ that moves only finitely many indices."""

    mapping: tuple = ()

    def __post_init__(self):
        items = self.mapping
        if isinstance(items, Mapping):
            items = items.items()
        table = {}
        for a, b in items:
            a, b = int(a), int(b)
            if a < 0 or b < 0:
                raise ValueError("negative index in permutation")
            if a in table:
                raise ValueError(f"index {a} mapped twice")
            table[a] = b
        moved = {a: b for a, b in table.items() if a != b}
        if set(moved) != set(moved.values()):
            raise ValueError("mapping is not a bijection of its support onto itself")
        object.__setattr__(self, "mapping", tuple(sorted(moved.items())))

    @classmethod
    def from_swaps(cls, swaps: Iterable[tuple]) -> "FiniteSupportPermutation":
        """Compose transpositions, applying them to the index left to right."""
        perm = cls(())
        for a, b in swaps:
            if a == b:
                continue
            perm = compose_index_maps(perm, cls(((a, b), (b, a))))
        return perm

    index_set = COUNTABLE

    @cached_property
    def table(self):
        return dict(self.mapping)

    @cached_property
    def _inverse_table(self):
        return {b: a for a, b in self.mapping}

    @property
    def support(self):
        return frozenset(self.table)

    def __call__(self, alpha):
        return self.table.get(alpha, alpha)

    @property
    def bijective(self):
        return True

    @property
    def is_identity(self):
        return not self.mapping

    def inverse(self, alpha):
        return self._inverse_table.get(alpha, alpha)

    def cycles(self) -> list:
        seen, out = set(), []
        for start, _ in self.mapping:
            if start in seen:
                continue
            cyc, a = [], start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = self(a)
            out.append(tuple(cyc))
        return out

    def swaps(self) -> list:
        """Transpositions reproducing this map under :meth:`from_swaps`."""
        out = []
        for cyc in self.cycles():
            out.extend((cyc[0], c) for c in cyc[1:])
        return out

    def literal(self):
        if not self.mapping:
            return "id"
        return ";".join(f"swap({a},{b})" for a, b in self.swaps())


@dataclass(frozen=True)
class ConstantMap(IndexMap):
    beta: int
    gamma: IndexSet = COUNTABLE

    def __post_init__(self):
        if not self.gamma.contains(self.beta):
            raise ValueError(f"{self.beta} is not an index of {self.gamma}")

    @property
    def index_set(self):
        return self.gamma

    def __call__(self, alpha):
        return self.beta

    @property
    def bijective(self):
        return self.gamma.size == 1

    @property
    def is_identity(self):
        return self.gamma.size == 1

    def inverse(self, alpha):
        if not self.bijective:
            raise NotBijective(f"{self.literal()} is not injective")
        return 0

    def literal(self):
        return f"const({self.beta})"


@dataclass(frozen=True)
class PairingShiftPower(IndexMap):
    """``φ^k`` where ``φ(μ(α, n)) = μ(α, n+1)`` for the fixed pairing ``μ``."""

    k: int

    index_set = COUNTABLE

    def __call__(self, alpha):
        a, n = mu_inverse(alpha)
        return mu(a, n + self.k)

    @property
    def bijective(self):
        return True

    @property
    def is_identity(self):
        return self.k == 0

    def inverse(self, alpha):
        a, n = mu_inverse(alpha)
        return mu(a, n - self.k)

    def literal(self):
        return f"pairshift({self.k})"


@dataclass(frozen=True)
class MatchingExtension(IndexMap):
    """Bijection of ℕ sending ``i ↦ prefix[i]`` for ``i < len(prefix)``.

    The remaining indices ``len(prefix), len(prefix)+1, ...`` are matched in
    increasing order with ``ℕ \\ set(prefix)``.
    """

    prefix: tuple

    def __post_init__(self):
        prefix = tuple(int(p) for p in self.prefix)
        if len(set(prefix)) != len(prefix) or any(p < 0 for p in prefix):
            raise ValueError("matching prefix must be distinct naturals")
        object.__setattr__(self, "prefix", prefix)

    index_set = COUNTABLE

    @cached_property
    def _sorted(self):
        return tuple(sorted(self.prefix))

    @cached_property
    def _position(self):
        return {b: i for i, b in enumerate(self.prefix)}

    def __call__(self, alpha):
        n = len(self.prefix)
        if alpha < n:
            return self.prefix[alpha]
        return nth_outside(self._sorted, alpha - n)

    @property
    def bijective(self):
        return True

    @property
    def is_identity(self):
        return self.prefix == tuple(range(len(self.prefix)))

    def inverse(self, alpha):
        pos = self._position.get(alpha)
        if pos is not None:
            return pos
        return len(self.prefix) + _rank_outside(self._sorted, alpha)

    def literal(self):
        return "match(" + ",".join(map(str, self.prefix)) + ")"


@dataclass(frozen=True)
class ComposedMap(IndexMap):
    """``α ↦ second(first(α))``; inverse available when both parts have one."""

    first: IndexMap
    second: IndexMap

    @property
    def index_set(self):
        return self.first.index_set

    def __call__(self, alpha):
        return self.second(self.first(alpha))

    @property
    def bijective(self):
        return self.first.bijective and self.second.bijective

    def inverse(self, alpha):
        if not self.bijective:
            raise NotBijective(f"{self.literal()} carries no inverse rule")
        return self.first.inverse(self.second.inverse(alpha))

    def literal(self):
        return f"compose({self.first.literal()},{self.second.literal()})"


def identity_map(gamma: IndexSet) -> IndexMap:
    if gamma.is_finite:
        return DenseMap(tuple(range(gamma.size)))
    return FiniteSupportPermutation(())


# ---------------------------------------------------------------------------
# The action
# ---------------------------------------------------------------------------

def shift_apply(phi: IndexMap, x: Config, procedural: bool = False) -> Config:
    """The generalized shift: ``result[α] = x[phi(α)]``.

    On finite-support points only constant maps and maps with an inverse
    rule keep the representation; other maps raise
    :class:`UnrepresentableResult` unless ``procedural`` is set.
    """
    _same_index_set(phi, x)
    if isinstance(x, DenseConfig):
        vals = x.values
        if isinstance(phi, DenseMap):
            return DenseConfig(x.alphabet, tuple(vals[t] for t in phi.table))
        return DenseConfig(x.alphabet, tuple(vals[phi(i)] for i in range(len(vals))))
    if isinstance(x, FiniteSupportConfig):
        if isinstance(phi, ConstantMap):
            return FiniteSupportConfig(x.alphabet, x[phi.beta])
        if phi.bijective:
            return FiniteSupportConfig(
                x.alphabet, x.default,
                tuple((phi.inverse(a), s) for a, s in x.exceptions),
            )
        if not procedural:
            raise UnrepresentableResult(
                f"{phi.literal()} does not preserve finite support"
            )
    return ProceduralConfig(
        x.alphabet, lambda a: x[phi(a)], None,
        name=f"shift({phi.literal()},{x})", gamma=x.index_set,
    )


def compose_index_maps(phi: IndexMap, psi: IndexMap) -> IndexMap:
    """``χ = psi ∘ phi``, so that ``σ_phi ∘ σ_psi = σ_χ``."""
    _same_index_set(phi, psi)
    if phi.is_identity:
        return psi
    if psi.is_identity:
        return phi
    if isinstance(psi, ConstantMap):
        return psi
    if isinstance(phi, ConstantMap):
        return ConstantMap(psi(phi.beta), phi.gamma)
    if isinstance(phi, DenseMap) and isinstance(psi, DenseMap):
        return DenseMap(tuple(psi.table[t] for t in phi.table))
    if isinstance(phi, FiniteSupportPermutation) and isinstance(psi, FiniteSupportPermutation):
        support = phi.support | psi.support
        return FiniteSupportPermutation(tuple((a, psi(phi(a))) for a in support))
    if isinstance(phi, PairingShiftPower) and isinstance(psi, PairingShiftPower):
        return PairingShiftPower(phi.k + psi.k)
    if not phi.index_set.is_finite:
        return ComposedMap(phi, psi)
    # finite maps are always densifiable
    n = phi.index_set.size
    try:
        return DenseMap(tuple(psi(phi(i)) for i in range(n)))
    except (IndexError, ValueError) as exc:
        raise UnrepresentableComposition(str(exc)) from exc


def is_homeomorphism(phi: IndexMap, alphabet: Alphabet, gamma: IndexSet) -> bool:
    """Whether ``σ_phi`` is a homeomorphism of ``alphabet^gamma``.

    With at least two symbols this holds iff ``phi`` is bijective; for
    procedural maps bijectivity means a certified inverse rule.
    """
    if phi.index_set != gamma:
        raise IndexSetMismatch(f"map acts on {phi.index_set}, not {gamma}")
    if len(alphabet) < 2:  # pragma: no cover - Alphabet forbids this
        raise ValueError("alphabet too small")
    return phi.bijective


# ---------------------------------------------------------------------------
# Agreement sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AgreementSummary:
    """A subset of the index set that is finite or cofinite.

    ``indices`` holds the set itself when ``cofinite`` is false, and its
    complement otherwise.
    """

    cofinite: bool
    indices: frozenset = field(default_factory=frozenset)

    @property
    def kind(self) -> str:
        return "Cofinite" if self.cofinite else "FiniteSet"

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.indices

    @property
    def is_infinite(self) -> bool:
        return self.cofinite

    @property
    def cardinality(self) -> Optional[int]:
        """Number of elements; ``None`` for an infinite set."""
        return None if self.cofinite else len(self.indices)

    def __contains__(self, alpha):
        return (alpha not in self.indices) if self.cofinite else (alpha in self.indices)

    def complement(self, gamma: IndexSet) -> "AgreementSummary":
        if gamma.is_finite:
            return AgreementSummary(False, frozenset(range(gamma.size)) - self.indices)
        return AgreementSummary(not self.cofinite, self.indices)

    def elements(self) -> Iterator[int]:
        """Increasing enumeration; infinite for cofinite sets."""
        if not self.cofinite:
            yield from sorted(self.indices)
            return
        excluded = sorted(self.indices)
        for r in itertools.count():
            yield nth_outside(excluded, r)

    def nth(self, r: int) -> int:
        if self.cofinite:
            return nth_outside(sorted(self.indices), r)
        return sorted(self.indices)[r]

    def first(self) -> Optional[int]:
        return None if self.is_empty else self.nth(0)

    def __str__(self):
        body = ",".join(map(str, sorted(self.indices)))
        return f"{self.kind}({{{body}}})"


def _summaries(x: Config, y: Config):
    _same_index_set(x, y)
    _same_alphabet(x, y)
    if isinstance(x, DenseConfig) and isinstance(y, DenseConfig):
        n = len(x.values)
        agree = frozenset(i for i in range(n) if x.values[i] == y.values[i])
        return (AgreementSummary(False, agree),
                AgreementSummary(False, frozenset(range(n)) - agree))
    if isinstance(x, FiniteSupportConfig) and isinstance(y, FiniteSupportConfig):
        union = x.support | y.support
        agree = frozenset(a for a in union if x[a] == y[a])
        differ = union - agree
        if x.default == y.default:
            return AgreementSummary(True, differ), AgreementSummary(False, differ)
        return AgreementSummary(False, agree), AgreementSummary(True, agree)
    raise TypeError("agreement needs two dense or two finite-support configs")


def agreement(x: Config, y: Config) -> AgreementSummary:
    """``{α : x[α] = y[α]}`` as a finite or cofinite set."""
    return _summaries(x, y)[0]


def disagreement(x: Config, y: Config) -> AgreementSummary:
    """``{α : x[α] ≠ y[α]}`` as a finite or cofinite set."""
    return _summaries(x, y)[1]

