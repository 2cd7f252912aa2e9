import itertools

import pytest
from hypothesis import given, strategies as st

from genshift import (
    COUNTABLE, Alphabet, ComposedMap, ConstantMap, DenseConfig, DenseMap,
    FiniteSupportConfig, FiniteSupportPermutation, IndexSet, MatchingExtension,
    PairingShiftPower, agreement, all_configs, compose_index_maps,
    disagreement, identity_map, is_homeomorphism, shift_apply,
)
from genshift.core import AgreementSummary, SemigroupKind
from genshift.errors import (
    AlphabetMismatch, IndexSetMismatch, NotBijective, UnknownSymbol,
    UnrepresentableResult,
)
from genshift.pairing import mu
from genshift.topology import semigroup_maps

from conftest import AB, fs_configs, fs_permutations


def dense(*vals):
    return DenseConfig(AB, vals)


def fs(default, **exc):
    return FiniteSupportConfig(AB, default, {int(k[1:]): v for k, v in exc.items()})


def per_coordinate(phi, x, n):
    # independent evaluation of the definition
    return tuple(x[phi(a)] for a in range(n))


# --- types ------------------------------------------------------------------

def test_alphabet_invariants():
    with pytest.raises(ValueError):
        Alphabet(("a",))
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    assert list(Alphabet.of_size(3)) == ["a", "b", "c"]


def test_index_set():
    with pytest.raises(ValueError):
        IndexSet(0)
    assert IndexSet(3).contains(2) and not IndexSet(3).contains(3)
    assert COUNTABLE.contains(10 ** 9)


def test_dense_rejects_foreign_symbol():
    with pytest.raises(UnknownSymbol):
        DenseConfig(AB, ("a", "z"))


def test_finite_support_canonical_form():
    x = FiniteSupportConfig(AB, "a", {7: "b", 3: "a", 1: "b"})
    assert x.exceptions == ((1, "b"), (7, "b"))
    assert x == FiniteSupportConfig(AB, "a", [(7, "b"), (1, "b")])
    assert str(x) == "default=a;1:b,7:b"


@given(fs_configs(), fs_configs())
def test_structural_equality_is_pointwise_equality(x, y):
    probe = sorted(x.support | y.support) + [100, 101, 102]
    assert (x == y) == all(x[a] == y[a] for a in probe)


# --- shift_apply ------------------------------------------------------------

def test_shift_identity():
    assert shift_apply(identity_map(IndexSet(3)), dense("a", "b", "b")) == dense("a", "b", "b")


def test_shift_constant_map():
    assert shift_apply(ConstantMap(1, IndexSet(3)), dense("a", "b", "b")) == dense("b", "b", "b")


def test_shift_dense_cycle():
    phi, x = DenseMap((1, 2, 0)), dense("a", "b", "b")
    assert shift_apply(phi, x).values == per_coordinate(phi, x, 3) == ("b", "b", "a")


def test_shift_swap_moves_exception():
    phi = FiniteSupportPermutation.from_swaps([(2, 5)])
    assert shift_apply(phi, fs("a", i5="b")) == fs("a", i2="b")


def test_shift_constant_on_countable():
    assert shift_apply(ConstantMap(4), fs("a", i4="b")) == fs("b")


def test_shift_mismatch_and_unrepresentable():
    with pytest.raises(IndexSetMismatch):
        shift_apply(DenseMap((0, 1)), dense("a", "b", "b"))
    with pytest.raises(IndexSetMismatch):
        shift_apply(DenseMap((0, 1)), fs("a"))
    # constant-valued in effect, but neither constant-typed nor invertible
    forward_only = ComposedMap(ConstantMap(0), PairingShiftPower(1))
    with pytest.raises(UnrepresentableResult):
        shift_apply(forward_only, fs("a", i3="b"))
    lazy = shift_apply(forward_only, fs("a", i5="b"), procedural=True)
    assert forward_only(9) == 5  # μ(0, 1)
    assert lazy.on(range(5)) == ("b",) * 5


@given(fs_configs(), fs_permutations())
def test_shift_fs_matches_pointwise(x, phi):
    y = shift_apply(phi, x)
    assert all(y[a] == x[phi(a)] for a in range(40))


@given(fs_configs(), st.integers(-5, 5))
def test_shift_pairshift_matches_pointwise(x, k):
    phi = PairingShiftPower(k)
    y = shift_apply(phi, x)
    assert all(y[a] == x[phi(a)] for a in range(60))


# --- composition ------------------------------------------------------------

def test_compose_identity_and_constant():
    psi = DenseMap((2, 0, 0))
    assert compose_index_maps(identity_map(IndexSet(3)), psi) == psi
    assert compose_index_maps(DenseMap((1, 2, 0)), ConstantMap(1, IndexSet(3))) == ConstantMap(1, IndexSet(3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_compose_anti_homomorphism_exhaustive(n):
    pts = list(all_configs(AB, n))
    maps = list(semigroup_maps(n, SemigroupKind.S))
    for phi, psi in itertools.product(maps, repeat=2):
        chi = compose_index_maps(phi, psi)
        for x in pts:
            assert shift_apply(phi, shift_apply(psi, x)) == shift_apply(chi, x)


def test_compose_random_dense_triples():
    import random
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(4, 7)
        phi = DenseMap(tuple(rng.randrange(n) for _ in range(n)))
        psi = DenseMap(tuple(rng.randrange(n) for _ in range(n)))
        x = DenseConfig(AB, tuple(rng.choice("ab") for _ in range(n)))
        assert shift_apply(phi, shift_apply(psi, x)) == shift_apply(compose_index_maps(phi, psi), x)


@given(fs_permutations(), fs_permutations(), fs_configs())
def test_compose_countable_permutations(phi, psi, x):
    chi = compose_index_maps(phi, psi)
    assert isinstance(chi, FiniteSupportPermutation)
    assert shift_apply(phi, shift_apply(psi, x)) == shift_apply(chi, x)


@given(st.integers(-3, 3), st.sampled_from([(), (4, 0), (1, 2, 3)]), fs_configs())
def test_compose_structured(k, prefix, x):
    phi, psi = PairingShiftPower(k), MatchingExtension(prefix)
    for a, b in ((phi, psi), (psi, phi)):
        chi = compose_index_maps(a, b)
        assert chi.bijective
        assert shift_apply(a, shift_apply(b, x)) == shift_apply(chi, x)
    assert compose_index_maps(phi, PairingShiftPower(2)) == PairingShiftPower(k + 2)


def test_compose_mismatch():
    with pytest.raises(IndexSetMismatch):
        compose_index_maps(DenseMap((0,)), FiniteSupportPermutation(()))


# --- homeomorphisms -----------------------------------------------------------

def test_homeomorphism_small_cases():
    assert is_homeomorphism(identity_map(IndexSet(3)), AB, IndexSet(3))
    assert not is_homeomorphism(ConstantMap(0, IndexSet(2)), AB, IndexSet(2))
    assert is_homeomorphism(ConstantMap(0, IndexSet(1)), AB, IndexSet(1))
    assert is_homeomorphism(PairingShiftPower(3), AB, COUNTABLE)
    assert not is_homeomorphism(ConstantMap(0), AB, COUNTABLE)


def test_homeomorphism_brute_force_finite3():
    pts = list(all_configs(AB, 3))
    maps = list(semigroup_maps(3, SemigroupKind.S))
    assert len(maps) == 27
    homeo = [phi for phi in maps if is_homeomorphism(phi, AB, IndexSet(3))]
    bijective_shift = [phi for phi in maps if len({shift_apply(phi, x) for x in pts}) == len(pts)]
    assert len(homeo) == 6
    assert homeo == bijective_shift


@pytest.mark.parametrize("n", [1, 2, 3])
def test_shift_injective_iff_map_surjective(n):
    pts = list(all_configs(AB, n))
    for phi in semigroup_maps(n, SemigroupKind.S):
        injective = len({shift_apply(phi, x) for x in pts}) == len(pts)
        assert injective == (set(phi.table) == set(range(n)))


def test_inverse_rules():
    for phi in (MatchingExtension((5, 2, 9)), PairingShiftPower(-3),
                FiniteSupportPermutation.from_swaps([(0, 4), (4, 7)])):
        for a in range(200):
            assert phi.inverse(phi(a)) == a and phi(phi.inverse(a)) == a
    with pytest.raises(NotBijective):
        DenseMap((0, 0)).inverse(0)


def test_pairshift_law():
    phi = PairingShiftPower(1)
    assert all(phi(mu(a, n)) == mu(a, n + 1) for a in range(10) for n in range(-10, 10))


def test_matching_extension_values():
    phi = MatchingExtension((2, 3))
    assert [phi(i) for i in range(6)] == [2, 3, 0, 1, 4, 5]


def test_permutation_validation():
    with pytest.raises(ValueError):
        FiniteSupportPermutation({0: 1})
    p = FiniteSupportPermutation.from_swaps([(1, 2), (1, 3)])
    assert [p(i) for i in range(5)] == [0, 2, 3, 1, 4]
    assert FiniteSupportPermutation.from_swaps(p.swaps()) == p


# --- agreement ----------------------------------------------------------------

def test_agreement_examples():
    x = dense("a", "b", "b")
    assert agreement(x, x) == AgreementSummary(False, frozenset({0, 1, 2}))
    assert agreement(fs("a", i3="b"), fs("a", i7="b")) == AgreementSummary(True, frozenset({3, 7}))
    assert agreement(fs("a"), fs("b", i2="a")) == AgreementSummary(False, frozenset({2}))
    assert disagreement(fs("a"), fs("b", i2="a")) == AgreementSummary(True, frozenset({2}))


def test_agreement_errors():
    with pytest.raises(IndexSetMismatch):
        agreement(dense("a", "b"), fs("a"))
    with pytest.raises(AlphabetMismatch):
        agreement(fs("a"), FiniteSupportConfig(Alphabet(("a", "b", "c")), "a"))


@given(fs_configs(), fs_configs())
def test_agreement_disagreement_partition_window(x, y):
    agree, differ = agreement(x, y), disagreement(x, y)
    assert agree.cofinite != differ.cofinite
    assert agree.indices == differ.indices
    for a in range(40):
        assert (a in agree) != (a in differ)
        assert (a in agree) == (x[a] == y[a])


def test_agreement_enumeration():
    s = AgreementSummary(True, frozenset({0, 2, 3}))
    assert [s.nth(i) for i in range(4)] == [1, 4, 5, 6]
    assert s.first() == 1 and s.cardinality is None
    assert AgreementSummary(False).is_empty
