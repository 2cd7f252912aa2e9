import pytest
from hypothesis import given, settings

from genshift import (
    Alphabet, DenseConfig, FiniteSupportConfig, MatchingExtension, Window,
    collapse_pair, collapse_trace, decide_L_H, decide_P_H, shift_apply,
    witness_L_violation, witness_P_H_blocks, witness_P_H_countable, witness_P_S,
    witness_Q_infinite,
)
from genshift.errors import (
    AgreementNotInfinite, AlphabetTooSmall, DefaultsDiffer,
    DisagreementNotInfinite, NotAnAgreementIndex,
)
from genshift.witnesses import BlockPartition, BlockUnionPermutation, check_inverse

from conftest import AB, ABC, fs_configs

BITS = Alphabet(("0", "1"))


def dense(*vals, alphabet=AB):
    return DenseConfig(alphabet, vals)


def fs(default, alphabet=AB, **exc):
    return FiniteSupportConfig(alphabet, default, {int(k[1:]): v for k, v in exc.items()})


# --- constant map ---------------------------------------------------------------

def test_constant_map_witness():
    t = witness_P_S(dense("a", "b"), dense("b", "b"), 1)
    assert t.valid and t.parameters == {"psi": "const(1)", "image": "b,b"}
    assert witness_P_S(dense("a", "b"), dense("a", "b"), 0).valid
    t = witness_P_S(fs("a"), fs("b", i4="a"), 4)
    assert t.valid and t.parameters["image"] == "default=a"
    with pytest.raises(NotAnAgreementIndex):
        witness_P_S(dense("a", "b"), dense("b", "a"), 0)


# --- pairing double shift -------------------------------------------------------

def test_pairing_double_shift_bits():
    x, y = FiniteSupportConfig(BITS, "1"), FiniteSupportConfig(BITS, "0")
    t = witness_Q_infinite(x, y, "0", Window.prefix(3), 64)
    assert t.valid
    assert set(t.reports) == {"truncation_x", "truncation_y", "image_x", "image_y"}
    assert all(r.stabilization_index <= 64 for r in t.reports.values())


def test_pairing_double_shift_on_constant_p():
    x = FiniteSupportConfig(AB, "a")
    t = witness_Q_infinite(x, x, "a", Window.prefix(4), 32)
    assert t.reports["image_x"].stabilization_index == 1
    assert t.reports["image_y"].stabilization_index == 1


@settings(max_examples=15)
@given(fs_configs(), fs_configs())
def test_pairing_double_shift_random(x, y):
    assert witness_Q_infinite(x, y, "b", Window.prefix(8), 256).valid


# --- matching witness -----------------------------------------------------------

def test_matching_witness_example():
    t = witness_P_H_countable(fs("a", i0="b"), fs("a", i1="b"), Window.prefix(5), 64)
    assert t.valid
    assert t.reports["image_x"].stabilization_index <= 7
    assert t.reports["image_y"].stabilization_index <= 7
    assert t.parameters["beta_prefix"] == [2, 3, 4, 5, 6]


def test_matching_witness_more():
    assert witness_P_H_countable(fs("a", i0="b", i2="b"), fs("a"), Window.prefix(8), 64).valid
    x = fs("b", i3="a")
    t = witness_P_H_countable(x, x, Window.prefix(4), 16)
    assert t.valid and t.reports["image_x"].stabilization_index == 1


def test_matching_witness_needs_infinite_agreement():
    with pytest.raises(AgreementNotInfinite):
        witness_P_H_countable(fs("a", i2="b"), fs("b"), Window.prefix(3), 32)


def test_bound_too_small_marks_trace_invalid():
    # the window reaches the disagreement only after φ_n clears index 9
    x, y = fs("a", **{f"i{i}": "b" for i in range(10)}), fs("a")
    t = witness_P_H_countable(x, y, Window.prefix(12), 4)
    assert not t.valid
    assert t.to_record()["reports"][0]["stabilization_index"] == -1


# --- block partition ------------------------------------------------------------

def test_block_witness_example():
    t = witness_P_H_blocks(fs("a", i3="b"), fs("a"), Window.prefix(6), 128)
    assert t.valid
    assert t.parameters["B"] == [3] and t.parameters["lambda"] == {"3": 0}


def test_block_witness_diagonal():
    x = fs("a", i1="b")
    t = witness_P_H_blocks(x, x, Window.prefix(5), 32)
    assert t.valid and t.reports["image_x"].stabilization_index == 1


def test_block_witness_defaults_differ():
    with pytest.raises(DefaultsDiffer):
        witness_P_H_blocks(fs("a"), fs("b"), Window.prefix(3), 32)


def test_block_partition_structure():
    part = BlockPartition({1, 4, 6})
    owners = {}
    for r in range(40):
        theta = part.a(r)
        for g in part.members(theta, 40):
            owners.setdefault(g, set()).add(theta)
    for g in range(64):
        assert owners.get(g) == {part.block_of(g)} or g >= 40
        assert part.global_index(part.block_of(g), part.local_index(g)) == g
    assert part.lam == {1: 0, 4: 2, 6: 3}


@pytest.mark.parametrize("n", [1, 2, 5])
def test_block_union_is_local_matching(n):
    part = BlockPartition({0, 2})
    psi = BlockUnionPermutation(part, n)
    local = MatchingExtension(tuple(range(1, n + 1)))
    for g in range(80):
        theta = part.block_of(g)
        j = part.local_index(g)
        expect = part.global_index(theta, local(j)) if part.has_preimage(theta) else g
        assert psi(g) == expect
    assert check_inverse(psi, range(80))


@settings(max_examples=15)
@given(fs_configs(default="a"), fs_configs(default="a"))
def test_block_witness_random(x, y):
    assert witness_P_H_blocks(x, y, Window.prefix(6), 512).valid


# --- swap refutation ------------------------------------------------------------

def test_swap_refutation_example():
    t = witness_L_violation(fs("a"), fs("b"), "a", "b", Window.prefix(3))
    assert t.valid
    assert t.parameters["partners"] == [3, 4, 5]
    assert t.parameters["psi"] == "swap(0,3);swap(1,4);swap(2,5)"
    z = FiniteSupportConfig(AB, "b")
    from genshift.core import FiniteSupportPermutation
    psi = FiniteSupportPermutation.from_swaps([(0, 3), (1, 4), (2, 5)])
    assert shift_apply(psi, z).on(Window.prefix(3)) == ("b", "b", "b")


def test_swap_refutation_single_window_index():
    t = witness_L_violation(fs("a", i7="b"), fs("b"), "a", "b", Window((7,)))
    assert t.valid and t.parameters["partners"] == [0]
    assert t.parameters["psi"] == "swap(0,7)"


def test_swap_refutation_errors():
    with pytest.raises(DisagreementNotInfinite):
        witness_L_violation(fs("a"), fs("a", i1="b"), "a", "b", Window.prefix(2))
    with pytest.raises(AlphabetTooSmall):
        witness_L_violation(fs("a"), fs("b"), "a", "a", Window.prefix(2))


@settings(max_examples=20)
@given(fs_configs(default="a"), fs_configs(default="b"))
def test_swap_refutation_random(x, y):
    t = witness_L_violation(x, y, "b", "a", Window.prefix(5))
    assert t.valid and not decide_L_H(x, y).value


# --- collapse -------------------------------------------------------------------

def test_collapse_examples():
    u = dense("b", "a")
    assert collapse_pair(dense("a", "b"), dense("a", "b"), u, "a", "b") == (u, u)
    assert collapse_pair(dense("a", "b"), dense("a", "a"), dense("b", "b"), "a", "b") == (
        dense("b", "b"), dense("b", "a"))
    z, w = collapse_pair(fs("a"), fs("a", i2="b"), fs("b"), "a", "b")
    assert (str(z), str(w)) == ("default=b", "default=b;2:a")


@given(fs_configs(ABC), fs_configs(ABC), fs_configs(ABC))
def test_collapse_preserves_relations(x, y, u):
    t = collapse_trace(x, y, u, "a", "c")
    assert t.valid
    z, w = collapse_pair(x, y, u, "a", "c")
    if decide_P_H(x, y).value:
        assert decide_P_H(z, w).value
    if decide_L_H(x, y).value:
        assert decide_L_H(z, w).value


def test_trace_record_shape():
    rec = witness_P_H_blocks(fs("a", i3="b"), fs("a"), Window.prefix(2), 16).to_record()
    assert set(rec) == {"construction", "claim", "parameters", "reports", "certificates", "valid"}
    assert [r["label"] for r in rec["reports"]] == ["image_x", "image_y"]
