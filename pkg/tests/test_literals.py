import pytest
from hypothesis import given

from genshift import (
    COUNTABLE, ConstantMap, DenseConfig, DenseMap, FiniteSupportConfig,
    FiniteSupportPermutation, IndexSet, MatchingExtension, PairingShiftPower,
    format_config, parse_config, parse_index_map,
)
from genshift.errors import LiteralError

from conftest import AB, fs_configs, fs_permutations


def test_parse_dense():
    assert parse_config("a,b,b", AB, IndexSet(3)) == DenseConfig(AB, ("a", "b", "b"))


def test_parse_finite_support():
    x = parse_config("default=a;3:b,7:b", AB, COUNTABLE)
    assert x == FiniteSupportConfig(AB, "a", {3: "b", 7: "b"})
    assert parse_config("default=b", AB, COUNTABLE) == FiniteSupportConfig(AB, "b")


@pytest.mark.parametrize("text, gamma, position, expected", [
    ("a,c", IndexSet(2), 2, "one of {a,b}"),
    ("a,b,a", IndexSet(2), 3, "end of input after 2 symbols"),
    ("a", IndexSet(2), 1, "',' and 1 more symbol(s)"),
    ("default:a", COUNTABLE, 0, "'default='"),
    ("default=a;x:b", COUNTABLE, 10, "an integer"),
    ("default=a;3:b,3:a", COUNTABLE, 14, "a fresh index"),
    ("default=a;3b", COUNTABLE, 11, "':'"),
])
def test_parse_errors_report_position(text, gamma, position, expected):
    with pytest.raises(LiteralError) as info:
        parse_config(text, AB, gamma)
    assert info.value.position == position
    assert info.value.expected == expected


@given(fs_configs())
def test_config_round_trip(x):
    assert parse_config(format_config(x), AB, COUNTABLE) == x


@pytest.mark.parametrize("text, gamma, expected", [
    ("1,2,0", IndexSet(3), DenseMap((1, 2, 0))),
    ("const(1)", IndexSet(3), ConstantMap(1, IndexSet(3))),
    ("const(4)", COUNTABLE, ConstantMap(4)),
    ("pairshift(-2)", COUNTABLE, PairingShiftPower(-2)),
    ("match(3,1)", COUNTABLE, MatchingExtension((3, 1))),
    ("id", COUNTABLE, FiniteSupportPermutation(())),
    ("swap(2,5);swap(0,9)", COUNTABLE, FiniteSupportPermutation({2: 5, 5: 2, 0: 9, 9: 0})),
])
def test_parse_index_map(text, gamma, expected):
    phi = parse_index_map(text, gamma)
    assert phi == expected
    assert parse_index_map(phi.literal(), gamma) == phi


@given(fs_permutations())
def test_permutation_literal_round_trip(phi):
    assert parse_index_map(phi.literal(), COUNTABLE) == phi


@pytest.mark.parametrize("text, gamma", [
    ("1,2", IndexSet(3)), ("1,2,3", IndexSet(3)), ("const(3)", IndexSet(3)),
    ("swap(1)", COUNTABLE), ("match(1,1)", COUNTABLE), ("shift(2)", COUNTABLE),
])
def test_bad_index_maps(text, gamma):
    with pytest.raises(LiteralError):
        parse_index_map(text, gamma)
