"""Text literals for configs and index maps.

Config literals::

    a,b,b                  dense, one symbol per index of Finite(n)
    default=a;3:b,7:c      finite support over ℕ

Index-map literals::

    1,2,0                  dense table
    swap(2,5);swap(0,9)    finite-support permutation (swaps applied left to right)
    id                     identity on ℕ
    const(4)  pairshift(2)  match(2,3,5)
"""

from __future__ import annotations

import re

from .core import (
    Alphabet, Config, ConstantMap, DenseConfig, DenseMap, FiniteSupportConfig,
    FiniteSupportPermutation, IndexMap, IndexSet, MatchingExtension,
    PairingShiftPower,
)
from .errors import LiteralError

_SYMBOL = re.compile(r"[^\s,;:=()]+")
_INT = re.compile(r"-?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def fail(self, expected):
        raise LiteralError(self.text, self.pos, expected)

    def literal(self, s: str):
        if not self.text.startswith(s, self.pos):
            self.fail(repr(s))
        self.pos += len(s)

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def match(self, pattern, expected):
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(expected)
        self.pos = m.end()
        return m.group(0)

    def natural(self) -> int:
        start = self.pos
        value = int(self.match(_INT, "an integer"))
        if value < 0:
            self.pos = start
            self.fail("a non-negative index")
        return value

    def symbol(self, alphabet: Alphabet) -> str:
        start = self.pos
        sym = self.match(_SYMBOL, "a symbol")
        if sym not in alphabet:
            self.pos = start
            self.fail(f"one of {{{','.join(alphabet)}}}")
        return sym

    def end(self):
        if not self.at_end():
            self.fail("end of input")


def parse_config(text: str, alphabet: Alphabet, gamma: IndexSet) -> Config:
    sc = _Scanner(text.strip())
    if not gamma.is_finite:
        sc.literal("default=")
        default = sc.symbol(alphabet)
        exceptions = []
        seen = set()
        if sc.peek(";"):
            sc.literal(";")
            while True:
                start = sc.pos
                idx = sc.natural()
                if idx in seen:
                    sc.pos = start
                    sc.fail("a fresh index")
                seen.add(idx)
                sc.literal(":")
                exceptions.append((idx, sc.symbol(alphabet)))
                if not sc.peek(","):
                    break
                sc.literal(",")
        sc.end()
        return FiniteSupportConfig(alphabet, default, tuple(exceptions))
    values = [sc.symbol(alphabet)]
    while sc.peek(","):
        if len(values) == gamma.size:
            sc.fail(f"end of input after {gamma.size} symbols")
        sc.literal(",")
        values.append(sc.symbol(alphabet))
    sc.end()
    if len(values) < gamma.size:
        sc.fail(f"',' and {gamma.size - len(values)} more symbol(s)")
    return DenseConfig(alphabet, tuple(values))


def format_config(x: Config) -> str:
    if isinstance(x, (DenseConfig, FiniteSupportConfig)):
        return str(x)
    raise TypeError(f"{type(x).__name__} has no literal form")


def _int_args(sc: _Scanner, natural=True) -> list:
    sc.literal("(")
    out = []
    if sc.peek(")"):
        sc.literal(")")
        return out
    while True:
        out.append(sc.natural() if natural else int(sc.match(_INT, "an integer")))
        if sc.peek(","):
            sc.literal(",")
            continue
        sc.literal(")")
        return out


def parse_index_map(text: str, gamma: IndexSet) -> IndexMap:
    sc = _Scanner(text.strip())
    if gamma.is_finite:
        if sc.peek("const"):
            sc.literal("const")
            start = sc.pos
            (beta,) = _exactly(sc, _int_args(sc), 1, start)
            sc.end()
            if beta >= gamma.size:
                raise LiteralError(sc.text, start, f"an index below {gamma.size}")
            return ConstantMap(beta, gamma)
        table = [sc.natural()]
        while sc.peek(","):
            sc.literal(",")
            table.append(sc.natural())
        sc.end()
        if len(table) != gamma.size or max(table) >= gamma.size:
            raise LiteralError(sc.text, 0, f"a table of {gamma.size} indices below {gamma.size}")
        return DenseMap(tuple(table))
    if sc.peek("id"):
        sc.literal("id")
        sc.end()
        return FiniteSupportPermutation(())
    if sc.peek("const"):
        sc.literal("const")
        start = sc.pos
        (beta,) = _exactly(sc, _int_args(sc), 1, start)
        sc.end()
        return ConstantMap(beta, gamma)
    if sc.peek("pairshift"):
        sc.literal("pairshift")
        start = sc.pos
        (k,) = _exactly(sc, _int_args(sc, natural=False), 1, start)
        sc.end()
        return PairingShiftPower(k)
    if sc.peek("match"):
        sc.literal("match")
        start = sc.pos
        prefix = _int_args(sc)
        if len(set(prefix)) != len(prefix):
            raise LiteralError(sc.text, start, "distinct indices")
        sc.end()
        return MatchingExtension(tuple(prefix))
    swaps = []
    while True:
        sc.literal("swap")
        start = sc.pos
        a, b = _exactly(sc, _int_args(sc), 2, start)
        swaps.append((a, b))
        if not sc.peek(";"):
            break
        sc.literal(";")
    sc.end()
    return FiniteSupportPermutation.from_swaps(swaps)


def _exactly(sc, args, n, start):
    if len(args) != n:
        raise LiteralError(sc.text, start, f"{n} argument(s)")
    return args
