import pytest
from hypothesis import settings, strategies as st

from genshift import Alphabet, FiniteSupportConfig, FiniteSupportPermutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


@pytest.fixture
def ab():
    return AB


@pytest.fixture
def abc():
    return ABC


def fs_configs(alphabet=AB, span=24, max_exceptions=6, default=None):
    symbols = st.sampled_from(alphabet.symbols)
    return st.builds(
        lambda d, exc: FiniteSupportConfig(alphabet, d, exc),
        symbols if default is None else st.just(default),
        st.dictionaries(st.integers(0, span - 1), symbols, max_size=max_exceptions),
    )


def fs_permutations(span=32, max_swaps=6):
    swaps = st.lists(st.tuples(st.integers(0, span - 1), st.integers(0, span - 1)), max_size=max_swaps)
    return swaps.map(FiniteSupportPermutation.from_swaps)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
