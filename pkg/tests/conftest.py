import hypothesis.strategies as st
from hypothesis import settings

import oracles
from paratopo import topology as tp
from paratopo.formula import (
    And, Box, ClassNeg, CompNeg, Diamond, MODE_NEGATION, Mode, Or, ParaNeg, Prop,
)
from paratopo.semantics import new_model

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def c3_opens():
    return [[], [0], [0, 1], [0, 1, 2]]


@st.composite
def spaces(draw, min_n=1, max_n=4):
    """(n, opens) with opens generated by closing a random family; independent of the package."""
    n = draw(st.integers(min_n, max_n))
    fam = draw(st.lists(st.frozensets(st.integers(0, n - 1)), max_size=4))
    opens = sorted(oracles.close_family(n, fam), key=lambda o: (len(o), sorted(o)))
    return n, opens


def to_topology(n, opens):
    return tp.from_opens(n, [sorted(o) for o in opens])


@st.composite
def models(draw, mode=None, max_n=4, props=("p", "q")):
    n, opens = draw(spaces(max_n=max_n))
    mode = Mode(mode) if mode is not None else draw(st.sampled_from(list(Mode)))
    if mode is Mode.PARACONSISTENT:
        pool = oracles.closeds(n, opens)
    elif mode is Mode.PARACOMPLETE:
        pool = opens
    else:
        pool = list(oracles.subsets(n))
    val = {p: sorted(draw(st.sampled_from(pool))) for p in props}
    return n, opens, new_model(to_topology(n, opens), mode, val)


def formulas(mode=None, props=("p", "q")):
    negs = [ClassNeg, ParaNeg, CompNeg] if mode is None else [MODE_NEGATION[Mode(mode)]]
    unary = [*negs, Box, Diamond]

    def extend(children):
        return st.one_of(
            st.builds(lambda op, c: op(c), st.sampled_from(unary), children),
            st.builds(And, children, children),
            st.builds(Or, children, children),
        )

    return st.recursive(st.sampled_from([Prop(p) for p in props]), extend, max_leaves=6)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
