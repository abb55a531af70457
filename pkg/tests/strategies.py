from fractions import Fraction

from hypothesis import strategies as st

from exceptional.e6ops import HeisenbergElement
from exceptional.exactla import Mat
from exceptional.jordan import JordanElement
from exceptional.octonion import Octonion

small = st.integers(-9, 9)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))

octonions = st.lists(small, min_size=8, max_size=8).map(Octonion)
jordans = st.lists(small, min_size=27, max_size=27).map(JordanElement)
heis = st.tuples(octonions, octonions, octonions).map(lambda t: HeisenbergElement(*t))


@st.composite
def matrices(draw, rows=None, cols=None, entries=rationals):
    r = draw(st.integers(1, 5)) if rows is None else rows
    c = draw(st.integers(1, 5)) if cols is None else cols
    return Mat([[draw(entries) for _ in range(c)] for _ in range(r)])
