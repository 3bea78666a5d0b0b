import pytest
from hypothesis import strategies as st

from app.services import ColoredPermutation, parse_bound, parse_window

P1 = "3^2,2^1,1^1,4"
Q1 = "3^2,2^1,4,1^1"
P2 = "2^1,4^2,1,3^1,5^1"
P3 = "5^1,6^2,3^1,1^1,4,2^2,7,9,8^2"
P4 = "-3,2,4,-5,1"
P5 = "-5,-2,-1,-3,4"
P6 = "-5,-1,-3,4,-2"


@pytest.fixture
def p1():
    return parse_window(P1, 3)


@pytest.fixture
def q1():
    return parse_window(Q1, 3)


@pytest.fixture
def p2():
    return parse_window(P2, 3)


@pytest.fixture
def p3():
    return parse_window(P3, 3)


@pytest.fixture
def p4():
    return parse_window(P4, 2)


@pytest.fixture
def p5():
    return parse_window(P5, 2)


@pytest.fixture
def p6():
    return parse_window(P6, 2)


@pytest.fixture
def f1():
    return parse_bound("2,3,3,4")


@pytest.fixture
def f2():
    return parse_bound("1,2")


@st.composite
def colored_permutations(draw, r=None, n=None, max_r=4, max_n=6):
    """Elements of G(r,n); r and n are drawn when not given."""
    r = draw(st.integers(min_value=1, max_value=max_r)) if r is None else r
    n = draw(st.integers(min_value=0, max_value=max_n)) if n is None else n
    bases = draw(st.permutations(list(range(1, n + 1))))
    colors = draw(st.lists(st.integers(min_value=0, max_value=r - 1), min_size=n, max_size=n))
    return ColoredPermutation(r, tuple(bases), tuple(colors))


@st.composite
def even_signed_permutations(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bases = draw(st.permutations(list(range(1, n + 1))))
    colors = draw(st.lists(st.integers(min_value=0, max_value=1), min_size=n, max_size=n))
    if sum(colors) % 2:
        colors[0] = 1 - colors[0]
    return ColoredPermutation(2, tuple(bases), tuple(colors))


@st.composite
def groups_of_three(draw, max_r=4, max_n=5):
    """Three elements of one G(r,n)."""
    r = draw(st.integers(min_value=1, max_value=max_r))
    n = draw(st.integers(min_value=0, max_value=max_n))
    return tuple(draw(colored_permutations(r=r, n=n)) for _ in range(3))
