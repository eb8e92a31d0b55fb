"""Named fixture automata used throughout the test suite and the docs.

All five are complete except `F_fig3bottom`, which exists to exercise
completion.  Languages:

  N_fig1, A_fig2, F_fig3  ->  a^i b^w
  L_fig3                  ->  b^w
  B_fig5                  ->  empty
  F_fig3bottom            ->  {abb, ab, bbb}^w
"""

from .core import Nbw, make_nbw


def n_fig1() -> Nbw:
    """Limit-deterministic but infinitely ambiguous; Q_N = {0, 2}, Q_D = {1, 3}."""
    return make_nbw(
        4, "ab", [0],
        [(0, "a", 0), (0, "b", 1), (0, "b", 2),
         (1, "a", 3), (1, "b", 1),
         (2, "a", 3), (2, "b", 1), (2, "b", 2),
         (3, "a", 3), (3, "b", 3)],
        [1])


def a_fig2() -> Nbw:
    """n_fig1 without the q2 -b-> q2 loop: 2-ambiguous, same language."""
    return make_nbw(
        4, "ab", [0],
        [(0, "a", 0), (0, "b", 1), (0, "b", 2),
         (1, "a", 3), (1, "b", 1),
         (2, "a", 3), (2, "b", 1),
         (3, "a", 3), (3, "b", 3)],
        [1])


def l_fig3() -> Nbw:
    """An LDBW that is not finitely ambiguous (b^w has one accepting run per jump point)."""
    return make_nbw(
        3, "ab", [0],
        [(0, "a", 2), (0, "b", 0), (0, "b", 1),
         (1, "a", 2), (1, "b", 1),
         (2, "a", 2), (2, "b", 2)],
        [1])


def f_fig3() -> Nbw:
    """An FANBW that is not limit deterministic (state 3 keeps two a-successors)."""
    return make_nbw(
        5, "ab", [0],
        [(0, "a", 0), (0, "b", 1), (0, "b", 2),
         (1, "a", 3), (1, "b", 1),
         (2, "a", 4), (2, "b", 1),
         (3, "a", 3), (3, "a", 4), (3, "b", 3),
         (4, "a", 4), (4, "b", 4)],
        [1])


def b_fig5() -> Nbw:
    """Single-letter FANBW with empty language; its full run DAG branches forever."""
    return make_nbw(
        3, "a", [0],
        [(0, "a", 0), (0, "a", 1),
         (1, "a", 2),
         (2, "a", 2)],
        [1])


def f_fig3bottom() -> Nbw:
    """Incomplete 2-ambiguous automaton over blocks {abb, ab, bbb}."""
    return make_nbw(
        3, "ab", [0],
        [(0, "a", 1), (0, "a", 2), (0, "b", 1),
         (1, "b", 2),
         (2, "b", 0)],
        [0])


FIXTURES = {
    "N_fig1": n_fig1,
    "A_fig2": a_fig2,
    "L_fig3": l_fig3,
    "F_fig3": f_fig3,
    "B_fig5": b_fig5,
    "F_fig3bottom": f_fig3bottom,
}


def fixture(name: str) -> Nbw:
    """Retrieve a named fixture automaton."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
