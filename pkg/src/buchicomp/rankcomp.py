"""Rank-based complementation: the general 2n-rank construction and the
max-rank-2 specialization for finitely ambiguous automata."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .core import Nbw, classify, make_nbw
from .errors import NotFinitelyAmbiguous
from .rundag import _minimal_predecessors

GENERAL = "general"
FA = "fa"


@dataclass(frozen=True)
class RankMacrostate:
    """A level ranking (None encoding bottom) plus the breakpoint set O."""

    ranking: tuple  # tuple of Optional[int], indexed by state
    breakpoint: frozenset[int]

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(q for q, r in enumerate(self.ranking) if r is not None)

    def rank(self, q: int):
        return self.ranking[q]

    def even_states(self) -> frozenset[int]:
        return frozenset(q for q, r in enumerate(self.ranking)
                         if r is not None and r % 2 == 0)

    def odd_states(self) -> frozenset[int]:
        return frozenset(q for q, r in enumerate(self.ranking)
                         if r is not None and r % 2 == 1)


def _max_rank(a: Nbw, mode: str) -> int:
    return 2 if mode == FA else 2 * a.n


def _successor_rankings(a: Nbw, ranking: tuple, symbol: str, max_rank: int, mode: str):
    """All rankings covered by `ranking` on `symbol`, in lexicographic order.

    The successor domain is the full successor set of the current domain.  In
    fa mode only edges surviving the reduced transition function (with the
    current domain as context) constrain ranks; in general mode every edge
    does.  Ranks never increase along constraining edges and accepting states
    only take even ranks.
    """
    domain = frozenset(q for q, r in enumerate(ranking) if r is not None)
    new_domain = a.post(domain, symbol)
    if mode == FA:
        s_min = _minimal_predecessors(a, domain, symbol)
        constrainers = domain & s_min
    else:
        constrainers = domain
    choices = []
    for q in sorted(new_domain):
        bound = min(min(ranking[p] for p in constrainers if q in a.succ(p, symbol)),
                    max_rank)
        ranks = range(0, bound + 1, 2) if q in a.accepting else range(bound + 1)
        choices.append((q, tuple(ranks)))
    for combo in itertools.product(*(ranks for _, ranks in choices)):
        out = [None] * a.n
        for (q, _), r in zip(choices, combo):
            out[q] = r
        yield tuple(out)


def covering_rankings(a: Nbw, m: RankMacrostate, symbol: str, max_rank: int,
                      mode: str = GENERAL) -> list[tuple]:
    """The rankings reachable from `m`'s ranking on `symbol` (no breakpoint update)."""
    return list(_successor_rankings(a, m.ranking, symbol, max_rank, mode))


def _successors(a: Nbw, m: RankMacrostate, symbol: str, max_rank: int, mode: str):
    domain = m.domain
    if m.breakpoint:
        if mode == FA:
            s_min = _minimal_predecessors(a, domain, symbol)
            carried = a.post(m.breakpoint & s_min, symbol)
        else:
            carried = a.post(m.breakpoint, symbol)
        for ranking in _successor_rankings(a, m.ranking, symbol, max_rank, mode):
            odd = frozenset(q for q, r in enumerate(ranking)
                            if r is not None and r % 2 == 1)
            yield RankMacrostate(ranking, carried - odd)
    else:
        for ranking in _successor_rankings(a, m.ranking, symbol, max_rank, mode):
            even = frozenset(q for q, r in enumerate(ranking)
                             if r is not None and r % 2 == 0)
            yield RankMacrostate(ranking, even)


def rkc_complement_labeled(a: Nbw, mode: str = GENERAL):
    """Reachable rank-based complement plus the macrostate behind each state index."""
    if mode not in (GENERAL, FA):
        raise ValueError(f"mode must be {GENERAL!r} or {FA!r}")
    if mode == FA and not classify(a).finitely_ambiguous:
        raise NotFinitelyAmbiguous("fa-mode rank complementation needs an FANBW")
    max_rank = _max_rank(a, mode)
    bound = (8 * a.n) ** a.n if mode == GENERAL else 6 ** a.n

    initial_ranking = tuple(max_rank if q in a.initials else None for q in range(a.n))
    initial = RankMacrostate(initial_ranking, frozenset())
    index = {initial: 0}
    macrostates = [initial]
    transitions = []
    todo = deque([initial])
    while todo:
        m = todo.popleft()
        for symbol in a.alphabet:
            for m2 in _successors(a, m, symbol, max_rank, mode):
                if m2 not in index:
                    index[m2] = len(macrostates)
                    macrostates.append(m2)
                    todo.append(m2)
                    assert len(macrostates) <= bound, "rank complement exceeded its size bound"
                transitions.append((index[m], symbol, index[m2]))
    accepting = [i for i, m in enumerate(macrostates) if not m.breakpoint]
    nbw = make_nbw(len(macrostates), a.alphabet, [0], transitions, accepting)
    return nbw, tuple(macrostates)


def rkc_complement(a: Nbw, mode: str = GENERAL) -> Nbw:
    """Complement `a` with the rank-based construction (`general` or `fa` mode)."""
    nbw, _ = rkc_complement_labeled(a, mode)
    return nbw


def rank_subsumes(m1: RankMacrostate, m2: RankMacrostate) -> bool:
    """Syntactic check implying that m1's rooted language contains m2's.

    Requires equal domains, pointwise m1 >= m2 on ranks, and the breakpoint
    of m1 contained in m2's.  Sufficient but not necessary.
    """
    if m1.domain != m2.domain:
        return False
    if any(m1.ranking[q] < m2.ranking[q] for q in m1.domain):
        return False
    return m1.breakpoint <= m2.breakpoint
