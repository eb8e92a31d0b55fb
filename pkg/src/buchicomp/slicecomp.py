"""Slice successor construction, NBW disambiguation, and the slice-based
complement for finitely ambiguous automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import Nbw, classify, complete, make_nbw
from .errors import NotFinitelyAmbiguous, PhaseMismatch
from .rundag import _minimal_predecessors

Slice = tuple  # ordered sequence of pairwise-disjoint nonempty frozensets


def _slice_step(a: Nbw, s: Slice, symbol: str):
    """Successor slice plus, per old block index, the new indices it spawned.

    Each block splits into its non-accepting then accepting successors; a
    state occurring in several of the 2k candidate sets is kept only in the
    rightmost one; empty sets are dropped and the rest reindexed compactly.
    """
    raw = []
    for j, block in enumerate(s):
        succ = a.post(block, symbol)
        raw.append((j, succ - a.accepting))
        raw.append((j, succ & a.accepting))
    deduped = []
    later: set[int] = set()
    for j, states in reversed(raw):
        deduped.append((j, frozenset(states - later)))
        later |= states
    deduped.reverse()
    new_slice = []
    children: list[list[int]] = [[] for _ in s]
    for j, states in deduped:
        if states:
            children[j].append(len(new_slice))
            new_slice.append(states)
    return tuple(new_slice), tuple(tuple(c) for c in children)


def slice_successor(a: Nbw, s: Slice, symbol: str) -> Slice:
    """The successor slice of `s` on `symbol`."""
    new_slice, _ = _slice_step(a, s, symbol)
    return new_slice


def initial_slice(a: Nbw) -> Slice:
    blocks = [frozenset(a.initials) - a.accepting, frozenset(a.initials) & a.accepting]
    return tuple(b for b in blocks if b)


def disambiguate(a: Nbw) -> Nbw:
    """A language-equivalent finitely ambiguous automaton.

    States are (slice, block index) pairs: runs correspond to branches of the
    slice DAG, of which there are at most |Q| infinite ones per word.  A pair
    accepts when its tracked block consists of accepting states.  Tracked
    blocks with no surviving child get no successor; completion then routes
    them to a rejecting sink.
    """
    init = initial_slice(a)
    initial_states = [(init, i) for i in range(len(init))]
    index = {}
    states = []
    for st in initial_states:
        index[st] = len(states)
        states.append(st)
    transitions = []
    todo = deque(initial_states)
    while todo:
        s, i = todo.popleft()
        for symbol in a.alphabet:
            s2, children = _slice_step(a, s, symbol)
            for c in children[i]:
                target = (s2, c)
                if target not in index:
                    index[target] = len(states)
                    states.append(target)
                    todo.append(target)
                transitions.append((index[(s, i)], symbol, index[target]))
    accepting = [k for k, (s, i) in enumerate(states) if s[i] <= a.accepting]
    result = make_nbw(len(states), a.alphabet, [index[st] for st in initial_states],
                      transitions, accepting)
    return complete(result)


@dataclass(frozen=True)
class SliceMacrostate:
    """Initial phase: the reachable subset; accepting phase: (N, C, B).

    `reached` is the subset-construction component throughout.  `collected`
    (the finite-vertex candidates, C) and `breakpoint` (B) are None in the
    initial phase.
    """

    reached: frozenset[int]
    collected: Optional[frozenset] = None
    breakpoint: Optional[frozenset] = None

    @property
    def initial_phase(self) -> bool:
        return self.collected is None

    @property
    def is_accepting(self) -> bool:
        return not self.initial_phase and not self.breakpoint


def _slc_jump(a: Nbw, subset: frozenset) -> SliceMacrostate:
    return SliceMacrostate(subset, subset & a.accepting, subset & a.accepting)


def _slc_det_step(a: Nbw, m: SliceMacrostate, symbol: str) -> SliceMacrostate:
    s_min = _minimal_predecessors(a, m.reached, symbol)

    def red(x):
        return a.post(x & s_min, symbol)

    n2 = red(m.reached)
    c2 = red(m.collected) | (n2 & a.accepting)
    b2 = red(m.breakpoint) if m.breakpoint else c2
    return SliceMacrostate(n2, c2, b2)


def slc_complement_fa_labeled(a: Nbw):
    """Slice-based complement of an FANBW plus per-index macrostates."""
    if not classify(a).finitely_ambiguous:
        raise NotFinitelyAmbiguous("slice-based complementation needs an FANBW")
    bound = 2 ** a.n + 4 ** a.n
    initial = SliceMacrostate(frozenset(a.initials))
    index = {initial: 0}
    macrostates = [initial]
    transitions = []
    todo = deque([initial])
    while todo:
        m = todo.popleft()
        for symbol in a.alphabet:
            if m.initial_phase:
                targets = [SliceMacrostate(a.post(m.reached, symbol)),
                           _slc_det_step(a, _slc_jump(a, m.reached), symbol)]
            else:
                targets = [_slc_det_step(a, m, symbol)]
            for m2 in targets:
                if m2 not in index:
                    index[m2] = len(macrostates)
                    macrostates.append(m2)
                    todo.append(m2)
                    assert len(macrostates) <= bound, "slice complement exceeded its size bound"
                transitions.append((index[m], symbol, index[m2]))
    accepting = [i for i, m in enumerate(macrostates) if m.is_accepting]
    nbw = make_nbw(len(macrostates), a.alphabet, [0], transitions, accepting)
    return nbw, tuple(macrostates)


def slc_complement_fa(a: Nbw) -> Nbw:
    """Complement a finitely ambiguous automaton with the slice-based construction."""
    nbw, _ = slc_complement_fa_labeled(a)
    return nbw


def slc_subsumes(m1: SliceMacrostate, m2: SliceMacrostate) -> bool:
    """True when m1's rooted language provably contains m2's: N equal, C1 <= C2."""
    if m1.initial_phase or m2.initial_phase:
        raise PhaseMismatch("subsumption is defined on accepting-phase macrostates")
    return m1.reached == m2.reached and m1.collected <= m2.collected
