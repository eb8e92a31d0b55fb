"""Codeterministic run DAGs for limit-deterministic automata and the
NSBC-style quadruple complement."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import LdbwPartition, Nbw, make_nbw
from .errors import InvalidPartition
from .rundag import _Quotient
from .words import LassoWord

N_KEY = ("n",)


def _check_partition(a: Nbw, p: LdbwPartition):
    states = set(a.states)
    if p.q_n | p.q_d != states or p.q_n & p.q_d:
        raise InvalidPartition("partition does not split the state set")
    if not a.accepting <= p.q_d:
        raise InvalidPartition("accepting states must be in the deterministic part")
    for q in p.q_d:
        for sym in a.alphabet:
            targets = a.succ(q, sym)
            if len(targets) != 1 or not targets <= p.q_d:
                raise InvalidPartition(f"state {q} is not deterministic on {sym!r}")
            if p.delta_d.get((q, sym)) not in targets:
                raise InvalidPartition("delta_d disagrees with the automaton")
    for q in p.q_n:
        for sym in a.alphabet:
            targets = a.succ(q, sym)
            if p.delta_n.get((q, sym), frozenset()) != targets & p.q_n:
                raise InvalidPartition("delta_n disagrees with the automaton")
            if p.delta_j.get((q, sym), frozenset()) != targets & p.q_d:
                raise InvalidPartition("delta_j disagrees with the automaton")


def _dd(p: LdbwPartition, states, symbol) -> frozenset[int]:
    return frozenset(p.delta_d[(q, symbol)] for q in states)


def _dn(p: LdbwPartition, states, symbol) -> frozenset[int]:
    out = set()
    for q in states:
        out |= p.delta_n[(q, symbol)]
    return frozenset(out)


def _dj(p: LdbwPartition, states, symbol) -> frozenset[int]:
    out = set()
    for q in states:
        out |= p.delta_j[(q, symbol)]
    return frozenset(out)


@dataclass(frozen=True)
class LdbwDag:
    """Quotient of the prioritized codeterministic DAG of an LDBW over a lasso.

    Each level holds deterministic vertices (one state each, with a priority)
    and at most one nondeterministic vertex (a subset of Q_N, with a
    priority).  Kept edges: a deterministic successor hangs off its
    minimal-priority deterministic predecessor, jump states off the
    nondeterministic vertex.  Priorities follow the defining equations
    verbatim; only their relative order within a level determines the edge
    structure, so period detection keys on that order (the raw values can
    drift upward when jump states keep dying and re-entering, exceeding
    |Q_D| + 1).
    """

    word: LassoWord
    n: int
    q_d: frozenset[int]
    accepting_states: frozenset[int]
    levels: tuple  # per level: (dverts: tuple[(state, prio), ...], nvert: (frozenset, prio) | None)
    d_preds: tuple  # per level >= 1: dict state -> pred d-state, or None for a jump edge
    wrap_d_preds: dict
    period_start: int
    period_len: int

    @property
    def level_count(self) -> int:
        return self.period_start + self.period_len

    def priorities(self) -> dict:
        """Vertex -> priority over the quotient levels; keys ('d', state) / ('n',)."""
        out = {}
        for lvl, (dverts, nvert) in enumerate(self.levels):
            for q, prio in dverts:
                out[(lvl, ("d", q))] = prio
            if nvert is not None:
                out[(lvl, N_KEY)] = nvert[1]
        return out

    def quotient(self) -> _Quotient:
        nodes = []
        is_f = {}
        has_n = []
        for lvl, (dverts, nvert) in enumerate(self.levels):
            for q, _ in dverts:
                node = (lvl, ("d", q))
                nodes.append(node)
                is_f[node] = q in self.accepting_states
            if nvert is not None:
                node = (lvl, N_KEY)
                nodes.append(node)
                is_f[node] = False
            has_n.append(nvert is not None)
        succs = {v: [] for v in nodes}
        pred_counts = {}
        for lvl in range(1, self.level_count):
            for q, pred in self.d_preds[lvl].items():
                src = (lvl - 1, ("d", pred)) if pred is not None else (lvl - 1, N_KEY)
                succs[src].append((lvl, ("d", q)))
                pred_counts[(lvl, ("d", q))] = 1
            if has_n[lvl]:
                succs[(lvl - 1, N_KEY)].append((lvl, N_KEY))
                pred_counts[(lvl, N_KEY)] = 1
        last = self.level_count - 1
        wrap_counts = {}
        for q, pred in self.wrap_d_preds.items():
            src = (last, ("d", pred)) if pred is not None else (last, N_KEY)
            succs[src].append((self.period_start, ("d", q)))
            wrap_counts[("d", q)] = 1
        if has_n[last] and has_n[self.period_start]:
            succs[(last, N_KEY)].append((self.period_start, N_KEY))
            wrap_counts[N_KEY] = 1
        initial = [v for v in nodes if v[0] == 0]
        return _Quotient(nodes, succs, is_f, initial, self.period_start,
                         self.period_len, pred_counts, wrap_counts)


def ldbw_codet_dag(a: Nbw, p: LdbwPartition, w: LassoWord) -> LdbwDag:
    """Build the prioritized codeterministic DAG of `a` (with partition `p`) over `w`."""
    _check_partition(a, p)
    for sym in w.stem + w.loop:
        if sym not in a.alphabet:
            raise ValueError(f"symbol {sym!r} not in the alphabet")

    def order_key(q):
        # deterministic states come earlier than nondeterministic ones
        return (0 if q in p.q_d else 1, a.order_pos(q))

    init_d = sorted(a.initials & p.q_d, key=order_key)
    dverts0 = tuple((q, k + 1) for k, q in enumerate(init_d))
    init_n = frozenset(a.initials & p.q_n)
    nvert0 = (init_n, len(init_d) + 1) if init_n else None
    levels = [(dverts0, nvert0)]
    d_preds: list[dict] = [{}]

    def step(level, symbol):
        dverts, nvert = level
        d_next = {}
        pred_of = {}
        for q, q_prio in dverts:
            target = p.delta_d[(q, symbol)]
            if target not in d_next or q_prio < d_next[target]:
                d_next[target] = q_prio
                pred_of[target] = q
        if nvert is not None:
            n_set, n_prio = nvert
            jumps = sorted(_dj(p, n_set, symbol) - set(d_next), key=order_key)
            for k, j in enumerate(jumps, start=1):
                d_next[j] = n_prio + k - 1
                pred_of[j] = None
            n2 = _dn(p, n_set, symbol)
            nvert2 = (n2, n_prio + len(jumps)) if n2 else None
        else:
            nvert2 = None
        dverts2 = tuple(sorted(d_next.items(), key=lambda item: order_key(item[0])))
        return (dverts2, nvert2), pred_of

    stem_len = len(w.stem)
    loop_len = len(w.loop)
    seen = {}
    lvl = 0
    while True:
        if lvl >= stem_len:
            dverts, nvert = levels[lvl]
            prios = [pr for _, pr in dverts]
            rank_pattern = tuple(sorted(prios).index(pr) for pr in prios)
            key = (tuple(q for q, _ in dverts), rank_pattern,
                   None if nvert is None else nvert[0],
                   (lvl - stem_len) % loop_len)
            if key in seen:
                period_start = seen[key]
                period_len = lvl - period_start
                break
            seen[key] = lvl
        nxt, pred_of = step(levels[lvl], w.letter(lvl))
        levels.append(nxt)
        d_preds.append(pred_of)
        lvl += 1

    level_count = period_start + period_len
    _, wrap_pred_of = step(levels[level_count - 1], w.letter(level_count - 1))
    return LdbwDag(
        word=w,
        n=a.n,
        q_d=p.q_d,
        accepting_states=a.accepting,
        levels=tuple(levels[:level_count]),
        d_preds=tuple(d_preds[:level_count]),
        wrap_d_preds=wrap_pred_of,
        period_start=period_start,
        period_len=period_len,
    )


@dataclass(frozen=True)
class NsbcMacrostate:
    """Initial phase: a plain subset; accepting phase: the (N, S, B, C) quadruple.

    `safe` tracks runs that must not see accepting states again, `breakpoint`
    the runs currently checked for dying out, `collected` the runs queued for
    the next breakpoint round.
    """

    subset: Optional[frozenset] = None
    nondet: Optional[frozenset] = None
    safe: Optional[frozenset] = None
    breakpoint: Optional[frozenset] = None
    collected: Optional[frozenset] = None

    @property
    def initial_phase(self) -> bool:
        return self.subset is not None

    @property
    def is_accepting(self) -> bool:
        return not self.initial_phase and not self.breakpoint


def _nsbc_det_step(a: Nbw, p: LdbwPartition, m: NsbcMacrostate, symbol: str) -> NsbcMacrostate:
    n2 = _dn(p, m.nondet, symbol)
    s2 = _dd(p, m.safe, symbol) - a.accepting
    incoming = (_dd(p, m.collected, symbol) | _dj(p, m.nondet, symbol)
                | (_dd(p, m.safe, symbol) & a.accepting))
    if m.breakpoint:
        b2 = _dd(p, m.breakpoint, symbol) - s2
        c2 = (incoming - s2) - b2
    else:
        b2 = incoming - s2
        c2 = frozenset()
    return NsbcMacrostate(None, n2, s2, b2, c2)


def _nsbc_jump(a: Nbw, p: LdbwPartition, subset: frozenset) -> NsbcMacrostate:
    return NsbcMacrostate(None,
                          subset & p.q_n,
                          (subset & p.q_d) - a.accepting,
                          subset & a.accepting,
                          frozenset())


def nsbc_complement_labeled(a: Nbw, p: LdbwPartition):
    """NSBC-style complement of an LDBW plus per-index macrostates."""
    _check_partition(a, p)
    bound = (2 ** a.n
             + 2 ** len(p.q_n) * 3 ** len(a.accepting) * 4 ** len(p.q_d - a.accepting))
    initial = NsbcMacrostate(subset=frozenset(a.initials))
    index = {initial: 0}
    macrostates = [initial]
    transitions = []
    todo = deque([initial])
    while todo:
        m = todo.popleft()
        for symbol in a.alphabet:
            if m.initial_phase:
                targets = [NsbcMacrostate(subset=a.post(m.subset, symbol)),
                           _nsbc_det_step(a, p, _nsbc_jump(a, p, m.subset), symbol)]
            else:
                targets = [_nsbc_det_step(a, p, m, symbol)]
            for m2 in targets:
                if m2 not in index:
                    index[m2] = len(macrostates)
                    macrostates.append(m2)
                    todo.append(m2)
                    assert len(macrostates) <= bound, "nsbc complement exceeded its size bound"
                transitions.append((index[m], symbol, index[m2]))
    accepting = [i for i, m in enumerate(macrostates) if m.is_accepting]
    nbw = make_nbw(len(macrostates), a.alphabet, [0], transitions, accepting)
    return nbw, tuple(macrostates)


def nsbc_complement(a: Nbw, p: LdbwPartition) -> Nbw:
    """Complement a limit-deterministic automaton via the quadruple construction."""
    nbw, _ = nsbc_complement_labeled(a, p)
    return nbw
