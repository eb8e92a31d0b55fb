"""Run DAGs over lasso words as finite quotients.

A run DAG over an ultimately periodic word is itself eventually periodic:
once the pair (level state set, loop phase) repeats, the whole level
structure including its incoming-edge pattern repeats forever, because each
level is a function of the previous one and the letter read.  All level-wise
notions (finite vertex, F-free vertex, stable and separating levels, the
pruning sequence behind the classical ranks) are therefore evaluated on the
quotient graph whose last periodic level wraps around to the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._graphs import cycle_nodes, reachable, sccs
from .core import Nbw
from .errors import TrackedNotSubset
from .words import LassoWord

FULL = "full"
REDUCED = "reduced"


def reduced_successors(a: Nbw, level_set, tracked, symbol: str) -> frozenset[int]:
    """The reduced transition function: successors kept for `tracked` inside `level_set`.

    Only edges from each successor's minimal predecessor (within the whole
    `level_set`, under the automaton's state order) survive edge reduction,
    so the result depends on the enclosing level set, not just on `tracked`.
    """
    level_set = frozenset(level_set)
    tracked = frozenset(tracked)
    if not tracked <= level_set:
        raise TrackedNotSubset(f"{set(tracked)} is not a subset of {set(level_set)}")
    s_min = _minimal_predecessors(a, level_set, symbol)
    return a.post(tracked & s_min, symbol)


def _minimal_predecessors(a: Nbw, level_set, symbol: str) -> frozenset[int]:
    out = set()
    for q in a.post(level_set, symbol):
        preds = [p for p in level_set if q in a.succ(p, symbol)]
        out.add(a.min_state(preds))
    return frozenset(out)


@dataclass(frozen=True)
class LassoDag:
    """Finite quotient of a (reduced) run DAG over a lasso word.

    `levels[l]` holds the states present at level l for l in
    [0, period_start + period_len); `preds[l]` maps each state at level l to
    its predecessors at level l-1, and `wrap_preds` gives the predecessor
    pattern feeding the periodic part's next repetition (level
    period_start + period_len, whose state set equals `levels[period_start]`).
    """

    mode: str
    word: LassoWord
    n: int
    accepting_states: frozenset[int]
    levels: tuple[tuple[int, ...], ...]
    preds: tuple[dict[int, tuple[int, ...]], ...]
    wrap_preds: dict[int, tuple[int, ...]]
    period_start: int
    period_len: int

    @property
    def level_count(self) -> int:
        return self.period_start + self.period_len

    def quotient(self) -> "_Quotient":
        nodes = []
        is_f = {}
        for lvl, states in enumerate(self.levels):
            for q in states:
                node = (lvl, q)
                nodes.append(node)
                is_f[node] = q in self.accepting_states
        succs = {node: [] for node in nodes}
        for lvl in range(1, self.level_count):
            for q, preds in self.preds[lvl].items():
                for p in preds:
                    succs[(lvl - 1, p)].append((lvl, q))
        last = self.level_count - 1
        for q, preds in self.wrap_preds.items():
            for p in preds:
                succs[(last, p)].append((self.period_start, q))
        pred_counts = {}
        for lvl in range(1, self.level_count):
            for q, preds in self.preds[lvl].items():
                pred_counts[(lvl, q)] = len(preds)
        wrap_counts = {q: len(preds) for q, preds in self.wrap_preds.items()}
        initial = [(0, q) for q in self.levels[0]]
        return _Quotient(nodes, succs, is_f, initial, self.period_start,
                         self.period_len, pred_counts, wrap_counts)


def lasso_dag(a: Nbw, w: LassoWord, mode: str = REDUCED) -> LassoDag:
    """Unroll the run DAG of `a` over `w` until its periodic part repeats."""
    if mode not in (FULL, REDUCED):
        raise ValueError(f"mode must be {FULL!r} or {REDUCED!r}")
    for sym in w.stem + w.loop:
        if sym not in a.alphabet:
            raise ValueError(f"symbol {sym!r} not in the alphabet")
    stem_len = len(w.stem)
    loop_len = len(w.loop)
    sets = [frozenset(a.initials)]
    seen = {}
    lvl = 0
    while True:
        if lvl >= stem_len:
            key = (sets[lvl], (lvl - stem_len) % loop_len)
            if key in seen:
                period_start = seen[key]
                period_len = lvl - period_start
                break
            seen[key] = lvl
        sets.append(a.post(sets[lvl], w.letter(lvl)))
        lvl += 1
    assert lvl <= stem_len + (2 ** a.n) * loop_len + loop_len

    def pred_pattern(sources, targets, symbol):
        pattern = {}
        for q in sorted(targets):
            preds = sorted(p for p in sources if q in a.succ(p, symbol))
            if mode == REDUCED:
                preds = [a.min_state(preds)]
            pattern[q] = tuple(preds)
        return pattern

    level_count = period_start + period_len
    preds = [dict.fromkeys(sorted(sets[0]), ())]
    for i in range(1, level_count):
        preds.append(pred_pattern(sets[i - 1], sets[i], w.letter(i - 1)))
    wrap_preds = pred_pattern(sets[level_count - 1], sets[period_start],
                              w.letter(level_count - 1))
    return LassoDag(
        mode=mode,
        word=w,
        n=a.n,
        accepting_states=a.accepting,
        levels=tuple(tuple(sorted(s)) for s in sets[:level_count]),
        preds=tuple(preds),
        wrap_preds=wrap_preds,
        period_start=period_start,
        period_len=period_len,
    )


@dataclass(frozen=True)
class DagReport:
    accepting: bool
    stable_level: Optional[int]
    separating_level: Optional[int]
    omega_branch_count_at_tail: int


class _Quotient:
    """Level-structured quotient graph shared by LassoDag and LdbwDag analyses."""

    def __init__(self, nodes, succs, is_f, initial, period_start, period_len,
                 pred_counts, wrap_counts):
        self.nodes = nodes
        self.succs = succs
        self.is_f = is_f
        self.initial = initial
        self.period_start = period_start
        self.period_len = period_len
        self.pred_counts = pred_counts   # (level, key) -> in-degree, levels 1.. via stem-side pattern
        self.wrap_counts = wrap_counts   # key at period_start -> in-degree on later repetitions
        self.level_count = period_start + period_len
        self._rsuccs = None

    def rsuccs(self, node):
        if self._rsuccs is None:
            rs = {n: [] for n in self.nodes}
            for u, vs in self.succs.items():
                for v in vs:
                    rs[v].append(u)
            self._rsuccs = rs
        return self._rsuccs[node]

    def non_finite_nodes(self):
        """Nodes with an infinite branch below them: those reaching a quotient cycle."""
        cyc = cycle_nodes(self.nodes, lambda v: self.succs[v])
        return reachable(cyc, self.rsuccs)

    def accepting_useful_nodes(self):
        """Nodes lying on some branch that visits F-vertices infinitely often."""
        f_cyc = set()
        for comp in sccs(self.nodes, lambda v: self.succs[v]):
            cyclic = len(comp) > 1 or comp[0] in self.succs[comp[0]]
            if cyclic and any(self.is_f[v] for v in comp):
                f_cyc.update(comp)
        return reachable(f_cyc, self.rsuccs)

    def level_nodes(self, lvl):
        return [v for v in self.nodes if v[0] == lvl]


def analyze_dag(d) -> DagReport:
    """Acceptance, stable level, separating level and the tail branch count."""
    q = d.quotient()
    acc_nodes = q.accepting_useful_nodes()
    accepting = any(v in acc_nodes for v in q.initial)
    non_finite = q.non_finite_nodes()

    def bad_stable(lvl):
        return any(q.is_f[v] and v in non_finite for v in q.level_nodes(lvl))

    if any(bad_stable(lvl) for lvl in range(q.period_start, q.level_count)):
        stable = None
    else:
        bads = [lvl for lvl in range(q.period_start) if bad_stable(lvl)]
        stable = max(bads) + 1 if bads else 1

    separating = _separating_level(q, acc_nodes) if accepting else None

    tail_counts = [sum(1 for v in q.level_nodes(lvl) if v in non_finite)
                   for lvl in range(q.period_start, q.level_count)]
    return DagReport(accepting, stable, separating, max(tail_counts))


def _separating_level(q, acc_nodes):
    """Last unrolled level where two accepting branches still merge, if bounded."""
    def in_degree(unrolled_lvl):
        # Pattern at the quotient image; the first pass over the periodic part
        # uses the stem-side predecessors, later passes the wrap pattern.
        if unrolled_lvl < q.level_count:
            return lambda key: q.pred_counts.get((unrolled_lvl, key), 0)
        j = q.period_start + (unrolled_lvl - q.period_start) % q.period_len
        if j == q.period_start:
            return lambda key: q.wrap_counts.get(key, 0)
        return lambda key: q.pred_counts.get((j, key), 0)

    def quotient_level(unrolled_lvl):
        if unrolled_lvl < q.level_count:
            return unrolled_lvl
        return q.period_start + (unrolled_lvl - q.period_start) % q.period_len

    def merging(unrolled_lvl):
        deg = in_degree(unrolled_lvl)
        j = quotient_level(unrolled_lvl)
        return any(v in acc_nodes and deg(v[1]) >= 2 for v in q.level_nodes(j))

    steady = range(q.level_count, q.level_count + q.period_len)
    if any(merging(lvl) for lvl in steady):
        return None
    bads = [lvl for lvl in range(1, q.level_count) if merging(lvl)]
    return max(bads) if bads else 0


def classical_ranks(d: LassoDag) -> dict[tuple[int, int], int]:
    """Ranks from the pruning sequence, per quotient vertex (level, state).

    Even steps remove the vertices that became finite, odd steps the F-free
    ones; survivors of the last pruning take the maximum rank (2n in full
    mode, 2 in reduced mode).
    """
    q = d.quotient()
    max_rank = 2 if d.mode == REDUCED else 2 * d.n
    current = set(q.nodes)
    ranks = {}
    for i in range(max_rank + 1):
        if i % 2 == 0:
            cyc = cycle_nodes(current, lambda v: [s for s in q.succs[v] if s in current])
            alive = reachable(cyc, lambda v: [p for p in q.rsuccs(v) if p in current])
            batch = current - alive
        else:
            f_now = {v for v in current if q.is_f[v]}
            sees_f = reachable(f_now, lambda v: [p for p in q.rsuccs(v) if p in current])
            batch = current - sees_f
        for v in batch:
            ranks[v] = i
        current -= batch
    for v in current:
        ranks[v] = max_rank
    return ranks


def pruning_survivors(d: LassoDag, steps: int) -> set[tuple[int, int]]:
    """Quotient vertices still present after `steps` prunings (G^steps)."""
    q = d.quotient()
    current = set(q.nodes)
    for i in range(steps):
        if i % 2 == 0:
            cyc = cycle_nodes(current, lambda v: [s for s in q.succs[v] if s in current])
            alive = reachable(cyc, lambda v: [p for p in q.rsuccs(v) if p in current])
            current = current & alive
        else:
            f_now = {v for v in current if q.is_f[v]}
            sees_f = reachable(f_now, lambda v: [p for p in q.rsuccs(v) if p in current])
            current = current & sees_f
    return current
