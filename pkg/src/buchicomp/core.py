"""Automaton representation, completion, classification and LDBW partitioning."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from ._graphs import cycle_nodes, reachable, sccs
from .errors import InvalidPartition, NotLimitDeterministic


@dataclass(frozen=True)
class Nbw:
    """A nondeterministic Buchi word automaton with a fixed total state order.

    States are the integers 0..n-1.  `transitions` maps every (state, symbol)
    pair to a (possibly empty) frozenset of targets; an automaton is complete
    when no such set is empty.  `order` lists the states in ascending order
    under the total order used for minimal-predecessor selection; the default
    is ascending state index.
    """

    n: int
    alphabet: tuple[str, ...]
    initials: frozenset[int]
    transitions: dict[tuple[int, str], frozenset[int]]
    accepting: frozenset[int]
    order: tuple[int, ...]
    _order_pos: dict[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        states = range(self.n)
        if self.n <= 0:
            raise ValueError("automaton needs at least one state")
        if not self.initials:
            raise ValueError("initial state set must be nonempty")
        if not self.initials <= set(states):
            raise ValueError("initial states out of range")
        if not self.accepting <= set(states):
            raise ValueError("accepting states out of range")
        if sorted(self.order) != list(states):
            raise ValueError("order must be a permutation of the states")
        for (q, a), targets in self.transitions.items():
            if q not in states or a not in self.alphabet:
                raise ValueError(f"transition key ({q}, {a!r}) out of range")
            if not targets <= set(states):
                raise ValueError(f"transition targets of ({q}, {a!r}) out of range")
        object.__setattr__(self, "_order_pos", {q: i for i, q in enumerate(self.order)})

    @property
    def states(self) -> range:
        return range(self.n)

    def succ(self, q: int, a: str) -> frozenset[int]:
        return self.transitions.get((q, a), frozenset())

    def post(self, states: Iterable[int], a: str) -> frozenset[int]:
        out = set()
        for q in states:
            out |= self.succ(q, a)
        return frozenset(out)

    def order_pos(self, q: int) -> int:
        return self._order_pos[q]

    def min_state(self, states: Iterable[int]) -> int:
        """The minimal state under the automaton's total order."""
        return min(states, key=self._order_pos.__getitem__)

    @property
    def is_complete(self) -> bool:
        return all(self.succ(q, a) for q in self.states for a in self.alphabet)

    def with_initials(self, initials: Iterable[int]) -> "Nbw":
        """The same automaton restarted from a different initial set."""
        return make_nbw(self.n, self.alphabet, initials, self.transitions,
                        self.accepting, self.order)

    def with_order(self, order: Iterable[int]) -> "Nbw":
        return make_nbw(self.n, self.alphabet, self.initials, self.transitions,
                        self.accepting, order)


def make_nbw(n, alphabet, initials, transitions, accepting, order=None) -> Nbw:
    """Normalizing constructor: sorts the alphabet and fills missing transition keys.

    `transitions` may be a mapping (state, symbol) -> iterable of targets or an
    iterable of (source, symbol, target) triples.
    """
    alphabet = tuple(sorted(set(alphabet)))
    table: dict[tuple[int, str], set[int]] = {(q, a): set() for q in range(n) for a in alphabet}
    if isinstance(transitions, Mapping):
        for (q, a), targets in transitions.items():
            table[(q, a)].update(targets)
    else:
        for q, a, target in transitions:
            table[(q, a)].add(target)
    frozen = {key: frozenset(targets) for key, targets in table.items()}
    if order is None:
        order = tuple(range(n))
    return Nbw(n, alphabet, frozenset(initials), frozen, frozenset(accepting), tuple(order))


def complete(a: Nbw) -> Nbw:
    """Total-ize the transition function.

    Already-complete automata are returned unchanged.  Otherwise one fresh
    non-accepting sink is appended as the highest state (last in the order)
    and every missing (state, symbol) pair is redirected to it.
    """
    if a.is_complete:
        return a
    sink = a.n
    table = {}
    for q in a.states:
        for sym in a.alphabet:
            targets = a.succ(q, sym)
            table[(q, sym)] = targets if targets else frozenset({sink})
    for sym in a.alphabet:
        table[(sink, sym)] = frozenset({sink})
    return make_nbw(a.n + 1, a.alphabet, a.initials, table, a.accepting,
                    a.order + (sink,))


@dataclass(frozen=True)
class LdbwPartition:
    """A limit-deterministic split of the state space.

    `q_d` contains all accepting states, is closed under successors, and every
    state in it has exactly one successor per symbol.  `delta_n`/`delta_j` are
    the restrictions of the transition function from `q_n` back into `q_n`
    resp. across into `q_d`; `delta_d` is the deterministic successor map.
    """

    q_n: frozenset[int]
    q_d: frozenset[int]
    delta_n: dict[tuple[int, str], frozenset[int]]
    delta_j: dict[tuple[int, str], frozenset[int]]
    delta_d: dict[tuple[int, str], int]


def _closure(a: Nbw, seeds: Iterable[int]) -> frozenset[int]:
    return frozenset(reachable(seeds, lambda q: [t for sym in a.alphabet for t in a.succ(q, sym)]))


def ldbw_partition(a: Nbw, q_d: Optional[Iterable[int]] = None) -> LdbwPartition:
    """Partition `a` per the limit-deterministic conditions.

    With no `q_d` argument the canonical minimal deterministic part is used:
    the forward closure of the accepting states.  An explicit `q_d` is
    validated instead (it must contain the accepting states, be closed under
    successors, and be deterministic).

    Raises NotLimitDeterministic (canonical) or InvalidPartition (explicit)
    when the conditions fail.
    """
    if q_d is None:
        q_d = _closure(a, a.accepting)
        for q in sorted(q_d):
            for sym in a.alphabet:
                if len(a.succ(q, sym)) != 1:
                    raise NotLimitDeterministic(
                        f"state {q} has {len(a.succ(q, sym))} successors on {sym!r}")
        q_d = frozenset(q_d)
    else:
        q_d = frozenset(q_d)
        if not a.accepting <= q_d:
            raise InvalidPartition("accepting states must lie in the deterministic part")
        for q in sorted(q_d):
            for sym in a.alphabet:
                targets = a.succ(q, sym)
                if len(targets) != 1:
                    raise InvalidPartition(
                        f"state {q} has {len(targets)} successors on {sym!r}")
                if not targets <= q_d:
                    raise InvalidPartition(
                        f"deterministic part not closed: {q} --{sym}--> {set(targets)}")
    q_n = frozenset(a.states) - q_d
    delta_n = {}
    delta_j = {}
    delta_d = {}
    for q in a.states:
        for sym in a.alphabet:
            targets = a.succ(q, sym)
            if q in q_d:
                (t,) = targets
                delta_d[(q, sym)] = t
            else:
                delta_n[(q, sym)] = targets & q_n
                delta_j[(q, sym)] = targets & q_d
    return LdbwPartition(q_n, q_d, delta_n, delta_j, delta_d)


def maximal_deterministic_part(a: Nbw) -> frozenset[int]:
    """The largest state set usable as `q_d`: states whose forward closure is deterministic."""
    det = {q for q in a.states
           if all(len(a.succ(q, sym)) == 1 for sym in a.alphabet)}
    good = set()
    for q in a.states:
        clo = _closure(a, [q])
        if clo <= det:
            good.add(q)
    return frozenset(good)


@dataclass(frozen=True)
class ClassificationReport:
    complete: bool
    deterministic: bool
    reverse_deterministic: bool
    limit_deterministic: bool
    finitely_ambiguous: bool
    ldbw_partition: Optional[LdbwPartition]


@dataclass(frozen=True)
class AmbiguityWitness:
    """Evidence that an NBW is infinitely ambiguous.

    `loop_state` carries a `loop`-labelled cycle; the same word also crosses
    to `exit_state`, which carries a `loop`-labelled cycle through an
    accepting state.  The lasso stem . loop^w therefore has one accepting run
    per number of turns taken around `loop_state` before crossing over.
    """

    loop_state: int
    exit_state: int
    stem: tuple[str, ...]
    loop: tuple[str, ...]


def _useful_states(a: Nbw) -> frozenset[int]:
    """States that are reachable and can still contribute to an accepting run."""
    fwd = reachable(a.initials, lambda q: [t for sym in a.alphabet for t in a.succ(q, sym)])
    preds = {q: set() for q in a.states}
    for (q, sym), targets in a.transitions.items():
        for t in targets:
            preds[t].add(q)
    live = {f for f in a.accepting
            if f in reachable([t for sym in a.alphabet for t in a.succ(f, sym)],
                              lambda q: [t for sym in a.alphabet for t in a.succ(q, sym)])}
    back = reachable(live, lambda q: preds[q])
    return frozenset(fwd & back)


def _shortest_word(a: Nbw, sources: Iterable[int], target: int) -> tuple[str, ...]:
    """Letters of a shortest path from any source state to `target`."""
    parent = {q: None for q in sources}
    todo = deque(parent)
    while todo:
        q = todo.popleft()
        if q == target:
            letters = []
            while parent[q] is not None:
                p, sym = parent[q]
                letters.append(sym)
                q = p
            return tuple(reversed(letters))
        for sym in a.alphabet:
            for t in a.succ(q, sym):
                if t not in parent:
                    parent[t] = (q, sym)
                    todo.append(t)
    raise ValueError("target not reachable")


def infinite_ambiguity_witness(a: Nbw) -> Optional[AmbiguityWitness]:
    """Search for a pattern forcing infinitely many accepting runs on one word.

    The pattern is a pair of distinct useful states q != p and a nonempty word
    v with q in delta(q, v), p in delta(q, v) and p in delta(p, v) such that
    the p-cycle on v visits an accepting state.  Every word u.v^w with u
    leading to q then has an accepting run for each number of v-turns spent
    at q, so the automaton is infinitely ambiguous; conversely any word with
    infinitely many accepting runs exhibits such a recurring branch merge.
    All three v-paths of a genuine witness consist of useful states, so the
    search runs on the useful fragment only.
    """
    useful = _useful_states(a)
    if not useful:
        return None

    def inner(q):
        return [t for sym in a.alphabet for t in a.succ(q, sym) if t in useful]

    loop_candidates = cycle_nodes(useful, inner)
    f_cycle_nodes = set()
    for comp in sccs(useful, inner):
        comp_set = set(comp)
        cyclic = len(comp) > 1 or comp[0] in inner(comp[0])
        if cyclic and comp_set & a.accepting:
            f_cycle_nodes |= comp_set
    for q in sorted(loop_candidates):
        for p in sorted(f_cycle_nodes):
            if p == q:
                continue
            loop = _witness_loop(a, useful, q, p)
            if loop is not None:
                stem = _shortest_word(a, a.initials, q)
                return AmbiguityWitness(q, p, stem, loop)
    return None


def _witness_loop(a: Nbw, useful, q: int, p: int):
    """BFS for one word labelling paths q->q, q->p and an F-visiting p->p."""
    start = (q, q, p, False)
    goal = (q, p, p, True)
    parent = {start: None}
    todo = deque([start])
    while todo:
        node = todo.popleft()
        x, y, z, flag = node
        for sym in a.alphabet:
            for x2 in a.succ(x, sym):
                if x2 not in useful:
                    continue
                for y2 in a.succ(y, sym):
                    if y2 not in useful:
                        continue
                    for z2 in a.succ(z, sym):
                        if z2 not in useful:
                            continue
                        nxt = (x2, y2, z2, flag or z2 in a.accepting)
                        if nxt in parent:
                            continue
                        parent[nxt] = (node, sym)
                        if nxt == goal:
                            letters = []
                            cur = nxt
                            while parent[cur] is not None:
                                cur, letter = parent[cur]
                                letters.append(letter)
                            return tuple(reversed(letters))
                        todo.append(nxt)
    return None


def classify(a: Nbw) -> ClassificationReport:
    """Flags per the transition-structure and accepting-run taxonomies."""
    deterministic = (len(a.initials) == 1 and
                     all(len(a.succ(q, sym)) == 1 for q in a.states for sym in a.alphabet))
    pred_count = {(q, sym): 0 for q in a.states for sym in a.alphabet}
    for (q, sym), targets in a.transitions.items():
        for t in targets:
            pred_count[(t, sym)] += 1
    reverse_deterministic = all(c <= 1 for c in pred_count.values())
    try:
        partition = ldbw_partition(a)
    except NotLimitDeterministic:
        partition = None
    finitely_ambiguous = infinite_ambiguity_witness(a) is None
    return ClassificationReport(
        complete=a.is_complete,
        deterministic=deterministic,
        reverse_deterministic=reverse_deterministic,
        limit_deterministic=partition is not None,
        finitely_ambiguous=finitely_ambiguous,
        ldbw_partition=partition,
    )
