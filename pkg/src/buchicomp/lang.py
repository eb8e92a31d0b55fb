"""Language-level queries: lasso membership, emptiness, intersection,
containment via complementation, oracle harness, random instances."""

from __future__ import annotations

import functools
import random
import string
from collections import deque
from dataclasses import dataclass
from typing import Optional

from ._graphs import cycle_nodes, reachable, sccs
from .core import Nbw, classify, complete, ldbw_partition, make_nbw
from .errors import AlphabetMismatch, IncompatibleAlgorithm, ShapeUnsatisfiable
from .ldbwcomp import nsbc_complement
from .rankcomp import rkc_complement
from .slicecomp import disambiguate, slc_complement_fa
from .words import LassoWord, enumerate_lassos

ALGORITHMS = ("auto", "rkc", "rkc-fa", "slc-fa", "nsbc", "disambiguate+slc-fa")


def member(a: Nbw, w: LassoWord) -> bool:
    """Does `a` accept stem.loop^w?  Cycle search on the states x loop-positions product."""
    for sym in w.stem + w.loop:
        if sym not in a.alphabet:
            raise ValueError(f"symbol {sym!r} not in the alphabet")
    cur = frozenset(a.initials)
    for sym in w.stem:
        cur = a.post(cur, sym)
    loop_len = len(w.loop)

    def succs(node):
        q, i = node
        sym = w.loop[i]
        nxt = (i + 1) % loop_len
        return [(t, nxt) for t in a.succ(q, sym)]

    reach = reachable([(q, 0) for q in cur], succs)
    for comp in sccs(reach, succs):
        cyclic = len(comp) > 1 or comp[0] in succs(comp[0])
        if cyclic and any(q in a.accepting for q, _ in comp):
            return True
    return False


def member_naive(a: Nbw, w: LassoWord) -> bool:
    """Independent oracle: enumerate the run tree until a product node repeats.

    A branch accepts as soon as it revisits a (state, loop-phase) pair with an
    accepting state strictly inside the closed segment; branches are cut at
    the first repetition, so every explored run has length at most
    |stem| + n * |loop| + 1.
    """
    stem_len = len(w.stem)
    loop_len = len(w.loop)

    def node(state, i):
        return (state, i if i < stem_len else stem_len + (i - stem_len) % loop_len)

    def dfs(state, i, path, states_seq):
        nd = node(state, i)
        if nd in path:
            j = path[nd]
            return any(s in a.accepting for s in states_seq[j + 1:]) or state in a.accepting
        path[nd] = len(states_seq)
        states_seq.append(state)
        for t in sorted(a.succ(state, w.letter(i))):
            if dfs(t, i + 1, path, states_seq):
                return True
        del path[nd]
        states_seq.pop()
        return False

    return any(dfs(q, 0, {}, []) for q in sorted(a.initials))


def count_accepting_runs(a: Nbw, w: LassoWord, limit: int) -> int:
    """min(limit, number of distinct accepting runs of `a` over `w`).

    Counts distinct run prefixes, at a depth by which `limit` many accepting
    runs must already have branched apart, that end in a product node from
    which an accepting continuation exists.
    """
    stem_len = len(w.stem)
    loop_len = len(w.loop)

    def succs(node):
        q, i = node
        return [(t, (i + 1) % loop_len) for t in a.succ(q, w.loop[i])]

    nodes = [(q, i) for q in a.states for i in range(loop_len)]
    extendable = set()
    for comp in sccs(nodes, succs):
        cyclic = len(comp) > 1 or comp[0] in succs(comp[0])
        if cyclic and any(q in a.accepting for q, _ in comp):
            extendable.update(comp)
    rsuccs = {v: [] for v in nodes}
    for v in nodes:
        for t in succs(v):
            rsuccs[t].append(v)
    extendable = reachable(extendable, lambda v: rsuccs[v])

    horizon = stem_len + loop_len * (a.n * loop_len + limit + 2)
    counts = {q: 1 for q in a.initials}
    for i in range(horizon):
        nxt = {}
        sym = w.letter(i)
        for q, c in counts.items():
            for t in a.succ(q, sym):
                nxt[t] = min(limit, nxt.get(t, 0) + c)
        counts = nxt
    phase = (horizon - stem_len) % loop_len
    total = sum(c for q, c in counts.items() if (q, phase) in extendable)
    return min(limit, total)


def is_empty(a: Nbw) -> Optional[LassoWord]:
    """None when the language is empty, otherwise a witness lasso word.

    A witness exists exactly when some reachable cycle contains an accepting
    state; it is assembled from a shortest stem to such a state and a
    shortest cycle through it.
    """
    def succs(q):
        return [t for sym in a.alphabet for t in a.succ(q, sym)]

    reach = reachable(a.initials, succs)
    candidates = {q for q in cycle_nodes(reach, succs) if q in a.accepting}
    if not candidates:
        return None
    stem, f = _bfs_into(a, a.initials, candidates)
    loop = _shortest_cycle_word(a, f)
    return LassoWord(stem, loop)


def _bfs_into(a: Nbw, sources, targets):
    """(letters, endpoint) of a shortest path from `sources` into `targets`."""
    parent = dict.fromkeys(sorted(sources))
    todo = deque(parent)
    while todo:
        q = todo.popleft()
        if q in targets:
            letters = []
            cur = q
            while parent[cur] is not None:
                cur, sym = parent[cur]
                letters.append(sym)
            return tuple(reversed(letters)), q
        for sym in sorted(a.alphabet):
            for t in sorted(a.succ(q, sym)):
                if t not in parent:
                    parent[t] = (q, sym)
                    todo.append(t)
    raise AssertionError("targets unreachable")


def _shortest_cycle_word(a: Nbw, f: int):
    """Letters of a shortest nonempty cycle through `f`."""
    parent = {}
    todo = deque()
    for sym in sorted(a.alphabet):
        for t in sorted(a.succ(f, sym)):
            if t not in parent:
                parent[t] = (None, sym)
                todo.append(t)
    while todo:
        q = todo.popleft()
        if q == f:
            letters = []
            cur = q
            while True:
                prev, sym = parent[cur]
                letters.append(sym)
                if prev is None:
                    return tuple(reversed(letters))
                cur = prev
        for sym in sorted(a.alphabet):
            for t in sorted(a.succ(q, sym)):
                if t not in parent:
                    parent[t] = (q, sym)
                    todo.append(t)
    raise AssertionError("no cycle through the chosen state")


def intersect(a: Nbw, b: Nbw) -> Nbw:
    """Two-copy Buchi product accepting the intersection language."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    index = {}
    states = []
    transitions = []
    todo = deque()
    for p in sorted(a.initials):
        for q in sorted(b.initials):
            st = (p, q, 0)
            if st not in index:
                index[st] = len(states)
                states.append(st)
                todo.append(st)
    while todo:
        st = todo.popleft()
        p, q, copy = st
        if copy == 0:
            copy2 = 1 if p in a.accepting else 0
        else:
            copy2 = 0 if q in b.accepting else 1
        for sym in a.alphabet:
            for p2 in sorted(a.succ(p, sym)):
                for q2 in sorted(b.succ(q, sym)):
                    st2 = (p2, q2, copy2)
                    if st2 not in index:
                        index[st2] = len(states)
                        states.append(st2)
                        todo.append(st2)
                    transitions.append((index[st], sym, index[st2]))
    accepting = [i for i, (p, q, copy) in enumerate(states)
                 if copy == 1 and q in b.accepting]
    initials = [index[(p, q, 0)] for p in sorted(a.initials) for q in sorted(b.initials)]
    return make_nbw(len(states), a.alphabet, initials, transitions, accepting)


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    counterexample: Optional[LassoWord]
    lassos_tested: int
    counterexample_in_left: Optional[bool] = None
    counterexample_in_right: Optional[bool] = None


def build_complement(a: Nbw, algo: str = "auto") -> Nbw:
    """Dispatch to a complementation construction; `auto` prefers the smallest bound."""
    if algo not in ALGORITHMS:
        raise IncompatibleAlgorithm(f"unknown algorithm {algo!r}")
    report = classify(a)
    if algo == "auto":
        if report.limit_deterministic:
            algo = "nsbc"
        elif report.finitely_ambiguous:
            algo = "slc-fa"
        else:
            algo = "disambiguate+slc-fa"
    if algo == "rkc":
        return rkc_complement(a, "general")
    if algo == "rkc-fa":
        if not report.finitely_ambiguous:
            raise IncompatibleAlgorithm("rkc-fa needs a finitely ambiguous automaton")
        return rkc_complement(a, "fa")
    if algo == "slc-fa":
        if not report.finitely_ambiguous:
            raise IncompatibleAlgorithm("slc-fa needs a finitely ambiguous automaton")
        return slc_complement_fa(a)
    if algo == "nsbc":
        if not report.limit_deterministic:
            raise IncompatibleAlgorithm("nsbc needs a limit-deterministic automaton")
        return nsbc_complement(a, report.ldbw_partition)
    return slc_complement_fa(disambiguate(a))


def contains(a: Nbw, b: Nbw, algo: str = "auto") -> CheckReport:
    """Is L(a) a subset of L(b)?  Checks emptiness of a intersected with b's complement."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    comp = build_complement(b, algo)
    witness = is_empty(intersect(a, comp))
    if witness is None:
        return CheckReport(True, None, 0)
    return CheckReport(False, witness, 0, member(a, witness), member(b, witness))


@functools.lru_cache(maxsize=64)
def _lassos(alphabet: tuple, max_stem: int, max_loop: int):
    return tuple(enumerate_lassos(alphabet, max_stem, max_loop))


def complement_check(a: Nbw, c: Nbw, max_stem: int, max_loop: int) -> CheckReport:
    """Oracle: on every lasso within the bounds, membership in `a` XOR in `c`."""
    if a.alphabet != c.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {c.alphabet}")
    words = _lassos(a.alphabet, max_stem, max_loop)
    for w in words:
        in_a = member(a, w)
        in_c = member(c, w)
        if in_a == in_c:
            return CheckReport(False, w, len(words), in_a, in_c)
    return CheckReport(True, None, len(words))


def random_nbw(n: int, alphabet_size: int, density: float, acc_fraction: float,
               seed: int, shape: str = "any") -> Nbw:
    """Seeded random complete NBW; `shape` forces the ldbw or fanbw class."""
    if n < 1 or not 0 < density <= 1 or not 0 <= acc_fraction <= 1:
        raise ValueError("bad generator parameters")
    if shape not in ("any", "ldbw", "fanbw"):
        raise ValueError(f"unknown shape {shape!r}")
    if shape == "fanbw":
        rng = random.Random(("fanbw", seed))
        for _ in range(200):
            candidate = random_nbw(n, alphabet_size, density, acc_fraction,
                                   rng.randrange(2 ** 32), "any")
            if classify(candidate).finitely_ambiguous:
                return candidate
        raise ShapeUnsatisfiable("no finitely ambiguous automaton found within budget")

    rng = random.Random((shape, seed, n, alphabet_size))
    alphabet = string.ascii_lowercase[:alphabet_size]
    f_count = round(acc_fraction * n)
    table = {}
    if shape == "ldbw":
        det_count = rng.randint(max(f_count, 1 if f_count else 0), n)
        q_d = list(range(n - det_count, n))
        accepting = rng.sample(q_d, f_count) if f_count else []
        for q in range(n):
            for sym in alphabet:
                if q in q_d:
                    table[(q, sym)] = {rng.choice(q_d)}
                else:
                    targets = {t for t in range(n) if rng.random() < density}
                    targets.add(rng.randrange(n))
                    table[(q, sym)] = targets
    else:
        accepting = rng.sample(range(n), f_count) if f_count else []
        for q in range(n):
            for sym in alphabet:
                targets = {t for t in range(n) if rng.random() < density}
                targets.add(rng.randrange(n))
                table[(q, sym)] = targets
    initials = {rng.randrange(n)}
    return complete(make_nbw(n, alphabet, initials, table, accepting))
