"""Line-oriented automaton document format.

    # comment
    states: N
    alphabet: a b ...
    initial: i j ...
    accepting: i j ...
    SRC SYM DST

States are nonnegative integers below N, symbols single tokens.  Parsed
automata are completed by default; `write` emits a canonical ordering so
that parse(write(a)) == a for complete automata with the default state order.
"""

from __future__ import annotations

import warnings

from .core import Nbw, complete as complete_nbw, make_nbw
from .errors import DuplicateTransitionWarning, ParseError, UndeclaredState

_HEADERS = ("states", "alphabet", "initial", "accepting")


def parse(text: str, auto_complete: bool = True) -> Nbw:
    """Parse a document; raises ParseError / UndeclaredState on malformed input."""
    headers = {}
    triples = []
    seen_triples = set()
    n = None
    alphabet = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, rest = line.partition(":")
            key = key.strip()
            if key not in _HEADERS:
                raise ParseError(f"unknown header {key!r}", lineno)
            if key in headers:
                raise ParseError(f"duplicate header {key!r}", lineno)
            headers[key] = (rest.split(), lineno)
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError("transition lines need exactly SRC SYM DST", lineno)
        triples.append((tokens, lineno))

    if "states" not in headers:
        raise ParseError("missing 'states:' header")
    tokens, lineno = headers["states"]
    if len(tokens) != 1 or not tokens[0].isdigit():
        raise ParseError("'states:' needs a single count", lineno)
    n = int(tokens[0])
    if n < 1:
        raise ParseError("state count must be positive", lineno)
    if "alphabet" not in headers:
        raise ParseError("missing 'alphabet:' header")
    alphabet, lineno = headers["alphabet"]
    if not alphabet:
        raise ParseError("alphabet must be nonempty", lineno)

    def state_list(key, required):
        if key not in headers:
            if required:
                raise ParseError(f"missing '{key}:' header")
            return []
        tokens, lineno = headers[key]
        out = []
        for tok in tokens:
            if not tok.isdigit():
                raise ParseError(f"bad state {tok!r} in '{key}:'", lineno)
            q = int(tok)
            if q >= n:
                raise UndeclaredState(f"state {q} not below the declared count {n}", lineno)
            out.append(q)
        return out

    initials = state_list("initial", required=True)
    accepting = state_list("accepting", required=False)

    table = []
    for (src, sym, dst), lineno in triples:
        if not src.isdigit():
            raise ParseError(f"bad source state {src!r}", lineno, column=1)
        if sym not in alphabet:
            raise ParseError(f"symbol {sym!r} not in the alphabet", lineno, column=2)
        if not dst.isdigit():
            raise ParseError(f"bad target state {dst!r}", lineno, column=3)
        src_q, dst_q = int(src), int(dst)
        if src_q >= n:
            raise UndeclaredState(f"state {src_q} not below the declared count {n}", lineno)
        if dst_q >= n:
            raise UndeclaredState(f"state {dst_q} not below the declared count {n}", lineno)
        if (src_q, sym, dst_q) in seen_triples:
            warnings.warn(DuplicateTransitionWarning(
                f"line {lineno}: duplicate transition {src_q} {sym} {dst_q} merged"))
        seen_triples.add((src_q, sym, dst_q))
        table.append((src_q, sym, dst_q))

    try:
        a = make_nbw(n, alphabet, initials, table, accepting)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return complete_nbw(a) if auto_complete else a


def write(a: Nbw) -> str:
    """Canonical document text: states ascending, symbols lexicographic."""
    lines = [
        f"states: {a.n}",
        "alphabet: " + " ".join(a.alphabet),
        "initial: " + " ".join(str(q) for q in sorted(a.initials)),
        "accepting: " + " ".join(str(q) for q in sorted(a.accepting)),
    ]
    for q in a.states:
        for sym in a.alphabet:
            for t in sorted(a.succ(q, sym)):
                lines.append(f"{q} {sym} {t}")
    return "\n".join(lines) + "\n"
