"""Graphviz DOT rendering for automata and run DAGs."""

from __future__ import annotations

from .core import Nbw
from .ldbwcomp import LdbwDag
from .rundag import LassoDag


def _label(value):
    return str(value).replace('"', r"\"")


def nbw_to_dot(a: Nbw, name: str = "nbw") -> str:
    lines = [f'digraph "{_label(name)}" {{', "  rankdir=LR;"]
    for q in a.states:
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f'  q{q} [shape={shape} label="q{q}"];')
        if q in a.initials:
            lines.append(f"  init{q} [shape=point];")
            lines.append(f"  init{q} -> q{q};")
    for q in a.states:
        for sym in a.alphabet:
            for t in sorted(a.succ(q, sym)):
                lines.append(f'  q{q} -> q{t} [label="{_label(sym)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lasso_dag_to_dot(d: LassoDag, baseline: LassoDag | None = None,
                     name: str = "rundag") -> str:
    """One rank cluster per level; with a full-mode `baseline`, edges removed
    by reduction are drawn dashed."""
    lines = [f'digraph "{_label(name)}" {{', "  rankdir=LR;"]
    for lvl, states in enumerate(d.levels):
        lines.append(f"  subgraph cluster_level{lvl} {{")
        lines.append(f'    label="level {lvl}"; rank=same;')
        for q in states:
            shape = "doublecircle" if q in d.accepting_states else "circle"
            lines.append(f'    v{lvl}_{q} [shape={shape} label="q{q}"];')
        lines.append("  }")

    def edge(src_lvl, src, dst_lvl, dst, dashed):
        suffix = " [style=dashed]" if dashed else ""
        lines.append(f"  v{src_lvl}_{src} -> v{dst_lvl}_{dst}{suffix};")

    kept = set()
    for lvl in range(1, d.level_count):
        for q, preds in d.preds[lvl].items():
            for p in preds:
                kept.add((lvl - 1, p, lvl, q))
    for src_lvl, p, dst_lvl, q in sorted(kept):
        edge(src_lvl, p, dst_lvl, q, dashed=False)
    if baseline is not None:
        removed = set()
        upto = min(d.level_count, baseline.level_count)
        for lvl in range(1, upto):
            for q, preds in baseline.preds[lvl].items():
                for p in preds:
                    if (lvl - 1, p, lvl, q) not in kept:
                        removed.add((lvl - 1, p, lvl, q))
        for src_lvl, p, dst_lvl, q in sorted(removed):
            edge(src_lvl, p, dst_lvl, q, dashed=True)
    lines.append("}")
    return "\n".join(lines) + "\n"


def ldbw_dag_to_dot(d: LdbwDag, name: str = "ldbwdag") -> str:
    """Priorities are part of the vertex labels; the set vertex is boxed."""
    lines = [f'digraph "{_label(name)}" {{', "  rankdir=LR;"]
    for lvl, (dverts, nvert) in enumerate(d.levels):
        lines.append(f"  subgraph cluster_level{lvl} {{")
        lines.append(f'    label="level {lvl}"; rank=same;')
        for q, prio in dverts:
            shape = "doublecircle" if q in d.accepting_states else "circle"
            lines.append(f'    v{lvl}_d{q} [shape={shape} label="q{q} : {prio}"];')
        if nvert is not None:
            states, prio = nvert
            label = "{" + ",".join(f"q{q}" for q in sorted(states)) + "}" + f" : {prio}"
            lines.append(f'    v{lvl}_n [shape=box label="{_label(label)}"];')
        lines.append("  }")
    for lvl in range(1, d.level_count):
        for q, pred in sorted(d.d_preds[lvl].items()):
            src = f"v{lvl - 1}_d{pred}" if pred is not None else f"v{lvl - 1}_n"
            lines.append(f"  {src} -> v{lvl}_d{q};")
        if d.levels[lvl][1] is not None:
            lines.append(f"  v{lvl - 1}_n -> v{lvl}_n;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj, baseline=None, name=None) -> str:
    """Dispatching renderer for Nbw, LassoDag and LdbwDag values."""
    if isinstance(obj, Nbw):
        return nbw_to_dot(obj, name or "nbw")
    if isinstance(obj, LassoDag):
        return lasso_dag_to_dot(obj, baseline, name or "rundag")
    if isinstance(obj, LdbwDag):
        return ldbw_dag_to_dot(obj, name or "ldbwdag")
    raise TypeError(f"cannot render {type(obj).__name__}")
