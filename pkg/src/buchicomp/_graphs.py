"""Small graph helpers (reachability, Tarjan SCC, cycle membership) used internally."""

from collections import deque


def reachable(seeds, succs):
    """Forward closure of `seeds` under the successor function `succs`."""
    seen = set(seeds)
    todo = deque(seen)
    while todo:
        x = todo.popleft()
        for y in succs(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def sccs(nodes, succs):
    """Strongly connected components of the induced subgraph, iterative Tarjan."""
    nodes = list(nodes)
    node_set = set(nodes)
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter([y for y in succs(root) if y in node_set]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            x, it = work[-1]
            advanced = False
            for y in it:
                if y not in index:
                    index[y] = low[y] = counter[0]
                    counter[0] += 1
                    stack.append(y)
                    on_stack.add(y)
                    work.append((y, iter([z for z in succs(y) if z in node_set])))
                    advanced = True
                    break
                if y in on_stack:
                    low[x] = min(low[x], index[y])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[x])
            if low[x] == index[x]:
                comp = []
                while True:
                    y = stack.pop()
                    on_stack.discard(y)
                    comp.append(y)
                    if y == x:
                        break
                comps.append(comp)
    return comps


def cycle_nodes(nodes, succs):
    """Nodes lying on some cycle: members of a multi-node SCC or with a self-loop."""
    out = set()
    for comp in sccs(nodes, succs):
        if len(comp) > 1:
            out.update(comp)
        else:
            x = comp[0]
            if x in succs(x):
                out.add(x)
    return out
