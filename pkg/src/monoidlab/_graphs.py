"""Small graph routines shared by the automaton and overflow-graph analyses."""

from __future__ import annotations

from typing import Callable, Hashable, Optional, Sequence


def strongly_connected(graph: dict) -> list[set]:
    """Tarjan's algorithm, iterative; ``graph[v]`` lists successors."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list[set] = []
    counter = 0
    for root in graph:
        if root in index:
            continue
        work = [(root, iter(graph[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                out.append(comp)
    return out


class _Ambiguous(Exception):
    pass


def single_cycle(edges: dict, start: Hashable,
                 is_end: Callable[[Hashable], bool]) -> Optional[tuple[list, list, list]]:
    """Decompose the path set of a labelled graph as ``prefix cycle* suffix``.

    ``edges[q]`` lists ``(label, target)`` pairs.  Paths leave ``start`` and
    stop at the first node with ``is_end`` true.  Succeeds when exactly one
    simple cycle exists, every path crosses it, it is entered along a unique
    path at a unique node and left along a unique path.  Returns label lists
    ``(prefix, cycle, suffix)`` with the cycle read from its entry node, so the
    paths are exactly ``prefix + cycle*i + suffix``.
    """
    inner = {q: ([] if (is_end(q) and q != start) else list(edges[q])) for q in edges}
    # reaching an end terminates a path, so edges into ends never close a cycle
    succ = {q: [r for _, r in inner[q] if not is_end(r)] for q in inner}
    cyclic = [c for c in strongly_connected(succ)
              if len(c) > 1 or any(r in c for r in succ[next(iter(c))])]
    if len(cyclic) != 1:
        return None
    cyc = cyclic[0]
    for q in cyc:
        if is_end(q) and q != start:
            return None
        if sum(1 for r in succ[q] if r in cyc) != 1:
            return None

    try:
        if start in cyc:
            prefix, entry = [], start
        else:
            (prefix, entry), = _paths_into(inner, start, cyc, is_end, start)
        cycle, exits = [], []
        q = entry
        for _ in range(len(cyc)):
            nxt = None
            for lab, r in inner[q]:
                if r in cyc:
                    nxt = (lab, r)
                else:
                    exits.append((list(cycle), lab, r))
            cycle.append(nxt[0])
            q = nxt[1]
        if len(exits) != 1:
            return None
        seg, lab, r = exits[0]
        (tail,) = _paths_out(inner, r, cyc, is_end, start)
    except (_Ambiguous, ValueError):
        return None
    return prefix, cycle, seg + [lab] + tail


def _paths_into(inner, q, cyc, is_end, start, path=None, found=None):
    path = [] if path is None else path
    found = [] if found is None else found
    for lab, r in inner[q]:
        if r in cyc:
            found.append((path + [lab], r))
        elif is_end(r):
            raise _Ambiguous  # a path that never meets the cycle
        else:
            _paths_into(inner, r, cyc, is_end, start, path + [lab], found)
        if len(found) > 1:
            raise _Ambiguous
    return found


def _paths_out(inner, q, cyc, is_end, start, path=None, found=None):
    path = [] if path is None else path
    found = [] if found is None else found
    if is_end(q):
        found.append(path)
        return found
    for lab, r in inner[q]:
        if r in cyc:
            raise _Ambiguous  # re-enters the cycle: several families
        _paths_out(inner, r, cyc, is_end, start, path + [lab], found)
        if len(found) > 1:
            raise _Ambiguous
    return found
