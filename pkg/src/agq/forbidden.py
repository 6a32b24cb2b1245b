"""Forbidden paths: the relation digraph on arrows and sup-length queries.

A forbidden path is an arrow sequence whose every consecutive composition
lies in the ideal, i.e. exactly a walk in the digraph with an edge a -> b for
every relation pair ab.  All dimension queries reduce to longest paths in
that digraph after condensing strongly connected components; witnesses are
either finite paths or stem+cycle lassos.

Lengths count arrows, the digraph counts edges, so a sup over paths from an
arrow is 1 + the longest edge-path from its node.  sup over the empty set is
Finite(0) throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .quiver import AlmostGentlePair, UnknownArrowError, nonzero_successor
from .strings import DirectedString, string_source


@total_ordering
@dataclass(frozen=True)
class LengthOrInf:
    """A value in N united with infinity, ordered with Infinite on top."""

    value: int | None  # None encodes infinity

    @classmethod
    def finite(cls, n: int) -> "LengthOrInf":
        if n < 0:
            raise ValueError("lengths are nonnegative")
        return cls(n)

    @classmethod
    def infinite(cls) -> "LengthOrInf":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def plus(self, n: int) -> "LengthOrInf":
        return self if self.value is None else LengthOrInf(self.value + n)

    def __lt__(self, other: "LengthOrInf") -> bool:
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)


ZERO = LengthOrInf.finite(0)
INF = LengthOrInf.infinite()


@dataclass(frozen=True)
class ForbiddenWalk:
    """A finite forbidden path, or a lasso encoding stem . cycle^omega."""

    stem: tuple[str, ...]
    cycle: tuple[str, ...] = ()

    @property
    def is_lasso(self) -> bool:
        return bool(self.cycle)

    def length(self) -> LengthOrInf:
        return INF if self.cycle else LengthOrInf.finite(len(self.stem))

    def verify(self, pair: AlmostGentlePair) -> bool:
        """Every consecutive pair (stem, junction, and cycle wrap) is a relation."""
        seq = self.stem + self.cycle
        for x, y in zip(seq, seq[1:]):
            if (x, y) not in pair.relations:
                return False
        if self.cycle and (self.cycle[-1], self.cycle[0]) not in pair.relations:
            return False
        if self.cycle and self.stem and (self.stem[-1], self.cycle[0]) not in pair.relations:
            return False
        return True


@dataclass(frozen=True)
class RelationDigraph:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def successors(self, a: str) -> tuple[str, ...]:
        return tuple(b for x, b in self.edges if x == a)


def relation_digraph(pair: AlmostGentlePair) -> RelationDigraph:
    """Nodes are the arrows, edges the relation pairs; deterministic order."""
    pair.require_valid()
    idx = pair.quiver.arrow_index
    edges = sorted(pair.relations, key=lambda e: (idx[e[0]], idx[e[1]]))
    return RelationDigraph(tuple(a.name for a in pair.quiver.arrows), tuple(edges))


class _DigraphData:
    """Longest-path data over the relation digraph, shared per pair."""

    def __init__(self, pair: AlmostGentlePair):
        self.pair = pair
        self.idx = pair.quiver.arrow_index
        self.succ: dict[str, list[str]] = {a.name: [] for a in pair.quiver.arrows}
        for a, b in pair.relations:
            self.succ[a].append(b)
        for a in self.succ:
            self.succ[a].sort(key=lambda b: self.idx[b])
        self.scc = self._tarjan()
        sizes: dict[int, int] = {}
        for node, comp in self.scc.items():
            sizes[comp] = sizes.get(comp, 0) + 1
        self.cyclic_node = {
            node for node, comp in self.scc.items()
            if sizes[comp] > 1 or node in self.succ[node]
        }
        self.reaches_cycle = self._reachability()
        self._best: dict[str, tuple[int, tuple[str, ...]]] = {}

    def _tarjan(self) -> dict[str, int]:
        index: dict[str, int] = {}
        low: dict[str, int] = {}
        comp: dict[str, int] = {}
        stack: list[str] = []
        on_stack: set[str] = set()
        counter = [0]
        ncomp = [0]

        def strongconnect(root: str) -> None:
            work = [(root, 0)]
            while work:
                node, pi = work[-1]
                if pi == 0:
                    index[node] = low[node] = counter[0]
                    counter[0] += 1
                    stack.append(node)
                    on_stack.add(node)
                recurse = False
                children = self.succ[node]
                for i in range(pi, len(children)):
                    ch = children[i]
                    if ch not in index:
                        work[-1] = (node, i + 1)
                        work.append((ch, 0))
                        recurse = True
                        break
                    if ch in on_stack:
                        low[node] = min(low[node], index[ch])
                if recurse:
                    continue
                if low[node] == index[node]:
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp[w] = ncomp[0]
                        if w == node:
                            break
                    ncomp[0] += 1
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])

        for node in self.succ:
            if node not in index:
                strongconnect(node)
        return comp

    def _reachability(self) -> set[str]:
        reaches = set(self.cyclic_node)
        changed = True
        while changed:
            changed = False
            for node, children in self.succ.items():
                if node not in reaches and any(c in reaches for c in children):
                    reaches.add(node)
                    changed = True
        return reaches

    def longest_from(self, a: str) -> tuple[int, tuple[str, ...]]:
        """(edge count, witness node path) of the longest walk from a finite node.

        Ties break to the lexicographically least witness by arrow
        declaration order.
        """
        if a in self._best:
            return self._best[a]
        order: list[str] = []
        seen: set[str] = set()
        stack: list[tuple[str, bool]] = [(a, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            if node in seen:
                continue
            seen.add(node)
            stack.append((node, True))
            for ch in reversed(self.succ[node]):
                if ch not in seen and ch not in self._best:
                    stack.append((ch, False))
        for node in order:
            best: tuple[int, tuple[str, ...]] = (0, (node,))
            for ch in self.succ[node]:
                n, path = self._best[ch]
                cand = (n + 1, (node,) + path)
                if cand[0] > best[0] or (cand[0] == best[0] and self._key(cand[1]) < self._key(best[1])):
                    best = cand
            self._best[node] = best
        return self._best[a]

    def _key(self, path: tuple[str, ...]) -> tuple[int, ...]:
        return tuple(self.idx[x] for x in path)

    def lasso_from(self, a: str) -> ForbiddenWalk:
        """Deterministic stem + cycle witnessing an infinite walk from a.

        Walks cycle-reaching successors until the first repeat; the repeat
        point splits the walk into a stem and the looped cycle, so the
        junction and wraparound compositions are real digraph edges.
        """
        path = [a]
        pos = {a: 0}
        node = a
        while True:
            node = next(c for c in self.succ[node] if c in self.reaches_cycle)
            if node in pos:
                return ForbiddenWalk(tuple(path[:pos[node]]), tuple(path[pos[node]:]))
            pos[node] = len(path)
            path.append(node)


_DATA_CACHE: dict[int, _DigraphData] = {}


def digraph_data(pair: AlmostGentlePair) -> _DigraphData:
    key = id(pair)
    data = _DATA_CACHE.get(key)
    if data is None or data.pair is not pair:
        data = _DigraphData(pair)
        _DATA_CACHE[key] = data
        if len(_DATA_CACHE) > 64:
            _DATA_CACHE.pop(next(iter(_DATA_CACHE)))
    return data


def sup_forbidden_from_arrow(pair: AlmostGentlePair, a: str) -> tuple[LengthOrInf, ForbiddenWalk]:
    """Sup of lengths of forbidden paths starting with arrow a, with witness.

    Always at least Finite(1): a single arrow is vacuously forbidden.
    """
    pair.require_valid()
    if a not in pair.quiver.arrow_index:
        raise UnknownArrowError(a)
    data = digraph_data(pair)
    if a in data.reaches_cycle:
        return INF, data.lasso_from(a)
    n, path = data.longest_from(a)
    return LengthOrInf.finite(n + 1), ForbiddenWalk(path)


def sup_forbidden_from_vertex(pair: AlmostGentlePair, v: str) -> tuple[LengthOrInf, ForbiddenWalk | None]:
    """Sup over all forbidden paths starting at v; Finite(0) for sinks."""
    pair.require_vertex(v)
    pair.require_valid()
    best: tuple[LengthOrInf, ForbiddenWalk | None] = (ZERO, None)
    for arr in pair.out_arrows(v):
        best = better_witnessed(pair, best, sup_forbidden_from_arrow(pair, arr.name))
    return best


def _witness_key(pair: AlmostGentlePair, w: ForbiddenWalk | None) -> tuple:
    if w is None:
        return (1,)
    idx = pair.quiver.arrow_index
    return (0, tuple(idx[x] for x in w.stem + w.cycle))


def better_witnessed(pair: AlmostGentlePair,
            cur: tuple[LengthOrInf, ForbiddenWalk | None],
            cand: tuple[LengthOrInf, ForbiddenWalk | None]) -> tuple[LengthOrInf, ForbiddenWalk | None]:
    if cand[0] > cur[0]:
        return cand
    if cand[0] == cur[0] and _witness_key(pair, cand[1]) < _witness_key(pair, cur[1]):
        return cand
    return cur


def zero_length_forbidden(pair: AlmostGentlePair, v: str) -> bool:
    """Whether the stationary path at v counts as a forbidden path.

    True for a relation through the unique in/out arrow pair, for a source
    with a single out-arrow, and for a sink with a single in-arrow.  These
    never affect any dimension (their length is zero).
    """
    pair.require_valid()
    ins, outs = pair.in_arrows(v), pair.out_arrows(v)
    if len(ins) == 1 and len(outs) == 1:
        if (ins[0].name, outs[0].name) in pair.relations:
            return True
    if not ins and len(outs) == 1:
        return True
    if not outs and len(ins) == 1:
        return True
    return False


def is_down_relational(pair: AlmostGentlePair, alpha: str) -> bool:
    """Whether t(alpha) carries some beta with alpha.beta in the ideal."""
    pair.require_valid()
    arr = pair.arrow(alpha)
    return any((alpha, b.name) in pair.relations for b in pair.out_arrows(arr.target))


def is_up_relational(pair: AlmostGentlePair, alpha: str) -> bool:
    pair.require_valid()
    arr = pair.arrow(alpha)
    return any((b.name, alpha) in pair.relations for b in pair.in_arrows(arr.source))


def is_relational_vertex(pair: AlmostGentlePair, v: str) -> bool:
    pair.require_valid()
    return any((a.name, b.name) in pair.relations
               for a in pair.in_arrows(v) for b in pair.out_arrows(v))


def delta_start_arrows(pair: AlmostGentlePair, delta: DirectedString) -> list[str]:
    """First arrows of the forbidden paths counted against the string delta.

    Continuations past the sink (the nonzero successor of the last arrow)
    plus every arrow at the source other than the first arrow of delta.
    """
    if not delta.arrows:
        return [a.name for a in pair.out_arrows(delta.path.vertex)]  # type: ignore[arg-type]
    starts: list[str] = []
    nxt = nonzero_successor(pair, delta.arrows[-1])
    if nxt is not None:
        starts.append(nxt)
    src = string_source(pair, delta)
    starts.extend(a.name for a in pair.out_arrows(src) if a.name != delta.arrows[0])
    return starts


def delta_forbidden_sup(pair: AlmostGentlePair, delta: DirectedString) -> tuple[LengthOrInf, ForbiddenWalk | None]:
    """Sup over the forbidden paths counted against delta; Finite(0) if none.

    For a length-zero string this is the plain from-vertex sup at the anchor.
    """
    pair.require_valid()
    best: tuple[LengthOrInf, ForbiddenWalk | None] = (ZERO, None)
    for a in delta_start_arrows(pair, delta):
        best = better_witnessed(pair, best, sup_forbidden_from_arrow(pair, a))
    return best


def forbidden_cycles(pair: AlmostGentlePair, cap: int = 10_000) -> tuple[list[tuple[str, ...]], bool]:
    """Elementary cycles of the relation digraph in canonical rotation.

    Returns (cycles, truncated).  Above the cap, enumeration stops, the
    truncated flag is set, and one representative cycle per nontrivial
    strongly connected component is kept.  Empty iff the digraph is acyclic.
    """
    pair.require_valid()
    data = digraph_data(pair)
    idx = pair.quiver.arrow_index
    nodes = sorted(data.succ, key=lambda a: idx[a])
    cycles: list[tuple[str, ...]] = []
    truncated = False

    # Johnson-style enumeration restricted to one root at a time: find all
    # elementary cycles whose least node (by declaration) is the root.
    for root in nodes:
        if root not in data.cyclic_node:
            continue
        if truncated:
            break
        stack = [(root, iter(sorted(data.succ[root], key=lambda x: idx[x])))]
        path = [root]
        onpath = {root}
        while stack:
            node, it = stack[-1]
            advanced = False
            for ch in it:
                if idx[ch] < idx[root]:
                    continue
                if ch == root:
                    cycles.append(tuple(path))
                    if len(cycles) >= cap:
                        truncated = True
                        stack.clear()
                        advanced = True
                        break
                    continue
                if ch in onpath:
                    continue
                stack.append((ch, iter(sorted(data.succ[ch], key=lambda x: idx[x]))))
                path.append(ch)
                onpath.add(ch)
                advanced = True
                break
            if not advanced and stack:
                stack.pop()
                onpath.discard(path.pop())
    if truncated:
        covered = {frozenset(data.scc[x] for x in cyc) for cyc in cycles}
        for node in nodes:
            if node in data.cyclic_node and frozenset({data.scc[node]}) not in covered:
                walk = data.lasso_from(node)
                cycles.append(walk.cycle)
                covered.add(frozenset({data.scc[node]}))
    canon = []
    for cyc in cycles:
        k = min(range(len(cyc)), key=lambda i: idx[cyc[i]])
        canon.append(cyc[k:] + cyc[:k])
    canon = sorted(set(canon), key=lambda c: (len(c), tuple(idx[x] for x in c)))
    return canon, truncated
