"""Finite quivers, quadratic monomial relations, and almost gentle validation.

A bound quiver is *almost gentle* when the ideal is generated by length-two
paths and every arrow has at most one composition-nonzero successor and at
most one composition-nonzero predecessor.  Validation additionally rejects
non-admissible input (a cyclic arrow sequence with all consecutive
compositions nonzero), so every validated pair presents a finite-dimensional
algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

TOKEN_RE = re.compile(r"[A-Za-z0-9_']+\Z")


class AgqError(Exception):
    """Base class for all library errors."""


class UnknownVertexError(AgqError):
    pass


class UnknownArrowError(AgqError):
    pass


class NotValidatedError(AgqError):
    """Raised when an operation requires a validated almost gentle pair."""


class InvalidStringError(AgqError):
    """Raised for arrow sequences that are not nonzero directed paths."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with declaration order preserved for deterministic output."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        seen_v: set[str] = set()
        for v in self.vertices:
            if not TOKEN_RE.match(v):
                raise AgqError(f"bad vertex name {v!r}")
            if v in seen_v:
                raise AgqError(f"duplicate vertex {v!r}")
            seen_v.add(v)
        seen_a: set[str] = set()
        for a in self.arrows:
            if not TOKEN_RE.match(a.name):
                raise AgqError(f"bad arrow name {a.name!r}")
            if a.name in seen_a:
                raise AgqError(f"duplicate arrow {a.name!r}")
            seen_a.add(a.name)

        object.__setattr__(self, "_vidx", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_aidx", {a.name: i for i, a in enumerate(self.arrows)})
        out: dict[str, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        inc: dict[str, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        for a in self.arrows:
            if a.source in out:
                out[a.source] += (a,)
            if a.target in inc:
                inc[a.target] += (a,)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)
        object.__setattr__(self, "_by_name", {a.name: a for a in self.arrows})

    @property
    def vertex_index(self) -> dict[str, int]:
        return self._vidx  # type: ignore[attr-defined]

    @property
    def arrow_index(self) -> dict[str, int]:
        return self._aidx  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Violation:
    kind: str
    location: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class NonzeroPath:
    """A path avoiding every relation pair; length zero carries its vertex."""

    arrows: tuple[str, ...]
    vertex: str | None = None

    def __post_init__(self) -> None:
        if not self.arrows and self.vertex is None:
            raise InvalidStringError("length-zero path needs an anchor vertex")

    def __len__(self) -> int:
        return len(self.arrows)


def validate_bound_quiver(quiver: Quiver, relations: frozenset[tuple[str, str]]) -> ValidationReport:
    """Check composability, the almost gentle conditions, and admissibility.

    Reports, never raises, on well-formed input.  Violation kinds:
    DanglingEndpoint, NonComposableRelation, TooManyNonzeroSuccessors,
    TooManyNonzeroPredecessors, NonzeroCycle.
    """
    violations: list[Violation] = []
    warnings: list[str] = []
    arrow_by_name = {a.name: a for a in quiver.arrows}
    vset = set(quiver.vertices)

    for a in quiver.arrows:
        if a.source not in vset or a.target not in vset:
            violations.append(Violation("DanglingEndpoint", (a.name,),
                                        f"arrow {a.name} has an endpoint outside the vertex set"))
    for a, b in sorted(relations):
        if a not in arrow_by_name or b not in arrow_by_name:
            violations.append(Violation("DanglingEndpoint", (a, b),
                                        f"relation ({a},{b}) names an unknown arrow"))
        elif arrow_by_name[a].target != arrow_by_name[b].source:
            violations.append(Violation("NonComposableRelation", (a, b),
                                        f"relation ({a},{b}) is not composable: "
                                        f"t({a})={arrow_by_name[a].target} != s({b})={arrow_by_name[b].source}"))
    if violations:
        return ValidationReport(False, tuple(violations), tuple(warnings))

    succ: dict[str, str | None] = {}
    for a in quiver.arrows:
        nonzero_out = [b.name for b in quiver.arrows
                       if b.source == a.target and (a.name, b.name) not in relations]
        nonzero_in = [c.name for c in quiver.arrows
                      if c.target == a.source and (c.name, a.name) not in relations]
        if len(nonzero_out) > 1:
            violations.append(Violation("TooManyNonzeroSuccessors", (a.name,),
                                        f"arrow {a.name} has nonzero successors {', '.join(nonzero_out)}"))
        if len(nonzero_in) > 1:
            violations.append(Violation("TooManyNonzeroPredecessors", (a.name,),
                                        f"arrow {a.name} has nonzero predecessors {', '.join(nonzero_in)}"))
        succ[a.name] = nonzero_out[0] if len(nonzero_out) == 1 else None

    # Admissibility: the nonzero-successor functional graph must be acyclic
    # (nonzero extensions are unique, so any arbitrarily long nonzero path
    # closes up into a cycle of this graph).
    state: dict[str, int] = {}
    for start in (a.name for a in quiver.arrows):
        if state.get(start):
            continue
        chain = []
        cur: str | None = start
        while cur is not None and state.get(cur, 0) == 0:
            state[cur] = 1
            chain.append(cur)
            cur = succ[cur]
        if cur is not None and state[cur] == 1:
            cycle = chain[chain.index(cur):]
            violations.append(Violation("NonzeroCycle", tuple(cycle),
                                        "nonzero cycle " + " ".join(cycle)))
        for name in chain:
            state[name] = 2

    if quiver.vertices and _component_count(quiver) > 1:
        warnings.append("quiver is disconnected; all computations are componentwise")

    violations.sort(key=lambda v: (v.kind, v.location))
    return ValidationReport(not violations, tuple(violations), tuple(warnings))


def _component_count(quiver: Quiver) -> int:
    parent = {v: v for v in quiver.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in quiver.arrows:
        if a.source in parent and a.target in parent:
            parent[find(a.source)] = find(a.target)
    return len({find(v) for v in quiver.vertices})


@dataclass(frozen=True)
class AlmostGentlePair:
    """A validated bound quiver.  Immutable; all operations are pure."""

    quiver: Quiver
    relations: frozenset[tuple[str, str]]
    report: ValidationReport = field(compare=False)

    def __post_init__(self) -> None:
        succ: dict[str, str | None] = {}
        pred: dict[str, str | None] = {}
        if self.report.valid:
            for a in self.quiver.arrows:
                succ[a.name] = next((b.name for b in self.quiver._out[a.target]  # type: ignore[attr-defined]
                                     if (a.name, b.name) not in self.relations), None)
                pred[a.name] = next((c.name for c in self.quiver._in[a.source]  # type: ignore[attr-defined]
                                     if (c.name, a.name) not in self.relations), None)
        object.__setattr__(self, "_succ", succ)
        object.__setattr__(self, "_pred", pred)
        object.__setattr__(self, "_memo", {})

    @classmethod
    def build(cls, quiver: Quiver, relations: frozenset[tuple[str, str]]) -> "AlmostGentlePair":
        return cls(quiver, frozenset(relations), validate_bound_quiver(quiver, frozenset(relations)))

    @property
    def validated(self) -> bool:
        return self.report.valid

    def require_valid(self) -> None:
        if not self.report.valid:
            kinds = ", ".join(sorted({v.kind for v in self.report.violations}))
            raise NotValidatedError(f"pair is not a valid almost gentle pair ({kinds})")

    def memo(self, key, compute):
        """Per-pair cache for derived combinatorial structure."""
        cache = self._memo  # type: ignore[attr-defined]
        if key not in cache:
            cache[key] = compute()
        return cache[key]

    # -- lookups -----------------------------------------------------------

    def arrow(self, name: str) -> Arrow:
        try:
            return self.quiver._by_name[name]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownArrowError(name) from None

    def require_vertex(self, v: str) -> str:
        if v not in self.quiver.vertex_index:
            raise UnknownVertexError(v)
        return v

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        self.require_vertex(v)
        return self.quiver._out[v]  # type: ignore[attr-defined]

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        self.require_vertex(v)
        return self.quiver._in[v]  # type: ignore[attr-defined]


def nonzero_successor(pair: AlmostGentlePair, a: str) -> str | None:
    """The unique arrow b with t(a)=s(b) and ab not in the ideal, if any."""
    pair.require_valid()
    pair.arrow(a)
    return pair._succ[a]  # type: ignore[attr-defined]


def nonzero_predecessor(pair: AlmostGentlePair, a: str) -> str | None:
    """The unique arrow c with t(c)=s(a) and ca not in the ideal, if any."""
    pair.require_valid()
    pair.arrow(a)
    return pair._pred[a]  # type: ignore[attr-defined]


def vertex_type(pair: AlmostGentlePair, v: str) -> tuple[int, int]:
    """(in-degree, out-degree) of v."""
    return len(pair.in_arrows(v)), len(pair.out_arrows(v))


def crossing_nonzero_count(pair: AlmostGentlePair, v: str) -> int:
    """Number of length-two nonzero paths through v; at most min(c, d)."""
    pair.require_vertex(v)
    return sum(1 for a in pair.in_arrows(v) for b in pair.out_arrows(v)
               if (a.name, b.name) not in pair.relations)


def path_is_nonzero(pair: AlmostGentlePair, arrows: tuple[str, ...]) -> bool:
    for x, y in zip(arrows, arrows[1:]):
        if pair.arrow(x).target != pair.arrow(y).source:
            return False
        if (x, y) in pair.relations:
            return False
    return True


def basis_paths(pair: AlmostGentlePair) -> list[NonzeroPath]:
    """All nonzero paths, the stationary paths included.

    Sorted by (length, lexicographic arrow declaration order); finite by
    admissibility.
    """
    pair.require_valid()
    idx = pair.quiver.arrow_index
    out: list[NonzeroPath] = [NonzeroPath((), v) for v in pair.quiver.vertices]
    frontier = [(a.name,) for a in pair.quiver.arrows]
    while frontier:
        out.extend(NonzeroPath(p) for p in frontier)
        nxt = []
        for p in frontier:
            b = nonzero_successor(pair, p[-1])
            if b is not None:
                nxt.append(p + (b,))
        frontier = nxt
    vidx = pair.quiver.vertex_index
    out.sort(key=lambda p: (len(p), tuple(idx[a] for a in p.arrows) if p.arrows else (-1,),
                            vidx[p.vertex] if p.vertex is not None else -1))
    return out


def path_source(pair: AlmostGentlePair, p: NonzeroPath) -> str:
    return p.vertex if not p.arrows else pair.arrow(p.arrows[0]).source


def path_target(pair: AlmostGentlePair, p: NonzeroPath) -> str:
    return p.vertex if not p.arrows else pair.arrow(p.arrows[-1]).target


def opposite(pair: AlmostGentlePair) -> AlmostGentlePair:
    """Reverse every arrow and every relation; the result validates."""
    pair.require_valid()
    q = Quiver(pair.quiver.vertices,
               tuple(Arrow(a.name, a.target, a.source) for a in pair.quiver.arrows))
    rels = frozenset((b, a) for a, b in pair.relations)
    return AlmostGentlePair.build(q, rels)
