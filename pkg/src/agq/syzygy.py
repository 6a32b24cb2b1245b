"""Symbolic first syzygies, the kernel block over an injective's socle vertex,
and symbolic minimal projective resolutions.

The kernel of the projective cover of a directed string module is again a
direct sum of directed string modules: drop the covered prefix plus one more
arrow from the module's own claw branch, and the first arrow from every
other branch.  For an injective E(v) the kernel splits into per-branch
leftovers (the M-list) and the socle block, the part glued together over v;
the block decomposes into directed strings except when every in-arrow of v
matches an out-arrow and there are at least two, in which case it is a
genuine tree module handled by its own exact kernel formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import AgqError, AlmostGentlePair, InvalidStringError
from .strings import (
    DirectedString,
    anticlaw_of,
    claw_of,
    is_right_maximal,
    module_dims,
    right_maximal_extension,
    string_dim_vector,
    string_of,
    string_source,
    string_target,
)
from .quiver import nonzero_successor, vertex_type
from .forbidden import is_down_relational


class NotRightMaximalError(AgqError):
    pass


class NotInjectiveCaseError(AgqError):
    """Raised for socle-block queries at a source vertex (E(v) = S(v))."""


@dataclass(frozen=True)
class Summand:
    """One indecomposable piece of a symbolic syzygy.

    kind is "simple", "string", "projective" (a summand recognized as
    P(vertex)), or "psi0" (the undecomposed socle block of an injective,
    tagged by its apex).  Length-zero strings are normalized to simples.
    """

    kind: str
    vertex: str | None = None
    arrows: tuple[str, ...] = ()

    @classmethod
    def simple(cls, v: str) -> "Summand":
        return cls("simple", v)

    @classmethod
    def string(cls, arrows: tuple[str, ...], anchor: str | None = None) -> "Summand":
        if not arrows:
            return cls.simple(anchor)  # type: ignore[arg-type]
        return cls("string", None, tuple(arrows))

    @classmethod
    def projective(cls, v: str) -> "Summand":
        return cls("projective", v)

    @classmethod
    def psi0(cls, v: str) -> "Summand":
        return cls("psi0", v)


_KIND_RANK = {"simple": 0, "string": 1, "projective": 2, "psi0": 3}


def summand_sort_key(pair: AlmostGentlePair, s: Summand):
    vidx = pair.quiver.vertex_index
    aidx = pair.quiver.arrow_index
    apex = s.vertex if s.vertex is not None else pair.arrow(s.arrows[0]).source
    return (_KIND_RANK[s.kind], vidx[apex], tuple(aidx[a] for a in s.arrows))


def summand_dims(pair: AlmostGentlePair, s: Summand) -> dict[str, int]:
    if s.kind == "simple":
        return {s.vertex: 1}  # type: ignore[dict-item]
    if s.kind == "string":
        return string_dim_vector(pair, DirectedString.of(s.arrows))
    if s.kind == "projective":
        return module_dims(pair, "projective", s.vertex)
    if s.kind == "psi0":
        return psi0_dim_vector(pair, s.vertex)  # type: ignore[arg-type]
    raise ValueError(s.kind)


@dataclass(frozen=True)
class SyzygyDecomposition:
    """Multiset of summands, stored with multiplicities (they grow fast)."""

    items: tuple[tuple[Summand, int], ...]

    @classmethod
    def of(cls, pair: AlmostGentlePair,
           summands: "list[Summand] | list[tuple[Summand, int]]") -> "SyzygyDecomposition":
        counts: dict[Summand, int] = {}
        for entry in summands:
            s, n = entry if isinstance(entry, tuple) else (entry, 1)
            if n:
                counts[s] = counts.get(s, 0) + n
        ordered = sorted(counts, key=lambda s: summand_sort_key(pair, s))
        return cls(tuple((s, counts[s]) for s in ordered))

    @property
    def summands(self) -> tuple[Summand, ...]:
        """Expanded view; avoid on decompositions with huge multiplicities."""
        return tuple(s for s, n in self.items for _ in range(n))

    def total(self) -> int:
        return sum(n for _, n in self.items)

    def dim_vector(self, pair: AlmostGentlePair) -> dict[str, int]:
        dims: dict[str, int] = {}
        for s, n in self.items:
            for v, m in summand_dims(pair, s).items():
                dims[v] = dims.get(v, 0) + n * m
        return {v: n for v, n in dims.items() if n}

    def __bool__(self) -> bool:
        return bool(self.items)


def _branch_minus_first(pair: AlmostGentlePair, branch: DirectedString) -> Summand:
    first = pair.arrow(branch.arrows[0])
    return Summand.string(branch.arrows[1:], first.target)


def omega1_directed_string(pair: AlmostGentlePair, delta: DirectedString) -> SyzygyDecomposition:
    """First syzygy of the directed string module M(delta).

    Length zero means the simple at the anchor; then every claw branch
    contributes its first-arrow-removed remainder.  For longer strings the
    module's own branch contributes the part beyond delta minus one more
    arrow (nothing if delta is the whole branch), the other branches their
    first-arrow-removed remainders.
    """
    pair.require_valid()
    if not delta.arrows:
        v = delta.path.vertex
        pair.require_vertex(v)  # type: ignore[arg-type]
        return SyzygyDecomposition.of(
            pair, [_branch_minus_first(pair, br) for br in claw_of(pair, v).branches])
    delta = string_of(pair, delta.arrows)
    src = string_source(pair, delta)
    pieces: list[Summand] = []
    own_seen = False
    for br in claw_of(pair, src).branches:
        if br.arrows[0] == delta.arrows[0]:
            own_seen = True
            if br.arrows[:len(delta.arrows)] != delta.arrows:
                raise InvalidStringError("string is not a nonzero-successor chain")
            tail = br.arrows[len(delta.arrows):]
            if tail:
                pieces.append(Summand.string(tail[1:], pair.arrow(tail[0]).target))
        else:
            pieces.append(_branch_minus_first(pair, br))
    if not own_seen:
        raise InvalidStringError("string does not start with an arrow of its source")
    return SyzygyDecomposition.of(pair, pieces)


def is_omega1_projective_dirstring(pair: AlmostGentlePair, delta: DirectedString) -> bool:
    """Projectivity of the first syzygy of M(delta) by the relational test.

    Requires delta right maximal when of positive length; a branch target is
    disqualifying exactly when some arrow composes to zero after the
    branch's first arrow.
    """
    pair.require_valid()
    if delta.arrows:
        delta = string_of(pair, delta.arrows)
        if not is_right_maximal(pair, delta):
            raise NotRightMaximalError(" ".join(delta.arrows))
        src = string_source(pair, delta)
        skip = delta.arrows[0]
    else:
        src = pair.require_vertex(delta.path.vertex)  # type: ignore[arg-type]
        skip = None
    return all(not is_down_relational(pair, br.arrows[0])
               for br in claw_of(pair, src).branches if br.arrows[0] != skip)


def is_gentle_vertex(pair: AlmostGentlePair, v: str) -> bool:
    """Local gentle conditions at v.

    In- and out-degree at most two, and each arrow through v composes to
    zero with at most one partner (the nonzero side is already bounded by
    validation).
    """
    pair.require_valid()
    ins, outs = pair.in_arrows(v), pair.out_arrows(v)
    if len(ins) > 2 or len(outs) > 2:
        return False
    for a in ins:
        if sum(1 for b in outs if (a.name, b.name) in pair.relations) > 1:
            return False
    for b in outs:
        if sum(1 for a in ins if (a.name, b.name) in pair.relations) > 1:
            return False
    return True


@dataclass(frozen=True)
class Psi0Descriptor:
    """Shape of the socle block of Omega_1(E(apex)).

    tails lists the right maximal strings out of the apex in declaration
    order, flagged when some in-arrow composes with them nonzero; the flag
    count is the crossing count t.
    """

    apex: str
    c: int
    d: int
    t: int
    tails: tuple[tuple[DirectedString, bool], ...]

    def flagged(self) -> list[DirectedString]:
        return [s for s, f in self.tails if f]

    def unflagged(self) -> list[DirectedString]:
        return [s for s, f in self.tails if not f]


def psi0_descriptor(pair: AlmostGentlePair, v: str) -> Psi0Descriptor:
    pair.require_valid()
    c, d = vertex_type(pair, v)
    ins = pair.in_arrows(v)
    tails = []
    for b in pair.out_arrows(v):
        tail = right_maximal_extension(pair, string_of(pair, (b.name,)))
        flag = any((a.name, b.name) not in pair.relations for a in ins)
        tails.append((tail, flag))
    t = sum(1 for _, f in tails if f)
    return Psi0Descriptor(v, c, d, t, tuple(tails))


def psi0_dim_vector(pair: AlmostGentlePair, v: str) -> dict[str, int]:
    """(c-1) at the apex plus one per vertex strictly along each flagged tail."""
    desc = psi0_descriptor(pair, v)
    dims: dict[str, int] = {}
    if desc.c >= 2:
        dims[v] = desc.c - 1
    for tail in desc.flagged():
        for a in tail.arrows:
            t = pair.arrow(a).target
            dims[t] = dims.get(t, 0) + 1
    return {w: n for w, n in dims.items() if n}


def omega1_injective(pair: AlmostGentlePair, v: str) -> tuple[Psi0Descriptor, list[Summand]]:
    """First syzygy of E(v) as (socle-block descriptor, per-branch leftovers).

    The leftover list runs over the anti-claw branches: every claw branch of
    the branch source other than the one through the branch itself, minus
    its first arrow.  The socle block is returned symbolically.
    """
    pair.require_valid()
    c, _ = vertex_type(pair, v)
    if c == 0:
        raise NotInjectiveCaseError(f"E({v}) is the simple at the source {v}")
    desc = psi0_descriptor(pair, v)
    mlist: list[Summand] = []
    for branch in anticlaw_of(pair, v).branches:
        x = string_source(pair, branch)
        first = branch.arrows[0]
        for br in claw_of(pair, x).branches:
            if br.arrows[0] != first:
                mlist.append(_branch_minus_first(pair, br))
    return desc, sorted(mlist, key=lambda s: summand_sort_key(pair, s))


def is_invalid_vertex(pair: AlmostGentlePair, v: str) -> tuple[bool, int | None]:
    """Five-way classification of when the socle block of E(v) is projective.

    Returns (verdict, first matching condition 1..5 or None):
    (1) gentle with two in-arrows, (2) sink, (3)/(4) one in-arrow whose
    nonzero continuation dies immediately (at a sink, or with no relation
    after its first arrow), (5) one in-arrow composing to zero with every
    out-arrow.
    """
    pair.require_valid()
    c, d = vertex_type(pair, v)
    desc = psi0_descriptor(pair, v)
    if c == 2 and is_gentle_vertex(pair, v):
        return True, 1
    if d == 0:
        return True, 2
    if c == 1 and desc.t == 1:
        tail = desc.flagged()[0]
        if len(tail.arrows) == 1 and not pair.out_arrows(string_target(pair, tail)):
            return True, 3
        if len(tail.arrows) >= 2 and not is_down_relational(pair, tail.arrows[0]):
            return True, 4
    if c == 1 and desc.t == 0 and d >= 1:
        return True, 5
    return False, None


def psi0_is_projective(pair: AlmostGentlePair, v: str) -> bool:
    c, _ = vertex_type(pair, v)
    if c == 0:
        raise NotInjectiveCaseError(f"E({v}) is simple; no socle block")
    return is_invalid_vertex(pair, v)[0]


def psi0_decompose(pair: AlmostGentlePair, v: str) -> SyzygyDecomposition | None:
    """Directed-string decomposition of the socle block, or None.

    For t < c the block is the flagged full tails plus c-1-t simples at the
    apex; for a single matched in-arrow it is the tail minus its first
    arrow.  When every in-arrow is matched and there are at least two the
    block is a tree outside the directed-string vocabulary (projective
    exactly when the vertex is invalid) and None is returned.
    """
    pair.require_valid()
    desc = psi0_descriptor(pair, v)
    if desc.c == 0:
        raise NotInjectiveCaseError(f"E({v}) is simple; no socle block")
    if desc.t < desc.c:
        pieces = [Summand.string(tail.arrows) for tail in desc.flagged()]
        pieces.extend(Summand.simple(v) for _ in range(desc.c - 1 - desc.t))
        return SyzygyDecomposition.of(pair, pieces)
    if desc.c == 1:
        tail = desc.flagged()[0]
        return SyzygyDecomposition.of(
            pair, [Summand.string(tail.arrows[1:], pair.arrow(tail.arrows[0]).target)])
    return None


def psi0_omega1(pair: AlmostGentlePair, desc: Psi0Descriptor) -> list[tuple[Summand, int]]:
    """Exact first syzygy of the undecomposed (t = c >= 2) socle block.

    The cover is P(apex)^(c-1); per claw tail the kernel keeps c-2 copies of
    the tail minus its first arrow when the tail is flagged and c-1 copies
    when it is not.
    """
    c = desc.c
    pieces: list[tuple[Summand, int]] = []
    for tail, flag in desc.tails:
        mult = c - 2 if flag else c - 1
        if mult <= 0:
            continue
        pieces.append((Summand.string(tail.arrows[1:], pair.arrow(tail.arrows[0]).target), mult))
    return pieces


@dataclass(frozen=True)
class ResolutionLevel:
    cover: tuple[tuple[str, int], ...]  # (vertex, multiplicity), declaration order
    syzygy: SyzygyDecomposition


@dataclass(frozen=True)
class Resolution:
    levels: tuple[ResolutionLevel, ...]
    terminated: str  # "projective" | "cutoff"

    @property
    def length(self) -> int:
        """Number of the last level, i.e. the projective dimension when terminated."""
        return len(self.levels) - 1


def _cover_multiset(pair: AlmostGentlePair,
                    items: list[tuple[Summand, int]]) -> tuple[tuple[str, int], ...]:
    counts: dict[str, int] = {}
    for s, n in items:
        if s.kind == "psi0":
            c = psi0_descriptor(pair, s.vertex).c  # type: ignore[arg-type]
            counts[s.vertex] = counts.get(s.vertex, 0) + n * (c - 1)  # type: ignore[index]
        else:
            apex = s.vertex if s.vertex is not None else pair.arrow(s.arrows[0]).source
            counts[apex] = counts.get(apex, 0) + n
    return tuple((v, counts[v]) for v in pair.quiver.vertices if v in counts)


def _normalize(pair: AlmostGentlePair, s: Summand) -> Summand:
    """Recognize projective summands; symbolic termination needs no oracle."""
    if s.kind == "simple":
        if not pair.out_arrows(s.vertex):  # type: ignore[arg-type]
            return Summand.projective(s.vertex)  # type: ignore[arg-type]
        return s
    if s.kind == "string":
        src = pair.arrow(s.arrows[0]).source
        if len(pair.out_arrows(src)) == 1 and nonzero_successor(pair, s.arrows[-1]) is None:
            return Summand.projective(src)
        return s
    if s.kind == "psi0":
        if is_invalid_vertex(pair, s.vertex)[0]:  # type: ignore[arg-type]
            # t = c = 2 and gentle: the block is the two-branch claw P(apex)
            return Summand.projective(s.vertex)  # type: ignore[arg-type]
        return s
    return s


def _omega1_of_summand(pair: AlmostGentlePair, s: Summand) -> list[tuple[Summand, int]]:
    def compute() -> list[tuple[Summand, int]]:
        if s.kind == "projective":
            return []
        if s.kind == "simple":
            return list(omega1_directed_string(pair, DirectedString.of((), s.vertex)).items)
        if s.kind == "string":
            return list(omega1_directed_string(pair, DirectedString.of(s.arrows)).items)
        if s.kind == "psi0":
            return psi0_omega1(pair, psi0_descriptor(pair, s.vertex))  # type: ignore[arg-type]
        raise ValueError(s.kind)

    return pair.memo(("omega1", s), compute)


def resolve_symbolic(pair: AlmostGentlePair, kind: str, arg, max_steps: int = 64) -> Resolution:
    """Minimal projective resolution by symbolic syzygy iteration.

    kind is "simple", "string", or "injective".  Levels carry the cover of
    the current module and its syzygy; iteration stops when every summand
    is recognized projective, else after max_steps with a cutoff marker.
    """
    pair.require_valid()
    levels: list[ResolutionLevel] = []

    if kind == "injective":
        v = pair.require_vertex(arg)
        c, _ = vertex_type(pair, v)
        if c == 0:
            kind, arg = "simple", v
    if kind == "simple":
        current = [(_normalize(pair, Summand.simple(pair.require_vertex(arg))), 1)]
    elif kind == "string":
        ds = arg if isinstance(arg, DirectedString) else DirectedString.of(tuple(arg))
        if ds.arrows:
            string_of(pair, ds.arrows)
            current = [(_normalize(pair, Summand.string(ds.arrows)), 1)]
        else:
            current = [(_normalize(pair, Summand.simple(ds.path.vertex)), 1)]  # type: ignore[arg-type]
    elif kind == "injective":
        v = arg
        desc, mlist = omega1_injective(pair, v)
        cover = _cover_multiset(
            pair, [(Summand.simple(string_source(pair, br)), 1)
                   for br in anticlaw_of(pair, v).branches])
        if desc.t < desc.c or desc.c == 1:
            block = [(s, n) for s, n in psi0_decompose(pair, v).items]  # type: ignore[union-attr]
        else:
            block = [(Summand.psi0(v), 1)]
        syz = [(_normalize(pair, s), n) for s, n in list(mlist_counted(pair, mlist)) + block]
        dec = SyzygyDecomposition.of(pair, syz)
        levels.append(ResolutionLevel(cover, dec))
        if not dec:
            return Resolution(tuple(levels), "projective")
        current = list(dec.items)
    else:
        raise ValueError(f"unknown module kind {kind!r}")

    while True:
        cover = _cover_multiset(pair, current)
        nxt = [(_normalize(pair, t), n * m)
               for s, n in current for t, m in _omega1_of_summand(pair, s)]
        dec = SyzygyDecomposition.of(pair, nxt)
        levels.append(ResolutionLevel(cover, dec))
        if not dec:
            return Resolution(tuple(levels), "projective")
        if len(levels) > max_steps:
            return Resolution(tuple(levels), "cutoff")
        current = list(dec.items)


def mlist_counted(pair: AlmostGentlePair, mlist: list[Summand]) -> list[tuple[Summand, int]]:
    counts: dict[Summand, int] = {}
    for s in mlist:
        counts[s] = counts.get(s, 0) + 1
    return sorted(counts.items(), key=lambda kv: summand_sort_key(pair, kv[0]))
