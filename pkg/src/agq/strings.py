"""Directed strings and the claw/anti-claw shapes of projectives and injectives.

Only directed strings (all arrows pointing the same way) enter any
computation here; the claw of a vertex bundles the right maximal strings out
of it and describes P(v), the anti-claw dually describes E(v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import (
    AlmostGentlePair,
    InvalidStringError,
    NonzeroPath,
    basis_paths,
    nonzero_predecessor,
    nonzero_successor,
    path_source,
    path_target,
)


@dataclass(frozen=True)
class DirectedString:
    """A nonzero directed path; length zero carries its anchor vertex."""

    path: NonzeroPath

    @classmethod
    def of(cls, arrows: tuple[str, ...], vertex: str | None = None) -> "DirectedString":
        return cls(NonzeroPath(tuple(arrows), vertex))

    @property
    def arrows(self) -> tuple[str, ...]:
        return self.path.arrows

    def __len__(self) -> int:
        return len(self.path)


def string_of(pair: AlmostGentlePair, arrows: tuple[str, ...], vertex: str | None = None) -> DirectedString:
    """Build a directed string, checking it is a nonzero path of the pair."""
    if not arrows:
        if vertex is None:
            raise InvalidStringError("length-zero string needs an anchor vertex")
        pair.require_vertex(vertex)
        return DirectedString(NonzeroPath((), vertex))
    for x, y in zip(arrows, arrows[1:]):
        if pair.arrow(x).target != pair.arrow(y).source:
            raise InvalidStringError(f"{x} and {y} are not composable")
        if (x, y) in pair.relations:
            raise InvalidStringError(f"{x}{y} lies in the ideal")
    return DirectedString(NonzeroPath(tuple(arrows)))


def string_source(pair: AlmostGentlePair, ds: DirectedString) -> str:
    return path_source(pair, ds.path)


def string_target(pair: AlmostGentlePair, ds: DirectedString) -> str:
    return path_target(pair, ds.path)


def right_maximal_extension(pair: AlmostGentlePair, ds: DirectedString) -> DirectedString:
    """Extend by the unique nonzero successor of the last arrow until stuck.

    Idempotent; raises InvalidStringError on zero input strings.  A
    length-zero string is returned unchanged (every arrow out of its anchor
    starts a different string).
    """
    pair.require_valid()
    if not ds.arrows:
        return ds
    arrows = list(string_of(pair, ds.arrows).arrows)
    while True:
        nxt = nonzero_successor(pair, arrows[-1])
        if nxt is None:
            return DirectedString(NonzeroPath(tuple(arrows)))
        arrows.append(nxt)


def left_maximal_extension(pair: AlmostGentlePair, ds: DirectedString) -> DirectedString:
    pair.require_valid()
    if not ds.arrows:
        return ds
    arrows = list(string_of(pair, ds.arrows).arrows)
    while True:
        prv = nonzero_predecessor(pair, arrows[0])
        if prv is None:
            return DirectedString(NonzeroPath(tuple(arrows)))
        arrows.insert(0, prv)


def is_right_maximal(pair: AlmostGentlePair, ds: DirectedString) -> bool:
    if not ds.arrows:
        return True
    return nonzero_successor(pair, ds.arrows[-1]) is None


@dataclass(frozen=True)
class Claw:
    """One right maximal branch per outgoing arrow of the apex; P(apex)."""

    apex: str
    branches: tuple[DirectedString, ...]


@dataclass(frozen=True)
class AntiClaw:
    """One left maximal branch per incoming arrow of the apex; E(apex)."""

    apex: str
    branches: tuple[DirectedString, ...]


def claw_of(pair: AlmostGentlePair, v: str) -> Claw:
    pair.require_valid()
    pair.require_vertex(v)
    return pair.memo(("claw", v), lambda: Claw(v, tuple(
        right_maximal_extension(pair, DirectedString.of((a.name,)))
        for a in pair.out_arrows(v))))


def anticlaw_of(pair: AlmostGentlePair, v: str) -> AntiClaw:
    pair.require_valid()
    pair.require_vertex(v)
    return pair.memo(("anticlaw", v), lambda: AntiClaw(v, tuple(
        left_maximal_extension(pair, DirectedString.of((a.name,)))
        for a in pair.in_arrows(v))))


def string_dim_vector(pair: AlmostGentlePair, ds: DirectedString) -> dict[str, int]:
    """Dimension vector of the string module M(ds): visit multiplicities.

    A vertex may repeat when the quiver has a cycle whose wraparound
    composition is a relation; the arrow sequence itself never repeats.
    """
    if not ds.arrows:
        return {ds.path.vertex: 1}  # type: ignore[dict-item]
    dims: dict[str, int] = {pair.arrow(ds.arrows[0]).source: 1}
    for a in ds.arrows:
        t = pair.arrow(a).target
        dims[t] = dims.get(t, 0) + 1
    return dims


def module_dims(pair: AlmostGentlePair, kind: str, arg) -> dict[str, int]:
    """Dimension vector of Simple(v) | DirString(ds) | Projective(v) | Injective(v)."""
    pair.require_valid()
    if kind == "simple":
        pair.require_vertex(arg)
        return {arg: 1}
    if kind == "string":
        return string_dim_vector(pair, arg)
    if kind == "projective":
        dims = {pair.require_vertex(arg): 1}
        for br in claw_of(pair, arg).branches:
            for a in br.arrows:
                t = pair.arrow(a).target
                dims[t] = dims.get(t, 0) + 1
        return dims
    if kind == "injective":
        dims = {pair.require_vertex(arg): 1}
        for br in anticlaw_of(pair, arg).branches:
            dims[string_source(pair, br)] = dims.get(string_source(pair, br), 0) + 1
            for a in br.arrows[1:]:
                s = pair.arrow(a).source
                dims[s] = dims.get(s, 0) + 1
        return dims
    raise ValueError(f"unknown module kind {kind!r}")


def socle_supports(pair: AlmostGentlePair) -> list[str]:
    """Multiset of socle vertices of the regular module, one entry per factor.

    Branch endpoints of every claw; a sink contributes itself (P(v) = S(v)).
    This indexes the injective envelope of the algebra.
    """
    pair.require_valid()
    supports: list[str] = []
    for v in pair.quiver.vertices:
        claw = claw_of(pair, v)
        if not claw.branches:
            supports.append(v)
        else:
            supports.extend(string_target(pair, br) for br in claw.branches)
    return supports


def count_basis_paths_from(pair: AlmostGentlePair, v: str) -> int:
    return sum(1 for p in basis_paths(pair) if path_source(pair, p) == v)


def count_basis_paths_to(pair: AlmostGentlePair, v: str) -> int:
    return sum(1 for p in basis_paths(pair) if path_target(pair, p) == v)
