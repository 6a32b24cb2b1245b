"""Seeded random generation of almost gentle pairs.

Construction works backwards from the local structure: per vertex, choose a
partial matching of in-arrows to out-arrows as the composition-nonzero
pairs; every unmatched composable pair becomes a relation.  The matching
guarantees the almost gentle conditions by construction; admissibility is
then forced by breaking each cycle of the nonzero-successor graph (the
broken pair moves into the relations).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .agqfile import AgqDocument, emit_agq
from .quiver import AlmostGentlePair, Arrow, Quiver


@dataclass(frozen=True)
class GeneratorParams:
    seed: int
    max_vertices: int = 8
    max_arrows: int = 14
    loop_allowed: bool = True
    relation_density: float = 0.5  # probability a composable in/out pair stays zero

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_arrows < 0:
            raise ValueError("bounds must be positive")
        if not 0.0 <= self.relation_density <= 1.0:
            raise ValueError("relation_density must lie in [0, 1]")


def random_ag_pair(params: GeneratorParams) -> tuple[AlmostGentlePair, str]:
    """Deterministic in the seed; the result always validates."""
    rng = random.Random(params.seed)
    n_v = rng.randint(1, params.max_vertices)
    vertices = tuple(f"v{i}" for i in range(1, n_v + 1))
    n_a = rng.randint(0, params.max_arrows)
    arrows = []
    for k in range(1, n_a + 1):
        src = rng.choice(vertices)
        tgt = rng.choice(vertices)
        if not params.loop_allowed and n_v > 1:
            while tgt == src:
                tgt = rng.choice(vertices)
        if not params.loop_allowed and n_v == 1:
            continue
        arrows.append(Arrow(f"a{k}", src, tgt))
    quiver = Quiver(vertices, tuple(arrows))

    # per-vertex partial matching of in-arrows to out-arrows = nonzero pairs
    successor: dict[str, str] = {}
    for v in vertices:
        ins = [a.name for a in arrows if a.target == v]
        outs = [b.name for b in arrows if b.source == v]
        rng.shuffle(ins)
        rng.shuffle(outs)
        for a, b in zip(ins, outs):
            if rng.random() >= params.relation_density:
                successor[a] = b

    # admissibility: break every cycle of the successor graph
    state: dict[str, int] = {}
    for start in list(successor):
        if state.get(start):
            continue
        chain = []
        cur: str | None = start
        while cur is not None and state.get(cur, 0) == 0:
            state[cur] = 1
            chain.append(cur)
            cur = successor.get(cur)
        if cur is not None and state[cur] == 1:
            cycle = chain[chain.index(cur):]
            drop = min(cycle)
            del successor[drop]
        for name in chain:
            state[name] = 2

    relations = frozenset(
        (a.name, b.name)
        for a in arrows for b in arrows
        if a.target == b.source and successor.get(a.name) != b.name)
    pair = AlmostGentlePair.build(quiver, relations)
    if not pair.validated:  # pragma: no cover - construction guarantees validity
        raise AssertionError(f"generator produced an invalid pair: {pair.report.violations}")
    idx = pair.quiver.arrow_index
    doc = AgqDocument(f"random_{params.seed}", list(vertices), list(arrows),
                      sorted(pair.relations, key=lambda e: (idx[e[0]], idx[e[1]])))
    return pair, emit_agq(doc)
