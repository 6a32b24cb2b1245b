"""JSON and DOT output.

The JSON schema is stable and key-sorted; infinite dimensions are encoded as
``{"finite": false, "value": null}`` rather than a sentinel number.  DOT
output draws the quiver solid and each relation as a dashed arc between the
midpoints of its two arrows (labeled ``a.b``).
"""

from __future__ import annotations

import json

from .forbidden import LengthOrInf
from .homdim import gorenstein_report, pdim_injective, pdim_simple
from .quiver import AlmostGentlePair
from .syzygy import is_gentle_vertex, is_invalid_vertex


def _dim_json(value: LengthOrInf, witness=None, extra: dict | None = None) -> dict:
    out: dict = {"finite": value.is_finite, "value": value.value}
    if witness is not None:
        out["witness"] = list(witness.stem + witness.cycle)
        if witness.is_lasso:
            out["cycle"] = list(witness.cycle)
    if extra:
        out.update(extra)
    return out


def report_json(pair: AlmostGentlePair, name: str | None = None) -> dict:
    """The full decision report as a JSON-ready dict."""
    pair.require_valid()
    g = gorenstein_report(pair)
    per_vertex = {}
    for v in pair.quiver.vertices:
        per_vertex[v] = {
            "pdim_simple": _dim_json(pdim_simple(pair, v).value),
            "pdim_injective": _dim_json(pdim_injective(pair, v).value),
            "invalid": is_invalid_vertex(pair, v)[0],
            "gentle": is_gentle_vertex(pair, v),
        }
    return {
        "algebra": name or "",
        "valid": True,
        "global_dimension": _dim_json(g.gldim.value, g.gldim.witness),
        "self_injective_dimension": _dim_json(g.injdim.value, g.injdim.witness,
                                              {"attained_at": g.injdim.attained_at}),
        "gorenstein": g.gorenstein,
        "cycle_criterion": g.cycle_criterion,
        "envelope_pdim": _dim_json(g.envelope_pdim),
        "per_vertex": per_vertex,
    }


def emit_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def emit_dot(pair: AlmostGentlePair, name: str | None = None) -> str:
    """Quiver as solid edges through midpoint nodes; relations dashed."""
    lines = [f"digraph {json.dumps(name or 'agq')} {{"]
    lines.append("  rankdir=TB;")
    lines.append("  node [shape=circle];")
    for v in pair.quiver.vertices:
        lines.append(f"  {json.dumps(v)};")
    for a in pair.quiver.arrows:
        mid = f"mid_{a.name}"
        lines.append(f"  {json.dumps(mid)} [shape=point, width=0.02, label=\"\"];")
        lines.append(f"  {json.dumps(a.source)} -> {json.dumps(mid)} "
                     f"[arrowhead=none, label={json.dumps(a.name)}];")
        lines.append(f"  {json.dumps(mid)} -> {json.dumps(a.target)};")
    idx = pair.quiver.arrow_index
    for a, b in sorted(pair.relations, key=lambda e: (idx[e[0]], idx[e[1]])):
        lines.append(f"  \"mid_{a}\" -> \"mid_{b}\" "
                     f"[style=dashed, constraint=false, label=\"{a}.{b}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
