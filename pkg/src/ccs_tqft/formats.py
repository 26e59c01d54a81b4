"""JSON formats for groups, crossed modules and surfaces.

Group:          {"name": str, "order": n, "table": [[int]]}
Crossed module: {"name": str, "g": <group>, "h": <group>, "boundary": [int], "action": [[int]]}
Surface:        {"name": str, "vertices": [str], "edges": [{"id", "kind", "tail", "head"}],
                 "faces": [{"id", "word": [{"edge", "dir"}], "basepoint"}], "n_in", "n_out"}

Edge kinds are "cut", "internal", "in:<slot>" or "out:<slot>"; directions
are "forward" or "reverse". Loaders re-run every validation.
"""

from __future__ import annotations

import json
from pathlib import Path

from .crossed import CrossedModule, build_crossed_module
from .errors import ParseError
from .groups import FiniteGroup, GroupAction, GroupHom, build_group
from .surface import Edge, EdgeKind, EdgeRef, Face, SurfaceComplex, validate


def group_to_dict(g: FiniteGroup) -> dict:
    return {"name": g.name, "order": g.order, "table": g.table.tolist()}


def group_from_dict(d: dict) -> FiniteGroup:
    try:
        return build_group(int(d["order"]), d["table"], name=d.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad group record: {exc}") from exc


def module_to_dict(cm: CrossedModule) -> dict:
    return {
        "name": cm.name,
        "g": group_to_dict(cm.g),
        "h": group_to_dict(cm.h),
        "boundary": cm.boundary.image_of.tolist(),
        "action": cm.action.act.tolist(),
    }


def module_from_dict(d: dict) -> CrossedModule:
    try:
        g, h = group_from_dict(d["g"]), group_from_dict(d["h"])
        return build_crossed_module(g, h, GroupHom(h, g, d["boundary"]),
                                    GroupAction(g, h, d["action"]), d.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad crossed-module record: {exc}") from exc


def _kind_str(e: Edge) -> str:
    return f"{e.kind.value}:{e.slot}" if e.is_boundary else e.kind.value


def _parse_kind(s: str) -> tuple[EdgeKind, int | None]:
    name, _, slot = s.partition(":")
    kind = EdgeKind(name)
    if kind in (EdgeKind.IN, EdgeKind.OUT):
        return kind, int(slot)
    if slot:
        raise ValueError(f"kind {s!r} takes no slot")
    return kind, None


def surface_to_dict(s: SurfaceComplex) -> dict:
    return {
        "name": s.name,
        "vertices": list(s.vertices),
        "edges": [{"id": e.id, "kind": _kind_str(e), "tail": e.tail, "head": e.head}
                  for e in s.edges],
        "faces": [{"id": f.id,
                   "word": [{"edge": r.edge, "dir": "forward" if r.sign > 0 else "reverse"}
                            for r in f.word],
                   "basepoint": f.basepoint} for f in s.faces],
        "n_in": s.n_in,
        "n_out": s.n_out,
    }


def surface_from_dict(d: dict) -> SurfaceComplex:
    try:
        edges = []
        for e in d["edges"]:
            kind, slot = _parse_kind(e["kind"])
            edges.append(Edge(str(e["id"]), kind, str(e["tail"]), str(e["head"]), slot))
        faces = []
        for i, f in enumerate(d["faces"]):
            word = []
            for r in f["word"]:
                if r["dir"] not in ("forward", "reverse"):
                    raise ValueError(f"bad direction {r['dir']!r}")
                word.append(EdgeRef(str(r["edge"]), 1 if r["dir"] == "forward" else -1))
            faces.append(Face(str(f.get("id", f"F{i}")), tuple(word), int(f.get("basepoint", 0))))
        s = SurfaceComplex(tuple(map(str, d["vertices"])), tuple(edges), tuple(faces),
                           int(d["n_in"]), int(d["n_out"]), d.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad surface record: {exc}") from exc
    validate(s)
    return s


def load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
