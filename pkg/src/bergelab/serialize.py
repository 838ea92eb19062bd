"""JSON forms of certificates and reports, and their parsers.

Vertex sets become ascending integer arrays, graphs become graph6 strings,
and every object is emitted with sorted keys so output is byte-stable.
"""
from __future__ import annotations

import json
from typing import Any

from .decompositions import (
    BalancedSkew,
    Basic,
    CounterexampleToTheorem,
    MJoin,
    MJoinCert,
    SkewPartitionCert,
    TwoJoin,
    TwoJoinCert,
    Verdict,
)
from .graphcore import Graph, mask_of, members
from .graphio import emit_graph6, parse_graph6
from .recognizers import (
    BasicCert,
    BergeResult,
    Bicograph,
    Bipartite,
    ComplementBipartite,
    ComplementLineOfBipartite,
    LineOfBipartite,
    PerfectionReport,
)
from .structures import AppearanceK4, FLadderReport, Prism, Wheel


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def vs(mask: int) -> list[int]:
    return members(mask)


def _pairs(ps) -> list[list[int]]:
    return [list(p) for p in ps]


# ---------------------------------------------------------------------------
# certificates

def basic_to_json(cert: BasicCert) -> dict:
    out: dict[str, Any] = {"class": cert.cls}
    if isinstance(cert, (Bipartite, ComplementBipartite)):
        out.update(A=vs(cert.A), B=vs(cert.B))
    elif isinstance(cert, (LineOfBipartite, ComplementLineOfBipartite)):
        out.update(root=emit_graph6(cert.root), root_n=cert.root.n, edge_map=_pairs(cert.edge_map))
    elif isinstance(cert, Bicograph):
        out.update(ab_pairs=_pairs(cert.ab_pairs), cd_pairs=_pairs(cert.cd_pairs))
    else:
        raise TypeError(f"not a basic certificate: {cert!r}")
    return out


_BASIC_CLASSES = {c.cls: c for c in (Bipartite, ComplementBipartite, LineOfBipartite,
                                       ComplementLineOfBipartite, Bicograph)}


def basic_from_json(d: dict) -> BasicCert:
    cls = _BASIC_CLASSES[d["class"]]
    if cls in (Bipartite, ComplementBipartite):
        return cls(mask_of(d["A"]), mask_of(d["B"]))
    if cls in (LineOfBipartite, ComplementLineOfBipartite):
        return cls(parse_graph6(d["root"]), tuple(tuple(p) for p in d["edge_map"]))
    return cls(tuple(tuple(p) for p in d["ab_pairs"]), tuple(tuple(p) for p in d["cd_pairs"]))


def two_join_to_json(c: TwoJoinCert) -> dict:
    return {k: vs(getattr(c, k)) for k in ("X1", "X2", "A1", "B1", "A2", "B2")}


def two_join_from_json(d: dict) -> TwoJoinCert:
    return TwoJoinCert(*(mask_of(d[k]) for k in ("X1", "X2", "A1", "B1", "A2", "B2")))


def m_join_to_json(c: MJoinCert) -> dict:
    return {k: vs(getattr(c, k)) for k in "ABCDEF"}


def m_join_from_json(d: dict) -> MJoinCert:
    return MJoinCert(*(mask_of(d[k]) for k in "ABCDEF"))


def skew_to_json(c: SkewPartitionCert) -> dict:
    return {
        "A": vs(c.A),
        "B": vs(c.B),
        "components_of_A": [vs(m) for m in c.components_of_A],
        "anticomponents_of_B": [vs(m) for m in c.anticomponents_of_B],
        "loose": c.loose,
        "balanced": c.balanced,
    }


def skew_from_json(d: dict) -> SkewPartitionCert:
    return SkewPartitionCert(mask_of(d["A"]), mask_of(d["B"]),
                             tuple(mask_of(m) for m in d["components_of_A"]),
                             tuple(mask_of(m) for m in d["anticomponents_of_B"]),
                             bool(d["loose"]), bool(d["balanced"]))


def verdict_to_json(v: Verdict) -> dict:
    out: dict[str, Any] = {"kind": v.kind}
    if isinstance(v, Basic):
        out.update(basic_to_json(v.cert))
    elif isinstance(v, TwoJoin):
        out.update(two_join_to_json(v.cert))
    elif isinstance(v, MJoin):
        out.update(m_join_to_json(v.cert))
    elif isinstance(v, BalancedSkew):
        out.update(skew_to_json(v.cert))
    return out


def verdict_from_json(d: dict) -> Verdict:
    kind = d["kind"]
    if kind == "basic":
        return Basic(basic_from_json(d))
    if kind in ("two_join", "two_join_complement"):
        return TwoJoin(two_join_from_json(d), "G" if kind == "two_join" else "complement")
    if kind == "m_join":
        return MJoin(m_join_from_json(d))
    if kind == "balanced_skew":
        return BalancedSkew(skew_from_json(d))
    if kind == "counterexample":
        return CounterexampleToTheorem()
    raise ValueError(f"unknown verdict kind {kind!r}")


# ---------------------------------------------------------------------------
# detector results

def prism_to_json(p: Prism) -> dict:
    return {"triangle_a": list(p.triangle_a), "triangle_b": list(p.triangle_b),
            "paths": _pairs(p.paths), "lengths": list(p.lengths), "kind": p.kind}


def prism_from_json(d: dict) -> Prism:
    return Prism(tuple(d["triangle_a"]), tuple(d["triangle_b"]), tuple(tuple(p) for p in d["paths"]))


def wheel_to_json(w: Wheel) -> dict:
    return {"rim": list(w.rim), "hub": vs(w.hub), "segments": _pairs(w.segments), "odd": w.odd}


def wheel_from_json(d: dict) -> Wheel:
    return Wheel(tuple(d["rim"]), mask_of(d["hub"]), tuple(tuple(s) for s in d["segments"]))


def appearance_to_json(a: AppearanceK4) -> dict:
    return {"vertices": vs(a.vertices), "root": emit_graph6(a.root), "degenerate": a.degenerate}


def appearance_from_json(d: dict) -> AppearanceK4:
    return AppearanceK4(mask_of(d["vertices"]), parse_graph6(d["root"]), bool(d["degenerate"]))


def berge_to_json(r: BergeResult) -> dict:
    witness = None if r.berge else {"side": r.side, "hole": list(r.hole)}
    return {"berge": r.berge, "witness": witness}


def perfect_to_json(r: PerfectionReport) -> dict:
    if r.perfect:
        return {"perfect": True, "witness": None}
    return {"perfect": False,
            "witness": {"vertices": vs(r.witness), "omega": r.omega, "chi": r.chi}}


def fladder_to_json(r: FLadderReport) -> dict:
    return {"flags": list(r.flags), "depth": r.depth, "f8_skipped": r.f8_skipped}


def graph_field(g: Graph) -> dict:
    return {"graph6": emit_graph6(g), "n": g.n}
