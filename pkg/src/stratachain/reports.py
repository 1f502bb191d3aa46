"""Deterministic report documents for the command-line front end.

Every report is a plain dict of JSON-safe values with stable ordering, so
serializing with sorted keys yields byte-identical output across runs.
"""

from __future__ import annotations

import json

from .chains import simplicial_top_cycles_dim, top_homology_dim
from .errors import InternalCheckError
from .taut import CircleCover, Constant, Word


def complex_report(K) -> dict:
    counts = K.cell_counts()
    return {
        "name": K.name,
        "dimension": K.dimension,
        "cell_counts": {str(k): counts[k] for k in sorted(counts)},
        "euler_characteristic": K.euler_characteristic(),
    }


def filtration_report(F) -> dict:
    levels = []
    for k in range(F.dimension + 1):
        counts = F.level(k).cell_counts()
        levels.append({
            "level": k,
            "cell_counts": {str(j): counts[j] for j in sorted(counts)},
        })
    return {"dimension": F.dimension, "levels": levels}


def _certificate_json(cert):
    return [[list(a), list(f), list(b)] for (a, f, b) in cert]


def strata_report(strat) -> dict:
    levels = []
    for k in range(max(strat.dimension, -1) + 1):
        entries = []
        for s in strat.level_strata(k):
            entry = {
                "id": s.index,
                "cells": len(s.cells),
                "orientable": s.orientable,
            }
            if not s.orientable:
                entry["certificate"] = _certificate_json(s.certificate)
            entries.append(entry)
        levels.append({"level": k, "strata": entries})
    return {"counts": {str(k): v for k, v in sorted(strat.counts().items())},
            "levels": levels}


def chain_report(chain) -> dict:
    boundaries = []
    for k, mat in enumerate(chain.boundaries):
        dense = [[int(x) for x in row] for row in mat.to_dense()]
        boundaries.append({"degree": k + 1, "matrix": dense})
    return {
        "dims": list(chain.dims),
        "axes": [list(a) for a in chain.axes],
        "boundaries": boundaries,
        "cycle_basis": [list(v) for v in chain.cycle_basis],
    }


def homology_report(chain, K) -> dict:
    top = top_homology_dim(chain)
    oracle = simplicial_top_cycles_dim(K)
    if top != oracle:
        raise InternalCheckError(
            "top homology dimension %d disagrees with the simplicial "
            "cycle-space oracle %d" % (top, oracle))
    return {"top_homology_dim": top, "oracle_dim": oracle}


def matroid_report(ground, circuits, cls) -> dict:
    return {
        "ground": list(ground),
        "circuits": [{"positive": sorted(c.positive),
                      "negative": sorted(c.negative)} for c in circuits],
        "canonical_form": cls.canonical_form,
    }


def _attachment_json(att):
    if isinstance(att, Constant):
        return {"kind": "constant", "level": att.level, "target": att.target}
    if isinstance(att, CircleCover):
        return {"kind": "circle_cover", "circle": att.circle,
                "degree": att.degree, "sign": att.sign}
    if isinstance(att, Word):
        return {"kind": "word", "letters": list(att.letters)}
    raise InternalCheckError("unknown attachment %r" % (att,))


def invariant_report(inv) -> dict:
    graph = {
        "vertices": list(inv.graph.vertices),
        "arcs": [{"id": a.index, "tail": a.tail, "head": a.head}
                 for a in inv.graph.arcs],
        "circles": list(inv.graph.circles),
        "loops_at_vertex": [[v, n] for v, n in inv.graph.loops_at_vertex],
    }
    surfaces = [{
        "id": s.index,
        "euler_characteristic": s.euler_characteristic,
        "orientable": s.orientable,
        "attachments": [_attachment_json(a) for a in s.attachments],
    } for s in inv.surfaces]
    return {
        "graph": graph,
        "surfaces": surfaces,
        "boundary_matrix": [list(r) for r in inv.boundary_matrix],
        "boundary_columns": list(inv.boundary_columns),
    }


def offenders_json(offenders):
    return [{"stratum": s, "circle": c, "edges": [list(e) for e in cyc]}
            for s, c, cyc in offenders]


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_text(report: dict) -> str:
    """Flat deterministic rendering: one `path = value` line per leaf."""
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            if not value:
                lines.append("%s = {}" % prefix)
            for key in sorted(value):
                walk("%s.%s" % (prefix, key) if prefix else str(key), value[key])
        elif isinstance(value, list):
            if not value or all(isinstance(x, (int, bool, str)) for x in value):
                lines.append("%s = %s" % (prefix, json.dumps(value)))
            else:
                for i, x in enumerate(value):
                    walk("%s[%d]" % (prefix, i), x)
        else:
            lines.append("%s = %s" % (prefix, json.dumps(value)))

    walk("", report)
    return "\n".join(lines) + "\n"
