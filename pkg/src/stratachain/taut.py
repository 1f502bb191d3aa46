"""Surface invariants of taut 2-dimensional complexes.

A 2-complex decomposes into its stratification graph (levels 0 and 1) plus
open surface pieces (the 2-strata).  Each 2-stratum completes to a compact
surface with boundary; its boundary circles attach to the graph by maps that
are, in a taut complex, either constant or locally injective.  The invariant
packages the graph, the surface data, and the attachment labels; two taut
complexes are homeomorphic iff the invariants match under a graph
isomorphism with compatible surface and boundary-word matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .chains import StrataChainComplex, assemble
from .errors import InternalCheckError, NotTautError, UnsupportedDimensionError
from .simplicial import SimplicialComplex, facets_of
from .stratify import Stratification, facet_sign
from .words import (abelianize, canonical_cyclic_word, invert_word, letter,
                    letter_stratum)


# -- attachment labels ----------------------------------------------------

@dataclass(frozen=True, order=True)
class Constant:
    """Constant attachment into the stratum (level, target) holding the point."""

    level: int
    target: int


@dataclass(frozen=True, order=True)
class CircleCover:
    """Covering of a circle 1-stratum; sign is relative to its generator."""

    circle: int
    degree: int
    sign: int


@dataclass(frozen=True, order=True)
class Word:
    """Cyclic word of directed arc letters, stored canonically."""

    letters: tuple


def _invert_attachment(att):
    if isinstance(att, Word):
        return Word(canonical_cyclic_word(invert_word(att.letters)))
    if isinstance(att, CircleCover):
        return CircleCover(att.circle, att.degree, -att.sign)
    return att


def _attachment_key(att):
    if isinstance(att, Constant):
        return (0, att.level, att.target)
    if isinstance(att, CircleCover):
        return (1, att.circle, att.degree, att.sign)
    return (2, att.letters)


# -- completed surfaces ---------------------------------------------------

@dataclass(frozen=True)
class CompletedSurface:
    """Compact surface with boundary whose interior is a 2-stratum.

    Boundary circles are step sequences: ("edge", (a, b)) traverses the
    1-cell {a, b} from a to b, ("pause", v) crosses a corner arc squeezed
    to the vertex v.  For orientable strata every circle runs with the
    orientation induced by the stratum generator.
    """

    stratum_index: int
    euler_characteristic: int
    orientable: bool
    boundary_circles: tuple
    n_vertices: int
    n_edges: int
    n_faces: int


def complete_surface(stratum, strat: Stratification) -> CompletedSurface:
    """Complete a 2-stratum by gluing per-triangle copies along its interior.

    Corners at vertices of X_1 blow up into boundary arcs, so a pinch point
    is pulled apart instead of being re-identified.
    """
    if stratum.level != 2:
        raise ValueError("completion is defined for 2-strata")
    x1 = strat.filtration.level(1).cell_set()
    tris = stratum.cells

    edge_tris = {}
    for t in tris:
        for e in facets_of(t):
            edge_tris.setdefault(e, []).append(t)
    interior_edges = []
    for e, ts in edge_tris.items():
        if e not in x1:
            if len(ts) != 2:
                raise InternalCheckError(
                    "interior edge %r lies in %d stratum triangles" % (e, len(ts)))
            interior_edges.append(e)

    corner_arcs = [(t, v) for t in tris for v in t if (v,) in x1]
    boundary_copies = [(t, e) for t in tris for e in facets_of(t) if e in x1]
    interior_vertices = sorted({v for t in tris for v in t if (v,) not in x1})

    def flag_class(t, e, v):
        if e in x1:
            return ("be", t, e, v)
        return ("ie", e, v)

    nodes = {}
    for (t, v) in corner_arcs:
        for e in facets_of(t):
            if v in e:
                nodes.setdefault(flag_class(t, e, v), []).append(("arc", t, v))
    for (t, e) in boundary_copies:
        for v in e:
            nodes.setdefault(flag_class(t, e, v), []).append(("copy", t, e))
    for node, items in nodes.items():
        if len(items) != 2:
            raise InternalCheckError(
                "boundary vertex %r has %d incident items" % (node, len(items)))

    item_nodes = {}
    for node, items in nodes.items():
        for it in items:
            item_nodes.setdefault(it, []).append(node)
    for it, ns in item_nodes.items():
        if len(ns) != 2:
            raise InternalCheckError("boundary item %r has %d ends" % (it, len(ns)))

    circles = _walk_boundary(item_nodes, nodes)

    step_circles = []
    for circle in circles:
        rich = []
        for it, entry in circle:
            if it[0] == "arc":
                rich.append(("pause", it[2], it[1]))
            else:
                t, e = it[1], it[2]
                ends = item_nodes[it]
                exit_node = ends[1] if ends[0] == entry else ends[0]
                a = entry[3] if entry[0] == "be" else entry[2]
                b = exit_node[3] if exit_node[0] == "be" else exit_node[2]
                if (a, b) != e and (b, a) != e:
                    raise InternalCheckError("edge copy ends mismatch %r" % (it,))
                rich.append(("edge", (a, b), t))
        if stratum.orientable:
            rich = _orient_circle(rich, stratum)
        step_circles.append(tuple((k, d) for k, d, _ in rich))

    n_vertices = len(interior_vertices) + len(nodes)
    n_edges = len(interior_edges) + len(boundary_copies) + len(corner_arcs)
    n_faces = len(tris)
    return CompletedSurface(
        stratum_index=stratum.index,
        euler_characteristic=n_vertices - n_edges + n_faces,
        orientable=stratum.orientable,
        boundary_circles=tuple(step_circles),
        n_vertices=n_vertices, n_edges=n_edges, n_faces=n_faces)


def _walk_boundary(item_nodes, nodes):
    """Split boundary items into cycles; each entry is (item, entry_node)."""
    unvisited = set(item_nodes)
    circles = []
    while unvisited:
        start = min(unvisited)
        entry = min(item_nodes[start])
        circle = []
        it, node_in = start, entry
        while True:
            circle.append((it, node_in))
            unvisited.discard(it)
            ends = item_nodes[it]
            node_out = ends[1] if ends[0] == node_in else ends[0]
            pair = nodes[node_out]
            it = pair[1] if pair[0] == it else pair[0]
            node_in = node_out
            if it == start and node_in == entry:
                break
        circles.append(circle)
    return circles


def _induced_direction(t, e, generator):
    """Boundary direction of edge e induced by the oriented triangle t."""
    s = generator[t] * facet_sign(t, e)
    return e if s > 0 else (e[1], e[0])


def _orient_circle(rich, stratum):
    """Flip a boundary circle to the induced orientation, then verify it.

    Each edge copy must run the way its own oriented triangle directs it.
    """
    gen = stratum.generator

    def induced_ok(seq):
        for kind, data, t in seq:
            if kind != "edge":
                continue
            a, b = data
            e = (a, b) if a < b else (b, a)
            if (a, b) != _induced_direction(t, e, gen):
                return False
        return True

    if not any(k == "edge" for k, _, _ in rich):
        return rich
    flipped = [(k, d if k == "pause" else (d[1], d[0]), t)
               for k, d, t in reversed(rich)]
    for seq in (rich, flipped):
        if induced_ok(seq):
            return seq
    raise InternalCheckError("boundary circle matches no induced orientation")


# -- attachments ----------------------------------------------------------

def _edge_stratum_records(strat: Stratification):
    """Per 1-stratum: (is_circle, size); circles meet no X_0 vertex."""
    x0 = set(strat.filtration.level(0).vertices()) if strat.dimension >= 0 else set()
    records = {}
    for s in strat.level_strata(1):
        verts = {v for c in s.cells for v in c}
        records[s.index] = (not (verts & x0), len(s.cells))
    return records


def _edge_direction_sign(stratum, a, b):
    """+1 when traversing a -> b follows the stratum generator."""
    cell = (a, b) if a < b else (b, a)
    sigma = stratum.generator[cell]
    return sigma if a < b else -sigma


def attaching(steps, strat: Stratification):
    """Classify one boundary circle's attaching map.

    Returns (attachment, taut, edge_cycle).  The attachment is Constant for
    point images, CircleCover for images inside one circle 1-stratum, and a
    Word of directed arc letters otherwise; for a non-taut circle with an
    unreadable word it is None.  ``taut`` is false iff the edge cycle
    backtracks.
    """
    edge_seq = [d for k, d in steps if k == "edge"]
    if not edge_seq:
        pauses = {d for k, d in steps if k == "pause"}
        if len(pauses) != 1:
            raise InternalCheckError("constant circle pausing at %r" % (pauses,))
        (v,) = pauses
        lv, idx = strat.stratum_of_cell((v,))
        if lv not in (0, 1):
            raise InternalCheckError("constant image at level %d" % lv)
        return Constant(lv, idx), True, ()

    n = len(edge_seq)
    for i in range(n):
        if edge_seq[i][1] != edge_seq[(i + 1) % n][0]:
            raise InternalCheckError("boundary edge cycle is not head to tail")
    taut = all(edge_seq[(i + 1) % n] != (edge_seq[i][1], edge_seq[i][0])
               for i in range(n))

    records = _edge_stratum_records(strat)
    strata_1 = {s.index: s for s in strat.level_strata(1)}
    x0 = set(strat.filtration.level(0).vertices())

    placed = []
    for a, b in edge_seq:
        cell = (a, b) if a < b else (b, a)
        lv, idx = strat.stratum_of_cell(cell)
        if lv != 1:
            raise InternalCheckError("boundary edge %r at level %d" % (cell, lv))
        placed.append((idx, _edge_direction_sign(strata_1[idx], a, b)))

    if not any(a in x0 for a, _ in edge_seq):
        indices = {idx for idx, _ in placed}
        if len(indices) == 1 and records[next(iter(indices))][0]:
            idx = next(iter(indices))
            size = records[idx][1]
            winding = sum(sign for (i, sign), (a, b) in zip(placed, edge_seq)
                          if ((a, b) if a < b else (b, a)) == min(strata_1[idx].cells))
            if taut:
                signs = {sign for _, sign in placed}
                if len(signs) != 1 or n % size:
                    raise InternalCheckError("taut circle cover is not monotone")
                return CircleCover(idx, n // size, signs.pop()), True, tuple(edge_seq)
            degree = abs(winding)
            sign = 1 if winding >= 0 else -1
            return CircleCover(idx, degree, sign), False, tuple(edge_seq)
        if taut:
            raise InternalCheckError("taut closed path avoids X_0 off a circle")
        return None, False, tuple(edge_seq)

    cuts = [i for i in range(n) if edge_seq[i][0] in x0]
    first = cuts[0]
    rotated = edge_seq[first:] + edge_seq[:first]
    placed = placed[first:] + placed[:first]
    letters = []
    segment = []
    ok = taut
    for pos, ((a, b), (idx, sign)) in enumerate(zip(rotated, placed)):
        segment.append((idx, sign))
        last = pos == n - 1 or rotated[pos + 1][0] in x0
        if last:
            idxs = {i for i, _ in segment}
            signs = {s for _, s in segment}
            if len(idxs) == 1 and len(signs) == 1:
                idx = idxs.pop()
                if len(segment) == records[idx][1]:
                    letters.append(letter(idx, signs.pop()))
                else:
                    ok = False
            else:
                ok = False
            segment = []
    if not ok:
        if taut:
            raise InternalCheckError("taut circle with a partial arc traversal")
        return None, False, tuple(edge_seq)
    return Word(canonical_cyclic_word(tuple(letters))), taut, tuple(edge_seq)


# -- invariant ------------------------------------------------------------

@dataclass(frozen=True)
class GraphArc:
    """A 1-stratum with endpoints; tail and head follow its generator."""

    index: int
    tail: int
    head: int

    @property
    def is_loop(self):
        return self.tail == self.head


@dataclass(frozen=True)
class GraphInvariant:
    """The stratification graph: 0-strata, arcs, free-floating circles."""

    vertices: tuple
    arcs: tuple
    circles: tuple
    loops_at_vertex: tuple  # sorted (vertex, count) pairs

    def degree(self, v):
        return sum((a.tail == v) + (a.head == v) for a in self.arcs)


@dataclass(frozen=True)
class SurfaceData:
    """One 2-stratum: completion shape plus canonical attachment labels."""

    index: int
    euler_characteristic: int
    orientable: bool
    attachments: tuple


@dataclass(frozen=True)
class TautInvariant:
    """Graph plus surface data; the homeomorphism type determines it.

    boundary_matrix holds the abelianized attaching data: one row per
    1-stratum, one column per orientable 2-stratum (column order in
    boundary_columns).  It equals the stratum boundary map C_2 -> C_1.
    """

    graph: GraphInvariant
    surfaces: tuple
    boundary_matrix: tuple
    boundary_columns: tuple


def graph_invariant(strat: Stratification) -> GraphInvariant:
    """Assemble the level-0/1 data; arcs are directed by their generators."""
    verts = tuple(s.index for s in strat.level_strata(0))
    vertex_of = {}
    for s in strat.level_strata(0):
        vertex_of[s.cells[0][0]] = s.index
    arcs = []
    circles = []
    x0 = set(vertex_of)
    for s in strat.level_strata(1):
        outs = {}
        for (u, v) in s.cells:
            a, b = (u, v) if s.generator[(u, v)] > 0 else (v, u)
            outs[a] = b
        svs = {w for c in s.cells for w in c}
        if not (svs & x0):
            circles.append(s.index)
            continue
        starts = [w for w in outs if w in x0]
        if len(starts) != 1:
            raise InternalCheckError(
                "arc stratum %d has %d generator sources in X_0"
                % (s.index, len(starts)))
        tail = starts[0]
        cur, count = tail, 0
        while True:
            cur = outs[cur]
            count += 1
            if cur in x0:
                break
        if count != len(s.cells):
            raise InternalCheckError("arc stratum %d walk is incomplete" % s.index)
        arcs.append(GraphArc(s.index, vertex_of[tail], vertex_of[cur]))
    loops = {}
    for a in arcs:
        if a.is_loop:
            loops[a.tail] = loops.get(a.tail, 0) + 1
    return GraphInvariant(vertices=verts, arcs=tuple(arcs), circles=tuple(circles),
                          loops_at_vertex=tuple(sorted(loops.items())))


def _surface_records(strat: Stratification):
    """(stratum, completion, attachments, offenders) for every 2-stratum."""
    out = []
    for s in strat.level_strata(2):
        comp = complete_surface(s, strat)
        atts = []
        offenders = []
        for ci, circle in enumerate(comp.boundary_circles):
            att, taut, cycle = attaching(circle, strat)
            atts.append(att)
            if not taut:
                offenders.append((s.index, ci, cycle))
        out.append((s, comp, tuple(atts), tuple(offenders)))
    return out


def check_taut(strat):
    """(taut, offenders): offenders list (stratum, circle, edge cycle).

    Accepts a stratification or a bare complex.
    """
    if isinstance(strat, SimplicialComplex):
        strat = Stratification(strat)
    if strat.dimension > 2:
        raise UnsupportedDimensionError(
            "tautness is defined for complexes of dimension <= 2")
    offenders = []
    for _, _, _, off in _surface_records(strat):
        offenders.extend(off)
    return not offenders, tuple(offenders)


def build_invariant(strat,
                    chain: StrataChainComplex = None) -> TautInvariant:
    """Invariant of a taut complex of dimension <= 2.

    Accepts a stratification or a bare complex.  Raises NotTautError with
    the offending circles otherwise.  The abelianized boundary words of
    every orientable 2-stratum are checked against the stratum boundary
    matrix before returning.
    """
    if isinstance(strat, SimplicialComplex):
        strat = Stratification(strat)
    if strat.dimension > 2:
        raise UnsupportedDimensionError(
            "the surface invariant covers dimension <= 2")
    records = _surface_records(strat)
    offenders = [o for _, _, _, off in records for o in off]
    if offenders:
        raise NotTautError(offenders)
    graph = graph_invariant(strat)
    surfaces = []
    for s, comp, atts, _ in records:
        surfaces.append(SurfaceData(
            index=s.index,
            euler_characteristic=comp.euler_characteristic,
            orientable=s.orientable,
            attachments=tuple(sorted(atts, key=_attachment_key))))
    n1 = len(strat.level_strata(1))
    columns = tuple(s.index for s in surfaces if s.orientable)
    matrix = tuple(_abelianized_column(s, n1) for s in surfaces if s.orientable)
    inv = TautInvariant(graph=graph, surfaces=tuple(surfaces),
                        boundary_matrix=_transposed(matrix, n1),
                        boundary_columns=columns)
    if chain is None:
        chain = assemble(strat)
    verify_abelianized_words(strat, chain, inv)
    return inv


def _abelianized_column(surf, n1):
    net = [0] * n1
    for att in surf.attachments:
        if isinstance(att, Word):
            for i, c in enumerate(abelianize(att.letters, n1)):
                net[i] += c
        elif isinstance(att, CircleCover):
            net[att.circle] += att.degree * att.sign
    return tuple(net)


def _transposed(columns, n_rows):
    return tuple(tuple(col[r] for col in columns) for r in range(n_rows))


def verify_abelianized_words(strat, chain, inv) -> None:
    """Check: the abelianized attaching data of every orientable 2-stratum
    reproduces its boundary column.  Raises InternalCheckError on any
    mismatch."""
    if strat.dimension < 2 or len(chain.dims) < 3:
        return
    axes1 = list(chain.axes[1])
    axes2 = list(chain.axes[2])
    if axes1 != sorted(s.index for s in strat.level_strata(1)):
        raise InternalCheckError("a 1-stratum is missing from the chain axes")
    boundary = chain.boundaries[1]
    for j, index in enumerate(inv.boundary_columns):
        col = axes2.index(index)
        for row, axis in enumerate(axes1):
            if boundary.entry(row, col) != inv.boundary_matrix[axis][j]:
                raise InternalCheckError(
                    "abelianized words of stratum %d disagree with its "
                    "boundary column" % index)


# -- homeomorphism decision ----------------------------------------------

def homeomorphic(a: TautInvariant, b: TautInvariant):
    """Decide invariant equality up to the allowed symmetries.

    Searches graph isomorphisms (vertex and arc bijections; loops and
    circles carry a free direction), surface matchings by (chi,
    orientability, boundary count), and per-surface word matchings with one
    simultaneous inversion for orientable strata and per-component
    inversion for non-orientable ones.  Returns (verdict, certificate).
    """
    ga, gb = a.graph, b.graph
    if (len(ga.vertices) != len(gb.vertices) or len(ga.arcs) != len(gb.arcs)
            or len(ga.circles) != len(gb.circles)
            or len(a.surfaces) != len(b.surfaces)):
        return False, None
    shape = lambda inv: sorted((s.euler_characteristic, s.orientable,
                                len(s.attachments)) for s in inv.surfaces)
    if shape(a) != shape(b):
        return False, None

    for vmap in _vertex_bijections(ga, gb):
        for arc_map in _arc_bijections(ga, gb, vmap):
            free = ([idx for idx, (_, flip) in arc_map.items() if flip == 0]
                    + list(ga.circles))
            for circ_perm in permutations(gb.circles):
                circle_map = dict(zip(ga.circles, circ_perm))
                for dirs in product((1, -1), repeat=len(free)):
                    flips = dict(zip(free, dirs))
                    emap = {}
                    for idx, (tgt, flip) in arc_map.items():
                        emap[idx] = (tgt, flip if flip else flips[idx])
                    for idx, tgt in circle_map.items():
                        emap[idx] = (tgt, flips[idx])
                    cert = _match_surfaces(a, b, vmap, emap)
                    if cert is not None:
                        return True, {
                            "vertex_map": dict(vmap),
                            "edge_map": {k: list(v) for k, v in emap.items()},
                            "surface_map": cert,
                        }
    return False, None


def _vertex_bijections(ga, gb):
    va, vb = list(ga.vertices), list(gb.vertices)
    loops_a = dict(ga.loops_at_vertex)
    loops_b = dict(gb.loops_at_vertex)
    for perm in permutations(vb):
        vmap = dict(zip(va, perm))
        if all(ga.degree(v) == gb.degree(vmap[v])
               and loops_a.get(v, 0) == loops_b.get(vmap[v], 0) for v in va):
            yield vmap


def _arc_bijections(ga, gb, vmap):
    """Maps arc index -> (target index, direction); 0 means free (loop)."""
    groups_a = {}
    for arc in ga.arcs:
        key = tuple(sorted((vmap[arc.tail], vmap[arc.head])))
        groups_a.setdefault(key, []).append(arc)
    groups_b = {}
    for arc in gb.arcs:
        key = tuple(sorted((arc.tail, arc.head)))
        groups_b.setdefault(key, []).append(arc)
    if set(groups_a) != set(groups_b):
        return
    if any(len(groups_a[k]) != len(groups_b[k]) for k in groups_a):
        return
    keys = sorted(groups_a)
    per_key = []
    for k in keys:
        per_key.append([list(zip(groups_a[k], p))
                        for p in permutations(groups_b[k])])
    for combo in product(*per_key):
        out = {}
        ok = True
        for pairs in combo:
            for arc_a, arc_b in pairs:
                if arc_a.is_loop:
                    out[arc_a.index] = (arc_b.index, 0)
                elif (vmap[arc_a.tail], vmap[arc_a.head]) == (arc_b.tail, arc_b.head):
                    out[arc_a.index] = (arc_b.index, 1)
                elif (vmap[arc_a.tail], vmap[arc_a.head]) == (arc_b.head, arc_b.tail):
                    out[arc_a.index] = (arc_b.index, -1)
                else:
                    ok = False
        if ok:
            yield out


def _transport(att, vmap, emap):
    if isinstance(att, Constant):
        if att.level == 0:
            return Constant(0, vmap[att.target])
        return Constant(1, emap[att.target][0])
    if isinstance(att, CircleCover):
        tgt, flip = emap[att.circle]
        return CircleCover(tgt, att.degree, att.sign * flip)
    out = []
    for x in att.letters:
        tgt, flip = emap[letter_stratum(x)]
        out.append(letter(tgt, (1 if x > 0 else -1) * flip))
    return Word(canonical_cyclic_word(tuple(out)))


def _match_surfaces(a, b, vmap, emap):
    classes = {}
    for s in b.surfaces:
        classes.setdefault((s.euler_characteristic, s.orientable,
                            len(s.attachments)), []).append(s)
    grouped_a = {}
    for s in a.surfaces:
        grouped_a.setdefault((s.euler_characteristic, s.orientable,
                              len(s.attachments)), []).append(s)
    keys = sorted(grouped_a)
    per_key = []
    for k in keys:
        per_key.append([list(zip(grouped_a[k], p))
                        for p in permutations(classes[k])])
    for combo in product(*per_key):
        cert = {}
        ok = True
        for pairs in combo:
            for sa, sb in pairs:
                rho = _attachments_match(sa, sb, vmap, emap)
                if rho is None:
                    ok = False
                    break
                cert[sa.index] = [sb.index, rho]
            if not ok:
                break
        if ok:
            return cert
    return None


def _attachments_match(sa, sb, vmap, emap):
    """Inversion mode making the transported labels agree, or None."""
    moved = [_transport(att, vmap, emap) for att in sa.attachments]
    target = sorted(_attachment_key(att) for att in sb.attachments)
    if sa.orientable:
        for rho in (1, -1):
            cand = moved if rho == 1 else [_invert_attachment(m) for m in moved]
            if sorted(_attachment_key(c) for c in cand) == target:
                return rho
        return None
    fold = lambda att: min(_attachment_key(att),
                           _attachment_key(_invert_attachment(att)))
    if sorted(fold(m) for m in moved) == sorted(fold(att) for att in sb.attachments):
        return 0
    return None
