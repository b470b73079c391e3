# -*- coding: utf-8 -*-

"""Orientation constraints on edges and T-junctions, compiled into a constraint graph over the flip
   order augmented with a bottom and a top element. The strongly connected components of the order
   plus the constraint edges form a quasiorder whose lower sets are exactly the layouts that satisfy
   the constraints.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from rlayouttools.exceptions import ConstraintSpecException
from rlayouttools.options import Chirality
from rlayouttools.flip_lattice import FlipEvent, IdealPartition, PartialOrderP, bottom_rel, build_partial_order, decode
from rlayouttools.plane_graph import ExtendedGraph, edge_key
from rlayouttools.rel_engine import (INCOMING_BLUE, INCOMING_RED, OUTGOING_BLUE, OUTGOING_RED, RELATIONS, EdgeLabel,
                                     FlipItem, RegularEdgeLabeling)

log = logging.getLogger(__name__)

BOTTOM = FlipEvent(FlipItem('bottom', ()), -1)
TOP = FlipEvent(FlipItem('top', ()), -1)

SIDES = ('left', 'right', 'top', 'bottom')

# Where the flat rectangle sits, from the type both of its triangle edges have at it.
_SIDE_OF_TYPE = {OUTGOING_RED: 'bottom', INCOMING_RED: 'top', OUTGOING_BLUE: 'left', INCOMING_BLUE: 'right'}


@dataclass(frozen=True)
class EdgeConstraintSpec:
    u: str
    v: str
    forbidden: FrozenSet[str]


@dataclass(frozen=True)
class JunctionConstraintSpec:
    triangle: Tuple[str, str, str]
    forbidden: FrozenSet[Tuple[str, str]]


@dataclass(frozen=True)
class ConstraintSpecs:
    edges: Tuple[EdgeConstraintSpec, ...] = ()
    junctions: Tuple[JunctionConstraintSpec, ...] = ()

    def __len__(self) -> int:
        return len(self.edges) + len(self.junctions)

    def to_json(self) -> dict:
        return {"edges": [{"u": c.u, "v": c.v, "forbid": sorted(c.forbidden)} for c in self.edges],
                "junctions": [{"triangle": list(c.triangle),
                               "forbid": [{"flat": f, "side": s} for f, s in sorted(c.forbidden)]}
                              for c in self.junctions]}


@dataclass(frozen=True)
class ResidueConstraint:
    item: FlipItem
    forbidden_residues: FrozenSet[int]


@dataclass(frozen=True)
class ConstraintEdgeSet:
    '''Constraint edges contributed by one source: a forbidden junction configuration, or a statically
       violated edge constraint (which contributes the edge between bottom and top).'''
    source: str
    pairs: Tuple[Tuple[FlipEvent, FlipEvent], ...]

    def families(self) -> List[Tuple[str, int, str, int]]:
        '''The pairs grouped as (x, i mod 4, y, j mod 4).'''
        return sorted({(str(a.item), a.index % 4, str(b.item), b.index % 4) for a, b in self.pairs})


@dataclass
class CompiledConstraints:
    residues: List[ResidueConstraint] = field(default_factory=list)
    edge_sets: List[ConstraintEdgeSet] = field(default_factory=list)

    @property
    def statically_infeasible(self) -> bool:
        return any((BOTTOM, TOP) in s.pairs for s in self.edge_sets)


def junction_configuration(r: RegularEdgeLabeling, triangle: Sequence[str]) -> Tuple[str, str]:
    '''The (flat rectangle, side) orientation of the T-junction of a triangular face.'''
    return _configuration_from_labels(triangle, {edge_key(a, b): r.label(a, b) for a, b in _triangle_edges(triangle)})


def _triangle_edges(triangle: Sequence[str]) -> List[Tuple[str, str]]:
    a, b, c = triangle
    return [(a, b), (b, c), (a, c)]


def _configuration_from_labels(triangle: Sequence[str], labels: Dict) -> Tuple[str, str]:
    for v in triangle:
        types = {labels[edge_key(v, w)].type_at(v) for w in triangle if w != v}
        if len(types) == 1:
            return v, _SIDE_OF_TYPE[types.pop()]
    raise ValueError("Triangle {} has no T-junction".format(list(triangle)))


def satisfies(r: RegularEdgeLabeling, specs: ConstraintSpecs) -> bool:
    '''Direct check of a layout against the constraints.'''
    for c in specs.edges:
        if r.label(c.u, c.v).relation(c.u) in c.forbidden:
            return False
    for j in specs.junctions:
        if junction_configuration(r, j.triangle) in j.forbidden:
            return False
    return True


def _controlling_items(g: ExtendedGraph, items: Set[FlipItem], u: str, v: str) -> List[FlipItem]:
    edge_item = FlipItem('edge', edge_key(u, v))
    if edge_item in items:
        return [edge_item]
    return [FlipItem('vertex', (w,)) for w in (u, v) if FlipItem('vertex', (w,)) in items]


def _label_after(label: EdgeLabel, flips: int) -> EdgeLabel:
    for _ in range(flips % 4):
        label = label.rotated(Chirality.ccw)
    return label


def check_specs(g: ExtendedGraph, specs: ConstraintSpecs, allow_corners: bool = False) -> None:
    """Rejects constraints that do not refer to the graph.

       :param g: the graph
       :param specs: the constraints
       :param allow_corners: accept constraints touching a corner; the corners of a split-off piece are
                             vertices of the graph it came from

       :raises ConstraintSpecException: on the first constraint that does not fit
    """
    facial = {frozenset(f) for f in g.graph.faces if len(f) == 3}
    for c in specs.edges:
        if not g.graph.has_edge(c.u, c.v) or edge_key(c.u, c.v) in g.outer_edges:
            raise ConstraintSpecException("Constraint on {}-{}, which is not an inner edge".format(c.u, c.v))
        if not allow_corners and (g.is_corner(c.u) or g.is_corner(c.v)):
            raise ConstraintSpecException("Constraint on {}-{}, which touches a corner".format(c.u, c.v))
        unknown = set(c.forbidden) - set(RELATIONS)
        if unknown:
            raise ConstraintSpecException("Unknown edge labels {} on {}-{}".format(sorted(unknown), c.u, c.v))
    for j in specs.junctions:
        if len(set(j.triangle)) != 3 or frozenset(j.triangle) not in facial:
            raise ConstraintSpecException("Junction constraint on {}, which is not a triangular face".format(list(j.triangle)))
        if any(edge_key(a, b) in g.outer_edges for a, b in _triangle_edges(j.triangle)):
            raise ConstraintSpecException("Junction constraint on {} uses an outer edge".format(list(j.triangle)))
        if not allow_corners and any(g.is_corner(v) for v in j.triangle):
            raise ConstraintSpecException("Junction constraint on {} touches a corner".format(list(j.triangle)))
        for flat, side in j.forbidden:
            if flat not in j.triangle or side not in SIDES:
                raise ConstraintSpecException("Unknown junction configuration ({}, {})".format(flat, side))


def compile_constraints(g: ExtendedGraph, bottom: RegularEdgeLabeling, order: PartialOrderP,
                        specs: ConstraintSpecs) -> CompiledConstraints:
    """Translates constraints into forbidden residues of flipping numbers and junction edge sets.

       :param g: the graph
       :param bottom: the minimal layout, which anchors every residue
       :param order: the flip order of the graph
       :param specs: the constraints

       :returns: compiled constraints
    """
    check_specs(g, specs, allow_corners=True)
    totals = order.flip_totals
    items = set(totals)
    compiled = CompiledConstraints()

    forbidden: Dict[FlipItem, Set[int]] = {}
    for c in specs.edges:
        base = bottom.label(c.u, c.v)
        controllers = _controlling_items(g, items, c.u, c.v)
        if len(controllers) == 0:
            if base.relation(c.u) in c.forbidden:
                compiled.edge_sets.append(ConstraintEdgeSet("edge {}-{} is fixed to {}".format(
                    c.u, c.v, base.relation(c.u)), ((BOTTOM, TOP),)))
            continue
        for item in controllers:
            for k in range(4):
                if _label_after(base, k).relation(c.u) in c.forbidden:
                    forbidden.setdefault(item, set()).add(k)
    compiled.residues = [ResidueConstraint(item, frozenset(ks)) for item, ks in sorted(forbidden.items())]

    for j in specs.junctions:
        compiled.edge_sets.extend(_junction_edge_sets(g, bottom, order, items, j))
    log.debug("Compiled %d residue constraints and %d edge sets", len(compiled.residues), len(compiled.edge_sets))
    return compiled


def _junction_edge_sets(g: ExtendedGraph, bottom: RegularEdgeLabeling, order: PartialOrderP,
                        items: Set[FlipItem], spec: JunctionConstraintSpec) -> List[ConstraintEdgeSet]:
    '''The flips touching a triangle form a chain; the junction configuration only depends on how much
       of that chain lies in the lower set. Forbidding a configuration forbids the cuts of the chain
       that produce it.'''
    edges = _triangle_edges(spec.triangle)
    controls = {e: _controlling_items(g, items, *e) for e in edges}
    on_triangle = {x for xs in controls.values() for x in xs}
    linear = [e for e in nx.lexicographical_topological_sort(order.graph) if e.item in on_triangle]
    chain = [BOTTOM] + linear + [TOP]

    labels = {edge_key(a, b): bottom.label(a, b) for a, b in edges}
    configurations = [_configuration_from_labels(spec.triangle, labels)]
    for event in linear:
        for (a, b), xs in controls.items():
            if event.item in xs:
                labels[edge_key(a, b)] = labels[edge_key(a, b)].rotated(Chirality.ccw)
        configurations.append(_configuration_from_labels(spec.triangle, labels))

    result = []
    for configuration in sorted(spec.forbidden):
        pairs = tuple((chain[s], chain[s + 1]) for s, found in enumerate(configurations) if found == configuration)
        if pairs:
            result.append(ConstraintEdgeSet("junction {} {}".format("-".join(spec.triangle), configuration), pairs))
    return result


class AugmentedOrder:

    def __init__(self, base: PartialOrderP):
        self.base = base
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from([BOTTOM, TOP])
        self.graph.add_edges_from(base.covers)
        for e in base.elements:
            if base.graph.in_degree(e) == 0:
                self.graph.add_edge(BOTTOM, e)
            if base.graph.out_degree(e) == 0:
                self.graph.add_edge(e, TOP)
        if len(base.elements) == 0:
            self.graph.add_edge(BOTTOM, TOP)

    @property
    def elements(self) -> List[FlipEvent]:
        return [BOTTOM] + list(self.base.elements) + [TOP]

    def total(self, item: FlipItem) -> int:
        return self.base.flip_totals.get(item, 0)


def residue_edges(aug: AugmentedOrder, constraint: ResidueConstraint) -> List[Tuple[FlipEvent, FlipEvent]]:
    '''Constraint edges for one item: the flipping number may not stop at a forbidden residue.'''
    x = constraint.item
    m = aug.total(x)
    forbidden = constraint.forbidden_residues
    pairs = []
    if m == 0:
        if 0 in forbidden:
            pairs.append((BOTTOM, TOP))
        return pairs
    if 0 in forbidden:
        pairs.append((BOTTOM, FlipEvent(x, 0)))
    for i in range(m):
        if (i + 1) % 4 in forbidden:
            upper = FlipEvent(x, i + 1) if i + 1 < m else TOP
            pairs.append((FlipEvent(x, i), upper))
    return pairs


def build_constraint_graph(aug: AugmentedOrder, residues: Sequence[ResidueConstraint],
                           edge_sets: Sequence[ConstraintEdgeSet]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(aug.elements)
    for constraint in residues:
        graph.add_edges_from(residue_edges(aug, constraint))
    for edge_set in edge_sets:
        graph.add_edges_from(edge_set.pairs)
    return graph


@dataclass
class QuasiorderQ:
    component_of: Dict[FlipEvent, int]
    dag: nx.DiGraph
    bottom_component: int
    top_component: int
    members: Dict[int, FrozenSet[FlipEvent]]

    @property
    def component_count(self) -> int:
        return self.dag.number_of_nodes()

    def partition(self, components) -> IdealPartition:
        lower = frozenset(e for c in components for e in self.members[c] if e not in (BOTTOM, TOP))
        everything = {e for es in self.members.values() for e in es if e not in (BOTTOM, TOP)}
        return IdealPartition(lower, frozenset(everything - lower))


def build_quasiorder(aug: AugmentedOrder, constraints: nx.Graph) -> QuasiorderQ:
    '''Strongly connected components of the order together with both directions of every constraint edge.'''
    directed = nx.DiGraph(aug.graph)
    for a, b in constraints.edges():
        directed.add_edge(a, b)
        directed.add_edge(b, a)
    dag = nx.condensation(directed)
    component_of = dict(dag.graph['mapping'])
    members = {c: frozenset(dag.nodes[c]['members']) for c in dag.nodes}
    log.debug("Quasiorder with %d components over %d elements", dag.number_of_nodes(), len(component_of))
    return QuasiorderQ(component_of, dag, component_of[BOTTOM], component_of[TOP], members)


def constrained_layout_exists(q: QuasiorderQ) -> bool:
    by_count = q.component_count >= 2
    by_anchors = q.bottom_component != q.top_component
    assert by_count == by_anchors
    return by_anchors


def constrained_ideals(q: QuasiorderQ, stats: Optional[Counter] = None) -> Iterator[FrozenSet[int]]:
    '''Every lower set of the condensation holding the bottom component but not the top one. Branches
       on the smallest minimal undecided component: take it, or drop it with everything above it.'''
    if not constrained_layout_exists(q):
        return
    stats = stats if stats is not None else Counter()
    key = {c: min(q.members[c]) for c in q.dag.nodes}
    above = {c: nx.descendants(q.dag, c) | {c} for c in q.dag.nodes}

    stack = [(frozenset([q.bottom_component]), frozenset(above[q.top_component]))]
    while stack:
        taken, dropped = stack.pop()
        stats['steps'] += 1
        minimal = []
        for c in q.dag.nodes:
            stats['operations'] += 1
            if c in taken or c in dropped:
                continue
            if all(p in taken for p in q.dag.predecessors(c)):
                minimal.append(c)
        if not minimal:
            stats['emitted'] += 1
            yield taken
            continue
        c = min(minimal, key=lambda comp: key[comp])
        stack.append((taken, dropped | above[c]))
        stack.append((taken | {c}, dropped))


def enumerate_constrained(q: QuasiorderQ, g: ExtendedGraph, order: Optional[PartialOrderP] = None,
                          stats: Optional[Counter] = None) -> Iterator[RegularEdgeLabeling]:
    for components in constrained_ideals(q, stats):
        yield decode(g, q.partition(components), order)


@dataclass
class ConstrainedProblem:
    '''Everything built for one graph and one set of constraints.'''
    graph: ExtendedGraph
    order: PartialOrderP
    compiled: CompiledConstraints
    quasiorder: QuasiorderQ

    def exists(self) -> bool:
        return constrained_layout_exists(self.quasiorder)

    def layouts(self, stats: Optional[Counter] = None) -> Iterator[RegularEdgeLabeling]:
        return enumerate_constrained(self.quasiorder, self.graph, self.order, stats)


def solve(g: ExtendedGraph, specs: ConstraintSpecs, order: Optional[PartialOrderP] = None) -> ConstrainedProblem:
    order = order if order is not None else build_partial_order(g)
    compiled = compile_constraints(g, bottom_rel(g), order, specs)
    aug = AugmentedOrder(order)
    q = build_quasiorder(aug, build_constraint_graph(aug, compiled.residues, compiled.edge_sets))
    return ConstrainedProblem(g, order, compiled, q)
