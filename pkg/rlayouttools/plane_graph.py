# -*- coding: utf-8 -*-

"""Plane graphs with a fixed combinatorial embedding (a clockwise rotation system per vertex),
   extended graphs with a corner assignment, and separating three- and four-cycles.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import itertools
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx
from iteration_utilities import duplicates

from rlayouttools.exceptions import ImproperGraphException, MalformedGraphException
from rlayouttools.validation_report import ValidationReport, ViolationCode

log = logging.getLogger(__name__)

CORNER_SIDES = ('l', 't', 'r', 'b')

Edge = Tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


def canonical_cycle(vertices: Sequence[str]) -> Tuple[str, ...]:
    '''Rotates a cyclic sequence so that it starts at its smallest vertex; orientation is kept.'''
    vertices = tuple(vertices)
    start = vertices.index(min(vertices))
    return vertices[start:] + vertices[:start]


class PlaneGraph:

    def __init__(self, rotation: Mapping[str, Sequence[str]], outer: Optional[Sequence[str]] = None):
        """constructor

           :param rotation: clockwise cyclic sequence of neighbors for every vertex
           :param outer: optional face to use as the outer face (any starting vertex, clockwise)

           :raises MalformedGraphException: if the rotation system is inconsistent or not planar
        """
        self.rotation: Dict[str, Tuple[str, ...]] = {str(v): tuple(str(w) for w in ns) for v, ns in rotation.items()}
        _check_structure(self.rotation)
        self.vertices: Tuple[str, ...] = tuple(sorted(self.rotation))
        self._position = {v: {w: i for i, w in enumerate(ns)} for v, ns in self.rotation.items()}
        self.edges: Tuple[Edge, ...] = tuple(sorted({edge_key(v, w) for v, ns in self.rotation.items() for w in ns}))
        self._edge_set = set(self.edges)
        self.faces, self._face_of_dart = self._trace_faces()
        euler = len(self.vertices) - len(self.edges) + len(self.faces)
        if euler != 2:
            raise MalformedGraphException(
                "Rotation system is not planar: V - E + F = {} instead of 2".format(euler))
        self.outer_face = self._choose_outer_face(outer)

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return self.rotation[v]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._edge_set

    def cw_next(self, v: str, u: str) -> str:
        '''Neighbor of v that follows u in clockwise order.'''
        ns = self.rotation[v]
        return ns[(self._position[v][u] + 1) % len(ns)]

    def ccw_next(self, v: str, u: str) -> str:
        ns = self.rotation[v]
        return ns[(self._position[v][u] - 1) % len(ns)]

    def cw_arc(self, v: str, start: str, end: str) -> List[str]:
        '''Neighbors of v strictly between start and end, walking clockwise from start.'''
        ns = self.rotation[v]
        k = (self._position[v][start] + 1) % len(ns)
        arc = []
        while ns[k] != end:
            arc.append(ns[k])
            k = (k + 1) % len(ns)
        return arc

    def face_of(self, u: str, v: str) -> Tuple[str, ...]:
        '''The face to the left of the dart u -> v.'''
        return self.faces[self._face_of_dart[(u, v)]]

    def triangles(self) -> List[Tuple[str, str, str]]:
        result = []
        for u, v in self.edges:
            for w in self.rotation[u]:
                if w > v and self.has_edge(v, w):
                    result.append((u, v, w))
        return sorted(result)

    def four_cycles(self) -> Iterator[Tuple[str, str, str, str]]:
        '''Every 4-cycle exactly once, as (a, b, c, d) with a the smallest vertex and b < d.'''
        for a in self.vertices:
            paths = defaultdict(list)
            for b in self.rotation[a]:
                if b < a:
                    continue
                for c in self.rotation[b]:
                    if c > a:
                        paths[c].append(b)
            for c in sorted(paths):
                for b, d in itertools.combinations(sorted(paths[c]), 2):
                    yield (a, b, c, d)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def _trace_faces(self) -> Tuple[List[Tuple[str, ...]], Dict[Edge, int]]:
        seen: Set[Edge] = set()
        traced = []
        for dart in sorted((v, w) for v, ns in self.rotation.items() for w in ns):
            if dart in seen:
                continue
            face = []
            darts = []
            current = dart
            while current not in seen:
                seen.add(current)
                darts.append(current)
                face.append(current[0])
                u, v = current
                current = (v, self.cw_next(v, u))
            traced.append((canonical_cycle(face), darts))

        traced.sort(key=lambda item: item[0])
        face_of_dart = {d: i for i, (_, darts) in enumerate(traced) for d in darts}
        return [face for face, _ in traced], face_of_dart

    def _choose_outer_face(self, outer: Optional[Sequence[str]]) -> Tuple[str, ...]:
        if outer is not None:
            wanted = canonical_cycle([str(v) for v in outer])
            if wanted not in self.faces:
                raise MalformedGraphException("Outer face {} is not a face of the embedding".format(list(outer)))
            return wanted
        return min(self.faces, key=lambda f: (-len(f), f))


def _check_structure(rotation: Dict[str, Tuple[str, ...]]) -> None:
    if len(rotation) == 0:
        raise MalformedGraphException("Graph has no vertices")

    problems = []
    for v in sorted(rotation):
        ns = rotation[v]
        if v in ns:
            problems.append("loop at {}".format(v))
        for w in sorted(set(duplicates(ns))):
            problems.append("parallel edges between {} and {}".format(v, w))
        for w in ns:
            if w not in rotation:
                problems.append("{} has unknown neighbor {}".format(v, w))
            elif v not in rotation[w]:
                problems.append("{} lists {} but not vice versa".format(v, w))

    if len(problems) == 0:
        graph = nx.Graph()
        graph.add_nodes_from(rotation)
        graph.add_edges_from((v, w) for v, ns in rotation.items() for w in ns)
        if not nx.is_connected(graph):
            problems.append("graph is not connected")

    if len(problems) > 0:
        raise MalformedGraphException("Malformed rotation system: " + "; ".join(problems))


class ExtendedGraph:

    def __init__(self, graph: PlaneGraph, corners: Mapping[str, str]):
        """constructor

           :param graph: the embedded graph, corner vertices included
           :param corners: mapping from each of l, t, r, b to a vertex of the graph
        """
        if set(corners) != set(CORNER_SIDES):
            raise MalformedGraphException("Corners must be given for exactly l, t, r and b")
        if len(set(corners.values())) != 4:
            raise MalformedGraphException("Corner vertices must be distinct")
        for side in CORNER_SIDES:
            if corners[side] not in graph.rotation:
                raise MalformedGraphException("Corner {} is not a vertex: {}".format(side, corners[side]))

        self.graph = graph
        self.corners: Dict[str, str] = {side: str(corners[side]) for side in CORNER_SIDES}
        self._side_of = {v: side for side, v in self.corners.items()}
        self.outer_quad: Tuple[str, ...] = tuple(self.corners[side] for side in CORNER_SIDES)
        self.outer_edges: FrozenSet[Edge] = frozenset(
            edge_key(self.outer_quad[i], self.outer_quad[(i + 1) % 4]) for i in range(4))
        self.inner_vertices: Tuple[str, ...] = tuple(v for v in graph.vertices if v not in self._side_of)
        self.inner_edges: Tuple[Edge, ...] = tuple(e for e in graph.edges if e not in self.outer_edges)

    @property
    def rotation(self) -> Dict[str, Tuple[str, ...]]:
        return self.graph.rotation

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.graph.vertices

    @property
    def outer_face(self) -> Tuple[str, ...]:
        l, t = self.corners['l'], self.corners['t']
        if self.graph.has_edge(l, t):
            return self.graph.face_of(l, t)
        return self.graph.outer_face

    def corner_side(self, v: str) -> Optional[str]:
        return self._side_of.get(v)

    def is_corner(self, v: str) -> bool:
        return v in self._side_of

    def relabel_corners(self, corners: Mapping[str, str]) -> 'ExtendedGraph':
        return ExtendedGraph(self.graph, corners)


@dataclass(frozen=True)
class CycleRecord:
    '''A cycle listed clockwise around its interior, starting at its smallest vertex.'''
    vertices: Tuple[str, ...]
    interior: FrozenSet[str]
    exterior_size: int

    @property
    def interior_size(self) -> int:
        return len(self.interior)

    @property
    def is_separating(self) -> bool:
        return self.interior_size > 0 and self.exterior_size > 0

    @property
    def is_trivial(self) -> bool:
        return self.interior_size <= 1

    def avoids(self, vertices) -> bool:
        return not any(v in vertices for v in self.vertices)

    def to_json(self) -> dict:
        return {"cycle": list(self.vertices), "interior": sorted(self.interior),
                "interior_size": self.interior_size, "trivial": self.is_trivial}


def split_cycle(graph: PlaneGraph, cycle: Sequence[str], outer_face: Optional[Sequence[str]] = None) -> CycleRecord:
    '''Splits the vertices not on a simple cycle into the interior and the exterior. The exterior
       is the side holding the outer face.'''
    cycle = tuple(cycle)
    outer_face = tuple(outer_face) if outer_face is not None else graph.outer_face
    on_cycle = set(cycle)
    k = len(cycle)

    left_seeds, right_seeds = [], []
    for i, c in enumerate(cycle):
        prev, nxt = cycle[i - 1], cycle[(i + 1) % k]
        right_seeds.extend(w for w in graph.cw_arc(c, nxt, prev) if w not in on_cycle)
        left_seeds.extend(w for w in graph.cw_arc(c, prev, nxt) if w not in on_cycle)

    sides, complete = _lockstep_sides(graph, on_cycle, left_seeds, right_seeds)
    small = sides[complete]

    forward = {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    outer_darts = {(outer_face[i], outer_face[(i + 1) % len(outer_face)]) for i in range(len(outer_face))}
    # The outer face lies left of its own darts.
    if complete == 0:
        small_has_outer = bool(forward & outer_darts)
    else:
        small_has_outer = bool({(b, a) for a, b in forward} & outer_darts)
    small_has_outer = small_has_outer or any(v in small for v in outer_face)

    if small_has_outer:
        interior = frozenset(v for v in graph.vertices if v not in small and v not in on_cycle)
        interior_on_left = complete == 1
    else:
        interior = frozenset(small)
        interior_on_left = complete == 0

    oriented = tuple(reversed(cycle)) if interior_on_left else cycle
    exterior_size = len(graph.vertices) - len(interior) - k
    return CycleRecord(canonical_cycle(oriented), interior, exterior_size)


def _lockstep_sides(graph: PlaneGraph, blocked: Set[str], seeds_left: List[str], seeds_right: List[str]):
    '''Grows both sides of a cycle one vertex at a time and stops as soon as one side is exhausted.
       Returns the sides and the index of the exhausted one.'''
    sides = [set(seeds_left), set(seeds_right)]
    queues = [deque(sorted(sides[0])), deque(sorted(sides[1]))]
    while True:
        for s in (0, 1):
            if not queues[s]:
                return sides, s
            v = queues[s].popleft()
            for w in graph.rotation[v]:
                if w not in blocked and w not in sides[s]:
                    sides[s].add(w)
                    queues[s].append(w)


def interior_edges(graph: PlaneGraph, record: CycleRecord) -> FrozenSet[Edge]:
    '''Edges strictly inside a cycle, chords included.'''
    cycle = record.vertices
    k = len(cycle)
    edges = set()
    for i, c in enumerate(cycle):
        for w in graph.cw_arc(c, cycle[(i + 1) % k], cycle[i - 1]):
            edges.add(edge_key(c, w))
    for v in record.interior:
        for w in graph.rotation[v]:
            edges.add(edge_key(v, w))
    return frozenset(edges)


def interior_of(graph: PlaneGraph, cycle: Sequence[str],
                outer_face: Optional[Sequence[str]] = None) -> Tuple[FrozenSet[str], FrozenSet[str], FrozenSet[Edge]]:
    '''Interior vertices, exterior vertices and interior edges of a simple cycle.'''
    record = split_cycle(graph, cycle, outer_face)
    on_cycle = set(record.vertices)
    exterior = frozenset(v for v in graph.vertices if v not in on_cycle and v not in record.interior)
    return record.interior, exterior, interior_edges(graph, record)


def faces(graph: PlaneGraph) -> List[Tuple[str, ...]]:
    '''All faces, each a cyclic vertex sequence with the face on its left; the outer face is graph.outer_face.'''
    return list(graph.faces)


def validate_extended(g: ExtendedGraph) -> ValidationReport:
    report = ValidationReport()
    graph = g.graph
    l, t, r, b = g.outer_quad

    outer = None
    if graph.has_edge(l, t) and graph.face_of(l, t) == canonical_cycle(g.outer_quad):
        outer = graph.face_of(l, t)
    else:
        reversed_quad = canonical_cycle((l, b, r, t))
        if reversed_quad in graph.faces:
            outer = reversed_quad
            report.add(ViolationCode.CORNER_ORDER, g.outer_quad,
                       "Corners appear on the outer face in the order l, b, r, t instead of l, t, r, b")
        else:
            outer = graph.outer_face
            report.add(ViolationCode.OUTER_NOT_QUAD, outer,
                       "Outer face {} is not the quadrilateral l, t, r, b".format(list(outer)))

    for face in graph.faces:
        if face != outer and len(face) != 3:
            report.add(ViolationCode.NON_TRIANGULAR_FACE, face,
                       "Inner face {} has {} vertices".format(list(face), len(face)))

    if len(g.inner_vertices) == 0:
        report.add(ViolationCode.NO_INNER_VERTEX, (), "Graph has no vertex besides the corners")

    facial = {frozenset(f) for f in graph.faces if len(f) == 3}
    for triangle in graph.triangles():
        if frozenset(triangle) in facial:
            continue
        record = split_cycle(graph, triangle, outer)
        if record.is_separating:
            report.add(ViolationCode.SEPARATING_3_CYCLE, record.vertices,
                       "Separating 3-cycle {} has {} vertices inside".format(list(record.vertices), record.interior_size))
    return report


def require_proper(g: ExtendedGraph) -> None:
    report = validate_extended(g)
    if not report.ok:
        raise ImproperGraphException("; ".join(v.message for v in report.violations))


def find_separating_four_cycles(g: ExtendedGraph) -> List[CycleRecord]:
    '''Every separating 4-cycle exactly once; nontrivial ones have more than one vertex inside.'''
    outer = g.outer_face
    records = []
    for cycle in g.graph.four_cycles():
        record = split_cycle(g.graph, cycle, outer)
        if record.is_separating:
            records.append(record)
    return sorted(records, key=lambda rec: rec.vertices)


def nontrivial_separating_four_cycles(g: ExtendedGraph) -> List[CycleRecord]:
    '''The separating 4-cycles that split a graph into separation components: more than one vertex
       inside and no corner on the cycle. A cycle through a corner never alternates in color.'''
    corners = set(g.outer_quad)
    return [rec for rec in find_separating_four_cycles(g) if not rec.is_trivial and rec.avoids(corners)]


def enumerate_corner_assignments(g: PlaneGraph) -> List[ExtendedGraph]:
    '''Every choice of four outer-face vertices as l, t, r, b (in the cyclic order of the outer face)
       that gives a proper extended graph.'''
    outer = g.outer_face
    result = []
    if len(outer) < 4:
        return result
    for chosen in itertools.combinations(outer, 4):
        for shift in range(4):
            picked = chosen[shift:] + chosen[:shift]
            extended = ExtendedGraph(g, dict(zip(CORNER_SIDES, picked)))
            if validate_extended(extended).ok:
                result.append(extended)
    return result


def extend_graph(g: PlaneGraph, corner_rectangles: Sequence[str], names: Sequence[str] = CORNER_SIDES) -> ExtendedGraph:
    """Adds the four external vertices to a graph.

       :param g: embedded graph without corners
       :param corner_rectangles: outer vertices (top-left, top-right, bottom-right, bottom-left) in
                                 clockwise order that become the corner rectangles of the layout
       :param names: names for the new vertices l, t, r, b

       :returns: the extended graph
    """
    outer = list(g.outer_face)
    if len(set(corner_rectangles)) != 4 or any(v not in outer for v in corner_rectangles):
        raise ImproperGraphException("Corner rectangles must be four distinct outer vertices")
    for name in names:
        if name in g.rotation:
            raise ImproperGraphException("Corner name {} is already a vertex".format(name))

    start = outer.index(corner_rectangles[3])
    outer = outer[start:] + outer[:start]
    tl, tr, br, bl = corner_rectangles
    positions = [outer.index(v) for v in (bl, tl, tr, br)]
    if positions != sorted(positions):
        raise ImproperGraphException("Corner rectangles are not in clockwise order on the outer face")

    # Sides in clockwise order: l runs bl..tl, t runs tl..tr, r runs tr..br, b runs br..bl.
    bl_i, tl_i, tr_i, br_i = positions
    wrapped = outer + [outer[0]]
    paths = [wrapped[bl_i:tl_i + 1], wrapped[tl_i:tr_i + 1], wrapped[tr_i:br_i + 1], wrapped[br_i:len(outer) + 1]]

    rotation = {v: list(ns) for v, ns in g.rotation.items()}
    for i, name in enumerate(names):
        rotation[name] = [names[(i + 1) % 4]] + list(reversed(paths[i])) + [names[(i - 1) % 4]]

    n = len(outer)
    for idx, v in enumerate(outer):
        new = [names[i] for i, path in enumerate(paths) if v in path]
        if v == outer[0]:
            new = [names[3], names[0]]
        prev = outer[(idx - 1) % n]
        at = rotation[v].index(prev) + 1
        rotation[v][at:at] = new

    return ExtendedGraph(PlaneGraph(rotation), dict(zip(CORNER_SIDES, names)))


def enumerate_extensions(g: PlaneGraph) -> List[ExtendedGraph]:
    '''Every proper extended graph obtained by choosing four distinct outer vertices as corner rectangles.'''
    outer = g.outer_face
    result = []
    if len(outer) < 4:
        return result
    for chosen in itertools.combinations(outer, 4):
        for shift in range(4):
            picked = chosen[shift:] + chosen[:shift]
            try:
                extended = extend_graph(g, picked)
            except ImproperGraphException:
                continue
            if validate_extended(extended).ok:
                result.append(extended)
    log.debug("%d proper extensions out of outer face of length %d", len(result), len(outer))
    return result
