# -*- coding: utf-8 -*-

"""Separation decomposition of extended graphs along nontrivial separating four-cycles, per-piece
   constrained solving and gluing of piece layouts into layouts of the whole graph.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import heapq
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple

from rlayouttools.constraint_lattice import (ConstrainedProblem, ConstraintSpecs, EdgeConstraintSpec,
                                             JunctionConstraintSpec, check_specs, solve)
from rlayouttools.exceptions import ConstraintSpecException
from rlayouttools.plane_graph import (CORNER_SIDES, CycleRecord, Edge, ExtendedGraph, PlaneGraph, edge_key,
                                      nontrivial_separating_four_cycles, require_proper, split_cycle)
from rlayouttools.rel_engine import EdgeLabel, RegularEdgeLabeling
from rlayouttools.options import Color

log = logging.getLogger(__name__)


@dataclass
class Piece:
    '''A minimal separation component. The root keeps the corners of the input; every other piece
       has the vertices of its bounding cycle as corners, in one of four rotations.'''
    id: int
    graph: PlaneGraph
    corners: Tuple[str, ...]
    cycle: Optional[Tuple[str, ...]] = None
    supervertex: Optional[str] = None
    parent: Optional[int] = None
    children: List[int] = field(default_factory=list)

    @property
    def is_root(self) -> bool:
        return self.cycle is None

    def orientations(self) -> range:
        return range(1) if self.is_root else range(4)

    def oriented(self, orientation: int) -> ExtendedGraph:
        if self.is_root:
            return ExtendedGraph(self.graph, dict(zip(CORNER_SIDES, self.corners)))
        k = orientation % 4
        shifted = self.corners[k:] + self.corners[:k]
        return ExtendedGraph(self.graph, dict(zip(CORNER_SIDES, shifted)))

    def inner_vertices(self) -> List[str]:
        return [v for v in self.graph.vertices if v not in self.corners]

    @property
    def outer_edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(self.corners[i], self.corners[(i + 1) % 4]) for i in range(4))

    def triangular_faces(self) -> Set[FrozenSet[str]]:
        return {frozenset(f) for f in self.graph.faces if len(f) == 3}

    def to_json(self) -> dict:
        return {"id": self.id, "parent": self.parent, "children": list(self.children),
                "cycle": list(self.cycle) if self.cycle else None, "supervertex": self.supervertex,
                "corners": list(self.corners), "vertices": list(self.graph.vertices)}


@dataclass
class SeparationTree:
    original: ExtendedGraph
    pieces: List[Piece]
    root: int

    def __len__(self) -> int:
        return len(self.pieces)

    def piece(self, i: int) -> Piece:
        return self.pieces[i]

    def glue_order(self) -> List[Piece]:
        '''Root first, then the pieces in reverse order of splitting. A piece comes after every piece
           holding an edge of its supervertex.'''
        return list(reversed(self.pieces))

    def to_json(self) -> dict:
        return {"root": self.root, "pieces": [p.to_json() for p in self.pieces]}


def _supervertex_name(rotation: Mapping[str, object], cycle: Tuple[str, ...]) -> str:
    name = "[{}]".format(",".join(cycle))
    while name in rotation:
        name += "'"
    return name


class _WorkingGraph:
    '''Rotation system of the graph while pieces are cut out of it. Offers the part of the PlaneGraph
       interface that split_cycle needs, without retracing faces after every contraction.'''

    def __init__(self, graph: PlaneGraph):
        self.rotation: Dict[str, List[str]] = {v: list(ns) for v, ns in graph.rotation.items()}
        self.outer_face = graph.outer_face

    @property
    def vertices(self):
        return self.rotation.keys()

    def cw_arc(self, v: str, start: str, end: str) -> List[str]:
        ns = self.rotation[v]
        k = ns.index(start)
        arc = []
        for i in range(1, len(ns)):
            w = ns[(k + i) % len(ns)]
            if w == end:
                break
            arc.append(w)
        return arc

    def inner_component(self, record: CycleRecord) -> PlaneGraph:
        '''The cycle with everything inside it; the cycle becomes the outer face.'''
        cycle = record.vertices
        k = len(cycle)
        rotation = {}
        for i, c in enumerate(cycle):
            nxt, prev = cycle[(i + 1) % k], cycle[i - 1]
            rotation[c] = [nxt] + self.cw_arc(c, nxt, prev) + [prev]
        for v in record.interior:
            rotation[v] = list(self.rotation[v])
        return PlaneGraph(rotation, outer=cycle)

    def contract(self, record: CycleRecord, supervertex: str) -> None:
        '''Replaces the inside of the cycle by one vertex adjacent to the cycle.'''
        cycle = record.vertices
        k = len(cycle)
        arcs = [set(self.cw_arc(c, cycle[(i + 1) % k], cycle[i - 1])) for i, c in enumerate(cycle)]
        for v in record.interior:
            del self.rotation[v]
        for i, c in enumerate(cycle):
            nxt = cycle[(i + 1) % k]
            ns = self.rotation[c]
            start = ns.index(nxt)
            ns = ns[start:] + ns[:start]
            self.rotation[c] = [nxt, supervertex] + [w for w in ns[1:] if w not in arcs[i]]
        self.rotation[supervertex] = list(cycle)

    def cycles_through(self, supervertex: str, corners, stats: Counter) -> List[CycleRecord]:
        '''Nontrivial separating four-cycles through a new supervertex: it and two opposite cycle
           vertices with a common neighbor outside.'''
        cycle = self.rotation[supervertex]
        found = []
        for a, b in ((cycle[0], cycle[2]), (cycle[1], cycle[3])):
            common = set(self.rotation[a]) & set(self.rotation[b])
            for x in sorted(common - set(cycle) - {supervertex}):
                stats['cycle_checks'] += 1
                record = split_cycle(self, (supervertex, a, x, b), self.outer_face)  # type: ignore[arg-type]
                if record.is_separating and not record.is_trivial and record.avoids(corners):
                    found.append(record)
        return found


class _CycleQueue:
    '''Nontrivial separating four-cycles of the working graph, smallest interior first. Interiors are
       kept current as pieces are contracted; cycles through removed vertices drop out.'''

    def __init__(self, records: List[CycleRecord]):
        self.live: Dict[Tuple[str, ...], CycleRecord] = {}
        self.heap: List[Tuple[int, Tuple[str, ...]]] = []
        self.on_cycle: Dict[str, Set[Tuple[str, ...]]] = {}
        self.inside: Dict[str, Set[Tuple[str, ...]]] = {}
        for record in records:
            self.add(record)

    def add(self, record: CycleRecord) -> None:
        key = record.vertices
        self.live[key] = record
        heapq.heappush(self.heap, (record.interior_size, key))
        for v in key:
            self.on_cycle.setdefault(v, set()).add(key)
        for v in record.interior:
            self.inside.setdefault(v, set()).add(key)

    def pop(self) -> Optional[CycleRecord]:
        while self.heap:
            size, key = heapq.heappop(self.heap)
            record = self.live.get(key)
            if record is not None and record.interior_size == size:
                del self.live[key]
                return record
        return None

    def contracted(self, record: CycleRecord, supervertex: str) -> None:
        for v in record.interior:
            for key in self.on_cycle.pop(v, ()):
                self.live.pop(key, None)
        # the interior is connected, so a surviving cycle holds all of it or none of it
        sample = next(iter(record.interior))
        enclosing = [key for key in self.inside.get(sample, ()) if key in self.live]
        for v in record.interior:
            self.inside.pop(v, None)
        self.inside[supervertex] = set()
        for key in sorted(enclosing):
            old = self.live[key]
            updated = CycleRecord(old.vertices, (old.interior - record.interior) | {supervertex}, old.exterior_size)
            if updated.is_trivial:
                del self.live[key]
                continue
            self.live[key] = updated
            self.inside[supervertex].add(key)
            heapq.heappush(self.heap, (updated.interior_size, key))


def decompose(g: ExtendedGraph, stats: Optional[Counter] = None) -> SeparationTree:
    """Splits a proper graph at nontrivial separating four-cycles, innermost first. The cycles are
       found once; after each contraction only the cycles through the new supervertex are searched.

       :param g: proper extended graph
       :param stats: optional counter of the work done

       :returns: the separation tree; the root is the graph with every split-off part contracted
    """
    require_proper(g)
    stats = stats if stats is not None else Counter()
    corners = set(g.outer_quad)
    working = _WorkingGraph(g.graph)
    cycles = nontrivial_separating_four_cycles(g)
    stats['cycle_checks'] += sum(1 for _ in g.graph.four_cycles())
    queue = _CycleQueue(cycles)
    pieces: List[Piece] = []
    pending: Dict[str, int] = {}

    while True:
        record = queue.pop()
        if record is None:
            break
        piece = Piece(len(pieces), working.inner_component(record), record.vertices, cycle=record.vertices)
        for s in sorted(v for v in record.interior if v in pending):
            child = pieces[pending.pop(s)]
            child.parent = piece.id
            piece.children.append(child.id)
        piece.supervertex = _supervertex_name(working.rotation, record.vertices)
        pieces.append(piece)
        pending[piece.supervertex] = piece.id
        log.debug("Split off %d vertices inside %s", record.interior_size, list(record.vertices))

        working.contract(record, piece.supervertex)
        queue.contracted(record, piece.supervertex)
        for found in working.cycles_through(piece.supervertex, corners, stats):
            queue.add(found)
        stats['splits'] += 1

    root = Piece(len(pieces), PlaneGraph(working.rotation, outer=g.outer_face), g.outer_quad)
    for s in sorted(pending):
        child = pieces[pending[s]]
        child.parent = root.id
        root.children.append(child.id)
    pieces.append(root)
    return SeparationTree(g, pieces, root.id)


def reconstruct(tree: SeparationTree) -> PlaneGraph:
    '''Substitutes every piece back into the supervertex that replaced it, latest split first.'''
    root = tree.pieces[tree.root]
    rotation = {v: list(ns) for v, ns in root.graph.rotation.items()}
    for piece in tree.glue_order()[1:]:
        s = piece.supervertex
        for c in piece.cycle:
            arc = list(piece.graph.rotation[c][1:-1])
            at = rotation[c].index(s)
            rotation[c][at:at + 1] = arc
        for v in piece.inner_vertices():
            rotation[v] = list(piece.graph.rotation[v])
        del rotation[s]
    return PlaneGraph(rotation)


def same_embedding(a: PlaneGraph, b: PlaneGraph) -> bool:
    if set(a.rotation) != set(b.rotation):
        return False
    for v, ns in a.rotation.items():
        other = b.rotation[v]
        if len(ns) != len(other) or ns[0] not in other:
            return False
        start = other.index(ns[0])
        if other[start:] + other[:start] != ns:
            return False
    return True


def orientation_of(labels: Mapping[Edge, EdgeLabel], piece: Piece) -> int:
    '''The rotation of a piece in the surrounding layout: the index of the cycle vertex left of its supervertex.'''
    s = piece.supervertex
    for i, c in enumerate(piece.cycle):
        if labels.get(edge_key(c, s)) == EdgeLabel(Color.blue, c, s):
            return i
    raise ValueError("Supervertex {} has no left neighbor".format(s))


def holder_of_edge(tree: SeparationTree, u: str, v: str, after: int = -1) -> Piece:
    '''The piece in which an edge is an inner edge.'''
    for piece in tree.pieces[after + 1:]:
        if piece.graph.has_edge(u, v) and edge_key(u, v) not in piece.outer_edges:
            return piece
    raise ConstraintSpecException("Edge {}-{} exists in no piece of the decomposition".format(u, v))


def holder_of_triangle(tree: SeparationTree, spec: JunctionConstraintSpec) -> Tuple[Piece, JunctionConstraintSpec]:
    '''The piece in which a triangle is a face. A triangle on the bounding cycle of a piece has the
       same junction as the triangle on that cycle edge and the supervertex, one piece up.'''
    after = -1
    while True:
        found = None
        for piece in tree.pieces[after + 1:]:
            if frozenset(spec.triangle) in piece.triangular_faces():
                found = piece
                break
        if found is None:
            raise ConstraintSpecException("Triangle {} exists in no piece of the decomposition".format(list(spec.triangle)))
        edges = [edge_key(a, b) for a, b in zip(spec.triangle, spec.triangle[1:] + spec.triangle[:1])]
        if found.is_root or not any(e in found.outer_edges for e in edges):
            return found, spec
        (inner,) = [v for v in spec.triangle if v not in found.corners]
        s = found.supervertex
        spec = JunctionConstraintSpec(tuple(s if v == inner else v for v in spec.triangle),
                                      frozenset((s if f == inner else f, side) for f, side in spec.forbidden))
        after = found.id


def split_constraints(tree: SeparationTree, specs: ConstraintSpecs) -> Dict[int, ConstraintSpecs]:
    '''Assigns every constraint to the piece holding its edge or triangle.'''
    edges: Dict[int, List[EdgeConstraintSpec]] = {p.id: [] for p in tree.pieces}
    junctions: Dict[int, List[JunctionConstraintSpec]] = {p.id: [] for p in tree.pieces}
    for c in specs.edges:
        edges[holder_of_edge(tree, c.u, c.v).id].append(c)
    for j in specs.junctions:
        piece, lifted = holder_of_triangle(tree, j)
        junctions[piece.id].append(lifted)
    return {i: ConstraintSpecs(tuple(edges[i]), tuple(junctions[i])) for i in edges}


@dataclass
class PieceSolution:
    piece: Piece
    problems: Dict[int, ConstrainedProblem]
    specs: ConstraintSpecs = ConstraintSpecs()
    forwarded: Dict[int, List[EdgeConstraintSpec]] = field(default_factory=dict)

    @property
    def feasible_orientations(self) -> List[int]:
        return [r for r, problem in sorted(self.problems.items()) if problem.exists()]

    @property
    def feasible(self) -> bool:
        return len(self.feasible_orientations) > 0

    def forbidden_labels(self) -> List[EdgeConstraintSpec]:
        return [c for cs in self.forwarded.values() for c in cs]


@dataclass
class TreeSolution:
    tree: SeparationTree
    pieces: Dict[int, PieceSolution]

    @property
    def feasible(self) -> bool:
        return self.pieces[self.tree.root].feasible


def solve_bottom_up(tree: SeparationTree, split: Mapping[int, ConstraintSpecs],
                    stats: Optional[Counter] = None) -> TreeSolution:
    """Solves every piece in every rotation, in the order the pieces were split off. A rotation in
       which a piece has no layout forbids the matching label of its supervertex in the piece that
       holds the edge between the supervertex and its left neighbor.

       :param tree: the separation tree
       :param split: constraints per piece, from split_constraints
       :param stats: optional counter of the work done

       :returns: per-piece solutions; feasible iff the root has a layout
    """
    stats = stats if stats is not None else Counter()
    forwarded: Dict[int, List[EdgeConstraintSpec]] = {p.id: [] for p in tree.pieces}
    solutions: Dict[int, PieceSolution] = {}
    for piece in tree.pieces:
        specs = split.get(piece.id, ConstraintSpecs())
        specs = ConstraintSpecs(specs.edges + tuple(forwarded[piece.id]), specs.junctions)

        problems = {}
        for r in piece.orientations():
            problem = solve(piece.oriented(r), specs)
            stats['elements'] += len(problem.order)
            stats['components'] += problem.quasiorder.component_count
            problems[r] = problem
        solution = PieceSolution(piece, problems, split.get(piece.id, ConstraintSpecs()))
        if not piece.is_root:
            for r in piece.orientations():
                if r in solution.feasible_orientations:
                    continue
                left = piece.cycle[r]
                holder = holder_of_edge(tree, left, piece.supervertex, after=piece.id)
                spec = EdgeConstraintSpec(left, piece.supervertex, frozenset(['u_left_of_v']))
                forwarded[holder.id].append(spec)
                solution.forwarded.setdefault(holder.id, []).append(spec)
        log.debug("Piece %d feasible in rotations %s", piece.id, solution.feasible_orientations)
        solutions[piece.id] = solution
    return TreeSolution(tree, solutions)


def _glue(solution: TreeSolution, order: List[Piece], k: int, labels: Dict[Edge, EdgeLabel]) -> Iterator[Dict[Edge, EdgeLabel]]:
    if k == len(order):
        yield labels
        return
    piece = order[k]
    orientation = 0 if piece.is_root else orientation_of(labels, piece)
    outer = piece.outer_edges
    for rel in solution.pieces[piece.id].problems[orientation].layouts():
        glued = dict(labels)
        glued.update((e, label) for e, label in rel.labels.items() if e not in outer)
        yield from _glue(solution, order, k + 1, glued)


def enumerate_glued(solution: TreeSolution) -> Iterator[RegularEdgeLabeling]:
    '''Layouts of the whole graph: every root layout, with a matching layout of each split-off piece
       substituted for its supervertex.'''
    if not solution.feasible:
        return
    tree = solution.tree
    supervertices = {p.supervertex for p in tree.pieces if not p.is_root}
    for labels in _glue(solution, tree.glue_order(), 0, {}):
        yield RegularEdgeLabeling(tree.original, {e: label for e, label in labels.items()
                                                  if e[0] not in supervertices and e[1] not in supervertices})


def solve_tree(g: ExtendedGraph, specs: ConstraintSpecs = ConstraintSpecs(),
               stats: Optional[Counter] = None) -> TreeSolution:
    check_specs(g, specs)
    tree = decompose(g)
    return solve_bottom_up(tree, split_constraints(tree, specs), stats)
