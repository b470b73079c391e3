# -*- coding: utf-8 -*-

"""The distributive lattice of regular edge labelings: explicit enumeration for small graphs, flipping
   numbers, the partial order of flip events and the correspondence between layouts and ideals.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import itertools
import logging
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Set, Tuple

import networkx as nx

from rlayouttools.exceptions import InvalidIdealException, LatticeTooLargeException, NestedSeparatingCycleException
from rlayouttools.options import Chirality, Direction
from rlayouttools.plane_graph import ExtendedGraph, nontrivial_separating_four_cycles
from rlayouttools.rel_engine import (FlipItem, RegularEdgeLabeling, apply_move, drain, extremal_rel,
                                     find_alternating_cycles, initial_rel, monotone_sweep)

log = logging.getLogger(__name__)

DEFAULT_LATTICE_CAP = 100000


class FlipEvent(NamedTuple):
    '''The (index + 1)-th flip of an item: its flipping number going from index to index + 1.'''
    item: FlipItem
    index: int

    def to_json(self) -> list:
        return [str(self.item), self.index]


@dataclass
class LatticeIndex:
    host: ExtendedGraph
    layouts: List[RegularEdgeLabeling]
    moves: List[Tuple[int, int, FlipItem]]
    bottom: int
    top: int
    _position: Dict[RegularEdgeLabeling, int] = field(default_factory=dict, repr=False)
    _counts: Optional[List[Dict[FlipItem, int]]] = field(default=None, repr=False)

    def __post_init__(self):
        self._position = {layout: i for i, layout in enumerate(self.layouts)}

    def position(self, layout: RegularEdgeLabeling) -> int:
        if layout not in self._position:
            raise KeyError("Layout is not in the lattice")
        return self._position[layout]

    def __contains__(self, layout) -> bool:
        return layout in self._position

    def __len__(self) -> int:
        return len(self.layouts)

    def items(self) -> List[FlipItem]:
        return sorted({item for _, _, item in self.moves})

    def up_moves(self, i: int) -> List[Tuple[int, FlipItem]]:
        return [(b, item) for a, b, item in self.moves if a == i]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.layouts)))
        for a, b, item in self.moves:
            graph.add_edge(a, b, item=item)
        return graph

    def flip_vectors(self) -> List[Dict[FlipItem, int]]:
        '''Flipping numbers of every layout, propagated along moves from the bottom. Raises if two
           paths disagree.'''
        if self._counts is None:
            items = self.items()
            counts: List[Optional[Dict[FlipItem, int]]] = [None] * len(self.layouts)
            counts[self.bottom] = {item: 0 for item in items}
            graph = self.to_networkx()
            for node in nx.topological_sort(graph):
                for _, succ, data in graph.out_edges(node, data=True):
                    expected = dict(counts[node])
                    expected[data['item']] += 1
                    if counts[succ] is None:
                        counts[succ] = expected
                    elif counts[succ] != expected:
                        raise ValueError("Flipping numbers depend on the path to layout {}".format(succ))
            self._counts = counts
        return self._counts

    def to_dot(self) -> str:
        lines = ["digraph lattice {"]
        for a, b, item in self.moves:
            lines.append('  {} -> {} [label="{}"];'.format(a, b, item))
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=32)
def bottom_rel(g: ExtendedGraph) -> RegularEdgeLabeling:
    return extremal_rel(initial_rel(g), Direction.down)


def enumerate_lattice(g: ExtendedGraph, cap: int = DEFAULT_LATTICE_CAP) -> LatticeIndex:
    '''All layouts of a graph, found by a breadth-first search over upward moves from the bottom.'''
    bottom = bottom_rel(g)
    layouts = [bottom]
    position = {bottom: 0}
    moves = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for move in find_alternating_cycles(layouts[i]):
            if move.chirality != Chirality.ccw:
                continue
            higher = apply_move(layouts[i], move)
            if higher not in position:
                if len(layouts) >= cap:
                    raise LatticeTooLargeException("Lattice has more than {} layouts".format(cap))
                position[higher] = len(layouts)
                layouts.append(higher)
                queue.append(position[higher])
            moves.append((i, position[higher], move.item))

    has_up = {a for a, _, _ in moves}
    tops = [i for i in range(len(layouts)) if i not in has_up]
    if len(tops) != 1:
        raise ValueError("Move graph has {} maximal layouts".format(len(tops)))
    log.debug("Lattice with %d layouts and %d moves", len(layouts), len(moves))
    return LatticeIndex(g, layouts, sorted(moves, key=lambda m: (m[0], m[1], m[2])), 0, tops[0])


def flip_counts(idx: LatticeIndex, layout: RegularEdgeLabeling) -> Dict[FlipItem, int]:
    return dict(idx.flip_vectors()[idx.position(layout)])


def random_monotone_path(idx: LatticeIndex, layout: RegularEdgeLabeling, rng: random.Random) -> List[FlipItem]:
    '''The items flipped along a random monotone path from the bottom to the layout.'''
    target = idx.position(layout)
    vectors = idx.flip_vectors()
    goal = vectors[target]
    current = idx.bottom
    path = []
    while current != target:
        options = [(b, item) for b, item in idx.up_moves(current)
                   if all(vectors[b][x] <= goal[x] for x in goal)]
        current, item = rng.choice(options)
        path.append(item)
    return path


class PartialOrderP:

    def __init__(self, host: ExtendedGraph, elements, covers):
        """constructor

           :param host: the graph whose layouts the order describes
           :param elements: flip events
           :param covers: pairs (lower, upper) generating the order
        """
        self.host = host
        self.elements: Tuple[FlipEvent, ...] = tuple(sorted(elements))
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.elements)
        self.graph.add_edges_from(covers)
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ValueError("Flip order has a cycle")
        self.graph = nx.transitive_reduction(self.graph)
        self.graph.add_nodes_from(self.elements)
        self.covers: Tuple[Tuple[FlipEvent, FlipEvent], ...] = tuple(sorted(self.graph.edges()))
        self._closure: Optional[nx.DiGraph] = None
        self.flip_totals: Dict[FlipItem, int] = dict(Counter(e.item for e in self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def closure(self) -> nx.DiGraph:
        if self._closure is None:
            self._closure = nx.transitive_closure_dag(self.graph)
        return self._closure

    def less(self, a: FlipEvent, b: FlipEvent) -> bool:
        return self.closure().has_edge(a, b)

    def is_lower_set(self, lower: Set[FlipEvent]) -> bool:
        return all(a in lower for a, b in self.covers if b in lower)

    def to_json(self) -> dict:
        return {"elements": [e.to_json() for e in self.elements],
                "covers": [[a.to_json(), b.to_json()] for a, b in self.covers]}


def _require_no_nesting(g: ExtendedGraph) -> None:
    nested = nontrivial_separating_four_cycles(g)
    if len(nested) > 0:
        raise NestedSeparatingCycleException(
            "Graph has a nontrivial separating four-cycle {}; decompose it first".format(list(nested[0].vertices)))


def build_partial_order(g: ExtendedGraph, strategy: str = 'sweep', cap: int = DEFAULT_LATTICE_CAP) -> PartialOrderP:
    """Builds the order of flip events.

       :param g: proper graph without nontrivial separating four-cycles
       :param strategy: 'sweep' reads the order off one maximal chain of moves; 'lattice' derives it
                        from the flipping numbers of every layout
       :param cap: lattice size cap for the 'lattice' strategy
    """
    _require_no_nesting(g)
    if strategy == 'lattice':
        return _order_from_lattice(enumerate_lattice(g, cap))
    elif strategy == 'sweep':
        return _order_from_sweep(g)
    raise ValueError("Unknown strategy {}".format(strategy))


def _order_from_lattice(idx: LatticeIndex) -> PartialOrderP:
    vectors = idx.flip_vectors()
    top = vectors[idx.top]
    elements = [FlipEvent(x, i) for x in sorted(top) for i in range(top[x])]
    relations = []
    for a, b in itertools.permutations(elements, 2):
        # a <= b iff every layout past b is also past a
        if all(f[a.item] >= a.index + 1 for f in vectors if f[b.item] >= b.index + 1):
            relations.append((a, b))
    return PartialOrderP(idx.host, elements, relations)


def item_faces(g: ExtendedGraph, item: FlipItem) -> List[Tuple[str, ...]]:
    '''The triangles an item belongs to: both faces of an edge, the four faces around a vertex.'''
    if item.kind == 'edge':
        u, v = item.vertices
        return [g.graph.face_of(u, v), g.graph.face_of(v, u)]
    (w,) = item.vertices
    return [g.graph.face_of(w, n) for n in g.rotation[w]]


def maximal_chain(g: ExtendedGraph) -> List[FlipEvent]:
    '''The flip events of one monotone path from the bottom to the top, in order.'''
    counts: Counter = Counter()
    events = []
    for move in monotone_sweep(bottom_rel(g), Direction.up):
        events.append(FlipEvent(move.item, counts[move.item]))
        counts[move.item] += 1
    return events


def _order_from_sweep(g: ExtendedGraph) -> PartialOrderP:
    events = maximal_chain(g)
    by_face: Dict[Tuple[str, ...], List[FlipEvent]] = {}
    by_item: Dict[FlipItem, List[FlipEvent]] = {}
    for event in events:
        by_item.setdefault(event.item, []).append(event)
        for face in item_faces(g, event.item):
            by_face.setdefault(face, []).append(event)
    covers = set()
    for chain in itertools.chain(by_face.values(), by_item.values()):
        for a, b in zip(chain, chain[1:]):
            if a != b:
                covers.add((a, b))
    log.debug("Flip order from a chain of %d events", len(events))
    return PartialOrderP(g, events, covers)


@dataclass(frozen=True)
class IdealPartition:
    lower: FrozenSet[FlipEvent]
    upper: FrozenSet[FlipEvent]

    def summary(self) -> Dict[FlipItem, Optional[int]]:
        '''Per item, the largest index of its events in the lower set, or None.'''
        result: Dict[FlipItem, Optional[int]] = {e.item: None for e in self.upper}
        for e in self.lower:
            current = result.get(e.item)
            result[e.item] = e.index if current is None else max(current, e.index)
        return result

    def targets(self) -> Dict[FlipItem, int]:
        '''How often each item is flipped from the bottom: the largest lower index plus one.'''
        return {item: (n + 1 if n is not None else 0) for item, n in self.summary().items()}

    def to_json(self) -> dict:
        return {"lower": [e.to_json() for e in sorted(self.lower)], "upper": [e.to_json() for e in sorted(self.upper)]}


def partition_of(order: PartialOrderP, lower) -> IdealPartition:
    lower = frozenset(lower)
    return IdealPartition(lower, frozenset(e for e in order.elements if e not in lower))


def encode(idx: LatticeIndex, layout: RegularEdgeLabeling) -> IdealPartition:
    counts = flip_counts(idx, layout)
    top = idx.flip_vectors()[idx.top]
    lower = frozenset(FlipEvent(x, i) for x, n in counts.items() for i in range(n))
    upper = frozenset(FlipEvent(x, i) for x, n in top.items() for i in range(counts[x], n))
    return IdealPartition(lower, upper)


def decode(g: ExtendedGraph, p: IdealPartition, order: Optional[PartialOrderP] = None) -> RegularEdgeLabeling:
    '''The layout of an ideal: from the bottom, flip every item once more than its largest lower index.'''
    if order is not None and not order.is_lower_set(set(p.lower)):
        raise InvalidIdealException("Lower set is not downward closed")
    return ascend(bottom_rel(g), p.targets())


def ascend(start: RegularEdgeLabeling, targets: Dict[FlipItem, int]) -> RegularEdgeLabeling:
    '''Moves up from start until every item reached its target flip count.'''
    moves, result = drain(monotone_sweep(start, Direction.up, limits=targets))
    needed = sum(targets.values())
    if len(moves) != needed:
        raise InvalidIdealException("Flip targets cannot be reached: {} of {} flips".format(len(moves), needed))
    return result


def ideals(order: PartialOrderP) -> Iterator[FrozenSet[FlipEvent]]:
    '''Every lower set, by deciding the elements one at a time in a linear extension.'''
    linear = list(nx.lexicographical_topological_sort(order.graph))
    chosen: Set[FlipEvent] = set()

    def extend(k: int) -> Iterator[FrozenSet[FlipEvent]]:
        if k == len(linear):
            yield frozenset(chosen)
            return
        e = linear[k]
        yield from extend(k + 1)
        if all(p in chosen for p in order.graph.predecessors(e)):
            chosen.add(e)
            yield from extend(k + 1)
            chosen.discard(e)

    yield from extend(0)


def covers_of(order: PartialOrderP) -> List[Tuple[FlipEvent, FlipEvent]]:
    return list(order.covers)


def lattice_from_partial_order(order: PartialOrderP) -> int:
    '''Number of layouts described by an order, one per lower set.'''
    return sum(1 for _ in ideals(order))
