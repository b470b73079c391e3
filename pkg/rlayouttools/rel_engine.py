# -*- coding: utf-8 -*-

"""Regular edge labelings of extended graphs: validation, construction, moves on alternating
   four-cycles, extremal labelings and rectangle geometry.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from rlayouttools.exceptions import ImproperGraphException, InvalidLabelingException, InvalidMoveException
from rlayouttools.options import Chirality, Color, Direction
from rlayouttools.plane_graph import (CycleRecord, Edge, ExtendedGraph, canonical_cycle, edge_key,
                                      interior_edges, nontrivial_separating_four_cycles, require_proper,
                                      split_cycle)
from rlayouttools.validation_report import ValidationReport, ViolationCode

log = logging.getLogger(__name__)

# Edge types around a vertex, in the clockwise block order of a regular edge labeling.
INCOMING_BLUE, OUTGOING_RED, OUTGOING_BLUE, INCOMING_RED = range(4)

RELATIONS = ('u_left_of_v', 'u_below_v', 'u_right_of_v', 'u_above_v')


@dataclass(frozen=True)
class EdgeLabel:
    color: Color
    tail: str
    head: str

    def edge(self) -> Edge:
        return edge_key(self.tail, self.head)

    def type_at(self, v: str) -> int:
        if self.color == Color.blue:
            return INCOMING_BLUE if self.head == v else OUTGOING_BLUE
        return OUTGOING_RED if self.tail == v else INCOMING_RED

    def relation(self, u: str) -> str:
        '''How u sits relative to the other endpoint.'''
        if self.color == Color.blue:
            return 'u_left_of_v' if self.tail == u else 'u_right_of_v'
        return 'u_below_v' if self.tail == u else 'u_above_v'

    def rotated(self, chirality: Chirality) -> 'EdgeLabel':
        '''The label after turning the pair of rectangles a quarter turn.'''
        if chirality == Chirality.cw:
            if self.color == Color.blue:
                return EdgeLabel(Color.red, self.head, self.tail)
            return EdgeLabel(Color.blue, self.tail, self.head)
        if self.color == Color.blue:
            return EdgeLabel(Color.red, self.tail, self.head)
        return EdgeLabel(Color.blue, self.head, self.tail)


def label_from_relation(u: str, v: str, relation: str) -> EdgeLabel:
    if relation == 'u_left_of_v':
        return EdgeLabel(Color.blue, u, v)
    elif relation == 'u_right_of_v':
        return EdgeLabel(Color.blue, v, u)
    elif relation == 'u_below_v':
        return EdgeLabel(Color.red, u, v)
    elif relation == 'u_above_v':
        return EdgeLabel(Color.red, v, u)
    raise ValueError("Unknown relation {}".format(relation))


class RegularEdgeLabeling:

    def __init__(self, host: ExtendedGraph, labels: Mapping[Edge, EdgeLabel]):
        """constructor

           :param host: the extended graph
           :param labels: label for every inner edge, keyed by sorted vertex pair
        """
        self.host = host
        self.labels: Dict[Edge, EdgeLabel] = dict(labels)
        self._key: Optional[Tuple] = None

    def label(self, u: str, v: str) -> EdgeLabel:
        return self.labels[edge_key(u, v)]

    def key(self) -> Tuple:
        if self._key is None:
            self._key = tuple((e, lab.color.value, lab.head) for e, lab in sorted(self.labels.items()))
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, RegularEdgeLabeling) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return "RegularEdgeLabeling({} labels)".format(len(self.labels))


def corner_label(g: ExtendedGraph, corner: str, v: str) -> EdgeLabel:
    '''The only label an edge between a corner and another vertex can carry.'''
    side = g.corner_side(corner)
    if side == 'l':
        return EdgeLabel(Color.blue, corner, v)
    elif side == 'r':
        return EdgeLabel(Color.blue, v, corner)
    elif side == 'b':
        return EdgeLabel(Color.red, corner, v)
    return EdgeLabel(Color.red, v, corner)


def _blocks_ok(types: List[int]) -> bool:
    steps = [(types[(i + 1) % len(types)] - types[i]) % 4 for i in range(len(types))]
    return all(s <= 1 for s in steps) and sum(steps) == 4


def _valid_at(g: ExtendedGraph, labels: Mapping[Edge, EdgeLabel], v: str) -> bool:
    if g.is_corner(v):
        for w in g.rotation[v]:
            e = edge_key(v, w)
            if e not in g.outer_edges and labels.get(e) != corner_label(g, v, w):
                return False
        return True
    types = []
    for w in g.rotation[v]:
        label = labels.get(edge_key(v, w))
        if label is None:
            return False
        types.append(label.type_at(v))
    return _blocks_ok(types)


def validate_rel(r: RegularEdgeLabeling) -> ValidationReport:
    g = r.host
    report = ValidationReport()
    inner = set(g.inner_edges)

    for e, label in sorted(r.labels.items()):
        if e in g.outer_edges:
            report.add(ViolationCode.OUTER_EDGE_LABELED, e, "Outer edge {}-{} must not be labeled".format(*e))
        elif e not in inner or label.edge() != e:
            report.add(ViolationCode.UNKNOWN_EDGE, e, "Label for {}-{} does not match an edge".format(*e))

    unlabeled = set()
    for e in g.inner_edges:
        if e not in r.labels:
            report.add(ViolationCode.UNLABELED_EDGE, e, "Edge {}-{} has no label".format(*e))
            unlabeled.update(e)

    for corner in g.outer_quad:
        for w in g.rotation[corner]:
            e = edge_key(corner, w)
            if e in g.outer_edges or e not in r.labels:
                continue
            if r.labels[e] != corner_label(g, corner, w):
                report.add(ViolationCode.CORNER_LABEL, e,
                           "Edge {}-{} at corner {} has the wrong label".format(e[0], e[1], g.corner_side(corner)))

    for v in g.inner_vertices:
        if v not in unlabeled and not _valid_at(g, r.labels, v):
            report.add(ViolationCode.BLOCK_ORDER, (v,),
                       "Edges around {} are not in the blocks incoming blue, outgoing red, outgoing blue, incoming red".format(v))
    return report


def initial_rel(g: ExtendedGraph, search_limit: int = 12) -> RegularEdgeLabeling:
    '''Some regular edge labeling of a proper graph, built from a four-canonical ordering.'''
    require_proper(g)
    try:
        labels = _labels_from_canonical_order(g)
    except ImproperGraphException as e:
        log.warning("Canonical ordering failed: %s", e)
        labels = None

    if labels is not None:
        rel = RegularEdgeLabeling(g, labels)
        if validate_rel(rel).ok:
            return rel
        log.warning("Canonical ordering produced an invalid labeling")

    if len(g.inner_vertices) <= search_limit:
        for rel in all_rels(g):
            return rel
    raise InvalidLabelingException("Could not construct a regular edge labeling")


def canonical_order(g: ExtendedGraph) -> Tuple[List[str], Dict[str, List[str]]]:
    '''Orders the vertices l, b, ..., r, t so that every inner vertex has at least two earlier and two
       later neighbors and its earlier neighbors form a path on the boundary of the earlier vertices.
       Found by peeling vertices off the top-right boundary. Returns the order and, for every vertex
       after b, its earlier neighbors along the boundary from the l end to the b end.'''
    l, t, r, b = g.outer_quad
    contour = [l, t, r, b]
    on_contour = set(contour)
    remaining = set(g.vertices)
    removed_neighbors: Dict[str, int] = defaultdict(int)
    lower: Dict[str, List[str]] = {}
    removal = []

    def peel(v: str) -> None:
        idx = contour.index(v)
        pred, succ = contour[idx - 1], contour[idx + 1]
        path = [succ] + g.graph.cw_arc(v, succ, pred) + [pred]
        if any(w not in remaining for w in path):
            raise ImproperGraphException("Boundary around {} is not a path".format(v))
        path.reverse()
        lower[v] = path
        contour[idx:idx + 1] = path[1:-1]
        on_contour.discard(v)
        on_contour.update(path[1:-1])
        remaining.discard(v)
        removal.append(v)
        for w in g.rotation[v]:
            removed_neighbors[w] += 1

    peel(t)
    peel(r)
    while len(remaining) > 2:
        chosen = None
        for idx in range(1, len(contour) - 1):
            v = contour[idx]
            if removed_neighbors[v] < 2:
                continue
            pred, succ = contour[idx - 1], contour[idx + 1]
            if any(w in on_contour and w != pred and w != succ for w in g.rotation[v]):
                continue
            chosen = v
            break
        if chosen is None:
            raise ImproperGraphException("No vertex can be peeled from boundary {}".format(contour))
        peel(chosen)

    return [l, b] + list(reversed(removal)), lower


def _labels_from_canonical_order(g: ExtendedGraph) -> Dict[Edge, EdgeLabel]:
    order, lower = canonical_order(g)
    time = {v: i for i, v in enumerate(order)}
    labels: Dict[Edge, EdgeLabel] = {}
    for v in order[2:]:
        if g.is_corner(v):
            continue
        path = lower[v]
        # A covered boundary vertex whose successor is older already points right, so it must go below v.
        last_blue = 0
        for i in range(1, len(path) - 1):
            if time[path[i + 1]] < time[path[i]]:
                last_blue = i
        for i, c in enumerate(path):
            color = Color.blue if i <= last_blue else Color.red
            labels[edge_key(c, v)] = EdgeLabel(color, c, v)

    for corner in g.outer_quad:
        for w in g.rotation[corner]:
            e = edge_key(corner, w)
            if e not in g.outer_edges:
                labels[e] = corner_label(g, corner, w)
    return labels


def all_rels(g: ExtendedGraph) -> Iterator[RegularEdgeLabeling]:
    '''Every regular edge labeling, by exhaustive search with pruning. Exponential; meant as an oracle.'''
    fixed: Dict[Edge, EdgeLabel] = {}
    for corner in g.outer_quad:
        for w in g.rotation[corner]:
            e = edge_key(corner, w)
            if e not in g.outer_edges:
                fixed[e] = corner_label(g, corner, w)

    order = {v: i for i, v in enumerate(nx.bfs_tree(g.graph.to_networkx(), g.corners['l']))}
    free = sorted((e for e in g.inner_edges if e not in fixed), key=lambda e: (max(order[e[0]], order[e[1]]), e))
    labels = dict(fixed)

    def consistent(v: str) -> bool:
        if g.is_corner(v):
            return True
        rotation = g.rotation[v]
        known = []
        for position, w in enumerate(rotation):
            label = labels.get(edge_key(v, w))
            if label is not None:
                known.append((label.type_at(v), position))
        total = 0
        for i, (kind, position) in enumerate(known):
            next_kind, next_position = known[(i + 1) % len(known)]
            # each unlabeled edge in between can advance the block by one
            gap = (next_position - position - 1) % len(rotation)
            step = (next_kind - kind) % 4
            if step > gap + 1:
                return False
            total += step
        if len(known) == len(rotation):
            return total == 4
        return total <= 4

    def extend(k: int) -> Iterator[RegularEdgeLabeling]:
        if k == len(free):
            yield RegularEdgeLabeling(g, labels)
            return
        u, v = free[k]
        for label in (EdgeLabel(Color.blue, u, v), EdgeLabel(Color.blue, v, u),
                      EdgeLabel(Color.red, u, v), EdgeLabel(Color.red, v, u)):
            labels[(u, v)] = label
            if consistent(u) and consistent(v):
                yield from extend(k + 1)
        del labels[(u, v)]

    yield from extend(0)


@dataclass(frozen=True, order=True)
class FlipItem:
    '''A flippable item: an edge, a degree-four vertex, or the interior of a larger separating 4-cycle.'''
    kind: str
    vertices: Tuple[str, ...]

    def __str__(self) -> str:
        return "{}:{}".format(self.kind, "-".join(self.vertices))

    @staticmethod
    def parse(text: str) -> 'FlipItem':
        kind, _, rest = text.partition(":")
        if kind not in ('edge', 'vertex', 'cycle') or rest == "":
            raise ValueError("Not a flippable item: {}".format(text))
        return FlipItem(kind, tuple(rest.split("-")))


@dataclass(frozen=True)
class MoveCandidate:
    item: FlipItem
    record: CycleRecord
    inner: FrozenSet[Edge]

    @property
    def touched(self) -> FrozenSet[str]:
        return frozenset(self.record.vertices) | self.record.interior


@dataclass(frozen=True)
class AlternatingFourCycle:
    candidate: MoveCandidate
    chirality: Chirality

    @property
    def cycle(self) -> CycleRecord:
        return self.candidate.record

    @property
    def item(self) -> FlipItem:
        return self.candidate.item

    def reversed(self) -> 'AlternatingFourCycle':
        other = Chirality.ccw if self.chirality == Chirality.cw else Chirality.cw
        return AlternatingFourCycle(self.candidate, other)


def flippable_items(g: ExtendedGraph) -> List[FlipItem]:
    '''Edges between inner vertices that avoid degree-four vertices, and degree-four vertices away from the corners.'''
    degree_four = {v for v in g.inner_vertices if g.graph.degree(v) == 4}
    items = []
    for u, v in g.inner_edges:
        if g.is_corner(u) or g.is_corner(v) or u in degree_four or v in degree_four:
            continue
        items.append(FlipItem('edge', (u, v)))
    for v in sorted(degree_four):
        if not any(g.is_corner(w) for w in g.rotation[v]):
            items.append(FlipItem('vertex', (v,)))
    return sorted(items)


def item_candidate(g: ExtendedGraph, item: FlipItem) -> MoveCandidate:
    if item.kind == 'edge':
        u, v = item.vertices
        x = g.graph.face_of(u, v)
        y = g.graph.face_of(v, u)
        left = [w for w in x if w != u and w != v][0]
        right = [w for w in y if w != u and w != v][0]
        record = CycleRecord(canonical_cycle((u, left, v, right)), frozenset(), len(g.vertices) - 4)
        return MoveCandidate(item, record, frozenset([edge_key(u, v)]))
    elif item.kind == 'vertex':
        (w,) = item.vertices
        record = CycleRecord(canonical_cycle(g.rotation[w]), frozenset([w]), len(g.vertices) - 5)
        return MoveCandidate(item, record, frozenset(edge_key(w, n) for n in g.rotation[w]))
    record = split_cycle(g.graph, item.vertices, g.outer_face)
    return MoveCandidate(item, record, interior_edges(g.graph, record))


@lru_cache(maxsize=32)
def move_candidates(g: ExtendedGraph) -> Tuple[MoveCandidate, ...]:
    '''Everything that can ever be flipped: the flippable items and the nontrivial separating 4-cycles.'''
    candidates = [item_candidate(g, item) for item in flippable_items(g)]
    for record in nontrivial_separating_four_cycles(g):
        candidates.append(MoveCandidate(FlipItem('cycle', record.vertices), record, interior_edges(g.graph, record)))
    return tuple(sorted(candidates, key=lambda c: c.record.vertices))


@lru_cache(maxsize=32)
def _candidates_by_vertex(g: ExtendedGraph) -> Dict[str, List[MoveCandidate]]:
    index = defaultdict(list)
    for candidate in move_candidates(g):
        for v in candidate.touched:
            index[v].append(candidate)
    return index


def _alternates(labels: Mapping[Edge, EdgeLabel], cycle: Tuple[str, ...]) -> bool:
    colors = []
    for i in range(4):
        label = labels.get(edge_key(cycle[i], cycle[(i + 1) % 4]))
        if label is None:
            return False
        colors.append(label.color)
    return colors[0] != colors[1] and colors[0] == colors[2] and colors[1] == colors[3]


def _move_on(g: ExtendedGraph, labels: Dict[Edge, EdgeLabel], candidate: MoveCandidate) -> Optional[AlternatingFourCycle]:
    if not _alternates(labels, candidate.record.vertices):
        return None
    for chirality in (Chirality.cw, Chirality.ccw):
        if _try_rotation(g, labels, candidate, chirality):
            return AlternatingFourCycle(candidate, chirality)
    return None


def _try_rotation(g: ExtendedGraph, labels: Dict[Edge, EdgeLabel], candidate: MoveCandidate, chirality: Chirality) -> bool:
    saved = {e: labels[e] for e in candidate.inner}
    for e in candidate.inner:
        labels[e] = saved[e].rotated(chirality)
    try:
        return all(_valid_at(g, labels, v) for e in candidate.inner for v in e)
    finally:
        labels.update(saved)


def _rotate(labels: Dict[Edge, EdgeLabel], move: AlternatingFourCycle) -> None:
    for e in move.candidate.inner:
        labels[e] = labels[e].rotated(move.chirality)


def find_alternating_cycles(r: RegularEdgeLabeling) -> List[AlternatingFourCycle]:
    '''Every alternating 4-cycle of the labeling with the chirality of its move, ordered by cycle.'''
    labels = dict(r.labels)
    result = []
    for candidate in move_candidates(r.host):
        move = _move_on(r.host, labels, candidate)
        if move is not None:
            result.append(move)
    return result


def apply_move(r: RegularEdgeLabeling, c: AlternatingFourCycle) -> RegularEdgeLabeling:
    labels = dict(r.labels)
    if not _alternates(labels, c.cycle.vertices) or not _try_rotation(r.host, labels, c.candidate, c.chirality):
        raise InvalidMoveException("{} is not a {} move of this labeling".format(c.item, c.chirality))
    _rotate(labels, c)
    return RegularEdgeLabeling(r.host, labels)


def monotone_sweep(r: RegularEdgeLabeling, direction: Direction, rng: Optional[random.Random] = None,
                   limits: Optional[Mapping[FlipItem, int]] = None):
    """Applies clockwise (down) or counterclockwise (up) moves until none is left. Availability is only
       rechecked around the vertices a move touched.

       :param r: starting labeling
       :param direction: down or up
       :param rng: random tie-breaking instead of the smallest cycle
       :param limits: if given, the most times each item may be flipped (items not listed: never)

       :returns: generator yielding every move made; its return value is the final labeling
    """
    g = r.host
    wanted = Chirality.cw if direction == Direction.down else Chirality.ccw
    labels = dict(r.labels)
    by_vertex = _candidates_by_vertex(g)
    flips: Dict[FlipItem, int] = defaultdict(int)

    available: Dict[Tuple, AlternatingFourCycle] = {}

    def recheck(candidate: MoveCandidate) -> None:
        key = candidate.record.vertices
        if limits is not None and flips[candidate.item] >= limits.get(candidate.item, 0):
            available.pop(key, None)
            return
        move = _move_on(g, labels, candidate)
        if move is not None and move.chirality == wanted:
            available[key] = move
        else:
            available.pop(key, None)

    for candidate in move_candidates(g):
        recheck(candidate)

    while available:
        key = min(available) if rng is None else rng.choice(sorted(available))
        move = available[key]
        _rotate(labels, move)
        flips[move.item] += 1
        yield move
        endpoints = {v for e in move.candidate.inner for v in e}
        for candidate in {c for v in endpoints for c in by_vertex.get(v, ())}:
            recheck(candidate)

    return RegularEdgeLabeling(g, labels)


def extremal_rel(r: RegularEdgeLabeling, direction: Direction, rng: Optional[random.Random] = None) -> RegularEdgeLabeling:
    '''The bottom (down) or top (up) of the lattice, reached by moves; ties go to the smallest cycle unless rng is given.'''
    _, result = drain(monotone_sweep(r, direction, rng))
    return result


def drain(sweep) -> Tuple[List[AlternatingFourCycle], RegularEdgeLabeling]:
    '''Runs a sweep to the end; returns the moves made and the final labeling.'''
    moves = []
    while True:
        try:
            moves.append(next(sweep))
        except StopIteration as stop:
            return moves, stop.value


class Rect(NamedTuple):
    x0: int
    y0: int
    x1: int
    y1: int


@dataclass(frozen=True)
class LayoutGeometry:
    rects: Dict[str, Rect]

    @property
    def width(self) -> int:
        return max(rect.x1 for rect in self.rects.values())

    @property
    def height(self) -> int:
        return max(rect.y1 for rect in self.rects.values())

    def to_json(self) -> dict:
        return {v: rect._asdict() for v, rect in sorted(self.rects.items())}


def _compact(g: ExtendedGraph, r: RegularEdgeLabeling, color: Color, low: str, high: str) -> Dict[Tuple[str, str], int]:
    '''Longest-path coordinates for the maximal segments of one direction. Low and high name the two
       sides of a rectangle that edges of this color glue together. Rectangles in contact across the
       other direction must overlap by at least one unit.'''
    segments = UnionFind()
    for label in r.labels.values():
        if label.color == color:
            segments.union((high, label.tail), (low, label.head))
    order = nx.DiGraph()
    for v in g.inner_vertices:
        order.add_edge(segments[(low, v)], segments[(high, v)])
    for label in r.labels.values():
        if label.color != color and not g.is_corner(label.tail) and not g.is_corner(label.head):
            order.add_edge(segments[(low, label.tail)], segments[(high, label.head)])
            order.add_edge(segments[(low, label.head)], segments[(high, label.tail)])
    position: Dict = {}
    for node in nx.topological_sort(order):
        position[node] = max((position[p] + 1 for p in order.predecessors(node)), default=0)
    return {(side, v): position[segments[(side, v)]] for v in g.inner_vertices for side in (low, high)}


def geometry(r: RegularEdgeLabeling) -> LayoutGeometry:
    '''Integer rectangles for the inner vertices: x from the blue segments, y from the red segments.'''
    g = r.host
    xs = _compact(g, r, Color.blue, 'left', 'right')
    ys = _compact(g, r, Color.red, 'bottom', 'top')
    rects = {v: Rect(xs[('left', v)], ys[('bottom', v)], xs[('right', v)], ys[('top', v)]) for v in g.inner_vertices}
    return LayoutGeometry(rects)


def _overlap(a0: int, a1: int, b0: int, b1: int) -> bool:
    return min(a1, b1) > max(a0, b0)


def contacts(geo: LayoutGeometry) -> Dict[Edge, Tuple[str, str]]:
    '''Pairs of rectangles sharing a border of positive length, with ('vertical' or 'horizontal', lower-left one).'''
    result = {}
    by_left, by_right = defaultdict(list), defaultdict(list)
    by_bottom, by_top = defaultdict(list), defaultdict(list)
    for v, rect in geo.rects.items():
        by_left[rect.x0].append(v)
        by_right[rect.x1].append(v)
        by_bottom[rect.y0].append(v)
        by_top[rect.y1].append(v)
    for x, lefts in by_right.items():
        for u in lefts:
            for v in by_left.get(x, ()):
                a, b = geo.rects[u], geo.rects[v]
                if _overlap(a.y0, a.y1, b.y0, b.y1):
                    result[edge_key(u, v)] = ('vertical', u)
    for y, lows in by_top.items():
        for u in lows:
            for v in by_bottom.get(y, ()):
                a, b = geo.rects[u], geo.rects[v]
                if _overlap(a.x0, a.x1, b.x0, b.x1):
                    result[edge_key(u, v)] = ('horizontal', u)
    return result


def induced_labeling(g: ExtendedGraph, geo: LayoutGeometry) -> RegularEdgeLabeling:
    '''Labels read back from shared borders: vertical borders give blue edges, horizontal ones red.'''
    labels = {}
    for e, (kind, first) in contacts(geo).items():
        other = e[1] if e[0] == first else e[0]
        labels[e] = EdgeLabel(Color.blue if kind == 'vertical' else Color.red, first, other)
    width, height = geo.width, geo.height
    l, t, r, b = g.outer_quad
    for v, rect in geo.rects.items():
        if rect.x0 == 0:
            labels[edge_key(l, v)] = EdgeLabel(Color.blue, l, v)
        if rect.x1 == width:
            labels[edge_key(v, r)] = EdgeLabel(Color.blue, v, r)
        if rect.y0 == 0:
            labels[edge_key(b, v)] = EdgeLabel(Color.red, b, v)
        if rect.y1 == height:
            labels[edge_key(v, t)] = EdgeLabel(Color.red, v, t)
    return RegularEdgeLabeling(g, labels)


def check_geometry(r: RegularEdgeLabeling, geo: LayoutGeometry) -> ValidationReport:
    '''Tiling, junction and contact checks of a geometry against the labeling it came from.'''
    report = ValidationReport()
    names = sorted(geo.rects)
    area = sum((rect.x1 - rect.x0) * (rect.y1 - rect.y0) for rect in geo.rects.values())
    if area != geo.width * geo.height or any(rect.x0 >= rect.x1 or rect.y0 >= rect.y1 for rect in geo.rects.values()):
        report.add(ViolationCode.NOT_TILING, (), "Rectangles do not tile the bounding box")
    for i, u in enumerate(names):
        a = geo.rects[u]
        for v in names[i + 1:]:
            c = geo.rects[v]
            if _overlap(a.x0, a.x1, c.x0, c.x1) and _overlap(a.y0, a.y1, c.y0, c.y1):
                report.add(ViolationCode.NOT_TILING, (u, v), "Rectangles {} and {} overlap".format(u, v))

    corner_count: Dict[Tuple[int, int], int] = defaultdict(int)
    for rect in geo.rects.values():
        for point in ((rect.x0, rect.y0), (rect.x0, rect.y1), (rect.x1, rect.y0), (rect.x1, rect.y1)):
            corner_count[point] += 1
    for point, count in sorted(corner_count.items()):
        if count >= 4:
            report.add(ViolationCode.FOUR_WAY_JUNCTION, tuple(str(c) for c in point),
                       "Four rectangles meet at {}".format(point))

    induced = induced_labeling(r.host, geo).labels
    wanted = {e: lab for e, lab in r.labels.items()}
    for e in sorted(set(induced) | set(wanted)):
        if e not in induced or e not in wanted:
            report.add(ViolationCode.CONTACT_MISMATCH, e, "Contact {}-{} differs from the graph".format(*e))
        elif induced[e] != wanted[e]:
            report.add(ViolationCode.LABEL_MISMATCH, e, "Border {}-{} disagrees with its label".format(*e))
    return report
