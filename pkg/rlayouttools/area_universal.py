# -*- coding: utf-8 -*-

"""Search for area-universal layouts among constrained layouts. A layout is area-universal when
   every item that can move in it, up or down, is a degree-four vertex.
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from rlayouttools.constraint_lattice import ConstrainedProblem, ConstraintSpecs, EdgeConstraintSpec, constrained_ideals, solve
from rlayouttools.decomposer import TreeSolution, holder_of_edge, orientation_of
from rlayouttools.exceptions import SearchIncompleteException
from rlayouttools.flip_lattice import FlipEvent, IdealPartition, PartialOrderP, decode
from rlayouttools.plane_graph import Edge
from rlayouttools.rel_engine import EdgeLabel, FlipItem, RegularEdgeLabeling, find_alternating_cycles

log = logging.getLogger(__name__)

DEFAULT_MAX_PAIR_SETS = 4096
DEFAULT_EXHAUSTIVE_LIMIT = 64


@dataclass(frozen=True)
class StretchedPair:
    lower: Optional[FlipItem]
    upper: Optional[FlipItem]

    def __post_init__(self):
        if self.lower is None and self.upper is None:
            raise ValueError("A stretched pair needs at least one vertex")

    def __str__(self) -> str:
        return "({}, {})".format(self.lower or '-', self.upper or '-')


@dataclass(frozen=True)
class ExtremeProfile:
    lower_maximal: FrozenSet[FlipItem]
    upper_minimal: FrozenSet[FlipItem]

    @property
    def items(self) -> FrozenSet[FlipItem]:
        return self.lower_maximal | self.upper_minimal

    @property
    def ok(self) -> bool:
        return all(item.kind == 'vertex' for item in self.items)

    def to_json(self) -> dict:
        return {"lower_maximal": sorted(str(x) for x in self.lower_maximal),
                "upper_minimal": sorted(str(x) for x in self.upper_minimal),
                "area_universal": self.ok}


def extreme_profile(order: PartialOrderP, partition: IdealPartition) -> ExtremeProfile:
    lower = partition.lower
    maximal = {e.item for e in lower if not any(s in lower for s in order.graph.successors(e))}
    minimal = {e.item for e in partition.upper if all(p in lower for p in order.graph.predecessors(e))}
    return ExtremeProfile(frozenset(maximal), frozenset(minimal))


def is_area_universal_partition(order: PartialOrderP, partition: IdealPartition) -> bool:
    return extreme_profile(order, partition).ok


def is_area_universal_layout(r: RegularEdgeLabeling) -> bool:
    '''The same test read off the moves available in a layout. Turning the inside of a separating
       four-cycle is the move of a degree-four vertex of the contracted graph.'''
    return all(item.kind in ('vertex', 'cycle') for item in movable_items(r))


def movable_items(r: RegularEdgeLabeling) -> List[FlipItem]:
    return sorted({move.item for move in find_alternating_cycles(r)})


def _flips(order: PartialOrderP, partition: IdealPartition) -> Dict[FlipItem, int]:
    counts = {item: 0 for item in order.flip_totals}
    counts.update(partition.targets())
    return counts


def _next_event(order: PartialOrderP, counts: Dict[FlipItem, int], x: FlipItem) -> Optional[FlipEvent]:
    f = counts.get(x, 0)
    return FlipEvent(x, f) if f < order.flip_totals.get(x, 0) else None


def _previous_event(counts: Dict[FlipItem, int], x: FlipItem) -> Optional[FlipEvent]:
    f = counts.get(x, 0)
    return FlipEvent(x, f - 1) if f > 0 else None


def moves_up_before(order: PartialOrderP, partition: IdealPartition, a: FlipItem, b: FlipItem) -> bool:
    '''Every monotone path up from the layout moves a before it moves b.'''
    counts = _flips(order, partition)
    nb = _next_event(order, counts, b)
    if nb is None:
        return True
    na = _next_event(order, counts, a)
    return na is not None and order.less(na, nb)


def moves_down_before(order: PartialOrderP, partition: IdealPartition, a: FlipItem, b: FlipItem) -> bool:
    '''Every monotone path down from the layout moves a before it moves b.'''
    counts = _flips(order, partition)
    pb = _previous_event(counts, b)
    if pb is None:
        return True
    pa = _previous_event(counts, a)
    return pa is not None and order.less(pb, pa)


def is_stretched(pair: StretchedPair, order: PartialOrderP, partition: IdealPartition) -> bool:
    counts = _flips(order, partition)
    if pair.upper is None:
        return counts.get(pair.lower, 0) == order.flip_totals.get(pair.lower, 0)
    if pair.lower is None:
        return counts.get(pair.upper, 0) == 0
    return (moves_up_before(order, partition, pair.upper, pair.lower)
            and moves_down_before(order, partition, pair.lower, pair.upper))


def is_fixed(x: FlipItem, pair: StretchedPair, order: PartialOrderP, partition: IdealPartition) -> bool:
    '''Whether a stretched pair keeps edge x from moving in either direction.'''
    if not is_stretched(pair, order, partition):
        return False
    counts = _flips(order, partition)
    if pair.upper is None:
        up = _next_event(order, counts, x) is None
    else:
        up = _next_event(order, counts, pair.upper) is not None and moves_up_before(order, partition, pair.upper, x)
    if pair.lower is None:
        down = _previous_event(counts, x) is None
    else:
        down = _previous_event(counts, pair.lower) is not None and moves_down_before(order, partition, pair.lower, x)
    return up and down


def candidate_pairs(vertices: List[FlipItem]) -> List[StretchedPair]:
    pairs = [StretchedPair(v, w) for v, w in itertools.permutations(vertices, 2)]
    pairs += [StretchedPair(v, None) for v in vertices]
    pairs += [StretchedPair(None, w) for w in vertices]
    return pairs


def pair_sets(vertices: List[FlipItem], limit: int = DEFAULT_MAX_PAIR_SETS) -> Iterator[Tuple[StretchedPair, ...]]:
    '''Sets of stretched pairs, smallest first, at most limit of them.'''
    pairs = candidate_pairs(vertices)
    assert 2 ** len(pairs) <= 2 ** ((len(vertices) + 1) ** 2)
    emitted = 0
    for size in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, size):
            if emitted >= limit:
                return
            emitted += 1
            yield chosen


@dataclass
class AreaUniversalResult:
    layout: RegularEdgeLabeling
    partition: IdealPartition
    profile: ExtremeProfile
    pairs: Tuple[StretchedPair, ...] = ()
    method: str = 'pairs'

    def to_json(self) -> dict:
        return {"method": self.method, "pairs": [str(p) for p in self.pairs], "certificate": self.profile.to_json()}


def _ascend_for_pairs(problem: ConstrainedProblem, pairs: Tuple[StretchedPair, ...],
                      stats: Counter) -> Optional[FrozenSet[int]]:
    '''Climbs the ideals of the quasiorder from the bottom, flipping the next event of the upper
       vertex of an unstretched pair or a prerequisite of it, until the layout is area-universal.'''
    q = problem.quasiorder
    order = problem.order
    taken = frozenset([q.bottom_component])
    for _ in range(q.component_count + 1):
        stats['ascent_steps'] += 1
        partition = q.partition(taken)
        if is_area_universal_partition(order, partition):
            return taken
        waiting = [p for p in pairs if not is_stretched(p, order, partition)]
        if not waiting:
            return None
        pair = waiting[0]
        if pair.upper is None:
            target_item = pair.lower
        elif pair.lower is None:
            return None
        else:
            target_item = pair.upper
        event = _next_event(order, _flips(order, partition), target_item)
        if event is None:
            return None
        target = q.component_of[event]
        if target == q.top_component:
            return None
        below = (nx.ancestors(q.dag, target) | {target}) - taken
        ready = [c for c in below if all(p in taken for p in q.dag.predecessors(c))]
        taken = taken | {min(ready, key=lambda c: min(q.members[c]))}
    return None


def area_universal_partitions(problem: ConstrainedProblem) -> Iterator[IdealPartition]:
    '''Every constrained partition passing the extreme profile test, by exhaustive scan.'''
    q = problem.quasiorder
    for components in constrained_ideals(q):
        partition = q.partition(components)
        if is_area_universal_partition(problem.order, partition):
            yield partition


def search_area_universal_constrained(problem: ConstrainedProblem, k: Optional[int] = None,
                                      max_pair_sets: int = DEFAULT_MAX_PAIR_SETS,
                                      exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                                      stats: Optional[Counter] = None) -> Optional[AreaUniversalResult]:
    """Looks for an area-universal layout among the constrained layouts of one piece.

       :param problem: the constrained problem of the piece
       :param k: number of degree-four vertices to pair up; defaults to all of them
       :param max_pair_sets: bound on the number of pair sets tried
       :param exhaustive_limit: quasiorders with at most this many components are scanned exhaustively
                                when no pair set leads to a result
       :param stats: optional counter of the work done

       :returns: the layout with its certificate, or None

       :raises SearchIncompleteException: if max_pair_sets cut the search short and the quasiorder is too
                                          large to scan
    """
    stats = stats if stats is not None else Counter()
    if not problem.exists():
        return None
    order = problem.order
    vertices = sorted(x for x in order.flip_totals if x.kind == 'vertex')
    if k is not None:
        vertices = vertices[:k]

    candidates = pair_sets(vertices, max_pair_sets + 1)
    for pairs in itertools.islice(candidates, max_pair_sets):
        stats['pair_sets'] += 1
        taken = _ascend_for_pairs(problem, pairs, stats)
        if taken is not None:
            partition = problem.quasiorder.partition(taken)
            layout = decode(problem.graph, partition, order)
            return AreaUniversalResult(layout, partition, extreme_profile(order, partition), pairs)

    components = problem.quasiorder.component_count
    if components <= exhaustive_limit:
        for partition in area_universal_partitions(problem):
            layout = decode(problem.graph, partition, order)
            return AreaUniversalResult(layout, partition, extreme_profile(order, partition), (), 'scan')
    elif next(candidates, None) is not None:
        raise SearchIncompleteException(
            "Stopped after {} sets of stretched pairs; {} components are too many to scan".format(max_pair_sets, components))
    log.debug("No area-universal layout after %d pair sets", stats['pair_sets'])
    return None


@dataclass
class GluedAreaUniversalResult:
    '''An area-universal layout of the whole graph and, per piece, the profile that certifies its part.'''
    layout: RegularEdgeLabeling
    pieces: Dict[int, Tuple[int, AreaUniversalResult]]

    def profiles(self) -> List[dict]:
        return [dict(piece=i, orientation=r, **result.to_json()) for i, (r, result) in sorted(self.pieces.items())]


def search_across_pieces(solution: TreeSolution, max_pair_sets: int = DEFAULT_MAX_PAIR_SETS,
                         exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> Optional[GluedAreaUniversalResult]:
    '''An area-universal layout of the whole graph, from area-universal layouts of every piece. A
       rotation in which a piece has none is forbidden for its supervertex, as in the feasibility pass.'''
    if not solution.feasible:
        return None
    tree = solution.tree
    forwarded: Dict[int, List[EdgeConstraintSpec]] = {p.id: [] for p in tree.pieces}
    found: Dict[int, Dict[int, AreaUniversalResult]] = {}
    for piece in tree.pieces:
        base = solution.pieces[piece.id].specs
        specs = ConstraintSpecs(base.edges + tuple(forwarded[piece.id]), base.junctions)
        found[piece.id] = {}
        for r in piece.orientations():
            result = search_area_universal_constrained(solve(piece.oriented(r), specs), None, max_pair_sets, exhaustive_limit)
            if result is not None:
                found[piece.id][r] = result
            elif not piece.is_root:
                left = piece.cycle[r]
                holder = holder_of_edge(tree, left, piece.supervertex, after=piece.id)
                forwarded[holder.id].append(EdgeConstraintSpec(left, piece.supervertex, frozenset(['u_left_of_v'])))

    if 0 not in found[tree.root]:
        return None
    labels: Dict[Edge, EdgeLabel] = {}
    used: Dict[int, Tuple[int, AreaUniversalResult]] = {}
    for piece in tree.glue_order():
        orientation = 0 if piece.is_root else orientation_of(labels, piece)
        result = found[piece.id][orientation]
        used[piece.id] = (orientation, result)
        labels.update((e, label) for e, label in result.layout.labels.items() if e not in piece.outer_edges)
    supervertices = {p.supervertex for p in tree.pieces if not p.is_root}
    layout = RegularEdgeLabeling(tree.original, {e: label for e, label in labels.items()
                                                 if e[0] not in supervertices and e[1] not in supervertices})
    return GluedAreaUniversalResult(layout, used)
