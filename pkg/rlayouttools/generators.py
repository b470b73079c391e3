# -*- coding: utf-8 -*-

"""Random rectangular layouts and the graphs they are dual to, for tests and scaling runs."""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import random
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

from rlayouttools.constraint_lattice import ConstraintSpecs, EdgeConstraintSpec, JunctionConstraintSpec, SIDES
from rlayouttools.plane_graph import CORNER_SIDES, ExtendedGraph, PlaneGraph
from rlayouttools.rel_engine import RELATIONS, LayoutGeometry, Rect, RegularEdgeLabeling, contacts, induced_labeling

Layout = Dict[str, Rect]


def four_way_points(rects: Layout) -> List[Tuple[Fraction, Fraction]]:
    corners: Counter = Counter()
    for rect in rects.values():
        corners.update([(rect.x0, rect.y0), (rect.x0, rect.y1), (rect.x1, rect.y0), (rect.x1, rect.y1)])
    return sorted(point for point, count in corners.items() if count >= 4)


def random_layout(n: int, rng: random.Random, attempts: int = 100) -> Layout:
    """Dissects the unit square into n rectangles by repeatedly cutting a random rectangle in two.

       :param n: number of rectangles
       :param rng: source of randomness
       :param attempts: cuts tried per step before giving up

       :returns: rectangles with exact rational coordinates, no four of them meeting at a point
    """
    rects: Layout = {"R0": Rect(Fraction(0), Fraction(0), Fraction(1), Fraction(1))}
    while len(rects) < n:
        for _ in range(attempts):
            name = rng.choice(sorted(rects))
            a = rects[name]
            t = Fraction(rng.randint(1, 999), 1000)
            if rng.random() < 0.5:
                x = a.x0 + t * (a.x1 - a.x0)
                first, second = Rect(a.x0, a.y0, x, a.y1), Rect(x, a.y0, a.x1, a.y1)
            else:
                y = a.y0 + t * (a.y1 - a.y0)
                first, second = Rect(a.x0, a.y0, a.x1, y), Rect(a.x0, y, a.x1, a.y1)
            trial = dict(rects)
            trial[name] = first
            trial["R{}".format(len(rects))] = second
            if not four_way_points(trial):
                rects = trial
                break
        else:
            raise ValueError("Could not cut a rectangle without creating a four-way junction")
    return rects


def pinwheel(rects: Layout, name: str, depth: int = 1) -> Layout:
    '''Replaces a rectangle by a pinwheel of four arms around a center, and the center again, depth times.'''
    result = dict(rects)
    for _ in range(depth):
        a = result.pop(name)
        w, h = a.x1 - a.x0, a.y1 - a.y0
        x1, x2 = a.x0 + w / 3, a.x0 + 2 * w / 3
        y1, y2 = a.y0 + h / 3, a.y0 + 2 * h / 3
        result[name + ".n"] = Rect(a.x0, y2, x2, a.y1)
        result[name + ".e"] = Rect(x2, y1, a.x1, a.y1)
        result[name + ".s"] = Rect(x1, a.y0, a.x1, y1)
        result[name + ".w"] = Rect(a.x0, a.y0, x1, y2)
        name = name + ".c"
        result[name] = Rect(x1, y1, x2, y2)
    if four_way_points(result):
        raise ValueError("Pinwheel creates a four-way junction")
    return result


def _midpoint(a0, a1, b0, b1) -> Fraction:
    return (max(a0, b0) + min(a1, b1)) / 2


def graph_from_layout(rects: Layout) -> Tuple[ExtendedGraph, RegularEdgeLabeling]:
    """The extended graph dual to a layout, embedded as the layout is drawn, and the layout's own labeling.

       :param rects: rectangles tiling a box whose lower left corner is the origin

       :returns: extended graph with corners l, t, r, b and the labeling induced by the layout
    """
    geo = LayoutGeometry(dict(rects))
    width, height = geo.width, geo.height
    sides: Dict[str, Dict[str, List[Tuple[Fraction, str]]]] = {v: defaultdict(list) for v in rects}
    for (u, v), (kind, first) in contacts(geo).items():
        other = v if first == u else u
        a, b = rects[first], rects[other]
        if kind == 'vertical':
            y = _midpoint(a.y0, a.y1, b.y0, b.y1)
            sides[first]['right'].append((-y, other))
            sides[other]['left'].append((y, first))
        else:
            x = _midpoint(a.x0, a.x1, b.x0, b.x1)
            sides[first]['top'].append((x, other))
            sides[other]['bottom'].append((-x, first))

    l, t, r, b = CORNER_SIDES
    for v, a in rects.items():
        if a.x0 == 0:
            sides[v]['left'].append((0, l))
        if a.x1 == width:
            sides[v]['right'].append((0, r))
        if a.y0 == 0:
            sides[v]['bottom'].append((0, b))
        if a.y1 == height:
            sides[v]['top'].append((0, t))

    rotation = {v: [w for side in ('top', 'right', 'bottom', 'left') for _, w in sorted(sides[v][side])]
                for v in rects}
    rotation[l] = [t] + sorted((v for v, a in rects.items() if a.x0 == 0), key=lambda v: -rects[v].y0) + [b]
    rotation[t] = [r] + sorted((v for v, a in rects.items() if a.y1 == height), key=lambda v: -rects[v].x0) + [l]
    rotation[r] = [b] + sorted((v for v, a in rects.items() if a.x1 == width), key=lambda v: rects[v].y0) + [t]
    rotation[b] = [l] + sorted((v for v, a in rects.items() if a.y0 == 0), key=lambda v: rects[v].x0) + [r]

    g = ExtendedGraph(PlaneGraph(rotation), dict(zip(CORNER_SIDES, CORNER_SIDES)))
    return g, induced_labeling(g, geo)


def random_graph(n: int, rng: random.Random, pinwheels: int = 0, depth: int = 1) -> Tuple[ExtendedGraph, RegularEdgeLabeling]:
    '''A random proper graph with n rectangles before any pinwheels are inserted.'''
    rects = random_layout(n, rng)
    for _ in range(pinwheels):
        for _attempt in range(20):
            try:
                rects = pinwheel(rects, rng.choice(sorted(v for v in rects if not v.endswith('.c'))), depth)
                break
            except ValueError:
                continue
    return graph_from_layout(rects)


def random_constraints(g: ExtendedGraph, rng: random.Random, edges: int = 2, junctions: int = 1) -> ConstraintSpecs:
    '''Random forbidden labels and junction configurations on inner edges and faces.'''
    inner = [e for e in g.inner_edges if not g.is_corner(e[0]) and not g.is_corner(e[1])]
    triangles = [f for f in g.graph.faces if len(f) == 3 and not any(g.is_corner(v) for v in f)]
    edge_specs = []
    for u, v in rng.sample(inner, min(edges, len(inner))):
        forbidden = rng.sample(RELATIONS, rng.randint(1, 2))
        edge_specs.append(EdgeConstraintSpec(u, v, frozenset(forbidden)))
    junction_specs = []
    for triangle in rng.sample(triangles, min(junctions, len(triangles))):
        configurations = [(f, s) for f in triangle for s in SIDES]
        junction_specs.append(JunctionConstraintSpec(tuple(triangle), frozenset(rng.sample(configurations, rng.randint(1, 4)))))
    return ConstraintSpecs(tuple(edge_specs), tuple(junction_specs))
