# -*- coding: utf-8 -*-

"""Unit tests for the separation decomposition and gluing
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import math
import random
import sys
import time
from collections import Counter
from unittest import TestCase

sys.path.append("..")

from fixtures import nest, pin, strip  # type: ignore[import-not-found]

from rlayouttools.constraint_lattice import ConstraintSpecs, EdgeConstraintSpec, satisfies
from rlayouttools.decomposer import (decompose, enumerate_glued, holder_of_edge, orientation_of, reconstruct,
                                     same_embedding, solve_bottom_up, solve_tree, split_constraints)
from rlayouttools.exceptions import ConstraintSpecException
from rlayouttools.generators import random_graph
from rlayouttools.rel_engine import RELATIONS, all_rels, validate_rel

ARMS = ("R0.e", "R0.s", "R0.w", "R0.n")


def _edge(u, v, *forbidden):
    return EdgeConstraintSpec(u, v, frozenset(forbidden))


class DecomposeTest(TestCase):
    def test_graph_without_nesting(self):
        tree = decompose(pin()[0])
        self.assertEqual(len(tree), 1)
        self.assertTrue(tree.piece(tree.root).is_root)

    def test_nested_pinwheel(self):
        g, _ = nest()
        tree = decompose(g)
        self.assertEqual(len(tree), 2)
        inner, root = tree.pieces
        self.assertEqual(root.id, tree.root)
        self.assertTupleEqual(inner.cycle, ARMS)
        self.assertEqual(inner.supervertex, "[R0.e,R0.s,R0.w,R0.n]")
        self.assertEqual(inner.parent, root.id)
        self.assertListEqual(root.children, [inner.id])
        self.assertEqual(len(inner.inner_vertices()), 5)
        self.assertIn(inner.supervertex, root.graph.rotation)
        self.assertEqual(root.graph.degree(inner.supervertex), 4)

    def test_innermost_first(self):
        tree = decompose(nest(3)[0])
        self.assertEqual(len(tree), 3)
        self.assertEqual(len(tree.pieces[0].inner_vertices()), 5)
        self.assertEqual(tree.pieces[1].children, [0])
        self.assertListEqual([p.id for p in tree.glue_order()], [2, 1, 0])

    def test_reconstruct(self):
        for depth in (2, 3):
            g, _ = nest(depth)
            self.assertTrue(same_embedding(reconstruct(decompose(g)), g.graph))

    def test_rotations_of_a_piece(self):
        inner = decompose(nest()[0]).pieces[0]
        self.assertListEqual(list(inner.orientations()), [0, 1, 2, 3])
        self.assertEqual(inner.oriented(1).corners, {"l": "R0.s", "t": "R0.w", "r": "R0.n", "b": "R0.e"})

    def test_json(self):
        data = decompose(nest()[0]).to_json()
        self.assertEqual(data["root"], 1)
        self.assertListEqual(data["pieces"][0]["cycle"], list(ARMS))
        self.assertIsNone(data["pieces"][1]["cycle"])


class ConstraintRoutingTest(TestCase):
    def test_inner_edge_goes_to_inner_piece(self):
        tree = decompose(nest()[0])
        self.assertEqual(holder_of_edge(tree, "R0.c.c", "R0.c.n").id, 0)
        self.assertEqual(holder_of_edge(tree, "R0.n", "R0.c.n").id, 0)
        self.assertEqual(holder_of_edge(tree, "R0.n", "R0.e").id, 1)

    def test_unknown_edge(self):
        tree = decompose(nest()[0])
        with self.assertRaises(ConstraintSpecException):
            holder_of_edge(tree, "R0.n", "R0.s")

    def test_split(self):
        tree = decompose(nest()[0])
        specs = ConstraintSpecs((_edge("R0.c.c", "R0.c.n", "u_left_of_v"), _edge("R0.n", "R0.e", "u_left_of_v")))
        split = split_constraints(tree, specs)
        self.assertEqual(len(split[0].edges), 1)
        self.assertEqual(len(split[1].edges), 1)


class SolveTreeTest(TestCase):
    def _brute_force(self, g, specs):
        return {r for r in all_rels(g) if satisfies(r, specs)}

    def test_unconstrained(self):
        g, _ = nest()
        solution = solve_tree(g)
        self.assertTrue(solution.feasible)
        self.assertListEqual(solution.pieces[0].feasible_orientations, [0, 1, 2, 3])
        glued = list(enumerate_glued(solution))
        self.assertEqual(len(glued), 4)
        self.assertSetEqual(set(glued), set(all_rels(g)))
        for r in glued:
            self.assertTrue(validate_rel(r).ok)

    def test_graph_without_nesting(self):
        g, _ = strip()
        self.assertEqual(sum(1 for _ in enumerate_glued(solve_tree(g))), 8)

    def test_inner_chirality(self):
        g, r = nest()
        fixed = r.label("R0.c.c", "R0.c.n").relation("R0.c.c")
        specs = ConstraintSpecs((_edge("R0.c.c", "R0.c.n", fixed),))
        glued = set(enumerate_glued(solve_tree(g, specs)))
        # three of the four layouts give the edge another relation
        self.assertEqual(len(glued), 3)
        self.assertSetEqual(glued, self._brute_force(g, specs))

    def test_constraint_on_cycle_vertex_filters_rotations(self):
        g, r = nest()
        fixed = r.label("R0.n", "R0.c.n").relation("R0.n")
        specs = ConstraintSpecs((_edge("R0.n", "R0.c.n", fixed),))
        solution = solve_tree(g, specs)
        self.assertEqual(len(solution.pieces[0].feasible_orientations), 3)
        glued = set(enumerate_glued(solution))
        self.assertEqual(len(glued), 2)
        self.assertSetEqual(glued, self._brute_force(g, specs))

    def test_contradictory_inner_constraints(self):
        g, _ = nest()
        solution = solve_tree(g, ConstraintSpecs((_edge("R0.c.c", "R0.c.n", *RELATIONS),)))
        self.assertFalse(solution.pieces[0].feasible)
        self.assertEqual(len(solution.pieces[0].forbidden_labels()), 4)
        self.assertFalse(solution.feasible)
        self.assertListEqual(list(enumerate_glued(solution)), [])
        self.assertSetEqual(self._brute_force(g, ConstraintSpecs((_edge("R0.c.c", "R0.c.n", *RELATIONS),))), set())

    def test_twice_nested(self):
        g, _ = nest(3)
        glued = set(enumerate_glued(solve_tree(g)))
        self.assertEqual(len(glued), 8)

    def test_orientation_of_glued_layout(self):
        g, _ = nest()
        solution = solve_tree(g)
        inner = solution.tree.pieces[0]
        root = solution.pieces[solution.tree.root]
        orientations = set()
        for layout in root.problems[0].layouts():
            orientations.add(orientation_of(layout.labels, inner))
        self.assertEqual(len(orientations), 2)

    def test_bottom_up_from_split(self):
        g, r = nest()
        fixed = r.label("R0.n", "R0.c.n").relation("R0.n")
        specs = ConstraintSpecs((_edge("R0.n", "R0.c.n", fixed),))
        tree = decompose(g)
        solution = solve_bottom_up(tree, split_constraints(tree, specs))
        self.assertSetEqual(set(enumerate_glued(solution)), set(enumerate_glued(solve_tree(g, specs))))


class ScalingTest(TestCase):
    SIZES = (100, 200, 400, 800)

    def _work(self, n):
        g, _ = random_graph(n, random.Random(n), pinwheels=n // 100, depth=2)
        stats = Counter()
        tree = decompose(g, stats)
        solution = solve_bottom_up(tree, split_constraints(tree, ConstraintSpecs()), stats)
        self.assertTrue(solution.feasible)
        return stats['cycle_checks'] + stats['elements']

    def test_work_grows_at_most_quadratically(self):
        work = {n: self._work(n) for n in self.SIZES}
        slope = math.log(work[800] / work[100]) / math.log(8)
        self.assertLessEqual(slope, 2.5)

    def test_existence_within_time_limit(self):
        g, _ = random_graph(800, random.Random(800))
        start = time.perf_counter()
        self.assertTrue(solve_tree(g).feasible)
        self.assertLess(time.perf_counter() - start, 10.0)
