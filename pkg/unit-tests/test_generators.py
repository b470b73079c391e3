# -*- coding: utf-8 -*-

"""Unit tests for the random layout and graph generators
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import random
import sys
from fractions import Fraction
from unittest import TestCase

sys.path.append("..")

from fixtures import unit_square  # type: ignore[import-not-found]

from rlayouttools.constraint_lattice import check_specs
from rlayouttools.generators import (four_way_points, graph_from_layout, pinwheel, random_constraints, random_graph,
                                     random_layout)
from rlayouttools.plane_graph import validate_extended
from rlayouttools.rel_engine import Rect, validate_rel


class GeneratorTest(TestCase):
    def test_random_layout_tiles_the_square(self):
        rng = random.Random(1)
        rects = random_layout(12, rng)
        self.assertEqual(len(rects), 12)
        area = sum((r.x1 - r.x0) * (r.y1 - r.y0) for r in rects.values())
        self.assertEqual(area, Fraction(1))
        self.assertListEqual(four_way_points(rects), [])

    def test_same_seed_same_layout(self):
        self.assertDictEqual(random_layout(8, random.Random(5)), random_layout(8, random.Random(5)))

    def test_graph_of_random_layout(self):
        rng = random.Random(3)
        for n in (2, 5, 9):
            g, r = graph_from_layout(random_layout(n, rng))
            self.assertTrue(validate_extended(g).ok)
            self.assertTrue(validate_rel(r).ok)
            self.assertEqual(len(g.inner_vertices), n)

    def test_pinwheel(self):
        rects = pinwheel(unit_square(), "R0", 2)
        self.assertEqual(len(rects), 9)
        self.assertIn("R0.c.c", rects)
        self.assertNotIn("R0", rects)

    def test_four_way_points(self):
        quarters = {
            "a": Rect(Fraction(0), Fraction(0), Fraction(1), Fraction(1)),
            "b": Rect(Fraction(1), Fraction(0), Fraction(2), Fraction(1)),
            "c": Rect(Fraction(0), Fraction(1), Fraction(1), Fraction(2)),
            "d": Rect(Fraction(1), Fraction(1), Fraction(2), Fraction(2)),
        }
        self.assertListEqual(four_way_points(quarters), [(Fraction(1), Fraction(1))])

    def test_random_graph_with_pinwheels(self):
        g, r = random_graph(4, random.Random(11), pinwheels=1, depth=2)
        self.assertTrue(validate_extended(g).ok)
        self.assertTrue(validate_rel(r).ok)

    def test_random_constraints_are_valid(self):
        rng = random.Random(4)
        g, _ = random_graph(8, rng)
        specs = random_constraints(g, rng, edges=3, junctions=2)
        self.assertLessEqual(len(specs.edges), 3)
        self.assertLessEqual(len(specs.junctions), 2)
        check_specs(g, specs)
