# -*- coding: utf-8 -*-

"""Unit tests for the area-universal layout search
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import sys
from collections import Counter
from unittest import TestCase

sys.path.append("..")

from fixtures import nest, pin, single, strip  # type: ignore[import-not-found]

from rlayouttools.area_universal import (StretchedPair, area_universal_partitions, candidate_pairs, extreme_profile,
                                         is_area_universal_layout, is_area_universal_partition, is_fixed, is_stretched,
                                         movable_items, pair_sets, search_across_pieces,
                                         search_area_universal_constrained)
from rlayouttools.constraint_lattice import ConstraintSpecs, EdgeConstraintSpec, solve
from rlayouttools.decomposer import solve_tree
from rlayouttools.exceptions import SearchIncompleteException
from rlayouttools.flip_lattice import build_partial_order, partition_of
from rlayouttools.rel_engine import FlipItem, all_rels

CENTER = FlipItem('vertex', ("R0.c",))


class ProfileTest(TestCase):
    def test_pinwheel_layouts_are_area_universal(self):
        for r in all_rels(pin()[0]):
            self.assertTrue(is_area_universal_layout(r))
            self.assertListEqual(movable_items(r), [CENTER])

    def test_strip_layouts_are_not(self):
        for r in all_rels(strip()[0]):
            self.assertFalse(is_area_universal_layout(r))
            self.assertTrue(all(item.kind == 'edge' for item in movable_items(r)))

    def test_single_rectangle(self):
        _, r = single()
        self.assertTrue(is_area_universal_layout(r))
        self.assertListEqual(movable_items(r), [])

    def test_nested_layouts(self):
        for r in all_rels(nest()[0]):
            self.assertTrue(is_area_universal_layout(r))
            self.assertSetEqual({item.kind for item in movable_items(r)}, {'vertex', 'cycle'})

    def test_extreme_profile_of_bottom(self):
        order = build_partial_order(pin()[0])
        partition = partition_of(order, [])
        profile = extreme_profile(order, partition)
        self.assertEqual(profile.lower_maximal, frozenset())
        self.assertEqual(profile.upper_minimal, frozenset([CENTER]))
        self.assertTrue(profile.ok)
        self.assertTrue(is_area_universal_partition(order, partition))
        self.assertDictEqual(profile.to_json(), {"lower_maximal": [], "upper_minimal": ["vertex:R0.c"],
                                                 "area_universal": True})


class StretchedPairTest(TestCase):
    def test_needs_a_vertex(self):
        with self.assertRaises(ValueError):
            StretchedPair(None, None)

    def test_candidates(self):
        v = FlipItem('vertex', ("v",))
        w = FlipItem('vertex', ("w",))
        pairs = candidate_pairs([v, w])
        self.assertEqual(len(pairs), 6)
        self.assertIn(StretchedPair(v, w), pairs)
        self.assertIn(StretchedPair(None, w), pairs)

    def test_pair_sets_smallest_first(self):
        v = FlipItem('vertex', ("v",))
        w = FlipItem('vertex', ("w",))
        sets = list(pair_sets([v, w], limit=10))
        self.assertEqual(len(sets), 10)
        self.assertTupleEqual(sets[0], ())
        self.assertTrue(all(len(s) == 1 for s in sets[1:7]))

    def test_boundary_pairs(self):
        order = build_partial_order(pin()[0])
        bottom = partition_of(order, [])
        top = partition_of(order, order.elements)
        self.assertTrue(is_stretched(StretchedPair(None, CENTER), order, bottom))
        self.assertFalse(is_stretched(StretchedPair(CENTER, None), order, bottom))
        self.assertTrue(is_stretched(StretchedPair(CENTER, None), order, top))
        self.assertFalse(is_stretched(StretchedPair(None, CENTER), order, top))


class SearchTest(TestCase):
    def test_pinwheel(self):
        stats: Counter = Counter()
        result = search_area_universal_constrained(solve(pin()[0], ConstraintSpecs()), stats=stats)
        self.assertIsNotNone(result)
        self.assertTrue(result.profile.ok)
        self.assertTrue(is_area_universal_layout(result.layout))
        self.assertGreaterEqual(stats['pair_sets'], 1)

    def test_pinwheel_with_constraint(self):
        g, r = pin()
        fixed = r.label("R0.c", "R0.n").relation("R0.c")
        problem = solve(g, ConstraintSpecs((EdgeConstraintSpec("R0.c", "R0.n", frozenset([fixed])),)))
        result = search_area_universal_constrained(problem)
        self.assertIsNotNone(result)
        self.assertNotEqual(result.layout.label("R0.c", "R0.n").relation("R0.c"), fixed)

    def test_strip_has_none(self):
        problem = solve(strip()[0], ConstraintSpecs())
        self.assertIsNone(search_area_universal_constrained(problem))
        self.assertListEqual(list(area_universal_partitions(problem)), [])

    def test_infeasible(self):
        g, _ = pin()
        relations = frozenset(["u_left_of_v", "u_right_of_v", "u_above_v", "u_below_v"])
        problem = solve(g, ConstraintSpecs((EdgeConstraintSpec("R0.c", "R0.n", relations),)))
        self.assertIsNone(search_area_universal_constrained(problem))

    def test_across_pieces(self):
        g, _ = nest()
        result = search_across_pieces(solve_tree(g))
        self.assertIsNotNone(result)
        self.assertIn(result.layout, set(all_rels(g)))
        self.assertTrue(is_area_universal_layout(result.layout))

    def test_across_pieces_keeps_profiles(self):
        result = search_across_pieces(solve_tree(nest()[0]))
        profiles = result.profiles()
        self.assertListEqual([p["piece"] for p in profiles], [0, 1])
        self.assertEqual(profiles[1]["orientation"], 0)
        for p in profiles:
            self.assertTrue(p["certificate"]["area_universal"])
        self.assertIn("vertex:R0.c.c", profiles[0]["certificate"]["lower_maximal"] + profiles[0]["certificate"]["upper_minimal"])

    def test_across_pieces_without_layouts(self):
        self.assertIsNone(search_across_pieces(solve_tree(strip()[0])))

    def test_bounded_search_falls_back_to_scan(self):
        result = search_area_universal_constrained(solve(pin()[0], ConstraintSpecs()), max_pair_sets=0)
        self.assertIsNotNone(result)
        self.assertEqual(result.method, 'scan')

    def test_bounded_search_without_scan_is_incomplete(self):
        problem = solve(pin()[0], ConstraintSpecs())
        with self.assertRaises(SearchIncompleteException):
            search_area_universal_constrained(problem, max_pair_sets=0, exhaustive_limit=0)

    def test_exhausted_pair_sets_are_complete(self):
        problem = solve(pin()[0], ConstraintSpecs())
        self.assertIsNotNone(search_area_universal_constrained(problem, max_pair_sets=len(list(pair_sets([CENTER]))),
                                                               exhaustive_limit=0))

    def test_result_json(self):
        result = search_area_universal_constrained(solve(single()[0], ConstraintSpecs()))
        self.assertIsNotNone(result)
        data = result.to_json()
        self.assertTrue(data["certificate"]["area_universal"])

    def test_unstretched_pair_fixes_nothing(self):
        order = build_partial_order(pin()[0])
        bottom = partition_of(order, [])
        edge = FlipItem('edge', ("R0.c", "R0.n"))
        self.assertFalse(is_fixed(edge, StretchedPair(CENTER, None), order, bottom))
