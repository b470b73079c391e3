# -*- coding: utf-8 -*-

"""Unit tests for regular edge labelings, moves and geometry
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import random
import sys
from unittest import TestCase

sys.path.append("..")

from fixtures import nest, pin, single, strip  # type: ignore[import-not-found]

from rlayouttools.exceptions import InvalidMoveException
from rlayouttools.options import Chirality, Color, Direction
from rlayouttools.plane_graph import edge_key
from rlayouttools.rel_engine import (RELATIONS, EdgeLabel, FlipItem, RegularEdgeLabeling, all_rels, apply_move,
                                     check_geometry, corner_label, drain, extremal_rel, find_alternating_cycles,
                                     flippable_items, geometry, induced_labeling, initial_rel, label_from_relation,
                                     monotone_sweep, validate_rel)
from rlayouttools.validation_report import ViolationCode


class EdgeLabelTest(TestCase):
    def test_four_turns(self):
        label = EdgeLabel(Color.blue, "u", "v")
        turned = label
        for _ in range(4):
            turned = turned.rotated(Chirality.ccw)
        self.assertEqual(turned, label)

    def test_turns_undo(self):
        label = EdgeLabel(Color.red, "u", "v")
        self.assertEqual(label.rotated(Chirality.ccw).rotated(Chirality.cw), label)

    def test_relations(self):
        for relation in RELATIONS:
            self.assertEqual(label_from_relation("u", "v", relation).relation("u"), relation)
        self.assertEqual(label_from_relation("u", "v", "u_left_of_v").relation("v"), "u_right_of_v")

    def test_unknown_relation(self):
        with self.assertRaises(ValueError):
            label_from_relation("u", "v", "u_inside_v")

    def test_corner_labels(self):
        g, _ = single()
        self.assertEqual(corner_label(g, "l", "R0"), EdgeLabel(Color.blue, "l", "R0"))
        self.assertEqual(corner_label(g, "r", "R0"), EdgeLabel(Color.blue, "R0", "r"))
        self.assertEqual(corner_label(g, "b", "R0"), EdgeLabel(Color.red, "b", "R0"))
        self.assertEqual(corner_label(g, "t", "R0"), EdgeLabel(Color.red, "R0", "t"))

    def test_item_names(self):
        item = FlipItem('edge', ("a1", "b2"))
        self.assertEqual(str(item), "edge:a1-b2")
        self.assertEqual(FlipItem.parse("edge:a1-b2"), item)
        with self.assertRaises(ValueError):
            FlipItem.parse("face:a1-b2")


class ValidateRelTest(TestCase):
    def test_layout_labelings_are_valid(self):
        for build in (single, pin, strip, nest):
            _, r = build()
            self.assertTrue(validate_rel(r).ok, validate_rel(r).to_json())

    def test_missing_label(self):
        _, r = strip()
        labels = dict(r.labels)
        del labels[edge_key("a2", "b2")]
        codes = [v.code for v in validate_rel(RegularEdgeLabeling(r.host, labels)).violations]
        self.assertIn(ViolationCode.UNLABELED_EDGE, codes)

    def test_wrong_corner_label(self):
        g, r = single()
        labels = dict(r.labels)
        labels[edge_key("l", "R0")] = EdgeLabel(Color.blue, "R0", "l")
        codes = [v.code for v in validate_rel(RegularEdgeLabeling(g, labels)).violations]
        self.assertIn(ViolationCode.CORNER_LABEL, codes)

    def test_block_order(self):
        _, r = strip()
        labels = dict(r.labels)
        labels[edge_key("a1", "a2")] = EdgeLabel(Color.red, "a1", "a2")
        codes = [v.code for v in validate_rel(RegularEdgeLabeling(r.host, labels)).violations]
        self.assertIn(ViolationCode.BLOCK_ORDER, codes)

    def test_outer_edge_labeled(self):
        g, r = single()
        labels = dict(r.labels)
        labels[edge_key("l", "t")] = EdgeLabel(Color.red, "l", "t")
        codes = [v.code for v in validate_rel(RegularEdgeLabeling(g, labels)).violations]
        self.assertIn(ViolationCode.OUTER_EDGE_LABELED, codes)

    def test_initial_rel(self):
        for build in (single, pin, strip, nest):
            g, _ = build()
            self.assertTrue(validate_rel(initial_rel(g)).ok)


class AllRelsTest(TestCase):
    def test_counts(self):
        self.assertEqual(sum(1 for _ in all_rels(single()[0])), 1)
        self.assertEqual(sum(1 for _ in all_rels(pin()[0])), 2)
        self.assertEqual(sum(1 for _ in all_rels(strip()[0])), 8)
        self.assertEqual(sum(1 for _ in all_rels(nest()[0])), 4)

    def test_all_valid_and_distinct(self):
        rels = list(all_rels(strip()[0]))
        self.assertEqual(len(set(rels)), len(rels))
        for r in rels:
            self.assertTrue(validate_rel(r).ok)


class MoveTest(TestCase):
    def test_flippable_items(self):
        self.assertListEqual(flippable_items(single()[0]), [])

        g, _ = pin()
        items = flippable_items(g)
        self.assertIn(FlipItem('vertex', ("R0.c",)), items)
        self.assertFalse(any(g.is_corner(v) for item in items for v in item.vertices))

        items = flippable_items(strip()[0])
        for u, v in (("a1", "b2"), ("a2", "b2"), ("a2", "b3"), ("a3", "b3")):
            self.assertIn(FlipItem('edge', (u, v)), items)
        # b1 and b4 have degree four but touch corners
        self.assertNotIn(FlipItem('edge', ("a1", "b1")), items)
        self.assertNotIn(FlipItem('vertex', ("b1",)), items)

    def test_pinwheel_turns_both_ways(self):
        g, _ = pin()
        bottom = extremal_rel(initial_rel(g), Direction.down)
        (up,) = find_alternating_cycles(bottom)
        self.assertEqual(up.chirality, Chirality.ccw)
        top = apply_move(bottom, up)
        self.assertTrue(validate_rel(top).ok)
        self.assertNotEqual(top, bottom)
        (down,) = find_alternating_cycles(top)
        self.assertEqual(down.chirality, Chirality.cw)
        self.assertEqual(apply_move(top, down), bottom)

    def test_move_in_wrong_direction(self):
        g, _ = pin()
        bottom = extremal_rel(initial_rel(g), Direction.down)
        (up,) = find_alternating_cycles(bottom)
        with self.assertRaises(InvalidMoveException):
            apply_move(bottom, up.reversed())

    def test_sweeps_reach_the_same_extremes(self):
        g, _ = strip()
        start = initial_rel(g)
        top = extremal_rel(start, Direction.up)
        for seed in range(5):
            self.assertEqual(extremal_rel(start, Direction.up, random.Random(seed)), top)
        self.assertListEqual([m for m in find_alternating_cycles(top) if m.chirality == Chirality.ccw], [])

    def test_sweep_respects_limits(self):
        g, _ = strip()
        bottom = extremal_rel(initial_rel(g), Direction.down)
        moves, result = drain(monotone_sweep(bottom, Direction.up, limits={}))
        self.assertListEqual(moves, [])
        self.assertEqual(result, bottom)


class GeometryTest(TestCase):
    def test_geometry_of_every_layout(self):
        for build in (pin, strip, nest):
            g, _ = build()
            for r in all_rels(g):
                geo = geometry(r)
                self.assertTrue(check_geometry(r, geo).ok, check_geometry(r, geo).to_json())
                self.assertEqual(induced_labeling(g, geo), r)

    def test_single_rectangle(self):
        _, r = single()
        geo = geometry(r)
        self.assertEqual((geo.width, geo.height), (1, 1))
        self.assertEqual(geo.to_json(), {"R0": {"x0": 0, "y0": 0, "x1": 1, "y1": 1}})

    def test_mismatch_is_reported(self):
        _, r = strip()
        geo = geometry(r)
        labels = dict(r.labels)
        labels[edge_key("a1", "a2")] = EdgeLabel(Color.blue, "a2", "a1")
        codes = [v.code for v in check_geometry(RegularEdgeLabeling(r.host, labels), geo).violations]
        self.assertIn(ViolationCode.LABEL_MISMATCH, codes)
