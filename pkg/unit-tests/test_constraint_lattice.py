# -*- coding: utf-8 -*-

"""Unit tests for orientation constraints and the quasiorder of constrained layouts
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import random
import sys
from collections import Counter
from unittest import TestCase

sys.path.append("..")

from fixtures import pin, single, strip  # type: ignore[import-not-found]

from rlayouttools.constraint_lattice import (BOTTOM, TOP, AugmentedOrder, ConstraintSpecs, EdgeConstraintSpec,
                                             JunctionConstraintSpec, ResidueConstraint, build_constraint_graph,
                                             build_quasiorder, check_specs, compile_constraints,
                                             constrained_ideals, constrained_layout_exists, enumerate_constrained,
                                             junction_configuration, residue_edges, satisfies, solve)
from rlayouttools.exceptions import ConstraintSpecException
from rlayouttools.flip_lattice import FlipEvent, bottom_rel, build_partial_order
from rlayouttools.generators import random_constraints
from rlayouttools.rel_engine import RELATIONS, FlipItem, all_rels


def _edge(u, v, *forbidden):
    return EdgeConstraintSpec(u, v, frozenset(forbidden))


def _junction(triangle, *forbidden):
    return JunctionConstraintSpec(tuple(triangle), frozenset(forbidden))


def _brute_force(g, specs):
    return {r for r in all_rels(g) if satisfies(r, specs)}


class JunctionConfigurationTest(TestCase):
    def test_flat_rectangle_below(self):
        _, r = strip()
        self.assertEqual(junction_configuration(r, ("a1", "a2", "b2")), ("b2", "bottom"))
        self.assertEqual(junction_configuration(r, ("b2", "a2", "a1")), ("b2", "bottom"))

    def test_flat_rectangle_above(self):
        _, r = strip()
        self.assertEqual(junction_configuration(r, ("a2", "b2", "b3")), ("a2", "top"))

    def test_every_layout_has_one_configuration(self):
        g, _ = strip()
        seen = {junction_configuration(r, ("a1", "a2", "b2")) for r in all_rels(g)}
        self.assertSetEqual(seen, {("b2", "bottom"), ("a1", "left"), ("a2", "right")})


class CheckSpecsTest(TestCase):
    def test_unknown_edge(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((_edge("a1", "b4", "u_left_of_v"),)))

    def test_outer_edge(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((_edge("l", "t", "u_left_of_v"),)))

    def test_unknown_relation(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((_edge("a1", "b2", "u_inside_v"),)))

    def test_not_a_face(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((), (_junction(("a1", "a2", "a3"), ("a2", "top")),)))

    def test_triangle_on_outer_edge(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((), (_junction(("l", "t", "a1"), ("a1", "top")),)))

    def test_edge_at_corner(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((_edge("l", "a1", "u_left_of_v"),)))
        check_specs(g, ConstraintSpecs((_edge("l", "a1", "u_left_of_v"),)), allow_corners=True)

    def test_triangle_at_corner(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((), (_junction(("l", "a1", "b1"), ("a1", "top")),)))

    def test_unknown_configuration(self):
        g, _ = strip()
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((), (_junction(("a1", "a2", "b2"), ("b3", "bottom")),)))
        with self.assertRaises(ConstraintSpecException):
            check_specs(g, ConstraintSpecs((), (_junction(("a1", "a2", "b2"), ("b2", "below")),)))


class ResidueTest(TestCase):
    def setUp(self):
        g, _ = pin()
        self.aug = AugmentedOrder(build_partial_order(g))
        self.x = FlipItem('vertex', ("R0.c",))

    def test_forbid_bottom_residue(self):
        self.assertListEqual(residue_edges(self.aug, ResidueConstraint(self.x, frozenset([0]))),
                             [(BOTTOM, FlipEvent(self.x, 0))])

    def test_forbid_after_last_flip(self):
        self.assertListEqual(residue_edges(self.aug, ResidueConstraint(self.x, frozenset([1]))),
                             [(FlipEvent(self.x, 0), TOP)])

    def test_unreached_residue(self):
        self.assertListEqual(residue_edges(self.aug, ResidueConstraint(self.x, frozenset([2, 3]))), [])

    def test_item_that_never_flips(self):
        y = FlipItem('edge', ("R0.e", "R0.n"))
        self.assertListEqual(residue_edges(self.aug, ResidueConstraint(y, frozenset([0]))), [(BOTTOM, TOP)])
        self.assertListEqual(residue_edges(self.aug, ResidueConstraint(y, frozenset([1]))), [])

    def test_augmented_order(self):
        self.assertListEqual(self.aug.elements, [BOTTOM, FlipEvent(self.x, 0), TOP])
        self.assertEqual(self.aug.total(self.x), 1)


class SolveTest(TestCase):
    def test_unconstrained(self):
        for build, size in ((single, 1), (pin, 2), (strip, 8)):
            problem = solve(build()[0], ConstraintSpecs())
            self.assertTrue(problem.exists())
            self.assertEqual(sum(1 for _ in problem.layouts()), size)

    def test_component_count(self):
        problem = solve(strip()[0], ConstraintSpecs())
        self.assertEqual(problem.quasiorder.component_count, len(problem.order) + 2)
        self.assertNotEqual(problem.quasiorder.bottom_component, problem.quasiorder.top_component)

    def test_forbid_horizontal_contact(self):
        g, _ = strip()
        specs = ConstraintSpecs((_edge("a2", "b2", "u_above_v"),))
        layouts = list(solve(g, specs).layouts())
        self.assertEqual(len(layouts), 2)
        for r in layouts:
            self.assertEqual(r.label("a2", "b2").relation("a2"), "u_right_of_v")
        self.assertSetEqual(set(layouts), _brute_force(g, specs))

    def test_forbid_every_label(self):
        g, _ = strip()
        problem = solve(g, ConstraintSpecs((_edge("a2", "b2", *RELATIONS),)))
        self.assertFalse(problem.exists())
        self.assertEqual(problem.quasiorder.component_count, 1)
        self.assertListEqual(list(problem.layouts()), [])

    def test_statically_infeasible(self):
        g, _ = strip()
        problem = solve(g, ConstraintSpecs((_edge("a1", "b1", "u_above_v"),)))
        self.assertTrue(problem.compiled.statically_infeasible)
        self.assertFalse(problem.exists())

    def test_vacuous_constraint(self):
        g, _ = strip()
        problem = solve(g, ConstraintSpecs((_edge("a1", "b1", "u_left_of_v"),)))
        self.assertFalse(problem.compiled.statically_infeasible)
        self.assertEqual(sum(1 for _ in problem.layouts()), 8)

    def test_forbid_junction(self):
        g, _ = strip()
        specs = ConstraintSpecs((), (_junction(("a1", "a2", "b2"), ("b2", "bottom")),))
        problem = solve(g, specs)
        layouts = set(problem.layouts())
        self.assertEqual(len(layouts), 5)
        self.assertSetEqual(layouts, _brute_force(g, specs))
        self.assertGreater(len(problem.compiled.edge_sets), 0)
        for edge_set in problem.compiled.edge_sets:
            self.assertGreater(len(edge_set.families()), 0)

    def test_forbid_every_junction(self):
        g, _ = strip()
        specs = ConstraintSpecs((), (_junction(("a1", "a2", "b2"), ("b2", "bottom"), ("a1", "left"), ("a2", "right")),))
        self.assertFalse(solve(g, specs).exists())

    def test_pinwheel_chirality(self):
        g, r = pin()
        fixed = r.label("R0.c", "R0.n").relation("R0.c")
        layouts = list(solve(g, ConstraintSpecs((_edge("R0.c", "R0.n", fixed),))).layouts())
        self.assertEqual(len(layouts), 1)
        self.assertNotEqual(layouts[0].label("R0.c", "R0.n").relation("R0.c"), fixed)

    def test_random_constraints_match_brute_force(self):
        rng = random.Random(2024)
        g, _ = strip()
        for _ in range(10):
            specs = random_constraints(g, rng, edges=2, junctions=1)
            found = list(solve(g, specs).layouts())
            self.assertEqual(len(found), len(set(found)))
            self.assertSetEqual(set(found), _brute_force(g, specs))

    def test_enumeration_statistics(self):
        problem = solve(strip()[0], ConstraintSpecs())
        stats: Counter = Counter()
        emitted = list(constrained_ideals(problem.quasiorder, stats))
        self.assertEqual(len(emitted), 8)
        self.assertEqual(stats['emitted'], 8)
        self.assertGreaterEqual(stats['steps'], 8)

    def test_specs_json(self):
        specs = ConstraintSpecs((_edge("a2", "b2", "u_above_v"),), (_junction(("a1", "a2", "b2"), ("b2", "bottom")),))
        self.assertEqual(len(specs), 2)
        self.assertDictEqual(specs.to_json(), {
            "edges": [{"u": "a2", "v": "b2", "forbid": ["u_above_v"]}],
            "junctions": [{"triangle": ["a1", "a2", "b2"], "forbid": [{"flat": "b2", "side": "bottom"}]}]})

    def test_pipeline_step_by_step(self):
        g, _ = strip()
        specs = ConstraintSpecs((_edge("a2", "b2", "u_above_v"),))
        order = build_partial_order(g)
        compiled = compile_constraints(g, bottom_rel(g), order, specs)
        self.assertGreater(len(compiled.residues), 0)
        aug = AugmentedOrder(order)
        constraints = build_constraint_graph(aug, compiled.residues, compiled.edge_sets)
        self.assertGreater(constraints.number_of_edges(), 0)
        q = build_quasiorder(aug, constraints)
        self.assertTrue(constrained_layout_exists(q))
        layouts = set(enumerate_constrained(q, g, order))
        self.assertSetEqual(layouts, set(solve(g, specs).layouts()))
