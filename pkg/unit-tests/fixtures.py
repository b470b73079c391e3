# -*- coding: utf-8 -*-

"""Graphs shared by the unit tests, built from rectangle layouts with exact coordinates
"""

__copyright__ = 'Copyright (c) 2024, Utrecht University'
__license__   = 'GPLv3, see LICENSE'

import sys
from fractions import Fraction as F

sys.path.append("..")

from rlayouttools.generators import graph_from_layout, pinwheel  # noqa: E402
from rlayouttools.rel_engine import Rect  # noqa: E402


def unit_square():
    return {"R0": Rect(F(0), F(0), F(1), F(1))}


def single():
    '''One rectangle: a single layout, nothing can move.'''
    return graph_from_layout(unit_square())


def pin():
    '''Four arms around a center: two layouts, the center turns.'''
    return graph_from_layout(pinwheel(unit_square(), "R0", 1))


def nest(depth=2):
    '''Pinwheels inside pinwheels: one nontrivial separating four-cycle per extra level.'''
    return graph_from_layout(pinwheel(unit_square(), "R0", depth))


def strip():
    """Two rows of rectangles whose junctions interleave. Each of the four diagonal contacts can
       turn vertical, but no two neighboring ones at once, which gives eight layouts.

        a1 a2 a3
       b1 b2 b3 b4
    """
    half = F(1, 2)
    rects = {
        "a1": Rect(F(0), F(1), F(1), F(2)),
        "a2": Rect(F(1), F(1), F(2), F(2)),
        "a3": Rect(F(2), F(1), F(3), F(2)),
        "b1": Rect(F(0), F(0), half, F(1)),
        "b2": Rect(half, F(0), 1 + half, F(1)),
        "b3": Rect(1 + half, F(0), 2 + half, F(1)),
        "b4": Rect(2 + half, F(0), F(3), F(1)),
    }
    return graph_from_layout(rects)
