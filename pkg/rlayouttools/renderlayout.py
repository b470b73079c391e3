'''Draws a rectangular layout of a graph as SVG'''

import argparse

from rlayouttools import cli, common_args
from rlayouttools.options import Command


def entry():
    '''Entry point'''
    cli.main(Command.render, _get_args)


def _get_args():
    '''Parse command line arguments'''
    parser = argparse.ArgumentParser(description=__doc__)
    common_args.add_default_args(parser)
    common_args.add_render_args(parser)
    common_args.add_layout_arg(parser)
    common_args.add_orientation_arg(parser)
    parser.add_argument("--seed", type=int, default=None,
                        help="draw a random layout from this seed")
    return parser.parse_args()
