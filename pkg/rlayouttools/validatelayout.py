'''Checks a graph, and optionally a labeling of it, for the conditions of a rectangular layout'''

import argparse

from rlayouttools import cli, common_args
from rlayouttools.options import Command


def entry():
    '''Entry point'''
    cli.main(Command.validate, _get_args)


def _get_args():
    '''Parse command line arguments'''
    parser = argparse.ArgumentParser(description=__doc__)
    common_args.add_default_args(parser)
    common_args.add_layout_arg(parser)
    common_args.add_orientation_arg(parser)
    return parser.parse_args()
