def add_default_args(parser):
    """This adds default command_line arguments for all rlayouttools
       to the command-line argument parser."""
    parser.add_argument("graph", help="graph JSON file")
    parser.add_argument("-c", "--constraints", default=None,
                        help="constraint JSON file")
    parser.add_argument("-o", "--output", default=None,
                        help="write output to this file instead of standard output")
    parser.add_argument("--corners", default=None, choices=["given", "auto"],
                        help="use the corners in the graph file (default) or try every corner assignment")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="show progress information")


def add_lattice_args(parser):
    """Arguments for commands that walk the layouts of a graph."""
    parser.add_argument("--max-layouts", type=int, default=None,
                        help="stop after this many layouts (0 means no limit)")
    parser.add_argument("--lattice-cap", type=int, default=None,
                        help="largest lattice enumerated explicitly")
    parser.add_argument("--area-universal", action="store_true",
                        help="only consider area-universal layouts")


def add_render_args(parser):
    """Arguments for commands that draw layouts."""
    parser.add_argument("--cell-size", type=int, default=None,
                        help="pixels per grid unit in SVG output")
    parser.add_argument("--no-labels", action="store_true",
                        help="leave rectangle names out of SVG output")
    parser.add_argument("--svg-dir", default=None,
                        help="write an SVG drawing of every emitted layout into this directory")


def add_layout_arg(parser):
    """Argument for commands that read a labeling."""
    parser.add_argument("-l", "--layout", default=None,
                        help="labeling JSON file to validate or render")


def add_orientation_arg(parser):
    parser.add_argument("--orientation", type=int, default=0, choices=range(4),
                        help="turn the corner assignment by this many quarter turns")
