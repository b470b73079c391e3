'''Finds, counts and draws rectangular layouts of a graph, optionally with orientation constraints'''

import argparse
import itertools
import os
import random
import sys
from dataclasses import dataclass, fields
from typing import IO, Callable, Iterator, List, Mapping, Optional

import humanize

from rlayouttools import common_args, common_config, common_io
from rlayouttools.area_universal import is_area_universal_layout, movable_items, search_across_pieces
from rlayouttools.constraint_lattice import ConstraintSpecs, check_specs, satisfies
from rlayouttools.decomposer import TreeSolution, decompose, enumerate_glued, solve_tree
from rlayouttools.exceptions import (ConstraintSpecException, ImproperGraphException, InputFormatException,
                                     InvalidConfigException, InvalidLabelingException, LatticeTooLargeException,
                                     MalformedGraphException, SearchIncompleteException)
from rlayouttools.flip_lattice import bottom_rel
from rlayouttools.options import Command, Direction
from rlayouttools.plane_graph import (CORNER_SIDES, ExtendedGraph, enumerate_corner_assignments, enumerate_extensions,
                                      validate_extended)
from rlayouttools.rel_engine import (RegularEdgeLabeling, all_rels, apply_move, check_geometry, drain, geometry,
                                     monotone_sweep, validate_rel)
from rlayouttools.svg_render import render_svg, write_svg

EXIT_OK = 0
EXIT_NO_LAYOUT = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (InputFormatException, MalformedGraphException, ImproperGraphException, ConstraintSpecException,
                InvalidConfigException, InvalidLabelingException, LatticeTooLargeException, SearchIncompleteException)


@dataclass(frozen=True)
class RunConfig:
    command: Command
    graph_path: str
    constraints_path: Optional[str] = None
    output_path: Optional[str] = None
    layout_path: Optional[str] = None
    max_layouts: int = 0
    lattice_cap: int = 100000
    brute_force_limit: int = 14
    cell_size: int = 40
    labels: bool = True
    svg_dir: Optional[str] = None
    seed: Optional[int] = None
    corners: str = 'given'
    orientation: int = 0
    area_universal: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.max_layouts < 0:
            raise InvalidConfigException("Maximum number of layouts must not be negative")
        if self.lattice_cap <= 0:
            raise InvalidConfigException("Lattice cap must be positive")
        if self.brute_force_limit < 0:
            raise InvalidConfigException("Brute force limit must not be negative")
        if self.cell_size <= 0:
            raise InvalidConfigException("Cell size must be positive")
        if self.corners not in ('given', 'auto'):
            raise InvalidConfigException("Corners must be 'given' or 'auto'")
        if self.orientation not in range(4):
            raise InvalidConfigException("Orientation must be 0, 1, 2 or 3")

    @staticmethod
    def from_mapping(values: Mapping) -> 'RunConfig':
        known = {f.name for f in fields(RunConfig)}
        unknown = set(values) - known
        if unknown:
            raise InvalidConfigException("Unknown run configuration fields: {}".format(", ".join(sorted(unknown))))
        values = dict(values)
        if not isinstance(values.get("command"), Command):
            try:
                values["command"] = Command(values.get("command"))
            except ValueError:
                raise InvalidConfigException("Unknown command {}".format(values.get("command")))
        return RunConfig(**values)


def entry():
    '''Entry point of rlayout'''
    main(None, _get_args)


def main(command: Optional[Command], get_args: Callable[[], argparse.Namespace]):
    '''Runs a command with the arguments of a console script and exits with its status.'''
    try:
        args = get_args()
        config = _config_from_args(args, command)
        sys.exit(run(config))
    except InvalidConfigException as e:
        _exit_with_error(str(e))
    except KeyboardInterrupt:
        print("Script interrupted by user.\n", file=sys.stderr)


def _get_args():
    '''Parse command line arguments'''
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("command", choices=[str(c) for c in Command],
                        help="what to do with the graph")
    common_args.add_default_args(parser)
    common_args.add_lattice_args(parser)
    common_args.add_render_args(parser)
    common_args.add_layout_arg(parser)
    common_args.add_orientation_arg(parser)
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized choices")
    return parser.parse_args()


def _config_from_args(args: argparse.Namespace, command: Optional[Command]) -> RunConfig:
    '''Command-line values override the configuration file, which overrides the defaults. A console
       script only parses the arguments its command uses.'''
    max_layouts = getattr(args, "max_layouts", None)
    lattice_cap = getattr(args, "lattice_cap", None)
    cell_size = getattr(args, "cell_size", None)
    return RunConfig(
        command=command if command is not None else Command(args.command),
        graph_path=args.graph,
        constraints_path=args.constraints,
        output_path=args.output,
        layout_path=getattr(args, "layout", None),
        max_layouts=max_layouts if max_layouts is not None else common_config.get_max_layouts(),
        lattice_cap=lattice_cap if lattice_cap is not None else common_config.get_lattice_cap(),
        brute_force_limit=common_config.get_brute_force_limit(),
        cell_size=cell_size if cell_size is not None else common_config.get_cell_size(),
        labels=not getattr(args, "no_labels", False),
        svg_dir=getattr(args, "svg_dir", None),
        seed=getattr(args, "seed", None),
        corners=args.corners or 'given',
        orientation=getattr(args, "orientation", 0),
        area_universal=getattr(args, "area_universal", False),
        verbose=args.verbose)


def run(config: RunConfig, out: Optional[IO] = None) -> int:
    """Runs one command.

       :param config: what to run on which files
       :param out: stream for the output when no output file is configured

       :returns: exit status: 0 on success, 1 if no layout exists, 2 on an input error
    """
    out = out if out is not None else sys.stdout
    try:
        graphs = _load_graphs(config)
        specs = _load_constraints(config)
        for g in graphs:
            check_specs(g, specs)
        if config.output_path is not None:
            with open(config.output_path, "w", encoding="utf-8") as output:
                return _dispatch(config, graphs, specs, output)
        return _dispatch(config, graphs, specs, out)
    except INPUT_ERRORS as e:
        print("Error: {}".format(e), file=sys.stderr)
        return EXIT_INPUT_ERROR


def _dispatch(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    handlers = {
        Command.validate: _validate,
        Command.exists: _exists,
        Command.count: _count,
        Command.enumerate: _enumerate,
        Command.decompose: _decompose,
        Command.area_universal: _area_universal,
        Command.render: _render,
    }
    return handlers[config.command](config, graphs, specs, out)


def _load_graphs(config: RunConfig) -> List[ExtendedGraph]:
    graph, corners = common_io.graph_from_json(common_io.read_json(config.graph_path))
    if config.corners == 'auto':
        if corners is None:
            candidates = enumerate_extensions(graph)
        else:
            candidates = enumerate_corner_assignments(graph)
        if len(candidates) == 0:
            raise ImproperGraphException("No corner assignment gives a proper graph")
        _notice(config, "Trying {} corner assignments".format(humanize.intcomma(len(candidates))))
        return candidates
    if corners is None:
        raise InputFormatException('Graph has no "corners"; use --corners auto')
    quad = [corners[side] for side in CORNER_SIDES]
    k = config.orientation
    return [ExtendedGraph(graph, dict(zip(CORNER_SIDES, quad[k:] + quad[:k])))]


def _load_constraints(config: RunConfig) -> ConstraintSpecs:
    if config.constraints_path is None:
        return ConstraintSpecs()
    return common_io.constraints_from_json(common_io.read_json(config.constraints_path))


def _notice(config: RunConfig, message: str) -> None:
    if config.verbose:
        print("Notice: {}".format(message), file=sys.stderr)


def _warning(message: str) -> None:
    print("Warning: {}".format(message), file=sys.stderr)


def _corner_text(g: ExtendedGraph) -> str:
    return ",".join(g.corners[side] for side in CORNER_SIDES)


def _validate(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    status = EXIT_OK
    for g in graphs:
        report = validate_extended(g)
        data = {"corners": dict(g.corners), "graph": report.to_json()}
        if config.layout_path is not None and report.ok:
            r = common_io.rel_from_json(g, common_io.read_json(config.layout_path))
            rel_report = validate_rel(r)
            data["labeling"] = rel_report.to_json()
            if rel_report.ok:
                geometry_report = check_geometry(r, geometry(r))
                data["geometry"] = geometry_report.to_json()
                rel_report.violations.extend(geometry_report.violations)
            report.violations.extend(rel_report.violations)
        print(common_io.dumps(data), file=out)
        if not report.ok:
            status = EXIT_INPUT_ERROR
    return status


def _solutions(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs) -> Iterator[TreeSolution]:
    for g in graphs:
        try:
            solution = solve_tree(g, specs)
        except ImproperGraphException as e:
            if config.corners == 'auto':
                continue
            raise e
        _notice(config, "Corners {}: {} pieces".format(_corner_text(g), humanize.intcomma(len(solution.tree))))
        yield solution


def _layouts(config: RunConfig, solution: TreeSolution) -> Iterator[RegularEdgeLabeling]:
    layouts = enumerate_glued(solution)
    if config.area_universal:
        layouts = (r for r in layouts if is_area_universal_layout(r))
    if config.max_layouts > 0:
        layouts = itertools.islice(layouts, config.max_layouts)
    return layouts


def _exists(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    found = False
    for solution in _solutions(config, graphs, specs):
        if config.area_universal:
            feasible = search_across_pieces(solution) is not None
        else:
            feasible = solution.feasible
        root = solution.pieces[solution.tree.root].problems[0]
        print("{} {}".format("yes" if feasible else "no", root.quasiorder.component_count), file=out)
        found = found or feasible
    return EXIT_OK if found else EXIT_NO_LAYOUT


def _count(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    total = 0
    for solution in _solutions(config, graphs, specs):
        n = 0
        for _ in _layouts(config, solution):
            n += 1
            if n > config.lattice_cap:
                raise LatticeTooLargeException("More than {} layouts; raise --lattice-cap".format(config.lattice_cap))
        if config.max_layouts > 0 and n == config.max_layouts:
            _warning("Stopped counting at {} layouts".format(humanize.intcomma(n)))
        if config.verbose and len(solution.tree.original.inner_vertices) <= config.brute_force_limit:
            _cross_check(config, solution, specs, n)
        if len(graphs) > 1:
            print("{} {}".format(_corner_text(solution.tree.original), n), file=out)
        total += n
    print(total, file=out)
    _notice(config, "{} layouts".format(humanize.intcomma(total)))
    return EXIT_OK if total > 0 else EXIT_NO_LAYOUT


def _cross_check(config: RunConfig, solution: TreeSolution, specs: ConstraintSpecs, n: int) -> None:
    '''Compares a count with the exhaustive labeling search on small graphs.'''
    g = solution.tree.original
    expected = sum(1 for r in all_rels(g) if satisfies(r, specs)
                   and (not config.area_universal or is_area_universal_layout(r)))
    if config.max_layouts > 0:
        expected = min(expected, config.max_layouts)
    if expected == n:
        _notice(config, "Exhaustive search agrees: {} layouts".format(humanize.intcomma(n)))
    else:
        _warning("Exhaustive search finds {} layouts, not {}".format(humanize.intcomma(expected), humanize.intcomma(n)))


def _enumerate(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    emitted = 0
    if config.svg_dir is not None:
        os.makedirs(config.svg_dir, exist_ok=True)
    for solution in _solutions(config, graphs, specs):
        for r in _layouts(config, solution):
            record = common_io.layout_to_json(r)
            record["corners"] = dict(r.host.corners)
            print(common_io.dumps(record), file=out)
            emitted += 1
            if config.svg_dir is not None:
                write_svg(os.path.join(config.svg_dir, "layout-{:05d}.svg".format(emitted)),
                          geometry(r), config.cell_size, config.labels)
    _notice(config, "{} layouts".format(humanize.intcomma(emitted)))
    return EXIT_OK if emitted > 0 else EXIT_NO_LAYOUT


def _decompose(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    for g in graphs:
        tree = decompose(g)
        _notice(config, "{} pieces".format(humanize.intcomma(len(tree))))
        print(common_io.dumps(tree.to_json()), file=out)
    return EXIT_OK


def _area_universal(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    for solution in _solutions(config, graphs, specs):
        result = search_across_pieces(solution)
        if result is not None:
            r = result.layout
            record = common_io.layout_to_json(r)
            record["corners"] = dict(r.host.corners)
            record["certificate"] = {"movable_items": [str(x) for x in movable_items(r)],
                                     "area_universal": is_area_universal_layout(r),
                                     "profiles": result.profiles()}
            print(common_io.dumps(record), file=out)
            return EXIT_OK
    print(common_io.dumps({"layout": None}), file=out)
    return EXIT_NO_LAYOUT


def _render(config: RunConfig, graphs: List[ExtendedGraph], specs: ConstraintSpecs, out: IO) -> int:
    g = graphs[0]
    if config.layout_path is not None:
        r = common_io.rel_from_json(g, common_io.read_json(config.layout_path))
        report = validate_rel(r)
        if not report.ok:
            raise InvalidLabelingException("; ".join(v.message for v in report.violations))
    elif config.seed is not None:
        r = _random_layout(g, random.Random(config.seed))
    else:
        r = bottom_rel(g)
    out.write(render_svg(geometry(r), config.cell_size, config.labels).decode("utf-8"))
    out.write("\n")
    return EXIT_OK


def _random_layout(g: ExtendedGraph, rng: random.Random) -> RegularEdgeLabeling:
    '''Stops a random upward sweep from the bottom after a random number of moves.'''
    sweep = monotone_sweep(bottom_rel(g), Direction.up, rng)
    moves, top = drain(sweep)
    if not moves:
        return top
    return _replay(bottom_rel(g), moves[:rng.randint(0, len(moves))])


def _replay(r: RegularEdgeLabeling, moves) -> RegularEdgeLabeling:
    for move in moves:
        r = apply_move(r, move)
    return r


def _exit_with_error(message: str):
    print("Error: {}".format(message), file=sys.stderr)
    sys.exit(EXIT_INPUT_ERROR)
