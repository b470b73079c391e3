'''Reading and writing the JSON formats of graphs, labelings, layouts and constraints'''

import json
from typing import Any, Dict, Optional, Tuple, Union

from iteration_utilities import duplicates, unique_everseen

from rlayouttools.constraint_lattice import ConstraintSpecs, EdgeConstraintSpec, JunctionConstraintSpec
from rlayouttools.exceptions import InputFormatException
from rlayouttools.options import Color
from rlayouttools.plane_graph import CORNER_SIDES, ExtendedGraph, PlaneGraph, edge_key
from rlayouttools.rel_engine import EdgeLabel, RegularEdgeLabeling, geometry


def read_json(filename: str) -> Any:
    try:
        with open(filename, "r", encoding="utf-8") as jsonfile:
            return parse_json(jsonfile.read())
    except OSError as e:
        raise InputFormatException("Cannot read {}: {}".format(filename, e.strerror))


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatException(e.msg, e.lineno, e.colno)


def dumps(data: Any) -> str:
    '''Compact, key-sorted JSON so that identical inputs give identical output.'''
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _require(data: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InputFormatException('{} is missing field "{}"'.format(where, key))
    if not isinstance(data[key], kind):
        raise InputFormatException('Field "{}" of {} must be a {}'.format(key, where, kind.__name__))
    return data[key]


def graph_from_json(data: Any) -> Tuple[PlaneGraph, Optional[Dict[str, str]]]:
    '''The embedded graph and its corners, if the file names them.'''
    rotation = _require(data, "rotation", dict, "graph")
    if "vertices" in data:
        vertices = [str(v) for v in _require(data, "vertices", list, "graph")]
        repeated = list(unique_everseen(duplicates(vertices)))
        if repeated:
            raise InputFormatException("Vertices listed more than once: {}".format(repeated))
        if set(vertices) != {str(v) for v in rotation}:
            raise InputFormatException("Vertex list and rotation system name different vertices")
    for v, ns in rotation.items():
        if not isinstance(ns, list):
            raise InputFormatException("Rotation of {} must be a list".format(v))
    outer = data.get("outer")
    graph = PlaneGraph(rotation, outer)

    corners = data.get("corners")
    if corners is None:
        return graph, None
    if not isinstance(corners, dict) or set(corners) != set(CORNER_SIDES):
        raise InputFormatException('Field "corners" must map each of l, t, r, b to a vertex')
    return graph, {side: str(v) for side, v in corners.items()}


def extended_graph_from_json(data: Any) -> ExtendedGraph:
    graph, corners = graph_from_json(data)
    if corners is None:
        raise InputFormatException('Graph has no "corners"; use automatic corner assignment')
    return ExtendedGraph(graph, corners)


def graph_to_json(g: Union[ExtendedGraph, PlaneGraph]) -> dict:
    graph = g.graph if isinstance(g, ExtendedGraph) else g
    data: Dict[str, Any] = {"vertices": list(graph.vertices),
                            "rotation": {v: list(ns) for v, ns in sorted(graph.rotation.items())}}
    if isinstance(g, ExtendedGraph):
        data["corners"] = dict(g.corners)
    else:
        data["outer"] = list(graph.outer_face)
    return data


def rel_from_json(g: ExtendedGraph, data: Any) -> RegularEdgeLabeling:
    entries = data.get("labels") if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise InputFormatException('Labeling must be a list of edge labels or hold one in "labels"')
    labels = {}
    for entry in entries:
        u, v = str(_require(entry, "u", str, "label")), str(_require(entry, "v", str, "label"))
        color = _require(entry, "color", str, "label")
        head = str(_require(entry, "head", str, "label"))
        if color not in ("red", "blue"):
            raise InputFormatException("Unknown color {} on {}-{}".format(color, u, v))
        if head not in (u, v):
            raise InputFormatException("Head {} is not an endpoint of {}-{}".format(head, u, v))
        tail = u if head == v else v
        e = edge_key(u, v)
        if e in labels:
            raise InputFormatException("Edge {}-{} labeled twice".format(u, v))
        labels[e] = EdgeLabel(Color[color], tail, head)
    return RegularEdgeLabeling(g, labels)


def rel_to_json(r: RegularEdgeLabeling) -> list:
    return [{"u": u, "v": v, "color": str(label.color), "head": label.head} for (u, v), label in sorted(r.labels.items())]


def layout_to_json(r: RegularEdgeLabeling, with_geometry: bool = True) -> dict:
    data: Dict[str, Any] = {"labels": rel_to_json(r)}
    if with_geometry:
        data["geometry"] = geometry(r).to_json()
    return data


def constraints_from_json(data: Any) -> ConstraintSpecs:
    if not isinstance(data, dict):
        raise InputFormatException("Constraints must be an object with edges and junctions")
    edges = []
    for entry in data.get("edges", []):
        forbid = _require(entry, "forbid", list, "edge constraint")
        edges.append(EdgeConstraintSpec(str(_require(entry, "u", str, "edge constraint")),
                                        str(_require(entry, "v", str, "edge constraint")),
                                        frozenset(str(x) for x in forbid)))
    junctions = []
    for entry in data.get("junctions", []):
        triangle = _require(entry, "triangle", list, "junction constraint")
        if len(triangle) != 3:
            raise InputFormatException("Junction triangle must have three vertices")
        forbid = []
        for configuration in _require(entry, "forbid", list, "junction constraint"):
            forbid.append((str(_require(configuration, "flat", str, "junction configuration")),
                           str(_require(configuration, "side", str, "junction configuration"))))
        junctions.append(JunctionConstraintSpec(tuple(str(v) for v in triangle), frozenset(forbid)))
    unknown = set(data) - {"edges", "junctions"}
    if unknown:
        raise InputFormatException("Unknown constraint fields {}".format(sorted(unknown)))
    return ConstraintSpecs(tuple(edges), tuple(junctions))
