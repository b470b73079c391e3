'''Draws layout geometries as SVG 1.1'''

from xml.etree.ElementTree import Element, SubElement, tostring

from rlayouttools.rel_engine import LayoutGeometry

MARGIN = 2


def render_svg(geo: LayoutGeometry, cell_size: int = 40, labels: bool = True) -> bytes:
    """Rectangles on the integer grid, scaled by the cell size. The y axis of the layout points
       up, so rows are mirrored.

       :param geo: the layout geometry
       :param cell_size: pixels per grid unit
       :param labels: whether to write the rectangle names

       :returns: SVG document
    """
    width = geo.width * cell_size + 2 * MARGIN
    height = geo.height * cell_size + 2 * MARGIN
    svg = Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "version": "1.1",
                          "width": str(width), "height": str(height),
                          "viewBox": "0 0 {} {}".format(width, height)})

    for name, rect in sorted(geo.rects.items()):
        x = MARGIN + rect.x0 * cell_size
        y = MARGIN + (geo.height - rect.y1) * cell_size
        w = (rect.x1 - rect.x0) * cell_size
        h = (rect.y1 - rect.y0) * cell_size

        shape = SubElement(svg, "rect")
        shape.set("x", str(x))
        shape.set("y", str(y))
        shape.set("width", str(w))
        shape.set("height", str(h))
        shape.set("fill", "#f4f4f4")
        shape.set("stroke", "black")

        if labels:
            text = SubElement(svg, "text")
            text.set("x", str(x + w / 2))
            text.set("y", str(y + h / 2))
            text.set("text-anchor", "middle")
            text.set("dominant-baseline", "middle")
            text.set("font-size", str(max(8, cell_size // 3)))
            text.text = name

    return tostring(svg)


def write_svg(filename: str, geo: LayoutGeometry, cell_size: int = 40, labels: bool = True) -> None:
    with open(filename, "wb") as f:
        f.write(render_svg(geo, cell_size, labels))
