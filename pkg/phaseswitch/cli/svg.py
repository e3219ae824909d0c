import math
import xml.etree.ElementTree as ET
from typing import Sequence

WIDTH = 640
HEIGHT = 400
MARGIN = 50
COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd']


def svgroot(width: int, height: int) -> ET.Element:
    return ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                      version="1.1",
                      width=f"{width}px",
                      height=f"{height}px",
                      viewBox=f"0 0 {width} {height}")


def _segments(xs: Sequence[float], ys: Sequence[float]) -> list[list[tuple[float, float]]]:
    # NaN values split a curve into separate segments.
    segments, current = [], []
    for x, y in zip(xs, ys):
        if math.isfinite(x) and math.isfinite(y):
            current.append((x, y))
        elif current:
            segments.append(current)
            current = []
    if current:
        segments.append(current)
    return segments


def _span(values: list[float]) -> tuple[float, float]:
    low, high = min(values), max(values)
    if high == low:
        pad = abs(low) * 0.05 or 1.0
        return low - pad, high + pad
    return low, high


def line_plot(xs: Sequence[float], series: dict[str, Sequence[float]], title: str = '',
              xlabel: str = '', ylabel: str = '') -> ET.Element:
    """
    A self-contained SVG line plot of one or more series over a shared x axis.

    Args:
        xs (Sequence[float]): Shared abscissa.
        series (dict): Label to ordinate values; non-finite values leave gaps.
        title (str): Plot title.
        xlabel (str): Abscissa label.
        ylabel (str): Ordinate label.

    Returns:
        ET.Element: The root <svg> element.
    """
    root = svgroot(WIDTH, HEIGHT)
    finite_x = [x for x in xs if math.isfinite(x)]
    finite_y = [y for ys in series.values() for y in ys if math.isfinite(y)]
    x0, x1 = _span(finite_x or [0.0, 1.0])
    y0, y1 = _span(finite_y or [0.0, 1.0])

    def px(x: float) -> float:
        return round(MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2 * MARGIN), 2)

    def py(y: float) -> float:
        return round(HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2 * MARGIN), 2)

    ET.SubElement(root, "rect", x=str(MARGIN), y=str(MARGIN), width=str(WIDTH - 2 * MARGIN),
                  height=str(HEIGHT - 2 * MARGIN), fill="none", stroke="black")
    for text, x, y, anchor in ((title, WIDTH / 2, MARGIN / 2, "middle"),
                               (xlabel, WIDTH / 2, HEIGHT - 10, "middle"),
                               (f"{y1:.4g}", MARGIN - 4, MARGIN + 4, "end"),
                               (f"{y0:.4g}", MARGIN - 4, HEIGHT - MARGIN, "end"),
                               (f"{x0:.4g}", MARGIN, HEIGHT - MARGIN + 16, "middle"),
                               (f"{x1:.4g}", WIDTH - MARGIN, HEIGHT - MARGIN + 16, "middle")):
        if text:
            label = ET.SubElement(root, "text", x=str(x), y=str(y), fill="black")
            label.set("text-anchor", anchor)
            label.set("font-size", "12")
            label.text = text
    if ylabel:
        label = ET.SubElement(root, "text", x="14", y=str(HEIGHT / 2), fill="black",
                              transform=f"rotate(-90 14 {HEIGHT / 2})")
        label.set("text-anchor", "middle")
        label.set("font-size", "12")
        label.text = ylabel

    for index, (name, ys) in enumerate(series.items()):
        color = COLORS[index % len(COLORS)]
        group = ET.SubElement(root, "g", stroke=color, fill="none")
        group.set("stroke-width", "1.5")
        for segment in _segments(list(xs), list(ys)):
            d = "M{} {}".format(px(segment[0][0]), py(segment[0][1]))
            for x, y in segment[1:]:
                d += "L{} {}".format(px(x), py(y))
            ET.SubElement(group, "path", d=d)
        legend = ET.SubElement(root, "text", x=str(WIDTH - MARGIN - 4), y=str(MARGIN + 16 * (index + 1)), fill=color)
        legend.set("text-anchor", "end")
        legend.set("font-size", "12")
        legend.text = name
    return root


def svgwrite(svg: ET.Element, path: str):
    ET.ElementTree(svg).write(path, encoding="utf-8", xml_declaration=True)


__all__ = [
    "line_plot",
    "svgwrite",
]
