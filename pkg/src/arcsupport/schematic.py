"""Strip diagram over the tilt table and angle queries against it.

The diagram lays the locales out as vertical strips whose widths are the
absolute spans.  Two piecewise-linear profiles run across the strips: the
upper one starts at tilt 0 and falls with slope -1 on odd strips, holding
the strip's own tilt on even strips; the lower one starts at tilt 1 and
holds the strip's tilt on odd strips, rising with slope +1 on even strips.
Their difference falls linearly from the left aspect angle to the right
aspect angle, so any prescribed gap between the profiles is found by a
direct linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ensure
from .geom import DEFAULT_EPS_ANGLE
from .locales import TiltTable


class Strip(NamedTuple):
    index: int      # 1-based locale number
    x_left: float
    x_right: float
    span: float     # signed span of the locale

    @property
    def width(self) -> float:
        return self.x_right - self.x_left


class AbstractSolution(NamedTuple):
    """A support-line pair in diagram coordinates.

    ``ordinate`` is the prescribed profile gap (signed), ``abscissa`` the
    diagram position where the gap occurs, ``contact_angle`` the moving
    profile's tilt there, and ``base_tilt`` the holding profile's tilt,
    which is the tilt of locale ``locale_index``.
    """

    ordinate: float
    abscissa: float
    locale_index: int
    contact_angle: float
    base_tilt: float


@dataclass(frozen=True)
class AngleQuery:
    phi: float
    case: str       # 'A', 'B', 'C', or 'D'
    solutions: tuple[AbstractSolution, ...]


@dataclass(frozen=True)
class SchematicDiagram:
    table: TiltTable
    strips: tuple[Strip, ...]

    @property
    def width(self) -> float:
        return self.strips[-1].x_right

    @property
    def crossing_x(self) -> float:
        """Position where the two profiles meet."""
        return self.table.phi_left

    @property
    def crossing_strip(self) -> int:
        return self.strip_at(self.crossing_x).index

    def strip_at(self, x: float) -> Strip:
        """Strip containing ``x``; strips are half-open on the right, the
        last one closed.  Positions outside the diagram are clamped."""
        x = min(max(x, 0.0), self.width)
        for strip in self.strips[:-1]:
            if x < strip.x_right:
                return strip
        return self.strips[-1]

    def upper_value(self, x: float) -> float:
        x = min(max(x, 0.0), self.width)
        strip = self.strip_at(x)
        j = strip.index
        tilts = self.table.tilts
        if j % 2 == 1:
            return tilts[j - 1] - (x - strip.x_left)
        return tilts[j]

    def lower_value(self, x: float) -> float:
        x = min(max(x, 0.0), self.width)
        strip = self.strip_at(x)
        j = strip.index
        tilts = self.table.tilts
        if j % 2 == 1:
            return tilts[j]
        return tilts[j - 1] + (x - strip.x_left)


def build_schematic(table: TiltTable) -> SchematicDiagram:
    strips = []
    x = 0.0
    for j, span in enumerate(table.spans, start=1):
        strips.append(Strip(index=j, x_left=x, x_right=x + abs(span),
                            span=span))
        x += abs(span)
    return SchematicDiagram(table=table, strips=tuple(strips))


def crossing_point(diagram: SchematicDiagram) -> tuple[float, int]:
    """(position, strip index) where the profile gap vanishes."""
    return (diagram.crossing_x, diagram.crossing_strip)


def query_angle(diagram: SchematicDiagram, phi_deg: float,
                eps_angle: float = DEFAULT_EPS_ANGLE) -> AngleQuery:
    """All support-line pairs whose lines meet at ``phi_deg`` degrees.

    Queries the diagram at profile gaps +phi and -phi; a gap is realized
    exactly when it lies between the right and left aspect angles, with an
    ``eps_angle`` slack so prescribed angles at the exact extremes are kept.
    """
    if not 0.0 <= phi_deg < 180.0:
        raise ValueError(f"angle must lie in [0, 180), got {phi_deg}")
    table = diagram.table

    ordinates = [0.0] if phi_deg == 0.0 else [phi_deg, -phi_deg]
    solutions = []
    for s in ordinates:
        if not (table.phi_right - eps_angle <= s <= table.phi_left + eps_angle):
            continue
        x = min(max(table.phi_left - s, 0.0), diagram.width)
        strip = diagram.strip_at(x)
        j = strip.index
        tilt_j = table.tilts[j]
        theta = tilt_j + s if j % 2 == 1 else tilt_j - s
        solutions.append(AbstractSolution(
            ordinate=s, abscissa=x, locale_index=j,
            contact_angle=theta, base_tilt=tilt_j))
    solutions.sort(key=lambda sol: sol.abscissa)

    lo = min(table.phi_left, -table.phi_right)
    hi = max(table.phi_left, -table.phi_right)
    if phi_deg == 0.0:
        case = "A"
    elif phi_deg <= lo + eps_angle:
        case = "B"
    elif phi_deg <= hi + eps_angle:
        case = "C"
    else:
        case = "D"

    expected = {"A": 1, "B": 2, "C": 1, "D": 0}[case]
    ensure(len(solutions) == expected,
           f"case {case} expects {expected} solutions, found {len(solutions)}")
    return AngleQuery(phi=phi_deg, case=case, solutions=tuple(solutions))
