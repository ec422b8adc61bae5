"""Newton polygons of q-difference operators and the summability classifier.

The polygon is the lower convex hull of the points (k, valuation(a_k)), one
per nonzero operator coefficient.  Slopes are invariant under multiplying the
operator on the left by any series, so the hull is computed from raw
valuations; ``normalized_points`` shifts the lowest valuation to 0 for
display.  Distinct positive integer slopes give the summability level vector.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingEndpointCoefficient, NonIntegerSlope


def lower_hull(points):
    """Monotone-chain lower hull of integer points sorted by x."""
    lowest = {}
    for x, y in points:
        if x not in lowest or y < lowest[x]:
            lowest[x] = y
    pts = sorted(lowest.items())
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # pop if the middle point is on or above the segment
            if (x1 - x0) * (p[1] - y0) <= (p[0] - x0) * (y1 - y0):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple  # (shift, valuation) per nonzero coefficient
    hull: tuple  # lower-hull vertices, increasing shift
    slopes: tuple  # (slope: Fraction, horizontal_length: int)

    def normalized_points(self):
        shift = min(m for _, m in self.points)
        return tuple((k, m - shift) for k, m in self.points)

    def slope_multiset(self):
        out = []
        for s, length in self.slopes:
            out.extend([s] * length)
        return out

    def to_json(self):
        return {
            "points": [[k, m] for k, m in self.points],
            "hull": [[k, m] for k, m in self.hull],
            "slopes": [
                [s.numerator, s.denominator, length] for s, length in self.slopes
            ],
        }


@dataclass(frozen=True)
class SummabilityOrder:
    kind: str  # "convergent" or "summable"
    levels: tuple  # strictly increasing positive integers

    def to_json(self):
        return {"kind": self.kind, "levels": list(self.levels)}


def newton_polygon(operator):
    """Polygon of a sigma-normal-form operator; requires nonzero order-0 and
    top-order coefficients and determinable valuations everywhere."""
    pts = []
    for k, a in operator.terms.items():
        v = a.valuation()  # raises IndeterminateValuation on empty windows
        pts.append((k, v))
    order = operator.order
    present = {k for k, _ in pts}
    if 0 not in present or order not in present or order == 0 and not pts:
        raise MissingEndpointCoefficient(
            "Newton polygon needs nonzero coefficients at shifts 0 and order"
        )
    hull = lower_hull(pts)
    slopes = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slopes.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
    return NewtonPolygon(points=tuple(sorted(pts)), hull=tuple(hull), slopes=tuple(slopes))


def summability_order(polygon):
    """Level vector from the distinct positive integer slopes."""
    levels = set()
    for s, _ in polygon.slopes:
        if s.denominator != 1:
            raise NonIntegerSlope(f"slope {s} is not an integer")
        if s > 0:
            levels.add(int(s))
    if not levels:
        return SummabilityOrder(kind="convergent", levels=())
    return SummabilityOrder(kind="summable", levels=tuple(sorted(levels)))
