"""Taxonomy of two-point generalized metric spaces over kbar.

Every valid 2x2 distance matrix falls, up to swapping the two points,
into exactly one of ten families determined by the infinity pattern of
its entries.  The two "line and a point" families are not related by the
swap and stay distinct.
"""

from dataclasses import dataclass

from .scalars import NEG_INF, POS_INF, fin, from_num, format_scalar
from .lattices import get_lattice
from .categories import VCategory, validate_category
from .lconvex import grid_members

WHOLE_PLANE = "WholePlane"
HALF_PLANE = "HalfPlane"
BAND = "Band"
ORTHOGONAL_LINES = "OrthogonalLines"
PARALLEL_LINES = "ParallelLines"
LINE_AND_POINT_F = "LineAndPointF"
LINE_AND_POINT_G = "LineAndPointG"
FOUR_POINTS = "FourPoints"
THREE_POINTS = "ThreePoints"
TWO_POINTS = "TwoPoints"

FAMILIES = (
    WHOLE_PLANE, HALF_PLANE, BAND, ORTHOGONAL_LINES, PARALLEL_LINES,
    LINE_AND_POINT_F, LINE_AND_POINT_G, FOUR_POINTS, THREE_POINTS, TWO_POINTS,
)


@dataclass(frozen=True)
class TwoPointShape:
    family: str
    params: tuple  # () except: (s,) for HalfPlane, (s, t) for Band
    swapped: bool  # whether the swap was applied to reach the canonical form

    def describe(self):
        out = self.family
        if self.family == HALF_PLANE:
            out += " s=%s" % format_scalar(self.params[0])
        elif self.family == BAND:
            out += " s=%s t=%s" % tuple(format_scalar(p) for p in self.params)
        if self.swapped:
            out += " (indices swapped)"
        return out


def _swap(m):
    return ((m[1][1], m[1][0]), (m[0][1], m[0][0]))


def _flat_nums(m):
    return (m[0][0].num, m[0][1].num, m[1][0].num, m[1][1].num)


def classify_two_point(m, scalar_kind="int"):
    """Classify a 2x2 matrix; returns a TwoPointShape, or None if invalid.

    The swap symmetry is normalized toward the lexicographically smaller
    matrix; the shape records whether the swap was applied.
    """
    m = tuple(tuple(row) for row in m)
    if len(m) != 2 or any(len(r) != 2 for r in m):
        raise ValueError("expected a 2x2 matrix")
    cat = VCategory(get_lattice("kbar", scalar_kind), ("v", "w"), m)
    if validate_category(cat):
        return None
    swapped_m = _swap(m)
    if _flat_nums(swapped_m) < _flat_nums(m):
        canonical, swapped = swapped_m, True
    else:
        canonical, swapped = m, False
    d00, d01, d10, d11 = _flat_nums(canonical)
    ninf, pinf = float("-inf"), float("inf")

    if d00 == 0 and d11 == 0:
        if d01 == pinf and d10 == pinf:
            return TwoPointShape(WHOLE_PLANE, (), swapped)
        if d01 == ninf or d10 == ninf:
            return TwoPointShape(ORTHOGONAL_LINES, (), swapped)
        if d01 == pinf or d10 == pinf:
            s = d01 if d01 != pinf else d10
            return TwoPointShape(HALF_PLANE, (from_num(s),), swapped)
        return TwoPointShape(BAND, (from_num(d01), from_num(d10)), swapped)
    diag = sorted((d00, d11))
    if diag == [ninf, 0]:
        # orient relative to the point with diagonal 0
        if d00 == 0:
            a, b = d01, d10  # 0-point -> (-inf)-point, back
        else:
            a, b = d10, d01
        if a == pinf and b == pinf:
            return TwoPointShape(PARALLEL_LINES, (), swapped)
        if a == ninf:
            return TwoPointShape(LINE_AND_POINT_F, (), swapped)
        return TwoPointShape(LINE_AND_POINT_G, (), swapped)
    # both diagonals -inf
    if d01 == pinf and d10 == pinf:
        return TwoPointShape(FOUR_POINTS, (), swapped)
    if d01 == ninf and d10 == ninf:
        return TwoPointShape(TWO_POINTS, (), swapped)
    return TwoPointShape(THREE_POINTS, (), swapped)


def exhaustive_partition(grid_bound=2):
    """Enumerate all 2x2 matrices over the grid and tabulate families.

    Returns a report dict with per-family counts, the invalid count, and
    a list of anomalies (valid-but-unclassified or invalid-but-classified
    matrices); an empty anomaly list certifies that the ten families
    partition the valid matrices over this grid.
    """
    values = [NEG_INF] + [fin(v) for v in range(-grid_bound, grid_bound + 1)] + [POS_INF]
    counts = {f: 0 for f in FAMILIES}
    invalid = 0
    anomalies = []
    L = get_lattice("kbar", "int")
    for d00 in values:
        for d01 in values:
            for d10 in values:
                for d11 in values:
                    m = ((d00, d01), (d10, d11))
                    valid = not validate_category(VCategory(L, ("v", "w"), m))
                    shape = classify_two_point(m)
                    if valid and shape is None:
                        anomalies.append(("valid but unclassified", m))
                    elif not valid and shape is not None:
                        anomalies.append(("invalid but classified", m))
                    if shape is not None:
                        counts[shape.family] += 1
                    else:
                        invalid += 1
    total = len(values) ** 4
    return {"bound": grid_bound, "total": total, "invalid": invalid,
            "counts": counts, "anomalies": anomalies}


def render_region(D, bound=3):
    """Text picture of a two-index set over the coordinate grid.

    Rows run from the second coordinate high to low, columns from the
    first coordinate low to high; members are '#' (finite cells) or '*'
    (cells in an infinite border row/column), non-members '.'.
    """
    if len(D.index) != 2:
        raise ValueError("rendering needs exactly two indices")
    if D.scalar_kind != "int":
        raise ValueError("rendering needs the integer scalar kind")
    v, w = D.index
    members = {(p[v], p[w]) for p in grid_members(D, bound)}
    axis = [NEG_INF] + [fin(x) for x in range(-bound, bound + 1)] + [POS_INF]
    lines = ["bound=%d index=%s,%s" % (bound, v, w)]
    for y in reversed(axis):
        row = []
        for x in axis:
            if (x, y) in members:
                row.append("*" if (not x.is_fin or not y.is_fin) else "#")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines)
