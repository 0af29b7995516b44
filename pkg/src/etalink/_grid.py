"""Integer-grid router: orthogonal closed polylines with per-segment depth
become link diagrams.

Each path is a closed sequence of (x, y, depth) waypoints joined by
axis-parallel segments; depth is the height of the segment leaving the
waypoint, and at every intersection the deeper segment passes over.
Collinear waypoints are allowed so a straight run can change depth.
Crossing data (slots, signs) is derived from the geometry, so the
resulting LinkDiagram never hits the orientation-ambiguity guard.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import LinkDiagram, linking_number


class GridError(ValueError):
    """A path list that does not describe a generic orthogonal projection."""


def _ccw(v: tuple[int, int]) -> tuple[int, int]:
    return (-v[1], v[0])


def _neg(v: tuple[int, int]) -> tuple[int, int]:
    return (-v[0], -v[1])


class _Seg:
    __slots__ = ("path", "idx", "p", "q", "depth", "dir", "horizontal")

    def __init__(self, path: int, idx: int, p, q, depth: int):
        dx, dy = q[0] - p[0], q[1] - p[1]
        if (dx == 0) == (dy == 0):
            raise GridError("path %d: segment %d from %r to %r is not axis-parallel" % (path, idx, p, q))
        self.path = path
        self.idx = idx
        self.p = p
        self.q = q
        self.depth = depth
        self.dir = ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))
        self.horizontal = dy == 0

    def offset_of(self, point) -> int:
        return abs(point[0] - self.p[0]) + abs(point[1] - self.p[1])

    def contains(self, point) -> bool:
        lo_x, hi_x = min(self.p[0], self.q[0]), max(self.p[0], self.q[0])
        lo_y, hi_y = min(self.p[1], self.q[1]), max(self.p[1], self.q[1])
        return lo_x <= point[0] <= hi_x and lo_y <= point[1] <= hi_y


def _adjacent(a: _Seg, b: _Seg, length: int) -> bool:
    return a.path == b.path and ((a.idx + 1) % length == b.idx or (b.idx + 1) % length == a.idx)


def _pair_events(a: _Seg, b: _Seg, n_segs: dict[int, int]):
    # Returns a crossing point or None; touching configurations other than
    # the shared corner of consecutive segments are rejected.
    adj = _adjacent(a, b, n_segs[a.path])
    if a.horizontal == b.horizontal:
        if a.horizontal and a.p[1] != b.p[1]:
            return None
        if not a.horizontal and a.p[0] != b.p[0]:
            return None
        ax = [a.p[0], a.q[0]] if a.horizontal else [a.p[1], a.q[1]]
        bx = [b.p[0], b.q[0]] if b.horizontal else [b.p[1], b.q[1]]
        lo = max(min(ax), min(bx))
        hi = min(max(ax), max(bx))
        if lo > hi:
            return None
        if lo == hi and adj:
            return None
        raise GridError("paths %d/%d: collinear segments %d and %d overlap" % (a.path, b.path, a.idx, b.idx))
    h, v = (a, b) if a.horizontal else (b, a)
    point = (v.p[0], h.p[1])
    if not (h.contains(point) and v.contains(point)):
        return None
    interior_h = min(h.p[0], h.q[0]) < point[0] < max(h.p[0], h.q[0])
    interior_v = min(v.p[1], v.q[1]) < point[1] < max(v.p[1], v.q[1])
    if interior_h and interior_v:
        return point
    if adj and (point == a.q == b.p or point == b.q == a.p):
        return None
    raise GridError("paths %d/%d: segments %d and %d touch at %r" % (a.path, b.path, a.idx, b.idx, point))


def route_paths(paths: Sequence[Sequence[tuple[int, int, int]]]) -> LinkDiagram:
    """Trace closed orthogonal paths into a LinkDiagram, one component per
    path in the given order."""
    segs: list[_Seg] = []
    n_segs: dict[int, int] = {}
    for pi, path in enumerate(paths):
        if len(path) < 2:
            raise GridError("path %d has fewer than two waypoints" % pi)
        pts = [(int(x), int(y)) for x, y, _ in path]
        if len(set(pts)) != len(pts):
            raise GridError("path %d revisits a waypoint" % pi)
        n_segs[pi] = len(pts)
        local = [_Seg(pi, i, pts[i], pts[(i + 1) % len(pts)], int(path[i][2])) for i in range(len(pts))]
        for i, seg in enumerate(local):
            if seg.dir == _neg(local[i - 1].dir):
                raise GridError("path %d reverses direction at %r" % (pi, seg.p))
        segs.extend(local)

    hits: list[tuple[tuple[int, int], _Seg, _Seg]] = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            point = _pair_events(segs[i], segs[j], n_segs)
            if point is not None:
                a, b = segs[i], segs[j]
                if a.depth == b.depth:
                    raise GridError("paths %d/%d: equal depth %d at %r" % (a.path, b.path, a.depth, point))
                hits.append((point, a, b))

    # Cut every path into edges at its hit points, in traversal order.
    per_path: dict[int, list[tuple[int, int, int]]] = {pi: [] for pi in n_segs}
    for k, (point, a, b) in enumerate(hits):
        per_path[a.path].append((a.idx, a.offset_of(point), k))
        per_path[b.path].append((b.idx, b.offset_of(point), k))

    label = 1
    cycles: list[tuple[int, ...]] = []
    incidence: dict[int, list[tuple[int, int, _Seg]]] = {k: [] for k in range(len(hits))}
    for pi in sorted(n_segs):
        events = sorted(per_path[pi])
        if not events:
            cycles.append((label,))
            label += 1
            continue
        k = len(events)
        edges = list(range(label, label + k))
        label += k
        cycles.append(tuple(edges))
        for pos, (segidx, _off, hit) in enumerate(events):
            seg = next(s for s in segs if s.path == pi and s.idx == segidx)
            incidence[hit].append((edges[pos - 1], edges[pos], seg))

    xs: list[tuple[int, int, int, int]] = []
    signs: list[int] = []
    for k, (point, a, b) in enumerate(hits):
        (in1, out1, s1), (in2, out2, s2) = incidence[k]
        if s1.depth < s2.depth:
            under, over = (in1, out1, s1), (in2, out2, s2)
        else:
            under, over = (in2, out2, s2), (in1, out1, s1)
        u, o = under[2].dir, over[2].dir
        r1 = _ccw(_neg(u))
        if r1 == _neg(o):
            bq, dq = over[0], over[1]
        else:
            bq, dq = over[1], over[0]
        xs.append((under[0], bq, under[1], dq))
        signs.append(o[0] * u[1] - o[1] * u[0])
    return LinkDiagram(cycles, xs, signs)


def finger_link(fingers: Sequence[tuple[int, int]]) -> LinkDiagram:
    """Two-component link with linking number zero: component 0 is a round
    axis, component 1 climbs through it n times, clasps its own level-0
    intake, and descends, once per (clasp sense, depth) pair in fingers.

    Each finger (eps, n) contributes eps * (t^n + t^-n - 2) to the axis
    eta-function; eps is the sign of both clasp crossings and n the level
    difference across the clasp.
    """
    specs = [(int(e), int(n)) for e, n in fingers]
    if not specs:
        raise GridError("at least one finger required")
    for e, n in specs:
        if e not in (1, -1) or n < 1:
            raise GridError("finger (%d, %d): sense must be +-1 and depth >= 1" % (e, n))

    pts: list[tuple[int, int, int]] = []
    y = 4
    first_q = None
    for f, (eps, n) in enumerate(specs):
        yU = [y + 8 * i for i in range(n)]
        yV = [u + 4 for u in yU]
        dip = yU[0] - 2
        yD = [yV[-1] + 4 + 8 * j for j in range(n)]
        yE = [d + 4 for d in yD]
        if first_q is None:
            first_q = yU[0]
        d_desc = 23 if eps > 0 else 21
        d_climb = 21 if eps > 0 else 23
        for i in range(n):
            if i == 0:
                pts.append((2, yU[0], 22))
                pts.append((8, yU[0], -5))
            else:
                pts.append((3, yU[i], -5))
            pts.append((15, yU[i], 5))
            pts.append((22, yU[i], 5))
            pts.append((22, yV[i], 5))
            if i < n - 1:
                pts.append((3, yV[i], 5))
        pts.append((6, yV[-1], d_desc))
        pts.append((6, dip, 21))
        pts.append((4, dip, d_climb))
        for j in range(n):
            pts.append((4, yD[j], 5))
            pts.append((15, yD[j], -5))
            pts.append((24, yD[j], -5))
            pts.append((24, yE[j], 5))
            if j < n - 1:
                pts.append((4, yE[j], 5))
        y = yE[-1] + 6
        if f < len(specs) - 1:
            pts.append((2, yE[-1], 5))
        else:
            pts.append((0, yE[-1], 5))
            pts.append((0, first_q, 5))

    height = y - 2
    axis = [(10, 0, 0), (20, 0, 0), (20, height, 0), (10, height, 0)]
    L = route_paths([axis, pts])
    assert L.crossing_count == sum(12 * n - 2 for _, n in specs)
    assert linking_number(L, 0, 1) == 0
    return L
