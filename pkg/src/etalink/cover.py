"""Infinite-cyclic-cover bookkeeping over an unknotted axis component.

When one component of a diagram is an embedded circle with no
self-crossings, the complement of that axis fibers over the circle and
every other curve lifts to the infinite cyclic cover.  A lift is encoded
combinatorially by a level function on edges: walking along a curve, the
level changes only where the curve passes *under* the axis, by the sign
of that crossing.  Levels are well defined up to a per-curve constant
exactly when every curve has zero winding with the axis.

From the levels two pairings are computed by bucketing crossing signs by
level difference: the linking polynomial of two disjoint lifted curves,
and the eta-function of a single lifted curve against the axis.  A
surgery presentation extends this to knotted first components: the axis
together with (+-1)-framed curves T_1..T_m presents the actual link
after blowing the framed curves down, and the eta-function is recovered
as a ratio of two determinants over Z[t, t^-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagram import DiagramError, LinkDiagram, ParsedLink, linking_number
from .laurent import LaurentPoly, RationalLaurent, conway_normalize, det_laurent


class CoverError(DiagramError):
    """A presentation violates the covering-space preconditions."""


@dataclass(frozen=True)
class AnnularPresentation:
    """A diagram with a distinguished round axis component.

    The axis must have no self-crossings; this forces it to bound a disk
    in the plane, so it is unknotted and its complement has a well
    defined infinite cyclic cover.  ``ray`` records the cut declared by
    an input file; level computation does not depend on the choice, so
    the tokens are retained only for round-tripping.
    """

    base: LinkDiagram
    axis: int
    ray: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        self.base._check_comp(self.axis)
        if self.base.self_crossings(self.axis):
            raise CoverError("axis component %d has self-crossings" % (self.axis + 1))
        edges = {e for cyc in self.base.components for e in cyc}
        for e in self.ray:
            if e not in edges:
                raise CoverError("ray names unknown edge %d" % e)
        object.__setattr__(self, "ray", tuple(self.ray))


@dataclass(frozen=True)
class SurgeryPresentation:
    """An annular presentation plus framed curves T_0..T_m.

    ``curves[r]`` is the component index of T_r and ``framings[r]`` its
    framing.  T_0 plays the role of the second link component and always
    carries framing -1; the remaining curves are the (+-1)-framed
    unknotting circles whose blow-down produces the knotted first
    component.  That the blow-downs really unknot is the supplier's
    claim and is not checked here; the determinant identities below fail
    loudly on most invalid inputs.
    """

    annular: AnnularPresentation
    curves: tuple[int, ...]
    framings: tuple[int, ...]

    def __post_init__(self) -> None:
        a = self.annular
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "framings", tuple(self.framings))
        if not self.curves:
            raise CoverError("surgery presentation needs at least T_0")
        if len(self.curves) != len(self.framings):
            raise CoverError("curve and framing counts differ")
        if len(set(self.curves)) != len(self.curves):
            raise CoverError("surgery curves repeat a component")
        for r, comp in enumerate(self.curves):
            a.base._check_comp(comp)
            if comp == a.axis:
                raise CoverError("T_%d is the axis component" % r)
            if linking_number(a.base, a.axis, comp) != 0:
                raise CoverError("T_%d has nonzero winding with the axis" % r)
        if self.framings[0] != -1:
            raise CoverError("T_0 must carry framing -1")
        for r, eps in enumerate(self.framings):
            if eps not in (1, -1):
                raise CoverError("framing of T_%d must be +-1" % r)
        named = set(self.curves) | {a.axis}
        if len(named) != a.base.component_count:
            raise CoverError("every component must be the axis or some T_r")


def compute_levels(a: AnnularPresentation) -> dict[int, int]:
    """Level of every non-axis edge in the infinite cyclic cover.

    Each curve starts at level 0 on its first listed edge and the level
    changes by the crossing sign wherever the curve passes under the
    axis.  Raises if a curve comes back at a different level, i.e. has
    nonzero winding with the axis.
    """
    L = a.base
    incoming: dict[int, tuple[int, bool]] = {}
    for cid in range(L.crossing_count):
        x = L.crossing(cid)
        incoming[x.under_in] = (cid, True)
        incoming[x.over_in] = (cid, False)
    levels: dict[int, int] = {}
    for i, cyc in enumerate(L.components):
        if i == a.axis:
            continue
        lev = 0
        for j, e in enumerate(cyc):
            levels[e] = lev
            if e not in incoming:
                # A crossing-free curve is a single closed edge.
                continue
            cid, goes_under = incoming[e]
            x = L.crossing(cid)
            if goes_under and L.component_of(x.over_in) == a.axis:
                lev += L.sign(cid)
        if lev != 0:
            raise CoverError("component %d has winding %d with the axis" % (i + 1, lev))
    return levels


def _buckets(pairs: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for d, s in pairs:
        out[d] = out.get(d, 0) + s
    return out


def linking_polynomial(a: AnnularPresentation, r: int, s: int) -> LaurentPoly:
    """Linking pairing of the lifts of components r and s.

    The coefficient of t^n is half the signed count of crossings between
    the two curves whose level difference (r over s) equals n.  Each
    bucket is even because the corresponding pair of lifted closed
    curves meets an even number of times; evaluating at t = 1 recovers
    the ordinary linking number.
    """
    L = a.base
    if r == s:
        raise CoverError("linking polynomial needs two distinct components")
    for i in (r, s):
        L._check_comp(i)
        if i == a.axis:
            raise CoverError("component %d is the axis" % (i + 1))
    levels = compute_levels(a)
    pairs = []
    for cid in L.crossings_between(r, s):
        x = L.crossing(cid)
        if L.component_of(x.under_in) == r:
            d = levels[x.under_in] - levels[x.over_in]
        else:
            d = levels[x.over_in] - levels[x.under_in]
        pairs.append((d, L.sign(cid)))
    out = LaurentPoly.zero()
    for d, total in sorted(_buckets(pairs).items()):
        if total % 2:
            raise CoverError("odd crossing bucket at level difference %d" % d)
        out += LaurentPoly.monomial(d, total // 2)
    if out.at_one() != linking_number(L, r, s):
        raise CoverError("linking polynomial disagrees with linking number at t = 1")
    return out


def eta_by_cover(a: AnnularPresentation, k2: int) -> LaurentPoly:
    """Eta-function of the axis with component k2, from levels alone.

    Self-crossings of k2 are bucketed by the level of the over strand
    minus the level of the under strand.  Writing S_d for the signed
    count in bucket d, the coefficient of t^n + t^-n is (S_n + S_-n)/2
    for n >= 1, and the constant term is pinned by eta(1) = 0.  Other
    components may be present; they do not enter.
    """
    L = a.base
    L._check_comp(k2)
    if k2 == a.axis:
        raise CoverError("component %d is the axis" % (k2 + 1))
    levels = compute_levels(a)
    pairs = []
    for cid in L.self_crossings(k2):
        x = L.crossing(cid)
        pairs.append((levels[x.over_in] - levels[x.under_in], L.sign(cid)))
    S = _buckets(pairs)
    out = LaurentPoly.zero()
    const = 0
    for n in sorted({abs(d) for d in S} - {0}):
        two = S.get(n, 0) + S.get(-n, 0)
        if two % 2:
            raise CoverError("odd crossing bucket at level difference %d" % n)
        out += LaurentPoly({n: two // 2, -n: two // 2})
        const -= two
    out += LaurentPoly.const(const)
    assert out.is_symmetric() and out.at_one() == 0
    return out


def d_matrix(sp: SurgeryPresentation) -> list[list[LaurentPoly]]:
    """Surgery matrix of the presentation, indexed by T_0..T_m.

    Diagonal entries carry the eta-function of each curve with the axis
    (offset by 1 - eps_r for r >= 1); off-diagonal entries are -eps_r
    times the linking polynomial of T_r over T_s.  The construction
    forces d[s][r](t) = eps_r eps_s d[r][s](1/t), and at t = 1 the
    matrix must reduce to a single zero in the corner of an identity
    block; both are checked.
    """
    a = sp.annular
    m1 = len(sp.curves)
    M = [[LaurentPoly.zero()] * m1 for _ in range(m1)]
    for r in range(m1):
        eta = eta_by_cover(a, sp.curves[r])
        if r == 0:
            M[0][0] = eta
        else:
            M[r][r] = LaurentPoly.one() - eta * sp.framings[r]
        for s in range(r + 1, m1):
            lam = linking_polynomial(a, sp.curves[r], sp.curves[s])
            M[r][s] = lam * -sp.framings[r]
            M[s][r] = lam.involute() * -sp.framings[s]
    for r in range(m1):
        for s in range(m1):
            er, es = sp.framings[r], sp.framings[s]
            if M[s][r] != M[r][s].involute() * (er * es):
                raise CoverError("surgery matrix fails its symmetry relation")
            want = 1 if (r == s and r > 0) else 0
            if M[r][s].at_one() != want:
                raise CoverError("surgery matrix is not reduced at t = 1")
    return M


def _minor_det(sp: SurgeryPresentation) -> LaurentPoly:
    M = d_matrix(sp)
    D = det_laurent([row[1:] for row in M[1:]])
    if not D.is_symmetric():
        raise CoverError("unknotting-system determinant is not symmetric")
    if D.at_one() != 1:
        raise CoverError("unknotting-system determinant is not 1 at t = 1")
    return D


def eta_via_surgery(sp: SurgeryPresentation) -> RationalLaurent:
    """Eta-function of the blown-down link as a determinant ratio.

    The full determinant over the determinant of the minor omitting T_0
    computes the eta-function of the surgered pair; it is a polynomial
    exactly when the second component is null-homotopic in the first
    component's complement.
    """
    M = d_matrix(sp)
    full = det_laurent(M)
    minor = _minor_det(sp)
    eta = RationalLaurent(full, minor)
    if not eta.is_symmetric() or eta.at_one() != 0:
        raise CoverError("determinant ratio is not an eta-function")
    return eta


def conway_via_surgery(sp: SurgeryPresentation) -> LaurentPoly:
    """Conway polynomial of the blown-down first component.

    The minor determinant omitting T_0 is the first component's
    Alexander polynomial in symmetric form; rewriting t - 2 + 1/t as z^2
    yields the Conway normalization.
    """
    return conway_normalize(_minor_det(sp))


def annular_from_parsed(p: ParsedLink) -> AnnularPresentation:
    """Build an annular presentation from a parsed diagram file."""
    if p.axis is None:
        raise CoverError("diagram file declares no axis")
    ray: tuple[int, ...] = ()
    if p.ray:
        try:
            ray = tuple(int(tok) for tok in p.ray.split())
        except ValueError:
            raise CoverError("ray tokens must be edge labels") from None
    return AnnularPresentation(p.diagram, p.axis, ray)


def surgery_from_parsed(p: ParsedLink) -> SurgeryPresentation:
    """Build a surgery presentation from a parsed diagram file.

    T_0 is the unique component that is neither the axis nor named in a
    surgery declaration.
    """
    a = annular_from_parsed(p)
    listed = [comp for comp, _ in p.surgery]
    rest = [i for i in range(p.diagram.component_count)
            if i != a.axis and i not in listed]
    if len(rest) != 1:
        raise CoverError("expected exactly one undeclared component for T_0")
    curves = (rest[0], *listed)
    framings = (-1, *(eps for _, eps in p.surgery))
    return SurgeryPresentation(a, curves, framings)
