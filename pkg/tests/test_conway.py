"""Conway polynomial: frozen table values, the skein relation itself, and
invariance under relabeling, mirroring, and reversal."""

import random

import pytest

from etalink.conway import conway_of_component, conway_polynomial
from etalink.diagram import (
    BraidWord,
    LinkDiagram,
    from_braid,
    is_unknotted,
    mirror,
    parse_diagram,
    reverse_component,
    switch_crossing,
    to_text,
)
from etalink.laurent import LaurentPoly

Z = LaurentPoly.var()
ONE = LaurentPoly.one()


def zpoly(*coeffs):
    # coeffs[k] multiplies z^k
    out = LaurentPoly.zero()
    for k, c in enumerate(coeffs):
        out = out + LaurentPoly.monomial(k, c)
    return out


def braid_closure(n, letters):
    return from_braid(BraidWord(n, tuple(letters)))


STANDARD = [
    ("unknot", (1, ()), zpoly(1)),
    ("two-unlink", (2, ()), zpoly(0)),
    ("right trefoil", (2, (1, 1, 1)), zpoly(1, 0, 1)),
    ("left trefoil", (2, (-1, -1, -1)), zpoly(1, 0, 1)),
    ("figure eight", (3, (1, -2, 1, -2)), zpoly(1, 0, -1)),
    ("hopf positive", (2, (1, 1)), zpoly(0, 1)),
    ("hopf negative", (2, (-1, -1)), zpoly(0, -1)),
    ("torus(2,4)", (2, (1, 1, 1, 1)), zpoly(0, 2, 0, 1)),
    ("torus(2,5)", (2, (1,) * 5), zpoly(1, 0, 3, 0, 1)),
    ("torus(2,6)", (2, (1,) * 6), zpoly(0, 3, 0, 4, 0, 1)),
    ("granny", (3, (1, 1, 1, 2, 2, 2)), zpoly(1, 0, 2, 0, 1)),
    ("square", (3, (1, 1, 1, -2, -2, -2)), zpoly(1, 0, 2, 0, 1)),
    ("borromean", (3, (1, -2, 1, -2, 1, -2)), zpoly(0, 0, 0, 0, 1)),
]


class TestStandardValues:
    @pytest.mark.parametrize("name,braid,expect", STANDARD, ids=[s[0] for s in STANDARD])
    def test_value(self, name, braid, expect):
        assert conway_polynomial(braid_closure(*braid)) == expect

    def test_switched_trefoil_is_unknot(self):
        L = switch_crossing(braid_closure(2, (1, 1, 1)), 1)
        assert conway_polynomial(L) == ONE

    def test_parsed_diagram(self):
        text = to_text(braid_closure(2, (1, 1, 1)))
        assert conway_polynomial(parse_diagram(text)) == zpoly(1, 0, 1)


class TestSkeinRelation:
    # Every (L+, L-, L0) triple the recursion touches must satisfy the
    # defining relation when each member is evaluated from scratch.
    @pytest.mark.parametrize(
        "braid",
        [(2, (1, 1, 1)), (3, (1, -2, 1, -2)), (3, (1, -2, 1, -2, 1, -2)), (2, (1, 1, 1, 1))],
        ids=["trefoil", "figure-eight", "borromean", "torus24"],
    )
    def test_triples(self, braid):
        triples = []
        conway_polynomial(braid_closure(*braid), on_triple=lambda p, m, s: triples.append((p, m, s)))
        assert triples
        for pos, neg, smoothed in triples[:12]:
            lhs = conway_polynomial(pos)
            rhs = conway_polynomial(neg) + Z * conway_polynomial(smoothed)
            assert lhs == rhs


class TestProperties:
    def test_exponent_parity(self):
        for _, braid, _ in STANDARD:
            L = braid_closure(*braid)
            p = conway_polynomial(L)
            base = L.component_count - 1
            for e, c in p.items():
                assert c != 0
                assert e >= base and (e - base) % 2 == 0

    def test_mirror_negates_variable(self):
        for _, braid, _ in STANDARD:
            L = braid_closure(*braid)
            p = conway_polynomial(L)
            m = conway_polynomial(mirror(L))
            flipped = LaurentPoly.zero()
            for e, c in p.items():
                flipped = flipped + LaurentPoly.monomial(e, -c if e % 2 else c)
            assert m == flipped

    def test_knot_reversal_invariance(self):
        for braid in [(2, (1, 1, 1)), (3, (1, -2, 1, -2))]:
            L = braid_closure(*braid)
            assert conway_polynomial(reverse_component(L, 0)) == conway_polynomial(L)

    def test_link_component_reversal_flips_hopf(self):
        L = braid_closure(2, (1, 1))
        assert conway_polynomial(reverse_component(L, 1)) == zpoly(0, -1)

    def test_relabeling_independence(self):
        rng = random.Random(20260815)
        cases = [(2, (1, 1, 1)), (3, (1, -2, 1, -2)), (2, (1,) * 5),
                 (3, (1, -2, 1, -2, 1, -2)), (3, (1, 1, 1, -2, -2, -2))]
        for braid in cases:
            L = braid_closure(*braid)
            want = conway_polynomial(L)
            for _ in range(4):
                assert conway_polynomial(_relabel(L, rng)) == want


def _relabel(L, rng):
    olds = sorted(e for comp in L.components for e in comp)
    news = list(range(1, len(olds) + 1))
    rng.shuffle(news)
    m = dict(zip(olds, news))
    comps = []
    for comp in L.components:
        k = rng.randrange(len(comp))
        rot = comp[k:] + comp[:k]
        comps.append(tuple(m[e] for e in rot))
    rng.shuffle(comps)
    order = list(range(L.crossing_count))
    rng.shuffle(order)
    xs = [tuple(m[e] for e in L.crossings[i]) for i in order]
    signs = [L.sign(i) for i in order]
    return LinkDiagram(comps, xs, signs)


class TestInterfaces:
    def test_budget_exhaustion(self):
        L = braid_closure(3, (1, -2, 1, -2, 1, -2))
        with pytest.raises(RuntimeError):
            conway_polynomial(L, budget=2)

    def test_conway_of_component(self):
        L = braid_closure(2, (1, 1, 1, 1))
        assert conway_of_component(L, 0) == ONE
        assert conway_of_component(L, 1) == ONE
        K = braid_closure(2, (1, 1, 1))
        assert conway_of_component(K, 0) == zpoly(1, 0, 1)

    def test_is_unknotted_uses_conway(self):
        assert is_unknotted(braid_closure(2, (1, 1, 1)), 0) is False
        assert is_unknotted(braid_closure(1, ()), 0) is True
