"""Worked examples for each operation, one assertion per example."""

import pytest

from hbfiber.errors import NotHeightTwo, NotHomogeneous
from hbfiber.groebner import (
    Ideal,
    buchberger,
    dimension_and_height,
    eliminate,
    hilbert_function,
    hilbert_series,
    ideal_power,
    ideal_product,
    intersect,
    quotient,
    reduce,
    s_polynomial,
    saturate,
)
from hbfiber.multiplicity import (
    MuVector,
    elementary_symmetric,
    j_multiplicity_formula,
    lemma_sides,
    m_coefficient,
    multiplicity_from_m,
)
from hbfiber.oracles import image_ideal, substitute
from hbfiber.poly import GREVLEX, LEX, compare
from hbfiber.resolution import (
    FreeModuleElement,
    g_condition,
    hilbert_burch,
    minors,
    module_buchberger,
    syzygy_matrix,
)
from tests.support import I1, I2, I3, ring


@pytest.fixture
def R():
    return ring("x0 x1 x2")


def test_compare(R):
    assert compare((2, 0, 0), (1, 1, 0), GREVLEX) == 1
    assert compare((1, 1, 0), (0, 2, 0), GREVLEX) == 1
    for order in (GREVLEX, LEX):
        assert compare((1, 2, 3), (1, 2, 3), order) == 0


def test_arithmetic(R):
    x0, x1, x2 = R.gens()
    assert (x0 + x1) + (-x1) == x0
    assert (x0 * x1) * x2 == x0 * x1 * x2
    assert (x0**2 * x1 + x0 * x1**2).exact_divide(x0 * x1) == x0 + x1


def test_homogeneous_degree(R):
    x0, x1, x2 = R.gens()
    assert (x0 * x1 + x2**2).homogeneous_degree() == 2
    with pytest.raises(NotHomogeneous):
        (x0 + x1**2).homogeneous_degree()
    assert (x0**3).homogeneous_degree() == 3


def test_evaluate(R):
    x0, x1, x2 = R.gens()
    assert (x0 * x1).evaluate((2, 3, 1)) == 6
    assert (x0 * x1 + x2**2).evaluate((0, 0, 0)) == 0
    S = ring("x0 x1")
    y0, y1 = S.gens()
    assert (y0**2 + y1).evaluate((1, 1)) == 2


def test_reduce(R):
    x0, x1, x2 = R.gens()
    G = buchberger([x0 * x1, x0 * x2, x1 * x2])
    assert not reduce(x0**2 * x1, G)
    assert reduce(x0**2, G) == x0**2
    for g in G:
        assert not reduce(g, G)


def test_buchberger(R):
    x0, x1, x2 = R.gens()
    assert list(buchberger([x0 * x1, x0 * x2, x1 * x2])) == sorted([x0 * x1, x0 * x2, x1 * x2], key=lambda f: f._lm)
    for order in (GREVLEX, LEX):
        assert {str(g) for g in buchberger([x0, x0 + x1], order)} == {"x0", "x1"}
    G = buchberger([x0**2 - x1 * x2, x0 * x1 - x2**2])
    elems = list(G)
    for i, f in enumerate(elems):
        for g in elems[i + 1:]:
            assert not reduce(s_polynomial(f, g), G)
    # S(f, g) = x1*f - x0*g contributes the cubic; sorted by leading monomial
    assert [str(g) for g in G] == ["x0*x1 - x2^2", "x0^2 - x1*x2", "x1^2*x2 - x0*x2^2"]


def test_ideal_ops(R):
    x0, x1, x2 = R.gens()
    assert ideal_power(Ideal(R, [x0, x1]), 2).equals(Ideal(R, [x0**2, x0 * x1, x1**2]))
    assert ideal_power(I1(), 0).is_unit()
    assert ideal_product(Ideal(R, [x0]), Ideal(R, [x1])).equals(Ideal(R, [x0 * x1]))


def test_intersect(R):
    x0, x1, x2 = R.gens()
    assert intersect(Ideal(R, [x0]), Ideal(R, [x1])).equals(Ideal(R, [x0 * x1]))
    assert intersect(Ideal(R, [x0**2, x1]), Ideal(R, [x0])).equals(Ideal(R, [x0**2, x0 * x1]))
    I = I1()
    assert intersect(I, I).equals(I)


def test_quotient(R):
    x0, x1, x2 = R.gens()
    assert quotient(Ideal(R, [x0**2, x0 * x1]), Ideal(R, [x0])).equals(Ideal(R, [x0, x1]))
    I = I1()
    assert quotient(I, Ideal.unit(R)).equals(I)
    assert quotient(I, Ideal(R, [x0])).equals(Ideal(R, [x1, x2]))


def test_saturate(R):
    x0, x1, x2 = R.gens()
    S = ring("x0 x1")
    y0, y1 = S.gens()
    assert saturate(Ideal(S, [y0**2, y0 * y1]), Ideal(S, [y0, y1])).equals(Ideal(S, [y0]))
    m = Ideal(R, R.gens())
    assert saturate(Ideal(R, [x0**2, x1**3, x2]), m).is_unit()
    assert saturate(I1(), m).equals(I1())


def test_eliminate():
    T = ring("x0 x1 y0 y1 y2")
    x0, x1, y0, y1, y2 = T.gens()
    E = eliminate(Ideal(T, [y0 - x0**2, y1 - x0 * x1, y2 - x1**2]), 2)
    a, b, c = E.ring.gens()
    assert E.equals(Ideal(E.ring, [a * c - b**2]))
    U = ring("x0 y0")
    u, v = U.gens()
    E = eliminate(Ideal(U, [u, v]), 1)
    assert E.equals(Ideal(E.ring, E.ring.gens()))
    E = eliminate(Ideal(U, [u + v]), 1)
    assert E.is_zero()


def test_hilbert_series_and_function(R):
    x0, x1, x2 = R.gens()
    hs = hilbert_series(Ideal(R, [x0 * x1]))
    assert (hs.numerator, hs.denominator_exponent, hs.dimension, hs.degree) == ((1, 1), 2, 2, 2)
    hs0 = hilbert_series(Ideal(R))
    assert (hs0.numerator, hs0.denominator_exponent) == ((1,), 3)
    hs1 = hilbert_series(I1())
    assert (hs1.dimension, hs1.degree) == (1, 3)
    assert hilbert_function(Ideal(R), 2) == 6
    assert hilbert_function(Ideal(R, [x0]), 0) == 1
    assert hilbert_function(I1(), 5) == 3


def test_dimension_and_height(R):
    x0, x1, x2 = R.gens()
    assert dimension_and_height(I1()) == (1, 2)
    assert dimension_and_height(Ideal(R, [x0])) == (2, 1)
    assert dimension_and_height(Ideal(R, R.gens())) == (0, 3)


def test_module_buchberger():
    S = ring("x0 x1")
    x0, x1 = S.gens()
    gb = module_buchberger([FreeModuleElement((x0,))])
    assert [e.components[0] for e in gb.elements] == [x0]
    gb = module_buchberger([FreeModuleElement((x0,)), FreeModuleElement((x1,))])
    assert [s.components for s in gb.syzygies] in ([(x1, -x0)], [(-x1, x0)])
    assert len(gb.elements) == 2


def test_syzygy_matrix():
    phi = syzygy_matrix(list(I1().gens))
    assert phi.column_degrees == (1, 1)
    S = ring("s t")
    s, t = S.gens()
    phi = syzygy_matrix([s**2, t**2])
    assert phi.column_degrees == (2,)
    col = phi.column(0).components
    assert col in ((t**2, -(s**2)), (-(t**2), s**2))
    assert syzygy_matrix(list(I3().gens)).column_degrees == (1, 2)


def test_hilbert_burch():
    hb = hilbert_burch(I1())
    assert (hb.r, hb.s, hb.d, hb.mu) == (2, 2, 2, (1, 1))
    hb = hilbert_burch(I2())
    assert (hb.r, hb.s, hb.d, hb.mu) == (1, 1, 2, (2,))
    S = ring("x0 x1")
    x0, x1 = S.gens()
    with pytest.raises(NotHeightTwo):
        hilbert_burch(Ideal(S, [x0**2, x0 * x1]))


def test_minors(R):
    hb = hilbert_burch(I1())
    assert minors([list(r) for r in hb.phi.entries], 2).equals(I1())
    M = [[R.gen(0)], [R.gen(1)]]
    assert minors(M, 0).is_unit()
    assert minors(M, 1).equals(Ideal(R, [R.gen(0), R.gen(1)]))


def test_g_condition(R):
    rows = g_condition(hilbert_burch(I1())).rows
    assert [(r.i, r.height, r.passed) for r in rows] == [(1, 2, True), (2, 3, True)]
    x0, x1, _ = R.gens()
    gc = g_condition(hilbert_burch(Ideal(R, [x0**2, x0 * x1, x1**2])))
    assert [(r.i, r.height, r.passed) for r in gc.rows] == [(1, 2, True), (2, 2, False)]
    assert g_condition(hilbert_burch(I2())).passed


def test_elementary_symmetric():
    assert elementary_symmetric(2, (1, 1)) == 1
    assert elementary_symmetric(2, (1, 2, 3)) == 11
    assert elementary_symmetric(1, (4, 2, 7)) == 13
    assert elementary_symmetric(3, (2, 3, 5)) == 30


def test_m_coefficient():
    mv = MuVector(2, (2, 3))
    assert m_coefficient(1, mv) == 1
    assert m_coefficient(2, mv) == 6
    assert m_coefficient(0, mv) == 0


def test_multiplicity_from_m():
    assert multiplicity_from_m(MuVector(2, (2, 3))) == 6
    assert multiplicity_from_m(MuVector(1, (1, 2))) == 3
    assert multiplicity_from_m(MuVector(2, (1, 1))) == 1


def test_j_multiplicity_formula():
    assert j_multiplicity_formula(2, MuVector(2, (1, 1))) == 2
    assert j_multiplicity_formula(2, MuVector(1, (2,))) == 4
    assert j_multiplicity_formula(3, MuVector(1, (1, 2))) == 9


def test_lemma_examples():
    assert lemma_sides("i", r=2, s=4, k=2) == (1, 1)
    lhs, rhs = lemma_sides("ii", r=2, mu=(3, 1, 4), ell=1)
    assert lhs == 0 == rhs
    assert lemma_sides("iv", r=2, mu=(2, 3)) == (6, 6)


def test_image_ideal():
    S = ring("x0 x1")
    x0, x1 = S.gens()
    forms = [x0**2, x0 * x1, x1**2]
    K = image_ideal(forms)
    y0, y1, y2 = K.ring.gens()
    assert K.equals(Ideal(K.ring, [y0 * y2 - y1**2]))
    assert image_ideal(list(I1().gens)).is_zero()
    K3 = image_ideal(list(I3().gens))
    (g,) = K3.gens
    assert g.homogeneous_degree() == 3
    assert not substitute(g, list(I3().gens))
