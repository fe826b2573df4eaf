"""Ideals, Groebner bases and the ideal-theoretic toolkit.

Sum, product, power, intersection, quotient, saturation, elimination,
Hilbert series, Hilbert function, dimension and height.
"""

from __future__ import annotations

import itertools
from math import comb

from . import engine
from .errors import UnitIdeal
from .hilbert import HilbertSeries, hilbert_numerator
from .poly import GREVLEX, MonomialOrder, Polynomial, PolynomialRing


class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by leading monomial."""

    def __init__(self, ring, elements):
        self.ring = ring
        self.order = ring.order
        self.elements = tuple(elements)
        self._reducers = None

    @classmethod
    def _from_dicts(cls, ring, dicts):
        return cls(ring, [Polynomial(ring, d) for d in dicts])

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    @property
    def leading_monomials(self):
        return [g.leading_monomial.exponents for g in self.elements]

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0]._lm == 0

    def reduce(self, f):
        """Normal form of ``f``; unique since the basis is reduced."""
        f = self.ring.convert(f)
        if self._reducers is None:
            red = engine.Reducers(self.ring)
            for g in self.elements:
                red.add(g._terms)
            self._reducers = red
        return Polynomial(self.ring, engine.normal_form(f._terms, self._reducers, self.ring.field.p))

    def contains(self, f):
        return not self.reduce(f)

    def __repr__(self):
        return f"GroebnerBasis({self.order}, [{', '.join(map(str, self.elements))}])"


def buchberger(gens, order=None):
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("buchberger needs a nonzero generator")
    ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    polys = [ring.convert(g)._terms for g in gens]
    return GroebnerBasis._from_dicts(ring, engine.groebner(ring, polys))


def reduce(f, G):
    return G.reduce(f)


def s_polynomial(f, g):
    """S-polynomial of two nonzero polynomials in the same ring."""
    R = f.ring
    a, b = f.leading_monomial.exponents, g.leading_monomial.exponents
    L = tuple(map(max, a, b))
    fa = R.monomial(tuple(x - y for x, y in zip(L, a)), R.field.inv(f.leading_coefficient))
    gb = R.monomial(tuple(x - y for x, y in zip(L, b)), R.field.inv(g.leading_coefficient))
    return fa * f - gb * g


class Ideal:
    """An ideal of a polynomial ring given by generators."""

    def __init__(self, ring, gens=()):
        self.ring = ring
        gens = [ring.const(g) if isinstance(g, int) else g for g in gens]
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.gens = tuple(g for g in gens if g)
        self._gb = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    def __len__(self):
        return len(self.gens)

    @property
    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_zero(self):
        return not self.gens

    def groebner(self, order=None):
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            if self.gens:
                gb = buchberger(self.gens, order)
            else:
                gb = GroebnerBasis(self.ring.with_order(order), [])
            self._gb[order] = gb
        return gb

    def is_unit(self):
        return self.groebner().is_unit()

    def contains(self, f):
        if not f:
            return True
        if not self.gens:
            return False
        return self.groebner().contains(f)

    def is_subset(self, other):
        return all(other.contains(g) for g in self.gens)

    def equals(self, other):
        return self.groebner() == other.groebner()

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n):
        return ideal_power(self, n)

    def map_into(self, ring):
        return Ideal(ring, [ring.convert(g) for g in self.gens])


def _check_same(I, J):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")


def _dedupe(polys):
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        m = f.monic()
        if m not in seen:
            seen.add(m)
            out.append(f)
    return out


def ideal_sum(I, J):
    _check_same(I, J)
    return Ideal(I.ring, _dedupe(I.gens + J.gens))


def ideal_product(I, J):
    _check_same(I, J)
    return Ideal(I.ring, _dedupe(f * g for f in I.gens for g in J.gens))


def ideal_power(I, n):
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return Ideal.unit(I.ring)
    gens = []
    for combo in itertools.combinations_with_replacement(range(len(I.gens)), n):
        f = I.ring.one()
        for i in combo:
            f = f * I.gens[i]
        gens.append(f)
    return Ideal(I.ring, _dedupe(gens))


def ideal_ops(I, J, op, n=None):
    if op == "sum":
        return ideal_sum(I, J)
    if op == "product":
        return ideal_product(I, J)
    if op == "power":
        return ideal_power(I, n)
    raise ValueError(f"unknown ideal operation {op!r}")


def _extended_ring(ring, extra, order):
    names = list(extra)
    while set(names) & set(ring.names):
        names = ["_" + v for v in names]
    return PolynomialRing(ring.field, tuple(names) + ring.names, order)


def _lift(f, big, k):
    """Embed f into ``big`` whose first k variables are new."""
    src = f.ring
    pad = (0,) * k
    return Polynomial(big, {big.pack(pad + src.unpack(m)): c for m, c in f._terms.items()})


def _drop(f, small, k):
    big = f.ring
    return Polynomial(small, {small.pack(big.unpack(m)[k:]): c for m, c in f._terms.items()})


def intersect(I, J):
    """I cap J by eliminating t from t*I + (1-t)*J.

    For homogeneous input the auxiliary variable gets degree 0 and the order
    ``elim_homog(1)`` keeps the computation graded; otherwise ``block(1)``.
    """
    _check_same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    homog = I.is_homogeneous and J.is_homogeneous
    order = MonomialOrder.elim_homog(1) if homog else MonomialOrder.block(1)
    big = _extended_ring(ring, ["t"], order)
    t = big.gen(0)
    gens = [t * _lift(f, big, 1) for f in I.gens]
    gens += [(1 - t) * _lift(g, big, 1) for g in J.gens]
    gb = buchberger(gens)
    return Ideal(ring, [_drop(g, ring, 1) for g in gb if not g.involves(0)])


def _quotient_by_element(I, g):
    ring = I.ring
    if not g:
        raise ValueError("quotient by zero")
    K = intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [f.exact_divide(g) for f in K.groebner()])


def quotient(I, J):
    """(I : J) as the intersection of the (I : g) over generators g of J."""
    _check_same(I, J)
    if J.is_zero():
        raise ValueError("quotient by the zero ideal")
    result = None
    for g in J.gens:
        Q = _quotient_by_element(I, g)
        result = Q if result is None else intersect(result, Q)
    return result


def _variable_index(g):
    if len(g) != 1:
        return None
    exps = g.leading_monomial.exponents
    if sum(exps) != 1:
        return None
    return exps.index(1)


def _saturate_by_variable(I, i):
    """(I : x_i^oo) for homogeneous I, via grevlex with x_i as last variable."""
    ring = I.ring
    names = [v for j, v in enumerate(ring.names) if j != i] + [ring.names[i]]
    perm = PolynomialRing(ring.field, names, GREVLEX)
    gb = buchberger([perm.convert(f) for f in I.gens])
    last = perm.nvars - 1
    gens = []
    for g in gb:
        k = min(e[last] for e in g.monomials())
        if k:
            g = g.exact_divide(perm.gen(last) ** k)
        gens.append(ring.convert(g))
    return Ideal(ring, gens)


def saturate_by_variable(I, i):
    """(I : x_i^oo) for a homogeneous ideal I."""
    if not I.is_homogeneous:
        raise ValueError("saturate_by_variable needs a homogeneous ideal")
    if I.is_zero():
        return I
    return _saturate_by_variable(I, i)


def saturate(I, J, method="auto"):
    """(I : J^oo).

    ``method="iterate"`` repeats K <- (K : J) until the reduced bases agree.
    ``method="variables"`` (homogeneous I, J generated by variables) returns
    the intersection of the (I : x^oo) over the variables x generating J.
    ``"auto"`` picks ``variables`` whenever it applies.
    """
    _check_same(I, J)
    if I.is_zero():
        return I
    if J.is_zero():
        return Ideal.unit(I.ring)
    var_idx = [_variable_index(g) for g in J.gens]
    usable = I.is_homogeneous and all(v is not None for v in var_idx)
    if method == "auto":
        method = "variables" if usable else "iterate"
    if method == "variables":
        if not usable:
            raise ValueError("variables method needs homogeneous I and J generated by variables")
        result = None
        for i in sorted(set(var_idx)):
            S = _saturate_by_variable(I, i)
            result = S if result is None else intersect(result, S)
        return Ideal(I.ring, result.groebner().elements)
    if method != "iterate":
        raise ValueError(f"unknown saturation method {method!r}")
    K = I
    while True:
        K2 = quotient(K, J)
        if K2.groebner() == K.groebner():
            return Ideal(I.ring, K.groebner().elements)
        K = K2


def eliminate(I, k):
    """I cap k[last n-k variables], returned as an ideal of that subring."""
    ring = I.ring
    if not 0 < k < ring.nvars:
        raise ValueError(f"cannot eliminate {k} of {ring.nvars} variables")
    sub = PolynomialRing(ring.field, ring.names[k:], GREVLEX)
    if I.is_zero():
        return Ideal(sub)
    gb = I.groebner(MonomialOrder.block(k))
    keep = [g for g in gb if not any(g.involves(i) for i in range(k))]
    return Ideal(sub, [_drop(g, sub, k) for g in keep])


def hilbert_series(I):
    """Reduced Hilbert series of R/I for a homogeneous ideal I."""
    if not I.is_homogeneous:
        raise ValueError("hilbert_series needs a homogeneous ideal")
    n = I.ring.nvars
    if I.is_zero():
        return HilbertSeries.from_numerator([1], n)
    lms = I.groebner(GREVLEX).leading_monomials
    return HilbertSeries.from_numerator(hilbert_numerator(lms, n), n)


def hilbert_function(I, e):
    """dim_k [R/I]_e."""
    return hilbert_series(I).coefficient(e)


def dimension_and_height(I):
    """(Krull dimension of R/I, height of I); raises UnitIdeal for I = R."""
    hs = hilbert_series(I)
    if hs.dimension < 0:
        raise UnitIdeal("the unit ideal has no dimension")
    return hs.dimension, I.ring.nvars - hs.dimension


def ideal_degree(I):
    return hilbert_series(I).degree


def ring_dimension(ring, e):
    """dim_k R_e for R = k[x_0..x_{n-1}]."""
    n = ring.nvars
    return comb(e + n - 1, n - 1) if e >= 0 else 0
