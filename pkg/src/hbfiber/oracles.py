"""Brute-force cross-checks of the closed formulas.

Each oracle computes its quantity from the definitions with Groebner
bases: graded pieces of saturated powers, local cohomology lengths via
Hilbert series subtraction, the image of the rational map by elimination,
and fibers over random rational points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
import random

from .errors import (
    AllTrialsDegenerate,
    DimensionAnomaly,
    NonFiniteLength,
    NonIntegralDegree,
)
from .groebner import (
    Ideal,
    eliminate,
    hilbert_function,
    hilbert_series,
    ideal_power,
    intersect,
    saturate,
    saturate_by_variable,
)
from .hilbert import _divide_one_minus_t, _poly_add
from .multiplicity import elementary_symmetric
from .poly import PolynomialRing, Polynomial


def maximal_ideal(ring):
    return Ideal(ring, ring.gens())


def finite_differences(values, depth):
    """table[k] is the k-th forward difference of ``values``."""
    table = [list(values)]
    for _ in range(depth):
        prev = table[-1]
        table.append([b - a for a, b in zip(prev, prev[1:])])
    return table


def stable_value(values, depth):
    """Last ``depth``-th difference if the final two agree, else None."""
    row = finite_differences(values, depth)[depth]
    if len(row) >= 2 and row[-1] == row[-2]:
        return row[-1]
    return None


@dataclass
class SaturatedFiberSample:
    d: int
    r: int
    samples: list
    inferred_multiplicity: int | None
    differences: list = field(default_factory=list)

    @property
    def stable(self):
        return self.inferred_multiplicity is not None

    @property
    def dims(self):
        return [dim for _, dim in self.samples]


def _is_monomial(I):
    return all(len(g) == 1 for g in I.gens)


def saturate_maximal(P, m=None):
    """(P : m^oo) for homogeneous P.

    First tries (P : x_last^oo), which always contains the saturation and
    equals it exactly when it is a finite-length extension of P (checked by
    Hilbert series).  Falls back to intersecting over all variables.
    """
    m = m or maximal_ideal(P.ring)
    if P.is_zero() or P.is_unit():
        return P
    if not _is_monomial(P):
        S = saturate_by_variable(P, P.ring.nvars - 1)
        try:
            finite_length(P, S)
            return S
        except NonFiniteLength:
            pass
    return saturate(P, m, method="variables")


def saturated_power_dims(I, d, N):
    """[(n, dim_k [(I^n : m^oo)]_{nd}) for n = 0..N]."""
    ring = I.ring
    m = maximal_ideal(ring)
    r = ring.nvars - 1
    out = []
    for n in range(N + 1):
        J = saturate_maximal(ideal_power(I, n), m)
        e = n * d
        out.append((n, comb(e + r, r) - hilbert_function(J, e)))
    return out


def saturated_fiber_sample(I, d, N):
    r = I.ring.nvars - 1
    if N < r + 2:
        raise ValueError(f"need N >= r + 2 = {r + 2}")
    samples = saturated_power_dims(I, d, N)
    dims = [v for _, v in samples]
    return SaturatedFiberSample(
        d=d,
        r=r,
        samples=samples,
        inferred_multiplicity=stable_value(dims, r),
        differences=finite_differences(dims, r),
    )


@dataclass
class JMultSample:
    r: int
    samples: list
    inferred_j: int | None
    differences: list = field(default_factory=list)

    @property
    def stable(self):
        return self.inferred_j is not None


def _numerator_over(hs, n):
    """Numerator of ``hs`` written over (1-T)^n."""
    num = list(hs.numerator)
    for _ in range(n - hs.denominator_exponent):
        num = _poly_add(num, [0] + num, -1)
    return num


def finite_length(big, small):
    """dim_k(small / big) for homogeneous ideals big <= small with finite-length quotient.

    Both Hilbert series are put over (1-T)^n; their difference must be a
    polynomial, whose value at T=1 is the length.
    """
    n = big.ring.nvars
    diff = _poly_add(_numerator_over(hilbert_series(big), n),
                     _numerator_over(hilbert_series(small), n), -1)
    for _ in range(n):
        if not diff:
            break
        if sum(diff) != 0:
            raise NonFiniteLength("Hilbert series difference is not a polynomial")
        diff = _divide_one_minus_t(diff)
    return sum(diff)


def local_cohomology_lengths(I, N):
    """[(n, dim_k H^0_m(I^n / I^{n+1})) for n = 0..N]."""
    ring = I.ring
    m = maximal_ideal(ring)
    out = []
    power = ideal_power(I, 0)
    for n in range(N + 1):
        nxt = ideal_power(I, n + 1)
        K = intersect(saturate_maximal(nxt, m), power)
        out.append((n, finite_length(nxt, K)))
        power = nxt
    return out


def j_mult_sample(I, N):
    r = I.ring.nvars - 1
    if N < r + 2:
        raise ValueError(f"need N >= r + 2 = {r + 2}")
    samples = local_cohomology_lengths(I, N)
    lengths = [v for _, v in samples]
    return JMultSample(
        r=r,
        samples=samples,
        inferred_j=stable_value(lengths, r),
        differences=finite_differences(lengths, r),
    )


def _fresh_names(prefix, count, taken):
    names = [f"{prefix}{i}" for i in range(count)]
    while set(names) & set(taken):
        prefix = "_" + prefix
        names = [f"{prefix}{i}" for i in range(count)]
    return names


def image_ideal(forms):
    """Kernel of k[y_0..y_s] -> k[x], y_i -> f_i, by eliminating the x variables."""
    forms = list(forms)
    ring = forms[0].ring
    ynames = _fresh_names("y", len(forms), ring.names)
    big = PolynomialRing(ring.field, ring.names + tuple(ynames))
    k = ring.nvars
    pad = (0,) * len(forms)
    ys = big.gens()[k:]
    gens = []
    for y, f in zip(ys, forms):
        lifted = Polynomial(big, {big.pack(ring.unpack(c) + pad): v for c, v in f._terms.items()})
        gens.append(y - lifted)
    return eliminate(Ideal(big, gens), k)


def substitute(g, forms):
    """g(f_0, ..., f_s) for g in k[y]."""
    ring = forms[0].ring
    total = ring.zero()
    for coeff, mono in g.terms:
        term = ring.const(coeff)
        for f, e in zip(forms, mono.exponents):
            if e:
                term = term * f**e
        total = total + term
    return total


@dataclass
class RationalMapReport:
    dimY: int
    degY: int
    e_r: int
    degF: int
    birational: bool
    kernel_gens: list
    hypothesis_violated: bool = False

    def check(self):
        return self.degF * self.degY == self.e_r and self.birational == (self.degF == 1)


def map_degree_report(forms, hb, gcond=None):
    forms = list(forms)
    kernel = image_ideal(forms)
    hs = hilbert_series(kernel)
    if hs.dimension != hb.r + 1:
        raise DimensionAnomaly(
            f"coordinate ring of the image has dimension {hs.dimension}, expected {hb.r + 1}"
        )
    degY = hs.degree
    e_r = elementary_symmetric(hb.r, hb.mu)
    if degY <= 0 or e_r % degY:
        raise NonIntegralDegree(f"deg Y = {degY} does not divide e_r = {e_r}")
    degF = e_r // degY
    return RationalMapReport(
        dimY=hs.dimension - 1,
        degY=degY,
        e_r=e_r,
        degF=degF,
        birational=degY == e_r,
        kernel_gens=list(kernel.gens),
        hypothesis_violated=gcond is not None and not gcond.passed,
    )


def fiber_ideal(forms, point):
    """Saturated ideal of F^{-1}(F(point)) for a point outside the base locus."""
    ring = forms[0].ring
    q = [f.evaluate(point) for f in forms]
    if not any(q):
        return None
    gens = []
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            g = forms[i].scale(q[j]) - forms[j].scale(q[i])
            if g:
                gens.append(g)
    return saturate(Ideal(ring, gens), Ideal(ring, forms))


def generic_fiber_trials(forms, trials=5, seed=0):
    """Degrees of zero-dimensional fibers over random F_p-points (None when degenerate)."""
    forms = list(forms)
    ring = forms[0].ring
    F = ring.field
    if not F.is_prime:
        raise ValueError("fiber sampling needs a prime field")
    if trials < 3:
        raise ValueError("need at least 3 trials")
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        point = [rng.randrange(F.p) for _ in range(ring.nvars)]
        fib = fiber_ideal(forms, point)
        if fib is None:
            out.append(None)
            continue
        hs = hilbert_series(fib)
        out.append(hs.degree if hs.dimension == 1 else None)
    return out


def generic_fiber_degree(forms, trials=5, seed=0):
    """Most frequent fiber degree over random points.  Heuristic: see README."""
    values = [v for v in generic_fiber_trials(forms, trials, seed) if v is not None]
    if not values:
        raise AllTrialsDegenerate("no trial produced a zero-dimensional fiber")
    counts = Counter(values)
    return min(counts, key=lambda v: (-counts[v], v))


def special_fiber_dims(forms, N):
    """dim_k of the degree-n piece of k[y]/image_ideal(forms), n = 0..N."""
    kernel = image_ideal(forms)
    hs = hilbert_series(kernel)
    return [hs.coefficient(n) for n in range(N + 1)]
