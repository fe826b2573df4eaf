"""Hilbert series of graded quotients R/I via monomial initial ideals."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb


def _poly_add(a, b, sign=1):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += sign * c
    while out and out[-1] == 0:
        out.pop()
    return out


def _shift(a, k):
    return [0] * k + list(a) if a else []


def minimalize(monomials):
    """Minimal generators of the monomial ideal spanned by exponent tuples."""
    out = []
    for m in sorted(set(monomials), key=sum):
        if not any(all(x <= y for x, y in zip(g, m)) for g in out):
            out.append(m)
    return out


def hilbert_numerator(monomials, nvars):
    """Numerator N(T) with HS(R/M) = N(T)/(1-T)^nvars, coefficients low to high.

    Pivot recursion N(M) = N(M + (p)) + T^deg(p) N(M : p) on the most
    frequent variable of the non-pure-power generators.
    """
    gens = minimalize(monomials)
    return _numerator(gens, nvars)


def _numerator(gens, n):
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    support = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    counts = Counter(i for s in support for i in s)
    if all(c == 1 for c in counts.values()):
        out = [1]
        for g in gens:
            out = _poly_add(out, _shift(out, sum(g)), -1)
        return out
    var = max(counts, key=lambda i: (counts[i], -i))
    exps = sorted(g[var] for g, s in zip(gens, support) if var in s and len(s) > 1)
    e = exps[len(exps) // 2]
    pivot = tuple(e if i == var else 0 for i in range(n))
    left = minimalize(gens + [pivot])
    right = minimalize(tuple(max(x - y, 0) for x, y in zip(g, pivot)) for g in gens)
    return _poly_add(_numerator(left, n), _shift(_numerator(right, n), e))


def _divide_one_minus_t(a):
    """Exact division of a by (1 - T); caller checks a(1) == 0."""
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return q


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(T) / (1 - T)^denominator_exponent, in reduced form.

    The zero series (quotient by the unit ideal) has an empty numerator and
    dimension -1.
    """

    numerator: tuple
    denominator_exponent: int

    @classmethod
    def from_numerator(cls, numerator, exponent):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        if not num:
            return cls((), 0)
        while exponent > 0 and sum(num) == 0:
            num = _divide_one_minus_t(num)
            exponent -= 1
        return cls(tuple(num), exponent)

    @property
    def dimension(self):
        return self.denominator_exponent if self.numerator else -1

    @property
    def degree(self):
        return sum(self.numerator)

    def coefficient(self, e):
        """dim_k of the degree-e piece."""
        if e < 0:
            return 0
        k = self.denominator_exponent
        total = 0
        for j, c in enumerate(self.numerator):
            if j > e:
                break
            if k == 0:
                total += c if j == e else 0
            else:
                total += c * comb(e - j + k - 1, k - 1)
        return total

    def expand(self, order):
        return [self.coefficient(e) for e in range(order + 1)]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c}*T^{i}" if i else str(c))
        num = " + ".join(terms) if terms else "0"
        return f"({num}) / (1-T)^{self.denominator_exponent}"
