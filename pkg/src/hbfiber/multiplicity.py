"""Closed formulas for the saturated fiber multiplicity and the j-multiplicity.

Production values (``elementary_symmetric``, ``m_coefficient``) use dynamic
programs; ``lemma_identity`` evaluates the underlying combinatorial
identities by explicit subset enumeration, so the two routes are
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
import itertools
from math import comb, factorial, prod

from .errors import DegreeMismatch

MAX_ENUMERATION = 20


def binom(n, k):
    """Binomial coefficient, zero whenever n < k (negative n included)."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class MuVector:
    r: int
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if len(self.mu) < self.r:
            raise ValueError(f"need s >= r, got s = {len(self.mu)} and r = {self.r}")
        if any(m < 1 for m in self.mu):
            raise ValueError("syzygy degrees must be positive")

    @property
    def s(self):
        return len(self.mu)


def elementary_symmetric(r, mu):
    """e_r(mu) by the prefix recurrence e_k(mu_1..mu_j) = e_k(..mu_{j-1}) + mu_j e_{k-1}(..mu_{j-1})."""
    mu = list(mu)
    if r < 0 or r > len(mu):
        raise ValueError(f"e_{r} undefined for {len(mu)} arguments")
    e = [1] + [0] * r
    for x in mu:
        for k in range(r, 0, -1):
            e[k] += e[k - 1] * x
    return e[r]


def _subset_sum_counts(mu):
    """counts[i][sigma] = number of size-i subsets of mu with sum sigma."""
    s = len(mu)
    total = sum(mu)
    counts = [[0] * (total + 1) for _ in range(s + 1)]
    counts[0][0] = 1
    for x in mu:
        for i in range(s, 0, -1):
            row, prev = counts[i], counts[i - 1]
            for sigma in range(total, x - 1, -1):
                if prev[sigma - x]:
                    row[sigma] += prev[sigma - x]
    return counts


def m_coefficients(mv):
    """(m_0, ..., m_s) with m_i = sum over i-subsets J of binom(sum_J mu - 1, r)."""
    counts = _subset_sum_counts(mv.mu)
    return tuple(
        sum(n * binom(sigma - 1, mv.r) for sigma, n in enumerate(row) if n) for row in counts
    )


def m_coefficient(i, mv):
    if not 0 <= i <= mv.s:
        raise ValueError(f"index {i} outside 0..{mv.s}")
    return m_coefficients(mv)[i]


def multiplicity_from_m(mv):
    """Alternating sum of the m_i that computes the saturated fiber multiplicity."""
    r, s = mv.r, mv.s
    m = m_coefficients(mv)
    if s == r:
        return 1 + sum((-1) ** (r + i) * m[i] for i in range(r + 1))
    return sum((-1) ** (s + i) * m[i] * binom(i, s - r) for i in range(s - r, s + 1))


def j_multiplicity_formula(d, mv):
    if d != sum(mv.mu):
        raise DegreeMismatch(f"d = {d} but the syzygy degrees sum to {sum(mv.mu)}")
    return d * elementary_symmetric(mv.r, mv.mu)


@dataclass(frozen=True)
class MultiplicityReport:
    e_r: int
    m: tuple
    alt_sum: int
    j: int

    @property
    def consistent(self):
        return self.e_r == self.alt_sum


def multiplicity_report(d, mv):
    return MultiplicityReport(
        e_r=elementary_symmetric(mv.r, mv.mu),
        m=m_coefficients(mv),
        alt_sum=multiplicity_from_m(mv),
        j=j_multiplicity_formula(d, mv),
    )


# brute-force verifiers


def _subsets(mu, i):
    return itertools.combinations(range(len(mu)), i)


def _brute_e(r, mu):
    return sum(prod(mu[j] for j in J) for J in itertools.combinations(range(len(mu)), r))


def lemma_sides(part, r, s=None, mu=None, k=None, ell=None):
    """(left, right) of one part of the combinatorial lemma, by enumeration."""
    if mu is not None:
        mu = tuple(mu)
        if s is None:
            s = len(mu)
        if len(mu) != s:
            raise ValueError("len(mu) must equal s")
        if len(mu) > MAX_ENUMERATION:
            raise ValueError(f"subset enumeration capped at s <= {MAX_ENUMERATION}")
        if any(x < 1 for x in mu):
            raise ValueError("mu entries must be positive")
    if s is None or r < 1 or s < r:
        raise ValueError("need 1 <= r <= s")

    if part == "i":
        if k is None or not 0 <= k <= r:
            raise ValueError("part (i) needs 0 <= k <= r")
        lhs = sum((-1) ** i * binom(i, s - r) * binom(s - k, i - k)
                  for i in range(max(k, s - r), s + 1))
        rhs = (-1) ** s if k == r else 0
        return lhs, rhs
    if mu is None:
        raise ValueError(f"part ({part}) needs mu")
    if part == "ii":
        if ell is None or not 1 <= ell <= r:
            raise ValueError("part (ii) needs 1 <= ell <= r")
        lhs = sum((-1) ** i * binom(i, s - r) * sum(sum(mu[j] for j in J) ** ell for J in _subsets(mu, i))
                  for i in range(s - r, s + 1))
        rhs = (-1) ** s * factorial(r) * _brute_e(r, mu) if ell == r else 0
        return lhs, rhs
    if part == "iii":
        if not s > r:
            raise ValueError("part (iii) needs s > r")
        lhs = sum((-1) ** i * binom(i, s - r) * sum(binom(sum(mu[j] for j in J) - 1, r) for J in _subsets(mu, i))
                  for i in range(s - r, s + 1))
        return lhs, (-1) ** s * _brute_e(r, mu)
    if part == "iv":
        if s != r:
            raise ValueError("part (iv) needs s = r")
        lhs = 1 + sum((-1) ** (i + r) * sum(binom(sum(mu[j] for j in J) - 1, r) for J in _subsets(mu, i))
                      for i in range(r + 1))
        return lhs, prod(mu)
    raise ValueError(f"unknown lemma part {part!r}")


def lemma_identity(part, r, s=None, mu=None, k=None, ell=None):
    lhs, rhs = lemma_sides(part, r, s=s, mu=mu, k=k, ell=ell)
    return lhs == rhs


def lemma_instances(r_max, s_max, mu_max):
    """Every admissible (part, params) with r <= r_max, r <= s <= s_max, 1 <= mu_j <= mu_max."""
    for r in range(1, r_max + 1):
        for s in range(r, s_max + 1):
            for k in range(r + 1):
                yield "i", dict(r=r, s=s, k=k)
            for mu in itertools.product(range(1, mu_max + 1), repeat=s):
                for ell in range(1, r + 1):
                    yield "ii", dict(r=r, mu=mu, ell=ell)
                yield ("iii" if s > r else "iv"), dict(r=r, mu=mu)


def mu_grid(r_max, s_max, mu_max):
    for r in range(1, r_max + 1):
        for s in range(r, s_max + 1):
            for mu in itertools.product(range(1, mu_max + 1), repeat=s):
                yield MuVector(r, mu)
