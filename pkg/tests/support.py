import itertools

from hbfiber import CoefficientField, Ideal, PolynomialRing
from hbfiber.poly import monomials_of_degree

P = 32003
F = CoefficientField.prime(P)


def ring(names, p=P):
    field = CoefficientField.prime(p) if p else CoefficientField.rational()
    return PolynomialRing(field, tuple(names.split()) if isinstance(names, str) else names)


def I1():
    R = ring("x0 x1 x2")
    x0, x1, x2 = R.gens()
    return Ideal(R, [x0 * x1, x0 * x2, x1 * x2])


def I2():
    R = ring("s t")
    s, t = R.gens()
    return Ideal(R, [s**2, t**2])


def I3():
    R = ring("s t")
    s, t = R.gens()
    return Ideal(R, [s**3, s**2 * t, t**3])


def I4():
    # 2x2 minors of [[u, v, w], [v, w, u]] with u, v, w = x0^2, x1^2, x2^2
    R = ring("x0 x1 x2")
    x0, x1, x2 = R.gens()
    u, v, w = x0**2, x1**2, x2**2
    return Ideal(R, [v * v - u * w, u * v - w * w, u * u - v * w])


# independent linear algebra oracles (no Groebner bases involved)


def _rank_mod_p(rows, p=P):
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            if col not in pivots:
                inv = pow(row[col], -1, p)
                pivots[col] = {k: v * inv % p for k, v in row.items()}
                rank += 1
                break
            piv = pivots[col]
            c = row[col]
            for k, v in piv.items():
                nv = (row.get(k, 0) - c * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def degree_piece(gens, e):
    """Vectors spanning the degree-e piece of the ideal generated by homogeneous gens."""
    R = gens[0].ring
    rows = []
    for g in gens:
        dg = g.homogeneous_degree()
        if dg > e:
            continue
        for mono in monomials_of_degree(R.nvars, e - dg):
            h = R.monomial(mono) * g
            rows.append({t.exponents: c for c, t in h.terms})
    return rows


def ideal_dim_in_degree(gens, e):
    return _rank_mod_p(degree_piece(gens, e))


def quotient_dim_in_degree(gens, e):
    n = gens[0].ring.nvars
    return len(monomials_of_degree(n, e)) - ideal_dim_in_degree(gens, e)


def in_span(f, gens):
    """Membership of a homogeneous f in the ideal of homogeneous gens, by rank."""
    if not f:
        return True
    e = f.homogeneous_degree()
    rows = degree_piece(gens, e)
    vec = {t.exponents: c for c, t in f.terms}
    return _rank_mod_p(rows + [vec]) == _rank_mod_p(rows)


def standard_monomial_count(lead_exps, nvars, e):
    """Monomials of degree e divisible by no leading exponent."""
    count = 0
    for mono in monomials_of_degree(nvars, e):
        if not any(all(a <= b for a, b in zip(lm, mono)) for lm in lead_exps):
            count += 1
    return count


def all_subsets(seq):
    for k in range(len(seq) + 1):
        yield from itertools.combinations(seq, k)


# lines printed by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []
