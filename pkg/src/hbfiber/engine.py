"""Buchberger's algorithm on raw ``{code: coefficient}`` dicts.

The engine is shared by ideals and by submodules of free modules: module
elements are dicts whose codes carry a component index above the order
fields (see ``PolynomialRing.comp_shift``).  Component-aware divisibility
and lcm make the same code compute position-over-term module bases.

Pairs are processed by the sugar strategy (increasing lcm degree for
homogeneous input) after the Gebauer-Moeller update, which applies
Buchberger's coprime criterion and the chain criterion.  The coprime
criterion does not hold for module elements and is switched off there.
"""

import heapq


class Reducers:
    """A growing list of monic polynomials with a divisor-lookup cache."""

    def __init__(self, ring):
        self.ring = ring
        self.lms = []
        self.polys = []
        self._cache = {}

    def add(self, poly):
        lm = max(poly)
        self.lms.append(lm)
        self.polys.append(poly)
        return len(self.lms) - 1

    def find(self, m):
        # cache: index >= 0 for a hit, -(checked+1) when the first `checked` missed
        hit = self._cache.get(m)
        if hit is None:
            start = 0
        elif hit >= 0:
            return hit
        else:
            start = -hit - 1
        R = self.ring
        cs, em, g = R.comp_shift, R.exp_mask, R.guard
        mc = m >> cs
        me = (m & em) | g
        lms = self.lms
        for i in range(start, len(lms)):
            a = lms[i]
            if (a >> cs) == mc and (me - (a & em)) & g == g:
                self._cache[m] = i
                return i
        self._cache[m] = -len(lms) - 1
        return -1


def normal_form(f, reducers, p, full=True):
    """Reduce ``f`` (a dict, not modified) modulo the reducers.

    With ``full=False`` only the leading terms are reduced.
    """
    h = dict(f)
    heap = [-m for m in h]
    heapq.heapify(heap)
    out = {}
    polys = reducers.polys
    lms = reducers.lms
    find = reducers.find
    while heap:
        m = -heapq.heappop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        i = find(m)
        if i < 0:
            out[m] = c
            if not full:
                for mm, cc in h.items():
                    out[mm] = cc
                return out
            continue
        s = m - lms[i]
        for gm, gc in polys[i].items():
            mm = gm + s
            if mm == m:
                continue
            v = h.get(mm)
            if v is None:
                v = -c * gc
                if p:
                    v %= p
                h[mm] = v
                heapq.heappush(heap, -mm)
            else:
                v = v - c * gc
                if p:
                    v %= p
                if v:
                    h[mm] = v
                else:
                    del h[mm]
    return out


def make_monic(f, p):
    lc = f[max(f)]
    if p:
        if lc == 1:
            return f
        inv = pow(lc, -1, p)
        return {m: c * inv % p for m, c in f.items()}
    return {m: c / lc for m, c in f.items()}


class _Buchberger:
    def __init__(self, ring, comp_degrees=None, module=False):
        self.ring = ring
        self.module = module
        self.p = ring.field.p
        self.comp_degrees = comp_degrees
        self.cs = ring.comp_shift
        self.low = (1 << self.cs) - 1
        self.red = Reducers(ring)
        self.sugar = []
        self.active = []
        self.pairs = {}
        self.heap = []

    def degree(self, code):
        d = self.ring.grade_of(code)
        if self.comp_degrees:
            d += self.comp_degrees[code >> self.cs]
        return d

    def lcm(self, a, b):
        if (a >> self.cs) != (b >> self.cs):
            return None
        R = self.ring
        exps = [max(x, y) for x, y in zip(R.unpack(a), R.unpack(b))]
        return R.pack(exps) + ((a >> self.cs) << self.cs)

    def coprime(self, a, b, lcm):
        if self.module:
            return False
        low = self.low
        return (lcm & low) == (a & low) + (b & low)

    def pair_sugar(self, i, j, L):
        lms, sug = self.red.lms, self.sugar
        dL = self.degree(L)
        return max(sug[i] + dL - self.degree(lms[i]), sug[j] + dL - self.degree(lms[j]))

    def add(self, poly, sugar):
        lms = self.red.lms
        t = self.red.add(poly)
        self.sugar.append(sugar)
        h = lms[t]
        divides = self.ring.divides

        new = []
        for i in self.active:
            L = self.lcm(lms[i], h)
            if L is not None:
                new.append((i, L, self.coprime(lms[i], h, L)))
        kept = []
        for idx, (i, L, cop) in enumerate(new):
            if cop:
                kept.append((i, L, cop))
                continue
            if any(divides(L2, L) for _, L2, _ in new[idx + 1:]):
                continue
            if any(divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((i, L, cop))

        lcm_h = {}
        for key in list(self.pairs):
            i, j = key
            L = self.pairs[key]
            if not divides(h, L):
                continue
            li = lcm_h.get(i)
            if li is None:
                li = lcm_h[i] = self.lcm(lms[i], h)
            lj = lcm_h.get(j)
            if lj is None:
                lj = lcm_h[j] = self.lcm(lms[j], h)
            if li != L and lj != L:
                del self.pairs[key]

        for i, L, cop in kept:
            if cop:
                continue
            self.pairs[(i, t)] = L
            heapq.heappush(self.heap, (self.pair_sugar(i, t, L), L, i, t))

        self.active = [i for i in self.active if not divides(h, lms[i])]
        self.active.append(t)

    def spoly(self, i, j, L):
        p = self.p
        red = self.red
        si = L - red.lms[i]
        sj = L - red.lms[j]
        h = {m + si: c for m, c in red.polys[i].items()}
        for m, c in red.polys[j].items():
            mm = m + sj
            v = h.get(mm, 0) - c
            if p:
                v %= p
            if v:
                h[mm] = v
            else:
                h.pop(mm, None)
        return h

    def run(self, polys):
        p = self.p
        start = sorted((f for f in polys if f), key=lambda f: (self.sugar_of(f), max(f)))
        for f in start:
            h = normal_form(f, self.red, p)
            if h:
                self.add(make_monic(h, p), self.sugar_of(h))
        while self.heap:
            sug, L, i, j = heapq.heappop(self.heap)
            if self.pairs.pop((i, j), None) is None:
                continue
            h = normal_form(self.spoly(i, j, L), self.red, p)
            if h:
                self.add(make_monic(h, p), max(sug, self.sugar_of(h)))
        return self.interreduce()

    def sugar_of(self, f):
        return max(self.degree(m) for m in f)

    def interreduce(self):
        p = self.p
        lms = self.red.lms
        minimal = sorted(self.active, key=lambda i: lms[i])
        base = Reducers(self.ring)
        for i in minimal:
            base.add(self.red.polys[i])
        out = []
        for i in minimal:
            g = self.red.polys[i]
            lm = lms[i]
            tail = {m: c for m, c in g.items() if m != lm}
            r = normal_form(tail, base, p)
            r[lm] = g[lm]
            out.append(r)
        return out


def groebner(ring, polys, comp_degrees=None, module=False):
    """Reduced Groebner basis of the dicts ``polys``, sorted by leading monomial.

    ``comp_degrees`` maps module components to degree shifts (used only by
    the sugar strategy).
    """
    return _Buchberger(ring, comp_degrees, module).run(polys)


def reduce_by(ring, f, basis):
    red = Reducers(ring)
    for g in basis:
        red.add(g)
    return normal_form(f, red, ring.field.p)
