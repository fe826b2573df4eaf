"""Syzygies, the Hilbert-Burch matrix, Fitting ideals and the G_{r+1} check."""

from __future__ import annotations

from dataclasses import dataclass, field
import itertools

from . import engine
from .errors import (
    MinorMismatch,
    NotEquigenerated,
    NotHeightTwo,
    NotMinimal,
    TooFewSyzygies,
    UnitIdeal,
)
from .groebner import Ideal, dimension_and_height
from .poly import Polynomial


@dataclass(frozen=True)
class FreeModuleElement:
    """A vector of polynomials; ordered position-over-term, component 0 first."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def ring(self):
        return self.components[0].ring

    @property
    def rank(self):
        return len(self.components)

    def is_zero(self):
        return not any(self.components)

    def __add__(self, other):
        return FreeModuleElement(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        return FreeModuleElement(a - b for a, b in zip(self.components, other.components))

    def scale(self, g):
        return FreeModuleElement(g * a for a in self.components)

    def dot(self, polys):
        total = self.ring.zero()
        for a, b in zip(self.components, polys):
            total = total + a * b
        return total

    def degree(self, shifts=None):
        """Degree of a homogeneous element, counting component shifts."""
        shifts = shifts or [0] * self.rank
        degs = {c.homogeneous_degree() + s for c, s in zip(self.components, shifts) if c}
        if len(degs) != 1:
            raise ValueError("element is zero or not homogeneous")
        return degs.pop()

    def __str__(self):
        return "(" + ", ".join(map(str, self.components)) + ")"


def _encode(elem, ring, offset, total_rank):
    cs = ring.comp_shift
    out = {}
    for c, f in enumerate(elem.components):
        top = (total_rank - 1 - (c + offset)) << cs
        for m, v in f._terms.items():
            out[m + top] = v
    return out


def _decode(d, ring, total_rank):
    cs = ring.comp_shift
    parts = [{} for _ in range(total_rank)]
    for m, v in d.items():
        c = total_rank - 1 - (m >> cs)
        parts[c][m - ((m >> cs) << cs)] = v
    return [Polynomial(ring, p) for p in parts]


@dataclass
class ModuleGB:
    """Result of module_buchberger.

    ``elements[k] = sum_i trace[k][i] * gens[i]``; ``syzygies`` generate the
    relations among the input generators.
    """

    elements: list
    trace: list
    syzygies: list = field(default_factory=list)


def _element_degree(elem, shifts):
    degs = [f.total_degree() + s for f, s in zip(elem.components, shifts) if f]
    return max(degs) if degs else 0


def module_buchberger(gens, shifts=None):
    """Groebner basis of the submodule spanned by ``gens`` with reduction traces.

    Each generator g_i is extended to (g_i, e_i); a position-over-term basis
    of the extended module splits into a basis of the original module with
    its traces, plus the elements whose original part vanished, which
    generate the syzygies.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("module_buchberger needs generators")
    ring = gens[0].ring
    m = gens[0].rank
    k = len(gens)
    total = m + k
    shifts = list(shifts) if shifts is not None else [0] * m
    gen_degs = [_element_degree(g, shifts) for g in gens]
    all_shifts = shifts + gen_degs
    comp_degrees = [all_shifts[total - 1 - key] for key in range(total)]
    polys = []
    for i, g in enumerate(gens):
        unit = [ring.zero()] * k
        unit[i] = ring.one()
        polys.append(_encode(FreeModuleElement(tuple(g.components) + tuple(unit)), ring, 0, total))
    basis = engine.groebner(ring, polys, comp_degrees, module=True)
    out = ModuleGB([], [], [])
    for d in basis:
        parts = _decode(d, ring, total)
        head, tail = parts[:m], parts[m:]
        if any(head):
            out.elements.append(FreeModuleElement(head))
            out.trace.append(FreeModuleElement(tail))
        else:
            out.syzygies.append(FreeModuleElement(tail))
    return out


class _Submodule:
    """Membership oracle for a submodule of a free module."""

    def __init__(self, vectors):
        vectors = [v for v in vectors if not v.is_zero()]
        self.empty = not vectors
        if self.empty:
            return
        self.ring = vectors[0].ring
        self.rank = vectors[0].rank
        polys = [_encode(v, self.ring, 0, self.rank) for v in vectors]
        self.red = engine.Reducers(self.ring)
        for g in engine.groebner(self.ring, polys, module=True):
            self.red.add(g)

    def contains(self, v):
        if v.is_zero():
            return True
        if self.empty:
            return False
        d = _encode(v, self.ring, 0, self.rank)
        return not engine.normal_form(d, self.red, self.ring.field.p)


def submodule_contains(vectors, v):
    return _Submodule(vectors).contains(v)


@dataclass(frozen=True)
class SyzygyMatrix:
    """(s+1) x s matrix whose columns generate the syzygies; column j has degree mu_j."""

    entries: tuple
    column_degrees: tuple

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.column_degrees)

    def column(self, j):
        return FreeModuleElement(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def as_lists(self):
        return [[str(f) for f in row] for row in self.entries]


def _check_equigenerated(polys):
    if not polys or any(not f for f in polys):
        raise NotEquigenerated("generators must be nonzero")
    degs = set()
    for f in polys:
        if not f.is_homogeneous():
            raise NotEquigenerated(f"generator {f} is not homogeneous")
        degs.add(f.homogeneous_degree())
    if len(degs) != 1:
        raise NotEquigenerated(f"generators have degrees {sorted(degs)}")
    return degs.pop()


def syzygy_matrix(polys):
    """Minimal homogeneous syzygies of equal-degree forms, as matrix columns."""
    polys = list(polys)
    d = _check_equigenerated(polys)
    gb = module_buchberger([FreeModuleElement((f,)) for f in polys], shifts=[0])
    candidates = sorted(
        (v.degree([d] * len(polys)) - d, idx, v) for idx, v in enumerate(gb.syzygies)
    )
    kept = []
    degrees = []
    for mu, _, v in candidates:
        if kept and submodule_contains(kept, v):
            continue
        if mu < 1:
            raise NotMinimal(f"degree-0 syzygy {v}: generators are not minimal")
        kept.append(v)
        degrees.append(mu)
    rows = tuple(tuple(v.components[i] for v in kept) for i in range(len(polys)))
    if not kept:
        rows = tuple(() for _ in polys)
    return SyzygyMatrix(rows, tuple(degrees))


def determinant(M):
    n = len(M)
    return _minor(M, tuple(range(n)), tuple(range(n)), {}, M[0][0].ring if n else None)


def _minor(M, rows, cols, memo, ring):
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        val = M[rows[0]][cols[0]]
    else:
        val = ring.zero()
        c0, rest = cols[0], cols[1:]
        for k, r in enumerate(rows):
            a = M[r][c0]
            if not a:
                continue
            sub = _minor(M, rows[:k] + rows[k + 1:], rest, memo, ring)
            if sub:
                val = val + a * sub if k % 2 == 0 else val - a * sub
    memo[key] = val
    return val


def minors(M, t, ring=None):
    """Ideal of all t x t minors of the polynomial matrix M (list of rows)."""
    ring = ring or M[0][0].ring
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    if t <= 0:
        return Ideal.unit(ring)
    if t > min(nrows, ncols):
        return Ideal(ring)
    memo = {}
    gens = []
    seen = set()
    for rows in itertools.combinations(range(nrows), t):
        for cols in itertools.combinations(range(ncols), t):
            det = _minor(M, rows, cols, memo, ring)
            if det:
                key = det.monic()
                if key not in seen:
                    seen.add(key)
                    gens.append(det)
    return Ideal(ring, gens)


def maximal_minors(phi):
    """Signed maximal minors (-1)^i * det(phi without row i)."""
    M = phi.entries
    ring = M[0][0].ring if M and M[0] else None
    n = len(M)
    memo = {}
    cols = tuple(range(phi.ncols))
    out = []
    for i in range(n):
        rows = tuple(r for r in range(n) if r != i)
        det = _minor(M, rows, cols, memo, ring) if cols else ring.one()
        out.append(det if i % 2 == 0 else -det)
    return out


@dataclass(frozen=True)
class HilbertBurchData:
    r: int
    s: int
    d: int
    mu: tuple
    phi: SyzygyMatrix
    gens: tuple
    scalar: object = 1

    @property
    def ring(self):
        return self.gens[0].ring


def hilbert_burch(I):
    """Hilbert-Burch data of an equigenerated ideal, checking the hypotheses.

    Raises NotHeightTwo, MinorMismatch or TooFewSyzygies.
    """
    gens = list(I.gens) if isinstance(I, Ideal) else list(I)
    d = _check_equigenerated(gens)
    ring = gens[0].ring
    r = ring.nvars - 1
    s = len(gens) - 1
    try:
        _, height = dimension_and_height(Ideal(ring, gens))
    except UnitIdeal:
        raise NotHeightTwo(float("inf")) from None
    if height != 2:
        raise NotHeightTwo(height)
    phi = syzygy_matrix(gens)
    if phi.ncols != s:
        raise MinorMismatch(f"{phi.ncols} minimal syzygies among {s + 1} generators, expected {s}")
    deltas = maximal_minors(phi)
    F = ring.field
    scalar = None
    for f, delta in zip(gens, deltas):
        if delta:
            scalar = f.leading_coefficient * F.inv(delta.leading_coefficient)
            break
    if scalar is None or any(f != delta.scale(scalar) for f, delta in zip(gens, deltas)):
        raise MinorMismatch("generators are not the signed maximal minors of the syzygy matrix")
    if s < r:
        raise TooFewSyzygies(f"s = {s} < r = {r}")
    if sum(phi.column_degrees) != d:
        raise MinorMismatch(f"syzygy degrees {phi.column_degrees} do not sum to d = {d}")
    return HilbertBurchData(r, s, d, phi.column_degrees, phi, tuple(gens), scalar)


@dataclass(frozen=True)
class GRow:
    i: int
    t: int
    height: float
    threshold: int

    @property
    def passed(self):
        return self.height > self.threshold


@dataclass(frozen=True)
class GCondReport:
    rows: tuple

    @property
    def passed(self):
        return all(row.passed for row in self.rows)

    def failures(self):
        return [row for row in self.rows if not row.passed]


def fitting_height(phi, t, ring):
    I = minors([list(row) for row in phi.entries], t, ring)
    if I.is_zero():
        return 0
    try:
        return dimension_and_height(I)[1]
    except UnitIdeal:
        return float("inf")


def g_condition(hb):
    """Check ht I_{r+1-i}(phi) > i for i = 1..r."""
    rows = []
    for i in range(1, hb.r + 1):
        t = hb.r + 1 - i
        rows.append(GRow(i, t, fitting_height(hb.phi, t, hb.ring), i))
    return GCondReport(tuple(rows))
