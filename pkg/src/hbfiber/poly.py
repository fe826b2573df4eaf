"""Coefficient fields, monomial orders and multivariate polynomials.

Monomials are stored as packed integers ("codes").  A code holds, from the
most significant end, an optional module component, one field per row of
the order's weight matrix, and the raw exponent vector.  Every field is a
non-negative linear function of the exponents, so

* multiplying monomials is adding codes,
* comparing codes as integers is comparing monomials in the order,
* divisibility is a borrow test on the exponent fields.

The Groebner engine works directly on ``{code: coefficient}`` dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
import operator

from .errors import InexactDivision, NotHomogeneous

FIELD_BITS = 16
_FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """A prime field F_p, or the rationals when ``p == 0``."""

    p: int = 32003

    def __post_init__(self):
        if self.p != 0 and not (self.p < 2**31 and _is_prime(self.p)):
            raise ValueError(f"field characteristic {self.p} is not a prime below 2^31")

    @classmethod
    def prime(cls, p=32003):
        return cls(p)

    @classmethod
    def rational(cls):
        return cls(0)

    @property
    def is_prime(self):
        return self.p != 0

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        p = self.p
        if p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(x, -1, self.p)
        return 1 / Fraction(x)

    def signed(self, c):
        """Representative used for printing: symmetric residue for F_p."""
        if self.p:
            return c - self.p if c > self.p // 2 else c
        return c

    def __str__(self):
        return f"F_{self.p}" if self.p else "QQ"


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def total_degree(self):
        return sum(self.exponents)

    def __mul__(self, other):
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials of different length")
        return Monomial(tuple(map(operator.add, self.exponents, other.exponents)))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __len__(self):
        return len(self.exponents)


def _grevlex_rows(n, idx):
    """Weight rows realising grevlex on the variables ``idx``.

    Row 0 is the degree, row j is the degree of the first len-j variables;
    ties in degree are then broken in favour of the smaller exponent in the
    last variable, which is the grevlex rule.
    """
    rows = []
    for j in range(len(idx), 0, -1):
        row = [0] * n
        for i in idx[:j]:
            row[i] = 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by its kind and, for block orders, the block size.

    ``block(k)`` is grevlex on the first k variables, ties broken by grevlex
    on the rest; it eliminates the first k variables.  ``elim_homog(k)``
    compares the degree in the last n-k variables first, then grevlex on the
    first k, then grevlex on the rest: it is degree compatible for ideals
    homogeneous in the last n-k variables and eliminates the first k
    variables from such ideals.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block", "elim_homog"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind in ("block", "elim_homog") and self.k < 1:
            raise ValueError("block orders need k >= 1")

    @classmethod
    def block(cls, k):
        return cls("block", k)

    @classmethod
    def elim_homog(cls, k):
        return cls("elim_homog", k)

    def weight_rows(self, n):
        if self.kind in ("block", "elim_homog") and self.k >= n:
            raise ValueError(f"block size {self.k} needs more than {n} variables")
        if self.kind == "grevlex":
            return _grevlex_rows(n, list(range(n)))
        if self.kind == "lex":
            return [[int(i == j) for i in range(n)] for j in range(n)]
        first = list(range(self.k))
        rest = list(range(self.k, n))
        if self.kind == "block":
            return _grevlex_rows(n, first) + _grevlex_rows(n, rest)
        rest_rows = _grevlex_rows(n, rest)
        return rest_rows[:1] + _grevlex_rows(n, first) + rest_rows[1:]

    def key(self, exponents):
        return tuple(sum(w * e for w, e in zip(row, exponents))
                     for row in self.weight_rows(len(exponents)))

    def __str__(self):
        return self.kind if self.kind in ("grevlex", "lex") else f"{self.kind}({self.k})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def compare(m1, m2, order=GREVLEX):
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    a = m1.exponents if isinstance(m1, Monomial) else tuple(m1)
    b = m2.exponents if isinstance(m2, Monomial) else tuple(m2)
    if len(a) != len(b):
        raise ValueError("monomials of different length")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class PolynomialRing:
    """k[names] with a fixed monomial order and the packing of monomial codes."""

    def __init__(self, field, names, order=GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.names = names
        self.order = order
        n = self.nvars = len(names)
        B = FIELD_BITS
        rows = order.weight_rows(n) if n else []
        self.exp_shifts = [B * (n - 1 - i) for i in range(n)]
        key_base = B * n
        key_shifts = [key_base + B * (len(rows) - 1 - j) for j in range(len(rows))]
        self.units = [
            sum(row[i] << s for row, s in zip(rows, key_shifts)) + (1 << self.exp_shifts[i])
            for i in range(n)
        ]
        self.exp_mask = (1 << (B * n)) - 1
        self.guard = sum(1 << (s + B - 1) for s in self.exp_shifts)
        # module components live above every order field
        self.comp_shift = B * (n + len(rows))
        # grevlex and elim_homog carry the grading in their first order field
        self._grade_shift = key_shifts[0] if order.kind in ("grevlex", "elim_homog") and n else None
        self._key = (field, names, order)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PolynomialRing({self.field}, {list(self.names)}, {self.order})"

    def with_order(self, order):
        if order == self.order:
            return self
        return PolynomialRing(self.field, self.names, order)

    def pack(self, exps):
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        code = 0
        for e, u in zip(exps, self.units):
            if e:
                if e < 0 or e > MAX_EXPONENT:
                    raise OverflowError(f"exponent {e} out of range")
                code += e * u
        return code

    def unpack(self, code):
        return tuple((code >> s) & _FIELD_MASK for s in self.exp_shifts)

    def degree_of(self, code):
        return sum((code >> s) & _FIELD_MASK for s in self.exp_shifts)

    def grade_of(self, code):
        """Degree used by the pair selection strategy."""
        if self._grade_shift is None:
            return self.degree_of(code)
        return (code >> self._grade_shift) & _FIELD_MASK

    def divides(self, a, b):
        """Monomial code ``a`` divides ``b`` (same module component)."""
        if (a >> self.comp_shift) != (b >> self.comp_shift):
            return False
        g = self.guard
        return (((b & self.exp_mask) | g) - (a & self.exp_mask)) & g == g

    # construction helpers

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field(c)
        return Polynomial(self, {0: c} if c else {})

    def gen(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        return Polynomial(self, {self.units[i]: self.field(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        return Polynomial(self, {self.pack(exps): c} if c else {})

    def from_dict(self, d):
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        terms = {}
        for exps, c in d.items():
            code = self.pack(tuple(exps))
            v = self.field(c) + terms.get(code, 0)
            if self.field.p:
                v %= self.field.p
            if v:
                terms[code] = v
            else:
                terms.pop(code, None)
        return Polynomial(self, terms)

    def convert(self, f):
        """Move ``f`` into this ring; variables are matched by name."""
        if f.ring == self:
            return f
        if f.ring.field != self.field:
            raise ValueError("rings over different fields")
        if f.ring.names == self.names:
            perm = None
        else:
            try:
                perm = [self.names.index(v) for v in f.ring.names]
            except ValueError as exc:
                raise ValueError(f"cannot map {f.ring.names} into {self.names}") from exc
        terms = {}
        for code, c in f._terms.items():
            exps = f.ring.unpack(code)
            if perm is not None:
                new = [0] * self.nvars
                for e, j in zip(exps, perm):
                    new[j] = e
                exps = new
            terms[self.pack(exps)] = c
        return Polynomial(self, terms)


class Polynomial:
    """An immutable polynomial: a dict from monomial codes to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_lm")

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms
        self._lm = max(terms) if terms else None

    # inspection

    @property
    def terms(self):
        """(coefficient, Monomial) pairs, strictly descending in the order."""
        R = self.ring
        return [(self._terms[m], Monomial(R.unpack(m))) for m in sorted(self._terms, reverse=True)]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def leading_monomial(self):
        if self._lm is None:
            raise ValueError("zero polynomial has no leading monomial")
        return Monomial(self.ring.unpack(self._lm))

    @property
    def leading_coefficient(self):
        if self._lm is None:
            return self.ring.field(0)
        return self._terms[self._lm]

    def monomials(self):
        return [self.ring.unpack(m) for m in self._terms]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(self.ring.degree_of(m) for m in self._terms)

    def homogeneous_degree(self):
        """The common degree of all terms; raises NotHomogeneous otherwise."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        degs = {self.ring.degree_of(m) for m in self._terms}
        if len(degs) != 1:
            raise NotHomogeneous(f"{self} mixes degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self):
        return len({self.ring.degree_of(m) for m in self._terms}) <= 1

    def involves(self, i):
        s = self.ring.exp_shifts[i]
        return any((m >> s) & _FIELD_MASK for m in self._terms)

    def evaluate(self, point):
        R = self.ring
        if len(point) != R.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {R.nvars} variables")
        F = R.field
        pt = [F(x) for x in point]
        p = F.p
        total = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(pt, R.unpack(m)):
                if e:
                    v = v * (pow(x, e, p) if p else x**e)
            total += v
        return total % p if p else Fraction(total)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        t = dict(self._terms)
        for m, c in other._terms.items():
            v = t.get(m, 0) + c
            if p:
                v %= p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {m: (p - c if p else -c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        t = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                t[m] = t.get(m, 0) + c1 * c2
        if p:
            t = {m: c % p for m, c in t.items() if c % p}
        else:
            t = {m: c for m, c in t.items() if c}
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        p = F.p
        if p:
            return Polynomial(self.ring, {m: v * c % p for m, v in self._terms.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self._terms.items()})

    def shift(self, code, c=1):
        """Multiply by the monomial with code ``code`` and the scalar ``c``."""
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {m + code: v * c % p for m, v in self._terms.items()})
        return Polynomial(self.ring, {m + code: v * c for m, v in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient))

    def exact_divide(self, g):
        """Return q with self == q*g; raise InexactDivision otherwise."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        R = self.ring
        F = R.field
        p = F.p
        glm = g._lm
        ginv = F.inv(g._terms[glm])
        rem = dict(self._terms)
        q = {}
        while rem:
            m = max(rem)
            if not R.divides(glm, m):
                raise InexactDivision(f"{g} does not divide {self}")
            c = rem[m] * ginv
            if p:
                c %= p
            s = m - glm
            q[s] = c
            for gm, gc in g._terms.items():
                mm = gm + s
                v = rem.get(mm, 0) - c * gc
                if p:
                    v %= p
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Polynomial(R, q)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        F = self.ring.field
        out = []
        for m in sorted(self._terms, reverse=True):
            c = F.signed(self._terms[m])
            exps = self.ring.unpack(m)
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.ring.names, exps) if e]
            neg = c < 0
            a = -c if neg else c
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(a)] + factors)
            if out:
                out.append(" - " if neg else " + ")
            elif neg:
                out.append("-")
            out.append(body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def product(polys, ring):
    return reduce(operator.mul, polys, ring.one())


def monomials_of_degree(n, d):
    """All exponent tuples of length n and total degree d, descending lex."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


def random_polynomial(ring, rng, degree, nterms=None, homogeneous=True):
    """Random polynomial for tests; ``rng`` is a ``random.Random``."""
    F = ring.field
    if homogeneous:
        pool = monomials_of_degree(ring.nvars, degree)
    else:
        pool = [e for d in range(degree + 1) for e in monomials_of_degree(ring.nvars, d)]
    if nterms is None:
        nterms = rng.randint(1, len(pool))
    chosen = rng.sample(pool, min(nterms, len(pool)))
    bound = F.p - 1 if F.p else 20
    return ring.from_dict({e: rng.randint(-bound, bound) for e in chosen})
