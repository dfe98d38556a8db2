"""Dense univariate and sparse bivariate polynomials over a finite field.

Coefficients are stored as integer field reps.  The Y-resultant of two
bivariate polynomials is computed by Brown's subresultant pseudo-remainder
sequence over the coefficient ring GF(q)[X]; the zero resultant is reported
with the degree sentinel -inf, which the callers rely on as the
common-factor signal.
"""

import math

from .errors import InconsistencyError
from .fields import FieldElement

NEG_INF = float("-inf")

_KRONECKER_CUTOFF = 64


def _kronecker_mul(a, b, p):
    """Product of two coefficient lists over GF(p), p prime, by packing
    them into one big integer each (exact; fast for long operands).

    Slots are byte-aligned so packing and unpacking are single
    bytes-conversions instead of repeated big-integer shifts."""
    slot_bits = (min(len(a), len(b)) * (p - 1) * (p - 1)).bit_length() + 1
    sb = (slot_bits + 7) // 8
    pa = bytearray(len(a) * sb)
    for i, c in enumerate(a):
        if c:
            pa[i * sb:i * sb + sb] = c.to_bytes(sb, "little")
    pb = bytearray(len(b) * sb)
    for i, c in enumerate(b):
        if c:
            pb[i * sb:i * sb + sb] = c.to_bytes(sb, "little")
    prod = int.from_bytes(bytes(pa), "little") * int.from_bytes(bytes(pb), "little")
    n_out = len(a) + len(b) - 1
    raw = prod.to_bytes(n_out * sb + sb, "little")
    return [int.from_bytes(raw[k * sb:(k + 1) * sb], "little") % p
            for k in range(n_out)]


def _list_mul(a, b, field):
    if not a or not b:
        return []
    if field.k == 1 and len(a) * len(b) >= _KRONECKER_CUTOFF:
        out = _kronecker_mul(a, b, field.p)
    else:
        out = [0] * (len(a) + len(b) - 1)
        mul, add = field.mul, field.add
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
    while out and out[-1] == 0:
        out.pop()
    return out


class UniPoly:
    """Dense univariate polynomial; zero polynomial has degree -inf."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs=(), var="X"):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, field, var="X"):
        return cls(field, (), var)

    @classmethod
    def const(cls, field, value, var="X"):
        if isinstance(value, FieldElement):
            value = value.rep
        else:
            value = field.from_int(value)
        return cls(field, (value,), var)

    @classmethod
    def one(cls, field, var="X"):
        return cls(field, (1,), var)

    @classmethod
    def x(cls, field, var="X"):
        return cls(field, (0, 1), var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPoly(f, out, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return UniPoly(f, [f.neg(c) for c in self.coeffs], self.var)

    def __mul__(self, other):
        return UniPoly(self.field,
                       _list_mul(list(self.coeffs), list(other.coeffs), self.field),
                       self.var)

    def scale(self, rep):
        f = self.field
        if rep == 0:
            return UniPoly.zero(f, self.var)
        return UniPoly(f, [f.mul(c, rep) for c in self.coeffs], self.var)

    def shift(self, n):
        """Multiply by var^n."""
        if self.is_zero():
            return self
        return UniPoly(self.field, (0,) * n + self.coeffs, self.var)

    def __pow__(self, e):
        result = UniPoly.one(self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        """Division with remainder; valid since coefficients form a field."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        r = list(self.coeffs)
        dg = len(other.coeffs) - 1
        inv_lc = f.inv(other.lc)
        q = [0] * max(len(r) - dg, 0)
        while len(r) - 1 >= dg and r:
            c = f.mul(r[-1], inv_lc)
            d = len(r) - 1 - dg
            q[d] = c
            for i in range(dg + 1):
                r[d + i] = f.sub(r[d + i], f.mul(c, other.coeffs[i]))
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(f, q, self.var), UniPoly(f, r, self.var)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InconsistencyError("inexact polynomial division")
        return q

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(self.field.inv(a.lc))

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def eval_rep(self, x, target=None, embed=None):
        f = target or self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), embed(c) if embed else c)
        return acc

    def derivative(self):
        f = self.field
        out = [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]
        return UniPoly(f, out, self.var)

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.k))

    def __repr__(self):
        if self.is_zero():
            return "0"
        f = self.field
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            cs = f.format_rep(c)
            if f.k > 1 and c >= f.p:
                cs = f"[{cs}]"
            if e == 0:
                terms.append(cs)
            else:
                head = self.var if e == 1 else f"{self.var}^{e}"
                terms.append(head if cs == "1" else f"{cs}*{head}")
        return "+".join(terms)


class BiPoly:
    """Sparse bivariate polynomial: {(deg_X, deg_Y): coefficient rep}."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def const(cls, field, value):
        if isinstance(value, FieldElement):
            value = value.rep
        else:
            value = field.from_int(value)
        return cls(field, {(0, 0): value})

    @classmethod
    def one(cls, field):
        return cls(field, {(0, 0): 1})

    @classmethod
    def x(cls, field):
        return cls(field, {(1, 0): 1})

    @classmethod
    def y(cls, field):
        return cls(field, {(0, 1): 1})

    @classmethod
    def monomial(cls, field, i, j, coeff=1):
        if isinstance(coeff, FieldElement):
            coeff = coeff.rep
        return cls(field, {(i, j): coeff})

    def is_zero(self):
        return not self.terms

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=NEG_INF)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=NEG_INF)

    @property
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=NEG_INF)

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def __add__(self, other):
        f = self.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = f.add(out.get(k, 0), v)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly(f, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return BiPoly(f, {k: f.neg(v) for k, v in self.terms.items()})

    def __mul__(self, other):
        f = self.field
        out = {}
        add, mul = f.add, f.mul
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = add(out.get(k, 0), mul(a, b))
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPoly(f, out)

    def scale(self, rep):
        f = self.field
        if isinstance(rep, FieldElement):
            rep = rep.rep
        if rep == 0:
            return BiPoly.zero(f)
        return BiPoly(f, {k: f.mul(v, rep) for k, v in self.terms.items()})

    def __pow__(self, e):
        result = BiPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- views ----------------------------------------------------------

    def y_coeffs(self):
        """Coefficients as a polynomial in Y over GF(q)[X], ascending."""
        if self.is_zero():
            return []
        out = [{} for _ in range(self.deg_y + 1)]
        for (i, j), c in self.terms.items():
            out[j][i] = c
        return [UniPoly(self.field, [d.get(i, 0) for i in range(max(d) + 1)] if d else ())
                for d in out]

    @classmethod
    def from_y_coeffs(cls, field, coeffs):
        terms = {}
        for j, poly in enumerate(coeffs):
            for i, c in enumerate(poly.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls(field, terms)

    def lc_y(self):
        """Leading coefficient w.r.t. Y, as a polynomial in X."""
        ys = self.y_coeffs()
        return ys[-1] if ys else UniPoly.zero(self.field)

    def is_monic_in_y(self):
        lc = self.lc_y()
        return lc.degree == 0 and lc.lc == 1

    def swap_xy(self):
        return BiPoly(self.field, {(j, i): c for (i, j), c in self.terms.items()})

    def homogeneous_part(self, d):
        return BiPoly(self.field,
                      {k: c for k, c in self.terms.items() if k[0] + k[1] == d})

    def degree_form(self):
        return self.homogeneous_part(self.total_degree)

    # -- operations -----------------------------------------------------

    def divmod_y(self, other):
        """Long division by a divisor that is monic in Y."""
        if not other.is_monic_in_y():
            raise ValueError("divmod_y requires a divisor monic in Y")
        f = self.field
        r = self.y_coeffs()
        g = other.y_coeffs()
        dg = len(g) - 1
        q = [UniPoly.zero(f) for _ in range(max(len(r) - dg, 0))]
        while len(r) - 1 >= dg and r:
            t = r[-1]
            d = len(r) - 1 - dg
            q[d] = t
            for i in range(dg + 1):
                r[d + i] = r[d + i] - t * g[i]
            r.pop()
            while r and r[-1].is_zero():
                r.pop()
        return (BiPoly.from_y_coeffs(f, q), BiPoly.from_y_coeffs(f, r))

    def substitute_x(self, k, sign=1):
        """Ring homomorphism X -> X + sign*Y^k (sign is +1 or -1)."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        f = self.field
        s_rep = 1 if sign > 0 else f.neg(1)
        out = {}
        for (i, j), c in self.terms.items():
            for u in range(i + 1):
                binom = math.comb(i, u) % f.p
                if not binom:
                    continue
                coeff = f.mul(c, f.mul(binom, f.pow_rep(s_rep, i - u)))
                key = (u, j + k * (i - u))
                s = f.add(out.get(key, 0), coeff)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return BiPoly(f, out)

    def shear_y(self, lam):
        """Ring homomorphism Y -> Y + lam*X (lam a field rep)."""
        f = self.field
        if lam == 0:
            return self
        out = {}
        for (i, j), c in self.terms.items():
            for r in range(j + 1):
                binom = math.comb(j, r) % f.p
                if not binom:
                    continue
                coeff = f.mul(c, f.mul(
                    binom, f.pow_rep(lam, j - r) if j - r else 1))
                key = (i + j - r, r)
                s = f.add(out.get(key, 0), coeff)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return BiPoly(f, out)

    def derivative_x(self):
        f = self.field
        out = {}
        for (i, j), c in self.terms.items():
            if i:
                v = f.mul(f.from_int(i), c)
                if v:
                    out[(i - 1, j)] = v
        return BiPoly(f, out)

    def derivative_y(self):
        f = self.field
        out = {}
        for (i, j), c in self.terms.items():
            if j:
                v = f.mul(f.from_int(j), c)
                if v:
                    out[(i, j - 1)] = v
        return BiPoly(f, out)

    def eval_rep(self, x, y, target=None, embed=None):
        """Value at a point, optionally through an embedding into `target`."""
        f = target or self.field
        by_j = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, []).append((i, c))
        acc = 0
        prev = None
        for j in sorted(by_j, reverse=True):
            if prev is not None:
                acc = f.mul(acc, f.pow_rep(y, prev - j))
            inner = 0
            for i, c in by_j[j]:
                term = f.mul(embed(c) if embed else c, f.pow_rep(x, i))
                inner = f.add(inner, term)
            acc = f.add(acc, inner)
            prev = j
        if prev is not None and prev > 0:
            acc = f.mul(acc, f.pow_rep(y, prev))
        return acc

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.field.p, self.field.k))

    def __repr__(self):
        if self.is_zero():
            return "0"
        f = self.field
        keys = sorted(self.terms, key=lambda k: (-k[1], -k[0]))
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            cs = f.format_rep(c)
            if f.k > 1 and c >= f.p:
                cs = f"[{cs}]"
            factors = []
            if cs != "1" or (i == 0 and j == 0):
                factors.append(cs)
            if i:
                factors.append("X" if i == 1 else f"X^{i}")
            if j:
                factors.append("Y" if j == 1 else f"Y^{j}")
            parts.append("*".join(factors))
        return "+".join(parts)


# -- Y-resultant via subresultant PRS over GF(q)[X] -----------------------

def _prem(f, g, field):
    """Pseudo-remainder of Y-coefficient lists over GF(q)[X]."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    if df < dg:
        return r
    lcg = g[dg]
    n = df - dg + 1
    while r and len(r) - 1 >= dg:
        dr = len(r) - 1
        lcr = r[dr]
        shift = dr - dg
        new = []
        for i in range(dr):
            t = r[i] * lcg
            if shift <= i <= shift + dg - 1:
                t = t - lcr * g[i - shift]
            new.append(t)
        r = new
        while r and r[-1].is_zero():
            r.pop()
        n -= 1
    if n:
        scale = lcg ** n
        r = [c * scale for c in r]
    return r


def resultant_y(f, g):
    """Res_Y(f, g) as a polynomial in X; the zero polynomial (degree -inf)
    signals a common factor, matching the deg = -inf convention."""
    field = f.field
    if f.is_zero() or g.is_zero():
        return UniPoly.zero(field)
    fl, gl = f.y_coeffs(), g.y_coeffs()
    n, m = len(fl) - 1, len(gl) - 1
    negate = False
    if n < m:
        fl, gl = gl, fl
        n, m = m, n
        negate = (n * m) % 2 == 1 and field.p != 2
    one = UniPoly.one(field)
    if m < 0:
        return UniPoly.zero(field)
    d = n - m
    b_sign = 1 if (d + 1) % 2 == 0 else field.neg(1)
    h = [c.scale(b_sign) for c in _prem(fl, gl, field)]
    lc = gl[-1]
    c = lc ** d
    S = [one, c]
    c = -c
    while h:
        k = len(h) - 1
        fl, gl, m, d = gl, h, k, m - k
        b = (-lc) * (c ** d)
        h = [ch.exact_div(b) for ch in _prem(fl, gl, field)]
        lc = gl[-1]
        if d > 1:
            c = ((-lc) ** d).exact_div(c ** (d - 1))
        else:
            c = -lc
        S.append(-c)
    # gl now holds the last nonzero element of the PRS
    if len(gl) - 1 > 0:
        return UniPoly.zero(field)
    res = S[-1]
    return -res if negate else res
