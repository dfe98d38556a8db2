"""Parametrization of the branch at infinity and the valuation oracle.

The unique point at infinity is detected from the degree form, moved to
the origin of the matching affine chart, and the branch germ is resolved
by a chain of quadratic transforms (the blowup form of a Hamburger-Noether
expansion, valid in any characteristic).  At the terminal smooth point the
branch is expanded by formal Newton iteration, and the series are folded
back through the chain.  Valuations of rational functions are then exact
orders of truncated power series, with exact leading coefficients; for
polynomials the resultant degree provides an independent backend.
"""

import math
import os
from dataclasses import dataclass

from .errors import InconsistencyError, PreconditionError
from .fields import FieldElement
from .polynomials import BiPoly, resultant_y, _kronecker_mul

DEFAULT_PRECISION_CEILING = 1 << 16


def precision_ceiling():
    v = os.environ.get("WEIERSTRASS_PRECISION_CEILING")
    return int(v) if v else DEFAULT_PRECISION_CEILING


# -- truncated power series as fixed-length rep lists ----------------------

def _ser_pad(a, prec):
    if len(a) >= prec:
        return a[:prec]
    return a + [0] * (prec - len(a))


def _ser_add(a, b, field):
    n = max(len(a), len(b))
    a = _ser_pad(a, n)
    b = _ser_pad(b, n)
    return [field.add(x, y) for x, y in zip(a, b)]


def _ser_scale(a, c, field):
    return [field.mul(x, c) for x in a]


def _ser_mul(a, b, field, prec):
    a = a[:prec]
    b = b[:prec]
    if not any(a) or not any(b):
        return [0] * prec
    if field.k == 1:
        out = _kronecker_mul(a, b, field.p)
    else:
        out = [0] * (len(a) + len(b) - 1)
        add, mul = field.add, field.mul
        for i, ai in enumerate(a):
            if ai:
                if i >= prec:
                    break
                for j, bj in enumerate(b):
                    if bj and i + j < prec:
                        out[i + j] = add(out[i + j], mul(ai, bj))
    return _ser_pad(out, prec)


def _ser_inv(a, field, prec):
    """Reciprocal of a unit series by Newton doubling."""
    if not a or a[0] == 0:
        raise InconsistencyError("series reciprocal of a non-unit")
    x = [field.inv(a[0])]
    cur = 1
    while cur < prec:
        cur = min(2 * cur, prec)
        ax = _ser_mul(a[:cur], _ser_pad(x, cur), field, cur)
        two_minus = [field.sub(0, c) for c in ax]
        two_minus[0] = field.add(two_minus[0], field.from_int(2))
        x = _ser_mul(_ser_pad(x, cur), two_minus, field, cur)
    return _ser_pad(x, prec)


def _ser_ord(a):
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _eval_bipoly_series(P, a, b, field, prec):
    """P(u, v) at u = series a, v = series b (Horner over both slots)."""
    rows = {}
    for (i, j), c in P.terms.items():
        rows.setdefault(i, {})[j] = c
    zero = [0] * prec
    acc = zero
    prev_i = None
    for i in sorted(rows, reverse=True):
        if prev_i is not None:
            for _ in range(prev_i - i):
                acc = _ser_mul(acc, a, field, prec)
        row = rows[i]
        inner = zero
        prev_j = None
        for j in sorted(row, reverse=True):
            if prev_j is not None:
                for _ in range(prev_j - j):
                    inner = _ser_mul(inner, b, field, prec)
            inner = inner[:]
            inner[0] = field.add(inner[0], row[j])
            prev_j = j
        if prev_j:
            for _ in range(prev_j):
                inner = _ser_mul(inner, b, field, prec)
        acc = _ser_add(acc, inner, field)[:prec]
        prev_i = i
    if prev_i:
        for _ in range(prev_i):
            acc = _ser_mul(acc, a, field, prec)
    return _ser_pad(acc, prec)


# -- tangent detection -----------------------------------------------------

def _pure_power_root(coeffs, mu, field):
    """If sum c_j w^j equals c*(w - lam)^mu, return lam, else None.

    Characteristic-aware: with mu = p^a * m' (p not dividing m'), the
    coefficient of w^(mu - p^a) pins lam^(p^a), and the Frobenius is
    inverted by x -> x^(q/p)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) - 1 != mu:
        return None
    p, q = field.p, field.order
    a = 0
    m_prime = mu
    while m_prime % p == 0:
        m_prime //= p
        a += 1
    c_top = cs[-1]
    idx = mu - p ** a
    sub = cs[idx] if idx >= 0 else 0
    # sub = c_top * m' * (-lam^(p^a))
    lam_pa = field.neg(field.div(sub, field.mul(c_top, field.from_int(m_prime))))
    lam = lam_pa
    for _ in range(a):
        lam = field.pow_rep(lam, q // p)
    # verify exactly
    check = [1]
    neg_lam = field.neg(lam)
    for _ in range(mu):
        nxt = [0] * (len(check) + 1)
        for i, c in enumerate(check):
            nxt[i] = field.add(nxt[i], field.mul(c, neg_lam))
            nxt[i + 1] = field.add(nxt[i + 1], c)
        check = nxt
    check = [field.mul(c, c_top) for c in check]
    if _ser_pad(cs, mu + 1) != check:
        return None
    return lam


def _lowest_form(G):
    mu = min(i + j for i, j in G.terms)
    coeffs = [0] * (mu + 1)
    for (i, j), c in G.terms.items():
        if i + j == mu:
            coeffs[j] = c
    return mu, coeffs


@dataclass(frozen=True)
class _Step:
    kind: str   # 'v': (u,v) <- (u, u*(v+lam));  'u': (u,v) <- (v*u, v)
    lam: int


def _tangent_step(G, field):
    mu, coeffs = _lowest_form(G)
    if mu == 0:
        raise InconsistencyError("blowup center is not on the curve")
    if mu == 1:
        return mu, None
    deg = max((j for j, c in enumerate(coeffs) if c), default=None)
    if deg == 0:
        return mu, _Step("u", 0)
    lam = _pure_power_root(coeffs, mu, field)
    if lam is None:
        raise PreconditionError(
            "more than one branch (or a non-rational branch) detected "
            "during the expansion at infinity")
    return mu, _Step("v", lam)


def _blowup(G, step, mu, field):
    out = {}
    if step.kind == "v":
        lam = step.lam
        for (i, j), c in G.terms.items():
            for r in range(j + 1):
                binom = math.comb(j, r) % field.p
                if not binom:
                    continue
                coeff = field.mul(c, field.mul(
                    binom, field.pow_rep(lam, j - r) if j - r else 1))
                key = (i + j - mu, r)
                s = field.add(out.get(key, 0), coeff)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    else:
        for (i, j), c in G.terms.items():
            key = (i, i + j - mu)
            s = field.add(out.get(key, 0), c)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return BiPoly(field, out)


# -- infinity chart --------------------------------------------------------

def _infinity_chart(F):
    """Locate the single rational point at infinity.

    Returns (chart, lam): chart 'x' is X=1 with the point at (1:lam:0);
    chart 'y' is Y=1 with the point at (0:1:0)."""
    field = F.field
    D = int(F.total_degree)
    phi = F.degree_form()
    coeffs = [0] * (D + 1)
    for (i, j), c in phi.terms.items():
        coeffs[j] = c
    deg = max(j for j, c in enumerate(coeffs) if c)
    if deg == D:
        lam = _pure_power_root(coeffs, D, field)
        if lam is None:
            raise PreconditionError("the curve does not have a single "
                                    "rational point at infinity")
        return "x", lam
    if deg == 0:
        return "y", 0
    raise PreconditionError("the curve does not have a single rational "
                            "point at infinity")


def _local_equation(F, chart, lam):
    """Dehomogenization at the infinite point, center moved to the origin:
    chart 'x': G(u,v) = F*(1, lam+u, v); chart 'y': G(u,v) = F*(u, 1, v)."""
    field = F.field
    D = int(F.total_degree)
    out = {}
    for (i, j), c in F.terms.items():
        zexp = D - i - j
        uexp_deg = j if chart == "x" else i
        for r in range(uexp_deg + 1):
            binom = math.comb(uexp_deg, r) % field.p
            if not binom:
                continue
            coeff = field.mul(c, field.mul(
                binom, field.pow_rep(lam, uexp_deg - r) if uexp_deg - r else 1))
            key = (r, zexp)
            s = field.add(out.get(key, 0), coeff)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return BiPoly(field, out)


# -- the branch parametrization --------------------------------------------

@dataclass(frozen=True)
class Valuation:
    order: int              # value of the valuation at the infinite place
    leading: FieldElement   # exact leading coefficient of the t-expansion


class BranchParam:
    """Truncated parametrization (u(t), v(t)) of the branch at infinity in
    the local chart; refinable; single-threaded use (internal caches)."""

    def __init__(self, model, precision=None):
        self.model = model
        F = model.equation
        self.field = F.field
        self.ceiling = precision_ceiling()
        D = int(F.total_degree)
        self.degree = D
        self.chart, self.lam = _infinity_chart(F)
        G = _local_equation(F, self.chart, self.lam)
        self._G0 = G
        steps = []
        guard = 4 * D * D + 16
        while True:
            mu, step = _tangent_step(G, self.field)
            if step is None:
                break
            steps.append(step)
            G = _blowup(G, step, mu, self.field)
            if G.coeff(0, 0) != 0:
                raise InconsistencyError("strict transform missed the "
                                         "expected center")
            guard -= 1
            if guard < 0:
                raise InconsistencyError("blowup chain failed to terminate")
        self._steps = steps
        self._Gterm = G
        cu, cv = G.coeff(1, 0), G.coeff(0, 1)
        if cv != 0:
            self._mode = "v_of_u"
        elif cu != 0:
            self._mode = "u_of_v"
        else:  # pragma: no cover
            raise InconsistencyError("terminal point is not smooth")
        if precision is None:
            precision = min(4 * D * D, self.ceiling)
        self.precision = 0
        self._compute_series(max(4, precision))

    # -- series construction ------------------------------------------

    def _newton_solve(self, prec):
        """Expand the smooth terminal branch: the unknown coordinate as a
        series in the parameter coordinate t."""
        field = self.field
        G = self._Gterm
        if self._mode == "u_of_v":
            G = G.swap_xy()
        t_series = _ser_pad([0, 1], prec)
        Gv = G.derivative_y()
        s = [0]
        cur = 1
        while cur < prec:
            cur = min(2 * cur, prec)
            sc = _ser_pad(s, cur)
            g_at = _eval_bipoly_series(G, t_series[:cur], sc, field, cur)
            gv_at = _eval_bipoly_series(Gv, t_series[:cur], sc, field, cur)
            corr = _ser_mul(g_at, _ser_inv(gv_at, field, cur), field, cur)
            s = [field.sub(x, y) for x, y in zip(sc, corr)]
        s = _ser_pad(s, prec)
        check = _eval_bipoly_series(G, t_series, s, field, prec)
        if any(check):
            raise InconsistencyError("terminal Newton expansion failed")
        return t_series, s

    def _compute_series(self, prec):
        if prec > self.ceiling:
            raise PreconditionError(
                f"required precision {prec} exceeds the ceiling "
                f"{self.ceiling} (WEIERSTRASS_PRECISION_CEILING)")
        field = self.field
        t_series, s = self._newton_solve(prec)
        if self._mode == "v_of_u":
            u, v = t_series, s
        else:
            u, v = s, t_series
        for step in reversed(self._steps):
            if step.kind == "v":
                shifted = v[:]
                shifted[0] = field.add(shifted[0], step.lam)
                u, v = u, _ser_mul(u, shifted, field, prec)
            else:
                u, v = _ser_mul(v, u, field, prec), v
        check = _eval_bipoly_series(self._G0, u, v, field, prec)
        if any(check):
            raise InconsistencyError("parametrization does not annihilate "
                                     "the local equation")
        self.u = u
        self.v = v
        self.precision = prec
        self._pow_a = {0: _ser_pad([1], prec)}
        self._pow_b = {0: _ser_pad([1], prec)}
        a = u[:]
        a[0] = field.add(a[0], self.lam)
        self._a = a
        ord_v = _ser_ord(v)
        if ord_v is None:
            raise InconsistencyError("v(t) vanished to working precision")
        self.pole_order = ord_v       # ord_t of the chart coordinate Z/X
        self._lc_v = v[ord_v]

    def refine(self, precision):
        """Extend the series; prefixes are stable (same chain, same
        deterministic expansion)."""
        if precision <= self.precision:
            return
        self._compute_series(precision)

    def _power(self, cache, base, e):
        if e not in cache:
            m = max(k for k in cache if k <= e)
            cur = cache[m]
            while m < e:
                cur = _ser_mul(cur, base, self.field, self.precision)
                m += 1
                cache[m] = cur
        return cache[e]

    # -- pullbacks and valuations --------------------------------------

    def _pullback(self, g):
        """Series of v^d * g(X, Y) along the branch, d = total degree of g."""
        field = self.field
        d = int(g.total_degree)
        prec = self.precision
        acc = [0] * prec
        for (i, j), c in g.terms.items():
            zexp = d - i - j
            aexp = j if self.chart == "x" else i
            term = self._power(self._pow_a, self._a, aexp)
            if zexp:
                term = _ser_mul(term, self._power(self._pow_b, self.v, zexp),
                                field, prec)
            acc = _ser_add(acc, _ser_scale(term, c, field), field)
        return acc, d

    def valuation_poly(self, g):
        """(order, leading coeff) of a nonzero polynomial reduced mod F."""
        field = self.field
        d = int(g.total_degree) if not g.is_zero() else 0
        needed = d * self.pole_order + 4
        if needed > self.precision:
            target = self.precision
            while target < needed:
                target *= 2
            if target > self.ceiling:
                if needed <= self.ceiling:
                    target = self.ceiling
                else:
                    raise PreconditionError(
                        f"valuation needs precision {needed} beyond the "
                        f"ceiling {self.ceiling}")
            self.refine(target)
        series, d = self._pullback(g)
        bound = d * self.pole_order
        o = None
        for idx in range(min(bound + 1, len(series))):
            if series[idx]:
                o = idx
                break
        if o is None:
            raise InconsistencyError(
                "pullback series vanished beyond its pole bound; "
                "the function is zero on the branch")
        order = o - d * self.pole_order
        lc = field.div(series[o], field.pow_rep(self._lc_v, d))
        return order, lc

    def valuation(self, num, den=None):
        """Exact order and leading coefficient of num/den along the branch."""
        F = self.model.equation
        field = self.field
        num_red = num.divmod_y(F)[1]
        if num_red.is_zero():
            raise PreconditionError("zero function: the numerator is "
                                    "divisible by the curve equation")
        if den is None:
            den_red = BiPoly.one(field)
        else:
            den_red = den.divmod_y(F)[1]
            if den_red.is_zero():
                raise PreconditionError("denominator is divisible by the "
                                        "curve equation")
        o1, c1 = self.valuation_poly(num_red)
        o2, c2 = self.valuation_poly(den_red)
        return Valuation(order=o1 - o2,
                         leading=FieldElement(field, field.div(c1, c2)))

    # -- Laurent views of the affine coordinates ------------------------

    def _laurent(self, num_series, den_series):
        on, od = _ser_ord(num_series), _ser_ord(den_series)
        if on is None:
            return 0, [0]
        n = num_series[on:]
        dd = den_series[od:]
        prec = self.precision - max(on, od)
        inv = _ser_inv(dd, self.field, prec)
        return on - od, _ser_mul(_ser_pad(n, prec), inv, self.field, prec)

    def x_series(self):
        """(offset, coeffs): X(t) = t^offset * (coeffs[0] + coeffs[1] t + ...)."""
        one = _ser_pad([1], self.precision)
        if self.chart == "x":
            return self._laurent(one, self.v)
        return self._laurent(self._a, self.v)

    def y_series(self):
        one = _ser_pad([1], self.precision)
        if self.chart == "x":
            return self._laurent(self._a, self.v)
        return self._laurent(one, self.v)


def parametrize(model, precision=None):
    """Truncated parametrization of the unique branch at infinity."""
    return BranchParam(model, precision)


def valuation(param, num, den=None):
    return param.valuation(num, den)


def valuation_by_resultant(model, g):
    """-v(g) for a polynomial g coprime to F, as deg_X Res_Y(F, g); the
    independent cross-check backend for the series valuation."""
    if g.is_zero():
        raise PreconditionError("zero polynomial has no valuation")
    res = resultant_y(model.equation, g)
    if res.is_zero():
        raise PreconditionError("polynomial shares a factor with the curve")
    return int(res.degree)
