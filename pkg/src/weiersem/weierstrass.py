"""Completing the semigroup at infinity to the Weierstrass semigroup.

The triangulation loop reduces each integral-basis element against the
table of known functions (leading-coefficient-matched subtraction, exact
coefficients from the branch oracle) until its pole order escapes the
current value set; the escape updates one residue-class slot of the Apery
array, covering every gap of that class above the new value at once.
The final table yields a function of pole order r for every r in the
Weierstrass semigroup, hence bases of the spaces L(mP).
"""

from dataclasses import dataclass

from .errors import InconsistencyError, PreconditionError
from .polynomials import BiPoly, UniPoly
from .semigroups import NumericalSemigroup


def _x_content(P):
    """gcd over GF(q)[X] of the Y-coefficients of P."""
    g = UniPoly.zero(P.field)
    for c in P.y_coeffs():
        g = g.gcd(c)
        if g.degree == 0:
            break
    return g


def _strip_common_content(num, den):
    """Cancel the common univariate X-content of numerator and denominator
    (no gcd over the curve is attempted)."""
    g = _x_content(num).gcd(_x_content(den))
    if not g.is_zero() and g.degree >= 1:
        num = BiPoly.from_y_coeffs(num.field,
                                   [c.exact_div(g) for c in num.y_coeffs()])
        den = BiPoly.from_y_coeffs(den.field,
                                   [c.exact_div(g) for c in den.y_coeffs()])
    return num, den


@dataclass(frozen=True)
class ValuedFunction:
    """A rational function tagged with its pole order at infinity and the
    exact leading coefficient of its local expansion."""

    num: BiPoly
    den: BiPoly
    value: int          # -v(f) at the infinite place
    lc: int             # leading coefficient (field rep)
    provenance: str     # 'am-product' | 'reduction' | 'table-product'

    def __mul__(self, other):
        f = self.num.field
        num, den = _strip_common_content(self.num * other.num,
                                         self.den * other.den)
        return ValuedFunction(num, den, self.value + other.value,
                              f.mul(self.lc, other.lc), "table-product")

    def pow(self, e):
        f = self.num.field
        out = ValuedFunction(BiPoly.one(f), BiPoly.one(f), 0, 1, "table-product")
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        if self.den == BiPoly.one(self.num.field):
            return repr(self.num)
        return f"({self.num}) / ({self.den})"


class FunctionTable:
    """Apery-indexed function storage: one function per residue class of
    the current value set, plus the pivot function h_e (Apery composites
    f_m = h_i * h_e^l realize every tracked value)."""

    def __init__(self, s_infinity, am_functions, oracle):
        self.s_p = s_infinity
        self.oracle = oracle
        self.telescopic = s_infinity.telescopic()
        field = oracle.field
        delta = s_infinity.generators
        self.e = delta[0]
        roots = []
        for fn, value in zip(am_functions, delta):
            val = oracle.valuation(fn)
            if -val.order != value:
                raise InconsistencyError(
                    f"generator function has pole order {-val.order}, "
                    f"expected {value}")
            roots.append(ValuedFunction(fn, BiPoly.one(field), value,
                                        val.leading.rep, "am-product"))
        self._roots = roots
        self.h_e = roots[0]            # -v(X) = delta_0 = pivot
        tel_apery = self.telescopic.apery()
        self.apery = list(tel_apery)
        self.slots = [None] * self.e
        for i, a in enumerate(tel_apery):
            lam = self.telescopic.repr_of(a)
            self.slots[i] = self._am_product(lam)

    def _am_product(self, lam):
        out = None
        for fn, l in zip(self._roots, lam):
            if l == 0:
                continue
            part = fn.pow(l)
            out = part if out is None else out * part
        if out is None:
            field = self.oracle.field
            return ValuedFunction(BiPoly.one(field), BiPoly.one(field), 0, 1,
                                  "am-product")
        return out

    # -- current value set ------------------------------------------------

    def contains(self, value):
        return value >= 0 and value >= self.apery[value % self.e]

    def update_slot(self, value, fn):
        """Record the escape function: lowers the Apery slot of its class.
        Returns the list of newly covered values, ascending."""
        i = value % self.e
        old = self.apery[i]
        if value >= old:
            raise InconsistencyError(
                f"slot update with a value {value} already covered")
        covered = list(range(value, old, self.e))
        self.apery[i] = value
        self.slots[i] = fn
        return covered

    def numerical(self):
        return NumericalSemigroup.from_apery(self.e, self.apery)

    # -- function lookup ---------------------------------------------------

    def function_for(self, r, verify=True):
        """A function with pole order exactly r at infinity: the AM power
        product when r lies in the semigroup at infinity, the Apery
        composite h_i * h_e^l otherwise."""
        if r < 0 or not self.contains(r):
            raise PreconditionError(f"{r} is not a tracked pole order")
        if self.telescopic.contains(r):
            fn = self._am_product(self.telescopic.repr_of(r))
        else:
            i = r % self.e
            l = (r - self.apery[i]) // self.e
            fn = self.slots[i] * self.h_e.pow(l) if l else self.slots[i]
        if fn.value != r:
            raise InconsistencyError("composed function has wrong value")
        if verify:
            val = self.oracle.valuation(fn.num, fn.den)
            if -val.order != r or val.leading.rep != fn.lc:
                raise InconsistencyError(
                    f"table function for {r} fails oracle validation")
        return fn


@dataclass(frozen=True)
class TriangulationReport:
    s_p: object                 # SemigroupAtInfinity
    s: int                      # integral-basis size = #(Gamma \ S_P)
    added_values: tuple         # discovery order, covered values included
    gamma: NumericalSemigroup   # the Weierstrass semigroup
    reduced: tuple              # escape functions g_i
    genus: int
    table: FunctionTable


def reduce_step(g, table):
    """One reduction: subtract the leading-coefficient-matched table
    function of equal value; the pole order strictly drops."""
    if not table.contains(g.value):
        raise PreconditionError(
            f"value {g.value} is not in the current value set")
    field = table.oracle.field
    f = table.function_for(g.value)
    c = field.div(g.lc, f.lc)
    num = g.num * f.den - f.num.scale(c) * g.den
    den = g.den * f.den
    num, den = _strip_common_content(num, den)
    val = table.oracle.valuation(num, den)
    if -val.order >= g.value:
        raise InconsistencyError("reduction did not decrease the pole order")
    return ValuedFunction(num, den, -val.order, val.leading.rep, "reduction")


def triangulate(s_infinity, am_functions, integral_basis, oracle):
    """Run the triangulation over the integral basis h_1..h_s.

    Every escape lowers one Apery slot, adding the whole residue class
    between the new value and the old slot minimum; exactly s values are
    added in total, else the basis was inconsistent.
    """
    table = FunctionTable(s_infinity, am_functions, oracle)
    s = len(integral_basis)
    genus_start = table.numerical().genus
    added = []
    reduced = []
    for idx, (num, den) in enumerate(integral_basis, start=1):
        if len(added) == s:
            break  # value set complete; remaining elements are dependent
        try:
            val = oracle.valuation(num, den)
        except PreconditionError as exc:
            raise InconsistencyError(
                f"integral basis element {idx} is not a function on the "
                f"curve: {exc}")
        g = ValuedFunction(num, den, -val.order, val.leading.rep, "reduction")
        steps = 0
        bound = g.value + 2
        while g.value > 0 and table.contains(g.value):
            try:
                g = reduce_step(g, table)
            except PreconditionError as exc:
                raise InconsistencyError(
                    f"integral basis element {idx} reduced to zero; "
                    f"the given set is not a basis ({exc})")
            steps += 1
            if steps > bound:
                raise InconsistencyError("reduction failed to terminate")
        if g.value <= 0:
            raise InconsistencyError(
                f"integral basis element {idx} reduced into the coordinate "
                f"ring; the given set is not a basis")
        covered = table.update_slot(g.value, g)
        if len(added) + len(covered) > s:
            raise InconsistencyError(
                f"more than {s} values added: the given integral basis is "
                f"inconsistent with its size")
        added.extend(covered)
        reduced.append(g)
    if len(added) != s:
        raise InconsistencyError(
            f"{len(added)} values added but the integral basis has size {s}")
    gamma = table.numerical()
    genus = gamma.genus
    if genus != genus_start - s:
        raise InconsistencyError(
            f"genus bookkeeping failed: {genus_start} - {s} != {genus}")
    return TriangulationReport(s_p=s_infinity, s=s, added_values=tuple(added),
                               gamma=gamma, reduced=tuple(reduced),
                               genus=genus, table=table)


def function_for(table, r):
    return table.function_for(r)


def l_basis(table, m):
    """One function per pole order r in Gamma with 0 <= r <= m."""
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    gamma = table.numerical()
    return [table.function_for(r) for r in gamma.elements(m)]
