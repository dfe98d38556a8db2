"""Exact arithmetic over finite fields GF(p^k) at desk scale (p^k <= 2^20).

Elements are stored as integer representatives: for GF(p) the residue
itself, for GF(p^k) the base-p encoding of the coefficient vector of the
polynomial basis 1, t, ..., t^(k-1).  Extension fields carry log/antilog
tables (built once, for p^k <= 2^16), so multiplication is O(1); prime
fields use the native modulus operator which is faster than any table.
"""

from .errors import InconsistencyError, InputError, PreconditionError

ORDER_LIMIT = 1 << 20
LOG_TABLE_LIMIT = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- small helpers on coefficient lists over GF(p) (ascending exponents) --

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    _trim(res)
    k = len(mod) - 1
    while len(res) > k:
        top = res.pop()
        if top:
            d = len(res) - k
            for i in range(k):
                res[d + i] = (res[d + i] - top * mod[i]) % p
        _trim(res)
    return res


def _polypowmod(a, e, mod, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _polygcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        while len(a) >= len(b):
            if not a:
                break
            c = a[-1] * pow(b[-1], p - 2, p) % p
            d = len(a) - len(b)
            for i in range(len(b)):
                a[d + i] = (a[d + i] - c * b[i]) % p
            _trim(a)
        a, b = b, a
    return a


def _is_irreducible(mod, p):
    """Rabin test for a monic polynomial over GF(p)."""
    k = len(mod) - 1
    if k < 1:
        return False
    x = [0, 1]
    # x^(p^k) == x (mod f)
    q = _polypowmod(x, p ** k, mod, p)
    width = max(len(q), 2)
    q = q + [0] * (width - len(q))
    xx = x + [0] * (width - 2)
    if _trim([(a - b) % p for a, b in zip(q, xx)]):
        return False
    kk = k
    ell = 2
    primes = []
    while kk > 1:
        if kk % ell == 0:
            primes.append(ell)
            while kk % ell == 0:
                kk //= ell
        ell += 1
    for ell in primes:
        q = _polypowmod(x, p ** (k // ell), mod, p)
        diff = [(a - b) % p for a, b in zip(q + [0, 0], [0, 1] + [0] * len(q))]
        _trim(diff)
        if len(_polygcd(diff, list(mod), p)) != 1:
            return False
    return True


def default_modulus(p, k):
    """The monic irreducible of degree k over GF(p) whose lower part has
    the least base-p integer encoding (reproducible across runs)."""
    for v in range(p ** k):
        coeffs = []
        vv = v
        for _ in range(k):
            coeffs.append(vv % p)
            vv //= p
        mod = coeffs + [1]
        if _is_irreducible(mod, p):
            return tuple(mod)
    raise InconsistencyError(f"no irreducible of degree {k} over GF({p})")


class FiniteField:
    """GF(p^k) with a fixed monic irreducible modulus over GF(p)."""

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise InputError(f"characteristic {p} is not prime")
        if k < 1:
            raise InputError("extension degree must be >= 1")
        if p ** k > ORDER_LIMIT:
            raise InputError(f"field order {p}^{k} exceeds the desk-scale "
                             f"limit 2^20")
        self.p = p
        self.k = k
        self.order = p ** k
        if k == 1:
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
        else:
            self.modulus = tuple(modulus) if modulus is not None \
                else default_modulus(p, k)
            if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
                raise InputError("modulus must be monic of degree k")
            if not _is_irreducible(list(self.modulus), p):
                raise InputError("modulus is not irreducible")
        self._log = self._exp = None
        if k > 1 and self.order <= LOG_TABLE_LIMIT:
            self._build_log_tables()

    # -- table construction -------------------------------------------

    def _raw_mul(self, a, b):
        """Polynomial-basis product of two integer reps (no tables)."""
        p, k = self.p, self.k
        ca = self.decode(a)
        cb = self.decode(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        for d in range(2 * k - 2, k - 1, -1):
            top = prod[d]
            if top:
                prod[d] = 0
                for i in range(k):
                    prod[d - k + i] = (prod[d - k + i] - top * self.modulus[i]) % p
        return self.encode(prod[:k])

    def _build_log_tables(self):
        q = self.order
        for g in range(2, q):
            seen = [False] * q
            x = 1
            ok = True
            for _ in range(q - 1):
                if seen[x]:
                    ok = False
                    break
                seen[x] = True
                x = self._raw_mul(x, g)
            if ok:
                exp = [0] * (q - 1)
                log = [0] * q
                x = 1
                for i in range(q - 1):
                    exp[i] = x
                    log[x] = i
                    x = self._raw_mul(x, g)
                self._exp, self._log = exp, log
                self.generator_rep = g
                return
        raise InputError("no multiplicative generator found (bad modulus?)")

    # -- integer-rep arithmetic ----------------------------------------

    def encode(self, coeffs):
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def decode(self, rep):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(rep % self.p)
            rep //= self.p
        return tuple(coeffs)

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode(x + y for x, y in zip(self.decode(a), self.decode(b)))

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode(x - y for x, y in zip(self.decode(a), self.decode(b)))

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.encode(-x for x in self.decode(a))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._raw_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow_rep(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_rep(self, a, e):
        if e < 0:
            return self.pow_rep(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def from_int(self, c):
        """Image of an integer under the unital ring map Z -> GF(p^k)."""
        return c % self.p

    # -- element-level API ---------------------------------------------

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        return FieldElement(self, self.from_int(value))

    def from_rep(self, rep):
        if not 0 <= rep < self.order:
            raise ValueError(f"rep {rep} out of range for order {self.order}")
        return FieldElement(self, rep)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def gen(self):
        """The polynomial-basis generator t (equals p as a rep)."""
        if self.k == 1:
            raise PreconditionError("prime field has no basis generator t")
        return FieldElement(self, self.p)

    def elements(self):
        for rep in range(self.order):
            yield FieldElement(self, rep)

    def embedding_into(self, other):
        """Return a rep -> rep field embedding GF(p^k) -> GF(p^(k*e)).

        Found by locating a root of this field's modulus in `other`;
        scan order makes the choice deterministic.
        """
        if other.p != self.p or other.k % self.k != 0:
            raise PreconditionError(
                f"no embedding GF({self.p}^{self.k}) -> GF({other.p}^{other.k})")
        if self.k == 1:
            return lambda rep: rep % other.p
        root = None
        for cand in range(other.order):
            acc = 0
            for c in reversed(self.modulus):
                acc = other.add(other.mul(acc, cand), c % other.p)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise InconsistencyError("modulus has no root in the extension")
        powers = [1]
        for _ in range(self.k - 1):
            powers.append(other.mul(powers[-1], root))

        def embed(rep):
            acc = 0
            for c, pw in zip(self.decode(rep), powers):
                acc = other.add(acc, other.mul(c, pw))
            return acc

        return embed

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    def spec_string(self):
        return repr(self)

    def format_rep(self, rep):
        """Grammar form of an element: plain integer or a t-polynomial."""
        if self.k == 1:
            return str(rep)
        coeffs = self.decode(rep)
        terms = []
        for e in range(self.k - 1, -1, -1):
            c = coeffs[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                head = "t" if e == 1 else f"t^{e}"
                terms.append(head if c == 1 else f"{c}*{head}")
        return "+".join(terms) if terms else "0"


class FieldElement:
    """An element of a FiniteField; immutable, hashable."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    @property
    def coeffs(self):
        return self.field.decode(self.rep)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch in arithmetic")
            return other.rep
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.rep, r))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(r, self.rep))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow_rep(self.rep, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def __bool__(self):
        return self.rep != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.field.p, self.field.k))

    def __repr__(self):
        return self.field.format_rep(self.rep)
