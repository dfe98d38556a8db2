"""Numerical semigroups presented by Apery arrays.

A semigroup is stored as a pivot e and the array a_0..a_(e-1) of minimal
elements per residue class mod e, which makes membership O(1) and carries
every quantity needed downstream: genus, conductor, the pair-count nu, the
Feng-Rao distance (general, symmetric-interval and brute-force variants),
and the Apery update under adjoining a new generator.
"""

import heapq
import math
from dataclasses import dataclass

from .errors import InconsistencyError, PreconditionError


def _apery_by_dijkstra(e, gens):
    """Shortest-path Apery array: a_i = min element of <gens> in class i."""
    INF = None
    dist = [INF] * e
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, c = heapq.heappop(heap)
        if dist[c] is not None and d > dist[c]:
            continue
        for g in gens:
            nc = (c + g) % e
            nd = d + g
            if dist[nc] is None or nd < dist[nc]:
                dist[nc] = nd
                heapq.heappush(heap, (nd, nc))
    if any(d is None for d in dist):
        raise InconsistencyError("residue class unreachable; gcd != 1?")
    return dist


class NumericalSemigroup:
    """An additive submonoid of N with finite complement."""

    __slots__ = ("e", "apery", "gens", "_gapset", "_nu_bf_cache")

    def __init__(self, e, apery, gens):
        self.e = e
        self.apery = tuple(apery)
        self.gens = tuple(gens)
        self._gapset = None
        self._nu_bf_cache = {}

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_generators(cls, gens, pivot=None):
        gens = sorted(set(int(g) for g in gens))
        if not gens or gens[0] <= 0:
            raise PreconditionError("generators must be positive")
        g = 0
        for x in gens:
            g = math.gcd(g, x)
        if g != 1:
            raise PreconditionError(
                f"not a numerical semigroup: gcd of generators is {g}")
        e0 = gens[0]
        base = _apery_by_dijkstra(e0, gens)
        if pivot is None:
            return cls(e0, base, gens)
        pivot = int(pivot)
        if pivot <= 0 or pivot < base[pivot % e0]:
            raise PreconditionError(f"pivot {pivot} is not a nonzero element")
        return cls(pivot, _apery_by_dijkstra(pivot, gens), gens)

    @classmethod
    def from_apery(cls, e, apery, gens=None):
        apery = list(apery)
        if len(apery) != e or apery[0] != 0:
            raise PreconditionError("Apery array must have length e, a_0 = 0")
        for i, a in enumerate(apery):
            if a % e != i % e or a < 0:
                raise PreconditionError(f"a_{i} = {a} is not in class {i}")
        for i, ai in enumerate(apery):
            for j, aj in enumerate(apery):
                if ai + aj < apery[(i + j) % e]:
                    raise PreconditionError(
                        f"Apery array not closed: a_{i}+a_{j} < a_{(i+j) % e}")
        if gens is None:
            gens = sorted({e} | {a for a in apery if a})
        return cls(e, apery, gens)

    # -- basic structure --------------------------------------------------

    def __contains__(self, m):
        return m >= 0 and m >= self.apery[m % self.e]

    @property
    def max_apery(self):
        return max(self.apery)

    @property
    def max_index(self):
        """The class N with a_N = max(apery); unique since classes differ."""
        return self.apery.index(self.max_apery)

    @property
    def conductor(self):
        return self.max_apery - self.e + 1

    @property
    def last_gap(self):
        return self.conductor - 1

    @property
    def genus(self):
        return sum((a - i) // self.e for i, a in enumerate(self.apery))

    @property
    def multiplicity(self):
        nonzero = [a for a in self.apery if a]
        return min([self.e] + nonzero)

    def gaps(self):
        return [x for x in range(self.conductor) if x not in self]

    def _gap_set(self):
        if self._gapset is None:
            self._gapset = frozenset(self.gaps())
        return self._gapset

    def elements(self, bound):
        """Elements of S up to and including bound, ascending."""
        return [m for m in range(bound + 1) if m in self]

    def coords(self, m):
        """Apery coordinates (i, l) with m = a_i + l*e."""
        if m not in self:
            raise PreconditionError(f"{m} is not an element of the semigroup")
        i = m % self.e
        return i, (m - self.apery[i]) // self.e

    # -- Apery relations and nu -------------------------------------------

    def apery_relation(self, i, j):
        """alpha_(i,j) >= 0 with a_i + a_j = a_(i+j) + alpha*e."""
        e = self.e
        i %= e
        j %= e
        return (self.apery[i] + self.apery[j] - self.apery[(i + j) % e]) // e

    def nu(self, m):
        """Number of ordered pairs (a, b) in S^2 with a + b = m, via the
        Apery-relation counting formula."""
        i, l = self.coords(m)
        e = self.e
        ap = self.apery
        total = 0
        ai = ap[i]
        for k in range(e):
            alpha = (ap[k] + ap[(i - k) % e] - ai) // e
            if alpha <= l:
                total += l - alpha + 1
        return total

    def nu_bruteforce(self, m):
        """Direct pair enumeration; the oracle for nu."""
        if m not in self:
            raise PreconditionError(f"{m} is not an element of the semigroup")
        cached = self._nu_bf_cache.get(m)
        if cached is None:
            cached = sum(1 for a in range(m + 1)
                         if a in self and (m - a) in self)
            self._nu_bf_cache[m] = cached
        return cached

    def _nu_or_zero(self, x):
        return self.nu(x) if x >= 0 and x in self else 0

    def gap_pair_count(self, m):
        """D(m): ordered pairs of gaps summing to m."""
        gs = self._gap_set()
        return sum(1 for x in gs if (m - x) in gs)

    # -- Feng-Rao distance --------------------------------------------------

    def feng_rao(self, m):
        """min nu(r) over r in S, r >= m, as a minimum over residue classes
        (nu is increasing along each class)."""
        i, l = self.coords(m)
        e = self.e
        best = None
        for j in range(e):
            aj = self.apery[j]
            t = max(0, (m - aj + e - 1) // e)
            v = self.nu(aj + t * e)
            if best is None or v < best:
                best = v
        return best

    def feng_rao_bruteforce(self, m):
        """Upward scan of nu_bruteforce; stops at the first r in S with
        D(r) = 0 and nu(r) = r + 1 - 2g (such r exists by r = 4g - 1)."""
        if m not in self:
            raise PreconditionError(f"{m} is not an element of the semigroup")
        g = self.genus
        best = None
        r = m
        while True:
            if r in self:
                v = self.nu_bruteforce(r)
                if best is None or v < best:
                    best = v
                if v == r + 1 - 2 * g and self.gap_pair_count(r) == 0:
                    return best
            r += 1

    def is_symmetric(self):
        """Apery test a_i + a_(N-i) = a_N; cross-checked against c = 2g."""
        e = self.e
        N = self.max_index
        aN = self.max_apery
        by_apery = all(self.apery[i] + self.apery[(N - i) % e] == aN
                       for i in range(e))
        by_count = self.conductor == 2 * self.genus
        if by_apery != by_count:
            raise InconsistencyError("symmetry characterizations disagree")
        return by_apery

    def feng_rao_symmetric(self, m):
        """Feng-Rao distance on the interval [c, 2c-2] of a symmetric
        semigroup via the short-minimum formula."""
        if not self.is_symmetric():
            raise PreconditionError("semigroup is not symmetric")
        c = self.conductor
        if not c <= m <= 2 * c - 2:
            raise PreconditionError(f"m = {m} outside the interval "
                                    f"[{c}, {2 * c - 2}]")
        n = m - c + 1
        q = 2 * c - 2 - m
        if n in self:
            return n
        n_next = n + 1
        while n_next not in self:
            n_next += 1
        delta = n_next - n
        cands = [n + t + self._nu_or_zero(q - t) for t in range(delta - 2)]
        cands.append(n_next)
        return min(cands)

    def delta_gap(self, q):
        """Distance from q down to the first gap below it."""
        if q not in self:
            raise PreconditionError(f"{q} is not an element of the semigroup")
        d = 1
        while (q - d) in self:
            d += 1
        return d

    def min_formula_rhs(self, m):
        """min{r in S | r >= m + 1 - 2g}."""
        r = max(0, m + 1 - 2 * self.genus)
        while r not in self:
            r += 1
        return r

    def min_formula_holds(self, m):
        return self.feng_rao(m) == self.min_formula_rhs(m)

    def q0_m0(self):
        """Smallest q in S with nu(q) < delta(q) (sentinel c - 1 when none)
        and the matching threshold m_0 = 4g - 2 - q_0."""
        if not self.is_symmetric():
            raise PreconditionError("q0 is defined for symmetric semigroups")
        c = self.conductor
        q0 = None
        for q in self.elements(c - 1):
            if self.nu(q) < self.delta_gap(q):
                q0 = q
                break
        sentinel = q0 is None
        if sentinel:
            q0 = c - 1
        return Q0Result(q0=q0, m0=4 * self.genus - 2 - q0, sentinel=sentinel)

    def is_irreducible_element(self, q):
        """q != 0 and q is not a sum of two nonzero elements."""
        if q not in self or q == 0:
            return False
        return all((q - s) not in self
                   for s in self.elements(q - 1) if 0 < s)

    # -- adjunction ---------------------------------------------------------

    def adjoin(self, b):
        return self.adjoin_with_trace(b)[0]

    def adjoin_with_trace(self, b):
        """Apery update for S + b*N.

        Candidates for the new minima are a_j + lambda*b with
        0 <= j, lambda <= e - 1.  Returns the new semigroup and the trace
        [(class i, new a_i, source class j, lambda)] of lowered slots.
        """
        b = int(b)
        if b <= 0:
            raise PreconditionError("adjoined element must be positive")
        if b in self:
            return self, []
        e = self.e
        best = {i: (a, i, 0) for i, a in enumerate(self.apery)}
        for j in range(e):
            aj = self.apery[j]
            for lam in range(1, e):
                v = aj + lam * b
                i = v % e
                if v < best[i][0]:
                    best[i] = (v, j, lam)
        new_apery = [best[i][0] for i in range(e)]
        trace = [(i, best[i][0], best[i][1], best[i][2])
                 for i in range(e) if best[i][0] != self.apery[i]]
        new = NumericalSemigroup(e, new_apery, tuple(sorted(set(self.gens) | {b})))
        return new, trace

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup)
                and self.e == other.e and self.apery == other.apery)

    def __hash__(self):
        return hash((self.e, self.apery))

    def __repr__(self):
        return "<" + ",".join(map(str, self.gens)) + ">"


@dataclass(frozen=True)
class Q0Result:
    q0: int
    m0: int
    sentinel: bool

    def __iter__(self):
        return iter((self.q0, self.m0))


class TelescopicStructure:
    """Ordered generators delta_0..delta_h with the gcd tower
    d_i = gcd(delta_0..delta_(i-1)), d_(h+1) = 1, and
    n_i delta_i in <delta_0..delta_(i-1)>; every element then has a unique
    bounded representation."""

    def __init__(self, generators):
        gens = [int(g) for g in generators]
        if not gens or any(g <= 0 for g in gens):
            raise PreconditionError("generators must be positive")
        self.generators = tuple(gens)
        h = len(gens) - 1
        d = [gens[0]]
        for i in range(1, h + 1):
            d.append(math.gcd(d[-1], gens[i]))
        self.d = tuple(d)  # (d_1, ..., d_(h+1)) with d_(i+1) = gcd up to delta_i
        if self.d[-1] != 1:
            raise PreconditionError("gcd of generators is not 1")
        self.nseq = tuple(self.d[i] // self.d[i + 1] for i in range(h))
        self.h = h
        for i in range(1, h + 1):
            target = self.nseq[i - 1] * gens[i]
            if not _scaled_member(target, gens[:i]):
                raise PreconditionError(
                    f"not telescopic: n_{i}*delta_{i} = {target} is not in "
                    f"<{','.join(map(str, gens[:i]))}>")

    def repr_of(self, m):
        """The unique (lambda_0, ..., lambda_h) with 0 <= lambda_k < n_k for
        k >= 1; raises when m is not an element."""
        gens, d, nseq, h = self.generators, self.d, self.nseq, self.h
        lam = [0] * (h + 1)
        rest = m
        for k in range(h, 0, -1):
            dk1 = d[k]           # d_(k+1)
            nk = nseq[k - 1]
            if rest % dk1:
                raise InconsistencyError("representation drift")
            lam_k = 0
            if nk > 1:
                lam_k = (rest // dk1 * pow(gens[k] // dk1, -1, nk)) % nk
            lam[k] = lam_k
            rest -= lam_k * gens[k]
        if rest % gens[0]:
            raise InconsistencyError("representation drift at lambda_0")
        if rest < 0:
            raise PreconditionError(f"{m} is not an element of the semigroup")
        lam[0] = rest // gens[0]
        return tuple(lam)

    def contains(self, m):
        try:
            self.repr_of(m)
            return True
        except PreconditionError:
            return False

    def apery(self):
        """Apery array w.r.t. delta_0: sums with lambda_0 = 0, one per
        residue class (their count n_1...n_h equals delta_0)."""
        gens, nseq, h = self.generators, self.nseq, self.h
        e = gens[0]
        combos = [0]
        for k in range(1, h + 1):
            combos = [c + lam * gens[k] for c in combos
                      for lam in range(nseq[k - 1])]
        if len(combos) != e:
            raise InconsistencyError("telescopic Apery count != delta_0")
        arr = [None] * e
        for v in combos:
            i = v % e
            if arr[i] is not None:
                raise InconsistencyError("telescopic Apery classes collide")
            arr[i] = v
        return arr

    def numerical(self):
        return NumericalSemigroup.from_apery(self.generators[0], self.apery(),
                                             gens=sorted(set(self.generators)))


def _scaled_member(value, gens):
    """Membership in <gens> for a not necessarily coprime generator list."""
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    if value % g:
        return False
    scaled = [x // g for x in gens]
    return (value // g) in NumericalSemigroup.from_generators(scaled)
