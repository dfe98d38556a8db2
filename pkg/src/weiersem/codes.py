"""One-point AG code parameters over a computed curve.

The code C(m) is represented by its parity-check (evaluation) matrix: one
row per basis function of L(mP), evaluated at rational points enumerated
over a chosen extension field.  Dimensions come from exact Gaussian
elimination; designed distances combine the Goppa bound with the Feng-Rao
distance of the Weierstrass semigroup.
"""

import itertools
from dataclasses import dataclass

from .errors import InputError, PreconditionError
from .weierstrass import l_basis


def _row_reduce(rows, field):
    """Rank of a matrix of field reps (in-place Gaussian elimination)."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(x, inv) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank, rows


def _nullspace(rows, field):
    """Basis of the right nullspace of the matrix (list of rep vectors)."""
    if not rows:
        return []
    n = len(rows[0])
    rank, red = _row_reduce(rows, field)
    red = red[:rank]
    pivots = []
    for r in red:
        for col, x in enumerate(r):
            if x:
                pivots.append(col)
                break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in zip(red, pivots):
            vec[pc] = field.neg(r[fc])
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class EvaluationSet:
    """Distinct affine rational points of the model over an extension
    field, each away from the place at infinity."""

    field: object           # the extension FiniteField
    points: tuple           # ((x_rep, y_rep), ...)
    model: object

    def __len__(self):
        return len(self.points)


def enumerate_points(model, ext_field, avoid=(), include_singular=False):
    """Exhaustive scan of the affine plane over ext_field.

    Keeps points on the curve where no polynomial in `avoid` vanishes;
    singular points of the plane model are skipped by default since a
    single evaluation cannot separate the branches above them.
    """
    base = model.field
    embed = base.embedding_into(ext_field)
    F = model.equation
    Fx = F.derivative_x()
    Fy = F.derivative_y()
    pts = []
    for x in range(ext_field.order):
        for y in range(ext_field.order):
            if F.eval_rep(x, y, target=ext_field, embed=embed):
                continue
            if not include_singular:
                if (Fx.eval_rep(x, y, target=ext_field, embed=embed) == 0 and
                        Fy.eval_rep(x, y, target=ext_field, embed=embed) == 0):
                    continue
            if any(a.eval_rep(x, y, target=ext_field, embed=embed) == 0
                   for a in avoid):
                continue
            pts.append((x, y))
    return EvaluationSet(field=ext_field, points=tuple(pts), model=model)


@dataclass(frozen=True)
class CodeSpec:
    """The code C(m) as the dual of the evaluation matrix row space."""

    m: int
    n: int
    k: int                   # dimension of C(m) = n - rank
    rank: int
    d_star: int              # Goppa designed distance m + 2 - 2g
    m_prime: int             # min{r in Gamma | r > m}
    fr_bound: int            # delta_FR(m'), lower bound for d(m)
    t_correct: int           # floor((fr_bound - 1) / 2)
    genus: int
    row_values: tuple        # pole orders of the basis rows
    matrix: tuple            # rows of field reps
    field: object
    improved: bool
    points: tuple


def build_code(table, points, m, improved=False):
    """Evaluation matrix of the L(mP) basis at the points, plus the
    derived parameters of the dual code C(m)."""
    if m < 0:
        raise PreconditionError("m must be nonnegative")
    gamma = table.numerical()
    genus = gamma.genus
    ext = points.field
    base = table.oracle.field
    embed = base.embedding_into(ext)
    if improved:
        tel = table.telescopic
        values = [r for r in gamma.elements(m) if tel.contains(r)]
        funcs = [table.function_for(r) for r in values]
    else:
        funcs = l_basis(table, m)
        values = [f.value for f in funcs]
    matrix = []
    for fn in funcs:
        row = []
        for idx, (x, y) in enumerate(points.points):
            dv = fn.den.eval_rep(x, y, target=ext, embed=embed)
            if dv == 0:
                raise PreconditionError(
                    f"basis function of pole order {fn.value} has a pole at "
                    f"point #{idx} = ({ext.format_rep(x)}, {ext.format_rep(y)})")
            nv = fn.num.eval_rep(x, y, target=ext, embed=embed)
            row.append(ext.div(nv, dv))
        matrix.append(row)
    rank, _ = _row_reduce(matrix, ext)
    n = len(points.points)
    m_prime = m + 1
    while m_prime not in gamma:
        m_prime += 1
    fr = gamma.feng_rao(m_prime)
    return CodeSpec(m=m, n=n, k=n - rank, rank=rank, d_star=m + 2 - 2 * genus,
                    m_prime=m_prime, fr_bound=fr, t_correct=(fr - 1) // 2,
                    genus=genus, row_values=tuple(values),
                    matrix=tuple(tuple(r) for r in matrix), field=ext,
                    improved=improved, points=points.points)


def known_syndromes(spec, word):
    """s_i(y) = sum_k y_k f_i(P_k) for the known indices i <= m."""
    if len(word) != spec.n:
        raise InputError(f"word length {len(word)} != code length {spec.n}")
    ext = spec.field
    out = []
    for value, row in zip(spec.row_values, spec.matrix):
        acc = 0
        for yk, fk in zip(word, row):
            acc = ext.add(acc, ext.mul(yk, fk))
        out.append((value, acc))
    return out


def in_code(spec, word):
    """Membership in C(m): all known syndromes vanish."""
    return all(s == 0 for _, s in known_syndromes(spec, word))


def bidim_syndrome(table, points, error, i, j):
    """s_(i,j)(e) = sum_k e_k f_i(P_k) f_j(P_k) by direct summation."""
    ext = points.field
    base = table.oracle.field
    embed = base.embedding_into(ext)
    fi = table.function_for(i)
    fj = table.function_for(j)
    acc = 0
    for ek, (x, y) in zip(error, points.points):
        if ek == 0:
            continue
        vi = ext.div(fi.num.eval_rep(x, y, target=ext, embed=embed),
                     fi.den.eval_rep(x, y, target=ext, embed=embed))
        vj = ext.div(fj.num.eval_rep(x, y, target=ext, embed=embed),
                     fj.den.eval_rep(x, y, target=ext, embed=embed))
        acc = ext.add(acc, ext.mul(ek, ext.mul(vi, vj)))
    return acc


def distance_bound_table(table, m_values):
    """Rows (m, d*(m-1) = m+1-2g, delta_FR(m), gain, t_corr) for each
    m in the Weierstrass semigroup."""
    gamma = table.numerical()
    g = gamma.genus
    rows = []
    for m in m_values:
        if m not in gamma:
            continue
        goppa = m + 1 - 2 * g
        fr = gamma.feng_rao(m)
        m_prime = m + 1
        while m_prime not in gamma:
            m_prime += 1
        fr_next = gamma.feng_rao(m_prime)
        rows.append({"m": m, "d_star": goppa, "delta_fr": fr,
                     "gain": fr - goppa, "t_corr": (fr_next - 1) // 2})
    return rows


def min_distance_exact(spec):
    """Exhaustive minimum distance of C(m); oracle for the bounds.

    Gated to n <= 24 and at most 2^22 codewords."""
    if spec.n > 24:
        raise PreconditionError("exact minimum distance is limited to n <= 24")
    ext = spec.field
    basis = _nullspace([list(r) for r in spec.matrix], ext)
    k = len(basis)
    if k != spec.k:
        raise PreconditionError("nullspace dimension disagrees with k")
    if k == 0:
        return 0
    if ext.order ** k > 1 << 22:
        raise PreconditionError("codeword enumeration too large")
    best = None
    reps = list(range(ext.order))
    for combo in itertools.product(reps, repeat=k):
        if not any(combo):
            continue
        word = [0] * spec.n
        for c, vec in zip(combo, basis):
            if c:
                for idx in range(spec.n):
                    if vec[idx]:
                        word[idx] = ext.add(word[idx], ext.mul(c, vec[idx]))
        w = sum(1 for x in word if x)
        if best is None or w < best:
            best = w
    return best
