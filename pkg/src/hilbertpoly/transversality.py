"""Rank-based degeneracy tests and the Schubert-chart transversality
decision at exact rational points.

The flag is carried in two consistent forms: a nonsingular basis matrix
(columns span the flag steps) and a dual matrix of linear forms whose
leading rows cut the steps out.  All rank decisions run in exact
rational arithmetic; projective points are normalized to leading
coordinate 1.

The tangency test at a point x with Gauss image on the cell e_mu works
in coordinates adapted to the chart: the variety becomes the graph of
an implicit map h, whose first and second derivatives at x come from
two linear solves against the invertible Jacobian block.  The m+1
matrices of second derivatives span the image of the Gauss
differential; transversality holds when they fill the chart directions
complementary to the cell.

The decision is exposed as separate pieces (smoothness, cell
membership, the tangency verdict) rather than as one bare implication,
so callers see which hypothesis failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arith import MultiPoly, frac
from .partitions import is_admissible, jumps, partition_from_jumps


@dataclass(frozen=True)
class Flag:
    """Complete flag in P^n: basis columns span, dual rows cut out."""

    basis: tuple        # (n+1) x (n+1), columns l_0..l_n
    dual_matrix: tuple  # n x (n+1) rows of linear forms

    def __post_init__(self):
        n = len(self.basis) - 1
        if linalg.det(self.basis) == 0:
            raise ValueError("flag basis is singular")
        if len(self.dual_matrix) != n:
            raise ValueError("dual matrix must have n rows")
        cols = linalg.transpose(self.basis)
        for i, row in enumerate(self.dual_matrix):
            for k in range(n - i):
                if sum(a * b for a, b in zip(row, cols[k])) != 0:
                    raise ValueError("dual row %d does not annihilate F_%d" % (i, n - 1 - i))

    @property
    def n(self):
        return len(self.basis) - 1

    @classmethod
    def from_basis(cls, basis):
        """Derive the dual rows from the inverse of the basis matrix."""
        basis = tuple(tuple(frac(x) for x in row) for row in basis)
        inv = linalg.inverse(basis)
        n = len(basis) - 1
        dual = tuple(tuple(inv[n - i]) for i in range(n))
        return cls(basis=basis, dual_matrix=dual)


def random_flag(n, seed):
    """Deterministic pseudo-random integer flag; resamples until the
    basis is nonsingular."""
    rng = random.Random(seed)
    while True:
        basis = [[Fraction(rng.randint(-9, 9)) for _ in range(n + 1)]
                 for _ in range(n + 1)]
        if linalg.det(basis) != 0:
            return Flag.from_basis(basis)


@dataclass(frozen=True)
class InputInstance:
    """Homogeneous system f_1..f_r in x0..xn whose m-dimensional locus
    is the variety under study."""

    polys: tuple
    n: int
    m: int

    def __post_init__(self):
        variables = tuple("x%d" % i for i in range(self.n + 1))
        for f in self.polys:
            if f.variables != variables:
                raise ValueError("polynomials must live in x0..x%d" % self.n)
            if f.is_homogeneous() is None:
                raise ValueError("polynomials must be homogeneous")
        if not 0 <= self.m <= self.n:
            raise ValueError("need 0 <= m <= n")

    @property
    def r(self):
        return len(self.polys)

    @property
    def variables(self):
        return tuple("x%d" % i for i in range(self.n + 1))


@dataclass(frozen=True)
class GrassPoint:
    """Point of G(m,n) as a full-rank (m+1) x (n+1) span matrix of the cone."""

    span_matrix: tuple

    def __post_init__(self):
        rows = [list(r) for r in self.span_matrix]
        if linalg.rank(rows) != len(rows):
            raise ValueError("span matrix is rank deficient")

    @property
    def dim(self):
        return len(self.span_matrix) - 1


def normalize_point(x):
    """Scale so the first nonzero coordinate is 1."""
    x = [frac(v) for v in x]
    lead = next((v for v in x if v), None)
    if lead is None:
        raise ValueError("zero vector is not a projective point")
    return tuple(v / lead for v in x)


def is_zero_of(inst, x):
    return all(f.eval_point(x) == 0 for f in inst.polys)


def jacobian_at(inst, x):
    return [[f.partial(v).eval_point(x) for v in inst.variables]
            for f in inst.polys]


def input_condition_at(inst, x):
    """Rank of the Jacobian at a zero is at least n-m (the kernel is at
    most (m+1)-dimensional)."""
    x = normalize_point(x)
    if not is_zero_of(inst, x):
        raise ValueError("point is not a zero of the system")
    return linalg.rank(jacobian_at(inst, x)) >= inst.n - inst.m


def gauss_point(inst, x):
    """Tangent space at a smooth point, as the Jacobian kernel."""
    x = normalize_point(x)
    if not is_zero_of(inst, x):
        raise ValueError("point is not a zero of the system")
    jac = jacobian_at(inst, x)
    rk = linalg.rank(jac) if inst.polys else 0
    if rk != inst.n - inst.m:
        raise ValueError("Jacobian rank %d at %s, expected %d"
                         % (rk, x, inst.n - inst.m))
    basis = linalg.kernel(jac, ncols=inst.n + 1) if inst.polys else \
        linalg.identity(inst.n + 1)
    return GrassPoint(tuple(tuple(v) for v in basis))


def in_Q_lambda(inst, x, flag, lam):
    """Degeneracy-locus membership by stacked rank tests: for each i the
    first (m - i + lam_{i+1}) dual rows over the Jacobian have rank at
    most n-i."""
    if not is_admissible(lam, inst.n, inst.m):
        raise ValueError("partition not admissible")
    x = normalize_point(x)
    if not is_zero_of(inst, x):
        raise ValueError("point is not a zero of the system")
    jac = jacobian_at(inst, x)
    for i in range(inst.m + 1):
        delta = inst.m - i + lam.part(i + 1)
        rows = [list(r) for r in flag.dual_matrix[:delta]] + [list(r) for r in jac]
        if rows and linalg.rank(rows) > inst.n - i:
            return False
    return True


# ---------------------------------------------------------------------------
# Schubert cells via echelon charts


def _flag_coordinates(A, flag):
    inv = linalg.inverse(flag.basis)
    return linalg.mat_mul([list(r) for r in A.span_matrix], linalg.transpose(inv))


def schubert_cell_coords(A, flag, mu):
    """Chart matrix alpha_mu(A) of shape (n-m) x (m+1), or None when A
    lies outside the chart domain U_mu."""
    n = flag.n
    m = A.dim
    sigma = jumps(mu, n, m)
    B = _flag_coordinates(A, flag)
    Bsig = [[row[s] for s in sigma] for row in B]
    if linalg.det(Bsig) == 0:
        return None
    E = linalg.mat_mul(linalg.inverse(Bsig), B)
    rest = [j for j in range(n + 1) if j not in sigma]
    return tuple(tuple(E[i][j] for i in range(m + 1)) for j in rest)


def in_cell(A, flag, mu):
    """Cell membership through the echelon zero pattern of the chart."""
    n, m = flag.n, A.dim
    sigma = jumps(mu, n, m)
    chart = schubert_cell_coords(A, flag, mu)
    if chart is None:
        return False
    for i in range(m + 1):
        for j in range(sigma[i] - i, n - m):
            if chart[j][i] != 0:
                return False
    return True


def dimension_jumps(A, flag):
    """Jump positions sigma from the raw dimension counts dim(A cap F_j),
    computed by ranks of stacked spans (no charts involved)."""
    n, m = flag.n, A.dim
    cols = linalg.transpose(flag.basis)
    span = [list(r) for r in A.span_matrix]
    sigma = []
    want = 1
    for j in range(n + 1):
        rk = linalg.rank(span + cols[:j + 1])
        cone_dim = (m + 1) + (j + 1) - rk
        if cone_dim >= want and len(sigma) <= m:
            sigma.append(j)
            want += 1
    assert len(sigma) == m + 1, "intersection dimensions did not reach m+1"
    return tuple(sigma)


def cell_partition_of(A, flag):
    """The unique admissible mu with A in e_mu(flag)."""
    n, m = flag.n, A.dim
    return partition_from_jumps(dimension_jumps(A, flag), n, m)


def in_schubert_variety(A, flag, lam):
    """Omega_lam membership: dim(A cap F_{sigma_i}) >= i for all i."""
    n, m = flag.n, A.dim
    sigma = jumps(lam, n, m)
    cols = linalg.transpose(flag.basis)
    span = [list(r) for r in A.span_matrix]
    for i, s in enumerate(sigma):
        rk = linalg.rank(span + cols[:s + 1])
        if (m + 1) + (s + 1) - rk < i + 1:
            return False
    return True


# ---------------------------------------------------------------------------
# transversality at a point


def transversality_report(inst, x, flag, mu):
    """Full picture of the tangency test at x; see transversal_at."""
    n, m = inst.n, inst.m
    x = normalize_point(x)
    report = {"point": x, "mu": mu, "smooth": False, "on_cell": False,
              "chart": None, "span_dim": None, "needed": (n - m) * (m + 1),
              "transversal": None}
    if not is_zero_of(inst, x):
        raise ValueError("point is not a zero of the system")
    A = gauss_point(inst, x)  # raises when the rank is off
    report["smooth"] = True
    if not in_cell(A, flag, mu):
        return report
    report["on_cell"] = True
    chart = schubert_cell_coords(A, flag, mu)
    report["chart"] = chart

    sigma = jumps(mu, n, m)
    rest = [j for j in range(n + 1) if j not in sigma]
    order = list(sigma) + rest
    if report["needed"] == 0:
        report["span_dim"] = 0
        report["transversal"] = True
        return report

    # adapted coordinates: x = L z with L the basis columns reordered so
    # the sigma-columns come first
    L = [[flag.basis[i][order[k]] for k in range(n + 1)] for i in range(n + 1)]
    zvars = tuple("z%d" % i for i in range(n + 1))
    lin = {("x%d" % i): sum((L[i][k] * MultiPoly.variable(zvars, zvars[k])
                             for k in range(n + 1)), MultiPoly.zero(zvars))
           for i in range(n + 1)}
    fz = [f.substitute(lin) for f in inst.polys]
    z = linalg.solve(L, list(x))

    jac = [[f.partial(v).eval_point(z) for v in zvars] for f in fz]
    block = [row[m + 1:] for row in jac]
    # pick n-m rows with an invertible square block
    rows_pick = []
    work = [(list(row), s) for s, row in enumerate(block)]
    reduced = []
    for row, s in work:
        vec = list(row)
        for rvec, _ in reduced:
            piv = next(i for i, v in enumerate(rvec) if v)
            if vec[piv]:
                fct = vec[piv] / rvec[piv]
                vec = [a - fct * b for a, b in zip(vec, rvec)]
        if any(vec):
            reduced.append((vec, s))
            rows_pick.append(s)
        if len(rows_pick) == n - m:
            break
    if len(rows_pick) < n - m:
        raise AssertionError("chart block is singular at a cell point")

    Jsel = [jac[s] for s in rows_pick]
    J2 = [row[m + 1:] for row in Jsel]
    J1 = [row[:m + 1] for row in Jsel]
    J2inv = linalg.inverse(J2)
    # first derivatives of the implicit graph map: H1 = -J2^{-1} J1
    H1 = [[-v for v in row] for row in linalg.mat_mul(J2inv, J1)]
    assert tuple(tuple(r) for r in H1) == chart, \
        "implicit chart disagrees with echelon chart"

    hess = []
    for s in rows_pick:
        f = fz[s]
        hs = [[f.partial(zvars[i]).partial(zvars[j]).eval_point(z)
               for j in range(n + 1)] for i in range(n + 1)]
        hess.append(hs)

    span_rows = []
    second = {}
    for jdir in range(m + 1):
        mat = [[Fraction(0)] * (m + 1) for _ in range(n - m)]
        for i in range(m + 1):
            key = (min(i, jdir), max(i, jdir))
            if key not in second:
                rhs = []
                for hs in hess:
                    v = hs[key[0]][key[1]]
                    for t in range(n - m):
                        v += hs[key[0]][m + 1 + t] * H1[t][key[1]]
                        v += hs[key[1]][m + 1 + t] * H1[t][key[0]]
                    for t in range(n - m):
                        for kk in range(n - m):
                            v += (hs[m + 1 + t][m + 1 + kk]
                                  * H1[t][key[0]] * H1[kk][key[1]])
                    rhs.append(-v)
                second[key] = linalg.solve(J2, rhs)
            col = second[key]
            for t in range(n - m):
                mat[t][i] = col[t]
        span_rows.append([mat[t][i] for t in range(n - m) for i in range(m + 1)])

    # tangent directions of the cell: unit matrices at the free chart slots
    for i in range(m + 1):
        for j in range(sigma[i] - i):
            vec = [Fraction(0)] * ((n - m) * (m + 1))
            vec[j * (m + 1) + i] = Fraction(1)
            span_rows.append(vec)

    span_dim = linalg.rank(span_rows)
    report["span_dim"] = span_dim
    report["transversal"] = span_dim == report["needed"]
    return report


def transversal_at(inst, x, flag, mu):
    """True when the Gauss map meets the cell e_mu transversely at x.

    Preconditions (violations raise): x is an exact zero, the Jacobian
    rank there is exactly n-m, and the tangent space lies on the cell.
    """
    report = transversality_report(inst, x, flag, mu)
    if not report["on_cell"]:
        raise ValueError("Gauss image is not on the cell e_%s" % mu)
    return report["transversal"]
