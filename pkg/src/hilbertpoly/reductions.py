"""Executable counting reductions: #SAT instances as homogeneous ideals
whose Hilbert polynomial is the model count, ideal membership via
Hilbert-polynomial comparison, graded matrices for sheaf-style Euler
characteristics (1-row case), and exact interpolation.

DIMACS normalization: duplicate literals inside a clause are collapsed
and tautological clauses are dropped on ingestion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ANY_DEGREE, MultiPoly, UniPoly
from .grobner import HomIdeal, hilbert_data, membership_via_hilbert


@dataclass(frozen=True)
class CnfFormula:
    """CNF with 1-based signed literal encoding (DIMACS style)."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        norm = []
        for clause in self.clauses:
            lits = []
            seen = set()
            for lit in clause:
                lit = int(lit)
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError("literal %d out of range" % lit)
                if lit in seen:
                    continue
                seen.add(lit)
                lits.append(lit)
            if any(-lit in seen for lit in lits):
                continue  # tautological clause
            norm.append(tuple(lits))
        object.__setattr__(self, "clauses", tuple(norm))

    def satisfied_by(self, assignment):
        """assignment: bitmask with bit i-1 = value of variable i."""
        for clause in self.clauses:
            if not any(((assignment >> (abs(l) - 1)) & 1) == (1 if l > 0 else 0)
                       for l in clause):
                return False
        return True


def parse_dimacs(text):
    num_vars = None
    clauses = []
    current = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) < 4 or fields[1] != "cnf":
                raise ValueError("bad DIMACS header %r" % line)
            num_vars = int(fields[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise ValueError("missing DIMACS 'p cnf' header")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def dimacs_text(phi):
    out = ["p cnf %d %d" % (phi.num_vars, len(phi.clauses))]
    for clause in phi.clauses:
        out.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(out) + "\n"


def sat_to_ideal(phi):
    """Homogeneous ideal in x0..xn whose projective zero set is in
    bijection with the satisfying assignments of phi.

    Generators: x_i^2 - x_i x_0 for every variable, plus the fully
    expanded homogenized clause products (x0 - x_i for a positive
    literal, x_i for a negative one).  The Jacobian of the square
    relations makes the rank condition hold with m = 0 at every zero.
    """
    n = phi.num_vars
    variables = tuple("x%d" % i for i in range(n + 1))
    gens = []
    for i in range(1, n + 1):
        sq = tuple(2 if j == i else 0 for j in range(n + 1))
        mixed = tuple(1 if j in (0, i) else 0 for j in range(n + 1))
        gens.append(MultiPoly(variables, {sq: 1, mixed: -1}))
    x0 = MultiPoly.variable(variables, "x0")
    for clause in phi.clauses:
        f = MultiPoly.constant(variables, 1)
        for lit in clause:
            xi = MultiPoly.variable(variables, "x%d" % abs(lit))
            f = f * ((x0 - xi) if lit > 0 else xi)
        gens.append(f)
    return HomIdeal.from_polys(variables, gens)


def count_sat_bruteforce(phi, guard=24):
    """Exhaustive model count; refuses instances beyond the guard size."""
    if phi.num_vars > guard:
        raise ValueError("instance too large for exhaustive counting")
    return sum(1 for mask in range(1 << phi.num_vars) if phi.satisfied_by(mask))


def him_decide(ideal, g, **caps):
    """Homogeneous ideal membership through Hilbert-polynomial equality
    of the Y-extended ideals (agrees with the normal-form route)."""
    return membership_via_hilbert(ideal, g, **caps)


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of homogeneous polynomials presenting a graded morphism
    (+)_j S(e_j) -> (+)_i S(d_i); deg p_ij = d_i - e_j when p_ij != 0."""

    entries: tuple        # rows of MultiPoly
    row_degrees: tuple    # d_i
    col_degrees: tuple    # e_j

    def __post_init__(self):
        if len(self.entries) != len(self.row_degrees):
            raise ValueError("row count mismatch")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_degrees):
                raise ValueError("column count mismatch")
            for j, p in enumerate(row):
                if not p:
                    continue
                d = p.is_homogeneous()
                if d is None or d is ANY_DEGREE:
                    raise ValueError("entry (%d,%d) not homogeneous" % (i, j))
                if d != self.row_degrees[i] - self.col_degrees[j]:
                    raise ValueError("entry (%d,%d) has degree %d, expected %d"
                                     % (i, j, d, self.row_degrees[i] - self.col_degrees[j]))


def ideal_to_graded_matrix(gens):
    """1-row presentation of S/I for I = (f_1..f_r): column degrees -deg f_j."""
    col_degrees = []
    for g in gens:
        d = g.is_homogeneous()
        if d is None or d is ANY_DEGREE:
            raise ValueError("generators must be non-zero homogeneous")
        col_degrees.append(-d)
    return GradedMatrix(entries=(tuple(gens),), row_degrees=(0,),
                        col_degrees=tuple(col_degrees))


def euler_quotient(gm, d, variables=None, **caps):
    """chi of the d-th twist of the cokernel sheaf, for 1-row matrices:
    equals the Hilbert polynomial of S/(entries) evaluated at d.

    A presentation with no columns is the full ring; it needs an
    explicit variable list since none can be read off the entries.
    """
    if len(gm.entries) != 1:
        raise ValueError("only 1-row graded matrices are supported")
    gens = [p for p in gm.entries[0] if p]
    if gens:
        variables = gens[0].variables
    elif variables is None:
        raise ValueError("empty presentation needs an explicit variable list")
    ideal = HomIdeal.from_polys(variables, gens)
    value = hilbert_data(ideal, **caps).hilbert_polynomial(d)
    assert value.denominator == 1
    return int(value)


def interpolate(points, degree_bound):
    """Unique polynomial of degree <= degree_bound through the points.

    Needs at least degree_bound+1 distinct nodes; extra points must be
    consistent with the interpolant or a ValueError is raised.
    """
    seen = {}
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        if x in seen and seen[x] != y:
            raise ValueError("conflicting values at node %s" % x)
        seen[x] = y
    if len(seen) < degree_bound + 1:
        raise ValueError("need %d distinct nodes, got %d"
                         % (degree_bound + 1, len(seen)))
    nodes = sorted(seen)[:degree_bound + 1]
    poly = UniPoly()
    for xi in nodes:
        basis = UniPoly.constant(1)
        denom = Fraction(1)
        for xj in nodes:
            if xj == xi:
                continue
            basis = basis * UniPoly([-xj, 1])
            denom *= xi - xj
        poly = poly + basis * (seen[xi] / denom)
    for x, y in seen.items():
        if poly(x) != y:
            raise ValueError("points are not on a degree-%d polynomial" % degree_bound)
    return poly
