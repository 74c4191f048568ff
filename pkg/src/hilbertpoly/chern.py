"""Chern/Todd pipeline for smooth complete intersections in P^n.

Everything lives in the truncated ring Q[h]/(h^(m+1)) where h is the
hyperplane class; the degree functional reads off the h^m coefficient
and multiplies by deg V = prod d_i.  Three independent routes to the
Hilbert polynomial come out of this module:

* hilbert_poly_hrr        - Riemann-Roch coefficients k! p_k = deg(h^k T_{m-k})
* hilbert_poly_characters - the delta-table combination of projective
                            characters of degeneracy loci
* ci_hilbert_series_oracle- elementary generating-function bookkeeping
                            for regular sequences (the acceptance oracle)

The identification of the cone normal bundle as a sum of line bundles
of weights d_i - 1 (via the gradient maps) is the one derivation made
here that is pinned by tests rather than quoted: it reproduces the
classical count d(d-1) of tangents through a point for plane curves.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import MultiPoly, TruncSeries, UniPoly, binom_poly
from .grobner import HomIdeal, monomials_of_degree
from .partitions import enumerate_partitions
from .symfun import CoeffSeq, delta_det, delta_table, scaling_factor, todd_poly


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of hypersurfaces of the given degrees
    in projective n-space (smoothness of the generic member is the
    input contract, not re-verified here)."""

    n: int
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be >= 1")
        if len(self.degrees) > self.n:
            raise ValueError("codimension exceeds ambient dimension")

    @property
    def r(self):
        return len(self.degrees)

    @property
    def m(self):
        return self.n - self.r

    @property
    def degree(self):
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def __str__(self):
        return "CI(n=%d, degrees=%s)" % (self.n, list(self.degrees))


@dataclass(frozen=True)
class TruncClass:
    """Cohomology class of a complete intersection, as a polynomial in
    the hyperplane class truncated modulo h^(m+1)."""

    ci: CompleteIntersection
    series: TruncSeries

    def __post_init__(self):
        if self.series.order != self.ci.m + 1:
            raise ValueError("class must be truncated at order m+1")

    def coefficient(self, i):
        return self.series[i]

    def _lift(self, other):
        if isinstance(other, TruncClass):
            if other.ci != self.ci:
                raise ValueError("classes on different varieties")
            return other.series
        return other

    def __add__(self, other):
        return TruncClass(self.ci, self.series + self._lift(other))

    __radd__ = __add__

    def __mul__(self, other):
        return TruncClass(self.ci, self.series * self._lift(other))

    __rmul__ = __mul__

    def __sub__(self, other):
        return TruncClass(self.ci, self.series - self._lift(other))


def deg_cap(x):
    """Degree of the zero-cycle obtained by capping with the fundamental
    class: (coefficient of h^m) * deg V."""
    return x.series[x.ci.m] * x.ci.degree


def chern_cone_normal(ci):
    """Total Chern class of the cone normal bundle: prod (1 + (d_i-1) h)."""
    K = ci.m + 1
    s = TruncSeries.one(K)
    for d in ci.degrees:
        s = s * TruncSeries.truncated(K, [1, d - 1])
    return TruncClass(ci, s)


def chern_cone_tangent(ci):
    """Total Chern class of the rank-(m+1) cone tangent bundle, the
    series inverse of the cone normal class."""
    return TruncClass(ci, chern_cone_normal(ci).series.inverse())


def chern_tangent(ci):
    """Total Chern class of the tangent bundle.

    Computed by adjunction, (1+h)^(n+1) / prod(1 + d_i h), and checked
    on the spot against the twist route sum_j c_j(cone tangent)
    (1+h)^(m+1-j); a mismatch would mean an internal inconsistency.
    """
    K = ci.m + 1
    num = TruncSeries.truncated(K, [1, 1]) ** (ci.n + 1)
    den = TruncSeries.one(K)
    for d in ci.degrees:
        den = den * TruncSeries.truncated(K, [1, d])
    adjunction = num * den.inverse()

    cone = chern_cone_tangent(ci).series
    one_plus_h = TruncSeries.truncated(K, [1, 1])
    twist = TruncSeries.zero(K)
    for j in range(K):
        cj = TruncSeries.monomial(K, j, cone[j])
        twist = twist + cj * one_plus_h ** (ci.m + 1 - j)
    assert adjunction == twist, "tangent Chern class routes disagree"
    return TruncClass(ci, adjunction)


def todd_class(ci):
    """Todd class 1 + sum_i T_i(c_1..c_i) of the tangent Chern classes."""
    K = ci.m + 1
    c = chern_tangent(ci)
    total = TruncSeries.one(K)
    for i in range(1, K):
        values = {"c%d" % (j + 1): TruncSeries.monomial(K, j + 1, c.coefficient(j + 1))
                  for j in range(i)}
        total = total + todd_poly(i).substitute(values)
    return TruncClass(ci, total)


def euler_char_twist(ci, d):
    """chi(O_V(d)) = deg((e^{dh} td V)_m cap [V]); always an integer."""
    K = ci.m + 1
    expo = TruncSeries.monomial(K, 1, d).exp()
    value = deg_cap(TruncClass(ci, expo) * todd_class(ci))
    if value.denominator != 1:
        raise AssertionError("non-integral Euler characteristic %s" % value)
    return int(value)


def hilbert_poly_hrr(ci):
    """Hilbert polynomial with coefficients p_k = deg(h^k T_{m-k})/k!."""
    td = todd_class(ci)
    coeffs = []
    for k in range(ci.m + 1):
        coeffs.append(td.coefficient(ci.m - k) * ci.degree / math.factorial(k))
    return UniPoly(coeffs)


def euler_top(ci):
    """Topological Euler characteristic deg(c_m(TV) cap [V])."""
    value = deg_cap(chern_tangent(ci))
    assert value.denominator == 1
    return int(value)


def projective_character(ci, lam):
    """deg P_lam: degree of the polar degeneracy locus indexed by lam.

    Vanishes when lam_1 > n-m; the empty partition gives deg V.
    """
    if lam.size > ci.m:
        raise ValueError("|lambda| must be at most m")
    if lam.part(1) > ci.n - ci.m:
        return 0
    K = ci.m + 1
    normal = chern_cone_normal(ci).series
    upto = lam.part(1) + lam.length
    values = [TruncSeries.one(K)]
    values += [TruncSeries.monomial(K, i, normal[i]) if i < K else TruncSeries.zero(K)
               for i in range(1, upto + 1)]
    det = delta_det(lam, CoeffSeq(values, pad=True))
    value = det[lam.size] * ci.degree
    if value.denominator != 1 or value < 0:
        raise AssertionError("character %s -> %s is not a nonnegative integer"
                             % (lam, value))
    return int(value)


def character_table(ci):
    """deg P_mu for every mu with |mu| <= m and mu_1 <= n-m."""
    table = {}
    for size in range(ci.m + 1):
        for mu in enumerate_partitions(size, max_part=ci.n - ci.m):
            table[mu] = projective_character(ci, mu)
    return table


def hilbert_poly_characters(ci):
    """Hilbert polynomial assembled from delta tables and projective
    characters; checked against the Riemann-Roch route before returning."""
    chars = character_table(ci)
    coeffs = []
    for k in range(ci.m + 1):
        table = delta_table(ci.m, k, ci.n)
        pk = sum((value * chars[mu] for mu, value in table.entries.items()),
                 Fraction(0)) / math.factorial(k)
        scaled = scaling_factor(k, ci.m) * math.factorial(k) * pk
        if scaled.denominator != 1:
            raise AssertionError("scaled coefficient p_%d not integral" % k)
        coeffs.append(pk)
    poly = UniPoly(coeffs)
    hrr = hilbert_poly_hrr(ci)
    if poly != hrr:
        raise AssertionError("character route %r disagrees with Riemann-Roch %r"
                             % (poly, hrr))
    return poly


def ci_hilbert_series_oracle(ci):
    """Hilbert polynomial from the regular-sequence Hilbert series
    prod(1-t^{d_i})/(1-t)^{n+1} = Q(t)/(1-t)^{m+1} with
    Q = prod(1 + t + ... + t^{d_i-1}); independent of the Chern routes."""
    q = UniPoly.constant(1)
    for d in ci.degrees:
        q = q * UniPoly([1] * d)
    poly = UniPoly()
    for j in range(q.degree + 1):
        c = q.coefficient(j)
        if c:
            poly = poly + c * binom_poly(ci.m - j, ci.m)
    return poly


def generic_ci_ideal(ci, seed=0, coeff_bound=5):
    """Explicit dense homogeneous forms of the prescribed degrees with
    pseudo-random small integer coefficients (pinned by seed)."""
    rng = random.Random(seed)
    variables = tuple("x%d" % i for i in range(ci.n + 1))
    gens = []
    for d in ci.degrees:
        terms = {}
        for e in monomials_of_degree(ci.n + 1, d):
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[e] = Fraction(c)
        if not terms:
            terms[(d,) + (0,) * ci.n] = Fraction(1)
        gens.append(MultiPoly(variables, terms))
    return HomIdeal.from_polys(variables, gens)


def ci_grid(max_n, max_r, max_degree):
    """Deterministic enumeration of complete intersections with n <= max_n,
    r <= max_r, degrees as multisets from 1..max_degree."""
    import itertools
    out = []
    for n in range(max_n + 1):
        for r in range(min(max_r, n) + 1):
            for degs in itertools.combinations_with_replacement(
                    range(1, max_degree + 1), r):
                out.append(CompleteIntersection(n, tuple(sorted(degs, reverse=True))))
    return out
