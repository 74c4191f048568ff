"""Symmetric-function engine: Jacobi-Trudi-shaped determinants, the
Bernoulli-derived b-sequence, Todd and Chern-character polynomials,
Schur evaluation, binomial-determinant shift coefficients, and the
delta tables that assemble Hilbert coefficients from projective
characters.

Sign convention: bernoulli(n) returns the all-positive values
B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...  (the alternating signs live in
the series t/(1 - e^{-t}) itself, whose even coefficients are
b_{2j} = (-1)^{j-1} B_j / (2j)!).  Modern references instead attach the
sign to the Bernoulli number; conversions must keep that in mind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .arith import MultiPoly, frac
from .partitions import enumerate_partitions


class CoeffSeq:
    """Coefficient sequence c_0 = 1, c_1, c_2, ... over a commutative ring.

    Negative indices read as the ring zero.  Reads past the stored
    values raise unless the sequence was built with pad=True (used for
    Chern-class sequences, which genuinely vanish beyond the stored
    range).
    """

    def __init__(self, values, pad=False):
        values = list(values)
        if not values:
            raise ValueError("need at least the leading 1")
        self.values = values
        self.one = values[0]
        self.zero = self.one - self.one
        self.pad = pad
        if isinstance(self.one, Fraction) and self.one != 1:
            raise ValueError("leading value must be the ring one")

    def __getitem__(self, i):
        if i < 0:
            return self.zero
        if i >= len(self.values):
            if self.pad:
                return self.zero
            raise IndexError("coefficient %d beyond stored range %d" % (i, len(self.values)))
        return self.values[i]

    def dual(self):
        """The sequence c^v with c^v_i = (-1)^i c_i."""
        return CoeffSeq([v if i % 2 == 0 else -v for i, v in enumerate(self.values)],
                        pad=self.pad)


def delta_det(lam, c):
    """det((c_{lam_i - i + j})_{1<=i,j<=r}) with c_i = 0 for i < 0.

    The empty partition gives the ring one; padding lam with zeros does
    not change the value.
    """
    r = lam.length
    if r == 0:
        return c.one
    rows = [[c[lam.part(i) - i + j] for j in range(1, r + 1)] for i in range(1, r + 1)]
    if all(isinstance(x, Fraction) for row in rows for x in row):
        return linalg.det(rows)
    return linalg.det_ring(rows, c.one)


@lru_cache(maxsize=None)
def bernoulli(n):
    """All-positive Bernoulli number (1/6, 1/30, 1/42, ...) by double sum.

    B_n = (-1)^(n-1) * sum_{k=1}^{2n} 1/(k+1) sum_{r=1}^{k} (-1)^r C(k,r) r^(2n).
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    total = Fraction(0)
    for k in range(1, 2 * n + 1):
        inner = sum((-1) ** r * math.comb(k, r) * r ** (2 * n) for r in range(1, k + 1))
        total += Fraction(inner, k + 1)
    return (-1) ** (n - 1) * total


def b_sequence(K):
    """Coefficients b_0..b_K of t/(1 - e^{-t}) as a CoeffSeq.

    b_0 = 1, b_1 = 1/2, b_{2j} = (-1)^(j-1) B_j/(2j)!, b_odd = 0 past b_1.
    """
    values = [Fraction(1)]
    if K >= 1:
        values.append(Fraction(1, 2))
    for i in range(2, K + 1):
        if i % 2:
            values.append(Fraction(0))
        else:
            j = i // 2
            values.append((-1) ** (j - 1) * bernoulli(j) / math.factorial(i))
    return CoeffSeq(values)


def _chern_vars(m):
    return tuple("c%d" % i for i in range(1, m + 1))


def chern_coeff_seq(m):
    """CoeffSeq (1, c_1, ..., c_m) of formal Chern variables."""
    names = _chern_vars(m)
    values = [MultiPoly.constant(names, 1)]
    values += [MultiPoly.variable(names, name) for name in names]
    return CoeffSeq(values, pad=True)


@lru_cache(maxsize=None)
def todd_poly(m):
    """m-th Todd polynomial in c_1..c_m via the determinantal formula
    T_m = sum over |lam| = m of Delta_{lam'}(b) Delta_lam(c).

    T_1 = c1/2, T_2 = (c1^2 + c2)/12, T_3 = c1*c2/24, ...
    """
    names = _chern_vars(m)
    if m == 0:
        return MultiPoly.constant(names, 1)
    b = b_sequence(m)
    c = chern_coeff_seq(m)
    total = MultiPoly.zero(names)
    for lam in enumerate_partitions(m):
        coeff = delta_det(lam.conjugate(), b)
        if coeff:
            total = total + coeff * delta_det(lam, c)
    return total


@lru_cache(maxsize=None)
def chern_character_poly(i):
    """K_i = (i-th power sum in the Chern roots)/i!, in c_1..c_i.

    Newton's identities convert power sums to elementary symmetric
    functions, here the formal c_j.
    """
    if i < 1:
        raise ValueError("defined for i >= 1")
    names = _chern_vars(i)
    e = [MultiPoly.constant(names, 1)] + [MultiPoly.variable(names, nm) for nm in names]
    p = [None] * (i + 1)
    for k in range(1, i + 1):
        acc = MultiPoly.constant(names, (-1) ** (k - 1) * k) * e[k]
        for j in range(1, k):
            acc = acc + (-1) ** (j - 1) * (e[j] * p[k - j])
        p[k] = acc
    return p[i] * Fraction(1, math.factorial(i))


def complete_homogeneous_values(gamma, upto):
    """h_0..h_upto evaluated at the points gamma, via the product rule
    H_j(k) = H_{j-1}(k) + gamma_j H_j(k-1)."""
    h = [Fraction(1)] + [Fraction(0)] * upto
    for g in gamma:
        for k in range(1, upto + 1):
            h[k] += g * h[k - 1]
    return h


def elementary_symmetric_values(gamma, upto):
    """e_0..e_upto evaluated at the points gamma (zero past len(gamma))."""
    e = [Fraction(1)] + [Fraction(0)] * upto
    for g in gamma:
        for k in range(min(upto, len(gamma)), 0, -1):
            e[k] += g * e[k - 1]
    return e


def schur_eval(lam, gamma):
    """Value of the Schur polynomial s_lam at rational points gamma.

    Uses the bialternant quotient when the points are pairwise
    distinct, otherwise Jacobi-Trudi on complete homogeneous values.
    The standard extension to any lam of length <= len(gamma) is used.
    """
    gamma = [frac(g) for g in gamma]
    m = len(gamma)
    if lam.length > m:
        raise ValueError("partition longer than the number of points")
    if len(set(gamma)) == m:
        num = [[gamma[i] ** (lam.part(j + 1) + m - 1 - j) for j in range(m)]
               for i in range(m)]
        den = [[gamma[i] ** (m - 1 - j) for j in range(m)] for i in range(m)]
        return linalg.det(num) / linalg.det(den)
    upto = lam.part(1) + lam.length
    h = CoeffSeq(complete_homogeneous_values(gamma, max(upto, 1)))
    return delta_det(lam, h)


def d_coeff(lam, mu, m):
    """Binomial determinant det C(lam_i+m+1-i, mu_j+m+1-j), size m x m."""
    if lam.length > m or mu.length > m:
        raise ValueError("partitions must have length <= m")
    if m == 0:
        return 1
    rows = [[Fraction(math.comb(lam.part(i) + m + 1 - i, mu.part(j) + m + 1 - j))
             for j in range(1, m + 1)] for i in range(1, m + 1)]
    value = linalg.det(rows)
    assert value.denominator == 1
    return int(value)


def scaling_factor(k, m):
    """N(k,m) = [(m-k+1)! (m-k)! ... 2! 1!]^2."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    prod = 1
    for i in range(1, m - k + 2):
        prod *= math.factorial(i)
    return prod * prod


def delta_coeff(m, k, mu):
    """delta^{m,k}_mu = (-1)^|mu| sum over lam of size m-k containing mu
    of Delta_lam(b) d^m_{lam,mu}."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if mu.size > m - k:
        raise ValueError("need |mu| <= m-k")
    b = b_sequence(max(m, 1))
    total = Fraction(0)
    for lam in enumerate_partitions(m - k, max_len=max(m, 1), containing=mu):
        total += delta_det(lam, b) * d_coeff(lam, mu, m)
    return (-1) ** mu.size * total


@dataclass(frozen=True)
class DeltaTable:
    """All delta^{m,k}_mu with |mu| <= m-k and mu_1 <= n-m."""

    m: int
    k: int
    n: int
    entries: dict

    def __post_init__(self):
        N = scaling_factor(self.k, self.m)
        for mu, value in self.entries.items():
            if mu.size > self.m - self.k:
                raise ValueError("entry %s too large for (m,k)" % mu)
            if (N * value).denominator != 1:
                raise AssertionError("scaled entry %s -> %s not integral" % (mu, value))


def delta_table(m, k, n):
    entries = {}
    for size in range(m - k + 1):
        for mu in enumerate_partitions(size, max_part=n - m):
            entries[mu] = delta_coeff(m, k, mu)
    return DeltaTable(m=m, k=k, n=n, entries=entries)
