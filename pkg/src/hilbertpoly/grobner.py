"""Classical commutative-algebra oracle: Buchberger Groebner bases,
normal forms, Hilbert series and polynomials of homogeneous ideals,
zero-dimensional solution counting, and ideal membership.

Conventions
-----------
* Default order is grevlex (smaller bases in practice); lex is
  available for elimination-style work.
* For a possibly non-radical input ideal I the Hilbert data computed is
  that of S/I as given, not of the vanishing ideal of its zero set.
* count_zero_dim counts points with multiplicity (vector-space
  dimension of the quotient); with generic data that is the geometric
  count.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .arith import ANY_DEGREE, MultiPoly, UniPoly, binom_poly, parse_poly


class ResourceCapExceeded(RuntimeError):
    """A configured basis-size or degree cap was hit mid-computation."""


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative well-order on monomials.

    kind is "grevlex" or "lex"; ranking optionally permutes variable
    priority (indices listed from most to least significant).
    """

    kind: str = "grevlex"
    ranking: tuple = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError("unknown order %r" % self.kind)

    def key(self, exp):
        if self.ranking is not None:
            exp = tuple(exp[i] for i in self.ranking)
        if self.kind == "lex":
            return tuple(exp)
        return (sum(exp), tuple(-e for e in reversed(exp)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))

def _mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))

def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def leading_term(f, order):
    """(exponent, coefficient) of the largest term; f must be nonzero."""
    exp = max(f.terms, key=order.key)
    return exp, f.terms[exp]


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class HomIdeal:
    """Ideal given by generators; homogeneous flag is verified, not trusted."""

    variables: tuple
    generators: tuple
    homogeneous: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        gens = []
        for g in self.generators:
            if g.variables != self.variables:
                raise ValueError("generator over wrong variables")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))
        hom = all(g.is_homogeneous() is not None for g in gens)
        object.__setattr__(self, "homogeneous", hom)

    @classmethod
    def from_polys(cls, variables, polys):
        return cls(tuple(variables), tuple(polys))


def parse_ideal_file(text):
    """Ideal file format: first line ``vars: x0 x1 ...``, one polynomial
    per line after that.  Blank lines and ``#`` comments are skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("vars:"):
        raise ValueError("ideal file must start with a 'vars:' line")
    variables = tuple(lines[0][len("vars:"):].split())
    if not variables:
        raise ValueError("empty variable list")
    polys = tuple(parse_poly(ln, variables) for ln in lines[1:])
    return HomIdeal.from_polys(variables, polys)


def ideal_file_text(ideal):
    out = ["vars: " + " ".join(ideal.variables)]
    out.extend(g.to_text() for g in ideal.generators)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Buchberger


def _monic(f, order):
    _, c = leading_term(f, order)
    return f * (Fraction(1) / c)


def _spoly(f, lf, g, lg, order):
    u = _mono_lcm(lf, lg)
    a = MultiPoly(f.variables, {_mono_div(u, lf): Fraction(1)})
    b = MultiPoly(g.variables, {_mono_div(u, lg): Fraction(1)})
    return a * f - b * g


def _normal_form_terms(fterms, basis, order, variables):
    """Full reduction of a term dict against [(lt, poly)]; returns a dict."""
    work = dict(fterms)
    out = {}
    while work:
        exp = max(work, key=order.key)
        coeff = work.pop(exp)
        if not coeff:
            continue
        hit = None
        for lt, g in basis:
            if _mono_divides(lt, exp):
                hit = (lt, g)
                break
        if hit is None:
            out[exp] = out.get(exp, Fraction(0)) + coeff
            continue
        lt, g = hit
        shift = _mono_div(exp, lt)
        for e2, c2 in g.terms.items():
            if e2 == lt:
                continue  # cancels exactly against the popped term
            e = _mono_mul(shift, e2)
            v = work.get(e, Fraction(0)) - coeff * c2
            if v:
                work[e] = v
            elif e in work:
                del work[e]
    return out


def normal_form(f, basis_polys, order=GREVLEX):
    """Remainder of f under full division by the given polynomials."""
    basis = [(leading_term(g, order)[0], _monic(g, order))
             for g in basis_polys if g]
    terms = _normal_form_terms(f.terms, basis, order, f.variables)
    return MultiPoly(f.variables, terms)


def buchberger(generators, order=GREVLEX, max_basis=None, max_degree=None):
    """Reduced Groebner basis of the given generators.

    Pair handling uses the coprimality and chain criteria; resource
    caps abort with ResourceCapExceeded instead of exhausting memory.
    """
    G = []
    for g in generators:
        if g:
            G.append(_monic(g, order))
    lts = [leading_term(g, order)[0] for g in G]

    def check_caps(poly=None):
        if max_basis is not None and len(G) > max_basis:
            raise ResourceCapExceeded("basis size exceeded %d" % max_basis)
        if max_degree is not None and poly is not None:
            d = poly.total_degree()
            if d is not None and d > max_degree:
                raise ResourceCapExceeded("degree exceeded %d" % max_degree)

    heap = []
    for i in range(len(G)):
        for j in range(i):
            heapq.heappush(heap, (order.key(_mono_lcm(lts[i], lts[j])), i, j))
    done = set()
    while heap:
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        u = _mono_lcm(lts[i], lts[j])
        # coprime criterion
        if u == _mono_mul(lts[i], lts[j]):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _mono_divides(lts[k], u):
                continue
            a = (max(i, k), min(i, k))
            b = (max(j, k), min(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        s = _spoly(G[i], lts[i], G[j], lts[j], order)
        r = MultiPoly(s.variables,
                      _normal_form_terms(s.terms, list(zip(lts, G)), order, s.variables))
        if not r:
            continue
        r = _monic(r, order)
        check_caps(r)
        t = len(G)
        G.append(r)
        lts.append(leading_term(r, order)[0])
        check_caps()
        for k in range(t):
            heapq.heappush(heap, (order.key(_mono_lcm(lts[t], lts[k])), t, k))
    return _autoreduce(G, order)


def _autoreduce(G, order):
    # drop elements whose lead is divisible by another lead, then fully
    # reduce each survivor against the others
    G = list(G)
    changed = True
    while changed:
        changed = False
        lts = [leading_term(g, order)[0] for g in G]
        keep = []
        for i, g in enumerate(G):
            if any(j != i and _mono_divides(lts[j], lts[i]) and
                   (not _mono_divides(lts[i], lts[j]) or j < i)
                   for j in range(len(G))):
                changed = True
                continue
            keep.append(g)
        G = keep
    out = []
    for i, g in enumerate(G):
        others = [(leading_term(h, order)[0], h) for j, h in enumerate(G) if j != i]
        r = MultiPoly(g.variables, _normal_form_terms(g.terms, others, order, g.variables))
        assert r, "reduced basis element vanished"
        out.append(_monic(r, order))
    out.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return out


@dataclass(frozen=True)
class GrobnerBasis:
    """Reduced, monic, auto-reduced basis under a fixed monomial order."""

    order: MonomialOrder
    elements: tuple

    @classmethod
    def of(cls, ideal_or_polys, order=GREVLEX, max_basis=None, max_degree=None):
        polys = (ideal_or_polys.generators
                 if isinstance(ideal_or_polys, HomIdeal) else tuple(ideal_or_polys))
        basis = buchberger(polys, order, max_basis=max_basis, max_degree=max_degree)
        return cls(order=order, elements=tuple(basis))

    def leading_exponents(self):
        return [leading_term(g, self.order)[0] for g in self.elements]

    def normal_form(self, f):
        return normal_form(f, self.elements, self.order)

    def contains(self, f):
        return not self.normal_form(f)


def in_ideal(f, ideal, order=GREVLEX, **caps):
    """Membership by normal form against a reduced basis."""
    return GrobnerBasis.of(ideal, order, **caps).contains(f)


# ---------------------------------------------------------------------------
# Hilbert series / function / polynomial


def _minimal_monomials(exps):
    exps = sorted(set(exps), key=sum)
    out = []
    for e in exps:
        if not any(_mono_divides(m, e) for m in out):
            out.append(e)
    return out


def hilbert_series_monomial(exps, nvars):
    """Numerator Q(t) with HS_{S/L}(t) = Q(t)/(1-t)^nvars for the monomial
    ideal L generated by the given exponent vectors."""
    gens = _minimal_monomials([tuple(e) for e in exps])

    def rec(gens):
        if not gens:
            return UniPoly.constant(1)
        if any(sum(g) == 0 for g in gens):
            return UniPoly()
        # find a variable shared by some pair of generators
        pivot = None
        for a, b in itertools.combinations(gens, 2):
            for v in range(nvars):
                if a[v] and b[v]:
                    pivot = v
                    break
            if pivot is not None:
                break
        if pivot is None:
            # pairwise coprime: Koszul-type product formula
            q = UniPoly.constant(1)
            for g in gens:
                term = [Fraction(0)] * (sum(g) + 1)
                term[0], term[-1] = Fraction(1), Fraction(-1)
                q = q * UniPoly(term)
            return q
        xv = tuple(int(i == pivot) for i in range(nvars))
        plus = _minimal_monomials([xv] + [g for g in gens if g[pivot] == 0])
        colon = _minimal_monomials(
            [tuple(e - 1 if i == pivot else e for i, e in enumerate(g)) if g[pivot]
             else g for g in gens])
        t = UniPoly([0, 1])
        return rec(plus) + t * rec(colon)

    return rec(gens)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator (over (1-t)^nvars), Hilbert polynomial,
    and the first degree from which function and polynomial agree."""

    nvars: int
    series_numerator: UniPoly
    hilbert_polynomial: UniPoly
    index_of_regularity: int

    def hilbert_function(self, k):
        """dim of the degree-k graded piece, read off the series."""
        if k < 0:
            return 0
        total = Fraction(0)
        for j in range(min(k, self.series_numerator.degree) + 1):
            total += (self.series_numerator.coefficient(j)
                      * binom_poly(self.nvars - 1 - j, self.nvars - 1)(k))
        assert total.denominator == 1 and total >= 0
        return int(total)


def _hilbert_data_from_numerator(q, nvars):
    qbar = q
    cancelled = 0
    while qbar and qbar(1) == 0:
        qbar = qbar.divide_by_one_minus_t()
        cancelled += 1
    D = nvars - cancelled
    if not qbar:
        poly = UniPoly()
        return HilbertData(nvars, q, poly, 0)
    if D <= 0:
        poly = UniPoly()
    else:
        poly = UniPoly()
        for j in range(qbar.degree + 1):
            c = qbar.coefficient(j)
            if c:
                poly = poly + c * binom_poly(D - 1 - j, D - 1)

    # function and polynomial agree for all k > deg(qbar); scan downwards
    reg = qbar.degree + 1
    hvals = _expand_series(qbar, D, qbar.degree + 1)
    while reg > 0 and hvals[reg - 1] == poly(reg - 1):
        reg -= 1
    return HilbertData(nvars, q, poly, reg)


def _expand_series(qbar, D, upto):
    """First upto+1 coefficients of qbar(t)/(1-t)^D."""
    coeffs = [qbar.coefficient(j) for j in range(upto + 1)]
    for _ in range(D):
        acc = Fraction(0)
        for k in range(upto + 1):
            acc += coeffs[k]
            coeffs[k] = acc
    return coeffs


def hilbert_data(ideal, order=GREVLEX, max_basis=None, max_degree=None):
    """Hilbert data of S/I for a homogeneous ideal I, via the standard
    reduction to the leading-term ideal of a Groebner basis."""
    if not ideal.homogeneous:
        raise ValueError("hilbert_data needs a homogeneous ideal")
    gb = GrobnerBasis.of(ideal, order, max_basis=max_basis, max_degree=max_degree)
    q = hilbert_series_monomial(gb.leading_exponents(), len(ideal.variables))
    return _hilbert_data_from_numerator(q, len(ideal.variables))


def monomials_of_degree(nvars, k):
    """All exponent vectors of total degree k (deterministic order)."""
    if nvars == 0:
        return [()] if k == 0 else []
    out = []
    for head in range(k, -1, -1):
        for tail in monomials_of_degree(nvars - 1, k - head):
            out.append((head,) + tail)
    return out


def hilbert_function_direct(ideal, k):
    """dim (S/I)_k by the rank of the span of monomial multiples of the
    generators; independent of any Groebner machinery."""
    if not ideal.homogeneous:
        raise ValueError("needs a homogeneous ideal")
    nvars = len(ideal.variables)
    monos = monomials_of_degree(nvars, k)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in ideal.generators:
        d = g.is_homogeneous()
        if d is ANY_DEGREE or d > k:
            continue
        for shift in monomials_of_degree(nvars, k - d):
            row = [Fraction(0)] * len(monos)
            for e, c in g.terms.items():
                row[col[_mono_mul(shift, e)]] = c
            rows.append(row)
    return len(monos) - (linalg.rank(rows) if rows else 0)


INFINITE = float("inf")


def count_zero_dim(gens, order=GREVLEX, max_basis=None, max_degree=None):
    """Number of common zeros (with multiplicity) of an affine system,
    or INFINITE when the staircase is infinite."""
    gens = [g for g in gens if g]
    if not gens:
        return INFINITE
    nvars = len(gens[0].variables)
    if nvars == 0:
        return 0
    gb = GrobnerBasis.of(gens, order, max_basis=max_basis, max_degree=max_degree)
    lts = gb.leading_exponents()
    if not lts:
        return INFINITE
    bounds = []
    for v in range(nvars):
        pure = [e[v] for e in lts if all(x == 0 for i, x in enumerate(e) if i != v)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for exp in itertools.product(*(range(b) for b in bounds)):
        if not any(_mono_divides(lt, exp) for lt in lts):
            count += 1
    return count


def fresh_variable(variables):
    if "y" not in variables:
        return "y"
    k = 2
    while "y%d" % k in variables:
        k += 1
    return "y%d" % k


def membership_via_hilbert(ideal, g, order=GREVLEX, max_basis=None, max_degree=None):
    """Decide g in I by comparing Hilbert polynomials of I and I+(g)
    after adjoining a fresh variable (which is then a non-zero-divisor
    modulo the extended ideal, making the comparison conclusive)."""
    d = g.is_homogeneous()
    if d is None or d is ANY_DEGREE or d == 0:
        raise ValueError("g must be non-constant homogeneous")
    if not ideal.homogeneous:
        raise ValueError("needs a homogeneous ideal")
    y = fresh_variable(ideal.variables)
    newvars = ideal.variables + (y,)
    ext = [p.extend_variables(newvars) for p in ideal.generators]
    base = HomIdeal.from_polys(newvars, ext)
    extended = HomIdeal.from_polys(newvars, ext + [g.extend_variables(newvars)])
    caps = dict(order=order, max_basis=max_basis, max_degree=max_degree)
    pa = hilbert_data(base, **caps).hilbert_polynomial
    pb = hilbert_data(extended, **caps).hilbert_polynomial
    return pa == pb
