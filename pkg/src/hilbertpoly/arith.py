"""Exact arithmetic substrate: sparse multivariate polynomials, dense
univariate polynomials, and truncated power series, all over Q.

Values are immutable after construction; every operation is a pure
function, so they are safe to share between threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

# Homogeneity degree reported for the zero polynomial, which is
# homogeneous of every degree.
ANY_DEGREE = "any"


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed."""


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Multivariate polynomials


class MultiPoly:
    """Sparse multivariate polynomial over Q.

    ``terms`` maps exponent tuples (length = number of variables) to
    nonzero rational coefficients.  No zero coefficient is ever stored,
    so equality is structural.
    """

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        for exp, c in terms.items():
            c = frac(c)
            if not c:
                continue
            exp = tuple(exp)
            if len(exp) != nv or any(e < 0 for e in exp):
                raise ValueError("exponent vector %r does not fit %d variables" % (exp, nv))
            clean[exp] = c
        self.terms = clean
        self._hash = None

    # -- constructors

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): frac(c)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: Fraction(1)})

    # -- ring structure

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("variable-list mismatch: %r vs %r"
                                 % (self.variables, other.variables))
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly)
                and self.variables == other.variables
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return "MultiPoly(%r)" % self.to_text()

    # -- queries

    def total_degree(self):
        """Largest total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        """Common total degree of all terms, ANY_DEGREE for 0, None if mixed."""
        if not self.terms:
            return ANY_DEGREE
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    # -- calculus / substitution

    def partial(self, name):
        """Partial derivative with respect to the named variable."""
        i = self.variables.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            e = list(exp)
            e[i] -= 1
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + c * exp[i]
        return MultiPoly(self.variables, terms)

    def eval_point(self, values):
        """Evaluate at a rational point (sequence aligned with variables)."""
        values = [frac(v) for v in values]
        if len(values) != len(self.variables):
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for exp, c in self.terms.items():
            t = c
            for v, e in zip(values, exp):
                if e:
                    t *= v ** e
            total += t
        return total

    def substitute(self, mapping):
        """Substitute every variable by a value from any commutative ring.

        Values must support +, * and ** with Fractions mixed in; the
        result is whatever ring the values live in (a plain Fraction
        when the polynomial is constant or zero).
        """
        missing = [v for v in self.variables if v not in mapping]
        if missing:
            raise ValueError("no substitution value for %r" % missing)
        total = Fraction(0)
        for exp, c in self.terms.items():
            t = c
            for name, e in zip(self.variables, exp):
                if e:
                    t = t * mapping[name] ** e
            total = total + t
        return total

    def set_variable(self, name, value):
        """Fix one variable to a rational value; drops it from the list."""
        i = self.variables.index(name)
        value = frac(value)
        newvars = self.variables[:i] + self.variables[i + 1:]
        terms = {}
        for exp, c in self.terms.items():
            e = exp[:i] + exp[i + 1:]
            terms[e] = terms.get(e, Fraction(0)) + c * value ** exp[i]
        return MultiPoly(newvars, terms)

    def extend_variables(self, newvars):
        """Re-express over a variable superset (order given by newvars)."""
        newvars = tuple(newvars)
        pos = {name: newvars.index(name) for name in self.variables}
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * len(newvars)
            for name, d in zip(self.variables, exp):
                e[pos[name]] = d
            terms[tuple(e)] = c
        return MultiPoly(newvars, terms)

    # -- text format

    def to_text(self):
        """Render in the ideal-file format, e.g. ``3/2*x0^2*x1 - x2^3``."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        pieces = []
        for i, (exp, c) in enumerate(items):
            factors = []
            for name, e in zip(self.variables, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)


_NUM_FACTOR = re.compile(r"^(\d+)(?:/(\d+))?$")
_VAR_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^(\d+))?$")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*")


def _variable_sort_key(name):
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        return (0, int(m.group(1)), name)
    if name == "y":
        return (1, 0, name)
    return (2, 0, name)


def parse_poly(text, variables=None):
    """Parse the polynomial text format; inverse of MultiPoly.to_text.

    With variables=None the variable list is inferred from the text
    (x0 < x1 < ... < y).
    """
    s = "".join(text.split())
    if not s:
        raise PolyParseError("empty polynomial text")
    if variables is None:
        names = set(_NAME.findall(s))
        variables = sorted(names, key=_variable_sort_key)
    variables = tuple(variables)

    # split into signed terms on top-level + and -
    chunks = []
    sign = 1
    cur = ""
    for ch in s:
        if ch not in "+-":
            cur += ch
        elif cur:
            chunks.append((sign, cur))
            cur = ""
            sign = 1 if ch == "+" else -1
        elif not chunks:
            sign *= 1 if ch == "+" else -1  # leading sign
        else:
            raise PolyParseError("dangling sign in %r" % text)
    if not cur:
        raise PolyParseError("trailing operator in %r" % text)
    chunks.append((sign, cur))

    poly = MultiPoly.zero(variables)
    index = {name: i for i, name in enumerate(variables)}
    for sign, body in chunks:
        coeff = Fraction(sign)
        exp = [0] * len(variables)
        for factor in body.split("*"):
            m = _NUM_FACTOR.match(factor)
            if m:
                num, den = m.group(1), m.group(2)
                coeff *= Fraction(int(num), int(den) if den else 1)
                continue
            m = _VAR_FACTOR.match(factor)
            if m:
                name, e = m.group(1), m.group(2)
                if name not in index:
                    raise PolyParseError("unknown variable %r" % name)
                exp[index[name]] += int(e) if e else 1
                continue
            raise PolyParseError("bad factor %r in %r" % (factor, text))
        poly = poly + MultiPoly(variables, {tuple(exp): coeff})
    return poly


# ---------------------------------------------------------------------------
# Dense univariate polynomials


class UniPoly:
    """Dense univariate polynomial over Q; coefficient index = degree."""

    def __init__(self, coeffs=()):
        coeffs = [frac(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def variable(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        x = frac(x)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "UniPoly(%r)" % (self.to_text(),)

    def divide_by_one_minus_t(self):
        """Exact division by (1 - t); requires self(1) == 0."""
        if self(1) != 0:
            raise ValueError("not divisible by 1-t")
        # p = (1-t) q  =>  q_k = sum_{j<=k} p_j
        out = []
        acc = Fraction(0)
        for c in self.coeffs[:-1] if self.coeffs else []:
            acc += c
            out.append(acc)
        return UniPoly(out)

    def to_text(self, var="T"):
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = var if k == 1 else "%s^%d" % (var, k)
                body = mono if abs(c) == 1 else "%s*%s" % (abs(c), mono)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)


def binom_poly(shift, n):
    """The degree-n polynomial (T+shift)(T+shift-1)...(T+shift-n+1)/n!.

    Takes the value C(k+shift, n) at integer T = k.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    p = UniPoly.constant(1)
    t = UniPoly.variable()
    for k in range(n):
        p = p * (t + (shift - k))
    return p * Fraction(1, math.factorial(n))


# ---------------------------------------------------------------------------
# Truncated power series


class TruncSeries:
    """Univariate power series truncated modulo h^K (order K, K coefficients).

    Mixing different orders in one operation is an error; truncation is
    never silent.
    """

    def __init__(self, order, coeffs):
        if order < 1:
            raise ValueError("order must be >= 1")
        coeffs = [frac(c) for c in coeffs]
        if len(coeffs) != order:
            raise ValueError("need exactly %d coefficients, got %d" % (order, len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_coeffs(cls, order, coeffs):
        """Build from at most `order` leading coefficients, zero-padded."""
        coeffs = list(coeffs)
        if len(coeffs) > order:
            raise ValueError("coefficient list longer than order; truncate explicitly")
        coeffs += [Fraction(0)] * (order - len(coeffs))
        return cls(order, coeffs)

    @classmethod
    def truncated(cls, order, coeffs):
        """Build by explicitly discarding coefficients past the order."""
        return cls.from_coeffs(order, list(coeffs)[:order])

    @classmethod
    def zero(cls, order):
        return cls(order, [Fraction(0)] * order)

    @classmethod
    def one(cls, order):
        return cls.monomial(order, 0)

    @classmethod
    def monomial(cls, order, i, c=1):
        """The series c * h^i (zero when i >= order)."""
        coeffs = [Fraction(0)] * order
        if i < order:
            coeffs[i] = frac(c)
        return cls(order, coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError("truncation order mismatch: %d vs %d"
                                 % (self.order, other.order))
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.monomial(self.order, 0, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            return TruncSeries(self.order, [c * v for v in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        K = self.order
        out = [Fraction(0)] * K
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(K - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(K, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = TruncSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse modulo h^K; needs a nonzero constant term."""
        if not self.coeffs[0]:
            raise ValueError("series with zero constant term is not invertible")
        K = self.order
        inv = [Fraction(1) / self.coeffs[0]]
        for k in range(1, K):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv.append(-s / self.coeffs[0])
        return TruncSeries(K, inv)

    def exp(self):
        """exp of a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        result = TruncSeries.one(self.order)
        term = TruncSeries.one(self.order)
        for k in range(1, self.order):
            term = term * self * Fraction(1, k)
            result = result + term
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TruncSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "TruncSeries(%d, %r)" % (self.order, [str(c) for c in self.coeffs])
