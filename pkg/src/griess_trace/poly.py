"""Exact sparse multivariate polynomials and rational functions over Q.

Monomials are ordered degree-lexicographically: first by total degree, ties
broken by exponent tuples read left to right, with the variable tuple fixing
the priority (``('c', 'd')`` puts c before d).  Rational functions are kept
reduced (numerator and denominator coprime) with the denominator normalized
to a positive leading coefficient in that order, so string forms are stable
and usable as golden data.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Polynomial:
    """Sparse polynomial: dict from exponent tuples to nonzero Fractions."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value, vars=()):
        value = _as_fraction(value)
        zero = (0,) * len(vars)
        return cls(vars, {zero: value} if value else {})

    @classmethod
    def variable(cls, name, vars):
        vars = tuple(vars)
        e = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name!r} not among {vars}")
        return cls(vars, {e: Fraction(1)})

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        (e, c), = self.terms.items()
        if any(x != 0 for x in e):
            raise ValueError("not a constant polynomial")
        return c

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    @staticmethod
    def _key(e):
        return (sum(e), e)

    def leading(self):
        """Leading (exponent, coefficient) in deg-lex order."""
        e = max(self.terms, key=self._key)
        return e, self.terms[e]

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- variable alignment --------------------------------------------

    def with_vars(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v not in vars:
                if self.degree_in(v) > 0:
                    raise ValueError(f"cannot drop live variable {v!r}")
                idx.append(None)
            else:
                idx.append(vars.index(v))
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for j, x in enumerate(e):
                if x:
                    ne[idx[j]] = x
            key = tuple(ne)
            terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(vars, terms)

    @staticmethod
    def _aligned(p, q):
        if p.vars == q.vars:
            return p, q
        merged = tuple(sorted(set(p.vars) | set(q.vars)))
        return p.with_vars(merged), q.with_vars(merged)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        p, q = self._aligned(self, other)
        terms = dict(p.terms)
        for e, c in q.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(p.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Polynomial(self.vars, {e: v * c for e, v in self.terms.items()})
        p, q = self._aligned(self, other)
        terms = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(p.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        p, q = self._aligned(self, other)
        return p.terms == q.terms

    # -- evaluation / substitution ---------------------------------------

    def evaluate(self, values):
        """Evaluate with a dict var -> Fraction; all variables must be set."""
        result = Fraction(0)
        vals = [ _as_fraction(values[v]) for v in self.vars ]
        for e, c in self.terms.items():
            t = c
            for x, v in zip(e, vals):
                if x:
                    t *= v ** x
            result += t
        return result

    def substitute(self, values):
        """Partial substitution var -> Fraction, keeping other variables."""
        keep = tuple(v for v in self.vars if v not in values)
        terms = {}
        for e, c in self.terms.items():
            t = c
            ne = []
            for v, x in zip(self.vars, e):
                if v in values:
                    if x:
                        t *= _as_fraction(values[v]) ** x
                else:
                    ne.append(x)
            key = tuple(ne)
            terms[key] = terms.get(key, Fraction(0)) + t
        return Polynomial(keep, terms)

    def derivative(self, var):
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                key = tuple(ne)
                terms[key] = terms.get(key, Fraction(0)) + c * e[i]
        return Polynomial(self.vars, terms)

    # -- univariate views -------------------------------------------------

    def main_var(self):
        """First variable (in self.vars order) that actually occurs."""
        for v in self.vars:
            if self.degree_in(v) > 0:
                return v
        return None

    def coeffs_in(self, var):
        """List of Polynomial coefficients [a_0, ..., a_deg] in var."""
        i = self.vars.index(var)
        rest = tuple(v for v in self.vars if v != var)
        deg = self.degree_in(var)
        coeffs = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            ne = tuple(x for j, x in enumerate(e) if j != i)
            d = coeffs[e[i]]
            d[ne] = d.get(ne, Fraction(0)) + c
        return [Polynomial(rest, d) for d in coeffs]

    @staticmethod
    def from_coeffs(coeffs, var, vars):
        """Inverse of coeffs_in: rebuild from coefficient list in var."""
        vars = tuple(vars)
        i = vars.index(var)
        terms = {}
        for k, p in enumerate(coeffs):
            p = p.with_vars(tuple(v for v in vars if v != var))
            for e, c in p.terms.items():
                ne = list(e)
                ne.insert(i, k)
                key = tuple(ne)
                terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(vars, terms)

    # -- printing --------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=self._key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{x}" if x > 1 else v
                for v, x in zip(self.vars, e) if x
            )
            if mono:
                if c == 1:
                    piece = mono
                elif c == -1:
                    piece = f"-{mono}"
                else:
                    piece = f"{c}*{mono}"
            else:
                piece = str(c)
            if out and not piece.startswith("-"):
                out.append("+" + piece)
            else:
                out.append(piece)
        return "".join(out)


# -- gcd machinery ---------------------------------------------------------


def _content_q(p):
    """Rational content: gcd of numerators / lcm of denominators, sign of lead."""
    if p.is_zero():
        return Fraction(0)
    from math import gcd, lcm
    nums = 0
    dens = 1
    for c in p.terms.values():
        nums = gcd(nums, abs(c.numerator))
        dens = lcm(dens, c.denominator)
    cont = Fraction(nums, dens)
    _, lead = p.leading()
    return cont if lead > 0 else -cont


def _poly_divexact(p, q):
    """Exact division p / q (raises if not exact)."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p, q = Polynomial._aligned(p, q)
    if q.is_constant():
        inv = 1 / q.constant_value()
        return Polynomial(p.vars, {e: c * inv for e, c in p.terms.items()})
    var = q.main_var()
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    dq = len(qc) - 1
    out = [Polynomial.constant(0, ()) for _ in range(max(len(pc) - dq, 0))]
    rem = pc
    for k in range(len(pc) - dq - 1, -1, -1):
        top = rem[k + dq]
        if top.is_zero():
            continue
        f = _poly_divexact(top, qc[dq])
        out[k] = f
        for j in range(dq + 1):
            rem[k + j] = rem[k + j] - f * qc[j]
    if any(not r.is_zero() for r in rem):
        raise ValueError("inexact polynomial division")
    return Polynomial.from_coeffs(out, var, p.vars)


def poly_gcd(p, q):
    """GCD over Q, normalized with content 1 and positive leading coefficient."""
    p, q = Polynomial._aligned(p, q)
    g = _gcd_rec(p, q)
    if g.is_zero():
        return g
    return _poly_divexact(g, Polynomial.constant(_content_q(g), g.vars))


def _gcd_rec(p, q):
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_constant() or q.is_constant():
        return Polynomial.constant(1, p.vars)
    var = p.main_var()
    if q.degree_in(var) == 0:
        # p lives in var, q does not: gcd splits through contents
        return _gcd_rec(_poly_content(p, var), q)
    # primitive PRS in var
    a_cont = _poly_content(p, var)
    b_cont = _poly_content(q, var)
    a = _poly_divexact(p, a_cont)
    b = _poly_divexact(q, b_cont)
    cont = _gcd_rec(a_cont, b_cont)
    while True:
        if b.degree_in(var) < 0:
            break
        r = _pseudo_rem(a, b, var)
        if r.is_zero():
            prim_b = _poly_divexact(b, _poly_content(b, var))
            return cont * prim_b
        if r.degree_in(var) == 0:
            return cont
        a, b = b, _poly_divexact(r, _poly_content(r, var))
    return cont


def _poly_content(p, var):
    """Content of p as a polynomial in var (gcd of coefficients)."""
    coeffs = p.coeffs_in(var)
    g = Polynomial.constant(0, ())
    for c in coeffs:
        if not c.is_zero():
            g = _gcd_rec(g, c) if not g.is_zero() else c
    g = g.with_vars(p.vars)
    if _content_q(g) != 0:
        g = _poly_divexact(g, Polynomial.constant(_content_q(g), g.vars))
    return g


def _pseudo_rem(a, b, var):
    """Pseudo-remainder of a by b in var."""
    da, db = a.degree_in(var), b.degree_in(var)
    if da < db:
        return a
    bc = b.coeffs_in(var)
    lead_b = bc[db].with_vars(a.vars)
    r = a
    while True:
        dr = r.degree_in(var)
        if dr < db or r.is_zero():
            return r
        rc = r.coeffs_in(var)
        lead_r = rc[dr].with_vars(a.vars)
        shift = Polynomial.variable(var, a.vars) ** (dr - db)
        r = r * lead_b - b.with_vars(a.vars) * lead_r * shift


def poly_divexact(p, q):
    return _poly_divexact(p, q)


def squarefree_part(p, var):
    """Radical of a univariate polynomial in var, monic-normalized."""
    g = poly_gcd(p, p.derivative(var))
    rad = _poly_divexact(p, g)
    _, lead = rad.leading()
    return _poly_divexact(rad, Polynomial.constant(lead, rad.vars))


# -- rational functions ------------------------------------------------------


class RatFun:
    """Reduced quotient of two Polynomials over Q."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = Polynomial.constant(1, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = Polynomial._aligned(num, den)
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if not g.is_constant() or g.constant_value() != 1:
                num = _poly_divexact(num, g)
                den = _poly_divexact(den, g)
        if num.is_zero():
            den = Polynomial.constant(1, num.vars)
        # normalize: denominator leading coefficient positive, content 1
        cont = _content_q(den)
        if cont not in (0, 1):
            den = _poly_divexact(den, Polynomial.constant(cont, den.vars))
            num = Polynomial(num.vars, {e: c / cont for e, c in num.terms.items()})
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, value, vars=()):
        return cls(Polynomial.constant(value, vars))

    @classmethod
    def var(cls, name, vars):
        return cls(Polynomial.variable(name, vars))

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x, like):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, Polynomial):
            return RatFun(x)
        return RatFun.const(_as_fraction(x), like.num.vars)

    def __add__(self, other):
        o = self._coerce(other, self)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other, self))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other, self)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other, self)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other, self) / self

    def __pow__(self, n):
        if n < 0:
            return RatFun(self.den ** (-n), self.num ** (-n))
        return RatFun(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, (RatFun, Polynomial, int, Fraction)):
            return NotImplemented
        o = self._coerce(other, self)
        return (self.num * o.den - o.num * self.den).is_zero()

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("evaluation at a zero of the denominator")
        return self.num.evaluate(values) / d

    def substitute(self, values):
        return RatFun(self.num.substitute(values), self.den.substitute(values))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


# -- expression parsing -------------------------------------------------------


def parse_poly(text, vars):
    """Parse +,-,*,^ integer/rational expressions over the given variables."""
    return _Parser(text, tuple(vars)).parse()


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.vars = vars
        self.pos = 0

    def parse(self):
        p = self._expr()
        self._skip()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at {self.pos}: {self.text[self.pos:]!r}")
        return p

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\n":
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self):
        sign = 1
        while self._peek() and self._peek() in "+-":
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        p = self._term() * sign
        while self._peek() and self._peek() in "+-":
            op = self.text[self.pos]
            self.pos += 1
            t = self._term()
            p = p + t if op == "+" else p - t
        return p

    def _term(self):
        p = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                p = p * self._factor()
            elif ch == "/":
                # only exact rational constant division inside polynomial data
                self.pos += 1
                q = self._factor()
                p = p * (1 / q.constant_value())
            else:
                return p

    def _factor(self):
        base = self._atom()
        if self._peek() == "^":
            self.pos += 1
            n = self._atom()
            base = base ** int(n.constant_value())
        return base

    def _atom(self):
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            p = self._expr()
            if self._peek() != ")":
                raise ValueError("unbalanced parenthesis")
            self.pos += 1
            return p
        if ch == "-":
            self.pos += 1
            return -self._atom()
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Polynomial.constant(int(self.text[start:self.pos]), self.vars)
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return Polynomial.variable(self.text[start:self.pos], self.vars)
        raise ValueError(f"unexpected character {ch!r} at {self.pos}")


# -- rational string helpers ---------------------------------------------------


def fmt_q(x):
    """Serialize a Fraction as 'p/q' (or 'p' when q = 1)."""
    x = _as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_q(s):
    return Fraction(s)
