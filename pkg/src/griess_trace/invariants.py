"""Invariant expressions of the degree-2 (Griess) algebra.

Values computed by the mode calculus are sums of monomials in a small
vocabulary of invariant factors built from generic weight-2 symbols and the
conformal vector:

    (x|y)        symmetric pair form            -> ('pair', x, y)
    (x|omega)                                   -> ('pw', x)
    (X|Y|Z)      totally symmetric trilinear    -> ('tri', (X, Y, Z))
    quinary      antisymmetric 5-form           -> ('qn', (x1..x5))

Arguments of the trilinear form are product trees; since the product is
commutative but not associative, trees are kept nested and only the exact
regrouping rule {P*Q, R, S} ~ {P, Q, R*S} identifies representations of the
same invariant.  Products absorb the conformal vector immediately (U*omega
= 2U), so omega never occurs inside a tree.

Coefficients are rational functions in (c, d).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import RatFun
from .virasoro import CD_VARS, rf

OMEGA = "omega"


def is_atom(t):
    return isinstance(t, str)


def tree_key(t):
    if is_atom(t):
        return (0, t)
    return (1 + tree_size(t), tree_key(t[1]), tree_key(t[2]))


def tree_size(t):
    if is_atom(t):
        return 1
    return tree_size(t[1]) + tree_size(t[2])


def tree_atoms(t):
    if is_atom(t):
        return [t]
    return tree_atoms(t[1]) + tree_atoms(t[2])


def prod_tree(a, b):
    """Commutative product node with canonically ordered children."""
    if a == OMEGA or b == OMEGA:
        raise ValueError("omega must be absorbed before forming products")
    return ("*", a, b) if tree_key(a) <= tree_key(b) else ("*", b, a)


class GExpr:
    """Linear combination of invariant-factor monomials over RatFun(c, d)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def scalar(cls, value):
        r = value if isinstance(value, RatFun) else rf(Fraction(value))
        return cls({(): r}) if r else cls()

    @classmethod
    def factor(cls, fac, coeff=1):
        r = coeff if isinstance(coeff, RatFun) else rf(Fraction(coeff))
        return cls({(fac,): r})

    def is_zero(self):
        return all(v.is_zero() for v in self.terms.values())

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFun)):
            other = GExpr.scalar(other)
        terms = dict(self.terms)
        for m, coeff in other.terms.items():
            cur = terms.get(m)
            terms[m] = coeff if cur is None else cur + coeff
        return GExpr(terms)

    __radd__ = __add__

    def __neg__(self):
        return GExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFun)):
            other = GExpr.scalar(other)
        return self + (-other)

    def __mul__(self, other):
        """Product by a scalar or by another invariant expression."""
        if isinstance(other, (int, Fraction, RatFun)):
            if not other:
                return GExpr()
            return GExpr({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                cur = out.get(m)
                add = c1 * c2
                out[m] = add if cur is None else cur + add
        return GExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("GExpr is unhashable")

    def coefficient(self, mono):
        return self.terms.get(tuple(sorted(mono)), rf(0))

    def scalar_value(self):
        """The coefficient of the empty monomial (errors if others remain)."""
        extra = {m for m, c in self.terms.items() if m and c}
        if extra:
            raise ValueError(f"non-scalar invariant terms remain: {extra}")
        return self.terms.get((), rf(0))

    def map_coeffs(self, f):
        return GExpr({m: f(c) for m, c in self.terms.items()})

    def evaluate(self, factor_value, c0, d0):
        """Numeric value: factor_value maps each factor key to a Fraction."""
        vals = {"c": Fraction(c0), "d": Fraction(d0)}
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            x = coeff.evaluate(vals)
            for fac in mono:
                x *= factor_value(fac)
            total += x
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            label = "*".join(fmt_factor(f) for f in mono) if mono else "1"
            bits.append(f"({coeff})*{label}")
        return " + ".join(bits)

    __repr__ = __str__


def fmt_tree(t):
    if is_atom(t):
        return t
    return f"({fmt_tree(t[1])}{fmt_tree(t[2])})"


def fmt_factor(f):
    kind = f[0]
    if kind == "pair":
        return f"({f[1]}|{f[2]})"
    if kind == "pw":
        return f"({f[1]}|w)"
    if kind == "tri":
        return "(" + "|".join(fmt_tree(t) for t in f[1]) + ")"
    if kind == "tf":
        p, q, u, y = f[1]
        return f"({p}.{q}|{u}.{y})"
    if kind == "qn":
        return "quin(" + ",".join(f[1]) + ")"
    return str(f)


# -- form construction ---------------------------------------------------------


def form2(u, v):
    """Invariant pairing (u|v) of two weight-2 trees (omega allowed)."""
    if u == OMEGA and v == OMEGA:
        return GExpr.scalar(RatFun.var("c", CD_VARS) * Fraction(1, 2))
    if u == OMEGA:
        u, v = v, u
    if v == OMEGA:
        if is_atom(u):
            return GExpr.factor(("pw", u))
        return 2 * form2(u[1], u[2])
    if is_atom(u) and is_atom(v):
        a, b = sorted((u, v))
        return GExpr.factor(("pair", a, b))
    if not is_atom(v):
        return tri_expr(u, v[1], v[2])
    return tri_expr(v, u[1], u[2])


def tri_expr(t1, t2, t3):
    """Totally symmetric trilinear invariant of three trees."""
    for t in (t1, t2, t3):
        if t == OMEGA or OMEGA in tree_atoms(t):
            raise ValueError("omega must be absorbed before trilinear forms")
    return GExpr.factor(("tri", tri_canonical((t1, t2, t3))))


def tri_canonical(parts):
    """Least representative under {P*Q, R, S} ~ {P, Q, R*S}."""
    start = tuple(sorted(parts, key=tree_key))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for i, t in enumerate(state):
                if is_atom(t):
                    continue
                rest = [state[j] for j in range(3) if j != i]
                cand = tuple(sorted(
                    (t[1], t[2], prod_tree(rest[0], rest[1])), key=tree_key))
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return min(seen, key=lambda s: tuple(tree_key(t) for t in s))


def tf_expr(p, q, u, y):
    """Pairing (p.q|u.y) of one-mode words, reduced to canonical form.

    The rewriting uses three exact identities: swapping within a word flips
    the sign up to a pairing correction, the two words may be exchanged
    freely, and the cross swap of leading symbols flips the sign up to a
    trilinear correction.  Together they sort any arrangement of four
    distinct atoms into the unique ascending one.
    """
    if p == q:
        return form2(prod_tree(p, p), prod_tree(u, y))
    if u == y:
        return form2(prod_tree(u, u), prod_tree(p, q))
    if tree_key(p) > tree_key(q):
        return -tf_expr(q, p, u, y) + 2 * form2(prod_tree(p, q), prod_tree(u, y))
    if tree_key(u) > tree_key(y):
        return -tf_expr(p, q, y, u) + 2 * form2(prod_tree(u, y), prod_tree(p, q))
    if (tree_key(u), tree_key(y)) < (tree_key(p), tree_key(q)):
        return tf_expr(u, y, p, q)
    order = sorted((p, q, u, y), key=tree_key)
    if (p, q, u, y) == tuple(order):
        return GExpr.factor(("tf", (p, q, u, y)))
    # swap the middle symbols q <-> u, then renormalize
    corr = (2 * form2(prod_tree(u, p), prod_tree(q, y))
            - 2 * tri_expr(prod_tree(u, q), p, y)
            + 2 * form2(prod_tree(p, q), prod_tree(u, y)))
    return -tf_expr(p, u, q, y) + corr


def qn_factor(names):
    """Sign-normalized quinary factor; zero on repeated arguments."""
    names = list(names)
    if len(set(names)) < 5:
        return GExpr.zero()
    sign = 1
    for i in range(5):
        for j in range(i + 1, 5):
            if names[i] > names[j]:
                sign = -sign
    return GExpr.factor(("qn", tuple(sorted(names))), sign)
