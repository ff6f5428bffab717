"""Truncated q-series with fractional exponents and exact coefficients.

A PuiseuxSeries stores terms c_k q^(k/N) with integer k, Fraction c_k and a
fixed exponent denominator N (default 48, enough for 1/16, 1/2 and 1/24
offsets).  Every series carries a truncation order: terms with exponent
>= cutoff are unknown, and operations propagate the tightest valid cutoff
rather than silently pretending exactness.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly import fmt_q

INF = Fraction(10**9)  # effectively "exact to all computed orders"
DEFAULT_DENOM = 48


class PuiseuxSeries:
    __slots__ = ("denom", "coeffs", "cutoff")

    def __init__(self, denom=DEFAULT_DENOM, coeffs=None, cutoff=INF):
        self.denom = denom
        self.cutoff = Fraction(cutoff)
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                c = Fraction(c)
                if c and Fraction(k, denom) < self.cutoff:
                    self.coeffs[k] = c

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, denom=DEFAULT_DENOM, cutoff=INF):
        return cls(denom, {}, cutoff)

    @classmethod
    def one(cls, denom=DEFAULT_DENOM, cutoff=INF):
        return cls(denom, {0: Fraction(1)}, cutoff)

    @classmethod
    def monomial(cls, coeff, exponent, denom=DEFAULT_DENOM, cutoff=INF):
        e = Fraction(exponent)
        if (e * denom).denominator != 1:
            denom = lcm(denom, e.denominator)
        return cls(denom, {int(e * denom): Fraction(coeff)}, cutoff)

    @classmethod
    def from_integer_coeffs(cls, coeffs, denom=DEFAULT_DENOM, cutoff=INF):
        """Series with integer exponents given as dict n -> coeff."""
        return cls(denom, {n * denom: c for n, c in coeffs.items()}, cutoff)

    # -- views -------------------------------------------------------------

    def rescaled(self, denom):
        if denom == self.denom:
            return self
        if denom % self.denom:
            raise ValueError("exponent denominators may only be refined upward")
        f = denom // self.denom
        return PuiseuxSeries(denom, {k * f: c for k, c in self.coeffs.items()},
                             self.cutoff)

    def coeff(self, exponent):
        e = Fraction(exponent)
        if e >= self.cutoff:
            raise ValueError(f"coefficient of q^{e} is beyond cutoff {self.cutoff}")
        k = e * self.denom
        if k.denominator != 1:
            return Fraction(0)
        return self.coeffs.get(int(k), Fraction(0))

    def lowest(self):
        """Smallest exponent with nonzero coefficient, or None."""
        if not self.coeffs:
            return None
        return Fraction(min(self.coeffs), self.denom)

    def truncate(self, cutoff):
        cutoff = min(Fraction(cutoff), self.cutoff)
        return PuiseuxSeries(self.denom, {
            k: c for k, c in self.coeffs.items() if Fraction(k, self.denom) < cutoff
        }, cutoff)

    def is_zero(self):
        return not self.coeffs

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _common(a, b):
        if isinstance(b, (int, Fraction)):
            b = PuiseuxSeries(a.denom, {0: Fraction(b)})
        n = lcm(a.denom, b.denom)
        return a.rescaled(n), b.rescaled(n)

    def __add__(self, other):
        a, b = self._common(self, other)
        cutoff = min(a.cutoff, b.cutoff)
        coeffs = dict(a.coeffs)
        for k, c in b.coeffs.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        return PuiseuxSeries(a.denom, coeffs, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.denom, {k: -c for k, c in self.coeffs.items()},
                             self.cutoff)

    def __sub__(self, other):
        a, b = self._common(self, other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return PuiseuxSeries(self.denom,
                                 {k: c * f for k, c in self.coeffs.items()},
                                 self.cutoff)
        a, b = self._common(self, other)
        low_a = min(a.coeffs, default=0)
        low_b = min(b.coeffs, default=0)
        cutoff = min(a.cutoff + Fraction(low_b, a.denom),
                     b.cutoff + Fraction(low_a, a.denom))
        limit = cutoff * a.denom
        coeffs = {}
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                k = k1 + k2
                if k < limit:
                    coeffs[k] = coeffs.get(k, Fraction(0)) + c1 * c2
        return PuiseuxSeries(a.denom, coeffs, cutoff)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        a, b = self._common(self, other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero series")
        low_b = min(b.coeffs)
        lead = b.coeffs[low_b]
        # validity: quotient exponents run from low_a - low_b
        low_a = min(a.coeffs, default=0)
        cutoff = min(a.cutoff - Fraction(low_b, a.denom),
                     b.cutoff - Fraction(2 * low_b - low_a, a.denom))
        limit = cutoff * a.denom
        rem = dict(a.coeffs)
        out = {}
        while rem:
            k = min(rem)
            c = rem.pop(k)
            if not c:
                continue
            ko = k - low_b
            if ko >= limit:
                break
            f = c / lead
            out[ko] = f
            for kb, cb in b.coeffs.items():
                if kb == low_b:
                    continue
                kk = ko + kb
                if kk < limit + low_b:
                    rem[kk] = rem.get(kk, Fraction(0)) - f * cb
        return PuiseuxSeries(a.denom, out, cutoff)

    def __rtruediv__(self, other):
        num = PuiseuxSeries(self.denom, {0: Fraction(other)})
        return num / self

    def __eq__(self, other):
        """Equality of all coefficients within the common validity range."""
        a, b = self._common(self, other)
        cutoff = min(a.cutoff, b.cutoff)
        if cutoff <= -INF:
            raise ValueError("empty validity range")
        limit = cutoff * a.denom
        keys = {k for k in a.coeffs if k < limit} | {k for k in b.coeffs if k < limit}
        return all(a.coeffs.get(k, 0) == b.coeffs.get(k, 0) for k in keys)

    # -- calculus -----------------------------------------------------------

    def qdq(self):
        """Apply q d/dq: multiply the coefficient of q^e by e."""
        return PuiseuxSeries(self.denom, {
            k: c * Fraction(k, self.denom) for k, c in self.coeffs.items()
        }, self.cutoff)

    def shift(self, exponent):
        """Multiply by q^exponent."""
        e = Fraction(exponent)
        denom = self.denom
        if (e * denom).denominator != 1:
            denom = lcm(denom, e.denominator)
        s = self.rescaled(denom)
        d = int(e * denom)
        return PuiseuxSeries(denom, {k + d: c for k, c in s.coeffs.items()},
                             s.cutoff + e)

    # -- serialization ---------------------------------------------------------

    def items(self):
        """Sorted (exponent, coefficient) pairs."""
        return [(Fraction(k, self.denom), self.coeffs[k]) for k in sorted(self.coeffs)]

    def to_json(self):
        return [
            {"exponent": fmt_q(e), "coeff": fmt_q(c)} for e, c in self.items()
        ]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                term = fmt_q(c)
            else:
                qs = "q" if e == 1 else f"q^{fmt_q(e)}"
                if c == 1:
                    term = qs
                elif c == -1:
                    term = f"-{qs}"
                else:
                    term = f"{fmt_q(c)}*{qs}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"PuiseuxSeries({self})"


def geometric_product(factor_exponents, signs, order, denom=DEFAULT_DENOM):
    """Expand prod_k (1 + sign_k * q^(e_k)) exactly to the given order."""
    out = PuiseuxSeries.one(denom, cutoff=order)
    for e, s in zip(factor_exponents, signs):
        if Fraction(e) >= order:
            continue
        f = PuiseuxSeries.monomial(s, e, denom, cutoff=order) + 1
        out = out * f
    return out.truncate(order)
