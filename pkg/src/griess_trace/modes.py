"""Mode calculus for generic weight-2 symbols and Virasoro zero modes.

Two engines live here.

The symbol engine reduces words of modes applied to generic weight-2
elements.  States are weight-homogeneous combinations of a closed term
vocabulary with invariant-expression coefficients:

    ('one',)          the vacuum
    ('w2', U)         a weight-2 product tree U
    ('l1', U)         the translate L_{-1} U of a weight-2 tree
    ('w3', p, q)      the word p_(0) q, canonically ordered
    ('w4', a, b)      the word a_(-1) b (input only)

Reduction facts used throughout (V^1 = 0, so L_1 kills weight 2):
L_m x = 0 for m >= 3, L_2 x = (x|omega) vacuum, products absorb omega.

The zero-mode engine expands u_(wt(u)-1) for u in the vacuum Virasoro
module through the identity

    (L_{-m} w)_(q) = sum_i (-1)^i C(1-m, i) [ L_{-m-i} w_(q+i)
                       - (-1)^(1-m) w_(q+1-m-i) L_{i-1} ]

inside an auxiliary highest-weight module, which yields the diagonal action
on a weight-2 primary and on the conformal vector, hence traces over the
degree-2 subspace.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .invariants import GExpr, OMEGA, form2, prod_tree, tree_key
from .poly import RatFun
from .virasoro import rf, rf_c

# ---------------------------------------------------------------------------
# symbol-side states


def vec_zero():
    return {}


def vec_term(key, coeff=1):
    g = coeff if isinstance(coeff, GExpr) else GExpr.scalar(coeff)
    return {key: g} if g else {}


def vec_add(*vecs):
    out = {}
    for v in vecs:
        for k, g in v.items():
            cur = out.get(k)
            out[k] = g if cur is None else cur + g
    return {k: g for k, g in out.items() if g}


def vec_scale(v, s):
    return {k: g * s for k, g in v.items()}


def one_coeff(v):
    """Vacuum component of a fully reduced state."""
    for k in v:
        if k != ("one",):
            raise ValueError(f"state not fully reduced: {k}")
    return v.get(("one",), GExpr.zero())


def w3_term(p, q, coeff=1):
    """The word p_(0) q as a canonical state (skew rule applied)."""
    if p == q:
        return vec_term(("l1", prod_tree(p, p)), Fraction(1, 2) * _g(coeff))
    if tree_key(p) > tree_key(q):
        flip = vec_scale(w3_term(q, p), -1)
        rest = vec_term(("l1", prod_tree(p, q)))
        return vec_scale(vec_add(flip, rest), _g(coeff))
    return vec_term(("w3", p, q), coeff)


def t2_term(u, p, q, coeff=1):
    """The word u_(2)(p_(0) q), which collapses to pure products.

    Skew symmetry of the weight-2/weight-3 pairing gives
    u_(2)(p_(0) q) = -(p_(0) q)_(2) u = q_(2)(p_(0) u); combined with the
    commutator expansions this forces

        u_(2)(p_(0) q) = (pq)u - p(qu) + (up)q.
    """
    out = vec_add(
        vec_term(("w2", prod_tree(prod_tree(p, q), u))),
        vec_scale(vec_term(("w2", prod_tree(p, prod_tree(q, u)))), -1),
        vec_term(("w2", prod_tree(prod_tree(u, p), q))),
    )
    return vec_scale(out, _g(coeff))


def _g(x):
    return x if isinstance(x, GExpr) else GExpr.scalar(x)


# ---------------------------------------------------------------------------
# Virasoro action on symbol states


def apply_L(m, vec):
    """L_m (m >= 1) on a symbol state."""
    out = []
    for key, g in vec.items():
        kind = key[0]
        if kind == "one":
            continue
        if kind == "w2":
            if m == 2:
                out.append(vec_term(("one",), form2(key[1], OMEGA) * g))
            continue
        if kind == "l1":
            x = key[1]
            if m == 1:
                out.append(vec_term(("w2", x), 4 * g))
            elif m == 3:
                out.append(vec_term(("one",), 4 * form2(x, OMEGA) * g))
            continue
        if kind == "w3":
            p, q = key[1], key[2]
            if m == 1:
                out.append(vec_term(("w2", prod_tree(p, q)), 2 * g))
            elif m == 3:
                out.append(vec_term(("one",), 4 * form2(p, q) * g))
            continue
        if kind == "w4":
            a, b = key[1], key[2]
            if m == 1:
                out.append(vec_scale(w3_term(a, b), 3 * g))
            elif m == 2:
                out.append(vec_term(("w2", prod_tree(a, b)), 4 * g))
                out.append(vec_term(("w2", b), form2(a, OMEGA) * g))
                out.append(vec_term(("w2", a), form2(b, OMEGA) * g))
            elif m == 4:
                out.append(vec_term(("one",), 6 * form2(a, b) * g))
            continue
        raise ValueError(f"L_{m} not defined on {key}")
    return vec_add(*out) if out else {}


def apply_symbol_mode(s, k, vec):
    """Mode s_(k) of a generic weight-2 symbol on a symbol state."""
    out = []
    for key, g in vec.items():
        kind = key[0]
        if kind == "one":
            continue  # s_(k) vacuum = 0 for k >= 0
        if kind == "w2":
            u = key[1]
            if k == 3:
                out.append(vec_term(("one",), form2(s, u) * g))
            elif k == 2:
                pass
            elif k == 1:
                out.append(vec_term(("w2", prod_tree(s, u)), g))
            elif k == 0:
                out.append(vec_scale(w3_term(s, u), g))
            else:
                raise ValueError(f"mode {k} on weight 2 not supported")
            continue
        if kind == "w3":
            if k == 2:
                out.append(vec_scale(t2_term(s, key[1], key[2]), g))
                continue
        if kind == "l1":
            if k == 2:
                out.append(vec_term(("w2", prod_tree(s, key[1])), 2 * g))
                continue
        raise ValueError(f"mode {k} of a symbol on {key} not supported")
    return vec_add(*out) if out else {}


def contract_with(s, vec):
    """(s|state) for a fully reduced weight-2 state."""
    result = GExpr.zero()
    for key, g in vec.items():
        if key[0] == "w2":
            result = result + form2(s, key[1]) * g
        else:
            raise ValueError(f"cannot contract weight-2 symbol with {key}")
    return result


def eta_values(vec, parts):
    """(L_{m1}, then L_{m2}, ...) applied to the state; vacuum coefficient.

    parts is a partition (m1 >= m2 >= ... ), largest applied first.
    """
    cur = vec
    for m in parts:
        cur = apply_L(m, cur)
    return one_coeff(cur)


# ---------------------------------------------------------------------------
# quinary form with one conformal-vector argument


def _word_after_inner(z, w, v):
    """State z_(1) w_(0) v when exactly one of {w, v} may be omega."""
    if v == OMEGA:
        inner = vec_term(("l1", w))  # w_(0) omega = L_{-1} w
    elif w == OMEGA:
        inner = vec_term(("l1", v))  # omega_(0) v = L_{-1} v
    else:
        inner = w3_term(w, v)
    out = []
    for key, g in inner.items():
        if key[0] == "l1":
            # z_(1) L_{-1} t = z_(0) t + L_{-1}(z t)
            out.append(vec_scale(w3_term(z, key[1]), g))
            out.append(vec_term(("l1", prod_tree(z, key[1])), g))
        else:
            out.append(vec_term(key, g))  # left unevaluated (w3)
    return vec_add(*out)


def _L1_on_word(z, state3):
    """L_1 (z_(1) state3) for a weight-3 state, via the commutator
    [L_1, z_(1)] = z_(2)."""
    first = apply_symbol_mode(z, 2, state3)
    second = apply_L(1, state3)
    prod_part = []
    for key, g in second.items():
        if key[0] != "w2":
            raise ValueError("unexpected L_1 image")
        prod_part.append(vec_term(("w2", prod_tree(z, key[1])), g))
    return vec_add(first, *prod_part)


def quinary_word_value(x, y, z, w, v):
    """Scalar value of x_(3) y_(2) z_(1) w_(0) v with one omega argument."""
    args = (x, y, z, w, v)
    if args.count(OMEGA) != 1:
        raise ValueError("exactly one argument must be the conformal vector")
    if x == OMEGA:
        # (omega | y_(2) z_(1) w_(0) v) = (y | L_1 (z_(1) w_(0) v))
        state3 = _word_after_inner_raw(z, w, v)
        return contract_with(y, _L1_on_word(z, state3))
    if y == OMEGA:
        # omega_(2) = L_1
        state3 = _word_after_inner_raw(z, w, v)
        return contract_with(x, _L1_on_word(z, state3))
    if z == OMEGA:
        # omega_(1) = L_0, eigenvalue 3 on the weight-3 inner word
        state3 = w3_term(w, v)
        state2 = apply_symbol_mode(y, 2, vec_scale(state3, 3))
        return contract_with(x, state2)
    state3 = _word_after_inner(z, w, v)
    state2 = apply_symbol_mode(y, 2, state3)
    return contract_with(x, state2)


def _word_after_inner_raw(z, w, v):
    """Inner two modes w_(0) v as a weight-3 state, left strictly
    unevaluated in z (used when the z_(1) word is consumed by L_1)."""
    if OMEGA in (w, v):
        raise ValueError("omega must not sit in the inner word here")
    return w3_term(w, v)


def quinary_with_omega(names):
    """The antisymmetric quinary form on (a1, a2, a3, a4, omega).

    Computed from its defining antisymmetrization of nested mode words.
    Returns the reduced invariant expression over the four generic symbols
    (the reduction is expected to collapse to pairing shapes).
    """
    from itertools import permutations

    if len(names) != 4:
        raise ValueError("need four generic symbols")
    args = list(names) + [OMEGA]
    total = GExpr.zero()
    for perm in permutations(range(5)):
        sign = _perm_sign(perm)
        x, y, z, w, v = (args[i] for i in perm)
        total = total + sign * quinary_word_value(x, y, z, w, v)
    return total * Fraction(1, 120)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# zero modes of vacuum-module vectors in highest-weight modules


def _binom(r, i):
    """Binomial coefficient with arbitrary integer upper argument."""
    out = 1
    for j in range(i):
        out *= r - j
    from math import factorial
    return Fraction(out, factorial(i))


class HighestWeightModule:
    """States L_{-n1}...L_{-nk} v_h as partitions over RatFun(c) scalars.

    vacuum=True enforces parts >= 2 and L_{-1} v = 0 (the quotient),
    otherwise parts >= 1 on a weight-h highest-weight vector.
    """

    def __init__(self, h, vacuum=False):
        self.h = Fraction(h)
        self.vacuum = vacuum
        self._act_cache = {}
        self._mode_cache = {}

    def state_weight(self, state):
        return self.h + sum(state)

    def act(self, m, state):
        """L_m on a basis state; dict state -> RatFun."""
        key = (m, state)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        out = {}
        if not state:
            if m == 0:
                if self.h:
                    out[state] = rf(self.h)
            elif m <= -1:
                if not (self.vacuum and m == -1):
                    out[(-m,)] = rf(1)
        else:
            head, rest = state[0], state[1:]
            if m <= -head:
                out[(-m,) + state] = rf(1)
            else:
                for q, coeff in self.act(m - head, rest).items():
                    _acc(out, q, coeff * (m + head))
                if m == head:
                    _acc(out, rest, rf_c() * Fraction(m**3 - m, 12))
                for q, coeff in self.act(m, rest).items():
                    for q2, c2 in self.act(-head, q).items():
                        _acc(out, q2, coeff * c2)
        out = {s: v for s, v in out.items() if v}
        self._act_cache[key] = out
        return out

    def act_vec(self, m, vec):
        out = {}
        for s, coeff in vec.items():
            for q, f in self.act(m, s).items():
                _acc(out, q, coeff * f)
        return {s: v for s, v in out.items() if v}

    def mode(self, u, q, state):
        """u_(q) on a basis state, for u a partition in the vacuum module."""
        key = (u, q, state)
        cached = self._mode_cache.get(key)
        if cached is not None:
            return cached
        if not u:
            out = {state: rf(1)} if q == -1 else {}
            self._mode_cache[key] = out
            return out
        m, rest = u[0], u[1:]
        ww = sum(rest)
        r = 1 - m
        out = {}
        # first sum: L_{r-i-1} (rest_(q+i) state)
        imax = int(self.state_weight(state) + ww - q - 1 - self.h)
        for i in range(0, max(imax + 1, 0)):
            b = _binom(r, i)
            if not b:
                continue
            sign = -1 if i % 2 else 1
            inner = self.mode(rest, q + i, state)
            for s1, c1 in inner.items():
                for s2, c2 in self.act(r - i - 1, s1).items():
                    _acc(out, s2, c1 * c2 * (b * sign))
        # second sum: rest_(q+r-i) (L_{i-1} state)
        sgn_r = -1 if r % 2 else 1
        imax2 = int(sum(state)) + 1
        for i in range(0, imax2 + 1):
            b = _binom(r, i)
            if not b:
                continue
            sign = -1 if i % 2 else 1
            lowered = self.act(i - 1, state)
            if not lowered:
                continue
            for s1, c1 in lowered.items():
                for s2, c2 in self.mode(rest, q + r - i, s1).items():
                    _acc(out, s2, c1 * c2 * (-sgn_r * b * sign))
        out = {s: v for s, v in out.items() if v}
        self._mode_cache[key] = out
        return out


def _acc(d, k, v):
    cur = d.get(k)
    d[k] = v if cur is None else cur + v


_PRIMARY = HighestWeightModule(2)
_VACUUM = HighestWeightModule(0, vacuum=True)


@lru_cache(maxsize=None)
def zero_mode_on_primary(u):
    """Eigenvalue of o(u) on a generic weight-2 primary (RatFun in c)."""
    n = sum(u)
    result = _PRIMARY.mode(tuple(u), n - 1, ())
    return result.get((), rf(0))


@lru_cache(maxsize=None)
def zero_mode_on_omega(u):
    """Diagonal entry of o(u) on the conformal vector inside the vacuum
    module (RatFun in c)."""
    n = sum(u)
    result = _VACUUM.mode(tuple(u), n - 1, (2,))
    return result.get((2,), rf(0))
