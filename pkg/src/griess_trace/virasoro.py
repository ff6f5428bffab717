"""The vacuum Virasoro module M(c,0)/M(c,1) over exact scalars.

Basis vectors are partitions [m1,...,mk] with parts >= 2 (nonincreasing),
standing for L_{-m1}...L_{-mk} acting on the vacuum.  The quotient is
enforced structurally: parts equal to 1 never appear and L_{-1} applied to
the vacuum is zero during commutation.

Central-charge-generic computations use RatFun scalars in the variable c;
the same code runs over plain Fractions after specialization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import bareiss_det
from .poly import Polynomial, RatFun, parse_poly, squarefree_part

CD_VARS = ("c", "d")


def rf_c():
    return RatFun.var("c", CD_VARS)


def rf_d():
    return RatFun.var("d", CD_VARS)


def rf(value):
    return RatFun.const(Fraction(value), CD_VARS)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None):
    """All partitions of n into parts >= 2, nonincreasing, canonical order.

    The order is descending lexicographic on the part lists ([8] before
    [6,2] before [5,3] ...), so tables print in a stable, document-friendly
    order.
    """
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None:
        max_part = n
    out = []
    for first in range(min(n, max_part), 1, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partition_weight(p):
    return sum(p)


class ModuleVector:
    """Finite linear combination of partition basis vectors.

    Coefficients may be any ring elements supporting +, *, and truthiness
    (RatFun, Fraction, or Griess invariant expressions).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for p, coeff in terms.items():
                if coeff:
                    self.terms[tuple(p)] = coeff

    @classmethod
    def basis(cls, p, coeff=1):
        return cls({tuple(p): coeff})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def weight(self):
        """Common weight of all terms (vectors are homogeneous)."""
        weights = {partition_weight(p) for p in self.terms}
        if len(weights) > 1:
            raise ValueError(f"inhomogeneous vector with weights {weights}")
        return weights.pop() if weights else None

    def __add__(self, other):
        terms = dict(self.terms)
        for p, coeff in other.terms.items():
            s = terms.get(p)
            terms[p] = coeff if s is None else s + coeff
        return ModuleVector(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        if isinstance(factor, int):
            if factor == 0:
                return ModuleVector()
            return ModuleVector({p: c * factor for p, c in self.terms.items()})
        return ModuleVector({p: c * factor for p, c in self.terms.items()})

    def map_coeffs(self, f):
        return ModuleVector({p: f(c) for p, c in self.terms.items()})

    def coeff(self, p):
        return self.terms.get(tuple(p))

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        for p in keys:
            a = self.terms.get(p)
            b = other.terms.get(p)
            if a is None or b is None:
                return False
            if not (a == b):
                return False
        return True

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: _partition_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for p, coeff in self.items_sorted():
            label = "[" + ",".join(map(str, p)) + "]" if p else "[]"
            bits.append(f"({coeff})*{label}")
        return " + ".join(bits)

    def __repr__(self):
        return f"ModuleVector({self})"

    def to_json(self):
        return [
            {"partition": list(p), "coeff": str(c)}
            for p, c in self.items_sorted()
        ]


def _partition_sort_key(p):
    # descending lexicographic: [8] before [6,2] before ... before [2,2,2,2]
    return tuple(-x for x in p)


@lru_cache(maxsize=None)
def _act_basis(m: int, p: tuple):
    """L_m applied to the basis vector [p] with generic central charge.

    Returns a tuple of (partition, RatFun) pairs.
    """
    c = rf_c()
    if not p:
        # on the vacuum: L_m 1 = 0 for m >= -1, otherwise prepend
        if m >= -1:
            return ()
        return (((-m,), rf(1)),)
    head, rest = p[0], p[1:]
    if m <= -head:
        # already in canonical position
        return (((-m,) + p, rf(1)),)
    out = {}
    # [L_m, L_{-head}] = (m + head) L_{m-head} + delta_{m,head} (m^3-m)/12 c
    for q, coeff in _act_basis(m - head, rest):
        key = q
        out[key] = out.get(key, rf(0)) + coeff * (m + head)
    if m == head:
        central = c * Fraction(m ** 3 - m, 12)
        out[rest] = out.get(rest, rf(0)) + central
    # L_{-head} (L_m rest)
    for q, coeff in _act_basis(m, rest):
        for q2, coeff2 in _act_basis(-head, q):
            out[q2] = out.get(q2, rf(0)) + coeff * coeff2
    return tuple((q, coeff) for q, coeff in out.items() if coeff)


def act_L(m: int, v: ModuleVector) -> ModuleVector:
    """Virasoro generator L_m acting on a vacuum-module vector."""
    out = ModuleVector()
    for p, coeff in v.terms.items():
        for q, f in _act_basis(m, p):
            cur = out.terms.get(q)
            add = coeff * f
            out.terms[q] = add if cur is None else cur + add
    return ModuleVector(out.terms)


def vacuum_pairing(p, q):
    """Contravariant pairing ([p]|[q]) as a RatFun (a polynomial in c)."""
    v = ModuleVector.basis(q, rf(1))
    for m in p:  # ([m1,...]|v) = (...|L_{m1} v): largest part first
        v = act_L(m, v)
    coeff = v.coeff(())
    return coeff if coeff is not None else rf(0)


@lru_cache(maxsize=None)
def gram_matrix(n: int):
    """Gram matrix of the weight-n subspace; entries polynomial in c."""
    basis = partitions(n)
    return tuple(
        tuple(vacuum_pairing(p, q) for q in basis) for p in basis
    )


# Kac factors: reduced polynomials whose zeros mark singular vectors up to
# weight n.  Stored factored; the normalization (overall constant) is fixed
# by convention, so checks compare radicals, not leading constants.
KAC_FACTORS = {
    2: ["c"],
    4: ["c", "5*c+22"],
    6: ["c", "2*c-1", "5*c+22", "7*c+68"],
    8: ["c", "2*c-1", "3*c+46", "5*c+3", "5*c+22", "7*c+68"],
    10: ["10", "c", "2*c-1", "3*c+46", "5*c+3", "5*c+22", "7*c+68", "11*c+232"],
}


def kac_polynomial(n: int) -> Polynomial:
    """The stored singular-vector detector D_n(c) as a polynomial."""
    p = Polynomial.constant(1, ("c",))
    for f in KAC_FACTORS[n]:
        p = p * parse_poly(f, ("c",))
    return p


def gram_det(n: int) -> Polynomial:
    """det of the weight-n Gram matrix as a polynomial in c."""
    g = gram_matrix(n)
    rows = []
    for row in g:
        prow = []
        for entry in row:
            if not (entry.den.is_constant() and entry.den.constant_value() == 1):
                raise ValueError("Gram entries should be polynomial in c")
            prow.append(entry.num.with_vars(("c",)))
        rows.append(prow)
    return bareiss_det(rows)


def kac_factor_check(n: int) -> bool:
    """Radical of det(gram_matrix(n)) matches the radical of D_n(c)."""
    if n % 2 or not 2 <= n <= 10:
        raise ValueError("n must be an even integer between 2 and 10")
    det = gram_det(n)
    stored = kac_polynomial(n)
    for f in KAC_FACTORS[n]:
        fac = parse_poly(f, ("c",))
        if fac.is_constant():
            continue
        try:
            from .poly import poly_divexact
            poly_divexact(det, fac)
        except ValueError:
            return False
    return squarefree_part(det, "c") == squarefree_part(stored, "c")


def subspace_dimensions(n_max: int):
    """Graded dimensions dim(weight n) for n = 0..n_max."""
    return [len(partitions(n)) for n in range(n_max + 1)]
