"""Casimir vectors in the vacuum Virasoro module.

kappa_n is the weight-n vector determined by kappa_0 = d*vacuum, kappa_1 = 0
and the ladder relations

    L_m kappa_k = (m+k-2) kappa_{k-m}
                  + delta_{m,2} L_{-k+2} vacuum
                  + delta_{m,k-2} (m^3-m)/6 L_{-2} vacuum

with kappa_j = 0 for j < 0.  The relations for m = 1, 2 generate the rest;
each kappa_n is found as the unique solution of the resulting exact linear
system over rational functions in (c, d), and the m = 3, 4 relations are
then verified as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_linear
from .poly import RatFun, poly_divexact
from .virasoro import (
    ModuleVector, act_L, kac_polynomial, partitions, rf, rf_c, rf_d,
)


@dataclass(frozen=True)
class CasimirElement:
    n: int
    vector: ModuleVector


def relation_rhs(m: int, k: int, known) -> ModuleVector:
    """Right-hand side of the ladder relation for L_m kappa_k."""
    rhs = ModuleVector.zero()
    j = k - m
    if j >= 0:
        rhs = rhs + known[j].vector.scale(m + k - 2)
    if m == 2 and k >= 4:
        rhs = rhs + ModuleVector.basis((k - 2,), rf(1))
    if m == k - 2:
        rhs = rhs + ModuleVector.basis((2,), rf(Fraction(m**3 - m, 6)))
    if m == 2 and k == 2:
        # L_0 vacuum term vanishes; kappa_0 term above already counted
        pass
    return rhs


def solve_casimir(n: int, known) -> CasimirElement:
    """Solve for kappa_n given all kappa_k, k < n, as CasimirElements."""
    if n == 0:
        return CasimirElement(0, ModuleVector.basis((), rf_d()))
    if n == 1:
        return CasimirElement(1, ModuleVector.zero())
    basis = partitions(n)
    cols = len(basis)
    rows = []
    rhs_entries = []
    for m in (1, 2):
        target = relation_rhs(m, n, known)
        images = [act_L(m, ModuleVector.basis(p, rf(1))) for p in basis]
        for q in partitions(n - m):
            rows.append([img.coeff(q) or rf(0) for img in images])
            rhs_entries.append(target.coeff(q) or rf(0))
    sol = solve_linear(rows, rhs_entries, is_zero=lambda v: v.is_zero())
    vec = ModuleVector({p: coeff for p, coeff in zip(basis, sol)})
    return CasimirElement(n, vec)


def casimir_chain(n_max: int):
    """kappa_0 .. kappa_n_max solved in dependency order."""
    known = []
    for k in range(n_max + 1):
        known.append(solve_casimir(k, known))
    return known


def verify_relations(kappas, m_values=(1, 2, 3, 4)) -> bool:
    """Check L_m kappa_k against the ladder relations for all stored k."""
    for k in range(2, len(kappas)):
        for m in m_values:
            lhs = act_L(m, kappas[k].vector)
            if not lhs == relation_rhs(m, k, kappas):
                return False
    return True


def denominators_divide_kac(kappa: CasimirElement) -> bool:
    """Every coefficient denominator of kappa_n divides D_n(c)."""
    if kappa.n < 2:
        return True
    dn = kac_polynomial(kappa.n).with_vars(("c", "d"))
    for coeff in kappa.vector.terms.values():
        try:
            poly_divexact(dn, coeff.den)
        except ValueError:
            return False
    return True


def numerators_affine_in_d(kappa: CasimirElement) -> bool:
    for coeff in kappa.vector.terms.values():
        if coeff.num.degree_in("d") > 1 or coeff.den.degree_in("d") > 0:
            return False
    return True


def specialize_casimir(kappa: CasimirElement, c0, d0) -> ModuleVector:
    """Evaluate the coefficients at rational (c0, d0)."""
    values = {"c": Fraction(c0), "d": Fraction(d0)}
    if kappa.n >= 2 and kac_polynomial(kappa.n).evaluate({"c": values["c"]}) == 0:
        raise ZeroDivisionError(
            f"c = {c0} is a zero of the weight-{kappa.n} Kac factor")
    return kappa.vector.map_coeffs(lambda r: r.evaluate(values))
