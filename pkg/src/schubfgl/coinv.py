"""Normal forms modulo symmetric polynomials without constant term.

Let S be the ideal of Z[m1, m2][x_1..x_n] generated by the symmetric
polynomials with zero constant term.  Modulo S the complete homogeneous
polynomial h_{n-k+1}(x_1, ..., x_k) vanishes for every k, which yields
the rewriting rule

    x_k^{n-k+1}  ->  -(all other monomials of h_{n-k+1}(x_1..x_k)).

Iterating the rule terminates in the staircase normal form, where the
exponent of x_k is at most n - k.  The n! staircase monomials are a
Z[m1, m2]-basis of the quotient, the rewrite preserves total x-degree,
and the normal form of a product of two normal forms depends only on
the classes of the factors.  All of this powers exact expansion of a
class in a given basis with integer linear algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _it_product

from .fgl import FglSpec, diff_kernel
from .polycore import MU_ZERO, Poly, PolyError, XExp, series_invert_unit
from .report import CheckReport


class NotInSpanError(ValueError):
    """The polynomial is not an integral combination of the basis."""


class BasisDependenceError(ValueError):
    """The proposed basis is linearly dependent modulo S."""


# ----------------------------------------------------------------------
# rewriting

@lru_cache(maxsize=None)
def _replacement_monomials(k: int, n: int) -> tuple[XExp, ...]:
    """Monomials of h_{n-k+1}(x_1..x_k) other than x_k^{n-k+1}.

    Exponent vectors come back in full length n.
    """
    d = n - k + 1
    out = []
    for exps in _compositions(d, k):
        if exps[k - 1] == d:
            continue
        out.append(tuple(exps) + (0,) * (n - k))
    return tuple(out)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        out.extend((first,) + rest for rest in _compositions(total - first, parts - 1))
    return out


def is_staircase(exps: XExp, n: int) -> bool:
    return all(exps[k - 1] <= n - k for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _monomial_normal_form(exps: XExp, n: int) -> tuple[tuple[XExp, int], ...]:
    """Normal form of a single x-monomial as ((staircase exps, coeff), ...)."""
    viol = None
    for k in range(n, 0, -1):
        if exps[k - 1] > n - k:
            viol = k
            break
    if viol is None:
        return ((exps, 1),)
    k = viol
    d = n - k + 1
    base = list(exps)
    base[k - 1] -= d
    acc: dict[XExp, int] = {}
    for rep in _replacement_monomials(k, n):
        sub = tuple(b + r for b, r in zip(base, rep))
        for e2, c2 in _monomial_normal_form(sub, n):
            s = acc.get(e2, 0) - c2
            if s:
                acc[e2] = s
            else:
                acc.pop(e2, None)
    return tuple(sorted(acc.items()))


def normal_form(f: Poly, n: int) -> Poly:
    """The staircase normal form of f modulo S."""
    if f.nvars != n:
        raise PolyError(f"expected a polynomial in {n} variables, got {f.nvars}")
    out: dict = {}
    for (exps, mu), c in f.terms.items():
        for e2, c2 in _monomial_normal_form(exps, n):
            key = (e2, mu)
            s = out.get(key, 0) + c * c2
            if s:
                out[key] = s
            else:
                del out[key]
    return Poly(n, out)


def equals_mod_s(f: Poly, g: Poly, n: int) -> bool:
    return normal_form(f - g, n).is_zero


def staircase_monomials(n: int) -> list[XExp]:
    """All n! staircase exponent vectors, sorted."""
    ranges = [range(n - k, -1, -1) for k in range(1, n + 1)]
    return sorted(tuple(e) for e in _it_product(*ranges))


# ----------------------------------------------------------------------
# exact expansion in a basis

def _bareiss_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns (echelon rows, pivot cols).

    Rows carry the augmented column at index ncols.  All intermediate
    entries stay integral (each division is exact by construction).
    """
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = None
        for rr in range(r, len(m)):
            if m[rr][c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pc = m[r][c]
        for rr in range(r + 1, len(m)):
            factor = m[rr][c]
            for cc in range(c, ncols + 1):
                m[rr][cc] = (m[rr][cc] * pc - factor * m[r][cc]) // prev
        prev = pc
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def expand_in_basis(f: Poly, basis: list[Poly], n: int) -> list[Poly]:
    """Write f modulo S as an integral Z[m1, m2]-combination of basis classes.

    f and every basis element must be graded-homogeneous; the grading
    pins down which monomials m1^a m2^b may appear in each coefficient
    (a + 2b equals the degree gap).  Returns one constant Poly (zero
    variables) per basis element.  Raises NotInSpanError when no exact
    integral combination exists and BasisDependenceError when the basis
    is linearly dependent modulo S.
    """
    homog, fdeg = f.graded_degree()
    if not homog:
        raise PolyError("expansion requires a graded-homogeneous polynomial")
    nfs = []
    degs = []
    for j, b in enumerate(basis):
        bh, bdeg = b.graded_degree()
        if not bh or bdeg is None:
            raise PolyError(f"basis element {j} must be graded-homogeneous and nonzero")
        nfs.append(normal_form(b, n))
        degs.append(bdeg)
    nf_f = normal_form(f, n)
    if nf_f.is_zero:
        return [Poly.zero(0) for _ in basis]

    # Unknowns: one per basis element and admissible (a, b).
    unknowns: list[tuple[int, int, int]] = []
    columns: list[Poly] = []
    for j, (nf_b, bdeg) in enumerate(zip(nfs, degs)):
        if nf_b.is_zero:
            raise BasisDependenceError(f"basis element {j} vanishes modulo S")
        gap = bdeg - fdeg
        if gap < 0:
            continue
        for b2 in range(gap // 2 + 1):
            a = gap - 2 * b2
            unknowns.append((j, a, b2))
            columns.append(nf_b.mul_mu(a, b2))

    coords = sorted(
        {key for col in columns for key in col.terms} | set(nf_f.terms),
    )
    coord_index = {key: i for i, key in enumerate(coords)}
    rows = [[0] * (len(unknowns) + 1) for _ in coords]
    for ci, col in enumerate(columns):
        for key, c in col.terms.items():
            rows[coord_index[key]][ci] = c
    for key, c in nf_f.terms.items():
        rows[coord_index[key]][len(unknowns)] = c

    ech, pivots = _bareiss_echelon(rows, len(unknowns))
    rank = len(pivots)
    for row in ech[rank:]:
        if row[len(unknowns)]:
            raise NotInSpanError("polynomial is not in the span of the basis")
    if rank < len(unknowns):
        raise BasisDependenceError("basis is not linearly independent modulo S")

    sol: list[Fraction] = [Fraction(0)] * len(unknowns)
    for r in range(rank - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(ech[r][len(unknowns)])
        for cc in range(c + 1, len(unknowns)):
            acc -= ech[r][cc] * sol[cc]
        sol[c] = acc / ech[r][c]
    ints: list[int] = []
    for v in sol:
        if v.denominator != 1:
            raise NotInSpanError("no integral combination exists")
        ints.append(int(v))

    out = [Poly.zero(0) for _ in basis]
    for (j, a, b2), v in zip(unknowns, ints):
        if v:
            out[j] = out[j] + Poly.const(0, v, (a, b2))
    return out


# ----------------------------------------------------------------------
# Vandermonde congruences

def vandermonde_poly(n: int) -> Poly:
    """The product of (x_i - x_j) over i < j."""
    out = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (Poly.variable(n, i) - Poly.variable(n, j))
    return out


def top_staircase_class(n: int) -> Poly:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return Poly.monomial(n, tuple(n - k for k in range(1, n + 1)))


def vandermonde_check(spec: FglSpec, n: int, cap: int) -> CheckReport:
    """Two congruences modulo S.

    (a) The Vandermonde product is congruent to n! times the top
        staircase monomial (independent of the law).
    (b) The deformed product of F(x_i, chi(x_j)) over i < j, expanded as
        a series through degree cap, is congruent to the Vandermonde
        product.  Anything above the top staircase degree n(n-1)/2 is
        congruent to zero, so cap beyond that bound makes the truncated
        comparison exact.
    """
    top = n * (n - 1) // 2
    if cap <= top:
        raise PolyError(f"cap must exceed the top staircase degree {top}")
    rep = CheckReport(f"vandermonde[{spec.label()},n={n},cap={cap}]")
    from math import factorial

    vdm = vandermonde_poly(n)
    rep.add(
        "part (a): product of (x_i - x_j) = n! * top staircase class",
        equals_mod_s(vdm, top_staircase_class(n).scale(factorial(n)), n),
    )

    kernel = diff_kernel(spec)
    prod = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p_ij = kernel.inject_vars(n, (i, j))
            factor = (Poly.variable(n, i) - Poly.variable(n, j)) * series_invert_unit(
                p_ij, cap
            )
            prod = (prod * factor).truncate(cap)
    rep.add(
        "part (b): product of F(x_i, chi(x_j)) = product of (x_i - x_j)",
        equals_mod_s(prod, vdm, n),
    )
    return rep
