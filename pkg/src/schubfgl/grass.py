"""Grassmannian products: smooth classes times resolution classes.

A rectangle b^a inside the k x (n-k) box names a smooth Schubert
variety isomorphic to Gr(a, a+b).  Multiplying its class against the
resolution class of any partition lam collapses combinatorially: the
product is a single class (coefficient one) when lam contains the dual
rectangle, and zero otherwise.  The surviving partition is obtained by
dualizing lam in the ambient box and then dualizing again inside the
a x b box.

For Gr(2,4) the six resolution classes have hard-coded pullback words
(the resolutions stay resolutions after pulling back only in this
case), so the combinatorial rule can be cross-checked against honest
polynomial arithmetic: multiply representatives, reduce to normal form,
expand over the six-class basis.  At m2 = 0 the classes are
word-independent and every partition has a canonical representative,
which extends the cross-check to any small Grassmannian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combi import (
    BoxPartition,
    CapacityError,
    Permutation,
    box_partitions,
    canonical_word,
    partition_dual,
    partition_dual_z,
    partition_leq,
    partition_to_perm,
    Word,
)
from .coinv import expand_in_basis, normal_form
from .fgl import FglSpec, HYPERBOLIC, formal_inverse
from .polycore import Poly
from .report import CheckReport
from .schubert import SchubertContext, schubert_polynomial
from .report import CheckCase


@dataclass(frozen=True)
class GrassContext:
    """Gr(k, n) with a formal group law attached."""

    k: int
    n: int
    spec: FglSpec

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def m(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class RectangleClass:
    """The rectangle partition b^a: a rows of length b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"rectangle needs a, b >= 1, got {self.a}x{self.b}")

    def validate(self, k: int, n: int) -> None:
        if self.a > k or self.b > n - k:
            raise ValueError(
                f"rectangle {self.a}x{self.b} does not fit the {k}x{n - k} box"
            )

    def as_partition(self, k: int, n: int) -> BoxPartition:
        self.validate(k, n)
        return BoxPartition(k, n - k, (self.b,) * self.a)


def rect_dual(r: RectangleClass, k: int, n: int) -> BoxPartition:
    """The smallest partition whose product with b^a survives.

    k - a full rows followed by a rows cut down to n - k - b.
    """
    r.validate(k, n)
    m = n - k
    return BoxPartition(k, m, (m,) * (k - r.a) + (m - r.b,) * r.a)


def smooth_product(
    ctx: GrassContext, r: RectangleClass, lam: BoxPartition
) -> BoxPartition | None:
    """[X_{b^a}] times the class of lam; None is the zero class.

    Nonzero exactly when lam contains rect_dual(r); then the result is
    the double dual: complement lam in the ambient box, then complement
    that inside a x b, padded back to the ambient box.  The point class
    is the all-zero partition, which is distinct from None.
    """
    if (lam.k, lam.m) != (ctx.k, ctx.m):
        raise ValueError(f"{lam} is not drawn in the {ctx.k}x{ctx.m} box")
    threshold = rect_dual(r, ctx.k, ctx.n)
    if not partition_leq(threshold, lam):
        return None
    inner = partition_dual(lam)
    # containment of the dual rectangle bounds the dual of lam by a x b
    dual_z = partition_dual_z(inner, r.a, r.b)
    out = BoxPartition(ctx.k, ctx.m, dual_z.parts)
    codim = ctx.k * ctx.m - r.a * r.b
    if out.size() != lam.size() - codim:
        raise AssertionError(
            f"weight bookkeeping broke: |{out}| != |{lam}| - {codim}"
        )
    return out


# ----------------------------------------------------------------------
# the Gr(2,4) dictionary

# canonical display order of the six classes
GR24_ORDER: tuple[tuple[int, int], ...] = (
    (0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (2, 2),
)

_GR24_WORDS: dict[tuple[int, int], Word] = {
    (0, 0): (3, 1),
    (1, 0): (2, 3, 1),
    (2, 0): (3, 2, 3, 1),
    (1, 1): (1, 2, 3, 1),
    (2, 1): (3, 1, 2, 3, 1),
    (2, 2): (2, 3, 1, 2, 3, 1),
}


def gr24_word(lam: BoxPartition) -> Word:
    """The pullback word of the Gr(2,4) resolution class of lam.

    Words are read innermost-first: (2, 3, 1) means apply C_2, then
    C_3, then C_1.
    """
    if (lam.k, lam.m) != (2, 2):
        raise ValueError(f"{lam} is not drawn in the 2x2 box")
    return _GR24_WORDS[(lam.parts[0], lam.parts[1])]


def gr24_basis(spec: FglSpec) -> list[Poly]:
    """Normal forms of the six resolution classes, in GR24_ORDER."""
    sctx = SchubertContext(spec, 4)
    out = []
    for parts in GR24_ORDER:
        lam = BoxPartition(2, 2, parts)
        out.append(normal_form(schubert_polynomial(sctx, gr24_word(lam)), 4))
    return out


def dual_root_monomial(k: int, n: int, power: int, spec: FglSpec) -> Poly:
    """Normal form of (chi(x_{k+1}) ... chi(x_n))^power.

    chi is the formal inverse series; truncating at the top staircase
    degree is exact because higher homogeneous components have no
    staircase monomials left to land on.
    """
    cap = n * (n - 1) // 2
    chi = formal_inverse(spec, cap)
    out = Poly.one(n)
    for v in range(k + 1, n + 1):
        factor = chi.inject_vars(n, (v,))
        for _ in range(power):
            out = (out * factor).truncate(cap)
    return normal_form(out, n)


def gr24_smooth_poly(r: RectangleClass, spec: FglSpec = HYPERBOLIC) -> Poly:
    """Polynomial representative of the smooth class [X_{b^a}] in Gr(2,4).

    The full-height rectangle family lives in the plain variables
    (x_1 x_2 for b = 1), but the full-width family is a monomial in the
    dual roots: chi(x_3) chi(x_4) for a = 1.  The plain monomial
    x_3 x_4 agrees with it only when chi(x) = -x; at m1 != 0 it drags
    extra m1-multiples of lower classes into every product, while the
    dual-root representative matches the canonical m2 = 0 class of
    (2,0) and keeps each product a single class.  The line (a = b = 1)
    carries its own law-dependent correction term.
    """
    r.validate(2, 4)
    key = (r.a, r.b)
    if key == (2, 2):
        return Poly.one(4)
    if key == (2, 1):
        return Poly.monomial(4, (1, 1, 0, 0))
    if key == (1, 2):
        return dual_root_monomial(2, 4, 1, spec)
    # the line: x_1 x_2 (x_1 + x_2) - m1 x_1^2 x_2^2
    line = (
        Poly.monomial(4, (2, 1, 0, 0))
        + Poly.monomial(4, (1, 2, 0, 0))
        - Poly.monomial(4, (2, 2, 0, 0), (1, 0))
    )
    return spec.specialize(line)


def all_rectangles(k: int, n: int) -> list[RectangleClass]:
    return [
        RectangleClass(a, b) for a in range(1, k + 1) for b in range(1, n - k + 1)
    ]


def _expected_vector(
    target: BoxPartition | None, order: list[BoxPartition]
) -> list[Poly]:
    out = [Poly.zero(0) for _ in order]
    if target is not None:
        idx = next(
            i for i, mu in enumerate(order) if mu.parts == target.parts
        )
        out[idx] = Poly.one(0)
    return out


def cross_check_gr24(spec: FglSpec = HYPERBOLIC) -> CheckReport:
    """Combinatorial rule vs polynomial arithmetic, all 24 Gr(2,4) cases.

    For each rectangle and each partition: multiply the smooth
    representative by the resolution class, reduce, expand over the
    six-class basis, and compare with the single class (or zero)
    predicted by smooth_product.
    """
    rep = CheckReport(f"gr24-cross-check[{spec.label()}]")
    ctx = GrassContext(2, 4, spec)
    sctx = SchubertContext(spec, 4)
    order = [BoxPartition(2, 2, parts) for parts in GR24_ORDER]
    basis = gr24_basis(spec)
    for r in all_rectangles(2, 4):
        smooth = gr24_smooth_poly(r, spec)
        for lam in order:
            rule = smooth_product(ctx, r, lam)
            product = normal_form(smooth * schubert_polynomial(sctx, gr24_word(lam)), 4)
            coeffs = expand_in_basis(product, basis, 4)
            expected = _expected_vector(rule, order)
            ok = all((c - e).is_zero for c, e in zip(coeffs, expected))
            rule_txt = rule.render() if rule is not None else "0"
            rep.add(
                f"rect={r.a},{r.b} lam=({lam.render()}) -> {rule_txt}",
                ok,
                detail="" if ok else "expansion disagrees with the product rule",
            )
    return rep


def class_representative(ctx: GrassContext, lam: BoxPartition) -> Poly:
    """Representative of the class of lam at m2 = 0.

    The resolution class of lam corresponds to the word of
    w_0 * w_{dual(lam)}; with m2 = 0 any reduced word gives the same
    polynomial, so the canonical word of that permutation is canonical
    for the class as well.
    """
    if not ctx.spec.mu2_is_zero:
        raise ValueError("word-independent representatives need m2 = 0")
    w0 = Permutation.longest(ctx.n)
    w = w0 * partition_to_perm(partition_dual(lam), ctx.n)
    sctx = SchubertContext(ctx.spec, ctx.n)
    return schubert_polynomial(sctx, canonical_word(w))


def chow_k_cross_check(k: int, n: int, spec: FglSpec) -> CheckReport:
    """Product rule vs polynomial arithmetic at m2 = 0, all (r, lam).

    Both factors use canonical-word representatives, so this covers
    every rectangle, not only the ones with monomial formulas.
    """
    if not spec.mu2_is_zero:
        raise ValueError("chow/K cross-check requires an m2 = 0 law")
    if k * (n - k) > 9:
        raise CapacityError(f"Gr({k},{n}) exceeds the k(n-k) <= 9 bound")
    rep = CheckReport(f"chowk-cross-check[{spec.label()},k={k},n={n}]")
    ctx = GrassContext(k, n, spec)
    order = box_partitions(k, n - k)
    reps = {mu.parts: class_representative(ctx, mu) for mu in order}
    basis = [normal_form(reps[mu.parts], n) for mu in order]
    for r in all_rectangles(k, n):
        smooth = reps[r.as_partition(k, n).parts]
        for lam in order:
            rule = smooth_product(ctx, r, lam)
            product = normal_form(smooth * reps[lam.parts], n)
            coeffs = expand_in_basis(product, basis, n)
            expected = _expected_vector(rule, order)
            ok = all((c - e).is_zero for c, e in zip(coeffs, expected))
            rule_txt = rule.render() if rule is not None else "0"
            rep.add(
                f"rect={r.a},{r.b} lam=({lam.render()}) -> {rule_txt}",
                ok,
                detail="" if ok else "expansion disagrees with the product rule",
            )
    return rep
