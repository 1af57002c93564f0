"""Divided-difference operators twisted by a formal group law.

With p the difference kernel of the chosen law, the push-pull operator
and its companion act on polynomials by

    C_i(f) = (f * p(x_i, x_{i+1}) - sigma_i(f * p(x_i, x_{i+1}))) / (x_i - x_{i+1})
    D_i(f) = -((f - sigma_i(f)) * p(x_{i+1}, x_i)) / (x_i - x_{i+1})

Both divisions are exact on polynomials, both operators are left
R[x]^{sigma_i}-linear, drop graded degree by exactly one on homogeneous
input, and satisfy D_i = kappa - C_i with kappa the kernel constant.

At m2 = 0 the operators satisfy the braid relations.  For the full
hyperbolic law only the twisted form holds:

    C_i C_{i+1} C_i + m2 C_i = C_{i+1} C_i C_{i+1} + m2 C_{i+1}.

The naive braid relation genuinely fails there (x_1^2 x_2 is a witness),
which is why polynomials produced by words of operators depend on the
word and not just on the permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .fgl import FglSpec, diff_kernel, kappa_of
from .polycore import Poly, PolyError
from .report import CheckReport


@dataclass(frozen=True)
class OperatorContext:
    """A formal group law fixed together with the ambient variable count."""

    spec: FglSpec
    nvars: int

    def __post_init__(self):
        if self.nvars < 2:
            raise PolyError("operators need at least two variables")


@lru_cache(maxsize=None)
def _kernel_at(spec: FglSpec, nvars: int, i: int, swapped: bool) -> Poly:
    p = diff_kernel(spec)
    pos = (i + 1, i) if swapped else (i, i + 1)
    return p.inject_vars(nvars, pos)


def _check_index(ctx: OperatorContext, i: int) -> None:
    if not 1 <= i <= ctx.nvars - 1:
        raise PolyError(f"operator index {i} out of range [1, {ctx.nvars - 1}]")


def apply_c(ctx: OperatorContext, i: int, f: Poly) -> Poly:
    """C_i(f), exact polynomial output."""
    _check_index(ctx, i)
    if f.nvars != ctx.nvars:
        raise PolyError("polynomial does not live in the context ring")
    fp = f * _kernel_at(ctx.spec, ctx.nvars, i, False)
    return (fp - fp.sigma(i)).div_diff(i)


def apply_delta(ctx: OperatorContext, i: int, f: Poly) -> Poly:
    """D_i(f), exact polynomial output."""
    _check_index(ctx, i)
    if f.nvars != ctx.nvars:
        raise PolyError("polynomial does not live in the context ring")
    num = (f - f.sigma(i)) * _kernel_at(ctx.spec, ctx.nvars, i, True)
    return (-num).div_diff(i)


def apply_word(ctx: OperatorContext, word: Iterable[int], f: Poly) -> Poly:
    """Apply C along the word left to right: the first letter acts first."""
    for i in word:
        f = apply_c(ctx, i, f)
    return f


def kappa_poly(ctx: OperatorContext) -> Poly:
    return kappa_of(ctx.spec).extend_vars(ctx.nvars)


# ----------------------------------------------------------------------
# seeded randomized relation checks

def random_poly(
    rng: random.Random,
    nvars: int,
    terms: int = 4,
    max_total_deg: int = 4,
    coeff_lo: int = -3,
    coeff_hi: int = 3,
    max_mu: int = 1,
) -> Poly:
    """A small random polynomial: up to `terms` terms of total x-degree
    at most 4 with coefficients in [-3, 3] and mu-exponents at most 1."""
    acc: dict = {}
    for _ in range(terms):
        d = rng.randint(0, max_total_deg)
        exps = [0] * nvars
        for _ in range(d):
            exps[rng.randrange(nvars)] += 1
        key = (tuple(exps), (rng.randint(0, max_mu), rng.randint(0, max_mu)))
        acc[key] = acc.get(key, 0) + rng.randint(coeff_lo, coeff_hi)
    return Poly(nvars, acc)


def twisted_braid_check(
    ctx: OperatorContext, i: int, samples: int = 20, seed: int = 0
) -> CheckReport:
    """C_i C_{i+1} C_i + m2 C_i = C_{i+1} C_i C_{i+1} + m2 C_{i+1} on samples."""
    _check_index(ctx, i + 1)
    rep = CheckReport(f"twisted-braid[{ctx.spec.label()},n={ctx.nvars},i={i}]")
    mu2 = ctx.spec.mu2_poly(ctx.nvars)
    rng = random.Random(seed)
    for s in range(samples):
        f = random_poly(rng, ctx.nvars)
        lhs = apply_word(ctx, (i, i + 1, i), f) + mu2 * apply_c(ctx, i, f)
        rhs = apply_word(ctx, (i + 1, i, i + 1), f) + mu2 * apply_c(ctx, i + 1, f)
        rep.add(f"sample {s}", lhs == rhs)
    return rep


def naive_braid_check(
    ctx: OperatorContext, i: int, samples: int = 20, seed: int = 0
) -> CheckReport:
    """C_i C_{i+1} C_i = C_{i+1} C_i C_{i+1} on samples.

    This holds when m2 vanishes and fails in general; each failing case
    records whether the defect matches m2 (C_{i+1} - C_i) f, the
    correction predicted by the twisted relation.
    """
    _check_index(ctx, i + 1)
    rep = CheckReport(f"naive-braid[{ctx.spec.label()},n={ctx.nvars},i={i}]")
    mu2 = ctx.spec.mu2_poly(ctx.nvars)
    rng = random.Random(seed)
    for s in range(samples):
        f = random_poly(rng, ctx.nvars)
        lhs = apply_word(ctx, (i, i + 1, i), f)
        rhs = apply_word(ctx, (i + 1, i, i + 1), f)
        if lhs == rhs:
            rep.add(f"sample {s}", True, detail="braid holds")
        else:
            defect_ok = (lhs - rhs) == mu2 * (
                apply_c(ctx, i + 1, f) - apply_c(ctx, i, f)
            )
            rep.add(
                f"sample {s}",
                False,
                annotated=defect_ok,
                detail="braid fails; defect matches the m2 correction"
                if defect_ok
                else "braid fails with an unexplained defect",
            )
    return rep


def delta_identity_check(
    ctx: OperatorContext, i: int, samples: int = 20, seed: int = 0
) -> CheckReport:
    """D_i f = kappa f - C_i f on samples."""
    _check_index(ctx, i)
    rep = CheckReport(f"delta-identity[{ctx.spec.label()},n={ctx.nvars},i={i}]")
    kap = kappa_poly(ctx)
    rng = random.Random(seed)
    for s in range(samples):
        f = random_poly(rng, ctx.nvars)
        rep.add(f"sample {s}", apply_delta(ctx, i, f) == kap * f - apply_c(ctx, i, f))
    return rep
