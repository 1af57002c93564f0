"""Formal group laws of hyperbolic type.

The two-parameter law over Z[m1, m2] is

    F(x, y) = (x + y - m1*x*y) / (1 + m2*x*y),

with formal inverse chi(x) = -x / (1 - m1*x).  Setting m1 = m2 = 0
gives the additive law x + y, setting m2 = 0 the multiplicative law
x + y - m1*x*y, and setting m1 = 0 the Lorentz law
(x + y) / (1 + m2*x*y).

The difference kernel p is the polynomial with

    1 / F(x, chi(y)) = p(x, y) / (x - y),

concretely p(x, y) = 1 - m1*y - m2*x*y (so the first slot carries the
plain linear variable and the second the inverted one; callers bind the
slots to x_i and x_{i+1} in that order).  The kernel constant

    kappa = (p(x, y) - p(y, x)) / (x - y)

equals m1 for the m2-free slice of the family and 0, m1, m1, 0 for the
additive, multiplicative, hyperbolic and Lorentz laws respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polycore import MU_ZERO, Poly, PolyError, series_invert_unit

KINDS = ("additive", "multiplicative", "hyperbolic", "lorentz")

# Kinds in which m1 (resp. m2) is forced to vanish.
_MU1_ZERO_KINDS = ("additive", "lorentz")
_MU2_ZERO_KINDS = ("additive", "multiplicative")


@dataclass(frozen=True)
class FglSpec:
    """A formal group law choice plus optional integer specializations.

    mu1/mu2 of None means "keep the parameter symbolic".  A kind that
    forces a parameter to zero accepts only None or 0 for it.
    """

    kind: str
    mu1: int | None = None
    mu2: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown formal group law kind {self.kind!r}")
        if self.kind in _MU1_ZERO_KINDS:
            if self.mu1 not in (None, 0):
                raise ValueError(f"{self.kind} law forces mu1 = 0, got {self.mu1}")
            object.__setattr__(self, "mu1", 0)
        if self.kind in _MU2_ZERO_KINDS:
            if self.mu2 not in (None, 0):
                raise ValueError(f"{self.kind} law forces mu2 = 0, got {self.mu2}")
            object.__setattr__(self, "mu2", 0)

    # -- parameter handling -------------------------------------------

    def specialize(self, f: Poly) -> Poly:
        return f.specialize_mu(self.mu1, self.mu2)

    def mu1_poly(self, nvars: int) -> Poly:
        if self.mu1 is not None:
            return Poly.const(nvars, self.mu1)
        return Poly.const(nvars, 1, (1, 0))

    def mu2_poly(self, nvars: int) -> Poly:
        if self.mu2 is not None:
            return Poly.const(nvars, self.mu2)
        return Poly.const(nvars, 1, (0, 1))

    @property
    def mu2_is_zero(self) -> bool:
        return self.mu2 == 0

    @property
    def mu2_is_symbolic(self) -> bool:
        return self.mu2 is None

    def mu2_zeroed(self) -> "FglSpec":
        """The m2 = 0 degeneration, keeping the m1 behaviour."""
        if self.kind in _MU2_ZERO_KINDS:
            return self
        if self.kind == "hyperbolic":
            return FglSpec("multiplicative", mu1=self.mu1)
        return FglSpec("additive")

    def label(self) -> str:
        bits = [self.kind]
        if self.mu1 is not None and self.kind not in _MU1_ZERO_KINDS:
            bits.append(f"mu1={self.mu1}")
        if self.mu2 is not None and self.kind not in _MU2_ZERO_KINDS:
            bits.append(f"mu2={self.mu2}")
        return ",".join(bits)


ADDITIVE = FglSpec("additive")
MULTIPLICATIVE = FglSpec("multiplicative")
HYPERBOLIC = FglSpec("hyperbolic")
LORENTZ = FglSpec("lorentz")


def _sym_numerator() -> Poly:
    # x + y - m1*x*y in two variables
    return Poly(2, {
        ((1, 0), MU_ZERO): 1,
        ((0, 1), MU_ZERO): 1,
        ((1, 1), (1, 0)): -1,
    })


def _sym_denominator() -> Poly:
    # 1 + m2*x*y
    return Poly(2, {
        ((0, 0), MU_ZERO): 1,
        ((1, 1), (0, 1)): 1,
    })


def fgl_sum_series(spec: FglSpec, cap: int) -> Poly:
    """The series F(x, y) through total x-degree cap, as a 2-variable Poly."""
    if cap < 1:
        raise PolyError("cap must be at least 1 to see the linear terms")
    inv = series_invert_unit(_sym_denominator(), cap)
    return spec.specialize((_sym_numerator() * inv).truncate(cap))


def formal_inverse(spec: FglSpec, cap: int) -> Poly:
    """The series chi(x) = -x/(1 - m1*x) through degree cap, 1 variable."""
    if cap < 1:
        raise PolyError("cap must be at least 1")
    denom = Poly(1, {((0,), MU_ZERO): 1, ((1,), (1, 0)): -1})
    x = Poly.variable(1, 1)
    return spec.specialize((-x * series_invert_unit(denom, cap - 1)).truncate(cap))


def diff_kernel(spec: FglSpec) -> Poly:
    """p(x, y) with 1/F(x, chi(y)) = p(x, y)/(x - y); a 2-variable Poly.

    Closed forms: 1 (additive), 1 - m1*y (multiplicative),
    1 - m1*y - m2*x*y (hyperbolic), 1 - m2*x*y (lorentz).
    """
    p = Poly(2, {
        ((0, 0), MU_ZERO): 1,
        ((0, 1), (1, 0)): -1,
        ((1, 1), (0, 1)): -1,
    })
    return spec.specialize(p)


def kappa_of(spec: FglSpec) -> Poly:
    """(p(x, y) - p(y, x))/(x - y), a constant returned with zero variables."""
    p = diff_kernel(spec)
    q = (p - p.sigma(1)).div_diff(1)
    const: dict = {}
    for (exps, mu), c in q.terms.items():
        if any(exps):
            raise PolyError("difference kernel asymmetry is not constant")
        const[((), mu)] = c
    return Poly(0, const)


def _subst_second_var(f: Poly, g: Poly, cap: int) -> Poly:
    """Substitute the 1-variable series g for the second variable of f.

    Both input and output are truncated at total x-degree cap; g must
    have no constant term so that substitution respects the filtration.
    """
    if f.nvars != 2 or g.nvars != 1:
        raise PolyError("substitution expects a 2-variable target and 1-variable series")
    if any(not any(exps) for (exps, _mu) in g.terms):
        raise PolyError("substituted series must have zero constant term")
    g2 = g.inject_vars(2, (2,))
    powers: dict[int, Poly] = {0: Poly.one(2)}
    out = Poly.zero(2)
    for (exps, mu), c in f.terms.items():
        i, j = exps
        if i > cap:
            continue
        if j not in powers:
            pw = powers[max(powers)]
            for k in range(max(powers) + 1, j + 1):
                pw = (pw * g2).truncate(cap)
                powers[k] = pw
        term = powers[j] * Poly.monomial(2, (i, 0), mu, c)
        out = out + term.truncate(cap)
    return out.truncate(cap)


def diff_kernel_series_check(spec: FglSpec, cap: int) -> bool:
    """Verify p(x, y) * F(x, chi(y)) = x - y through degree cap."""
    F = fgl_sum_series(spec, cap)
    chi = formal_inverse(spec, cap)
    lhs = (diff_kernel(spec) * _subst_second_var(F, chi, cap)).truncate(cap)
    rhs = Poly(2, {((1, 0), MU_ZERO): 1, ((0, 1), MU_ZERO): -1})
    return lhs == rhs


def inverse_series_check(spec: FglSpec, cap: int) -> bool:
    """Verify F(x, chi(x)) = 0 through degree cap."""
    F = fgl_sum_series(spec, cap)
    chi = formal_inverse(spec, cap)
    two_var = _subst_second_var(F, chi, cap)
    collapsed = two_var.inject_vars(1, (1, 1)).truncate(cap)
    return collapsed.is_zero
