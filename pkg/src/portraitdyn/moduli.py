"""Counting formulas, realizability and dimension of portrait moduli
spaces, and the fixed/periodic-point multiplier layer for maps on P^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

import sympy

from . import forms
from .maps import MapError, RationalMap
from .portraits import Portrait, is_subportrait, portrait_statistics


class ModuliError(ValueError):
    pass


def nu(d: int, N: int, n: int) -> int:
    """Number of points of formal period n (with multiplicity) for a
    generic degree-d endomorphism of P^N:
    sum over k | n of mu(n/k) * (1 + d^k + ... + d^(Nk))."""
    if d < 2 or N < 1 or n < 1:
        raise ModuliError("need d >= 2, N >= 1, n >= 1")
    total = 0
    for k in sympy.divisors(n):
        mu = int(sympy.mobius(n // k))
        if mu:
            total += mu * sum(d ** (j * k) for j in range(N + 1))
    return total


def nu_pre(d: int, N: int, m: int, n: int) -> int:
    """Count of preperiodic type (m, n): d^(N(m-1)) (d^N - 1) nu for m >= 1."""
    if m < 0:
        raise ModuliError("preperiod must be nonnegative")
    if m == 0:
        return nu(d, N, n)
    return d ** (N * (m - 1)) * (d ** N - 1) * nu(d, N, n)


def dim_end(d: int, N: int) -> int:
    """Dimension of the space of degree-d endomorphisms of P^N."""
    return (N + 1) * comb(N + d, d) - 1


def dim_moduli_space(d: int, N: int) -> int:
    return dim_end(d, N) - ((N + 1) ** 2 - 1)


def unweighted_nonempty(p: Portrait, d: int, N: int) -> bool:
    """Certified nonemptiness test for the moduli space of an unweighted
    portrait (an equivalence in characteristic zero): every vertex needs
    at most d^N preimages and at most nu(n) vertices of each exact period."""
    if not p.is_unweighted:
        raise ModuliError("portrait must be unweighted")
    stats = portrait_statistics(p)
    if stats.max_preimage_count > d ** N:
        return False
    return all(stats.exact_period_counts[n] <= nu(d, N, n)
               for n in stats.exact_period_counts)


@dataclass(frozen=True)
class NecessaryConditions:
    preimage_weights: bool       # (I)   max total weight over a fiber <= d
    ramification: bool           # (II)  sum (weight - 1) <= 2d - 2
    period_counts: dict          # (III) exact-period-n count <= nu(n)
    overall: bool


def weighted_necessary_conditions(p: Portrait, d: int) -> NecessaryConditions:
    """Necessary (never sufficient) conditions for a weighted portrait to
    be realized by a degree-d map on P^1."""
    if d < 2:
        raise ModuliError("degree must be at least 2")
    fiber = {v: 0 for v in p.vertices}
    for v in p.domain:
        fiber[p.phi[v]] += p.weight(v)
    cond1 = max(fiber.values(), default=0) <= d
    cond2 = sum(p.weight(v) - 1 for v in p.domain) <= 2 * d - 2
    stats = portrait_statistics(p)
    cond3 = {n: stats.exact_period_counts[n] <= nu(d, 1, n)
             for n in stats.exact_period_counts}
    return NecessaryConditions(cond1, cond2, cond3,
                               cond1 and cond2 and all(cond3.values()))


@dataclass(frozen=True)
class DimensionReport:
    dim_end: object              # int or None when the space is empty
    dim_moduli: object
    nonempty_verdict: str        # empty-certified | nonempty-certified | necessary-conditions-hold
    caveats: tuple


def expected_dimension(p: Portrait, d: int, N: int = 1) -> DimensionReport:
    """Expected dimension of the portrait moduli space.

    Unweighted portraits (any N) get a certified verdict; weighted
    portraits are supported for N = 1 only, where the dimension formula
    (2d - 2) - sum(weight - 1) + #(V \\ V0) concerns the non-Lattes locus
    and nonemptiness is only a necessary-conditions check.
    """
    if p.is_unweighted:
        if unweighted_nonempty(p, d, N):
            de = dim_end(d, N) + N * p.zeta
            return DimensionReport(de, de - ((N + 1) ** 2 - 1),
                                   "nonempty-certified", ())
        return DimensionReport(None, None, "empty-certified", ())
    if N != 1:
        raise ModuliError("weighted portraits are supported for N = 1 only")
    conditions = weighted_necessary_conditions(p, d)
    if not conditions.overall:
        return DimensionReport(None, None, "empty-certified", ())
    dm = (2 * d - 2) - sum(p.weight(v) - 1 for v in p.domain) + p.zeta
    caveats = ["dimension is that of the non-Lattes locus"]
    if isqrt(d) ** 2 == d:
        caveats.append(f"degree {d} is a square, so flexible Lattes maps exist "
                       "and are excluded from the count")
    return DimensionReport(dm + 3, dm, "necessary-conditions-hold", tuple(caveats))


def fiber_image_dims(p_prime: Portrait, p: Portrait, d: int, N: int) -> dict:
    """Fiber dimension and image codimension of the restriction map
    between the moduli spaces of an unweighted portrait and an
    unweighted subportrait."""
    if not (p.is_unweighted and p_prime.is_unweighted):
        raise ModuliError("both portraits must be unweighted")
    if not is_subportrait(p_prime, p):
        raise ModuliError("first portrait is not a subportrait of the second")
    if not unweighted_nonempty(p, d, N):
        raise ModuliError("the ambient portrait moduli space is empty")
    meet = set(p_prime.vertices)
    n = sum(1 for comp in p.components()
            if meet & set(comp) and not p.component_has_cycle(comp))
    return {"fiber_dim": N * (p.zeta - n),
            "image_codim": N * (p_prime.zeta - n)}


# -- multipliers ---------------------------------------------------------


@dataclass(frozen=True)
class MultiplierData:
    period: int
    poly: tuple                  # monic, Fraction coefficients, descending
    symmetric_functions: tuple   # elementary symmetric values of the roots

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


def _elim_candidates():
    yield (1, 0, 0, 1)
    yield (0, 1, 1, 0)
    c = 1
    while True:
        yield (c, 1, 1, 0)
        yield (-c, 1, 1, 0)
        c += 1


def multiplier_polynomial(f: RationalMap, n: int) -> MultiplierData:
    """Monic polynomial whose roots (with multiplicity) are the multipliers
    of f^n at the points of formal period n, eliminated exactly through a
    resultant in a chart where no formal-period-n point is at infinity."""
    target = nu(f.degree, 1, n)
    x, lam = sympy.symbols("x lam")
    tried = 0
    for m in _elim_candidates():
        tried += 1
        if tried > target + 4:
            raise MapError("no chart avoids the formal-period points")  # pragma: no cover
        g = f.conjugate(m)
        dyn = g.dynatomic(n)
        if dyn[0] == 0:
            continue
        psi = sympy.Poly(list(dyn), x)
        g0, g1 = g.iterate_pair(n)
        a = sympy.Poly(list(g0), x)
        b = sympy.Poly(list(g1), x)
        wr = a.diff(x) * b - a * b.diff(x)
        res = sympy.resultant((lam * b ** 2 - wr).as_expr(), psi.as_expr(), x)
        poly = sympy.Poly(res, lam)
        if poly.degree() != target:
            continue  # pragma: no cover
        monic = poly.monic()
        coeffs = tuple(Fraction(c.p, c.q) for c in monic.all_coeffs())
        sym = tuple((-1) ** k * coeffs[k] for k in range(1, len(coeffs)))
        return MultiplierData(n, coeffs, sym)


def milnor_coordinates(f: RationalMap):
    """(s1, s2): the first two elementary symmetric functions of the three
    fixed-point multipliers of a degree-2 map."""
    if f.degree != 2:
        raise MapError("Milnor coordinates are defined for degree 2 only")
    data = multiplier_polynomial(f, 1)
    return data.symmetric_functions[0], data.symmetric_functions[1]


def ueda_sum(f: RationalMap, k: int) -> Fraction:
    """Exact value of sum lambda^k / (1 - lambda) over the fixed points.

    Requires every fixed point to be simple (no multiplier equal to 1);
    equals 1 for k = 0 and -d for k = 1.  Computed symmetrically via
    traces of the companion matrix of the fixed-point multiplier
    polynomial, so no splitting field is ever constructed.
    """
    if k not in (0, 1):
        raise ModuliError("only k in {0, 1} is meaningful on P^1")
    data = multiplier_polynomial(f, 1)
    coeffs = data.poly
    if sum(coeffs) == 0:
        raise MapError("a fixed-point multiplier equals 1 (non-simple fixed point)")
    size = len(coeffs) - 1
    comp = sympy.zeros(size)
    for i in range(1, size):
        comp[i, i - 1] = 1
    for i in range(size):
        comp[i, size - 1] = -sympy.Rational(coeffs[size - i].numerator,
                                            coeffs[size - i].denominator)
    mat = (sympy.eye(size) - comp).inv()
    if k == 1:
        mat = comp * mat
    val = sympy.Rational(mat.trace())
    return Fraction(val.p, val.q)


# -- worked families used as exact regression fixtures --------------------


@dataclass(frozen=True)
class CubicFixedFamily:
    map: RationalMap
    resultant: Fraction
    fourth_fixed_multiplier: Fraction


def cubic_three_double_fixed_family(a, b) -> CubicFixedFamily:
    """The cubic family (a z^3 + b z^2) / ((3a+2b) z - (2a+b)) fixing
    0, 1, infinity each with multiplicity 2; returns the exact resultant
    of the parameterized coefficient pair and the multiplier at the
    fourth fixed point 2 + b/a."""
    a, b = Fraction(a), Fraction(b)
    if a == 0:
        raise ModuliError("the family needs a != 0")
    f0 = (a, b, 0, 0)
    f1 = (0, 0, 3 * a + 2 * b, -(2 * a + b))
    res = forms.resultant(f0, f1)
    if res == 0:
        raise ModuliError("degenerate parameters: resultant vanishes")
    fmap = RationalMap(f0, f1)
    mult = fmap.affine_derivative(2 + b / a)
    return CubicFixedFamily(fmap, Fraction(res), mult)


@dataclass(frozen=True)
class SurfaceMembership:
    on_surface: bool
    surface_value: Fraction
    symmetric_form_value: Fraction


def doubly_critical_three_cycle_surface(alpha, beta, gamma) -> SurfaceMembership:
    """Membership test for the surface of fixed-point triples (alpha,
    beta, gamma) compatible with a doubly-critical 3-cycle in degree 3,
    evaluated both in the raw coordinates and through the symmetric
    rewrite X^2 - XY + Y^2 - YZ - 2X + 1 at the elementary symmetric
    values; the two verdicts always agree."""
    al, be, ga = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if len({al, be, ga}) != 3:
        raise ModuliError("the three values must be pairwise distinct")
    if {al, be, ga} & {Fraction(0), Fraction(1)}:
        raise ModuliError("values 0 and 1 are degenerate for this family")
    s = (al * be ** 2 * ga ** 2 + al ** 2 * be * ga ** 2 + al ** 2 * be ** 2 * ga
         - (al ** 2 * be ** 2 + al ** 2 * ga ** 2 + be ** 2 * ga ** 2)
         - 2 * (al ** 2 * be * ga + al * be ** 2 * ga + al * be * ga ** 2)
         + 3 * al * be * ga
         + al ** 2 * be + al ** 2 * ga + be ** 2 * ga
         + al * be ** 2 + al * ga ** 2 + be * ga ** 2
         - (al ** 2 + be ** 2 + ga ** 2)
         - 2 * (al * be + al * ga + be * ga)
         + 2 * (al + be + ga) - 1)
    e1 = al + be + ga
    e2 = al * be + al * ga + be * ga
    e3 = al * be * ga
    sym = symmetric_surface_form(e1, e2, e3)
    if (s == 0) != (sym == 0):
        raise ModuliError("surface and symmetric rewrite disagree")  # pragma: no cover
    return SurfaceMembership(s == 0, s, sym)


def symmetric_surface_form(x, y, z) -> Fraction:
    """X^2 - XY + Y^2 - YZ - 2X + 1."""
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    return x * x - x * y + y * y - y * z - 2 * x + 1
