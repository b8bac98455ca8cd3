"""Degree-d endomorphisms of P^1 over Q with exact arithmetic.

A map is a pair of degree-d integer binary forms [f0, f1] with nonzero
resultant, acting on the projective line by z = X/Y -> f0(X,Y)/f1(X,Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

import sympy

from . import forms
from .portraits import Portrait, PortraitError, PortraitMorphism, PreperiodicType
from .projective import ProjectivePoint

DEGREE_CAP = 4096


class MapError(ValueError):
    pass


# Unimodular matrices whose first columns are three distinct directions,
# so for any two points some candidate keeps both out of infinity.
_CONJUGATIONS = ((1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 1, 1), (1, 0, -1, 1))


def _adj(m):
    a, b, c, d = m
    return (d, -b, -c, a)


class RationalMap:
    """Normalized primitive-integer model of a degree-d endomorphism of P^1."""

    __slots__ = ("f0", "f1", "_cache")

    def __init__(self, f0, f1):
        if len(f0) != len(f1):
            raise MapError("numerator and denominator must have equal degree")
        if len(f0) < 3:
            raise MapError("degree must be at least 2")
        coeffs = [Fraction(c) for c in f0] + [Fraction(c) for c in f1]
        if all(c == 0 for c in coeffs):
            raise MapError("zero map")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        lead = next(c for c in ints if c != 0)
        if lead < 0:
            g = -g
        ints = [c // g for c in ints]
        n = len(f0)
        nf0, nf1 = tuple(ints[:n]), tuple(ints[n:])
        if forms.is_zero(nf0) or forms.is_zero(nf1) or not forms.coprime(nf0, nf1):
            raise MapError("resultant vanishes: not a morphism of the stated degree")
        object.__setattr__(self, "f0", nf0)
        object.__setattr__(self, "f1", nf1)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    @property
    def degree(self) -> int:
        return len(self.f0) - 1

    @property
    def resultant(self):
        """Sylvester resultant of the normalized coefficient pair (cached)."""
        if "res" not in self._cache:
            self._cache["res"] = forms.resultant(self.f0, self.f1)
        return self._cache["res"]

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.f0 == other.f0 and self.f1 == other.f1

    def __hash__(self):
        return hash((self.f0, self.f1))

    def __repr__(self):
        return f"RationalMap({self.f0}, {self.f1})"

    @staticmethod
    def from_affine(num, den) -> "RationalMap":
        """Build from affine numerator/denominator coefficient lists (descending).

        The two lists are homogenized to the common degree
        max(len(num), len(den)) - 1.
        """
        d = max(len(num), len(den)) - 1
        f0 = [0] * (d + 1 - len(num)) + list(num)
        f1 = [0] * (d + 1 - len(den)) + list(den)
        return RationalMap(f0, f1)

    @staticmethod
    def polynomial(coeffs) -> "RationalMap":
        """The polynomial map with the given affine coefficients (descending)."""
        return RationalMap.from_affine(coeffs, [1])

    # -- evaluation and iteration ----------------------------------------

    def evaluate(self, p: ProjectivePoint) -> ProjectivePoint:
        return ProjectivePoint.of(forms.evaluate(self.f0, p.x, p.y),
                                  forms.evaluate(self.f1, p.x, p.y))

    def __call__(self, p: ProjectivePoint) -> ProjectivePoint:
        return self.evaluate(p)

    def affine_value(self, z) -> Optional[Fraction]:
        """f(z) for affine rational z; None when the image is infinity."""
        img = self.evaluate(ProjectivePoint.affine(z))
        return None if img.is_infinity else img.to_affine()

    def iterate_pair(self, k: int):
        """Primitive coefficient pair of the k-th iterate (k >= 1)."""
        if k < 1:
            raise MapError("iterate exponent must be positive")
        if self.degree ** k > DEGREE_CAP:
            raise MapError(f"iterate degree {self.degree ** k} exceeds cap {DEGREE_CAP}")
        pairs = self._cache.setdefault("iterates", {1: (self.f0, self.f1)})
        top = max(pairs)
        while top < k:
            g0, g1 = pairs[top]
            h0 = forms.compose_pair(self.f0, g0, g1)
            h1 = forms.compose_pair(self.f1, g0, g1)
            c = gcd(forms.content(h0), forms.content(h1))
            lead = next(x for x in h0 + h1 if x != 0)
            if lead < 0:
                c = -c
            pairs[top + 1] = (tuple(x // c for x in h0), tuple(x // c for x in h1))
            top += 1
        return pairs[k]

    def iterate(self, k: int) -> "RationalMap":
        return RationalMap(*self.iterate_pair(k))

    def conjugate(self, m) -> "RationalMap":
        """phi^(-1) o f o phi for the projective linear phi with matrix m."""
        a, b, c, d = m
        if a * d - b * c == 0:
            raise MapError("conjugating matrix is singular")
        g0 = forms.compose_linear(self.f0, a, b, c, d)
        g1 = forms.compose_linear(self.f1, a, b, c, d)
        da, db, dc, dd = _adj(m)
        h0 = forms.add(forms.scale(g0, da), forms.scale(g1, db))
        h1 = forms.add(forms.scale(g0, dc), forms.scale(g1, dd))
        return RationalMap(h0, h1)

    # -- local multiplicity ------------------------------------------------

    def multiplicity(self, p: ProjectivePoint) -> int:
        """Local multiplicity (ramification index) e_f(P), computed as
        the order of vanishing of f - f(P) in an affine chart containing
        both P and f(P)."""
        for m in _CONJUGATIONS:
            q = p.apply_matrix(*_adj(m))
            if q.is_infinity:
                continue
            g = self.conjugate(m)
            if g.evaluate(q).is_infinity:
                continue
            alpha = q.to_affine()
            pa = forms.evaluate(g.f0, alpha, 1)
            qa = forms.evaluate(g.f1, alpha, 1)
            num = forms.sub(forms.scale(g.f0, Fraction(qa)),
                            forms.scale(g.f1, Fraction(pa)))
            return forms.ord_at(num, alpha)
        raise MapError("no affine chart found")  # pragma: no cover

    def wronskian(self):
        """The critical form dX f0 * dY f1 - dY f0 * dX f1, primitive."""
        w = forms.sub(forms.mul(forms.derivative_x(self.f0), forms.derivative_y(self.f1)),
                      forms.mul(forms.derivative_y(self.f0), forms.derivative_x(self.f1)))
        return forms.primitive(w)

    def critical_divisor(self):
        """(wronskian form of degree 2d-2, rational roots with multiplicities)."""
        w = self.wronskian()
        roots = [(ProjectivePoint.of(x, y), m)
                 for (x, y), m in forms.form_rational_roots(w)]
        return w, roots

    # -- periodic points ----------------------------------------------------

    def fixed_point_form(self, k: int = 1):
        """Form of degree d^k + 1 vanishing exactly at the points of period dividing k."""
        g0, g1 = self.iterate_pair(k) if k > 1 else (self.f0, self.f1)
        return forms.primitive(forms.sub(forms.mul(g0, forms.Y),
                                         forms.mul(g1, forms.X)))

    def dynatomic(self, n: int):
        """The degree-nu homogeneous dynatomic form of period n (primitive)."""
        if n < 1:
            raise MapError("period must be positive")
        if self.degree ** n > DEGREE_CAP:
            raise MapError(f"degree {self.degree ** n} exceeds cap {DEGREE_CAP}")
        cache = self._cache.setdefault("dynatomic", {})
        if n not in cache:
            num, den = forms.ONE, forms.ONE
            for k in sympy.divisors(n):
                mu = int(sympy.mobius(n // k))
                if mu == 0:
                    continue
                gk = self.fixed_point_form(k)
                if mu == 1:
                    num = forms.mul(num, gk)
                else:
                    den = forms.mul(den, gk)
            cache[n] = forms.integerize(forms.exact_div(num, den))
        return cache[n]

    def formal_period(self, p: ProjectivePoint, n: int) -> bool:
        """Whether the dynatomic form of period n vanishes at the point."""
        return forms.evaluate(self.dynatomic(n), p.x, p.y) == 0

    def period_of_point(self, p: ProjectivePoint,
                        max_steps: int) -> Optional[PreperiodicType]:
        """Exact preperiod/period by orbit detection; None if no revisit
        happens within max_steps images."""
        if max_steps < 1:
            raise MapError("max_steps must be positive")
        seen = {p: 0}
        cur = p
        for i in range(1, max_steps + 1):
            cur = self.evaluate(cur)
            if cur in seen:
                m = seen[cur]
                return PreperiodicType(m, i - m)
            seen[cur] = i
        return None

    def orbit(self, p: ProjectivePoint, length: int) -> list:
        out = [p]
        for _ in range(length):
            out.append(self.evaluate(out[-1]))
        return out

    # -- derivatives and multipliers -----------------------------------------

    def derivative_numerator(self):
        """Numerator form of f' in the affine chart: f0' f1 - f0 f1' (in X)."""
        return forms.sub(forms.mul(forms.derivative_x(self.f0), self.f1),
                         forms.mul(self.f0, forms.derivative_x(self.f1)))

    def affine_derivative(self, z) -> Fraction:
        """f'(z) at an affine point where f(z) is affine."""
        alpha = Fraction(z)
        qa = forms.evaluate(self.f1, alpha, 1)
        if qa == 0:
            raise MapError("derivative chart: image at infinity")
        return Fraction(forms.evaluate(self.derivative_numerator(), alpha, 1), qa * qa)

    def cycle_multiplier(self, p: ProjectivePoint, n: int) -> Fraction:
        """Multiplier of an exact n-periodic point, via the chain rule
        after moving the whole cycle into an affine chart."""
        cycle = self.orbit(p, n - 1)
        if self.evaluate(cycle[-1]) != p:
            raise MapError("point is not n-periodic")
        m = _matrix_avoiding(cycle)
        g = self.conjugate(m)
        lam = Fraction(1)
        da, db, dc, dd = _adj(m)
        for q in cycle:
            lam *= g.affine_derivative(q.apply_matrix(da, db, dc, dd).to_affine())
        return lam


def _matrix_avoiding(points: Iterable[ProjectivePoint]):
    """A unimodular matrix m with phi(inf) distinct from all given points,
    so the inverse chart makes every point affine."""
    pts = set(points)
    candidates = [(1, 0, 0, 1), (0, 1, 1, 0)]
    c = 1
    while len(candidates) < len(pts) + 3:
        candidates.append((c, 1, 1, 0))
        candidates.append((-c, 1, 1, 0))
        c += 1
    for m in candidates:
        if ProjectivePoint.of(m[0], m[2]) not in pts:
            return m
    raise MapError("no chart avoids the given points")  # pragma: no cover


# -- portrait models ----------------------------------------------------


@dataclass(frozen=True)
class Model:
    """A rational map together with a point assignment realizing a portrait."""

    map: RationalMap
    portrait: Portrait
    assignment: dict

    def points(self):
        return tuple(self.assignment[v] for v in sorted(self.assignment))


@dataclass(frozen=True)
class ModelFailure:
    problems: tuple

    def __bool__(self):
        return False


def verify_model(f: RationalMap, portrait: Portrait, assignment):
    """Check the model conditions; returns a Model or a ModelFailure
    listing every violated clause."""
    problems = []
    missing = set(portrait.vertices) - set(assignment)
    if missing:
        raise MapError(f"assignment missing vertices {sorted(missing)}")
    values = {}
    for v in sorted(set(portrait.vertices)):
        q = assignment[v]
        if q in values:
            problems.append(f"not injective: {values[q]!r} and {v!r} share {q}")
        values[q] = v
    for v in sorted(portrait.domain):
        img = f.evaluate(assignment[v])
        want = assignment[portrait.phi[v]]
        if img != want:
            problems.append(f"f({v!r}) = {img} but phi sends it to {want}")
        e = f.multiplicity(assignment[v])
        if e < portrait.weight(v):
            problems.append(f"multiplicity at {v!r} is {e} < weight {portrait.weight(v)}")
    if problems:
        return ModelFailure(tuple(problems))
    return Model(f, portrait, dict(assignment))


def extract_portrait(f: RationalMap, points):
    """Portrait induced by f on a list of distinct points, with weights
    equal to the local multiplicities."""
    points = list(points)
    if len(set(points)) != len(points):
        raise MapError("points must be pairwise distinct")
    names = {p: str(p) for p in points}
    by_point = {p: names[p] for p in points}
    phi = {}
    weights = {}
    for p in points:
        img = f.evaluate(p)
        if img in by_point:
            phi[names[p]] = by_point[img]
            weights[names[p]] = f.multiplicity(p)
    portrait = Portrait(sorted(names.values()), phi, weights)
    assignment = {names[p]: p for p in points}
    model = verify_model(f, portrait, assignment)
    assert isinstance(model, Model)
    return portrait, assignment


def pullback_model(alpha: PortraitMorphism, model: Model) -> Model:
    """Transport a model of the target portrait to the source portrait."""
    if alpha.target != model.portrait:
        raise PortraitError("morphism target does not match the model portrait")
    assignment = {v: model.assignment[alpha(v)] for v in alpha.source.vertices}
    pulled = verify_model(model.map, alpha.source, assignment)
    if not isinstance(pulled, Model):
        raise MapError(f"pullback failed: {pulled.problems}")  # pragma: no cover
    return pulled
