"""Good reduction of a marked rational map at a rational prime.

The predicates are cumulative: the map reduces to a morphism mod p
(map_good); additionally the marked points stay distinct mod p and the
rational multiplicities dominate the weights (bullet); the
multiplicities equal the weights exactly (circ); and equality persists
for the reduced map over F_p (star).
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from . import forms
from .maps import MapError, RationalMap, _CONJUGATIONS, _adj
from .portraits import Portrait
from .projective import ProjectivePoint


@dataclass(frozen=True)
class ReductionReport:
    prime: int
    map_good: bool
    bullet: bool
    circ: bool
    star: bool


def reduce_point(p: ProjectivePoint, prime: int):
    """Canonical representative of the point in P^1(F_p)."""
    x, y = p.x % prime, p.y % prime
    if y != 0:
        return ((x * pow(y, -1, prime)) % prime, 1)
    return (1, 0)


def _mod_form(f, prime):
    return tuple(c % prime for c in f)


def _poly_mod_ord(coeffs, alpha, prime):
    """Multiplicity of alpha as a root mod p of the descending-coefficient poly."""
    cur = [c % prime for c in coeffs]
    mult = 0
    while len(cur) > 1:
        out = [cur[0]]
        for c in cur[1:]:
            out.append((c + alpha * out[-1]) % prime)
        if out[-1] != 0:
            break
        mult += 1
        cur = out[:-1]
    return mult


def multiplicity_mod_p(f: RationalMap, p: ProjectivePoint, prime: int):
    """Derivative-certified multiplicity of the reduced map at the reduced point.

    Returns the order of vanishing of f~ - f~(P~) at P~ when that order
    is < p, and None when every formal derivative vanishes mod p (wild
    ramification), in which case no finite multiplicity is certified.
    """
    if f.resultant % prime == 0:
        raise MapError(f"map does not reduce to a morphism mod {prime}")
    for m in _CONJUGATIONS:
        col = reduce_point(ProjectivePoint.of(m[0], m[2]), prime)
        g = f.conjugate(m)
        g0, g1 = _mod_form(g.f0, prime), _mod_form(g.f1, prime)
        da, db, dc, dd = _adj(m)
        qx = (da * p.x + db * p.y) % prime
        qy = (dc * p.x + dd * p.y) % prime
        if qy == 0:
            continue
        alpha = (qx * pow(qy, -1, prime)) % prime
        pa = forms.evaluate(g0, alpha, 1) % prime
        qa = forms.evaluate(g1, alpha, 1) % prime
        if qa == 0:
            continue
        num = tuple((a * qa - b * pa) % prime for a, b in zip(g0, g1))
        ord_ = _poly_mod_ord(num, alpha, prime)
        return ord_ if ord_ < prime else None
    raise MapError("no affine chart mod p")  # pragma: no cover


def good_reduction(f: RationalMap, assignment, portrait: Portrait,
                   prime: int) -> ReductionReport:
    """Evaluate the good-reduction predicates for a marked map at a prime."""
    if not sympy.isprime(prime):
        raise MapError(f"{prime} is not prime")
    missing = set(portrait.vertices) - set(assignment)
    if missing:
        raise MapError(f"assignment missing vertices {sorted(missing)}")
    map_good = f.resultant % prime != 0

    bullet = False
    circ = False
    star = False
    if map_good:
        reduced = [reduce_point(assignment[v], prime) for v in sorted(portrait.vertices)]
        distinct = len(set(reduced)) == len(reduced)
        mults = {v: f.multiplicity(assignment[v]) for v in portrait.domain}
        bullet = distinct and all(mults[v] >= portrait.weight(v)
                                  for v in portrait.domain)
        circ = bullet and all(mults[v] == portrait.weight(v)
                              for v in portrait.domain)
        if circ:
            star = all(multiplicity_mod_p(f, assignment[v], prime) == portrait.weight(v)
                       for v in portrait.domain)
    return ReductionReport(prime=prime, map_good=map_good, bullet=bullet,
                           circ=circ, star=star)
