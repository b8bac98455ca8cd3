"""Bounded-height search for explicit models of purely periodic portraits.

Enumerates integer coefficient pairs in increasing sup-norm height and
tests whether the map carries enough rational cycles to realize the
requested portrait.  Desk-scale by design: the search space grows like
(2h+1)^(2d+2), so it is meant for small degrees and small bounds.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Optional

from . import forms
from .maps import Model, RationalMap, verify_model
from .portraits import Portrait, PortraitError
from .projective import ProjectivePoint


def portrait_cycles(p: Portrait) -> list:
    """The cycles of a purely periodic portrait, as vertex tuples."""
    cycles = []
    seen = set()
    for v in sorted(p.vertices):
        t = p.preperiodic_type(v)
        if t is None or t.preperiod != 0:
            raise PortraitError("portrait is not a disjoint union of cycles")
        if v in seen:
            continue
        orb = p.orbit(v)
        seen.update(orb)
        cycles.append(tuple(orb))
    return cycles


def rational_cycles(f: RationalMap, period: int) -> list:
    """All cycles of exact period `period` consisting of rational points."""
    pts = []
    for (x, y), _ in forms.form_rational_roots(f.dynatomic(period)):
        q = ProjectivePoint.of(x, y)
        t = f.period_of_point(q, period + 1)
        if t is not None and t.preperiod == 0 and t.period == period:
            pts.append(q)
    cycles = []
    used = set()
    for q in pts:
        if q in used:
            continue
        orb = f.orbit(q, period - 1)
        used.update(orb)
        cycles.append(tuple(orb))
    return cycles


def _coefficient_pairs(degree: int, bound: int):
    """Primitive, sign-normalized coefficient pairs in increasing height."""
    width = 2 * degree + 2
    for h in range(1, bound + 1):
        for tup in itertools.product(range(-h, h + 1), repeat=width):
            if max(abs(c) for c in tup) != h:
                continue
            g = 0
            for c in tup:
                g = gcd(g, abs(c))
            if g != 1:
                continue
            lead = next(c for c in tup if c != 0)
            if lead < 0:
                continue
            yield tup[:degree + 1], tup[degree + 1:]


def search_periodic_model(portrait: Portrait, degree: int,
                          coeff_bound: int) -> Optional[Model]:
    """First map (in height order) with a verified model of the portrait.

    The portrait must be a disjoint union of cycles.  Returns None when
    no map with coefficients of sup-norm at most `coeff_bound` works.
    """
    cycles = portrait_cycles(portrait)
    by_len = {}
    for cyc in cycles:
        by_len.setdefault(len(cyc), []).append(cyc)
    for f0, f1 in _coefficient_pairs(degree, coeff_bound):
        if forms.resultant(f0, f1) == 0:
            continue
        f = RationalMap(f0, f1)
        model = _match_cycles(f, portrait, by_len)
        if model is not None:
            return model
    return None


def _match_cycles(f, portrait, by_len):
    available = {}
    for length, wanted in by_len.items():
        found = rational_cycles(f, length)
        if len(found) < len(wanted):
            return None
        available[length] = found
    slots = []
    for length, wanted in sorted(by_len.items()):
        for cyc in wanted:
            slots.append((length, cyc))
    return _assign(f, portrait, slots, available, {}, set())


def _assign(f, portrait, slots, available, acc, used):
    if not slots:
        model = verify_model(f, portrait, acc)
        return model if isinstance(model, Model) else None
    (length, cyc), rest = slots[0], slots[1:]
    for candidate in available[length]:
        if candidate[0] in used:
            continue
        for shift in range(length):
            trial = dict(acc)
            for i, v in enumerate(cyc):
                trial[v] = candidate[(shift + i) % length]
            result = _assign(f, portrait, rest, available,
                             trial, used | set(candidate))
            if result is not None:
                return result
    return None
