"""Weighted portraits: finite functional graphs with vertex weights.

A portrait is a finite vertex set V, a subset V0 on which a map phi is
defined, and a weight >= 1 on each mapped vertex.  Equivalently, a
finite multi-directed pseudoforest.  Everything here is purely
combinatorial and exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional


class PortraitError(ValueError):
    pass


class PreperiodicType(NamedTuple):
    preperiod: int
    period: int


class CriticalRelation(NamedTuple):
    """Encodes the identity phi^m(i) = phi^n(j) between critical vertices."""

    i: str
    j: str
    m: int
    n: int


class Portrait:
    """Immutable weighted functional graph."""

    __slots__ = ("vertices", "domain", "phi", "weights", "_hash")

    def __init__(self, vertices: Iterable[str], phi: Mapping[str, str],
                 weights: Optional[Mapping[str, int]] = None):
        vs = tuple(str(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise PortraitError("duplicate vertex id")
        vset = set(vs)
        phi = {str(k): str(v) for k, v in phi.items()}
        for k, v in phi.items():
            if k not in vset:
                raise PortraitError(f"phi key {k!r} is not a vertex")
            if v not in vset:
                raise PortraitError(f"phi value {v!r} is not a vertex")
        weights = {str(k): int(v) for k, v in (weights or {}).items()}
        for k, w in weights.items():
            if k not in phi:
                raise PortraitError(f"weight on vertex {k!r} outside the domain")
            if w < 1:
                raise PortraitError(f"weight {w} < 1 on vertex {k!r}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "domain", frozenset(phi))
        object.__setattr__(self, "phi", dict(phi))
        object.__setattr__(self, "weights",
                          {k: w for k, w in weights.items() if w > 1})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Portrait is immutable")

    # -- basic accessors -------------------------------------------------

    def weight(self, v: str) -> int:
        if v not in self.domain:
            raise PortraitError(f"vertex {v!r} has no weight (not in domain)")
        return self.weights.get(v, 1)

    @property
    def crit(self) -> frozenset:
        return frozenset(self.weights)

    @property
    def is_unweighted(self) -> bool:
        return not self.weights

    @property
    def zeta(self) -> int:
        """Number of vertices without an out-arrow, #(V \\ V0)."""
        return len(self.vertices) - len(self.domain)

    def __eq__(self, other):
        if not isinstance(other, Portrait):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices)
                and self.phi == other.phi
                and self.weights == other.weights)

    def __hash__(self):
        if self._hash is None:
            h = hash((frozenset(self.vertices),
                      frozenset(self.phi.items()),
                      frozenset(self.weights.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return (f"Portrait(vertices={sorted(self.vertices)}, phi={self.phi}, "
                f"weights={self.weights})")

    # -- orbits and periods ----------------------------------------------

    def orbit(self, v: str) -> list:
        """Forward orbit: iterate phi until leaving the domain or closing a cycle."""
        if v not in set(self.vertices):
            raise PortraitError(f"{v!r} is not a vertex")
        seen = {v}
        path = [v]
        while path[-1] in self.domain:
            nxt = self.phi[path[-1]]
            if nxt in seen:
                break
            seen.add(nxt)
            path.append(nxt)
        return path

    def preperiodic_type(self, v: str) -> Optional[PreperiodicType]:
        """(m, n) if v enters an n-cycle after m steps; None if the orbit escapes."""
        path = self.orbit(v)
        last = path[-1]
        if last not in self.domain:
            return None
        target = self.phi[last]
        m = path.index(target)
        return PreperiodicType(m, len(path) - m)

    def step(self, v: str, m: int) -> Optional[str]:
        """phi^m(v), or None when some intermediate vertex has no out-arrow."""
        path = self.orbit(v)
        if m < len(path):
            return path[m]
        if path[-1] not in self.domain:
            return None
        t = self.preperiodic_type(v)
        return path[t.preperiod + (m - t.preperiod) % t.period]

    # -- components -------------------------------------------------------

    def components(self) -> list:
        """Weakly connected components, each a sorted list of vertex ids."""
        adj = {v: set() for v in self.vertices}
        for k, v in self.phi.items():
            adj[k].add(v)
            adj[v].add(k)
        seen = set()
        comps = []
        for v in sorted(self.vertices):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        comps.sort(key=lambda c: c[0])
        return comps

    def component_has_cycle(self, comp: Iterable[str]) -> bool:
        return any(self.preperiodic_type(v) is not None for v in comp)

    def restrict(self, keep: Iterable[str]) -> "Portrait":
        """Subportrait induced on a phi-closed vertex subset."""
        keep = set(keep)
        phi = {v: w for v, w in self.phi.items() if v in keep}
        for v, w in phi.items():
            if w not in keep:
                raise PortraitError("restriction is not phi-closed")
        return Portrait(sorted(keep), phi,
                        {v: w for v, w in self.weights.items() if v in keep})


@dataclass(frozen=True)
class PortraitMorphism:
    """Injective, domain- and weight-compatible vertex map between portraits."""

    source: Portrait
    target: Portrait
    mapping: dict = field(hash=False)

    def __post_init__(self):
        m = self.mapping
        src, tgt = self.source, self.target
        if set(m) != set(src.vertices):
            raise PortraitError("morphism must be defined on every vertex")
        if len(set(m.values())) != len(m):
            raise PortraitError("morphism must be injective")
        if not set(m.values()) <= set(tgt.vertices):
            raise PortraitError("morphism image outside target")
        for v in src.domain:
            if m[v] not in tgt.domain:
                raise PortraitError("morphism must preserve the domain")
            if m[src.phi[v]] != tgt.phi[m[v]]:
                raise PortraitError("morphism must be equivariant")
            if tgt.weight(m[v]) < src.weight(v):
                raise PortraitError("morphism must not decrease weights")

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def compose(self, other: "PortraitMorphism") -> "PortraitMorphism":
        """self o other (apply other first)."""
        if other.target is not self.source and other.target != self.source:
            raise PortraitError("composition mismatch")
        return PortraitMorphism(other.source, self.target,
                                {v: self.mapping[w] for v, w in other.mapping.items()})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())


def _morphism_maps(p1: Portrait, p2: Portrait, *, bijective: bool,
                   weight_exact: bool, domain_exact: bool) -> list:
    """Backtracking enumeration of all morphism vertex maps p1 -> p2."""
    v1 = sorted(p1.vertices)
    v2 = sorted(p2.vertices)
    if len(v1) > len(v2) or (bijective and len(v1) != len(v2)):
        return []
    if bijective and domain_exact and len(p1.domain) != len(p2.domain):
        return []
    preimages = {}
    for v, w in p1.phi.items():
        preimages.setdefault(w, []).append(v)
    results = []
    assignment = {}
    used = set()

    def ok(v, w):
        if v in p1.domain:
            if w not in p2.domain:
                return False
            if p2.weight(w) < p1.weight(v):
                return False
            if weight_exact and p2.weight(w) != p1.weight(v):
                return False
            nxt = p1.phi[v]
            img_nxt = w if nxt == v else assignment.get(nxt)
            if img_nxt is not None and img_nxt != p2.phi[w]:
                return False
        elif domain_exact and w in p2.domain:
            return False
        for u in preimages.get(v, ()):
            if u != v and u in assignment and p2.phi[assignment[u]] != w:
                return False
        return True

    def rec(idx):
        if idx == len(v1):
            results.append(dict(assignment))
            return
        v = v1[idx]
        for w in v2:
            if w in used or not ok(v, w):
                continue
            assignment[v] = w
            used.add(w)
            rec(idx + 1)
            del assignment[v]
            used.discard(w)

    rec(0)
    return results


def hom(p1: Portrait, p2: Portrait) -> list:
    """All portrait morphisms p1 -> p2."""
    maps = _morphism_maps(p1, p2, bijective=False, weight_exact=False,
                          domain_exact=False)
    return [PortraitMorphism(p1, p2, m) for m in maps]


def isomorphisms(p1: Portrait, p2: Portrait) -> list:
    maps = _morphism_maps(p1, p2, bijective=True, weight_exact=True,
                          domain_exact=True)
    return [PortraitMorphism(p1, p2, m) for m in maps]


def isomorphic(p1: Portrait, p2: Portrait) -> bool:
    if _iso_signature(p1) != _iso_signature(p2):
        return False
    return bool(isomorphisms(p1, p2))


def _iso_signature(p: Portrait):
    sig = []
    indeg = {v: 0 for v in p.vertices}
    for w in p.phi.values():
        indeg[w] += 1
    for v in sorted(p.vertices):
        t = p.preperiodic_type(v)
        sig.append((v in p.domain, p.weights.get(v, 1) if v in p.domain else 0,
                    indeg[v], t if t else (-1, len(p.orbit(v)))))
    return tuple(sorted(sig))


def automorphism_group(p: Portrait) -> list:
    """All self-isomorphisms; closed under composition and inverses."""
    return isomorphisms(p, p)


def element_order(m: PortraitMorphism) -> int:
    """Order of an automorphism as a permutation of the vertices."""
    order = 1
    seen = set()
    for v in m.mapping:
        if v in seen:
            continue
        length = 0
        u = v
        while u not in seen:
            seen.add(u)
            u = m.mapping[u]
            length += 1
        g = _gcd(order, length)
        order = order * length // g
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def group_is_cyclic(auts: list) -> bool:
    n = len(auts)
    return any(element_order(m) == n for m in auts)


def is_subportrait(q: Portrait, p: Portrait) -> bool:
    """True iff q is a subportrait of p (shared vertex ids, restricted phi, weights <=)."""
    if not set(q.vertices) <= set(p.vertices):
        return False
    if not q.domain <= p.domain:
        return False
    for v in q.domain:
        if q.phi[v] != p.phi[v]:
            return False
        if q.weight(v) > p.weight(v):
            return False
    return True


def ge(p_prime: Portrait, p: Portrait) -> bool:
    """Partial order: p_prime >= p iff a vertex-bijective morphism p -> p_prime exists."""
    return bool(_morphism_maps(p, p_prime, bijective=True, weight_exact=False,
                               domain_exact=True))


@dataclass(frozen=True)
class PortraitStatistics:
    max_preimage_count: int          # D_P
    exact_period_counts: dict        # n -> C_P(n), for 1 <= n <= #V
    zeta: int                        # #(V \ V0)
    weight_total: int                # sum of weights over V0
    crit_set: tuple                  # vertices of weight >= 2, sorted


def portrait_statistics(p: Portrait) -> PortraitStatistics:
    indeg = {v: 0 for v in p.vertices}
    for w in p.phi.values():
        indeg[w] += 1
    d_p = max(indeg.values(), default=0)
    counts = {n: 0 for n in range(1, len(p.vertices) + 1)}
    for v in p.domain:
        t = p.preperiodic_type(v)
        if t is not None and t.preperiod == 0:
            counts[t.period] += 1
    return PortraitStatistics(
        max_preimage_count=d_p,
        exact_period_counts=counts,
        zeta=p.zeta,
        weight_total=sum(p.weight(v) for v in p.domain),
        crit_set=tuple(sorted(p.crit)),
    )


def critically_generated_subportrait(p: Portrait) -> Portrait:
    """Union of the forward orbits of the weight->=2 vertices."""
    keep = set()
    for c in p.crit:
        keep.update(p.orbit(c))
    return p.restrict(keep)


def is_critically_generated(p: Portrait) -> bool:
    return critically_generated_subportrait(p) == p


def is_complete_critical(p: Portrait, d: int) -> bool:
    """Total ramification 2d-2 and every vertex in a critical orbit."""
    if d < 2:
        raise PortraitError("degree must be at least 2")
    total = sum(p.weight(v) - 1 for v in p.domain)
    return total == 2 * d - 2 and is_critically_generated(p)


def is_critically_primitive(p: Portrait) -> bool:
    return all(p.weight(v) >= 2 for v in p.domain)


def frame(p: Portrait, d: int) -> Portrait:
    """The unique critically primitive complete critical subportrait."""
    if not is_complete_critical(p, d):
        raise PortraitError("frame is only defined for complete critical portraits")
    w0 = set(p.crit)
    w = w0 | {p.phi[v] for v in w0}
    phi = {v: p.phi[v] for v in w0}
    return Portrait(sorted(w), phi, {v: p.weights[v] for v in w0})


def enumerate_primitive_critical_portraits(d: int) -> list:
    """All isomorphism classes of critically primitive complete critical portraits.

    Supported for d in {2, 3}; the class count grows quickly with d.
    """
    if d not in (2, 3):
        raise PortraitError("supported degrees are 2 and 3")
    found = []
    for weights in _weight_multisets(2 * d - 2):
        t = len(weights)
        crits = [f"c{i + 1}" for i in range(t)]
        for targets in itertools.product(range(2 * t), repeat=t):
            phi = {}
            sinks = []
            sink_name = {}
            for i, tgt in enumerate(targets):
                if tgt < t:
                    phi[crits[i]] = crits[tgt]
                else:
                    if tgt not in sink_name:
                        sink_name[tgt] = f"s{len(sink_name) + 1}"
                        sinks.append(sink_name[tgt])
                    phi[crits[i]] = sink_name[tgt]
            cand = Portrait(crits + sinks, phi,
                            dict(zip(crits, weights)))
            if not (is_complete_critical(cand, d) and is_critically_primitive(cand)):
                continue
            if not any(isomorphic(cand, q) for q in found):
                found.append(cand)
    return found


def _weight_multisets(total: int):
    """Multisets of weights >= 2 with sum of (w - 1) equal to `total`."""

    def parts(remaining, maximum):
        if remaining == 0:
            yield []
            return
        for p in range(min(remaining, maximum), 0, -1):
            for rest in parts(remaining - p, p):
                yield [p] + rest

    for partition in parts(total, total):
        yield [p + 1 for p in partition]


# -- minimal critical-relation systems ----------------------------------


def sp_relations(p: Portrait) -> list:
    """The canonical minimal system of critical relations of a portrait.

    Components are ordered by smallest vertex id, critical points within
    a component lexicographically.  Produces exactly T - zeta tuples,
    where T = #Crit and zeta = number of cycle-free components.
    """
    if not is_critically_generated(p):
        raise PortraitError("portrait is not critically generated")
    relations = []
    for comp in p.components():
        crits = sorted(v for v in comp if v in p.crit)
        if not crits:
            raise PortraitError("component without a critical point")
        has_cycle = p.component_has_cycle(comp)
        orbits = {c: p.orbit(c) for c in crits}
        first_index = {c: {v: i for i, v in enumerate(orbits[c])} for c in crits}
        for idx, ci in enumerate(crits):
            if idx == 0 and not has_cycle:
                continue
            t = p.preperiodic_type(ci)
            limit = (t.preperiod + t.period) if t else (len(orbits[ci]) - 1)
            chosen = None
            for m in range(limit + 1):
                target = p.step(ci, m)
                best = None
                for jdx in range(idx + 1):
                    cj = crits[jdx]
                    occ = first_index[cj].get(target)
                    if occ is None:
                        continue
                    if cj == ci and not occ < m:
                        continue
                    best = (jdx, occ)
                    break
                if best is not None:
                    chosen = CriticalRelation(ci, crits[best[0]], m, best[1])
                    break
            if chosen is None:
                raise PortraitError(
                    f"no critical relation found for {ci!r}")  # unreachable
            relations.append(chosen)
    return relations


def relation_holds(p: Portrait, r: CriticalRelation) -> bool:
    a = p.step(r.i, r.m)
    b = p.step(r.j, r.n)
    return a is not None and a == b


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            self.parent[x] = p = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def shift_bound(p: Portrait) -> int:
    """Shift cap for the iteration closure of a relation system.

    All orbit behaviour is eventually periodic, so any realized relation
    reduces, via cycle periodicity, to one with shifts below
    max(preperiod + 2*period) + #V; the bound is floored at 2*#V so that
    every brute-force-enumerable relation stays queryable.
    """
    nv = len(p.vertices)
    maxtype = 0
    for v in p.vertices:
        t = p.preperiodic_type(v)
        if t is not None:
            maxtype = max(maxtype, t.preperiod + 2 * t.period)
    return max(maxtype + nv, 2 * nv)


def relation_determined(relations: Iterable[CriticalRelation],
                        r: CriticalRelation, p: Portrait) -> bool:
    """Whether r follows from the given relations under the iteration closure.

    The closure is the smallest equivalence on pairs (critical vertex,
    shift) containing each relation at every shift and closed under
    adding a common shift; it is computed by union-find on a bounded
    shift range.
    """
    crit = p.crit
    relations = list(relations)
    for rel in itertools.chain(relations, [r]):
        if rel.i not in crit or rel.j not in crit:
            raise PortraitError("relation references a non-critical vertex")
        if rel.m < 0 or rel.n < 0:
            raise PortraitError("relation shifts must be nonnegative")
    bound = shift_bound(p)
    if r.m > bound or r.n > bound:
        raise PortraitError(f"relation shift exceeds the closure bound {bound}")
    if r.i == r.j and r.m == r.n:
        return True
    # Chains may pass above the queried shifts before coming back down,
    # so the union-find range gets headroom proportional to #V hops.
    span = max((max(rel.m, rel.n) for rel in relations), default=0)
    cap = bound + len(p.vertices) * (span + 1)
    uf = _UnionFind()
    for rel in relations:
        top = max(rel.m, rel.n)
        for c in range(cap - top + 1):
            uf.union((rel.i, rel.m + c), (rel.j, rel.n + c))
    return uf.find((r.i, r.m)) == uf.find((r.j, r.n))


def realized_relations(p: Portrait, max_shift: int) -> list:
    """Brute-force enumeration of all realized critical relations with shifts <= max_shift."""
    out = []
    crits = sorted(p.crit)
    for i, j in itertools.product(crits, repeat=2):
        for m in range(max_shift + 1):
            a = p.step(i, m)
            if a is None:
                break
            for n in range(max_shift + 1):
                b = p.step(j, n)
                if b is None:
                    break
                if a == b:
                    out.append(CriticalRelation(i, j, m, n))
    return out
