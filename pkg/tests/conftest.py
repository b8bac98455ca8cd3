import random

import hypothesis
from hypothesis import strategies as st

from portraitdyn import MapError, Portrait, RationalMap, critically_generated_subportrait

hypothesis.settings.register_profile("suite", max_examples=25, deadline=None)
hypothesis.settings.load_profile("suite")


def random_rational_map(rng: random.Random, degree: int) -> RationalMap:
    """Seeded rejection sampler: integer coefficients in [-9, 9], nonzero resultant."""
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(2 * degree + 2)]
        try:
            return RationalMap(coeffs[:degree + 1], coeffs[degree + 1:])
        except MapError:
            continue


def random_critically_generated(rng: random.Random, max_vertices: int = 8) -> Portrait:
    """Seeded random critically generated portrait with <= max_vertices vertices."""
    while True:
        n = rng.randint(1, max_vertices)
        verts = [f"v{i}" for i in range(n)]
        phi = {v: rng.choice(verts) for v in verts if rng.random() < 0.8}
        if not phi:
            continue
        crit = rng.sample(sorted(phi), rng.randint(1, len(phi)))
        base = Portrait(verts, phi, {c: rng.randint(2, 3) for c in crit})
        generated = critically_generated_subportrait(base)
        if generated.vertices and generated.crit:
            return generated


@st.composite
def portrait_strategy(draw, max_vertices: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    verts = [f"v{i}" for i in range(n)]
    dom = draw(st.lists(st.sampled_from(verts), unique=True, max_size=n))
    phi = {v: draw(st.sampled_from(verts)) for v in dom}
    weights = {}
    for v in dom:
        if draw(st.booleans()):
            weights[v] = draw(st.integers(min_value=1, max_value=3))
    return Portrait(verts, phi, weights)


def invertible_matrix_strategy():
    entries = st.integers(min_value=-3, max_value=3)
    return st.tuples(entries, entries, entries, entries).filter(
        lambda m: m[0] * m[3] - m[1] * m[2] != 0)
