"""Shared independent oracles and small generators for the test suite."""

import itertools
import random
from fractions import Fraction

from motivic_kit.qlinalg import QMatrix, rank, nullity


def schoolbook_matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Triple-loop product, independent of the library routine."""
    assert a.cols == b.rows
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = Fraction(0)
            for t in range(a.cols):
                acc += a[i, t] * b[t, j]
            out.append(acc)
    return QMatrix(a.rows, b.cols, out)


def random_qmatrix(rng: random.Random, rows: int, cols: int,
                   num_bound: int = 5, den_bound: int = 4) -> QMatrix:
    entries = [Fraction(rng.randint(-num_bound, num_bound),
                        rng.randint(1, den_bound))
               for _ in range(rows * cols)]
    return QMatrix(rows, cols, entries)


def union_find_components(components) -> int:
    """Size of the colimit of a cover diagram, by explicit gluing.

    Start from one copy of each point per component that contains it, then
    identify the copies living in a common intersection; the block count
    is the number of points of the glued union.
    """
    copies = [(i, p) for i, comp in enumerate(components) for p in set(comp)]
    parent = {c: c for c in copies}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for (i, comp_i), (j, comp_j) in itertools.combinations(
            enumerate(map(set, components)), 2):
        for p in comp_i & comp_j:
            ra, rb = find((i, p)), find((j, p))
            if ra != rb:
                parent[rb] = ra
    return len({find(c) for c in copies})


def simplex_complex_homology(vertex_count: int) -> dict:
    """Simplicial homology of the full simplex on the given vertices.

    Built directly from subset boundary matrices, independent of any cube
    machinery; degree p holds the (p+1)-subsets.
    """
    assert vertex_count >= 1
    subsets = {p: list(itertools.combinations(range(vertex_count), p + 1))
               for p in range(vertex_count)}
    index = {p: {s: i for i, s in enumerate(subsets[p])}
             for p in subsets}
    homology = {}
    boundaries = {}
    for p in range(1, vertex_count):
        rows = len(subsets[p - 1])
        cols = len(subsets[p])
        entries = [0] * (rows * cols)
        for j, s in enumerate(subsets[p]):
            for omit in range(len(s)):
                face = s[:omit] + s[omit + 1:]
                i = index[p - 1][face]
                entries[i * cols + j] = (-1) ** omit
        boundaries[p] = QMatrix(rows, cols, entries)
    for p in range(vertex_count):
        null_p = (len(subsets[p]) if p == 0 else nullity(boundaries[p]))
        rank_next = rank(boundaries[p + 1]) if p + 1 < vertex_count else 0
        homology[p] = null_p - rank_next
    return homology


def nerve_oracle_homology(components, degree: int) -> int:
    """Homology of a cover of a point set, summed pointwise over simplices.

    Each point of the union sees the full simplex on the components that
    contain it; the cover complex is the direct sum of those simplex
    complexes.
    """
    union = sorted(set().union(*[set(c) for c in components])) if components else []
    total = 0
    for p in union:
        owners = [i for i, c in enumerate(components) if p in set(c)]
        total += simplex_complex_homology(len(owners)).get(degree, 0)
    return total


def inclusion_exclusion_euler(components) -> int:
    """Alternating sum of intersection sizes over nonempty index subsets."""
    n = len(components)
    sets = [set(c) for c in components]
    total = 0
    for r in range(1, n + 1):
        for combo in itertools.combinations(range(n), r):
            inter = set(sets[combo[0]])
            for i in combo[1:]:
                inter &= sets[i]
            total += (-1) ** (r - 1) * len(inter)
    return total


def random_cover(rng: random.Random, max_components: int = 4,
                 max_points: int = 5, universe: int = 6):
    """A random cover model: a few components of a small labeled universe."""
    labels = [f"p{i}" for i in range(universe)]
    count = rng.randint(1, max_components)
    comps = []
    for _ in range(count):
        size = rng.randint(1, max_points)
        comps.append(sorted(rng.sample(labels, size)))
    return comps
