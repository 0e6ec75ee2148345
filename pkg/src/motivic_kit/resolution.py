"""The truncated cosimplicial tower of morphism spaces and its equalizer.

Level 0 is the full matrix space Hom(X, Y); level k has one component per
bounded class of chains S1 -> ... -> Sk, holding matrices
Hom(X^(x)S1, Y) fixed under the automorphisms of the chain.  The empty
tensor power participates as the size-0 class, contributing the unit
condition; without it, scalar multiples of graphs would survive the
binary equation alone.

The two coface maps out of level 0 send f to "multiply after applying f
on every factor" and "apply f after multiplying the factors".  A matrix
equalizes them exactly when its entries are idempotent (size-2 class,
diagonal), orthogonal within each row (size-2 class, off-diagonal), and
its rows sum to one (size-0 class) -- that is, exactly when it is the
transposed graph of a set map in the opposite direction.  Level-1-to-2
cofaces and the codegeneracies are projections and fiberwise
multiplications; the cosimplicial identities hold on the nose and are
checked in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .artin import graph_matrix, solve_coalgebra_morphisms
from .finsets import FinSet, all_maps
from .qlinalg import QMatrix, kron, kron_power, matmul


def mult_along(n: int, fibers) -> QMatrix:
    """Matrix of the multiplication X^(x)(sum fibers) -> X^(x)(len fibers).

    Column indices are base-n digit strings grouped into consecutive
    blocks by the fiber sizes; the entry is 1 iff within every block all
    digits agree with the corresponding row digit.  Empty blocks impose no
    condition (they insert the unit).
    """
    fibers = tuple(fibers)
    t = len(fibers)
    s = sum(fibers)
    rows = n ** t
    cols = n ** s
    entries = [0] * (rows * cols)
    for col in range(cols):
        digits = []
        rest = col
        for _ in range(s):
            digits.append(rest % n)
            rest //= n
        digits.reverse()
        pos = 0
        row_digits = []
        ok = True
        for size in fibers:
            block = digits[pos:pos + size]
            pos += size
            if size == 0:
                row_digits.append(None)  # free digit
            elif all(b == block[0] for b in block):
                row_digits.append(block[0])
            else:
                ok = False
                break
        if not ok:
            continue
        # expand the free digits of empty fibers
        free = [i for i, d in enumerate(row_digits) if d is None]
        for assign in itertools.product(range(n), repeat=len(free)):
            full = list(row_digits)
            for i, v in zip(free, assign):
                full[i] = v
            row = 0
            for d in full:
                row = row * n + d
            entries[row * cols + col] = 1
    return QMatrix(rows, cols, entries)


def iterated_mult(n: int, s: int) -> QMatrix:
    """The s-ary multiplication X^(x)s -> X; s = 0 gives the unit column."""
    return mult_along(n, (s,))


def coface_d0(f: QMatrix, s: int) -> QMatrix:
    """Apply f on every tensor factor, then multiply in the target."""
    return matmul(iterated_mult(f.rows, s), kron_power(f, s))


def coface_d1(f: QMatrix, s: int) -> QMatrix:
    """Multiply the tensor factors in the source, then apply f."""
    return matmul(f, iterated_mult(f.cols, s))


def level2_coface_d0(family: dict, fibers, ny: int) -> QMatrix:
    """Apply the family on each fiber, then multiply the results."""
    tensor = QMatrix.identity(1)
    for size in fibers:
        tensor = kron(tensor, family[size])
    return matmul(iterated_mult(ny, len(fibers)), tensor)


def level2_coface_d1(family: dict, fibers) -> QMatrix:
    """Projection onto the class of the total source set."""
    return family[sum(fibers)]


def level2_coface_d2(family: dict, fibers, nx: int) -> QMatrix:
    """Multiply the source along the fibers, then apply the family."""
    return matmul(family[len(fibers)], mult_along(nx, fibers))


@dataclass(frozen=True)
class CofaceMap:
    """One coface of the truncated tower, acting per component.

    `index` is the coface number at the given source level.  Out of level
    0 the two maps multiply after or before applying the matrix; out of
    level 1 they are the fiberwise target multiplication, the projection
    onto the source class, and the fiberwise source multiplication.
    """
    source_level: int
    index: int

    def __post_init__(self):
        if self.source_level == 0 and self.index not in (0, 1):
            raise ValueError("level 0 has cofaces 0 and 1")
        if self.source_level == 1 and self.index not in (0, 1, 2):
            raise ValueError("level 1 has cofaces 0, 1 and 2")
        if self.source_level not in (0, 1):
            raise ValueError("only the level 0..2 truncation is implemented")

    @property
    def target_level(self) -> int:
        return self.source_level + 1

    def apply(self, family, key, nx: int, ny: int) -> QMatrix:
        """Value of the coface image at one target-level class."""
        if self.source_level == 0:
            return (coface_d0(family, key) if self.index == 0
                    else coface_d1(family, key))
        if self.index == 0:
            return level2_coface_d0(family, key, ny)
        if self.index == 1:
            return level2_coface_d1(family, key)
        return level2_coface_d2(family, key, nx)


def codegeneracy_level1(family: dict) -> QMatrix:
    """Project a level-1 family onto the singleton class."""
    return family[1]


def codegeneracy_level2_s0(family2: dict, s: int) -> QMatrix:
    """Evaluate a level-2 family at the collapse map (s-set to a point)."""
    return family2[(s,)]


def codegeneracy_level2_s1(family2: dict, s: int) -> QMatrix:
    """Evaluate a level-2 family at the identity chain on an s-set."""
    return family2[(1,) * s]


def level1_classes(bound: int) -> list:
    """Sizes of the level-1 index classes, the empty power included."""
    return list(range(0, bound + 1))


def level2_classes(bound: int) -> list:
    """Fiber-size multisets of bounded chains S1 -> S2.

    A class of maps is the multiset of its fiber sizes (zeros allowed:
    elements outside the image carry empty fibers).  Both set sizes are
    bounded; the empty chain is the empty tuple.
    """
    out = [()]
    for s2 in range(1, bound + 1):
        for fibers in itertools.combinations_with_replacement(
                range(0, bound + 1), s2):
            if sum(fibers) <= bound:
                out.append(tuple(sorted(fibers, reverse=True)))
    return out


def _digit_perm(perm, n: int, s: int):
    """Column permutation of X^(x)s induced by a permutation of the factors."""
    inv = [0] * s
    for i, v in enumerate(perm):
        inv[v] = i
    mapping = [0] * (n ** s)
    for col in range(n ** s):
        digits = []
        rest = col
        for _ in range(s):
            digits.append(rest % n)
            rest //= n
        digits.reverse()
        row = 0
        for j in range(s):
            row = row * n + digits[inv[j]]
        mapping[col] = row
    return mapping


def _column_orbits(generators, size: int) -> list:
    seen = [False] * size
    orbits = []
    for start in range(size):
        if seen[start]:
            continue
        orbit = []
        stack = [start]
        seen[start] = True
        while stack:
            c = stack.pop()
            orbit.append(c)
            for g in generators:
                d = g[c]
                if not seen[d]:
                    seen[d] = True
                    stack.append(d)
        orbits.append(sorted(orbit))
    return orbits


def _orbit_basis(ny: int, ncols: int, orbits) -> list:
    basis = []
    for y in range(ny):
        for orbit in orbits:
            entries = [0] * (ny * ncols)
            for c in orbit:
                entries[y * ncols + c] = 1
            basis.append(QMatrix(ny, ncols, entries))
    return basis


def _chain_aut_column_perms(fibers, n: int) -> list:
    """Generators of the column action of the chain automorphisms.

    The first component of an automorphism permutes within fibers and
    swaps equal fibers wholesale; these generate its image.
    """
    s = sum(fibers)
    gens = []
    offsets = []
    pos = 0
    for size in fibers:
        offsets.append(pos)
        pos += size
    for off, size in zip(offsets, fibers):
        for i in range(size - 1):
            perm = list(range(s))
            perm[off + i], perm[off + i + 1] = perm[off + i + 1], perm[off + i]
            gens.append(_digit_perm(perm, n, s))
    for t in range(len(fibers)):
        for u in range(t + 1, len(fibers)):
            if fibers[t] == fibers[u] and fibers[t] > 0:
                perm = list(range(s))
                for i in range(fibers[t]):
                    perm[offsets[t] + i] = offsets[u] + i
                    perm[offsets[u] + i] = offsets[t] + i
                gens.append(_digit_perm(perm, n, s))
    return gens


@dataclass(frozen=True)
class TowerLevel:
    """One level of the tower: a fixed-subspace basis per index class."""
    k: int
    x_size: int
    y_size: int
    bound: int
    components: dict  # class key -> tuple of basis matrices

    def dimension(self, key) -> int:
        return len(self.components[key])


def level(k: int, x: FinSet, y: FinSet, bound: int) -> TowerLevel:
    """Compute level 0, 1 or 2 of the tower at the given truncation bound.

    Components are bases of the subspaces of Hom(X^(x)S1, Y) fixed under
    the chain automorphisms acting through the first component; at level
    0 the single component is the whole matrix space.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    nx, ny = x.size, y.size
    if k == 0:
        basis = []
        for y_i in range(ny):
            for x_i in range(nx):
                entries = [0] * (ny * nx)
                entries[y_i * nx + x_i] = 1
                basis.append(QMatrix(ny, nx, entries))
        return TowerLevel(0, nx, ny, bound, {(): tuple(basis)})
    if k == 1:
        components = {}
        for s in level1_classes(bound):
            gens = _chain_aut_column_perms((s,), nx) if s > 1 else []
            orbits = _column_orbits(gens, nx ** s)
            components[s] = tuple(_orbit_basis(ny, nx ** s, orbits))
        return TowerLevel(1, nx, ny, bound, components)
    if k == 2:
        components = {}
        for fibers in level2_classes(bound):
            s = sum(fibers)
            gens = _chain_aut_column_perms(fibers, nx)
            orbits = _column_orbits(gens, nx ** s)
            components[fibers] = tuple(_orbit_basis(ny, nx ** s, orbits))
        return TowerLevel(2, nx, ny, bound, components)
    raise ValueError("only levels 0..2 are implemented")


def equalizer(x: FinSet, y: FinSet, bound: int = 2) -> list:
    """All f in Hom(X, Y) with equal cofaces at every bounded class.

    The size-2 class forces idempotent entries and row orthogonality, the
    size-0 class forces unit row sums, so the candidates are the matrices
    with exactly one 1 in each row; every candidate is then verified
    against the coface equations at all classes up to the bound.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    nx, ny = x.size, y.size
    out = []
    for choice in itertools.product(range(nx), repeat=ny):
        entries = [0] * (ny * nx)
        for row, col in enumerate(choice):
            entries[row * nx + col] = 1
        f = QMatrix(ny, nx, entries)
        if all(coface_d0(f, s) == coface_d1(f, s)
               for s in level1_classes(bound)):
            out.append(f)
    return out


@dataclass(frozen=True)
class MdffeReport:
    """Four-way comparison of morphism sets for a pair of finite sets."""
    x_size: int
    y_size: int
    equalizer_count: int
    recheck_count: int
    transposed_morphism_count: int
    setmap_count: int
    sets_equal: bool

    @property
    def passed(self) -> bool:
        return (self.equalizer_count == self.recheck_count
                == self.transposed_morphism_count == self.setmap_count
                and self.sets_equal)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"|X|={self.x_size} |Y|={self.y_size}: equalizer "
                f"{self.equalizer_count} = recheck {self.recheck_count} = "
                f"transposed comonoid {self.transposed_morphism_count} = "
                f"set maps {self.setmap_count}, {verdict}")


def verify_mdffe(x: FinSet, y: FinSet, bound: int = 2,
                 recheck_bound: int = 3) -> MdffeReport:
    """Morphisms of the towers agree with set maps X -> Y.

    The tower pairs the powers of Y against X (the contravariant roles of
    the statement), so the equalizer is computed on (Y, X); its solutions
    are exactly the transposes of the comonoid morphisms C_*X -> C_*Y,
    which are the graphs of set maps X -> Y.  The equalizer is recomputed
    at a higher truncation bound and must not change.
    """
    eq = equalizer(y, x, bound)
    eq_re = equalizer(y, x, recheck_bound)
    transposed = sorted((c.matrix.transpose()
                         for c in solve_coalgebra_morphisms(x, y)),
                        key=lambda m: m.entries)
    graphs = sorted((graph_matrix(f).transpose() for f in all_maps(x, y)),
                    key=lambda m: m.entries)
    eq_sorted = sorted(eq, key=lambda m: m.entries)
    eq_re_sorted = sorted(eq_re, key=lambda m: m.entries)
    sets_equal = eq_sorted == eq_re_sorted == transposed == graphs
    return MdffeReport(x.size, y.size, len(eq), len(eq_re),
                       len(transposed), len(graphs), sets_equal)
