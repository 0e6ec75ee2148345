"""Hypercube index combinatorics and exact homotopy colimits of cubes.

Vertices of a hypercube on an index set I are identified with subsets of
I via characteristic functions.  A punctured cube diagram assigns a chain
complex to every nonempty subset and a chain map to every one-step
inclusion, contravariantly (deeper intersections map to shallower ones);
its homotopy colimit is realized as the total complex with alternating
signs, one column per subset size.  Adding an ambient complex and a zero
vertex gives the compactly-supported model, realized as a mapping cone.

The compactification diagrams themselves are symbolic: vertices carry
formal expressions with twist and shift annotations, never evaluated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .qlinalg import ChainComplex, QMatrix, matmul, single_degree_complex

ID0 = "id0"
ID1 = "id1"
TAU = "tau"


def psi(n: int, subset) -> tuple:
    """Characteristic 0/1 vector of a subset of {0..n-1}."""
    subset = frozenset(subset)
    if not subset <= set(range(n)):
        raise ValueError("not a subset of the index set")
    return tuple(1 if i in subset else 0 for i in range(n))


def psi_inverse(vector) -> frozenset:
    """The subset a 0/1 vector is the characteristic function of."""
    vector = tuple(vector)
    if any(v not in (0, 1) for v in vector):
        raise ValueError("not a 0/1 vector")
    return frozenset(i for i, v in enumerate(vector) if v == 1)


def psi_edge(n: int, smaller, bigger) -> tuple:
    """Coordinatewise image of an inclusion of subsets.

    Coordinate s maps to the identity of 1 on the smaller subset, to the
    unique arrow 0 -> 1 on the difference, and to the identity of 0
    elsewhere.
    """
    smaller = frozenset(smaller)
    bigger = frozenset(bigger)
    if not (smaller <= bigger and bigger <= set(range(n))):
        raise ValueError("need nested subsets of the index set")
    out = []
    for s in range(n):
        if s in smaller:
            out.append(ID1)
        elif s in bigger:
            out.append(TAU)
        else:
            out.append(ID0)
    return tuple(out)


def compose_edge_labels(first, second) -> tuple:
    """Composite of two coordinatewise edge labels (first, then second)."""
    table = {(ID0, ID0): ID0, (ID0, TAU): TAU,
             (TAU, ID1): TAU, (ID1, ID1): ID1}
    out = []
    for a, b in zip(first, second):
        if (a, b) not in table:
            raise ValueError(f"labels {a}, {b} do not compose")
        out.append(table[(a, b)])
    return tuple(out)


class ChainMap:
    """A degreewise matrix map of chain complexes, commuting with d."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: ChainComplex, target: ChainComplex, blocks):
        blocks = {int(q): m for q, m in blocks.items()}
        for q, m in blocks.items():
            if m.rows != target.dim(q) or m.cols != source.dim(q):
                raise ValueError(f"block {q} has wrong shape")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "blocks", blocks)
        lo = min(source.lo, target.lo)
        hi = max(source.hi, target.hi)
        for q in range(lo + 1, hi + 1):
            left = matmul(self.at(q - 1), source.differential(q))
            right = matmul(target.differential(q), self.at(q))
            if left != right:
                raise ValueError(f"does not commute with d in degree {q}")

    def __setattr__(self, name, value):
        raise AttributeError("ChainMap is immutable")

    def at(self, q: int) -> QMatrix:
        if q in self.blocks:
            return self.blocks[q]
        return QMatrix.zeros(self.target.dim(q), self.source.dim(q))

    def then(self, other: "ChainMap") -> "ChainMap":
        if other.source is not self.target and other.source != self.target:
            raise ValueError("chain maps do not compose")
        lo = min(self.source.lo, other.target.lo)
        hi = max(self.source.hi, other.target.hi)
        blocks = {q: matmul(other.at(q), self.at(q))
                  for q in range(lo, hi + 1)}
        return ChainMap(self.source, other.target, blocks)

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return False
        if self.source != other.source or self.target != other.target:
            return False
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        return all(self.at(q) == other.at(q) for q in range(lo, hi + 1))

    def to_json(self):
        return {str(q): m.to_json() for q, m in sorted(self.blocks.items())}


def _subset_key(s) -> tuple:
    return (len(s), tuple(sorted(s)))


class CubeDiagram:
    """A punctured-cube diagram of chain complexes on an index set.

    One complex per nonempty subset of {0..index_size-1}; one chain map
    per one-step inclusion, directed from the larger subset to the
    smaller.  All commuting squares are verified exactly.
    """

    __slots__ = ("index_size", "vertices", "edges")

    def __init__(self, index_size: int, vertices, edges):
        vertices = {frozenset(s): c for s, c in vertices.items()}
        edges = {(frozenset(b), frozenset(s)): m for (b, s), m in edges.items()}
        expected = {frozenset(c)
                    for r in range(1, index_size + 1)
                    for c in itertools.combinations(range(index_size), r)}
        if set(vertices) != expected:
            raise ValueError("need exactly the nonempty subsets as vertices")
        for (big, small), m in edges.items():
            if not (small < big and len(big) == len(small) + 1):
                raise ValueError("edges must be one-step inclusions")
            if m.source != vertices[big] or m.target != vertices[small]:
                raise ValueError(f"edge {sorted(big)}->{sorted(small)} has "
                                 "wrong endpoints")
        for big in vertices:
            for s in big:
                small = big - {s}
                if small and (big, small) not in edges:
                    raise ValueError(f"missing edge {sorted(big)}->{sorted(small)}")
        # squares commute: removing two indices in either order agrees
        for big in vertices:
            if len(big) < 3:
                continue
            for s, t in itertools.combinations(sorted(big), 2):
                one = edges[(big, big - {s})].then(edges[(big - {s}, big - {s, t})])
                two = edges[(big, big - {t})].then(edges[(big - {t}, big - {s, t})])
                if one != two:
                    raise ValueError(f"square at {sorted(big)} minus "
                                     f"{{{s},{t}}} does not commute")
        object.__setattr__(self, "index_size", index_size)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):
        raise AttributeError("CubeDiagram is immutable")

    def subsets(self) -> list:
        return sorted(self.vertices, key=_subset_key)

    def to_json(self):
        def key(s):
            return ",".join(str(i) for i in sorted(s))
        return {"index_size": self.index_size,
                "vertices": {key(s): c.to_json()
                             for s, c in sorted(self.vertices.items(),
                                                key=lambda kv: _subset_key(kv[0]))},
                "edges": {f"{key(b)}->{key(s)}": m.to_json()
                          for (b, s), m in sorted(self.edges.items(),
                                                  key=lambda kv: (_subset_key(kv[0][0]),
                                                                  _subset_key(kv[0][1])))}}

    @staticmethod
    def from_json(data) -> "CubeDiagram":
        def parse(key):
            return frozenset(int(x) for x in key.split(","))
        vertices = {parse(k): ChainComplex.from_json(v)
                    for k, v in data["vertices"].items()}
        edges = {}
        for k, blocks in data["edges"].items():
            bkey, skey = k.split("->")
            big, small = parse(bkey), parse(skey)
            edges[(big, small)] = ChainMap(
                vertices[big], vertices[small],
                {int(q): QMatrix.from_json(m) for q, m in blocks.items()})
        return CubeDiagram(data["index_size"], vertices, edges)


def _total_layout(d: CubeDiagram):
    """Degree range, dimensions, and summand offsets of the total complex."""
    summands = [(len(s) - 1, s) for s in d.subsets()]
    lo = min(d.vertices[s].lo for _, s in summands)
    hi = max(p + d.vertices[s].hi for p, s in summands)
    dims = {}
    offsets = {}
    for m in range(lo, hi + 1):
        off = {}
        total = 0
        for p, s in summands:
            off[s] = total
            total += d.vertices[s].dim(m - p)
        dims[m] = total
        offsets[m] = off
    return lo, hi, dims, offsets, summands


def punctured_cube_hocolim(d: CubeDiagram) -> ChainComplex:
    """The total complex computing the homotopy colimit of the cube.

    Column p collects the subsets of size p+1, shifted up by p; the
    differential combines internal differentials with sign (-1)^p and the
    alternating sum of one-step edge maps, signed by the position of the
    omitted index.
    """
    if not d.vertices:
        return single_degree_complex(0)
    lo, hi, dims, offsets, summands = _total_layout(d)
    diffs = {}
    for m in range(lo + 1, hi + 1):
        rows, cols = dims[m - 1], dims[m]
        entries = [Fraction(0)] * (rows * cols)

        def place(block, r0, c0):
            for i in range(block.rows):
                base = (r0 + i) * cols + c0
                brow = i * block.cols
                for j in range(block.cols):
                    v = block.entries[brow + j]
                    if v:
                        entries[base + j] += v

        for p, s in summands:
            q = m - p
            src_dim = d.vertices[s].dim(q)
            if src_dim == 0:
                continue
            c0 = offsets[m][s]
            # internal differential, sign (-1)^p
            dmat = d.vertices[s].differential(q)
            if dmat.rows:
                block = dmat if p % 2 == 0 else -dmat
                place(block, offsets[m - 1][s], c0)
            # edge maps to one-step-smaller subsets
            for idx, el in enumerate(sorted(s)):
                small = s - {el}
                if not small:
                    continue
                emat = d.edges[(s, small)].at(q)
                if emat.rows == 0:
                    continue
                block = emat if idx % 2 == 0 else -emat
                place(block, offsets[m - 1][small], c0)
        diffs[m] = QMatrix(rows, cols, entries)
    return ChainComplex(lo, hi, dims, diffs)


def ks_hocolim(ambient: ChainComplex, d: CubeDiagram,
               singleton_maps) -> ChainComplex:
    """Mapping cone of the punctured-cube colimit mapping into an ambient.

    `singleton_maps` assigns a chain map D({i}) -> ambient to each
    singleton.  Composites from deeper subsets must be path independent;
    any incompatibility is rejected.  The empty cube returns the ambient
    unchanged.
    """
    if not d.vertices:
        return ChainComplex(ambient.lo, ambient.hi, ambient.dims,
                            ambient.differentials)
    singleton_maps = {frozenset(s): m for s, m in singleton_maps.items()}
    into_ambient = {}
    for s in d.subsets():
        if len(s) == 1:
            if s not in singleton_maps:
                raise ValueError(f"missing map into ambient for {sorted(s)}")
            m = singleton_maps[s]
            if m.source != d.vertices[s] or m.target != ambient:
                raise ValueError("singleton map has wrong endpoints")
            into_ambient[s] = m
        else:
            candidates = [d.edges[(s, s - {el})].then(into_ambient[s - {el}])
                          for el in sorted(s)]
            for other in candidates[1:]:
                if other != candidates[0]:
                    raise ValueError(f"maps into ambient from {sorted(s)} "
                                     "are incompatible")
            into_ambient[s] = candidates[0]

    tot = punctured_cube_hocolim(d)
    _, _, _, toffsets, summands = _total_layout(d)
    lo = min(ambient.lo, tot.lo + 1)
    hi = max(ambient.hi, tot.hi + 1)
    dims = {m: ambient.dim(m) + tot.dim(m - 1) for m in range(lo, hi + 1)}
    diffs = {}
    for m in range(lo + 1, hi + 1):
        rows, cols = dims[m - 1], dims[m]
        entries = [Fraction(0)] * (rows * cols)

        def place(block, r0, c0, sign=1):
            for i in range(block.rows):
                base = (r0 + i) * cols + c0
                brow = i * block.cols
                for j in range(block.cols):
                    v = block.entries[brow + j]
                    if v:
                        entries[base + j] += sign * v

        da = ambient.differential(m)
        if da.rows and da.cols:
            place(da, 0, 0)
        # columns: A_m then Tot_{m-1}; rows: A_{m-1} then Tot_{m-2}
        dt = tot.differential(m - 1)
        if dt.rows and dt.cols:
            place(dt, ambient.dim(m - 1), ambient.dim(m), sign=-1)
        # the induced map Tot -> ambient lives on the p = 0 column
        if tot.dim(m - 1):
            for p, s in summands:
                if p != 0:
                    continue
                q = m - 1
                block = into_ambient[s].at(q)
                if block.rows and block.cols:
                    place(block, 0, ambient.dim(m) + toffsets[m - 1][s])
        diffs[m] = QMatrix(rows, cols, entries)
    return ChainComplex(lo, hi, dims, diffs)


def cover_cube_diagram(components) -> tuple:
    """The punctured cube of a cover of a finite point set by subsets.

    Each component is an iterable of point labels; vertex S carries the
    degree-0 complex on the intersection of the chosen components, and
    edges are the inclusion indicator matrices.  Returns the diagram and
    the sorted point list of the union.
    """
    components = [sorted(set(c)) for c in components]
    n = len(components)
    union = sorted(set().union(*components)) if components else []
    inters = {}
    for r in range(1, n + 1):
        for combo in itertools.combinations(range(n), r):
            s = frozenset(combo)
            pts = set(components[combo[0]])
            for i in combo[1:]:
                pts &= set(components[i])
            inters[s] = sorted(pts)
    vertices = {s: single_degree_complex(len(pts))
                for s, pts in inters.items()}
    edges = {}
    for big, big_pts in inters.items():
        for el in big:
            small = big - {el}
            if not small:
                continue
            small_pts = inters[small]
            index = {p: i for i, p in enumerate(small_pts)}
            mat = QMatrix(len(small_pts), len(big_pts),
                          [1 if index[p] == i else 0
                           for i in range(len(small_pts))
                           for p in big_pts])
            edges[(big, small)] = ChainMap(vertices[big], vertices[small],
                                           {0: mat})
    return CubeDiagram(n, vertices, edges), union


# --- symbolic compactification diagrams ---------------------------------

class FormalMotive:
    """A symbolic motive expression; never evaluated."""

    def normalized(self) -> "FormalMotive":
        return self


@dataclass(frozen=True)
class ZeroMotive(FormalMotive):
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class CStar(FormalMotive):
    """The homological motive of an intersection of labeled pieces."""
    labels: tuple

    def __str__(self):
        return "C_*(" + "&".join(str(x) for x in self.labels) + ")"


@dataclass(frozen=True)
class Product(FormalMotive):
    """A symbolic product with another labeled factor."""
    inner: FormalMotive
    label: str

    def normalized(self):
        inner = self.inner.normalized()
        if isinstance(inner, ZeroMotive):
            return inner
        if isinstance(inner, (Twist, Shift)):
            # pull twists and shifts outside the product
            rebuilt = type(inner)(Product(inner.inner, self.label).normalized(),
                                  inner.amount)
            return rebuilt.normalized()
        return Product(inner, self.label)

    def __str__(self):
        return f"{self.inner}xC_*({self.label})"


@dataclass(frozen=True)
class Twist(FormalMotive):
    inner: FormalMotive
    amount: int

    def normalized(self):
        inner = self.inner.normalized()
        if isinstance(inner, ZeroMotive):
            return inner
        if isinstance(inner, Twist):
            return Twist(inner.inner, inner.amount + self.amount).normalized()
        if isinstance(inner, Shift):
            return Shift(Twist(inner.inner, self.amount).normalized(),
                         inner.amount).normalized()
        if self.amount == 0:
            return inner
        return Twist(inner, self.amount)

    def __str__(self):
        return f"{self.inner}({self.amount})"


@dataclass(frozen=True)
class Shift(FormalMotive):
    inner: FormalMotive
    amount: int

    def normalized(self):
        inner = self.inner.normalized()
        if isinstance(inner, ZeroMotive):
            return inner
        if isinstance(inner, Shift):
            return Shift(inner.inner, inner.amount + self.amount).normalized()
        if self.amount == 0:
            return inner
        return Shift(inner, self.amount)

    def __str__(self):
        return f"{self.inner}[{self.amount}]"


@dataclass(frozen=True, order=True)
class KSVertex:
    """A vertex of the augmented cube shape: inner subset, or l, or u."""
    rank: int
    subset: tuple

    @staticmethod
    def lower() -> "KSVertex":
        return KSVertex(0, ())

    @staticmethod
    def inner(subset) -> "KSVertex":
        return KSVertex(1, tuple(sorted(subset)))

    @staticmethod
    def upper() -> "KSVertex":
        return KSVertex(2, ())

    @property
    def tag(self) -> str:
        return {0: "l", 1: "inner", 2: "u"}[self.rank]

    def __str__(self):
        if self.rank == 0:
            return "l"
        if self.rank == 2:
            return "u"
        return "{" + ",".join(str(i) for i in self.subset) + "}"


@dataclass(frozen=True)
class KappaDiagram:
    """The labeled compactification diagram of an open piece.

    Inner vertices carry the motives of intersections of the boundary
    components, the lower vertex the ambient motive, the upper vertex
    zero; the colimit is to be twisted by (-dim) and shifted by [-2 dim],
    recorded as a global annotation.
    """
    components: tuple
    ambient: str
    dim: int
    vertices: tuple  # ordered pairs (KSVertex, FormalMotive)
    twist: int
    shift: int

    def vertex_map(self) -> dict:
        return dict(self.vertices)

    def cross_with(self, label: str) -> "KappaDiagram":
        """Multiply every vertex by another factor, as in the product diagram."""
        vertices = tuple((v, Product(expr, label).normalized())
                         for v, expr in self.vertices)
        return KappaDiagram(self.components, self.ambient, self.dim,
                            vertices, self.twist, self.shift)

    def rows(self) -> list:
        out = []
        for v, expr in self.vertices:
            out.append((str(v), str(expr.normalized())))
        return out

    def annotation(self) -> str:
        return f"colimit twisted by ({self.twist}) and shifted by [{self.shift}]"

    def to_json(self):
        return {"components": list(self.components),
                "ambient": self.ambient,
                "dim": self.dim,
                "twist": self.twist,
                "shift": self.shift,
                "vertices": {name: expr for name, expr in self.rows()}}


def build_kappa(components, ambient: str, dim: int) -> KappaDiagram:
    """The compactification diagram for boundary components inside an ambient.

    One inner vertex per nonempty subset of the components, carrying the
    intersection; the lower vertex carries the ambient, the upper vertex
    zero.  The global twist is -dim and the global shift -2*dim.
    """
    components = tuple(components)
    if len(set(components)) != len(components):
        raise ValueError("component labels must be distinct")
    vertices = [(KSVertex.lower(), CStar((ambient,)))]
    for r in range(1, len(components) + 1):
        for combo in itertools.combinations(range(len(components)), r):
            labels = tuple(components[i] for i in combo)
            vertices.append((KSVertex.inner(combo), CStar(labels)))
    vertices.append((KSVertex.upper(), ZeroMotive()))
    return KappaDiagram(components, ambient, dim, tuple(vertices),
                        -dim, -2 * dim)
