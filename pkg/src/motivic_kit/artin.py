"""Comonoids and monoids on finite sets inside the exact matrix category,
and the solver for structure-preserving morphisms.

A finite set X carries a canonical comonoid: the counit is the all-ones
row (the class of X itself, pushed to the point) and the comultiplication
is the diagonal indicator matrix.  A matrix C is a morphism of comonoids
when it commutes with both structure maps; entrywise this unwinds to the
three equation families

    (eps)     every column of C sums to 1,
    (delta1)  every entry is idempotent, hence 0 or 1,
    (delta2)  distinct entries in one column multiply to 0,

which together force C to be the graph of a set map.  The solver follows
exactly this derivation, and duality transposes everything onto monoids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finsets import FinSet, SetMap, all_maps
from .qlinalg import QMatrix, kron, matmul


def swap_matrix(n: int, m: int = None) -> QMatrix:
    """The permutation matrix exchanging tensor factors of sizes n and m."""
    if m is None:
        m = n
    size = n * m
    entries = [0] * (size * size)
    for i in range(n):
        for j in range(m):
            entries[(j * n + i) * size + (i * m + j)] = 1
    return QMatrix(size, size, entries)


class ArtinComonoid:
    """A finite set with a counit row and a comultiplication matrix.

    Counitality, coassociativity and cocommutativity are enforced exactly
    at construction; non-canonical structures satisfying them are allowed.
    """

    __slots__ = ("carrier", "counit", "comult")

    def __init__(self, carrier: FinSet, counit: QMatrix, comult: QMatrix):
        n = carrier.size
        if counit.rows != 1 or counit.cols != n:
            raise ValueError("counit must be 1 x |X|")
        if comult.rows != n * n or comult.cols != n:
            raise ValueError("comult must be |X|^2 x |X|")
        ident = QMatrix.identity(n)
        if matmul(kron(counit, ident), comult) != ident:
            raise ValueError("counitality fails on the left")
        if matmul(kron(ident, counit), comult) != ident:
            raise ValueError("counitality fails on the right")
        if matmul(kron(comult, ident), comult) != matmul(kron(ident, comult), comult):
            raise ValueError("coassociativity fails")
        if matmul(swap_matrix(n), comult) != comult:
            raise ValueError("cocommutativity fails")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "counit", counit)
        object.__setattr__(self, "comult", comult)

    def __setattr__(self, name, value):
        raise AttributeError("ArtinComonoid is immutable")

    @property
    def size(self) -> int:
        return self.carrier.size

    def __eq__(self, other):
        return (isinstance(other, ArtinComonoid) and self.carrier == other.carrier
                and self.counit == other.counit and self.comult == other.comult)

    def __hash__(self):
        return hash((self.carrier, self.counit, self.comult))

    def __repr__(self):
        return f"ArtinComonoid(|X|={self.size})"

    def to_json(self):
        return {"carrier": self.carrier.to_json(),
                "counit": self.counit.to_json(),
                "comult": self.comult.to_json()}

    @staticmethod
    def from_json(data) -> "ArtinComonoid":
        return ArtinComonoid(FinSet.from_json(data["carrier"]),
                             QMatrix.from_json(data["counit"]),
                             QMatrix.from_json(data["comult"]))


class ArtinMonoid:
    """The dual structure: a unit column and a multiplication matrix."""

    __slots__ = ("carrier", "unit", "mult")

    def __init__(self, carrier: FinSet, unit: QMatrix, mult: QMatrix):
        n = carrier.size
        if unit.rows != n or unit.cols != 1:
            raise ValueError("unit must be |X| x 1")
        if mult.rows != n or mult.cols != n * n:
            raise ValueError("mult must be |X| x |X|^2")
        ident = QMatrix.identity(n)
        if matmul(mult, kron(unit, ident)) != ident:
            raise ValueError("unitality fails on the left")
        if matmul(mult, kron(ident, unit)) != ident:
            raise ValueError("unitality fails on the right")
        if matmul(mult, kron(mult, ident)) != matmul(mult, kron(ident, mult)):
            raise ValueError("associativity fails")
        if matmul(mult, swap_matrix(n)) != mult:
            raise ValueError("commutativity fails")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "mult", mult)

    def __setattr__(self, name, value):
        raise AttributeError("ArtinMonoid is immutable")

    @property
    def size(self) -> int:
        return self.carrier.size

    def __eq__(self, other):
        return (isinstance(other, ArtinMonoid) and self.carrier == other.carrier
                and self.unit == other.unit and self.mult == other.mult)

    def __repr__(self):
        return f"ArtinMonoid(|X|={self.size})"


def counit_matrix(n: int) -> QMatrix:
    """The all-ones row vector on a set of size n."""
    return QMatrix(1, n, [1] * n)


def comult_matrix(n: int) -> QMatrix:
    """The diagonal indicator: entry ((x', x''), x) is 1 iff x'' = x' = x."""
    entries = [0] * (n * n * n)
    for x in range(n):
        entries[(x * n + x) * n + x] = 1
    return QMatrix(n * n, n, entries)


def artin_comonoid(x: FinSet) -> ArtinComonoid:
    """The canonical comonoid carried by a finite set."""
    n = x.size
    return ArtinComonoid(x, counit_matrix(n), comult_matrix(n))


def artin_monoid(x: FinSet) -> ArtinMonoid:
    """The canonical monoid: transpose of the canonical comonoid."""
    n = x.size
    return ArtinMonoid(x, counit_matrix(n).transpose(),
                       comult_matrix(n).transpose())


def dual_monoid(c: ArtinComonoid) -> ArtinMonoid:
    return ArtinMonoid(c.carrier, c.counit.transpose(), c.comult.transpose())


def dual_comonoid(m: ArtinMonoid) -> ArtinComonoid:
    return ArtinComonoid(m.carrier, m.unit.transpose(), m.mult.transpose())


def coalgebra_morphism_violations(c: QMatrix, x: ArtinComonoid,
                                  y: ArtinComonoid) -> list:
    """Names of the failing equations for C as a comonoid morphism X -> Y.

    Empty means C commutes with both structure maps.  A mismatch in the
    comultiplication square is classified by the row block: "(delta1)" on
    diagonal rows (y, y), "(delta2)" off the diagonal.
    """
    if c.rows != y.size or c.cols != x.size:
        raise ValueError(f"morphism matrix must be {y.size} x {x.size}")
    violations = []
    if matmul(y.counit, c) != x.counit:
        violations.append("(eps)")
    lhs = matmul(kron(c, c), x.comult)
    rhs = matmul(y.comult, c)
    diag = off = False
    ny = y.size
    for r in range(ny * ny):
        if lhs.row(r) != rhs.row(r):
            if r // ny == r % ny:
                diag = True
            else:
                off = True
    if diag:
        violations.append("(delta1)")
    if off:
        violations.append("(delta2)")
    return violations


def is_coalgebra_morphism(c: QMatrix, x: ArtinComonoid, y: ArtinComonoid) -> bool:
    return not coalgebra_morphism_violations(c, x, y)


def monoid_morphism_violations(m: QMatrix, x: ArtinMonoid,
                               y: ArtinMonoid) -> list:
    """The transposed check: M as a monoid morphism X -> Y."""
    if m.rows != y.size or m.cols != x.size:
        raise ValueError(f"morphism matrix must be {y.size} x {x.size}")
    violations = []
    if matmul(m, x.unit) != y.unit:
        violations.append("(eta)")
    lhs = matmul(m, x.mult)
    rhs = matmul(y.mult, kron(m, m))
    diag = off = False
    nx = x.size
    lt = lhs.transpose()
    rt = rhs.transpose()
    for col in range(nx * nx):
        if lt.row(col) != rt.row(col):
            if col // nx == col % nx:
                diag = True
            else:
                off = True
    if diag:
        violations.append("(mu1)")
    if off:
        violations.append("(mu2)")
    return violations


def is_monoid_morphism(m: QMatrix, x: ArtinMonoid, y: ArtinMonoid) -> bool:
    return not monoid_morphism_violations(m, x, y)


class CoalgMorphism:
    """A matrix morphism of comonoids, validated at construction."""

    __slots__ = ("matrix", "source", "target")

    def __init__(self, matrix: QMatrix, source: ArtinComonoid,
                 target: ArtinComonoid):
        violations = coalgebra_morphism_violations(matrix, source, target)
        if violations:
            raise ValueError(f"not a comonoid morphism: fails {violations}")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)

    def __setattr__(self, name, value):
        raise AttributeError("CoalgMorphism is immutable")

    def __eq__(self, other):
        return (isinstance(other, CoalgMorphism) and self.matrix == other.matrix
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash((self.matrix, self.source.carrier, self.target.carrier))

    def __repr__(self):
        return f"CoalgMorphism({self.source.size}->{self.target.size})"

    def to_json(self):
        return {"source": self.source.carrier.to_json(),
                "target": self.target.carrier.to_json(),
                "matrix": self.matrix.to_json()}

    @staticmethod
    def from_json(data) -> "CoalgMorphism":
        return CoalgMorphism(QMatrix.from_json(data["matrix"]),
                             artin_comonoid(FinSet.from_json(data["source"])),
                             artin_comonoid(FinSet.from_json(data["target"])))


def graph_matrix(f: SetMap) -> QMatrix:
    """The |cod| x |dom| indicator of the graph of f."""
    nx, ny = f.dom.size, f.cod.size
    entries = [0] * (ny * nx)
    for x, y in enumerate(f.values):
        entries[y * nx + x] = 1
    return QMatrix(ny, nx, entries)


def morphism_from_setmap(f: SetMap) -> CoalgMorphism:
    """The comonoid morphism carried by the graph of a set map."""
    return CoalgMorphism(graph_matrix(f), artin_comonoid(f.dom),
                         artin_comonoid(f.cod))


def setmap_from_morphism(c: CoalgMorphism) -> SetMap:
    """Recover the set map whose graph the morphism matrix is.

    Raises on any matrix that is not a graph (solver outputs always are).
    """
    m = c.matrix
    values = []
    for x in range(m.cols):
        col = [m[y, x] for y in range(m.rows)]
        ones = [y for y, v in enumerate(col) if v == 1]
        if len(ones) != 1 or any(v not in (0, 1) for v in col):
            raise ValueError("matrix is not the graph of a set map")
        values.append(ones[0])
    return SetMap(c.source.carrier, c.target.carrier, values)


def solve_coalgebra_morphisms(x: FinSet, y: FinSet) -> list:
    """The complete finite list of comonoid morphisms C_*X -> C_*Y.

    Equation (delta1) makes every entry an idempotent rational, hence 0 or
    1; (delta2) leaves at most one nonzero per column; (eps) then pins each
    column sum to 1.  The candidates are therefore exactly the graphs of
    set maps X -> Y, and each one is verified against both diagrams before
    being returned.  Deterministic order (lexicographic in the map).
    """
    cx = artin_comonoid(x)
    cy = artin_comonoid(y)
    out = []
    for f in all_maps(x, y):
        m = graph_matrix(f)
        if coalgebra_morphism_violations(m, cx, cy):
            raise AssertionError("graph candidate unexpectedly rejected")
        out.append(CoalgMorphism(m, cx, cy))
    return out


@dataclass(frozen=True)
class DualityCheck:
    """Transpose of a comonoid morphism, checked against the dual monoids."""
    matrix: QMatrix
    source: ArtinMonoid
    target: ArtinMonoid
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def dualize(c: CoalgMorphism) -> DualityCheck:
    """Check the transpose as a monoid morphism between the dual monoids.

    A morphism C : C_*X -> C_*Y transposes to a map from the dual monoid
    of Y to the dual monoid of X; the equations are the exact transposes
    of the comonoid ones, so the check always passes for valid input.
    """
    my = dual_monoid(c.target)
    mx = dual_monoid(c.source)
    mt = c.matrix.transpose()
    return DualityCheck(mt, my, mx,
                        tuple(monoid_morphism_violations(mt, my, mx)))


@dataclass(frozen=True)
class McffeReport:
    """Counts for the morphism-space comparison on a pair of finite sets."""
    x_size: int
    y_size: int
    morphism_count: int
    setmap_count: int
    all_graphs: bool

    @property
    def passed(self) -> bool:
        return self.morphism_count == self.setmap_count and self.all_graphs

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"|X|={self.x_size} |Y|={self.y_size}: "
                f"{self.morphism_count} = {self.setmap_count}, {verdict}")


def verify_mcffe(x: FinSet, y: FinSet) -> McffeReport:
    """Comonoid morphisms X -> Y biject with set maps X -> Y.

    Asserts the count |Y|^|X| and that the graph correspondence is a
    bijection in both directions (every morphism matrix is the graph of a
    map, every map arises, and reading the map back inverts it).
    """
    morphisms = solve_coalgebra_morphisms(x, y)
    expected = y.size ** x.size
    maps = list(all_maps(x, y))
    all_graphs = {c.matrix for c in morphisms} == \
        {graph_matrix(f) for f in maps}
    recovered = {setmap_from_morphism(c).values for c in morphisms}
    round_trip = recovered == {f.values for f in maps}
    return McffeReport(x.size, y.size, len(morphisms), expected,
                       all_graphs and round_trip)
