"""Finite group actions on finite sets and the descent comparison.

A finite group is a full multiplication table; a G-set is a set with a
homomorphic family of bijections.  These model the Galois-theoretic data
of the zero-dimensional situation: equivariant set maps on one side,
group-fixed comonoid morphisms on the other, with the graph construction
matching them up.
"""

from __future__ import annotations

import itertools

from .artin import graph_matrix, solve_coalgebra_morphisms
from .finsets import FinSet, SetMap, all_maps, compose, identity_map
from .qlinalg import matmul


class FiniteGroup:
    """A group given by its order x order multiplication table.

    table[g][h] is the product g*h.  Identity, inverses and associativity
    are all checked at construction.
    """

    __slots__ = ("order", "table", "identity")

    def __init__(self, table):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise ValueError("empty group table")
        for row in table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("table is not order x order over 0..order-1")
        identity = None
        for e in range(n):
            if all(table[e][g] == g and table[g][e] == g for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        for g in range(n):
            if identity not in table[g]:
                raise ValueError(f"element {g} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ValueError("multiplication is not associative")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "identity", identity)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.table[g].index(self.identity)

    def elements(self):
        return range(self.order)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def generating_set(self) -> list:
        """A small generating set, found greedily by closure."""
        gens = []
        closed = {self.identity}
        for g in self.elements():
            if g not in closed:
                gens.append(g)
                closed = self._closure(gens)
        return gens

    def _closure(self, gens) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def to_json(self):
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @staticmethod
    def from_json(data) -> "FiniteGroup":
        g = FiniteGroup(data["table"])
        if g.order != data["order"]:
            raise ValueError("declared order does not match table")
        return g


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def klein_four_group() -> FiniteGroup:
    # elements are bit pairs 0..3, product is xor
    return FiniteGroup([[i ^ j for j in range(4)] for i in range(4)])


def symmetric_group(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms]
             for p in perms]
    return FiniteGroup(table)


class GSet:
    """A finite set with a left action of a finite group.

    action[g] is the bijection of the carrier by g, and
    action[g*h] = action[g] o action[h] is checked on the full table.
    """

    __slots__ = ("group", "carrier", "action")

    def __init__(self, group: FiniteGroup, carrier: FinSet, action):
        action = tuple(action)
        if len(action) != group.order:
            raise ValueError("need one bijection per group element")
        for m in action:
            if m.dom.size != carrier.size or m.cod.size != carrier.size:
                raise ValueError("action maps must be endomaps of the carrier")
            if not m.is_bijective():
                raise ValueError("action maps must be bijective")
        if action[group.identity].values != tuple(range(carrier.size)):
            raise ValueError("identity must act trivially")
        for g in group.elements():
            for h in group.elements():
                # left action: (g*h).x = g.(h.x)
                gh = compose(action[h], action[g])
                if gh.values != action[group.mul(g, h)].values:
                    raise ValueError("action is not a homomorphism")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "action", action)

    def __setattr__(self, name, value):
        raise AttributeError("GSet is immutable")

    def act(self, g: int) -> SetMap:
        return self.action[g]

    def __eq__(self, other):
        return (isinstance(other, GSet) and self.group == other.group
                and self.carrier == other.carrier and self.action == other.action)

    def __hash__(self):
        return hash((self.group, self.carrier, self.action))

    def __repr__(self):
        return f"GSet(|G|={self.group.order}, |X|={self.carrier.size})"

    def to_json(self):
        return {"group": self.group.to_json(),
                "carrier": self.carrier.to_json(),
                "action": [list(m.values) for m in self.action]}

    @staticmethod
    def from_json(data) -> "GSet":
        group = FiniteGroup.from_json(data["group"])
        carrier = FinSet.from_json(data["carrier"])
        action = [SetMap(carrier, carrier, values) for values in data["action"]]
        return GSet(group, carrier, action)


def trivial_gset(group: FiniteGroup, carrier: FinSet) -> GSet:
    return GSet(group, carrier,
                [identity_map(carrier) for _ in group.elements()])


def regular_gset(group: FiniteGroup) -> GSet:
    """The group acting on itself by left translation."""
    carrier = FinSet(group.order)
    action = [SetMap(carrier, carrier,
                     [group.mul(g, h) for h in group.elements()])
              for g in group.elements()]
    return GSet(group, carrier, action)


def gset_from_generator_images(group: FiniteGroup, carrier: FinSet,
                               gens, images) -> GSet:
    """Extend bijections assigned to generators to a full action, or raise."""
    assigned = {group.identity: identity_map(carrier)}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, img in zip(gens, images):
                b = group.mul(g, a)
                m = compose(assigned[a], img)  # g acts after a
                if b in assigned:
                    if assigned[b].values != m.values:
                        raise ValueError("generator images are inconsistent")
                else:
                    assigned[b] = m
                    nxt.append(b)
        frontier = nxt
    if len(assigned) != group.order:
        raise ValueError("generators do not generate")
    return GSet(group, carrier, [assigned[g] for g in group.elements()])


def all_gset_actions(group: FiniteGroup, size: int) -> list:
    """Every action of the group on a set of the given size.

    Enumerated via images of a generating set, so the cost is
    (size!)^(number of generators) candidate tuples.
    """
    carrier = FinSet(size)
    gens = group.generating_set()
    if not gens:
        return [trivial_gset(group, carrier)]
    perms = [SetMap(carrier, carrier, p)
             for p in itertools.permutations(range(size))]
    out = []
    for images in itertools.product(perms, repeat=len(gens)):
        try:
            out.append(gset_from_generator_images(group, carrier, gens, images))
        except ValueError:
            continue
    return out


def sub_gset(x: GSet, elements) -> GSet:
    """Restrict the action to the subgroup generated by the given elements."""
    group = x.group
    closed = sorted(group._closure(list(elements)))
    index = {g: i for i, g in enumerate(closed)}
    table = [[index[group.mul(a, b)] for b in closed] for a in closed]
    sub = FiniteGroup(table)
    return GSet(sub, x.carrier, [x.action[g] for g in closed])


def equivariant_set_maps(x: GSet, y: GSet) -> list:
    """All set maps f with f(g.a) = g.f(a) for every group element g."""
    if x.group != y.group:
        raise ValueError("G-sets over different groups")
    out = []
    for f in all_maps(x.carrier, y.carrier):
        if all(compose(x.act(g), f).values == compose(f, y.act(g)).values
               for g in x.group.elements()):
            out.append(f)
    return out


def fixed_coalgebra_morphisms(x: GSet, y: GSet) -> list:
    """Comonoid morphisms whose matrices are fixed by the group action.

    The group acts on a matrix C by P_Y(g) C P_X(g)^(-1), matching the
    diagonal action on the product of the carriers; the fixed morphisms
    are exactly the graphs of the equivariant maps.
    """
    if x.group != y.group:
        raise ValueError("G-sets over different groups")
    morphisms = solve_coalgebra_morphisms(x.carrier, y.carrier)
    out = []
    for c in morphisms:
        fixed = True
        for g in x.group.elements():
            py = graph_matrix(y.act(g))
            px_inv = graph_matrix(x.act(g)).transpose()
            if matmul(matmul(py, c.matrix), px_inv) != c.matrix:
                fixed = False
                break
        if fixed:
            out.append(c)
    return out
