"""Finite sets, set maps, and chain diagrams S1 -> ... -> Sk up to isomorphism.

The basic combinatorial layer: sets are {0..n-1} with optional display
labels, maps are value lists, and a k-diagram is a composable chain of
maps.  Isomorphisms of diagrams are tuples of bijections making every
square commute.  Canonical forms are computed by minimizing a fixed
lexicographic encoding over all relabelings, which makes isomorphism
testing and class enumeration a matter of comparing representatives.

Everything here is immutable after construction and all functions are
pure; worst-case costs are factorial in the set sizes, which is fine at
the intended sizes (<= 6).
"""

from __future__ import annotations

import itertools


class FinSet:
    """A finite nonempty set {0..size-1}, optionally carrying display labels."""

    __slots__ = ("size", "labels")

    def __init__(self, size: int, labels=None):
        if size < 1:
            raise ValueError("FinSet must be nonempty (size >= 1)")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != size:
                raise ValueError("labels length must equal size")
            if len(set(labels)) != size:
                raise ValueError("labels must be distinct")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("FinSet is immutable")

    def __eq__(self, other):
        return (isinstance(other, FinSet) and self.size == other.size
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.size, self.labels))

    def __repr__(self):
        if self.labels is None:
            return f"FinSet({self.size})"
        return f"FinSet({self.size}, labels={list(self.labels)})"

    def to_json(self):
        data = {"size": self.size}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @staticmethod
    def from_json(data) -> "FinSet":
        return FinSet(data["size"], data.get("labels"))


class SetMap:
    """A map of finite sets, stored as values[i] = image of element i."""

    __slots__ = ("dom", "cod", "values")

    def __init__(self, dom: FinSet, cod: FinSet, values):
        values = tuple(values)
        if len(values) != dom.size:
            raise ValueError("values length must equal dom.size")
        for v in values:
            if not (0 <= v < cod.size):
                raise ValueError(f"value {v} out of range for cod of size {cod.size}")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("SetMap is immutable")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __eq__(self, other):
        return (isinstance(other, SetMap) and self.dom == other.dom
                and self.cod == other.cod and self.values == other.values)

    def __hash__(self):
        return hash((self.dom, self.cod, self.values))

    def __repr__(self):
        return f"SetMap({self.dom.size}->{self.cod.size}, {list(self.values)})"

    def is_bijective(self) -> bool:
        return (self.dom.size == self.cod.size
                and len(set(self.values)) == self.dom.size)

    def inverse(self) -> "SetMap":
        if not self.is_bijective():
            raise ValueError("only bijective maps can be inverted")
        inv = [0] * self.cod.size
        for i, v in enumerate(self.values):
            inv[v] = i
        return SetMap(self.cod, self.dom, inv)

    def fiber_sizes(self) -> tuple:
        """Sizes of the preimages of 0..cod.size-1, in element order."""
        sizes = [0] * self.cod.size
        for v in self.values:
            sizes[v] += 1
        return tuple(sizes)

    def to_json(self):
        return {"dom": self.dom.size, "cod": self.cod.size,
                "values": list(self.values)}

    @staticmethod
    def from_json(data) -> "SetMap":
        return SetMap(FinSet(data["dom"]), FinSet(data["cod"]), data["values"])


def identity_map(s: FinSet) -> SetMap:
    return SetMap(s, s, range(s.size))


def compose(f: SetMap, g: SetMap) -> SetMap:
    """The composite "f then g", i.e. g o f; requires f.cod = g.dom."""
    if f.cod.size != g.dom.size:
        raise ValueError("dimension mismatch: f.cod != g.dom")
    return SetMap(f.dom, g.cod, (g.values[v] for v in f.values))


def all_maps(dom: FinSet, cod: FinSet):
    """All set maps dom -> cod, in lexicographic order of value lists."""
    for values in itertools.product(range(cod.size), repeat=dom.size):
        yield SetMap(dom, cod, values)


class FinDiagram:
    """A chain S1 -> S2 -> ... -> Sk of maps of finite nonempty sets.

    k = 0 encodes the unique empty diagram (the one object in degree zero
    of the tower of diagram groupoids).
    """

    __slots__ = ("sets", "maps")

    def __init__(self, sets, maps):
        sets = tuple(sets)
        maps = tuple(maps)
        if len(sets) == 0 and len(maps) != 0:
            raise ValueError("empty diagram has no maps")
        if len(sets) > 0 and len(maps) != len(sets) - 1:
            raise ValueError("need exactly k-1 maps for k sets")
        for i, m in enumerate(maps):
            if m.dom.size != sets[i].size or m.cod.size != sets[i + 1].size:
                raise ValueError(f"map {i} does not chain sets {i} -> {i+1}")
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "maps", maps)

    def __setattr__(self, name, value):
        raise AttributeError("FinDiagram is immutable")

    @property
    def k(self) -> int:
        return len(self.sets)

    def sizes(self) -> tuple:
        return tuple(s.size for s in self.sets)

    def __eq__(self, other):
        return (isinstance(other, FinDiagram) and self.sets == other.sets
                and self.maps == other.maps)

    def __hash__(self):
        return hash((self.sets, self.maps))

    def __repr__(self):
        if self.k == 0:
            return "FinDiagram([])"
        parts = [str(self.sets[0].size)]
        for i, m in enumerate(self.maps):
            parts.append(f"-{list(m.values)}->{self.sets[i + 1].size}")
        return "FinDiagram(" + "".join(parts) + ")"

    def encoding(self):
        """Total-order key: sizes, then fiber structure right-to-left, then values."""
        fibers = tuple(m.fiber_sizes() for m in reversed(self.maps))
        values = tuple(m.values for m in self.maps)
        return (self.sizes(), fibers, values)

    def relabel(self, perms) -> "FinDiagram":
        """Apply bijections sigma_i : S_i -> S_i, conjugating every map."""
        perms = tuple(tuple(p) for p in perms)
        if len(perms) != self.k:
            raise ValueError("need one permutation per set")
        inv = []
        for p in perms:
            q = [0] * len(p)
            for i, v in enumerate(p):
                q[v] = i
            inv.append(q)
        new_sets = tuple(FinSet(s.size) for s in self.sets)
        new_maps = []
        for i, m in enumerate(self.maps):
            values = tuple(perms[i + 1][m.values[inv[i][x]]]
                           for x in range(m.dom.size))
            new_maps.append(SetMap(new_sets[i], new_sets[i + 1], values))
        return FinDiagram(new_sets, new_maps)

    def to_json(self):
        return {"sets": [s.to_json() for s in self.sets],
                "maps": [m.to_json() for m in self.maps]}

    @staticmethod
    def from_json(data) -> "FinDiagram":
        sets = [FinSet.from_json(s) for s in data["sets"]]
        maps = []
        for i, m in enumerate(data["maps"]):
            maps.append(SetMap(sets[i], sets[i + 1], m["values"]))
        return FinDiagram(sets, maps)


class DiagramIso:
    """An isomorphism of k-diagrams: bijections sigma_i with commuting squares."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: FinDiagram, target: FinDiagram, components):
        components = tuple(components)
        if source.k != target.k or len(components) != source.k:
            raise ValueError("need one component per set")
        for i, c in enumerate(components):
            if c.dom.size != source.sets[i].size or c.cod.size != target.sets[i].size:
                raise ValueError(f"component {i} has wrong boundary")
            if not c.is_bijective():
                raise ValueError(f"component {i} is not bijective")
        # naturality: sigma_{i+1} o f_i = f'_i o sigma_i
        for i in range(source.k - 1):
            left = compose(source.maps[i], components[i + 1])
            right = compose(components[i], target.maps[i])
            if left.values != right.values:
                raise ValueError(f"naturality square {i} does not commute")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("DiagramIso is immutable")

    def __eq__(self, other):
        return (isinstance(other, DiagramIso) and self.source == other.source
                and self.target == other.target
                and self.components == other.components)

    def __hash__(self):
        return hash((self.source, self.target, self.components))

    def __repr__(self):
        return f"DiagramIso({[list(c.values) for c in self.components]})"

    def then(self, other: "DiagramIso") -> "DiagramIso":
        if self.target != other.source:
            raise ValueError("isos do not compose")
        return DiagramIso(self.source, other.target,
                          tuple(compose(a, b)
                                for a, b in zip(self.components, other.components)))

    def inverse(self) -> "DiagramIso":
        return DiagramIso(self.target, self.source,
                          tuple(c.inverse() for c in self.components))

    def to_json(self):
        return {"components": [c.to_json() for c in self.components]}


def identity_iso(d: FinDiagram) -> DiagramIso:
    return DiagramIso(d, d, tuple(identity_map(s) for s in d.sets))


def _all_relabelings(sizes):
    return itertools.product(*(itertools.permutations(range(n)) for n in sizes))


def _canonical_with_perms(d: FinDiagram):
    """Minimal-encoding representative plus the relabeling achieving it."""
    if d.k == 0:
        return FinDiagram([], []), ()
    best = None
    best_key = None
    best_perms = None
    for perms in _all_relabelings(d.sizes()):
        cand = d.relabel(perms)
        key = cand.encoding()
        if best_key is None or key < best_key:
            best = cand
            best_key = key
            best_perms = perms
    return best, best_perms


def canonical_form(d: FinDiagram) -> FinDiagram:
    """The canonical representative of the isomorphism class of d.

    Isomorphic diagrams map to the identical representative; the map is
    idempotent.  Labels are discarded.
    """
    return _canonical_with_perms(d)[0]


def are_isomorphic(d1: FinDiagram, d2: FinDiagram):
    """A witness isomorphism d1 -> d2, or None.

    A witness exists iff the canonical forms coincide, and every returned
    witness satisfies the DiagramIso naturality invariants by construction.
    """
    if d1.k != d2.k:
        raise ValueError("diagrams have different lengths")
    c1, p1 = _canonical_with_perms(d1)
    c2, p2 = _canonical_with_perms(d2)
    if c1 != c2:
        return None
    if d1.k == 0:
        return DiagramIso(d1, d2, ())
    components = []
    for i in range(d1.k):
        q = [0] * len(p2[i])
        for a, b in enumerate(p2[i]):
            q[b] = a
        values = tuple(q[p1[i][x]] for x in range(d1.sets[i].size))
        components.append(SetMap(d1.sets[i], d2.sets[i], values))
    return DiagramIso(d1, d2, components)


class PermGroup:
    """Automorphism group of a diagram: generators plus the closure order."""

    __slots__ = ("degrees", "generators", "order")

    def __init__(self, degrees, generators, order: int):
        object.__setattr__(self, "degrees", tuple(degrees))
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    def __repr__(self):
        return f"PermGroup(degrees={self.degrees}, order={self.order})"

    def to_json(self):
        return {"order": self.order,
                "degrees": list(self.degrees),
                "generators": [g.to_json() for g in self.generators]}

    @staticmethod
    def from_json(data, diagram: FinDiagram) -> "PermGroup":
        gens = []
        for g in data["generators"]:
            comps = [SetMap(diagram.sets[i], diagram.sets[i],
                            c["values"])
                     for i, c in enumerate(g["components"])]
            gens.append(DiagramIso(diagram, diagram, comps))
        return PermGroup(data["degrees"], gens, data["order"])


def _compose_perm_tuples(a, b):
    # pointwise "a then b" on tuples of permutations
    return tuple(tuple(q[x] for x in p) for p, q in zip(a, b))


def _closure(generator_tuples, identity):
    """Breadth-first closure of permutation tuples under composition."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for el in frontier:
            for g in generator_tuples:
                c = _compose_perm_tuples(el, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def automorphisms(d: FinDiagram):
    """All self-isomorphisms of d, as tuples of value-permutations."""
    result = []
    if d.k == 0:
        return [()]
    for perms in _all_relabelings(d.sizes()):
        ok = True
        for i, m in enumerate(d.maps):
            for x in range(m.dom.size):
                if perms[i + 1][m.values[x]] != m.values[perms[i][x]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            result.append(perms)
    return result


def automorphism_group(d: FinDiagram) -> PermGroup:
    """Generators and order of the self-isomorphism group of d.

    All automorphisms are found by brute force; a small generating set is
    then extracted greedily, and the order is recomputed by breadth-first
    closure over those generators (and checked against the brute count).
    """
    auts = automorphisms(d)
    if d.k == 0:
        return PermGroup((), (), 1)
    identity = tuple(tuple(range(n)) for n in d.sizes())
    gens = []
    closed = {identity}
    for a in auts:
        if a not in closed:
            gens.append(a)
            closed = _closure(gens, identity)
    assert len(closed) == len(auts)
    gen_isos = tuple(
        DiagramIso(d, d, tuple(SetMap(s, s, p) for s, p in zip(d.sets, perms)))
        for perms in gens)
    return PermGroup(d.sizes(), gen_isos, len(auts))


def enumerate_diagrams(k: int, max_sizes) -> list:
    """One canonical representative per iso class with |S_i| <= max_sizes[i].

    Deterministic output order (sorted by the canonical encoding).
    """
    max_sizes = tuple(max_sizes)
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(max_sizes) != k:
        raise ValueError("need one bound per set")
    found = {}
    for sizes in itertools.product(*(range(1, b + 1) for b in max_sizes)):
        sets = tuple(FinSet(n) for n in sizes)
        map_choices = [
            [tuple(values)
             for values in itertools.product(range(sizes[i + 1]), repeat=sizes[i])]
            for i in range(k - 1)
        ]
        for combo in itertools.product(*map_choices):
            maps = [SetMap(sets[i], sets[i + 1], vals)
                    for i, vals in enumerate(combo)]
            c = canonical_form(FinDiagram(sets, maps))
            found[c.encoding()] = c
    return [found[key] for key in sorted(found)]
