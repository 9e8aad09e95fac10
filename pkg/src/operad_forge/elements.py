"""Combinatorial basis elements: trees, pointed sets, words, planar trees,
rooted hypertrees, and packed words / surjections.

Conventions shared by every family:

* labels are positive integers (positional labels ``1..n``) or identifier
  strings (generator names); repeated labels are allowed everywhere except in
  enumeration, which always works over a tuple of distinct labels;
* ``degree()`` counts label slots (vertices / letters / leaves);
* ``labels()`` lists the labels in a canonical traversal order, with
  multiplicity;
* ``relabel(m)`` substitutes label ``l`` by ``m[l]`` (missing keys fixed) and
  re-canonicalizes;
* ``sort_key()`` returns a tuple giving a total order within the family, used
  for deterministic printing of linear combinations;
* ``to_text()`` renders the element in the textual grammar
  (see :mod:`operad_forge.grammar`).

Unordered structure (tree children, pointed-set members, hyperedges) is kept
sorted internally, so structural equality of the dataclasses is equality of
elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial


def label_key(label):
    """Total order on mixed int/str labels: all ints first, then strings."""
    if isinstance(label, bool) or not isinstance(label, (int, str)):
        raise TypeError("labels must be ints or strings: %r" % (label,))
    return (0, label, "") if isinstance(label, int) else (1, 0, label)


def label_text(label) -> str:
    return str(label)


def apply_map(m, label):
    return m.get(label, label)


# ---------------------------------------------------------------------------
# rooted trees (non-planar, labeled vertices)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree with labeled vertices and unordered children.

    Children are stored sorted by ``sort_key``, so two trees are equal iff
    they are isomorphic as labeled rooted trees.
    """

    label: object
    children: tuple = ()

    def __post_init__(self):
        label_key(self.label)
        kids = tuple(sorted(self.children, key=lambda t: t.sort_key()))
        object.__setattr__(self, "children", kids)

    def degree(self) -> int:
        return 1 + sum(c.degree() for c in self.children)

    def labels(self) -> tuple:
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return tuple(out)

    def relabel(self, m) -> "RootedTree":
        return RootedTree(apply_map(m, self.label), tuple(c.relabel(m) for c in self.children))

    def sort_key(self):
        return (self.degree(), label_key(self.label)) + tuple(c.sort_key() for c in self.children)

    def shape_key(self):
        """Sort key of the underlying unlabeled tree (labels erased)."""
        return (self.degree(),) + tuple(sorted(c.shape_key() for c in self.children))

    def to_text(self) -> str:
        if not self.children:
            return label_text(self.label)
        return "%s(%s)" % (self.label, ",".join(c.to_text() for c in self.children))

    def replace_child(self, i, new) -> "RootedTree":
        return RootedTree(self.label, self.children[:i] + (new,) + self.children[i + 1 :])

    def drop_child(self, i) -> "RootedTree":
        return RootedTree(self.label, self.children[:i] + self.children[i + 1 :])

    def add_child(self, sub) -> "RootedTree":
        return RootedTree(self.label, self.children + (sub,))


def tree_aut_order(t: RootedTree) -> int:
    """Order of the automorphism group of the underlying unlabeled shape.

    For a tree with distinct labels this equals the number of relabelings
    fixing the tree: the product over vertices of m! for every group of m
    isomorphic child subtrees.
    """
    order = 1
    groups = {}
    for c in t.children:
        groups.setdefault(c.shape_key(), []).append(c)
    for group in groups.values():
        order *= factorial(len(group))
        for c in group:
            order *= tree_aut_order(c)
    return order


# ---------------------------------------------------------------------------
# pointed sets (multisets with one marked member)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointedSet:
    """A nonempty multiset of labels with one occurrence marked as the point."""

    point: object
    rest: tuple = ()

    def __post_init__(self):
        label_key(self.point)
        object.__setattr__(self, "rest", tuple(sorted(self.rest, key=label_key)))

    def degree(self) -> int:
        return 1 + len(self.rest)

    def labels(self) -> tuple:
        return (self.point,) + self.rest

    def members(self) -> tuple:
        """All labels in display order (sorted, with the point in place)."""
        return tuple(sorted(self.labels(), key=label_key))

    def relabel(self, m) -> "PointedSet":
        return PointedSet(apply_map(m, self.point), tuple(apply_map(m, x) for x in self.rest))

    def sort_key(self):
        return (self.degree(), label_key(self.point)) + tuple(label_key(x) for x in self.rest)

    def to_text(self) -> str:
        shown = []
        point_done = False
        for x in self.members():
            if not point_done and x == self.point:
                shown.append("*" + label_text(x))
                point_done = True
            else:
                shown.append(label_text(x))
        return "{%s}" % ",".join(shown)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def degree(self) -> int:
        return len(self.letters)

    def labels(self) -> tuple:
        return self.letters

    def relabel(self, m) -> "Word":
        return Word(tuple(apply_map(m, x) for x in self.letters))

    def sort_key(self):
        return (len(self.letters),) + tuple(label_key(x) for x in self.letters)

    def to_text(self) -> str:
        return "[%s]" % ",".join(label_text(x) for x in self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def slice(self, positions) -> "Word":
        return Word(tuple(self.letters[i] for i in positions))


# ---------------------------------------------------------------------------
# plain multisets (commutative-product carrier)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MSet:
    """An unordered multiset of labels; re-sorts itself under relabeling."""

    members: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members, key=label_key)))

    def degree(self) -> int:
        return len(self.members)

    def labels(self) -> tuple:
        return self.members

    def relabel(self, m) -> "MSet":
        return MSet(tuple(apply_map(m, x) for x in self.members))

    def sort_key(self):
        return (len(self.members),) + tuple(label_key(x) for x in self.members)

    def to_text(self) -> str:
        return "{%s}" % ",".join(label_text(x) for x in self.members)


# ---------------------------------------------------------------------------
# planar trees (ordered children): 2-as and dipterous carriers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarTree:
    """Planar node: a labeled leaf (``op is None``) or an internal node with
    an operation tag and ordered children.

    Tags in use: ``star`` / ``dot`` for the alternating two-product model,
    ``star`` / ``prec`` for the word-of-trees model.  Children order is
    structural -- no sorting.
    """

    op: object = None
    label: object = None
    children: tuple = ()

    def is_leaf(self) -> bool:
        return self.op is None

    def degree(self) -> int:
        if self.is_leaf():
            return 1
        return sum(c.degree() for c in self.children)

    def labels(self) -> tuple:
        if self.is_leaf():
            return (self.label,)
        out = []
        for c in self.children:
            out.extend(c.labels())
        return tuple(out)

    def relabel(self, m) -> "PlanarTree":
        if self.is_leaf():
            return PlanarTree(None, apply_map(m, self.label))
        return PlanarTree(self.op, None, tuple(c.relabel(m) for c in self.children))

    def sort_key(self):
        if self.is_leaf():
            return (1, 0, label_key(self.label))
        return (self.degree(), 1, self.op) + tuple(c.sort_key() for c in self.children)

    def to_text(self) -> str:
        if self.is_leaf():
            return label_text(self.label)
        return "%s(%s)" % (self.op, ",".join(c.to_text() for c in self.children))


def leaf(label) -> PlanarTree:
    return PlanarTree(None, label)


def planar_node(op, children) -> PlanarTree:
    children = tuple(children)
    assert len(children) >= 2, "internal planar nodes need at least two children"
    for c in children:
        assert not (c.op == op), "adjacent %r nodes must be flattened" % (op,)
    return PlanarTree(op, None, children)


# ---------------------------------------------------------------------------
# rooted hypertrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hypertree:
    """A rooted hypertree: vertices joined by hyperedges of size >= 2 such
    that the bipartite incidence graph is a tree, with one root vertex.

    Stored canonically: each edge a sorted tuple, edges sorted."""

    root: object
    edges: tuple = ()

    def __post_init__(self):
        norm = tuple(
            sorted(
                (tuple(sorted(e, key=label_key)) for e in self.edges),
                key=lambda e: (len(e),) + tuple(label_key(x) for x in e),
            )
        )
        object.__setattr__(self, "edges", norm)
        assert is_hypertree(self.root, norm), (
            "not a rooted hypertree (must be connected and cycle-free, every "
            "edge of size >= 2 with distinct vertices): root=%r edges=%r"
            % (self.root, norm)
        )

    def vertices(self) -> tuple:
        seen = {self.root}
        for e in self.edges:
            seen.update(e)
        return tuple(sorted(seen, key=label_key))

    def degree(self) -> int:
        return len(self.vertices())

    def labels(self) -> tuple:
        rest = tuple(v for v in self.vertices() if v != self.root)
        return (self.root,) + rest

    def relabel(self, m) -> "Hypertree":
        return Hypertree(apply_map(m, self.root), tuple(tuple(apply_map(m, x) for x in e) for e in self.edges))

    def sort_key(self):
        return (
            self.degree(),
            label_key(self.root),
            tuple((len(e),) + tuple(label_key(x) for x in e) for e in self.edges),
        )

    def to_text(self) -> str:
        parts = ["root=%s" % label_text(self.root)]
        parts.extend("{%s}" % ",".join(label_text(x) for x in e) for e in self.edges)
        return "ht(%s)" % "; ".join(parts)

    def binary_edges(self) -> tuple:
        return tuple(e for e in self.edges if len(e) == 2)


def hypertree_component(vertex, edges):
    """Vertices reachable from ``vertex`` using ``edges``; includes it."""
    seen = {vertex}
    frontier = [vertex]
    edges = list(edges)
    while frontier:
        v = frontier.pop()
        for e in edges:
            if v in e:
                for w in e:
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
    return frozenset(seen)


def is_hypertree(root, edges) -> bool:
    """Tree condition for the incidence graph: connected and
    sum(|e| - 1) == |V| - 1, every edge of size >= 2, root a vertex."""
    edges = [tuple(e) for e in edges]
    verts = {root}
    for e in edges:
        if len(set(e)) != len(e) or len(e) < 2:
            return False
        verts.update(e)
    if sum(len(e) - 1 for e in edges) != len(verts) - 1:
        return False
    return hypertree_component(root, edges) == frozenset(verts)


# ---------------------------------------------------------------------------
# surjections (packed words): maps [n] ->> [r] recorded as value tuples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Surjection:
    """A surjection ``[n] ->> [r]`` stored as the tuple of values; the
    positions 1..n are the labels."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        assert vals, "empty surjection"
        r = max(vals)
        assert set(vals) == set(range(1, r + 1)), "values must cover 1..r: %r" % (vals,)
        object.__setattr__(self, "values", vals)

    def degree(self) -> int:
        return len(self.values)

    def levels(self) -> int:
        return max(self.values)

    def labels(self) -> tuple:
        return tuple(range(1, len(self.values) + 1))

    def relabel(self, m) -> "Surjection":
        new = [0] * len(self.values)
        for i, v in enumerate(self.values, start=1):
            new[apply_map(m, i) - 1] = v
        return Surjection(tuple(new))

    def sort_key(self):
        return (len(self.values), self.values)

    def to_text(self) -> str:
        return "(%s)" % ",".join(str(v) for v in self.values)


def standardize(values) -> Surjection:
    """Pack arbitrary positive integer values to a surjection onto 1..r,
    preserving relative order of values."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(set(values)))}
    return Surjection(tuple(ranks[v] for v in values))


# ---------------------------------------------------------------------------
# permutations and stabilizers
# ---------------------------------------------------------------------------


def perm_maps(labels):
    """All bijections of ``labels`` to itself, as dicts."""
    labels = tuple(labels)
    for image in itertools.permutations(labels):
        yield dict(zip(labels, image))


def stabilizer_order(e, brute_limit: int = 8) -> int:
    """Number of relabelings of ``e``'s (distinct) labels fixing ``e``.

    Rooted trees use the shape multiplicity-factorial formula; everything
    else is brute force over the symmetric group (degree <= brute_limit).
    """
    labels = e.labels()
    assert len(set(labels)) == len(labels), "stabilizer needs distinct labels"
    if isinstance(e, RootedTree):
        return tree_aut_order(e)
    if isinstance(e, Word):
        return 1
    if isinstance(e, Surjection):
        counts = {}
        for v in e.values:
            counts[v] = counts.get(v, 0) + 1
        order = 1
        for c in counts.values():
            order *= factorial(c)
        return order
    n = e.degree()
    assert n <= brute_limit, "brute-force stabilizer capped at degree %d" % brute_limit
    return sum(1 for m in perm_maps(labels) if e.relabel(m) == e)


def orbit_canonical(e):
    """Least relabeling of ``e`` over all permutations of its labels
    (labels kept as a set); canonical orbit representative."""
    best = None
    for m in perm_maps(e.labels()):
        cand = e.relabel(m)
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    return best


# ---------------------------------------------------------------------------
# partition / subset helpers
# ---------------------------------------------------------------------------


def set_partitions(items):
    """All set partitions of a sequence, as tuples of tuples."""
    items = tuple(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((first,) + block,) + part[i + 1 :]


def nonempty_subsets(items):
    items = tuple(items)
    for r in range(1, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield combo


def ordered_partitions_all(items, min_blocks=1):
    """All ordered sequences of disjoint nonempty subsets covering ``items``."""
    items = tuple(items)
    if not items:
        if min_blocks <= 0:
            yield ()
        return
    for block in nonempty_subsets(items):
        remaining = tuple(x for x in items if x not in block)
        if not remaining and min_blocks > 1:
            continue
        for tail in ordered_partitions_all(remaining, min_blocks - 1):
            yield (block,) + tail


# ---------------------------------------------------------------------------
# enumeration at fixed (distinct) labels
# ---------------------------------------------------------------------------


def enumerate_trees(labels):
    """All rooted trees on exactly the given distinct labels."""
    labels = tuple(labels)
    out = []
    for i, root in enumerate(labels):
        rest = labels[:i] + labels[i + 1 :]
        out.extend(_trees_with_root(root, rest))
    return sorted(set(out), key=lambda t: t.sort_key())


def _trees_with_root(root, rest):
    if not rest:
        return [RootedTree(root)]
    out = []
    for part in set_partitions(rest):
        child_options = []
        for block in part:
            opts = []
            for j, sub_root in enumerate(block):
                opts.extend(_trees_with_root(sub_root, block[:j] + block[j + 1 :]))
            child_options.append(opts)
        for kids in itertools.product(*child_options):
            out.append(RootedTree(root, kids))
    return out


def enumerate_pointed(labels):
    labels = tuple(labels)
    out = []
    for i, p in enumerate(labels):
        out.append(PointedSet(p, labels[:i] + labels[i + 1 :]))
    return sorted(out, key=lambda e: e.sort_key())


def enumerate_words(labels):
    return sorted((Word(p) for p in itertools.permutations(labels)), key=lambda e: e.sort_key())


def enumerate_sets(labels):
    """The one-element basis of the set species at each label set."""
    return [MSet(tuple(labels))]


def enumerate_surjections(n):
    out = []
    for values in itertools.product(*(range(1, n + 1) for _ in range(n))):
        vals = set(values)
        r = max(values)
        if vals == set(range(1, r + 1)):
            out.append(Surjection(values))
    return sorted(out, key=lambda e: e.sort_key())


def enumerate_alt_trees(labels, ops=("star", "dot")):
    """Alternating planar trees on the given leaf labels: internal nodes
    tagged from ``ops``, no node having a child with the same tag."""
    labels = tuple(labels)

    def build(lab, banned):
        if len(lab) == 1:
            return [leaf(lab[0])]
        out = []
        for op in ops:
            if op == banned:
                continue
            for blocks in ordered_partitions_all(lab, 2):
                if len(blocks) < 2:
                    continue
                child_opts = [build(b, op) for b in blocks]
                for kids in itertools.product(*child_opts):
                    out.append(PlanarTree(op, None, kids))
        return out

    return sorted(build(labels, None), key=lambda e: e.sort_key())


def enumerate_prec_trees(labels):
    """Planar trees with ``prec`` internal nodes (any arity >= 2)."""
    labels = tuple(labels)
    if len(labels) == 1:
        return [leaf(labels[0])]
    out = []
    for blocks in ordered_partitions_all(labels, 2):
        if len(blocks) < 2:
            continue
        child_opts = [enumerate_prec_trees(b) for b in blocks]
        for kids in itertools.product(*child_opts):
            out.append(PlanarTree("prec", None, kids))
    return sorted(out, key=lambda e: e.sort_key())


def enumerate_tree_words(labels):
    """Words of ``prec`` planar trees: a single tree, or a ``star`` node
    whose children are trees.  Carrier of the two-product word model."""
    labels = tuple(labels)
    out = list(enumerate_prec_trees(labels))
    for blocks in ordered_partitions_all(labels, 2):
        if len(blocks) < 2:
            continue
        child_opts = [enumerate_prec_trees(b) for b in blocks]
        for kids in itertools.product(*child_opts):
            out.append(PlanarTree("star", None, kids))
    return sorted(out, key=lambda e: e.sort_key())


def enumerate_hypertrees(labels):
    """All rooted hypertrees on exactly the given distinct labels."""
    labels = tuple(labels)
    n = len(labels)
    if n == 1:
        return [Hypertree(labels[0])]
    candidates = [c for r in range(2, n + 1) for c in itertools.combinations(labels, r)]
    weights = [len(c) - 1 for c in candidates]
    target = n - 1
    edge_sets = []

    def pick(start, remaining, chosen):
        if remaining == 0:
            edge_sets.append(tuple(chosen))
            return
        for i in range(start, len(candidates)):
            if weights[i] <= remaining:
                chosen.append(candidates[i])
                pick(i + 1, remaining - weights[i], chosen)
                chosen.pop()

    pick(0, target, [])
    out = []
    for edges in edge_sets:
        verts = set()
        for e in edges:
            verts.update(e)
        if len(verts) != n:
            continue
        if hypertree_component(labels[0], edges) != frozenset(verts):
            continue
        for root in labels:
            out.append(Hypertree(root, edges))
    return sorted(out, key=lambda e: e.sort_key())
