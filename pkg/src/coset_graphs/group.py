"""Finitely generated matrix-group enumeration and coset machinery.

Groups are enumerated by breadth-first closure over phase-canonical
Clifford elements; element indices are the BFS discovery order (generators
tried in listed order), which makes every downstream artifact reproducible
byte for byte.  Cayley edges record left multiplication by each generator,
matching the convention that applying a gate to a state left-multiplies
the operator that produced it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import clifford, ring
from .clifford import CliffordElement, GeneratorLabel, Matrix


class ClosureOverflowError(RuntimeError):
    """BFS closure exceeded the configured safety bound."""


@dataclass
class EnumeratedGroup:
    n: int
    generator_labels: tuple[str, ...]
    elements: list[CliffordElement]
    index: dict[Matrix, int]
    cayley_edges: list[tuple[int, ...]]  # [element][generator] -> target index
    parents: list[tuple[int, int]]  # (parent index, generator position); identity -> (-1, -1)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, e: CliffordElement) -> int:
        try:
            return self.index[e.matrix]
        except KeyError:
            raise KeyError("element is not a member of this group") from None

    def compose_idx(self, i: int, j: int) -> int:
        """Index of elements[i] . elements[j]."""
        return self.index_of(clifford.compose(self.elements[i], self.elements[j]))

    def inverse_idx(self, i: int) -> int:
        return self.index_of(clifford.inverse(self.elements[i]))

    def word(self, i: int) -> str:
        """A generator word for element i, read in circuit order."""
        tokens: list[str] = []
        while i != 0:
            parent, gen_pos = self.parents[i]
            tokens.append(self.generator_labels[gen_pos])
            i = parent
        return " ".join(tokens)  # left mult by gen == appending to circuit end

    def generating_subset(self, members: frozenset[int] | set[int]) -> list[int]:
        """Greedy small generating set for a subgroup given as an index set."""
        members = set(members)
        gens: list[int] = []
        closure = {self.index_of(clifford.identity(self.n))}
        for i in sorted(members):
            if i in closure:
                continue
            gens.append(i)
            frontier = list(closure)
            # close under existing generators and the new one
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = self.compose_idx(g, x)
                    if y not in closure:
                        closure.add(y)
                        frontier.append(y)
            if closure == members:
                break
        if closure != members:
            raise ValueError("member set is not closed: not a subgroup")
        return gens

    def is_subgroup(self, members: frozenset[int] | set[int]) -> bool:
        try:
            self.generating_subset(members)
            return True
        except ValueError:
            return False


@dataclass
class CosetPartition:
    group: EnumeratedGroup
    side: str  # "left" | "right" | "double"
    blocks: list[list[int]]
    block_of: list[int] = field(repr=False)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


def _generator_words(generators: str | tuple[str, ...] | list[str]) -> tuple[str, ...]:
    """A string is split into single-gate generators; list items are whole words."""
    if isinstance(generators, str):
        return tuple(str(clifford.parse_label(t)) for t in generators.split())
    return tuple(
        " ".join(str(lab) for lab in clifford.parse_word(w)) for w in generators
    )


def enumerate_group(
    generators: str | tuple[str, ...] | list[str],
    n: int,
    max_size: int = 200_000,
) -> EnumeratedGroup:
    """BFS closure of the generated group in the global-phase quotient.

    Each generator may be a multi-gate word; it then contributes a single
    Cayley edge label (e.g. ``"P1 P1"`` for the squared phase gate).
    """
    labels = _generator_words(generators)
    gen_elems = [clifford.element_of(lab, n) for lab in labels]
    ident = clifford.identity(n)
    elements: list[CliffordElement] = [ident]
    index: dict[Matrix, int] = {ident.matrix: 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    edges: list[list[int]] = []
    frontier = [0]
    while frontier:
        next_frontier: list[int] = []
        for i in frontier:
            current = elements[i]
            row = []
            for gpos, g in enumerate(gen_elems):
                produced = clifford.compose(g, current)
                j = index.get(produced.matrix)
                if j is None:
                    if len(elements) >= max_size:
                        raise ClosureOverflowError(
                            f"closure exceeded max_size={max_size}"
                        )
                    j = len(elements)
                    index[produced.matrix] = j
                    elements.append(produced)
                    parents.append((i, gpos))
                    next_frontier.append(j)
                row.append(j)
            edges.append(tuple(row))
        frontier = next_frontier
    # edges were appended in processing order == index order because BFS
    # commits indices sequentially; assert the invariant cheaply
    assert len(edges) == len(elements)
    return EnumeratedGroup(n, labels, elements, index, edges, parents)


@lru_cache(maxsize=8)
def _cached_group(labels: tuple[str, ...], n: int, max_size: int) -> EnumeratedGroup:
    return enumerate_group(labels, n, max_size)


def enumerate_group_cached(
    generators: str | tuple[str, ...] | list[str],
    n: int,
    max_size: int = 200_000,
) -> EnumeratedGroup:
    return _cached_group(_generator_words(generators), n, max_size)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def blocks(self) -> tuple[list[list[int]], list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        ordered = [groups[r] for r in sorted(groups, key=lambda r: min(groups[r]))]
        block_of = [0] * len(self.parent)
        for bid, block in enumerate(ordered):
            for x in block:
                block_of[x] = bid
        return ordered, block_of


def _right_translation_table(group: EnumeratedGroup, gens: list[int]) -> list[list[int]]:
    """For each subgroup generator k, the permutation x -> x.k of G."""
    tables = []
    for k in gens:
        kel = group.elements[k]
        tables.append(
            [group.index_of(clifford.compose(x, kel)) for x in group.elements]
        )
    return tables


def left_cosets(group: EnumeratedGroup, subgroup: set[int] | frozenset[int]) -> CosetPartition:
    """Partition of G into cosets g.K (equivalence under right K action)."""
    gens = group.generating_subset(subgroup)  # raises if not a subgroup
    uf = _UnionFind(len(group))
    for table in _right_translation_table(group, gens):
        for x, y in enumerate(table):
            uf.union(x, y)
    blocks, block_of = uf.blocks()
    return CosetPartition(group, "left", blocks, block_of)


def double_cosets(
    group: EnumeratedGroup,
    left_subgroup: set[int] | frozenset[int],
    right_subgroup: set[int] | frozenset[int],
) -> CosetPartition:
    """Partition of G into H.g.K blocks via union-find orbit merging."""
    hgens = group.generating_subset(left_subgroup)
    kgens = group.generating_subset(right_subgroup)
    uf = _UnionFind(len(group))
    for h in hgens:
        hel = group.elements[h]
        for x in range(len(group)):
            uf.union(x, group.index_of(clifford.compose(hel, group.elements[x])))
    for table in _right_translation_table(group, kgens):
        for x, y in enumerate(table):
            uf.union(x, y)
    blocks, block_of = uf.blocks()
    return CosetPartition(group, "double", blocks, block_of)


def clifford_order(n: int) -> int:
    """Order of the n-qubit Clifford group modulo global phase."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1 << (n * n + 2 * n)
    for j in range(1, n + 1):
        out *= 4**j - 1
    return out


def local_subgroup_order(n: int) -> int:
    """Order of the phase-quotiented local subgroup: 24^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 24**n


def diversity_bound(n: int) -> int:
    """Maximum number of entropy vectors reachable by any n-qubit Clifford circuit."""
    q, r = divmod(clifford_order(n), local_subgroup_order(n))
    assert r == 0
    return q


def stabilizer_state_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1 << n
    for k in range(n):
        out *= (1 << (n - k)) + 1
    return out


# --- group cache files -----------------------------------------------------


def save_group(group: EnumeratedGroup, path: str) -> None:
    doc = {
        "format": "coset-graphs/group",
        "version": 1,
        "n": group.n,
        "generators": list(group.generator_labels),
        "element_count": len(group),
        "elements": [
            [[list(entry) for entry in row] for row in e.matrix] for e in group.elements
        ],
        "parents": [list(p) for p in group.parents],
        "cayley_edges": [list(row) for row in group.cayley_edges],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_group(path: str) -> EnumeratedGroup:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format") != "coset-graphs/group":
        raise ValueError(f"{path} is not a group cache file")
    n = doc["n"]
    labels = tuple(doc["generators"])
    elements: list[CliffordElement] = []
    index: dict[Matrix, int] = {}
    for i, mat in enumerate(doc["elements"]):
        matrix = tuple(
            tuple(ring.normalize(*entry) for entry in row) for row in mat
        )
        e = CliffordElement(n, matrix)
        elements.append(e)
        index[matrix] = i
    parents = [tuple(p) for p in doc["parents"]]
    edges = [tuple(row) for row in doc["cayley_edges"]]
    if len(elements) != doc["element_count"]:
        raise ValueError("corrupt group cache: element count mismatch")
    return EnumeratedGroup(n, labels, elements, index, edges, parents)
