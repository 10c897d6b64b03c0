"""Stabilizer-state census: orbit sizes and entropic diversities.

The census enumerates every n-qubit stabilizer state as a canonical
tableau, partitions the set into orbits of the two-qubit Clifford group
acting on qubits 1 and 2, and classifies each orbit.  Orbits come in three
complex types: 60 states (a 24-vertex and a 36-vertex subgraph), 720
states (three 144s and one 288), and 11520 states (ten 1152s).  The first
two types are tallied per complex with the complex diversity; the 11520
type is tallied per 1152-state subgraph with the subgraph's own diversity,
which is how the reference distribution table is laid out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import entropy, group as group_mod
from .clifford import parse_label
from .states import StabilizerTableau, tableau_apply, tableau_canonical


class CensusOverflowError(RuntimeError):
    """State enumeration exceeded the configured cap."""


def clifford_generator_labels(n: int) -> list[str]:
    """Hadamard and phase on every qubit, CNOTs between adjacent pairs."""
    labels = [f"H{q}" for q in range(1, n + 1)] + [f"P{q}" for q in range(1, n + 1)]
    for q in range(1, n):
        labels.append(f"C{q},{q + 1}")
        labels.append(f"C{q + 1},{q}")
    return labels


TWO_QUBIT_LABELS = ("H1", "H2", "C12", "C21", "P1", "P2")
_HC_COUNT = 4  # first four labels generate the CNOT+Hadamard subgroup


def _pack(t: StabilizerTableau) -> int:
    key = 0
    n = t.n
    width = 2 * n + 2
    for p, x, z in t.rows:
        key = (key << width) | (p << (2 * n)) | (x << n) | z
    return key


def _unpack(key: int, n: int) -> StabilizerTableau:
    width = 2 * n + 2
    mask = (1 << width) - 1
    nmask = (1 << n) - 1
    rows = []
    for _ in range(n):
        chunk = key & mask
        rows.append(((chunk >> (2 * n)) & 3, (chunk >> n) & nmask, chunk & nmask))
        key >>= width
    return StabilizerTableau(n, tuple(reversed(rows)))


def enumerate_stabilizer_states(
    n: int, cap: int | None = None
) -> tuple[list[int], dict[int, int]]:
    """All canonical stabilizer tableaux reachable from the all-zeros state."""
    parsed = [parse_label(lbl) for lbl in clifford_generator_labels(n)]
    start = tableau_canonical(StabilizerTableau.zero_state(n))
    keys = [_pack(start)]
    index = {keys[0]: 0}
    frontier = [start]
    limit = cap if cap is not None else group_mod.stabilizer_state_count(n)
    while frontier:
        next_frontier = []
        for t in frontier:
            for lbl in parsed:
                child = tableau_canonical(tableau_apply(lbl, t))
                key = _pack(child)
                if key not in index:
                    if len(keys) >= limit and cap is not None:
                        raise CensusOverflowError(f"state count exceeded cap={cap}")
                    index[key] = len(keys)
                    keys.append(key)
                    next_frontier.append(child)
        frontier = next_frontier
    return keys, index


@dataclass
class CensusRecord:
    n: int
    representative: str
    orbit_size: int
    subgraph_sizes: tuple[int, ...]
    diversity: int
    subgraph_diversities: tuple[int, ...]


@dataclass
class CensusResult:
    n: int
    total_states: int
    records: list[CensusRecord]
    # cells[column][diversity] = count, columns: g24_g36 | g144_g288 | g1152
    cells: dict[str, dict[int, int]] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    def cell_text(self, column: str) -> str:
        counts = self.cells.get(column, {})
        if not counts:
            return "0"
        return ", ".join(f"{counts[d]} ({d})" for d in sorted(counts))

    def table_row(self) -> tuple[str, str, str]:
        return (
            self.cell_text("g24_g36"),
            self.cell_text("g144_g288"),
            self.cell_text("g1152"),
        )


def _pauli_text(row: tuple[int, int, int], n: int) -> str:
    p, x, z = row
    sign = {0: "+", 1: "+i", 2: "-", 3: "-i"}[p]
    chars = []
    for q in range(n - 1, -1, -1):
        xq, zq = (x >> q) & 1, (z >> q) & 1
        chars.append("IXZY"[xq + 2 * zq])
    return sign + "".join(chars)


class _Merger:
    """Union-find keyed by dense state indices."""

    def __init__(self, size: int):
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


def census(n: int, cap: int | None = None) -> CensusResult:
    """Classify every n-qubit stabilizer state by its 2-qubit Clifford orbit."""
    if n < 2:
        raise ValueError("census needs n >= 2")
    t_start = time.perf_counter()
    keys, index = enumerate_stabilizer_states(n, cap)
    count = len(keys)
    expected = group_mod.stabilizer_state_count(n)
    if count != expected:
        raise RuntimeError(
            f"stabilizer census found {count} states, expected {expected}"
        )

    # children under the six 2-qubit generators, reused by both partitions
    two_qubit = [parse_label(lbl) for lbl in TWO_QUBIT_LABELS]
    children = [[0] * count for _ in two_qubit]
    for i in range(count):
        t = _unpack(keys[i], n)
        for gpos, lbl in enumerate(two_qubit):
            children[gpos][i] = index[_pack(tableau_canonical(tableau_apply(lbl, t)))]

    hc_merge = _Merger(count)
    for gpos in range(_HC_COUNT):
        col = children[gpos]
        for i in range(count):
            hc_merge.union(i, col[i])
    hc_root = [hc_merge.find(i) for i in range(count)]

    full_merge = _Merger(count)
    full_merge.parent = list(hc_merge.parent)
    for gpos in range(_HC_COUNT, len(TWO_QUBIT_LABELS)):
        col = children[gpos]
        for i in range(count):
            full_merge.union(i, col[i])

    orbits: dict[int, list[int]] = {}
    for i in range(count):
        orbits.setdefault(full_merge.find(i), []).append(i)

    # entropy class id per state
    vec_ids: dict[tuple[float, ...], int] = {}
    state_vec = [0] * count
    for i in range(count):
        vec = entropy.stabilizer_entropy_vector(_unpack(keys[i], n))
        vid = vec_ids.setdefault(vec.key, len(vec_ids))
        state_vec[i] = vid

    records: list[CensusRecord] = []
    cells: dict[str, dict[int, int]] = {"g24_g36": {}, "g144_g288": {}, "g1152": {}}
    for root in sorted(orbits, key=lambda r: min(orbits[r])):
        members = orbits[root]
        size = len(members)
        subgraphs: dict[int, list[int]] = {}
        for i in members:
            subgraphs.setdefault(hc_root[i], []).append(i)
        sub_sizes = tuple(sorted(len(s) for s in subgraphs.values()))
        diversity = len({state_vec[i] for i in members})
        sub_divs = tuple(
            len({state_vec[i] for i in sub})
            for _, sub in sorted(subgraphs.items(), key=lambda kv: min(kv[1]))
        )
        rep_tab = _unpack(keys[min(members)], n)
        rep = ",".join(_pauli_text(row, n) for row in rep_tab.rows)
        records.append(
            CensusRecord(n, rep, size, sub_sizes, diversity, sub_divs)
        )
        if size == 60:
            cells["g24_g36"][diversity] = cells["g24_g36"].get(diversity, 0) + 1
        elif size == 720:
            cells["g144_g288"][diversity] = cells["g144_g288"].get(diversity, 0) + 1
        elif size == 11520:
            for d in sub_divs:
                cells["g1152"][d] = cells["g1152"].get(d, 0) + 1
        else:
            cells.setdefault("other", {})[diversity] = (
                cells.setdefault("other", {}).get(diversity, 0) + 1
            )

    return CensusResult(
        n=n,
        total_states=count,
        records=records,
        cells=cells,
        elapsed_seconds=time.perf_counter() - t_start,
    )


def census_records_csv(result: CensusResult) -> str:
    lines = ["n,orbit_size,diversity,subgraph_sizes,subgraph_diversities,representative"]
    for rec in result.records:
        sizes = ";".join(str(s) for s in rec.subgraph_sizes)
        divs = ";".join(str(d) for d in rec.subgraph_diversities)
        lines.append(
            f"{rec.n},{rec.orbit_size},{rec.diversity},{sizes},{divs},{rec.representative}"
        )
    return "\n".join(lines) + "\n"


def census_table_csv(results: list[CensusResult]) -> str:
    lines = ["n,g24_g36,g144_g288,g1152"]
    for res in results:
        row = res.table_row()
        lines.append(f'{res.n},"{row[0]}","{row[1]}","{row[2]}"')
    return "\n".join(lines) + "\n"
