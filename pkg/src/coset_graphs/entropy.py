"""Entropy vectors, subsystem entropies, and mutual-information checks.

An n-qubit pure state has 2^(n-1)-1 independent subsystem entropies after
the complement rule S_I = S_Ibar.  Components are ordered by (subsystem
size, lexicographic qubit set); for even n the half-size subsystems are
deduplicated by keeping the sets that contain qubit 1.  Qubits map to the
letters A, B, C, ... with the last qubit written O (the purifier).

Two paths compute the same quantities: a dense eigenvalue path for
arbitrary statevectors and an exact GF(2)-rank path for stabilizer
tableaux.  Vector identity uses a 1e-9 quantization grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .states import PureState, StabilizerTableau

QUANT_DECIMALS = 9
SATURATION_TOL = 1e-8
_LOG2 = math.log(2.0)


@lru_cache(maxsize=None)
def subsystems(n: int) -> tuple[tuple[int, ...], ...]:
    """Ordered independent subsystems (1-based qubit tuples)."""
    if n < 2:
        raise ValueError("entropy vectors need at least 2 qubits")
    out: list[tuple[int, ...]] = []
    for size in range(1, n // 2 + 1):
        for subset in combinations(range(1, n + 1), size):
            if 2 * size == n and subset[0] != 1:
                continue  # complement already listed
            out.append(subset)
    assert len(out) == (1 << (n - 1)) - 1
    return tuple(out)


def subsystem_label(subset: tuple[int, ...], n: int) -> str:
    """Letter name of a subsystem; qubit n is the purifier O."""
    letters = [chr(ord("A") + q - 1) for q in range(1, n)] + ["O"]
    return "".join(letters[q - 1] for q in subset)


@dataclass(frozen=True)
class EntropyVector:
    """Quantized entropy vector; equality and hashing use the 1e-9 grid."""

    n: int
    components: tuple[float, ...]

    def __post_init__(self) -> None:
        expected = (1 << (self.n - 1)) - 1
        if len(self.components) != expected:
            raise ValueError(
                f"expected {expected} components for n={self.n}, got {len(self.components)}"
            )

    @property
    def key(self) -> tuple[float, ...]:
        return tuple(round(c, QUANT_DECIMALS) + 0.0 for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntropyVector):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.n, self.key))

    def entropy_of(self, subset: tuple[int, ...] | frozenset[int]) -> float:
        """S_I for any subset, resolving complements via purity."""
        qubits = tuple(sorted(subset))
        if not qubits:
            return 0.0
        if len(qubits) == self.n:
            return 0.0
        table = _subsystem_index(self.n)
        idx = table.get(qubits)
        if idx is None:
            comp = tuple(q for q in range(1, self.n + 1) if q not in set(qubits))
            idx = table[comp]
        return self.components[idx]

    def labels(self) -> tuple[str, ...]:
        return tuple(subsystem_label(s, self.n) for s in subsystems(self.n))

    def format_components(self) -> tuple[str, ...]:
        return tuple(_fmt(c) for c in self.key)

    def __str__(self) -> str:
        return "(" + ", ".join(self.format_components()) + ")"


def _fmt(value: float) -> str:
    text = f"{value:.9f}".rstrip("0").rstrip(".")
    return text if text else "0"


@lru_cache(maxsize=None)
def _subsystem_index(n: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(subsystems(n))}


# --- dense path --------------------------------------------------------------


def _entropy_from_eigs(eigs: np.ndarray) -> float:
    eigs = np.clip(eigs.real, 0.0, 1.0)
    nz = eigs[eigs > 1e-15]
    return max(float(-(nz * np.log(nz)).sum() / _LOG2), 0.0)


def _split_axes(n: int, subset: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # amplitude axis n-q corresponds to qubit q after reshape([2]*n)
    keep = [n - q for q in subset]
    rest = [ax for ax in range(n) if ax not in keep]
    return keep, rest


def subsystem_entropy(state: PureState, subset) -> float:
    """Von Neumann entropy (bits) of the reduced state on the given qubits."""
    qubits = tuple(sorted(set(subset)))
    n = state.n
    if not qubits or len(qubits) >= n:
        raise ValueError("subset must be a nonempty proper subset of the qubits")
    if any(q < 1 or q > n for q in qubits):
        raise ValueError(f"qubit indices out of range for n={n}")
    keep, rest = _split_axes(n, qubits)
    psi = state.amplitudes.reshape([2] * n).transpose(keep + rest)
    a = psi.reshape(1 << len(qubits), -1)
    if a.shape[0] <= a.shape[1]:
        rho = a @ a.conj().T
    else:
        rho = a.conj().T @ a  # same nonzero spectrum
    return _entropy_from_eigs(np.linalg.eigvalsh(rho))


def entropy_vector(state: PureState) -> EntropyVector:
    comps = tuple(subsystem_entropy(state, s) for s in subsystems(state.n))
    return EntropyVector(state.n, comps)


def entropy_components_batch(
    amplitudes: np.ndarray, n: int, columns: list[int] | None = None
) -> np.ndarray:
    """Entropy components for a stack of states.

    Returns shape (N, len(columns)); columns defaults to every subsystem.
    """
    count = amplitudes.shape[0]
    subs = subsystems(n)
    if columns is None:
        columns = list(range(len(subs)))
    out = np.empty((count, len(columns)), dtype=np.float64)
    tensor = amplitudes.reshape([count] + [2] * n)
    for pos, col in enumerate(columns):
        subset = subs[col]
        keep, rest = _split_axes(n, subset)
        a = tensor.transpose([0] + [ax + 1 for ax in keep] + [ax + 1 for ax in rest])
        a = np.ascontiguousarray(a.reshape(count, 1 << len(subset), -1))
        rho = a @ a.conj().transpose(0, 2, 1)
        eigs = np.clip(np.linalg.eigvalsh(rho).real, 0.0, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(eigs > 1e-15, eigs * np.log(eigs), 0.0)
        out[:, pos] = np.maximum(-terms.sum(axis=1) / _LOG2, 0.0)
    return out


def purity_check(state: PureState, tol: float = SATURATION_TOL) -> bool:
    """S_I == S_Ibar for every proper subset, within tol."""
    n = state.n
    for size in range(1, n // 2 + 1):
        for subset in combinations(range(1, n + 1), size):
            comp = tuple(q for q in range(1, n + 1) if q not in subset)
            if abs(subsystem_entropy(state, subset) - subsystem_entropy(state, comp)) > tol:
                return False
    return True


# --- stabilizer (rank) path ---------------------------------------------------


def _rank_of(rows: list[int]) -> int:
    pivots: list[int] = []
    for row in rows:
        cur = row
        for p in pivots:
            cur = min(cur, cur ^ p)
        if cur:
            pivots.append(cur)
            pivots.sort(reverse=True)
    return len(pivots)


def stabilizer_subsystem_entropy(t: StabilizerTableau, subset) -> int:
    """Exact integer entropy from the generator matrix restricted to subset."""
    qubits = tuple(sorted(set(subset)))
    masks = [1 << (q - 1) for q in qubits]
    rows = []
    for _, x, z in t.rows:
        packed = 0
        for j, m in enumerate(masks):
            if x & m:
                packed |= 1 << (2 * j)
            if z & m:
                packed |= 1 << (2 * j + 1)
        rows.append(packed)
    return _rank_of(rows) - len(qubits)


def stabilizer_entropy_vector(t: StabilizerTableau) -> EntropyVector:
    comps = tuple(
        float(stabilizer_subsystem_entropy(t, s)) for s in subsystems(t.n)
    )
    return EntropyVector(t.n, comps)


# --- monogamy of mutual information ------------------------------------------


@dataclass(frozen=True)
class MmiResult:
    triple: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    slack: float
    status: str  # "satisfied" | "saturated" | "violated"


def _triple_sets(triple) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    a, b, c = (tuple(sorted(set(part))) for part in triple)
    if not (a and b and c):
        raise ValueError("all three subsystems must be nonempty")
    if set(a) & set(b) or set(a) & set(c) or set(b) & set(c):
        raise ValueError("subsystems must be pairwise disjoint")
    return a, b, c


def mmi_check(obj: PureState | EntropyVector, triple, tol: float = SATURATION_TOL) -> MmiResult:
    """Classify S_AB + S_AC + S_BC >= S_A + S_B + S_C + S_ABC for one triple."""
    a, b, c = _triple_sets(triple)

    if isinstance(obj, EntropyVector):
        n = obj.n

        def s(qubits: tuple[int, ...]) -> float:
            return obj.entropy_of(qubits)

    else:
        n = obj.n

        def s(qubits: tuple[int, ...]) -> float:
            if len(qubits) == n:
                return 0.0
            return subsystem_entropy(obj, qubits)

    if max(a + b + c) > n:
        raise ValueError("triple uses qubits outside the state")
    ab = tuple(sorted(a + b))
    ac = tuple(sorted(a + c))
    bc = tuple(sorted(b + c))
    abc = tuple(sorted(a + b + c))
    slack = s(ab) + s(ac) + s(bc) - s(a) - s(b) - s(c) - s(abc)
    if slack > tol:
        status = "satisfied"
    elif slack < -tol:
        status = "violated"
    else:
        status = "saturated"
    return MmiResult((a, b, c), slack, status)


def disjoint_triples(n: int):
    """All unordered triples of disjoint nonempty qubit subsets."""
    for assignment in product(range(4), repeat=n):
        parts: tuple[list[int], list[int], list[int]] = ([], [], [])
        for q, part in enumerate(assignment, start=1):
            if part:
                parts[part - 1].append(q)
        if not all(parts):
            continue
        if not (parts[0][0] < parts[1][0] < parts[2][0]):
            continue  # unordered: keep one representative
        yield tuple(tuple(p) for p in parts)


@dataclass
class MmiReport:
    n: int
    results: list[MmiResult]

    @property
    def violated(self) -> list[MmiResult]:
        return [r for r in self.results if r.status == "violated"]

    @property
    def saturated(self) -> list[MmiResult]:
        return [r for r in self.results if r.status == "saturated"]

    @property
    def satisfied(self) -> list[MmiResult]:
        return [r for r in self.results if r.status == "satisfied"]

    @property
    def consistent(self) -> bool:
        """True when no triple violates the inequality."""
        return not self.violated

    def summary(self) -> str:
        return (
            f"triples={len(self.results)} satisfied={len(self.satisfied)} "
            f"saturated={len(self.saturated)} violated={len(self.violated)} "
            f"mmi_consistent={self.consistent}"
        )


def mmi_scan(obj: PureState | EntropyVector, tol: float = SATURATION_TOL) -> MmiReport:
    """Classify every unordered disjoint triple of the system."""
    if isinstance(obj, PureState) and obj.n >= 3:
        obj = entropy_vector(obj)  # one pass of partial traces, then lookups
    n = obj.n
    results = [mmi_check(obj, triple, tol) for triple in disjoint_triples(n)]
    return MmiReport(n, results)


# --- reporting ----------------------------------------------------------------

# Named entanglement entropy constants appearing in the reference tables.
WSTATE_ENTROPIES = {
    "s0": 1.0,
    "s1": (2 / 3) * math.log2(3 / 2) + (1 / 3) * math.log2(3.0),
    "s2": (5 / 6) * math.log2(6 / 5) + (1 / 6) * math.log2(6.0),
    "s3": (3 - math.sqrt(5)) / 6 * math.log2(6 / (3 - math.sqrt(5)))
    + (3 + math.sqrt(5)) / 6 * math.log2(6 / (3 + math.sqrt(5))),
}

DICKE42_ENTROPIES = {
    "s0": (5 / 6) * math.log2(12 / 5) + (1 / 6) * math.log2(12.0),
    "s1": (3 - math.sqrt(5)) / 6 * math.log2(12 / (3 - math.sqrt(5)))
    + (3 + math.sqrt(5)) / 6 * math.log2(12 / (3 + math.sqrt(5))),
    "s2": (2 / 3) * math.log2(3 / 2) + (1 / 3) * math.log2(6.0),
    "s3": (3 - 2 * math.sqrt(2)) / 6 * math.log2(12 / (3 - 2 * math.sqrt(2)))
    + (3 + 2 * math.sqrt(2)) / 6 * math.log2(12 / (3 + 2 * math.sqrt(2))),
    "s4": 1.0,
    "s5": (2 / 3) * math.log2(3 / 2) + (1 / 3) * math.log2(3.0),
    "s6": (5 / 6) * math.log2(6 / 5) + (1 / 6) * math.log2(6.0),
}


def annotate_component(value: float, names: dict[str, float], tol: float = 1e-9) -> str:
    for name, ref in names.items():
        if abs(value - ref) <= tol:
            return name
    return _fmt(value)


def entropy_table_csv(
    vectors_with_counts: list[tuple[EntropyVector, int]],
    symbol_table: dict[str, float] | None = None,
) -> str:
    """One row per distinct quantized vector, with multiplicity."""
    if not vectors_with_counts:
        return "multiplicity\n"
    n = vectors_with_counts[0][0].n
    header = ["multiplicity"] + [subsystem_label(s, n) for s in subsystems(n)]
    lines = [",".join(header)]
    for vec, count in vectors_with_counts:
        if symbol_table:
            cells = [annotate_component(c, symbol_table) for c in vec.key]
        else:
            cells = list(vec.format_components())
        lines.append(",".join([str(count)] + cells))
    return "\n".join(lines) + "\n"
