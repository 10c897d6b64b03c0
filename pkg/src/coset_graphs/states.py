"""Quantum states: dense statevectors, named families, and tableaux.

Amplitude index convention: basis index b has qubit 1 as its least
significant bit, so the coefficient list of a state reads exactly like a
bit-address (the i-th coefficient multiplies the ket whose binary digits,
rightmost digit first, give the qubit values).

State identity modulo global phase uses a canonical fingerprint: rotate
the largest-magnitude amplitude (lowest index among ties within 1e-9) to
the positive real axis, snap every component to a 1e-9 grid, and take the
resulting bytes.  Orbit walks confirm fingerprint hits with an inner
product to guard against grid accidents.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache

import numpy as np

from . import clifford
from .clifford import CliffordElement, GeneratorLabel, Matrix, parse_label, parse_word
from . import ring

PIVOT_TIE_TOL = 1e-9
GRID_DECIMALS = 9
NORM_TOL = 1e-10
OVERLAP_TOL = 1e-9


class PureState:
    """A normalized n-qubit statevector."""

    __slots__ = ("n", "amplitudes", "_fingerprint")

    def __init__(self, amplitudes, n: int | None = None, *, _skip_checks: bool = False):
        arr = np.asarray(amplitudes, dtype=np.complex128)
        if n is None:
            n = int(arr.size).bit_length() - 1
        if arr.size != (1 << n):
            raise ValueError(f"amplitude count {arr.size} is not 2^{n}")
        if not _skip_checks:
            norm = float(np.vdot(arr, arr).real)
            if abs(norm - 1.0) > NORM_TOL:
                raise ValueError(f"state is not normalized (|psi|^2 = {norm})")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.amplitudes = arr
        self._fingerprint: bytes | None = None

    @property
    def fingerprint(self) -> bytes:
        if self._fingerprint is None:
            self._fingerprint = fingerprint_of(self.amplitudes)
        return self._fingerprint

    def overlap(self, other: PureState) -> float:
        return abs(complex(np.vdot(self.amplitudes, other.amplitudes)))

    def same_ray(self, other: PureState, tol: float = OVERLAP_TOL) -> bool:
        return self.overlap(other) >= 1.0 - tol

    def __repr__(self) -> str:
        return f"<PureState n={self.n}>"


def canonical_vector(amplitudes: np.ndarray) -> np.ndarray:
    """Phase-fixed, grid-rounded copy of an amplitude vector."""
    mags = np.abs(amplitudes)
    pivot = int(np.flatnonzero(mags >= mags.max() - PIVOT_TIE_TOL)[0])
    phase = amplitudes[pivot] / mags[pivot]
    rounded = np.round(amplitudes * np.conj(phase), GRID_DECIMALS)
    return rounded + complex(0.0, 0.0)  # normalize signed zeros


def fingerprint_of(amplitudes: np.ndarray) -> bytes:
    return canonical_vector(amplitudes).tobytes()


def canonicalize(state: PureState) -> bytes:
    return state.fingerprint


# --- named families ---------------------------------------------------------


def basis_state(bitstring: str) -> PureState:
    """Computational basis ket; leftmost character is the highest qubit."""
    if not bitstring or set(bitstring) - {"0", "1"}:
        raise ValueError(f"invalid bitstring {bitstring!r}")
    n = len(bitstring)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[int(bitstring, 2)] = 1.0
    return PureState(amps, n, _skip_checks=True)


def ghz(n: int) -> PureState:
    if n < 2:
        raise ValueError("GHZ needs at least 2 qubits")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = math.sqrt(0.5)
    return PureState(amps, n, _skip_checks=True)


def dicke(n: int, k: int) -> PureState:
    """Equal-weight superposition of all weight-k basis kets."""
    if not 0 <= k <= n:
        raise ValueError(f"Hamming weight {k} out of range for {n} qubits")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amp = 1.0 / math.sqrt(math.comb(n, k))
    for b in range(1 << n):
        if b.bit_count() == k:
            amps[b] = amp
    return PureState(amps, n)


def w_state(n: int) -> PureState:
    return dicke(n, 1)


def from_bit_address(coefficients, normalization: float | None = None) -> PureState:
    """State from an ordered coefficient list over basis kets."""
    arr = np.asarray(coefficients, dtype=np.complex128)
    if arr.size == 0 or arr.size & (arr.size - 1):
        raise ValueError("coefficient count must be a power of 2")
    if normalization is not None:
        arr = arr / normalization
    norm = math.sqrt(float(np.vdot(arr, arr).real))
    if norm == 0.0:
        raise ValueError("zero vector cannot be normalized")
    return PureState(arr / norm)


# Appendix-style fixtures used across the verification suite.
_SIX_QUBIT_SIGNS = (
    "1 -1 1 1 -1 1 1 1 1 -1 1 1 1 -1 -1 -1 1 -1 -1 -1 -1 1 -1 -1 -1 1 1 1 -1 1 "
    "-1 -1 -1 1 1 1 1 -1 1 1 -1 1 1 1 -1 1 -1 -1 1 -1 1 1 -1 1 1 1 -1 1 -1 -1 "
    "-1 1 1 1"
)

_EIGHT_QUBIT_TOKENS = (
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 "
    "-i 0 -1 0 -i 0 0 0 0 0 0 0 0 i 0 -1 0 -i 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 "
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 -i 0 0 0 0 0 0 0 0 0 -1 0 -i 0 0 "
    "i 0 -1 0 0 0 0 0 0 0 0 0 -i 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 "
    "0 0 0 0 0 0 0 0 0 0 -i 0 -1 0 0 0 0 0 0 0 0 0 i 0 -1 -1 0 -i 0 0 0 0 0 0 0 0 0 "
    "1 0 -i 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 "
    "0 i 0 1 0 -i 0 1 0 0 0 0 0 0 0 0 0 0 1 0 i 0 -1 0 i 0 0 0 0"
)

_TOKEN_VALUES = {"0": 0, "1": 1, "-1": -1, "i": 1j, "-i": -1j}


@lru_cache(maxsize=None)
def fixture(name: str) -> PureState:
    """Reference states with known orbit structure."""
    if name == "six_qubit_g144":
        vals = [int(t) for t in _SIX_QUBIT_SIGNS.split()]
        return PureState(np.array(vals, dtype=np.complex128) / 8.0, 6)
    if name == "eight_qubit_g1152":
        vals = [_TOKEN_VALUES[t] for t in _EIGHT_QUBIT_TOKENS.split()]
        arr = np.array(vals, dtype=np.complex128) / math.sqrt(32.0)
        return PureState(arr, 8)
    if name == "w3":
        return dicke(3, 1)
    if name == "d42":
        return dicke(4, 2)
    raise ValueError(f"unknown fixture {name!r}")


# --- gate action ------------------------------------------------------------


@lru_cache(maxsize=65536)
def _complex_matrix(matrix: Matrix) -> np.ndarray:
    dim = len(matrix)
    out = np.empty((dim, dim), dtype=np.complex128)
    for r in range(dim):
        for c in range(dim):
            out[r, c] = ring.to_complex(matrix[r][c])
    out.flags.writeable = False
    return out


def apply(g: CliffordElement, state: PureState) -> PureState:
    """Apply g, embedded on the low qubits, to an n-qubit state."""
    if g.n > state.n:
        raise ValueError(f"operator on {g.n} qubits cannot act on {state.n}-qubit state")
    new_amps = apply_matrix(g.matrix, state.amplitudes)
    return PureState(new_amps, state.n, _skip_checks=True)


def apply_matrix(matrix: Matrix, amplitudes: np.ndarray) -> np.ndarray:
    u = _complex_matrix(matrix)
    dim = u.shape[0]
    if amplitudes.size == dim:
        return u @ amplitudes
    # low qubits vary fastest, so the gate acts on the last reshape axis
    return (amplitudes.reshape(-1, dim) @ u.T).reshape(-1)


def apply_word(word: str, state: PureState, gate_qubits: int | None = None) -> PureState:
    """Apply a circuit word (leftmost gate first) to a state."""
    labels = parse_word(word)
    m = gate_qubits
    if m is None:
        m = max((max(l.qubits) for l in labels), default=1)
    out = state
    for label in labels:
        out = apply(clifford.generator(label, m), out)
    return out


# --- state specs and files --------------------------------------------------


def parse_state_spec(spec: str) -> PureState:
    """Parse shorthand specs: dicke:4:2, ghz:3, basis:000, w:3, fixture:NAME.

    Anything else is treated as the path of a state JSON file.
    """
    head, _, rest = spec.partition(":")
    if head == "dicke":
        n, k = rest.split(":")
        return dicke(int(n), int(k))
    if head == "ghz":
        return ghz(int(rest))
    if head == "basis":
        return basis_state(rest)
    if head == "w":
        return w_state(int(rest))
    if head == "fixture":
        return fixture(rest)
    return load_state(spec)


def load_state(path: str) -> PureState:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    amps = np.array([complex(re, im) for re, im in doc["amplitudes"]])
    return PureState(amps, int(doc["n"]))


def save_state(state: PureState, path: str) -> None:
    doc = {
        "n": state.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


# --- stabilizer tableaux ----------------------------------------------------
#
# A tableau row (p, x, z) encodes the Pauli i^p * X^x * Z^z with x and z as
# qubit bitmasks (bit q-1 = qubit q).  Stabilizer generators are Hermitian,
# so p and popcount(x & z) always have the same parity.


class StabilizerTableau:
    """Stabilizer generators of an n-qubit stabilizer state."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[tuple[int, int, int], ...]):
        self.n = n
        self.rows = rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StabilizerTableau):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"<StabilizerTableau n={self.n} rows={self.rows}>"

    @classmethod
    def zero_state(cls, n: int) -> StabilizerTableau:
        return cls(n, tuple((0, 0, 1 << q) for q in range(n)))

    def key(self) -> tuple[tuple[int, int, int], ...]:
        return self.rows


def _pauli_mul(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    pa, xa, za = a
    pb, xb, zb = b
    # moving Z^za across X^xb costs (-1) per overlapping qubit
    phase = (pa + pb + 2 * (za & xb).bit_count()) & 3
    return (phase, xa ^ xb, za ^ zb)


def tableau_apply(label: GeneratorLabel | str, t: StabilizerTableau) -> StabilizerTableau:
    if isinstance(label, str):
        label = parse_label(label)
    rows = []
    if label.kind == "H":
        bit = 1 << (label.qubits[0] - 1)
        for p, x, z in t.rows:
            xb, zb = x & bit, z & bit
            if xb and zb:
                p = (p + 2) & 3
            rows.append((p, (x & ~bit) | (bit if zb else 0), (z & ~bit) | (bit if xb else 0)))
    elif label.kind == "P":
        bit = 1 << (label.qubits[0] - 1)
        for p, x, z in t.rows:
            if x & bit:
                rows.append(((p + 1) & 3, x, z ^ bit))
            else:
                rows.append((p, x, z))
    else:  # CNOT
        cbit = 1 << (label.qubits[0] - 1)
        tbit = 1 << (label.qubits[1] - 1)
        for p, x, z in t.rows:
            if x & cbit:
                x ^= tbit
            if z & tbit:
                z ^= cbit
            rows.append((p, x, z))
    return StabilizerTableau(t.n, tuple(rows))


def tableau_apply_word(word: str, t: StabilizerTableau) -> StabilizerTableau:
    for label in parse_word(word):
        t = tableau_apply(label, t)
    return t


def tableau_from_circuit(word: str, n: int) -> StabilizerTableau:
    """Tableau of the given circuit applied to the all-zeros state."""
    return tableau_apply_word(word, StabilizerTableau.zero_state(n))


def tableau_canonical(t: StabilizerTableau) -> StabilizerTableau:
    """Row-reduced echelon canonical form; unique per stabilizer group."""
    n = t.n
    rows = list(t.rows)
    done = 0
    # column order: x_1..x_n then z_1..z_n
    for col in range(2 * n):
        bit = 1 << col if col < n else 1 << (col - n)
        part = 1 if col < n else 2  # which component carries the bit
        pivot = None
        for i in range(done, len(rows)):
            if rows[i][part] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        rows[done], rows[pivot] = rows[pivot], rows[done]
        for i in range(len(rows)):
            if i != done and rows[i][part] & bit:
                rows[i] = _pauli_mul(rows[i], rows[done])
        done += 1
    return StabilizerTableau(n, tuple(rows))


def tableau_statevector(t: StabilizerTableau) -> PureState:
    """Dense state stabilized by the tableau (projector method, n <= 6ish)."""
    n = t.n
    dim = 1 << n
    proj = np.eye(dim, dtype=np.complex128)
    for p, x, z in t.rows:
        op = np.zeros((dim, dim), dtype=np.complex128)
        phase = 1j**p
        for c in range(dim):
            sign = -1.0 if (c & z).bit_count() & 1 else 1.0
            op[c ^ x, c] = phase * sign
        proj = proj @ (np.eye(dim) + op) / 2.0
    # any nonzero column of the projector is the state
    norms = np.linalg.norm(proj, axis=0)
    col = int(np.argmax(norms))
    vec = proj[:, col] / norms[col]
    return PureState(vec, n, _skip_checks=True)
