"""Exact Clifford operators modulo global phase.

Matrices are dense tuples-of-tuples of ring 5-tuples, kept in a canonical
form under the order-8 global phase subgroup generated by zeta*identity, so
two operators are equal in the phase quotient iff their matrices compare
equal.  Basis convention: amplitude index b has qubit 1 as its least
significant bit, and C(i,j) means control i, target j.

Generator words are whitespace-separated tokens like ``H1 P2 C12 C21``,
read left to right in circuit order: the leftmost gate acts first, so the
word maps to the reversed matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import ring
from .ring import CTuple

Matrix = tuple[tuple[CTuple, ...], ...]

_NEG_ONE: CTuple = (-1, 0, 0, 0, 0)
_I_UNIT: CTuple = (0, 0, 1, 0, 0)
_INV_SQRT2: CTuple = (0, 1, 0, -1, 1)
_NEG_INV_SQRT2: CTuple = (0, -1, 0, 1, 1)


@dataclass(frozen=True)
class GeneratorLabel:
    """One of the standard generators: Hadamard, phase, or CNOT."""

    kind: str  # "H", "P", or "C"
    qubits: tuple[int, ...]  # (q,) for local gates, (control, target) for CNOT

    def __post_init__(self) -> None:
        if self.kind not in ("H", "P", "C"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "C":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError("CNOT needs distinct control and target qubits")
        elif len(self.qubits) != 1:
            raise ValueError("local gates act on exactly one qubit")
        if any(q < 1 for q in self.qubits):
            raise ValueError("qubit indices are 1-based")

    def __str__(self) -> str:
        return self.kind + "".join(str(q) for q in self.qubits)


def parse_label(token: str) -> GeneratorLabel:
    """Parse a token like ``H1``, ``P2``, ``C12`` or ``C1,2``."""
    token = token.strip()
    if not token:
        raise ValueError("empty generator token")
    kind = token[0].upper()
    rest = token[1:]
    if kind in ("H", "P"):
        return GeneratorLabel(kind, (int(rest),))
    if kind == "C":
        if "," in rest:
            c, t = rest.split(",")
            return GeneratorLabel("C", (int(c), int(t)))
        if len(rest) == 2:
            return GeneratorLabel("C", (int(rest[0]), int(rest[1])))
        raise ValueError(f"ambiguous CNOT token {token!r}; use C<i>,<j>")
    raise ValueError(f"unknown generator token {token!r}")


def parse_word(word: str | tuple[str, ...] | list[str]) -> tuple[GeneratorLabel, ...]:
    if isinstance(word, str):
        tokens = word.split()
    else:
        tokens = list(word)
    return tuple(parse_label(t) for t in tokens)


class CliffordElement:
    """A phase-canonical exact unitary on n qubits."""

    __slots__ = ("n", "matrix", "word")

    def __init__(self, n: int, matrix: Matrix, word: tuple[str, ...] | None = None):
        self.n = n
        self.matrix = matrix
        self.word = word

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        w = " ".join(self.word) if self.word is not None else "?"
        return f"<CliffordElement n={self.n} word={w!r}>"

    def is_identity(self) -> bool:
        return self.matrix == _canonical_identity(self.n)

    def to_complex_matrix(self):
        import numpy as np

        dim = 1 << self.n
        out = np.empty((dim, dim), dtype=np.complex128)
        for r in range(dim):
            row = self.matrix[r]
            for c in range(dim):
                out[r, c] = ring.to_complex(row[c])
        return out

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        return compose(self, other)


def canonical_matrix(matrix: Matrix) -> Matrix:
    """Rescale by the phase power that minimizes the first nonzero entry key."""
    pivot: CTuple | None = None
    for row in matrix:
        for entry in row:
            if entry[0] or entry[1] or entry[2] or entry[3]:
                pivot = entry
                break
        if pivot is not None:
            break
    if pivot is None:
        raise ValueError("zero matrix cannot be canonicalized")
    best_m = 0
    best_key = ring.sort_key(pivot)
    for m in range(1, 8):
        key = ring.sort_key(ring.mul(pivot, ring.zeta_pow(m)))
        if key < best_key:
            best_key = key
            best_m = m
    if best_m == 0:
        return matrix
    z = ring.zeta_pow(best_m)
    rmul = ring.mul
    return tuple(tuple(rmul(e, z) for e in row) for row in matrix)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    dim = len(a)
    radd = ring.add
    rmul = ring.mul
    bt = tuple(zip(*b))  # columns of b
    rows = []
    for arow in a:
        row = []
        for bcol in bt:
            acc = ring.ZERO
            for x, y in zip(arow, bcol):
                if (x[0] or x[1] or x[2] or x[3]) and (y[0] or y[1] or y[2] or y[3]):
                    acc = radd(acc, rmul(x, y))
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_conj_transpose(a: Matrix) -> Matrix:
    rconj = ring.conj
    return tuple(tuple(rconj(a[c][r]) for c in range(len(a))) for r in range(len(a)))


@lru_cache(maxsize=None)
def _identity_matrix(n: int) -> Matrix:
    dim = 1 << n
    return tuple(
        tuple(ring.ONE if r == c else ring.ZERO for c in range(dim)) for r in range(dim)
    )


@lru_cache(maxsize=None)
def _canonical_identity(n: int) -> Matrix:
    return canonical_matrix(_identity_matrix(n))


def identity(n: int) -> CliffordElement:
    return CliffordElement(n, _canonical_identity(n), word=())


@lru_cache(maxsize=None)
def _generator_matrix(kind: str, qubits: tuple[int, ...], n: int) -> Matrix:
    dim = 1 << n
    if kind == "H":
        q = qubits[0]
        bit = 1 << (q - 1)
        rows = []
        for r in range(dim):
            row = [ring.ZERO] * dim
            # column c contributes H[r_q][c_q] on the matching complementary bits
            row[r & ~bit] = _INV_SQRT2
            row[r | bit] = _NEG_INV_SQRT2 if (r & bit) else _INV_SQRT2
            rows.append(tuple(row))
        return tuple(rows)
    if kind == "P":
        q = qubits[0]
        bit = 1 << (q - 1)
        return tuple(
            tuple(
                (_I_UNIT if (r & bit) else ring.ONE) if r == c else ring.ZERO
                for c in range(dim)
            )
            for r in range(dim)
        )
    if kind == "C":
        ctrl, targ = qubits
        cbit = 1 << (ctrl - 1)
        tbit = 1 << (targ - 1)
        rows = []
        for r in range(dim):
            src = r ^ tbit if (r & cbit) else r
            rows.append(tuple(ring.ONE if c == src else ring.ZERO for c in range(dim)))
        return tuple(rows)
    raise ValueError(f"unknown generator kind {kind!r}")


def generator(label: GeneratorLabel | str, n: int) -> CliffordElement:
    """Exact 2^n x 2^n matrix for one generator, identity on untouched qubits."""
    if isinstance(label, str):
        label = parse_label(label)
    if max(label.qubits) > n:
        raise ValueError(f"generator {label} does not fit on {n} qubits")
    mat = _generator_matrix(label.kind, label.qubits, n)
    return CliffordElement(n, canonical_matrix(mat), word=(str(label),))


def compose(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Matrix product a.b (b acts first); words concatenate in circuit order."""
    if a.n != b.n:
        raise ValueError("cannot compose operators on different qubit counts")
    word = None
    if a.word is not None and b.word is not None:
        word = b.word + a.word
    return CliffordElement(a.n, canonical_matrix(_mat_mul(a.matrix, b.matrix)), word)


def inverse(a: CliffordElement) -> CliffordElement:
    word = None
    if a.word is not None:
        inv_tokens: list[str] = []
        for token in reversed(a.word):
            if token.startswith("P"):
                inv_tokens.extend([token, token, token])  # P^-1 = P^3 mod phase
            else:
                inv_tokens.append(token)  # H and CNOT are involutions
        word = tuple(inv_tokens)
    return CliffordElement(a.n, canonical_matrix(_mat_conj_transpose(a.matrix)), word)


def element_of(word: str | tuple[str, ...] | list[str], n: int) -> CliffordElement:
    """Compose a generator word, leftmost gate applied first."""
    labels = parse_word(word)
    mat = _identity_matrix(n)
    for label in labels:
        mat = _mat_mul(_generator_matrix(label.kind, label.qubits, n), mat)
    return CliffordElement(n, canonical_matrix(mat), word=tuple(str(l) for l in labels))


def raw_product(word: str | tuple[str, ...] | list[str], n: int) -> Matrix:
    """Exact matrix of a word without the phase quotient (for relation checks)."""
    mat = _identity_matrix(n)
    for label in parse_word(word):
        mat = _mat_mul(_generator_matrix(label.kind, label.qubits, n), mat)
    return mat


def global_phase_of(matrix: Matrix, n: int) -> int | None:
    """Return m if matrix == zeta^m * identity, else None."""
    dim = 1 << n
    for m in range(8):
        z = ring.zeta_pow(m)
        if all(
            matrix[r][c] == (z if r == c else ring.ZERO)
            for r in range(dim)
            for c in range(dim)
        ):
            return m
    return None


def verify_relation(lhs: str, rhs: str, n: int) -> bool:
    """True iff both words give the same element of the phase quotient."""
    return element_of(lhs, n) == element_of(rhs, n)


def is_unitary(a: CliffordElement) -> bool:
    return _mat_mul(a.matrix, _mat_conj_transpose(a.matrix)) == _identity_matrix(a.n)
