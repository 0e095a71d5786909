"""n-qubit Pauli operators in symplectic bit form.

Conventions used throughout the package:

* A Pauli is a pair of n-bit masks ``(x_bits, z_bits)``; qubit ``j`` occupies
  bit position ``n - 1 - j``, so qubit 0 is the most significant bit.  Qubit
  ``j`` carries I/X/Z/Y according to ``(x_j, z_j)`` = (0,0)/(1,0)/(0,1)/(1,1),
  with Y = iXZ.
* String labels read qubit 0 leftmost, e.g. ``"XIY"`` has X on qubit 0.
* The canonical total order on the 4^n Paulis is lexicographic on
  ``(x_bits, z_bits)``; ``lex_index = x_bits * 2^n + z_bits`` realises it.
* No global phases are tracked: every quantity consumed downstream (traces
  of products, commutation signs, weights) is phase-insensitive.

Applied to a computational-basis state ``|b>`` a Pauli acts as

    sigma |b> = i^{popcount(x & z)} (-1)^{popcount(b & z)} |b ^ x>.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

import numpy as np

#: full enumeration of G_n (4^n elements) is guarded at this size
MAX_N_FULL = 6
#: orbit-class machinery is guarded at this size
MAX_N_ORBIT = 12

_LETTER_OF_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_OF_LETTER = {v: k for k, v in _LETTER_OF_BITS.items()}


def _check_n(n: int, cap: int, what: str) -> None:
    if not 1 <= n <= cap:
        raise ValueError(f"{what} supports 1 <= n <= {cap}, got n={n}")


@dataclass(frozen=True)
class PauliString:
    """A phase-free n-qubit Pauli operator."""

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        mask = (1 << self.n) - 1
        if not (0 <= self.x_bits <= mask and 0 <= self.z_bits <= mask):
            raise ValueError("bit masks out of range for qubit count")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a string over {I,X,Y,Z}, qubit 0 leftmost."""
        n = len(label)
        x = z = 0
        for ch in label.upper():
            if ch not in _BITS_OF_LETTER:
                raise ValueError(f"invalid Pauli letter {ch!r}")
            xb, zb = _BITS_OF_LETTER[ch]
            x = (x << 1) | xb
            z = (z << 1) | zb
        return cls(n, x, z)

    @classmethod
    def from_lex_index(cls, n: int, index: int) -> "PauliString":
        if not 0 <= index < 4**n:
            raise ValueError(f"lex index {index} out of range for n={n}")
        return cls(n, index >> n, index & ((1 << n) - 1))

    def label(self) -> str:
        out = []
        for j in range(self.n):
            pos = self.n - 1 - j
            out.append(_LETTER_OF_BITS[(self.x_bits >> pos) & 1, (self.z_bits >> pos) & 1])
        return "".join(out)

    @property
    def lex_index(self) -> int:
        return (self.x_bits << self.n) | self.z_bits

    @property
    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    def letter(self, j: int) -> str:
        """Single-qubit letter on qubit j."""
        pos = self.n - 1 - j
        return _LETTER_OF_BITS[(self.x_bits >> pos) & 1, (self.z_bits >> pos) & 1]

    def dense(self) -> np.ndarray:
        """2^n x 2^n matrix (the i^y phase convention makes Y Hermitian)."""
        out = np.array([[1.0 + 0j]])
        for j in range(self.n):
            out = np.kron(out, _SINGLE_QUBIT[self.letter(j)])
        return out

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """Apply to a state vector of dimension 2^n in O(2^n)."""
        dim = 1 << self.n
        if vec.shape != (dim,):
            raise ValueError("state dimension does not match qubit count")
        idx = np.arange(dim)
        signs = 1.0 - 2.0 * _parity_table(self.n)[idx & self.z_bits]
        phase = 1j ** ((self.x_bits & self.z_bits).bit_count() % 4)
        out = np.empty(dim, dtype=complex)
        out[idx ^ self.x_bits] = phase * signs * vec
        return out

    def __repr__(self) -> str:
        return f"PauliString({self.label()!r})"


_SINGLE_QUBIT = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
}


@dataclass(frozen=True)
class OrbitClass:
    """Qubit-permutation orbit of Paulis with x X's, y Y's and z Z's."""

    x: int
    y: int
    z: int
    n: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 0 or self.x + self.y + self.z > self.n:
            raise ValueError(f"invalid orbit class ({self.x},{self.y},{self.z}) for n={self.n}")

    @property
    def weight(self) -> int:
        return self.x + self.y + self.z

    def size(self) -> int:
        """|C_{x,y,z,n}| = n! / (x! y! z! (n-x-y-z)!)."""
        return multinomial(self.n, self.x, self.y, self.z)

    def representative(self) -> PauliString:
        """X^x Y^y Z^z I^(rest), letters packed from qubit 0."""
        label = "X" * self.x + "Y" * self.y + "Z" * self.z + "I" * (self.n - self.weight)
        return PauliString.from_label(label)

    def members(self) -> Iterator[PauliString]:
        """All distinct Paulis in the orbit."""
        letters = self.representative().label()
        seen = set()
        for perm in itertools.permutations(letters):
            if perm not in seen:
                seen.add(perm)
                yield PauliString.from_label("".join(perm))


def multinomial(n: int, x: int, y: int, z: int) -> int:
    """n! / (x! y! z! (n-x-y-z)!), 0 when any slot is negative."""
    r = n - x - y - z
    if min(x, y, z, r) < 0:
        return 0
    return factorial(n) // (factorial(x) * factorial(y) * factorial(z) * factorial(r))


def weight(p: PauliString) -> int:
    """Number of non-identity tensor factors."""
    return p.weight


def commutation_sign(p: PauliString, q: PauliString) -> int:
    """+1 if p and q commute, -1 if they anticommute."""
    if p.n != q.n:
        raise ValueError(f"qubit counts differ: {p.n} vs {q.n}")
    sym = (p.x_bits & q.z_bits).bit_count() + (p.z_bits & q.x_bits).bit_count()
    return -1 if sym & 1 else 1


def enumerate_by_weight(n: int, i: int) -> Iterator[PauliString]:
    """All C(n,i) * 3^i Paulis of weight i, in a fixed deterministic order."""
    if not 0 <= i <= n:
        raise ValueError(f"weight {i} out of range for n={n}")
    _check_n(n, MAX_N_FULL if i > 0 else MAX_N_ORBIT, "enumerate_by_weight")
    for support in itertools.combinations(range(n), i):
        for letters in itertools.product("XYZ", repeat=i):
            x = z = 0
            for qubit, letter in zip(support, letters):
                xb, zb = _BITS_OF_LETTER[letter]
                pos = n - 1 - qubit
                x |= xb << pos
                z |= zb << pos
            yield PauliString(n, x, z)


def all_paulis(n: int) -> Iterator[PauliString]:
    """All 4^n Paulis in lex order on (x_bits, z_bits)."""
    _check_n(n, MAX_N_FULL, "all_paulis")
    for index in range(4**n):
        yield PauliString.from_lex_index(n, index)


def classify(p: PauliString) -> OrbitClass:
    """Orbit class (X count, Y count, Z count) of a Pauli."""
    y_mask = p.x_bits & p.z_bits
    return OrbitClass(
        x=(p.x_bits & ~y_mask).bit_count(),
        y=y_mask.bit_count(),
        z=(p.z_bits & ~y_mask).bit_count(),
        n=p.n,
    )


def orbit_classes(n: int) -> list[OrbitClass]:
    """All C(n+3,3) orbit classes, ordered lexicographically on (x, y, z)."""
    _check_n(n, MAX_N_ORBIT, "orbit_classes")
    return [
        OrbitClass(x, y, z, n)
        for x in range(n + 1)
        for y in range(n + 1 - x)
        for z in range(n + 1 - x - y)
    ]


def pair_count(n: int) -> int:
    """Number of unordered Pauli pairs, 4^n (4^n + 1) / 2."""
    g = 4**n
    return g * (g + 1) // 2


def pair_index(sigma: PauliString, tau: PauliString) -> int:
    """Index of the unordered pair {sigma, tau} in the swap-reduced space.

    Pairs (a, b) with lex indices a <= b are ranked row-major:
    index = a*g - a(a-1)/2 + (b - a), g = 4^n.  Symmetric in its arguments.
    """
    if sigma.n != tau.n:
        raise ValueError(f"qubit counts differ: {sigma.n} vs {tau.n}")
    g = 4**sigma.n
    a, b = sorted((sigma.lex_index, tau.lex_index))
    return a * g - a * (a - 1) // 2 + (b - a)


@functools.lru_cache(maxsize=None)
def _parity_table(n: int) -> np.ndarray:
    """parity_table[v] = popcount(v) mod 2 for v < 2^n."""
    table = np.zeros(1 << n, dtype=np.int8)
    for bit in range(n):
        half = 1 << bit
        table[half : 2 * half] = table[:half] ^ 1
    return table


@functools.lru_cache(maxsize=None)
def lex_bit_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(x_bits, z_bits) of all 4^n Paulis in lex order, as int64 arrays."""
    idx = np.arange(4**n, dtype=np.int64)
    return idx >> n, idx & ((1 << n) - 1)


@functools.lru_cache(maxsize=None)
def digit_to_lex_permutation(n: int) -> np.ndarray:
    """Map per-qubit digit encoding to lex order.

    Tensor (Kronecker) constructions index Paulis by base-4 digits
    ``d_j = 2 x_j + z_j`` with qubit 0 as the most significant digit;
    ``perm[digit_code] = lex_index`` converts such arrays to lex order.
    """
    codes = np.arange(4**n, dtype=np.int64)
    x = np.zeros_like(codes)
    z = np.zeros_like(codes)
    for j in range(n):
        digit = (codes >> (2 * (n - 1 - j))) & 3
        x = (x << 1) | (digit >> 1)
        z = (z << 1) | (digit & 1)
    return (x << n) | z


def pair_index_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(rows, cols) lex indices of all unordered pairs, in pair-index order.

    Equivalent to ``np.triu_indices(4**n)``; pair k couples variables
    phi[rows[k]] * phi[cols[k]].
    """
    return np.triu_indices(4**n)


def check_partition(n: int) -> bool:
    """Sum of weight-class sizes equals 4^n (sanity helper)."""
    return sum(comb(n, i) * 3**i for i in range(n + 1)) == 4**n
