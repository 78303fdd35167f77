"""Signed n-qubit Pauli operators in symplectic (x|z) bit representation.

A Pauli is stored as two bit masks ``x`` and ``z`` (Python integers, bit i
corresponds to qubit i) plus a phase exponent.  The operator it denotes is

    i^phase * prod_j X_j^{x_j} * prod_j Z_j^{z_j}

with all X factors ordered before all Z factors.  Hermitian operators satisfy
``phase == popcount(x & z) (mod 2)``; only Hermitian Paulis are representable
by :class:`PauliOperator` (intermediate non-Hermitian phases appear only
transiently inside multiplication routines).
"""

from __future__ import annotations

from dataclasses import dataclass

_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_CHAR = {v: k for k, v in _CHAR_TO_BITS.items()}


def phase_product(x1: int, z1: int, p1: int, x2: int, z2: int, p2: int):
    """Multiply two Paulis in XZ form, returning (x, z, phase mod 4).

    Phase rule: moving the right factor's X part through the left factor's
    Z part contributes (-1)^{|z1 & x2|}.
    """
    cross = bin(z1 & x2).count("1") & 1
    return x1 ^ x2, z1 ^ z2, (p1 + p2 + 2 * cross) & 3


@dataclass(frozen=True)
class PauliOperator:
    """A Hermitian signed Pauli string on ``n`` qubits."""

    n: int
    x: int
    z: int
    sign: int = 1  # +1 or -1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bit mask exceeds qubit count")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def phase(self) -> int:
        """Phase exponent mod 4 of the XZ normal form (Hermitian convention)."""
        y_parity = bin(self.x & self.z).count("1") & 1
        return (y_parity + (0 if self.sign == 1 else 2)) & 3

    @classmethod
    def from_phase(cls, n: int, x: int, z: int, phase: int) -> "PauliOperator":
        """Build from an XZ-form phase exponent; raises if non-Hermitian."""
        y_parity = bin(x & z).count("1") & 1
        if (phase - y_parity) & 1:
            raise ValueError("phase corresponds to a non-Hermitian Pauli")
        sign = 1 if ((phase - y_parity) & 3) == 0 else -1
        return cls(n, x, z, sign)

    @classmethod
    def from_string(cls, label: str, sign: int = 1) -> "PauliOperator":
        """Parse e.g. ``"XIZY"`` (qubit 0 is the leftmost character)."""
        label = label.strip()
        if label.startswith("+"):
            label = label[1:]
        elif label.startswith("-"):
            sign = -sign
            label = label[1:]
        x = z = 0
        for i, ch in enumerate(label):
            try:
                xb, zb = _CHAR_TO_BITS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli character {ch!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(label), x, z, sign)

    def commutes_with(self, other: "PauliOperator") -> bool:
        """True iff the symplectic form x1.z2 + z1.x2 vanishes mod 2."""
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        acc = (self.x & other.z) ^ (self.z & other.x)
        return bin(acc).count("1") & 1 == 0

    def multiply(self, other: "PauliOperator") -> "PauliOperator":
        """Product self*other; raises if the result carries a factor of i."""
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        x, z, p = phase_product(self.x, self.z, self.phase, other.x, other.z, other.phase)
        return PauliOperator.from_phase(self.n, x, z, p)

    def weight(self) -> int:
        return bin(self.x | self.z).count("1")

    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(i for i in range(self.n) if (m >> i) & 1)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __str__(self) -> str:
        body = "".join(
            _BITS_TO_CHAR[((self.x >> i) & 1, (self.z >> i) & 1)] for i in range(self.n)
        )
        return ("+" if self.sign == 1 else "-") + body


def identity_pauli(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 1)


def single_z(n: int, site: int, sign: int = 1) -> PauliOperator:
    return PauliOperator(n, 0, 1 << site, sign)


def single_x(n: int, site: int, sign: int = 1) -> PauliOperator:
    return PauliOperator(n, 1 << site, 0, sign)
