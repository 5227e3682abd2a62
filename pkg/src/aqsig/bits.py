"""Immutable bit strings and the seeded randomness helpers built on them.

A :class:`BitString` is an ordered sequence of bits, indexed from 0 at the
leftmost position (protocol descriptions usually speak of the "i-th bit"
counting from 1; internally everything is 0-based).  Values are packed into
a single int, most significant bit first, which keeps XOR, concatenation
and splitting cheap for the Monte Carlo suites.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, Sequence

from .errors import LengthMismatch

# All randomness in the package flows through injected random.Random
# instances; nothing reads the global RNG.
RandomSource = Random


@dataclass(frozen=True)
class BitString:
    """An immutable string of bits, leftmost bit first.

    ``value`` holds the bits packed big-endian: bit 0 of the string is the
    most significant bit of ``value``.
    """

    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise LengthMismatch(f"negative length {self.length}")
        if not 0 <= self.value < (1 << self.length if self.length else 1):
            raise LengthMismatch(
                f"value {self.value:#x} does not fit in {self.length} bits"
            )

    @classmethod
    def zeros(cls, length: int) -> "BitString":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "BitString":
        return cls((1 << length) - 1, length)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitString":
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | b
            length += 1
        return cls(value, length)

    @classmethod
    def from_bytes(cls, data: bytes, length: int) -> "BitString":
        """Unpack ``length`` bits from ``data`` (big-endian, left-aligned)."""
        if length > 8 * len(data):
            raise LengthMismatch(f"{len(data)} bytes hold fewer than {length} bits")
        value = int.from_bytes(data, "big") >> (8 * len(data) - length)
        return cls(value, length)

    def to_bytes(self) -> bytes:
        """Pack left-aligned into the minimum number of bytes.

        The final byte is zero-padded on the right; the true bit length must
        travel alongside (see :func:`aqsig.hashing.frame`).
        """
        nbytes = (self.length + 7) // 8
        return (self.value << (8 * nbytes - self.length)).to_bytes(nbytes, "big")

    def hex(self) -> str:
        return self.to_bytes().hex()

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - i)) & 1 for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def __getitem__(self, index):
        if isinstance(index, slice):
            start, stop, step = index.indices(self.length)
            if step != 1:
                return BitString.from_bits(self.bits()[index])
            width = max(stop - start, 0)
            return BitString((self.value >> (self.length - stop)) & ((1 << width) - 1), width)
        if index < 0:
            index += self.length
        if not 0 <= index < self.length:
            raise IndexError(index)
        return (self.value >> (self.length - 1 - index)) & 1

    def __xor__(self, other: "BitString") -> "BitString":
        if self.length != other.length:
            raise LengthMismatch(f"xor of {self.length}-bit and {other.length}-bit strings")
        return BitString(self.value ^ other.value, self.length)

    def __add__(self, other: "BitString") -> "BitString":
        return BitString((self.value << other.length) | other.value, self.length + other.length)

    def split(self, *lengths: int) -> tuple["BitString", ...]:
        """Cut into consecutive pieces; the lengths must sum to len(self)."""
        if sum(lengths) != self.length:
            raise LengthMismatch(
                f"split lengths {lengths} sum to {sum(lengths)}, string has {self.length}"
            )
        parts = []
        offset = 0
        for w in lengths:
            shift = self.length - offset - w
            parts.append(BitString((self.value >> shift) & ((1 << w) - 1), w))
            offset += w
        return tuple(parts)

    def count_ones(self) -> int:
        return bin(self.value).count("1")

    def __repr__(self) -> str:
        if self.length <= 32:
            body = "".join(str(b) for b in self)
        else:
            body = f"{self.hex()}/{self.length}"
        return f"BitString({body})"


def xor(a: BitString, b: BitString) -> BitString:
    """Bitwise XOR of two equal-length strings."""
    return a ^ b


def concat(parts: Sequence[BitString]) -> BitString:
    """Concatenate left to right; the empty sequence yields the empty string."""
    out = BitString.zeros(0)
    for p in parts:
        out = out + p
    return out


def split(s: BitString, lengths: Sequence[int]) -> tuple[BitString, ...]:
    return s.split(*lengths)


def random_bits(length: int, rng: RandomSource) -> BitString:
    """Draw ``length`` uniformly random bits from the injected source."""
    if length < 0:
        raise LengthMismatch(f"negative length {length}")
    return BitString(rng.getrandbits(length) if length else 0, length)


def derive_seed(master_seed: int, index: int) -> int:
    """Split a master seed into independent per-trial seeds.

    Trials of a Monte Carlo suite each get ``derive_seed(master, i)`` so they
    can run in any order (or in parallel) and still reproduce exactly.
    """
    digest = hashlib.sha256(f"aqsig-seed:{master_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(seed: int) -> RandomSource:
    return Random(seed)


def derive_identity(label: str, k: int) -> BitString:
    """Stable k-bit identity string for a named party."""
    digest = hashlib.shake_256(f"aqsig-id:{label}".encode()).digest((k + 7) // 8)
    return BitString.from_bytes(digest, k)
