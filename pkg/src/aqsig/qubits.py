"""Conjugate-coding qubits, von Neumann measurement, and tamperable channels.

Every quantum state in the package is one of the four conjugate-coding
states, so a qubit is modeled exactly as its preparation record: a basis
(rectilinear R or diagonal D) plus a bit.

    (R, 0) = |0>    (R, 1) = |1>    (D, 0) = |+>    (D, 1) = |->

Measurement in the preparation basis returns the prepared bit
deterministically; measurement in the conjugate basis returns a fresh fair
coin and collapses the state onto the measured eigenstate.  A measured (or
channel-absorbed) qubit is consumed and can never be measured again, which
is how the simulator enforces the no-cloning discipline the protocols rely
on.

All functions are pure over value types plus an injected RandomSource, so
independent runs may execute in parallel as long as each owns its source.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .bits import BitString, RandomSource
from .errors import DoubleMeasurement, LengthMismatch, PositionOutOfRange


class Basis(Enum):
    R = "R"  # rectilinear {|0>, |1>}
    D = "D"  # diagonal {|+>, |->}


class Qubit:
    """A single conjugate-coding qubit.

    Mutable on purpose: measurement collapses the state in place and marks
    it consumed.  Equality compares the (basis, bit) state only.
    """

    __slots__ = ("basis", "bit", "_consumed")

    def __init__(self, basis: Basis, bit: int):
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit!r}")
        self.basis = basis
        self.bit = bit
        self._consumed = False

    @property
    def consumed(self) -> bool:
        return self._consumed

    def measure(self, basis: Basis, rng: RandomSource) -> int:
        """von Neumann measurement in the given basis.

        Matching basis: returns the prepared bit.  Conjugate basis: returns
        0 or 1 with probability 1/2 each, and the state collapses onto the
        measured eigenstate (relevant when an interceptor re-sends).
        """
        if self._consumed:
            raise DoubleMeasurement("qubit was already measured or absorbed")
        self._consumed = True
        outcome = self.bit if basis == self.basis else rng.getrandbits(1)
        self.basis = basis
        self.bit = outcome
        return outcome

    def discard(self) -> None:
        """Absorb the qubit (e.g. a channel blocked it) without an outcome."""
        self._consumed = True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Qubit):
            return NotImplemented
        return self.basis is other.basis and self.bit == other.bit

    def __repr__(self) -> str:
        flag = ", consumed" if self._consumed else ""
        return f"Qubit({self.basis.value}, {self.bit}{flag})"


class QubitString:
    """An ordered string of qubits travelling as one message."""

    __slots__ = ("_qubits",)

    def __init__(self, qubits: Iterable[Qubit]):
        self._qubits = tuple(qubits)

    @property
    def length(self) -> int:
        return len(self._qubits)

    def __len__(self) -> int:
        return len(self._qubits)

    def __iter__(self) -> Iterator[Qubit]:
        return iter(self._qubits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return QubitString(self._qubits[index])
        return self._qubits[index]

    def __add__(self, other: "QubitString") -> "QubitString":
        return QubitString(self._qubits + other._qubits)

    def states(self) -> list[tuple[str, int]]:
        """Preparation records as (basis letter, bit) pairs.

        Simulator introspection: this is the preparer's classical knowledge
        (used for debug logging, evidence archives and re-preparation), not
        something a channel observer could extract.
        """
        return [(q.basis.value, q.bit) for q in self._qubits]

    def reprepare(self) -> "QubitString":
        """Fresh unconsumed copies of the current states (preparer-side)."""
        return QubitString(Qubit(q.basis, q.bit) for q in self._qubits)

    def __repr__(self) -> str:
        return f"QubitString(len={len(self._qubits)})"


def encode_conjugate(key: BitString, data: BitString) -> QubitString:
    """Encode data qubit by qubit, the key bit choosing the basis (0=R, 1=D)."""
    if key.length != data.length:
        raise LengthMismatch(
            f"key has {key.length} bits but data has {data.length}"
        )
    return QubitString(
        Qubit(Basis.R if kb == 0 else Basis.D, db) for kb, db in zip(key, data)
    )


def decode_conjugate(key: BitString, qubits: QubitString, rng: RandomSource) -> BitString:
    """Measure each qubit in the basis the key bit selects."""
    if key.length != len(qubits):
        raise LengthMismatch(
            f"key has {key.length} bits but string has {len(qubits)} qubits"
        )
    return BitString.from_bits(
        q.measure(Basis.R if kb == 0 else Basis.D, rng) for kb, q in zip(key, qubits)
    )


def encode_rectilinear(data: BitString) -> QubitString:
    """Encode a public message entirely in basis R (quantum transport mode)."""
    return QubitString(Qubit(Basis.R, b) for b in data)


def decode_rectilinear(qubits: QubitString, rng: RandomSource) -> BitString:
    return BitString.from_bits(q.measure(Basis.R, rng) for q in qubits)


# ---------------------------------------------------------------------------
# Channel models
# ---------------------------------------------------------------------------

class Channel:
    """Behavior of one quantum hop; subclasses model specific adversaries."""

    def apply(self, qubits: QubitString, rng: RandomSource) -> QubitString:
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(Channel):
    """Noiseless channel: the same qubits arrive untouched."""

    def apply(self, qubits: QubitString, rng: RandomSource) -> QubitString:
        return qubits


@dataclass(frozen=True)
class InterceptResend(Channel):
    """Eavesdropper measures every qubit in a uniformly random basis and
    re-prepares what she observed.

    Against a receiver who measures in the correct basis this disturbs each
    qubit with probability 1/4 (wrong guess 1/2 times flip 1/2).
    """

    def apply(self, qubits: QubitString, rng: RandomSource) -> QubitString:
        resent = []
        for q in qubits:
            guess = Basis.R if rng.getrandbits(1) == 0 else Basis.D
            outcome = q.measure(guess, rng)
            resent.append(Qubit(guess, outcome))
        return QubitString(resent)


@dataclass(frozen=True)
class Substitute(Channel):
    """Attacker swaps the qubit at ``position`` for a state of her choice.

    The replacement is re-prepared on every application, so one channel
    object can drive many trials.
    """

    position: int
    replacement: Qubit

    def apply(self, qubits: QubitString, rng: RandomSource) -> QubitString:
        if not 0 <= self.position < len(qubits):
            raise PositionOutOfRange(
                f"substitute position {self.position} not in string of {len(qubits)}"
            )
        out = list(qubits)
        out[self.position].discard()
        out[self.position] = Qubit(self.replacement.basis, self.replacement.bit)
        return QubitString(out)


@dataclass(frozen=True)
class BitFlip(Channel):
    """Deterministic flip of one qubit in its own preparation basis.

    The strongest minimal tampering primitive: the receiver's matched-basis
    measurement is guaranteed to read the complement.
    """

    position: int

    def apply(self, qubits: QubitString, rng: RandomSource) -> QubitString:
        if not 0 <= self.position < len(qubits):
            raise PositionOutOfRange(
                f"bit-flip position {self.position} not in string of {len(qubits)}"
            )
        out = list(qubits)
        old = out[self.position]
        old.discard()
        out[self.position] = Qubit(old.basis, 1 - old.bit)
        return QubitString(out)


def transmit(qubits: QubitString, channel: Channel | None, rng: RandomSource) -> QubitString:
    """Send a qubit string through one hop; ``None`` means a clean hop."""
    if channel is None:
        return qubits
    return channel.apply(qubits, rng)
