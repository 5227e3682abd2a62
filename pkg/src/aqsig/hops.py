"""Hop-level plumbing shared by the protocol drivers.

A hop is one physical quantum link between two parties.  Everything a party
sends over a hop in one protocol step travels as a single stream, so a
tampering channel configured for that hop sees the concatenation: positions
index the stream in transmission order, and an intercept-resend adversary
touches every qubit crossing the link.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

from .bits import BitString, RandomSource
from .errors import InvalidConfig
from .qubits import Channel, Qubit, QubitString, transmit
from .transcript import EventKind, Transcript

QS_HOPS = ("alice_to_bob", "bob_to_arbitrator", "arbitrator_to_bob")
PAYMENT_HOPS = ("payer_to_payee", "payee_to_bank")


def normalize_channels(
    channels: Mapping[str, Channel] | None, allowed: Sequence[str]
) -> dict[str, Channel]:
    channels = dict(channels or {})
    unknown = sorted(set(channels) - set(allowed))
    if unknown:
        raise InvalidConfig(f"unknown hop(s) {unknown}; valid hops: {list(allowed)}")
    return channels


def pack_states(qubits: QubitString) -> dict[str, Any]:
    """JSON-safe record of a string's preparation states."""
    basis = BitString.from_bits(0 if b == "R" else 1 for b, _ in qubits.states())
    value = BitString.from_bits(v for _, v in qubits.states())
    return {"basis": basis.hex(), "value": value.hex(), "len": len(qubits)}


def unpack_states(obj: Mapping[str, Any]) -> QubitString:
    """Re-prepare fresh qubits from a packed state record."""
    from .qubits import Basis  # local import keeps module load order simple

    basis = BitString.from_bytes(bytes.fromhex(obj["basis"]), obj["len"])
    value = BitString.from_bytes(bytes.fromhex(obj["value"]), obj["len"])
    return QubitString(
        Qubit(Basis.R if b == 0 else Basis.D, v) for b, v in zip(basis, value)
    )


def send_qubits(
    transcript: Transcript,
    rng: RandomSource,
    channel: Channel | None,
    sender: str,
    receiver: str,
    items: Sequence[tuple[str, QubitString]],
    debug: bool = False,
) -> list[QubitString]:
    """Send labelled qubit strings over one hop and return what arrives.

    One send event is logged per item (counts always, states only in debug
    mode); the hop channel acts on the concatenated stream.
    """
    for label, qs in items:
        extra = {"states": pack_states(qs)} if debug else {}
        transcript.log(
            sender, EventKind.QUBIT_SEND, qubits=len(qs), to=receiver, item=label, **extra
        )
    combined = QubitString([])
    for _, qs in items:
        combined = combined + qs
    arrived = transmit(combined, channel, rng)
    out = []
    offset = 0
    for _, qs in items:
        out.append(arrived[offset : offset + len(qs)])
        offset += len(qs)
    return out


def send_classical(
    transcript: Transcript,
    sender: str,
    receiver: str,
    label: str,
    data: BitString,
) -> BitString:
    """Send public classical bits over one hop (logged, never tampered)."""
    transcript.log(
        sender,
        EventKind.CLASSICAL_SEND,
        bits=data.length,
        to=receiver,
        item=label,
        data=data.hex(),
    )
    return data
