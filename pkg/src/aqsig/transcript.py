"""Append-only event log of a protocol run, serializable as JSON lines.

Line 1 is a header object carrying the schema version, the scheme name, the
run seed, the signed-message bit count and the parameter set.  Every
following line is one event.  Replaying a run with the same seed reproduces
the byte-identical stream, which the determinism tests rely on.

Qubit-bearing events always log counts; the underlying (basis, bit) states
are logged only when the run is started in debug mode, so a default
transcript reveals nothing a channel observer could not also see.  The one
exception is the evidence archive attached to the final verdict of a
completed run: that records what the receiver and arbitrator retain for
later dispute resolution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable

from .errors import MalformedTranscript
from .params import ProtocolParams

SCHEMA_VERSION = 1


class EventKind(Enum):
    QUBIT_SEND = "qubit_send"
    CLASSICAL_SEND = "classical_send"
    MEASUREMENT = "measurement"
    VERDICT = "verdict"
    NOTIFICATION = "notification"
    LEDGER_COMMIT = "ledger_commit"
    FAILURE = "failure"


@dataclass(frozen=True)
class Event:
    seq: int
    actor: str
    kind: EventKind
    qubit_count: int = 0
    bit_count: int = 0
    payload: dict[str, Any] = field(default_factory=dict)

    def to_obj(self) -> dict[str, Any]:
        return {
            "seq": self.seq,
            "actor": self.actor,
            "kind": self.kind.value,
            "qubits": self.qubit_count,
            "bits": self.bit_count,
            "payload": self.payload,
        }

    @classmethod
    def from_obj(cls, obj: dict[str, Any]) -> "Event":
        try:
            return cls(
                seq=obj["seq"],
                actor=obj["actor"],
                kind=EventKind(obj["kind"]),
                qubit_count=obj["qubits"],
                bit_count=obj["bits"],
                payload=obj["payload"],
            )
        except (KeyError, ValueError) as exc:
            raise MalformedTranscript(f"bad event object: {exc}") from exc


@dataclass
class Transcript:
    scheme: str
    seed: int
    message_bits: int
    params: ProtocolParams | None = None
    events: list[Event] = field(default_factory=list)

    def log(
        self,
        actor: str,
        kind: EventKind,
        *,
        qubits: int = 0,
        bits: int = 0,
        **payload: Any,
    ) -> Event:
        """Append an event; payload values must be JSON-representable."""
        event = Event(
            seq=len(self.events),
            actor=actor,
            kind=kind,
            qubit_count=qubits,
            bit_count=bits,
            payload=payload,
        )
        self.events.append(event)
        return event

    def find(self, kind: EventKind, **payload_match: Any) -> list[Event]:
        """Events of a kind whose payload contains the given key/value pairs."""
        return [
            e
            for e in self.events
            if e.kind is kind
            and all(e.payload.get(k) == v for k, v in payload_match.items())
        ]

    def to_json_lines(self) -> str:
        header = {
            "schema": SCHEMA_VERSION,
            "scheme": self.scheme,
            "seed": self.seed,
            "message_bits": self.message_bits,
            "params": None if self.params is None else vars(self.params),
        }
        lines = [json.dumps(header, sort_keys=True, separators=(",", ":"))]
        lines.extend(
            json.dumps(e.to_obj(), sort_keys=True, separators=(",", ":"))
            for e in self.events
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json_lines(cls, text: str | Iterable[str]) -> "Transcript":
        lines = text.splitlines() if isinstance(text, str) else list(text)
        lines = [ln for ln in lines if ln.strip()]
        if not lines:
            raise MalformedTranscript("no header line")
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise MalformedTranscript(f"unparsable header: {exc}") from exc
        if header.get("schema") != SCHEMA_VERSION:
            raise MalformedTranscript(f"unsupported schema {header.get('schema')!r}")
        params = header.get("params")
        transcript = cls(
            scheme=header["scheme"],
            seed=header["seed"],
            message_bits=header["message_bits"],
            params=None if params is None else ProtocolParams(**params),
        )
        for ln in lines[1:]:
            try:
                obj = json.loads(ln)
            except json.JSONDecodeError as exc:
                raise MalformedTranscript(f"unparsable event line: {exc}") from exc
            transcript.events.append(Event.from_obj(obj))
        return transcript
