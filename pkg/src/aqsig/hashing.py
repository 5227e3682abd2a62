"""The three keyed one-way functions and their injective input framing.

All three functions are instantiated from SHAKE-256, domain-separated by a
one-byte tag (1, 2 or 3) and truncated to the caller's output length, so one
audited primitive plays the role of three independent random oracles.

Framing format, byte for byte::

    tag:1 byte || for each field: bit-length as u32 big-endian || packed bits

Length-prefixing every field makes the serialization injective across
arities and split points: (P, r) and (P || r) with a shifted boundary can
never frame to the same byte stream.  Single-bit flags enter as 1-bit
fields.  The same framing feeds the published test-vector file.
"""

from __future__ import annotations

import hashlib
import struct
from typing import Sequence

from .bits import BitString


def frame(tag: int, fields: Sequence[BitString]) -> bytes:
    """Serialize a tagged field tuple injectively."""
    out = [bytes([tag])]
    for f in fields:
        out.append(struct.pack(">I", f.length))
        out.append(f.to_bytes())
    return b"".join(out)


def _xof(tag: int, fields: Sequence[BitString], out_len: int) -> BitString:
    digest = hashlib.shake_256(frame(tag, fields)).digest((out_len + 7) // 8)
    return BitString.from_bytes(digest, out_len)


def h1(*fields: BitString, out_len: int) -> BitString:
    """Mask-generating hash of the message-recovery scheme ({0,1}* -> {0,1}^m1)."""
    return _xof(1, fields, out_len)


def h2(*fields: BitString, out_len: int) -> BitString:
    """Inner-tag hash of the message-recovery scheme ({0,1}* -> {0,1}^m2)."""
    return _xof(2, fields, out_len)


def h3(*fields: BitString, out_len: int) -> BitString:
    """Combined mask/tag hash of the appendix scheme ({0,1}* -> {0,1}^m3)."""
    return _xof(3, fields, out_len)
