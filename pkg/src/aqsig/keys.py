"""Long-term shared keys and the abort-budget bookkeeping attached to them.

Key distribution itself is out of scope: :meth:`KeyStore.share_key` is a
trusted stub that hands both endpoints the same freshly drawn string, the
way an unconditionally secure QKD session would.  What this module does
model is the lifecycle the protocols rely on: a key is long-term and reused
across runs, every run consumes a fresh nonce rather than fresh key bits,
and a key that has witnessed too many aborted runs is treated as exposed
and refused from then on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import BitString, RandomSource, random_bits
from .errors import ExpiredKey
from .params import DEFAULT_XI_MAX


@dataclass
class KeyRecord:
    """One shared key between a party and the arbitrator (or a bank).

    ``abort_count`` tracks abnormal protocol terminations attributed to this
    key; once it exceeds ``xi_max`` the key is expired and every further use
    raises :class:`ExpiredKey`.  There is no recovery procedure: a new key
    must be shared.
    """

    party_id: BitString
    key: BitString
    xi_max: int = DEFAULT_XI_MAX
    uses: int = 0
    abort_count: int = 0

    @property
    def usable(self) -> bool:
        return self.abort_count <= self.xi_max

    def require_usable(self) -> None:
        if not self.usable:
            raise ExpiredKey(
                f"key for party {self.party_id.hex()} expired after "
                f"{self.abort_count} aborts (limit {self.xi_max})"
            )

    def mark_use(self) -> None:
        self.require_usable()
        self.uses += 1

    def record_abort(self) -> None:
        self.abort_count += 1


class KeyStore:
    """Single-owner registry of shared keys, indexed by party identity.

    Concurrent access needs external serialization; the simulation drivers
    are single-threaded over it.
    """

    def __init__(self) -> None:
        self._records: dict[BitString, KeyRecord] = {}

    def share_key(
        self,
        party_a: BitString,
        party_b: BitString,
        length: int,
        rng: RandomSource,
        xi_max: int = DEFAULT_XI_MAX,
    ) -> KeyRecord:
        """Trusted key-exchange stub: both endpoints get identical bits.

        The record is registered under ``party_a`` (the non-arbitrator
        endpoint); ``party_b`` names the counterpart for the caller's
        bookkeeping only.
        """
        record = KeyRecord(party_id=party_a, key=random_bits(length, rng), xi_max=xi_max)
        self._records[party_a] = record
        return record

    def get(self, party: BitString) -> KeyRecord:
        return self._records[party]

    def get_or_share(
        self,
        party_a: BitString,
        party_b: BitString,
        length: int,
        rng: RandomSource,
        xi_max: int = DEFAULT_XI_MAX,
    ) -> KeyRecord:
        """Reuse the registered key if present, otherwise share a fresh one."""
        record = self._records.get(party_a)
        if record is not None and record.key.length == length:
            return record
        return self.share_key(party_a, party_b, length, rng, xi_max)

    def __contains__(self, party: BitString) -> bool:
        return party in self._records

    def __len__(self) -> int:
        return len(self._records)
