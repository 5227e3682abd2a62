"""Length parameters shared by every protocol in the package.

The eight lengths are not independent.  Four of them are free:

    n   message length for the message-recovery scheme
    l   nonce length
    k   identity-string length
    m2  inner-tag length (message-recovery scheme only)

and the rest are forced by the masking algebra:

    m1 = n + m2 + k     one mask must cover message || tag || identity
    m3 = l + k          one mask must cover nonce || identity
    n1 = l + m1         key/signature length, message-recovery scheme
    n2 = l + m3         key/signature length, appendix scheme

Every constructor validates the algebra so a violated constraint is named
at configuration time instead of surfacing as a bad split mid-protocol.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidConfig


@dataclass(frozen=True)
class ProtocolParams:
    n: int
    l: int
    k: int
    m1: int
    m2: int
    m3: int
    n1: int
    n2: int

    def __post_init__(self) -> None:
        for name in ("n", "l", "k", "m1", "m2", "m3", "n1", "n2"):
            if getattr(self, name) <= 0:
                raise InvalidConfig(f"parameter {name} must be strictly positive")
        if self.m1 != self.n + self.m2 + self.k:
            raise InvalidConfig(
                f"constraint m1 = n + m2 + k violated: {self.m1} != {self.n} + {self.m2} + {self.k}"
            )
        if self.m3 != self.l + self.k:
            raise InvalidConfig(
                f"constraint m3 = l + k violated: {self.m3} != {self.l} + {self.k}"
            )
        if self.n1 != self.l + self.m1:
            raise InvalidConfig(
                f"constraint n1 = l + m1 violated: {self.n1} != {self.l} + {self.m1}"
            )
        if self.n2 != self.l + self.m3:
            raise InvalidConfig(
                f"constraint n2 = l + m3 violated: {self.n2} != {self.l} + {self.m3}"
            )

    @classmethod
    def derive(cls, n: int = 32, l: int = 16, k: int = 16, m2: int = 16) -> "ProtocolParams":
        """Build a consistent parameter set from the four free lengths."""
        m1 = n + m2 + k
        m3 = l + k
        return cls(n=n, l=l, k=k, m1=m1, m2=m2, m3=m3, n1=l + m1, n2=l + m3)


# Desk-scale defaults: small enough that the Monte Carlo suites run in
# seconds, large enough that the 2^-16 false-accept bounds never fire in
# thousand-trial experiments.
DEFAULT_PARAMS = ProtocolParams.derive(n=32, l=16, k=16, m2=16)

# Agreed number of abnormal aborts a shared key survives before it is
# treated as exposed and refused.
DEFAULT_XI_MAX = 3
