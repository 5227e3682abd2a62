"""Exception types shared across the package."""


class AqsigError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(AqsigError):
    """Two bit strings (or a string and a contract) disagree on length."""


class DoubleMeasurement(AqsigError):
    """A qubit that was already measured (or absorbed) is measured again."""


class PositionOutOfRange(AqsigError):
    """A channel tamper position does not index the transmitted string."""


class ExpiredKey(AqsigError):
    """A shared key whose abort budget is exhausted was offered for use."""


class InvalidConfig(AqsigError):
    """A run configuration or parameter set violates its constraints."""


class InvalidScenario(AqsigError):
    """An attack scenario is internally inconsistent."""


class MalformedTranscript(AqsigError):
    """A transcript is empty, truncated, or fails schema validation."""


class MalformedEvidence(AqsigError):
    """A dispute transcript lacks the evidence needed for a ruling."""


class AlreadyRegistered(AqsigError):
    """A party attempted to open a second account at the same bank."""


class MalformedCheck(AqsigError):
    """A check part violates the published field layout."""


class InsufficientFunds(AqsigError):
    """A settlement would drive the payer's balance below zero."""


class UnknownAccount(AqsigError):
    """A check references an account number the ledger does not hold."""


class ProtocolFailure(AqsigError):
    """A protocol run aborted with an error; carries the partial transcript.

    The triggering error is available as ``__cause__`` and the events seen
    so far (including the final failure event) as ``transcript``.
    """

    def __init__(self, message: str, transcript=None):
        super().__init__(message)
        self.transcript = transcript
