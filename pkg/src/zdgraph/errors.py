"""Exception hierarchy shared by all modules."""


class ZdgError(Exception):
    """Base class for every error raised by zdgraph."""


class ParseError(ZdgError, ValueError):
    def __init__(self, message, line=None, offset=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.offset = offset


class GraphError(ZdgError, ValueError):
    """Invalid graph data: self-loops, asymmetric adjacency, bad vertex lists."""


class CapExceeded(ZdgError):
    """An operation would enumerate more objects than the configured cap."""


class RingError(ZdgError, ValueError):
    """Invalid ring descriptor or parameters."""


class RingAxiomError(RingError):
    def __init__(self, message, witness=None):
        super().__init__(f"{message}; witness={witness!r}" if witness is not None else message)
        self.witness = witness


class ElementError(RingError):
    """Element does not belong to the ring, or its text could not be parsed."""


class NotNilpotentError(RingError):
    """The ideal generated by the given elements is not nilpotent."""


class NotThresholdError(ZdgError):
    """Raised by threshold-only operations; carries a verified forbidden witness."""

    def __init__(self, witness):
        super().__init__(f"graph is not threshold: induced {witness.pattern} on {list(witness.vertices)}")
        self.witness = witness


class VerificationError(ZdgError):
    """A construction failed its own verification (indicates a bug)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
