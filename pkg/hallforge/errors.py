"""Exception hierarchy for hallforge."""


class HallforgeError(Exception):
    """Base class for every error raised by hallforge."""
    pass


# Partitions and parsing

class PartitionError(HallforgeError):
    """A value is not a valid partition."""
    pass


class NotAPartition(PartitionError):
    """Sequence is not weakly decreasing and positive."""

    def __init__(self, entries, reason: str = "not weakly decreasing and positive"):
        self.entries = tuple(entries)
        super().__init__(f"{self.entries} is not a partition: {reason}")


class UnderflowAtPart(PartitionError):
    """Multiset difference would leave a negative multiplicity."""

    def __init__(self, part: int):
        self.part = part
        super().__init__(f"multiplicity of part {part} would go negative")


class PartitionSyntaxError(PartitionError):
    """Partition text could not be parsed."""

    def __init__(self, text: str, position: int, message: str = "unexpected character"):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


# Parameters

class OutOfRange(HallforgeError):
    """Parameter outside the operation's precondition."""

    def __init__(self, name: str, value, bounds: str):
        self.name = name
        self.value = value
        super().__init__(f"{name}={value} out of range (expected {bounds})")


class GuardError(HallforgeError):
    """Parameter exceeds the exhaustive-enumeration guard."""
    pass


class WidthTooLarge(GuardError):
    def __init__(self, N: int, limit: int):
        self.N = N
        self.limit = limit
        super().__init__(f"width N={N} exceeds guard {limit}")


class SizeTooLarge(GuardError):
    def __init__(self, nmax: int, limit: int):
        self.nmax = nmax
        self.limit = limit
        super().__init__(f"size bound {nmax} exceeds guard {limit}")


# Family membership

class MembershipError(HallforgeError):
    """Input is not a member of the required family."""
    pass


class NotLectureHall(MembershipError):
    def __init__(self, mu, N: int):
        self.mu = mu
        self.N = N
        super().__init__(f"{mu} is not a lecture hall partition of width {N}")


class NotOddParty(MembershipError):
    def __init__(self, lam, N: int):
        self.lam = lam
        self.N = N
        super().__init__(f"{lam} is not an odd partition with parts <= {2 * N - 1}")


# Growth machine

class FeedError(HallforgeError):
    """A part cannot be fed into the growth state."""
    pass


class EvenPart(FeedError):
    def __init__(self, part: int):
        self.part = part
        super().__init__(f"part {part} is not a positive odd integer")


class PartTooLarge(FeedError):
    def __init__(self, part: int, N: int):
        self.part = part
        super().__init__(f"part {part} exceeds 2N-1={2 * N - 1}")


class OrderViolation(FeedError):
    def __init__(self, part: int, last_part: int):
        self.part = part
        super().__init__(f"part {part} fed after smaller part {last_part}")


# Internal errors signal a bug or a falsified theorem, never bad input

class InternalError(HallforgeError):
    pass


class CounterUnderflow(InternalError):
    def __init__(self, position: int, value: int):
        super().__init__(f"counter position {position} would be set to {value}")


class TableMiss(InternalError):
    def __init__(self, reduced, N: int):
        super().__init__(f"{reduced} has no preimage in the reduced table for N={N}")


class InvariantViolation(InternalError):
    pass


# Series

class SeriesError(HallforgeError):
    pass


class WindowMismatch(SeriesError):
    def __init__(self, left, right):
        super().__init__(f"window mismatch: {left} vs {right}")


class DivergentFactor(SeriesError):
    def __init__(self):
        super().__init__("1/(1 - t^a q^0) has no windowed expansion")


class WindowOverflow(SeriesError):
    def __init__(self, item, stat: int, size: int, window):
        self.item = item
        super().__init__(
            f"{item} (statistic {stat}, size {size}) falls outside window {window}"
        )


class SeriesOverflow(SeriesError):
    def __init__(self, bound: int):
        super().__init__(f"coefficient bound {bound} does not fit in int64")
