"""Module for the three-valued status shared by every verdict."""

from enum import IntEnum


class Status(IntEnum):
    """Outcome of a decision procedure that may give up."""

    CERTIFIED = 1
    REFUTED = 2
    UNKNOWN = 3


_STATUS_NAMES = {
    Status.CERTIFIED: "certified",
    Status.REFUTED: "refuted",
    Status.UNKNOWN: "unknown",
}


def status_name(status: Status) -> str:
    """Return the serialised name of the status."""
    return _STATUS_NAMES[status]
