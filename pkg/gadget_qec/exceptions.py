"""Exception classes raised by gadget-qec."""

__author__ = "gadget-qec contributors"


class GadgetQECError(Exception):
    """Base class of all gadget-qec specific errors."""


class ConfigError(GadgetQECError, ValueError):
    """Invalid run configuration; the message names the offending key."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"config[{key}]: {message}")


class CircuitParseError(GadgetQECError, ValueError):
    """A circuit file could not be parsed.

    Parameters
    ----------
    message: str
        What went wrong.
    line_no: int, optional
        1-based line number of the offending line, if known.
    path: str, optional
        The file that was being parsed, if any.

    """

    def __init__(self, message: str, line_no: int = None, path: str = None):
        self.line_no = line_no
        self.path = path
        location = ""
        if path is not None:
            location += f"{path}:"
        if line_no is not None:
            location += f"{line_no}:"
        super().__init__(f"{location} {message}".strip())


class EpisodeDoneError(GadgetQECError, RuntimeError):
    """`step` was called on an environment whose episode already ended."""


class CrossPatternError(GadgetQECError, RuntimeError):
    """No four-unit pattern reproduces the gadget conjugation tables."""


class NonFiniteLossError(GadgetQECError, FloatingPointError):
    """A PPO loss term evaluated to nan or inf."""


class InvariantViolation(GadgetQECError, AssertionError):
    """An internal invariant was found broken at runtime."""
