"""Homotopy of sections on nodal ruled surfaces: bindings to the C++ core."""

from ._core import RuledError, blowup, decide, divisor_support, farey_path, run, verify

__all__ = ["RuledError", "blowup", "decide", "divisor_support", "farey_path", "run", "verify"]
