"""Tape-bounded machines: simulator, subroutine macros, and the
acceptors for the depth-q languages."""

from .machines import build_k3_machine, build_kn_machine
from .macros import goto_last_mark, scan_for_symbol, unary_compare, unary_transfer
from .simulator import (
    ACCEPT,
    BLANK,
    CompiledMachine,
    DEFAULT_STEP_BUDGET,
    LEFT,
    MachineBuilder,
    REJECT,
    RIGHT,
    RunResult,
    STAY,
    TraceEntry,
    format_trace,
    run,
)

__all__ = [
    "ACCEPT",
    "BLANK",
    "CompiledMachine",
    "DEFAULT_STEP_BUDGET",
    "LEFT",
    "MachineBuilder",
    "REJECT",
    "RIGHT",
    "RunResult",
    "STAY",
    "TraceEntry",
    "build_k3_machine",
    "build_kn_machine",
    "format_trace",
    "goto_last_mark",
    "run",
    "scan_for_symbol",
    "unary_compare",
    "unary_transfer",
]
