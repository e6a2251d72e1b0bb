"""Multi-track, tape-bounded machine simulator.

The tape holds the input on track 1 plus scratch tracks, with an
immovable left end marker just before the first letter and a right end
marker just after the last.  A machine never writes on a marker cell,
and any attempt to move past a marker is a rejecting event.

Machines are authored as named states with ordered pattern rules (see
MachineBuilder) and compiled down to a flat transition table over
composite cells; the stepper below knows nothing about the rule layer.
Every cell of the table is a plain tuple lookup, which keeps exhaustive
oracle sweeps over thousands of inputs affordable.

Cell accounting convention: cells_used reported by a run is

    track_count * (number of distinct head positions visited),

end markers included when the head actually stood on them.  The head
starts on the first input letter and the machines in this package detect
the left edge through an origin mark on a scratch track, so the left
marker is never visited and a machine with t tracks uses t*(l+1) cells
on an input of length l.  Bounds are only asserted for l >= 10: below
that, fixed overheads dominate and the advertised per-letter budget is
measured against max(l, 10).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import (
    DomainError,
    LetterOutOfAlphabet,
    MachineDefinitionError,
    StepBudgetExceeded,
)
from ..words import Word

BLANK = "_"
LEFT_MARKER = "["
RIGHT_MARKER = "]"

ACCEPT = "accept"
REJECT = "reject"

_ACCEPT_ID = -1
_REJECT_ID = -2

DEFAULT_STEP_BUDGET = 1_000_000
TRACE_LIMIT = 10_000

LEFT = -1
STAY = 0
RIGHT = +1


@dataclass(frozen=True)
class Rule:
    """One guarded transition of a state.

    ``when`` constrains chosen tracks to symbol sets (missing tracks are
    wildcards); a rule with ``marker`` set instead matches that end
    marker, where nothing may be written.  Rules are tried in the order
    they were added and the first match wins.
    """

    when: tuple[tuple[int, frozenset[str]], ...]
    marker: str | None
    write: tuple[tuple[int, str], ...]
    move: int
    goto: str


class MachineBuilder:
    """Collects states and rules, then compiles a transition table."""

    def __init__(
        self,
        name: str,
        *,
        track_symbols: Sequence[Iterable[str]],
        input_alphabet: Iterable[int],
        bound_factor: int,
        start: str,
    ):
        self.name = name
        self.track_symbols = [tuple(dict.fromkeys(syms)) for syms in track_symbols]
        for syms in self.track_symbols:
            for s in syms:
                if s in (LEFT_MARKER, RIGHT_MARKER):
                    raise DomainError("marker symbols are reserved")
        self.input_alphabet = frozenset(input_alphabet)
        for letter in self.input_alphabet:
            if str(letter) not in self.track_symbols[0]:
                raise DomainError(f"letter {letter} missing from track 1 symbols")
        for idx, syms in enumerate(self.track_symbols[1:], start=2):
            if BLANK not in syms:
                raise DomainError(f"scratch track {idx} must allow blanks")
        self.bound_factor = bound_factor
        self.start = start
        self._rules: dict[str, list[Rule]] = {}

    @property
    def track_count(self) -> int:
        return len(self.track_symbols)

    def add(
        self,
        state: str,
        *,
        when: Mapping[int, object] | None = None,
        marker: str | None = None,
        write: Mapping[int, str] | None = None,
        move: int = STAY,
        goto: str,
    ) -> None:
        if move not in (LEFT, STAY, RIGHT):
            raise DomainError(f"move must be -1, 0 or +1, got {move}")
        if marker is not None:
            if marker not in (LEFT_MARKER, RIGHT_MARKER):
                raise DomainError(f"unknown marker {marker!r}")
            if when or write:
                raise DomainError("marker rules cannot match or write tracks")
        norm_when = []
        for track, symbols in (when or {}).items():
            if isinstance(symbols, str):
                symbols = {symbols}
            allowed = frozenset(symbols)
            unknown = allowed - set(self.track_symbols[track])
            if unknown:
                raise DomainError(f"track {track + 1} has no symbols {sorted(unknown)}")
            norm_when.append((track, allowed))
        norm_write = []
        for track, symbol in (write or {}).items():
            if symbol not in self.track_symbols[track]:
                raise DomainError(f"track {track + 1} has no symbol {symbol!r}")
            norm_write.append((track, symbol))
        self._rules.setdefault(state, []).append(
            Rule(
                when=tuple(norm_when),
                marker=marker,
                write=tuple(norm_write),
                move=move,
                goto=goto,
            )
        )

    def compile(self) -> "CompiledMachine":
        state_names = list(self._rules)
        if self.start not in self._rules:
            raise MachineDefinitionError(f"start state {self.start!r} undefined")
        state_ids = {name: idx for idx, name in enumerate(state_names)}

        def target_id(goto: str) -> int:
            if goto == ACCEPT:
                return _ACCEPT_ID
            if goto == REJECT:
                return _REJECT_ID
            if goto not in state_ids:
                raise MachineDefinitionError(f"rule jumps to unknown state {goto!r}")
            return state_ids[goto]

        cells = [(LEFT_MARKER,), (RIGHT_MARKER,)]
        cells += list(itertools.product(*self.track_symbols))
        cell_ids = {cell: idx for idx, cell in enumerate(cells)}

        table: list[list[tuple[int, int, int] | None]] = []
        for state in state_names:
            rules = self._rules[state]
            row: list[tuple[int, int, int] | None] = [None] * len(cells)
            for marker, cell_id in ((LEFT_MARKER, 0), (RIGHT_MARKER, 1)):
                for rule in rules:
                    if rule.marker == marker:
                        row[cell_id] = (cell_id, rule.move, target_id(rule.goto))
                        break
            for cell, cell_id in cell_ids.items():
                if cell_id < 2:
                    continue
                for rule in rules:
                    if rule.marker is not None:
                        continue
                    if all(cell[track] in allowed for track, allowed in rule.when):
                        if rule.write:
                            new = list(cell)
                            for track, symbol in rule.write:
                                new[track] = symbol
                            new_id = cell_ids[tuple(new)]
                        else:
                            new_id = cell_id
                        row[cell_id] = (new_id, rule.move, target_id(rule.goto))
                        break
            table.append(row)

        letter_cell = {}
        for letter in self.input_alphabet:
            blank_cell = (str(letter),) + (BLANK,) * (self.track_count - 1)
            letter_cell[letter] = cell_ids[blank_cell]

        return CompiledMachine(
            name=self.name,
            track_count=self.track_count,
            input_alphabet=self.input_alphabet,
            bound_factor=self.bound_factor,
            start_id=state_ids[self.start],
            state_names=tuple(state_names),
            cells=tuple(cells),
            letter_cell=letter_cell,
            table=table,
        )


@dataclass(frozen=True)
class CompiledMachine:
    """Flat transition table plus the metadata a run needs.

    table[state_id][cell_id] is (new_cell_id, move, next_state_id) with
    the next-state ids -1 and -2 standing for accept and reject.
    """

    name: str
    track_count: int
    input_alphabet: frozenset[int]
    bound_factor: int
    start_id: int
    state_names: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]
    letter_cell: dict[int, int]
    table: list[list[tuple[int, int, int] | None]]

    def state_count(self) -> int:
        return len(self.state_names)


@dataclass(frozen=True)
class TraceEntry:
    step: int
    head: int
    macro: str
    tracks: tuple[str, ...]


@dataclass(frozen=True)
class RunResult:
    verdict: str  # "accept" | "reject"
    steps: int
    cells_used: int
    bound: int
    trace: tuple[TraceEntry, ...] | None = None
    trace_truncated: bool = False

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "steps": self.steps,
            "cells_used": self.cells_used,
            "bound": self.bound,
        }


def _render_tracks(machine: CompiledMachine, tape: list[int]) -> tuple[str, ...]:
    rows = []
    for track in range(machine.track_count):
        chars = []
        for cell_id in tape:
            cell = machine.cells[cell_id]
            chars.append(cell[0] if len(cell) == 1 else cell[track])
        rows.append("".join(chars))
    return tuple(rows)


def run(
    machine: CompiledMachine,
    word: Word,
    max_steps: int = DEFAULT_STEP_BUDGET,
    want_trace: bool = False,
) -> RunResult:
    """Deterministic simulation of ``machine`` on ``word``.

    Halts with a verdict, the step count, and the cells_used total under
    the accounting convention in the module docstring.  Raises
    StepBudgetExceeded if no verdict is reached within ``max_steps``
    (the machines here always halt, so treat that as a bug) and
    LetterOutOfAlphabet for letters the machine was not built for.
    """
    for letter in word:
        if letter not in machine.input_alphabet:
            raise LetterOutOfAlphabet(
                f"letter {letter} not in alphabet {sorted(machine.input_alphabet)}"
            )

    tape = [0] + [machine.letter_cell[letter] for letter in word] + [1]
    pos = 1
    min_pos = max_pos = pos
    state = machine.start_id
    steps = 0
    table = machine.table
    trace: list[TraceEntry] | None = [] if want_trace else None
    truncated = False

    while True:
        cell = tape[pos]
        if trace is not None:
            if len(trace) < TRACE_LIMIT:
                trace.append(
                    TraceEntry(
                        step=steps,
                        head=pos,
                        macro=machine.state_names[state],
                        tracks=_render_tracks(machine, tape),
                    )
                )
            else:
                truncated = True
        entry = table[state][cell]
        if entry is None:
            raise MachineDefinitionError(
                f"{machine.name}: state {machine.state_names[state]!r} has no rule "
                f"for cell {machine.cells[cell]!r}"
            )
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(
                f"{machine.name} passed {max_steps} steps on {word!s}"
            )
        tape[pos] = entry[0]
        pos += entry[1]
        if pos < 0 or pos >= len(tape):
            verdict = REJECT  # moving past an end marker rejects
            break
        if pos < min_pos:
            min_pos = pos
        elif pos > max_pos:
            max_pos = pos
        nxt = entry[2]
        if nxt < 0:
            verdict = ACCEPT if nxt == _ACCEPT_ID else REJECT
            break
        state = nxt

    cells_used = machine.track_count * (max_pos - min_pos + 1)
    bound = machine.bound_factor * max(len(word), 10)
    if cells_used > bound:
        raise MachineDefinitionError(
            f"{machine.name} used {cells_used} cells on length {len(word)}, "
            f"over its advertised bound {bound}"
        )
    return RunResult(
        verdict=verdict,
        steps=steps,
        cells_used=cells_used,
        bound=bound,
        trace=None if trace is None else tuple(trace),
        trace_truncated=truncated,
    )


def format_trace(result: RunResult) -> list[str]:
    """Trace lines: step, head position, macro step, then one rendered
    string per track, tab-separated; blanks as '_', markers as '[', ']'."""
    if result.trace is None:
        return []
    return [
        "\t".join([str(e.step), str(e.head), e.macro, *e.tracks])
        for e in result.trace
    ]
