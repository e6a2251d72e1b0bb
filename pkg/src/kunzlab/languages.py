"""The depth-q word languages: recognizers, censuses and finite
replays of the classification experiments.

K_q is the set of Kunz words over {1,...,q} whose largest letter is
exactly q.  For q <= 2 the language is regular and tiny machines below
recognize it.  For q >= 3 no finite automaton can: this module produces
the concrete distinguishability and pumping evidence for that, one
finite, re-checkable certificate at a time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Mapping

from .errors import (
    DomainError,
    InvalidDecomposition,
    LetterOutOfAlphabet,
    NoRefutation,
    ResourceBound,
)
from .words import Word, is_kunz, witness_kunz, witness_nonkunz

DEFAULT_CANDIDATE_CEILING = 10_000_000


@dataclass(frozen=True)
class Dfa:
    """Deterministic finite accepter over a set of integer letters."""

    states: frozenset[int]
    alphabet: frozenset[int]
    transition: Mapping[tuple[int, int], int]
    start: int
    accepting: frozenset[int]

    def __post_init__(self):
        if self.start not in self.states:
            raise DomainError("start state unknown")
        if not self.accepting <= self.states:
            raise DomainError("accepting states unknown")
        for state in self.states:
            for letter in self.alphabet:
                target = self.transition.get((state, letter))
                if target not in self.states:
                    raise DomainError(
                        f"transition not total at ({state}, {letter})"
                    )


def dfa_k1() -> Dfa:
    """Recognizer for K_1 = {1}+ (at least one letter, all of them 1)."""
    return Dfa(
        states=frozenset({0, 1}),
        alphabet=frozenset({1}),
        transition={(0, 1): 1, (1, 1): 1},
        start=0,
        accepting=frozenset({1}),
    )


def dfa_k2() -> Dfa:
    """Two-state recognizer for K_2: words over {1, 2} containing a 2."""
    return Dfa(
        states=frozenset({0, 1}),
        alphabet=frozenset({1, 2}),
        transition={(0, 1): 0, (0, 2): 1, (1, 1): 1, (1, 2): 1},
        start=0,
        accepting=frozenset({1}),
    )


def dfa_accepts(dfa: Dfa, word: Word) -> bool:
    state = dfa.start
    for letter in word:
        if letter not in dfa.alphabet:
            raise LetterOutOfAlphabet(f"letter {letter} not in {sorted(dfa.alphabet)}")
        state = dfa.transition[(state, letter)]
    return state in dfa.accepting


def in_kunz_language(word: Word, q: int) -> bool:
    """Membership in K_q: Kunz conditions plus largest letter exactly q."""
    return word.depth == q and is_kunz(word)


def enumerate_kunz(
    q: int,
    length: int,
    *,
    max_candidates: int = DEFAULT_CANDIDATE_CEILING,
) -> list[Word]:
    """All words of K_q of the given length, in lexicographic order.

    Plain generate-and-test over {1..q}^length against the Kunz scan;
    the second condition depends on the final length, so prefix pruning
    is deliberately not attempted here.
    """
    if q < 0 or length < 0:
        raise DomainError("depth and length must be nonnegative")
    if q == 0:
        return [Word(())] if length == 0 else []
    candidates = q**length
    if candidates > max_candidates:
        raise ResourceBound(
            f"{candidates} candidate words exceed the ceiling {max_candidates}"
        )
    out = []
    for letters in itertools.product(range(1, q + 1), repeat=length):
        if max(letters, default=0) != q:
            continue
        word = Word(letters)
        if is_kunz(word):
            out.append(word)
    return out


def count_kunz(q: int, length: int, *, max_candidates: int = DEFAULT_CANDIDATE_CEILING) -> int:
    return len(enumerate_kunz(q, length, max_candidates=max_candidates))


# ---------------------------------------------------------------------------
# Distinguishability: no finite accepter handles K_q for q >= 3


@dataclass(frozen=True)
class NerodeSeparation:
    """Prefixes 1^i and 1^j told apart by one suffix.

    Appending ``suffix`` to 1^i lands inside K_q, appending it to 1^j
    lands outside; any accepter must therefore keep the two prefixes in
    different states.
    """

    i: int
    j: int
    suffix: Word
    member_i: bool
    member_j: bool

    def to_json_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "suffix": str(self.suffix),
            "member_i": self.member_i,
            "member_j": self.member_j,
        }


@dataclass(frozen=True)
class NerodeReport:
    depth: int
    cutoff: int
    separations: tuple[NerodeSeparation, ...]

    def to_json_list(self) -> list[dict]:
        return [s.to_json_dict() for s in self.separations]


def nerode_evidence(q: int, cutoff: int) -> NerodeReport:
    """Pairwise separations of the prefixes 1^1 .. 1^cutoff for K_q.

    For i < j the suffix 2^i 3^i ... (q-1)^i q works: 1^i followed by it
    is the block witness word (in K_q), while 1^j followed by it pads the
    leading block and breaks the first Kunz condition.  Every separation
    is re-verified through the membership scan before being reported, so
    the report doubles as a machine-checked lower bound: more than
    ``cutoff`` accepter states are needed at this cutoff.
    """
    if q < 3:
        raise DomainError("K_0, K_1, K_2 are regular; need q >= 3")
    if cutoff < 2:
        raise DomainError("need at least two prefixes to separate")
    separations = []
    for i in range(1, cutoff + 1):
        suffix = Word(witness_kunz(q, i).letters[i:])
        for j in range(i + 1, cutoff + 1):
            word_i = Word((1,) * i) + suffix
            word_j = Word((1,) * j) + suffix
            member_i = in_kunz_language(word_i, q)
            member_j = in_kunz_language(word_j, q)
            if not member_i or member_j:
                raise AssertionError(
                    f"separation for ({i}, {j}) failed re-verification"
                )
            separations.append(
                NerodeSeparation(i=i, j=j, suffix=suffix,
                                 member_i=member_i, member_j=member_j)
            )
    return NerodeReport(depth=q, cutoff=cutoff, separations=tuple(separations))


# ---------------------------------------------------------------------------
# Pumping with distinguished and excluded positions: K_q is not
# context-free for q >= 5


@dataclass(frozen=True)
class Decomposition:
    """Cut points 0 <= c1 <= c2 <= c3 <= c4 <= l splitting a word into
    u = w[:c1], v = w[c1:c2], x = w[c2:c3], y = w[c3:c4], z = w[c4:]."""

    cuts: tuple[int, int, int, int]

    def __post_init__(self):
        c1, c2, c3, c4 = self.cuts
        if not (0 <= c1 <= c2 <= c3 <= c4):
            raise InvalidDecomposition(f"cuts {self.cuts} are not ascending")

    def parts(self, word: Word) -> tuple[Word, Word, Word, Word, Word]:
        c1, c2, c3, c4 = self.cuts
        if c4 > len(word):
            raise InvalidDecomposition(
                f"cuts {self.cuts} overrun a word of length {len(word)}"
            )
        letters = word.letters
        return (
            Word(letters[:c1]),
            Word(letters[c1:c2]),
            Word(letters[c2:c3]),
            Word(letters[c3:c4]),
            Word(letters[c4:]),
        )


@dataclass(frozen=True)
class PositionMarking:
    """Disjoint sets of 1-based positions: distinguished and excluded."""

    distinguished: frozenset[int]
    excluded: frozenset[int]

    def __post_init__(self):
        if self.distinguished & self.excluded:
            raise DomainError("distinguished and excluded positions overlap")
        for pos in self.distinguished | self.excluded:
            if pos < 1:
                raise DomainError("positions are 1-based")

    def count_in(self, lo: int, hi: int) -> tuple[int, int]:
        """(distinguished, excluded) counts among positions lo+1 .. hi."""
        d = sum(1 for p in self.distinguished if lo < p <= hi)
        e = sum(1 for p in self.excluded if lo < p <= hi)
        return d, e


def pump(word: Word, decomposition: Decomposition, k: int) -> Word:
    """u v^k x y^k z.  k = 1 reproduces the word itself."""
    if k < 0:
        raise DomainError("pumping count must be >= 0")
    u, v, x, y, z = decomposition.parts(word)
    return Word(u.letters + v.letters * k + x.letters + y.letters * k + z.letters)


@dataclass(frozen=True)
class RefutationRecord:
    decomposition: Decomposition
    d_vy: int
    e_vy: int
    d_vxy: int
    e_vxy: int
    k: int | None
    pumped: Word | None
    reason: str | None  # "not_kunz" | "wrong_depth" | None when unrefuted

    def to_json_dict(self) -> dict:
        return {
            "cuts": list(self.decomposition.cuts),
            "d_vy": self.d_vy,
            "e_vy": self.e_vy,
            "d_vxy": self.d_vxy,
            "e_vxy": self.e_vxy,
            "k": self.k,
            "pumped": None if self.pumped is None else str(self.pumped),
            "reason": self.reason if self.reason is not None else "unrefuted",
        }


@dataclass(frozen=True)
class RefutationReport:
    depth: int
    p: int
    k_max: int
    word: Word
    marking: PositionMarking
    records: tuple[RefutationRecord, ...]

    @property
    def unrefuted(self) -> tuple[RefutationRecord, ...]:
        return tuple(r for r in self.records if r.k is None)

    @property
    def all_refuted(self) -> bool:
        return not self.unrefuted

    def to_json_list(self) -> list[dict]:
        return [r.to_json_dict() for r in self.records]


def mark_for_refutation(word: Word, q: int) -> PositionMarking:
    """Distinguish every 1; exclude the first occurrence of each letter
    2..q.  This is the marking the pumping experiment runs under."""
    distinguished = frozenset(
        pos for pos, letter in enumerate(word.letters, start=1) if letter == 1
    )
    excluded = set()
    seen: set[int] = set()
    for pos, letter in enumerate(word.letters, start=1):
        if letter >= 2 and letter not in seen:
            seen.add(letter)
            excluded.add(pos)
    if seen != set(range(2, q + 1)):
        raise DomainError(f"word does not contain each of 2..{q}")
    return PositionMarking(distinguished=distinguished, excluded=frozenset(excluded))


def bader_moura_refute(
    q: int,
    p: int,
    k_max: int,
    *,
    max_candidates: int = DEFAULT_CANDIDATE_CEILING,
) -> RefutationReport:
    """Exhaustively refute the marked pumping property for K_q at
    parameter p.

    The witness word is 1^n 2^n ... (q-1)^n q with n = p^q + 1, marked by
    mark_for_refutation; then d(w) = n exceeds p^(e(w)+1) = p^q, so a
    context-free K_q would admit a decomposition w = uvxyz with

        1. d(vy) >= 1 and e(vy) = 0,
        2. d(vxy) <= p^(e(vxy)+1),
        3. u v^k x y^k z in K_q for every k >= 0.

    Every decomposition satisfying 1-2 is enumerated and attacked with
    k = 0..k_max, counting a pumped word as outside K_q when it fails the
    Kunz scan or its largest letter is not q.  If any decomposition
    survives, NoRefutation is raised carrying the full report.

    q = 3 and q = 4 are refused: pumping 2s cannot hurt a word whose
    letters never exceed 4, so this experiment is only meaningful from
    q = 5 up.
    """
    if q < 5:
        raise DomainError("the pumping experiment needs q >= 5")
    if p < 1:
        raise DomainError("p must be >= 1")
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    n = p**q + 1
    word = witness_kunz(q, n)
    length = len(word)
    total = comb(length + 4, 4)
    if total > max_candidates:
        raise ResourceBound(
            f"{total} decompositions exceed the ceiling {max_candidates}"
        )
    marking = mark_for_refutation(word, q)
    if len(marking.distinguished) <= p ** (len(marking.excluded) + 1):
        raise AssertionError("marked word does not trigger the pumping property")

    records = []
    for cuts in itertools.combinations_with_replacement(range(length + 1), 4):
        c1, c2, c3, c4 = cuts
        d_v, e_v = marking.count_in(c1, c2)
        d_y, e_y = marking.count_in(c3, c4)
        if d_v + d_y < 1 or e_v + e_y != 0:
            continue
        d_vxy, e_vxy = marking.count_in(c1, c4)
        if d_vxy > p ** (e_vxy + 1):
            continue
        decomposition = Decomposition(cuts=cuts)
        found: tuple[int, Word, str] | None = None
        for k in range(k_max + 1):
            pumped = pump(word, decomposition, k)
            if not is_kunz(pumped):
                found = (k, pumped, "not_kunz")
                break
            if pumped.depth != q:
                found = (k, pumped, "wrong_depth")
                break
        records.append(
            RefutationRecord(
                decomposition=decomposition,
                d_vy=d_v + d_y,
                e_vy=e_v + e_y,
                d_vxy=d_vxy,
                e_vxy=e_vxy,
                k=found[0] if found else None,
                pumped=found[1] if found else None,
                reason=found[2] if found else None,
            )
        )

    report = RefutationReport(
        depth=q, p=p, k_max=k_max, word=word, marking=marking,
        records=tuple(records),
    )
    if not report.all_refuted:
        raise NoRefutation(report)
    return report
