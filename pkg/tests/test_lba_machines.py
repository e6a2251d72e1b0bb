import itertools

import pytest

from kunzlab import (
    DomainError,
    LetterOutOfAlphabet,
    StepBudgetExceeded,
    Word,
    in_kunz_language,
)
from kunzlab.lba import build_kn_machine, run


@pytest.mark.parametrize(
    "letters,verdict",
    [
        ((1, 2, 3), "accept"),
        ((1, 1, 2, 3), "reject"),
        ((1, 1, 1), "reject"),   # no 3 at all
        ((), "reject"),
        ((3,), "accept"),
        ((2, 3), "accept"),
        ((1, 3), "reject"),      # 1+1 targets the 3
        ((3, 1), "accept"),
    ],
)
def test_k3_examples(k3_machine, letters, verdict):
    assert run(k3_machine, Word(letters)).verdict == verdict


def test_k3_oracle_sweep(k3_machine):
    for length in range(0, 7):
        for letters in itertools.product((1, 2, 3), repeat=length):
            word = Word(letters)
            assert run(k3_machine, word).accepted == in_kunz_language(word, 3)


@pytest.mark.parametrize(
    "letters,verdict",
    [
        ((2, 3, 4, 4), "accept"),
        ((1, 1, 4), "reject"),
        ((4,), "accept"),
        ((4, 1, 1), "reject"),   # shifted condition: 1+1+1 < 4 at cell 1
        ((), "reject"),
    ],
)
def test_k4_examples(k4_machine, letters, verdict):
    assert run(k4_machine, Word(letters)).verdict == verdict


def test_k4_oracle_sweep(k4_machine):
    for length in range(0, 5):
        for letters in itertools.product((1, 2, 3, 4), repeat=length):
            word = Word(letters)
            assert run(k4_machine, word).accepted == in_kunz_language(word, 4)


def test_generic_k3_agrees_with_special_machine(k3_machine):
    generic = build_kn_machine(3)
    for length in range(0, 6):
        for letters in itertools.product((1, 2, 3), repeat=length):
            word = Word(letters)
            assert run(generic, word).verdict == run(k3_machine, word).verdict


def test_kn_needs_depth_three():
    with pytest.raises(DomainError):
        build_kn_machine(2)


def test_k5_machine_on_witness_words():
    from kunzlab import witness_kunz, witness_nonkunz

    m5 = build_kn_machine(5)
    assert run(m5, witness_kunz(5, 2)).accepted
    assert not run(m5, witness_nonkunz(5, 2, 1)).accepted
    assert not run(m5, Word((1, 2, 3, 4))).accepted  # depth 4, not 5


def test_k3_letter_out_of_alphabet(k3_machine):
    with pytest.raises(LetterOutOfAlphabet):
        run(k3_machine, Word((1, 4)))


def test_k3_step_budget_surfaces(k3_machine):
    with pytest.raises(StepBudgetExceeded):
        run(k3_machine, Word((1, 2, 3)), max_steps=5)


def test_k3_cells_formula(k3_machine):
    # every run sweeps the whole input, so five tracks over l+1 positions
    for letters in [(3,), (1, 2, 3), (2, 2, 3), (1, 1, 2, 3)]:
        result = run(k3_machine, Word(letters))
        assert result.cells_used == 5 * (len(letters) + 1)


def test_k3_tape_bound_long_inputs(k3_machine):
    for length in (10, 17, 25):
        for word in _stress_words(length, 3):
            result = run(k3_machine, word)
            assert result.cells_used < 6 * length


def test_k4_tape_bound_long_inputs(k4_machine):
    for length in (10, 15, 20):
        for word in _stress_words(length, 4):
            result = run(k4_machine, word)
            assert result.cells_used <= 8 * length


def _stress_words(length, top):
    yield Word((top,) + (1,) * (length - 1))
    yield Word((1,) * (length - 1) + (top,))
    yield Word((2,) * (length - 1) + (top,))
    yield Word(tuple((i % top) + 1 for i in range(length - 1)) + (top,))


@pytest.mark.parametrize("letters", [(1, 1, 2, 2, 3), (1, 2, 1, 2, 3),
                                     (3, 1, 1, 1)])
def test_k3_restart_bookkeeping(k3_machine, letters):
    """At each return to the crossing scan, tracks 2 and 3 both spell the
    index of the rightmost x, track 4 is clean, and no y marks remain."""
    result = run(k3_machine, Word(letters), want_trace=True)
    boundaries = [e for e in result.trace if e.macro == "step7.atx"]
    assert boundaries, "expected at least one x advance"
    for entry in boundaries:
        t1, t2, t3, t4, t5 = entry.tracks
        x_pos = t1.rindex("x")
        prefix = "[" + "1" * x_pos
        assert t2.startswith(prefix) and "1" not in t2[x_pos + 1:-1]
        assert t3 == t2
        assert set(t4) == {"[", "_", "]"}
        assert "y" not in t1


def test_fixed_seed_fuzz_beyond_sweep_lengths(k3_machine, k4_machine):
    import random

    rng = random.Random(20240817)
    for _ in range(250):
        length = rng.randint(9, 14)
        word = Word(tuple(rng.randint(1, 3) for _ in range(length)))
        assert run(k3_machine, word).accepted == in_kunz_language(word, 3)
    for _ in range(250):
        length = rng.randint(6, 12)
        word = Word(tuple(rng.randint(1, 4) for _ in range(length)))
        assert run(k4_machine, word).accepted == in_kunz_language(word, 4)


def test_k3_trace_is_step_shaped(k3_machine):
    result = run(k3_machine, Word((1, 2, 3)), want_trace=True)
    assert len(result.trace) == result.steps
    assert result.trace[0].macro == "step1.mark"
    macros = {e.macro.split(".")[0] for e in result.trace}
    assert "step1" in macros and "step3" in macros


def test_k3_long_trace_truncates(k3_machine):
    word = Word((3,) + (1,) * 25)
    result = run(k3_machine, word, want_trace=True)
    assert result.trace_truncated
    assert len(result.trace) == 10_000
