import pytest

from kunzlab import (
    Decomposition,
    Dfa,
    DomainError,
    InvalidDecomposition,
    LetterOutOfAlphabet,
    NoRefutation,
    ResourceBound,
    Word,
    bader_moura_refute,
    count_kunz,
    dfa_accepts,
    dfa_k1,
    dfa_k2,
    enumerate_kunz,
    in_kunz_language,
    is_kunz,
    mark_for_refutation,
    nerode_evidence,
    pump,
    witness_kunz,
)
from conftest import all_words


def test_dfa_k2_examples():
    d = dfa_k2()
    assert dfa_accepts(d, Word((1, 2, 1)))
    assert not dfa_accepts(d, Word((1, 1, 1)))
    assert dfa_accepts(d, Word((2,)))
    assert not dfa_accepts(d, Word(()))


def test_dfa_k1_examples():
    d = dfa_k1()
    assert not dfa_accepts(d, Word(()))
    assert dfa_accepts(d, Word((1,)))
    assert dfa_accepts(d, Word((1, 1)))


def test_dfa_letter_out_of_alphabet():
    with pytest.raises(LetterOutOfAlphabet):
        dfa_accepts(dfa_k2(), Word((1, 3)))


def test_dfa_validation():
    with pytest.raises(DomainError):
        Dfa(states=frozenset({0}), alphabet=frozenset({1}), transition={},
            start=0, accepting=frozenset())
    with pytest.raises(DomainError):
        Dfa(states=frozenset({0}), alphabet=frozenset({1}),
            transition={(0, 1): 0}, start=1, accepting=frozenset())


def test_dfa_k2_equals_membership_oracle():
    d = dfa_k2()
    for w in all_words((1, 2), 9):
        assert dfa_accepts(d, w) == in_kunz_language(w, 2)


def test_dfa_k1_equals_membership_oracle():
    d = dfa_k1()
    for w in all_words((1,), 9):
        assert dfa_accepts(d, w) == (len(w) >= 1) == in_kunz_language(w, 1)


def test_enumerate_kunz_examples():
    assert count_kunz(2, 3) == 7
    assert [w.letters for w in enumerate_kunz(3, 2)] == [
        (2, 3), (3, 1), (3, 2), (3, 3)]
    assert [w.letters for w in enumerate_kunz(1, 4)] == [(1, 1, 1, 1)]


def test_enumerate_kunz_edge_cases():
    assert enumerate_kunz(0, 0) == [Word(())]
    assert enumerate_kunz(0, 3) == []
    assert count_kunz(0, 0) == 1
    assert count_kunz(5, 0) == 0
    with pytest.raises(DomainError):
        enumerate_kunz(-1, 2)


def test_enumerate_kunz_properties():
    for q in (1, 2, 3):
        for length in range(0, 6):
            words = enumerate_kunz(q, length)
            assert words == sorted(words, key=lambda w: w.letters)
            for w in words:
                assert is_kunz(w)
                assert w.depth == q


def test_count_kunz_depth2_closed_form():
    for length in range(1, 11):
        assert count_kunz(2, length) == 2**length - 1


def test_enumerate_resource_bound():
    with pytest.raises(ResourceBound):
        enumerate_kunz(3, 4, max_candidates=50)


def test_nerode_small():
    report = nerode_evidence(3, 3)
    assert len(report.separations) == 3
    pairs = {(s.i, s.j) for s in report.separations}
    assert pairs == {(1, 2), (1, 3), (2, 3)}
    first = report.separations[0]
    assert first.suffix == Word((2, 3))
    assert first.member_i and not first.member_j


def test_nerode_depth4_example():
    [sep] = nerode_evidence(4, 2).separations
    assert sep.suffix == Word((2, 3, 4))
    assert Word((1,) + sep.suffix.letters) == Word((1, 2, 3, 4))


@pytest.mark.parametrize("cutoff", [2, 4, 6])
def test_nerode_counts(cutoff):
    report = nerode_evidence(3, cutoff)
    assert len(report.separations) == cutoff * (cutoff - 1) // 2


def test_nerode_rejects_regular_depths():
    with pytest.raises(DomainError):
        nerode_evidence(2, 5)
    with pytest.raises(DomainError):
        nerode_evidence(3, 1)


def test_pump_examples():
    w = Word((1, 2, 3))
    d = Decomposition(cuts=(0, 1, 1, 2))  # v = (1), y = (2)
    assert pump(w, d, 1) == w
    assert pump(w, d, 2) == Word((1, 1, 2, 2, 3))
    d = Decomposition(cuts=(0, 1, 2, 2))  # v = (1), y empty
    assert pump(w, d, 3) == Word((1, 1, 1, 2, 3))


def test_pump_length_identity():
    w = witness_kunz(4, 2)
    length = len(w)
    for c1 in range(length + 1):
        for c2 in range(c1, length + 1):
            d = Decomposition(cuts=(c1, c2, c2, length))
            u, v, x, y, z = d.parts(w)
            for k in (0, 1, 2, 3):
                assert len(pump(w, d, k)) == length + (k - 1) * (len(v) + len(y))


def test_pump_validation():
    w = Word((1, 2, 3))
    with pytest.raises(InvalidDecomposition):
        Decomposition(cuts=(2, 1, 2, 3))
    with pytest.raises(InvalidDecomposition):
        pump(w, Decomposition(cuts=(0, 1, 2, 7)), 1)
    with pytest.raises(DomainError):
        pump(w, Decomposition(cuts=(0, 1, 1, 2)), -1)


def test_marking_of_witness():
    w = witness_kunz(5, 2)  # 1 1 2 2 3 3 4 4 5
    marking = mark_for_refutation(w, 5)
    assert marking.distinguished == frozenset({1, 2})
    assert marking.excluded == frozenset({3, 5, 7, 9})


def test_refute_q5():
    report = bader_moura_refute(5, 1, 4)
    assert report.word == witness_kunz(5, 2)
    assert len(report.marking.distinguished) == 2
    assert len(report.marking.excluded) == 4
    # the marked word does trigger the property: d(w) = 2 > 1^(4+1)
    assert len(report.marking.distinguished) > 1 ** (len(report.marking.excluded) + 1)
    assert report.records  # some decompositions satisfy conditions 1-2
    assert report.all_refuted
    for record in report.records:
        assert record.d_vy >= 1 and record.e_vy == 0
        assert record.d_vxy <= 1 ** (record.e_vxy + 1)
        assert record.k is not None and record.k <= 4
        pumped = pump(report.word, record.decomposition, record.k)
        assert not in_kunz_language(pumped, 5)


def test_refute_q6():
    report = bader_moura_refute(6, 1, 4)
    assert report.all_refuted


def test_refute_refuses_small_depths():
    with pytest.raises(DomainError):
        bader_moura_refute(4, 1, 4)
    with pytest.raises(DomainError):
        bader_moura_refute(3, 1, 4)


def test_refute_resource_bound():
    with pytest.raises(ResourceBound):
        bader_moura_refute(5, 1, 4, max_candidates=100)


def test_refute_surfaces_survivors():
    # k = 0 and k = 1 alone cannot kill every decomposition
    with pytest.raises(NoRefutation) as exc_info:
        bader_moura_refute(5, 1, 1)
    report = exc_info.value.report
    assert report.unrefuted
    assert any(r.k is None for r in report.records)
