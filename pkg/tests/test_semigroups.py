import pytest

from kunzlab import (
    DomainError,
    NATURALS,
    NotCofinite,
    NumericalSemigroup,
    ResourceBound,
    enumerate_semigroups,
    from_generators,
)
from conftest import kunz_tuple_ok, naive_conductor, naive_members


def test_from_generators_naturals():
    assert from_generators({1}) == NATURALS
    assert NATURALS.conductor == 0


def test_from_generators_357():
    s = from_generators({3, 5, 7})
    assert s.conductor == 5
    assert s.small_elements == (0, 3, 5)
    # independent closure oracle agrees on a wide window
    members = naive_members({3, 5, 7}, 40)
    assert all(s.contains(x) == (x in members) for x in range(41))
    assert naive_conductor({3, 5, 7}, 40) == 5


def test_from_generators_not_cofinite():
    with pytest.raises(NotCofinite):
        from_generators({2, 4})


def test_from_generators_rejects_bad_input():
    with pytest.raises(DomainError):
        from_generators(set())
    with pytest.raises(DomainError):
        from_generators({0, 3})


@pytest.mark.parametrize("gens", [{2, 3}, {4, 9, 11}, {6, 10, 15}, {5, 7}])
def test_from_generators_matches_naive_oracle(gens):
    limit = 3 * max(gens) * min(gens)
    members = naive_members(gens, limit)
    s = from_generators(gens)
    assert s.conductor == naive_conductor(gens, limit)
    for x in range(limit + 1):
        assert s.contains(x) == (x in members)


def test_contains():
    s = from_generators({3, 5, 7})
    assert not s.contains(4)
    assert s.contains(6)
    assert s.contains(0)
    assert not s.contains(-2)
    assert all(s.contains(x) for x in range(s.conductor, s.conductor + 20))


def test_multiplicity():
    assert NATURALS.multiplicity == 1
    assert from_generators({3, 5, 7}).multiplicity == 3
    assert from_generators({2, 5}).multiplicity == 2


def test_conductor_and_frobenius():
    assert (NATURALS.conductor, NATURALS.frobenius) == (0, -1)
    s = from_generators({3, 5, 7})
    assert (s.conductor, s.frobenius) == (5, 4)
    s = from_generators({2, 5})
    assert (s.conductor, s.frobenius) == (4, 3)


def test_depth():
    assert NATURALS.depth == 0
    assert from_generators({3, 5, 7}).depth == 2
    assert from_generators({2, 3}).depth == 1


def test_apery():
    assert NATURALS.apery.values == (0,)
    assert NATURALS.apery.kunz == ()
    ap = from_generators({3, 5, 7}).apery
    assert ap.values == (0, 7, 5)
    assert ap.kunz == (2, 1)
    ap = from_generators({2, 5}).apery
    assert ap.values == (0, 5)
    assert ap.kunz == (2,)


def test_genus():
    assert NATURALS.genus == 0
    assert from_generators({3, 5, 7}).genus == 3  # gaps 1, 2, 4
    assert from_generators({2, 3}).genus == 1


def test_json_dict_field_order():
    keys = list(from_generators({3, 5, 7}).to_json_dict())
    assert keys == ["small_elements", "conductor", "multiplicity", "frobenius",
                    "depth", "apery", "kunz", "genus"]


def test_constructor_validation():
    with pytest.raises(DomainError):
        NumericalSemigroup(small_elements=(1, 3), conductor=3)  # no 0
    with pytest.raises(DomainError):
        NumericalSemigroup(small_elements=(0, 3), conductor=5)  # wrong max
    with pytest.raises(DomainError):
        # 3 + 3 = 6 <= 7 missing: not closed
        NumericalSemigroup(small_elements=(0, 3, 7), conductor=7)


def test_enumerate_trivial():
    assert enumerate_semigroups(1, 0) == [NATURALS]
    assert enumerate_semigroups(1, 5) == [NATURALS]


def test_enumerate_m3_depth3_count():
    sgs = enumerate_semigroups(3, 3)
    exactly = [s for s in sgs if s.multiplicity == 3 and s.depth == 3]
    assert len(exactly) == 4


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_enumerate_m2_one_per_depth(q):
    sgs = enumerate_semigroups(2, q)
    per_depth = {}
    for s in sgs:
        if s.multiplicity == 2:
            per_depth.setdefault(s.depth, []).append(s)
    assert sorted(per_depth) == list(range(1, q + 1))
    assert all(len(v) == 1 for v in per_depth.values())


def test_enumerate_is_sorted_and_valid():
    sgs = enumerate_semigroups(5, 3)
    assert sgs == sorted(sgs, key=lambda s: s.small_elements)
    assert len(set(sgs)) == len(sgs)
    for s in sgs:
        assert s.multiplicity <= 5
        assert s.depth <= 3


def test_enumerate_resource_bound():
    with pytest.raises(ResourceBound):
        enumerate_semigroups(7, 4, search_ceiling=10)


def test_census_invariants():
    for s in enumerate_semigroups(5, 3):
        ap = s.apery
        assert max(ap.values) == s.conductor + s.multiplicity - 1
        assert s.depth == (max(ap.kunz) if ap.kunz else 0)
        assert kunz_tuple_ok(ap.kunz)


def test_regeneration_from_small_elements():
    for s in enumerate_semigroups(5, 3):
        gens = {x for x in s.small_elements if x > 0}
        gens |= {s.conductor + t for t in range(s.multiplicity)}
        gens.discard(0)
        if not gens:
            gens = {1}
        assert from_generators(gens) == s
