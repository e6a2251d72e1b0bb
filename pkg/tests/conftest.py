"""Shared brute-force oracles, kept deliberately naive and independent
of the library code paths they are used to check."""

import itertools

import pytest

from kunzlab import Word


def naive_members(gens, limit):
    """Everything below ``limit`` reachable as a sum of generators, by
    fixpoint iteration over an explicit set."""
    members = {0}
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for g in gens:
                s = a + g
                if s <= limit and s not in members:
                    members.add(s)
                    changed = True
    return members


def naive_conductor(gens, limit):
    """Last gap + 1, read off a membership table wide enough to be sure."""
    members = naive_members(gens, limit)
    gaps = [x for x in range(limit + 1) if x not in members]
    return gaps[-1] + 1 if gaps else 0


def kunz_tuple_ok(t):
    """The three inequality families a Kunz coordinates tuple satisfies,
    checked straight from the definition with m = len(t) + 1."""
    m = len(t) + 1
    if any(x < 1 for x in t):
        return False
    for i in range(1, m):
        for j in range(i, m):
            if i + j < m and t[i - 1] + t[j - 1] < t[i + j - 1]:
                return False
            if i + j > m and t[i - 1] + t[j - 1] + 1 < t[i + j - m - 1]:
                return False
    return True


def all_words(alphabet, max_len):
    for length in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield Word(letters)


@pytest.fixture(scope="session")
def k3_machine():
    from kunzlab.lba import build_k3_machine

    return build_k3_machine()


@pytest.fixture(scope="session")
def k4_machine():
    from kunzlab.lba import build_kn_machine

    return build_kn_machine(4)
