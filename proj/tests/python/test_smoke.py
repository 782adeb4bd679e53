"""Smoke tests for the snchar extension module."""

import pytest

import snchar


def test_partition_basics():
    assert snchar.conjugate([4, 3, 1]) == (3, 2, 2, 1)
    assert snchar.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert snchar.partition_count(100) == 190569292
    assert snchar.hook_length([4, 3, 1], 1, 1) == 6
    d = snchar.principal_hook_data([4, 3, 1])
    assert d["hooks"] == [6, 2]
    assert d["content_sums"] == [4, 1]


def test_frobenius_round_trip():
    arms, legs = snchar.to_frobenius([4, 3, 1])
    assert arms == [3, 1] and legs == [2, 0]
    assert snchar.from_frobenius(arms, legs) == (4, 3, 1)
    with pytest.raises(ValueError):
        snchar.from_frobenius([1, 1], [1, 0])


def test_character_values():
    assert snchar.character_value([2, 1], [3]) == -1
    assert snchar.degree([4, 3, 1]) == 70
    assert snchar.xi_values(4, [2, 2]) == [1, -1, -1, 1]
    assert snchar.centralizer_order([2, 2]) == 8
    # a degree beyond 64 bits must cross the boundary exactly
    big = snchar.degree([20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1])
    assert big > 2**64
    assert big == _staircase_degree_oracle()


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _staircase_degree_oracle():
    # hook-length product of the staircase (20, 19, ..., 1), computed in python
    lam = list(range(20, 0, -1))
    conj = [sum(1 for p in lam if p >= j + 1) for j in range(lam[0])]
    product = 1
    for i, row in enumerate(lam):
        for j in range(row):
            product *= row - j + conj[j] - (i + 1)
    return _factorial(210) // product


def test_character_table():
    t = snchar.character_table(5)
    assert t["rows"][0] == (5,)
    identity = t["cols"].index((1, 1, 1, 1, 1))
    assert [row[identity] for row in t["values"]] == [1, 4, 5, 6, 5, 4, 1]


def test_identification():
    out = snchar.identify_character_of([4, 3, 1])
    assert out["irreducible"] and out["partition"] == (4, 3, 1)
    assert out["queries"] == 6

    red = snchar.identify_character_sum(3, [[2, 1], [3]])
    assert not red["irreducible"]
    assert red["symbol"]["weight"] == 2


def test_identification_via_callback():
    calls = []

    def oracle(mu):
        calls.append(mu)
        return snchar.character_value([5, 2, 1], mu)

    out = snchar.identify_character(8, oracle)
    assert out["partition"] == (5, 2, 1)
    assert len(calls) == out["queries"] <= 8


def test_class_reconstruction():
    assert snchar.class_from_xi_prefix(4, [1, -1]) == (2, 2)
    for nu in [(6, 3, 1), (5, 5), (4, 3, 2, 1), (10,), (1,) * 10]:
        n = sum(nu)
        assert snchar.class_from_xi_prefix(n, snchar.xi_prefix(list(nu))) == nu
    with pytest.raises(ValueError):
        snchar.class_from_xi_prefix(9, [5, 0, 0, 0])


def test_game():
    g = snchar.play_game(8, seed=5)
    assert g["ok"]
    assert g["uncovered"] <= g["bound"]
    assert sorted(g["row_labels"]) == sorted(snchar.partitions(8))
    with pytest.raises(ValueError):
        snchar.play_game(4)
