"""Weyl-group combinatorics and the counting functions."""

import itertools
import random
from math import factorial

import pytest

from braidties.coxeter import (
    all_perms,
    all_reflections,
    all_set_partitions,
    bell_number,
    bruhat_leq,
    bruhat_leq_bruteforce,
    canonical_subset,
    d_subset,
    d_subset_bruteforce,
    dim_C,
    dimension_rows,
    discrete_partition,
    howlett_order,
    identity_perm,
    length_descents,
    normalizer_bruteforce,
    pair_partition,
    partition_block_sizes,
    partition_from_blocks,
    partition_join,
    partitions_P,
    perm_from_word,
    perm_inv,
    perm_length,
    perm_mul,
    r_subset,
    reduced_word,
    simple_perm,
    subset_blocks,
    subset_lambda,
    transposition_perm,
    w_action,
)


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(i + 1 for i in range(n) if mask >> i & 1)


def test_length_descents_examples():
    assert length_descents(identity_perm(3)) == (0, frozenset())
    assert length_descents((3, 2, 1)) == (3, frozenset({1, 2}))
    assert length_descents((2, 1, 4, 3)) == (2, frozenset({1, 3}))


def test_perm_group_structure():
    for w in all_perms(4):
        wi = perm_inv(w)
        assert perm_mul(w, wi) == identity_perm(4)
        assert perm_length(w) == perm_length(wi)
        word = reduced_word(w)
        assert len(word) == perm_length(w)
        assert perm_from_word(word, 4) == w
    # right multiplication by s_i swaps entries i, i+1
    w = (2, 3, 1, 4)
    assert perm_mul(w, simple_perm(1, 4)) == (3, 2, 1, 4)


def test_bruhat_matches_subword_oracle():
    for m in (3, 4):
        perms = all_perms(m)
        for x in perms:
            for w in perms:
                assert bruhat_leq(x, w) == bruhat_leq_bruteforce(x, w), (x, w)


def test_bruhat_basics():
    e = identity_perm(4)
    for w in all_perms(4):
        assert bruhat_leq(e, w)
        assert bruhat_leq(w, w)
    assert not bruhat_leq((3, 2, 1), (1, 3, 2))


def test_set_partition_canonical_form():
    p = partition_from_blocks([(3, 1), (2,)])
    assert p == ((1, 3), (2,))
    with pytest.raises(ValueError):
        partition_from_blocks([(1, 2), (2, 3)])


def test_partition_join():
    assert partition_join(discrete_partition(3), ((1, 2), (3,))) == ((1, 2), (3,))
    assert partition_join(((1, 2), (3,)), ((1,), (2, 3))) == ((1, 2, 3),)
    # join is commutative, associative, idempotent (sampled)
    rng = random.Random(2)
    parts = list(all_set_partitions(5))
    for _ in range(100):
        p, q, r = rng.choice(parts), rng.choice(parts), rng.choice(parts)
        assert partition_join(p, q) == partition_join(q, p)
        assert partition_join(p, p) == p
        assert partition_join(partition_join(p, q), r) == partition_join(p, partition_join(q, r))


def test_w_action_is_conjugation_on_transpositions():
    m = 4
    for w in all_perms(m):
        for i, j in all_reflections(m):
            moved = w_action(w, pair_partition(i, j, m))
            assert moved == pair_partition(w[i - 1], w[j - 1], m)
    assert w_action(simple_perm(1, 3), ((1, 2), (3,))) == ((1, 2), (3,))


def test_bell_numbers():
    assert [bell_number(m) for m in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_subset_blocks_and_lambda():
    assert subset_blocks({1, 2, 4}) == [(1, 2), (4,)]
    assert subset_lambda({1, 2, 4}) == (2, 1)
    assert subset_lambda(set()) == ()
    assert subset_lambda({2, 3, 4, 6}) == (3, 1)


def test_howlett_against_bruteforce():
    for n in range(1, 6):
        for I in all_subsets(n):
            assert howlett_order(n, I) == normalizer_bruteforce(n, I), (n, I)


def test_howlett_examples():
    assert howlett_order(3, {1, 3}) == 8
    assert howlett_order(2, set()) == 6
    # formula value for the printed-table outlier; brute force agrees
    assert howlett_order(2, {1}) == 2
    assert normalizer_bruteforce(2, {1}) == 2


def test_d_subset_against_bruteforce():
    for n in range(1, 7):
        for I in all_subsets(n):
            assert d_subset(n, I) == d_subset_bruteforce(n, I), (n, I)


@pytest.mark.slow
def test_d_subset_against_bruteforce_n7():
    for I in all_subsets(7):
        assert d_subset(7, I) == d_subset_bruteforce(7, I), I


def test_d_subset_examples():
    assert d_subset(4, {1, 2, 4}) == 50
    assert d_subset(3, {1, 3}) == 6
    assert d_subset(2, {1}) == 3
    assert d_subset(2, {1, 2}) == 5
    assert d_subset(4, {1, 2, 3, 4}) == 119
    for n in range(6):
        assert d_subset(n, set()) == factorial(n + 1)


def test_r_subset_counts_set_partitions():
    # R_I = number of set partitions of {1..n+1} whose non-singleton
    # block sizes are the lambda parts + 1
    for n in range(1, 7):
        partitions = all_set_partitions(n + 1)
        for I in all_subsets(n):
            lam = subset_lambda(I)
            target = tuple(sorted((part + 1 for part in lam), reverse=True))
            count = sum(1 for p in partitions if partition_block_sizes(p) == target)
            assert r_subset(n, I) == count, (n, I)


def test_partitions_P():
    assert dict(partitions_P(1)) == {(): 1, (1,): 1}
    table = dict(partitions_P(4))
    assert table[(1, 1)] == 3
    assert (2, 2, 1) in dict(partitions_P(7))
    # realizing-subset counts add up to 2^n
    for n in range(13):
        assert sum(c for _, c in partitions_P(n)) == 2 ** n, n


def test_partitions_P_matches_enumeration():
    for n in range(1, 11):
        by_lambda = {}
        for I in all_subsets(n):
            lam = subset_lambda(I)
            by_lambda[lam] = by_lambda.get(lam, 0) + 1
        assert by_lambda == dict(partitions_P(n)), n


def test_dim_modes_agree():
    for n in range(13):
        assert dim_C(n, "subset-enumeration") == dim_C(n, "partition-aggregation"), n


def test_dim_known_values():
    assert dim_C(0) == 1
    assert dim_C(2) == 20
    assert dim_C(4) == 3364
    assert dim_C(12) == 47875219836485209


def test_canonical_subset():
    assert canonical_subset((2, 1)) == (1, 2, 4)
    assert canonical_subset(()) == ()
    assert canonical_subset((3,)) == (1, 2, 3)
    for n in range(1, 10):
        for lam, _ in partitions_P(n):
            assert subset_lambda(canonical_subset(lam)) == lam


def test_dimension_rows_structure():
    for n in (2, 3, 4):
        rows = dimension_rows(n)
        assert sum(r.subgroup_count * r.descent_count for r in rows) == dim_C(n)
        for r in rows:
            assert r.normalizer_order * r.subgroup_count == factorial(n + 1)
            assert r.descent_count <= factorial(n + 1)
            assert subset_lambda(r.subset) == r.lam
