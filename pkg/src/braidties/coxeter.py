r"""Type-A Weyl group combinatorics.

Permutations of $\{1,\dots,m\}$ are stored in one-line notation as tuples
`w = (w(1), ..., w(m))`, with composition `(w*u)(i) = w(u(i))`.  The simple
reflection $s_i$ swaps $i$ and $i+1$; right multiplication by $s_i$ swaps
the entries in positions $i, i+1$, so $i$ is a right descent of $w$ exactly
when $w(i) > w(i+1)$.

Set partitions of $\{1,\dots,m\}$ (canonical form: blocks sorted, ordered by
their minima) index both the tie idempotents $e_R$ and the reflection
subgroups of $S_m$.

Subsets $I \subseteq \{1,\dots,n\}$ of simple reflections decompose into
maximal runs of consecutive entries ("contiguous blocks"); the run lengths,
sorted decreasingly, form the partition $\lambda^I$.  Three counting
functions attach to $I$:

- $N_I$: the order of the normalizer of the Young subgroup $W_I$ in
  $S_{n+1}$, by Howlett's closed formula
  $N_I = \big(n+1-\sum_i (i+1)n_i\big)!\,\prod_i n_i!\,((i+1)!)^{n_i}$
  where $n_i$ counts runs of length $i$;
- $R_I = (n+1)!/N_I$, the number of reflection subgroups conjugate to
  $W_I$, equivalently the number of set partitions of $\{1,\dots,n+1\}$
  whose non-singleton block sizes are $\{\lambda^I_i + 1\}$;
- $D_I$: the number of $w \in S_{n+1}$ having a right descent in every
  contiguous block of $I$, by inclusion-exclusion
  $D_I = \sum_{T} (-1)^{|T|} (n+1)!/\prod_{i \in T}(\lambda_i+1)!$
  over subsets $T$ of block positions, which factorizes as
  $(n+1)!\prod_i \big(1 - 1/(\lambda_i+1)!\big)$.

The dimension of the braid-generated subalgebra is
$\sum_{\lambda \in P(n)} R_\lambda D_\lambda$, summed over the *distinct*
partitions $\lambda$ realizable by such subsets (each conjugacy class of
reflection subgroups counted once); $P(n)$ is the set of partitions
$\lambda = (\lambda_1 \geq \dots \geq \lambda_k)$ with
$\sum \lambda_i + k - 1 \leq n$.

>>> length_descents((3, 2, 1))
(3, frozenset({1, 2}))
>>> dim_C(3, "subset-enumeration")
217
>>> d_subset(4, frozenset({1, 2, 4}))
50
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

Perm = tuple[int, ...]
SetPartition = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def identity_perm(m: int) -> Perm:
    return tuple(range(1, m + 1))

def all_perms(m: int) -> list[Perm]:
    """All of S_m in lexicographic one-line order."""
    return [tuple(p) for p in itertools.permutations(range(1, m + 1))]

def perm_mul(a: Perm, b: Perm) -> Perm:
    """(a*b)(i) = a(b(i))."""
    return tuple(a[x - 1] for x in b)

def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x - 1] = i + 1
    return tuple(out)

def perm_length(w: Perm) -> int:
    """Inversion count."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

def right_descents(w: Perm) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

def length_descents(w: Perm) -> tuple[int, frozenset[int]]:
    """(l(w), { i : l(w s_i) < l(w) }).

    >>> length_descents((2, 1, 4, 3))
    (2, frozenset({1, 3}))
    """
    return perm_length(w), right_descents(w)

def simple_perm(i: int, m: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1) in S_m."""
    if not 1 <= i < m:
        raise ValueError(f"s_{i} not defined in S_{m}")
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)

def transposition_perm(i: int, j: int, m: int) -> Perm:
    w = list(range(1, m + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)

def all_reflections(m: int) -> list[tuple[int, int]]:
    """Transpositions (i, j), i < j, of S_m."""
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]

def reduced_word(w: Perm) -> Word:
    """A reduced word for w (smallest right descent first peeled).

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> reduced_word(identity_perm(4))
    ()
    """
    word: list[int] = []
    w = list(w)
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))

def perm_from_word(word: Word, m: int) -> Perm:
    w = identity_perm(m)
    for i in word:
        w = perm_mul(w, simple_perm(i, m))
    return w


# ---------------------------------------------------------------------------
# Bruhat order
# ---------------------------------------------------------------------------

def bruhat_leq(x: Perm, w: Perm) -> bool:
    """x <= w in Bruhat order, by the rank-matrix criterion:
    for all i, j: #{a <= i : x(a) >= j} <= #{a <= i : w(a) >= j}.

    >>> bruhat_leq((1, 3, 2), (3, 2, 1))
    True
    >>> bruhat_leq((3, 2, 1), (1, 3, 2))
    False
    """
    m = len(x)
    if len(w) != m:
        raise ValueError("mixing symmetric groups")
    cx = [0] * (m + 2)
    cw = [0] * (m + 2)
    for i in range(m):
        # prefix length i+1; update counts-of-values >= j incrementally
        for j in range(1, x[i] + 1):
            cx[j] += 1
        for j in range(1, w[i] + 1):
            cw[j] += 1
        for j in range(1, m + 1):
            if cx[j] > cw[j]:
                return False
    return True

def bruhat_leq_bruteforce(x: Perm, w: Perm) -> bool:
    """Subword-property oracle: x <= w iff x is a product of some
    subsequence of one fixed reduced word of w. Exponential; tests only."""
    m = len(x)
    word = reduced_word(w)
    seen = set()
    for mask in range(1 << len(word)):
        u = identity_perm(m)
        for pos, i in enumerate(word):
            if mask >> pos & 1:
                u = perm_mul(u, simple_perm(i, m))
        seen.add(u)
    return x in seen


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

def partition_from_blocks(blocks) -> SetPartition:
    """Canonical form: each block sorted, blocks ordered by minimum."""
    canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
    seen = [x for b in canon for x in b]
    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise ValueError(f"not a partition of 1..{len(seen)}: {blocks}")
    return canon

def discrete_partition(m: int) -> SetPartition:
    return tuple((i,) for i in range(1, m + 1))

def pair_partition(i: int, j: int, m: int) -> SetPartition:
    """Singletons except for the block {i, j}."""
    return partition_from_blocks([(i, j)] + [(x,) for x in range(1, m + 1)
                                             if x != i and x != j])

def partition_join(p: SetPartition, q: SetPartition) -> SetPartition:
    """Finest common coarsening (join in the partition lattice).

    >>> partition_join(((1, 2), (3,)), ((1,), (2, 3)))
    ((1, 2, 3),)
    """
    m = sum(len(b) for b in p)
    parent = list(range(m + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blocks in (p, q):
        for b in blocks:
            for other in b[1:]:
                ra, rb = find(b[0]), find(other)
                if ra != rb:
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for x in range(1, m + 1):
        groups.setdefault(find(x), []).append(x)
    return partition_from_blocks(groups.values())

def w_action(w: Perm, p: SetPartition) -> SetPartition:
    """Relabel the ground set through w (conjugation on reflection
    subgroups: the transposition (i j) goes to (w(i) w(j)))."""
    return partition_from_blocks([tuple(w[x - 1] for x in b) for b in p])

def support_partition(w: Perm) -> SetPartition:
    """Interval partition whose blocks are the connected components of the
    support of w: points i, i+1 share a block iff the simple reflection
    s_i occurs in a reduced word of w.

    >>> support_partition((2, 1, 3, 4))
    ((1, 2), (3,), (4,))
    >>> support_partition((2, 1, 4, 3))
    ((1, 2), (3, 4))
    >>> support_partition((3, 2, 1, 4))
    ((1, 2, 3), (4,))
    """
    m = len(w)
    letters = set(reduced_word(w))
    blocks, cur = [], [1]
    for i in range(1, m):
        if i in letters:
            cur.append(i + 1)
        else:
            blocks.append(tuple(cur))
            cur = [i + 1]
    blocks.append(tuple(cur))
    return partition_from_blocks(blocks)

@lru_cache(maxsize=None)
def all_set_partitions(m: int) -> tuple[SetPartition, ...]:
    """All set partitions of {1..m}, canonical, sorted; Bell(m) of them.

    >>> len(all_set_partitions(4))
    15
    """
    if m == 0:
        return ((),)
    out = []
    for smaller in all_set_partitions(m - 1):
        out.append(partition_from_blocks(smaller + ((m,),)))
        for k in range(len(smaller)):
            blocks = list(smaller)
            blocks[k] = blocks[k] + (m,)
            out.append(partition_from_blocks(blocks))
    return tuple(sorted(out))

def bell_number(m: int) -> int:
    return len(all_set_partitions(m))

def partition_block_sizes(p: SetPartition) -> tuple[int, ...]:
    """Non-singleton block sizes, decreasing."""
    return tuple(sorted((len(b) for b in p if len(b) > 1), reverse=True))


# ---------------------------------------------------------------------------
# subsets of simple reflections and the counting functions
# ---------------------------------------------------------------------------

def subset_blocks(I) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive members of I, in increasing order.

    >>> subset_blocks({1, 2, 4})
    [(1, 2), (4,)]
    """
    members = sorted(I)
    blocks: list[list[int]] = []
    for x in members:
        if blocks and blocks[-1][-1] == x - 1:
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return [tuple(b) for b in blocks]

def subset_lambda(I) -> tuple[int, ...]:
    """Run lengths of I, weakly decreasing."""
    return tuple(sorted((len(b) for b in subset_blocks(I)), reverse=True))

def lambda_multiplicities(lam: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out

def howlett_order(n: int, I) -> int:
    """Order of the normalizer of the Young subgroup W_I in S_{n+1}:
    (n+1 - sum_i (i+1) n_i)! * prod_i n_i! ((i+1)!)^{n_i}.

    >>> howlett_order(3, {1, 3})
    8
    >>> howlett_order(2, frozenset())
    6
    >>> howlett_order(2, {1})
    2
    """
    return _howlett_order_lambda(n, subset_lambda(I))

def _howlett_order_lambda(n: int, lam: tuple[int, ...]) -> int:
    mult = lambda_multiplicities(lam)
    fixed = n + 1 - sum((i + 1) * ni for i, ni in mult.items())
    if fixed < 0:
        raise ValueError(f"partition {lam} does not fit in S_{n + 1}")
    out = factorial(fixed)
    for i, ni in mult.items():
        out *= factorial(ni) * factorial(i + 1) ** ni
    return out

def r_subset(n: int, I) -> int:
    """(n+1)!/N_I: the number of reflection subgroups conjugate to W_I."""
    return factorial(n + 1) // howlett_order(n, I)

def d_subset(n: int, I) -> int:
    """Number of w in S_{n+1} with a right descent in every contiguous
    block of I, by the factorized product form
    $(n+1)! \\prod_b (1 - 1/(|b|+1)!)$; at desk scale the raw
    inclusion-exclusion over block subsets is asserted to agree.

    >>> d_subset(4, {1, 2, 4})
    50
    >>> d_subset(3, {1, 3})
    6
    >>> d_subset(5, set()) == factorial(6)
    True
    """
    return _d_value_lambda(n, subset_lambda(I))

def _d_value_lambda(n: int, lam: tuple[int, ...]) -> int:
    total = factorial(n + 1)
    num = total
    den = 1
    for part in lam:
        f = factorial(part + 1)
        num *= f - 1
        den *= f
    assert num % den == 0, (n, lam)
    value = num // den
    k = len(lam)
    if k <= 12 and n <= 25:
        # cross-check the product form against raw inclusion-exclusion
        # whenever the 2^k sum is affordable (covers every lambda of
        # every n <= 12, and everything reachable in subset mode)
        acc = Fraction(0)
        for mask in range(1 << k):
            d = 1
            sign = 1
            for pos in range(k):
                if mask >> pos & 1:
                    d *= factorial(lam[pos] + 1)
                    sign = -sign
            acc += Fraction(sign * total, d)
        assert acc == value, (n, lam, acc, value)
    return value

def d_subset_bruteforce(n: int, I) -> int:
    """Direct enumeration of S_{n+1}; n <= 9."""
    if n > 9:
        raise ValueError("enumeration bound n <= 9 exceeded")
    blocks = subset_blocks(I)
    count = 0
    for w in itertools.permutations(range(1, n + 2)):
        if all(any(w[s - 1] > w[s] for s in b) for b in blocks):
            count += 1
    return count

def normalizer_bruteforce(n: int, I) -> int:
    """|{w : w W_I w^{-1} = W_I}| by enumeration; n <= 6.

    Conjugating the generators into W_I suffices: conjugation by a fixed w
    is an automorphism, so w W_I w^{-1} is a subgroup of W_I of the same
    order, hence equal.  Membership in the Young subgroup W_I is the
    interval test: w moves points only within the intervals spanned by the
    contiguous blocks of I.

    >>> normalizer_bruteforce(2, {1})
    2
    >>> normalizer_bruteforce(3, {1, 3})
    8
    """
    if n > 6:
        raise ValueError("enumeration bound n <= 6 exceeded")
    m = n + 1
    intervals = [set(b) | {b[-1] + 1} for b in subset_blocks(I)]
    covered = set().union(*intervals) if intervals else set()

    def in_young(u: Perm) -> bool:
        for x in range(1, m + 1):
            ux = u[x - 1]
            if x in covered:
                if not any(x in iv and ux in iv for iv in intervals):
                    return False
            elif ux != x:
                return False
        return True

    gens = [simple_perm(i, m) for i in sorted(I)]
    count = 0
    for w in itertools.permutations(range(1, m + 1)):
        wi = perm_inv(w)
        if all(in_young(perm_mul(perm_mul(w, g), wi)) for g in gens):
            count += 1
    return count


# ---------------------------------------------------------------------------
# the dimension count
# ---------------------------------------------------------------------------

def partitions_P(n: int) -> list[tuple[tuple[int, ...], int]]:
    """All partitions lambda with sum(lambda) + #parts - 1 <= n, paired
    with the number of subsets I of {1..n} realizing lambda^I = lambda:
    count = (k!/prod mult_i!) * C(n - m + 1, k) for k parts summing to m.

    >>> dict(partitions_P(1))
    {(): 1, (1,): 1}
    >>> dict(partitions_P(4))[(1, 1)]
    3
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[tuple[tuple[int, ...], int]] = []

    def descend(prefix: list[int], max_part: int, remaining: int):
        # remaining = n - sum(prefix) - (len(prefix) - 1) slots still usable
        out.append((tuple(prefix), _realizing_count(n, tuple(prefix))))
        for part in range(min(max_part, remaining), 0, -1):
            # adding a part costs part + 1 slots (gap) except for the first
            cost = part if not prefix else part + 1
            if cost <= remaining:
                descend(prefix + [part], part, remaining - cost)

    descend([], n, n)
    out.sort()
    return out

def _realizing_count(n: int, lam: tuple[int, ...]) -> int:
    k = len(lam)
    if k == 0:
        return 1
    m = sum(lam)
    mult = lambda_multiplicities(lam)
    ways = factorial(k)
    for ni in mult.values():
        ways //= factorial(ni)
    return ways * comb(n - m + 1, k)

def dim_C(n: int, mode: str = "partition-aggregation") -> int:
    """Dimension of the braid-generated subalgebra:
    sum of R_lambda * D_lambda over the distinct partitions in P(n).

    Both modes return the same number; subset-enumeration walks all 2^n
    subsets and deduplicates by lambda (n <= 20), partition-aggregation
    enumerates P(n) directly (n <= 50).

    >>> [dim_C(n) for n in range(6)]
    [1, 3, 20, 217, 3364, 71098]
    >>> dim_C(2, "subset-enumeration")
    20
    """
    if mode == "subset-enumeration":
        if n > 20:
            raise ValueError("subset-enumeration bounded at n <= 20")
        lambdas = _distinct_lambdas_by_mask(n)
    elif mode == "partition-aggregation":
        if n > 50:
            raise ValueError("partition-aggregation bounded at n <= 50")
        lambdas = [lam for lam, _ in partitions_P(n)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return sum(_r_value_lambda(n, lam) * _d_value_lambda(n, lam) for lam in lambdas)

def _r_value_lambda(n: int, lam: tuple[int, ...]) -> int:
    return factorial(n + 1) // _howlett_order_lambda(n, lam)

def _distinct_lambdas_by_mask(n: int) -> list[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    for mask in range(1 << n):
        runs = []
        run = 0
        rest = mask
        while rest:
            if rest & 1:
                run += 1
            elif run:
                runs.append(run)
                run = 0
            rest >>= 1
        if run:
            runs.append(run)
        seen.add(tuple(sorted(runs, reverse=True)))
    return sorted(seen)

@dataclass(frozen=True)
class DimensionRow:
    """One conjugacy class of parabolic subgroups: its representative
    subset (leftmost packing, decreasing run lengths), lambda, and the
    three counts (normalizer order N, class size R = (n+1)!/N, descent
    count D)."""
    subset: tuple[int, ...]
    lam: tuple[int, ...]
    normalizer_order: int
    subgroup_count: int
    descent_count: int

def canonical_subset(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Leftmost subset realizing lambda: runs in decreasing size order
    separated by single gaps.

    >>> canonical_subset((2, 1))
    (1, 2, 4)
    """
    out = []
    pos = 1
    for part in lam:
        out.extend(range(pos, pos + part))
        pos += part + 1
    return tuple(out)

def dimension_rows(n: int) -> list[DimensionRow]:
    """The per-class table behind dim_C(n), largest classes first
    (graded by lambda, reverse-lexicographic), ending with the empty set.

    >>> rows = dimension_rows(2)
    >>> [(r.subset, r.normalizer_order, r.subgroup_count, r.descent_count) for r in rows]
    [((1, 2), 6, 1, 5), ((1,), 2, 3, 3), ((), 6, 1, 6)]
    """
    rows = []
    for lam, _count in sorted(partitions_P(n), reverse=True):
        rows.append(DimensionRow(
            subset=canonical_subset(lam),
            lam=lam,
            normalizer_order=_howlett_order_lambda(n, lam),
            subgroup_count=_r_value_lambda(n, lam),
            descent_count=_d_value_lambda(n, lam),
        ))
    return rows


if __name__ == "__main__":
    import doctest
    doctest.testmod()
