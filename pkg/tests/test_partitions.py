"""Combinatorial layer: transposes, containment, cross tests, index sets."""

import itertools

import pytest

from fockdual.partitions import (
    Bipartition,
    BipartitionParseError,
    IndexSet,
    PartitionError,
    as_partition,
    conjugate,
    contains,
    enumerate_bipartitions,
    format_bipartition,
    from_index_set,
    is_cross,
    parse_bipartition,
    partitions_of,
    u_index_set,
    unmatched_indices,
    w_index_set,
)


def cells(parts):
    return {(r, c) for r, p in enumerate(parts) for c in range(p)}


def transpose_by_cells(parts):
    """Independent oracle: flip the cell set and read off row lengths."""
    flipped = {(c, r) for r, c in cells(parts)}
    rows = {}
    for r, _ in flipped:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


def count_partitions_upto(n):
    """Independent DP: p(0..n) via the bounded-part recursion."""
    table = [[0] * (n + 1) for _ in range(n + 1)]  # table[k][m]: partitions of m, parts <= k
    for k in range(n + 1):
        table[k][0] = 1
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            table[k][m] = table[k - 1][m] + (table[k][m - k] if m >= k else 0)
    return [table[n][m] for m in range(n + 1)]


def all_partitions_upto(n):
    return [p for k in range(n + 1) for p in partitions_of(k)]


@pytest.mark.parametrize(
    "parts,expected",
    [((), ()), ((3, 1), (2, 1, 1)), ((2, 1), (2, 1))],
)
def test_conjugate_examples(parts, expected):
    assert conjugate(parts) == expected


def test_conjugate_matches_cell_transpose_and_involutive():
    for parts in all_partitions_upto(12):
        assert conjugate(parts) == transpose_by_cells(parts)
        assert conjugate(conjugate(parts)) == parts


@pytest.mark.parametrize(
    "inner,outer,expected",
    [((), (2, 1), True), ((1,), (2, 1), True), ((3,), (2, 1), False)],
)
def test_contains_examples(inner, outer, expected):
    assert contains(inner, outer) is expected


def test_as_partition_rejects_bad_sequences():
    with pytest.raises(PartitionError):
        as_partition((1, 2))
    with pytest.raises(PartitionError):
        as_partition((2, 0))


@pytest.mark.parametrize(
    "bp,m,n,expected",
    [
        (Bipartition((), ()), 0, 0, True),
        (Bipartition((1,), (1,)), 1, 0, False),
        (Bipartition((1,), (1,)), 1, 1, True),
    ],
)
def test_is_cross_examples(bp, m, n, expected):
    assert is_cross(bp, m, n) is expected


def test_is_cross_monotone():
    for bp in enumerate_bipartitions(8):
        for m in range(6):
            for n in range(6):
                if is_cross(bp, m, n):
                    assert is_cross(bp, m + 1, n + 1)


def test_enumerate_counts_match_partition_dp():
    p = count_partitions_upto(8)
    for upper in range(9):
        expected = sum(
            p[a] * p[k - a] for k in range(upper + 1) for a in range(k + 1)
        )
        assert len(enumerate_bipartitions(upper)) == expected


def test_enumerate_small_prefixes():
    assert enumerate_bipartitions(0) == [Bipartition((), ())]
    assert enumerate_bipartitions(1) == [
        Bipartition((), ()),
        Bipartition((1,), ()),
        Bipartition((), (1,)),
    ]
    listed = enumerate_bipartitions(2)
    assert len(listed) == 8
    assert listed == sorted(listed)
    assert len(set(listed)) == 8


def test_u_index_set_example():
    s = u_index_set((3, 1))
    assert s.displaced == (2, -1)
    assert s.tail_start == -3
    assert [s.entry(k) for k in range(1, 6)] == [2, -1, -3, -4, -5]


def test_w_vacuum_is_pure_tail():
    s = w_index_set((), 1)
    assert s.displaced == ()
    assert [s.entry(k) for k in range(1, 4)] == [0, -1, -2]


def test_from_index_set_inverse_example():
    assert from_index_set((1,), 0) == (2,)


def test_from_index_set_rejections():
    with pytest.raises(PartitionError):
        from_index_set((2, 2), 0)  # not strictly decreasing
    with pytest.raises(PartitionError):
        from_index_set((-5,), 0)  # below the tail bound
    # trailing tail-coincident entries normalize away
    assert from_index_set((2, -1, -3, -4), 0) == (3, 1)


def test_index_set_round_trips():
    for parts in all_partitions_upto(12):
        assert u_index_set(parts).to_partition() == parts
        assert from_index_set(u_index_set(parts).displaced, 0) == parts
        for t in range(-4, 5):
            s = w_index_set(parts, t)
            assert s.to_partition() == parts
            assert from_index_set(s.displaced, t) == parts


def test_membership_and_counts():
    s = u_index_set((3, 1))  # {2, -1, -3, -4, ...}
    assert [i for i in range(3, -6, -1) if s.member(i)] == [2, -1, -3, -4, -5]
    assert s.count_greater(-4) == 3  # {2, -1, -3}
    assert s.count_greater(2) == 0
    assert s.count_greater(-100) == 2 + (-3 - (-100))  # displaced plus tail run


def test_unmatched_indices():
    u = u_index_set((3,))  # {2, -2, -3, ...}
    w = w_index_set((2,), 1)  # {2, -1, -2, ...}
    assert unmatched_indices(u, w) == ()
    assert unmatched_indices(w, u) == (-1,)


@pytest.mark.parametrize("text", ["2,1|3", "|", "|1", "1|", "2,2|1,1,1"])
def test_parse_format_round_trip(text):
    assert format_bipartition(parse_bipartition(text)) == text


def test_parse_rejects_increasing_parts():
    with pytest.raises(BipartitionParseError):
        parse_bipartition("1,2|")


def test_parse_reports_position():
    with pytest.raises(BipartitionParseError) as err:
        parse_bipartition("2,1|1,x")
    assert err.value.position == 6
    with pytest.raises(BipartitionParseError):
        parse_bipartition("1|2|3")
