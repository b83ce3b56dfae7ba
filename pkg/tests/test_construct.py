import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magicpolygon.construct import (
    SQUARE_4,
    construct,
    extend_midpoint,
    extend_vertex,
    f_initial,
    half_assignment,
    range_partition_check,
)
from magicpolygon.core import DomainError, NonexistenceError, verify
from magicpolygon.symmetry import canonical_form

even_n = st.integers(3, 1000).map(lambda k: 2 * k)


def test_f_initial_values():
    assert [f_initial(i, 6) for i in (1, 2, 3)] == [5, 13, 2]
    assert f_initial(4, 8) == 12
    assert f_initial(3, 8) == 2


def test_extend_vertex_values():
    assert extend_vertex(1, 6) == 9
    assert extend_vertex(2, 6) == 1
    assert extend_vertex(2, 8) == 1


def test_extend_midpoint_values():
    v6 = [5, 13, 2, 9, 1, 12]
    assert extend_midpoint(1, v6) == 3
    assert extend_midpoint(6, v6) == 4  # wraps to v_1
    v8 = [7, 17, 2, 12, 11, 1, 16, 6]
    assert extend_midpoint(1, v8) == 3


def test_extend_midpoint_needs_both_vertices():
    with pytest.raises(DomainError, match="v3"):
        extend_midpoint(2, [5, 13, None, 9, 1, 12])
    with pytest.raises(DomainError, match="v1"):
        extend_midpoint(6, [None, 13, 2, 9, 1, 12])


@pytest.mark.parametrize("args", [(0, 6), (4, 6), (1, 7), (1, 4), (1, 5), (True, 6)])
def test_f_initial_domain(args):
    with pytest.raises(DomainError):
        f_initial(*args)


def test_construct_hexagon(hexagon):
    lab = construct(6)
    assert lab.vertices == (5, 13, 2, 9, 1, 12)
    assert lab.midpoints == (3, 6, 10, 11, 8, 4)
    assert lab.center == 7
    assert canonical_form(lab) == canonical_form(hexagon)


def test_construct_square_is_lo_shu(lo_shu):
    assert construct(4) == lo_shu == SQUARE_4


def test_construct_octagon():
    lab = construct(8)
    assert lab.vertices == (7, 17, 2, 12, 11, 1, 16, 6)
    assert lab.midpoints == (3, 8, 13, 4, 15, 10, 5, 14)
    assert lab.center == 9
    report = verify(lab)
    assert report.is_magic and report.common_sum == 27


def test_square_formula_collides():
    # the closed form breaks at n=4, hence the fixed square
    v1, v2 = 4 - 1, 2 * 4 + 1
    m1 = 15 - v1 - v2
    assert v1 == m1 == 3


@pytest.mark.parametrize("n", [3, 5, 7, 101])
def test_construct_odd_is_nonexistent(n):
    with pytest.raises(NonexistenceError, match=f"no magic {n}-gon exists"):
        construct(n)


@pytest.mark.parametrize("n", [2, 1, 0, -4])
def test_construct_small_rejected(n):
    with pytest.raises(DomainError):
        construct(n)


def test_construct_agrees_with_stepwise_extension():
    for n in range(6, 60, 2):
        half = n // 2
        verts = [f_initial(i, n) for i in range(1, half + 1)]
        verts += [extend_vertex(i, n) for i in range(1, half + 1)]
        mids = [extend_midpoint(i, verts) for i in range(1, n + 1)]
        lab = construct(n)
        assert list(lab.vertices) == verts
        assert list(lab.midpoints) == mids
        assert half_assignment(n) == verts[:half]


@settings(max_examples=60, deadline=None)
@given(even_n)
def test_construct_is_magic_permutation(n):
    lab = construct(n)
    assert sorted(lab.as_tuple()) == list(range(1, 2 * n + 2))
    report = verify(lab)
    assert report.is_magic
    assert report.common_sum == 3 * n + 3
    assert lab.center == n + 1


@settings(max_examples=60, deadline=None)
@given(even_n)
def test_diagonal_pairs_complement(n):
    lab = construct(n)
    half = n // 2
    for i in range(half):
        assert lab.vertices[i] + lab.vertices[half + i] == 2 * n + 2
        assert lab.midpoints[i] + lab.midpoints[half + i] == 2 * n + 2


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 1000).map(lambda k: 2 * k))
def test_initial_values_at_fixed_nodes(n):
    lab = construct(n)
    h = n // 2
    v = lambda i: lab.vertices[i - 1]  # noqa: E731
    m = lambda i: lab.midpoints[i - 1]  # noqa: E731
    got = [v(1), v(2), v(3), lab.center, v(h + 1), v(h + 2), v(h + 3), m(1), m(2), m(h + 1), m(h + 2)]
    assert got == [n - 1, 2 * n + 1, 2, n + 1, n + 3, 1, 2 * n, 3, n, 2 * n - 1, n + 2]


def test_range_check_octagon():
    report = range_partition_check(8)
    assert report.passed, report.checks
    assert report.low_range == (4, 6) and report.high_range == (12, 14)


def test_range_check_n10_boundary_in_high_range():
    report = range_partition_check(10)
    assert report.passed
    assert report.boundary["m[n/2]"] == 16
    assert 16 in range(14, 19)


def test_range_check_n12_boundaries():
    report = range_partition_check(12)
    assert report.passed
    assert report.boundary == {"m[n/2]": 6, "m[n]": 20}


def test_range_check_records_bound_chain_note():
    # inner midpoints take 2j-1, starting at 5, below the chain's lower end 7
    report = range_partition_check(16)
    assert report.passed
    assert any("2j-1" in note for note in report.notes)


@pytest.mark.parametrize("n", [6, 7, 9, 4])
def test_range_check_domain(n):
    with pytest.raises(DomainError):
        range_partition_check(n)


def test_range_members_match_brute_force():
    # independent recount: values of construct(n) outside the eleven fixed ones
    for n in range(8, 80, 2):
        lab = construct(n)
        fixed = {n - 1, 2 * n + 1, 2, n + 1, n + 3, 1, 2 * n, 3, n, 2 * n - 1, n + 2}
        rest = sorted(set(lab.as_tuple()) - fixed)
        assert rest == list(range(4, n - 1)) + list(range(n + 4, 2 * n - 1))
        report = range_partition_check(n)
        h = n // 2
        low_extra, high_extra = (lab.midpoints[h - 1], lab.midpoints[n - 1]) if h % 2 == 0 else (
            lab.midpoints[n - 1], lab.midpoints[h - 1])
        assert sorted(report.low_members + [low_extra]) == list(range(4, n - 1))
        assert sorted(report.high_members + [high_extra]) == list(range(n + 4, 2 * n - 1))
