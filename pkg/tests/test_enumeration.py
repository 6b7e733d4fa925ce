import itertools
from collections import Counter

import pytest

from conftest import admissible
from smoothperm.dyck import all_paths, classify_path
from smoothperm.enumeration import (
    CLASSES,
    DEFAULT_SERIES_LENGTH,
    METHODS,
    PATHS_MAX_N,
    catalan,
    central_binomials,
    count_admissible_with_table,
    count_brute,
    count_class,
    count_dyck,
    count_paths,
    count_smooth,
    fibonacci,
    functional_equation_residual,
    is_transposition_downset,
    series_indecomposable,
    series_smooth,
)
from smoothperm.perm import T


def test_small_helpers():
    assert catalan(3) == 5
    assert fibonacci(7) == 13
    assert [fibonacci(k) for k in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert count_dyck(3) == 5
    assert central_binomials(4) == [1, 2, 6, 20, 70]


def test_count_smooth_examples():
    assert [count_smooth(n) for n in (1, 3, 4)] == [1, 6, 22]
    for m in METHODS:
        assert count_smooth(4, m) == 22


def test_count_class_examples():
    assert count_class(4, "avoid231") == 14
    assert count_class(4, "avoid321") == 13
    assert count_class(4, "indecomposable") == 11
    with pytest.raises(ValueError):
        count_class(0, "smooth")
    with pytest.raises(ValueError):
        count_class(3, "avoid123")
    with pytest.raises(ValueError):
        count_class(3, "smooth", "guess")


def test_series_examples():
    assert series_indecomposable(5)[1:] == [1, 1, 3, 11, 43]
    assert series_smooth(4)[1:] == [1, 2, 6, 22]
    assert series_smooth(6)[1:] == [1, 2, 6, 22, 88, 366]
    assert len(series_smooth()) == DEFAULT_SERIES_LENGTH + 1


def test_functional_equations_hold_to_order_thirty():
    assert not any(functional_equation_residual(series_smooth(30), "smooth"))
    assert not any(functional_equation_residual(series_indecomposable(30), "indecomposable"))
    wrong = series_smooth(30)
    wrong[7] += 1
    assert any(functional_equation_residual(wrong, "smooth"))
    with pytest.raises(ValueError):
        functional_equation_residual(wrong, "other")


def test_series_are_exact_integers():
    big = series_smooth(30)
    assert all(isinstance(v, int) for v in big)
    assert big[30] > 2**53


@pytest.mark.parametrize("n", range(1, 9))
def test_three_methods_agree(n):
    for cls in CLASSES:
        counts = {m: count_class(n, cls, m) for m in METHODS}
        assert len(set(counts.values())) == 1, (cls, counts)


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_forms(n):
    assert count_class(n, "avoid231", "paths") == catalan(n)
    assert count_class(n, "avoid321", "paths") == fibonacci(2 * n - 1)
    assert count_class(n, "indecomposable", "paths") == series_indecomposable(n)[n]


def test_path_flags_partition_counts():
    flags = Counter(classify_path(p) for p in all_paths(5))
    assert sum(flags.values()) == 88
    assert sum(v for k, v in flags.items() if k.avoids231) == catalan(5)


def test_paths_reach_the_cap_and_stop():
    assert count_paths(PATHS_MAX_N) == series_smooth(PATHS_MAX_N)[PATHS_MAX_N]
    with pytest.raises(ValueError):
        count_paths(PATHS_MAX_N + 1)


def test_parallel_brute_force_matches_serial():
    assert count_brute(7, "smooth", jobs=2) == count_brute(7, "smooth") == 1552


def test_count_admissible_with_table_examples():
    assert count_admissible_with_table(set()) == 1
    assert count_admissible_with_table({T(1, 2), T(2, 3)}) == 2
    assert count_admissible_with_table({T(1, 2), T(2, 3), T(1, 3)}) == 1
    with pytest.raises(ValueError):
        count_admissible_with_table({T(1, 3)})


def _transposition_downsets(n):
    ts = [T(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    for r in range(len(ts) + 1):
        for sub in itertools.combinations(ts, r):
            if is_transposition_downset(sub):
                yield frozenset(sub)


@pytest.mark.parametrize("n", range(1, 7))
def test_table_formula_matches_enumeration(n):
    by_table = Counter(frozenset(x for x in A if x.kind == "T") for A in admissible(n))
    total = 0
    for gamma in _transposition_downsets(n):
        got = count_admissible_with_table(gamma)
        assert got == by_table[gamma]
        total += got
    assert total == count_smooth(n)
