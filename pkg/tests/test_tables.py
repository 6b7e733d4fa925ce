import math

import pytest

from conftest import P, perms, smooth
from smoothperm.perm import (
    GeneralCycle,
    L,
    R,
    T,
    all_elems,
    bruhat_leq,
    compose,
    elem_inverse,
    elem_upend,
    general_cycle,
    identity,
    inverse,
    length,
    longest,
    transposition,
    upend,
)
from smoothperm.tables import (
    is_covexillary,
    is_defined_by_inclusions,
    is_defined_by_inclusions_brute,
    is_smooth,
    is_smooth_by_length,
    is_smooth_by_patterns,
    reconstruct_D_from_C,
    special_cycles,
    t_part,
    table_23,
    table_23_brute,
    table_D,
    table_D_brute,
    table_T,
)


def test_table_T_examples():
    assert table_T(P("231")) == {T(1, 2), T(2, 3)} == table_T(P("312"))
    assert table_T(identity(4)) == frozenset()


def test_table_23_examples():
    assert table_23(P("3412")) == frozenset(all_elems(4)) - {
        T(1, 4), R(1, 2, 4), L(1, 2, 4), R(1, 3, 4), L(1, 3, 4)
    }
    assert table_23(P("45231")) == frozenset(all_elems(5)) - {
        T(1, 5), L(1, 2, 5), L(1, 3, 5), L(1, 4, 5)
    }
    assert table_23(identity(3)) == frozenset()


def test_table_D_examples():
    assert table_D(identity(4), special_only=True) == frozenset()
    for n in range(1, 7):
        # the closed count 2^(n+1) - C(n,2) - 2n - 1 includes the identity
        assert len(table_D(longest(n))) == 2 ** (n + 1) - math.comb(n, 2) - 2 * n - 1
    assert table_D(P("231"), special_only=True) == table_D_brute(P("231"), special_only=True)
    assert table_D(P("231"), special_only=True) == {
        GeneralCycle("R", (1, 2)), GeneralCycle("R", (2, 3)), GeneralCycle("R", (1, 2, 3))
    }


def test_classification_examples():
    assert is_smooth(P("231")) and not is_smooth(P("3412")) and is_smooth(P("365214"))
    assert not is_covexillary(P("3412")) and not is_covexillary(P("45231"))
    assert is_covexillary(P("4231"))
    assert not is_defined_by_inclusions(P("4231"))
    assert is_defined_by_inclusions(P("3412"))
    assert is_defined_by_inclusions(identity(5))


def test_reconstruct_examples():
    for s in (identity(3), P("231"), longest(4)):
        assert reconstruct_D_from_C(s) == table_D(s)
    assert reconstruct_D_from_C(identity(3)) == {general_cycle("R", (1,))}
    with pytest.raises(ValueError):
        reconstruct_D_from_C(P("3412"))


@pytest.mark.parametrize("n", range(1, 7))
def test_table_23_matches_brute_force(n):
    for s in perms(n):
        assert table_23(s) == table_23_brute(s)
        assert t_part(table_23(s)) == table_T(s)


@pytest.mark.parametrize("n", range(1, 7))
def test_length_at_most_table_size_and_smooth_definitions(n):
    for s in perms(n):
        assert length(s) <= len(table_T(s))
        assert is_smooth_by_length(s) == is_smooth_by_patterns(s)
        assert is_smooth(s) == (is_covexillary(s) and is_defined_by_inclusions(s))


@pytest.mark.parametrize("n", range(1, 6))
def test_table_symmetries(n):
    for s in perms(n):
        C = table_23(s)
        assert table_23(inverse(s)) == {elem_inverse(x) for x in C}
        assert table_23(upend(s)) == {elem_upend(x, n) for x in C}


@pytest.mark.parametrize("n", range(1, 9))
def test_cardinalities(n):
    assert len(all_elems(n)) == 2 * math.comb(n, 3) + math.comb(n, 2)
    assert len(special_cycles(n)) == (n - 1) ** 2


@pytest.mark.parametrize("n", range(1, 6))
def test_cycle_tables_match_brute_force(n):
    for s in perms(n):
        assert table_D(s) == table_D_brute(s)
        assert table_D(s, True) == table_D_brute(s, True)


@pytest.mark.parametrize("n", range(1, 6))
def test_dbi_patterns_match_definition(n):
    for s in perms(n):
        assert is_defined_by_inclusions(s) == is_defined_by_inclusions_brute(s)


def test_dbi_brute_six_spot_checks():
    for s in (P("351624"), P("123456"), P("654321"), P("365214")):
        assert is_defined_by_inclusions(s) == is_defined_by_inclusions_brute(s)


@pytest.mark.parametrize("n", range(1, 6))
def test_dbi_comparisons_by_tables(n):
    for s in perms(n):
        if not is_defined_by_inclusions(s):
            continue
        Ds, Dss = table_D(s), table_D(s, True)
        for t in perms(n):
            b = bruhat_leq(t, s)
            assert b == (table_D(t, True) <= Dss) == (table_D(t) <= Ds)


@pytest.mark.parametrize("n", range(1, 6))
def test_covexillary_table_comparisons(n):
    for s in perms(n):
        if not is_covexillary(s):
            continue
        Ts, Ds, Cs = table_T(s), table_D(s), table_23(s)
        for t in perms(n):
            if table_T(t) == Ts:
                assert (table_D(t) <= Ds) == (table_23(t) <= Cs)


@pytest.mark.parametrize("n", range(1, 6))
def test_smooth_comparison_by_table_when_transpositions_agree(n):
    for s in smooth(n):
        Ts, Cs = table_T(s), table_23(s)
        for t in perms(n):
            if table_T(t) == Ts:
                assert bruhat_leq(t, s) == (table_23(t) <= Cs)


@pytest.mark.parametrize("n", range(1, 7))
def test_reconstruct_D_on_covexillary(n):
    for s in perms(n):
        if is_covexillary(s):
            assert reconstruct_D_from_C(s) == table_D(s)


@pytest.mark.parametrize("n", range(2, 7))
def test_smooth_descends_by_simple_reflection(n):
    sm = set(smooth(n))
    simple = [transposition(n, i, i + 1) for i in range(1, n)]
    for s in sm:
        if s == identity(n):
            continue
        ok = any(
            u in sm and length(u) == length(s) - 1
            for r in simple
            for u in (compose(s, r), compose(r, s))
        )
        assert ok, s
