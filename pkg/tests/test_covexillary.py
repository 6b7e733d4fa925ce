import itertools

import pytest

from conftest import P, perms, smooth
from smoothperm.admissible import is_admissible, pi
from smoothperm.covexillary import (
    NoUniqueMinimum,
    ascent_chain,
    constructed_step,
    covex_ascent_step,
    fallback_steps,
    min_smooth_above_oracle,
    outer_pair,
    quad_pairs,
    smooth_closure,
    smooth_with_transposition_table,
)
from smoothperm.perm import bruhat_leq, identity, length, longest, right_mult_transposition
from smoothperm.tables import is_covexillary, is_smooth, table_23


def covex(n):
    return [t for t in perms(n) if is_covexillary(t)]


def test_smooth_closure_examples():
    assert smooth_closure(P("4231")) == longest(4)
    assert smooth_closure(identity(5)) == identity(5)
    for s in smooth(4):
        assert smooth_closure(s) == s
    with pytest.raises(ValueError):
        smooth_closure(P("3412"))


def test_oracle_examples():
    got = min_smooth_above_oracle(P("3412"))
    assert isinstance(got, NoUniqueMinimum)
    assert set(got.minimal) == {P("4312"), P("3421")}
    assert min_smooth_above_oracle(P("4231")) == longest(4)
    assert min_smooth_above_oracle(P("231")) == P("231")


def test_ascent_examples():
    assert covex_ascent_step(P("4231")) == (2, 3)
    assert outer_pair(P("4231")) == (1, 4)
    assert quad_pairs(P("4231"), 1, 4) == [(2, 3)]
    assert ascent_chain(P("4231")) == [P("4231"), longest(4)]
    with pytest.raises(ValueError):
        constructed_step(P("231"))
    with pytest.raises(ValueError):
        constructed_step(P("3412"))


@pytest.mark.parametrize("n", range(1, 7))
def test_closure_is_least_smooth_above(n):
    cs = covex(n)
    closure = {t: smooth_closure(t) for t in cs}
    for t in cs:
        c = closure[t]
        assert is_admissible(table_23(t))
        assert is_smooth(c) and bruhat_leq(t, c)
        assert smooth_closure(c) == c
        assert min_smooth_above_oracle(t) == c
    for a in cs:
        for b in cs:
            if bruhat_leq(a, b):
                assert bruhat_leq(closure[a], closure[b])


@pytest.mark.parametrize("n", range(4, 7))
def test_constructed_step_never_needs_fallback(n):
    for t in covex(n):
        if is_smooth(t):
            continue
        step = constructed_step(t)
        i, j, k, l = step.i, step.j, step.k, step.l
        assert i < j < k < l
        assert t[l - 1] < t[j - 1] < t[k - 1] < t[i - 1]
        u = right_mult_transposition(t, j, k)
        assert is_covexillary(u)
        assert table_23(u) == table_23(t)
        assert (j, k) in set(fallback_steps(t))


@pytest.mark.parametrize("n", range(1, 7))
def test_ascent_chain_reaches_closure(n):
    for t in covex(n):
        chain = ascent_chain(t)
        assert chain[-1] == smooth_closure(t)
        assert len(chain) - 1 == length(chain[-1]) - length(t)
        for a, b in zip(chain, chain[1:]):
            assert length(b) == length(a) + 1
        assert all(is_covexillary(u) and table_23(u) == table_23(t) for u in chain)


@pytest.mark.parametrize("n", range(4, 6))
def test_inner_swap_keeps_table(n):
    for t in perms(n):
        for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
            if t[l - 1] < t[j - 1] < t[k - 1] < t[i - 1]:
                assert table_23(right_mult_transposition(t, j, k)) == table_23(t)


def test_transposition_table_alone_is_not_enough():
    t = P("462513")
    found = smooth_with_transposition_table(t)
    assert set(found) == {P("654123"), P("456321")}
    assert not any(bruhat_leq(t, s) for s in found)


def test_admissible_table_below_does_not_bound_closure():
    t, s = P("345612"), P("654312")
    assert is_admissible(table_23(t)) and bruhat_leq(t, s)
    c = pi(table_23(t), 6)
    assert c == P("345621")
    assert not bruhat_leq(c, s)
