import pytest

from conftest import P, perms, smooth
from smoothperm.admissible import full_set, pi
from smoothperm.dyck import DecoratedPath, admissible_from_path, identity_path, path_from_admissible, sigma_from_path
from smoothperm.essential import (
    admissible_from_grid,
    all_grid_sets,
    bruhat_leq_on,
    bruhat_leq_via_essential,
    coessential_core,
    essential_set,
    grid_from_path,
    hat_f,
    in_delta,
    in_frakE,
    path_from_grid,
    render_grid,
    sigma_from_grid,
)
from smoothperm.perm import R, T, bruhat_leq, identity, longest
from smoothperm.tables import is_covexillary, table_23

DIAG3 = frozenset({(1, 1), (2, 2)})


def test_essential_set_examples():
    for n in range(1, 6):
        assert essential_set(identity(n)) == {(i, i) for i in range(1, n)}
        assert essential_set(longest(n)) == frozenset()
    assert essential_set(P("231")) == {(1, 2)}


def test_coessential_core_examples():
    assert coessential_core(P("231")) == {(1, 2)}
    assert coessential_core(identity(4)) == {(1, 1), (2, 2), (3, 3)}
    s = P("4231")
    assert coessential_core(s) < essential_set(s)


def test_in_frakE_examples():
    assert in_frakE(set())
    assert in_frakE(DIAG3)
    assert not in_frakE({(1, 2), (2, 1)})


def test_grid_from_path_examples():
    assert grid_from_path(identity_path(3)) == DIAG3
    assert grid_from_path(DecoratedPath((3, 3, 3), (0, 0, 0))) == frozenset()
    assert grid_from_path(DecoratedPath((2, 3, 3), (1, 0, 0))) == {(1, 2)}


def test_path_from_grid_examples():
    assert path_from_grid(set(), 4) == DecoratedPath((4,) * 4, (0,) * 4)
    assert path_from_grid({(1, 2)}, 3) == DecoratedPath((2, 3, 3), (1, 0, 0))
    assert path_from_grid(DIAG3, 3) == identity_path(3)
    with pytest.raises(ValueError):
        path_from_grid({(1, 2), (2, 1)}, 3)
    with pytest.raises(ValueError):
        path_from_grid({(3, 3)}, 3)


def test_admissible_from_grid_examples():
    assert admissible_from_grid(set(), 4) == full_set(4)
    assert admissible_from_grid({(i, i) for i in range(1, 4)}, 4) == frozenset()
    assert admissible_from_grid({(1, 2)}, 3) == {T(1, 2), T(2, 3), R(1, 2, 3)}


def test_bruhat_via_essential_examples():
    for s in perms(4):
        assert bruhat_leq_via_essential(identity(4), s)
    assert bruhat_leq_via_essential(P("213"), P("231"))
    assert not bruhat_leq_via_essential(P("2341"), P("4312"))


def test_delta_boundaries():
    assert in_delta((1, 2), 4) and in_delta((2, 3), 4)
    assert not in_delta((2, 2), 4)
    assert not in_delta((3, 2), 4)
    assert not in_delta((1, 4), 4)


def test_hat_f_of_empty_is_constant():
    assert hat_f(set(), 5) == (5,) * 5


@pytest.mark.parametrize("n", range(1, 7))
def test_smooth_grid_bijection(n):
    sm = smooth(n)
    images = {}
    for s in sm:
        E = essential_set(s)
        assert E == coessential_core(s)
        assert in_frakE(E)
        assert sigma_from_grid(E, n) == s
        images[s] = E
    assert len(set(images.values())) == len(sm)
    assert set(images.values()) == set(all_grid_sets(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_commutative_diagram(n):
    for s in smooth(n):
        A = table_23(s)
        p = path_from_admissible(A, n)
        E = coessential_core(s)
        assert grid_from_path(p) == E
        assert admissible_from_grid(E, n) == A
        assert path_from_grid(E, n) == p
        assert sigma_from_path(path_from_grid(E, n))[0] == s
        assert admissible_from_path(p) == A


@pytest.mark.parametrize("n", range(1, 7))
def test_core_points_increase_together(n):
    for s in perms(n):
        pts = sorted(coessential_core(s))
        for a in pts:
            for b in pts:
                if a != b and a[0] <= b[0] and a[1] <= b[1]:
                    assert max(b) > max(a) and min(b) > min(a)


@pytest.mark.parametrize("n", range(1, 7))
def test_covexillary_cores_match_smooth_closure(n):
    grids = set(all_grid_sets(n))
    seen = set()
    for t in perms(n):
        if is_covexillary(t):
            E = coessential_core(t)
            assert E in grids
            assert essential_set(pi(table_23(t), n)) == E
            seen.add(E)
    assert seen == grids


@pytest.mark.parametrize("n", range(1, 6))
def test_essential_set_decides_bruhat(n):
    ps = perms(n)
    for s in ps:
        for t in ps:
            assert bruhat_leq_via_essential(t, s) == bruhat_leq(t, s)


@pytest.mark.parametrize("n", range(1, 5))
def test_essential_set_is_minimal(n):
    ps = perms(n)
    for s in ps:
        E = essential_set(s)
        for point in E:
            rest = E - {point}
            assert any(bruhat_leq_on(t, s, rest) != bruhat_leq(t, s) for t in ps)


def test_render_grid():
    assert render_grid({(1, 2)}, 3) == ". o\n. ."
