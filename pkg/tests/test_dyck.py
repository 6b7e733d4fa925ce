import pytest

from conftest import P, smooth
from smoothperm.admissible import full_set, pi
from smoothperm.dyck import (
    DecoratedPath,
    InvalidPathError,
    admissible_from_path,
    all_paths,
    classify_path,
    classify_perm,
    count_decorations,
    decorations,
    identity_path,
    induced_order,
    inverse_decoration,
    is_valid_decoration,
    is_valid_path,
    make_path,
    path_from_admissible,
    path_word,
    render_path,
    sigma_from_path,
    word_to_perm,
)
from smoothperm.enumeration import catalan
from smoothperm.perm import R, T, identity, inverse, length
from smoothperm.tables import is_smooth, table_23

A231 = frozenset({T(1, 2), T(2, 3), R(1, 2, 3)})
P231 = DecoratedPath((2, 3, 3), (1, 0, 0))
P312 = DecoratedPath((2, 3, 3), (0, 0, 0))


def test_validity_examples():
    assert is_valid_path((1, 2, 3)) and is_valid_decoration((1, 2, 3), (0, 0, 0))
    assert not is_valid_path((2, 1, 3))
    assert is_valid_path((2, 3, 3)) and is_valid_decoration((2, 3, 3), (1, 0, 0))


def test_make_path_rejects_bad_input():
    with pytest.raises(InvalidPathError):
        make_path((2, 1, 3))
    with pytest.raises(InvalidPathError):
        make_path((2, 3, 3), (0, 1, 0))
    with pytest.raises(InvalidPathError):
        make_path((1, 2, 3), (1, 0, 0))


def test_path_from_admissible_examples():
    assert path_from_admissible(frozenset(), 4) == identity_path(4)
    assert path_from_admissible(full_set(4), 4) == DecoratedPath((4,) * 4, (0,) * 4)
    assert path_from_admissible(A231, 3) == P231


def test_admissible_from_path_examples():
    assert admissible_from_path(identity_path(3)) == frozenset()
    assert admissible_from_path(P231) == A231
    assert admissible_from_path(DecoratedPath((5,) * 5, (0,) * 5)) == full_set(5)


def test_sigma_from_path_examples():
    assert sigma_from_path(identity_path(3)) == (identity(3), [])
    s, word = sigma_from_path(P231)
    assert s == P("231") and len(word) == 2
    assert sigma_from_path(P312)[0] == P("312")


def test_inverse_decoration_examples():
    assert inverse_decoration(P231) == P312
    assert inverse_decoration(identity_path(4)) == identity_path(4)


def test_count_decorations_examples():
    assert count_decorations((1, 2, 3)) == 1
    assert count_decorations((2, 3, 3)) == 2
    staircases = {p.f for p in all_paths(3)}
    assert len(staircases) == 5
    assert sum(count_decorations(f) for f in staircases) == 6


def test_classify_examples():
    assert classify_path(identity_path(3)) == (True, True, False)
    assert classify_path(identity_path(1)).indecomposable
    assert not classify_path(P231).avoids231
    assert classify_path(P312).avoids321


@pytest.mark.parametrize("n", range(1, 7))
def test_paths_biject_onto_smooth(n):
    paths = list(all_paths(n))
    assert len({p.f for p in paths}) == catalan(n)
    sigmas = {}
    for p in paths:
        s, word = sigma_from_path(p)
        assert is_smooth(s)
        assert len(word) == length(s) == len(path_word(p))
        assert word_to_perm(word, n) == s
        A = admissible_from_path(p)
        assert table_23(s) == A and pi(A, n) == s
        assert path_from_admissible(A, n) == p
        sigmas[p] = s
    assert set(sigmas.values()) == set(smooth(n))
    assert len(sigmas) == len(smooth(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_inverse_decoration_inverts_sigma(n):
    for p in all_paths(n):
        q = inverse_decoration(p)
        assert inverse_decoration(q) == p
        assert sigma_from_path(q)[0] == inverse(sigma_from_path(p)[0])


@pytest.mark.parametrize("n", range(1, 7))
def test_classification_matches_permutation(n):
    for p in all_paths(n):
        assert classify_path(p) == classify_perm(sigma_from_path(p)[0])


def test_decorations_are_exactly_the_valid_ones():
    for p in all_paths(4):
        gs = list(decorations(p.f))
        assert len(gs) == count_decorations(p.f) == len(set(gs))
        assert all(is_valid_decoration(p.f, g) for g in gs)


def test_render_path_shape():
    art = render_path(P231).splitlines()
    assert art == ["\\*.", " \\#", "  \\"]


def test_induced_order_is_a_strict_order_fragment():
    pairs = induced_order(3)
    assert all(p != q for p, q in pairs)
    assert (identity_path(3), P231) in pairs
