from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from chebdisk import monodromy as mono
from chebdisk.errors import (
    DomainError,
    NotTransitiveError,
    NotTreeError,
    ParseError,
    SizeLimitError,
)


def rep(n, s1, s2):
    return mono.MonodromyRep(
        n, mono.parse_permutation(s1, n), mono.parse_permutation(s2, n)
    )


# --- permutations and parsing -------------------------------------------------

def test_permutation_rejects_non_bijection():
    with pytest.raises(DomainError):
        mono.Permutation((1, 1, 3))


def test_parse_cycle_and_one_line_agree():
    assert mono.parse_permutation("(1 2)(3 4)") == mono.parse_permutation("2 1 4 3")


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        mono.parse_permutation("(1 2)(2 3)")
    assert "duplicate" in str(err.value) and "position" in str(err.value)
    with pytest.raises(ParseError) as err:
        mono.parse_permutation("2 1 4")
    assert "out of range" in str(err.value)
    with pytest.raises(ParseError):
        mono.parse_permutation("(1 2")
    with pytest.raises(ParseError):
        mono.parse_permutation("")


def test_parse_identity_cycles():
    p = mono.parse_permutation("()", 3)
    assert p == mono.Permutation.identity(3)


# --- transitivity ---------------------------------------------------------------

def test_transitivity_examples():
    assert not mono.is_transitive(rep(2, "()", "()"))
    assert mono.is_transitive(rep(3, "(1 2)", "(2 3)"))
    assert mono.is_transitive(rep(1, "()", "()"))


def test_cycle_count_examples():
    assert mono.cycle_count(mono.Permutation.identity(4)) == 4
    assert mono.cycle_count(mono.parse_permutation("(1 2)(3 4)")) == 2
    assert mono.cycle_count(mono.parse_permutation("(1 2 3)", 5)) == 3


# --- trees ------------------------------------------------------------------------

def test_tree_examples():
    assert mono.is_tree(rep(3, "(1 2)", "(2 3)"))
    assert mono.is_tree(rep(1, "()", "()"))
    assert not mono.is_tree(rep(3, "(1 2 3)", "(1 3 2)"))


def test_tree_requires_transitivity():
    with pytest.raises(NotTransitiveError):
        mono.is_tree(rep(2, "()", "()"))


# --- Euler characteristics ----------------------------------------------------------

def test_euler_characteristic_examples():
    assert mono.euler_characteristic_disk(rep(3, "(1 2)", "(2 3)")) == 1
    assert mono.euler_characteristic_disk(rep(3, "(1 2 3)", "(1 3 2)")) == -1
    assert mono.euler_characteristic_disk(rep(1, "()", "()")) == 1


def test_face_cycles_examples():
    assert mono.face_cycles(rep(3, "(1 2)", "(2 3)")) == 1
    assert mono.face_cycles(rep(4, "()", "()")) == 4
    assert mono.face_cycles(rep(3, "(1 2 3)", "(1 3 2)")) == 3


def test_sphere_disk_euler_difference_alias():
    r = rep(3, "(1 2)", "(2 3)")
    assert mono.sphere_disk_euler_difference(r) == mono.face_cycles(r)


# --- equivalence ----------------------------------------------------------------------

def test_equivalence_reflexive():
    r = rep(3, "(1 2)", "(2 3)")
    assert mono.are_equivalent(r, r)


def test_equivalence_relabeled():
    r1 = rep(3, "(1 2)", "(2 3)")
    r2 = rep(3, "(2 3)", "(1 2)")  # relabeling by (1 3)
    assert mono.are_equivalent(r1, r2)


def test_equivalence_distinguishes_cycle_types():
    r1 = rep(3, "(1 2)", "(2 3)")
    r2 = rep(3, "(1 2 3)", "()")
    assert not mono.are_equivalent(r1, r2)


def test_equivalence_size_cap():
    big = mono.MonodromyRep(
        11, mono.Permutation.identity(11), mono.Permutation.identity(11)
    )
    with pytest.raises(SizeLimitError):
        mono.are_equivalent(big, big)


def _brute_force(rep1, rep2):
    for images in permutations(range(1, rep1.n + 1)):
        iota = mono.Permutation(images)
        if (
            iota.apply_then(rep1.sigma1) == rep2.sigma1.apply_then(iota)
            and iota.apply_then(rep1.sigma2) == rep2.sigma2.apply_then(iota)
        ):
            return True
    return False


def test_equivalence_matches_brute_force_degree_three():
    perms = [mono.Permutation(p) for p in permutations((1, 2, 3))]
    reps = [mono.MonodromyRep(3, a, b) for a in perms for b in perms]
    for r1 in reps[::3]:
        for r2 in reps[::4]:
            assert mono.are_equivalent(r1, r2) == _brute_force(r1, r2)


# --- chains ----------------------------------------------------------------------------

def test_chebyshev_monodromy_small():
    r2 = mono.chebyshev_monodromy(2)
    assert r2.sigma1.to_cycle_string() == "(1 2)"
    assert r2.sigma2 == mono.Permutation.identity(2)
    assert mono.is_tree(r2)
    r3 = mono.chebyshev_monodromy(3)
    assert (r3.sigma1.to_cycle_string(), r3.sigma2.to_cycle_string()) == ("(1 2)", "(2 3)")
    r1 = mono.chebyshev_monodromy(1)
    assert mono.is_tree(r1)


def test_dessin_stats():
    assert mono.dessin_stats(mono.chebyshev_monodromy(5)) == mono.DessinStats(6, 5)
    assert mono.dessin_stats(mono.chebyshev_monodromy(1)) == mono.DessinStats(2, 1)
    assert mono.dessin_stats(mono.chebyshev_monodromy(8)) == mono.DessinStats(9, 8)
    with pytest.raises(NotTreeError):
        mono.dessin_stats(rep(3, "(1 2 3)", "(1 3 2)"))


def test_exhaustive_small_degrees():
    for n in (1, 2, 3, 4):
        perms = [mono.Permutation(p) for p in permutations(range(1, n + 1))]
        for s1 in perms:
            for s2 in perms:
                r = mono.MonodromyRep(n, s1, s2)
                if not mono.is_transitive(r):
                    continue
                chi = mono.euler_characteristic_disk(r)
                assert mono.is_tree(r) == (chi == 1)
                gap = 2 - (chi + mono.face_cycles(r))
                assert gap >= 0 and gap % 2 == 0
                if mono.is_tree(r):
                    assert gap == 0  # trees are planar: sphere closure


# --- properties ---------------------------------------------------------------------------

perm_strategy = st.integers(min_value=2, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_conjugation_is_equivalence(data):
    n = data.draw(st.integers(min_value=2, max_value=7))
    draw_perm = lambda: mono.Permutation(
        tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    )
    s1, s2, iota = draw_perm(), draw_perm(), draw_perm()
    conj = lambda s: iota.inverse().apply_then(s).apply_then(iota)
    r1 = mono.MonodromyRep(n, s1, s2)
    r2 = mono.MonodromyRep(n, conj(s1), conj(s2))
    assert mono.are_equivalent(r1, r2)
    assert r1.sigma1.cycle_type() == r2.sigma1.cycle_type()
    assert r1.sigma2.cycle_type() == r2.sigma2.cycle_type()


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_parser_round_trip(data):
    n = data.draw(st.integers(min_value=1, max_value=9))
    p = mono.Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    assert mono.parse_permutation(p.to_cycle_string(), n) == p
    one_line = " ".join(str(x) for x in p.images)
    assert mono.parse_permutation(one_line) == p
