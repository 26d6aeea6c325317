import random

import pytest
from hypothesis import given, settings, strategies as st

from roughhopf import forests as fo


def random_tree(rng, n, letters=("1", "2", "3")):
    label = rng.choice(letters)
    kids, left = [], n - 1
    while left:
        k = rng.randint(1, left)
        kids.append(random_tree(rng, k, letters))
        left -= k
    return (label, tuple(kids))


def random_forest(rng, n, letters=("1", "2", "3")):
    trees, left = [], n
    while left:
        k = rng.randint(1, left)
        trees.append(random_tree(rng, k, letters))
        left -= k
    return tuple(trees)


def test_parse_planar_keeps_child_order():
    (t,) = fo.parse("[1[3][2]]", fo.PLANAR)
    assert t == ("1", (("3", ()), ("2", ())))


def test_empty_text_is_unit():
    assert fo.parse("", fo.PLANAR) == ()
    assert fo.parse("", fo.WORD) == ()


def test_nonplanar_forest_is_a_multiset():
    assert fo.parse("[1[2]] [1]", fo.NONPLANAR) == fo.parse("[1] [1[2]]", fo.NONPLANAR)


def test_canonicalize_planar_is_identity():
    a = fo.parse("[1[2][3]]", fo.PLANAR)
    b = fo.parse("[1[3][2]]", fo.PLANAR)
    assert a != b
    assert fo.canonicalize(a, fo.PLANAR) == a
    assert fo.canonicalize(a) == fo.canonicalize(b)


def test_canonicalize_idempotent_on_random_trees():
    rng = random.Random(7)
    for _ in range(1000):
        t = random_tree(rng, rng.randint(1, 7))
        c = fo.canonical_tree(t)
        assert fo.canonical_tree(c) == c


def test_parse_errors_carry_position():
    with pytest.raises(fo.ParseError) as err:
        fo.parse("[1[2]", fo.PLANAR)
    assert err.value.position == 5
    with pytest.raises(fo.ParseError):
        fo.parse("x", fo.PLANAR)
    with pytest.raises(fo.UnknownLetterError):
        fo.parse("[1[4]]", fo.PLANAR, ("1", "2"))
    with pytest.raises(fo.UnknownLetterError):
        fo.parse("13", fo.WORD, ("1", "2"))


def test_enumeration_examples():
    assert [fo.render(w, fo.WORD) for w in fo.enumerate_basis(fo.WORD, 2, ("1", "2"))] == ["11", "12", "21", "22"]
    assert {fo.render_tree(t) for t in fo.enumerate_trees(fo.NONPLANAR, 3, ("",))} == {"[[[]]]", "[[][]]"}
    assert len(fo.enumerate_trees(fo.PLANAR, 3, ("",))) == 2
    assert len(fo.enumerate_basis(fo.PLANAR, 3, ("",))) == 5


def _brute_planar_forests(n):
    # well-formed bracket strings with n pairs, read as forests
    out = set()

    def go(s, opened, closed):
        if closed == n:
            out.add(s)
            return
        if opened < n:
            go(s + "[", opened + 1, closed)
        if closed < opened:
            go(s + "]", opened, closed + 1)

    go("", 0, 0)
    return {fo.parse_forest(s.replace("][", "] [")) for s in out}


def test_counts_match_brute_force():
    rooted = [1, 1, 2, 4, 9, 20]
    for n in range(1, 7):
        planar = _brute_planar_forests(n)
        assert set(fo.enumerate_basis(fo.PLANAR, n, ("",))) == planar
        trees = {fo.canonical_tree(f[0]) for f in planar if len(f) == 1}
        assert len(fo.enumerate_trees(fo.NONPLANAR, n, ("",))) == len(trees) == rooted[n - 1]
        forests = {fo.canonical_forest(f) for f in planar}
        assert set(fo.enumerate_basis(fo.NONPLANAR, n, ("",))) == forests


def test_enumeration_is_duplicate_free_and_homogeneous():
    for kind in fo.KINDS:
        for n in range(5):
            items = fo.enumerate_basis(kind, n, ("1", "2"))
            assert len(items) == len(set(items))
            assert all(fo.degree(x, kind) == n for x in items)


def test_enumeration_limit():
    with pytest.raises(fo.EnumerationLimitError):
        fo.words(30, ("1", "2"))


def test_b_plus_b_minus():
    w = fo.parse("[2] [3]", fo.PLANAR)
    assert fo.render_tree(fo.b_plus(w, "1")) == "[1[2][3]]"
    assert fo.render(fo.b_minus(fo.parse("[1[3][2]]", fo.PLANAR)[0]), fo.PLANAR) == "[3] [2]"
    assert fo.b_plus((), "7") == ("7", ())
    assert fo.b_minus(fo.b_plus(w, "1")) == w


@settings(max_examples=200)
@given(st.integers(0, 10 ** 6), st.integers(0, 6), st.sampled_from([fo.PLANAR, fo.NONPLANAR]))
def test_round_trip_forests(seed, n, kind):
    rng = random.Random(seed)
    f = random_forest(rng, n)
    if kind == fo.NONPLANAR:
        f = fo.canonical_forest(f)
    text = fo.render(f, kind)
    assert fo.parse(text, kind) == f
    assert fo.render(fo.parse("  " + text.replace(" ", "   ") + " ", kind), kind) == text
    assert fo.parse(fo.render_latex(f, kind), kind) == f


@given(st.lists(st.sampled_from(["1", "2", "3"]), max_size=6))
def test_round_trip_words(letters):
    w = tuple(letters)
    assert fo.parse(fo.render(w, fo.WORD), fo.WORD, ("1", "2", "3")) == w
    assert fo.parse(fo.render_latex(w, fo.WORD), fo.WORD) == w


def test_degree_additive_under_concatenation():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_forest(rng, rng.randint(0, 4)), random_forest(rng, rng.randint(0, 4))
        assert fo.forest_degree(a + b) == fo.forest_degree(a) + fo.forest_degree(b)


def test_flatten_preorder():
    labels, parent, children, roots = fo.flatten(fo.parse("[1[2[3]][4]] [5]", fo.PLANAR))
    assert labels == ["1", "2", "3", "4", "5"]
    assert parent == [-1, 0, 1, 0, -1]
    assert children[0] == [1, 3]
    assert roots == [0, 4]
