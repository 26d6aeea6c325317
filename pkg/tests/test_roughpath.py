import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from roughhopf import forests as fo
from roughhopf.algebra import DegreeOverflowError, LinComb
from roughhopf.hopf import named_algebra
from roughhopf.roughpath import (PathDomainError, PiecewiseLinearPath, RoughPathFamily, character_check,
                                 chen_check, factorial_decay_constant, formal_word_series, holder_diagnostic,
                                 q_character, q_gamma, signature, translate_functional, translate_roughpath,
                                 translated_family, tree_factorial)
from roughhopf.substitution import SubstitutionRule, random_rule
from roughhopf.suites import hook_factorial, random_path, roughpath_suite

NP = lambda s: fo.parse(s, fo.NONPLANAR)
LINE = PiecewiseLinearPath((0, 1), ((0, 0), (1, 1)))


def test_linear_signature():
    X = signature(LINE, 0, 1, 2)
    assert X(("1", "2")) == F(1, 2)
    assert X(()) == 1
    with pytest.raises(DegreeOverflowError):
        X(("1", "1", "2"))


def test_signature_of_empty_interval():
    X = signature(LINE, F(1, 3), F(1, 3), 3)
    assert X.terms == LinComb.basis(())


def test_path_validation():
    with pytest.raises(PathDomainError):
        PiecewiseLinearPath((0,), ((0,),))
    with pytest.raises(PathDomainError):
        PiecewiseLinearPath((0, 0), ((0,), (1,)))
    with pytest.raises(PathDomainError):
        signature(LINE, 0, 2, 2)


def test_path_json_round_trip():
    p = random_path(random.Random(1))
    assert PiecewiseLinearPath.from_json(p.to_json()) == p


def test_signature_breakpoint_example():
    # L-shaped path: e1 then e2, so <X, e1 e2> = 1 and <X, e2 e1> = 0
    p = PiecewiseLinearPath((0, 1, 2), ((0, 0), (1, 0), (1, 1)))
    X = signature(p, 0, 2, 2)
    assert (X(("1", "2")), X(("2", "1"))) == (1, 0)


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_chen_and_character_random(rng):
    p = random_path(rng)
    fam = RoughPathFamily.from_path(p)
    lo, hi = p.times[0], p.times[-1]
    s, u, t = sorted(lo + (hi - lo) * F(rng.randint(0, 30), 30) for _ in range(3))
    assert chen_check(fam, s, u, t, 4)
    assert character_check(fam.algebra, fam(s, t, 4), 4)


def test_chen_negative_control():
    fam = RoughPathFamily.from_path(LINE)
    sh = fam.algebra

    def corrupt(s, t, N):
        X = signature(LINE, s, t, N)
        return sh.functional(X.terms + LinComb({("1", "2"): F(1, 7)}), N)

    bad = RoughPathFamily.from_functionals(sh, corrupt)
    assert not chen_check(bad, 0, F(1, 2), 1, 3)


def test_constant_path_chen_and_holder():
    p = PiecewiseLinearPath((0, 1), ((2, 3), (2, 3)))
    fam = RoughPathFamily.from_path(p)
    assert chen_check(fam, 0, F(1, 3), 1, 3)
    assert all(v == 0 for v in holder_diagnostic(fam, 1, [(0, 1), (0, F(1, 2))], 2).values())


def test_holder_linear():
    p = PiecewiseLinearPath((0, 2), ((0, 0), (3, -1)))
    fam = RoughPathFamily.from_path(p)
    rep = holder_diagnostic(fam, 1, [(0, 1), (F(1, 2), 2), (0, 2)], 1)
    assert rep == {"1": F(3, 2), "2": F(1, 2)}


def test_q_examples():
    bck = named_algebra("bck", ("",))
    assert q_character(bck, NP("[]")) == 1
    assert q_character(bck, NP("[[]]")) == F(1, 2)
    assert q_character(bck, NP("[[][]]")) == F(1, 3)
    assert q_character(bck, NP("[[[]]]")) == F(1, 6)
    assert tree_factorial(NP("[[[]]]")) == 6


def test_tree_factorials_match_hook_formula():
    bck = named_algebra("bck", ("",))
    for x in bck.basis_upto(6):
        if len(x) == 1:
            assert tree_factorial(x, bck) == hook_factorial(x[0])


@pytest.mark.parametrize("tag,alphabet", [("bck", ("",)), ("mkw", ("",)), ("shuffle", ("1", "2"))])
def test_q_is_a_character(tag, alphabet):
    alg = named_algebra(tag, alphabet)
    for x in alg.basis_upto(3):
        for y in alg.basis_upto(5 - alg.degree(x)):
            if x and y:
                val = sum(c * q_character(alg, z) for z, c in alg.product(x, y).items())
                assert val == q_character(alg, x) * q_character(alg, y)


def test_q_on_words_is_inverse_factorial():
    sh = named_algebra("shuffle", ("1", "2"))
    assert q_character(sh, ("1", "2", "1")) == F(1, 6)


def test_q_gamma():
    bck = named_algebra("bck", ("",))
    for x in bck.basis_upto(5):
        if x:
            assert q_gamma(bck, x, 1) == q_character(bck, x)
    for g in (F(1, 3), F(1, 2), F(3, 4)):
        assert q_gamma(bck, NP("[]"), g) == 1
    assert abs(q_gamma(bck, NP("[[[]]]"), F(1, 2)) - 1.2071067811865) < 1e-12
    assert q_gamma(bck, NP("[[]]"), F(1, 2)) == F(1, 2)
    # below ceil(1/gamma) the recursion is q itself
    assert isinstance(q_gamma(bck, NP("[[[[]]]]"), F(1, 4)), F)
    with pytest.raises(ValueError):
        q_gamma(bck, NP("[]"), 0)


def test_factorial_decay_constant_bounds_sample():
    p = random_path(random.Random(3))
    fam = RoughPathFamily.from_path(p)
    sample = [(p.times[0], p.times[-1]), (p.times[0], p.times[1])]
    c = factorial_decay_constant(fam, sample, 4)
    sh = fam.algebra
    for s, t in sample:
        X = fam(s, t, 4)
        for x in sh.basis_upto(4):
            if x:
                bound = c ** len(x) * float(q_character(sh, x)) * float(t - s) ** len(x)
                assert abs(float(X(x))) <= bound * (1 + 1e-9)


def test_translation_of_signature():
    fam = RoughPathFamily.from_path(LINE)
    sh = fam.algebra
    zero = SubstitutionRule(sh, {})
    assert translate_roughpath(zero, fam, 0, 1, 3) == fam(0, 1, 3)
    lie = LinComb({("1", "2"): 1, ("2", "1"): -1})
    v = SubstitutionRule(sh, {"1": lie})
    X, TX = fam(0, 1, 2), translate_functional(v, fam(0, 1, 2), 2)
    assert TX(("1",)) == X(("1",))
    assert TX(("1", "2")) == X(("1", "2")) + X(("1",))
    assert TX(("2", "1")) == X(("2", "1")) - X(("1",))
    tf = translated_family(v, fam)
    assert chen_check(tf, 0, F(1, 4), 1, 3) and character_check(sh, tf(0, 1, 3), 3)


def test_branched_family_and_series():
    mkw = named_algebra("mkw", ("1", "2"))
    zeta = [{fo.parse("[1]", fo.PLANAR): 1, fo.parse("[2[1]]", fo.PLANAR): F(1, 2)},
            {fo.parse("[2]", fo.PLANAR): -1}]
    fam = RoughPathFamily.piecewise_exponential(mkw, (0, 1, 3), zeta)
    assert chen_check(fam, 0, F(1, 2), 2, 3)
    assert character_check(mkw, fam(0, 3, 3), 3)
    ser = formal_word_series(fam, 0, 3, 3)
    assert ser == fam(0, 3, 3).terms
    counit = RoughPathFamily.from_functionals(mkw, lambda s, t, N: mkw.counit_functional(N))
    assert formal_word_series(counit, 0, 1, 3) == LinComb.basis(())
    v = random_rule(mkw, random.Random(8))
    ts = formal_word_series(translated_family(v, fam), 0, 3, 3)
    want = LinComb()
    for x, c in ser.items():
        want.iadd_scaled(v.shifted().apply_basis(x, 3), c)
    assert ts == want


def test_roughpath_suite():
    rep = roughpath_suite(4, 20, seed=0)
    assert rep["passed"], rep["checks"]
