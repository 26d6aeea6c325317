"""Randomized verification suites shared by the CLI and the test-suite."""

from __future__ import annotations

import random
from fractions import Fraction

from . import forests as fo
from .algebra import LinComb
from .hopf import HopfAlgebra, axiom_check, named_algebra
from .roughpath import (PiecewiseLinearPath, RoughPathFamily, character_check, chen_check, exp_star,
                        q_character, q_gamma, translated_family)
from .substitution import (SubstitutionRule, check_primitive, compose, concat_capped, primitive_spanning_set,
                           random_rule, translation_sum)


def _report(suite: str, alg: HopfAlgebra | None, N: int, checks: dict, **extra) -> dict:
    rep = {"suite": suite, "degree": N, "checks": checks, "passed": all(c["passed"] for c in checks.values())}
    if alg is not None:
        rep["algebra"] = alg.tag
        rep["alphabet"] = list(alg.alphabet)
    rep.update(extra)
    return rep


class _Tally:
    def __init__(self):
        self.checks: dict = {}

    def __call__(self, name: str, ok: bool, witness=None):
        c = self.checks.setdefault(name, {"passed": True, "checked": 0, "counterexample": None})
        c["checked"] += 1
        if not ok and c["passed"]:
            c["passed"] = False
            c["counterexample"] = witness


def random_infinitesimal(alg: HopfAlgebra, rng: random.Random, N: int) -> LinComb:
    z = LinComb()
    for n in range(1, N + 1):
        for p in primitive_spanning_set(alg, n):
            if rng.random() < 0.5:
                z.iadd_scaled(p, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return z


def translation_suite(alg: HopfAlgebra, N: int = 3, trials: int = 50, seed: int = 0) -> dict:
    """Composition, character, convolution and (mkw) concatenation laws of
    translations for random primitive rules of degree <= 2."""
    rng = random.Random(seed)
    tally = _Tally()
    basis = [x for x in alg.basis_upto(N)]
    for trial in range(trials):
        v = random_rule(alg, rng)
        u = random_rule(alg, rng)
        tv, tu = v.shifted(), u.shifted()
        ts = translation_sum(v, u, N).shifted()
        sc = compose(v, u, N)
        for x in basis:
            r = alg.render(x)
            tally("translation_composition", tv.apply(tu.apply_basis(x, N), N) == ts.apply_basis(x, N), r)
            tally("substitution_composition", v.apply(u.apply_basis(x, N), N) == sc.apply_basis(x, N), r)
            img = v.apply_basis(x, N)
            tally("degree_bound", all(alg.degree(k) <= v.max_degree * alg.degree(x) for k in img), r)
        for x in basis:
            for y in basis:
                if not x or not y or alg.degree(x) + alg.degree(y) > N:
                    continue
                lhs = tv.apply(alg.dual_product(x, y), N)
                rhs = alg.lincomb_dual_product(tv.apply_basis(x, N), tv.apply_basis(y, N), N)
                tally("convolution_morphism", lhs == rhs, f"{alg.render(x)} , {alg.render(y)}")
                if alg.tag == "mkw":
                    lhs = tv.apply_basis(x + y, N)
                    rhs = concat_capped(alg, tv.apply_basis(x, N), tv.apply_basis(y, N), N)
                    tally("concatenation_morphism", lhs == rhs, f"{alg.render(x)} , {alg.render(y)}")
        for a in alg.alphabet:
            tally("primitive_to_primitive", check_primitive(alg, v.apply(u.images[a], N), N), a)
        chi = exp_star(alg, alg.functional(random_infinitesimal(alg, rng, N), N), N)
        tchi = alg.functional(tv.apply(chi.terms, N), N)
        tally("character_preservation", character_check(alg, tchi, N), f"trial {trial}")
    return _report("translation", alg, N, tally.checks, trials=trials, seed=seed)


def branch_independence(alg: HopfAlgebra, N: int = 4, trials: int = 5, seed: int = 0) -> dict:
    """Substitution with the least and with random root branches agrees on trees.

    On mkw the random choice is, per vertex, between the leftmost branch and
    grafting the whole branch forest onto the root.
    """
    rng = random.Random(seed)
    tally = _Tally()
    trees = [x for x in alg.basis_upto(N) if len(x) == 1]
    for _ in range(trials):
        v = random_rule(alg, rng)
        fixed = SubstitutionRule(alg, v.images, "least")
        other = SubstitutionRule(alg, v.images, random.Random(rng.random()))
        for x in trees:
            tally("branch_independence", fixed.apply_basis(x, N) == other.apply_basis(x, N), alg.render(x))
    return _report("branch", alg, N, tally.checks)


def random_path(rng: random.Random, d: int = 2, pieces: int = 3) -> PiecewiseLinearPath:
    times = [Fraction(0)]
    for _ in range(pieces):
        times.append(times[-1] + Fraction(rng.randint(1, 4), rng.randint(1, 3)))
    values = [tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d)) for _ in times]
    return PiecewiseLinearPath(tuple(times), tuple(values))


def _random_triple(rng: random.Random, lo: Fraction, hi: Fraction) -> tuple:
    pts = sorted(lo + (hi - lo) * Fraction(rng.randint(0, 60), 60) for _ in range(3))
    return tuple(pts)


def hook_factorial(t) -> int:
    """Product of subtree sizes over all vertices."""
    def walk(u):
        size, prod = 1, 1
        for c in u[1]:
            s, p = walk(c)
            size += s
            prod *= p
        return size, prod * size
    return walk(t)[1]


def roughpath_suite(N: int = 4, triples: int = 20, seed: int = 0) -> dict:
    rng = random.Random(seed)
    tally = _Tally()
    path = random_path(rng)
    fam = RoughPathFamily.from_path(path)
    sh = fam.algebra
    lo, hi = path.times[0], path.times[-1]
    for _ in range(triples):
        s, u, t = _random_triple(rng, lo, hi)
        tally("chen", chen_check(fam, s, u, t, N), f"{s} {u} {t}")
    tally("character", character_check(sh, fam(lo, hi, N), N), "full interval")
    for trial in range(3):
        v = random_rule(sh, rng)
        tf = translated_family(v, fam)
        s, u, t = _random_triple(rng, lo, hi)
        tally("translated_chen", chen_check(tf, s, u, t, 3), f"{s} {u} {t}")
        tally("translated_character", character_check(sh, tf(s, t, 3), 3), f"{s} {t}")
    bck = named_algebra("bck", ("",))
    for x in bck.basis_upto(N):
        if len(x) == 1:
            tally("tree_factorial", 1 / q_character(bck, x) == hook_factorial(x[0]), bck.render(x))
    for tag, alph in (("bck", ("",)), ("mkw", ("",)), ("shuffle", ("1", "2"))):
        alg = named_algebra(tag, alph)
        for x in alg.basis_upto(N + 1):
            if x:
                tally("q_gamma_at_one", q_gamma(alg, x, 1) == q_character(alg, x), f"{tag} {alg.render(x)}")
    return _report("roughpath", None, N, tally.checks, seed=seed)


def hopf_suite(alg: HopfAlgebra, N: int) -> dict:
    return axiom_check(alg, N)
