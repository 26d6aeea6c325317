"""Indecomposables of shuffle algebras.

A shuffle algebra over a totally ordered alphabet is free commutative on its
Lyndon words.  Modulo the ideal of shuffle-decomposables (``x ⧢ y`` with
``x, y`` nonempty) every word therefore reduces to a unique combination of
Lyndon words.  The alphabet may be anything orderable; planar forests are
treated as words over trees.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import LinComb


def is_lyndon(w: tuple) -> bool:
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def lyndon_factorization(w: tuple) -> list[tuple]:
    """Duval: ``w = l1 l2 ... lk`` with ``l1 >= l2 >= ... >= lk`` Lyndon."""
    out = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def _shuffle_many(factors: list[tuple]) -> LinComb:
    from .hopf import lincomb_shuffle

    acc = LinComb.basis(())
    for f in factors:
        acc = lincomb_shuffle(acc, LinComb.basis(f))
    return acc


@lru_cache(maxsize=None)
def _reduce(w: tuple) -> tuple:
    if is_lyndon(w):
        return ((w, Fraction(1)),)
    factors = lyndon_factorization(w)
    # l1 ⧢ ... ⧢ lk = (prod of multiplicity factorials) w + (words < w)
    prod = _shuffle_many(factors)
    lead = prod.pop(w)
    mult = 1
    for f in set(factors):
        mult *= factorial(factors.count(f))
    assert lead == mult, "Lyndon triangularity violated"
    out = LinComb()
    for u, c in prod.items():
        assert u < w, "Lyndon triangularity violated"
        out.iadd_scaled(LinComb(_reduce(u)), -c / lead)
    return tuple(out.items())


def reduce_indecomposable(w: tuple) -> LinComb:
    """Class of the word ``w`` modulo shuffle-decomposables, in the Lyndon basis.

    The empty word (the unit) is not in the augmentation ideal and maps to 0.
    """
    if not w:
        return LinComb()
    return LinComb(_reduce(tuple(w)))


def lyndon_words(letters: list, n: int) -> list[tuple]:
    """Lyndon words of length ``n`` over the sorted ``letters``."""
    import itertools

    return [w for w in itertools.product(sorted(letters), repeat=n) if is_lyndon(w)]
