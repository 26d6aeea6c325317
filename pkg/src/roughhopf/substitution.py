"""Substitutions ``S_v`` and translations ``T_v`` on truncated duals.

Dual-basis functionals are handled as linear combinations of basis keys, so
``delta_x`` is simply ``LinComb.basis(x)``.  A substitution is fixed by the
images ``v_i`` of the letters and extended as the unique morphism of the
relevant structure:

* shuffle: concatenation;
* bck: the dual pre-Lie product (trees) and the Grossman-Larson product
  (forests);
* mkw: post-Lie grafting (trees) and concatenation (forests).

Every image has no constant term, so all products only raise degree and
truncating intermediate results at the cap is exact.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from . import forests as fo
from .algebra import Functional, LinComb, lincomb_from_json, lincomb_to_json, pairing
from .hopf import HopfAlgebra, lincomb_postlie, named_algebra


class RuleError(ValueError):
    """A substitution rule is malformed or not primitive."""


def _truncate(a: LinComb, alg: HopfAlgebra, cap: int) -> LinComb:
    return a.filter(lambda k: alg.degree(k) <= cap)


def concat_capped(alg: HopfAlgebra, a: LinComb, b: LinComb, cap: int) -> LinComb:
    out = LinComb()
    for ka, ca in a.items():
        da = alg.degree(ka)
        for kb, cb in b.items():
            if da + alg.degree(kb) <= cap:
                out.add_term(ka + kb, ca * cb)
    return out


def _decomposable_pairs(alg: HopfAlgebra, n: int):
    for d in range(1, n // 2 + 1):
        for x in alg.basis(d):
            for y in alg.basis(n - d):
                yield x, y


def check_primitive(alg: HopfAlgebra, v: LinComb | Functional, cap: int | None = None) -> bool:
    """True iff ``v`` kills the unit and every product ``x . y`` of
    augmentation-ideal basis elements up to the cap."""
    terms = v.terms if isinstance(v, Functional) else LinComb(v)
    if cap is None:
        cap = v.cap if isinstance(v, Functional) else max((alg.degree(k) for k in terms), default=0)
    if terms.coeff(alg.unit):
        return False
    if alg.tag == "bck":
        return all(len(k) == 1 for k in terms if alg.degree(k) <= cap)
    degrees = {alg.degree(k) for k in terms if alg.degree(k) <= cap}
    for n in sorted(degrees):
        for x, y in _decomposable_pairs(alg, n):
            if pairing_lc(terms, alg.product(x, y)):
                return False
    return True


def pairing_lc(f: Mapping, x: Mapping) -> Any:
    total = Fraction(0)
    for k, c in x.items():
        v = f.get(k)
        if v:
            total = total + v * c
    return total


@dataclass
class SubstitutionRule:
    """Letter images ``v_i``; letters without an image map to 0."""

    algebra: HopfAlgebra
    images: dict
    branch: Any = "least"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.algebra.tag not in ("shuffle", "bck", "mkw"):
            raise RuleError(f"substitution is not defined on {self.algebra.tag}")
        imgs = {}
        for a, v in self.images.items():
            if a not in self.algebra.alphabet:
                raise RuleError(f"letter {a!r} not in alphabet")
            imgs[a] = LinComb(v)
        for a in self.algebra.alphabet:
            imgs.setdefault(a, LinComb())
        self.images = imgs

    @property
    def max_degree(self) -> int:
        return max((self.algebra.degree(k) for v in self.images.values() for k in v), default=0)

    def validate(self) -> None:
        for a, v in self.images.items():
            if not check_primitive(self.algebra, v):
                raise RuleError(f"image of letter {a!r} is not primitive")

    @classmethod
    def identity(cls, alg: HopfAlgebra) -> "SubstitutionRule":
        return cls(alg, {a: LinComb.basis(alg.letter(a)) for a in alg.alphabet})

    def shifted(self) -> "SubstitutionRule":
        """The rule ``v_i + e_i``: substituting by it translates by ``v``."""
        alg = self.algebra
        return SubstitutionRule(alg, {a: v + LinComb.basis(alg.letter(a)) for a, v in self.images.items()},
                                self.branch)

    # -- evaluation --------------------------------------------------------

    def __call__(self, x, cap: int) -> LinComb:
        return self.apply_basis(x, cap)

    def apply_basis(self, x, cap: int) -> LinComb:
        alg = self.algebra
        key = (x, cap)
        if key in self._cache:
            return self._cache[key]
        n = alg.degree(x)
        if n == 0:
            res = LinComb.basis(alg.unit)
        elif alg.tag == "shuffle":
            res = self._word(x, cap)
        elif len(x) == 1:
            res = self._tree(x[0], cap)
        elif alg.tag == "bck":
            res = self._bck_forest(x, cap)
        else:
            res = LinComb.basis(())
            for t in x:
                res = concat_capped(alg, res, self.apply_basis((t,), cap), cap)
        self._cache[key] = res
        return res

    def apply(self, a: Mapping, cap: int) -> LinComb:
        out = LinComb()
        for k, c in a.items():
            out.iadd_scaled(self.apply_basis(k, cap), c)
        return out

    def _word(self, w, cap):
        alg = self.algebra
        res = LinComb.basis(())
        for a in w:
            res = concat_capped(alg, res, _truncate(self.images[a], alg, cap), cap)
        return res

    def _rng(self):
        return self.branch if isinstance(self.branch, _random.Random) else _random.Random(self.branch)

    def _mkw_root_route(self) -> bool:
        if self.branch == "least":
            return False
        return self.branch == "greatest" or self._rng().random() < 0.5

    def _pick_branch(self, children: tuple) -> int:
        if self.algebra.tag == "mkw":
            return 0
        if self.branch == "least":
            return min(range(len(children)), key=lambda i: children[i])
        if self.branch == "greatest":
            return max(range(len(children)), key=lambda i: children[i])
        return self._rng().randrange(len(children))

    def _tree(self, t, cap):
        alg = self.algebra
        label, children = t
        if not children:
            return _truncate(self.images[label], alg, cap)
        if alg.tag == "mkw" and self._mkw_root_route():
            return self._mkw_forest_onto_root(t, cap)
        i = self._pick_branch(children)
        sigma = children[i]
        rest = (label, children[:i] + children[i + 1:])
        if alg.tag == "bck":
            rest = fo.canonical_tree(rest)
            graft = alg.prelie_dual((sigma,), (rest,))
            s = alg.lincomb_prelie_dual(self.apply_basis((sigma,), cap), self.apply_basis((rest,), cap), cap)
        else:
            graft = lincomb_postlie(LinComb.basis((sigma,)), LinComb.basis((rest,)))
            s = lincomb_postlie(self.apply_basis((sigma,), cap), self.apply_basis((rest,), cap), cap)
        # graft = c * t + (trees with sigma attached deeper)
        c = graft.pop((t,))
        for u, cu in graft.items():
            s.iadd_scaled(self.apply_basis(u, cap), -cu)
        return s.scale(Fraction(1) / c) if c != 1 else s

    def _mkw_forest_onto_root(self, t, cap):
        # children -> root = t + (same size, fewer root children)
        label, children = t
        root = ((label, ()),)
        graft = lincomb_postlie(LinComb.basis(children), LinComb.basis(root))
        c = graft.pop((t,))
        s = lincomb_postlie(self.apply_basis(children, cap), self.apply_basis(root, cap), cap)
        for u, cu in graft.items():
            s.iadd_scaled(self.apply_basis(u, cap), -cu)
        return s.scale(Fraction(1) / c) if c != 1 else s

    def _bck_forest(self, x, cap):
        alg = self.algebra
        head, tail = (x[0],), x[1:]
        prod = alg.dual_product(head, tail)
        # prod = c * x + (forests with fewer trees)
        c = prod.pop(x)
        s = alg.lincomb_dual_product(self.apply_basis(head, cap), self.apply_basis(tail, cap), cap)
        for u, cu in prod.items():
            s.iadd_scaled(self.apply_basis(u, cap), -cu)
        return s.scale(Fraction(1) / c) if c != 1 else s

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        alg = self.algebra
        return {"algebra": alg.tag,
                "images": {a: lincomb_to_json(v, alg.render)["terms"] for a, v in sorted(self.images.items()) if v}}

    @classmethod
    def from_json(cls, obj: Mapping, alphabet: tuple | None = None, validate: bool = True) -> "SubstitutionRule":
        tag = obj["algebra"]
        if alphabet is None:
            alphabet = infer_alphabet(tag, obj["images"])
        alg = named_algebra(tag, tuple(alphabet))
        images = {a: lincomb_from_json(terms, alg.parse) for a, terms in obj["images"].items()}
        rule = cls(alg, images)
        if validate:
            rule.validate()
        return rule


def infer_alphabet(tag: str, images: Mapping) -> tuple:
    """Letters named as rule keys or occurring in the image bases."""
    kind = named_algebra(tag, ("",)).kind
    letters = set(images)
    for terms in images.values():
        for t in terms:
            if kind == fo.WORD:
                letters.update(fo.parse_word(t["basis"]))
            else:
                letters.update(fo.labels(fo.parse_forest(t["basis"]), kind))
    return tuple(sorted(letters))


def substitute(rule: SubstitutionRule, x, N: int) -> Functional:
    """``S_v(delta_x)`` exact on degrees ``<= N``."""
    return rule.algebra.functional(rule.apply_basis(x, N), N)


def translate(rule: SubstitutionRule, x, N: int) -> Functional:
    """``T_v(delta_x)``; equal to substitution by ``{v_i + e_i}``."""
    return substitute(rule.shifted(), x, N)


def compose(outer: SubstitutionRule, inner: SubstitutionRule, cap: int) -> SubstitutionRule:
    """The rule ``{S_outer(u_i)}`` so that ``S_outer o S_inner = S_composed``."""
    return SubstitutionRule(outer.algebra, {a: outer.apply(u, cap) for a, u in inner.images.items()})


def translation_sum(v: SubstitutionRule, u: SubstitutionRule, cap: int) -> SubstitutionRule:
    """The rule ``{v_i + T_v(u_i)}`` so that ``T_v o T_u = T_sum``."""
    tv = v.shifted()
    return SubstitutionRule(v.algebra, {a: v.images[a] + tv.apply(u.images[a], cap) for a in v.algebra.alphabet})


@dataclass(frozen=True)
class ExpCharacter:
    """The character ``e^v`` on the symmetric algebra over ``H_in x letters``.

    A left-leg monomial is a sequence of ``(content, letter)`` pairs; the
    character sends it to the product of ``<v_letter, content>``."""

    rule: SubstitutionRule

    def factor(self, content, letter: str) -> Any:
        v = self.rule.images[letter]
        if isinstance(content, Mapping):
            return pairing_lc(v, content)
        return v.coeff(content)

    def __call__(self, monomial) -> Any:
        out: Any = Fraction(1)
        for content, letter in monomial:
            out = out * self.factor(content, letter)
            if not out:
                return out
        return out


def eval_exp(char: ExpCharacter, monomial) -> Any:
    return char(monomial)


def random_rule(alg: HopfAlgebra, rng: _random.Random, max_degree: int = 2, density: float = 0.5,
                coeffs=(-2, -1, 1, 2)) -> SubstitutionRule:
    """A random primitive rule with images of degree ``1..max_degree``.

    Primitives are produced as commutators (shuffle, mkw) or single trees (bck).
    """
    images = {}
    for a in alg.alphabet:
        v = LinComb()
        for n in range(1, max_degree + 1):
            for p in primitive_spanning_set(alg, n):
                if rng.random() < density:
                    v.iadd_scaled(p, rng.choice(coeffs))
        images[a] = v
    return SubstitutionRule(alg, images)


def primitive_spanning_set(alg: HopfAlgebra, n: int) -> list[LinComb]:
    """Primitive dual elements spanning degree ``n`` (not necessarily a basis)."""
    if alg.tag == "bck":
        return [LinComb.basis(t) for t in alg.basis(n) if len(t) == 1]
    if n == 1:
        return [LinComb.basis(x) for x in alg.basis(1)]
    gens = alg.basis(1) if alg.tag == "shuffle" else [(t,) for t in fo.enumerate_trees(fo.PLANAR, n, alg.alphabet)]
    out = [LinComb.basis(g) for g in gens if alg.degree(g) == n] if alg.tag == "mkw" else []
    # brackets [p, q] = pq - qp of lower primitives
    for d in range(1, n // 2 + 1):
        for p in primitive_spanning_set(alg, d):
            for q in primitive_spanning_set(alg, n - d):
                br = concat_capped(alg, p, q, n) - concat_capped(alg, q, p, n)
                if br and br not in out:
                    out.append(br)
    return out
