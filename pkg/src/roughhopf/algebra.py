"""Exact sparse linear combinations, tensors and truncated functionals.

A :class:`LinComb` maps canonical basis keys to coefficients and never stores
a zero.  Coefficients are :class:`fractions.Fraction` by default, but any
object supporting ``+``, ``*``, unary ``-`` and truthiness works (the
coaction oracle uses :class:`Poly`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping


class DegreeOverflowError(ValueError):
    """A basis element exceeds the degree cap of a functional."""


def as_coeff(c: Any) -> Any:
    if isinstance(c, int):
        return Fraction(c)
    return c


class LinComb(dict):
    """Finite linear combination ``{basis key: coefficient}`` with no zeros."""

    def __init__(self, data: Mapping | Iterable | None = None):
        super().__init__()
        if data is None:
            return
        items = data.items() if isinstance(data, Mapping) else data
        for k, c in items:
            self.add_term(k, c)

    @classmethod
    def basis(cls, key: Hashable, coeff: Any = 1) -> "LinComb":
        return cls([(key, coeff)])

    def add_term(self, key: Hashable, coeff: Any) -> None:
        if not coeff:
            return
        new = self.get(key, 0) + coeff
        if new:
            super().__setitem__(key, as_coeff(new))
        else:
            self.pop(key, None)

    def iadd_scaled(self, other: Mapping, scale: Any = 1) -> "LinComb":
        if not scale:
            return self
        one = scale == 1 if isinstance(scale, (int, Fraction)) else False
        for k, c in other.items():
            self.add_term(k, c if one else c * scale)
        return self

    def __iadd__(self, other: Mapping) -> "LinComb":
        return self.iadd_scaled(other)

    def __isub__(self, other: Mapping) -> "LinComb":
        return self.iadd_scaled(other, -1)

    def __add__(self, other: Mapping) -> "LinComb":
        return type(self)(self).iadd_scaled(other)

    def __sub__(self, other: Mapping) -> "LinComb":
        return type(self)(self).iadd_scaled(other, -1)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def scale(self, s: Any) -> "LinComb":
        out = type(self)()
        if not s:
            return out
        for k, c in self.items():
            out.add_term(k, c * s)
        return out

    def __mul__(self, s: Any) -> "LinComb":
        return self.scale(s)

    def __rmul__(self, s: Any) -> "LinComb":
        return self.scale(s)

    def coeff(self, key: Hashable) -> Any:
        return self.get(key, Fraction(0))

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "LinComb":
        out = type(self)()
        for k, c in self.items():
            out.add_term(f(k), c)
        return out

    def filter(self, pred: Callable[[Hashable], bool]) -> "LinComb":
        return type(self)((k, c) for k, c in self.items() if pred(k))

    def sorted_items(self, key: Callable[[Hashable], Any] = repr) -> list:
        return sorted(self.items(), key=lambda kc: key(kc[0]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self)!r})"


def linear(f: Callable[[Hashable], Mapping], x: Mapping) -> LinComb:
    """Extend a basis map ``f`` (key -> LinComb) linearly to ``x``."""
    out = LinComb()
    for k, c in x.items():
        out.iadd_scaled(f(k), c)
    return out


def bilinear(f: Callable[[Hashable, Hashable], Mapping], a: Mapping, b: Mapping) -> LinComb:
    out = LinComb()
    for ka, ca in a.items():
        for kb, cb in b.items():
            out.iadd_scaled(f(ka, kb), ca * cb)
    return out


class TensorLC(LinComb):
    """Linear combination of pure tensors; keys are tuples of basis keys."""


def tensor(*factors: Mapping) -> TensorLC:
    out = TensorLC([((), Fraction(1))])
    for fac in factors:
        nxt = TensorLC()
        for k, c in out.items():
            for kf, cf in fac.items():
                nxt.add_term(k + (kf,), c * cf)
        out = nxt
    return out


def tensor_map(t: Mapping, *maps: Callable[[Hashable], Mapping] | None) -> TensorLC:
    """Apply one linear map per tensor leg (``None`` is the identity)."""
    out = TensorLC()
    for key, c in t.items():
        legs = [LinComb.basis(k) if m is None else m(k) for k, m in zip(key, maps)]
        for kk, cc in tensor(*legs).items():
            out.add_term(kk, c * cc)
    return out


@dataclass(frozen=True)
class Functional:
    """Truncated element of a completed dual: exact on degrees ``<= cap``.

    ``terms`` holds the dual-basis coordinates ``x -> <f, x>``.
    """

    terms: LinComb
    cap: int
    degree: Callable[[Hashable], int]

    def __post_init__(self):
        for k in self.terms:
            if self.degree(k) > self.cap:
                raise DegreeOverflowError(f"term of degree {self.degree(k)} above cap {self.cap}")

    def __call__(self, key: Hashable) -> Any:
        if self.degree(key) > self.cap:
            raise DegreeOverflowError(f"basis element of degree {self.degree(key)} above cap {self.cap}")
        return self.terms.coeff(key)

    def truncate(self, cap: int) -> "Functional":
        return Functional(self.terms.filter(lambda k: self.degree(k) <= cap), cap, self.degree)

    def __add__(self, other: "Functional") -> "Functional":
        cap = min(self.cap, other.cap)
        return Functional((self.terms + other.terms).filter(lambda k: self.degree(k) <= cap), cap, self.degree)

    def __sub__(self, other: "Functional") -> "Functional":
        return self + other.scale(-1)

    def scale(self, s: Any) -> "Functional":
        return Functional(self.terms.scale(s), self.cap, self.degree)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Functional) and self.cap == other.cap and self.terms == other.terms

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))


def pairing(f: Functional, x: Mapping) -> Any:
    """``<f, x>`` for a finite combination ``x``; bilinear."""
    total = Fraction(0)
    for k, c in x.items():
        v = f(k)
        if v:
            total = total + v * c
    return total


def convolve(a: Functional, b: Functional, coproduct: Callable[[Hashable], Mapping],
             basis: Callable[[int], Iterable[Hashable]], N: int) -> Functional:
    """``x -> (a (x) b)(Delta x)`` on every basis element of degree ``<= N``."""
    if a.cap < N or b.cap < N:
        raise DegreeOverflowError(f"convolution to degree {N} needs caps >= {N}")
    out = LinComb()
    for n in range(N + 1):
        for x in basis(n):
            s = Fraction(0)
            for (k1, k2), c in coproduct(x).items():
                v1 = a.terms.get(k1)
                if not v1:
                    continue
                v2 = b.terms.get(k2)
                if v2:
                    s = s + c * v1 * v2
            out.add_term(x, s)
    return Functional(out, N, a.degree)


class Poly:
    """Commutative polynomial with exact coefficients.

    Monomials are sorted tuples of variables (repetition encodes powers);
    variables are arbitrary orderable hashables.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms: dict = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = self.terms.get(m, 0) + c
            self.terms = {m: Fraction(c) for m, c in self.terms.items() if c}

    @classmethod
    def var(cls, v: Hashable) -> "Poly":
        return cls({(v,): 1})

    @classmethod
    def const(cls, c: Any) -> "Poly":
        return cls({(): c})

    def _coerce(self, other: Any) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other: Any) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            p = Poly()
            p.terms = {m: c * other for m, c in self.terms.items()}
            return p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        return self * (Fraction(1) / Fraction(other))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values: Callable[[Hashable], Any]) -> Any:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v in m:
                term = term * values(v)
                if not term:
                    break
            total = total + term
        return total

    def __repr__(self) -> str:
        return f"Poly({self.terms!r})"


# -- serialization ---------------------------------------------------------

def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(s: str | int) -> Fraction:
    return Fraction(s)


def lincomb_to_json(x: Mapping, render: Callable[[Hashable], str]) -> dict:
    terms = sorted(((render(k), c) for k, c in x.items()), key=lambda t: t[0])
    return {"terms": [{"coeff": format_rational(c), "basis": b} for b, c in terms]}


def lincomb_from_json(obj: Mapping | list, parse: Callable[[str], Hashable]) -> LinComb:
    terms = obj["terms"] if isinstance(obj, Mapping) else obj
    return LinComb((parse(t["basis"]), parse_rational(t["coeff"])) for t in terms)


def iter_sorted(x: Mapping, render: Callable[[Hashable], str]) -> Iterator:
    yield from sorted(x.items(), key=lambda kc: render(kc[0]))
