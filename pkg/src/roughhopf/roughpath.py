"""Rough paths at desk scale.

Geometric paths come from piecewise-linear data and their exact truncated
signatures.  Branched and planarly branched families are built as
``X_st = exp_*((t - s) zeta)`` per segment from infinitesimal characters
``zeta``, composed by Chen's relation.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .algebra import Functional, LinComb
from .hopf import HopfAlgebra, named_algebra
from .substitution import SubstitutionRule


class PathDomainError(ValueError):
    pass


def letters(d: int) -> tuple:
    return tuple(str(i + 1) for i in range(d))


@dataclass(frozen=True)
class PiecewiseLinearPath:
    times: tuple
    values: tuple

    def __post_init__(self):
        times = tuple(Fraction(t) for t in self.times)
        values = tuple(tuple(Fraction(v) for v in row) for row in self.values)
        if len(times) < 2:
            raise PathDomainError("a path needs at least two breakpoints")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise PathDomainError("breakpoint times must be strictly increasing")
        if len(values) != len(times) or len({len(v) for v in values}) != 1:
            raise PathDomainError("one value vector of common dimension per breakpoint")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @property
    def dimension(self) -> int:
        return len(self.values[0])

    @property
    def alphabet(self) -> tuple:
        return letters(self.dimension)

    def __call__(self, t) -> tuple:
        t = Fraction(t)
        if not self.times[0] <= t <= self.times[-1]:
            raise PathDomainError(f"time {t} outside [{self.times[0]}, {self.times[-1]}]")
        i = min(bisect_right(self.times, t), len(self.times) - 1)
        a, b = self.times[i - 1], self.times[i]
        lam = (t - a) / (b - a)
        return tuple(x + lam * (y - x) for x, y in zip(self.values[i - 1], self.values[i]))

    def segments(self, s, t) -> list[tuple]:
        """Increments ``(dt, dx)`` of the linear pieces of ``[s, t]``."""
        s, t = Fraction(s), Fraction(t)
        if s > t:
            raise PathDomainError("need s <= t")
        self(s), self(t)
        cuts = [s] + [u for u in self.times if s < u < t] + [t]
        out = []
        for a, b in zip(cuts, cuts[1:]):
            xa, xb = self(a), self(b)
            out.append((b - a, tuple(y - x for x, y in zip(xa, xb))))
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "PiecewiseLinearPath":
        pts = obj["points"]
        path = cls(tuple(p["t"] for p in pts), tuple(tuple(p["x"]) for p in pts))
        if "dimension" in obj and int(obj["dimension"]) != path.dimension:
            raise PathDomainError("declared dimension does not match the points")
        return path

    def to_json(self) -> dict:
        from .algebra import format_rational as fr
        return {"dimension": self.dimension,
                "points": [{"t": fr(t), "x": [fr(v) for v in x]} for t, x in zip(self.times, self.values)]}


def _segment_signature(alg: HopfAlgebra, dx: Sequence, N: int) -> Functional:
    out = LinComb()
    coord = dict(zip(alg.alphabet, dx))
    for n in range(N + 1):
        inv = Fraction(1, math.factorial(n))
        for w in alg.basis(n):
            c = inv
            for a in w:
                c *= coord[a]
                if not c:
                    break
            out.add_term(w, c)
    return alg.functional(out, N)


def signature(path: PiecewiseLinearPath, s, t, N: int) -> Functional:
    """Exact truncated signature of ``path`` over ``[s, t]``."""
    alg = named_algebra("shuffle", path.alphabet)
    X = alg.counit_functional(N)
    for _, dx in path.segments(s, t):
        X = alg.convolve(X, _segment_signature(alg, dx, N), N)
    return X


def exp_star(alg: HopfAlgebra, zeta: Functional, N: int) -> Functional:
    """``sum_k zeta^{*k} / k!`` truncated at ``N``; ``zeta`` must kill the unit."""
    if zeta.terms.coeff(alg.unit):
        raise ValueError("exp needs an element without constant term")
    zeta = alg.functional(zeta.terms.filter(lambda k: alg.degree(k) <= N), N)
    out = alg.counit_functional(N)
    power = alg.counit_functional(N)
    for k in range(1, N + 1):
        power = alg.convolve(power, zeta, N).scale(Fraction(1, k))
        out = out + power
    return out


@dataclass
class RoughPathFamily:
    """``(s, t, N) -> X_st`` over a named algebra."""

    algebra: HopfAlgebra
    generator: Callable
    _cache: dict = field(default_factory=dict, repr=False)

    def __call__(self, s, t, N: int) -> Functional:
        key = (Fraction(s), Fraction(t), N)
        if key not in self._cache:
            self._cache[key] = self.generator(*key)
        return self._cache[key]

    @classmethod
    def from_path(cls, path: PiecewiseLinearPath) -> "RoughPathFamily":
        alg = named_algebra("shuffle", path.alphabet)
        return cls(alg, lambda s, t, N: signature(path, s, t, N))

    @classmethod
    def piecewise_exponential(cls, alg: HopfAlgebra, times: Sequence, generators: Sequence[Mapping]) -> "RoughPathFamily":
        """On ``[times[k], times[k+1]]`` the family is ``exp_*((t - s) zeta_k)``.

        Each ``zeta_k`` should be an infinitesimal character (a primitive
        element of the dual), so every ``X_st`` is a character.
        """
        times = [Fraction(t) for t in times]
        if len(generators) != len(times) - 1:
            raise ValueError("one generator per interval")
        zetas = [LinComb(g) for g in generators]

        def gen(s, t, N):
            if not times[0] <= s <= t <= times[-1]:
                raise PathDomainError("interval outside the family's domain")
            X = alg.counit_functional(N)
            for k, z in enumerate(zetas):
                a, b = max(s, times[k]), min(t, times[k + 1])
                if b > a:
                    step = alg.functional(z.filter(lambda x: alg.degree(x) <= N).scale(b - a), N)
                    X = alg.convolve(X, exp_star(alg, step, N), N)
            return X

        return cls(alg, gen)

    @classmethod
    def from_functionals(cls, alg: HopfAlgebra, fn: Callable) -> "RoughPathFamily":
        return cls(alg, fn)


def chen_check(X: RoughPathFamily, s, u, t, N: int) -> bool:
    return X.algebra.convolve(X(s, u, N), X(u, t, N), N) == X(s, t, N)


def character_check(alg: HopfAlgebra, f: Functional, N: int) -> bool:
    """``<f, 1> = 1`` and ``<f, x y> = <f, x><f, y>`` for degrees up to ``N``."""
    if f.terms.coeff(alg.unit) != 1:
        return False
    for dx in range(1, N):
        for x in alg.basis(dx):
            for dy in range(dx, N - dx + 1):
                for y in alg.basis(dy):
                    lhs = sum((c * f(z) for z, c in alg.product(x, y).items()), Fraction(0))
                    if lhs != f(x) * f(y):
                        return False
    return True


# -- inverse factorial character -------------------------------------------

@lru_cache(maxsize=None)
def _q(alg: HopfAlgebra, x) -> Fraction:
    n = alg.degree(x)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(1)
    s = Fraction(0)
    for (a, b), c in alg.reduced_coproduct(x).items():
        s += c * _q(alg, a) * _q(alg, b)
    return s / (2 ** n - 2)


def q_character(alg: HopfAlgebra, x) -> Fraction:
    """The inverse-factorial character ``q`` on a basis element."""
    if alg.tag == "cefm":
        raise ValueError("q needs a connected graded Hopf algebra")
    return _q(alg, x)


def tree_factorial(x, alg: HopfAlgebra | None = None) -> Fraction:
    if alg is None:
        alg = named_algebra("bck", tuple(sorted({t[0] for t in _vertices(x)})) or ("",))
    return 1 / q_character(alg, x)


def _vertices(x):
    stack = list(x)
    while stack:
        t = stack.pop()
        yield t
        stack.extend(t[1])


def q_gamma(alg: HopfAlgebra, x, gamma) -> Fraction | float:
    """``q_gamma`` of the factorial-decay estimate.

    Exact whenever every ``2^(gamma |y|)`` met is rational (``gamma |y|``
    integral); otherwise computed in double precision.
    """
    gamma = Fraction(gamma)
    if not 0 < gamma <= 1:
        raise ValueError("gamma must lie in (0, 1]")
    N = math.ceil(1 / gamma)
    memo: dict = {}

    def rec(y):
        if y in memo:
            return memo[y]
        n = alg.degree(y)
        if n <= N:
            val = q_character(alg, y)
        else:
            e = gamma * n
            denom = Fraction(2) ** int(e) - 2 if e.denominator == 1 else 2.0 ** float(e) - 2
            s = 0
            for (a, b), c in alg.reduced_coproduct(y).items():
                s += c * rec(a) * rec(b)
            val = s / denom
        memo[y] = val
        return val

    return rec(x)


def holder_diagnostic(X: RoughPathFamily, gamma, sample: Sequence[tuple], N: int) -> dict:
    """Max over the sample of ``|<X_st, x>| / |t - s|^(gamma |x|)`` per basis element."""
    alg = X.algebra
    gamma = Fraction(gamma)
    out = {}
    for n in range(1, N + 1):
        e = gamma * n
        for x in alg.basis(n):
            best = Fraction(0)
            for s, t in sample:
                dt = abs(Fraction(t) - Fraction(s))
                if not dt:
                    continue
                v = abs(X(min(s, t), max(s, t), N)(x))
                r = v / dt ** int(e) if e.denominator == 1 else float(v) / float(dt) ** float(e)
                best = max(best, r)
            out[alg.render(x)] = best
    return out


def factorial_decay_constant(X: RoughPathFamily, sample: Sequence[tuple], N: int, gamma=1) -> float:
    """Smallest ``c`` with ``|<X_st, x>| <= c^|x| q(x) |t - s|^(gamma |x|)`` on the sample."""
    alg = X.algebra
    gamma = Fraction(gamma)
    c = 0.0
    for n in range(1, N + 1):
        for x in alg.basis(n):
            qx = float(q_gamma(alg, x, gamma))
            for s, t in sample:
                dt = float(abs(Fraction(t) - Fraction(s)))
                if not dt:
                    continue
                v = abs(float(X(min(s, t), max(s, t), N)(x)))
                if v:
                    c = max(c, (v / (qx * dt ** float(gamma * n))) ** (1.0 / n))
    return c


# -- translation and series ------------------------------------------------

def translate_functional(rule: SubstitutionRule, f: Functional, N: int) -> Functional:
    """``T_v(f) = sum <f, x> T_v(delta_x)``."""
    alg = rule.algebra
    return alg.functional(rule.shifted().apply(f.terms, N), N)


def translate_roughpath(rule: SubstitutionRule, X: RoughPathFamily, s, t, N: int) -> Functional:
    return translate_functional(rule, X(s, t, N), N)


def translated_family(rule: SubstitutionRule, X: RoughPathFamily) -> RoughPathFamily:
    return RoughPathFamily(X.algebra, lambda s, t, N: translate_functional(rule, X(s, t, N), N))


def formal_word_series(X: RoughPathFamily, s, t, N: int) -> LinComb:
    """Truncated ``sum_w <X_st, w> w`` over ordered forests of degree ``<= N``."""
    if X.algebra.tag != "mkw":
        raise ValueError("formal word series are defined for planarly branched paths")
    return LinComb(X(s, t, N).terms)
