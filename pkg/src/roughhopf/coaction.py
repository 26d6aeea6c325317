"""Cosubstitution ``rho_S``, cotranslation ``rho_T`` and an independent oracle.

A coaction value is a combination of pairs ``(monomial, right)``.  A
monomial is a sorted tuple of ``(content, letter)`` factors standing for the
commutative product of generators ``(content, e_letter)``; ``content`` is a
basis key of the algebra (word or forest).  Since rule images are primitive,
only the class of a content modulo decomposables matters; :func:`normalize`
rewrites contents in a fixed basis of that quotient (Lyndon words, or single
trees for bck) so values can be compared exactly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Callable, Mapping

from . import forests as fo
from .algebra import LinComb, Poly, TensorLC, format_rational, lincomb_to_json
from .hopf import HopfAlgebra, _contract, lincomb_shuffle, spanning_subforests
from .lyndon import reduce_indecomposable
from .substitution import ExpCharacter, SubstitutionRule, concat_capped


class UnsupportedAlgebra(ValueError):
    pass


class OracleInconsistency(AssertionError):
    pass


BRACKETS = ("concat", "left", "right")


class CoactionValue(LinComb):
    """``{(monomial, right key): coeff}``."""

    def to_json(self, alg: HopfAlgebra) -> dict:
        rows = []
        for (mono, right), c in self.items():
            left = [{"content": lincomb_to_json(LinComb.basis(w), alg.render)["terms"], "letter": a}
                    for w, a in mono]
            rows.append({"coeff": format_rational(c), "left": left, "right": alg.render(right)})
        rows.sort(key=lambda r: (r["right"], [(f["letter"], f["content"][0]["basis"]) for f in r["left"]]))
        return {"terms": rows}

    def render(self, alg: HopfAlgebra) -> str:
        parts = []
        for row in self.to_json(alg)["terms"]:
            left = " ".join(f"({f['content'][0]['basis']},{f['letter'] or '.'})" for f in row["left"]) or "1"
            parts.append(f"{row['coeff']} {left} | {row['right'] or '1'}")
        return "\n".join(parts)


def monomial(factors) -> tuple:
    return tuple(sorted(factors))


def _expand(factor_lcs: list, letters: list) -> LinComb:
    """Multilinear expansion of a product of ``(LinComb content, letter)``."""
    out = LinComb([((), Fraction(1))])
    for lc, a in zip(factor_lcs, letters):
        nxt = LinComb()
        for m, c in out.items():
            for w, cw in lc.items():
                nxt.add_term(m + ((w, a),), c * cw)
        out = nxt
    return out.map_keys(monomial)


# -- enumeration of rho_S --------------------------------------------------

def _shuffle_rho(alg: HopfAlgebra, x: tuple) -> CoactionValue:
    out = CoactionValue()
    n = len(x)
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            blocks = [x[bounds[i]:bounds[i + 1]] for i in range(k)]
            for js in itertools.product(alg.alphabet, repeat=k):
                out.add_term((monomial(zip(blocks, js)), tuple(js)), 1)
    return out


def _bck_tree_rho(alg: HopfAlgebra, t: fo.Tree) -> CoactionValue:
    out = CoactionValue()
    for parts, blocks, (labels, parent, _) in spanning_subforests(t):
        for js in itertools.product(alg.alphabet, repeat=len(blocks)):
            right = _contract(labels, parent, blocks, js)
            out.add_term((monomial(((p,), j) for p, j in zip(parts, js)), right), 1)
    return out


def _compositions(seq: list):
    """All splittings of ``seq`` into consecutive nonempty runs."""
    m = len(seq)
    if not m:
        yield []
        return
    for cuts in itertools.product((False, True), repeat=m - 1):
        runs, cur = [], [seq[0]]
        for split, v in zip(cuts, seq[1:]):
            if split:
                runs.append(cur)
                cur = [v]
            else:
                cur.append(v)
        runs.append(cur)
        yield runs


def _bracket(alg: HopfAlgebra, trees: list, convention: str) -> LinComb:
    if convention == "concat" or len(trees) == 1:
        return LinComb.basis(tuple(trees))
    items = [LinComb.basis((t,)) for t in trees]

    def br(a, b):
        return concat_capped(alg, a, b, 10 ** 9) - concat_capped(alg, b, a, 10 ** 9)

    if convention == "left":
        acc = items[0]
        for it in items[1:]:
            acc = br(acc, it)
        return acc
    if convention == "right":
        acc = items[-1]
        for it in reversed(items[:-1]):
            acc = br(it, acc)
        return acc
    raise ValueError(f"unknown bracket convention {convention!r}")


def mkw_partitions(x: fo.Forest):
    """Admissible subforest partitions of a planar forest.

    Yields ``(contents, runs, contraction)`` where ``contents[i]`` is the
    ordered forest of block ``i`` and ``contraction`` is a LinComb of forests
    whose vertex labels are block indices.
    """
    labels, parent, children, roots = fo.flatten(x)
    n = len(labels)
    # per vertex: number of kept (rightmost) child edges, then runs of the rest
    choices = []
    for u in range(n):
        ch = children[u]
        opts = []
        for s in range(len(ch) + 1):
            prefix = ch[:len(ch) - s]
            for runs in _compositions(prefix):
                opts.append((frozenset(ch[len(ch) - s:]), runs))
        choices.append(opts)
    top_runs = list(_compositions(roots))
    for top in top_runs:
        for combo in itertools.product(*choices):
            kept = frozenset().union(*(k for k, _ in combo))
            runs_of = [r for _, r in combo]
            all_runs = list(top) + [run for rs in runs_of for run in rs]
            block_of_root = {}
            for i, run in enumerate(all_runs):
                for r in run:
                    block_of_root[r] = i

            def members(r):
                out, stack = [], [r]
                while stack:
                    u = stack.pop()
                    out.append(u)
                    stack.extend(c for c in children[u] if c in kept)
                return out

            block_members = [[v for r in run for v in members(r)] for run in all_runs]
            contents = [tuple(fo.build_tree(r, labels, children, keep=lambda c: c in kept) for r in run)
                        for run in all_runs]
            memo: dict = {}

            def contract(i):
                if i in memo:
                    return memo[i]
                # each member's cut-off runs stay in order; members are shuffled
                kids = LinComb.basis(())
                for v in sorted(block_members[i]):
                    seq = LinComb.basis(())
                    for run in runs_of[v]:
                        seq = _concat_lc(seq, contract(block_of_root[run[0]]))
                    kids = lincomb_shuffle(kids, seq)
                res = LinComb()
                for f, c in kids.items():
                    res.add_term(((i, f),), c)
                memo[i] = res
                return res

            forest = LinComb.basis(())
            for run in top:
                forest = _concat_lc(forest, contract(block_of_root[run[0]]))
            yield contents, all_runs, forest


def _concat_lc(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb()
    for ka, ca in a.items():
        for kb, cb in b.items():
            out.add_term(ka + kb, ca * cb)
    return out


def _relabel_forest(f, js) -> tuple:
    return tuple(_relabel_tree(t, js) for t in f)


def _relabel_tree(t, js):
    return (js[t[0]], tuple(_relabel_tree(c, js) for c in t[1]))


def _mkw_rho(alg: HopfAlgebra, x: fo.Forest, bracket: str) -> CoactionValue:
    out = CoactionValue()
    for contents, runs, forest in mkw_partitions(x):
        lcs = [_bracket(alg, list(c), bracket) for c in contents]
        for js in itertools.product(alg.alphabet, repeat=len(contents)):
            left = _expand(lcs, list(js))
            for f, cf in forest.items():
                right = _relabel_forest(f, js)
                for m, cm in left.items():
                    out.add_term((m, right), cf * cm)
    return out


def cosubstitute(alg: HopfAlgebra, x, N: int | None = None, bracket: str = "concat") -> CoactionValue:
    """``rho_S(x)`` for a basis element ``x``.

    ``bracket`` selects the content of multi-root mkw blocks: the plain
    ordered forest (``"concat"``) or left/right nested commutators.
    """
    if alg.tag not in ("shuffle", "bck", "mkw"):
        raise UnsupportedAlgebra(f"no cosubstitution for {alg.tag}")
    if N is not None and alg.degree(x) > N:
        raise ValueError(f"degree {alg.degree(x)} above cap {N}")
    if not x:
        return CoactionValue([(((), alg.unit), 1)])
    if alg.tag == "shuffle":
        return _shuffle_rho(alg, x)
    if alg.tag == "mkw":
        return _mkw_rho(alg, x, bracket)
    out = CoactionValue([(((), ()), 1)])
    for t in x:
        out = _times(alg, out, _bck_tree_rho(alg, t))
    return out


def _times(alg: HopfAlgebra, a: Mapping, b: Mapping) -> CoactionValue:
    """Product in ``S(H_in x letters) (x) H``."""
    out = CoactionValue()
    for (m1, r1), c1 in a.items():
        for (m2, r2), c2 in b.items():
            for r, cr in alg.product(r1, r2).items():
                out.add_term((monomial(m1 + m2), r), c1 * c2 * cr)
    return out


# -- quotient normal form --------------------------------------------------

def content_normal(alg: HopfAlgebra, w) -> LinComb:
    """Class of ``w`` modulo decomposables in a fixed basis."""
    if alg.tag == "bck":
        return LinComb.basis(w) if len(w) == 1 else LinComb()
    return reduce_indecomposable(w)


def normal_monomials(alg: HopfAlgebra, m: tuple) -> LinComb:
    return _expand([content_normal(alg, w) for w, _ in m], [a for _, a in m])


def normalize(alg: HopfAlgebra, cv: Mapping, legs: int = 1) -> LinComb:
    """Rewrite every monomial leg (the first ``legs`` tensor legs) in normal form."""
    out = type(cv)() if isinstance(cv, LinComb) else LinComb()
    for key, c in cv.items():
        parts = [normal_monomials(alg, key[i]) for i in range(legs)]
        for combo in itertools.product(*(p.items() for p in parts)):
            coeff = c
            for _, cc in combo:
                coeff = coeff * cc
            out.add_term(tuple(m for m, _ in combo) + tuple(key[legs:]), coeff)
    return out


# -- phi -------------------------------------------------------------------

def phi_convert(alg: HopfAlgebra, cv: Mapping) -> CoactionValue:
    """``(phi (x) Id)``: each factor ``(e_i, e_i)`` becomes ``1 + (e_i, e_i)``."""
    out = CoactionValue()
    for (m, right), c in cv.items():
        fixed = [f for f in m if alg.letter_of(f[0]) != f[1]]
        movable = [f for f in m if alg.letter_of(f[0]) == f[1]]
        for mask in itertools.product((False, True), repeat=len(movable)):
            keep = [f for f, k in zip(movable, mask) if k]
            out.add_term((monomial(fixed + keep), right), c)
    return out


def cotranslate(alg: HopfAlgebra, x, N: int | None = None, bracket: str = "concat") -> CoactionValue:
    return phi_convert(alg, cosubstitute(alg, x, N, bracket))


# -- pairing ---------------------------------------------------------------

def pair(char: ExpCharacter, cv: Mapping, y) -> Any:
    """``<e^v (x) delta_y, cv>``."""
    total: Any = Fraction(0)
    for (m, right), c in cv.items():
        if right == y:
            val = char(m)
            if val:
                total = total + c * val
    return total


# -- oracle ----------------------------------------------------------------

def quotient_basis(alg: HopfAlgebra, n: int) -> dict:
    """``{normal-form key: dual primitive p}`` for degrees ``1..n``, where
    ``<p_l, x>`` is the coefficient of ``l`` in the normal form of ``x``."""
    duals: dict = {}
    for d in range(1, n + 1):
        for x in alg.basis(d):
            for l, c in content_normal(alg, x).items():
                duals.setdefault(l, LinComb()).add_term(x, c)
    return duals


def symbolic_rule(alg: HopfAlgebra, n: int) -> SubstitutionRule:
    """Rule with ``v_j = sum_l c_(l,j) p_l`` over formal indeterminates."""
    duals = quotient_basis(alg, n)
    images = {}
    for j in alg.alphabet:
        v = LinComb()
        for l, p in duals.items():
            v.iadd_scaled(p, Poly.var((l, j)))
        images[j] = v
    return SubstitutionRule(alg, images)


def oracle_derive(alg: HopfAlgebra, x, N: int | None = None, rule: SubstitutionRule | None = None,
                  translation: bool = False) -> CoactionValue:
    """Coaction value read off from ``<S_v(delta_y), x>`` with symbolic ``v``.

    The result is in normal form.  With ``translation`` the shifted rule is
    used, giving ``rho_T``; the constant monomial then carries ``1 (x) x``.
    """
    n = alg.degree(x)
    N = n if N is None else N
    if rule is None:
        rule = symbolic_rule(alg, n)
    if translation:
        rule = rule.shifted()
    out = CoactionValue()
    for y in alg.basis_upto(n):
        val = rule.apply_basis(y, N).get(x)
        if not val:
            continue
        if not isinstance(val, Poly):
            val = Poly.const(val)
        for mono, c in val.terms.items():
            d = sum(alg.degree(w) for w, _ in mono)
            # letters fed by the identity part of a translation carry no indeterminate
            if d > n or (d < n and not translation):
                raise OracleInconsistency(f"degree not conserved in {mono!r}")
            if translation and not mono and y != x:
                raise OracleInconsistency("constant term off the diagonal")
            out.add_term((mono, y), c)
    return out


# -- extended coactions on the left leg ------------------------------------

def _extend(alg: HopfAlgebra, rho: Callable, m: tuple) -> LinComb:
    """``rho`` on a monomial: act on each content and keep the letter,
    multiplicatively; returns ``{(left monomial, right monomial): c}``."""
    out = LinComb([(((), ()), Fraction(1))])
    for w, a in m:
        img = LinComb()
        for (m1, r), c in rho(w).items():
            for rn, cn in content_normal(alg, r).items():
                img.add_term((m1, ((rn, a),)), c * cn)
        nxt = LinComb()
        for (l1, r1), c1 in out.items():
            for (l2, r2), c2 in img.items():
                nxt.add_term((monomial(l1 + l2), monomial(r1 + r2)), c1 * c2)
        out = nxt
    return out


def _unshuffle_monomial(m: tuple) -> LinComb:
    out = LinComb()
    for mask in itertools.product((False, True), repeat=len(m)):
        a = tuple(f for f, k in zip(m, mask) if k)
        b = tuple(f for f, k in zip(m, mask) if not k)
        out.add_term((a, b), 1)
    return out


# -- checker ---------------------------------------------------------------

def cointeraction_check(alg: HopfAlgebra, N: int, which: str = "S", bracket: str = "concat",
                        symbolic_letter_law: bool = True) -> dict:
    """Verify the cointeraction and composition axioms on all bases up to ``N``."""
    if which not in ("S", "T"):
        raise ValueError("which must be 'S' or 'T'")
    cache: dict = {}

    def rho(x):
        if x not in cache:
            cv = cosubstitute(alg, x, bracket=bracket)
            if which == "T":
                cv = phi_convert(alg, cv)
            cache[x] = normalize(alg, cv)
        return cache[x]

    checks: dict = {}

    def record(name, items, ok_fn):
        checked, bad = 0, None
        for it in items:
            checked += 1
            if not ok_fn(it):
                bad = it
                break
        checks[name] = {"passed": bad is None, "checked": checked,
                        "counterexample": None if bad is None else _render_item(alg, bad)}

    basis = alg.basis_upto(N)
    nonunit = [x for x in basis if x]

    record("unit", [alg.unit], lambda x: rho(x) == LinComb([(((), alg.unit), 1)]))

    def multiplicative(xy):
        x, y = xy
        lhs = LinComb()
        for z, c in alg.product(x, y).items():
            lhs.iadd_scaled(rho(z), c)
        return lhs == normalize(alg, _times(alg, rho(x), rho(y)))

    pairs = [(x, y) for x in nonunit for y in nonunit if alg.degree(x) + alg.degree(y) <= N]
    record("multiplicativity", pairs, multiplicative)

    def counit(x):
        return all(r != alg.unit for (_, r) in rho(x))

    record("counit", nonunit, counit)

    def compatible(x):
        lhs = LinComb()
        for (m, r), c in rho(x).items():
            for (r1, r2), cc in alg.coproduct(r).items():
                lhs.add_term((m, r1, r2), c * cc)
        rhs = LinComb()
        for (x1, x2), c in alg.coproduct(x).items():
            for (m1, r1), c1 in rho(x1).items():
                for (m2, r2), c2 in rho(x2).items():
                    rhs.add_term((monomial(m1 + m2), r1, r2), c * c1 * c2)
        return lhs == normalize(alg, rhs)

    record("coproduct_compatibility", nonunit, compatible)

    def rho_content(w):
        return rho(w)

    def lhs_comp(x):
        out = LinComb()
        for (m, r), c in rho(x).items():
            for (m2, r2), c2 in rho(r).items():
                out.add_term((m, m2, r2), c * c2)
        return out

    if which == "S":
        def coassoc(x):
            rhs = LinComb()
            for (m, r), c in rho(x).items():
                for (l1, l2), ce in _extend(alg, rho_content, m).items():
                    rhs.add_term((l1, l2, r), c * ce)
            return lhs_comp(x) == normalize(alg, rhs, legs=2)

        record("coassociativity", nonunit, coassoc)
    else:
        def shifted(x):
            rhs = LinComb()
            for (m, r), c in rho(x).items():
                for (a, b), cu in _unshuffle_monomial(m).items():
                    for (l1, l2), ce in _extend(alg, rho_content, b).items():
                        rhs.add_term((monomial(a + l1), l2, r), c * cu * ce)
            return lhs_comp(x) == normalize(alg, rhs, legs=2)

        record("shifted_coassociativity", nonunit, shifted)

    def letter_law(x):
        for a in alg.alphabet:
            e = alg.letter(a)
            got = LinComb()
            for (m, r), c in rho(x).items():
                if r == e:
                    got.add_term(m, c)
            want = LinComb()
            for l, c in content_normal(alg, x).items():
                want.add_term(((l, a),), c)
            if which == "T" and x == e:
                want.add_term((), 1)
            if got != want:
                return False
        return True

    record("letter_law", nonunit, letter_law)

    if symbolic_letter_law:
        def symbolic(x):
            n = alg.degree(x)
            rule = symbolic_rule(alg, n)
            char = ExpCharacter(rule)
            for a in alg.alphabet:
                lhs = pair(char, rho(x), alg.letter(a))
                rhs = (rule.shifted() if which == "T" else rule).images[a].coeff(x)
                if lhs != rhs:
                    return False
            return True

        record("letter_law_symbolic", nonunit, symbolic)

    return {"suite": "cointeraction", "algebra": alg.tag, "alphabet": list(alg.alphabet), "degree": N,
            "coaction": "rho_" + which, "checks": checks,
            "passed": all(c["passed"] for c in checks.values())}


def _render_item(alg: HopfAlgebra, it) -> str:
    if isinstance(it, tuple) and len(it) == 2 and all(isinstance(p, tuple) for p in it) and it \
            and any(p and isinstance(p[0], tuple) for p in it):
        return " , ".join(alg.render(p) or "1" for p in it)
    try:
        return alg.render(it) or "1"
    except Exception:
        return repr(it)
