"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import forests as fo
from .algebra import LinComb, format_rational, lincomb_to_json
from .coaction import cointeraction_check, cosubstitute, normalize, oracle_derive, phi_convert
from .hopf import ALGEBRAS, named_algebra, postlie_graft, prelie_graft
from .roughpath import PiecewiseLinearPath, RoughPathFamily, formal_word_series, signature
from .substitution import RuleError, SubstitutionRule, substitute, translate
from .suites import branch_independence, hopf_suite, roughpath_suite, translation_suite


class UsageError(Exception):
    pass


# -- formatting ------------------------------------------------------------

def _fmt_coeff(c, first: bool) -> str:
    c = Fraction(c)
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    lead = "" if mag == 1 else format_rational(mag) + " "
    return (sign + " " if sign and not first else sign) + lead


def _join(rows: list[tuple]) -> str:
    if not rows:
        return "0"
    out = []
    for i, (c, body) in enumerate(rows):
        out.append(_fmt_coeff(c, i == 0) + body)
    return " ".join(out)


def format_lincomb(alg, x: LinComb, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(lincomb_to_json(x, alg.render), indent=2)
    show = alg.latex if fmt == "latex" else (lambda k: alg.render(k) or "1")
    rows = sorted(((c, show(k)) for k, c in x.items()), key=lambda r: r[1])
    return _join(rows)


def format_tensor(alg, t, fmt: str) -> str:
    if fmt == "json":
        rows = sorted(({"coeff": format_rational(c), "left": alg.render(a), "right": alg.render(b)}
                       for (a, b), c in t.items()), key=lambda r: (r["left"], r["right"]))
        return json.dumps({"terms": rows}, indent=2)
    if fmt == "latex":
        rows = [(c, f"{alg.latex(a)} \\otimes {alg.latex(b)}") for (a, b), c in t.items()]
    else:
        rows = [(c, f"{alg.render(a) or '1'} (x) {alg.render(b) or '1'}") for (a, b), c in t.items()]
    return _join(sorted(rows, key=lambda r: r[1]))


def format_coaction(alg, cv, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(cv.to_json(alg), indent=2)
    data = cv.to_json(alg)["terms"]
    rows = []
    for r in data:
        if fmt == "latex":
            left = r"\centerdot ".join(
                f"({alg.latex(alg.parse(f['content'][0]['basis']))},{alg.latex(alg.letter(f['letter']))})"
                for f in r["left"]) or "1"
            right = alg.latex(alg.parse(r["right"]))
            rows.append((Fraction(r["coeff"]), f"{left} \\otimes {right}"))
        else:
            left = " . ".join(f"({f['content'][0]['basis']}, {alg.render(alg.letter(f['letter']))})"
                              for f in r["left"]) or "1"
            rows.append((Fraction(r["coeff"]), f"{left} (x) {r['right'] or '1'}"))
    return _join(rows)


def format_functional(alg, f, fmt: str) -> str:
    if fmt == "json":
        obj = lincomb_to_json(f.terms, alg.render)
        obj["cap"] = f.cap
        return json.dumps(obj, indent=2)
    return format_lincomb(alg, f.terms, fmt)


# -- inputs ----------------------------------------------------------------

def _infer_alphabet(tag: str, texts: Sequence[str]) -> tuple:
    kind = ALGEBRAS[tag].kind
    found: set = set()
    for t in texts:
        if kind == fo.WORD:
            found.update(fo.parse_word(t))
        else:
            found.update(fo.labels(fo.parse_forest(t), kind))
    if not found:
        return ("1",) if kind == fo.WORD else ("",)
    if kind != fo.WORD and "" in found and len(found) > 1:
        raise UsageError("mixing undecorated and decorated vertices")
    return tuple(sorted(found, key=lambda a: (len(a), a)))


def _algebra(args, texts: Sequence[str] = (), rule_obj=None):
    tag = args.algebra
    if rule_obj is not None:
        if tag and tag != rule_obj.get("algebra"):
            raise UsageError("--algebra disagrees with the rule file")
        tag = rule_obj["algebra"]
    if not tag:
        raise UsageError("--algebra is required")
    if args.alphabet:
        alphabet = ("",) if args.alphabet == "." else tuple(args.alphabet.split(","))
    else:
        texts = list(texts)
        letters = set()
        if rule_obj is not None:
            texts += [t["basis"] for terms in rule_obj["images"].values() for t in terms]
            letters.update(rule_obj["images"])
        letters.update(_infer_alphabet(tag, texts))
        if len(letters) > 1:
            letters.discard("")
        alphabet = tuple(sorted(letters, key=lambda a: (len(a), a)))
    if tag == "cefm" and alphabet != ("",):
        raise UsageError("cefm is defined on undecorated forests only")
    return named_algebra(tag, alphabet)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


# -- commands --------------------------------------------------------------

def cmd_parse(args):
    alg = _algebra(args, [args.expr])
    x = alg.parse(args.expr)
    return format_lincomb(alg, LinComb.basis(x), args.format), 0


def cmd_product(args):
    alg = _algebra(args, [args.a, args.b])
    return format_lincomb(alg, alg.product(alg.parse(args.a), alg.parse(args.b)), args.format), 0


def cmd_coproduct(args):
    alg = _algebra(args, [args.expr])
    x = alg.parse(args.expr)
    _check_degree(alg, x, args.degree)
    return format_tensor(alg, alg.coproduct(x), args.format), 0


def cmd_graft(args):
    alg = _algebra(args, [args.a, args.b])
    a, b = alg.parse(args.a), alg.parse(args.b)
    if alg.tag == "bck":
        if len(a) != 1 or len(b) != 1:
            raise UsageError("pre-Lie grafting takes two trees")
        res = alg.prelie_dual(a, b) if args.dual else prelie_graft(a[0], b[0])
    elif alg.tag == "mkw":
        res = postlie_graft(a, b)
    else:
        raise UsageError("grafting is defined for bck and mkw")
    return format_lincomb(alg, res, args.format), 0


def cmd_gl(args):
    alg = _algebra(args, [args.a, args.b])
    if alg.tag == "cefm":
        raise UsageError("no convolution product for cefm here")
    return format_lincomb(alg, alg.dual_product(alg.parse(args.a), alg.parse(args.b)), args.format), 0


def cmd_antipode(args):
    alg = _algebra(args, [args.expr])
    if not alg.has_antipode:
        raise UsageError(f"{alg.tag} has no antipode")
    return format_lincomb(alg, alg.antipode(alg.parse(args.expr)), args.format), 0


def _rule(args, texts):
    if not args.rule:
        raise UsageError("--rule FILE is required")
    obj = _load_json(args.rule)
    if not isinstance(obj, dict) or "algebra" not in obj or "images" not in obj:
        raise UsageError("rule file needs 'algebra' and 'images'")
    alg = _algebra(args, texts, obj)
    try:
        rule = SubstitutionRule.from_json(obj, alg.alphabet)
    except RuleError as exc:
        raise UsageError(str(exc)) from exc
    return alg, rule


def _check_degree(alg, x, N):
    if N is not None and alg.degree(x) > N:
        raise UsageError(f"input degree {alg.degree(x)} exceeds --degree {N}")


def _cap(args, rule, x):
    if args.degree is not None:
        return args.degree
    return max(1, rule.max_degree) * rule.algebra.degree(x)


def cmd_substitute(args):
    alg, rule = _rule(args, [args.expr])
    x = alg.parse(args.expr)
    return format_functional(alg, substitute(rule, x, _cap(args, rule, x)), args.format), 0


def cmd_translate(args):
    alg, rule = _rule(args, [args.expr])
    x = alg.parse(args.expr)
    return format_functional(alg, translate(rule, x, _cap(args, rule, x)), args.format), 0


def cmd_coact(args):
    alg = _algebra(args, [args.expr])
    x = alg.parse(args.expr)
    _check_degree(alg, x, args.degree)
    if args.oracle:
        cv = oracle_derive(alg, x, translation=args.translation)
    else:
        cv = cosubstitute(alg, x)
        if args.translation:
            cv = phi_convert(alg, cv)
        if args.normal:
            cv = normalize(alg, cv)
    return format_coaction(alg, cv, args.format), 0


def cmd_verify(args):
    N = 3 if args.degree is None else args.degree
    if args.suite == "roughpath":
        rep = roughpath_suite(N, seed=args.seed)
    else:
        alg = _algebra(args, [])
        if args.suite == "hopf":
            rep = hopf_suite(alg, N)
        elif args.suite == "cointeraction":
            rep = cointeraction_check(alg, N, "T" if args.translation else "S")
        else:
            rep = translation_suite(alg, N, trials=args.trials, seed=args.seed)
            if alg.tag == "bck":
                br = branch_independence(alg, N, seed=args.seed)
                rep["checks"].update(br["checks"])
                rep["passed"] = rep["passed"] and br["passed"]
    if args.format == "json":
        text = json.dumps(rep, indent=2)
    else:
        lines = [f"{rep['suite']}: {'PASS' if rep['passed'] else 'FAIL'}"]
        for name, c in rep["checks"].items():
            extra = "" if c["passed"] else f" counterexample {c['counterexample']}"
            lines.append(f"  {name}: {'pass' if c['passed'] else 'FAIL'} ({c['checked']} checked){extra}")
        text = "\n".join(lines)
    return text, 0 if rep["passed"] else 1


def _path(args) -> PiecewiseLinearPath:
    obj = _load_json(args.path)
    try:
        return PiecewiseLinearPath.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad path file: {exc}") from exc


def _interval(args, path):
    s = Fraction(args.s) if args.s is not None else path.times[0]
    t = Fraction(args.t) if args.t is not None else path.times[-1]
    return s, t


def cmd_signature(args):
    path = _path(args)
    s, t = _interval(args, path)
    N = 3 if args.degree is None else args.degree
    X = signature(path, s, t, N)
    alg = named_algebra("shuffle", path.alphabet)
    return format_functional(alg, X, args.format), 0


def cmd_series(args):
    path = _path(args)
    s, t = _interval(args, path)
    N = 3 if args.degree is None else args.degree
    alg = named_algebra("mkw", path.alphabet)
    gens = []
    for a, b, xa, xb in zip(path.times, path.times[1:], path.values, path.values[1:]):
        gens.append(LinComb((alg.letter(l), (y - x) / (b - a)) for l, x, y in zip(path.alphabet, xa, xb)))
    fam = RoughPathFamily.piecewise_exponential(alg, path.times, gens)
    return format_lincomb(alg, formal_word_series(fam, s, t, N), args.format), 0


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=sorted(ALGEBRAS))
    common.add_argument("--degree", type=int)
    common.add_argument("--format", choices=("json", "latex", "text"), default="json")
    common.add_argument("--alphabet", help="comma-separated letters ('.' for undecorated); inferred if omitted")
    common.add_argument("--rule", help="substitution rule JSON file")

    p = argparse.ArgumentParser(prog="roughhopf", description="Hopf algebras of words and trees, "
                                "substitutions, coactions and rough paths.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *pos, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for a in pos:
            sp.add_argument(a)
        sp.set_defaults(func=fn)
        return sp

    add("parse", cmd_parse, "expr", help="canonical form of a basis element")
    add("product", cmd_product, "a", "b", help="commutative product")
    add("coproduct", cmd_coproduct, "expr", help="coproduct of a basis element")
    g = add("graft", cmd_graft, "a", "b", help="pre-Lie (bck) or post-Lie (mkw) grafting")
    g.add_argument("--dual", action="store_true", help="bck: grafting of dual-basis elements")
    add("gl", cmd_gl, "a", "b", help="convolution product of dual-basis elements")
    add("antipode", cmd_antipode, "expr")
    add("substitute", cmd_substitute, "expr", help="S_v on a dual-basis element")
    add("translate", cmd_translate, "expr", help="T_v on a dual-basis element")
    c = add("coact", cmd_coact, "expr", help="cosubstitution coaction")
    c.add_argument("--translation", action="store_true", help="cotranslation (phi applied)")
    c.add_argument("--oracle", action="store_true", help="derive from substitution symbolically")
    c.add_argument("--normal", action="store_true", help="reduce left contents modulo decomposables")
    v = add("verify", cmd_verify, help="run a verification suite")
    v.add_argument("--suite", choices=("hopf", "cointeraction", "translation", "roughpath"), required=True)
    v.add_argument("--translation", action="store_true", help="cointeraction suite for rho_T")
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    for name, fn in (("signature", cmd_signature), ("series", cmd_series)):
        sp = add(name, fn)
        sp.add_argument("--path", required=True)
        sp.add_argument("--s")
        sp.add_argument("--t")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (UsageError, fo.ParseError, fo.UnknownLetterError, fo.EnumerationLimitError, RuleError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
