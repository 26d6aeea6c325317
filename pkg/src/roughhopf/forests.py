"""Decorated rooted trees, forests and words.

Representation (all plain hashable tuples):

* tree   ``(label, children)`` with ``children`` a tuple of trees;
* forest a tuple of trees (the empty tuple is the unit ``1``);
* word   a tuple of letter tokens.

Planar objects keep child/tree order.  Non-planar objects are stored with
children and trees sorted in descending tuple order, so isomorphic inputs
have identical representations.  The undecorated case uses the single
letter ``""``, which renders as ``[[]]`` etc.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Tree = tuple
Forest = tuple
Word = tuple

PLANAR, NONPLANAR, WORD = "planar", "nonplanar", "word"
KINDS = (PLANAR, NONPLANAR, WORD)

MAX_ENUMERATION = 200_000


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownLetterError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    pass


# -- basic structure -------------------------------------------------------

@lru_cache(maxsize=None)
def tree_degree(t: Tree) -> int:
    return 1 + sum(tree_degree(c) for c in t[1])


def forest_degree(f: Forest) -> int:
    return sum(tree_degree(t) for t in f)


def degree(x: tuple, kind: str) -> int:
    return len(x) if kind == WORD else forest_degree(x)


@lru_cache(maxsize=None)
def canonical_tree(t: Tree) -> Tree:
    return (t[0], tuple(sorted((canonical_tree(c) for c in t[1]), reverse=True)))


def canonical_forest(f: Iterable[Tree]) -> Forest:
    return tuple(sorted((canonical_tree(t) for t in f), reverse=True))


def canonicalize(x: tuple, kind: str = NONPLANAR) -> tuple:
    """Canonical representative; the identity on planar objects and words."""
    if kind != NONPLANAR:
        return x
    if x and isinstance(x[0], str):
        return canonical_tree(x)
    return canonical_forest(x)


def leaf(label: str) -> Tree:
    return (label, ())


def b_plus(w: Forest, label: str) -> Tree:
    return (label, tuple(w))


def b_minus(t: Tree) -> Forest:
    return t[1]


def labels(x: tuple, kind: str) -> list[str]:
    if kind == WORD:
        return list(x)
    out: list[str] = []
    stack = list(x)
    while stack:
        t = stack.pop()
        out.append(t[0])
        stack.extend(t[1])
    return out


@lru_cache(maxsize=None)
def depth_sum(t: Tree, depth: int = 0) -> int:
    return depth + sum(depth_sum(c, depth + 1) for c in t[1])


# -- rendering -------------------------------------------------------------

@lru_cache(maxsize=None)
def render_tree(t: Tree) -> str:
    return "[" + t[0] + "".join(render_tree(c) for c in t[1]) + "]"


def render(x: tuple, kind: str) -> str:
    """Canonical string: bracket trees separated by single spaces, or a word
    written as its letters (space separated if any token is longer than one
    character)."""
    if kind == WORD:
        sep = "" if all(len(a) == 1 for a in x) else " "
        return sep.join(x)
    return " ".join(render_tree(t) for t in x)


def render_latex(x: tuple, kind: str) -> str:
    if not x:
        return r"\mathbb{1}"
    if kind == WORD:
        return "".join(f"e_{{{a}}}" for a in x)
    return "".join(r"\Forest{" + render_tree(t) + "}" for t in x)


# -- parsing ---------------------------------------------------------------

_DELIMS = set("[] \t\n\r")


def _check_letter(tok: str, alphabet: Sequence[str] | None, pos: int) -> None:
    if alphabet is not None and tok not in alphabet:
        raise UnknownLetterError(f"unknown letter {tok!r} at position {pos}")


def _strip_latex(text: str) -> str:
    text = text.strip()
    if text == r"\mathbb{1}":
        return ""
    if r"\Forest{" in text:
        out, i = [], 0
        while i < len(text):
            if text.startswith(r"\Forest{", i):
                i += len(r"\Forest{")
                depth, start = 1, i
                while i < len(text) and depth:
                    depth += {"{": 1, "}": -1}.get(text[i], 0)
                    i += 1
                if depth:
                    raise ParseError("unterminated \\Forest{", start)
                out.append(text[start:i - 1])
            elif text[i].isspace():
                i += 1
            else:
                raise ParseError(f"unexpected {text[i]!r} in LaTeX forest", i)
        return " ".join(out)
    return text


def parse_forest(text: str, alphabet: Sequence[str] | None = None, planar: bool = True) -> Forest:
    text = _strip_latex(text)
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def tree() -> Tree:
        nonlocal pos
        if pos >= n or text[pos] != "[":
            raise ParseError("expected '['", pos)
        pos += 1
        start = pos
        while pos < n and text[pos] not in _DELIMS:
            pos += 1
        tok = text[start:pos]
        _check_letter(tok, alphabet, start)
        children = []
        while True:
            skip_ws()
            if pos >= n:
                raise ParseError("unterminated tree, expected ']'", pos)
            if text[pos] == "]":
                pos += 1
                return (tok, tuple(children))
            children.append(tree())

    trees = []
    skip_ws()
    while pos < n:
        trees.append(tree())
        skip_ws()
    f = tuple(trees)
    return f if planar else canonical_forest(f)


def parse_word(text: str, alphabet: Sequence[str] | None = None) -> Word:
    text = text.strip()
    if text == r"\mathbb{1}":
        return ()
    if "e_{" in text:
        out, i = [], 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            if not text.startswith("e_{", i):
                raise ParseError("expected 'e_{'", i)
            j = text.find("}", i)
            if j < 0:
                raise ParseError("unterminated letter", i)
            tok = text[i + 3:j]
            _check_letter(tok, alphabet, i)
            out.append(tok)
            i = j + 1
        return tuple(out)
    if any(c.isspace() for c in text):
        toks = text.split()
        for t in toks:
            _check_letter(t, alphabet, text.find(t))
        return tuple(toks)
    if alphabet is None:
        return tuple(text)
    letters = sorted(alphabet, key=len, reverse=True)
    out, i = [], 0
    while i < len(text):
        for a in letters:
            if a and text.startswith(a, i):
                out.append(a)
                i += len(a)
                break
        else:
            raise UnknownLetterError(f"unknown letter at position {i}")
    return tuple(out)


def parse(text: str, kind: str, alphabet: Sequence[str] | None = None) -> tuple:
    if kind == WORD:
        return parse_word(text, alphabet)
    if kind not in (PLANAR, NONPLANAR):
        raise ValueError(f"unknown kind {kind!r}")
    return parse_forest(text, alphabet, planar=kind == PLANAR)


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def planar_trees(n: int, alphabet: tuple) -> tuple:
    if n < 1:
        return ()
    return tuple((a, f) for a in alphabet for f in planar_forests(n - 1, alphabet))


@lru_cache(maxsize=None)
def planar_forests(n: int, alphabet: tuple) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for t in planar_trees(k, alphabet):
            for rest in planar_forests(n - k, alphabet):
                out.append((t,) + rest)
                if len(out) > MAX_ENUMERATION:
                    raise EnumerationLimitError(f"more than {MAX_ENUMERATION} planar forests of degree {n}")
    return tuple(out)


@lru_cache(maxsize=None)
def nonplanar_trees(n: int, alphabet: tuple) -> tuple:
    return tuple(sorted({canonical_tree((a, f)) for a in alphabet
                         for f in nonplanar_forests(n - 1, alphabet)}, reverse=True))


@lru_cache(maxsize=None)
def nonplanar_forests(n: int, alphabet: tuple) -> tuple:
    if n == 0:
        return ((),)
    seen = set()
    # multisets of trees: choose the largest tree first, then a forest of
    # remaining trees each <= it
    for k in range(1, n + 1):
        for t in nonplanar_trees(k, alphabet):
            for rest in nonplanar_forests(n - k, alphabet):
                if rest and rest[0] > t:
                    continue
                seen.add((t,) + rest)
                if len(seen) > MAX_ENUMERATION:
                    raise EnumerationLimitError(f"more than {MAX_ENUMERATION} forests of degree {n}")
    return tuple(sorted(seen, reverse=True))


def words(n: int, alphabet: tuple) -> tuple:
    if len(alphabet) ** n > MAX_ENUMERATION:
        raise EnumerationLimitError(f"more than {MAX_ENUMERATION} words of length {n}")
    return tuple(itertools.product(alphabet, repeat=n))


def enumerate_basis(kind: str, n: int, alphabet: Sequence[str]) -> list:
    """All basis elements of exactly degree ``n``, each once, canonically ordered."""
    if n < 0:
        return []
    alphabet = tuple(alphabet)
    if kind == WORD:
        items = words(n, alphabet)
    elif kind == PLANAR:
        items = planar_forests(n, alphabet)
    elif kind == NONPLANAR:
        items = nonplanar_forests(n, alphabet)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return sorted(items, key=lambda x: render(x, kind))


def enumerate_trees(kind: str, n: int, alphabet: Sequence[str]) -> list:
    alphabet = tuple(alphabet)
    items = planar_trees(n, alphabet) if kind == PLANAR else nonplanar_trees(n, alphabet)
    return sorted(items, key=render_tree)


# -- vertex-indexed view ---------------------------------------------------

def flatten(f: Forest) -> tuple[list[str], list[int], list[list[int]], list[int]]:
    """Preorder vertex tables of a forest.

    Returns ``(labels, parent, children, roots)`` where ``parent[v] == -1`` for
    roots and ``children[v]`` lists children of ``v`` in planar order.
    """
    labels_: list[str] = []
    parent: list[int] = []
    children: list[list[int]] = []
    roots: list[int] = []

    def visit(t: Tree, p: int) -> int:
        v = len(labels_)
        labels_.append(t[0])
        parent.append(p)
        children.append([])
        for c in t[1]:
            children[v].append(visit(c, v))
        return v

    for t in f:
        roots.append(visit(t, -1))
    return labels_, parent, children, roots


def build_tree(v: int, labels_: Sequence[str], children: Sequence[Sequence[int]], keep=None) -> Tree:
    """Rebuild the (planar) subtree at ``v``; ``keep`` filters children."""
    kids = [c for c in children[v] if keep is None or keep(c)]
    return (labels_[v], tuple(build_tree(c, labels_, children, keep) for c in kids))
