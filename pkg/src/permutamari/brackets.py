"""Bracketed words, binary trees, and their bracketing functions.

A fully parenthesized word such as "((a((bc)d))e)" is a full binary tree whose
leaves are the letters a, b, c, ... (equivalently x0, x1, ...).  Rewriting
every bracket (AB) as A(B) yields the right-bracketed form of the word, in
which every letter except the first opens exactly one bracket.  Recording, for
each letter x_i, the letter x_j after which that bracket closes defines the
bracketing function E(i) = j; this is the transfer between trees and the
elements of the Tamari lattice.

Trees are plain nested pairs: a leaf is its 0-based index, an internal node a
2-tuple (left, right).  A tree with n+1 leaves corresponds to an element of
T_n.
"""

from __future__ import annotations

from typing import Iterator, Union

from .tamari import BracketingFn

Tree = Union[int, tuple]


class WordParseError(ValueError):
    """Raised for malformed bracketed words."""


def _letter(i: int, xk: bool) -> str:
    if xk:
        return f"x{i}"
    if i >= 26:
        raise ValueError("letter style covers at most 26 leaves; use the xK style")
    return chr(ord("a") + i)


def _tokens(text: str) -> list[tuple[int | str, int]]:
    """Lex into '(' / ')' / leaf-index tokens, each with its input position.

    Letters a..z mean indices 0..25; 'x' immediately followed by digits is the
    token xK for index K.  Whitespace is ignored.
    """
    out: list[tuple[int | str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            out.append((ch, i))
            i += 1
        elif ch == "x" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append((int(text[i + 1 : j]), i))
            i = j
        elif "a" <= ch <= "z":
            out.append((ord(ch) - ord("a"), i))
            i += 1
        else:
            raise WordParseError(f"unexpected character {ch!r} at position {i}")
    return out


def parse_word(text: str) -> Tree:
    """Parse a fully parenthesized binary bracketing into a tree.

    Letters must read a, b, c, ... (or x0, x1, ...) from left to right.

    >>> parse_word("(ab)")
    (0, 1)
    >>> parse_word("((a((bc)d))e)")
    ((0, ((1, 2), 3)), 4)
    >>> parse_word("(a(bc)")
    Traceback (most recent call last):
    ...
    permutamari.brackets.WordParseError: unbalanced parentheses: missing ')'
    """
    toks = _tokens(text)
    if not toks:
        raise WordParseError("empty input")
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise WordParseError("unbalanced parentheses: missing ')'")
        tok, at = toks[pos]
        if tok == ")":
            raise WordParseError(
                f"unexpected ')' at position {at} (every node needs two children)"
            )
        if tok == "(":
            pos += 1
            left = node()
            right = node()
            if pos >= len(toks):
                raise WordParseError("unbalanced parentheses: missing ')'")
            tok2, at2 = toks[pos]
            if tok2 != ")":
                raise WordParseError(
                    f"nodes are binary: expected ')' at position {at2}"
                )
            pos += 1
            return (left, right)
        pos += 1
        return tok

    tree = node()
    if pos != len(toks):
        raise WordParseError(f"trailing input at position {toks[pos][1]}")
    seen = list(leaves(tree))
    xk = any(isinstance(t, int) and t >= 26 for t, _ in toks)
    for i, got in enumerate(seen):
        if got != i:
            raise WordParseError(
                f"letters must read {_letter(0, xk)}, {_letter(1, xk)}, ... left to "
                f"right: expected {_letter(i, xk)!r}, found {_letter(got, xk)!r}"
            )
    return tree


def leaves(t: Tree) -> Iterator[int]:
    """Leaf indices in left-to-right order."""
    if isinstance(t, int):
        yield t
        return
    if not (isinstance(t, tuple) and len(t) == 2):
        raise ValueError(f"not a tree node: {t!r}")
    yield from leaves(t[0])
    yield from leaves(t[1])


def leaf_count(t: Tree) -> int:
    return sum(1 for _ in leaves(t))


def _wants_xk(t: Tree, style: str | None) -> bool:
    if style == "xk":
        return True
    if style == "letters":
        return False
    if style is not None:
        raise ValueError(f"unknown style {style!r}: use 'letters' or 'xk'")
    return leaf_count(t) > 26


def word_for_tree(t: Tree, style: str | None = None) -> str:
    """Canonical fully bracketed word of a tree.

    Letters by default (xK beyond 26 leaves); outermost parentheses are
    emitted whenever there are at least two letters.

    >>> word_for_tree(((0, ((1, 2), 3)), 4))
    '((a((bc)d))e)'
    >>> word_for_tree((0, 1), style="xk")
    '(x0x1)'
    """
    xk = _wants_xk(t, style)

    def rec(u: Tree) -> str:
        if isinstance(u, int):
            return _letter(u, xk)
        return "(" + rec(u[0]) + rec(u[1]) + ")"

    return rec(t)


def right_bracketing(t: Tree, style: str | None = None) -> str:
    """Right-bracketed form: every bracket (AB) rewritten as A(B).

    In the output every letter except the first opens exactly one bracket.

    >>> right_bracketing(parse_word("((x0x1)(x2x3))"), style="xk")
    'x0(x1)(x2(x3))'
    >>> right_bracketing(parse_word("((a((bc)d))e)"))
    'a(b(c)(d))(e)'
    """
    xk = _wants_xk(t, style)

    def rec(u: Tree) -> str:
        if isinstance(u, int):
            return _letter(u, xk)
        return rec(u[0]) + "(" + rec(u[1]) + ")"

    return rec(t)


def to_bracketing_fn(t: Tree) -> BracketingFn:
    """The bracketing function of a tree with n+1 leaves.

    In the right-bracketed form, the bracket opened by a letter x_i wraps the
    right subtree whose leftmost leaf is x_i and closes after that subtree's
    rightmost leaf x_j, so E(i) = j; letters that open no bracket get
    E(i) = i.

    >>> str(to_bracketing_fn(parse_word("((a((bc)d))e)")))
    '3,2,3,4'
    >>> str(to_bracketing_fn(parse_word("(ab)")))
    '1'
    """
    count = leaf_count(t)
    if count < 2:
        raise ValueError("tree needs at least two leaves")
    values = list(range(1, count))

    def scan(u: Tree) -> tuple[int, int]:
        if isinstance(u, int):
            return u, u
        lo_l, hi_l = scan(u[0])
        lo_r, hi_r = scan(u[1])
        if lo_r != hi_l + 1:
            raise ValueError("leaves must be numbered 0..n left to right")
        values[lo_r - 1] = hi_r
        return lo_l, hi_r

    lo, _ = scan(t)
    if lo != 0:
        raise ValueError("leftmost leaf must have index 0")
    return BracketingFn(tuple(values))


def from_bracketing_fn(e: BracketingFn) -> Tree:
    """The tree whose bracketing function is ``e``.

    Built directly from the nesting of the right-bracketed word: the segment
    of letters start..end reads as x_start followed by the groups [j, E(j)],
    each group a right child in turn; (E2) makes the groups nest.

    >>> from_bracketing_fn(BracketingFn((3, 2, 3, 4)))
    ((0, ((1, 2), 3)), 4)
    >>> word_for_tree(from_bracketing_fn(BracketingFn((1, 2, 3))))
    '(((ab)c)d)'
    """

    def build(start: int, end: int) -> Tree:
        t: Tree = start
        j = start + 1
        while j <= end:
            t = (t, build(j, e(j)))
            j = e(j) + 1
        return t

    return build(0, e.n)


def enumerate_trees(n_leaves: int) -> Iterator[Tree]:
    """All full binary trees with the given number of leaves (Catalan-many),
    ordered by the position of the top split."""
    if n_leaves < 1:
        raise ValueError(f"need at least one leaf, got {n_leaves}")

    def rec(lo: int, hi: int) -> Iterator[Tree]:
        if lo == hi:
            yield lo
            return
        for cut in range(lo, hi):
            for left in rec(lo, cut):
                for right in rec(cut + 1, hi):
                    yield (left, right)

    yield from rec(0, n_leaves - 1)


def tree_to_json(t: Tree) -> int | list:
    """Nested-array form of a tree: a leaf is its index, a node a 2-array."""
    if isinstance(t, int):
        return t
    return [tree_to_json(t[0]), tree_to_json(t[1])]
