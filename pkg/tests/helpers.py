"""Independent oracles for the test suite.

Everything here recomputes expected values by brute force or by a different
route than the library takes: least upper bounds by scanning the whole
lattice, Catalan numbers by the convolution recurrence, covers from the order
relation, longest chains by exhaustive recursion, semidistributivity by a
naive triple loop, and the tree reconstruction by printing and re-parsing the
right-bracketed word.
"""

from __future__ import annotations

import itertools
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO

from permutamari import cli
from permutamari.perm import InversionSet, inversions
from permutamari.tamari import BracketingFn


def catalan(m: int) -> int:
    """C_m via C_0 = 1, C_{k+1} = sum_i C_i * C_{k-i}."""
    cs = [1]
    while len(cs) <= m:
        k = len(cs)
        cs.append(sum(cs[i] * cs[k - 1 - i] for i in range(k)))
    return cs[m]


def all_inversion_sets(n: int) -> list[InversionSet]:
    return [inversions(p) for p in itertools.permutations(range(1, n + 1))]


def brute_join(a: InversionSet, b: InversionSet, universe: list[InversionSet]) -> InversionSet:
    """Least upper bound by scanning the whole lattice."""
    ubs = [c for c in universe if a <= c and b <= c]
    best = min(ubs, key=len)
    assert all(best <= d for d in ubs), f"no least upper bound for {a} and {b}"
    return best


def brute_meet(a: InversionSet, b: InversionSet, universe: list[InversionSet]) -> InversionSet:
    lbs = [c for c in universe if c <= a and c <= b]
    best = max(lbs, key=len)
    assert all(d <= best for d in lbs), f"no greatest lower bound for {a} and {b}"
    return best


def brute_covers_up(a: InversionSet, universe: list[InversionSet]) -> list[InversionSet]:
    """Upper covers straight from the order relation, sorted by bit mask."""
    ups = [c for c in universe if a < c]
    covers = [c for c in ups if not any(a < d < c for d in ups)]
    return sorted(covers, key=lambda c: c.bits)


def brute_tamari_join(e: BracketingFn, f: BracketingFn, universe: list[BracketingFn]) -> BracketingFn:
    ubs = [g for g in universe if e <= g and f <= g]
    best = min(ubs, key=lambda g: sum(g.values))
    assert all(best <= g for g in ubs)
    return best


def brute_tamari_meet(e: BracketingFn, f: BracketingFn, universe: list[BracketingFn]) -> BracketingFn:
    lbs = [g for g in universe if g <= e and g <= f]
    best = max(lbs, key=lambda g: sum(g.values))
    assert all(g <= best for g in lbs)
    return best


def brute_longest_chain_to(x, elements, lt) -> int:
    """Longest chain from the minimum by exhaustive recursion over all
    strictly smaller elements (no Hasse diagram involved)."""
    memo: dict = {}

    def go(y) -> int:
        if y in memo:
            return memo[y]
        below = [z for z in elements if lt(z, y)]
        memo[y] = 0 if not below else 1 + max(go(z) for z in below)
        return memo[y]

    return go(x)


def naive_semidistributive(elements, leq):
    """Triple-loop semidistributivity check deriving joins and meets directly
    from the comparison function.  Returns (sd_join, jw, sd_meet, mw)."""

    def join(x, y):
        ubs = [z for z in elements if leq(x, z) and leq(y, z)]
        least = [z for z in ubs if all(leq(z, w) for w in ubs)]
        assert len(least) == 1
        return least[0]

    def meet(x, y):
        lbs = [z for z in elements if leq(z, x) and leq(z, y)]
        greatest = [z for z in lbs if all(leq(w, z) for w in lbs)]
        assert len(greatest) == 1
        return greatest[0]

    sd_join, jw = True, None
    for x, y, z in itertools.product(elements, repeat=3):
        if join(x, y) == join(x, z) and join(x, y) != join(x, meet(y, z)):
            sd_join, jw = False, (x, y, z)
            break
    sd_meet, mw = True, None
    for x, y, z in itertools.product(elements, repeat=3):
        if meet(x, y) == meet(x, z) and meet(x, y) != meet(x, join(y, z)):
            sd_meet, mw = False, (x, y, z)
            break
    return sd_join, jw, sd_meet, mw


# --- string-route oracle for the tree <-> bracketing function transfer ------

def right_word_from_fn(e: BracketingFn) -> str:
    """Right-bracketed word straight from the function: one bracket opens
    before each letter x_k (k >= 1) and closes after x_{E(j)} for each j."""
    closing = [0] * (e.n + 1)
    for j in range(1, e.n + 1):
        closing[e(j)] += 1
    out = ["a"]
    for k in range(1, e.n + 1):
        out.append("(")
        out.append(chr(ord("a") + k))
        out.append(")" * closing[k])
    return "".join(out)


def parse_right_word(text: str):
    """Parse a right-bracketed word into a tree, folding groups leftward:
    a segment "x g1 g2 ... gk" is (((x, g1), g2), ..., gk)."""
    pos = 0

    def segment():
        nonlocal pos
        assert text[pos].isalpha()
        tree = ord(text[pos]) - ord("a")
        pos += 1
        while pos < len(text) and text[pos] == "(":
            pos += 1
            tree = (tree, segment())
            assert text[pos] == ")"
            pos += 1
        return tree

    tree = segment()
    assert pos == len(text)
    return tree


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Run the CLI in-process, capturing stdout/stderr explicitly so the
    result does not depend on pytest's capture mode."""
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()
