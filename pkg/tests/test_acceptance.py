"""Acceptance suite: the exit criteria, one pass/fail line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
print.  Expected values come from independent oracles in ``helpers``: brute
force over whole lattices, the Catalan convolution recurrence, and exhaustive
enumeration.
"""

import itertools
import json
import time

from helpers import (
    all_inversion_sets,
    brute_join,
    catalan,
    run_cli,
)
from permutamari import brackets, embedding, lattices, perm, tamari
from permutamari.perm import InversionSet
from permutamari.tamari import BracketingFn


def _criterion(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_sublattice_embedding():
    t0 = time.perf_counter()
    exhaustive_ok = True
    for n in range(1, 6):
        code, out, _ = run_cli("verify", "embedding", "--n", str(n))
        report = json.loads(out)
        exhaustive_ok &= code == 0 and all(report["checks"].values())
        exhaustive_ok &= report["pairs_checked"] == catalan(n) ** 2
    small_time = time.perf_counter() - t0

    t1 = time.perf_counter()
    sampled_ok = True
    for n in (6, 7):
        code, out, _ = run_cli("verify", "embedding", "--n", str(n),
                               "--samples", "100000", "--seed", "1")
        report = json.loads(out)
        sampled_ok &= code == 0 and all(report["checks"].values())
        sampled_ok &= report["pairs_checked"] == 100000
    big_time = time.perf_counter() - t1

    ok = exhaustive_ok and sampled_ok and small_time < 5.0 and big_time < 30.0
    _criterion(1, ok, f"embedding n=1..5 exhaustive ({small_time:.2f}s) "
                      f"+ n=6,7 sampled ({big_time:.2f}s)")


def test_criterion_02_join_is_closure_of_union():
    t0 = time.perf_counter()
    ok = True
    counts = {}
    for n in (4, 5):
        universe = all_inversion_sets(n)
        pairs = 0
        for a, b in itertools.product(universe, repeat=2):
            pairs += 1
            if perm.join(a, b) != brute_join(a, b, universe):
                ok = False
                break
        counts[n] = pairs
    elapsed = time.perf_counter() - t0
    ok = ok and counts == {4: 576, 5: 14400} and elapsed < 10.0
    _criterion(2, ok, f"(A union B)^tr = brute-force lub on S_4 (576) and "
                      f"S_5 (14400) pairs ({elapsed:.2f}s)")


def test_criterion_03_realization():
    t0 = time.perf_counter()
    ok = True
    total = 0
    for n in range(1, 8):
        for word in itertools.permutations(range(1, n + 1)):
            total += 1
            p = perm.Permutation(word)
            if perm.realize(perm.inversions(p)) != p:
                ok = False
                break
    elapsed = time.perf_counter() - t0
    ok = ok and total == sum(
        len(list(itertools.permutations(range(k)))) for k in range(1, 8)
    ) and elapsed < 5.0
    _criterion(3, ok, f"realize(inversions(s)) = s over all of S_1..S_7 "
                      f"({total} permutations, {elapsed:.2f}s)")


def test_criterion_04_meet_on_image_is_intersection():
    ok = True
    for n in range(1, 6):
        image = [embedding.phi(e) for e in tamari.enumerate_tamari(n)]
        for a, b in itertools.product(image, repeat=2):
            m = perm.meet(a, b)
            if m.bits != a.bits & b.bits:
                ok = False
                break
    a = InversionSet.from_pairs(3, {(3, 1), (3, 2)})
    b = InversionSet.from_pairs(3, {(3, 1), (2, 1)})
    counterexample = (
        perm.meet(a, b).bits != a.bits & b.bits
        and not perm.validate_inversion_set({(3, 1)}, 3)
    )
    ok = ok and counterexample
    _criterion(4, ok, "meet = intersection on the embedding image (n <= 5), "
                      "and the designated general counterexample stands")


def test_criterion_05_height_preservation():
    ok = True
    for n in range(1, 6):
        report = embedding.verify_height(n)
        ok &= report.ok
        for e in tamari.enumerate_tamari(n):
            image = embedding.phi(e)
            steps, cur = 0, e
            while (nxt := tamari.cover_down(cur)) is not None:
                cur, steps = nxt, steps + 1
            ok &= steps == sum(e(k) - k for k in range(1, n + 1)) == perm.rank(image)
    _criterion(5, ok, "cover-down chains, longest-chain oracle, atoms and "
                      "bounds all preserved for n <= 5")


def test_criterion_06_catalan_counts():
    t0 = time.perf_counter()
    expected = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    got = [sum(1 for _ in tamari.enumerate_tamari(n)) for n in range(1, 11)]
    oracle = [catalan(n) for n in range(1, 11)]
    elapsed = time.perf_counter() - t0
    ok = got == expected == oracle and elapsed < 10.0
    _criterion(6, ok, f"|T_n| = C_n for n = 1..10 ({elapsed:.2f}s)")


def test_criterion_07_semidistributivity():
    ok = True
    for view in (lattices.perm_lattice(4), lattices.tamari_lattice(4),
                 lattices.tamari_lattice(5)):
        ok &= lattices.check_semidistributive(view).passed
    diamond = lattices.check_semidistributive(lattices.m3())
    ok &= not diamond.sd_join and not diamond.sd_meet
    _criterion(7, ok, "SD-join and SD-meet hold on S_4, T_4, T_5; M3 fails both")


def test_criterion_08_boundedness():
    ok = True
    for n in range(1, 5):
        ok &= lattices.check_bounded(lattices.perm_lattice(n)).bounded
        ok &= lattices.check_bounded(lattices.tamari_lattice(n)).bounded
    ok &= not lattices.check_bounded(lattices.m3()).bounded
    ok &= lattices.check_bounded(lattices.boolean_lattice(3)).bounded
    _criterion(8, ok, "S_n and T_n bounded for n <= 4; M3 fails; Boolean cube passes")


def test_criterion_09_parser_roundtrips():
    ok = True
    total = 0
    for n in range(1, 9):
        for t in brackets.enumerate_trees(n + 1):
            total += 1
            word = brackets.word_for_tree(t)
            e = brackets.to_bracketing_fn(brackets.parse_word(word))
            back = brackets.from_bracketing_fn(e)
            if back != t or brackets.word_for_tree(back) != word:
                ok = False
                break
    golden = brackets.to_bracketing_fn(brackets.parse_word("((a((bc)d))e)"))
    ok = ok and golden == BracketingFn((3, 2, 3, 4))
    ok = ok and total == sum(catalan(n) for n in range(1, 9))
    _criterion(9, ok, f"word -> tree -> fn -> tree -> word identity on all "
                      f"{total} bracketings with n <= 8, plus the golden example")


def test_criterion_10_lattice_axioms():
    ok = True
    inv_sets = all_inversion_sets(4)
    for a, b in itertools.product(inv_sets, repeat=2):
        ok &= perm.join(a, b) == perm.join(b, a)
        ok &= perm.meet(a, b) == perm.meet(b, a)
        ok &= perm.join(a, a) == a and perm.meet(a, a) == a
        ok &= perm.join(a, perm.meet(a, b)) == a
        ok &= perm.meet(a, perm.join(a, b)) == a
    for a, b, c in itertools.product(inv_sets, repeat=3):
        if perm.join(a, perm.join(b, c)) != perm.join(perm.join(a, b), c):
            ok = False
            break
        if perm.meet(a, perm.meet(b, c)) != perm.meet(perm.meet(a, b), c):
            ok = False
            break
    fns = list(tamari.enumerate_tamari(4))
    for e, f in itertools.product(fns, repeat=2):
        ok &= tamari.join(e, f) == tamari.join(f, e)
        ok &= tamari.meet(e, f) == tamari.meet(f, e)
        ok &= tamari.join(e, e) == e and tamari.meet(e, e) == e
        ok &= tamari.join(e, tamari.meet(e, f)) == e
        ok &= tamari.meet(e, tamari.join(e, f)) == e
    for e, f, g in itertools.product(fns, repeat=3):
        if tamari.join(e, tamari.join(f, g)) != tamari.join(tamari.join(e, f), g):
            ok = False
            break
        if tamari.meet(e, tamari.meet(f, g)) != tamari.meet(tamari.meet(e, f), g):
            ok = False
            break
    _criterion(10, ok, "associativity, commutativity, absorption and "
                       "idempotence over all triples of S_4 and T_4")
