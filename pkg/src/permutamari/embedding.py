"""The height-preserving lattice embedding of T_n into S_n.

A bracketing function E maps to the inversion set

    phi(E) = {(s, k) : k < s <= E(k)},

which satisfies (I1) and (I2) together with the stronger

    (I2)*  (a, b) present and b < c < a  =>  (c, b) present.

phi is injective and order-preserving in both directions, its image is exactly
the set of (I2)* elements of S_n, and the image is closed under the join and
meet of S_n (meets there are plain intersections).  So T_n sits inside S_n as
a sublattice, and it does so preserving heights: one pair at a time can be
removed from any image element while staying in the image.

:func:`verify_embedding` and :func:`verify_height` check all of this
exhaustively for small n (or on seeded random pairs) and return structured,
JSON-serializable reports.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Iterator

from . import lattices, perm, tamari
from .perm import InversionSet, pair_bit
from .reports import VerifyReport
from .tamari import BracketingFn


def phi(e: BracketingFn) -> InversionSet:
    """Image of a bracketing function: the pairs (s, k) with k < s <= E(k).

    >>> str(phi(BracketingFn((3, 2, 3, 4))))
    '{(3,1),(2,1)}'
    >>> len(phi(tamari.top(4)))
    6
    """
    bits = 0
    for k in range(1, e.n + 1):
        for s in range(k + 1, e(k) + 1):
            bits |= 1 << pair_bit(s, k)
    return InversionSet(e.n, bits)


def _i2star_witness(a: InversionSet) -> tuple[int, int, int] | None:
    """Smallest (a, b, c) violating (I2)*, or None."""
    for hi in range(3, a.n + 1):
        for b in range(1, hi - 1):
            if (hi, b) in a:
                for c in range(b + 1, hi):
                    if (c, b) not in a:
                        return hi, b, c
    return None


def satisfies_I2star(a: InversionSet) -> bool:
    """Whether (a, b) present and b < c < a always forces (c, b).

    This characterizes the image of phi inside S_n.

    >>> satisfies_I2star(perm.inversions((2, 3, 1)))
    True
    >>> satisfies_I2star(perm.inversions((3, 1, 2)))
    False
    """
    return _i2star_witness(a) is None


def phi_inverse(a: InversionSet) -> BracketingFn:
    """The bracketing function with image ``a``: E(k) = max{s : (s, k)}, else k.

    Rejects inversion sets outside the image with the (I2)* witness triple.

    >>> str(phi_inverse(InversionSet.from_pairs(4, {(2, 1), (3, 1)})))
    '3,2,3,4'
    """
    w = _i2star_witness(a)
    if w is not None:
        hi, b, c = w
        raise ValueError(
            f"not in the image of the embedding: (I2)* fails, ({hi},{b}) present "
            f"but ({c},{b}) missing (witness a={hi}, b={b}, c={c})"
        )
    values = list(range(1, a.n + 1))
    for s, k in a.pairs:
        if s > values[k - 1]:
            values[k - 1] = s
    return BracketingFn(tuple(values))


def image_elements(n: int) -> Iterator[InversionSet]:
    """The (I2)* elements of S_n, i.e. the image of phi, found by filtering
    S_n rather than by mapping T_n (so the characterization does the work)."""
    for a in perm.enumerate_inversion_sets(n):
        if satisfies_I2star(a):
            yield a


def verify_embedding(n: int, samples: int | None = None, seed: int = 0) -> VerifyReport:
    """Check that phi embeds T_n into S_n as a sublattice.

    Exhaustive over all pairs of T_n by default; with ``samples`` set, that
    many seeded random pairs are drawn instead (injectivity and the image
    characterization stay exhaustive).  Checks:

      injective             phi is one-to-one on T_n
      order_iff             E <= F  iff  phi(E) included in phi(F)
      join_preserved        phi(E v F) = phi(E) v phi(F)
      meet_preserved        phi(E ^ F) = phi(E) ^ phi(F)
      meet_is_intersection  phi(E) ^ phi(F) = phi(E) & phi(F)
      image_is_i2star       image of phi = (I2)* elements of S_n

    The first failing pair aborts the pair loop and lands in ``witness``.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"n must be in 1..7, got {n}")
    t0 = time.perf_counter()
    elements = list(tamari.enumerate_tamari(n))
    images = [phi(e) for e in elements]
    checks = {
        "injective": True,
        "order_iff": True,
        "join_preserved": True,
        "meet_preserved": True,
        "meet_is_intersection": True,
        "image_is_i2star": True,
    }
    witness: dict | None = None

    if len(set(images)) != len(elements):
        checks["injective"] = False
        witness = {"check": "injective"}

    image_bits = {a.bits for a in images}
    i2star_bits = {a.bits for a in image_elements(n)}
    if witness is None and image_bits != i2star_bits:
        checks["image_is_i2star"] = False
        stray = sorted(image_bits ^ i2star_bits)[0]
        witness = {"check": "image_is_i2star", "element": str(InversionSet(n, stray))}

    m = len(elements)
    if samples is None:
        pair_indices: Iterator[tuple[int, int]] = itertools.product(range(m), repeat=2)
    else:
        rng = random.Random(seed)
        pair_indices = ((rng.randrange(m), rng.randrange(m)) for _ in range(samples))

    pairs_checked = 0
    if witness is None:
        for i, j in pair_indices:
            e, f = elements[i], elements[j]
            a, b = images[i], images[j]
            pairs_checked += 1
            if tamari.leq(e, f) != (a <= b):
                checks["order_iff"] = False
            elif phi(tamari.join(e, f)) != perm.join(a, b):
                checks["join_preserved"] = False
            else:
                meet_s = perm.meet(a, b)
                if phi(tamari.meet(e, f)) != meet_s:
                    checks["meet_preserved"] = False
                elif meet_s.bits != a.bits & b.bits:
                    checks["meet_is_intersection"] = False
                else:
                    continue
            failed = [name for name, ok in checks.items() if not ok][0]
            witness = {"check": failed, "E": str(e), "F": str(f)}
            break

    millis = int((time.perf_counter() - t0) * 1000)
    return VerifyReport(
        n=n,
        elements=m,
        pairs_checked=pairs_checked,
        checks=checks,
        witness=witness,
        millis=millis,
    )


def verify_height(n: int) -> VerifyReport:
    """Check that the embedding preserves heights, atoms, and the bounds.

    For every E in T_n:

      cover_chain      stepping down with cover_down removes one image pair
                       per step and reaches the bottom in exactly height(E)
                       steps, with height(E) = |phi(E)|
      longest_chain    a generic longest-path oracle on the Hasse diagram of
                       T_n agrees with the rank of phi(E) in S_n
      atoms_to_atoms   height-1 elements map to single-pair inversion sets
      bounds_preserved phi maps bottom to bottom and top to top
    """
    if not 1 <= n <= 5:
        raise ValueError(f"n must be in 1..5, got {n}")
    t0 = time.perf_counter()
    elements = list(tamari.enumerate_tamari(n))
    checks = {
        "cover_chain": True,
        "longest_chain": True,
        "atoms_to_atoms": True,
        "bounds_preserved": True,
    }
    witness: dict | None = None

    for e in elements:
        image = phi(e)
        steps = 0
        cur, cur_bits = e, image.bits
        while True:
            nxt = tamari.cover_down(cur)
            if nxt is None:
                break
            nxt_bits = phi(nxt).bits
            removed = cur_bits ^ nxt_bits
            if removed.bit_count() != 1 or nxt_bits & removed:
                checks["cover_chain"] = False
                witness = {"check": "cover_chain", "E": str(cur)}
                break
            cur, cur_bits = nxt, nxt_bits
            steps += 1
        if witness is not None:
            break
        if steps != tamari.height(e) or steps != perm.rank(image):
            checks["cover_chain"] = False
            witness = {"check": "cover_chain", "E": str(e)}
            break

    if witness is None:
        view = lattices.tamari_lattice(n)
        for e in elements:
            if lattices.longest_chain_to(view, e) != perm.rank(phi(e)):
                checks["longest_chain"] = False
                witness = {"check": "longest_chain", "E": str(e)}
                break

    if witness is None:
        for e in elements:
            if tamari.height(e) == 1 and perm.rank(phi(e)) != 1:
                checks["atoms_to_atoms"] = False
                witness = {"check": "atoms_to_atoms", "E": str(e)}
                break

    if witness is None:
        if phi(tamari.bottom(n)) != perm.bottom(n) or phi(tamari.top(n)) != perm.top(n):
            checks["bounds_preserved"] = False
            witness = {"check": "bounds_preserved"}

    millis = int((time.perf_counter() - t0) * 1000)
    return VerifyReport(
        n=n,
        elements=len(elements),
        pairs_checked=0,
        checks=checks,
        witness=witness,
        millis=millis,
    )
