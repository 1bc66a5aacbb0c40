"""Weak (position) order on permutations of {1..n}, via inversion sets.

A permutation s = <s_1, ..., s_n> has inversion set
I(s) = {(s_i, s_j) : i < j and s_i > s_j}, a set of pairs (a, b) with a > b.
Ordered by inclusion these sets form the permutation lattice S_n, the vertex
set of the permutohedron.  A pair set is the inversion set of some permutation
exactly when it satisfies

    (I1)  (a, b) and (b, c) present  =>  (a, c) present        (transitivity)
    (I2)  (a, b) present and b < c < a  =>  (a, c) or (c, b) present

Joins are transitive closures of unions.  Meets go through the order-reversing
complement map: the complement of I(s) inside the full pair set is the
inversion set of the reversal of s, so glb(A, B) is the complement of the join
of the complements.

Pair sets are stored as triangular bitmasks with one bit per pair (a, b),
n >= a > b >= 1, so membership, inclusion, closure and complement are all
plain word operations.  Everything here is immutable and pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .reports import Verdict

Pair = tuple[int, int]


def pair_bit(a: int, b: int) -> int:
    """Bit index of the pair (a, b), a > b >= 1, in the triangular layout.

    Row a (all pairs with first component a) occupies the a-1 consecutive
    bits starting at (a-1)(a-2)/2.
    """
    return (a - 1) * (a - 2) // 2 + (b - 1)


def full_bits(n: int) -> int:
    """Mask with every pair (a, b), n >= a > b >= 1, set."""
    return (1 << (n * (n - 1) // 2)) - 1


def _row(bits: int, a: int) -> int:
    """Mask over {1..a-1} of the b with (a, b) set; bit b-1 stands for b."""
    return (bits >> pair_bit(a, 1)) & ((1 << (a - 1)) - 1)


def _iter_elems(mask: int) -> Iterator[int]:
    """1-based indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def iter_pairs(bits: int, n: int) -> Iterator[Pair]:
    """Pairs of a triangular mask, ascending by (a, b)."""
    for a in range(2, n + 1):
        for b in _iter_elems(_row(bits, a)):
            yield a, b


def transitive_closure_bits(bits: int, n: int) -> int:
    """Transitive closure of a pair set given as a triangular mask.

    Pairs (a, b) always have a > b, so every chain descends.  One pass over
    the rows in increasing order of a therefore reaches the fixpoint: by the
    time row a is merged, every row it refers to is already closed.
    """
    rows = [0] * (n + 1)
    for a in range(2, n + 1):
        rows[a] = _row(bits, a)
    out = 0
    for a in range(2, n + 1):
        acc = rows[a]
        for b in _iter_elems(rows[a]):
            if b >= 2:
                acc |= rows[b]
        rows[a] = acc
        out |= acc << pair_bit(a, 1)
    return out


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (1-based values).

    >>> str(Permutation((2, 3, 1, 4)))
    '2,3,1,4'
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0 or sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Permutation":
        return cls(tuple(int(v) for v in data))


@dataclass(frozen=True)
class InversionSet:
    """An element of S_n: a pair set satisfying (I1) and (I2).

    ``bits`` is the triangular mask; use :meth:`from_pairs` to build a checked
    instance from explicit pairs.  The direct constructor trusts its input and
    is meant for code paths that are valid by construction.
    """

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.bits <= full_bits(self.n):
            raise ValueError(f"bit mask out of range for n={self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "InversionSet":
        """Validating constructor; raises ValueError naming the failing axiom.

        >>> InversionSet.from_pairs(3, [(3, 1)])
        Traceback (most recent call last):
        ...
        ValueError: (I2) violated: (3,1) present but neither (3,2) nor (2,1) (witness a=3, b=1, c=2)
        """
        verdict = validate_inversion_set(pairs, n)
        if not verdict:
            raise ValueError(verdict.message)
        return cls(n, _pack_pairs(pairs, n))

    @property
    def pairs(self) -> frozenset[Pair]:
        return frozenset(iter_pairs(self.bits, self.n))

    def sorted_pairs(self) -> list[Pair]:
        """Pairs sorted lexicographically descending by a then b."""
        return sorted(iter_pairs(self.bits, self.n), reverse=True)

    def __contains__(self, pair: Pair) -> bool:
        a, b = pair
        if not (self.n >= a > b >= 1):
            return False
        return (self.bits >> pair_bit(a, b)) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.sorted_pairs()) + "}"

    def __repr__(self) -> str:
        return f"InversionSet(n={self.n}, pairs={self.sorted_pairs()})"

    def _require_same_n(self, other: "InversionSet") -> None:
        if not isinstance(other, InversionSet):
            raise TypeError(f"expected InversionSet, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"ground-set mismatch: n={self.n} vs n={other.n}")

    def __le__(self, other: "InversionSet") -> bool:
        self._require_same_n(other)
        return self.bits | other.bits == other.bits

    def __lt__(self, other: "InversionSet") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "InversionSet") -> bool:
        return other <= self

    def __gt__(self, other: "InversionSet") -> bool:
        return other < self

    def complement(self) -> "InversionSet":
        """Complement inside the full pair set; the inversion set of the
        reversed permutation, hence again valid."""
        return InversionSet(self.n, full_bits(self.n) ^ self.bits)

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.sorted_pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> "InversionSet":
        return cls.from_pairs(int(data["n"]), [tuple(p) for p in data["pairs"]])


def _pack_pairs(pairs: Iterable[Pair], n: int) -> int:
    bits = 0
    for pair in pairs:
        a, b = pair
        if not (isinstance(a, int) and isinstance(b, int) and n >= a > b >= 1):
            raise ValueError(f"pair {pair!r} out of range: need n >= a > b >= 1 with n={n}")
        bits |= 1 << pair_bit(a, b)
    return bits


def validate_inversion_set(pairs: Iterable[Pair], n: int) -> Verdict:
    """Check (I1) and (I2) on a raw pair set.

    Returns a Verdict; invalidity is not an error.  The witness is the
    lexicographically smallest one, (I1) reported before (I2).

    >>> validate_inversion_set({(2, 1), (3, 2)}, 3).axiom
    'I1'
    >>> validate_inversion_set({(3, 1)}, 3).witness
    (3, 1, 2)
    >>> bool(validate_inversion_set({(3, 2), (3, 1), (2, 1)}, 3))
    True
    """
    bits = _pack_pairs(pairs, n)

    def has(a: int, b: int) -> bool:
        return (bits >> pair_bit(a, b)) & 1 == 1

    # (I1): smallest ((a,b),(b,c)) with (a,c) missing
    for a in range(3, n + 1):
        for b in range(2, a):
            if has(a, b):
                for c in range(1, b):
                    if has(b, c) and not has(a, c):
                        return Verdict(
                            False,
                            "I1",
                            ((a, b), (b, c)),
                            f"(I1) violated: ({a},{b}) and ({b},{c}) present "
                            f"but ({a},{c}) missing",
                        )
    # (I2): smallest (a, b, c) with (a,b) present, b < c < a, neither (a,c) nor (c,b)
    for a in range(3, n + 1):
        for b in range(1, a - 1):
            if has(a, b):
                for c in range(b + 1, a):
                    if not has(a, c) and not has(c, b):
                        return Verdict(
                            False,
                            "I2",
                            (a, b, c),
                            f"(I2) violated: ({a},{b}) present but neither "
                            f"({a},{c}) nor ({c},{b}) (witness a={a}, b={b}, c={c})",
                        )
    return Verdict(True)


def inversions(p: Permutation | Sequence[int]) -> InversionSet:
    """Inversion set of a permutation: pairs (s_i, s_j) with i < j, s_i > s_j.

    >>> str(inversions((2, 3, 1, 4)))
    '{(3,1),(2,1)}'
    >>> len(inversions((3, 2, 1)))
    3
    """
    if not isinstance(p, Permutation):
        p = Permutation(tuple(p))
    e = p.entries
    bits = 0
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            if e[i] > e[j]:
                bits |= 1 << pair_bit(e[i], e[j])
    return InversionSet(p.n, bits)


def realize(source: InversionSet | Iterable[Pair], n: int | None = None) -> Permutation:
    """The unique permutation whose inversion set is the given pair set.

    Inserts k = 2..n one at a time: k goes immediately left of the leftmost
    entry j it must invert with (i.e. (k, j) in the set), or at the right end
    if there is none.  Raw pair sets are validated first and rejected with a
    diagnostic naming the violating pairs/triple; an InversionSet argument is
    trusted.

    >>> realize({(2, 1), (3, 1)}, 4).entries
    (2, 3, 1, 4)
    >>> str(realize(set(), 3))
    '1,2,3'
    """
    if isinstance(source, InversionSet):
        inv = source
    else:
        if n is None:
            raise ValueError("n is required when realizing a raw pair set")
        inv = InversionSet.from_pairs(n, source)
    word = [1]
    for k in range(2, inv.n + 1):
        at = len(word)
        for i, j in enumerate(word):
            if (k, j) in inv:
                at = i
                break
        word.insert(at, k)
    return Permutation(tuple(word))


def join(a: InversionSet, b: InversionSet) -> InversionSet:
    """Least upper bound in S_n: the transitive closure of the union.

    >>> lhs = inversions((2, 1, 3))
    >>> rhs = inversions((1, 3, 2))
    >>> str(join(lhs, rhs))
    '{(3,2),(3,1),(2,1)}'
    """
    a._require_same_n(b)
    return InversionSet(a.n, transitive_closure_bits(a.bits | b.bits, a.n))


def meet(a: InversionSet, b: InversionSet) -> InversionSet:
    """Greatest lower bound in S_n, via the order-reversing complement.

    Note this is not plain intersection: the intersection of two inversion
    sets can fail (I2).

    >>> str(meet(inversions((3, 1, 2)), inversions((2, 3, 1))))
    '{}'
    """
    a._require_same_n(b)
    full = full_bits(a.n)
    closed = transitive_closure_bits((full ^ a.bits) | (full ^ b.bits), a.n)
    return InversionSet(a.n, full ^ closed)


def covers_up(a: InversionSet) -> list[InversionSet]:
    """Upper covers in S_n: one per ascent of the realized permutation.

    Swapping an adjacent ascending pair adds exactly that pair to the
    inversion set; results are listed by ascent position, left to right.

    >>> [str(c) for c in covers_up(bottom(3))]
    ['{(2,1)}', '{(3,2)}']
    >>> covers_up(top(3))
    []
    """
    word = realize(a).entries
    out = []
    for i in range(len(word) - 1):
        if word[i] < word[i + 1]:
            out.append(InversionSet(a.n, a.bits | 1 << pair_bit(word[i + 1], word[i])))
    return out


def rank(a: InversionSet) -> int:
    """Number of inversions; the length of every maximal chain from bottom.

    >>> rank(top(4))
    6
    """
    return a.bits.bit_count()


def bottom(n: int) -> InversionSet:
    """The empty inversion set (the identity permutation)."""
    return InversionSet(n, 0)


def top(n: int) -> InversionSet:
    """The full pair set (the reversal permutation)."""
    return InversionSet(n, full_bits(n))


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def enumerate_inversion_sets(n: int) -> Iterator[InversionSet]:
    """Inversion sets of all of S_n, in lexicographic order of the permutations."""
    for p in enumerate_permutations(n):
        yield inversions(p)
