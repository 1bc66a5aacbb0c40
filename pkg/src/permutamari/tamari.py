"""The Tamari lattice T_n, via bracketing functions.

A bracketing function on {1..n} is a map E with

    (E1)  k <= E(k)                                  for every k
    (E2)  k <= j <= E(k)  =>  E(j) <= E(k)           (nesting)

These encode the binary bracketings of an (n+1)-letter word (see
:mod:`permutamari.brackets` for the transfer), and there are Catalan-many of
them.  Ordered pointwise they form the Tamari lattice: the meet is the
pointwise minimum, while the join is computed through the inversion-set
embedding because the pointwise maximum can violate (E2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import perm
from .reports import Verdict


@dataclass(frozen=True)
class BracketingFn:
    """An element of T_n: the values (E(1), ..., E(n)) of a bracketing function.

    Construction validates (E1) and (E2).  ``E(k)`` is available as ``E(k)``
    via ``__call__`` (1-based, matching the math).

    >>> E = BracketingFn((3, 2, 3, 4))
    >>> E(1), E(4)
    (3, 4)
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        verdict = validate_bracketing(values)
        if not verdict:
            raise ValueError(verdict.message)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise IndexError(f"argument {k} outside 1..{self.n}")
        return self.values[k - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __le__(self, other: "BracketingFn") -> bool:
        return leq(self, other)

    def __lt__(self, other: "BracketingFn") -> bool:
        return leq(self, other) and self.values != other.values

    def __ge__(self, other: "BracketingFn") -> bool:
        return leq(other, self)

    def __gt__(self, other: "BracketingFn") -> bool:
        return leq(other, self) and self.values != other.values

    def to_json(self) -> dict:
        return {"n": self.n, "E": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "BracketingFn":
        values = tuple(int(v) for v in data["E"])
        if len(values) != int(data["n"]):
            raise ValueError(f"length {len(values)} does not match n={data['n']}")
        return cls(values)


def validate_bracketing(values: Sequence[int]) -> Verdict:
    """Check (E1) and (E2) on a raw sequence.

    The witness is the smallest failing position k for (E1), or the smallest
    pair (k, j) for (E2).

    >>> validate_bracketing((2, 3, 3)).axiom, validate_bracketing((2, 3, 3)).witness
    ('E2', (1, 2))
    >>> bool(validate_bracketing((3, 2, 3, 4)))
    True
    """
    values = tuple(values)
    n = len(values)
    if n == 0:
        raise ValueError("empty sequence: n must be positive")
    for k, v in enumerate(values, start=1):
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"value E({k})={v!r} outside 1..{n}")
    for k in range(1, n + 1):
        if values[k - 1] < k:
            return Verdict(
                False, "E1", (k,),
                f"(E1) violated: E({k})={values[k - 1]} < {k}",
            )
    for k in range(1, n + 1):
        for j in range(k + 1, values[k - 1] + 1):
            if values[j - 1] > values[k - 1]:
                return Verdict(
                    False, "E2", (k, j),
                    f"(E2) violated: {k} <= {j} <= E({k})={values[k - 1]} "
                    f"but E({j})={values[j - 1]} > E({k})",
                )
    return Verdict(True)


def leq(e: BracketingFn, f: BracketingFn) -> bool:
    """Pointwise order of T_n: E <= F iff E(k) <= F(k) for all k.

    >>> leq(BracketingFn((3, 2, 3, 4)), BracketingFn((4, 2, 4, 4)))
    True
    """
    if e.n != f.n:
        raise ValueError(f"size mismatch: n={e.n} vs n={f.n}")
    return all(a <= b for a, b in zip(e.values, f.values))


def meet(e: BracketingFn, f: BracketingFn) -> BracketingFn:
    """Greatest lower bound in T_n: the pointwise minimum.

    The pointwise minimum of two bracketing functions is again one (this is
    the intersection of their inversion-set images), so no detour is needed.

    >>> str(meet(BracketingFn((2, 2, 3)), BracketingFn((1, 3, 3))))
    '1,2,3'
    """
    if e.n != f.n:
        raise ValueError(f"size mismatch: n={e.n} vs n={f.n}")
    return BracketingFn(tuple(min(a, b) for a, b in zip(e.values, f.values)))


def join(e: BracketingFn, f: BracketingFn) -> BracketingFn:
    """Least upper bound in T_n, computed through the inversion-set embedding.

    The union of the two images is closed transitively and read back.  The
    pointwise maximum is NOT the join in general; here it would be (2,3,3),
    which violates (E2):

    >>> str(join(BracketingFn((2, 2, 3)), BracketingFn((1, 3, 3))))
    '3,3,3'
    """
    if e.n != f.n:
        raise ValueError(f"size mismatch: n={e.n} vs n={f.n}")
    # deferred import: embedding imports this module at load time
    from .embedding import phi, phi_inverse

    return phi_inverse(perm.join(phi(e), phi(f)))


def cover_down(e: BracketingFn) -> BracketingFn | None:
    """One step down: decrement E at a position with minimal E(j) - j > 0.

    Ties go to the smallest such j.  The result is a bracketing function whose
    image misses exactly the pair (E(j), j), hence a lower cover of the image
    in S_n.  Returns None at the bottom (the identity function).

    >>> str(cover_down(BracketingFn((3, 2, 3, 4))))
    '2,2,3,4'
    >>> cover_down(bottom(3)) is None
    True
    """
    gaps = [(e(j) - j, j) for j in range(1, e.n + 1) if e(j) > j]
    if not gaps:
        return None
    _, j = min(gaps)
    values = list(e.values)
    values[j - 1] -= 1
    return BracketingFn(tuple(values))


def height(e: BracketingFn) -> int:
    """Sum of E(k) - k: the size of the image inversion set, and the length
    of the longest chain from the bottom of T_n to E.

    >>> height(BracketingFn((3, 2, 3, 4)))
    2
    >>> height(top(4))
    6
    """
    return sum(e(k) - k for k in range(1, e.n + 1))


def bottom(n: int) -> BracketingFn:
    """The identity function, the bottom of T_n."""
    return BracketingFn(tuple(range(1, n + 1)))


def top(n: int) -> BracketingFn:
    """The constant-n function, the top of T_n."""
    return BracketingFn((n,) * n)


def enumerate_tamari(n: int) -> Iterator[BracketingFn]:
    """All bracketing functions on {1..n}, in lexicographic order of values.

    Backtracks position by position: at position k the admissible values are
    k..hi, where hi is the tightest E(i) among the earlier positions whose
    bracket is still open (i < k <= E(i)); every such prefix completes, so
    nothing is generated and discarded.  Count is the Catalan number C_n.

    >>> [str(e) for e in enumerate_tamari(3)]
    ['1,2,3', '1,3,3', '2,2,3', '3,2,3', '3,3,3']
    """
    if not 1 <= n <= 14:
        raise ValueError(f"n must be in 1..14, got {n}")
    values = [0] * n

    def extend(k: int) -> Iterator[BracketingFn]:
        if k > n:
            yield BracketingFn(tuple(values))
            return
        hi = n
        for i in range(k - 1):
            e = values[i]
            if k <= e < hi:
                hi = e
        for v in range(k, hi + 1):
            values[k - 1] = v
            yield from extend(k + 1)

    yield from extend(1)
