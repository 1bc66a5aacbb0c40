"""Generic finite-lattice analysis.

A :class:`LatticeView` wraps a finite list of opaque, hashable elements with a
comparison oracle; the order axioms are verified on construction, and join and
meet are derived from the order unless the caller supplies them.  Up- and
down-sets are bitmasks over element indices, so axiom checks, transitive
reduction and bound derivation are word operations.

On top of that sit the analyzers: Hasse diagrams (with DOT export), longest
chains, the two semidistributive laws, and lower/upper boundedness via
acyclicity of the dependency relation on join- (meet-) irreducible elements.
The permutohedron and associahedron lattices, chains, Boolean cubes and the
standard five-element examples M3 and N5 all go through the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import perm, tamari


def _bits(mask: int) -> Iterator[int]:
    """0-based indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class LatticeView:
    """A finite lattice: an indexed element list plus a comparison oracle.

    Elements must be hashable and pairwise distinct.  Construction costs one
    ``leq`` call per ordered pair and raises ValueError if ``leq`` is not a
    partial order.  If ``join``/``meet`` callables are absent they are derived
    from the order the first time they are needed; a pair without a least
    upper (greatest lower) bound raises ValueError then.
    """

    def __init__(
        self,
        elements: Sequence,
        leq: Callable[[object, object], bool],
        join: Callable[[object, object], object] | None = None,
        meet: Callable[[object, object], object] | None = None,
        name: str = "L",
    ):
        self.elements = list(elements)
        self.name = name
        m = len(self.elements)
        if m == 0:
            raise ValueError("empty element set")
        self._index: dict = {}
        for i, el in enumerate(self.elements):
            if el in self._index:
                raise ValueError(f"duplicate element {el!r}")
            self._index[el] = i
        self._up = []
        for x in self.elements:
            mask = 0
            for j, y in enumerate(self.elements):
                if leq(x, y):
                    mask |= 1 << j
            self._up.append(mask)
        self._down = [0] * m
        for i in range(m):
            for j in _bits(self._up[i]):
                self._down[j] |= 1 << i
        self._check_order()
        self._join_fn = join
        self._meet_fn = meet
        self._joins: list[list[int]] | None = None
        self._meets: list[list[int]] | None = None
        self._cover_list: list[tuple[int, int]] | None = None
        self._chain_lengths: list[int] | None = None

    def _check_order(self) -> None:
        m = len(self.elements)
        for i in range(m):
            if not (self._up[i] >> i) & 1:
                raise ValueError(f"leq is not reflexive at {self.elements[i]!r}")
        for i in range(m):
            for j in _bits(self._up[i]):
                if j != i and (self._up[j] >> i) & 1:
                    raise ValueError(
                        f"leq is not antisymmetric on "
                        f"{self.elements[i]!r}, {self.elements[j]!r}"
                    )
                if self._up[j] & ~self._up[i]:
                    k = next(_bits(self._up[j] & ~self._up[i]))
                    raise ValueError(
                        f"leq is not transitive: {self.elements[i]!r} <= "
                        f"{self.elements[j]!r} <= {self.elements[k]!r} "
                        f"but not {self.elements[i]!r} <= {self.elements[k]!r}"
                    )

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x!r} is not an element of {self.name}") from None

    def le_idx(self, i: int, j: int) -> bool:
        return (self._up[i] >> j) & 1 == 1

    def le(self, x, y) -> bool:
        return self.le_idx(self.index(x), self.index(y))

    def _least_of(self, mask: int) -> int:
        """Index of the least element of the sub-poset ``mask``, or -1."""
        for i in _bits(mask):
            if mask & ~self._up[i] == 0:
                return i
        return -1

    def _greatest_of(self, mask: int) -> int:
        for i in _bits(mask):
            if mask & ~self._down[i] == 0:
                return i
        return -1

    def _ensure_tables(self) -> None:
        if self._joins is not None:
            return
        m = len(self.elements)
        if self._join_fn is not None:
            joins = [
                [self.index(self._join_fn(x, y)) for y in self.elements]
                for x in self.elements
            ]
        else:
            joins = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    k = self._least_of(self._up[i] & self._up[j])
                    if k < 0:
                        raise ValueError(
                            f"not a lattice: {self.elements[i]!r} and "
                            f"{self.elements[j]!r} have no join"
                        )
                    joins[i][j] = joins[j][i] = k
        if self._meet_fn is not None:
            meets = [
                [self.index(self._meet_fn(x, y)) for y in self.elements]
                for x in self.elements
            ]
        else:
            meets = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i, m):
                    k = self._greatest_of(self._down[i] & self._down[j])
                    if k < 0:
                        raise ValueError(
                            f"not a lattice: {self.elements[i]!r} and "
                            f"{self.elements[j]!r} have no meet"
                        )
                    meets[i][j] = meets[j][i] = k
        self._joins = joins
        self._meets = meets

    def join(self, x, y):
        self._ensure_tables()
        return self.elements[self._joins[self.index(x)][self.index(y)]]

    def meet(self, x, y):
        self._ensure_tables()
        return self.elements[self._meets[self.index(x)][self.index(y)]]

    def bottom_index(self) -> int | None:
        full = (1 << len(self.elements)) - 1
        for i, mask in enumerate(self._up):
            if mask == full:
                return i
        return None

    def top_index(self) -> int | None:
        full = (1 << len(self.elements)) - 1
        for i, mask in enumerate(self._down):
            if mask == full:
                return i
        return None

    def covers(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with element j covering element i, sorted."""
        if self._cover_list is None:
            out = []
            for i in range(len(self.elements)):
                strict = self._up[i] & ~(1 << i)
                for j in _bits(strict):
                    if strict & self._down[j] & ~(1 << j) == 0:
                        out.append((i, j))
            self._cover_list = out
        return self._cover_list

    def _longest_chains(self) -> list[int]:
        """Longest-path lengths from the bottom, over the Hasse DAG."""
        if self._chain_lengths is None:
            bot = self.bottom_index()
            if bot is None:
                raise ValueError(f"{self.name} has no bottom element")
            m = len(self.elements)
            incoming: list[list[int]] = [[] for _ in range(m)]
            for i, j in self.covers():
                incoming[j].append(i)
            order = sorted(range(m), key=lambda i: self._down[i].bit_count())
            lengths = [0] * m
            for i in order:
                if incoming[i]:
                    lengths[i] = max(lengths[k] + 1 for k in incoming[i])
            self._chain_lengths = lengths
        return self._chain_lengths


def hasse(view: LatticeView) -> list[tuple[object, object]]:
    """Cover edges (x, y), x covered by y: the transitive reduction.

    >>> hasse(chain(3))
    [(0, 1), (1, 2)]
    """
    return [(view.elements[i], view.elements[j]) for i, j in view.covers()]


def longest_chain_to(view: LatticeView, x) -> int:
    """Length of the longest chain from the bottom to x in the Hasse DAG.

    >>> longest_chain_to(chain(4), 3)
    3
    """
    return view._longest_chains()[view.index(x)]


@dataclass(frozen=True)
class SemidistributivityVerdict:
    """Outcome of the SD-join / SD-meet laws, with first counterexamples."""

    sd_join: bool
    sd_meet: bool
    sd_join_witness: tuple | None = None
    sd_meet_witness: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.sd_join and self.sd_meet


def check_semidistributive(view: LatticeView) -> SemidistributivityVerdict:
    """Check the semidistributive laws over all triples.

      SD-join:  x v y = x v z  implies  x v y = x v (y ^ z)
      SD-meet:  x ^ y = x ^ z  implies  x ^ y = x ^ (y v z)

    Witnesses are the first counterexample triples in element index order.
    """
    view._ensure_tables()
    m = len(view.elements)
    jt, mt = view._joins, view._meets
    jw = mw = None
    for x in range(m):
        if jw is not None:
            break
        row = jt[x]
        for y in range(m):
            if jw is not None:
                break
            xy = row[y]
            for z in range(m):
                if row[z] == xy and row[mt[y][z]] != xy:
                    jw = (view.elements[x], view.elements[y], view.elements[z])
                    break
    for x in range(m):
        if mw is not None:
            break
        row = mt[x]
        for y in range(m):
            if mw is not None:
                break
            xy = row[y]
            for z in range(m):
                if row[z] == xy and row[jt[y][z]] != xy:
                    mw = (view.elements[x], view.elements[y], view.elements[z])
                    break
    return SemidistributivityVerdict(jw is None, mw is None, jw, mw)


@dataclass(frozen=True)
class BoundednessVerdict:
    """Lower/upper boundedness via acyclicity of the dependency relations."""

    lower_bounded: bool
    upper_bounded: bool
    lower_witness: tuple | None = None
    upper_witness: tuple | None = None

    @property
    def bounded(self) -> bool:
        return self.lower_bounded and self.upper_bounded


def _irreducibles(view: LatticeView, downward: bool) -> tuple[list[int], dict[int, int]]:
    """Join- (or meet-) irreducible indices with their unique lower (upper)
    covers.  An element is join-irreducible when it differs from the join of
    everything strictly below it; such elements must have exactly one lower
    cover, and a violation means the view is not a lattice."""
    view._ensure_tables()
    m = len(view.elements)
    table = view._joins if downward else view._meets
    sets = view._down if downward else view._up
    unit = view.bottom_index() if downward else view.top_index()
    if unit is None:
        raise ValueError(f"{view.name} has no {'bottom' if downward else 'top'} element")
    neighbors: dict[int, list[int]] = {i: [] for i in range(m)}
    for i, j in view.covers():
        if downward:
            neighbors[j].append(i)
        else:
            neighbors[i].append(j)
    irr = []
    cover_of = {}
    for i in range(m):
        if i == unit:
            continue
        fold = unit
        for k in _bits(sets[i] & ~(1 << i)):
            fold = table[fold][k]
        if fold != i:
            if len(neighbors[i]) != 1:
                kind = "join" if downward else "meet"
                raise ValueError(
                    f"{kind}-irreducible {view.elements[i]!r} has "
                    f"{len(neighbors[i])} {'lower' if downward else 'upper'} "
                    f"covers; {view.name} is not a lattice"
                )
            irr.append(i)
            cover_of[i] = neighbors[i][0]
    return irr, cover_of


def _first_cycle(adj: dict[int, list[int]], nodes: list[int]) -> list[int] | None:
    """First directed cycle found by DFS in node order, or None."""
    color = {u: 0 for u in nodes}
    path: list[int] = []

    def visit(u: int) -> list[int] | None:
        color[u] = 1
        path.append(u)
        for v in adj[u]:
            if color[v] == 1:
                return path[path.index(v) :] + [v]
            if color[v] == 0:
                found = visit(v)
                if found is not None:
                    return found
        path.pop()
        color[u] = 2
        return None

    for u in nodes:
        if color[u] == 0:
            found = visit(u)
            if found is not None:
                return found
    return None


def _dependency_cycle(view: LatticeView, downward: bool) -> list[int] | None:
    """A cycle of the dependency relation on join- (meet-) irreducibles.

    p depends on q when p != q and some x has p <= q v x but p not<= q* v x,
    with q* the unique lower cover of q (dually with meets and upper covers).
    """
    irr, cover_of = _irreducibles(view, downward)
    m = len(view.elements)
    table = view._joins if downward else view._meets

    def rel(i: int, j: int) -> bool:
        return view.le_idx(i, j) if downward else view.le_idx(j, i)

    adj: dict[int, list[int]] = {p: [] for p in irr}
    for p in irr:
        for q in irr:
            if p == q:
                continue
            qstar = cover_of[q]
            for x in range(m):
                if rel(p, table[q][x]) and not rel(p, table[qstar][x]):
                    adj[p].append(q)
                    break
    return _first_cycle(adj, irr)


def check_bounded(view: LatticeView) -> BoundednessVerdict:
    """Check lower and upper boundedness.

    A finite lattice is lower bounded exactly when the dependency relation on
    its join-irreducible elements is acyclic; upper boundedness is the dual
    condition; bounded means both.  Witnesses are dependency cycles.

    >>> check_bounded(chain(2)).bounded
    True
    >>> check_bounded(m3()).bounded
    False
    """
    low = _dependency_cycle(view, downward=True)
    up = _dependency_cycle(view, downward=False)
    return BoundednessVerdict(
        lower_bounded=low is None,
        upper_bounded=up is None,
        lower_witness=tuple(view.elements[i] for i in low) if low else None,
        upper_witness=tuple(view.elements[i] for i in up) if up else None,
    )


def to_dot(view: LatticeView, label: Callable[[object], str] | None = None,
           mark: Sequence = ()) -> str:
    """DOT text of the Hasse diagram: edges directed upward (cover direction),
    nodes in element order, ``mark`` elements filled."""
    printer = label if label is not None else str
    marked = {view.index(x) for x in mark}
    lines = [f'digraph "{view.name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, el in enumerate(view.elements):
        text = printer(el).replace('"', '\\"')
        attrs = f'label="{text}"'
        if i in marked:
            attrs += ' style=filled fillcolor=lightblue'
        lines.append(f"  n{i} [{attrs}];")
    for i, j in view.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_from_covers(elements: Sequence, covers: Sequence[tuple], name: str = "L") -> LatticeView:
    """Build a view from an explicit cover list (reflexive-transitive closure)."""
    elements = list(elements)
    idx = {el: i for i, el in enumerate(elements)}
    m = len(elements)
    up = [1 << i for i in range(m)]
    for x, y in covers:
        up[idx[x]] |= 1 << idx[y]
    changed = True
    while changed:
        changed = False
        for i in range(m):
            acc = up[i]
            for j in _bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True

    return LatticeView(elements, lambda x, y: (up[idx[x]] >> idx[y]) & 1 == 1, name=name)


def chain(k: int) -> LatticeView:
    """The k-element chain 0 < 1 < ... < k-1."""
    return LatticeView(list(range(k)), lambda x, y: x <= y, name=f"chain{k}")


def boolean_lattice(k: int) -> LatticeView:
    """The Boolean cube 2^k: subsets of {0..k-1} as bitmasks, ordered by inclusion."""
    return LatticeView(
        list(range(1 << k)), lambda x, y: x & ~y == 0, name=f"B{k}"
    )


def m3() -> LatticeView:
    """The diamond: three incomparable atoms between bottom and top.

    The standard example failing both semidistributive laws."""
    return lattice_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        name="M3",
    )


def n5() -> LatticeView:
    """The pentagon: 0 < a < 1 and 0 < b < c < 1."""
    return lattice_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        name="N5",
    )


def perm_lattice(n: int) -> LatticeView:
    """S_n as a LatticeView over inversion sets, with the library's own join
    and meet supplied as oracles."""
    return LatticeView(
        list(perm.enumerate_inversion_sets(n)),
        lambda a, b: a <= b,
        join=perm.join,
        meet=perm.meet,
        name=f"S{n}",
    )


def tamari_lattice(n: int) -> LatticeView:
    """T_n as a LatticeView over bracketing functions, with the library's own
    join and meet supplied as oracles."""
    return LatticeView(
        list(tamari.enumerate_tamari(n)),
        tamari.leq,
        join=tamari.join,
        meet=tamari.meet,
        name=f"T{n}",
    )
