"""
Finite semigroups as Cayley tables.

Elements are the dense indices 0..n-1 and the table is the single source of
truth: table[a][b] = a·b. Subsets are frozensets of indices. Everything here
is a pure function of immutable values.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

import global_data
from utils import logger, format_table

ElementSubset = FrozenSet[int]


class SemigroupError(ValueError):
    pass


class AssociativityError(SemigroupError):
    def __init__(self, triple):
        self.triple = tuple(int(x) for x in triple)
        a, b, c = self.triple
        super().__init__(f"Not associative at (a, b, c) = ({a}, {b}, {c}): (ab)c != a(bc)")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteSemigroup:
    table: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    @property
    def universe(self) -> ElementSubset:
        return frozenset(range(len(self.table)))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __str__(self):
        return format_table(self.table)


# ---------- construction ----------

def first_associativity_violation(T: np.ndarray) -> Optional[Tuple[int, int, int]]:
    left = T[T, :]   # left[a, b, c] = (ab)c
    right = T[:, T]  # right[a, b, c] = a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        return tuple(int(x) for x in bad[0])
    return None


def validate(table: Sequence[Sequence[int]]) -> FiniteSemigroup:
    rows = [list(row) for row in table]
    n = len(rows)
    if n == 0:
        raise SemigroupError("A semigroup needs at least one element")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise SemigroupError(f"Table is not square: row {a} has {len(row)} entries, expected {n}")
        for b, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                raise SemigroupError(f"Entry table[{a}][{b}]={x!r} is not an element index in 0..{n - 1}")

    triple = first_associativity_violation(np.array(rows, dtype=np.int64))
    if triple is not None:
        raise AssociativityError(triple)
    return FiniteSemigroup(tuple(tuple(int(x) for x in row) for row in rows))


def opposite(S: FiniteSemigroup) -> FiniteSemigroup:
    """The anti-isomorphic copy: a *' b = b · a."""
    return FiniteSemigroup(tuple(zip(*S.table)))


def restrict(S: FiniteSemigroup, A: Iterable[int]) -> Tuple[FiniteSemigroup, Tuple[int, ...]]:
    """Sub-table of a closed subset, relabelled 0..|A|-1, plus the element map."""
    elems = tuple(sorted(A))
    if not elems:
        raise SemigroupError("Cannot restrict to an empty subset")
    position = {a: i for i, a in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            ab = S.table[a][b]
            if ab not in position:
                raise SemigroupError(f"Subset {list(elems)} is not closed: {a}*{b}={ab}")
            row.append(position[ab])
        rows.append(tuple(row))
    return FiniteSemigroup(tuple(rows)), elems


@lru_cache(maxsize=256)
def factorizations(S: FiniteSemigroup) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """For each element a, every pair (b, c) with b·c = a, in row-major order."""
    found: List[List[Tuple[int, int]]] = [[] for _ in S.elements]
    for b in S.elements:
        for c in S.elements:
            found[S.table[b][c]].append((b, c))
    return tuple(tuple(pairs) for pairs in found)


# ---------- subset algebra ----------

def subset_product(S: FiniteSemigroup, A: Iterable[int], B: Iterable[int]) -> ElementSubset:
    B = tuple(B)
    return frozenset(S.table[a][b] for a in A for b in B)


def _require_nonempty(A, what: str) -> ElementSubset:
    A = frozenset(A)
    if not A:
        raise SemigroupError(f"{what} is undefined for the empty subset")
    return A


def is_subsemigroup(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    A = frozenset(A)
    return subset_product(S, A, A) <= A


def is_left_ideal(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    A = _require_nonempty(A, "is_left_ideal")
    return subset_product(S, S.universe, A) <= A


def is_right_ideal(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    A = _require_nonempty(A, "is_right_ideal")
    return subset_product(S, A, S.universe) <= A


def is_ideal(S: FiniteSemigroup, A: Iterable[int]) -> bool:
    return is_left_ideal(S, A) and is_right_ideal(S, A)


def is_quasi_ideal(S: FiniteSemigroup, Q: Iterable[int]) -> bool:
    Q = _require_nonempty(Q, "is_quasi_ideal")
    return (subset_product(S, Q, S.universe) & subset_product(S, S.universe, Q)) <= Q


def nonempty_subsets(S: FiniteSemigroup, bound: Optional[int] = None) -> Iterator[ElementSubset]:
    bound = global_data.subset_order_bound if bound is None else bound
    if S.order > bound:
        raise BudgetExceeded(f"Subset enumeration refused: order {S.order} exceeds bound {bound}")
    for size in range(1, S.order + 1):
        for combo in combinations(S.elements, size):
            yield frozenset(combo)


def all_subsemigroups(S: FiniteSemigroup, bound: Optional[int] = None) -> List[ElementSubset]:
    return [A for A in nonempty_subsets(S, bound) if is_subsemigroup(S, A)]


def all_left_ideals(S: FiniteSemigroup, bound: Optional[int] = None) -> List[ElementSubset]:
    return [A for A in nonempty_subsets(S, bound) if is_left_ideal(S, A)]


def all_right_ideals(S: FiniteSemigroup, bound: Optional[int] = None) -> List[ElementSubset]:
    return [A for A in nonempty_subsets(S, bound) if is_right_ideal(S, A)]


def all_ideals(S: FiniteSemigroup, bound: Optional[int] = None) -> List[ElementSubset]:
    return [A for A in nonempty_subsets(S, bound) if is_ideal(S, A)]


def all_quasi_ideals(S: FiniteSemigroup, bound: Optional[int] = None) -> List[ElementSubset]:
    return [A for A in nonempty_subsets(S, bound) if is_quasi_ideal(S, A)]


# ---------- element predicates ----------

def idempotents(S: FiniteSemigroup) -> ElementSubset:
    T = S.array
    return frozenset(int(a) for a in np.flatnonzero(np.diagonal(T) == np.arange(S.order)))


def find_irregular(S: FiniteSemigroup) -> Optional[int]:
    """First a with no x such that axa = a, or None when S is regular."""
    T = S.array
    ar = np.arange(S.order)
    axa = T[T, ar[:, None]]  # axa[a, x] = (ax)a
    bad = np.flatnonzero(~(axa == ar[:, None]).any(axis=1))
    return int(bad[0]) if bad.size else None


def find_non_left_regular(S: FiniteSemigroup) -> Optional[int]:
    """First a with no x such that x·a² = a, or None when S is left regular."""
    T = S.array
    ar = np.arange(S.order)
    squares = T[ar, ar]
    xaa = T[:, squares]  # xaa[x, a] = x(aa)
    bad = np.flatnonzero(~(xaa == ar[None, :]).any(axis=0))
    return int(bad[0]) if bad.size else None


def find_not_completely_regular(S: FiniteSemigroup) -> Optional[int]:
    T = S.array
    ar = np.arange(S.order)
    axa = T[T, ar[:, None]]
    ok = (axa == ar[:, None]) & (T == T.T)  # axa = a and ax = xa
    bad = np.flatnonzero(~ok.any(axis=1))
    return int(bad[0]) if bad.size else None


def is_regular(S: FiniteSemigroup) -> bool:
    return find_irregular(S) is None


def is_left_regular(S: FiniteSemigroup) -> bool:
    return find_non_left_regular(S) is None


def is_completely_regular(S: FiniteSemigroup) -> bool:
    return find_not_completely_regular(S) is None


def is_left_simple(S: FiniteSemigroup) -> bool:
    # Sa is a left ideal, so S is left simple iff every column of the table is onto
    columns = np.sort(S.array, axis=0)
    return bool(np.all(columns == np.arange(S.order)[:, None]))


def is_simple(S: FiniteSemigroup) -> bool:
    T = S.array
    for a in S.elements:
        if np.unique(T[T[:, a], :]).size != S.order:  # SaS
            return False
    return True


def is_completely_simple(S: FiniteSemigroup) -> bool:
    # finite simple semigroups are completely simple once an idempotent exists
    return is_simple(S) and bool(idempotents(S))


def is_completely_simple_by_primitive(S: FiniteSemigroup) -> bool:
    """Simple with a primitive idempotent: e such that f ≤ e (ef = fe = f) forces f = e."""
    if not is_simple(S):
        return False
    E = idempotents(S)
    for e in E:
        below = [f for f in E if S.table[e][f] == f and S.table[f][e] == f]
        if below == [e]:
            return True
    return False


def is_semilattice(S: FiniteSemigroup) -> bool:
    T = S.array
    return bool(np.all(np.diagonal(T) == np.arange(S.order)) and np.array_equal(T, T.T))


# ---------- S x chain ----------

def _chain_levels(chain, include_zero: bool) -> range:
    return range(0 if include_zero else 1, chain.k + 1)


def product_pairs(S: FiniteSemigroup, chain, include_zero: bool = True) -> List[Tuple[int, int]]:
    """Element labels of product_with_chain, index order."""
    return [(a, t) for a in S.elements for t in _chain_levels(chain, include_zero)]


def pair_index(chain, pair: Tuple[int, int], include_zero: bool = True) -> int:
    lo = 0 if include_zero else 1
    a, t = pair
    return a * (chain.k + 1 - lo) + (t - lo)


@lru_cache(maxsize=256)
def product_with_chain(S: FiniteSemigroup, chain, include_zero: bool = True) -> FiniteSemigroup:
    """S × chain with (a, i)(b, j) = (ab, min(i, j)); element (a, i) sits at pair_index."""
    levels = np.array(_chain_levels(chain, include_zero), dtype=np.int64)
    lo, m = int(levels[0]), len(levels)
    products = np.repeat(np.repeat(S.array, m, axis=0), m, axis=1)
    tiled = np.tile(levels, S.order)
    meets = np.minimum.outer(tiled, tiled)
    return validate((products * m + (meets - lo)).tolist())


# ---------- congruences ----------

class _UnionFind:
    def __init__(self, size: int):
        self.parents = list(range(size))

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        # path compression
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # smaller index stays root so class ids come out stable
        if rb < ra:
            ra, rb = rb, ra
        self.parents[rb] = ra
        return True


def _normalize(labels: Sequence[int]) -> Tuple[int, ...]:
    renumber: Dict[int, int] = {}
    return tuple(renumber.setdefault(x, len(renumber)) for x in labels)


@dataclass(frozen=True)
class Congruence:
    classes: Tuple[int, ...]  # class id per element, numbered by first occurrence

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> 'Congruence':
        return cls(_normalize(labels))

    @property
    def num_classes(self) -> int:
        return max(self.classes) + 1

    def blocks(self) -> List[ElementSubset]:
        found: List[List[int]] = [[] for _ in range(self.num_classes)]
        for a, c in enumerate(self.classes):
            found[c].append(a)
        return [frozenset(block) for block in found]

    def same(self, a: int, b: int) -> bool:
        return self.classes[a] == self.classes[b]


def is_congruence(S: FiniteSemigroup, labels: Sequence[int]) -> bool:
    if len(labels) != S.order:
        return False
    lab = np.array(_normalize(labels), dtype=np.int64)
    reps = np.array([list(lab).index(c) for c in range(int(lab.max()) + 1)], dtype=np.int64)
    rep_of = reps[lab]
    product_classes = lab[S.array]
    # a ≡ rep(a) must give equal classes under left and right translation
    return bool(np.array_equal(product_classes, product_classes[rep_of, :])
                and np.array_equal(product_classes, product_classes[:, rep_of]))


def generated_congruence(S: FiniteSemigroup, pairs: Iterable[Tuple[int, int]]) -> Congruence:
    n = S.order
    uf = _UnionFind(n)
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise SemigroupError(f"Pair ({a}, {b}) out of range for order {n}")
        uf.union(a, b)

    T = S.table
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for x in range(n):
            r = uf.find(x)
            if r == x:
                continue
            for c in range(n):
                changed |= uf.union(T[c][x], T[c][r])
                changed |= uf.union(T[x][c], T[r][c])
    congruence = Congruence.from_labels([uf.find(a) for a in range(n)])
    logger.debug(f"generated_congruence: {congruence.num_classes} classes after {rounds} rounds")
    return congruence


def quotient(S: FiniteSemigroup, c: Congruence) -> Tuple[FiniteSemigroup, Tuple[int, ...]]:
    reps = [min(block) for block in c.blocks()]
    rows = [[c.classes[S.table[x][y]] for y in reps] for x in reps]
    return validate(rows), c.classes


def least_semilattice_congruence(S: FiniteSemigroup) -> Congruence:
    T = S.table
    pairs = [(a, T[a][a]) for a in S.elements]
    pairs += [(T[a][b], T[b][a]) for a in S.elements for b in S.elements]
    c = generated_congruence(S, pairs)
    Y, _ = quotient(S, c)
    assert is_semilattice(Y), f"closure produced a non-semilattice quotient: {Y.table}"
    return c


def set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of 0..n-1 as restricted growth strings."""
    if n == 0:
        yield ()
        return

    labels = [0] * n

    def extend(i: int, top: int):
        if i == n:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from extend(i + 1, max(top, c))

    yield from extend(1, 0)


def semilattice_congruences(S: FiniteSemigroup, bound: Optional[int] = None) -> List[Congruence]:
    """Every congruence of S whose quotient is a semilattice."""
    bound = global_data.partition_order_bound if bound is None else bound
    if S.order > bound:
        raise BudgetExceeded(f"Partition search refused: order {S.order} exceeds bound {bound}")
    found = []
    for labels in set_partitions(S.order):
        if is_congruence(S, labels):
            c = Congruence(labels)
            if is_semilattice(quotient(S, c)[0]):
                found.append(c)
    return found


# ---------- semilattice decompositions ----------

@dataclass(frozen=True)
class Decomposition:
    index: FiniteSemigroup
    blocks: Tuple[ElementSubset, ...]
    left_simple: Tuple[bool, ...]
    completely_simple: Tuple[bool, ...]

    @property
    def is_semilattice_of_left_simple(self) -> bool:
        return all(self.left_simple)

    @property
    def is_semilattice_of_completely_simple(self) -> bool:
        return all(self.completely_simple)

    def block_of(self, a: int) -> int:
        for alpha, block in enumerate(self.blocks):
            if a in block:
                return alpha
        raise SemigroupError(f"Element {a} lies in no block")


def make_decomposition(S: FiniteSemigroup, index: FiniteSemigroup, blocks: Sequence[ElementSubset]) -> Decomposition:
    left_simple, completely_simple = [], []
    for block in blocks:
        sub, _ = restrict(S, block)
        left_simple.append(is_left_simple(sub))
        completely_simple.append(is_completely_simple(sub))
    return Decomposition(index, tuple(frozenset(b) for b in blocks), tuple(left_simple), tuple(completely_simple))


def decomposition_from_congruence(S: FiniteSemigroup, c: Congruence) -> Decomposition:
    Y, _ = quotient(S, c)
    return make_decomposition(S, Y, c.blocks())


def check_decomposition(S: FiniteSemigroup, d: Decomposition) -> bool:
    if not is_semilattice(d.index) or len(d.blocks) != d.index.order:
        return False
    covered = [a for block in d.blocks for a in block]
    if sorted(covered) != list(S.elements):
        return False
    for alpha, block_a in enumerate(d.blocks):
        for beta, block_b in enumerate(d.blocks):
            if not subset_product(S, block_a, block_b) <= d.blocks[d.index.table[alpha][beta]]:
                return False
    return True


def left_ideals_two_sided(S: FiniteSemigroup, bound: Optional[int] = None) -> bool:
    return is_left_regular(S) and all(is_right_ideal(S, L) for L in all_left_ideals(S, bound))


def semilattice_decomposition(S: FiniteSemigroup) -> Decomposition:
    """Decomposition along the least semilattice congruence.

    The left-simplicity verdict is cross-checked against "left regular and
    every left ideal two-sided" whenever the subset scan is within bounds.
    """
    d = decomposition_from_congruence(S, least_semilattice_congruence(S))
    assert check_decomposition(S, d), "least semilattice congruence gave an invalid decomposition"
    if S.order <= global_data.subset_order_bound:
        other = left_ideals_two_sided(S)
        if other != d.is_semilattice_of_left_simple:
            logger.error(f"Left-simple decomposition verdict {d.is_semilattice_of_left_simple} "
                         f"disagrees with left-regular/two-sided verdict {other} for {S.table}")
    return d
