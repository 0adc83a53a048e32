"""
Fuzzy subsets of a finite semigroup, valued in a finite chain.

A chain of resolution k has integer levels 0..k standing for the labels
i/k in [0, 1]; meets are min and joins are max. Values stay integers
everywhere and the rational labels only show up in I/O.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

import global_data
from semigroup_core import (
    BudgetExceeded, Decomposition, ElementSubset, FiniteSemigroup, SemigroupError,
    factorizations, is_completely_simple, is_left_simple, is_semilattice, restrict,
)
from utils import logger, format_fuzzy, parse_fuzzy_text


class ChainMismatch(ValueError):
    pass


class NotAFuzzySubsemigroup(ValueError):
    pass


class FamilyPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ValueChain:
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"Chain resolution must be a positive integer, got {self.k!r}")

    @property
    def top(self) -> int:
        return self.k

    @property
    def levels(self) -> range:
        return range(self.k + 1)

    @property
    def positive_levels(self) -> range:
        return range(1, self.k + 1)

    def label(self, level: int) -> Fraction:
        return Fraction(level, self.k)

    def level_of(self, label) -> int:
        scaled = Fraction(label) * self.k
        if scaled.denominator != 1 or not 0 <= scaled <= self.k:
            raise ValueError(f"{label} is not a level of the chain with k={self.k}")
        return int(scaled)

    @staticmethod
    def meet(i: int, j: int) -> int:
        return min(i, j)


@dataclass(frozen=True)
class FuzzySubset:
    host: FiniteSemigroup
    chain: ValueChain
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.host.order:
            raise ValueError(f"Expected {self.host.order} values, got {len(self.values)}")
        bad = [v for v in self.values if not 0 <= v <= self.chain.k]
        if bad:
            raise ValueError(f"Values {bad} outside levels 0..{self.chain.k}")

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.values, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __getitem__(self, a: int) -> int:
        return self.values[a]

    def labels(self) -> Tuple[Fraction, ...]:
        return tuple(self.chain.label(v) for v in self.values)

    def __str__(self):
        return format_fuzzy(self.chain.k, self.values)


# ---------- constructors ----------

def fuzzy_subset(S: FiniteSemigroup, chain: ValueChain, values: Sequence[int]) -> FuzzySubset:
    return FuzzySubset(S, chain, tuple(int(v) for v in values))


def constant(S: FiniteSemigroup, chain: ValueChain, level: int) -> FuzzySubset:
    return FuzzySubset(S, chain, (level,) * S.order)


def characteristic(S: FiniteSemigroup, A, chain: ValueChain) -> FuzzySubset:
    A = frozenset(A)
    return FuzzySubset(S, chain, tuple(chain.k if a in A else 0 for a in S.elements))


def parse_fuzzy_subset(S: FiniteSemigroup, text: str) -> FuzzySubset:
    k, values = parse_fuzzy_text(text)
    return fuzzy_subset(S, ValueChain(k), values)


def characteristic_family(S: FiniteSemigroup, decomposition: Decomposition, chain: ValueChain) -> List[FuzzySubset]:
    return [characteristic(S, block, chain) for block in decomposition.blocks]


# ---------- lattice operations ----------

def _check_compatible(f: FuzzySubset, g: FuzzySubset) -> None:
    if f.host != g.host:
        raise ChainMismatch("Fuzzy subsets live on different semigroups")
    if f.chain != g.chain:
        raise ChainMismatch(f"Fuzzy subsets use different chains (k={f.chain.k} vs k={g.chain.k})")


def meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _check_compatible(f, g)
    return fuzzy_subset(f.host, f.chain, np.minimum(f.array, g.array))


def join(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _check_compatible(f, g)
    return fuzzy_subset(f.host, f.chain, np.maximum(f.array, g.array))


def composite(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """(f ∘ g)(a) = max over a = bc of min(f(b), g(c)); 0 when a has no factorization."""
    _check_compatible(f, g)
    out = np.zeros(f.host.order, dtype=np.int64)
    np.maximum.at(out, f.host.array.ravel(), np.minimum.outer(f.array, g.array).ravel())
    return fuzzy_subset(f.host, f.chain, out)


def includes(f: FuzzySubset, g: FuzzySubset) -> bool:
    """f ⊆ g pointwise."""
    _check_compatible(f, g)
    return bool(np.all(f.array <= g.array))


def level_set(f: FuzzySubset, t: int) -> ElementSubset:
    if not 1 <= t <= f.chain.k:
        raise ValueError(f"Cut level must lie in 1..{f.chain.k}, got {t}")
    return frozenset(int(a) for a in np.flatnonzero(f.array >= t))


def support(f: FuzzySubset) -> ElementSubset:
    return level_set(f, 1)


def is_two_valued(f: FuzzySubset) -> bool:
    return all(v in (0, f.chain.k) for v in f.values)


# ---------- subsystem predicates ----------

def is_fuzzy_subsemigroup(f: FuzzySubset) -> bool:
    v = f.array
    return bool(np.all(v[f.host.array] >= np.minimum.outer(v, v)))


def is_fuzzy_left_ideal(f: FuzzySubset) -> bool:
    v = f.array
    return bool(np.all(v[f.host.array] >= v[None, :]))  # f(ab) >= f(b)


def is_fuzzy_right_ideal(f: FuzzySubset) -> bool:
    v = f.array
    return bool(np.all(v[f.host.array] >= v[:, None]))  # f(ab) >= f(a)


def is_fuzzy_ideal(f: FuzzySubset) -> bool:
    return is_fuzzy_left_ideal(f) and is_fuzzy_right_ideal(f)


def is_fuzzy_quasi_ideal(q: FuzzySubset) -> bool:
    whole = constant(q.host, q.chain, q.chain.k)
    return includes(meet(composite(q, whole), composite(whole, q)), q)


def dominance_violation(S: FiniteSemigroup, levels: Sequence[int]) -> Optional[int]:
    """First a for which neither q(a) >= q(b) for every factorization a = bc
    nor q(a) >= q(c) for every one holds; None if there is none."""
    for a, pairs in enumerate(factorizations(S)):
        if not pairs:
            continue
        if all(levels[a] >= levels[b] for b, _ in pairs):
            continue
        if all(levels[a] >= levels[c] for _, c in pairs):
            continue
        return a
    return None


def _cuts_satisfy(f: FuzzySubset, predicate: Callable[[FiniteSemigroup], bool]) -> bool:
    if not is_fuzzy_subsemigroup(f):
        raise NotAFuzzySubsemigroup(f"{f} is not a fuzzy subsemigroup")
    for t in f.chain.positive_levels:
        cut = level_set(f, t)
        if not cut:
            return False
        try:
            sub, _ = restrict(f.host, cut)
        except SemigroupError:
            raise AssertionError(f"cut at level {t} of fuzzy subsemigroup {f} is not closed")
        if not predicate(sub):
            return False
    return True


def is_left_simple_fuzzy_subsemigroup(f: FuzzySubset) -> bool:
    return _cuts_satisfy(f, is_left_simple)


def is_completely_simple_fuzzy_subsemigroup(f: FuzzySubset) -> bool:
    return _cuts_satisfy(f, is_completely_simple)


# ---------- fuzzy semilattices of fuzzy subsemigroups ----------

@dataclass
class FamilyReport:
    disjoint: bool = True
    product_closed: bool = True
    cuts_nonempty: bool = True
    covering: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.disjoint and self.product_closed and self.cuts_nonempty and self.covering


def family_report(Y: FiniteSemigroup, family: Sequence[FuzzySubset]) -> FamilyReport:
    if not is_semilattice(Y):
        raise FamilyPreconditionError("index semigroup is not a semilattice")
    if len(family) != Y.order:
        raise FamilyPreconditionError(f"{len(family)} family members for an index of order {Y.order}")
    for alpha, f in enumerate(family):
        _check_compatible(family[0], f)
        if not is_fuzzy_subsemigroup(f):
            raise FamilyPreconditionError(f"member {alpha} ({f}) is not a fuzzy subsemigroup")

    report = FamilyReport()
    host, chain = family[0].host, family[0].chain
    for alpha in Y.elements:
        for beta in Y.elements:
            if alpha < beta:
                overlap = np.flatnonzero(np.minimum(family[alpha].array, family[beta].array) > 0)
                if overlap.size and report.disjoint:
                    report.disjoint = False
                    report.failures.append(f"disjointness: members {alpha}, {beta} overlap at {int(overlap[0])}")
            target = family[Y.table[alpha][beta]]
            if report.product_closed and not includes(composite(family[alpha], family[beta]), target):
                report.product_closed = False
                report.failures.append(f"product: f_{alpha} ∘ f_{beta} not inside f_{Y.table[alpha][beta]}")

    for t in chain.positive_levels:
        for alpha, f in enumerate(family):
            if report.cuts_nonempty and not level_set(f, t):
                report.cuts_nonempty = False
                report.failures.append(f"cuts: member {alpha} has an empty cut at level {t}")
        for a in host.elements:
            if report.covering and not any(f[a] >= t for f in family):
                report.covering = False
                report.failures.append(f"covering: ({a}, {t}) lies in no cut")
    if report.failures:
        logger.debug(f"family over index of order {Y.order} rejected: {report.failures}")
    return report


def is_fuzzy_semilattice_family(Y: FiniteSemigroup, family: Sequence[FuzzySubset]) -> bool:
    return family_report(Y, family).passed


# ---------- enumeration ----------

FUZZY_FILTERS: Dict[str, Optional[Callable[[FuzzySubset], bool]]] = {
    'none': None,
    'subsemigroup': is_fuzzy_subsemigroup,
    'left_ideal': is_fuzzy_left_ideal,
    'right_ideal': is_fuzzy_right_ideal,
    'ideal': is_fuzzy_ideal,
    'quasi_ideal': is_fuzzy_quasi_ideal,
}


def enumerate_fuzzy_subsets(S: FiniteSemigroup, chain: ValueChain, filter: str = 'none',
                            budget: Optional[int] = None) -> Iterator[FuzzySubset]:
    """Every level assignment, lexicographic with element 0 most significant."""
    if filter not in FUZZY_FILTERS:
        raise ValueError(f"Unknown filter {filter!r}; expected one of {sorted(FUZZY_FILTERS)}")
    budget = global_data.fuzzy_budget if budget is None else budget
    total = (chain.k + 1) ** S.order
    if total > budget:
        raise BudgetExceeded(f"{total} level assignments exceed the budget {budget}")
    predicate = FUZZY_FILTERS[filter]
    for values in product(chain.levels, repeat=S.order):
        f = FuzzySubset(S, chain, values)
        if predicate is None or predicate(f):
            yield f
