"""
Fuzzy subsystems of S versus distinguished regions of S × chain.

graph_region sends f to {(b, y) : y <= f(b)}; region_to_fuzzy sends a
subsemigroup Σ of S × chain to its fiber-max map. On the regions that
satisfy the condition systems below the two are mutually inverse.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import global_data
from fuzzy_core import (
    FUZZY_FILTERS, FamilyPreconditionError, FuzzySubset, ValueChain,
    dominance_violation, enumerate_fuzzy_subsets, fuzzy_subset, is_fuzzy_semilattice_family,
    is_fuzzy_subsemigroup, level_set,
)
from semigroup_core import (
    BudgetExceeded, Decomposition, ElementSubset, FiniteSemigroup, check_decomposition,
    is_left_ideal, is_quasi_ideal, is_right_ideal, is_subsemigroup, make_decomposition,
    nonempty_subsets, pair_index, product_with_chain,
)
from utils import logger

Pair = Tuple[int, int]


class RegionError(ValueError):
    pass


@dataclass(frozen=True)
class ProductRegion:
    host: FiniteSemigroup
    chain: ValueChain
    pairs: FrozenSet[Pair]

    def __post_init__(self):
        for a, t in self.pairs:
            if not (0 <= a < self.host.order and 0 <= t <= self.chain.k):
                raise RegionError(f"Pair ({a}, {t}) out of range for order {self.host.order}, k={self.chain.k}")

    @cached_property
    def fibers(self) -> Dict[int, FrozenSet[int]]:
        found: Dict[int, set] = {}
        for a, t in self.pairs:
            found.setdefault(a, set()).add(t)
        return {a: frozenset(levels) for a, levels in found.items()}

    def fiber(self, a: int) -> FrozenSet[int]:
        return self.fibers.get(a, frozenset())

    def fiber_max(self, a: int) -> Optional[int]:
        fiber = self.fiber(a)
        return max(fiber) if fiber else None

    def projection(self) -> ElementSubset:
        return frozenset(self.fibers)

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.pairs)

    def indices(self, include_zero: bool = True) -> FrozenSet[int]:
        """Element indices inside product_with_chain(host, chain, include_zero)."""
        if not include_zero and any(t == 0 for _, t in self.pairs):
            raise RegionError("Region meets level 0 and does not live in S × I*")
        return frozenset(pair_index(self.chain, p, include_zero) for p in self.pairs)

    def __str__(self):
        return ' '.join(f"({a},{t})" for a, t in self.sorted_pairs())


def make_region(S: FiniteSemigroup, chain: ValueChain, pairs) -> ProductRegion:
    return ProductRegion(S, chain, frozenset((int(a), int(t)) for a, t in pairs))


def graph_region(f: FuzzySubset) -> ProductRegion:
    return make_region(f.host, f.chain, ((b, y) for b in f.host.elements for y in range(f[b] + 1)))


def region_from_levels(S: FiniteSemigroup, chain: ValueChain, maxima: Sequence[int]) -> ProductRegion:
    """The down-closed region with full projection whose fiber maxima are given."""
    return make_region(S, chain, ((b, y) for b in S.elements for y in range(maxima[b] + 1)))


def level_cylinder(S: FiniteSemigroup, chain: ValueChain, A, t: int) -> ProductRegion:
    """A × {1..t} inside S × I*."""
    if not 1 <= t <= chain.k:
        raise RegionError(f"Cylinder height must lie in 1..{chain.k}, got {t}")
    return make_region(S, chain, ((a, s) for a in A for s in range(1, t + 1)))


# ---------- condition systems ----------

def _closure(region: ProductRegion, kind: str) -> bool:
    P = product_with_chain(region.host, region.chain, True)
    idx = region.indices()
    if kind == 's':
        return bool(idx) and is_subsemigroup(P, idx)
    if not idx:
        return False
    if kind == 'l':
        return is_left_ideal(P, idx)
    if kind == 'r':
        return is_right_ideal(P, idx)
    if kind == 'q':
        return is_quasi_ideal(P, idx)
    raise ValueError(f"Unknown condition system {kind!r}")


def condition_report(region: ProductRegion, kind: str) -> Dict[str, bool]:
    """Per-condition truth values; kind is one of s, l, r, q."""
    S = region.host
    covered = region.projection()
    report = {
        'closed': _closure(region, kind),
        'i': covered == S.universe,
        # sup of a finite fiber is its max, so (ii) is literal membership
        'ii': all(region.fiber_max(b) in region.fiber(b) for b in covered),
        'iii': all(region.fiber(b) == frozenset(range(region.fiber_max(b) + 1)) for b in covered),
    }
    if kind == 'q':
        maxima = [region.fiber_max(a) or 0 for a in S.elements]
        report['iv'] = dominance_violation(S, maxima) is None
    return report


def check_s_conditions(region: ProductRegion) -> bool:
    return all(condition_report(region, 's').values())


def check_l_conditions(region: ProductRegion) -> bool:
    return all(condition_report(region, 'l').values())


def check_r_conditions(region: ProductRegion) -> bool:
    return all(condition_report(region, 'r').values())


def check_q_conditions(region: ProductRegion) -> bool:
    return all(condition_report(region, 'q').values())


def region_to_fuzzy(region: ProductRegion) -> FuzzySubset:
    P = product_with_chain(region.host, region.chain, True)
    if not is_subsemigroup(P, region.indices()):
        raise RegionError(f"Region {region} is not a subsemigroup of S × chain")
    sigma = fuzzy_subset(region.host, region.chain,
                         [region.fiber_max(a) or 0 for a in region.host.elements])
    assert is_fuzzy_subsemigroup(sigma), f"fiber-max map {sigma} is not a fuzzy subsemigroup"
    assert region.pairs <= graph_region(sigma).pairs, f"region {region} escapes the graph of {sigma}"
    return sigma


# ---------- bijection sweeps ----------

FAMILY_CONDITIONS = {
    'subsemigroup': 's',
    'left_ideal': 'l',
    'right_ideal': 'r',
    'quasi_ideal': 'q',
}


@dataclass
class FamilyCorrespondence:
    family: str
    fuzzy_count: int = 0
    region_count: int = 0
    images_satisfy: bool = True
    injective: bool = True
    left_inverse: bool = True
    onto: bool = True
    witness: Optional[dict] = None

    @property
    def holds(self) -> bool:
        return self.images_satisfy and self.injective and self.left_inverse and self.onto

    def note(self, check: str, **data) -> None:
        setattr(self, check, False)
        if self.witness is None:
            self.witness = {'check': check, **data}


def _verify_family(S: FiniteSemigroup, chain: ValueChain, family: str,
                   candidates: List[ProductRegion], budget: Optional[int]) -> FamilyCorrespondence:
    kind = FAMILY_CONDITIONS[family]
    result = FamilyCorrespondence(family)
    fuzzy = list(enumerate_fuzzy_subsets(S, chain, family, budget))
    result.fuzzy_count = len(fuzzy)

    images = {}
    for f in fuzzy:
        image = graph_region(f)
        if not all(condition_report(image, kind).values()):
            result.note('images_satisfy', fuzzy=str(f), region=str(image))
        if image in images:
            result.note('injective', fuzzy=[str(images[image]), str(f)])
        images[image] = f
        try:
            back = region_to_fuzzy(image)
        except RegionError:
            back = None
        if back != f:
            result.note('left_inverse', fuzzy=str(f), returned=str(back))

    regions = [region for region in candidates if all(condition_report(region, kind).values())]
    result.region_count = len(regions)
    predicate = FUZZY_FILTERS[family]
    for region in regions:
        sigma = region_to_fuzzy(region)
        if graph_region(sigma) != region or not predicate(sigma):
            result.note('onto', region=str(region), fuzzy=str(sigma))
    if set(regions) != set(images):
        result.note('onto', missing=[str(r) for r in sorted(set(images) ^ set(regions), key=str)][:3])
    return result


def verify_bijections(S: FiniteSemigroup, chain: ValueChain,
                      budget: Optional[int] = None) -> Dict[str, FamilyCorrespondence]:
    """Ψ restricted to each family is a bijection onto the regions passing its condition system.

    Candidate regions are indexed by their fiber-max vector, so the search
    space is (k+1)^n and splits by the level of element 0.
    """
    budget = global_data.region_budget if budget is None else budget
    total = (chain.k + 1) ** S.order
    if total > budget:
        raise BudgetExceeded(f"{total} candidate regions exceed the budget {budget}")
    candidates = [region_from_levels(S, chain, maxima) for maxima in product(chain.levels, repeat=S.order)]

    results = {}
    for family in FAMILY_CONDITIONS:
        results[family] = _verify_family(S, chain, family, candidates, budget)
        logger.debug(f"bijection {family}: {results[family].fuzzy_count} fuzzy, "
                     f"{results[family].region_count} regions, holds={results[family].holds}")
    return results


@dataclass
class LeftInverseReport:
    subsemigroups: int = 0
    distinct_images: int = 0
    contained: bool = True
    onto: bool = True
    witness: Optional[dict] = None

    @property
    def holds(self) -> bool:
        return self.contained and self.onto


def check_left_inverse(S: FiniteSemigroup, chain: ValueChain,
                       budget: Optional[int] = None) -> LeftInverseReport:
    """Ψ̃ on every subsemigroup of S × chain: output is a fuzzy subsemigroup
    containing Σ in its graph, and every fuzzy subsemigroup is hit."""
    budget = global_data.left_inverse_budget if budget is None else budget
    P = product_with_chain(S, chain, True)
    if 2 ** P.order > budget:
        raise BudgetExceeded(f"2^{P.order} subsets of S × chain exceed the budget {budget}")

    report = LeftInverseReport()
    labels = [(a, t) for a in S.elements for t in chain.levels]
    images = set()
    for idx in nonempty_subsets(P, bound=P.order):
        if not is_subsemigroup(P, idx):
            continue
        report.subsemigroups += 1
        region = make_region(S, chain, (labels[i] for i in idx))
        try:
            images.add(region_to_fuzzy(region))
        except AssertionError as e:
            report.contained = False
            report.witness = report.witness or {'region': str(region), 'error': str(e)}
    report.distinct_images = len(images)
    expected = set(enumerate_fuzzy_subsets(S, chain, 'subsemigroup'))
    if images != expected:
        report.onto = False
        report.witness = report.witness or {'missed': [str(f) for f in sorted(expected - images, key=str)][:3]}
    return report


# ---------- S × I* level components ----------

@dataclass(frozen=True)
class LevelComponent:
    alpha: int
    t: int
    carrier: FrozenSet[Pair]


@dataclass
class LevelDecomposition:
    components: Tuple[LevelComponent, ...]
    decomposition: Optional[Decomposition]
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def level_components(Y: FiniteSemigroup, family: Sequence[FuzzySubset]) -> LevelDecomposition:
    """The components (f_α)_t × {t} of S × I*, indexed by Y × (levels >= 1)."""
    if not is_fuzzy_semilattice_family(Y, family):
        raise FamilyPreconditionError("family is not a fuzzy semilattice of fuzzy subsemigroups")
    S, chain = family[0].host, family[0].chain

    components = tuple(
        LevelComponent(alpha, t, frozenset((a, t) for a in level_set(f, t)))
        for alpha, f in enumerate(family)
        for t in chain.positive_levels
    )
    # components[pair_index(chain, (alpha, t), False)] is the (alpha, t) component
    violations = []
    seen: Dict[Pair, Tuple[int, int]] = {}
    for comp in components:
        if not comp.carrier:
            violations.append(f"component ({comp.alpha}, {comp.t}) is empty")
        for p in comp.carrier:
            if p in seen:
                violations.append(f"{p} lies in components {seen[p]} and ({comp.alpha}, {comp.t})")
            seen[p] = (comp.alpha, comp.t)
    expected = {(a, t) for a in S.elements for t in chain.positive_levels}
    if set(seen) != expected:
        violations.append(f"components miss {sorted(expected - set(seen))[:3]}")

    for first in components:
        for second in components:
            t = min(first.t, second.t)
            target = components[pair_index(chain, (Y.table[first.alpha][second.alpha], t), False)]
            for a, _ in first.carrier:
                for b, _ in second.carrier:
                    if (S.table[a][b], t) not in target.carrier:
                        violations.append(f"({a},{first.t})({b},{second.t}) leaves component "
                                          f"({target.alpha}, {target.t})")

    decomposition = None
    if not violations:
        P = product_with_chain(S, chain, False)
        index = product_with_chain(Y, chain, False)
        blocks = [frozenset(pair_index(chain, p, False) for p in comp.carrier) for comp in components]
        decomposition = make_decomposition(P, index, blocks)
        if not check_decomposition(P, decomposition):
            violations.append("induced blocks do not form a semilattice decomposition of S × I*")
    return LevelDecomposition(components, decomposition, violations)
