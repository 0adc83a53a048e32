"""
Semilattices of left simple and of completely simple semigroups, crisp and fuzzy.

The fuzzy conditions are decided by scanning the congruences with a
semilattice quotient and lifting each partition to characteristic maps;
families passing the fuzzy semilattice definition are two-valued, so this
scan covers every candidate.
"""
from itertools import product
from typing import Callable, List, Optional, Tuple

from correspondence import level_components, level_cylinder
from fuzzy_core import (
    FuzzySubset, ValueChain, characteristic_family, family_report, is_completely_simple_fuzzy_subsemigroup,
    is_left_simple_fuzzy_subsemigroup,
)
from report import TheoremVerdict, make_verdict, subset_witness
from semigroup_core import (
    Decomposition, FiniteSemigroup, all_left_ideals, decomposition_from_congruence, find_non_left_regular,
    find_not_completely_regular, is_completely_simple, is_completely_simple_by_primitive, is_ideal,
    is_left_ideal, product_with_chain, restrict, semilattice_congruences, semilattice_decomposition,
    subset_product,
)
from utils import logger

Family = List[FuzzySubset]


def _describe(d: Decomposition) -> dict:
    return {'blocks': subset_witness(*d.blocks), 'index': [list(row) for row in d.index.table]}


def _decomposition_search(S: FiniteSemigroup, accept: Callable[[Decomposition], bool],
                          bound: Optional[int] = None) -> Optional[Decomposition]:
    for c in semilattice_congruences(S, bound):
        d = decomposition_from_congruence(S, c)
        if accept(d):
            return d
    return None


def _fuzzy_family_search(S: FiniteSemigroup, chain: ValueChain, member: Callable[[FuzzySubset], bool],
                         bound: Optional[int] = None) -> Optional[Tuple[Decomposition, Family]]:
    for c in semilattice_congruences(S, bound):
        d = decomposition_from_congruence(S, c)
        family = characteristic_family(S, d, chain)
        if family_report(d.index, family).passed and all(member(f) for f in family):
            return d, family
    return None


def verify_saito(S: FiniteSemigroup, bound: Optional[int] = None) -> TheoremVerdict:
    d = semilattice_decomposition(S)
    lefts = all_left_ideals(S, bound)
    left_set = set(lefts)
    counterexamples = {}

    if not d.is_semilattice_of_left_simple:
        alpha = d.left_simple.index(False)
        counterexamples['1'] = {'block': subset_witness(d.blocks[alpha])[0], **_describe(d)}

    for L1, L2 in product(lefts, lefts):
        if L1 & L2 != subset_product(S, L1, L2):
            counterexamples['2'] = {'L1': subset_witness(L1)[0], 'L2': subset_witness(L2)[0]}
            break

    for L1, L2 in product(lefts, lefts):
        L12 = subset_product(S, L1, L2)
        if L12 not in left_set:
            counterexamples['3'] = {'clause': 'closed', 'L1': subset_witness(L1)[0], 'L2': subset_witness(L2)[0]}
        elif L1 == L2 and L12 != L1:
            counterexamples['3'] = {'clause': 'idempotent', 'L': subset_witness(L1)[0]}
        elif L12 != subset_product(S, L2, L1):
            counterexamples['3'] = {'clause': 'commutative', 'L1': subset_witness(L1)[0], 'L2': subset_witness(L2)[0]}
        if '3' in counterexamples:
            break

    a = find_non_left_regular(S)
    if a is not None:
        counterexamples['4'] = {'non_left_regular': a}
    else:
        L = next((L for L in lefts if not is_ideal(S, L)), None)
        if L is not None:
            counterexamples['4'] = {'one_sided_left_ideal': subset_witness(L)[0]}

    conditions = {name: name not in counterexamples for name in ('1', '2', '3', '4')}
    return make_verdict('saito', S, None, conditions, counterexamples=counterexamples)


def _level_checks(S: FiniteSemigroup, chain: ValueChain, d: Decomposition, bound: Optional[int]) -> dict:
    """Lift d to S × I* and check the induced decomposition and the level cylinders."""
    lifted = level_components(d.index, characteristic_family(S, d, chain))
    if lifted.violations:
        logger.error(f"level components of {S.table} at k={chain.k}: {lifted.violations}")
    P = product_with_chain(S, chain, False)
    cylinders = all(is_left_ideal(P, level_cylinder(S, chain, L, t).indices(False))
                    for L in all_left_ideals(S, bound) for t in chain.positive_levels)
    return {
        'level_components': lifted.holds,
        'components_left_simple': lifted.decomposition is not None and lifted.decomposition.is_semilattice_of_left_simple,
        'level_cylinders': cylinders,
    }


def verify_saito_fuzzy(S: FiniteSemigroup, chain: ValueChain, bound: Optional[int] = None) -> TheoremVerdict:
    d = semilattice_decomposition(S)
    found = _fuzzy_family_search(S, chain, is_left_simple_fuzzy_subsemigroup, bound)
    conditions = {'1': d.is_semilattice_of_left_simple, "1'": found is not None}
    counterexamples = {}
    if not conditions['1']:
        counterexamples['1'] = _describe(d)
    if found is None:
        counterexamples["1'"] = {'scanned': len(semilattice_congruences(S, bound))}

    side_checks = {}
    if conditions['1']:
        side_checks = _level_checks(S, chain, d, bound)
    return make_verdict('saito_fuzzy', S, chain, conditions, side_checks, counterexamples)


def verify_completely_regular_fuzzy(S: FiniteSemigroup, chain: ValueChain,
                                    bound: Optional[int] = None) -> TheoremVerdict:
    crisp = _decomposition_search(S, lambda d: d.is_semilattice_of_completely_simple, bound)
    fuzzy = _fuzzy_family_search(S, chain, is_completely_simple_fuzzy_subsemigroup, bound)
    conditions = {
        'completely_regular': find_not_completely_regular(S) is None,
        'semilattice_of_completely_simple': crisp is not None,
        'fuzzy_semilattice_of_completely_simple': fuzzy is not None,
    }
    counterexamples = {}
    if not conditions['completely_regular']:
        counterexamples['completely_regular'] = {'element': find_not_completely_regular(S)}
    if crisp is None:
        counterexamples['semilattice_of_completely_simple'] = _describe(semilattice_decomposition(S))

    pieces = [S] + [restrict(S, block)[0] for block in semilattice_decomposition(S).blocks]
    side_checks = {
        'primitive_agreement': all(is_completely_simple(T) == is_completely_simple_by_primitive(T) for T in pieces),
    }
    if fuzzy is not None:
        found, family = fuzzy
        lifted = level_components(found.index, family)
        if lifted.violations:
            logger.error(f"level components of {S.table} at k={chain.k}: {lifted.violations}")
        side_checks['level_components'] = lifted.holds
        side_checks['components_completely_simple'] = (lifted.decomposition is not None
                                                       and lifted.decomposition.is_semilattice_of_completely_simple)
    return make_verdict('completely_regular', S, chain, conditions, side_checks, counterexamples)
