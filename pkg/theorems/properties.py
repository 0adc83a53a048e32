"""
Property sweeps run as suite theorems. They carry no equivalence, only
side checks, so a verdict passes when every check holds.
"""
from itertools import product
from typing import List, Optional

import global_data
from correspondence import check_left_inverse, verify_bijections
from fuzzy_core import (
    FUZZY_FILTERS, FuzzySubset, ValueChain, characteristic, composite, dominance_violation,
    enumerate_fuzzy_subsets, family_report, includes, is_two_valued, level_set, meet,
)
from report import TheoremVerdict, make_verdict, subset_witness
from semigroup_core import (
    BudgetExceeded, FiniteSemigroup, is_left_ideal, is_quasi_ideal, is_right_ideal, is_subsemigroup,
    nonempty_subsets, product_with_chain, validate,
)
from utils import logger

# fuzzy filter -> crisp predicate on its cuts
CUT_PREDICATES = {
    'subsemigroup': is_subsemigroup,
    'left_ideal': is_left_ideal,
    'right_ideal': is_right_ideal,
    'quasi_ideal': is_quasi_ideal,
}

# the cubic law checks run over every fuzzy subset only up to this many
LAW_SAMPLE_LIMIT = 27


def verify_bijection_theorem(S: FiniteSemigroup, chain: ValueChain, budget: Optional[int] = None) -> TheoremVerdict:
    results = verify_bijections(S, chain, budget)
    side_checks = {family: r.holds for family, r in results.items()}
    counterexamples = {family: r.witness for family, r in results.items() if r.witness}
    counterexamples['counts'] = {family: [r.fuzzy_count, r.region_count] for family, r in results.items()}

    P = product_with_chain(S, chain, True)
    if 2 ** P.order <= global_data.left_inverse_budget:
        inverse = check_left_inverse(S, chain)
        side_checks['left_inverse'] = inverse.holds
        counterexamples['left_inverse'] = {
            'subsemigroups': inverse.subsemigroups,
            'distinct_images': inverse.distinct_images,
            **(inverse.witness or {}),
        }
    return make_verdict('bijections', S, chain, {}, side_checks, counterexamples)


def _law_sample(S: FiniteSemigroup, chain: ValueChain) -> List[FuzzySubset]:
    if (chain.k + 1) ** S.order <= LAW_SAMPLE_LIMIT:
        return list(enumerate_fuzzy_subsets(S, chain))
    return [characteristic(S, A, chain) for A in nonempty_subsets(S)]


def verify_fuzzy_laws(S: FiniteSemigroup, chain: ValueChain, budget: Optional[int] = None) -> TheoremVerdict:
    counterexamples = {}
    side_checks = {}

    sample = _law_sample(S, chain)
    bad = next(((f, g, h) for f, g, h in product(sample, repeat=3)
                if composite(composite(f, g), h) != composite(f, composite(g, h))), None)
    side_checks['composite_associative'] = bad is None
    if bad:
        counterexamples['composite_associative'] = [str(f) for f in bad]

    lattice_fail = None
    for f, g in product(sample, repeat=2):
        m = meet(f, g)
        if not (includes(m, f) and includes(m, g)):
            lattice_fail = [str(f), str(g)]
            break
        h = next((h for h in sample if includes(h, f) and includes(h, g) and not includes(h, m)), None)
        if h is not None:
            lattice_fail = [str(f), str(g), str(h)]
            break
    side_checks['lattice_laws'] = lattice_fail is None
    if lattice_fail:
        counterexamples['lattice_laws'] = lattice_fail

    quasis = list(enumerate_fuzzy_subsets(S, chain, 'quasi_ideal', budget))
    q = next((q for q in quasis if dominance_violation(S, q.values) is not None), None)
    side_checks['factorization_dominance'] = q is None
    if q is not None:
        counterexamples['factorization_dominance'] = {'q': str(q), 'element': dominance_violation(S, q.values)}

    for family, crisp in CUT_PREDICATES.items():
        members = quasis if family == 'quasi_ideal' else enumerate_fuzzy_subsets(S, chain, family, budget)
        bad = next(((f, t) for f in members for t in chain.positive_levels
                    if level_set(f, t) and not crisp(S, level_set(f, t))), None)
        side_checks[f'cut_transfer_{family}'] = bad is None
        if bad:
            counterexamples[f'cut_transfer_{family}'] = {'f': str(bad[0]), 't': bad[1]}

        A = next((A for A in nonempty_subsets(S)
                  if crisp(S, A) != FUZZY_FILTERS[family](characteristic(S, A, chain))), None)
        side_checks[f'characteristic_transfer_{family}'] = A is None
        if A is not None:
            counterexamples[f'characteristic_transfer_{family}'] = subset_witness(A)[0]

    return make_verdict('fuzzy_laws', S, chain, {}, side_checks, counterexamples)


# index semilattices of order <= 2 in both labellings
INDEX_SEMILATTICES = (
    ((0,),),
    ((0, 0), (0, 1)),
    ((0, 1), (1, 1)),
)


def verify_collapse(S: FiniteSemigroup, chain: ValueChain, budget: Optional[int] = None) -> TheoremVerdict:
    """Every fuzzy semilattice family over a small index is two-valued."""
    if S.order > global_data.collapse_max_host:
        raise BudgetExceeded(f"Collapse sweep refused: host order {S.order} exceeds {global_data.collapse_max_host}")
    members = list(enumerate_fuzzy_subsets(S, chain, 'subsemigroup', budget))
    families = 0
    bad = None
    for table in INDEX_SEMILATTICES:
        if len(table) > global_data.collapse_max_index:
            continue
        Y = validate(table)
        for family in product(members, repeat=Y.order):
            if not family_report(Y, family).passed:
                continue
            families += 1
            if not all(is_two_valued(f) for f in family):
                bad = {'index': [list(row) for row in table], 'family': [str(f) for f in family]}
                break
        if bad:
            break
    logger.debug(f"collapse: {families} families over {len(members)} fuzzy subsemigroups at k={chain.k}")
    counterexamples = {'families': families}
    if bad:
        counterexamples['not_two_valued'] = bad
    return make_verdict('collapse', S, chain, {}, {'two_valued': bad is None}, counterexamples)
