"""
Regularity through products of ideals, crisp and fuzzy.
"""
from itertools import product
from typing import Dict, List, Optional

import numpy as np

from fuzzy_core import (
    ValueChain, characteristic, composite, constant, enumerate_fuzzy_subsets, is_fuzzy_quasi_ideal, meet,
)
from report import TheoremVerdict, make_verdict, subset_witness
from semigroup_core import (
    FiniteSemigroup, all_left_ideals, all_quasi_ideals, all_right_ideals, all_subsemigroups,
    find_irregular, first_associativity_violation, is_quasi_ideal, is_regular, product_with_chain,
    subset_product, validate,
)
from utils import logger


def _first(pairs, test):
    for pair in pairs:
        if not test(*pair):
            return pair
    return None


def verify_9_3_crisp(S: FiniteSemigroup, bound: Optional[int] = None) -> TheoremVerdict:
    rights = all_right_ideals(S, bound)
    lefts = all_left_ideals(S, bound)
    quasis = all_quasi_ideals(S, bound)
    quasi_set = set(quasis)
    counterexamples: Dict[str, object] = {}

    def product_of(A, B):
        return subset_product(S, A, B)

    irregular = find_irregular(S)
    if irregular is not None:
        counterexamples['i'] = {'irregular_element': irregular}

    bad = _first(product(rights, lefts), lambda R, L: R & L == product_of(R, L))
    if bad:
        counterexamples['ii'] = {'R': subset_witness(bad[0])[0], 'L': subset_witness(bad[1])[0],
                                 'RL': subset_witness(product_of(*bad))[0]}

    iii_fail = None
    for R in rights:
        if product_of(R, R) != R:
            iii_fail = {'R': subset_witness(R)[0], 'clause': 'RR=R'}
            break
    if iii_fail is None:
        for L in lefts:
            if product_of(L, L) != L:
                iii_fail = {'L': subset_witness(L)[0], 'clause': 'LL=L'}
                break
    if iii_fail is None:
        bad = _first(product(rights, lefts), lambda R, L: is_quasi_ideal(S, product_of(R, L)))
        if bad:
            iii_fail = {'R': subset_witness(bad[0])[0], 'L': subset_witness(bad[1])[0], 'clause': 'RL quasi-ideal'}
    if iii_fail:
        counterexamples['iii'] = iii_fail

    iv_fail = None
    bad = _first(product(quasis, quasis), lambda Q, P: product_of(Q, P) in quasi_set)
    if bad:
        iv_fail = {'Q': subset_witness(bad[0])[0], 'P': subset_witness(bad[1])[0], 'clause': 'closed'}
    else:
        for Q in quasis:
            if not any(product_of(product_of(Q, P), Q) == Q for P in quasis):
                iv_fail = {'Q': subset_witness(Q)[0], 'clause': 'QPQ=Q'}
                break
    if iv_fail:
        counterexamples['iv'] = iv_fail

    for Q in quasis:
        if product_of(product_of(Q, S.universe), Q) != Q:
            counterexamples['v'] = {'Q': subset_witness(Q)[0]}
            break

    conditions = {name: name not in counterexamples for name in ('i', 'ii', 'iii', 'iv', 'v')}
    return make_verdict('9_3', S, None, conditions, counterexamples=counterexamples)


def _quasi_ideal_table(quasis) -> Optional[List[List[int]]]:
    """Index table of ∘ on the quasi-ideals, or None when it is not closed."""
    position = {q: i for i, q in enumerate(quasis)}
    rows = []
    for q in quasis:
        row = []
        for p in quasis:
            qp = composite(q, p)
            if qp not in position:
                return None
            row.append(position[qp])
        rows.append(row)
    return rows


def verify_osreg(S: FiniteSemigroup, chain: ValueChain, budget: Optional[int] = None) -> TheoremVerdict:
    rights = list(enumerate_fuzzy_subsets(S, chain, 'right_ideal', budget))
    lefts = list(enumerate_fuzzy_subsets(S, chain, 'left_ideal', budget))
    quasis = list(enumerate_fuzzy_subsets(S, chain, 'quasi_ideal', budget))
    logger.debug(f"osreg: {len(rights)} right, {len(lefts)} left, {len(quasis)} quasi fuzzy ideals at k={chain.k}")
    counterexamples: Dict[str, object] = {}

    irregular = find_irregular(S)
    if irregular is not None:
        counterexamples['i'] = {'irregular_element': irregular}

    for f, g in product(rights, lefts):
        fg, f_and_g = composite(f, g), meet(f, g)
        if fg != f_and_g:
            a = int(np.flatnonzero(fg.array != f_and_g.array)[0])
            counterexamples['ii'] = {'f': str(f), 'g': str(g), 'element': a,
                                     'composite': fg[a], 'meet': f_and_g[a]}
            break

    iii_fail = next(({'f': str(f), 'clause': 'f∘f=f'} for f in rights if composite(f, f) != f), None)
    if iii_fail is None:
        iii_fail = next(({'g': str(g), 'clause': 'g∘g=g'} for g in lefts if composite(g, g) != g), None)
    if iii_fail is None:
        iii_fail = next(({'f': str(f), 'g': str(g), 'clause': 'f∘g quasi-ideal'}
                         for f, g in product(rights, lefts) if not is_fuzzy_quasi_ideal(composite(f, g))), None)
    if iii_fail:
        counterexamples['iii'] = iii_fail

    side_checks = {'product_regularity': is_regular(product_with_chain(S, chain, True)) == is_regular(S)}
    table = _quasi_ideal_table(quasis)
    whole = constant(S, chain, chain.k)
    if table is None:
        counterexamples['iv'] = {'clause': 'closed under ∘'}
    else:
        triple = first_associativity_violation(np.array(table, dtype=np.int64))
        if triple is not None:
            counterexamples['iv'] = {'clause': 'associative', 'triple': [str(quasis[i]) for i in triple]}
        else:
            q = next((q for q in quasis if composite(composite(q, whole), q) != q), None)
            if q is not None:
                counterexamples['iv'] = {'clause': 'q∘S∘q=q', 'q': str(q)}
            else:
                side_checks['quasi_semigroup_regular'] = is_regular(validate(table))

    conditions = {name: name not in counterexamples for name in ('i', 'ii', 'iii', 'iv')}
    return make_verdict('osreg', S, chain, conditions, side_checks, counterexamples)


def verify_lemma_comp(S: FiniteSemigroup, bound: Optional[int] = None) -> TheoremVerdict:
    """χ_B ∘ χ_C = χ_BC for all subsemigroups B, C, at k=1 and k=|S|."""
    subs = all_subsemigroups(S, bound)
    side_checks, counterexamples = {}, {}
    for k in sorted({1, S.order}):
        chain = ValueChain(k)
        chars = {B: characteristic(S, B, chain) for B in subs}
        bad = _first(product(subs, subs),
                     lambda B, C: composite(chars[B], chars[C]) == characteristic(S, subset_product(S, B, C), chain))
        side_checks[f'k={k}'] = bad is None
        if bad:
            counterexamples[f'k={k}'] = {'B': subset_witness(bad[0])[0], 'C': subset_witness(bad[1])[0]}
    return make_verdict('lemma_comp', S, None, {}, side_checks, counterexamples)
