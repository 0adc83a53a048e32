from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from enumeration import CatalogSpec, catalog, enumerate_semigroups
from fuzzy_core import (
    ChainMismatch, FamilyPreconditionError, NotAFuzzySubsemigroup, ValueChain, characteristic,
    characteristic_family, composite, constant, dominance_violation, enumerate_fuzzy_subsets, family_report,
    fuzzy_subset, includes, is_completely_simple_fuzzy_subsemigroup, is_fuzzy_left_ideal,
    is_fuzzy_quasi_ideal, is_fuzzy_right_ideal, is_fuzzy_semilattice_family, is_fuzzy_subsemigroup,
    is_left_simple_fuzzy_subsemigroup, is_two_valued, join, level_set, meet, parse_fuzzy_subset, support,
)
from semigroup_core import (
    BudgetExceeded, all_subsemigroups, is_left_ideal, is_quasi_ideal, is_right_ideal, semilattice_decomposition,
    subset_product, validate,
)

HOSTS = [catalog(CatalogSpec(name, (2,))) for name in
         ('left_zero', 'right_zero', 'null', 'cyclic_group', 'chain_semilattice')]


def levels(n, k):
    return st.lists(st.integers(min_value=0, max_value=k), min_size=n, max_size=n)


def test_chain_labels():
    chain = ValueChain(4)
    assert chain.label(2) == Fraction(1, 2)
    assert chain.level_of('3/4') == 3
    with pytest.raises(ValueError):
        chain.level_of('1/3')
    with pytest.raises(ValueError):
        ValueChain(0)


def test_fuzzy_text_round_trip(lz2):
    f = parse_fuzzy_subset(lz2, "2; 2 1")
    assert f.values == (2, 1) and f.chain.k == 2
    assert str(f) == "2; 2 1"
    with pytest.raises(ValueError):
        parse_fuzzy_subset(lz2, "2; 3 1")


def test_composite_on_unfactorable_element(null2, k1):
    one = constant(null2, k1, 1)
    assert composite(one, one).values == (1, 0)
    assert meet(one, one).values == (1, 1)


def test_meet_join_and_inclusion(lz2, k2):
    f, g = fuzzy_subset(lz2, k2, [2, 0]), fuzzy_subset(lz2, k2, [1, 1])
    assert meet(f, g).values == (1, 0)
    assert join(f, g).values == (2, 1)
    assert includes(meet(f, g), f) and not includes(f, g)


def test_mismatched_chains_are_rejected(lz2, k1, k2):
    with pytest.raises(ChainMismatch):
        meet(constant(lz2, k1, 1), constant(lz2, k2, 1))


def test_level_sets(lz2, k2):
    f = fuzzy_subset(lz2, k2, [2, 1])
    assert level_set(f, 1) == {0, 1}
    assert level_set(f, 2) == {0}
    assert support(fuzzy_subset(lz2, k2, [0, 1])) == {1}
    with pytest.raises(ValueError):
        level_set(f, 0)


def test_enumeration_counts(trivial, lz2, k1, k2):
    assert len(list(enumerate_fuzzy_subsets(trivial, k1, 'subsemigroup'))) == 2
    assert len(list(enumerate_fuzzy_subsets(lz2, k2))) == 9
    lefts = list(enumerate_fuzzy_subsets(lz2, k1, 'left_ideal'))
    assert [f.values for f in lefts] == [(0, 0), (1, 1)]
    assert len(list(enumerate_fuzzy_subsets(lz2, k1, 'right_ideal'))) == 4


def test_enumeration_budget(lz2, k2):
    with pytest.raises(BudgetExceeded):
        list(enumerate_fuzzy_subsets(lz2, k2, budget=8))
    with pytest.raises(ValueError):
        list(enumerate_fuzzy_subsets(lz2, k2, 'bi_ideal'))


def test_dominance_violation_on_group(z2, k1):
    assert dominance_violation(z2, [0, 1]) == 0
    assert dominance_violation(z2, [1, 1]) is None


def test_simple_fuzzy_subsemigroups(null2, lz2, rb22, k1, k2):
    with pytest.raises(NotAFuzzySubsemigroup):
        is_left_simple_fuzzy_subsemigroup(fuzzy_subset(null2, k1, [0, 1]))
    assert not is_left_simple_fuzzy_subsemigroup(constant(lz2, k2, 0))
    assert is_left_simple_fuzzy_subsemigroup(constant(lz2, k2, 2))
    assert is_left_simple_fuzzy_subsemigroup(fuzzy_subset(lz2, k2, [2, 1]))
    assert not is_left_simple_fuzzy_subsemigroup(constant(null2, k1, 1))
    assert is_completely_simple_fuzzy_subsemigroup(constant(rb22, k2, 2))


def test_family_report_on_chain(chain2, null2, k1, k2):
    family = [characteristic(chain2, {0}, k1), characteristic(chain2, {1}, k1)]
    assert is_fuzzy_semilattice_family(chain2, family)

    overlapping = [constant(chain2, k2, 2), characteristic(chain2, {1}, k2)]
    report = family_report(chain2, overlapping)
    assert not report.disjoint and not report.passed

    with pytest.raises(FamilyPreconditionError):
        family_report(null2, family)
    with pytest.raises(FamilyPreconditionError):
        family_report(chain2, family[:1])


def test_characteristic_family_lifts_decomposition(chain2, k3):
    d = semilattice_decomposition(chain2)
    family = characteristic_family(chain2, d, k3)
    assert is_fuzzy_semilattice_family(d.index, family)
    assert all(is_two_valued(f) for f in family)


@pytest.mark.parametrize('S', HOSTS)
def test_characteristic_composites_follow_subset_products(S):
    for k in (1, 2):
        chain = ValueChain(k)
        subs = all_subsemigroups(S)
        for B in subs:
            for C in subs:
                product_map = composite(characteristic(S, B, chain), characteristic(S, C, chain))
                assert product_map == characteristic(S, subset_product(S, B, C), chain)


def test_cuts_of_fuzzy_ideals_are_ideals():
    for S in enumerate_semigroups(3, 'iso'):
        chain = ValueChain(3)
        for name, crisp in (('left_ideal', is_left_ideal), ('right_ideal', is_right_ideal),
                            ('quasi_ideal', is_quasi_ideal)):
            for f in enumerate_fuzzy_subsets(S, chain, name):
                for t in chain.positive_levels:
                    cut = level_set(f, t)
                    if cut:
                        assert crisp(S, cut)
        for q in enumerate_fuzzy_subsets(S, chain, 'quasi_ideal'):
            assert dominance_violation(S, q.values) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(HOSTS), levels(2, 2), levels(2, 2), levels(2, 2))
def test_composite_is_associative(S, a, b, c):
    chain = ValueChain(2)
    f, g, h = (fuzzy_subset(S, chain, v) for v in (a, b, c))
    assert composite(composite(f, g), h) == composite(f, composite(g, h))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(HOSTS), levels(2, 3), levels(2, 3))
def test_meet_is_greatest_lower_bound(S, a, b):
    chain = ValueChain(3)
    f, g = fuzzy_subset(S, chain, a), fuzzy_subset(S, chain, b)
    m = meet(f, g)
    assert includes(m, f) and includes(m, g)
    for h in enumerate_fuzzy_subsets(S, chain):
        if includes(h, f) and includes(h, g):
            assert includes(h, m)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(HOSTS), levels(2, 3))
def test_ideal_kinds_are_subsemigroups(S, values):
    f = fuzzy_subset(S, ValueChain(3), values)
    if is_fuzzy_left_ideal(f) or is_fuzzy_right_ideal(f) or is_fuzzy_quasi_ideal(f):
        assert is_fuzzy_subsemigroup(f)
    if is_fuzzy_quasi_ideal(f):
        assert dominance_violation(S, f.values) is None


def test_quasi_ideal_of_three_element_semigroup():
    S = validate([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    chain = ValueChain(3)
    quasis = list(enumerate_fuzzy_subsets(S, chain, 'quasi_ideal'))
    assert constant(S, chain, 3) in quasis
    assert all(is_fuzzy_subsemigroup(q) for q in quasis)
