import pytest

from correspondence import (
    RegionError, check_l_conditions, check_left_inverse, check_q_conditions, check_r_conditions,
    check_s_conditions, condition_report, graph_region, level_components, level_cylinder, make_region,
    region_from_levels, region_to_fuzzy, verify_bijections,
)
from enumeration import enumerate_semigroups
from fuzzy_core import (
    FamilyPreconditionError, ValueChain, characteristic, constant, enumerate_fuzzy_subsets, fuzzy_subset,
)
from semigroup_core import BudgetExceeded, is_left_ideal, product_with_chain, validate


def test_graph_region_examples(lz2, trivial, k2):
    assert graph_region(constant(lz2, k2, 0)).pairs == {(0, 0), (1, 0)}
    assert graph_region(fuzzy_subset(lz2, k2, [2, 1])).pairs == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)}
    assert graph_region(fuzzy_subset(trivial, k2, [1])).sorted_pairs() == [(0, 0), (0, 1)]


def test_region_rejects_out_of_range_pairs(lz2, k1):
    with pytest.raises(RegionError):
        make_region(lz2, k1, [(0, 2)])
    with pytest.raises(RegionError):
        make_region(lz2, k1, [(2, 0)])


def test_partial_region_fails_conditions_but_inverts(lz2, k2):
    region = make_region(lz2, k2, [(0, 1)])
    assert not check_s_conditions(region)
    report = condition_report(region, 's')
    assert report['closed'] and not report['i'] and not report['iii']

    sigma = region_to_fuzzy(region)
    assert sigma.values == (1, 0)
    assert graph_region(sigma).pairs == {(0, 0), (0, 1), (1, 0)}
    assert region.pairs < graph_region(sigma).pairs


def test_whole_product_inverts_to_top(lz2, k2):
    region = make_region(lz2, k2, [(a, t) for a in range(2) for t in range(3)])
    assert region_to_fuzzy(region) == constant(lz2, k2, 2)
    assert check_q_conditions(region)


def test_non_subsemigroup_region_is_rejected(null2, k1):
    with pytest.raises(RegionError):
        region_to_fuzzy(make_region(null2, k1, [(1, 1)]))


def test_region_failing_only_dominance(z2, k1):
    region = region_from_levels(z2, k1, [0, 1])
    report = condition_report(region, 'q')
    assert not report['iv']
    assert not check_q_conditions(region)


def test_ideal_transfer_both_ways():
    for S in enumerate_semigroups(2, 'none'):
        chain = ValueChain(2)
        lefts = {g.values for g in enumerate_fuzzy_subsets(S, chain, 'left_ideal')}
        rights = {g.values for g in enumerate_fuzzy_subsets(S, chain, 'right_ideal')}
        quasis = {g.values for g in enumerate_fuzzy_subsets(S, chain, 'quasi_ideal')}
        for f in enumerate_fuzzy_subsets(S, chain):
            region = graph_region(f)
            assert check_l_conditions(region) == (f.values in lefts)
            assert check_r_conditions(region) == (f.values in rights)
            assert check_q_conditions(region) == (f.values in quasis)


def test_round_trips_on_order_three():
    for S in enumerate_semigroups(3, 'iso'):
        chain = ValueChain(3)
        for f in enumerate_fuzzy_subsets(S, chain, 'subsemigroup'):
            assert region_to_fuzzy(graph_region(f)) == f
            assert check_s_conditions(graph_region(f))


def test_bijections_on_examples(trivial, lz2, null2, k1, k2):
    results = verify_bijections(trivial, k1)
    assert results['subsemigroup'].fuzzy_count == 2
    assert all(r.holds for r in results.values())

    results = verify_bijections(lz2, k2)
    assert results['subsemigroup'].fuzzy_count == results['subsemigroup'].region_count
    assert all(r.holds for r in results.values())

    assert verify_bijections(null2, k2)['quasi_ideal'].holds


@pytest.mark.parametrize('n', [1, 2, 3])
def test_bijections_on_every_small_semigroup(n):
    for S in enumerate_semigroups(n, 'iso'):
        for k in sorted({1, S.order}):
            results = verify_bijections(S, ValueChain(k))
            assert set(results) == {'subsemigroup', 'left_ideal', 'right_ideal', 'quasi_ideal'}
            for family, result in results.items():
                assert result.holds, (S.table, k, family, result.witness)
                assert result.fuzzy_count == result.region_count


def test_bijections_respect_budget(lz2, k2):
    with pytest.raises(BudgetExceeded):
        verify_bijections(lz2, k2, budget=4)


def test_left_inverse_sweep(lz2, null2, k1):
    for S in (lz2, null2):
        report = check_left_inverse(S, k1)
        assert report.holds
        assert report.subsemigroups >= report.distinct_images
    with pytest.raises(BudgetExceeded):
        check_left_inverse(lz2, ValueChain(3), budget=16)


def test_level_cylinders_are_left_ideals(chain2, k2):
    P = product_with_chain(chain2, k2, False)
    cylinder = level_cylinder(chain2, k2, {0}, 2)
    assert cylinder.pairs == {(0, 1), (0, 2)}
    assert is_left_ideal(P, cylinder.indices(False))
    with pytest.raises(RegionError):
        level_cylinder(chain2, k2, {0}, 3)


def test_level_components_of_chain(chain2, k1, k2):
    family = [characteristic(chain2, {0}, k1), characteristic(chain2, {1}, k1)]
    lifted = level_components(chain2, family)
    assert lifted.holds
    assert [c.carrier for c in lifted.components] == [frozenset({(0, 1)}), frozenset({(1, 1)})]
    assert lifted.decomposition.is_semilattice_of_left_simple

    family = [characteristic(chain2, {0}, k2), characteristic(chain2, {1}, k2)]
    lifted = level_components(chain2, family)
    assert len(lifted.components) == 4 and lifted.holds


def test_level_components_of_constant_family(lz2, k2):
    Y = validate([[0]])
    lifted = level_components(Y, [constant(lz2, k2, 2)])
    assert [c.carrier for c in lifted.components] == [frozenset({(0, 1), (1, 1)}), frozenset({(0, 2), (1, 2)})]
    assert lifted.holds


def test_level_components_precondition(chain2, k1):
    with pytest.raises(FamilyPreconditionError):
        level_components(chain2, [constant(chain2, k1, 1), constant(chain2, k1, 1)])
