from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from enumeration import (
    CacheError, CacheVersionError, CatalogError, CatalogSpec, EnumerationCache, cache_load, cache_store, catalog,
    canonical_form, enumerate_semigroups, enumerate_semigroups_naive, load_or_enumerate, parse_catalog_spec,
    random_semigroups, relabel, semigroup_hash,
)
from semigroup_core import AssociativityError, BudgetExceeded, idempotents, validate


@pytest.mark.parametrize('n, dedup, expected', [
    (1, 'none', 1),
    (2, 'none', 8),
    (2, 'iso', 5),
    (2, 'iso_and_anti', 4),
    (3, 'none', 113),
    (3, 'iso', 24),
    (3, 'iso_and_anti', 18),
    (4, 'none', 3492),
    (4, 'iso', 188),
    (4, 'iso_and_anti', 126),
])
def test_enumeration_counts(n, dedup, expected):
    assert len(list(enumerate_semigroups(n, dedup))) == expected


def test_backtracking_matches_full_scan():
    for n in (1, 2, 3):
        assert list(enumerate_semigroups(n, 'none')) == list(enumerate_semigroups_naive(n))


def test_enumeration_rejects_orders_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_semigroups(5))
    with pytest.raises(ValueError):
        list(enumerate_semigroups(0))
    with pytest.raises(ValueError):
        list(enumerate_semigroups(2, 'fast'))


def test_deduplicated_tables_are_canonical():
    for S in enumerate_semigroups(3, 'iso'):
        assert canonical_form(S) == S


def test_catalog_examples():
    assert catalog(CatalogSpec('chain_semilattice', (2,))).table == ((0, 0), (0, 1))
    assert catalog(CatalogSpec('cyclic_group', (2,))).table == ((0, 1), (1, 0))
    rb = catalog(parse_catalog_spec('rectangular_band:2:2'))
    assert rb.order == 4 and idempotents(rb) == frozenset(range(4))
    assert catalog(parse_catalog_spec('null:5')).order == 5


@pytest.mark.parametrize('text', ['octonions:2', 'left_zero', 'rectangular_band:2', 'null:0', 'left_zero:x'])
def test_catalog_errors(text):
    with pytest.raises(CatalogError):
        catalog(parse_catalog_spec(text))


def test_canonical_form_examples(trivial, lz2, rz2):
    assert canonical_form(trivial).table == ((0,),)
    assert canonical_form(lz2) != canonical_form(rz2)
    assert canonical_form(lz2, include_anti=True) == canonical_form(rz2, include_anti=True)
    assert semigroup_hash(lz2) == semigroup_hash(relabel(lz2, [1, 0]))
    with pytest.raises(BudgetExceeded):
        canonical_form(validate([[0] * 7 for _ in range(7)]))


def test_canonical_form_is_permutation_invariant():
    for S in enumerate_semigroups(3, 'none'):
        canon = canonical_form(S)
        assert canonical_form(canon) == canon
        for perm in permutations(range(3)):
            assert canonical_form(relabel(S, perm)) == canon


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(4))))
def test_relabel_keeps_catalog_classes(perm):
    rb = catalog(CatalogSpec('rectangular_band', (2, 2)))
    assert canonical_form(relabel(rb, perm)) == canonical_form(rb)


def test_random_semigroups_are_seeded():
    first = random_semigroups(5, 3, seed=7)
    assert [S.table for S in first] == [S.table for S in random_semigroups(5, 3, seed=7)]
    for S in first:
        assert validate(S.table) == S


def test_cache_round_trip(tmp_path):
    tables = tuple(enumerate_semigroups(2, 'iso'))
    path = str(tmp_path / 'order2.txt')
    cache_store(path, EnumerationCache(2, 'iso', tables))
    loaded = cache_load(path)
    assert loaded.tables == tables
    assert loaded.metadata()['count'] == 5


def test_cache_rejects_bad_files(tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text("semigroups v1 n=2 dedup=none\n1 0 0 0\n")
    with pytest.raises(AssociativityError):
        cache_load(str(path))

    path.write_text("semigroups v0 n=2 dedup=none\n0 0 0 0\n")
    with pytest.raises(CacheVersionError):
        cache_load(str(path))

    path.write_text("semigroups v1 n=2 dedup=none\n0 0 0 0\n0 0 0 0\n")
    with pytest.raises(CacheError):
        cache_load(str(path))

    path.write_text("semigroups v1 n=2 dedup=none\n0 0 0\n")
    with pytest.raises(CacheError):
        cache_load(str(path))


def test_load_or_enumerate_writes_then_reads_cache(tmp_path):
    first = load_or_enumerate(2, 'iso_and_anti', str(tmp_path))
    assert len(first) == 4
    assert (tmp_path / 'semigroups_n2_iso_and_anti.txt').exists()
    assert load_or_enumerate(2, 'iso_and_anti', str(tmp_path)) == first
