import json

import pandas as pd
import pytest

from report import summary_frame
from suite_runner import parse_corpus, run_suite


def _strip_millis(payload):
    for item in payload['items']:
        item.pop('millis')
    payload['summary'].pop('millis')
    return payload


def test_corpus_parts(tmp_path):
    items = parse_corpus('catalog:left_zero:2, enumerate:2:iso', use_cache=False)
    assert [item.source for item in items][:2] == ['catalog:left_zero:2', 'enumerate:2:iso#0']
    assert len(items) == 6
    assert all(item.error is None for item in items)


@pytest.mark.parametrize('part, message', [
    ('enumerate:2:fast', 'dedup'),
    ('enumerate:9', ''),
    ('catalog:octonions:2', 'octonions'),
    ('random:3', 'random:n:count[:seed]'),
])
def test_bad_corpus_parts_become_error_items(part, message):
    [item] = parse_corpus(part, use_cache=False)
    assert item.source == part
    assert item.semigroup is None
    assert message in item.error


def test_all_theorems_on_order_two(tmp_path):
    out = tmp_path / 'report.json'
    report = run_suite('enumerate:2:iso', 2, None, str(out), max_workers=2, use_cache=False)
    assert report.summary()['failed'] == 0
    assert report.summary()['errors'] == 0
    assert report.exit_code() == 0

    payload = json.loads(out.read_text())
    assert payload['chain_k'] == 2
    assert payload['summary']['items'] == len(payload['items'])
    summary = pd.read_csv(tmp_path / 'report.csv')
    assert set(summary.columns) == {'theorem', 'items', 'passed', 'failed', 'errors'}
    assert summary['failed'].sum() == 0


def test_osreg_on_order_three():
    report = run_suite('enumerate:3:iso', 3, ['osreg'], use_cache=False)
    assert report.summary()['items'] == 24
    assert report.exit_code() == 0


def test_corrupted_file_is_recorded_and_suite_continues(tmp_path):
    bad = tmp_path / 'bad.txt'
    bad.write_text("2\n1 0\n0 0\n")
    report = run_suite(f'file:{bad},catalog:null:2', None, ['9_3', 'saito'], use_cache=False)
    statuses = sorted((item.theorem, item.status) for item in report.items)
    assert statuses == [('9_3', 'passed'), ('saito', 'passed'), ('validate', 'error')]
    assert report.exit_code() == 2
    assert 'Not associative' in next(item.error for item in report.items if item.theorem == 'validate')


def test_budget_errors_do_not_abort_the_suite():
    report = run_suite('catalog:rectangular_band:2:2,catalog:null:2', 2, ['collapse'], use_cache=False)
    assert sorted(item.status for item in report.items) == ['error', 'passed']
    assert report.exit_code() == 2


def test_reports_are_deterministic(tmp_path):
    first, second = tmp_path / 'a.json', tmp_path / 'b.json'
    corpus = 'catalog:chain_semilattice:2,catalog:left_zero:2,catalog:cyclic_group:2'
    run_suite(corpus, 1, ['saito', 'osreg'], str(first), max_workers=3, use_cache=False)
    run_suite(corpus, 1, ['saito', 'osreg'], str(second), max_workers=1, use_cache=False)
    assert _strip_millis(json.loads(first.read_text())) == _strip_millis(json.loads(second.read_text()))


def test_unknown_theorem_is_rejected():
    with pytest.raises(ValueError):
        run_suite('catalog:null:2', None, ['fermat'], use_cache=False)


def test_summary_frame_counts(tmp_path):
    report = run_suite('catalog:null:2', None, ['saito', 'lemma_comp'], use_cache=False)
    frame = summary_frame(report)
    assert list(frame['theorem']) == ['lemma_comp', 'saito']
    assert list(frame['passed']) == [1, 1]


def test_bad_catalog_part_does_not_abort_the_suite(tmp_path):
    out = tmp_path / 'report.json'
    report = run_suite('catalog:octonions:2,catalog:null:2', None, ['saito'], str(out), use_cache=False)
    statuses = sorted((item.theorem, item.status) for item in report.items)
    assert statuses == [('saito', 'passed'), ('validate', 'error')]
    assert report.exit_code() == 2
    assert json.loads(out.read_text())['summary']['errors'] == 1
